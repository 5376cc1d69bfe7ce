"""Quaternion and octonion arithmetic.

Octonions are built from quaternions by Cayley-Dickson doubling: an element
``a + b e4`` is stored as the 8 coefficients ``[a0..a3, b0..b3]`` over the
basis ``1, e1, ..., e7`` with ``e(4+i) = e_i e4``.  The product is

    (a + b e4)(c + d e4) = (ac + mu conj(d) b) + (da + b conj(c)) e4

with ``mu = -1`` for the compact (division) octonions and ``mu = +1`` for
the split octonions.  Both 8x8 basis tables are derived from this formula
once at import and every product goes through them.

Resulting compact table (row times column, ``-k`` means ``-e_k``)::

         e1   e2   e3   e4   e5   e6   e7
    e1   -1   e3  -e2   e5  -e4  -e7   e6
    e2  -e3   -1   e1   e6   e7  -e4  -e5
    e3   e2  -e1   -1   e7  -e6   e5  -e4
    e4  -e5  -e6  -e7   -1   e1   e2   e3
    e5   e4  -e7   e6  -e1   -1  -e3   e2
    e6   e7   e4  -e5  -e2   e3   -1  -e1
    e7  -e6   e5   e4  -e3  -e2   e1   -1

The split table differs by the sign of every product of two elements from
``{e4, ..., e7}``.
"""

from __future__ import annotations

import numbers

import numpy as np

from .errors import MismatchedAlgebra, NullElement

COMPACT = -1
SPLIT = 1

ALGEBRA_NAMES = {COMPACT: "compact", SPLIT: "split"}
ALGEBRA_FLAGS = {name: mu for mu, name in ALGEBRA_NAMES.items()}

ZERO_TOL = 1e-10


def _check_mu(mu):
    if mu not in (COMPACT, SPLIT):
        raise ValueError(f"split sign must be -1 or +1, got {mu!r}")
    return int(mu)


# -- raw array kernels ------------------------------------------------------

def _quat_formula(p, q):
    pw, px, py, pz = np.moveaxis(p, -1, 0)
    qw, qx, qy, qz = np.moveaxis(q, -1, 0)
    return np.stack([
        pw * qw - px * qx - py * qy - pz * qz,
        pw * qx + px * qw + py * qz - pz * qy,
        pw * qy - px * qz + py * qw + pz * qx,
        pw * qz + px * qy - py * qx + pz * qw,
    ], axis=-1)


def quat_conj_array(q):
    q = np.asarray(q, dtype=float)
    return q * np.array([1.0, -1.0, -1.0, -1.0])


def _cayley_dickson(x, y, mu):
    a, b = x[..., :4], x[..., 4:]
    c, d = y[..., :4], y[..., 4:]
    first = _quat_formula(a, c) + mu * _quat_formula(quat_conj_array(d), b)
    second = _quat_formula(d, a) + _quat_formula(b, quat_conj_array(c))
    return np.concatenate([first, second], axis=-1)


def _structure_tensor(mul, dim):
    eye = np.eye(dim)
    return mul(eye[:, None, :], eye[None, :, :])


_QUAT_TABLE = _structure_tensor(_quat_formula, 4).reshape(16, 4)
OCT_TABLES = {
    mu: _structure_tensor(lambda x, y, mu=mu: _cayley_dickson(x, y, mu), 8)
    for mu in (COMPACT, SPLIT)
}
_OCT_TABLES_FLAT = {mu: t.reshape(64, 8) for mu, t in OCT_TABLES.items()}

_CONJ8 = np.array([1.0] + [-1.0] * 7)


def quat_mul_array(p, q):
    """Quaternion product of coefficient arrays of shape ``(..., 4)``, broadcasting."""
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    outer = p[..., :, None] * q[..., None, :]
    return outer.reshape(outer.shape[:-2] + (16,)) @ _QUAT_TABLE


def oct_mul_array(x, y, mu=COMPACT):
    """Octonion product of coefficient arrays of shape ``(..., 8)``, broadcasting."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    outer = x[..., :, None] * y[..., None, :]
    return outer.reshape(outer.shape[:-2] + (64,)) @ _OCT_TABLES_FLAT[mu]


def oct_conj_array(x):
    return np.asarray(x, dtype=float) * _CONJ8


def metric(mu):
    """Diagonal of the bilinear form ``Re(x conj(y))`` in the coefficient basis."""
    return np.array([1.0] * 4 + [-float(mu)] * 4)


def oct_dot_array(x, y, mu=COMPACT):
    """``Re(x conj(y))`` for coefficient arrays."""
    return np.sum(np.asarray(x) * np.asarray(y) * metric(mu), axis=-1)


# -- value types ------------------------------------------------------------

class Quaternion:
    """Immutable quaternion ``w + x e1 + y e2 + z e3``."""

    __slots__ = ("_c",)

    def __init__(self, w=0.0, x=0.0, y=0.0, z=0.0):
        c = np.array([w, x, y, z], dtype=float)
        c.flags.writeable = False
        self._c = c

    @classmethod
    def from_array(cls, coeffs):
        coeffs = np.asarray(coeffs, dtype=float)
        if coeffs.shape != (4,):
            raise ValueError(f"quaternion needs 4 coefficients, got shape {coeffs.shape}")
        return cls(*coeffs)

    @classmethod
    def basis(cls, i):
        c = np.zeros(4)
        c[i] = 1.0
        return cls(*c)

    coeffs = property(lambda self: self._c)
    w = property(lambda self: float(self._c[0]))
    x = property(lambda self: float(self._c[1]))
    y = property(lambda self: float(self._c[2]))
    z = property(lambda self: float(self._c[3]))

    def __add__(self, other):
        return Quaternion.from_array(self._c + other._c)

    def __sub__(self, other):
        return Quaternion.from_array(self._c - other._c)

    def __neg__(self):
        return Quaternion.from_array(-self._c)

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            return Quaternion.from_array(quat_mul_array(self._c, other._c))
        if isinstance(other, numbers.Real):
            return Quaternion.from_array(self._c * other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, numbers.Real):
            return Quaternion.from_array(self._c * other)
        return NotImplemented

    def conj(self):
        return Quaternion.from_array(quat_conj_array(self._c))

    def norm2(self):
        return float(self._c @ self._c)

    def __abs__(self):
        return float(np.sqrt(self.norm2()))

    def allclose(self, other, atol=1e-12):
        return bool(np.allclose(self._c, np.asarray(getattr(other, "coeffs", other)), rtol=0, atol=atol))

    def __repr__(self):
        return "Quaternion({:g}, {:g}, {:g}, {:g})".format(*self._c)


class Octonion:
    """Immutable octonion over the compact (``mu=-1``) or split (``mu=+1``) algebra."""

    __slots__ = ("_c", "_mu")

    def __init__(self, coeffs=None, mu=COMPACT):
        c = np.zeros(8) if coeffs is None else np.array(coeffs, dtype=float)
        if c.shape != (8,):
            raise ValueError(f"octonion needs 8 coefficients, got shape {c.shape}")
        c.flags.writeable = False
        self._c = c
        self._mu = _check_mu(mu)

    @classmethod
    def basis(cls, i, mu=COMPACT):
        c = np.zeros(8)
        c[i] = 1.0
        return cls(c, mu)

    @classmethod
    def real(cls, value, mu=COMPACT):
        c = np.zeros(8)
        c[0] = value
        return cls(c, mu)

    @classmethod
    def from_pair(cls, a, b, mu=COMPACT):
        """Build ``a + b e4`` from two quaternions."""
        return cls(np.concatenate([a.coeffs, b.coeffs]), mu)

    coeffs = property(lambda self: self._c)
    mu = property(lambda self: self._mu)

    @property
    def algebra(self):
        return ALGEBRA_NAMES[self._mu]

    def _same(self, other):
        if other._mu != self._mu:
            raise MismatchedAlgebra(f"cannot combine {self.algebra} and {other.algebra} octonions")

    def __add__(self, other):
        if not isinstance(other, Octonion):
            return NotImplemented
        self._same(other)
        return Octonion(self._c + other._c, self._mu)

    def __sub__(self, other):
        if not isinstance(other, Octonion):
            return NotImplemented
        self._same(other)
        return Octonion(self._c - other._c, self._mu)

    def __neg__(self):
        return Octonion(-self._c, self._mu)

    def __mul__(self, other):
        if isinstance(other, Octonion):
            self._same(other)
            return Octonion(oct_mul_array(self._c, other._c, self._mu), self._mu)
        if isinstance(other, numbers.Real):
            return Octonion(self._c * other, self._mu)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, numbers.Real):
            return Octonion(self._c * other, self._mu)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, numbers.Real):
            return Octonion(self._c / other, self._mu)
        return NotImplemented

    def conj(self):
        return Octonion(oct_conj_array(self._c), self._mu)

    @property
    def re(self):
        return float(self._c[0])

    @property
    def im(self):
        c = self._c.copy()
        c[0] = 0.0
        return Octonion(c, self._mu)

    def norm2(self):
        """The quadratic form ``Re(x conj(x))``; indefinite for split octonions."""
        return float(oct_dot_array(self._c, self._c, self._mu))

    def euclidean_norm(self):
        """Coefficient 2-norm; equals ``sqrt(norm2)`` for compact octonions."""
        return float(np.sqrt(self._c @ self._c))

    def __abs__(self):
        return self.euclidean_norm()

    def inverse(self, tol=ZERO_TOL):
        n = self.norm2()
        if abs(n) < tol:
            raise NullElement(f"octonion with norm2={n:.3g} has no inverse")
        return Octonion(oct_conj_array(self._c) / n, self._mu)

    def quaternion_parts(self):
        """Return ``(a, b)`` with ``self = a + b e4``."""
        return Quaternion.from_array(self._c[:4]), Quaternion.from_array(self._c[4:])

    def allclose(self, other, atol=1e-12):
        return bool(np.allclose(self._c, other._c, rtol=0, atol=atol)) and self._mu == other._mu

    def to_json(self):
        return {"coeffs": [float(v) for v in self._c], "algebra": self.algebra}

    @classmethod
    def from_json(cls, data):
        return cls(data["coeffs"], ALGEBRA_FLAGS[data["algebra"]])

    def __repr__(self):
        terms = ", ".join(f"{v:g}" for v in self._c)
        return f"Octonion([{terms}], {self.algebra})"


# -- functional interface ---------------------------------------------------

def quat_mul(p, q):
    return p * q


def oct_mul(x, y):
    if not (isinstance(x, Octonion) and isinstance(y, Octonion)):
        raise TypeError("oct_mul expects two Octonion values")
    return x * y


def oct_conj(x):
    return x.conj()


def oct_re(x):
    return x.re


def oct_im(x):
    return x.im


def oct_norm2(x):
    return x.norm2()


def oct_inverse(x, tol=ZERO_TOL):
    return x.inverse(tol)
