"""Hermitian 3x3 octonion matrices: the exceptional Jordan algebra J(3, O).

An element is stored as its six independent entries::

    | xi1        x3        conj(x2) |
    | conj(x3)   xi2       x1       |
    | x2         conj(x1)  xi3      |

``diag`` holds ``(xi1, xi2, xi3)`` and ``off`` is a ``(3, 8)`` array with
rows ``x1, x2, x3``.  Full matrix expansion only happens inside the Jordan
product and the O(3) action.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import (
    ALGEBRA_FLAGS,
    ALGEBRA_NAMES,
    COMPACT,
    Octonion,
    _check_mu,
    metric,
    oct_conj_array,
    oct_mul_array,
    quat_conj_array,
    quat_mul_array,
)
from .errors import HermiticityViolation, MismatchedAlgebra, SplitUnsupported

HERMITIAN_TOL = 1e-11

# (row, col) of x1, x2, x3 in the expanded matrix
_ROWS = np.array([1, 2, 0])
_COLS = np.array([2, 0, 1])
_DIAG = np.arange(3)


def _readonly(arr, shape):
    arr = np.array(arr, dtype=float)
    if arr.shape != shape:
        raise ValueError(f"expected shape {shape}, got {arr.shape}")
    arr.flags.writeable = False
    return arr


def _coeffs(x):
    return x.coeffs if isinstance(x, Octonion) else x


@dataclass(frozen=True, eq=False)
class JordanElement:
    diag: np.ndarray
    off: np.ndarray
    mu: int = COMPACT

    def __post_init__(self):
        object.__setattr__(self, "diag", _readonly(self.diag, (3,)))
        object.__setattr__(self, "off", _readonly(self.off, (3, 8)))
        object.__setattr__(self, "mu", _check_mu(self.mu))

    @classmethod
    def from_entries(cls, diag=(0.0, 0.0, 0.0), x1=None, x2=None, x3=None, mu=COMPACT):
        off = np.zeros((3, 8))
        for row, x in enumerate((x1, x2, x3)):
            if x is None:
                continue
            if isinstance(x, Octonion) and x.mu != mu:
                raise MismatchedAlgebra("entry algebra does not match element algebra")
            off[row] = _coeffs(x)
        return cls(diag, off, mu)

    @classmethod
    def diagonal(cls, values, mu=COMPACT):
        return cls(values, np.zeros((3, 8)), mu)

    @classmethod
    def zero(cls, mu=COMPACT):
        return cls(np.zeros(3), np.zeros((3, 8)), mu)

    xi1 = property(lambda self: float(self.diag[0]))
    xi2 = property(lambda self: float(self.diag[1]))
    xi3 = property(lambda self: float(self.diag[2]))
    x1 = property(lambda self: Octonion(self.off[0], self.mu))
    x2 = property(lambda self: Octonion(self.off[1], self.mu))
    x3 = property(lambda self: Octonion(self.off[2], self.mu))

    @property
    def algebra(self):
        return ALGEBRA_NAMES[self.mu]

    def matrix(self):
        """Expand to the full ``(3, 3, 8)`` Hermitian octonion matrix."""
        m = np.zeros((3, 3, 8))
        m[_DIAG, _DIAG, 0] = self.diag
        m[_ROWS, _COLS] = self.off
        m[_COLS, _ROWS] = oct_conj_array(self.off)
        return m

    @classmethod
    def from_matrix(cls, m, mu=COMPACT, tol=HERMITIAN_TOL):
        """Repack a full matrix, checking Hermiticity to ``tol``."""
        m = np.asarray(m, dtype=float)
        upper, lower = m[_ROWS, _COLS], oct_conj_array(m[_COLS, _ROWS])
        dev = max(np.max(np.abs(m[_DIAG, _DIAG, 1:])), np.max(np.abs(upper - lower)))
        if dev > tol:
            raise HermiticityViolation(f"matrix deviates from Hermitian by {dev:.3g}")
        return cls(m[_DIAG, _DIAG, 0], 0.5 * (upper + lower), mu)

    def frobenius(self):
        """Euclidean size of the element, ``sqrt(sum xi^2 + 2 sum |x_i|^2)``."""
        return float(np.sqrt(self.diag @ self.diag + 2.0 * np.sum(self.off * self.off)))

    def max_offdiag(self):
        return float(np.max(np.sqrt(np.sum(self.off * self.off, axis=1))))

    def _same(self, other):
        if other.mu != self.mu:
            raise MismatchedAlgebra(f"cannot combine {self.algebra} and {other.algebra} elements")

    def __add__(self, other):
        self._same(other)
        return JordanElement(self.diag + other.diag, self.off + other.off, self.mu)

    def __sub__(self, other):
        self._same(other)
        return JordanElement(self.diag - other.diag, self.off - other.off, self.mu)

    def __neg__(self):
        return JordanElement(-self.diag, -self.off, self.mu)

    def __mul__(self, scalar):
        return JordanElement(self.diag * scalar, self.off * scalar, self.mu)

    __rmul__ = __mul__

    def max_abs_diff(self, other):
        self._same(other)
        return float(max(np.max(np.abs(self.diag - other.diag)), np.max(np.abs(self.off - other.off))))

    def allclose(self, other, atol=1e-12):
        return self.mu == other.mu and self.max_abs_diff(other) <= atol

    def to_json(self):
        return {
            "algebra": self.algebra,
            "diag": [float(v) for v in self.diag],
            "x1": [float(v) for v in self.off[0]],
            "x2": [float(v) for v in self.off[1]],
            "x3": [float(v) for v in self.off[2]],
        }

    @classmethod
    def from_json(cls, data):
        return cls(data["diag"], [data["x1"], data["x2"], data["x3"]], ALGEBRA_FLAGS[data["algebra"]])

    def __repr__(self):
        return f"JordanElement(diag={self.diag.tolist()}, off={self.off.tolist()}, {self.algebra})"


def unit_E(mu=COMPACT):
    return JordanElement.diagonal((1.0, 1.0, 1.0), mu)


def random_element(rng, mu=COMPACT, low=-1.0, high=1.0):
    """Draw all 27 coefficients i.i.d. uniform; order is diag, x1, x2, x3."""
    v = rng.uniform(low, high, 27)
    return JordanElement(v[:3], v[3:].reshape(3, 8), mu)


def _oct_matmul(a, b, mu):
    prod = oct_mul_array(a[:, :, None, :], b[None, :, :, :], mu)
    return prod.sum(axis=1)


def _check_pair(X, Y):
    if X.mu != Y.mu:
        raise MismatchedAlgebra("Jordan elements from different algebras")


def jordan_product(X, Y):
    """``X o Y = (XY + YX) / 2`` computed on the expanded matrices."""
    _check_pair(X, Y)
    mx, my = X.matrix(), Y.matrix()
    sym = 0.5 * (_oct_matmul(mx, my, X.mu) + _oct_matmul(my, mx, X.mu))
    scale = max(1.0, X.frobenius() * Y.frobenius())
    return JordanElement.from_matrix(sym, X.mu, tol=HERMITIAN_TOL * scale)


def trace(X):
    return float(np.sum(X.diag))


def inner_product(X, Y):
    """``(X, Y) = tr(X o Y)`` in closed form: ``sum xi eta + 2 sum Re(x_i conj(y_i))``."""
    _check_pair(X, Y)
    return float(X.diag @ Y.diag + 2.0 * np.sum(X.off * Y.off * metric(X.mu)))


def inner_product_via_trace(X, Y):
    return trace(jordan_product(X, Y))


def freudenthal_cross(X, Y):
    _check_pair(X, Y)
    tx, ty = trace(X), trace(Y)
    res = 2.0 * jordan_product(X, Y) - tx * Y - ty * X
    res = res + (tx * ty - inner_product(X, Y)) * unit_E(X.mu)
    return 0.5 * res


def sigma(X):
    """Quadratic invariant ``tr(X x X)``; the second elementary symmetric function of the eigenvalues."""
    return trace(freudenthal_cross(X, X))


def det(X):
    """Cubic invariant ``(X x X, X) / 3``."""
    return inner_product(freudenthal_cross(X, X), X) / 3.0


def invariants(X):
    return {
        "trace": trace(X),
        "inner_square": inner_product(X, X),
        "sigma": sigma(X),
        "det": det(X),
    }


# -- the J(3, H) + H^3 model ------------------------------------------------

def _quat_matmul(a, b):
    return quat_mul_array(a[:, :, None, :], b[None, :, :, :]).sum(axis=1)


def _quat_adjoint(a):
    return quat_conj_array(np.swapaxes(a, 0, 1))


@dataclass(frozen=True, eq=False)
class PairElement:
    """``M + a`` with ``M`` quaternion-Hermitian and ``a`` a row of three quaternions.

    ``m`` rows are ``m1, m2, m3`` laid out like ``x1, x2, x3``.
    """

    diag: np.ndarray
    m: np.ndarray
    a: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "diag", _readonly(self.diag, (3,)))
        object.__setattr__(self, "m", _readonly(self.m, (3, 4)))
        object.__setattr__(self, "a", _readonly(self.a, (3, 4)))

    def matrix(self):
        out = np.zeros((3, 3, 4))
        out[_DIAG, _DIAG, 0] = self.diag
        out[_ROWS, _COLS] = self.m
        out[_COLS, _ROWS] = quat_conj_array(self.m)
        return out

    @classmethod
    def from_matrix(cls, mat, a, tol=HERMITIAN_TOL):
        mat = np.asarray(mat, dtype=float)
        upper, lower = mat[_ROWS, _COLS], quat_conj_array(mat[_COLS, _ROWS])
        dev = max(np.max(np.abs(mat[_DIAG, _DIAG, 1:])), np.max(np.abs(upper - lower)))
        if dev > tol:
            raise HermiticityViolation(f"quaternion matrix deviates from Hermitian by {dev:.3g}")
        return cls(mat[_DIAG, _DIAG, 0], 0.5 * (upper + lower), a)

    def frobenius(self):
        return float(np.sqrt(self.diag @ self.diag + 2.0 * np.sum(self.m ** 2) + 2.0 * np.sum(self.a ** 2)))

    def max_abs_diff(self, other):
        return float(max(
            np.max(np.abs(self.diag - other.diag)),
            np.max(np.abs(self.m - other.m)),
            np.max(np.abs(self.a - other.a)),
        ))


def to_pair(X):
    """Split each ``x_i = m_i + a_i e4`` into its quaternion halves."""
    if X.mu != COMPACT:
        raise SplitUnsupported("the J(3,H) + H^3 model is defined for compact elements only")
    return PairElement(X.diag, X.off[:, :4], X.off[:, 4:])


def from_pair(P):
    return JordanElement(P.diag, np.concatenate([P.m, P.a], axis=1), COMPACT)


def _quat_trace(mat):
    return float(np.sum(mat[[0, 1, 2], [0, 1, 2], 0]))


def _quat_cross(M, N):
    """Freudenthal product on quaternion-Hermitian matrices, full ``(3, 3, 4)`` form."""
    jordan = 0.5 * (_quat_matmul(M, N) + _quat_matmul(N, M))
    tm, tn = _quat_trace(M), _quat_trace(N)
    inner = _quat_trace(jordan)
    eye = np.zeros((3, 3, 4))
    eye[[0, 1, 2], [0, 1, 2], 0] = 1.0
    return 0.5 * (2.0 * jordan - tm * N - tn * M + (tm * tn - inner) * eye)


def _row_times_matrix(a, mat):
    return quat_mul_array(a[:, None, :], mat).sum(axis=0)


def _outer_adjoint(a, b):
    """``a* b``: column ``conj(a)`` times row ``b``."""
    return quat_mul_array(quat_conj_array(a)[:, None, :], b[None, :, :])


def pair_cross(P, Q):
    """``(M + a) x (N + b) = (M x N - (a*b + b*a)/2) - (aN + bM)/2``."""
    mp, mq = P.matrix(), Q.matrix()
    mat = _quat_cross(mp, mq) - 0.5 * (_outer_adjoint(P.a, Q.a) + _outer_adjoint(Q.a, P.a))
    row = -0.5 * (_row_times_matrix(P.a, mq) + _row_times_matrix(Q.a, mp))
    scale = max(1.0, P.frobenius() * Q.frobenius())
    return PairElement.from_matrix(mat, row, tol=HERMITIAN_TOL * scale)
