"""Explicit elements of F4 acting on J(3, O).

Four families are provided, each validated at construction:

``DeltaA``   conjugation by ``diag(a, conj(a), 1)`` for a unit octonion ``a``
``RotO3``    conjugation ``T X T^t`` by a real orthogonal ``T``
``SpThree``  ``M + a -> A M A* + a A*`` for a quaternionic unitary ``A``
``GTwoAuto`` an octonion automorphism applied to every off-diagonal entry
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import ClassVar, Union

import numpy as np

from .algebra import (
    ALGEBRA_FLAGS,
    COMPACT,
    OCT_TABLES,
    Octonion,
    oct_conj_array,
    oct_mul_array,
    quat_conj_array,
    quat_mul_array,
)
from .errors import InvalidGenerator, NotImaginary, NotUnit, SplitUnsupported
from .jordan import (
    JordanElement,
    PairElement,
    _quat_adjoint,
    _quat_matmul,
    _row_times_matrix,
    freudenthal_cross,
    from_pair,
    inner_product,
    jordan_product,
    random_element,
    to_pair,
    unit_E,
)

GENERATOR_TOL = 1e-10


def _frozen(arr, shape):
    arr = np.array(arr, dtype=float)
    if arr.shape != shape:
        raise InvalidGenerator(f"expected shape {shape}, got {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise InvalidGenerator("generator data must be finite")
    arr.flags.writeable = False
    return arr


def _require_compact(X, what):
    if X.mu != COMPACT:
        raise SplitUnsupported(f"{what} acts on compact elements only")


@dataclass(frozen=True, eq=False)
class DeltaA:
    a: Octonion
    tol: float = field(default=GENERATOR_TOL, repr=False)
    kind: ClassVar[str] = "delta_a"

    def __post_init__(self):
        n = self.a.norm2()
        if abs(n - 1.0) > self.tol:
            raise NotUnit(f"delta_a needs a unit octonion, got norm2={n!r}")

    @classmethod
    def identity(cls, mu=COMPACT):
        return cls(Octonion.real(1.0, mu))

    def apply(self, X):
        if X.mu != self.a.mu:
            raise InvalidGenerator("delta_a and element belong to different algebras")
        a = self.a.coeffs
        abar = oct_conj_array(a)
        mu = X.mu
        x1, x2, x3 = X.off
        off = np.stack([
            oct_mul_array(abar, x1, mu),
            oct_mul_array(x2, abar, mu),
            oct_mul_array(oct_mul_array(a, x3, mu), a, mu),
        ])
        return JordanElement(X.diag, off, mu)

    def to_json(self):
        return {"kind": self.kind, "algebra": self.a.algebra, "a": [float(v) for v in self.a.coeffs]}


@dataclass(frozen=True, eq=False)
class RotO3:
    T: np.ndarray
    tol: float = field(default=GENERATOR_TOL, repr=False)
    kind: ClassVar[str] = "rot_o3"

    def __post_init__(self):
        T = _frozen(self.T, (3, 3))
        dev = np.max(np.abs(T.T @ T - np.eye(3)))
        if dev > self.tol:
            raise InvalidGenerator(f"T is not orthogonal (deviation {dev:.3g})")
        object.__setattr__(self, "T", T)

    @classmethod
    def identity(cls):
        return cls(np.eye(3))

    def apply(self, X):
        m = np.einsum("ij,jkc,lk->ilc", self.T, X.matrix(), self.T)
        return JordanElement.from_matrix(m, X.mu, tol=1e-11 * max(1.0, X.frobenius()))

    def to_json(self):
        return {"kind": self.kind, "T": [float(v) for v in self.T.ravel()]}


@dataclass(frozen=True, eq=False)
class SpThree:
    """``A`` is a ``(3, 3, 4)`` array of quaternion coefficients."""

    A: np.ndarray
    tol: float = field(default=GENERATOR_TOL, repr=False)
    kind: ClassVar[str] = "sp3"

    def __post_init__(self):
        A = _frozen(self.A, (3, 3, 4))
        gram = _quat_matmul(_quat_adjoint(A), A)
        eye = np.zeros((3, 3, 4))
        eye[[0, 1, 2], [0, 1, 2], 0] = 1.0
        dev = np.max(np.abs(gram - eye))
        if dev > self.tol:
            raise InvalidGenerator(f"A is not quaternionic unitary (deviation {dev:.3g})")
        object.__setattr__(self, "A", A)

    @classmethod
    def identity(cls):
        A = np.zeros((3, 3, 4))
        A[[0, 1, 2], [0, 1, 2], 0] = 1.0
        return cls(A)

    def apply(self, X):
        _require_compact(X, "Sp(3)")
        P = to_pair(X)
        adj = _quat_adjoint(self.A)
        mat = _quat_matmul(_quat_matmul(self.A, P.matrix()), adj)
        row = _row_times_matrix(P.a, adj)
        return from_pair(PairElement.from_matrix(mat, row, tol=1e-11 * max(1.0, X.frobenius())))

    def to_json(self):
        return {"kind": self.kind, "A": [float(v) for v in self.A.ravel()]}


def automorphism_defect(L):
    """Largest deviation of ``alpha(e_i e_j)`` from ``alpha(e_i) alpha(e_j)`` over imaginary basis pairs."""
    full = np.eye(8)
    full[1:, 1:] = L
    images = full.T  # row i is alpha(e_i)
    table = OCT_TABLES[COMPACT][1:, 1:]
    lhs = table @ full.T
    rhs = oct_mul_array(images[1:, None, :], images[None, 1:, :], COMPACT)
    return float(np.max(np.abs(lhs - rhs)))


@dataclass(frozen=True, eq=False)
class GTwoAuto:
    """``L`` acts on the imaginary coefficients ``c1..c7``; reals are fixed."""

    L: np.ndarray
    tol: float = field(default=GENERATOR_TOL, repr=False)
    kind: ClassVar[str] = "g2"

    def __post_init__(self):
        L = _frozen(self.L, (7, 7))
        dev = np.max(np.abs(L.T @ L - np.eye(7)))
        if dev > self.tol:
            raise InvalidGenerator(f"L is not orthogonal (deviation {dev:.3g})")
        defect = automorphism_defect(L)
        if defect > self.tol:
            raise InvalidGenerator(f"L is not an octonion automorphism (defect {defect:.3g})")
        object.__setattr__(self, "L", L)

    @classmethod
    def identity(cls):
        return cls(np.eye(7))

    def map_octonion(self, x):
        c = x.coeffs.copy()
        c[1:] = self.L @ c[1:]
        return Octonion(c, x.mu)

    def apply(self, X):
        _require_compact(X, "G2")
        off = X.off.copy()
        off[:, 1:] = off[:, 1:] @ self.L.T
        return JordanElement(X.diag, off, X.mu)

    def to_json(self):
        return {"kind": self.kind, "L": [float(v) for v in self.L.ravel()]}


Generator = Union[DeltaA, RotO3, SpThree, GTwoAuto]


def apply(g, X):
    return g.apply(X)


def apply_sequence(gs, X):
    for g in gs:
        X = g.apply(X)
    return X


def generator_from_json(data):
    kind = data["kind"]
    if kind == "delta_a":
        return DeltaA(Octonion(data["a"], ALGEBRA_FLAGS[data["algebra"]]))
    if kind == "rot_o3":
        return RotO3(np.reshape(np.asarray(data["T"], dtype=float), (3, 3)))
    if kind == "sp3":
        return SpThree(np.reshape(np.asarray(data["A"], dtype=float), (3, 3, 4)))
    if kind == "g2":
        return GTwoAuto(np.reshape(np.asarray(data["L"], dtype=float), (7, 7)))
    raise InvalidGenerator(f"unknown generator kind {kind!r}")


def random_sp3(rng):
    """Quaternionic unitary from Gram-Schmidt on a Gaussian 3x3 quaternion matrix."""
    cols = rng.normal(size=(3, 3, 4))  # cols[k] is column k
    out = []
    for v in cols:
        for _ in range(2):
            for u in out:
                overlap = quat_mul_array(quat_conj_array(u), v).sum(axis=0)
                v = v - quat_mul_array(u, overlap)
        out.append(v / np.sqrt(np.sum(v * v)))
    return SpThree(np.stack(out, axis=1))


# -- G2 frame construction --------------------------------------------------

def _complete(frame, tol=1e-6):
    """Unit imaginary vector orthogonal to ``frame``, best-conditioned basis candidate."""
    basis = np.asarray(frame)
    best, best_norm = None, 0.0
    for k in range(1, 8):
        cand = np.zeros(8)
        cand[k] = 1.0
        for _ in range(2):
            cand = cand - basis.T @ (basis @ cand)
        n = np.linalg.norm(cand)
        if n > best_norm:
            best, best_norm = cand, n
    if best_norm <= tol:
        raise InvalidGenerator("could not complete the G2 frame")
    return best / best_norm


def _frame(u, v, w):
    uv = oct_mul_array(u, v)
    return np.stack([
        u, v, uv, w,
        oct_mul_array(u, w),
        oct_mul_array(v, w),
        oct_mul_array(uv, w),
    ])


_E = np.eye(8)
_STANDARD_FRAME = _frame(_E[1], _E[2], _E[4])


def g2_map_to_e1(u, tol=1e-10):
    """Return ``GTwoAuto`` sending the unit imaginary octonion ``u`` to ``e1``.

    ``(u, v, w)`` is completed to a basic triple and the automorphism carries
    its seven-element frame onto the frame of ``(e1, e2, e4)``.
    """
    if u.mu != COMPACT:
        raise SplitUnsupported("g2_map_to_e1 is defined over the compact octonions")
    c = u.coeffs
    if abs(c[0]) > tol:
        raise NotImaginary(f"u has real part {c[0]!r}")
    if abs(u.norm2() - 1.0) > tol:
        raise NotUnit(f"u has norm2 {u.norm2()!r}")
    c = c.copy()
    c[0] = 0.0
    c /= np.linalg.norm(c)
    v = _complete([_E[0], c])
    uv = oct_mul_array(c, v)
    w = _complete([_E[0], c, v, uv])
    source = _frame(c, v, w)[:, 1:]
    target = _STANDARD_FRAME[:, 1:]
    # alpha(source_k) = target_k on an orthonormal frame
    L = target.T @ source
    return GTwoAuto(L)


# -- membership check --------------------------------------------------------

@dataclass
class MembershipReport:
    trials: int
    jordan_deviation: float
    cross_deviation: float
    inner_deviation: float

    @property
    def max_deviation(self):
        return max(self.jordan_deviation, self.cross_deviation, self.inner_deviation)


def check_f4_membership(g, trials=100, seed=0, mu=None):
    """Sample random pairs and measure how far ``g`` is from preserving o, x and (,)."""
    if mu is None:
        mu = g.a.mu if isinstance(g, DeltaA) else COMPACT
    rng = np.random.default_rng(seed)
    jd = cd = idev = 0.0
    for _ in range(trials):
        X, Y = random_element(rng, mu), random_element(rng, mu)
        gX, gY = g.apply(X), g.apply(Y)
        jd = max(jd, g.apply(jordan_product(X, Y)).max_abs_diff(jordan_product(gX, gY)))
        cd = max(cd, g.apply(freudenthal_cross(X, Y)).max_abs_diff(freudenthal_cross(gX, gY)))
        idev = max(idev, abs(inner_product(gX, gY) - inner_product(X, Y)))
    return MembershipReport(trials, jd, cd, idev)


def fixes_unit(g, mu=COMPACT):
    return g.apply(unit_E(mu)).max_abs_diff(unit_E(mu))
