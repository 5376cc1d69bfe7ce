"""Constructive diagonalization of compact J(3, O) elements by explicit F4 generators.

The pipeline makes ``x1`` real with a ``DeltaA``, kills it with a rotation in
the (2, 3) plane, makes ``x2`` real with a second ``DeltaA``, moves ``x3``
into ``span{1, e1}`` with a G2 automorphism, and finishes the resulting
complex Hermitian matrix with cyclic Jacobi sweeps packaged as one ``SpThree``.
Every step is recorded so the result can be replayed and audited.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

import numpy as np

from .algebra import COMPACT, Octonion
from .errors import NoConvergence, NotComplex, SplitUnsupported, X1NotReal
from .generators import (
    DeltaA,
    GTwoAuto,
    RotO3,
    SpThree,
    apply_sequence,
    g2_map_to_e1,
    generator_from_json,
)
from .jordan import JordanElement, invariants

DRIFT_TOL = 1e-8

# homogeneity degree of each invariant, for scale-relative drift
_DEGREE = {"trace": 1, "inner_square": 2, "sigma": 2, "det": 3}


@dataclass(frozen=True)
class Tolerances:
    zero_tol: float = 1e-10
    residual_tol: float = 1e-9
    jacobi_tol: float = 1e-12
    max_sweeps: int = 30

    def __post_init__(self):
        for name in ("zero_tol", "residual_tol", "jacobi_tol"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be positive")
        if self.max_sweeps < 1:
            raise ValueError("max_sweeps must be at least 1")

    def scaled(self, scale):
        """Absolute tolerances for an input of Frobenius norm ``scale`` (no change below 1)."""
        s = max(1.0, scale)
        return replace(
            self,
            zero_tol=self.zero_tol * s,
            residual_tol=self.residual_tol * s,
            jacobi_tol=self.jacobi_tol * s,
        )


DEFAULT_TOLERANCES = Tolerances()


def _require_compact(X):
    if X.mu != COMPACT:
        raise SplitUnsupported(
            "split elements are not diagonalizable in general; use the split-case obstruction check"
        )


def _make_entry_real(X, row, tol):
    x = X.off[row]
    n = float(np.linalg.norm(x))
    if n <= tol.zero_tol:
        return DeltaA.identity(), X
    a = DeltaA(Octonion(x / n))
    return a, a.apply(X)


def step_make_x1_real(X, tol=DEFAULT_TOLERANCES):
    """``a = x1/|x1|``; ``delta_a`` turns ``x1`` into ``conj(a) x1 = |x1|``."""
    _require_compact(X)
    return _make_entry_real(X, 0, tol)


def step_clear_x1(X, tol=DEFAULT_TOLERANCES):
    _require_compact(X)
    x1 = X.off[0]
    if np.max(np.abs(x1[1:])) > tol.zero_tol:
        raise X1NotReal(f"x1 has imaginary part {np.linalg.norm(x1[1:]):.3g}")
    r1 = float(x1[0])
    if r1 == 0.0:
        return RotO3.identity(), X
    theta = 0.5 * math.atan2(2.0 * r1, X.diag[1] - X.diag[2])
    c, s = math.cos(theta), math.sin(theta)
    T = np.array([[1.0, 0.0, 0.0], [0.0, c, s], [0.0, -s, c]])
    g = RotO3(T)
    return g, g.apply(X)


def step_make_x2_real(X, tol=DEFAULT_TOLERANCES):
    """``x2 -> x2 conj(a) = |x2|`` with ``a = x2/|x2|``; ``x1`` stays (numerically) zero."""
    _require_compact(X)
    return _make_entry_real(X, 1, tol)


def step_x3_to_complex(X, tol=DEFAULT_TOLERANCES):
    _require_compact(X)
    im = X.off[2].copy()
    im[0] = 0.0
    n = float(np.linalg.norm(im))
    if n <= tol.zero_tol:
        return GTwoAuto.identity(), X
    g = g2_map_to_e1(Octonion(im / n))
    return g, g.apply(X)


def _complex_jacobi(H, tol):
    """Cyclic Jacobi on a 3x3 complex Hermitian matrix; returns unitary ``U`` with ``U^H H U`` diagonal."""
    H = H.copy()
    U = np.eye(3, dtype=complex)
    for _ in range(tol.max_sweeps + 1):
        off = max(abs(H[0, 1]), abs(H[0, 2]), abs(H[1, 2]))
        if off <= tol.jacobi_tol:
            return U
        for p, q in ((0, 1), (0, 2), (1, 2)):
            h = H[p, q]
            r = abs(h)
            if r == 0.0:
                continue
            phase = h / r
            theta = 0.5 * math.atan2(2.0 * r, H[p, p].real - H[q, q].real)
            c, s = math.cos(theta), math.sin(theta)
            G = np.eye(3, dtype=complex)
            G[p, p], G[p, q] = c, -s
            G[q, p], G[q, q] = phase.conjugate() * s, phase.conjugate() * c
            H = G.conj().T @ H @ G
            U = U @ G
    raise NoConvergence(f"Jacobi did not converge in {tol.max_sweeps} sweeps")


def step_unitary_diag(X, tol=DEFAULT_TOLERANCES):
    """Diagonalize an element of J(3, C) (entries in ``span{1, e1}``) by some ``A`` in Sp(3)."""
    _require_compact(X)
    stray = np.max(np.abs(X.off[:, 2:]))
    if stray > tol.zero_tol:
        raise NotComplex(f"off-diagonal entries leave span{{1, e1}} by {stray:.3g}")
    z1, z2, z3 = (complex(row[0], row[1]) for row in X.off)
    xi = X.diag
    H = np.array([
        [xi[0], z3, z2.conjugate()],
        [z3.conjugate(), xi[1], z1],
        [z2, z1.conjugate(), xi[2]],
    ], dtype=complex)
    U = _complex_jacobi(H, tol)
    if np.array_equal(U, np.eye(3)):
        return SpThree.identity(), X
    Ah = U.conj().T
    A = np.zeros((3, 3, 4))
    A[:, :, 0] = Ah.real
    A[:, :, 1] = Ah.imag
    g = SpThree(A)
    return g, g.apply(X)


def sort_descending(X):
    """Permutation in O(3) ordering the diagonal descending, or ``None`` if already sorted."""
    order = np.argsort(-X.diag, kind="stable")
    if np.array_equal(order, np.arange(3)):
        return None
    P = np.zeros((3, 3))
    P[np.arange(3), order] = 1.0
    return RotO3(P)


def invariant_drift(before, after):
    """Scale-relative change of trace, (X, X), sigma and det.

    Each absolute change is divided by ``max(|value|, |X|^k)`` where ``k`` is
    the degree of the invariant and ``|X|`` the Frobenius norm of ``before``.
    """
    inv0, inv1 = invariants(before), invariants(after)
    norm = before.frobenius()
    drift = {}
    for key, k in _DEGREE.items():
        delta = abs(inv1[key] - inv0[key])
        denom = max(abs(inv0[key]), norm ** k)
        drift[key] = delta / denom if denom > 0 else delta
    return drift


@dataclass
class DiagonalizationTranscript:
    input: JordanElement
    steps: list
    diagonal: np.ndarray
    off_diag_residual: float
    invariant_drift: dict = field(default_factory=dict)

    def replay(self):
        return apply_sequence(self.steps, self.input)

    def to_json(self):
        return {
            "input": self.input.to_json(),
            "steps": [g.to_json() for g in self.steps],
            "diagonal": [float(v) for v in self.diagonal],
            "off_diag_residual": float(self.off_diag_residual),
            "invariant_drift": {k: float(v) for k, v in self.invariant_drift.items()},
        }

    @classmethod
    def from_json(cls, data):
        return cls(
            input=JordanElement.from_json(data["input"]),
            steps=[generator_from_json(g) for g in data["steps"]],
            diagonal=np.asarray(data["diagonal"], dtype=float),
            off_diag_residual=float(data["off_diag_residual"]),
            invariant_drift=dict(data["invariant_drift"]),
        )


_STEPS = (step_make_x1_real, step_clear_x1, step_make_x2_real, step_x3_to_complex, step_unitary_diag)


def diagonalize(X, tol=DEFAULT_TOLERANCES):
    """Run the five constructive steps and return a replayable transcript."""
    _require_compact(X)
    t = tol.scaled(X.frobenius())
    steps = []
    Y = X
    for step in _STEPS:
        g, Y = step(Y, t)
        steps.append(g)
    perm = sort_descending(Y)
    if perm is not None:
        steps.append(perm)
        Y = perm.apply(Y)
    residual = Y.max_offdiag()
    if residual > t.residual_tol:
        raise NoConvergence(f"off-diagonal residual {residual:.3g} exceeds {t.residual_tol:.3g}")
    return DiagonalizationTranscript(
        input=X,
        steps=steps,
        diagonal=np.array(Y.diag),
        off_diag_residual=residual,
        invariant_drift=invariant_drift(X, Y),
    )


@dataclass
class VerificationReport:
    replay_residual: float
    diagonal_mismatch: float
    invariant_drift: dict
    residual_tol: float
    drift_tol: float

    @property
    def ok(self):
        return (
            self.replay_residual <= self.residual_tol
            and self.diagonal_mismatch <= self.residual_tol
            and max(self.invariant_drift.values()) <= self.drift_tol
        )

    def to_json(self):
        return {
            "ok": self.ok,
            "replay_residual": self.replay_residual,
            "diagonal_mismatch": self.diagonal_mismatch,
            "invariant_drift": self.invariant_drift,
            "residual_tol": self.residual_tol,
            "drift_tol": self.drift_tol,
        }


def verify_transcript(transcript, tol=DEFAULT_TOLERANCES, drift_tol=DRIFT_TOL):
    """Replay the generator sequence and recheck residual, diagonal and invariants."""
    t = tol.scaled(transcript.input.frobenius())
    Y = transcript.replay()
    stated = transcript.diagonal
    mismatch = float(np.max(np.abs(Y.diag - stated)))
    drift = invariant_drift(transcript.input, JordanElement.diagonal(stated))
    return VerificationReport(
        replay_residual=Y.max_offdiag(),
        diagonal_mismatch=mismatch,
        invariant_drift=drift,
        residual_tol=t.residual_tol,
        drift_tol=drift_tol,
    )
