"""Non-diagonalizable elements of the split algebra J(3, O').

Every element of F4(4) preserves ``(X, Y) = tr(X o Y)``, and a diagonal
element has ``(X, X) = xi1^2 + xi2^2 + xi3^2 >= 0``.  A split element with
``(X, X) < 0`` therefore has no diagonal form in its orbit.  The converse
is not claimed: a nonnegative value proves nothing.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import SPLIT, Octonion
from .errors import CompactUnsupported
from .jordan import JordanElement, inner_product

CERTIFICATE_TOL = 1e-9

OBSTRUCTED = "obstructed"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class ObstructionVerdict:
    inner_square: float
    verdict: str

    @property
    def obstructed(self):
        return self.verdict == OBSTRUCTED

    def to_json(self):
        return {"inner_square": self.inner_square, "verdict": self.verdict}


def counterexample_X0():
    """Zero diagonal, ``x1 = e4'``, so the (3, 2) entry is ``-e4'``."""
    return JordanElement.from_entries(x1=Octonion.basis(4, SPLIT), mu=SPLIT)


def diagonalizability_obstruction(X, certificate_tol=CERTIFICATE_TOL):
    if X.mu != SPLIT:
        raise CompactUnsupported("compact elements are always diagonalizable; nothing to certify")
    q = inner_product(X, X)
    return ObstructionVerdict(q, OBSTRUCTED if q < -certificate_tol else INCONCLUSIVE)
