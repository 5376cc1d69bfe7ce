"""Octonions, the exceptional Jordan algebra J(3, O), and its constructive
diagonalization by explicit F4 generators."""

from .algebra import COMPACT, SPLIT, Octonion, Quaternion
from .diagonalize import DiagonalizationTranscript, Tolerances, diagonalize, verify_transcript
from .errors import AlbertError
from .generators import DeltaA, GTwoAuto, RotO3, SpThree, apply, apply_sequence, g2_map_to_e1
from .jordan import (
    JordanElement,
    PairElement,
    det,
    freudenthal_cross,
    from_pair,
    inner_product,
    jordan_product,
    pair_cross,
    sigma,
    to_pair,
    trace,
    unit_E,
)
from .split import counterexample_X0, diagonalizability_obstruction

__version__ = "0.1.0"

__all__ = [
    "COMPACT", "SPLIT", "Octonion", "Quaternion",
    "JordanElement", "PairElement", "unit_E", "trace", "inner_product", "jordan_product",
    "freudenthal_cross", "sigma", "det", "to_pair", "from_pair", "pair_cross",
    "DeltaA", "RotO3", "SpThree", "GTwoAuto", "apply", "apply_sequence", "g2_map_to_e1",
    "Tolerances", "DiagonalizationTranscript", "diagonalize", "verify_transcript",
    "counterexample_X0", "diagonalizability_obstruction", "AlbertError",
]
