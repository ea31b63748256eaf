"""Oriented and singular braid words, move words of the C_k family, and finite type invariants."""

from .braid import (
    BraidWord,
    Kind,
    Letter,
    Permutation,
    compose,
    identity,
    is_knot_closure,
    parse_braid_word,
    permutation_of,
    position_permutation,
)
from .diagram import LinkDiagram, close
from .invariants import InvariantId, conway, evaluate, jones, vassiliev_degree
from .laurent import LaurentPoly
from .moves import MoveSpec, bh_word, make_pair, rhs_symbolic, rhs_terms
from .singular import DEFAULT_CONVENTION, FormalSum, SignConvention, desingularize, expand_word
from .verify import check_general, check_symbolic, check_theorem, check_x_independence

__all__ = [
    "BraidWord", "DEFAULT_CONVENTION", "FormalSum", "InvariantId", "Kind", "LaurentPoly", "Letter",
    "LinkDiagram", "MoveSpec", "Permutation", "SignConvention", "bh_word", "check_general",
    "check_symbolic", "check_theorem", "check_x_independence", "close", "compose", "conway",
    "desingularize", "evaluate", "expand_word", "identity", "is_knot_closure", "jones", "make_pair",
    "parse_braid_word", "permutation_of", "position_permutation", "rhs_symbolic", "rhs_terms",
    "vassiliev_degree",
]
