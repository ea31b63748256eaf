"""Jones, Conway and the finite type invariants extracted from them."""

from .bracket import bracket, bracket_state_sum, bracket_transfer, jones, jones_from_bracket
from .conway import alexander, alexander_raw, burau, conway
from .skein import conway_skein
from .vassiliev import (
    InvariantCache,
    InvariantId,
    evaluate,
    evaluate_sum,
    get_cache,
    jones_derivative,
    set_cache,
    vassiliev_degree,
)

__all__ = [
    "InvariantCache",
    "InvariantId",
    "alexander",
    "alexander_raw",
    "bracket",
    "bracket_state_sum",
    "bracket_transfer",
    "burau",
    "conway",
    "conway_skein",
    "evaluate",
    "evaluate_sum",
    "get_cache",
    "jones",
    "jones_derivative",
    "jones_from_bracket",
    "set_cache",
    "vassiliev_degree",
]
