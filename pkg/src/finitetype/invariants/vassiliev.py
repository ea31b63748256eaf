"""Finite type invariants read off the Conway and Jones polynomials.

``c2``, ``c4``: coefficients of ``z^2``, ``z^4`` in the Conway polynomial.
``jm``: coefficient of ``x^m`` in ``V(e^x)``, i.e. ``sum_n a_n n^m / m!``.

Singular words are resolved through the Birman-Lin rule first, so
``evaluate`` is the linear extension of each invariant.
"""

from __future__ import annotations

import json
import math
import re
import threading
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from ..braid import BraidWord, render, render_orientation
from ..singular import FormalSum, canonical_word, desingularize
from .bracket import jones
from .conway import conway

_ID = re.compile(r"^(c2|c4|j(\d+))$")


@dataclass(frozen=True)
class InvariantId:
    name: str

    def __post_init__(self):
        m = _ID.match(self.name)
        if not m:
            raise ValueError(f"unknown invariant {self.name!r}; expected c2, c4 or jm with m >= 2")
        if m.group(2) is not None and int(m.group(2)) < 2:
            raise ValueError("jm needs m >= 2")

    @classmethod
    def parse(cls, value: InvariantId | str) -> InvariantId:
        return value if isinstance(value, InvariantId) else cls(str(value).strip())

    @property
    def backend(self) -> str:
        return "conway" if self.name.startswith("c") else "jones"

    @property
    def degree(self) -> int:
        return int(self.name[1:])

    def __str__(self):
        return self.name


def vassiliev_degree(inv: InvariantId | str) -> int:
    """Order above which ``evaluate`` vanishes on singular words."""
    return InvariantId.parse(inv).degree


def jones_derivative(v, m: int) -> Fraction:
    """Coefficient of ``x^m`` in ``V(e^x)``; exponents may be half-integers."""
    total = Fraction(0)
    for e, c in v.items():
        total += c * Fraction(e) ** m
    return total / math.factorial(m)


def _value(inv: InvariantId, w: BraidWord) -> Fraction:
    if inv.backend == "conway":
        return Fraction(conway(w)[inv.degree])
    return jones_derivative(jones(w), inv.degree)


# -- memo cache ------------------------------------------------------------------


class InvariantCache:
    """Process-wide memo keyed by canonical word; optionally mirrored to a JSON-lines file.

    Reads and inserts take a lock, so sharing it between threads is safe.
    """

    def __init__(self, path: str | Path | None = None):
        self._lock = threading.Lock()
        self._data: dict[tuple[str, str, str], Fraction] = {}
        self.path = Path(path) if path else None
        if self.path and self.path.exists():
            for line in self.path.read_text().splitlines():
                if line.strip():
                    rec = json.loads(line)
                    self._data[(rec["word"], rec["o"], rec["invariant"])] = Fraction(rec["value"])

    def __len__(self):
        return len(self._data)

    def get(self, key):
        with self._lock:
            return self._data.get(key)

    def put(self, key, value: Fraction) -> None:
        with self._lock:
            if key in self._data:
                return
            self._data[key] = value
            if self.path:
                word, o, inv = key
                rec = {"word": word, "o": o, "invariant": inv, "value": f"{value.numerator}/{value.denominator}"}
                with self.path.open("a") as fh:
                    fh.write(json.dumps(rec) + "\n")

    def clear(self) -> None:
        with self._lock:
            self._data.clear()


_cache = InvariantCache()


def set_cache(cache: InvariantCache | None) -> None:
    """Swap the process-wide cache; ``None`` disables memoization."""
    global _cache
    _cache = cache


def get_cache() -> InvariantCache | None:
    return _cache


def _evaluate_plain(inv: InvariantId, w: BraidWord) -> Fraction:
    word = canonical_word(w.letters)
    cache = _cache
    if cache is None:
        return _value(inv, w.with_letters(word))
    key = (render(word) or "e", render_orientation(w.o), inv.name)
    hit = cache.get(key)
    if hit is not None:
        return hit
    val = _value(inv, w.with_letters(word))
    cache.put(key, val)
    return val


def evaluate_sum(inv: InvariantId | str, sm: FormalSum) -> Fraction:
    inv = InvariantId.parse(inv)
    plain = desingularize(sm)
    total = Fraction(0)
    for word, c in plain:
        total += c * _evaluate_plain(inv, BraidWord(sm.n, word, sm.o))
    return total


def evaluate(inv: InvariantId | str, w: BraidWord) -> Fraction:
    """Exact value of ``inv`` on the closure of ``w``, extended linearly to singular words."""
    inv = InvariantId.parse(inv)
    if not w.is_singular:
        return _evaluate_plain(inv, w)
    return evaluate_sum(inv, FormalSum.from_word(w))
