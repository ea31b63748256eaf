"""Both sides of the difference formula, symbolically and on actual knots.

``check_theorem`` evaluates ``v(K) - v(J)`` for ``K = closure(BH * T)``,
``J = closure(T)`` and compares it with the signed sum over ``rhs_terms``.
``check_symbolic`` does the same in the singular-braid algebra, where the
comparison is between normal forms that any invariant of degree ``k+1``
cannot tell apart.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .braid import BraidWord, compose, permutation_of, render_orientation
from .invariants import InvariantId, evaluate, vassiliev_degree
from .moves import (
    MoveSpec,
    all_specs,
    block_bh_word,
    block_rhs_symbolic,
    block_rhs_terms,
    bh_word,
    make_pair,
    rhs_symbolic,
    rhs_terms,
)
from .singular import (
    DEFAULT_CONVENTION,
    FormalSum,
    SignConvention,
    degree_normal_form,
    expand_word,
)


def _frac(v: Fraction) -> str:
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


@dataclass
class CheckReport:
    specs: tuple[MoveSpec, ...]
    T: BraidWord
    x: BraidWord
    invariant: InvariantId
    lhs: Fraction
    rhs: Fraction
    conv: SignConvention = DEFAULT_CONVENTION
    variant: str = "squared"
    term_values: list[tuple[int, str, Fraction]] = field(default_factory=list)
    backend_agree: bool | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs

    @property
    def spec(self) -> MoveSpec:
        return self.specs[0]

    def to_json(self) -> dict:
        return {
            "specs": [sp.to_json(self.conv) for sp in self.specs],
            "T": str(self.T),
            "x": str(self.x),
            "o": render_orientation(self.T.o),
            "invariant": str(self.invariant),
            "variant": self.variant,
            "lhs": _frac(self.lhs),
            "rhs": _frac(self.rhs),
            "equal": self.equal,
            "backend_agree": self.backend_agree,
            "terms": [{"sign": sg, "word": w, "value": _frac(v)} for sg, w, v in self.term_values],
            "notes": list(self.notes),
        }


def _require_degree(inv: InvariantId, k: int, allow_higher: bool) -> None:
    if vassiliev_degree(inv) > k + 1 and not allow_higher:
        raise ValueError(
            f"{inv} has degree {vassiliev_degree(inv)} > k+1 = {k + 1}; the formula makes no claim there"
        )


def _cross_backend(inv: InvariantId, K: BraidWord, J: BraidWord, lhs: Fraction) -> bool | None:
    # j2 = -3 c2 on knots, so the Jones and Conway paths must agree up to that factor
    if inv.name == "c2":
        other = evaluate("j2", K) - evaluate("j2", J)
        return other == -3 * lhs
    if inv.name == "j2":
        other = evaluate("c2", K) - evaluate("c2", J)
        return lhs == -3 * other
    return None


def _sum_terms(inv, terms):
    values = []
    total = Fraction(0)
    for sign, w in terms:
        v = evaluate(inv, w)
        values.append((sign, str(w), v))
        total += sign * v
    return total, values


def check_theorem(
    spec: MoveSpec,
    T: BraidWord,
    x: BraidWord,
    inv: InvariantId | str,
    conv: SignConvention = DEFAULT_CONVENTION,
    singular_rhs: bool = False,
    allow_higher: bool = False,
) -> CheckReport:
    """Exact comparison of ``v(K) - v(J)`` with the signed sum of ``2**k`` terms."""
    inv = InvariantId.parse(inv)
    conv = SignConvention(conv)
    _require_degree(inv, spec.k, allow_higher)
    pair = make_pair(spec, T)
    lhs = evaluate(inv, pair.K_word) - evaluate(inv, pair.J_word)
    variant = "singular" if singular_rhs else "squared"
    rhs, values = _sum_terms(inv, rhs_terms(spec, x, conv, variant, T))
    report = CheckReport((spec,), T, x, inv, lhs, rhs, conv, variant, values)
    report.backend_agree = _cross_backend(inv, pair.K_word, pair.J_word, lhs)
    if vassiliev_degree(inv) < spec.k + 1:
        report.notes.append("degree below k+1: both sides are expected to vanish")
    return report


def check_general(
    n: int,
    specs: Sequence[MoveSpec],
    T: BraidWord,
    x: BraidWord,
    inv: InvariantId | str,
    conv: SignConvention = DEFAULT_CONVENTION,
    literal: bool = False,
    singular_rhs: bool = False,
    allow_higher: bool = False,
) -> CheckReport:
    """``n`` blocks side by side: ``K = closure(block_bh * T)``, ``J = closure(T)``.

    One group of ``2**k`` terms per block present, i.e. the block sum runs
    over ``j = 0..n-1``.
    """
    inv = InvariantId.parse(inv)
    conv = SignConvention(conv)
    specs = tuple(specs)
    if len(specs) != n:
        raise ValueError(f"expected {n} block specs, got {len(specs)}")
    _require_degree(inv, specs[0].k, allow_higher)
    if not permutation_of(T).is_full_cycle():
        raise ValueError(f"closure of {T} is not a knot")
    K = compose(block_bh_word(specs), T)
    lhs = evaluate(inv, K) - evaluate(inv, T)
    variant = "singular" if singular_rhs else "squared"
    rhs, values = _sum_terms(inv, block_rhs_terms(specs, x, conv, variant, literal, T))
    report = CheckReport(specs, T, x, inv, lhs, rhs, conv, variant, values)
    report.backend_agree = _cross_backend(inv, K, T, lhs)
    if literal:
        report.notes.append("literal block form: W_u^r on the right instead of W_{u+1}^r")
    return report


def check_x_independence(
    spec: MoveSpec,
    T: BraidWord,
    xs: Sequence[BraidWord],
    inv: InvariantId | str,
    conv: SignConvention = DEFAULT_CONVENTION,
) -> tuple[bool, list[Fraction]]:
    """Right-hand side for each ``x``; all must share ``Phi(T)``."""
    inv = InvariantId.parse(inv)
    target = permutation_of(T)
    for x in xs:
        if permutation_of(x) != target:
            raise ValueError(f"x = {x} has permutation {permutation_of(x)}, not {target}")
    values = [_sum_terms(inv, rhs_terms(spec, x, conv, "squared", T))[0] for x in xs]
    return len(set(values)) <= 1, values


@dataclass
class CEquivalence:
    spec: MoveSpec
    T: BraidWord
    invariant: InvariantId
    value_K: Fraction
    value_J: Fraction

    @property
    def equal(self) -> bool:
        return self.value_K == self.value_J


def check_c_equivalence(spec: MoveSpec, T: BraidWord, inv: InvariantId | str) -> CEquivalence:
    """Invariants of degree at most ``k`` cannot distinguish the two knots of a pair."""
    inv = InvariantId.parse(inv)
    if vassiliev_degree(inv) > spec.k:
        raise ValueError(f"{inv} has degree {vassiliev_degree(inv)} > k = {spec.k}")
    pair = make_pair(spec, T)
    return CEquivalence(spec, T, inv, evaluate(inv, pair.K_word), evaluate(inv, pair.J_word))


# -- symbolic ------------------------------------------------------------------


@dataclass
class SymbolicReport:
    specs: tuple[MoveSpec, ...]
    conv: SignConvention
    expansion: FormalSum  # expand_word(BH), truncated at k+1 singular letters
    expected: FormalSum
    equal: bool
    literal: bool = False

    def to_json(self) -> dict:
        return {
            "specs": [sp.to_json(self.conv) for sp in self.specs],
            "equal": self.equal,
            "literal": self.literal,
            "expansion": str(self.expansion),
            "expected": str(self.expected),
        }


def check_symbolic(spec: MoveSpec, conv: SignConvention = DEFAULT_CONVENTION) -> SymbolicReport:
    conv = SignConvention(conv)
    k = spec.k
    expansion = expand_word(bh_word(spec), conv, max_sing=k + 1)
    expected = rhs_symbolic(spec, conv)
    equal = degree_normal_form(expansion, k + 1) == degree_normal_form(expected, k + 1)
    return SymbolicReport((spec,), conv, expansion, expected, equal)


def check_block_symbolic(
    specs: Sequence[MoveSpec], conv: SignConvention = DEFAULT_CONVENTION, literal: bool = False
) -> SymbolicReport:
    """Symbolic form of the block formula; decides between ``W_{u+1}^r`` and the literal ``W_u^r``."""
    conv = SignConvention(conv)
    specs = tuple(specs)
    k = specs[0].k
    expansion = expand_word(block_bh_word(specs), conv, max_sing=k + 1)
    expected = block_rhs_symbolic(specs, conv, literal)
    equal = degree_normal_form(expansion, k + 1) == degree_normal_form(expected, k + 1)
    return SymbolicReport(specs, conv, expansion, expected, equal, literal)


@dataclass
class ConventionOracle:
    ks: tuple[int, ...]
    failures: dict[str, int]  # convention -> number of (k, d, o) where the identity fails
    checked: int
    winner: SignConvention | None

    def summary(self) -> str:
        parts = [f"{c}: {n}/{self.checked} failing" for c, n in self.failures.items()]
        name = self.winner.value if self.winner else "none"
        return f"sign convention oracle over k={list(self.ks)}: " + ", ".join(parts) + f"; winner: {name}"


def sign_convention_oracle(ks: Iterable[int] = (1, 2)) -> ConventionOracle:
    """Run the symbolic identity over every orientation for each convention."""
    ks = tuple(ks)
    failures = {}
    checked = 0
    for conv in SignConvention:
        bad = 0
        checked = 0
        for k in ks:
            for o in itertools.product((0, 1), repeat=k + 2):
                for spec in all_specs(k, o):
                    checked += 1
                    if not check_symbolic(spec, conv).equal:
                        bad += 1
        failures[conv.value] = bad
    winners = [SignConvention(c) for c, n in failures.items() if n == 0]
    return ConventionOracle(ks, failures, checked, winners[0] if len(winners) == 1 else None)


# -- counterexample shrinking ----------------------------------------------------


def shrink(
    T: BraidWord,
    x: BraidWord,
    still_fails: Callable[[BraidWord, BraidWord], bool],
) -> tuple[BraidWord, BraidWord]:
    """Greedily delete letters from ``T`` and ``x`` while the failure persists.

    Single letters and pairs are tried; a candidate is kept only if ``T``
    still closes to a knot and ``Phi(x) = Phi(T)``.
    """

    def candidates(w: BraidWord):
        L = w.letters
        for i in range(len(L)):
            yield w.with_letters(L[:i] + L[i + 1 :])
        for i, j in itertools.combinations(range(len(L)), 2):
            yield w.with_letters(L[:i] + L[i + 1 : j] + L[j + 1 :])

    def ok(t, xx):
        try:
            return permutation_of(t).is_full_cycle() and permutation_of(xx) == permutation_of(t)
        except ValueError:
            return False

    progress = True
    while progress:
        progress = False
        for t2 in itertools.chain([T], candidates(T)):
            for x2 in itertools.chain([x], candidates(x)):
                if (t2, x2) == (T, x) or not ok(t2, x2):
                    continue
                if still_fails(t2, x2):
                    T, x, progress = t2, x2, True
                    break
            if progress:
                break
    return T, x


# -- boundedness ---------------------------------------------------------------


def boundedness_probe(
    corpus: Iterable[tuple[Sequence[MoveSpec] | MoveSpec, BraidWord]],
    inv: InvariantId | str,
    r: int = 1,
) -> Fraction:
    """Largest ``|v(K) - v(J)|`` over pairs that differ by ``r`` blocks; a statistic, not a bound."""
    inv = InvariantId.parse(inv)
    best: Fraction | None = None
    for specs, T in corpus:
        specs = (specs,) if isinstance(specs, MoveSpec) else tuple(specs)
        if len(specs) != r:
            raise ValueError(f"corpus entry has {len(specs)} blocks, expected r = {r}")
        K = compose(block_bh_word(specs), T)
        diff = abs(evaluate(inv, K) - evaluate(inv, T))
        best = diff if best is None else max(best, diff)
    if best is None:
        raise ValueError("empty corpus")
    return best
