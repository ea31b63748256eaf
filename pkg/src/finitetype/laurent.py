"""Exact single-variable Laurent polynomials with integer coefficients.

Exponents are integers or :class:`fractions.Fraction` (half-integer powers of
``t`` show up in Jones polynomials of links with an even number of components).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

Exponent = Union[int, Fraction]


def _norm_exp(e: Exponent) -> Exponent:
    if isinstance(e, Fraction) and e.denominator == 1:
        return int(e)
    return e


class LaurentPoly:
    """Immutable Laurent polynomial ``sum c_e * var**e``; zero coefficients are never stored."""

    __slots__ = ("_terms", "var", "_hash")

    def __init__(self, terms: Mapping[Exponent, int] | None = None, var: str = "t"):
        clean: dict[Exponent, int] = {}
        if terms:
            for e, c in terms.items():
                if c:
                    e = _norm_exp(e)
                    clean[e] = clean.get(e, 0) + int(c)
                    if not clean[e]:
                        del clean[e]
        self._terms = clean
        self.var = var
        self._hash = None

    # -- constructors -------------------------------------------------------
    @classmethod
    def constant(cls, c: int, var: str = "t") -> LaurentPoly:
        return cls({0: c}, var)

    @classmethod
    def monomial(cls, e: Exponent, c: int = 1, var: str = "t") -> LaurentPoly:
        return cls({e: c}, var)

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], low: int = 0, var: str = "t") -> LaurentPoly:
        """Build from a dense coefficient list starting at exponent ``low``."""
        return cls({low + i: c for i, c in enumerate(coeffs)}, var)

    # -- access -------------------------------------------------------------
    @property
    def terms(self) -> dict[Exponent, int]:
        return dict(self._terms)

    def __getitem__(self, e: Exponent) -> int:
        return self._terms.get(_norm_exp(e), 0)

    def items(self):
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def min_exp(self) -> Exponent:
        return min(self._terms)

    def max_exp(self) -> Exponent:
        return max(self._terms)

    # -- arithmetic ---------------------------------------------------------
    def _coerce(self, other) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(other, self.var)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms.items()}, self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self._terms.items()}, self.var)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Exponent, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            ((e, c),) = self._terms.items()
            if c not in (1, -1):
                raise ValueError("monomial coefficient must be a unit")
            return LaurentPoly({-e * -n: c ** (-n)}, self.var)
        result = LaurentPoly.constant(1, self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: Exponent) -> LaurentPoly:
        """Multiply by ``var**k``."""
        return LaurentPoly({e + k: c for e, c in self._terms.items()}, self.var)

    def substitute_power(self, factor: Exponent, var: str | None = None) -> LaurentPoly:
        """Substitute ``var -> newvar**factor`` (exponents are scaled)."""
        return LaurentPoly(
            {_norm_exp(Fraction(e) * Fraction(factor)): c for e, c in self._terms.items()},
            var or self.var,
        )

    def evaluate(self, x) -> Fraction:
        """Exact evaluation at a rational point (integer exponents only)."""
        x = Fraction(x)
        total = Fraction(0)
        for e, c in self._terms.items():
            if isinstance(e, Fraction):
                raise ValueError("cannot evaluate a fractional power exactly")
            total += c * x**e
        return total

    def divmod_poly(self, divisor: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
        """Long division by a polynomial with a unit leading coefficient.

        Works on integer exponents; both operands are treated as ordinary
        polynomials after shifting so the lowest exponent of the divisor is 0.
        """
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        d_low = divisor.min_exp()
        d = divisor.shift(-d_low)
        lead_e = d.max_exp()
        lead_c = d[lead_e]
        if lead_c not in (1, -1):
            raise ValueError("divisor must have unit leading coefficient")
        rem = dict(self._terms)
        quot: dict[Exponent, int] = {}
        low = min(rem) if rem else 0
        while rem and max(rem) - lead_e >= low:
            top = max(rem)
            q = rem[top] * lead_c
            qe = top - lead_e
            quot[qe] = q
            for e, c in d._terms.items():
                k = qe + e
                rem[k] = rem.get(k, 0) - q * c
                if not rem[k]:
                    del rem[k]
        return LaurentPoly(quot, self.var).shift(-d_low), LaurentPoly(rem, self.var)

    def exact_div(self, divisor: LaurentPoly) -> LaurentPoly:
        q, r = self.divmod_poly(divisor)
        if not r.is_zero():
            raise ArithmeticError(f"{divisor} does not divide {self}")
        return q

    def mirror(self) -> LaurentPoly:
        """Substitute ``var -> var**-1``."""
        return LaurentPoly({-e: c for e, c in self._terms.items()}, self.var)

    # -- comparison / display -----------------------------------------------
    def __eq__(self, other):
        if isinstance(other, int):
            return self._terms == ({0: other} if other else {})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        return f"LaurentPoly({str(self)!r}, var={self.var!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms.items()):
            if e == 0:
                mono = ""
            elif e == 1:
                mono = self.var
            else:
                mono = f"{self.var}^{e}" if not isinstance(e, Fraction) else f"{self.var}^({e})"
            if mono and abs(c) == 1:
                body = mono
            elif mono:
                body = f"{abs(c)}*{mono}"
            else:
                body = str(abs(c))
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out
