"""Alexander and Conway polynomials of knot closures through the Burau representation.

The unreduced Burau matrix ``B`` of a braid fixes the row vector
``(1, t, ..., t^(n-1))`` on the left and the column of ones on the right, so
``I - B`` has corank one and every ``(n-1)``-minor of it is, up to a unit
``+-t^k``, the Alexander polynomial of the closure times the same factor.
Deleting the last row and column gives exactly the reduced-Burau value
``det(I - B_reduced)`` without the ``1 + t + ... + t^(n-1)`` division.

Unit fixing: shift exponents so they are symmetric about zero, then flip the
overall sign so that ``Delta(1) = 1``.  Knots only.
"""

from __future__ import annotations

from sympy import ZZ, symbols
from sympy.polys.matrices import DomainMatrix

from ..braid import BraidWord, Kind, is_knot_closure
from ..laurent import LaurentPoly

_T = symbols("t")
_RING = ZZ[_T]

Matrix = list[list[LaurentPoly]]


def _letter_matrix(n: int, i: int, positive: bool) -> Matrix:
    zero, one = LaurentPoly({}), LaurentPoly({0: 1})
    m = [[one if r == c else zero for c in range(n)] for r in range(n)]
    a, b = i - 1, i
    if positive:
        block = [[LaurentPoly({0: 1, 1: -1}), LaurentPoly({1: 1})], [one, zero]]
    else:
        block = [[zero, one], [LaurentPoly({-1: 1}), LaurentPoly({0: 1, -1: -1})]]
    for r in range(2):
        for c in range(2):
            m[(a, b)[r]][(a, b)[c]] = block[r][c]
    return m


def burau(w: BraidWord) -> Matrix:
    """Unreduced Burau matrix, the product of the letter matrices from bottom to top."""
    if w.is_singular:
        raise ValueError("Burau matrix needs a non-singular word")
    n = w.strands
    zero, one = LaurentPoly({}), LaurentPoly({0: 1})
    acc = [[one if r == c else zero for c in range(n)] for r in range(n)]
    for letter in w.letters:
        # multiplying by a letter only touches two columns
        i = letter.index
        lm = _letter_matrix(n, i, letter.kind is Kind.POS)
        cols = (i - 1, i)
        new_cols = {
            c: [sum((acc[r][k] * lm[k][c] for k in cols), zero) for r in range(n)] for c in cols
        }
        for c in cols:
            for r in range(n):
                acc[r][c] = new_cols[c][r]
    return acc


def _det(m: Matrix) -> LaurentPoly:
    size = len(m)
    if size == 0:
        return LaurentPoly({0: 1})
    low = min((e.min_exp() for row in m for e in row if not e.is_zero()), default=0)
    shift = -low if low < 0 else 0
    g = _RING.gens[0]

    def to_ring(p: LaurentPoly):
        out = _RING.zero
        for e, c in p.items():
            out += c * g ** int(e + shift)
        return out

    dm = DomainMatrix([[to_ring(e) for e in row] for row in m], (size, size), _RING)
    det = dm.det()
    coeffs = {int(mon[0]): int(c) for mon, c in det.terms()}
    return LaurentPoly(coeffs).shift(-shift * size)


def alexander_raw(w: BraidWord) -> LaurentPoly:
    """``det`` of ``I - B`` with the last row and column removed; unnormalized."""
    n = w.strands
    b = burau(w)
    one = LaurentPoly({0: 1})
    minor = [[(one if r == c else LaurentPoly({})) - b[r][c] for c in range(n - 1)] for r in range(n - 1)]
    return _det(minor)


def normalize_alexander(p: LaurentPoly) -> LaurentPoly:
    if p.is_zero():
        raise ValueError("vanishing Alexander polynomial; closure is not a knot")
    span = p.min_exp() + p.max_exp()
    if span % 2:
        raise ValueError(f"Alexander polynomial {p} has odd span; closure is not a knot")
    p = p.shift(-span // 2)
    at_one = p.evaluate(1)
    if abs(at_one) != 1:
        raise ValueError(f"Delta(1) = {at_one}; closure is not a knot")
    return p if at_one == 1 else -p


def alexander(w: BraidWord) -> LaurentPoly:
    """Symmetric Alexander polynomial with ``Delta(1) = 1``."""
    if not is_knot_closure(w):
        raise ValueError("Alexander/Conway are only provided for knot closures")
    return normalize_alexander(alexander_raw(w))


_Z2 = LaurentPoly({1: 1, 0: -2, -1: 1})  # t - 2 + t^-1 = z^2


def alexander_to_conway(delta: LaurentPoly) -> LaurentPoly:
    """Rewrite a symmetric ``Delta(t)`` as a polynomial in ``z = t^1/2 - t^-1/2``."""
    out: dict[int, int] = {}
    rest = delta
    while not rest.is_zero():
        top = rest.max_exp()
        if top < 0 or rest[-top] != rest[top]:
            raise ValueError(f"{delta} is not symmetric")
        c = rest[top]
        out[2 * top] = c
        rest = rest - _Z2 ** top * c
    return LaurentPoly(out, "z")


def conway(w: BraidWord) -> LaurentPoly:
    """Conway polynomial of a knot closure, as a polynomial in ``z``."""
    return alexander_to_conway(alexander(w))
