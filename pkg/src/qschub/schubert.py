"""Classical Schubert polynomials, built top-down from the staircase monomial."""

from __future__ import annotations

from functools import lru_cache
from itertools import product

from .polyring import Polynomial, divided_difference, term_key
from .symgroup import Permutation, all_permutations, longest

__all__ = [
    "staircase",
    "staircase_exponent",
    "staircase_divisors",
    "schubert_table",
    "schubert_poly",
    "schubert_basis",
]


def staircase_exponent(n: int) -> tuple[int, ...]:
    return tuple(range(n - 1, -1, -1))


def staircase(n: int) -> Polynomial:
    """``x_1^{n-1} x_2^{n-2} ... x_{n-1}``."""
    return Polynomial.monomial(n, staircase_exponent(n))


@lru_cache(maxsize=None)
def staircase_divisors(n: int) -> tuple[tuple[int, ...], ...]:
    """x-exponents of the ``n!`` monomials dividing the staircase, sorted by the term order."""
    exps = product(*(range(e + 1) for e in staircase_exponent(n)))
    return tuple(sorted(exps, key=term_key))


@lru_cache(maxsize=None)
def schubert_table(n: int) -> dict[Permutation, Polynomial]:
    """
    All Schubert polynomials of ``S_n``.

    Walks down the weak order from ``w_o``: whenever ``w`` has a descent at
    ``i``, ``S_{w s_i} = d_i S_w``.  The dict is shared; do not mutate it.
    """
    w0 = longest(n)
    table = {w0: staircase(n)}
    frontier = [w0]
    while frontier:
        nxt = []
        for w in frontier:
            for i in w.descents():
                images = list(w.images)
                images[i - 1], images[i] = images[i], images[i - 1]
                v = Permutation(tuple(images))
                if v not in table:
                    table[v] = divided_difference(i, table[w])
                    nxt.append(v)
        frontier = nxt
    return table


def schubert_poly(w: Permutation) -> Polynomial:
    return schubert_table(w.n)[w]


def schubert_basis(n: int) -> list[tuple[Permutation, Polynomial]]:
    """``(w, S_w)`` for all of ``S_n``, ordered by length then one-line notation."""
    table = schubert_table(n)
    return [(w, table[w]) for w in sorted(all_permutations(n), key=lambda w: (w.length, w.images))]
