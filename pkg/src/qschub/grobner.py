"""
Normal forms modulo the quantized ideal and Gromov-Witten invariants.

The Groebner basis is known in closed form, and its leading monomials
``x_n, x_{n-1}^2, ..., x_1^n`` are pure powers of distinct variables, so
plain division already yields canonical remainders.  No completion step is
needed.
"""

from __future__ import annotations

import heapq
import itertools
import random
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Callable, Iterable, Sequence

from .linalg import SpanSolver
from .polyring import Polynomial, specialize_q, term_key
from .quantization import qschubert_table, quantum_e
from .schubert import schubert_table, staircase_exponent
from .symgroup import Permutation, all_permutations, longest, multiply

__all__ = [
    "GroebnerBasis",
    "GWResult",
    "groebner_basis",
    "polynomial_det",
    "normal_form",
    "bracket",
    "expand_schubert",
    "expand_qschubert",
    "classical_structure_constants",
    "dimension_condition",
    "gw_invariant",
    "gw_invariants",
    "gw_table",
    "table_is_symmetric",
]


def polynomial_det(matrix: Sequence[Sequence[Polynomial]]) -> Polynomial:
    """Leibniz expansion, skipping permutations that hit a zero entry."""
    k = len(matrix)
    n = matrix[0][0].n
    total = Polynomial.zero(n)
    for perm in itertools.permutations(range(k)):
        term = Polynomial.one(n)
        for r in range(k):
            entry = matrix[r][perm[r]]
            if not entry:
                break
            term = term * entry
        else:
            inversions = sum(1 for a in range(k) for b in range(a + 1, k) if perm[a] > perm[b])
            total = total - term if inversions % 2 else total + term
    return total


@dataclass(frozen=True)
class GroebnerBasis:
    n: int
    gens: tuple[Polynomial, ...]
    leading: tuple[tuple[int, ...], ...]
    classical: bool = False

    def reducer(self, xexp: Sequence[int]) -> list[int]:
        """Indices ``k - 1`` of the generators whose leading monomial divides ``x^xexp``."""
        n = self.n
        return [k - 1 for k in range(1, n + 1) if xexp[n - k] >= k]


@lru_cache(maxsize=None)
def groebner_basis(n: int, classical: bool = False) -> GroebnerBasis:
    """
    ``g_k = det(E^{n-i+1}_{j-i+1})_{i,j=1..k}`` for ``k = 1..n``, normalized to be monic.

    With ``classical=True`` the q-variables are set to zero, which gives a
    basis of the ideal generated by the symmetric functions.
    """
    gens, leading = [], []
    for k in range(1, n + 1):
        matrix = [[quantum_e(j - i + 1, n - i + 1, n) for j in range(1, k + 1)] for i in range(1, k + 1)]
        g = polynomial_det(matrix)
        if classical:
            g = specialize_q(g, [0] * (n - 1))
        lead = g.leading_xexp()
        expected = tuple(k if i == n - k else 0 for i in range(n))
        if lead != expected:
            raise ArithmeticError(f"g_{k} has leading monomial {lead}, expected {expected}; term order bug")
        lc = g.x_coefficient(lead)
        if lc == -1:
            g = -g
        elif lc != 1:
            raise ArithmeticError(f"g_{k} has leading coefficient {lc}")
        gens.append(g)
        leading.append(lead)
    return GroebnerBasis(n, tuple(gens), tuple(leading), classical)


@lru_cache(maxsize=None)
def _tails(n: int, classical: bool) -> tuple:
    # g_k minus its leading term, shifted so the leading monomial sits at the origin
    gb = groebner_basis(n, classical)
    out = []
    for g, lead in zip(gb.gens, gb.leading):
        lead_key = lead + (0,) * (n - 1)
        tail = [(tuple(a - b for a, b in zip(key, lead_key)), c) for key, c in g.items() if key != lead_key]
        out.append(tuple(tail))
    return tuple(out)


def _reduce_term(terms: dict, key: tuple, c: int, tail: tuple, push=None) -> None:
    for shift, d in tail:
        k2 = tuple(a + b for a, b in zip(key, shift))
        v = terms.get(k2, 0) - c * d
        if v:
            if k2 not in terms and push is not None:
                push(k2)
            terms[k2] = v
        else:
            terms.pop(k2, None)


def normal_form(F: Polynomial, n: int | None = None, *, classical: bool = False,
                rng: random.Random | None = None) -> Polynomial:
    """
    Fully reduced remainder of ``F`` modulo the quantized ideal.

    By default reduces the largest reducible term first.  Passing ``rng``
    reduces a random reducible term by a random applicable generator at every
    step instead; the result must not change.
    """
    n = F.n if n is None else n
    gb = groebner_basis(n, classical)
    tails = _tails(n, classical)
    terms = dict(F.terms)
    if rng is not None:
        while True:
            reducible = [k for k in terms if gb.reducer(k[:n])]
            if not reducible:
                break
            key = rng.choice(sorted(reducible))
            g = rng.choice(gb.reducer(key[:n]))
            c = terms.pop(key)
            _reduce_term(terms, key, c, tails[g])
        return Polynomial(n, terms)

    heap = [(_neg_key(k, n), k) for k in terms]
    heapq.heapify(heap)
    seen = set(terms)

    def push(k):
        if k not in seen:
            seen.add(k)
            heapq.heappush(heap, (_neg_key(k, n), k))

    while heap:
        _, key = heapq.heappop(heap)
        seen.discard(key)
        c = terms.get(key)
        if not c:
            continue
        gs = gb.reducer(key[:n])
        if gs:
            del terms[key]
            _reduce_term(terms, key, c, tails[gs[0]], push)
    return Polynomial(n, terms)


def _neg_key(k: tuple, n: int) -> tuple:
    return tuple(-v for v in term_key(k[:n])) + tuple(-v for v in k[n:])


def bracket(F: Polynomial, n: int | None = None) -> Polynomial:
    """Coefficient of the staircase monomial in the normal form (a polynomial in q)."""
    n = F.n if n is None else n
    return normal_form(F, n).x_coefficient(staircase_exponent(n))


@lru_cache(maxsize=None)
def _schubert_solver(n: int) -> SpanSolver:
    return SpanSolver([(w, {k[:n]: c for k, c in f.items()}) for w, f in schubert_table(n).items()])


def expand_schubert(f: Polynomial) -> dict[Permutation, int]:
    """Integer coefficients of a q-free element of ``A_n`` in the classical Schubert basis."""
    n = f.n
    if not f.is_q_free():
        raise ValueError("expand_schubert needs a q-free polynomial")
    return _schubert_solver(n).integer_coordinates({k[:n]: c for k, c in f.items()})


def expand_qschubert(F: Polynomial, n: int | None = None, *, classical: bool = False) -> dict[Permutation, Polynomial]:
    """
    Coefficients ``c_w(q)`` with ``normal_form(F) == sum c_w(q) S^q_w``.

    Eliminates from the top x-degree downward: the top-degree part of each
    q-slice is expanded in classical Schubert polynomials, and the
    corresponding quantum Schubert polynomials are subtracted.  With
    ``classical=True`` everything happens at ``q = 0``.
    """
    n = F.n if n is None else n
    basis = schubert_table(n) if classical else qschubert_table(n)
    residual = normal_form(F, n, classical=classical)
    coeffs: dict = defaultdict(lambda: Polynomial.zero(n))
    while residual:
        top = residual.x_degree()
        layer = Polynomial(n, {k: c for k, c in residual.items() if sum(k[:n]) == top})
        for qexp, part in layer.by_q().items():
            qmono = Polynomial.monomial(n, (), qexp)
            for w, a in expand_schubert(part).items():
                coeffs[w] = coeffs[w] + qmono.scale(a)
                residual = residual - (basis[w] * qmono).scale(a)
        if residual and residual.x_degree() >= top:
            raise ArithmeticError("quantum Schubert expansion failed to lower the x-degree")
    return {w: c for w, c in sorted(coeffs.items(), key=lambda t: (t[0].length, t[0].images)) if c}


def classical_structure_constants(u: Permutation, v: Permutation) -> dict[Permutation, int]:
    """``c^w_{uv}``: coefficients of ``S_u S_v`` modulo the classical ideal."""
    table = schubert_table(u.n)
    expansion = expand_qschubert(table[u] * table[v], classical=True)
    return {w: c.constant_term() for w, c in expansion.items()}


def dimension_condition(ws: Sequence[Permutation], d: Sequence[int], n: int) -> bool:
    return sum(w.length for w in ws) == comb(n, 2) + 2 * sum(d)


@lru_cache(maxsize=65536)
def _reduced_product(ws: tuple[Permutation, ...]) -> Polynomial:
    n = ws[0].n
    table = qschubert_table(n)
    if len(ws) == 1:
        return table[ws[0]]
    return normal_form(_reduced_product(ws[:-1]) * table[ws[-1]], n)


def gw_invariants(ws: Sequence[Permutation], n: int | None = None) -> Polynomial:
    """``<S^q_{w_1} ... S^q_{w_k}>`` as a polynomial in q (coefficient of ``q^d`` is the invariant)."""
    ws = tuple(ws)
    n = ws[0].n if n is None else n
    if any(w.n != n for w in ws):
        raise ValueError(f"all permutations must lie in S_{n}")
    # order-independent, so sort to share the cache
    return _reduced_product(tuple(sorted(ws))).x_coefficient(staircase_exponent(n))


def gw_invariant(ws: Sequence[Permutation], d: Sequence[int], n: int | None = None) -> int:
    """Coefficient of ``q^d x^delta`` in the normal form of ``prod S^q_{w_i}``."""
    ws = tuple(ws)
    n = ws[0].n if n is None else n
    d = tuple(d)
    if len(d) != n - 1 or min(d, default=0) < 0:
        raise ValueError(f"degree {d} must have {n - 1} nonnegative entries")
    if not dimension_condition(ws, d, n):
        return 0
    return gw_invariants(ws, n).coefficient((), d)


@dataclass(frozen=True, order=True)
class GWResult:
    n: int
    u: Permutation
    v: Permutation
    w: Permutation
    d: tuple[int, ...]
    value: int
    method: str = "groebner"

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "u": list(self.u.images),
            "v": list(self.v.images),
            "w": list(self.w.images),
            "d": list(self.d),
            "value": self.value,
            "method": self.method,
        }

    @classmethod
    def from_json(cls, record: dict) -> GWResult:
        return cls(
            n=int(record["n"]),
            u=Permutation(tuple(record["u"])),
            v=Permutation(tuple(record["v"])),
            w=Permutation(tuple(record["w"])),
            d=tuple(int(x) for x in record["d"]),
            value=int(record["value"]),
            method=str(record.get("method", "groebner")),
        )


def admissible_degrees(total: int, max_d: Sequence[int]) -> list[tuple[int, ...]]:
    """All ``d <= max_d`` componentwise with ``sum(d) == total``."""
    return [d for d in itertools.product(*(range(m + 1) for m in max_d)) if sum(d) == total]


def _table_rows(n: int, max_d: tuple, u: Permutation, method: str) -> list[GWResult]:
    ell = comb(n, 2)
    rows = []
    perms = list(all_permutations(n))
    for v in perms:
        for w in perms:
            excess = u.length + v.length + w.length - ell
            if excess < 0 or excess % 2:
                continue
            degrees = admissible_degrees(excess // 2, max_d)
            if not degrees:
                continue
            if method == "bruhat":
                from .quadratic import gw_via_bruhat_all

                gen = gw_via_bruhat_all(u, v, w)
            else:
                gen = gw_invariants((u, v, w), n)
            for d in degrees:
                rows.append(GWResult(n, u, v, w, d, gen.coefficient((), d), method))
    return rows


def gw_table(n: int, max_d: Sequence[int], *, method: str = "groebner", workers: int = 1) -> list[GWResult]:
    """
    Every ordered triple ``(u, v, w)`` and degree ``d <= max_d`` meeting the
    dimension condition, with its invariant.  Sorted by ``(u, v, w, d)``.
    """
    max_d = tuple(max_d)
    if len(max_d) != n - 1:
        raise ValueError(f"max_d must have {n - 1} entries")
    perms = list(all_permutations(n))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = pool.map(_table_rows, *zip(*[(n, max_d, u, method) for u in perms]))
            rows = [r for chunk in chunks for r in chunk]
    else:
        rows = [r for u in perms for r in _table_rows(n, max_d, u, method)]
    return sorted(rows)


def table_is_symmetric(rows: Iterable[GWResult]) -> bool:
    """Check that the value does not depend on the order of ``(u, v, w)``."""
    values = {(r.u, r.v, r.w, r.d): r.value for r in rows}
    for (u, v, w, d), val in values.items():
        for p in itertools.permutations((u, v, w)):
            other = values.get(p + (d,))
            if other is not None and other != val:
                return False
    return True
