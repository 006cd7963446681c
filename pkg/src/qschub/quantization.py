"""
Quantum elementary symmetric functions, the commuting operators ``X_k``,
the quantization map, and quantum Schubert polynomials.

Two independent routes produce quantum Schubert polynomials:

* ``qschubert_substitution``: expand ``S_w`` in standard elementary
  monomials and replace each by its quantum analogue;
* ``qschubert_quantize``: quantize ``S_w`` directly with the operators ``X_k``.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Iterator, Mapping, Sequence

from .linalg import NotInSpan, SpanSolver
from .polyring import Polynomial, PolynomialError, divided_difference_t, term_key
from .schubert import schubert_table, staircase_exponent
from .symgroup import Permutation, all_permutations

__all__ = [
    "elementary",
    "quantum_e",
    "standard_indices",
    "check_standard_index",
    "standard_monomial",
    "quantum_standard_monomial",
    "standard_expand",
    "qschubert_substitution",
    "qschubert_quantize",
    "qschubert_table",
    "qschubert",
    "X_apply",
    "X_power_of_one",
    "apply_operator",
    "quantize",
    "quantum_multiply",
]


@lru_cache(maxsize=None)
def elementary(i: int, k: int, n: int) -> Polynomial:
    """``e_i(x_1, ..., x_k)`` in the ring with ``n`` x-variables."""
    if k > n or k < 0:
        raise PolynomialError(f"need 0 <= k <= n, got k={k}, n={n}")
    if i < 0 or i > k:
        return Polynomial.zero(n)
    if i == 0:
        return Polynomial.one(n)
    return elementary(i, k - 1, n) + Polynomial.x(n, k) * elementary(i - 1, k - 1, n)


@lru_cache(maxsize=None)
def quantum_e(i: int, k: int, n: int | None = None) -> Polynomial:
    """
    Coefficient of ``lambda^i`` in ``det(1 + lambda G_k)``.

    ``G_k`` is tridiagonal with diagonal ``x_1..x_k``, superdiagonal
    ``q_1..q_{k-1}`` and subdiagonal ``-1``, so the determinant obeys
    ``E^k_i = E^{k-1}_i + x_k E^{k-1}_{i-1} + q_{k-1} E^{k-2}_{i-2}``.
    Out-of-range ``i`` gives zero.
    """
    if n is None:
        n = max(k, 1)
    if k > n or k < 0:
        raise PolynomialError(f"need 0 <= k <= n, got k={k}, n={n}")
    if i < 0 or i > k:
        return Polynomial.zero(n)
    if i == 0:
        return Polynomial.one(n)
    result = quantum_e(i, k - 1, n) + Polynomial.x(n, k) * quantum_e(i - 1, k - 1, n)
    if k >= 2:
        result = result + Polynomial.q(n, k - 1) * quantum_e(i - 2, k - 2, n)
    return result


# ---------- standard elementary monomials ----------
def standard_indices(n: int) -> Iterator[tuple[int, ...]]:
    """All ``(i_1, ..., i_{n-1})`` with ``0 <= i_k <= k``; there are ``n!`` of them."""
    return product(*(range(k + 1) for k in range(1, n)))


def check_standard_index(idx: Sequence[int], n: int) -> tuple[int, ...]:
    idx = tuple(idx)
    if len(idx) != n - 1 or any(not 0 <= i <= k for k, i in enumerate(idx, start=1)):
        raise ValueError(f"{idx} is not a standard index for n={n}")
    return idx


@lru_cache(maxsize=None)
def _standard_product(idx: tuple, n: int, quantum: bool) -> Polynomial:
    factor = quantum_e if quantum else elementary
    result = Polynomial.one(n)
    for k, i in enumerate(idx, start=1):
        if i:
            result = result * factor(i, k, n)
    return result


def standard_monomial(idx: Sequence[int], n: int | None = None) -> Polynomial:
    n = len(idx) + 1 if n is None else n
    return _standard_product(check_standard_index(idx, n), n, False)


def quantum_standard_monomial(idx: Sequence[int], n: int | None = None) -> Polynomial:
    n = len(idx) + 1 if n is None else n
    return _standard_product(check_standard_index(idx, n), n, True)


def _xvector(f: Polynomial) -> dict:
    n = f.n
    return {k[:n]: c for k, c in f.items()}


@lru_cache(maxsize=None)
def _standard_solver(n: int) -> SpanSolver:
    return SpanSolver([(idx, _xvector(standard_monomial(idx, n))) for idx in standard_indices(n)])


def standard_expand(f: Polynomial) -> dict[tuple[int, ...], int]:
    """Integer coefficients of ``f`` in the standard elementary monomial basis of ``A_n``."""
    n = f.n
    if not f.is_q_free():
        raise ValueError("standard_expand needs a q-free polynomial")
    stair = staircase_exponent(n)
    if any(any(a > b for a, b in zip(k[:n], stair)) for k in f):
        raise ValueError(f"{f} is not supported on divisors of the staircase")
    try:
        coeffs = _standard_solver(n).integer_coordinates(_xvector(f))
    except NotInSpan:
        raise ValueError(f"{f} is not in A_{n}") from None
    return dict(sorted(coeffs.items()))


def qschubert_substitution(w: Permutation) -> Polynomial:
    n = w.n
    result = Polynomial.zero(n)
    for idx, c in standard_expand(schubert_table(n)[w]).items():
        result = result + quantum_standard_monomial(idx, n).scale(c)
    return result


@lru_cache(maxsize=None)
def qschubert_table(n: int) -> dict[Permutation, Polynomial]:
    """Quantum Schubert polynomials of ``S_n``; shared, do not mutate."""
    return {w: qschubert_substitution(w) for w in all_permutations(n)}


def qschubert(w: Permutation) -> Polynomial:
    return qschubert_table(w.n)[w]


# ---------- the operators X_k ----------
def X_apply(k: int, f: Polynomial) -> Polynomial:
    """``X_k f = x_k f - sum_{i<k} q_ik d_(ik) f + sum_{j>k} q_kj d_(kj) f``."""
    n = f.n
    if not 1 <= k <= n:
        raise PolynomialError(f"X_{k} undefined for n={n}")
    result = Polynomial.x(n, k) * f
    for i in range(1, k):
        d = divided_difference_t(i, k, f)
        if d:
            result = result - Polynomial.q_range(n, i, k) * d
    for j in range(k + 1, n + 1):
        d = divided_difference_t(k, j, f)
        if d:
            result = result + Polynomial.q_range(n, k, j) * d
    return result


@lru_cache(maxsize=None)
def X_power_of_one(xexp: tuple[int, ...]) -> Polynomial:
    """``X_1^{a_1} ... X_n^{a_n}`` applied to 1."""
    n = len(xexp)
    if not any(xexp):
        return Polynomial.one(n)
    k = max(i for i, a in enumerate(xexp) if a)
    prev = list(xexp)
    prev[k] -= 1
    return X_apply(k + 1, X_power_of_one(tuple(prev)))


def apply_operator(G: Polynomial, f: Polynomial) -> Polynomial:
    """Evaluate ``G(X_1, ..., X_n)`` (q-coefficients act by multiplication) on ``f``."""
    n = G.n
    result = Polynomial.zero(n)
    for xexp, coeff in G.by_x().items():
        g = f
        for k, a in enumerate(xexp, start=1):
            for _ in range(a):
                g = X_apply(k, g)
        result = result + coeff * g
    return result


def quantize(g: Polynomial, n: int | None = None) -> Polynomial:
    """
    The unique ``G`` with ``G(X_1, ..., X_n)(1) == g``.

    Peels off the largest residual x-monomial ``c q^e x^a`` and subtracts
    ``c q^e X^a(1)``, which agrees with it up to strictly lower x-degree.
    """
    n = g.n if n is None else n
    if g.n != n:
        raise PolynomialError(f"ring mismatch: n={g.n} vs n={n}")
    residual = dict(g.terms)
    out: dict = {}
    while residual:
        key = max(residual, key=lambda k: (term_key(k[:n]), k[n:]))
        c = residual[key]
        xexp, qexp = key[:n], key[n:]
        out[key] = out.get(key, 0) + c
        image = X_power_of_one(xexp)
        top = sum(xexp)
        for k2, c2 in image.items():
            if k2[:n] != xexp and sum(k2[:n]) >= top:
                raise ArithmeticError(f"X^{xexp}(1) does not drop x-degree; quantization would not terminate")
            k3 = tuple(a + b for a, b in zip(k2, (0,) * n + qexp))
            v = residual.get(k3, 0) - c * c2
            if v:
                residual[k3] = v
            else:
                residual.pop(k3, None)
        if key in residual:
            raise ArithmeticError("leading term of X^a(1) is not x^a")
    return Polynomial(n, out)


def quantum_multiply(f: Polynomial, g: Polynomial, n: int | None = None) -> Polynomial:
    """``f * g = F(X)(G(X)(1)) = F(X)(g)`` with ``F`` the quantization of ``f``."""
    n = f.n if n is None else n
    if f.n != n or g.n != n:
        raise PolynomialError("ring mismatch")
    return apply_operator(quantize(f, n), g)


def qschubert_quantize(w: Permutation) -> Polynomial:
    return quantize(schubert_table(w.n)[w])
