"""Invariant suite behind ``qschub verify --n N``."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from math import comb
from typing import Callable, Iterator

from . import grobner, quadratic
from .polyring import (
    Polynomial,
    apply_perm,
    divided_difference,
    divided_difference_word,
    specialize_q,
)
from .quantization import (
    X_apply,
    elementary,
    qschubert_quantize,
    qschubert_table,
    quantize,
    quantum_e,
    quantum_standard_monomial,
    standard_indices,
    standard_monomial,
)
from .schubert import schubert_table, staircase_divisors, staircase_exponent
from .symgroup import (
    Permutation,
    all_permutations,
    from_word,
    identity,
    longest,
    multiply,
    reduced_word,
    right_transposition,
)


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


def _first_failure(cases: Iterator[tuple[bool, str]]) -> tuple[bool, str]:
    for ok, what in cases:
        if not ok:
            return False, what
    return True, ""


def random_polynomial(rng: random.Random, n: int, max_degree: int, terms: int = 6, qs: bool = True) -> Polynomial:
    out = {}
    for _ in range(terms):
        xexp = [0] * n
        for _ in range(rng.randint(0, max_degree)):
            xexp[rng.randrange(n)] += 1
        qexp = [0] * (n - 1)
        if qs and n > 1 and rng.random() < 0.5:
            qexp[rng.randrange(n - 1)] += 1
        out[tuple(xexp) + tuple(qexp)] = rng.randint(-5, 5)
    return Polynomial(n, out)


def check_symgroup(n):
    def cases():
        for w in all_permutations(n):
            word = reduced_word(w)
            yield len(word) == w.length and from_word(n, word) == w, f"reduced word of {w}"
            yield multiply(w, w.inverse()) == identity(n), f"inverse of {w}"
            for i, j in itertools.combinations(range(1, n + 1), 2):
                v, delta = right_transposition(w, i, j)
                yield delta % 2 == 1 and v.length - w.length == delta, f"{w} t_{i}{j}"
        yield longest(n).length == comb(n, 2), "length of w_o"
    return _first_failure(cases())


def check_divided_differences(n, rng):
    def cases():
        for _ in range(30):
            f = random_polynomial(rng, n, 6)
            g = random_polynomial(rng, n, 3)
            for i in range(1, n):
                si = from_word(n, [i])
                d = divided_difference(i, f)
                lin = Polynomial.x(n, i) - Polynomial.x(n, i + 1)
                yield lin * d == f - apply_perm(si, f), f"d_{i} quotient on {f}"
                yield not divided_difference(i, d), f"d_{i}^2 on {f}"
                yield (divided_difference(i, f * g)
                       == d * g + apply_perm(si, f) * divided_difference(i, g)), f"Leibniz d_{i}"
                if i + 1 < n:
                    yield (divided_difference_word([i, i + 1, i], f)
                           == divided_difference_word([i + 1, i, i + 1], f)), f"braid at {i}"
                for j in range(i + 2, n):
                    yield (divided_difference_word([i, j], f)
                           == divided_difference_word([j, i], f)), f"d_{i} d_{j} commute"
    return _first_failure(cases())


def check_schubert(n):
    table = schubert_table(n)
    stair = staircase_exponent(n)

    def cases():
        for w, f in table.items():
            yield f.is_homogeneous(w.length) and all(c > 0 for c in f.terms.values()), f"S_{w} shape"
            yield all(all(a <= b for a, b in zip(k[:n], stair)) for k in f), f"S_{w} divides staircase"
            for i in range(1, n):
                v, delta = right_transposition(w, i, i + 1)
                expected = table[v] if delta == -1 else Polynomial.zero(n)
                yield divided_difference(i, f) == expected, f"d_{i} S_{w}"
        for i in range(1, n):
            yield table[from_word(n, [i])] == elementary(1, i, n), f"S_s{i}"
    return _first_failure(cases())


def check_quantization(n):
    qtable = qschubert_table(n)
    ctable = schubert_table(n)
    stair = staircase_exponent(n)

    def cases():
        for w in all_permutations(n):
            f = qtable[w]
            yield f == qschubert_quantize(w), f"routes disagree on {w}"
            yield f.is_homogeneous(w.length), f"homogeneity of S^q_{w}"
            yield specialize_q(f, [0] * (n - 1)) == ctable[w], f"q=0 limit of S^q_{w}"
            yield all(all(a <= b for a, b in zip(k[:n], stair)) for k in f), f"S^q_{w} not supported in A_n"
        for k in range(1, n):
            for i in range(0, k + 1):
                w = from_word(n, list(range(k - i + 1, k + 1)))
                yield qtable[w] == quantum_e(i, k, n), f"cycle formula S^q = E^{k}_{i}"
        for i in range(1, n + 1):
            yield quantize(elementary(i, n, n)) == quantum_e(i, n, n), f"quantize(e_{i})"
        for idx in standard_indices(n):
            yield (quantize(standard_monomial(idx, n))
                   == quantum_standard_monomial(idx, n)), f"quantize(e_{idx})"
        for xexp in staircase_divisors(n):
            m = Polynomial.monomial(n, xexp)
            for j, k in itertools.combinations(range(1, n + 1), 2):
                yield X_apply(j, X_apply(k, m)) == X_apply(k, X_apply(j, m)), f"X_{j} X_{k} on x^{xexp}"
    return _first_failure(cases())


def check_grobner(n, rng):
    gb = grobner.groebner_basis(n)
    stair = staircase_exponent(n)

    def cases():
        yield list(gb.leading) == [tuple(k if i == n - k else 0 for i in range(n)) for k in range(1, n + 1)], \
            "leading monomials"
        for _ in range(40):
            f = random_polynomial(rng, n, 6)
            nf = grobner.normal_form(f)
            yield all(all(a <= b for a, b in zip(k[:n], stair)) for k in nf), f"normal form of {f} not in A_n"
            yield grobner.normal_form(nf) == nf, f"idempotence on {f}"
            yield grobner.normal_form(f, rng=rng) == nf, f"schedule dependence on {f}"
            g = gb.gens[rng.randrange(n)]
            yield not grobner.normal_form(f * g), f"ideal membership of {f} * g"
        qtable = qschubert_table(n)
        perms = list(all_permutations(n))
        for u, v in itertools.combinations_with_replacement(perms, 2):
            exp = grobner.expand_qschubert(qtable[u] * qtable[v])
            yield all(c > 0 for poly in exp.values() for c in poly.terms.values()), f"positivity of S^q_{u} S^q_{v}"
    return _first_failure(cases())


def check_gw(n):
    perms = list(all_permutations(n))
    w0 = longest(n)
    max_d = (2,) * (n - 1)

    def cases():
        rows = grobner.gw_table(n, max_d)
        yield grobner.table_is_symmetric(rows), "table symmetry"
        yield all(r.value >= 0 for r in rows), "nonnegativity"
        for r in rows:
            other = quadratic.gw_via_bruhat(r.u, r.v, r.w, r.d, n)
            yield other == r.value, f"oracles disagree at {r.u}, {r.v}, {r.w}, d={r.d}: {r.value} vs {other}"
        for u, v in itertools.product(perms, repeat=2):
            c1 = grobner.classical_structure_constants(u, v)
            c2 = quadratic.classical_bruhat_constants(u, v)
            yield c1 == c2, f"classical constants for {u}, {v}"
            for w in perms:
                gw = grobner.gw_invariant((u, v, w), (0,) * (n - 1), n)
                yield gw == c1.get(multiply(w0, w), 0), f"d=0 invariant at {u}, {v}, {w}"
        # dimension filter, any degree up to 2
        for u, v, w in itertools.product(perms, repeat=3):
            for d in itertools.product(range(3), repeat=n - 1):
                if not grobner.dimension_condition((u, v, w), d, n):
                    poly = grobner.gw_invariants((u, v, w), n)
                    yield poly.coefficient((), d) == 0, f"dimension filter at {u}, {v}, {w}, {d}"
    return _first_failure(cases())


def check_quadratic(n):
    G = quadratic.GroupAlgebraElement
    qtable = qschubert_table(n)

    def cases():
        for quantum in (False, True):
            res = quadratic.check_representation_relations(n, quantum)
            yield res.ok, "; ".join(res.failures[:3])
        for w in all_permutations(n):
            a = G.basis(w)
            for j, k in itertools.combinations(range(1, n + 1), 2):
                for quantum in (False, True):
                    lhs = quadratic.dunkl_apply(j, quadratic.dunkl_apply(k, a, quantum=quantum), quantum=quantum)
                    rhs = quadratic.dunkl_apply(k, quadratic.dunkl_apply(j, a, quantum=quantum), quantum=quantum)
                    yield lhs == rhs, f"theta_{j} theta_{k} commute on {w} (quantum={quantum})"
            for i in range(1, n + 1):
                yield not quadratic.eval_at_dunkl(elementary(i, n, n), a, quantum=False), f"e_{i}(theta) on {w}"
                yield not quadratic.eval_at_dunkl(quantum_e(i, n, n), a), f"E_{i}(theta) on {w}"
            yield quadratic.eval_at_dunkl(qtable[w], G.basis(identity(n))) == a, f"S^q_{w}(theta) 1 != {w}"
            for j in range(1, n + 1):
                lhs = quadratic.dunkl_apply(j, a)
                exp = grobner.expand_qschubert(Polynomial.x(n, j) * qtable[w])
                yield lhs == G(n, exp), f"quantum Monk at x_{j} S^q_{w}"
    return _first_failure(cases())


def run_verification(n: int, seed: int = 0) -> list[CheckResult]:
    if n < 1:
        raise ValueError("n must be positive")
    rng = random.Random(seed)
    checks: list[tuple[str, Callable[[], tuple[bool, str]]]] = [
        ("symgroup: reduced words, lengths, transpositions", lambda: check_symgroup(n)),
        ("polyring: divided differences (nilpotence, braid, Leibniz)", lambda: check_divided_differences(n, rng)),
        ("schubert: homogeneity, positivity, descent recursion", lambda: check_schubert(n)),
        ("quantization: routes, grading, q=0 limit, support, cycles, X commutation", lambda: check_quantization(n)),
        ("grobner: basis, normal forms, product positivity", lambda: check_grobner(n, rng)),
        ("gw: oracle agreement, classical limit, dimension filter", lambda: check_gw(n)),
        ("quadratic: relations, Dunkl elements, quantum Monk", lambda: check_quadratic(n)),
    ]
    if n == 1:
        checks = checks[:1] + checks[2:4]
    results = []
    for name, fn in checks:
        ok, detail = fn()
        results.append(CheckResult(name, ok, detail))
    return results
