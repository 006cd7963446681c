import itertools
import random

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from qschub.polyring import Polynomial, parse_polynomial, specialize_q
from qschub.quantization import (
    X_apply,
    apply_operator,
    elementary,
    qschubert_quantize,
    qschubert_substitution,
    qschubert_table,
    quantize,
    quantum_e,
    quantum_multiply,
    quantum_standard_monomial,
    standard_expand,
    standard_indices,
    standard_monomial,
)
from qschub.schubert import schubert_table, staircase_divisors, staircase_exponent
from qschub.symgroup import Permutation, all_permutations, from_word

from conftest import random_poly
from test_polyring import from_sympy

P = lambda *xs: Permutation(xs)


def p(text, n=3):
    return parse_polynomial(text, n)


def quantum_e_by_minors(i, k, n):
    # coefficient of lambda^i in det(1 + lambda G) is the sum of the i x i principal minors of G
    xs = sympy.symbols(f"x1:{n + 1}")
    qs = sympy.symbols(f"q1:{n}")
    G = sympy.zeros(k, k)
    for a in range(k):
        G[a, a] = xs[a]
        if a + 1 < k:
            G[a, a + 1] = qs[a]
            G[a + 1, a] = -1
    total = sum((G.extract(list(rows), list(rows)).det() for rows in itertools.combinations(range(k), i)),
                sympy.Integer(0)) if i else sympy.Integer(1)
    return from_sympy(total, n)


def test_quantum_e_examples():
    assert quantum_e(1, 3, 3) == p("x1 + x2 + x3")
    assert quantum_e(2, 2, 3) == p("x1*x2 + q1")
    assert quantum_e(3, 3, 3) == p("x1*x2*x3 + q1*x3 + q2*x1")
    assert quantum_e(0, 2, 3) == 1
    assert quantum_e(4, 3, 3) == 0


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_quantum_e_against_principal_minors(n):
    for k in range(1, n + 1):
        for i in range(0, k + 1):
            f = quantum_e(i, k, n)
            assert f == quantum_e_by_minors(i, k, n)
            assert f.is_homogeneous(i)
            assert specialize_q(f, [0] * (n - 1)) == elementary(i, k, n)


def test_standard_monomials():
    assert standard_monomial((0, 1)) == p("x1 + x2")
    assert standard_monomial((1, 2)) == p("x1^2*x2")
    assert quantum_standard_monomial((0, 2)) == p("x1*x2 + q1")
    assert len(list(standard_indices(4))) == 24
    with pytest.raises(ValueError):
        standard_monomial((2, 0))


def test_standard_expand_examples():
    assert standard_expand(p("x1^2*x2")) == {(1, 2): 1}
    assert standard_expand(p("x1*x2")) == {(0, 2): 1}
    assert standard_expand(p("x1^2")) == {(1, 1): 1, (0, 2): -1}
    with pytest.raises(ValueError):
        standard_expand(p("x2^2"))
    with pytest.raises(ValueError):
        standard_expand(p("q1"))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_standard_expand_reconstructs(n, rng):
    divisors = staircase_divisors(n)
    for _ in range(10):
        f = Polynomial(n, {d + (0,) * (n - 1): rng.randint(-4, 4) for d in rng.sample(divisors, min(5, len(divisors)))})
        coeffs = standard_expand(f)
        assert all(isinstance(c, int) for c in coeffs.values())
        back = sum((standard_monomial(idx, n).scale(c) for idx, c in coeffs.items()), Polynomial.zero(n))
        assert back == f


def test_s3_quantum_schubert():
    expected = {
        P(1, 2, 3): "1",
        P(2, 1, 3): "x1",
        P(1, 3, 2): "x1 + x2",
        P(2, 3, 1): "x1*x2 + q1",
        P(3, 1, 2): "x1^2 - q1",
        P(3, 2, 1): "x1^2*x2 + q1*x1",
    }
    for w, text in expected.items():
        assert qschubert_substitution(w) == p(text)
        assert qschubert_quantize(w) == p(text)


def test_X_examples():
    assert X_apply(1, Polynomial.one(2)) == parse_polynomial("x1", 2)
    assert X_apply(1, parse_polynomial("x1", 2)) == parse_polynomial("x1^2 + q1", 2)
    assert X_apply(2, parse_polynomial("x1", 2)) == parse_polynomial("x1*x2 - q1", 2)


def test_X_raises_degree(rng):
    for _ in range(20):
        f = random_poly(rng, 4, 4, qs=False)
        d = rng.randint(0, 4)
        h = Polynomial(4, {k: c for k, c in f.items() if sum(k[:4]) == d})
        for k in range(1, 5):
            image = X_apply(k, h)
            assert not image or image.is_homogeneous(d + 1)


def test_quantize_examples():
    assert quantize(p("x1")) == p("x1")
    assert quantize(p("x1^2")) == p("x1^2 - q1")
    assert quantize(p("x1*x2")) == p("x1*x2 + q1")


@pytest.mark.parametrize("n", [2, 3, 4])
def test_quantize_postcondition(n, rng):
    for _ in range(10):
        g = random_poly(rng, n, 5)
        G = quantize(g)
        assert apply_operator(G, Polynomial.one(n)) == g


def test_quantum_multiply_examples():
    f = p("x1^2 - 3*x2 + q2")
    assert quantum_multiply(Polynomial.one(3), f) == f
    assert quantum_multiply(parse_polynomial("x1", 2), parse_polynomial("x1", 2)) == parse_polynomial("x1^2 + q1", 2)
    assert quantum_multiply(parse_polynomial("x1", 2), parse_polynomial("x2", 2)) == parse_polynomial("x1*x2 - q1", 2)


polys3 = st.integers(0, 10**6).map(lambda s: random_poly(random.Random(s), 3, 3, terms=3))


@settings(max_examples=40, deadline=None)
@given(polys3, polys3, polys3)
def test_quantum_multiplication_is_commutative_associative(f, g, h):
    fg = quantum_multiply(f, g)
    assert fg == quantum_multiply(g, f)
    assert quantum_multiply(fg, h) == quantum_multiply(f, quantum_multiply(g, h))
    zero = [0, 0]
    if f.is_q_free() and g.is_q_free():
        assert specialize_q(fg, zero) == f * g


@pytest.mark.parametrize("n", [2, 3, 4])
def test_X_commute_on_staircase_divisors(n):
    for xexp in staircase_divisors(n):
        m = Polynomial.monomial(n, xexp)
        for j, k in itertools.combinations(range(1, n + 1), 2):
            assert X_apply(j, X_apply(k, m)) == X_apply(k, X_apply(j, m))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_quantize_elementary(n):
    for i in range(1, n + 1):
        assert quantize(elementary(i, n, n)) == quantum_e(i, n, n)
    for idx in standard_indices(n):
        assert quantize(standard_monomial(idx, n)) == quantum_standard_monomial(idx, n)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_grading_limit_support_and_routes(n):
    stair = staircase_exponent(n)
    classical = schubert_table(n)
    for w, f in qschubert_table(n).items():
        assert f == qschubert_quantize(w)
        assert f.is_homogeneous(w.length)
        assert specialize_q(f, [0] * (n - 1)) == classical[w]
        assert all(all(a <= b for a, b in zip(k[:n], stair)) for k in f)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_cycles_give_quantum_elementary(n):
    table = qschubert_table(n)
    for k in range(1, n):
        for i in range(0, k + 1):
            w = from_word(n, range(k - i + 1, k + 1))
            assert table[w] == quantum_e(i, k, n)


def test_quantization_turns_quantum_product_into_ordinary_product():
    for n in (2, 3):
        c, q = schubert_table(n), qschubert_table(n)
        for u, v in itertools.product(all_permutations(n), repeat=2):
            assert quantize(quantum_multiply(c[u], c[v])) == q[u] * q[v]
    rng = random.Random(4)
    c, q = schubert_table(4), qschubert_table(4)
    perms = list(all_permutations(4))
    for _ in range(25):
        u, v = rng.choice(perms), rng.choice(perms)
        assert quantize(quantum_multiply(c[u], c[v])) == q[u] * q[v]
