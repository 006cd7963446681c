"""
Sparse integer polynomials in ``x_1..x_n`` and ``q_1..q_{n-1}``.

A term is keyed by one flat exponent tuple: the first ``n`` entries are the
x-exponents and the remaining ``n - 1`` are the q-exponents.  The grading is
``deg x_i = 1``, ``deg q_j = 2``.  The term order only looks at x-exponents;
q-monomials ride along as coefficient data.
"""

from __future__ import annotations

import re
from collections import defaultdict
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Mapping, Sequence

from .symgroup import Permutation, reduced_word, transposition

__all__ = [
    "Polynomial",
    "PolynomialError",
    "apply_perm",
    "divided_difference",
    "divided_difference_w",
    "divided_difference_t",
    "compare_terms",
    "term_key",
    "specialize_q",
    "parse_polynomial",
]


class PolynomialError(ValueError):
    pass


def _add_keys(a: tuple, b: tuple) -> tuple:
    return tuple(s + t for s, t in zip(a, b))


class Polynomial:
    """Immutable sparse polynomial with arbitrary-precision integer coefficients."""

    __slots__ = ("n", "_terms", "_hash")

    def __init__(self, n: int, terms: Mapping[tuple, int] | None = None):
        if n < 1:
            raise PolynomialError("need at least one x variable")
        self.n = n
        width = 2 * n - 1
        clean = {}
        if terms:
            for key, c in terms.items():
                if c:
                    if len(key) != width:
                        raise PolynomialError(f"exponent {key} has wrong width for n={n}")
                    clean[tuple(key)] = int(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, n: int, terms: dict) -> Polynomial:
        # trusted constructor: terms already clean
        p = object.__new__(cls)
        p.n = n
        p._terms = terms
        p._hash = None
        return p

    # ---------- constructors ----------
    @classmethod
    def zero(cls, n: int) -> Polynomial:
        return cls(n)

    @classmethod
    def constant(cls, n: int, c: int) -> Polynomial:
        return cls(n, {(0,) * (2 * n - 1): c})

    @classmethod
    def one(cls, n: int) -> Polynomial:
        return cls.constant(n, 1)

    @classmethod
    def monomial(cls, n: int, xexp: Sequence[int] = (), qexp: Sequence[int] = (), coeff: int = 1) -> Polynomial:
        xexp = tuple(xexp) + (0,) * (n - len(xexp))
        qexp = tuple(qexp) + (0,) * (n - 1 - len(qexp))
        if len(xexp) != n or len(qexp) != n - 1 or min(xexp + qexp, default=0) < 0:
            raise PolynomialError(f"bad exponents {xexp}, {qexp} for n={n}")
        return cls(n, {xexp + qexp: coeff})

    @classmethod
    def x(cls, n: int, i: int) -> Polynomial:
        if not 1 <= i <= n:
            raise PolynomialError(f"x{i} not in ring with n={n}")
        key = [0] * (2 * n - 1)
        key[i - 1] = 1
        return cls._raw(n, {tuple(key): 1})

    @classmethod
    def q(cls, n: int, j: int) -> Polynomial:
        if not 1 <= j <= n - 1:
            raise PolynomialError(f"q{j} not in ring with n={n}")
        key = [0] * (2 * n - 1)
        key[n + j - 1] = 1
        return cls._raw(n, {tuple(key): 1})

    @classmethod
    def q_range(cls, n: int, i: int, j: int) -> Polynomial:
        """``q_i q_{i+1} ... q_{j-1}``."""
        key = [0] * (2 * n - 1)
        for k in range(i, j):
            key[n + k - 1] = 1
        return cls._raw(n, {tuple(key): 1})

    # ---------- access ----------
    @property
    def terms(self) -> Mapping[tuple, int]:
        return self._terms

    def items(self):
        return self._terms.items()

    def __iter__(self) -> Iterator[tuple]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def xexp(self, key: tuple) -> tuple:
        return key[: self.n]

    def qexp(self, key: tuple) -> tuple:
        return key[self.n :]

    def coefficient(self, xexp: Sequence[int] = (), qexp: Sequence[int] = ()) -> int:
        xexp = tuple(xexp) + (0,) * (self.n - len(xexp))
        qexp = tuple(qexp) + (0,) * (self.n - 1 - len(qexp))
        return self._terms.get(xexp + qexp, 0)

    def degree(self) -> int:
        """Weighted total degree (``deg q = 2``); ``-1`` for zero."""
        n = self.n
        return max((sum(k[:n]) + 2 * sum(k[n:]) for k in self._terms), default=-1)

    def x_degree(self) -> int:
        n = self.n
        return max((sum(k[:n]) for k in self._terms), default=-1)

    def is_homogeneous(self, degree: int | None = None) -> bool:
        n = self.n
        degs = {sum(k[:n]) + 2 * sum(k[n:]) for k in self._terms}
        if degree is not None:
            return degs <= {degree}
        return len(degs) <= 1

    def is_q_free(self) -> bool:
        n = self.n
        return all(not any(k[n:]) for k in self._terms)

    def is_x_free(self) -> bool:
        n = self.n
        return all(not any(k[:n]) for k in self._terms)

    def by_q(self) -> dict[tuple, Polynomial]:
        """Split into ``{qexp: q-free polynomial}``."""
        n = self.n
        zq = (0,) * (n - 1)
        parts = defaultdict(dict)
        for k, c in self._terms.items():
            parts[k[n:]][k[:n] + zq] = c
        return {qe: Polynomial._raw(n, t) for qe, t in parts.items()}

    def by_x(self) -> dict[tuple, Polynomial]:
        """Split into ``{xexp: x-free polynomial}`` (coefficients in q)."""
        n = self.n
        zx = (0,) * n
        parts = defaultdict(dict)
        for k, c in self._terms.items():
            parts[k[:n]][zx + k[n:]] = c
        return {xe: Polynomial._raw(n, t) for xe, t in parts.items()}

    def x_coefficient(self, xexp: Sequence[int]) -> Polynomial:
        """The coefficient of ``x^xexp``, a polynomial in q only."""
        n = self.n
        xexp = tuple(xexp)
        zx = (0,) * n
        return Polynomial._raw(n, {zx + k[n:]: c for k, c in self._terms.items() if k[:n] == xexp})

    def leading_xexp(self) -> tuple:
        n = self.n
        return max((k[:n] for k in self._terms), key=term_key)

    def constant_term(self) -> int:
        return self._terms.get((0,) * (2 * self.n - 1), 0)

    # ---------- arithmetic ----------
    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            if other.n != self.n:
                raise PolynomialError(f"ring mismatch: n={self.n} vs n={other.n}")
            return other
        if isinstance(other, int):
            return Polynomial.constant(self.n, other)
        return NotImplemented

    def __add__(self, other) -> Polynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for k, c in other._terms.items():
            v = terms.get(k, 0) + c
            if v:
                terms[k] = v
            else:
                terms.pop(k, None)
        return Polynomial._raw(self.n, terms)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial._raw(self.n, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other) -> Polynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> Polynomial:
        return (-self) + other

    def scale(self, c: int) -> Polynomial:
        if not c:
            return Polynomial.zero(self.n)
        return Polynomial._raw(self.n, {k: c * v for k, v in self._terms.items()})

    def __mul__(self, other) -> Polynomial:
        if isinstance(other, int):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: dict = defaultdict(int)
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                terms[tuple(a + b for a, b in zip(k1, k2))] += c1 * c2
        return Polynomial._raw(self.n, {k: c for k, c in terms.items() if c})

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Polynomial:
        if e < 0:
            raise PolynomialError("negative power")
        result = Polynomial.one(self.n)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def mul_monomial(self, key: tuple, c: int = 1) -> Polynomial:
        return Polynomial._raw(self.n, {_add_keys(k, key): c * v for k, v in self._terms.items()})

    def map_terms(self, fn: Callable[[tuple, int], Iterable[tuple[tuple, int]]]) -> Polynomial:
        terms: dict = defaultdict(int)
        for k, c in self._terms.items():
            for k2, c2 in fn(k, c):
                terms[k2] += c2
        return Polynomial._raw(self.n, {k: c for k, c in terms.items() if c})

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self._terms == ({(0,) * (2 * self.n - 1): other} if other else {})
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"Polynomial({self.n}, {str(self)!r})"

    def __str__(self) -> str:
        return format_polynomial(self)


# ---------- term order ----------
def term_key(xexp: Sequence[int]) -> tuple:
    """Sort key for the total degree / inverse lexicographic order (``x_1 < x_2 < ...``)."""
    return (sum(xexp),) + tuple(reversed(tuple(xexp)))


def compare_terms(a: Sequence[int], b: Sequence[int]) -> int:
    """Return 1, 0, or -1 as the x-exponent ``a`` is larger, equal, or smaller than ``b``."""
    ka, kb = term_key(a), term_key(b)
    return (ka > kb) - (ka < kb)


# ---------- printing and parsing ----------
def _display_key(n: int):
    def key(k):
        return (term_key(k[:n]), tuple(-e for e in k[n:]))

    return key


def format_term(n: int, key: tuple, c: int) -> tuple[str, str]:
    factors = []
    for j, e in enumerate(key[n:], start=1):
        if e:
            factors.append(f"q{j}" + (f"^{e}" if e > 1 else ""))
    for i, e in enumerate(key[:n], start=1):
        if e:
            factors.append(f"x{i}" + (f"^{e}" if e > 1 else ""))
    sign = "-" if c < 0 else "+"
    a = abs(c)
    if not factors:
        body = str(a)
    elif a == 1:
        body = "*".join(factors)
    else:
        body = f"{a}*" + "*".join(factors)
    return sign, body


def format_polynomial(f: Polynomial) -> str:
    """Canonical text: decreasing term order, q-monomials lexicographic."""
    if not f:
        return "0"
    n = f.n
    out = []
    for key in sorted(f.terms, key=_display_key(n), reverse=True):
        sign, body = format_term(n, key, f.terms[key])
        if not out:
            out.append(body if sign == "+" else "-" + body)
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


_FACTOR_RE = re.compile(r"^([xq])(\d+)(?:\^(\d+))?$")


def parse_polynomial(text: str, n: int) -> Polynomial:
    """
    Parse ``"x1^2*x2 + q1*x1"`` style text into a polynomial over ``n`` variables.

    Bare integer terms are accepted; whitespace is insignificant.
    """
    s = re.sub(r"\s+", "", text)
    if not s:
        raise PolynomialError("empty polynomial")
    width = 2 * n - 1
    terms: dict = defaultdict(int)
    # split at + or - that are not the first character
    pieces = re.findall(r"[+-]?[^+-]+", s)
    if "".join(pieces) != s:
        raise PolynomialError(f"cannot parse polynomial {text!r}")
    for piece in pieces:
        sign = -1 if piece[0] == "-" else 1
        body = piece.lstrip("+-")
        if not body:
            raise PolynomialError(f"dangling sign in {text!r}")
        coeff = sign
        key = [0] * width
        for tok in body.split("*"):
            if tok.isdigit():
                coeff *= int(tok)
                continue
            m = _FACTOR_RE.match(tok)
            if not m:
                raise PolynomialError(f"bad factor {tok!r} in {text!r}")
            var, idx, exp = m.group(1), int(m.group(2)), int(m.group(3) or 1)
            if var == "x":
                if not 1 <= idx <= n:
                    raise PolynomialError(f"x{idx} not in ring with n={n}")
                key[idx - 1] += exp
            else:
                if not 1 <= idx <= n - 1:
                    raise PolynomialError(f"q{idx} not in ring with n={n}")
                key[n + idx - 1] += exp
        terms[tuple(key)] += coeff
    return Polynomial(n, terms)


# ---------- symmetric group action and divided differences ----------
def apply_perm(w: Permutation, f: Polynomial) -> Polynomial:
    """
    Left action of ``S_n`` permuting the x-variables, ``x_i -> x_{w(i)}``; q untouched.

    This is the action with ``apply_perm(u, apply_perm(v, f)) == apply_perm(u * v, f)``.
    """
    n = f.n
    if w.n != n:
        raise PolynomialError(f"S_{w.n} does not act on ring with n={n}")
    images = w.images
    terms = {}
    for k, c in f.terms.items():
        new = [0] * n
        for i in range(n):
            new[images[i] - 1] = k[i]
        terms[tuple(new) + k[n:]] = c
    return Polynomial._raw(n, terms)


def _dd_monomial(i: int, key: tuple, c: int):
    # (x_i^p x_{i+1}^r - x_i^r x_{i+1}^p) / (x_i - x_{i+1})
    p, r = key[i - 1], key[i]
    if p == r:
        return
    sign = 1
    if p < r:
        p, r, sign = r, p, -1
    base = list(key)
    for t in range(p - r):
        base[i - 1] = r + t
        base[i] = p - 1 - t
        yield tuple(base), sign * c


def divided_difference(i: int, f: Polynomial) -> Polynomial:
    """``(x_i - x_{i+1})^{-1} (1 - s_i) f``."""
    if not 1 <= i <= f.n - 1:
        raise PolynomialError(f"no divided difference {i} for n={f.n}")
    return f.map_terms(lambda k, c: _dd_monomial(i, k, c))


def divided_difference_word(word: Sequence[int], f: Polynomial) -> Polynomial:
    """``d_{i_1} ... d_{i_l} f`` (rightmost operator applied first)."""
    for i in reversed(word):
        if not f:
            break
        f = divided_difference(i, f)
    return f


def divided_difference_w(w: Permutation, f: Polynomial) -> Polynomial:
    return divided_difference_word(reduced_word(w), f)


@lru_cache(maxsize=None)
def _transposition_word(n: int, i: int, j: int) -> tuple[int, ...]:
    return reduced_word(transposition(n, i, j))


def divided_difference_t(i: int, j: int, f: Polynomial) -> Polynomial:
    """The divided difference attached to the transposition ``t_ij``."""
    if not 1 <= i < j <= f.n:
        raise PolynomialError(f"need 1 <= i < j <= {f.n}, got ({i}, {j})")
    return divided_difference_word(_transposition_word(f.n, i, j), f)


def specialize_q(f: Polynomial, values: Sequence[int]) -> Polynomial:
    n = f.n
    if len(values) != n - 1:
        raise PolynomialError(f"need {n - 1} q values, got {len(values)}")
    zq = (0,) * (n - 1)
    terms: dict = defaultdict(int)
    for k, c in f.terms.items():
        for v, e in zip(values, k[n:]):
            if e:
                c *= v**e
        if c:
            terms[k[:n] + zq] += c
    return Polynomial._raw(n, {k: c for k, c in terms.items() if c})
