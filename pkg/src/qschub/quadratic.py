"""
The quadratic algebra ``E_n`` on generators ``[ij]`` and its (quantum) Bruhat
representation on the group algebra of ``S_n``.

Words are tuples of generators ``(i, j)`` with ``i < j``; ``[j i]`` is
normalized to ``-[i j]`` on input.
"""

from __future__ import annotations

import itertools
import re
from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Mapping, Sequence

from .linalg import RowEchelon
from .polyring import Polynomial
from .quantization import qschubert_table
from .schubert import schubert_table
from .symgroup import Permutation, all_permutations, identity, longest, multiply, right_transposition

__all__ = [
    "Generator",
    "Word",
    "GroupAlgebraElement",
    "NoncommutativeElement",
    "ResourceBoundExceeded",
    "generators",
    "qbruhat_apply",
    "dunkl_apply",
    "eval_at_dunkl",
    "gw_via_bruhat",
    "gw_via_bruhat_all",
    "theta",
    "eval_words",
    "defining_relations",
    "ComponentBasis",
    "en_component_basis",
    "en_component_bruteforce",
    "en_reduce",
    "en_equal",
    "nonneg_decompose",
    "RelationCheck",
    "check_representation_relations",
    "parse_words",
    "format_words",
]

Generator = tuple[int, int]
Word = tuple[Generator, ...]


class ResourceBoundExceeded(RuntimeError):
    pass


def generators(n: int) -> list[Generator]:
    return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


def _normalize_generator(a: int, b: int, n: int | None = None) -> tuple[Generator, int]:
    if a == b:
        raise ValueError(f"[{a} {b}] is not a generator")
    if n is not None and not (1 <= a <= n and 1 <= b <= n):
        raise ValueError(f"[{a} {b}] out of range for n={n}")
    return ((a, b), 1) if a < b else ((b, a), -1)


# ---------- group algebra ----------
class GroupAlgebraElement:
    """Finite sum ``sum_w c_w(q) w`` with coefficients polynomials in q only."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Permutation, Polynomial | int] | None = None):
        self.n = n
        clean = {}
        for w, c in (terms or {}).items():
            if isinstance(c, int):
                c = Polynomial.constant(n, c)
            if c:
                clean[w] = c
        self.terms = clean

    @classmethod
    def basis(cls, w: Permutation) -> GroupAlgebraElement:
        return cls(w.n, {w: Polynomial.one(w.n)})

    def __add__(self, other: GroupAlgebraElement) -> GroupAlgebraElement:
        terms = dict(self.terms)
        for w, c in other.terms.items():
            terms[w] = terms[w] + c if w in terms else c
        return GroupAlgebraElement(self.n, terms)

    def __neg__(self) -> GroupAlgebraElement:
        return GroupAlgebraElement(self.n, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other: GroupAlgebraElement) -> GroupAlgebraElement:
        return self + (-other)

    def scale(self, c: Polynomial | int) -> GroupAlgebraElement:
        return GroupAlgebraElement(self.n, {w: v * c for w, v in self.terms.items()})

    def coefficient(self, w: Permutation) -> Polynomial:
        return self.terms.get(w, Polynomial.zero(self.n))

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms, key=lambda w: (w.length, w.images)):
            c = self.terms[w]
            label = "[" + " ".join(map(str, w.images)) + "]"
            parts.append(label if c == 1 else f"({c})*{label}")
        return " + ".join(parts)

    __repr__ = __str__


@lru_cache(maxsize=None)
def _generator_on_perm(i: int, j: int, w: Permutation, quantum: bool) -> tuple[Permutation, Polynomial] | None:
    n = w.n
    v, delta = right_transposition(w, i, j)
    if delta == 1:
        return v, Polynomial.one(n)
    if quantum and delta == -(2 * (j - i) - 1):
        return v, Polynomial.q_range(n, i, j)
    return None


def qbruhat_apply(g: Generator, a: GroupAlgebraElement, *, quantum: bool = True) -> GroupAlgebraElement:
    """
    The (quantum) Bruhat operator ``[ij]``: ``w -> w t_ij`` when the length
    goes up by one, ``w -> q_ij w t_ij`` when it drops by ``l(t_ij)``, else 0.
    ``quantum=False`` gives the classical operator.
    """
    (i, j), sign = _normalize_generator(*g, a.n)
    terms: dict = {}
    for w, c in a.terms.items():
        hit = _generator_on_perm(i, j, w, quantum)
        if hit is None:
            continue
        v, weight = hit
        c2 = c * weight if sign > 0 else -(c * weight)
        terms[v] = terms[v] + c2 if v in terms else c2
    return GroupAlgebraElement(a.n, terms)


def dunkl_apply(j: int, a: GroupAlgebraElement, *, quantum: bool = True) -> GroupAlgebraElement:
    """``theta_j = -sum_{i<j} [ij] + sum_{k>j} [jk]``."""
    n = a.n
    if not 1 <= j <= n:
        raise ValueError(f"theta_{j} undefined for n={n}")
    result = GroupAlgebraElement(n)
    for i in range(1, j):
        result = result - qbruhat_apply((i, j), a, quantum=quantum)
    for k in range(j + 1, n + 1):
        result = result + qbruhat_apply((j, k), a, quantum=quantum)
    return result


@lru_cache(maxsize=None)
def _theta_monomial(xexp: tuple[int, ...], w: Permutation, quantum: bool) -> GroupAlgebraElement:
    if not any(xexp):
        return GroupAlgebraElement.basis(w)
    k = max(i for i, a in enumerate(xexp) if a)
    prev = list(xexp)
    prev[k] -= 1
    return dunkl_apply(k + 1, _theta_monomial(tuple(prev), w, quantum), quantum=quantum)


def eval_at_dunkl(f: Polynomial, a: GroupAlgebraElement, *, quantum: bool = True) -> GroupAlgebraElement:
    """``f(theta_1, ..., theta_n) a``; the thetas commute in the representation."""
    n = a.n
    if f.n != n:
        raise ValueError("ring mismatch")
    result = GroupAlgebraElement(n)
    for xexp, coeff in f.by_x().items():
        if not quantum:
            coeff = Polynomial.constant(n, coeff.constant_term())
            if not coeff:
                continue
        for w, c in a.terms.items():
            result = result + _theta_monomial(xexp, w, quantum).scale(coeff * c)
    return result


@lru_cache(maxsize=4096)
def _schubert_on(u: Permutation, v: Permutation, quantum: bool) -> GroupAlgebraElement:
    f = qschubert_table(u.n)[u] if quantum else schubert_table(u.n)[u]
    return eval_at_dunkl(f, GroupAlgebraElement.basis(v), quantum=quantum)


def gw_via_bruhat_all(u: Permutation, v: Permutation, w: Permutation) -> Polynomial:
    """Coefficient of ``w_o w`` in ``S^q_u(theta) v``, a polynomial in q."""
    return _schubert_on(u, v, True).coefficient(multiply(longest(u.n), w))


def gw_via_bruhat(u: Permutation, v: Permutation, w: Permutation, d: Sequence[int], n: int | None = None) -> int:
    n = u.n if n is None else n
    if not (u.n == v.n == w.n == n):
        raise ValueError(f"all permutations must lie in S_{n}")
    if len(d) != n - 1:
        raise ValueError(f"degree must have {n - 1} entries")
    return gw_via_bruhat_all(u, v, w).coefficient((), tuple(d))


def classical_bruhat_constants(u: Permutation, v: Permutation) -> dict[Permutation, int]:
    """``c^w_{uv}`` as the coefficient of ``w`` in ``S_u(theta) v`` (classical operators)."""
    out = _schubert_on(u, v, False)
    return {w: c.constant_term() for w, c in out.terms.items()}


# ---------- noncommutative elements ----------
class NoncommutativeElement:
    """Integer combination of words in the generators ``[ij]``, ``i < j``."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Word, int] | None = None):
        self.terms = {tuple(w): c for w, c in (terms or {}).items() if c}

    @classmethod
    def word(cls, word: Iterable[Sequence[int]]) -> NoncommutativeElement:
        sign, gens = 1, []
        for a, b in word:
            g, s = _normalize_generator(a, b)
            gens.append(g)
            sign *= s
        return cls({tuple(gens): sign})

    @classmethod
    def one(cls) -> NoncommutativeElement:
        return cls({(): 1})

    def __add__(self, other: NoncommutativeElement) -> NoncommutativeElement:
        terms = defaultdict(int, self.terms)
        for w, c in other.terms.items():
            terms[w] += c
        return NoncommutativeElement(terms)

    def __neg__(self) -> NoncommutativeElement:
        return NoncommutativeElement({w: -c for w, c in self.terms.items()})

    def __sub__(self, other: NoncommutativeElement) -> NoncommutativeElement:
        return self + (-other)

    def __mul__(self, other) -> NoncommutativeElement:
        if isinstance(other, int):
            return NoncommutativeElement({w: c * other for w, c in self.terms.items()})
        terms: dict = defaultdict(int)
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                terms[w1 + w2] += c1 * c2
        return NoncommutativeElement(terms)

    __rmul__ = __mul__

    def components(self) -> dict[int, NoncommutativeElement]:
        parts: dict = defaultdict(dict)
        for w, c in self.terms.items():
            parts[len(w)][w] = c
        return {d: NoncommutativeElement(t) for d, t in sorted(parts.items())}

    def __eq__(self, other) -> bool:
        if not isinstance(other, NoncommutativeElement):
            return NotImplemented
        return self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __str__(self) -> str:
        return format_words(self)

    def __repr__(self) -> str:
        return f"NoncommutativeElement({str(self)!r})"


def format_word(word: Word) -> str:
    return "".join(f"[{i} {j}]" for i, j in word) if word else "1"


def format_words(x: NoncommutativeElement) -> str:
    if not x.terms:
        return "0"
    out = []
    for w in sorted(x.terms, key=lambda w: (len(w), w)):
        c = x.terms[w]
        body = format_word(w)
        if abs(c) != 1:
            body = f"{abs(c)}*{body}" if w else str(abs(c))
        sign = "-" if c < 0 else "+"
        out.append((sign, body))
    text = ("-" if out[0][0] == "-" else "") + out[0][1]
    return text + "".join(f" {s} {b}" for s, b in out[1:])


_GEN_RE = re.compile(r"\[\s*(\d+)\s*[, ]?\s*(\d+)\s*\]")


def parse_words(text: str) -> NoncommutativeElement:
    """
    Parse ``"[1 2][1 3] - 2*[2 3] + 1"``.  ``[12]`` is read as ``[1 2]``;
    ``[2 1]`` becomes ``-[1 2]``.
    """
    s = text.strip()
    if not s:
        raise ValueError("empty expression")
    result = NoncommutativeElement()
    pieces = re.findall(r"[+-]?[^+-]+", re.sub(r"\s*([+-])\s*", r" \1", s).strip())
    for piece in pieces:
        piece = piece.strip()
        sign = -1 if piece.startswith("-") else 1
        body = piece.lstrip("+-").strip()
        coeff = sign
        m = re.match(r"^(\d+)\s*\*?\s*", body)
        if m and (m.end() < len(body) or not _GEN_RE.search(body)):
            coeff *= int(m.group(1))
            body = body[m.end():]
        word = []
        pos = 0
        for g in _GEN_RE.finditer(body):
            if body[pos:g.start()].strip(" *"):
                raise ValueError(f"cannot parse {piece!r}")
            word.append((int(g.group(1)), int(g.group(2))))
            pos = g.end()
        if body[pos:].strip(" *"):
            raise ValueError(f"cannot parse {piece!r}")
        result = result + NoncommutativeElement.word(word) * coeff
    return result


def theta(j: int, n: int) -> NoncommutativeElement:
    terms = {((i, j),): -1 for i in range(1, j)}
    terms.update({((j, k),): 1 for k in range(j + 1, n + 1)})
    return NoncommutativeElement(terms)


def eval_words(f: Polynomial) -> NoncommutativeElement:
    """
    ``f(theta_1, ..., theta_n)`` as words, each monomial multiplied out as
    ``theta_1^{a_1} theta_2^{a_2} ...``.  ``f`` must be q-free.
    """
    n = f.n
    if not f.is_q_free():
        raise ValueError("only q-free polynomials are evaluated as words")
    thetas = [theta(j, n) for j in range(1, n + 1)]
    result = NoncommutativeElement()
    for key, c in f.items():
        term = NoncommutativeElement.one()
        for j, a in enumerate(key[:n]):
            for _ in range(a):
                term = term * thetas[j]
        result = result + term * c
    return result


# ---------- defining relations ----------
@lru_cache(maxsize=None)
def defining_relations(n: int) -> tuple[dict, ...]:
    """Quadratic relations of ``E_n``, written in normalized words."""
    rels = []
    seen = set()

    def add(rel: NoncommutativeElement):
        frozen = frozenset(rel.terms.items())
        if rel and frozen not in seen and frozenset((w, -c) for w, c in rel.terms.items()) not in seen:
            seen.add(frozen)
            rels.append(dict(rel.terms))

    def w(*pairs):
        return NoncommutativeElement.word(pairs)

    for g in generators(n):
        add(w(g, g))
    for i, j, k in itertools.permutations(range(1, n + 1), 3):
        add(w((i, j), (j, k)) + w((j, k), (k, i)) + w((k, i), (i, j)))
    for (i, j), (k, l) in itertools.combinations(generators(n), 2):
        if len({i, j, k, l}) == 4:
            add(w((i, j), (k, l)) - w((k, l), (i, j)))
    return tuple(rels)


def _word_sort_key(word: Word) -> tuple:
    # the pivot of a relation row is its lexicographically largest word
    return tuple((-i, -j) for i, j in word)


@dataclass
class ComponentBasis:
    """
    Degree-``deg`` component of ``E_n``: a basis of standard words and a
    reduction map sending any word to its coordinates in that basis.
    """

    n: int
    deg: int
    words: list[Word]
    echelon: RowEchelon | None
    previous: ComponentBasis | None
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def dimension(self) -> int:
        return len(self.words)

    def reduce_word(self, word: Word) -> dict[Word, object]:
        if len(word) != self.deg:
            raise ValueError(f"word of length {len(word)} in degree {self.deg} component")
        hit = self._cache.get(word)
        if hit is not None:
            return hit
        if self.deg <= 1:
            out = {word: 1}
        else:
            prefix = self.previous.reduce_word(word[:-1])
            vec = {b + word[-1:]: c for b, c in prefix.items()}
            out = self.echelon.reduce(vec)
        self._cache[word] = out
        return out

    def reduce(self, x: NoncommutativeElement) -> dict[Word, object]:
        total: dict = defaultdict(int)
        for word, c in x.terms.items():
            for b, v in self.reduce_word(word).items():
                total[b] += c * v
        return {b: v for b, v in total.items() if v}


_component_cache: dict[tuple[int, int], ComponentBasis] = {}


def en_component_basis(n: int, deg: int, *, max_columns: int = 200_000) -> ComponentBasis:
    """
    Graded piece of ``E_n`` in degree ``deg``.

    Degree ``d`` is computed as ``(E_{d-1} (x) V) / (E_{d-2} (x) R)``, where
    ``V`` is spanned by the generators and ``R`` by the quadratic relations;
    this is the same quotient as spanning all ``u r v`` inside the full word
    space of degree ``d``, but works in far fewer columns.
    """
    if deg < 0:
        raise ValueError("negative degree")
    key = (n, deg)
    if key in _component_cache:
        return _component_cache[key]
    gens = generators(n)
    if deg == 0:
        comp = ComponentBasis(n, 0, [()], None, None)
    elif deg == 1:
        comp = ComponentBasis(n, 1, [(g,) for g in gens], None, en_component_basis(n, 0))
    else:
        prev = en_component_basis(n, deg - 1, max_columns=max_columns)
        prev2 = en_component_basis(n, deg - 2, max_columns=max_columns)
        if prev.dimension * len(gens) > max_columns:
            raise ResourceBoundExceeded(f"E_{n} degree {deg} needs {prev.dimension * len(gens)} columns")
        echelon = RowEchelon(column_key=_word_sort_key)
        for c in prev2.words:
            for rel in defining_relations(n):
                vec: dict = defaultdict(int)
                for (g1, g2), coef in rel.items():
                    for b, v in prev.reduce_word(c + (g1,)).items():
                        vec[b + (g2,)] += coef * v
                echelon.add({k: v for k, v in vec.items() if v})
        columns = [b + (g,) for b in prev.words for g in gens]
        words = [wd for wd in columns if wd not in echelon.pivots]
        comp = ComponentBasis(n, deg, words, echelon, prev)
    _component_cache[key] = comp
    return comp


def en_component_bruteforce(n: int, deg: int) -> int:
    """Dimension of the degree-``deg`` piece by spanning every ``u r v`` in the full word space."""
    gens = generators(n)
    if deg < 2:
        return len(gens) ** deg
    echelon = RowEchelon()
    for left in range(deg - 1):
        right = deg - 2 - left
        for u in itertools.product(gens, repeat=left):
            for v in itertools.product(gens, repeat=right):
                for rel in defining_relations(n):
                    echelon.add({u + r + v: c for r, c in rel.items()})
    return len(gens) ** deg - echelon.rank


def en_reduce(x: NoncommutativeElement, n: int) -> dict[int, dict[Word, object]]:
    """Per-degree coordinates of ``x`` in the standard word bases."""
    return {d: en_component_basis(n, d).reduce(part) for d, part in x.components().items()}


def en_equal(a: NoncommutativeElement, b: NoncommutativeElement, n: int, *, per_degree: bool = True) -> bool:
    """Whether ``a == b`` in ``E_n``."""
    diff = a - b
    parts = diff.components()
    if len(parts) > 1 and not per_degree:
        raise ValueError("inhomogeneous difference; pass per_degree=True")
    return all(not en_component_basis(n, d).reduce(part) for d, part in parts.items())


# ---------- nonnegative decompositions ----------
def nonneg_decompose(w: Permutation, n: int | None = None, *, bound: int = 3, max_total: int = 12,
                     max_nodes: int = 2_000_000) -> dict[Word, int] | None:
    """
    Search for nonnegative integers ``c_m`` with ``sum c_m m == S_w(theta)`` in ``E_n``.

    Words are grouped by their image in ``E_n``; the search enumerates
    multisets of images of growing total size, at most ``bound`` copies per
    word.  Returns a certificate, or ``None`` when nothing is found within
    the bounds (which proves nothing).

    The classical Bruhat representation prunes the search.  A positive word
    sends each permutation ``v`` to a single permutation ``x`` or to zero, so
    in any certificate at most ``c^x_{wv}`` words (with multiplicity) can
    send ``v`` to ``x``.
    """
    n = w.n if n is None else n
    deg = w.length
    if deg == 0:
        return {(): 1}
    comp = en_component_basis(n, deg)
    target = comp.reduce(eval_words(schubert_table(n)[w]))
    if not target:
        return {}
    classes: dict = {}
    for word in itertools.product(generators(n), repeat=deg):
        vec = comp.reduce_word(word)
        if vec:
            classes.setdefault(frozenset(vec.items()), []).append(word)
    perms = list(all_permutations(n))
    allowance = {(v, x): c for v in perms for x, c in classical_bruhat_constants(w, v).items()}
    actions = {}
    for key, words in classes.items():
        hits = []
        for v in perms:
            image = _act_word(words[0], GroupAlgebraElement.basis(v), False)
            hits += [(v, x) for x in image.terms]
        if all((h in allowance) for h in hits):
            actions[key] = hits
    keys = sorted(actions, key=lambda k: min(classes[k]))
    vecs = [dict(k) for k in keys]
    hits = [actions[k] for k in keys]
    caps = [bound * len(classes[k]) for k in keys]
    lookup = {k: idx for idx, k in enumerate(keys)}

    # cheap rational feasibility: the target must lie in the span of the images
    span = RowEchelon()
    for v in vecs:
        span.add(v)
    if not span.contains(target):
        return None

    nodes = 0

    def search(start: int, remaining: dict, budget: int, chosen: list):
        nonlocal nodes
        if not remaining:
            return list(chosen)
        if budget == 0:
            return None
        if budget == 1:
            # the last word has to be the remainder itself
            nodes += 1
            idx = lookup.get(frozenset(remaining.items()))
            if (idx is None or idx < start or chosen.count(idx) >= caps[idx]
                    or any(allowance[h] == 0 for h in hits[idx])):
                return None
            return chosen + [idx]
        for idx in range(start, len(vecs)):
            nodes += 1
            if nodes > max_nodes:
                raise ResourceBoundExceeded(f"nonneg search exceeded {max_nodes} nodes")
            if chosen.count(idx) >= caps[idx] or any(allowance[h] == 0 for h in hits[idx]):
                continue
            for h in hits[idx]:
                allowance[h] -= 1
            nxt = dict(remaining)
            for col, val in vecs[idx].items():
                nv = nxt.get(col, 0) - val
                if nv:
                    nxt[col] = nv
                else:
                    nxt.pop(col)
            chosen.append(idx)
            found = search(idx, nxt, budget - 1, chosen)
            chosen.pop()
            for h in hits[idx]:
                allowance[h] += 1
            if found is not None:
                return found
        return None

    for total in range(1, max_total + 1):
        found = search(0, dict(target), total, [])
        if found is not None:
            cert: dict = defaultdict(int)
            for idx in set(found):
                copies = found.count(idx)
                for word in classes[keys[idx]]:
                    take = min(bound, copies)
                    if take:
                        cert[word] += take
                        copies -= take
            return dict(sorted(cert.items()))
    return None


# ---------- representation relations ----------
@dataclass
class RelationCheck:
    ok: bool
    failures: list[str]

    def __bool__(self) -> bool:
        return self.ok


def _act_word(word: Sequence[tuple[int, int]], a: GroupAlgebraElement, quantum: bool) -> GroupAlgebraElement:
    # the rightmost letter acts first
    for g in reversed(word):
        a = qbruhat_apply(g, a, quantum=quantum)
    return a


def check_representation_relations(n: int, quantum: bool = False) -> RelationCheck:
    """
    Check the defining relations of ``E_n`` (or of its quantum deformation)
    on every basis permutation.
    """
    failures = []
    for w in all_permutations(n):
        a = GroupAlgebraElement.basis(w)
        for i, j in generators(n):
            lhs = _act_word([(i, j), (i, j)], a, quantum)
            rhs = a.scale(Polynomial.q(n, i)) if quantum and j == i + 1 else GroupAlgebraElement(n)
            if lhs != rhs:
                failures.append(f"[{i} {j}]^2 on {w}: {lhs} != {rhs}")
        for i, j, k in itertools.permutations(range(1, n + 1), 3):
            lhs = (_act_word([(i, j), (j, k)], a, quantum) + _act_word([(j, k), (k, i)], a, quantum)
                   + _act_word([(k, i), (i, j)], a, quantum))
            if lhs:
                failures.append(f"three-term ({i},{j},{k}) on {w}: {lhs}")
        for (i, j), (k, l) in itertools.combinations(generators(n), 2):
            if len({i, j, k, l}) == 4:
                lhs = _act_word([(i, j), (k, l)], a, quantum) - _act_word([(k, l), (i, j)], a, quantum)
                if lhs:
                    failures.append(f"commutation [{i} {j}],[{k} {l}] on {w}: {lhs}")
    return RelationCheck(not failures, failures)
