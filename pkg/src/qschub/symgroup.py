"""
Permutations of ``{1, ..., n}`` in one-line notation.

Position ``i`` (1-based) holds ``w(i)``.  Products compose right to left,
``(u * v)(i) == u(v(i))``, so right multiplication by a transposition swaps
*positions*:

>>> Permutation((2, 1, 3)) * Permutation((1, 3, 2))
Permutation(2, 3, 1)
>>> parse_permutation("s1*s2", 3)
Permutation(2, 3, 1)
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

__all__ = [
    "Permutation",
    "identity",
    "longest",
    "simple",
    "transposition",
    "length",
    "reduced_word",
    "multiply",
    "right_transposition",
    "transposition_length",
    "all_permutations",
    "from_word",
    "parse_permutation",
]


@dataclass(frozen=True, order=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(v) for v in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {self.images!r}")
        object.__setattr__(self, "images", images)

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __len__(self) -> int:
        return len(self.images)

    def __iter__(self):
        return iter(self.images)

    def __mul__(self, other: Permutation) -> Permutation:
        return multiply(self, other)

    def __repr__(self) -> str:
        return "Permutation(" + ", ".join(map(str, self.images)) + ")"

    def __str__(self) -> str:
        return " ".join(map(str, self.images))

    @cached_property
    def length(self) -> int:
        w = self.images
        return sum(1 for a in range(len(w)) for b in range(a + 1, len(w)) if w[a] > w[b])

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for pos, val in enumerate(self.images, start=1):
            inv[val - 1] = pos
        return Permutation(tuple(inv))

    def descents(self) -> list[int]:
        w = self.images
        return [i for i in range(1, len(w)) if w[i - 1] > w[i]]

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.images, start=1))


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def longest(n: int) -> Permutation:
    """The longest element ``w_o``, which reverses ``1..n``."""
    return Permutation(tuple(range(n, 0, -1)))


def transposition(n: int, i: int, j: int) -> Permutation:
    if not (1 <= i <= n and 1 <= j <= n) or i == j:
        raise ValueError(f"bad transposition ({i} {j}) in S_{n}")
    images = list(range(1, n + 1))
    images[i - 1], images[j - 1] = images[j - 1], images[i - 1]
    return Permutation(tuple(images))


def simple(n: int, i: int) -> Permutation:
    return transposition(n, i, i + 1)


def length(w: Permutation) -> int:
    return w.length


def reduced_word(w: Permutation) -> tuple[int, ...]:
    """
    Indices ``(i_1, ..., i_l)`` with ``w == s_{i_1} ... s_{i_l}`` and ``l == length(w)``.

    Peels the leftmost descent off the right end of ``w`` until the identity
    is reached.

    >>> reduced_word(Permutation((3, 2, 1)))
    (1, 2, 1)
    """
    word = []
    images = list(w.images)
    while True:
        for i in range(len(images) - 1):
            if images[i] > images[i + 1]:
                images[i], images[i + 1] = images[i + 1], images[i]
                word.append(i + 1)
                break
        else:
            break
    return tuple(reversed(word))


def multiply(u: Permutation, v: Permutation) -> Permutation:
    if u.n != v.n:
        raise ValueError(f"size mismatch: S_{u.n} vs S_{v.n}")
    return Permutation(tuple(u.images[v.images[i] - 1] for i in range(v.n)))


def right_transposition(w: Permutation, i: int, j: int) -> tuple[Permutation, int]:
    """Return ``w * t_ij`` (positions ``i`` and ``j`` swapped) and the change in length."""
    n = w.n
    if not 1 <= i < j <= n:
        raise ValueError(f"need 1 <= i < j <= {n}, got ({i}, {j})")
    images = list(w.images)
    a, b = images[i - 1], images[j - 1]
    images[i - 1], images[j - 1] = b, a
    # only values strictly between a and b in positions strictly between i and j matter
    between = sum(1 for k in range(i, j - 1) if min(a, b) < images[k] < max(a, b))
    delta = 2 * between + 1
    return Permutation(tuple(images)), (delta if a < b else -delta)


def transposition_length(i: int, j: int) -> int:
    if i >= j:
        raise ValueError(f"need i < j, got ({i}, {j})")
    return 2 * (j - i) - 1


def all_permutations(n: int) -> Iterator[Permutation]:
    """All of ``S_n`` in lexicographic order of the one-line notation."""
    if n < 1:
        raise ValueError("n must be positive")
    for images in itertools.permutations(range(1, n + 1)):
        yield Permutation(images)


def from_word(n: int, word: Sequence[int]) -> Permutation:
    """The product ``s_{i_1} s_{i_2} ...`` in ``S_n``."""
    images = list(range(1, n + 1))
    # right multiplication by s_i swaps positions, applied left to right
    for i in word:
        if not 1 <= i < n:
            raise ValueError(f"s{i} is not in S_{n}")
        images[i - 1], images[i] = images[i], images[i - 1]
    return Permutation(tuple(images))


_WORD_RE = re.compile(r"^\s*s\s*(\d+)\s*((\*|\s)\s*s\s*\d+\s*)*$")


def parse_permutation(text: str, n: int | None = None) -> Permutation:
    """
    Parse ``"2 3 1"``, ``"2,3,1"``, ``"[2, 3, 1]"`` or a word ``"s1*s2"``.

    Word form and the identity spellings ``"id"``, ``"e"``, ``"1"`` need ``n``.
    """
    s = text.strip()
    if s.lower() in ("id", "e", "") or (s == "1" and n not in (None, 1)):
        if n is None:
            raise ValueError("identity needs an explicit n")
        return identity(n)
    if _WORD_RE.match(s):
        if n is None:
            raise ValueError("word form needs an explicit n")
        return from_word(n, [int(t) for t in re.findall(r"s\s*(\d+)", s)])
    tokens = re.split(r"[\s,]+", s.strip("[]() "))
    try:
        images = tuple(int(t) for t in tokens if t)
    except ValueError:
        raise ValueError(f"cannot parse permutation {text!r}") from None
    w = Permutation(images)
    if n is not None and w.n != n:
        raise ValueError(f"permutation {text!r} is not in S_{n}")
    return w
