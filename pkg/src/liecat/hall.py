"""Lyndon-word Hall basis of a free Lie algebra and its structure constants.

Generators are letters ``0 < 1 < ... < n-1``.  Basis words are Lyndon words
with the standard bracketing (right factor = longest proper Lyndon suffix),
listed degree-major and lexicographically inside a degree.  Brackets of basis
words are rewritten into the basis and memoized per table.
"""

from __future__ import annotations

import os
import threading
from dataclasses import dataclass
from functools import lru_cache

from .errors import CapacityExceeded, DegreeOverflow

DEFAULT_MAX_TABLE = 250_000

Word = tuple[int, ...]


def max_table_size() -> int:
    """Upper bound on basis words per table (``LIECAT_MAX_TABLE``)."""
    raw = os.environ.get("LIECAT_MAX_TABLE")
    return int(raw) if raw else DEFAULT_MAX_TABLE


# -- combinatorics ---------------------------------------------------------


def mobius(n: int) -> int:
    if n < 1:
        raise ValueError("mobius is defined for positive integers")
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


def witt_dimension(n: int, d: int) -> int:
    """Dimension of the degree-``d`` part of the free Lie algebra on ``n`` letters.

    Necklace formula ``(1/d) * sum_{e | d} mu(e) * n**(d/e)``; independent of
    the word enumeration below and used as its oracle.
    """
    if n < 1 or d < 1:
        raise ValueError("witt_dimension needs n >= 1 and d >= 1")
    total = sum(mobius(e) * n ** (d // e) for e in range(1, d + 1) if d % e == 0)
    assert total % d == 0
    return total // d


def is_lyndon(word: Word) -> bool:
    """True iff ``word`` is strictly smaller than each of its proper rotations."""
    if not word:
        return False
    return all(word < word[i:] + word[:i] for i in range(1, len(word)))


def lyndon_words(n: int, max_len: int) -> list[Word]:
    """All Lyndon words of length <= ``max_len`` over ``n`` letters, in lex order (Duval)."""
    out: list[Word] = []
    if n < 1 or max_len < 1:
        return out
    w = [-1]
    while w:
        w[-1] += 1
        out.append(tuple(w))
        m = len(w)
        while len(w) < max_len:
            w.append(w[len(w) - m])
        while w and w[-1] == n - 1:
            w.pop()
    return out


def standard_factorization(word: Word) -> tuple[Word, Word]:
    """Split a Lyndon word of length >= 2 as ``(u, v)`` with ``v`` its longest proper Lyndon suffix."""
    for i in range(1, len(word)):
        if is_lyndon(word[i:]):
            return word[:i], word[i:]
    raise ValueError(f"{word} has no standard factorization")


# -- the table -------------------------------------------------------------


@dataclass(frozen=True)
class HallWord:
    word: Word
    index: int
    left: int | None = None
    right: int | None = None

    @property
    def degree(self) -> int:
        return len(self.word)

    @property
    def is_letter(self) -> bool:
        return self.left is None


class BasisTable:
    """Graded Lyndon basis of ``F(x_0..x_{n-1})`` up to degree ``cap``.

    ``bracket_words(i, j)`` returns the structure constants of ``[u_i, u_j]``
    as a ``{index: int}`` dict.  The memo is guarded by a lock so a shared
    table can be queried from several threads.
    """

    def __init__(self, n_gens: int, cap: int):
        if n_gens < 1 or cap < 1:
            raise ValueError("generate_basis needs n_gens >= 1 and cap >= 1")
        size = sum(witt_dimension(n_gens, d) for d in range(1, cap + 1))
        limit = max_table_size()
        if size > limit:
            raise CapacityExceeded(
                f"basis of rank {n_gens} up to degree {cap} has {size} words (limit {limit})"
            )
        self.n_gens = n_gens
        self.cap = cap
        words = sorted(lyndon_words(n_gens, cap), key=lambda w: (len(w), w))
        self.index_of: dict[Word, int] = {w: i for i, w in enumerate(words)}
        hall: list[HallWord] = []
        for i, w in enumerate(words):
            if len(w) == 1:
                hall.append(HallWord(w, i))
            else:
                u, v = standard_factorization(w)
                hall.append(HallWord(w, i, self.index_of[u], self.index_of[v]))
        self.words: tuple[HallWord, ...] = tuple(hall)
        self.by_degree: tuple[tuple[HallWord, ...], ...] = tuple(
            tuple(h for h in hall if h.degree == d) for d in range(1, cap + 1)
        )
        self._memo: dict[tuple[int, int], dict[int, int]] = {}
        self._lock = threading.RLock()

    def __len__(self) -> int:
        return len(self.words)

    def __repr__(self) -> str:
        return f"BasisTable(n_gens={self.n_gens}, cap={self.cap}, size={len(self)})"

    def degree(self, i: int) -> int:
        return len(self.words[i].word)

    def dimensions(self) -> list[int]:
        return [len(ws) for ws in self.by_degree]

    def letter(self, k: int) -> int:
        return self.index_of[(k,)]

    def bracketing(self, i: int, names=None) -> str:
        h = self.words[i]
        if h.is_letter:
            k = h.word[0]
            return names[k] if names else f"x{k + 1}"
        return f"[{self.bracketing(h.left, names)},{self.bracketing(h.right, names)}]"

    def bracket_words(self, i: int, j: int) -> dict[int, int]:
        """Structure constants of ``[u_i, u_j]`` (read-only result)."""
        key = (i, j)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        wi, wj = self.words[i].word, self.words[j].word
        if len(wi) + len(wj) > self.cap:
            raise DegreeOverflow(
                f"bracket of degrees {len(wi)} and {len(wj)} exceeds cap {self.cap}"
            )
        with self._lock:
            result = self._bracket(i, j)
        return result

    def _bracket(self, i: int, j: int) -> dict[int, int]:
        hit = self._memo.get((i, j))
        if hit is not None:
            return hit
        words = self.words
        u, v = words[i], words[j]
        if i == j:
            result: dict[int, int] = {}
        elif u.word > v.word:
            result = {k: -c for k, c in self._bracket(j, i).items()}
        elif u.is_letter or words[u.right].word >= v.word:
            # u < v Lyndon with (u, v) the standard factorization of uv
            result = {self.index_of[u.word + v.word]: 1}
        else:
            # [[u1,u2],v] = [u1,[u2,v]] + [[u1,v],u2]
            acc: dict[int, int] = {}
            u1, u2 = u.left, u.right
            for t, c in self._bracket(u2, j).items():
                for k, e in self._bracket(u1, t).items():
                    acc[k] = acc.get(k, 0) + c * e
            for t, c in self._bracket(u1, j).items():
                for k, e in self._bracket(t, u2).items():
                    acc[k] = acc.get(k, 0) + c * e
            result = {k: c for k, c in acc.items() if c}
        self._memo[(i, j)] = result
        return result

    def fill(self) -> None:
        """Populate the whole structure-constant memo up front."""
        for i, hi in enumerate(self.words):
            for j, hj in enumerate(self.words):
                if hi.degree + hj.degree <= self.cap:
                    self.bracket_words(i, j)


@lru_cache(maxsize=None)
def generate_basis(n_gens: int, cap: int) -> BasisTable:
    """Shared basis table for ``n_gens`` letters up to degree ``cap``."""
    return BasisTable(n_gens, cap)


def normalize_bracket(i: int, j: int, table: BasisTable) -> dict[int, int]:
    return table.bracket_words(i, j)
