"""Freely reduced words in the free group F_n = <x_1, ..., x_n>.

A word is stored letter by letter, each letter carrying a sign of +1 or -1;
powers are never run-length encoded, so ``len(word)`` is the number of
letters that a canonical form has to route.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .errors import RankError


class Letter(NamedTuple):
    index: int
    sign: int = 1

    def inverse(self) -> "Letter":
        return Letter(self.index, -self.sign)

    def __str__(self):
        return f"x{self.index}" if self.sign > 0 else f"x{self.index}^-1"


@dataclass(frozen=True)
class ReducedWord:
    """An element of F_rank. Construct through :func:`reduce` or :func:`word`."""

    rank: int
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        if self.rank < 0:
            raise RankError(f"negative rank {self.rank}")
        prev = None
        for letter in self.letters:
            if letter.sign not in (1, -1):
                raise ValueError(f"letter sign must be +1 or -1, got {letter.sign}")
            if not 1 <= letter.index <= self.rank:
                raise RankError(f"letter x{letter.index} out of range for rank {self.rank}")
            if prev is not None and prev.index == letter.index and prev.sign == -letter.sign:
                raise ValueError(f"word is not freely reduced at {prev}{letter}")
            prev = letter

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __str__(self):
        return " ".join(map(str, self.letters)) if self.letters else "1"

    def __mul__(self, other: "ReducedWord") -> "ReducedWord":
        return mul(self, other)

    def __invert__(self) -> "ReducedWord":
        return inv(self)

    def is_identity(self) -> bool:
        return not self.letters


def _as_letter(item) -> Letter:
    if isinstance(item, Letter):
        return item
    if isinstance(item, int):
        if item == 0:
            raise ValueError("0 is not a letter")
        return Letter(abs(item), 1 if item > 0 else -1)
    return Letter(*item)


def _free_reduce(letters: Iterable[Letter]) -> list[Letter]:
    stack: list[Letter] = []
    for letter in letters:
        if stack and stack[-1].index == letter.index and stack[-1].sign == -letter.sign:
            stack.pop()
        else:
            stack.append(letter)
    return stack


def reduce(rank: int, raw: Iterable) -> ReducedWord:
    """Freely reduce ``raw`` in F_rank with one left-to-right stack pass.

    Items of ``raw`` may be :class:`Letter` objects, ``(index, sign)`` pairs or
    signed integers (``-2`` meaning ``x2^-1``).
    """
    letters = [_as_letter(item) for item in raw]
    for letter in letters:
        if not 1 <= letter.index <= rank:
            raise RankError(f"letter x{letter.index} out of range for rank {rank}")
    return ReducedWord(rank, tuple(_free_reduce(letters)))


def word(rank: int, *letters) -> ReducedWord:
    """Shorthand: ``word(3, 1, -2)`` is ``x1 x2^-1`` in F_3."""
    return reduce(rank, letters)


def identity_word(rank: int) -> ReducedWord:
    return ReducedWord(rank, ())


def generator(rank: int, index: int, sign: int = 1) -> ReducedWord:
    return reduce(rank, [Letter(index, sign)])


def mul(w: ReducedWord, w2: ReducedWord) -> ReducedWord:
    if w.rank != w2.rank:
        raise RankError(f"cannot multiply words of rank {w.rank} and {w2.rank}")
    # only the seam can cancel
    left = list(w.letters)
    right = w2.letters
    k = 0
    while left and k < len(right) and left[-1] == right[k].inverse():
        left.pop()
        k += 1
    return ReducedWord(w.rank, tuple(left) + right[k:])


def inv(w: ReducedWord) -> ReducedWord:
    return ReducedWord(w.rank, tuple(letter.inverse() for letter in reversed(w.letters)))


def substitute(v: ReducedWord, ws: Sequence[ReducedWord], rank: int | None = None) -> ReducedWord:
    """Replace every x_j^{+-1} in ``v`` by ``ws[j-1]^{+-1}`` and reduce.

    ``rank`` is only consulted when ``ws`` is empty (then ``v`` must be the
    empty word of rank 0 and the result is the empty word of that rank).
    """
    if v.rank != len(ws):
        raise RankError(f"word of rank {v.rank} needs {v.rank} substitutes, got {len(ws)}")
    if ws:
        ranks = {w.rank for w in ws}
        if len(ranks) != 1:
            raise RankError(f"substitutes have mixed ranks {sorted(ranks)}")
        (target,) = ranks
        if rank is not None and rank != target:
            raise RankError(f"substitutes have rank {target}, expected {rank}")
    else:
        target = 0 if rank is None else rank
    out: list[Letter] = []
    for letter in v.letters:
        image = ws[letter.index - 1].letters
        if letter.sign < 0:
            image = tuple(x.inverse() for x in reversed(image))
        for x in image:
            if out and out[-1].index == x.index and out[-1].sign == -x.sign:
                out.pop()
            else:
                out.append(x)
    return ReducedWord(target, tuple(out))


def shift(w: ReducedWord, n: int) -> ReducedWord:
    """The embedding F_{n'} -> F_{n+n'}, x_i -> x_{i+n}."""
    if n < 0:
        raise RankError(f"negative shift {n}")
    if n == 0:
        return w
    return ReducedWord(w.rank + n, tuple(Letter(x.index + n, x.sign) for x in w.letters))


def embed(w: ReducedWord, rank: int) -> ReducedWord:
    """Regard ``w`` as a word of a larger rank without renaming letters."""
    if rank < w.rank:
        raise RankError(f"cannot embed rank {w.rank} into rank {rank}")
    return ReducedWord(rank, w.letters)
