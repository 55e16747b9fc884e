"""The category of finitely generated free groups, in bracket notation.

A morphism ``m -> n`` is the homomorphism F_m -> F_n sending x_i to the i-th
word of the bracket. ``compose(g, f)`` applies ``f`` first.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import RankError, TypeMismatchError
from .words import ReducedWord, embed, generator, identity_word, inv, mul, shift, substitute, word


@dataclass(frozen=True)
class FMorphism:
    dom: int
    cod: int
    words: tuple[ReducedWord, ...]

    def __post_init__(self):
        if len(self.words) != self.dom:
            raise RankError(f"bracket {self.dom} -> {self.cod} needs {self.dom} words, got {len(self.words)}")
        for w in self.words:
            if w.rank != self.cod:
                raise RankError(f"word {w} has rank {w.rank}, expected {self.cod}")

    def __str__(self):
        body = ", ".join(str(w) for w in self.words)
        return f"[{body} | {self.dom} -> {self.cod}]" if body else f"[ | {self.dom} -> {self.cod}]"

    @property
    def boundary(self) -> tuple[int, int]:
        return self.dom, self.cod


def bracket(m: int, n: int, ws: Sequence[ReducedWord]) -> FMorphism:
    return FMorphism(m, n, tuple(ws))


def compose(g: FMorphism, f: FMorphism) -> FMorphism:
    """``g`` after ``f``."""
    if g.dom != f.cod:
        raise TypeMismatchError(f"cannot compose {g.dom} -> {g.cod} after {f.dom} -> {f.cod}: boundary {f.cod} != {g.dom}")
    return FMorphism(f.dom, g.cod, tuple(substitute(v, g.words, rank=g.cod) for v in f.words))


def tensor(f: FMorphism, f2: FMorphism) -> FMorphism:
    n = f.cod + f2.cod
    left = tuple(embed(w, n) for w in f.words)
    right = tuple(shift(w, f.cod) for w in f2.words)
    return FMorphism(f.dom + f2.dom, n, left + right)


def identity(n: int) -> FMorphism:
    return FMorphism(n, n, tuple(generator(n, i) for i in range(1, n + 1)))


def symmetry(m: int, n: int) -> FMorphism:
    """Swap the blocks: source i <= m goes to n + i, source m + j goes to j."""
    k = m + n
    images = [generator(k, n + i) for i in range(1, m + 1)] + [generator(k, j) for j in range(1, n + 1)]
    return FMorphism(k, k, tuple(images))


def permutation(one_line: Sequence[int]) -> FMorphism:
    """``[x_{s(1)}, ..., x_{s(k)}]``: source wire i routed to target wire s(i)."""
    k = len(one_line)
    return FMorphism(k, k, tuple(generator(k, j) for j in one_line))


HOPF_KINDS = ("mu", "eta", "delta", "eps", "antipode")


def hopf_generator(kind: str) -> FMorphism:
    if kind == "mu":
        return bracket(2, 1, (word(1, 1), word(1, 1)))
    if kind == "eta":
        return bracket(0, 1, ())
    if kind == "delta":
        return bracket(1, 2, (word(2, 1, 2),))
    if kind == "eps":
        return bracket(1, 0, (identity_word(0),))
    if kind in ("antipode", "S"):
        return bracket(1, 1, (word(1, -1),))
    raise ValueError(f"unknown Hopf generator {kind!r}")


def convolve(f: FMorphism, g: FMorphism) -> FMorphism:
    """Pointwise product of the word tuples."""
    if f.boundary != g.boundary:
        raise TypeMismatchError(f"cannot convolve {f.dom} -> {f.cod} with {g.dom} -> {g.cod}")
    return FMorphism(f.dom, f.cod, tuple(mul(a, b) for a, b in zip(f.words, g.words)))


def conv_unit(m: int, n: int) -> FMorphism:
    return FMorphism(m, n, tuple(identity_word(n) for _ in range(m)))


def conv_inverse(f: FMorphism) -> FMorphism:
    return FMorphism(f.dom, f.cod, tuple(inv(w) for w in f.words))
