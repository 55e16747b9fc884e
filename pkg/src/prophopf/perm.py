"""Permutations of {1, ..., s} in one-line notation (1-based)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


@dataclass(frozen=True)
class Permutation:
    map: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.map) != list(range(1, len(self.map) + 1)):
            raise ValueError(f"{list(self.map)} is not a permutation of 1..{len(self.map)}")

    @classmethod
    def of(cls, one_line: Sequence[int]) -> "Permutation":
        return cls(tuple(one_line))

    @classmethod
    def identity(cls, s: int) -> "Permutation":
        return cls(tuple(range(1, s + 1)))

    @property
    def size(self) -> int:
        return len(self.map)

    def __len__(self):
        return len(self.map)

    def __call__(self, i: int) -> int:
        return self.map[i - 1]

    def __matmul__(self, other: "Permutation") -> "Permutation":
        """(self @ other)(i) = self(other(i))."""
        if self.size != other.size:
            raise ValueError(f"cannot compose permutations of sizes {self.size} and {other.size}")
        return Permutation(tuple(self.map[j - 1] for j in other.map))

    def inverse(self) -> "Permutation":
        out = [0] * self.size
        for i, j in enumerate(self.map, start=1):
            out[j - 1] = i
        return Permutation(tuple(out))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.map, start=1))

    def adjacent_transpositions(self) -> list[int]:
        """Indices ``a_1, ..., a_k`` with ``self = t_{a_k} @ ... @ t_{a_1}``.

        Found by bubble-sorting the one-line array; ``t_a`` swaps a and a+1.
        Each swap at positions (a, a+1) replaces the current permutation p by
        ``p @ t_a``, and the loop ends at the identity.
        """
        arr = list(self.map)
        swaps = []
        for end in range(len(arr) - 1, 0, -1):
            for a in range(end):
                if arr[a] > arr[a + 1]:
                    arr[a], arr[a + 1] = arr[a + 1], arr[a]
                    swaps.append(a + 1)
        return swaps

    def __str__(self):
        return "[" + ",".join(map(str, self.map)) + "]"


def transposition(s: int, a: int) -> Permutation:
    arr = list(range(1, s + 1))
    arr[a - 1], arr[a] = arr[a], arr[a - 1]
    return Permutation(tuple(arr))


def transpose_perm(m: int, n: int) -> Permutation:
    """t_{m,n}((l-1)n + k) = (k-1)m + l for 1 <= k <= n, 1 <= l <= m."""
    out = [0] * (m * n)
    for l in range(1, m + 1):
        for k in range(1, n + 1):
            out[(l - 1) * n + k - 1] = (k - 1) * m + l
    return Permutation(tuple(out))
