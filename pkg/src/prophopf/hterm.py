"""Terms for morphisms of the free symmetric monoidal category on a
commutative Hopf monoid, their boundaries, and evaluation into free groups.

Terms are a free syntax: nothing here identifies two terms. Equality of the
morphisms they denote is decided in :mod:`prophopf.canonical`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce as _fold
from typing import Sequence, Union

from . import fcat
from .errors import RankError, TypeMismatchError
from .fcat import FMorphism
from .perm import Permutation
from .words import ReducedWord

GEN_TYPES = {
    "mu": (2, 1),
    "eta": (0, 1),
    "delta": (1, 2),
    "eps": (1, 0),
    "antipode": (1, 1),
}


@dataclass(frozen=True)
class Gen:
    kind: str

    def __post_init__(self):
        if self.kind not in GEN_TYPES:
            raise ValueError(f"unknown generator {self.kind!r}")


@dataclass(frozen=True)
class Id:
    n: int


@dataclass(frozen=True)
class Sym:
    m: int
    n: int


@dataclass(frozen=True)
class Compose:
    """``left`` after ``right``."""

    left: "HTerm"
    right: "HTerm"


@dataclass(frozen=True)
class Tensor:
    left: "HTerm"
    right: "HTerm"


HTerm = Union[Gen, Id, Sym, Compose, Tensor]

MU = Gen("mu")
ETA = Gen("eta")
DELTA = Gen("delta")
EPS = Gen("eps")
ANTIPODE = Gen("antipode")


def infer_type(t: HTerm) -> tuple[int, int]:
    if isinstance(t, Gen):
        return GEN_TYPES[t.kind]
    if isinstance(t, Id):
        return t.n, t.n
    if isinstance(t, Sym):
        return t.m + t.n, t.n + t.m
    if isinstance(t, Tensor):
        a, b = infer_type(t.left)
        c, d = infer_type(t.right)
        return a + c, b + d
    if isinstance(t, Compose):
        g_dom, g_cod = infer_type(t.left)
        f_dom, f_cod = infer_type(t.right)
        if f_cod != g_dom:
            raise TypeMismatchError(
                f"boundary mismatch: right factor has codomain {f_cod}, left factor has domain {g_dom}"
            )
        return f_dom, g_cod
    raise TypeError(f"not a term: {t!r}")


def node_count(t: HTerm) -> int:
    if isinstance(t, (Compose, Tensor)):
        return 1 + node_count(t.left) + node_count(t.right)
    return 1


def evaluate(t: HTerm) -> FMorphism:
    """The structure-preserving functor into free groups."""
    if isinstance(t, Gen):
        return fcat.hopf_generator(t.kind)
    if isinstance(t, Id):
        return fcat.identity(t.n)
    if isinstance(t, Sym):
        return fcat.symmetry(t.m, t.n)
    if isinstance(t, Tensor):
        return fcat.tensor(evaluate(t.left), evaluate(t.right))
    if isinstance(t, Compose):
        return fcat.compose(evaluate(t.left), evaluate(t.right))
    raise TypeError(f"not a term: {t!r}")


eval_term = evaluate


# -- building blocks ---------------------------------------------------------

def compose_all(terms: Sequence[HTerm]) -> HTerm:
    """``terms[0] . terms[1] . ... . terms[-1]`` (last applied first), balanced."""
    if not terms:
        raise ValueError("empty composition")
    if len(terms) == 1:
        return terms[0]
    mid = len(terms) // 2
    return Compose(compose_all(terms[:mid]), compose_all(terms[mid:]))


def tensor_all(terms: Sequence[HTerm]) -> HTerm:
    """Balanced tensor product; neighbouring identities merge and id(0) drops out."""
    merged: list[HTerm] = []
    for t in terms:
        if isinstance(t, Id) and merged and isinstance(merged[-1], Id):
            merged[-1] = Id(merged[-1].n + t.n)
        else:
            merged.append(t)
    terms = [t for t in merged if t != Id(0)]
    if not terms:
        return Id(0)
    if len(terms) == 1:
        return terms[0]
    mid = len(terms) // 2
    return Tensor(tensor_all(terms[:mid]), tensor_all(terms[mid:]))


def _power(gen: HTerm, m: int) -> HTerm:
    return tensor_all([gen] * m)


def power_eta(m: int) -> HTerm:
    return _power(ETA, m)


def power_eps(m: int) -> HTerm:
    return _power(EPS, m)


def power_antipode(m: int) -> HTerm:
    return _power(ANTIPODE, m)


def antipode_power(e: int) -> HTerm:
    return ANTIPODE if e % 2 else Id(1)


def power_mu(m: int) -> HTerm:
    """mu_m : 2m -> m, with mu_{m+1} = (mu_m x mu)(1_m x P_{1,m} x 1)."""
    t: HTerm = Id(0)
    for k in range(m):
        shuffle = tensor_all([Id(k), Sym(1, k), Id(1)])
        t = Compose(Tensor(t, MU), shuffle)
    return t


def power_delta(m: int) -> HTerm:
    """Delta_m : m -> 2m, with Delta_{m+1} = (1_m x P_{m,1} x 1)(Delta_m x Delta)."""
    t: HTerm = Id(0)
    for k in range(m):
        shuffle = tensor_all([Id(k), Sym(k, 1), Id(1)])
        t = Compose(shuffle, Tensor(t, DELTA))
    return t


def iterated_mu_single(n: int) -> HTerm:
    if n <= 1:
        return ETA if n == 0 else Id(1)
    t: HTerm = MU
    for _ in range(n - 2):
        t = Compose(MU, Tensor(t, Id(1)))
    return t


def iterated_delta_single(n: int) -> HTerm:
    if n <= 1:
        return EPS if n == 0 else Id(1)
    t: HTerm = DELTA
    for _ in range(n - 2):
        t = Compose(Tensor(t, Id(1)), DELTA)
    return t


def iterated_mu(ns: Sequence[int]) -> HTerm:
    """mu^[n_1, ..., n_p] : sum(n) -> p."""
    return tensor_all([iterated_mu_single(n) for n in ns])


def iterated_delta(ns: Sequence[int]) -> HTerm:
    """Delta^[n_1, ..., n_p] : p -> sum(n)."""
    return tensor_all([iterated_delta_single(n) for n in ns])


def transposition_term(s: int, a: int) -> HTerm:
    return tensor_all([Id(a - 1), Sym(1, 1), Id(s - a - 1)])


def perm_term(sigma: Permutation | Sequence[int]) -> HTerm:
    """A term whose value is ``[x_{sigma(1)}, ..., x_{sigma(s)}]``."""
    if not isinstance(sigma, Permutation):
        sigma = Permutation.of(sigma)
    s = sigma.size
    swaps = sigma.adjacent_transpositions()
    if not swaps:
        return Id(s)
    # sigma = t_{a_k} @ ... @ t_{a_1}; t_{a_1} acts first
    return compose_all([transposition_term(s, a) for a in reversed(swaps)])


def conv(f: HTerm, g: HTerm) -> HTerm:
    """Convolution ``mu_n (f x g) Delta_m``."""
    tf, tg = infer_type(f), infer_type(g)
    if tf != tg:
        raise TypeMismatchError(f"convolution needs equal boundaries, got {tf} and {tg}")
    m, n = tf
    return Compose(power_mu(n), Compose(Tensor(f, g), power_delta(m)))


def conv_unit(m: int, n: int) -> HTerm:
    return Compose(power_eta(n), power_eps(m))


def vee(f: HTerm, g: HTerm) -> HTerm:
    """``mu_n (f x g)``, joining the domains of two maps into the same codomain."""
    (_, n), (_, n2) = infer_type(f), infer_type(g)
    if n != n2:
        raise TypeMismatchError(f"vee needs equal codomains, got {n} and {n2}")
    return Compose(power_mu(n), Tensor(f, g))


def y_gen(i: int, j: int, e: int, m: int, n: int) -> HTerm:
    """The map m -> n carrying x_j^{(-1)^e} in slot i and units elsewhere."""
    if not (1 <= i <= m and 1 <= j <= n):
        raise RankError(f"y({i},{j},{e}) out of range for {m} -> {n}")
    if e not in (0, 1):
        raise ValueError(f"exponent bit must be 0 or 1, got {e}")
    place = tensor_all([power_eta(j - 1), Id(1), power_eta(n - j)])
    pick = tensor_all([power_eps(i - 1), Id(1), power_eps(m - i)])
    return Compose(place, Compose(antipode_power(e), pick))


def alpha_letter(index: int, sign: int, n: int) -> HTerm:
    """eta_{j-1} x S^e x eta_{n-j} : 1 -> n."""
    return tensor_all([power_eta(index - 1), antipode_power(0 if sign > 0 else 1), power_eta(n - index)])


def alpha_word(w: ReducedWord) -> HTerm:
    n = w.rank
    if not w.letters:
        return conv_unit(1, n)
    return _fold(conv, [alpha_letter(x.index, x.sign, n) for x in w.letters])


def alpha(ws: Sequence[ReducedWord], n: int | None = None) -> HTerm:
    """Letterwise convolution inside each word, joined across words by vee."""
    if not ws:
        if n is None:
            raise ValueError("rank is needed for an empty tuple")
        return power_eta(n)
    ranks = {w.rank for w in ws}
    if len(ranks) != 1 or (n is not None and ranks != {n}):
        raise RankError(f"alpha needs words of a single rank, got {sorted(ranks)}")
    return _fold(vee, [alpha_word(w) for w in ws])


def proj_left(f: HTerm, m: int, m2: int) -> HTerm:
    """f (1_m x eta_{m2}) : m -> n."""
    dom, _ = infer_type(f)
    if dom != m + m2:
        raise TypeMismatchError(f"projection expects domain {m + m2}, got {dom}")
    return Compose(f, Tensor(Id(m), power_eta(m2)))


def proj_right(f: HTerm, m: int, m2: int) -> HTerm:
    """f (eta_m x 1_{m2}) : m2 -> n."""
    dom, _ = infer_type(f)
    if dom != m + m2:
        raise TypeMismatchError(f"projection expects domain {m + m2}, got {dom}")
    return Compose(f, Tensor(power_eta(m), Id(m2)))
