"""Canonical factorizations  mu^[q] P_sigma (S^e_1 x ... x S^e_s) Delta^[p].

Reading the factorization letter by letter: source slot i emits p_i wires in
order, wire k passes an antipode iff e_k = 1, and sigma routes it into one of
the n merge blocks. The word of slot i is therefore the product of
x_{block(sigma(k))}^{(-1)^e_k} over its wires. A form is canonical when those
words are freely reduced and each block receives its wires in increasing
source order; canonical forms are in bijection with word tuples.

Two normalizers produce canonical forms. :func:`normalize_eval` goes through
the free-group model. :func:`normalize_rewrite` never evaluates: it keeps a
staged three-layer form and absorbs the term bottom-up using the
Delta/mu exchange, pushing antipodes past (co)multiplications, S^2 = 1,
(co)associativity and (co)unit laws, then cancels x x^-1 pairs and sorts each
merge block.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import CannotPeelError, NonCanonicalError, RankError, TypeMismatchError
from .hterm import (
    Compose,
    Gen,
    HTerm,
    Id,
    Sym,
    Tensor,
    antipode_power,
    compose_all,
    conv,
    conv_unit,
    evaluate,
    infer_type,
    iterated_delta,
    iterated_mu,
    perm_term,
    tensor_all,
    y_gen,
)
from .perm import Permutation, transpose_perm
from .words import Letter, ReducedWord, mul


@dataclass(frozen=True)
class CanonicalForm:
    m: int
    n: int
    p: tuple[int, ...]
    q: tuple[int, ...]
    e: tuple[int, ...]
    sigma: Permutation

    def __post_init__(self):
        if len(self.p) != self.m or len(self.q) != self.n:
            raise NonCanonicalError(f"p must have length m={self.m} and q length n={self.n}")
        if any(x < 0 for x in self.p + self.q):
            raise NonCanonicalError("p and q must be non-negative")
        s = sum(self.p)
        if sum(self.q) != s or len(self.e) != s or self.sigma.size != s:
            raise NonCanonicalError(
                f"sizes disagree: sum(p)={s}, sum(q)={sum(self.q)}, len(e)={len(self.e)}, |sigma|={self.sigma.size}"
            )
        if any(bit not in (0, 1) for bit in self.e):
            raise NonCanonicalError("exponent bits must be 0 or 1")

    @property
    def size(self) -> int:
        return len(self.e)

    def record(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "p": list(self.p),
            "q": list(self.q),
            "e": list(self.e),
            "sigma": list(self.sigma.map),
        }

    def __str__(self):
        def seq(xs):
            return "[" + ",".join(map(str, xs)) + "]"

        return (
            f"{{m:{self.m},n:{self.n},p:{seq(self.p)},q:{seq(self.q)},"
            f"e:{seq(self.e)},sigma:{seq(self.sigma.map)}}}"
        )

    def block_of(self, position: int) -> int:
        """1-based merge block containing 1-based target ``position``."""
        upper = 0
        for j, qj in enumerate(self.q, start=1):
            upper += qj
            if position <= upper:
                return j
        raise IndexError(position)

    def is_canonical(self) -> bool:
        try:
            to_words(self)
        except NonCanonicalError:
            return False
        return True


def make_form(m, n, p, q, e, sigma) -> CanonicalForm:
    if not isinstance(sigma, Permutation):
        sigma = Permutation.of(sigma)
    return CanonicalForm(m, n, tuple(p), tuple(q), tuple(e), sigma)


def unit_form(m: int, n: int) -> CanonicalForm:
    return make_form(m, n, (0,) * m, (0,) * n, (), ())


def identity_form(n: int) -> CanonicalForm:
    return make_form(n, n, (1,) * n, (1,) * n, (0,) * n, range(1, n + 1))


# -- word tuples <-> forms ------------------------------------------------------

def encode(ws: Sequence[ReducedWord], n: int | None = None) -> CanonicalForm:
    m = len(ws)
    if m:
        ranks = {w.rank for w in ws}
        if len(ranks) != 1:
            raise RankError(f"words have mixed ranks {sorted(ranks)}")
        (rank,) = ranks
        if n is not None and n != rank:
            raise RankError(f"words have rank {rank}, expected {n}")
        n = rank
    elif n is None:
        raise ValueError("rank is needed to encode an empty tuple")
    letters = [x for w in ws for x in w.letters]
    q = [0] * n
    for x in letters:
        q[x.index - 1] += 1
    offsets = [0] * n
    for j in range(1, n):
        offsets[j] = offsets[j - 1] + q[j - 1]
    sigma = []
    for x in letters:
        offsets[x.index - 1] += 1
        sigma.append(offsets[x.index - 1])
    e = [0 if x.sign > 0 else 1 for x in letters]
    return make_form(m, n, [len(w) for w in ws], q, e, sigma)


def to_words(c: CanonicalForm) -> tuple[ReducedWord, ...]:
    """Inverse of :func:`encode`; rejects forms that are not canonical."""
    blocks = [c.block_of(c.sigma(k)) for k in range(1, c.size + 1)]
    last_position = {}
    for k in range(1, c.size + 1):
        pos = c.sigma(k)
        j = blocks[k - 1]
        if last_position.get(j, 0) > pos:
            raise NonCanonicalError(f"block {j} does not receive its wires in source order")
        last_position[j] = pos
    out = []
    k = 0
    for pi in c.p:
        letters = tuple(Letter(blocks[k + t], -1 if c.e[k + t] else 1) for t in range(pi))
        k += pi
        try:
            out.append(ReducedWord(c.n, letters))
        except ValueError as exc:
            raise NonCanonicalError(str(exc)) from None
    return tuple(out)


def antipode_layer(e: Sequence[int]) -> HTerm:
    return tensor_all([antipode_power(bit) for bit in e])


def factorization_term(p, q, e, sigma) -> HTerm:
    """mu^[q] P_sigma (S^e_1 x ... x S^e_s) Delta^[p], no canonicality required."""
    return compose_all([iterated_mu(q), perm_term(sigma), antipode_layer(e), iterated_delta(p)])


def decode(c: CanonicalForm) -> HTerm:
    if not c.is_canonical():
        raise NonCanonicalError(f"{c} is not canonical")
    return factorization_term(c.p, c.q, c.e, c.sigma)


def size(c: CanonicalForm) -> int:
    return sum(c.p)


# -- normalization through the free-group model -----------------------------------

def normalize_eval(t: HTerm) -> CanonicalForm:
    f = evaluate(t)
    return encode(f.words, f.cod)


def equal(t: HTerm, u: HTerm) -> bool:
    tt, tu = infer_type(t), infer_type(u)
    if tt != tu:
        raise TypeMismatchError(f"cannot compare morphisms {tt[0]} -> {tt[1]} and {tu[0]} -> {tu[1]}")
    return normalize_eval(t) == normalize_eval(u)


# -- normalization by rewriting -----------------------------------------------------

class StagedForm:
    """mu^[q] P_sigma S^e Delta^[p] held as wires.

    ``words[i]`` lists the wires leaving source slot i in order (the
    Delta-layer), ``blocks[j]`` the wires entering merge block j in order (the
    mu-layer); ``sign[w]`` is the antipode bit of wire w. sigma is implicit:
    a wire's source position maps to its position among the blocks.
    """

    __slots__ = ("m", "n", "sign", "words", "blocks")

    def __init__(self, m, n, sign, words, blocks):
        self.m = m
        self.n = n
        self.sign = sign
        self.words = words
        self.blocks = blocks

    @classmethod
    def from_routing(cls, m: int, n: int, routes: Sequence[tuple[int, int, int]]) -> "StagedForm":
        """Wires given as (source slot, sign bit, target block), in source order."""
        sign, words, blocks = [], [[] for _ in range(m)], [[] for _ in range(n)]
        for w, (src, bit, tgt) in enumerate(routes):
            sign.append(bit)
            words[src].append(w)
            blocks[tgt].append(w)
        return cls(m, n, sign, words, blocks)

    def check(self):
        in_words = sorted(w for ws in self.words for w in ws)
        in_blocks = sorted(w for ws in self.blocks for w in ws)
        assert in_words == in_blocks, "staged form lost a wire between the layers"
        assert len(self.words) == self.m and len(self.blocks) == self.n

    def source_order(self) -> list[int]:
        return [w for ws in self.words for w in ws]

    def target_of(self) -> dict[int, int]:
        return {w: j for j, ws in enumerate(self.blocks) for w in ws}

    def data(self):
        """(p, q, e, sigma) of this staged form, exactly as held."""
        order = self.source_order()
        flat = [w for ws in self.blocks for w in ws]
        position = {w: k for k, w in enumerate(flat, start=1)}
        p = [len(ws) for ws in self.words]
        q = [len(ws) for ws in self.blocks]
        assert sum(p) == sum(q), "staged form violates sum(p) == sum(q)"
        return p, q, [self.sign[w] for w in order], [position[w] for w in order]

    def to_term(self) -> HTerm:
        return factorization_term(*self.data())

    def cancel(self) -> "StagedForm":
        """Drop adjacent wires of one source word that meet in the same block
        with opposite antipode bits: mu (1 x S) Delta = eta eps, after using
        commutativity to bring them together in the block."""
        target = self.target_of()
        dead = set()
        words = []
        for ws in self.words:
            stack: list[int] = []
            for w in ws:
                if stack and target[stack[-1]] == target[w] and self.sign[stack[-1]] != self.sign[w]:
                    dead.add(stack.pop())
                    dead.add(w)
                else:
                    stack.append(w)
            words.append(stack)
        if not dead:
            return self
        blocks = [[w for w in ws if w not in dead] for ws in self.blocks]
        return StagedForm(self.m, self.n, self.sign, words, blocks)

    def sort_blocks(self) -> "StagedForm":
        """Commutativity: reorder each merge block by source position."""
        rank = {w: k for k, w in enumerate(self.source_order())}
        blocks = [sorted(ws, key=rank.__getitem__) for ws in self.blocks]
        return StagedForm(self.m, self.n, self.sign, self.words, blocks)

    def canonical(self) -> CanonicalForm:
        p, q, e, sigma = self.cancel().sort_blocks().data()
        return make_form(self.m, self.n, p, q, e, sigma)


def _staged_generator(t: HTerm) -> StagedForm:
    if isinstance(t, Gen):
        if t.kind == "mu":
            return StagedForm.from_routing(2, 1, [(0, 0, 0), (1, 0, 0)])
        if t.kind == "eta":
            return StagedForm.from_routing(0, 1, [])
        if t.kind == "delta":
            return StagedForm.from_routing(1, 2, [(0, 0, 0), (0, 0, 1)])
        if t.kind == "eps":
            return StagedForm.from_routing(1, 0, [])
        return StagedForm.from_routing(1, 1, [(0, 1, 0)])
    if isinstance(t, Id):
        return StagedForm.from_routing(t.n, t.n, [(i, 0, i) for i in range(t.n)])
    if isinstance(t, Sym):
        m, n = t.m, t.n
        routes = [(i, 0, n + i) for i in range(m)] + [(m + i, 0, i) for i in range(n)]
        return StagedForm.from_routing(m + n, n + m, routes)
    raise TypeError(f"not a generator: {t!r}")


def staged_tensor(a: StagedForm, b: StagedForm) -> StagedForm:
    shift = len(a.sign)
    words = [list(ws) for ws in a.words] + [[w + shift for w in ws] for ws in b.words]
    blocks = [list(ws) for ws in a.blocks] + [[w + shift for w in ws] for ws in b.blocks]
    return StagedForm(a.m + b.m, a.n + b.n, a.sign + b.sign, words, blocks)


def staged_compose(b: StagedForm, a: StagedForm) -> StagedForm:
    """Stage ``b`` after ``a``; the middle Delta^[p'] mu^[q] is rewritten away."""
    if a.n != b.m:
        raise TypeMismatchError(f"boundary mismatch: {a.n} != {b.m}")
    sign: list[int] = []
    delta_side: dict[int, list[int]] = {}
    mu_side: dict[int, list[int]] = {}
    for j in range(a.n):
        ins, outs = a.blocks[j], b.words[j]
        rows, cols = len(ins), len(outs)
        # Delta^[cols] mu^[rows] = (mu^[rows])^{x cols} P_t (Delta^[cols])^{x rows};
        # the copy of in-wire l along out-wire k sits at Delta-side position
        # (l-1)cols + k and at mu-side position t((l-1)cols + k).
        t = transpose_perm(rows, cols)
        mu_order = [0] * (rows * cols)
        for l, wa in enumerate(ins):
            copies = []
            for k, wb in enumerate(outs):
                w = len(sign)
                # S^ea then S^eb on one wire; S^2 = 1
                sign.append(a.sign[wa] ^ b.sign[wb])
                copies.append(w)
                mu_order[t(l * cols + k + 1) - 1] = w
            # Delta^[k] S = S^{x k} P_reverse Delta^[k]
            delta_side[wa] = copies[::-1] if a.sign[wa] else copies
        for k, wb in enumerate(outs):
            group = mu_order[k * rows:(k + 1) * rows]
            # S mu^[k] = mu^[k] P_reverse S^{x k}
            mu_side[wb] = group[::-1] if b.sign[wb] else group
    # coassociativity on the source side, associativity on the target side;
    # an empty group is Delta eta = eta x eta or eps mu = eps x eps
    words = [[w for wa in ws for w in delta_side[wa]] for ws in a.words]
    blocks = [[w for wb in ws for w in mu_side[wb]] for ws in b.blocks]
    return StagedForm(a.m, b.n, sign, words, blocks)


def _stage(t: HTerm, check: bool) -> StagedForm:
    if isinstance(t, Compose):
        staged = staged_compose(_stage(t.left, check), _stage(t.right, check)).cancel()
    elif isinstance(t, Tensor):
        staged = staged_tensor(_stage(t.left, check), _stage(t.right, check))
    else:
        staged = _staged_generator(t)
    if check:
        staged.check()
        if evaluate(staged.to_term()) != evaluate(t):
            raise AssertionError(f"rewrite step changed the value of {t!r}")
    return staged


def normalize_rewrite(t: HTerm, check: bool = False) -> CanonicalForm:
    """Canonical form computed without evaluating into free groups.

    With ``check=True`` every intermediate staged form is rebuilt as a term
    and compared against the subterm it replaces (slow; for debugging).
    """
    infer_type(t)
    return _stage(t, check).canonical()


# -- peeling ---------------------------------------------------------------------------

def peel(c: CanonicalForm) -> tuple[tuple[int, int, int], CanonicalForm]:
    """Split off the first letter: ``c = y_{i,j,e} * rest`` with size one less."""
    if c.size == 0:
        raise CannotPeelError("the convolution unit has nothing to peel")
    i = next(k for k, pk in enumerate(c.p, start=1) if pk > 0)
    e = c.e[0]
    first = c.sigma(1)
    j = c.block_of(first)
    if first != sum(c.q[: j - 1]) + 1:
        raise NonCanonicalError("first wire is not first in its block")
    p = list(c.p)
    p[i - 1] -= 1
    q = list(c.q)
    q[j - 1] -= 1
    sigma = [x - 1 if x > first else x for x in c.sigma.map[1:]]
    return (i, j, e), make_form(c.m, c.n, p, q, c.e[1:], sigma)


def peel_all(c: CanonicalForm) -> list[tuple[int, int, int]]:
    out = []
    while c.size:
        triple, c = peel(c)
        out.append(triple)
    return out


def rebuild_from_peels(triples: Sequence[tuple[int, int, int]], m: int, n: int) -> HTerm:
    """y_1 * (y_2 * ( ... * unit))."""
    t = conv_unit(m, n)
    for i, j, e in reversed(triples):
        t = conv(y_gen(i, j, e, m, n), t)
    return t


# -- word-level helpers used by the transport checks ----------------------------------

def pointwise_mul(us: Sequence[ReducedWord], vs: Sequence[ReducedWord]) -> tuple[ReducedWord, ...]:
    if len(us) != len(vs):
        raise RankError("tuples of different lengths")
    return tuple(mul(u, v) for u, v in zip(us, vs))
