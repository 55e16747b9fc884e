"""Seeded random terms, words and canonical forms, and the invariant suites.

Every case of a suite draws from its own ``random.Random`` seeded by a
64-bit case seed; a reported seed reproduces its counterexample through
:func:`run_case`.
"""

from __future__ import annotations

import hashlib
import itertools
import random
from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional

from . import fcat
from .canonical import (
    CanonicalForm,
    decode,
    encode,
    normalize_eval,
    normalize_rewrite,
    peel,
    pointwise_mul,
    rebuild_from_peels,
    to_words,
    unit_form,
)
from .errors import UnknownSuiteError
from .hterm import (
    ANTIPODE,
    DELTA,
    EPS,
    ETA,
    MU,
    Compose,
    Gen,
    HTerm,
    Id,
    Sym,
    Tensor,
    alpha,
    conv,
    evaluate,
    infer_type,
    iterated_delta,
    iterated_mu,
    node_count,
    perm_term,
    power_antipode,
    power_eps,
    power_eta,
    proj_left,
    proj_right,
    tensor_all,
    vee,
    compose_all,
    transposition_term,
)
from .perm import Permutation, transpose_perm
from .syntax import print_term
from .words import Letter, ReducedWord, inv, reduce


@dataclass(frozen=True)
class FuzzConfig:
    seed: int = 1
    max_nodes: int = 30
    max_boundary: int = 4
    count: int = 1000

    def __post_init__(self):
        if self.max_nodes < 1 or self.max_boundary < 0 or self.count < 1:
            raise ValueError(f"invalid fuzz configuration {self}")


@dataclass
class Failure:
    seed: int
    counterexample: str


@dataclass
class SuiteReport:
    name: str
    cases: int = 0
    failures: list[Failure] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def merge(self, other: "SuiteReport") -> "SuiteReport":
        return SuiteReport(self.name, self.cases + other.cases, self.failures + other.failures)

    def __str__(self):
        lines = [f"SUITE {self.name} CASES {self.cases} FAILURES {len(self.failures)}"]
        lines += [f"FAIL seed={f.seed} {f.counterexample}" for f in self.failures]
        return "\n".join(lines)


def case_seed(seed: int, index: int) -> int:
    digest = hashlib.blake2b(f"{seed}:{index}".encode(), digest_size=8).digest()
    return int.from_bytes(digest, "big")


# -- random objects ------------------------------------------------------------------------

_BY_DOMAIN = {0: [ETA], 1: [DELTA, EPS, ANTIPODE], 2: [MU]}


def _leaf(rng: random.Random, dom: int) -> HTerm:
    options = ["id", "sym"] + _BY_DOMAIN.get(dom, [])
    pick = rng.choice(options)
    if pick == "id":
        return Id(dom)
    if pick == "sym":
        a = rng.randint(0, dom)
        return Sym(a, dom - a)
    return pick


def _typed(rng: random.Random, dom: int, budget: int, cap: int) -> HTerm:
    if budget < 3 or rng.random() < 0.03:
        return _leaf(rng, dom)
    rest = budget - 1
    split = rng.randint(1, rest - 1)
    if rng.random() < 0.5:
        d1 = rng.randint(0, dom)
        return Tensor(_typed(rng, d1, split, cap), _typed(rng, dom - d1, rest - split, cap))
    first = _typed(rng, dom, split, cap)
    _, mid = infer_type(first)
    if mid > cap:
        return first
    return Compose(_typed(rng, mid, rest - split, cap), first)


def _pad_codomain(t: HTerm, have: int, want: int) -> HTerm:
    if have == want:
        return t
    if have > want:
        return Compose(Tensor(Id(want), power_eps(have - want)), t)
    return Compose(Tensor(Id(have), power_eta(want - have)), t)


def random_term(
    cfg: FuzzConfig,
    dom: Optional[int] = None,
    cod: Optional[int] = None,
    rng: Optional[random.Random] = None,
) -> HTerm:
    """A well-typed term with at most ``cfg.max_nodes`` nodes where possible.

    Node budgets mix a geometric and a uniform draw; boundaries not requested are drawn from
    0..max_boundary, and the codomain is padded with units or counits.
    """
    rng = rng if rng is not None else random.Random(cfg.seed)
    if dom is None:
        dom = rng.randint(0, cfg.max_boundary)
    target_cod = cod
    # a quarter short terms, the rest spread evenly up to the cap
    if rng.random() < 0.25:
        budget = min(cfg.max_nodes, 1 + int(rng.expovariate(1 / 8)))
    else:
        budget = rng.randint(1, cfg.max_nodes)
    cap = cfg.max_boundary + 2
    while True:
        t = _typed(rng, dom, budget, cap)
        _, have = infer_type(t)
        want = target_cod
        if want is None:
            want = have if have <= cfg.max_boundary else rng.randint(0, cfg.max_boundary)
        padded = _pad_codomain(t, have, want)
        if node_count(padded) <= cfg.max_nodes or budget == 1:
            return padded
        budget = max(1, budget // 2)


def random_word(rng: random.Random, n: int, max_len: int) -> ReducedWord:
    if n == 0:
        return ReducedWord(0, ())
    length = rng.randint(0, max_len)
    return reduce(n, [Letter(rng.randint(1, n), rng.choice((1, -1))) for _ in range(length)])


def random_words(rng: random.Random, m: int, n: int, max_len: int = 6) -> tuple[ReducedWord, ...]:
    return tuple(random_word(rng, n, max_len) for _ in range(m))


def random_form(rng: random.Random, m: int, n: int, max_len: int = 6) -> CanonicalForm:
    return encode(random_words(rng, m, n, max_len), n)


# -- fixed equation catalogues ------------------------------------------------------------------

I1 = Id(1)
P11 = Sym(1, 1)


def hopf_equations() -> list[tuple[str, HTerm, HTerm]]:
    return [
        ("associativity", Compose(MU, Tensor(MU, I1)), Compose(MU, Tensor(I1, MU))),
        ("left unit", Compose(MU, Tensor(ETA, I1)), I1),
        ("right unit", Compose(MU, Tensor(I1, ETA)), I1),
        ("coassociativity", Compose(Tensor(DELTA, I1), DELTA), Compose(Tensor(I1, DELTA), DELTA)),
        ("left counit", Compose(Tensor(EPS, I1), DELTA), I1),
        ("right counit", Compose(Tensor(I1, EPS), DELTA), I1),
        ("counit of unit", Compose(EPS, ETA), Id(0)),
        ("counit of product", Compose(EPS, MU), Tensor(EPS, EPS)),
        ("coproduct of unit", Compose(DELTA, ETA), Tensor(ETA, ETA)),
        (
            "bialgebra",
            Compose(DELTA, MU),
            compose_all([Tensor(MU, MU), tensor_all([I1, P11, I1]), Tensor(DELTA, DELTA)]),
        ),
        ("right antipode", compose_all([MU, Tensor(I1, ANTIPODE), DELTA]), Compose(ETA, EPS)),
        ("left antipode", compose_all([MU, Tensor(ANTIPODE, I1), DELTA]), Compose(ETA, EPS)),
        ("commutativity", Compose(MU, P11), MU),
        ("involutive antipode", Compose(ANTIPODE, ANTIPODE), I1),
    ]


def delta_mu_sides(m: int, n: int) -> tuple[HTerm, HTerm]:
    """Delta^[n] mu^[m]  and  (mu^[m])^{x n} P_{t_{m,n}} (Delta^[n])^{x m}."""
    lhs = Compose(iterated_delta([n]), iterated_mu([m]))
    rhs = compose_all([iterated_mu([m] * n), perm_term(transpose_perm(m, n)), iterated_delta([n] * m)])
    return lhs, rhs


MANIFEST = {
    "hopf-axioms": "mu(mu x 1) = mu(1 x mu); unit laws; coassociativity; counit laws; "
    "eps eta = 1, eps mu = eps x eps, Delta eta = eta x eta; "
    "Delta mu = (mu x mu)(1 x P x 1)(Delta x Delta); mu(1 x S)Delta = mu(S x 1)Delta = eta eps; "
    "mu P = mu; S S = 1 (checked in free groups and by the rewrite normalizer)",
    "associativity": "mu^[m](mu^[k1] x ... x mu^[km]) = mu^[k1+...+km] and the dual, m, ki <= 3",
    "delta-mu": "Delta^[n] mu^[m] = (mu^[m])^{x n} P_t (Delta^[n])^{x m}, t((l-1)n+k) = (k-1)m+l, m, n <= 4",
    "permutations": "sigma -> P_sigma is a homomorphism, independent of the transposition decomposition",
    "category": "free-group composition is associative and unital, tensor is functorial, symmetry is natural",
    "interchange": "(f v f') * (g v g') = (f * g) v (f' * g')",
    "triangle": "T alpha(y_{i,j,0}) = tau(y_{i,j,0}) for m, n <= 4, and T alpha(w) = [w] on random tuples",
    "normalizers": "rewrite normal form = free-group normal form on random terms",
    "roundtrip": "encode/to_words are inverse; decode then normalize is the identity",
    "peeling": "f = y_{i,j,e} * f' with size dropping by one until the unit",
    "coproduct": "vee and (pi, pi') are inverse; 0 is initial",
    "transport": "encode carries pointwise word multiplication to convolution and inversion to f S_m; "
    "alpha is a convolution homomorphism",
}


# -- suites -------------------------------------------------------------------------------------

CaseFn = Callable[[random.Random, FuzzConfig], Optional[str]]


def _fixed(report: SuiteReport, seed: int, label: str, ok: bool):
    report.cases += 1
    if not ok:
        report.failures.append(Failure(seed, label))


def _suite_hopf(cfg: FuzzConfig) -> SuiteReport:
    report = SuiteReport("hopf-axioms")
    for name, lhs, rhs in hopf_equations():
        ok = evaluate(lhs) == evaluate(rhs) and normalize_rewrite(lhs) == normalize_rewrite(rhs)
        _fixed(report, cfg.seed, f"{name}: {print_term(lhs)} = {print_term(rhs)}", ok)
    return report


def _suite_associativity(cfg: FuzzConfig) -> SuiteReport:
    report = SuiteReport("associativity")
    for m in range(4):
        for ks in itertools.product(range(4), repeat=m):
            lhs = Compose(iterated_mu([m]), iterated_mu(ks))
            _fixed(report, cfg.seed, f"mui[{m}] . mui{list(ks)}", evaluate(lhs) == evaluate(iterated_mu([sum(ks)])))
            lhs = Compose(iterated_delta(ks), iterated_delta([m]))
            _fixed(
                report, cfg.seed, f"deltai{list(ks)} . deltai[{m}]", evaluate(lhs) == evaluate(iterated_delta([sum(ks)]))
            )
    return report


def _suite_delta_mu(cfg: FuzzConfig) -> SuiteReport:
    report = SuiteReport("delta-mu")
    for m in range(5):
        for n in range(5):
            lhs, rhs = delta_mu_sides(m, n)
            _fixed(report, cfg.seed, f"m={m} n={n}: {print_term(lhs)} = {print_term(rhs)}", evaluate(lhs) == evaluate(rhs))
    return report


def _case_permutations(rng: random.Random, cfg: FuzzConfig) -> Optional[str]:
    s = rng.randint(0, 6)
    a = list(range(1, s + 1))
    b = list(range(1, s + 1))
    rng.shuffle(a)
    rng.shuffle(b)
    sa, sb = Permutation.of(a), Permutation.of(b)
    lhs = evaluate(perm_term(sa @ sb))
    rhs = fcat.compose(evaluate(perm_term(sa)), evaluate(perm_term(sb)))
    if lhs != rhs or lhs != fcat.permutation((sa @ sb).map):
        return f"perm{list(sa.map)} @ perm{list(sb.map)}"
    # a random adjacent-transposition word for sa, found by a random walk of swaps
    arr, swaps = list(sa.map), []
    while arr != sorted(arr):
        k = rng.randrange(len(arr) - 1)
        if arr[k] > arr[k + 1]:
            arr[k], arr[k + 1] = arr[k + 1], arr[k]
            swaps.append(k + 1)
    alt = compose_all([transposition_term(s, k) for k in reversed(swaps)]) if swaps else Id(s)
    if evaluate(alt) != evaluate(perm_term(sa)):
        return f"decomposition dependence for perm{list(sa.map)}"
    return None


def _random_bracket(rng: random.Random, m: int, n: int) -> fcat.FMorphism:
    return fcat.bracket(m, n, random_words(rng, m, n, 4))


def _case_category(rng: random.Random, cfg: FuzzConfig) -> Optional[str]:
    a, b, c, d = (rng.randint(0, 3) for _ in range(4))
    h, g, f = _random_bracket(rng, c, d), _random_bracket(rng, b, c), _random_bracket(rng, a, b)
    if fcat.compose(h, fcat.compose(g, f)) != fcat.compose(fcat.compose(h, g), f):
        return f"associativity {h} {g} {f}"
    if fcat.compose(fcat.identity(b), f) != f or fcat.compose(f, fcat.identity(a)) != f:
        return f"identity law {f}"
    a2, b2, c2 = (rng.randint(0, 3) for _ in range(3))
    g2, f2 = _random_bracket(rng, b2, c2), _random_bracket(rng, a2, b2)
    lhs = fcat.compose(fcat.tensor(g, g2), fcat.tensor(f, f2))
    if lhs != fcat.tensor(fcat.compose(g, f), fcat.compose(g2, f2)):
        return f"interchange {g} {g2} {f} {f2}"
    nat_l = fcat.compose(fcat.symmetry(b, b2), fcat.tensor(f, f2))
    nat_r = fcat.compose(fcat.tensor(f2, f), fcat.symmetry(a, a2))
    if nat_l != nat_r:
        return f"symmetry naturality {f} {f2}"
    return None


def _random_pair_boundary(rng: random.Random) -> tuple[int, int, int]:
    return rng.randint(0, 3), rng.randint(0, 3), rng.randint(0, 3)


def _case_interchange(rng: random.Random, cfg: FuzzConfig) -> Optional[str]:
    m, m2, n = _random_pair_boundary(rng)
    small = FuzzConfig(cfg.seed, min(cfg.max_nodes, 8), 3, 1)
    f, g = random_term(small, m, n, rng), random_term(small, m, n, rng)
    f2, g2 = random_term(small, m2, n, rng), random_term(small, m2, n, rng)
    lhs = conv(vee(f, f2), vee(g, g2))
    rhs = vee(conv(f, g), conv(f2, g2))
    if evaluate(lhs) != evaluate(rhs):
        return " ; ".join(print_term(t) for t in (f, f2, g, g2))
    return None


def _suite_triangle(cfg: FuzzConfig) -> Iterator[tuple[str, bool]]:
    for m in range(5):
        for n in range(1, 5):
            for i in range(1, m + 1):
                for j in range(1, n + 1):
                    ws = tuple(
                        reduce(n, [Letter(j, 1)]) if k == i else ReducedWord(n, ()) for k in range(1, m + 1)
                    )
                    yield f"y({i},{j},0,{m},{n})", evaluate(alpha(ws, n)) == fcat.bracket(m, n, ws)


def _case_triangle(rng: random.Random, cfg: FuzzConfig) -> Optional[str]:
    m, n = rng.randint(0, 4), rng.randint(0, 4)
    ws = random_words(rng, m, n, 6)
    if evaluate(alpha(ws, n)) != fcat.bracket(m, n, ws):
        return str(fcat.bracket(m, n, ws))
    return None


def _case_normalizers(rng: random.Random, cfg: FuzzConfig) -> Optional[str]:
    t = random_term(cfg, rng=rng)
    if normalize_rewrite(t) != normalize_eval(t):
        return print_term(t)
    return None


def _case_roundtrip(rng: random.Random, cfg: FuzzConfig) -> Optional[str]:
    m, n = rng.randint(0, cfg.max_boundary), rng.randint(0, cfg.max_boundary)
    ws = random_words(rng, m, n, 6)
    c = encode(ws, n)
    if to_words(c) != ws or encode(to_words(c), n) != c or normalize_eval(decode(c)) != c:
        return str(c)
    if normalize_rewrite(decode(c)) != c:
        return str(c)
    return None


def _case_peeling(rng: random.Random, cfg: FuzzConfig) -> Optional[str]:
    m, n = rng.randint(1, 3), rng.randint(1, 3)
    c = random_form(rng, m, n, 5)
    current, triples = c, []
    while current.size:
        triple, nxt = peel(current)
        if nxt.size != current.size - 1 or not nxt.is_canonical():
            return f"peel step of {current}"
        triples.append(triple)
        current = nxt
    if len(triples) != c.size or current != unit_form(m, n):
        return f"peel loop of {c}"
    if normalize_eval(rebuild_from_peels(triples, m, n)) != c:
        return f"rebuild of {c}"
    return None


def _case_coproduct(rng: random.Random, cfg: FuzzConfig) -> Optional[str]:
    m, m2, n = _random_pair_boundary(rng)
    a, b = random_form(rng, m, n, 4), random_form(rng, m2, n, 4)
    joined = vee(decode(a), decode(b))
    if normalize_eval(proj_left(joined, m, m2)) != a or normalize_eval(proj_right(joined, m, m2)) != b:
        return f"projections of vee {a} {b}"
    if normalize_eval(joined) != encode(to_words(a) + to_words(b), n):
        return f"vee concatenation {a} {b}"
    h = decode(random_form(rng, m + m2, n, 4))
    if normalize_eval(vee(proj_left(h, m, m2), proj_right(h, m, m2))) != normalize_eval(h):
        return f"vee of projections {print_term(h)}"
    # 0 is initial: every map out of 0 is the unit
    t = random_term(FuzzConfig(cfg.seed, min(cfg.max_nodes, 12), 4, 1), 0, rng.randint(0, 4), rng)
    _, cod = infer_type(t)
    if normalize_rewrite(t) != unit_form(0, cod) or normalize_eval(t) != unit_form(0, cod):
        return f"non-unit map out of 0: {print_term(t)}"
    return None


def _case_transport(rng: random.Random, cfg: FuzzConfig) -> Optional[str]:
    m, n = rng.randint(0, 3), rng.randint(0, 3)
    a, b = random_form(rng, m, n, 4), random_form(rng, m, n, 4)
    product = encode(pointwise_mul(to_words(a), to_words(b)), n)
    if normalize_eval(conv(decode(a), decode(b))) != product:
        return f"conv {a} {b}"
    inverse = encode(tuple(inv(w) for w in to_words(a)), n)
    twisted = Compose(decode(a), power_antipode(m))
    if normalize_eval(twisted) != inverse or normalize_eval(conv(decode(a), twisted)) != unit_form(m, n):
        return f"inverse {a}"
    us, vs = to_words(a), to_words(b)
    if evaluate(alpha(pointwise_mul(us, vs), n)) != evaluate(conv(alpha(us, n), alpha(vs, n))):
        return f"alpha homomorphism {a} {b}"
    return None


_FIXED = {
    "hopf-axioms": _suite_hopf,
    "associativity": _suite_associativity,
    "delta-mu": _suite_delta_mu,
}

_RANDOM: dict[str, CaseFn] = {
    "permutations": _case_permutations,
    "category": _case_category,
    "interchange": _case_interchange,
    "triangle": _case_triangle,
    "normalizers": _case_normalizers,
    "roundtrip": _case_roundtrip,
    "peeling": _case_peeling,
    "coproduct": _case_coproduct,
    "transport": _case_transport,
}

SUITES = tuple(MANIFEST)


def run_case(name: str, seed: int, cfg: FuzzConfig | None = None) -> Optional[str]:
    """Re-run one random case from its reported seed."""
    if name not in _RANDOM:
        raise UnknownSuiteError(f"no random suite named {name!r}")
    cfg = cfg or FuzzConfig(seed=seed)
    return _RANDOM[name](random.Random(seed), cfg)


def run_suite(name: str, cfg: FuzzConfig | None = None) -> SuiteReport:
    cfg = cfg or FuzzConfig()
    if name in _FIXED:
        return _FIXED[name](cfg)
    if name not in _RANDOM:
        raise UnknownSuiteError(f"unknown suite {name!r}; known: {', '.join(SUITES)}")
    report = SuiteReport(name)
    if name == "triangle":
        for label, ok in _suite_triangle(cfg):
            _fixed(report, cfg.seed, label, ok)
    case = _RANDOM[name]
    for index in range(cfg.count):
        seed = case_seed(cfg.seed, index)
        report.cases += 1
        problem = case(random.Random(seed), cfg)
        if problem is not None:
            report.failures.append(Failure(seed, problem))
    return report


def manifest_text() -> str:
    return "\n".join(f"{name}: {MANIFEST[name]}" for name in SUITES)
