"""The nine acceptance criteria. Every check is exact; each has a wall-clock budget.

Each test records one ``PASS``/``FAIL`` line, printed in the terminal summary.
"""

import itertools
import random
import subprocess
import sys
import time

from prophopf import fcat
from prophopf.axioms import (
    FuzzConfig,
    delta_mu_sides,
    hopf_equations,
    run_suite,
)
from prophopf.canonical import encode, make_form, unit_form
from prophopf.errors import NonCanonicalError
from prophopf.hterm import ANTIPODE, Compose, Id, evaluate
from prophopf.perm import transpose_perm

SEED = 20241017
RESULTS: dict[int, str] = {}


def check(n, title, budget, body):
    start = time.perf_counter()
    problems = body()
    elapsed = time.perf_counter() - start
    if elapsed >= budget:
        problems.append(f"took {elapsed:.2f}s, budget {budget}s")
    status = "PASS" if not problems else "FAIL"
    line = f"{status} criterion {n}: {title} ({elapsed:.2f}s / {budget}s)"
    if problems:
        line += " -- " + "; ".join(problems[:3])
    RESULTS[n] = line
    print(line)
    assert not problems, line


def failures(report):
    return [f"{report.name}: {f.counterexample} (seed {f.seed})" for f in report.failures]


def test_criterion_1_hopf_axioms():
    def body():
        bad = [name for name, lhs, rhs in hopf_equations() if evaluate(lhs) != evaluate(rhs)]
        if evaluate(Compose(ANTIPODE, ANTIPODE)) != evaluate(Id(1)):
            bad.append("S S = 1")
        return bad

    check(1, "Hopf axioms and involutive antipode in free groups", 1, body)


def test_criterion_2_delta_mu():
    def body():
        bad = []
        for m, n in itertools.product(range(5), repeat=2):
            lhs, rhs = delta_mu_sides(m, n)
            if evaluate(lhs) != evaluate(rhs):
                bad.append(f"m={m} n={n}")
        if transpose_perm(2, 3).map != (1, 3, 5, 2, 4, 6):
            bad.append(f"t_2,3 = {transpose_perm(2, 3).map}")
        for n in range(6):
            if not transpose_perm(1, n).is_identity():
                bad.append(f"t_1,{n} not the identity")
        return bad

    check(2, "generalized Delta-mu relation, m, n <= 4", 5, body)


def test_criterion_3_interchange():
    cfg = FuzzConfig(seed=SEED, max_nodes=30, max_boundary=3, count=1000)
    check(3, "interchange law on 1000 random quadruples", 10, lambda: failures(run_suite("interchange", cfg)))


def test_criterion_4_triangle():
    # the suite runs every y_{i,j,0} with m, n <= 4 before the random tuples
    cfg = FuzzConfig(seed=SEED, count=1000)

    def body():
        report = run_suite("triangle", cfg)
        bad = failures(report)
        if report.cases < 1000 + 100:
            bad.append(f"only {report.cases} cases")
        return bad

    check(4, "T alpha = bracket on generators and 1000 random tuples", 10, body)


def test_criterion_5_normalizers():
    def body():
        bad = failures(run_suite("normalizers", FuzzConfig(seed=SEED, max_nodes=30, max_boundary=4, count=10_000)))
        bad += failures(run_suite("roundtrip", FuzzConfig(seed=SEED, max_boundary=4, count=1000)))
        return bad

    check(5, "rewrite = eval normal forms on 10^4 terms; 10^3 round trips", 60, body)


def test_criterion_6_peeling():
    cfg = FuzzConfig(seed=SEED, count=1000)
    check(6, "peeling terminates in size(c) steps and rebuilds c", 10, lambda: failures(run_suite("peeling", cfg)))


def _forms_out_of_zero(n):
    """Every record with m = 0 and q_j <= 2 that validates and is canonical.

    With m = 0 the sum of p is 0, so any q with a positive entry is rejected
    whatever e and sigma are; one choice of them per q suffices.
    """
    found = []
    for q in itertools.product(range(3), repeat=n):
        s = sum(q)
        for e in ((0,) * s, (1,) * s):
            try:
                c = make_form(0, n, (), q, e, range(1, s + 1))
            except NonCanonicalError:
                continue
            if c.is_canonical():
                found.append(c)
    return sorted(set(found), key=str)


def test_criterion_7_coproducts():
    cfg = FuzzConfig(seed=SEED, count=1000)

    def body():
        bad = failures(run_suite("coproduct", cfg))
        for n in range(5):
            if encode((), n) != unit_form(0, n):
                bad.append(f"encode of the empty tuple at n={n}")
            forms = _forms_out_of_zero(n)
            if forms != [unit_form(0, n)]:
                bad.append(f"canonical forms 0 -> {n}: {[str(c) for c in forms]}")
        return bad

    check(7, "vee and projections inverse; 0 is initial", 10, body)


def test_criterion_8_transport():
    cfg = FuzzConfig(seed=SEED, count=1000)
    check(8, "encode carries word products to conv and inverses to f S", 10, lambda: failures(run_suite("transport", cfg)))


GOLDEN = [
    (["normalize", "--engine=rewrite", "mu . (id(1) x S) . delta"], b"{m:1,n:1,p:[0],q:[0],e:[],sigma:[]}\n"),
    (["eval", "delta . mu"], b"[x1 x2, x1 x2 | 2 -> 2]\n"),
    (["equal", "mu . P(1,1)", "mu"], b"true\n"),
]


def test_criterion_9_cli_goldens():
    def body():
        bad = []
        for argv, expected in GOLDEN:
            for _ in range(2):
                proc = subprocess.run([sys.executable, "-m", "prophopf", *argv], capture_output=True)
                if proc.returncode != 0 or proc.stdout != expected or proc.stderr:
                    bad.append(f"{' '.join(argv)} -> {proc.stdout!r} (exit {proc.returncode})")
        return bad

    check(9, "CLI golden outputs are byte-identical", 30, body)
