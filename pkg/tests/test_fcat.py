import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import word_tuples
from prophopf import fcat
from prophopf.axioms import hopf_equations, random_words
from prophopf.errors import RankError, TypeMismatchError
from prophopf.fcat import bracket, compose, conv_unit, convolve, hopf_generator, identity, symmetry, tensor
from prophopf.hterm import evaluate, power_delta, power_mu
from prophopf.words import identity_word, mul, word

MU = hopf_generator("mu")
ETA = hopf_generator("eta")
DELTA = hopf_generator("delta")
EPS = hopf_generator("eps")
S = hopf_generator("antipode")


def test_bracket_examples():
    assert bracket(2, 1, (word(1, 1), word(1, 1))) == MU
    assert bracket(1, 2, (word(2, 1, 2),)) == DELTA
    assert bracket(0, 3, ()).words == ()
    with pytest.raises(RankError):
        bracket(2, 1, (word(1, 1),))
    with pytest.raises(RankError):
        bracket(1, 1, (word(2, 1),))


def test_generators():
    assert EPS == fcat.FMorphism(1, 0, (identity_word(0),))
    assert S == bracket(1, 1, (word(1, -1),))
    assert ETA == fcat.FMorphism(0, 1, ())


def test_compose_examples():
    assert compose(DELTA, MU) == bracket(2, 2, (word(2, 1, 2), word(2, 1, 2)))
    f = bracket(2, 3, (word(3, 1, -3), word(3, 2)))
    assert compose(identity(3), f) == f
    assert compose(MU, bracket(1, 2, (word(2, 1, -2),))) == bracket(1, 1, (identity_word(1),))
    with pytest.raises(TypeMismatchError):
        compose(MU, MU)


def test_tensor_examples():
    assert tensor(S, S) == bracket(2, 2, (word(2, -1), word(2, -2)))
    assert tensor(identity(2), identity(3)) == identity(5)
    f = bracket(2, 3, (word(3, 1, -3), word(3, 2)))
    assert tensor(f, bracket(0, 0, ())) == f


def test_identity_examples():
    assert identity(0) == bracket(0, 0, ())
    assert identity(1) == bracket(1, 1, (word(1, 1),))
    assert identity(2) == bracket(2, 2, (word(2, 1), word(2, 2)))


def test_symmetry_examples():
    assert symmetry(1, 1) == bracket(2, 2, (word(2, 2), word(2, 1)))
    assert symmetry(0, 3) == identity(3)
    for m in range(4):
        for n in range(4):
            assert compose(symmetry(n, m), symmetry(m, n)) == identity(m + n)


def test_symmetry_is_natural():
    rng = random.Random(5)
    for _ in range(300):
        a, b, a2, b2 = (rng.randint(0, 3) for _ in range(4))
        f = bracket(a, b, random_words(rng, a, b, 4))
        g = bracket(a2, b2, random_words(rng, a2, b2, 4))
        assert compose(symmetry(b, b2), tensor(f, g)) == compose(tensor(g, f), symmetry(a, a2))


def test_literal_block_swap_with_m_n_exchanged_is_not_natural():
    # [x_{m+1},...,x_{m+n},x_1,...,x_m] only agrees with the block swap when m == n
    def literal(m, n):
        k = m + n
        return bracket(k, k, tuple(word(k, i) for i in list(range(m + 1, k + 1)) + list(range(1, m + 1))))

    f, g = DELTA, tensor(MU, S)
    natural = compose(tensor(g, f), symmetry(1, 3))
    assert compose(symmetry(2, 2), tensor(f, g)) == natural
    assert compose(literal(2, 2), tensor(f, g)) != compose(tensor(g, f), literal(1, 3))
    assert literal(1, 1) == symmetry(1, 1)


def test_convolve_examples():
    x1 = bracket(1, 1, (word(1, 1),))
    assert convolve(x1, S) == conv_unit(1, 1)
    lhs = convolve(identity(2), symmetry(1, 1))
    assert lhs == bracket(2, 2, (word(2, 1, 2), word(2, 2, 1)))
    f = bracket(2, 3, (word(3, 1, -3), word(3, 2)))
    assert convolve(f, conv_unit(2, 3)) == f
    assert conv_unit(0, 2) == bracket(0, 2, ())


def test_convolve_unit_is_eta_eps():
    for m in range(4):
        for n in range(4):
            unit = compose(fcat.FMorphism(0, n, ()), fcat.FMorphism(m, 0, tuple(identity_word(0) for _ in range(m))))
            assert unit == conv_unit(m, n)


def test_hopf_axioms_in_free_groups():
    for name, lhs, rhs in hopf_equations():
        assert evaluate(lhs) == evaluate(rhs), name
    assert compose(S, S) == identity(1)


@given(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3), st.integers(0, 3), st.data())
def test_category_laws(a, b, c, d, data):
    f = bracket(a, b, data.draw(word_tuples(a, b, 4)))
    g = bracket(b, c, data.draw(word_tuples(b, c, 4)))
    h = bracket(c, d, data.draw(word_tuples(c, d, 4)))
    assert compose(h, compose(g, f)) == compose(compose(h, g), f)
    assert compose(identity(b), f) == f == compose(f, identity(a))


def test_category_laws_seeded_thousand():
    rng = random.Random(17)
    for _ in range(1000):
        a, b, c, d = (rng.randint(0, 3) for _ in range(4))
        f, g, h = (bracket(x, y, random_words(rng, x, y, 4)) for x, y in ((a, b), (b, c), (c, d)))
        assert compose(h, compose(g, f)) == compose(compose(h, g), f)
        assert compose(identity(b), f) == f == compose(f, identity(a))


@given(st.data())
def test_monoidal_interchange(data):
    a, b, c, a2, b2, c2 = (data.draw(st.integers(0, 3)) for _ in range(6))
    f = bracket(a, b, data.draw(word_tuples(a, b, 3)))
    g = bracket(b, c, data.draw(word_tuples(b, c, 3)))
    f2 = bracket(a2, b2, data.draw(word_tuples(a2, b2, 3)))
    g2 = bracket(b2, c2, data.draw(word_tuples(b2, c2, 3)))
    assert compose(tensor(g, g2), tensor(f, f2)) == tensor(compose(g, f), compose(g2, f2))


def test_convolution_agrees_with_mu_f_g_delta():
    rng = random.Random(3)
    for _ in range(300):
        m, n = rng.randint(0, 3), rng.randint(0, 3)
        f = bracket(m, n, random_words(rng, m, n, 4))
        g = bracket(m, n, random_words(rng, m, n, 4))
        via_terms = compose(evaluate(power_mu(n)), compose(tensor(f, g), evaluate(power_delta(m))))
        assert convolve(f, g) == via_terms


def test_tau_is_group_isomorphism():
    rng = random.Random(11)
    for _ in range(1000):
        m, n = rng.randint(0, 3), rng.randint(0, 3)
        us, vs = random_words(rng, m, n, 5), random_words(rng, m, n, 5)
        lhs = convolve(bracket(m, n, us), bracket(m, n, vs))
        assert lhs == bracket(m, n, tuple(mul(u, v) for u, v in zip(us, vs)))
        assert convolve(bracket(m, n, us), fcat.conv_inverse(bracket(m, n, us))) == conv_unit(m, n)
        # injective: distinct tuples give distinct brackets
        assert (bracket(m, n, us) == bracket(m, n, vs)) == (us == vs)


def test_str_format():
    assert str(compose(DELTA, MU)) == "[x1 x2, x1 x2 | 2 -> 2]"
    assert str(ETA) == "[ | 0 -> 1]"
    assert str(EPS) == "[1 | 1 -> 0]"
