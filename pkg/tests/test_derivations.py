import random
from fractions import Fraction

import pytest

from liemould.derivations import (
    Derivation,
    alpha,
    alpha_tilde,
    der_bracket,
    epsilon,
    epsilon_tilde,
    inner,
    inner_tilde,
    poisson,
)
from liemould.words import (
    A,
    B,
    C,
    NCPoly,
    ad_pow,
    is_push_invariant,
    lie_bracket,
    lyndon_basis,
    phi,
)


def random_lie(rng, alphabet, weight, depth):
    out = NCPoly()
    for element in lyndon_basis(alphabet, weight, depth):
        out = out + element.scale(Fraction(rng.randint(-3, 3)))
    return out


def test_epsilon_images():
    e0 = epsilon(0)
    assert e0.images["a"] == B and e0.images["b"].is_zero()
    e4 = epsilon(4)
    assert e4.images["a"] == ad_pow(A, 4, B)
    assert e4.images["b"] == lie_bracket(B, ad_pow(A, 3, B)) - lie_bracket(
        ad_pow(A, 1, B), ad_pow(A, 2, B)
    )
    with pytest.raises(ValueError):
        epsilon(3)
    with pytest.raises(ValueError):
        epsilon(-2)


def test_epsilon_2_is_inner():
    commutator = lie_bracket(A, B)
    expected = Derivation(
        {"a": -lie_bracket(commutator, A), "b": -lie_bracket(commutator, B)}
    )
    assert epsilon(2) == expected


def test_apply():
    assert epsilon(0).apply("a") == B
    assert epsilon(4).apply(lie_bracket(A, B)).is_zero()
    assert epsilon(4).apply("a") == ad_pow(A, 4, B)
    with pytest.raises(ValueError):
        epsilon(4).apply(C)


def test_family_kills_commutator_and_index2_is_central():
    commutator = lie_bracket(A, B)
    for index in range(0, 18, 2):
        assert epsilon(index).apply(commutator).is_zero()
        assert der_bracket(epsilon(2), epsilon(index)).is_zero()


def test_der_bracket():
    e0, e4 = epsilon(0), epsilon(4)
    assert der_bracket(e4, e4).is_zero()
    assert der_bracket(e0, e4).apply("a") == e0.apply(ad_pow(A, 4, B)) - e4.apply("b")
    with pytest.raises(ValueError):
        der_bracket(e0, epsilon_tilde(4))


def test_leibniz():
    rng = random.Random(5)
    for d in (epsilon(0), epsilon(4), epsilon(6)):
        for _ in range(4):
            f = random_lie(rng, "ab", rng.randint(2, 6), rng.choice([1, 2]))
            g = random_lie(rng, "ab", rng.randint(2, 6), rng.choice([1, 2]))
            assert d.apply(lie_bracket(f, g)) == lie_bracket(d.apply(f), g) + lie_bracket(
                f, d.apply(g)
            )


def test_epsilon_tilde_images():
    et2 = epsilon_tilde(2)
    assert et2.images["a"] == lie_bracket(A, C)
    assert et2.images["b"] == lie_bracket(B, C)
    assert et2.images["c"].is_zero()
    et4 = epsilon_tilde(4)
    assert et4.images["b"] == lie_bracket(B, ad_pow(A, 2, C)) - lie_bracket(
        ad_pow(A, 1, B), ad_pow(A, 1, C)
    )
    et0 = epsilon_tilde(0)
    assert et0.images["a"] == B and et0.images["b"].is_zero() and et0.images["c"].is_zero()
    with pytest.raises(ValueError):
        epsilon_tilde(5)


def test_phi_intertwines_families():
    for index in range(0, 14, 2):
        tilde, plain = epsilon_tilde(index), epsilon(index)
        for letter in "abc":
            assert phi(tilde.apply(letter)) == plain.apply(phi(NCPoly.word(letter)))


def test_alpha():
    assert alpha(1) == B
    assert alpha_tilde(2) == C
    assert phi(alpha_tilde(4)) == alpha(4)
    with pytest.raises(ValueError):
        alpha(0)
    with pytest.raises(ValueError):
        alpha_tilde(1)


def test_inner():
    d = inner(B)
    assert d.apply("a") == lie_bracket(A, B)
    assert d.apply("b").is_zero()
    with pytest.raises(ValueError):
        inner(NCPoly.word("ab"))


def test_poisson_basics():
    rng = random.Random(9)
    f = random_lie(rng, "ab", 5, 2)
    assert poisson(f, f).is_zero()
    assert poisson(B, B).is_zero()
    with pytest.raises(ValueError):
        poisson(lie_bracket(A, B), lie_bracket(A, C))


def test_poisson_inner_compatibility():
    rng = random.Random(21)
    for alphabet, make in (("ab", inner), ("ac", inner_tilde)):
        for _ in range(5):
            depth = rng.choice([1, 2])
            weight = rng.randint(depth + 1, 8 if alphabet == "ac" else 6)
            f = random_lie(rng, alphabet, weight, depth)
            g = random_lie(rng, alphabet, weight, depth)
            lhs = der_bracket(make(f), make(g))
            rhs = make(poisson(f, g, alphabet))
            assert lhs == rhs


def test_triple_bracket_equals_poisson_transport():
    import itertools

    for i, j, k in itertools.product((4, 6, 8), repeat=3):
        d = der_bracket(epsilon_tilde(i), der_bracket(epsilon_tilde(j), epsilon_tilde(k)))
        rhs = lie_bracket(A, poisson(alpha_tilde(i), poisson(alpha_tilde(j), alpha_tilde(k))))
        assert d.apply("a") == rhs


def test_push_invariance_of_a_images():
    commutator = lie_bracket(A, B)
    for d in (
        der_bracket(epsilon(4), epsilon(6)),
        der_bracket(epsilon(4), der_bracket(epsilon(6), epsilon(8))),
        der_bracket(epsilon(0), epsilon(8)),
    ):
        assert d.apply(commutator).is_zero()
        assert is_push_invariant(d.apply("a"))
