from fractions import Fraction

import pytest

from liemould.derivations import der_bracket, epsilon, poisson, alpha_tilde
from liemould.exprs import Bracket, Gen, eval_bracket_expr, normalize, parse_bracket_expr
from liemould.fixtures import DELTA_D2, DELTA_D3
from liemould.relations import (
    LiftError,
    PeriodVector,
    bb_monomial_test,
    bialternal_dimension,
    cacb_monomial_test,
    dimension_table,
    divide_by_a,
    express_in_poisson_triples,
    formula_dimension,
    h_element,
    lazard_decompose,
    lift_to_depth3,
    poisson_triple,
    pollack_combination,
    theta3_membership_depth3,
    verify_certificate,
)
from liemould.words import A, B, NCPoly, ad_pow, grading, lie_bracket, phi, uea_act


def test_h_element_examples():
    assert h_element(2, 8, 2) == Bracket(Gen(4), Gen(10))
    assert h_element(4, 6, 2) == Bracket(Gen(6), Gen(8))
    expr = h_element(2, 10, 3)
    terms = {term: coeff for coeff, term in expr.terms}
    assert terms[Bracket(Gen(4), Gen(12, 1))] == Fraction(1, 10)
    assert terms[Bracket(Gen(4, 1), Gen(12))] == Fraction(-1, 2)
    with pytest.raises(ValueError):
        h_element(3, 7, 2)
    with pytest.raises(ValueError):
        h_element(2, 8, 1)


def test_pollack_combination_fixtures():
    assert pollack_combination(DELTA_D2) == normalize(
        parse_bracket_expr("h(2,8,2) - 3*h(4,6,2)")
    )
    assert pollack_combination(DELTA_D3) == normalize(
        parse_bracket_expr("4*h(2,10,3) - 25*h(4,8,3) + 21*h(6,6,3)")
    )
    empty = PeriodVector("zero", 3, 16, {})
    assert pollack_combination(empty).terms == ()


def test_period_vector_validation():
    with pytest.raises(ValueError):
        PeriodVector("bad", 3, 16, {3: Fraction(1)})
    with pytest.raises(ValueError):
        PeriodVector("bad", 3, 16, {14: Fraction(1)})  # q would be < 2


def test_monomial_tests():
    assert not bb_monomial_test(NCPoly.word("bab"))
    assert bb_monomial_test(NCPoly.word("aab"))
    assert bb_monomial_test(NCPoly.zero())
    assert not cacb_monomial_test(NCPoly.word("cacb"))
    assert not cacb_monomial_test(NCPoly.word("aacacb"))
    assert cacb_monomial_test(NCPoly.word("acbc"))
    assert cacb_monomial_test(NCPoly.zero())


def test_theta3_membership():
    assert theta3_membership_depth3(epsilon(4)) is None  # depth 1
    member = theta3_membership_depth3(
        der_bracket(epsilon(4), der_bracket(epsilon(6), epsilon(8)))
    )
    assert member is not None and member.residual.is_zero()
    assert verify_certificate(member)


def test_lazard_decompose():
    d_tilde = uea_act("caca", B)
    assert lazard_decompose(d_tilde) == uea_act("cac", NCPoly.word("c"))
    assert lazard_decompose(NCPoly.zero()).is_zero()
    with pytest.raises(LiftError):
        lazard_decompose(NCPoly.word("cacb") + NCPoly.word("acacb"))


def test_lazard_on_pair_instances():
    # a bare pair is outside the depth-3 span: the pattern is present and
    # elimination must reject it, matching the word-shape tests
    expr = normalize(Bracket(Gen(4), Gen(6, 1)))
    d_plain = eval_bracket_expr(expr, "eps").apply("a")
    d_tilde = eval_bracket_expr(expr, "eps-tilde").apply("a")
    assert not bb_monomial_test(d_plain)
    assert not cacb_monomial_test(d_tilde)
    with pytest.raises(LiftError):
        lazard_decompose(d_tilde)

    # the Delta combination is inside the span and eliminates cleanly
    combo = pollack_combination(DELTA_D3)
    d_tilde = eval_bracket_expr(combo, "eps-tilde").apply("a")
    assert cacb_monomial_test(d_tilde)
    t_tilde = lazard_decompose(d_tilde)
    assert phi(t_tilde) == phi(d_tilde)
    assert grading(t_tilde).depth_c == 3


def test_divide_by_a():
    c = NCPoly.word("c")
    assert divide_by_a(lie_bracket(A, c)) == c
    triple = poisson(alpha_tilde(4), poisson(alpha_tilde(4), alpha_tilde(6)))
    assert divide_by_a(lie_bracket(A, triple)) == triple
    bad = lie_bracket(c, lie_bracket(c, A))
    with pytest.raises(LiftError):
        divide_by_a(bad)


def test_express_in_poisson_triples():
    triple = poisson_triple(2, 3, 4)
    coeffs, null_dim = express_in_poisson_triples(triple)
    rebuilt = NCPoly()
    for label, value in coeffs.items():
        rebuilt = rebuilt + poisson_triple(*label).scale(value)
    assert rebuilt == triple
    assert null_dim >= 0
    assert express_in_poisson_triples(NCPoly.zero()) == ({}, 0)
    outside = lie_bracket(NCPoly.word("c"), lie_bracket(NCPoly.word("c"), ad_pow(A, 2, NCPoly.word("c"))))
    if not outside.is_zero():
        with pytest.raises(LiftError):
            express_in_poisson_triples(outside)


def test_lift_fixed_point():
    cert = lift_to_depth3(parse_bracket_expr("[e4,[e4,e6]]"))
    assert cert.residual.is_zero()
    assert verify_certificate(cert)
    assert cert.coefficients == {(4, 4, 6): Fraction(1)}


def test_lift_zero():
    cert = lift_to_depth3(parse_bracket_expr("[e4,e4]"))
    assert cert.coefficients == {}
    assert cert.residual.is_zero()


def test_lift_rejects_unliftable():
    with pytest.raises(LiftError):
        lift_to_depth3(parse_bracket_expr("h(2,10,3)"))


def test_certificate_json():
    cert = lift_to_depth3(parse_bracket_expr("[e4,[e4,e6]]"))
    data = cert.to_json()
    assert data["kind"] == "depth3-lift"
    assert data["residual"] == []
    assert data["transcript"]["nullspace_dim"] >= 0


def test_dimensions():
    assert bialternal_dimension(9) == 0
    assert bialternal_dimension(11) == 1
    assert bialternal_dimension(13) == 2
    assert [formula_dimension(n) for n in (9, 11, 13, 15, 17, 19)] == [0, 1, 2, 2, 4, 5]
    assert dimension_table(9, 13) == [(9, 0, 0), (11, 1, 1), (13, 2, 2)]
    with pytest.raises(ValueError):
        bialternal_dimension(10)
