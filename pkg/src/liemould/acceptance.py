"""The acceptance suite: every release criterion as an executable check.

Each criterion returns a CriterionResult with exact pass/fail and a
details dictionary; tolerances are identically zero throughout (all
arithmetic is exact).  Randomized suites draw from a fixed seed so the
whole report is reproducible byte for byte.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from . import exprs, fixtures, moulds, relations
from .derivations import der_bracket, epsilon, epsilon_tilde
from .exprs import Bracket, Gen, Sum, eval_bracket_expr, parse_bracket_expr, print_bracket_expr
from .words import (
    A,
    B,
    NCPoly,
    is_push_invariant,
    lie_bracket,
    lyndon_basis,
    phi,
    pi_b,
    sec,
)


@dataclass
class CriterionResult:
    cid: str
    passed: bool
    details: dict = field(default_factory=dict)


def _random_lie(rng: random.Random, alphabet: str, weight: int, depth: int) -> NCPoly:
    out = NCPoly()
    for element in lyndon_basis(alphabet, weight, depth):
        out = out + element.scale(Fraction(rng.randint(-4, 4)))
    return out


def criterion_a1(seed: int = 0) -> CriterionResult:
    """Generator-family identities: every even index kills [a,b] and the
    index-2 derivation commutes with the whole family, indices 0..16."""
    commutator = lie_bracket(A, B)
    kills = all(epsilon(i).apply(commutator).is_zero() for i in range(0, 18, 2))
    central = all(der_bracket(epsilon(2), epsilon(i)).is_zero() for i in range(0, 18, 2))
    return CriterionResult(
        "A1", kills and central, {"kills_commutator": kills, "index2_central": central}
    )


def criterion_a2(seed: int = 0) -> CriterionResult:
    """phi intertwines the two families on the generators, indices 2..12."""
    failures = []
    for index in range(2, 14, 2):
        tilde, plain = epsilon_tilde(index), epsilon(index)
        for letter in "abc":
            if phi(tilde.apply(letter)) != plain.apply(phi(NCPoly.word(letter))):
                failures.append((index, letter))
    return CriterionResult("A2", not failures, {"failures": failures})


def criterion_a3(seed: int = 0) -> CriterionResult:
    """Mould bridge on 30 pseudorandom Lie elements over {a,c} of depth <= 3
    and weight <= 12."""
    rng = random.Random(seed)
    checked = 0
    failures = 0
    while checked < 30:
        depth = rng.choice([1, 2, 3])
        weight = rng.randint(2 * depth + 1, 12)
        g = _random_lie(rng, "ac", weight, depth)
        if g.is_zero():
            continue
        if not moulds.check_remmig(g, depth):
            failures += 1
        checked += 1
    return CriterionResult("A3", failures == 0, {"instances": checked, "failures": failures})


def criterion_a4(seed: int = 0) -> CriterionResult:
    """Closed forms versus the independent sec -> apply -> mi route on
    {4,6,8}, and the three-term prealternality identity on {4,6,8,10}."""
    q_bad = [
        (j, k)
        for j, k in itertools.product((4, 6, 8), repeat=2)
        if moulds.hat_epsilon(j, moulds.appendix_P(k)) != moulds.appendix_Q(j, k)
    ]
    r_bad = [
        (i, j, k)
        for i, j, k in itertools.product((4, 6, 8), repeat=3)
        if moulds.hat_epsilon(i, moulds.appendix_Q(j, k)) != moulds.appendix_R(i, j, k)
    ]
    s_bad = [
        (i, j, k)
        for i, j, k in itertools.product((4, 6, 8, 10), repeat=3)
        if not moulds.appendix_S_identity_holds(i, j, k)
    ]
    ok = not (q_bad or r_bad or s_bad)
    return CriterionResult("A4", ok, {"q_bad": q_bad, "r_bad": r_bad, "s_identity_bad": s_bad})


def criterion_a5(seed: int = 0) -> CriterionResult:
    """Prealternality of the depth-3 commutative image of [e_i,[e_j,e_k]](a)
    for all even i, j, k in {4,6,8}."""
    bad = []
    for i, j, k in itertools.product((4, 6, 8), repeat=3):
        d = der_bracket(epsilon(i), der_bracket(epsilon(j), epsilon(k)))
        if not moulds.is_prealternal(moulds.mi(d.apply("a"), 3)):
            bad.append((i, j, k))
    return CriterionResult("A5", not bad, {"failures": bad})


@lru_cache(maxsize=None)
def _delta_d3_certificates():
    expr = relations.pollack_combination(fixtures.DELTA_D3)
    derivation = eval_bracket_expr(expr, "eps")
    membership = relations.theta3_membership_depth3(derivation)
    lift = relations.lift_to_depth3(expr)
    return expr, derivation, membership, lift


def criterion_a6(seed: int = 0) -> CriterionResult:
    """Delta depth-3 relation end to end: span membership, exact lift
    certificate, and the informational comparison with the quoted
    right-hand side."""
    try:
        expr, derivation, membership, lift = _delta_d3_certificates()
    except relations.LiftError as error:
        return CriterionResult("A6", False, {"pipeline_error": str(error), "stage": error.stage})
    member_ok = membership is not None and membership.residual.is_zero()
    lift_ok = lift.residual.is_zero() and relations.verify_certificate(lift)

    bracket_8_2 = der_bracket(epsilon(8), epsilon(2))
    vanishes = bracket_8_2.is_zero()
    target = derivation.apply("a")
    reference = eval_bracket_expr(parse_bracket_expr(fixtures.EQ1_REFERENCE_TEXT), "eps")
    reference_matches = reference.apply("a") == target
    index4 = eval_bracket_expr(parse_bracket_expr(fixtures.EQ1_INDEX4_TEXT), "eps")
    index4_matches = index4.apply("a") == target
    details = {
        "membership_feasible": membership is not None,
        "lift_coefficients": [
            {"label": list(label), "coeff": relations.frac_to_str(coeff)}
            for label, coeff in sorted(lift.coefficients.items())
        ],
        "lift_nullspace_dim": lift.transcript.get("nullspace_dim"),
        "residual_zero": lift.residual.is_zero(),
        "bracket_e8_e2_vanishes": vanishes,
        "reference_rhs_matches": reference_matches,
        "reference_rhs_with_index4_matches": index4_matches,
    }
    return CriterionResult("A6", member_ok and lift_ok, details)


def criterion_a7(seed: int = 0) -> CriterionResult:
    """Depth-3 alternality dimensions against the closed form for odd
    weights 9..19."""
    table = relations.dimension_table(9, 19)
    expected = {9: 0, 11: 1, 13: 2, 15: 2, 17: 4, 19: 5}
    ok = all(computed == formula == expected[n] for n, computed, formula in table)
    return CriterionResult("A7", ok, {"table": table})


def _pair_instances(rng: random.Random) -> list:
    """Combinations of [e_i, E0^1.e_j] at fixed weights <= 18."""
    instances = []
    for weight in (8, 10, 12, 14, 16, 18):
        pairs = [(i, weight - i) for i in range(4, weight - 3, 2) if weight - i >= 4]
        draws = 2 if weight < 18 else 1
        for _ in range(draws):
            coeffs = [(rng.randint(-3, 3), pair) for pair in pairs]
            if all(c == 0 for c, _ in coeffs):
                coeffs[0] = (1, coeffs[0][1])
            instances.append(
                exprs.normalize(
                    Sum(tuple((Fraction(c), Bracket(Gen(i, 0), Gen(j, 1))) for c, (i, j) in coeffs))
                )
            )
    instances.append(relations.pollack_combination(fixtures.DELTA_D3))
    return instances


def criterion_a8(seed: int = 0) -> CriterionResult:
    """Equivalence of the three depth-3 span criteria on generated
    instances, push-invariance for derivations killing [a,b], and the
    Leibniz / Jacobi / antisymmetry random suites."""
    rng = random.Random(seed)
    instances = _pair_instances(rng)
    equivalence_rows = []
    equivalent = True
    push_ok = True
    for expr in instances:
        derivation = eval_bracket_expr(expr, "eps")
        tilde = eval_bracket_expr(expr, "eps-tilde")
        target = derivation.apply("a")
        word_test = relations.bb_monomial_test(target)
        tilde_test = relations.cacb_monomial_test(tilde.apply("a"))
        member = relations.theta3_membership_depth3(derivation) is not None
        equivalence_rows.append((word_test, tilde_test, member))
        equivalent = equivalent and (word_test == tilde_test == member)
        if not derivation.apply(lie_bracket(A, B)).is_zero() or not is_push_invariant(target):
            push_ok = False

    leibniz_ok = True
    for d in (epsilon(0), epsilon(4), epsilon(6)):
        for _ in range(4):
            f = _random_lie(rng, "ab", rng.randint(2, 6), rng.choice([1, 2]))
            g = _random_lie(rng, "ab", rng.randint(2, 6), rng.choice([1, 2]))
            if d.apply(lie_bracket(f, g)) != lie_bracket(d.apply(f), g) + lie_bracket(f, d.apply(g)):
                leibniz_ok = False

    jacobi_ok = True
    for _ in range(6):
        f = _random_lie(rng, "ab", rng.randint(2, 8), rng.choice([1, 2, 3]))
        g = _random_lie(rng, "ab", rng.randint(2, 8), rng.choice([1, 2, 3]))
        h = _random_lie(rng, "ab", rng.randint(2, 8), rng.choice([1, 2, 3]))
        if not (lie_bracket(f, g) + lie_bracket(g, f)).is_zero():
            jacobi_ok = False
        cyclic = (
            lie_bracket(f, lie_bracket(g, h))
            + lie_bracket(g, lie_bracket(h, f))
            + lie_bracket(h, lie_bracket(f, g))
        )
        if not cyclic.is_zero():
            jacobi_ok = False

    # recorded probe, not asserted: an instance of the same shape with no
    # cusp form behind it must fail to lift somewhere in the pipeline
    probe = {"expr": fixtures.EISENSTEIN_TYPE_TEXT}
    try:
        relations.lift_to_depth3(parse_bracket_expr(fixtures.EISENSTEIN_TYPE_TEXT))
        probe["lifted"] = True
    except relations.LiftError as error:
        probe["lifted"] = False
        probe["stage"] = error.stage

    passed = equivalent and push_ok and leibniz_ok and jacobi_ok
    return CriterionResult(
        "A8",
        passed,
        {
            "instances": len(instances),
            "equivalence_rows": equivalence_rows,
            "push_invariance": push_ok,
            "leibniz": leibniz_ok,
            "jacobi_antisymmetry": jacobi_ok,
            "non_lifting_probe": probe,
        },
    )


def criterion_a9(seed: int = 0) -> CriterionResult:
    """Round trips: section of the b-projection on Lie elements, parse/print
    of bracket expressions, and re-verification of the emitted certificates."""
    rng = random.Random(seed)
    section_ok = True
    for depth in (1, 2, 3):
        for weight in range(depth + 1, 11):
            f = _random_lie(rng, "ab", weight, depth)
            if f.is_zero():
                continue
            if sec(pi_b(f)) != f:
                section_ok = False

    texts = [
        "[e4,[e6,e8]]",
        "[e4,E0^1.e12]",
        "4*h(2,10,3) - 25*h(4,8,3) + 21*h(6,6,3)",
        "-345/8*[e6,[e6,e4]] + 231/20*[e4,[e8,e2]]",
    ]
    parse_ok = True
    for text in texts:
        expr = parse_bracket_expr(text)
        printed = print_bracket_expr(expr)
        if parse_bracket_expr(printed) != expr:
            parse_ok = False

    _, _, membership, lift = _delta_d3_certificates()
    certs_ok = (
        membership is not None
        and relations.verify_certificate(membership)
        and relations.verify_certificate(lift)
    )
    return CriterionResult(
        "A9",
        section_ok and parse_ok and certs_ok,
        {"section": section_ok, "parse_print": parse_ok, "certificates": certs_ok},
    )


CRITERIA = {
    "A1": criterion_a1,
    "A2": criterion_a2,
    "A3": criterion_a3,
    "A4": criterion_a4,
    "A5": criterion_a5,
    "A6": criterion_a6,
    "A7": criterion_a7,
    "A8": criterion_a8,
    "A9": criterion_a9,
}


def run_acceptance_suite(only: list[str] | None = None, seed: int = 0) -> dict:
    """Run the selected criteria (all by default) and return the report."""
    selected = list(CRITERIA) if not only else [cid.upper() for cid in only]
    for cid in selected:
        if cid not in CRITERIA:
            raise ValueError(f"unknown criterion {cid!r}")
    results = [CRITERIA[cid](seed=seed) for cid in selected]
    return {
        "seed": seed,
        "criteria": [
            {"id": r.cid, "passed": r.passed, "details": r.details} for r in results
        ],
        "all_passed": all(r.passed for r in results),
    }
