"""The relation engine: highest-weight bracket combinations, period-vector
relations, the depth-3 span test, and the constructive lifting pipeline.

The lifting pipeline turns a derivation built from brackets of the even
generator family (the shape sum of [x_i^0, x_j^1], depth 3) into an exact
combination of triple brackets of depth-1 generators.  Each stage leaves
its intermediate objects in the certificate transcript so the whole run
can be re-verified independently.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb

from . import exprs
from .derivations import (
    Derivation,
    alpha_tilde,
    der_bracket,
    epsilon,
    poisson,
)
from .exprs import Bracket, Expr, Gen, Sum
from .linalg import RowSpan, rref, solve
from .moulds import alternality_sum, is_bialternal, mi
from .serialize import frac_to_str, ncpoly_to_json
from .words import (
    A,
    B,
    NCPoly,
    ad_pow,
    grading,
    is_push_invariant,
    lie_bracket,
    lyndon_basis,
    monomial_key,
    phi,
    uea_act,
)


class LiftError(RuntimeError):
    """A pipeline stage could not complete; carries the stage name."""

    def __init__(self, stage: str, message: str):
        super().__init__(f"{stage}: {message}")
        self.stage = stage


# ---------------------------------------------------------------------------
# Highest-weight combinations and period vectors
# ---------------------------------------------------------------------------

def h_element(p: int, q: int, d: int) -> Expr:
    """The highest-weight combination
    sum over i+j=d-2 of (-1)^i (d-2)!/(C(p,i) C(q,j)) [E0^i.e_{p+2}, E0^j.e_{q+2}]."""
    if p < 2 or q < 2 or p % 2 or q % 2:
        raise ValueError("p and q must be even and >= 2")
    if d < 2:
        raise ValueError("d must be >= 2")
    factorial = 1
    for t in range(2, d - 1):
        factorial *= t
    terms = []
    for i in range(d - 1):
        j = d - 2 - i
        coeff = Fraction((-1) ** i * factorial, comb(p, i) * comb(q, j))
        terms.append((coeff, Bracket(Gen(p + 2, i), Gen(q + 2, j))))
    return exprs.normalize(Sum(tuple(terms)))


@dataclass(frozen=True)
class PeriodVector:
    """Rational period data of a modular form, indexed by the even p with
    p + q = n - 4; the entry at p stands for the (p - d + 2)-nd period."""

    label: str
    d: int
    weight: int
    coefficients: dict[int, Fraction] = field(hash=False)
    provenance: str = ""

    def __post_init__(self):
        for p in self.coefficients:
            q = self.weight - 4 - p
            if p % 2 or q % 2 or p < 2 or q < 2:
                raise ValueError(f"invalid period index p={p} for weight {self.weight}")


def pollack_combination(pv: PeriodVector) -> Expr:
    """sum over p of r_{p-d+2} h^d_{p, n-4-p}."""
    terms = []
    for p in sorted(pv.coefficients):
        coeff = pv.coefficients[p]
        if coeff:
            terms.append((Fraction(coeff), h_element(p, pv.weight - 4 - p, pv.d)))
    return exprs.normalize(Sum(tuple(terms)))


# ---------------------------------------------------------------------------
# Word-shape tests
# ---------------------------------------------------------------------------

def bb_monomial_test(poly: NCPoly) -> bool:
    """True iff no monomial both starts and ends with b."""
    return not any(w.startswith("b") and w.endswith("b") for w in poly.terms)


_CACB = re.compile(r"^a*ca*cb$")


def cacb_monomial_test(poly: NCPoly) -> bool:
    """True iff no monomial matches a^i c a^j c b exactly."""
    return not any(_CACB.match(w) for w in poly.terms)


# ---------------------------------------------------------------------------
# Certificates
# ---------------------------------------------------------------------------

@dataclass
class RelationCertificate:
    kind: str                       # "theta3-membership" | "depth3-lift"
    basis_labels: list[tuple]
    coefficients: dict[tuple, Fraction]
    target: NCPoly                  # the a-image being expressed
    residual: NCPoly                # must be zero
    transcript: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "basis": [list(label) for label in self.basis_labels],
            "coefficients": [
                {"label": list(label), "coeff": frac_to_str(coeff)}
                for label, coeff in sorted(self.coefficients.items())
            ],
            "target": ncpoly_to_json(self.target),
            "residual": ncpoly_to_json(self.residual),
            "transcript": self.transcript,
        }


def _word_basis(polys: list[NCPoly]) -> list[str]:
    words = set()
    for poly in polys:
        words.update(poly.terms)
    return sorted(words, key=monomial_key)


def _to_vectors(polys: list[NCPoly], words: list[str]) -> list[dict[int, Fraction]]:
    position = {w: t for t, w in enumerate(words)}
    return [{position[w]: c for w, c in poly.terms.items()} for poly in polys]


# ---------------------------------------------------------------------------
# Theta^3 membership at depth 3
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def theta3_span(weight: int) -> tuple[tuple[tuple[int, int, int], ...], tuple[NCPoly, ...]]:
    """Triple brackets [a^i.b, [a^j.b, a^k.b]] with i,j,k >= 1 and
    i+j+k = weight - 3, in lexicographic label order."""
    labels = []
    polys = []
    total = weight - 3
    for i in range(1, total - 1):
        for j in range(1, total - i):
            k = total - i - j
            if k < 1:
                continue
            labels.append((i, j, k))
            polys.append(
                lie_bracket(ad_pow(A, i, B), lie_bracket(ad_pow(A, j, B), ad_pow(A, k, B)))
            )
    return tuple(labels), tuple(polys)


@lru_cache(maxsize=None)
def _theta3_reducer(weight: int) -> tuple[tuple[tuple[int, int, int], ...], tuple[str, ...], RowSpan]:
    labels, polys = theta3_span(weight)
    words = tuple(_word_basis(list(polys)))
    span = RowSpan(_to_vectors(list(polys), list(words)))
    return labels, words, span


def theta3_membership_depth3(d: Derivation) -> RelationCertificate | None:
    """Exact coordinates of D(a) in the depth-3 bracket span, or None."""
    target = d.apply("a")
    if target.is_zero():
        return RelationCertificate("theta3-membership", [], {}, target, NCPoly.zero())
    info = grading(target)
    if not info.weight_homogeneous or not info.depth_b_homogeneous:
        raise ValueError("theta3 membership needs a bihomogeneous a-image")
    if info.depth_b != 3 or info.depth_c:
        return None
    labels, words, span = _theta3_reducer(info.weight)
    position = {w: t for t, w in enumerate(words)}
    try:
        vector = {position[w]: c for w, c in target.terms.items()}
    except KeyError:
        return None  # a word outside the span support cannot be reached
    coeffs = span.membership(vector)
    if coeffs is None:
        return None
    coefficients = {labels[idx]: value for idx, value in coeffs.items()}
    _, polys = theta3_span(info.weight)
    recombined = NCPoly()
    for idx, value in coeffs.items():
        recombined = recombined + polys[idx].scale(value)
    certificate = RelationCertificate(
        "theta3-membership",
        list(labels),
        coefficients,
        target,
        recombined - target,
    )
    if certificate.residual:
        raise LiftError("theta3-membership", "solver returned a non-solution")
    return certificate


# ---------------------------------------------------------------------------
# The lifting pipeline
# ---------------------------------------------------------------------------

def lazard_decompose(d_tilde: NCPoly) -> NCPoly:
    """Rewrite a (weight-homogeneous, b-degree 1, c-degree 2) polynomial as
    sum lambda_w w.b over words w in {a,c}, and return sum lambda_{w'a} w'.c.

    The coefficients are read off triangularly: lambda_w is the coefficient
    of the concatenation word w+b.  Words w ending in c (the a^i c a^j c b
    pattern) violate the precondition and are reported with the offending
    coefficient.
    """
    info = grading(d_tilde)
    if d_tilde.is_zero():
        return NCPoly.zero()
    if not (info.weight_homogeneous and info.depth_b == 1 and info.depth_c == 2):
        raise LiftError("lazard", "input must be homogeneous of degree 1 in b and 2 in c")
    coefficients: dict[str, Fraction] = {}
    for word, coeff in d_tilde.terms.items():
        if word.endswith("b"):
            w = word[:-1]
            if "b" in w:
                continue
            if w.endswith("c"):
                raise LiftError(
                    "lazard",
                    f"monomial of shape a^i c a^j c b present (lambda[{w!r}] = {coeff})",
                )
            coefficients[w] = coeff
    reconstructed = NCPoly()
    for w, coeff in coefficients.items():
        reconstructed = reconstructed + uea_act(w, B).scale(coeff)
    if reconstructed != d_tilde:
        raise LiftError("lazard", "elimination coefficients do not reproduce the input")
    t_tilde = NCPoly()
    for w, coeff in coefficients.items():
        t_tilde = t_tilde + uea_act(w[:-1], NCPoly.word("c")).scale(coeff)
    if phi(t_tilde) != phi(d_tilde):
        raise LiftError("lazard", "phi images disagree after elimination")
    return t_tilde


def divide_by_a(t_tilde: NCPoly) -> NCPoly:
    """Solve [a, q] = t over the Lyndon basis of the {a,c} component of q."""
    if t_tilde.is_zero():
        return NCPoly.zero()
    info = grading(t_tilde)
    if not info.weight_homogeneous or not info.depth_c_homogeneous or info.depth_b:
        raise LiftError("divide-by-a", "input must be bihomogeneous over {a,c}")
    basis = lyndon_basis("ac", info.weight - 1, info.depth_c)
    images = [lie_bracket(A, q) for q in basis]
    words = _word_basis(images + [t_tilde])
    vectors = _to_vectors(images, words)
    target_vec = _to_vectors([t_tilde], words)[0]
    rows: dict[int, dict[int, Fraction]] = {}
    for col, vec in enumerate(vectors):
        for word_idx, value in vec.items():
            rows.setdefault(word_idx, {})[col] = value
    equations = [rows.get(i, {}) for i in range(len(words))]
    rhs = {i: target_vec.get(i, Fraction(0)) for i in range(len(words))}
    result = solve(equations, rhs, len(basis))
    if result.particular is None:
        raise LiftError("divide-by-a", f"no preimage under [a, .]; rref row {result.infeasible_row}")
    q_tilde = NCPoly()
    for col, value in result.particular.items():
        q_tilde = q_tilde + basis[col].scale(value)
    if lie_bracket(A, q_tilde) != t_tilde:
        raise LiftError("divide-by-a", "solver returned a non-solution")
    return q_tilde


def poisson_triple(i: int, j: int, k: int) -> NCPoly:
    """{alpha~_{2i}, {alpha~_{2j}, alpha~_{2k}}} over {a, c}."""
    return poisson(alpha_tilde(2 * i), poisson(alpha_tilde(2 * j), alpha_tilde(2 * k)))


def poisson_triple_labels(weight: int) -> list[tuple[int, int, int]]:
    """Ordered triples (i, j, k), i+j+k = weight/2, all >= 2, lexicographic."""
    if weight % 2:
        return []
    total = weight // 2
    labels = []
    for i in range(2, total - 3):
        for j in range(2, total - i - 1):
            k = total - i - j
            if k >= 2:
                labels.append((i, j, k))
    return labels


def express_in_poisson_triples(q_tilde: NCPoly) -> tuple[dict[tuple[int, int, int], Fraction], int]:
    """Exact coordinates of a bialternal depth-3 element of Lie[a,c] over the
    spanning family of nested Poisson brackets; returns the deterministic
    particular solution and the nullspace dimension."""
    if q_tilde.is_zero():
        return {}, 0
    info = grading(q_tilde)
    if not info.weight_homogeneous or info.depth_c != 3 or info.depth_b:
        raise LiftError("poisson-express", "input must be homogeneous of degree 3 in c over {a,c}")
    labels = poisson_triple_labels(info.weight)
    triples = [poisson_triple(*label) for label in labels]
    words = _word_basis(triples + [q_tilde])
    vectors = _to_vectors(triples, words)
    target_vec = _to_vectors([q_tilde], words)[0]
    rows: dict[int, dict[int, Fraction]] = {}
    for col, vec in enumerate(vectors):
        for word_idx, value in vec.items():
            rows.setdefault(word_idx, {})[col] = value
    equations = [rows.get(i, {}) for i in range(len(words))]
    rhs = {i: target_vec.get(i, Fraction(0)) for i in range(len(words))}
    result = solve(equations, rhs, len(labels))
    if result.particular is None:
        raise LiftError(
            "poisson-express",
            f"bialternal element outside the Poisson-triple span; rref row {result.infeasible_row}",
        )
    coefficients = {labels[col]: value for col, value in result.particular.items()}
    return coefficients, len(result.nullspace)


def eps_triple_bracket(i: int, j: int, k: int) -> Derivation:
    """[e_{2i}, [e_{2j}, e_{2k}]] in the {a,b} family."""
    return der_bracket(epsilon(2 * i), der_bracket(epsilon(2 * j), epsilon(2 * k)))


def lift_to_depth3(expr: Expr) -> RelationCertificate:
    """Run the constructive lifting pipeline on a formal bracket expression.

    The expression is evaluated in both families; the pipeline is
    elimination -> division by a -> bialternality check -> Poisson
    coordinates -> transport back, and the certificate's residual is the
    exact difference between the re-evaluated combination and the target.
    """
    d_plain = exprs.eval_bracket_expr(expr, "eps")
    d_tilde_der = exprs.eval_bracket_expr(expr, "eps-tilde")
    target = d_plain.apply("a")
    d_tilde = d_tilde_der.apply("a")
    if phi(d_tilde) != target:
        raise LiftError("setup", "phi does not intertwine the two evaluations")
    commutator = lie_bracket(A, B)
    if not d_plain.apply(commutator).is_zero():
        raise LiftError("setup", "derivation does not kill [a, b]")
    transcript: dict = {
        "bb_monomial_test": bb_monomial_test(target),
        "cacb_monomial_test": cacb_monomial_test(d_tilde),
        "push_invariant": is_push_invariant(target),
    }
    if target.is_zero():
        return RelationCertificate("depth3-lift", [], {}, target, NCPoly.zero(), transcript)

    info = grading(d_tilde)
    if info.depth_b == 0:
        t_tilde = d_tilde  # already inside Lie[a, c]
    else:
        t_tilde = lazard_decompose(d_tilde)
    transcript["t_tilde"] = ncpoly_to_json(t_tilde)

    if not transcript["push_invariant"]:
        raise LiftError("divide-by-a", "a-image is not push-invariant")
    q_tilde = divide_by_a(t_tilde)
    transcript["q_tilde"] = ncpoly_to_json(q_tilde)

    if not is_bialternal(q_tilde):
        raise LiftError("bialternality", "quotient is not bialternal")
    transcript["q_tilde_bialternal"] = True

    coefficients, null_dim = express_in_poisson_triples(q_tilde)
    transcript["poisson_coordinates"] = [
        {"label": list(label), "coeff": frac_to_str(value)}
        for label, value in sorted(coefficients.items())
    ]
    transcript["nullspace_dim"] = null_dim

    recombined_a = NCPoly()
    recombined_b = NCPoly()
    for (i, j, k), value in coefficients.items():
        bracket = eps_triple_bracket(i, j, k)
        recombined_a = recombined_a + bracket.apply("a").scale(value)
        recombined_b = recombined_b + bracket.apply("b").scale(value)
    residual = recombined_a - target
    labels = [(2 * i, 2 * j, 2 * k) for (i, j, k) in sorted(coefficients)]
    certificate = RelationCertificate(
        "depth3-lift",
        labels,
        {(2 * i, 2 * j, 2 * k): v for (i, j, k), v in coefficients.items()},
        target,
        residual,
        transcript,
    )
    if residual:
        raise LiftError("re-evaluation", f"nonzero residual {residual}")
    if recombined_b != d_plain.apply("b"):
        raise LiftError("re-evaluation", "b-images disagree")
    transcript["b_image_check"] = True
    return certificate


def verify_certificate(cert: RelationCertificate) -> bool:
    """Recompute the combination named by the certificate and compare with
    the stored target; certificates must replay exactly."""
    recombined = NCPoly()
    if cert.kind == "theta3-membership":
        for (i, j, k), value in cert.coefficients.items():
            element = lie_bracket(ad_pow(A, i, B), lie_bracket(ad_pow(A, j, B), ad_pow(A, k, B)))
            recombined = recombined + element.scale(value)
    elif cert.kind == "depth3-lift":
        for (ei, ej, ek), value in cert.coefficients.items():
            bracket = der_bracket(epsilon(ei), der_bracket(epsilon(ej), epsilon(ek)))
            recombined = recombined + bracket.apply("a").scale(value)
    else:
        raise ValueError(f"unknown certificate kind {cert.kind!r}")
    return recombined - cert.target == cert.residual and cert.residual.is_zero()


# ---------------------------------------------------------------------------
# Bialternal dimensions at depth 3
# ---------------------------------------------------------------------------

def bialternal_dimension(n: int) -> int:
    """Dimension of the weight-n, depth-3 subspace of Lie[a,b] whose
    commutative image is alternal, by exact rank computation."""
    if n % 2 == 0:
        raise ValueError("the depth-3 dimension table is indexed by odd weights")
    basis = lyndon_basis("ab", n, 3)
    if not basis:
        return 0
    constraints = []
    for element in basis:
        image = mi(element, 3)
        constraints.append((alternality_sum(image, 1), alternality_sum(image, 2)))
    exponents = sorted({e for pair in constraints for poly in pair for e in poly.terms})
    position = {e: t for t, e in enumerate(exponents)}
    offset = len(exponents)
    rows = []
    for first, second in constraints:
        row = {position[e]: c for e, c in first.terms.items()}
        row.update({offset + position[e]: c for e, c in second.terms.items()})
        rows.append(row)
    _, pivots = rref(rows)
    return len(basis) - len(pivots)


def formula_dimension(n: int) -> int:
    """Closed form floor(((n-3)^2 - 1) / 48), clamped at 0."""
    if n % 2 == 0:
        raise ValueError("the closed form is stated for odd weights")
    return max(0, ((n - 3) ** 2 - 1) // 48)


def dimension_table(start: int, stop: int) -> list[tuple[int, int, int]]:
    """Rows (n, computed, formula) for odd n in [start, stop]."""
    table = []
    for n in range(start, stop + 1):
        if n % 2:
            table.append((n, bialternal_dimension(n), formula_dimension(n)))
    return table
