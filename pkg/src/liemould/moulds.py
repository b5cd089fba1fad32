"""Translation to commutative variables and the alternality machinery.

mi sends a depth-r monomial a^{i1}b...a^{ir}b to v1^{i1}...vr^{ir}
(over {a,c}, with c playing the role of b).  Alternality of a polynomial
or rational function in r slots means every shuffle sum over a split of
the slots into two nonempty ordered blocks vanishes; prealternality is
alternality after division by v1(v1-v2)...(v_{r-1}-v_r)vr, decided here
by clearing denominators, never through a symbolic fraction field.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .derivations import epsilon
from .words import NCPoly, decompose_runs, is_lie_element, sec


class CommPoly:
    """Sparse polynomial in v1..vr: finite map exponent vector -> Fraction.

    The arity r is part of the identity of the object: equal term maps of
    different arities are different polynomials.
    """

    __slots__ = ("arity", "terms")

    def __init__(self, arity: int, terms: dict[tuple[int, ...], Fraction] | None = None):
        self.arity = arity
        clean: dict[tuple[int, ...], Fraction] = {}
        if terms:
            for exp, coeff in terms.items():
                if len(exp) != arity:
                    raise ValueError(f"exponent {exp} does not match arity {arity}")
                c = Fraction(coeff)
                if c:
                    clean[tuple(exp)] = c
        self.terms = clean

    @staticmethod
    def zero(arity: int) -> CommPoly:
        return CommPoly(arity)

    @staticmethod
    def const(arity: int, value: Fraction | int) -> CommPoly:
        return CommPoly(arity, {(0,) * arity: Fraction(value)})

    @staticmethod
    def var(arity: int, index: int) -> CommPoly:
        exp = [0] * arity
        exp[index] = 1
        return CommPoly(arity, {tuple(exp): Fraction(1)})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CommPoly):
            return NotImplemented
        return self.arity == other.arity and self.terms == other.terms

    def __neg__(self) -> CommPoly:
        return CommPoly(self.arity, {e: -c for e, c in self.terms.items()})

    def __add__(self, other: CommPoly) -> CommPoly:
        if self.arity != other.arity:
            raise ValueError("arity mismatch")
        out = dict(self.terms)
        for exp, coeff in other.terms.items():
            s = out.get(exp, 0) + coeff
            if s:
                out[exp] = s
            else:
                out.pop(exp, None)
        res = CommPoly.__new__(CommPoly)
        res.arity = self.arity
        res.terms = out
        return res

    def __sub__(self, other: CommPoly) -> CommPoly:
        return self + (-other)

    def __mul__(self, other: CommPoly | Fraction | int) -> CommPoly:
        if isinstance(other, (Fraction, int)):
            return self.scale(other)
        if self.arity != other.arity:
            raise ValueError("arity mismatch")
        out: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        res = CommPoly.__new__(CommPoly)
        res.arity = self.arity
        res.terms = out
        return res

    def __rmul__(self, other: Fraction | int) -> CommPoly:
        return self.scale(other)

    def scale(self, coeff: Fraction | int) -> CommPoly:
        c = Fraction(coeff)
        if not c:
            return CommPoly(self.arity)
        return CommPoly(self.arity, {e: c * v for e, v in self.terms.items()})

    def __pow__(self, n: int) -> CommPoly:
        if n < 0:
            raise ValueError("negative power")
        out = CommPoly.const(self.arity, 1)
        for _ in range(n):
            out = out * self
        return out

    def substitute(self, images: list[CommPoly]) -> CommPoly:
        """Evaluate at v_t = images[t]; the images share one arity."""
        if len(images) != self.arity:
            raise ValueError("need one image per variable")
        target = images[0].arity if images else 0
        out = CommPoly.zero(target)
        power_cache: list[dict[int, CommPoly]] = [dict() for _ in images]
        for exp, coeff in self.terms.items():
            term = CommPoly.const(target, coeff)
            for t, e in enumerate(exp):
                if e:
                    p = power_cache[t].get(e)
                    if p is None:
                        p = images[t] ** e
                        power_cache[t][e] = p
                    term = term * p
            out = out + term
        return out

    def permute_slots(self, sigma: tuple[int, ...]) -> CommPoly:
        """The polynomial F(v_{sigma^{-1}(1)}, ..., v_{sigma^{-1}(r)}), with
        sigma[t] the image of slot t (0-indexed)."""
        out: dict[tuple[int, ...], Fraction] = {}
        for exp, coeff in self.terms.items():
            new = tuple(exp[sigma[q]] for q in range(self.arity))
            out[new] = out.get(new, Fraction(0)) + coeff
        return CommPoly(self.arity, out)

    def divexact(self, divisor: CommPoly) -> CommPoly:
        """Exact division; raises ValueError when a residue remains."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.arity != divisor.arity:
            raise ValueError("arity mismatch")
        key = lambda e: (sum(e), e)
        lead_d = max(divisor.terms, key=key)
        lead_dc = divisor.terms[lead_d]
        remainder = self
        quotient: dict[tuple[int, ...], Fraction] = {}
        while not remainder.is_zero():
            lead_r = max(remainder.terms, key=key)
            q_exp = tuple(x - y for x, y in zip(lead_r, lead_d))
            if any(e < 0 for e in q_exp):
                raise ValueError("division residue nonzero")
            q_coeff = remainder.terms[lead_r] / lead_dc
            quotient[q_exp] = quotient.get(q_exp, Fraction(0)) + q_coeff
            remainder = remainder - CommPoly(self.arity, {q_exp: q_coeff}) * divisor
        return CommPoly(self.arity, quotient)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exp, coeff in sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0])):
            mono = "*".join(
                f"v{t + 1}" if e == 1 else f"v{t + 1}^{e}" for t, e in enumerate(exp) if e
            )
            if not mono:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append(mono)
            elif coeff == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{coeff}*{mono}")
        out = parts[0]
        for text in parts[1:]:
            out += " - " + text[1:] if text.startswith("-") else " + " + text
        return out

    __repr__ = __str__


@dataclass(frozen=True)
class CommRat:
    """Transient quotient of polynomials, used by alternality-of-fraction checks."""

    numerator: CommPoly
    denominator: CommPoly

    def __post_init__(self):
        if self.numerator.arity != self.denominator.arity:
            raise ValueError("arity mismatch")
        if self.denominator.is_zero():
            raise ZeroDivisionError("zero denominator")


def mi(f: NCPoly, r: int | None = None) -> CommPoly:
    """Commutative image at depth r; with r omitted, the unique nonzero
    component of a depth-homogeneous input (error otherwise)."""
    letters = f.letters()
    if "b" in letters and "c" in letters:
        raise ValueError("mi needs a polynomial over {a,b} or {a,c}")
    depth_letter = "c" if "c" in letters else "b"
    if r is None:
        depths = {w.count(depth_letter) for w in f.terms}
        if len(depths) != 1:
            raise ValueError("depth-inhomogeneous input: pass the depth explicitly")
        r = depths.pop()
    out: dict[tuple[int, ...], Fraction] = {}
    for word, coeff in f.terms.items():
        runs, tail = decompose_runs(word, depth_letter)
        if len(runs) != r or tail != 0:
            continue
        out[runs] = out.get(runs, Fraction(0)) + coeff
    return CommPoly(r, out)


def mi_word(exp: tuple[int, ...], letter: str = "b") -> str:
    """Inverse of the exponent-vector bijection: v1^{i1}..vr^{ir} to a^{i1}L..a^{ir}L."""
    return "".join("a" * e + letter for e in exp)


def _shuffle_permutations(r: int, s: int):
    """All sigma with sigma(1)<..<sigma(s) and sigma(s+1)<..<sigma(r),
    as 0-indexed arrays mapping original slot to shuffled position."""
    for positions in combinations(range(r), s):
        complement = [p for p in range(r) if p not in positions]
        yield tuple(list(positions) + complement)


def alternality_sum(f: CommPoly, s: int) -> CommPoly:
    total = CommPoly.zero(f.arity)
    for sigma in _shuffle_permutations(f.arity, s):
        total = total + f.permute_slots(sigma)
    return total


def is_alternal(f: CommPoly | CommRat) -> bool:
    """Vanishing of every (s, r-s) shuffle sum; arity 1 is vacuously alternal.
    Fractions are decided by clearing denominators split by split."""
    if isinstance(f, CommPoly):
        return all(alternality_sum(f, s).is_zero() for s in range(1, f.arity))
    num, den = f.numerator, f.denominator
    r = num.arity
    for s in range(1, r):
        sigmas = list(_shuffle_permutations(r, s))
        nums = [num.permute_slots(sigma) for sigma in sigmas]
        dens = [den.permute_slots(sigma) for sigma in sigmas]
        total = CommPoly.zero(r)
        for k, n_k in enumerate(nums):
            term = n_k
            for t, d_t in enumerate(dens):
                if t != k:
                    term = term * d_t
            total = total + term
        if not total.is_zero():
            return False
    return True


def mi_denominator(r: int) -> CommPoly:
    """v1 (v1-v2)...(v_{r-1}-v_r) vr, the denominator of the prealternality quotient."""
    out = CommPoly.var(r, 0)
    for t in range(r - 1):
        out = out * (CommPoly.var(r, t) - CommPoly.var(r, t + 1))
    return out * CommPoly.var(r, r - 1)


def is_prealternal(f: CommPoly) -> bool:
    if f.arity <= 1:
        return True
    return is_alternal(CommRat(f, mi_denominator(f.arity)))


def is_bialternal(f: NCPoly) -> bool:
    """Lie element whose mi image is alternal in every depth carrying a
    nonzero component."""
    if f.is_zero():
        return True
    if not is_lie_element(f):
        return False
    letters = f.letters()
    depth_letter = "c" if "c" in letters else "b"
    depths = {w.count(depth_letter) for w in f.terms}
    return all(is_alternal(mi(f, r)) for r in depths)


def hat_epsilon(index: int, f: CommPoly) -> CommPoly:
    """Action induced on commutative variables: pull back through sec to the
    b-terminated polynomial, apply the derivation, translate back at depth r+1."""
    if f.arity < 1:
        raise ValueError("no noncommutative preimage for arity-0 input")
    preimage = NCPoly({mi_word(exp): coeff for exp, coeff in f.terms.items()})
    return mi(epsilon(index).apply(sec(preimage)), f.arity + 1)


# ---------------------------------------------------------------------------
# Closed forms for the iterated action on depth 1..3
# ---------------------------------------------------------------------------

def appendix_P(k: int) -> CommPoly:
    """v1^k, the depth-1 image of the index-k generator applied to a."""
    _check_even(k)
    return CommPoly(1, {(k,): Fraction(1)})


def _q_three_slot(j: int, k: int, x: CommPoly, y: CommPoly, z: CommPoly) -> CommPoly:
    """The two-slot closed form with its difference variable z = x - y kept
    formal, as the verification listing does."""
    return y * z ** (j - 1) * (x ** (k - 1) - y ** (k - 1)) + z * y ** (j - 1) * (
        z ** (k - 1) - x ** (k - 1)
    )


def appendix_Q(j: int, k: int) -> CommPoly:
    """Closed form of the depth-2 iterate."""
    _check_even(j, k)
    v1, v2 = CommPoly.var(2, 0), CommPoly.var(2, 1)
    return _q_three_slot(j, k, v1, v2, v1 - v2)


def appendix_R(i: int, j: int, k: int) -> CommPoly:
    """Closed form of the depth-3 iterate; the fractional prefactors clear
    exactly and a nonzero residue raises (it would signal a transcription
    error in the closed form)."""
    _check_even(i, j, k)
    x1, x2, x3 = (CommPoly.var(3, t) for t in range(3))
    d12, d13, d23 = x1 - x2, x1 - x3, x2 - x3
    q13 = _q_three_slot(j, k, x1, x3, d13)
    q23 = _q_three_slot(j, k, x2, x3, d23)
    q_shift = _q_three_slot(j, k, d13, d23, d12)  # (x - y) slot: d13 - d23 = d12
    q12 = _q_three_slot(j, k, x1, x2, d12)
    term1 = ((d23 * d12 ** (i - 1) - d12 * d23 ** (i - 1)) * q13).divexact(d13)
    term4 = ((x3 * d23 ** (i - 1) - d23 * x3 ** (i - 1)) * q12).divexact(x2)
    return term1 - d12 ** (i - 1) * q23 + x3 ** (i - 1) * q_shift + term4


def appendix_S(i: int, j: int, k: int) -> CommPoly:
    """Alternating combination matching the depth-3 bracket image."""
    return appendix_R(i, j, k) - appendix_R(i, k, j) - appendix_R(j, k, i) + appendix_R(k, j, i)


def appendix_S_identity_holds(i: int, j: int, k: int) -> bool:
    """The three-term cleared identity expressing prealternality of S."""
    s = appendix_S(i, j, k)
    x1, x2, x3 = (CommPoly.var(3, t) for t in range(3))
    s213 = s.substitute([x2, x1, x3])
    s231 = s.substitute([x2, x3, x1])
    total = x2 * (x1 - x3) * s - x1 * (x2 - x3) * s213 - x3 * (x1 - x2) * s231
    return total.is_zero()


def check_remmig(g: NCPoly, r: int) -> bool:
    """For g over {a,c} homogeneous of depth r and f = [a, phi(g)]:
    mi_r(f) = v1(v1-v2)...(v_{r-1}-v_r)vr * mi_r(g)."""
    from .words import A, lie_bracket, phi

    if g.is_zero():
        return True
    f = lie_bracket(A, phi(g))
    return mi(f, r) == mi_denominator(r) * mi(g, r)


def _check_even(*indices: int) -> None:
    for index in indices:
        if index < 2 or index % 2:
            raise ValueError(f"index {index} must be even and >= 2")
