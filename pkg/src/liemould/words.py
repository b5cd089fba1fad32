"""Words and sparse noncommutative polynomials over {a, b, c}.

Words are plain strings over the letters 'a', 'b', 'c' with the fixed
order a < b < c.  The letters a and b have weight 1; c stands for the
bracket [a, b] and therefore has weight 2.  Coefficients are exact
rationals (fractions.Fraction); no operation ever rounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

LETTERS = "abc"


def word_weight(word: str) -> int:
    return len(word) + word.count("c")


def monomial_key(word: str) -> tuple[int, str]:
    """Global monomial order: weight first, then lexicographic (a < b < c)."""
    return (word_weight(word), word)


class NCPoly:
    """Sparse noncommutative polynomial: finite map word -> nonzero Fraction.

    Instances are immutable by convention; every operation returns a new
    polynomial, so values can be shared freely between threads.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict[str, Fraction] | None = None):
        clean: dict[str, Fraction] = {}
        if terms:
            for word, coeff in terms.items():
                c = Fraction(coeff)
                if c:
                    clean[word] = c
        self.terms = clean

    @staticmethod
    def zero() -> NCPoly:
        return NCPoly()

    @staticmethod
    def one() -> NCPoly:
        return NCPoly({"": Fraction(1)})

    @staticmethod
    def word(word: str, coeff: Fraction | int = 1) -> NCPoly:
        for letter in word:
            if letter not in LETTERS:
                raise ValueError(f"unknown letter {letter!r} in word {word!r}")
        return NCPoly({word: Fraction(coeff)})

    def coeff(self, word: str) -> Fraction:
        return self.terms.get(word, Fraction(0))

    def letters(self) -> set[str]:
        return {letter for word in self.terms for letter in word}

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NCPoly):
            return NotImplemented
        return self.terms == other.terms

    def __neg__(self) -> NCPoly:
        return NCPoly({w: -c for w, c in self.terms.items()})

    def __add__(self, other: NCPoly) -> NCPoly:
        out = dict(self.terms)
        for word, coeff in other.terms.items():
            s = out.get(word, 0) + coeff
            if s:
                out[word] = s
            else:
                out.pop(word, None)
        res = NCPoly.__new__(NCPoly)
        res.terms = out
        return res

    def __sub__(self, other: NCPoly) -> NCPoly:
        return self + (-other)

    def __mul__(self, other: NCPoly | Fraction | int) -> NCPoly:
        if isinstance(other, (Fraction, int)):
            return self.scale(other)
        out: dict[str, Fraction] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                s = out.get(w, 0) + c1 * c2
                if s:
                    out[w] = s
                else:
                    out.pop(w, None)
        res = NCPoly.__new__(NCPoly)
        res.terms = out
        return res

    def __rmul__(self, other: Fraction | int) -> NCPoly:
        return self.scale(other)

    def scale(self, coeff: Fraction | int) -> NCPoly:
        c = Fraction(coeff)
        if not c:
            return NCPoly()
        return NCPoly({w: c * v for w, v in self.terms.items()})

    def sorted_terms(self) -> list[tuple[str, Fraction]]:
        return sorted(self.terms.items(), key=lambda kv: monomial_key(kv[0]))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for word, coeff in self.sorted_terms():
            mono = word if word else "1"
            if coeff == 1 and word:
                text = mono
            elif coeff == -1 and word:
                text = "-" + mono
            else:
                text = f"{coeff}*{mono}" if word else str(coeff)
            parts.append(text)
        out = parts[0]
        for text in parts[1:]:
            out += " - " + text[1:] if text.startswith("-") else " + " + text
        return out

    __repr__ = __str__


A = NCPoly.word("a")
B = NCPoly.word("b")
C = NCPoly.word("c")


def lie_bracket(f: NCPoly, g: NCPoly) -> NCPoly:
    """Associative commutator f*g - g*f."""
    return f * g - g * f


def ad_pow(x: NCPoly, n: int, f: NCPoly) -> NCPoly:
    """n-fold nested bracket ad_x^n(f); n = 0 gives f back."""
    if n < 0:
        raise ValueError("ad power must be nonnegative")
    for _ in range(n):
        f = lie_bracket(x, f)
    return f


def uea_act(w: NCPoly | str, f: NCPoly) -> NCPoly:
    """Action of the enveloping algebra: each letter acts by ad,
    rightmost letter applied first; the empty word acts as identity."""
    if isinstance(w, str):
        w = NCPoly.word(w)
    out = NCPoly()
    for word, coeff in w.terms.items():
        acc = f
        for letter in reversed(word):
            acc = lie_bracket(NCPoly.word(letter), acc)
        out = out + acc.scale(coeff)
    return out


_PHI_C = lie_bracket(A, B)  # ab - ba


def phi(f: NCPoly) -> NCPoly:
    """Algebra morphism fixing a, b and substituting [a, b] for c."""
    out = NCPoly()
    for word, coeff in f.terms.items():
        acc = NCPoly.one()
        for letter in word:
            acc = acc * _PHI_C if letter == "c" else acc * NCPoly.word(letter)
        out = out + acc.scale(coeff)
    return out


def pi_last(f: NCPoly, letter: str) -> NCPoly:
    """Projection keeping exactly the monomials whose last letter is `letter`."""
    return NCPoly({w: c for w, c in f.terms.items() if w.endswith(letter)})


def pi_b(f: NCPoly) -> NCPoly:
    return pi_last(f, "b")


def pi_c(f: NCPoly) -> NCPoly:
    return pi_last(f, "c")


def decompose_runs(word: str, letter: str) -> tuple[tuple[int, ...], int]:
    """Split a word over {a, letter} as a^{i1} L a^{i2} L ... a^{ir} L a^{tail}.

    Returns (runs (i1..ir), tail).  Raises if a third letter occurs.
    """
    runs: list[int] = []
    current = 0
    for ch in word:
        if ch == "a":
            current += 1
        elif ch == letter:
            runs.append(current)
            current = 0
        else:
            raise ValueError(f"letter {ch!r} not in alphabet {{a, {letter}}}")
    return tuple(runs), current


def compose_runs(runs: tuple[int, ...], tail: int, letter: str) -> str:
    return "".join("a" * i + letter for i in runs) + "a" * tail


def sec(p: NCPoly) -> NCPoly:
    """Section of pi_b: a^{i1}b...a^{ir}b maps to ad_a^{i1} L_b ... ad_a^{ir} L_b (1),
    with L_b the left multiplication by b.  Rejects non-b-terminated input."""
    out = NCPoly()
    for word, coeff in p.terms.items():
        if not word.endswith("b"):
            raise ValueError(f"sec: monomial {word!r} does not end in b")
        runs, _tail = decompose_runs(word, "b")
        acc = NCPoly.one()
        for exponent in reversed(runs):
            acc = B * acc
            acc = ad_pow(A, exponent, acc)
        out = out + acc.scale(coeff)
    return out


@dataclass(frozen=True)
class Grading:
    is_zero: bool
    weight: int | None
    depth_b: int | None
    depth_c: int | None
    weight_homogeneous: bool
    depth_b_homogeneous: bool
    depth_c_homogeneous: bool


def grading(f: NCPoly) -> Grading:
    """Weight / depth report; each component is reported only when every
    monomial agrees on it.  The zero polynomial is homogeneous of every grading."""
    if f.is_zero():
        return Grading(True, None, None, None, True, True, True)
    weights = {word_weight(w) for w in f.terms}
    depths_b = {w.count("b") for w in f.terms}
    depths_c = {w.count("c") for w in f.terms}
    return Grading(
        False,
        weights.pop() if len(weights) == 1 else None,
        depths_b.pop() if len(depths_b) == 1 else None,
        depths_c.pop() if len(depths_c) == 1 else None,
        not weights,
        not depths_b,
        not depths_c,
    )


# ---------------------------------------------------------------------------
# Lyndon words and the Lie membership test
# ---------------------------------------------------------------------------

def is_lyndon(word: str) -> bool:
    return len(word) > 0 and all(word < word[i:] + word[:i] for i in range(1, len(word)))


def _words_with_counts(letters: str, counts: tuple[int, ...]) -> list[str]:
    words = [""]
    total = sum(counts)
    for _ in range(total):
        step = []
        for w in words:
            used = [w.count(letter) for letter in letters]
            for letter, have, want in zip(letters, used, counts):
                if have < want:
                    step.append(w + letter)
        words = step
    return sorted(set(words))


def lyndon_words(letters: str, counts: tuple[int, ...]) -> list[str]:
    """All Lyndon words with the given letter multiplicities, lexicographic."""
    return [w for w in _words_with_counts(letters, counts) if is_lyndon(w)]


def standard_bracketing(word: str) -> NCPoly:
    """Standard bracketing of a Lyndon word: [u, v] with v the longest
    proper Lyndon suffix."""
    if len(word) == 1:
        return NCPoly.word(word)
    for i in range(1, len(word)):
        if is_lyndon(word[i:]):
            return lie_bracket(standard_bracketing(word[:i]), standard_bracketing(word[i:]))
    raise ValueError(f"{word!r} is not a Lyndon word")


def lyndon_basis(alphabet: str, weight: int, depth: int) -> list[NCPoly]:
    """Standard-bracketing basis of the multigraded Lie component.

    alphabet is "ab" (depth counts b) or "ac" (depth counts c, weight of c is 2).
    """
    if alphabet == "ab":
        n_a = weight - depth
    elif alphabet == "ac":
        n_a = weight - 2 * depth
    else:
        raise ValueError(f"unsupported alphabet {alphabet!r}")
    if n_a < 0 or depth < 0:
        return []
    return [standard_bracketing(w) for w in lyndon_words(alphabet, (n_a, depth))]


_dynkin_cache: dict[str, NCPoly] = {}


def dynkin(word: str) -> NCPoly:
    """Left-to-right bracketing [[..[l1,l2],l3]..,ln] of a word."""
    cached = _dynkin_cache.get(word)
    if cached is not None:
        return cached
    if len(word) <= 1:
        out = NCPoly.word(word) if word else NCPoly.zero()
    else:
        out = dynkin(word[:-1])
        out = out * NCPoly.word(word[-1]) - NCPoly.word(word[-1]) * out
    _dynkin_cache[word] = out
    return out


def is_lie_element(f: NCPoly) -> bool:
    """Dynkin criterion: each length-homogeneous component g of length n
    must satisfy dynkin(g) = n * g.  Requires weight-homogeneous input."""
    if f.is_zero():
        return True
    if not grading(f).weight_homogeneous:
        raise ValueError("is_lie_element requires weight-homogeneous input")
    if "" in f.terms:
        return False
    by_length: dict[int, dict[str, Fraction]] = {}
    for word, coeff in f.terms.items():
        by_length.setdefault(len(word), {})[word] = coeff
    for length, terms in by_length.items():
        component = NCPoly(terms)
        image = NCPoly()
        for word, coeff in terms.items():
            image = image + dynkin(word).scale(coeff)
        if image != component.scale(length):
            return False
    return True


# ---------------------------------------------------------------------------
# The push operator on Q<a, b>
# ---------------------------------------------------------------------------

def push(f: NCPoly) -> NCPoly:
    """Cyclic shift of the a-exponent vector: the monomial with exponents
    (i0, .., ir) around its b's maps to the one with (ir, i0, .., i_{r-1})."""
    out: dict[str, Fraction] = {}
    for word, coeff in f.terms.items():
        if "c" in word:
            raise ValueError("push is defined on polynomials over {a, b}")
        runs, tail = decompose_runs(word, "b")
        exps = runs + (tail,)
        shifted = (exps[-1],) + exps[:-1]
        new_word = compose_runs(shifted[:-1], shifted[-1], "b")
        s = out.get(new_word, 0) + coeff
        if s:
            out[new_word] = s
        else:
            out.pop(new_word, None)
    return NCPoly(out)


def is_push_invariant(f: NCPoly) -> bool:
    return push(f) == f
