"""Derivations of the free Lie algebras, given by their images on generators.

Covers the even derivation families on Lie[a,b] and Lie[a,b,c], inner
derivations, Poisson brackets, and bracket/linear-combination arithmetic
on derivations.  Application to arbitrary polynomials goes through the
Leibniz rule and is memoized per (derivation, word).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .words import (
    A,
    B,
    C,
    NCPoly,
    ad_pow,
    is_lie_element,
    lie_bracket,
)


class Derivation:
    """A derivation stored by its images on the alphabet letters.

    Immutable after construction; the per-word memo table is the only
    internal cache and each entry is written once.
    """

    __slots__ = ("alphabet", "images", "_cache")

    def __init__(self, images: dict[str, NCPoly], validate: bool = False):
        self.images = dict(images)
        self.alphabet = "".join(sorted(self.images))
        self._cache: dict[str, NCPoly] = {}
        if validate:
            for letter, image in self.images.items():
                if not image.is_zero() and not is_lie_element(image):
                    raise ValueError(f"image of {letter!r} is not a Lie element")

    def __call__(self, f: NCPoly | str) -> NCPoly:
        return self.apply(f)

    def apply(self, f: NCPoly | str) -> NCPoly:
        """Leibniz extension to the associative span; linear in f."""
        if isinstance(f, str):
            f = NCPoly.word(f)
        out = NCPoly()
        for word, coeff in f.terms.items():
            out = out + self._apply_word(word).scale(coeff)
        return out

    def _apply_word(self, word: str) -> NCPoly:
        cached = self._cache.get(word)
        if cached is not None:
            return cached
        out = NCPoly()
        for t, letter in enumerate(word):
            image = self.images.get(letter)
            if image is None:
                raise ValueError(f"letter {letter!r} outside alphabet {self.alphabet!r}")
            if image.is_zero():
                continue
            prefix, suffix = word[:t], word[t + 1:]
            for mid, c in image.terms.items():
                out = out + NCPoly.word(prefix + mid + suffix, c)
        self._cache[word] = out
        return out

    def is_zero(self) -> bool:
        return all(image.is_zero() for image in self.images.values())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Derivation):
            return NotImplemented
        letters = set(self.images) | set(other.images)
        return all(
            self.images.get(x, NCPoly.zero()) == other.images.get(x, NCPoly.zero())
            for x in letters
        )

    def __add__(self, other: Derivation) -> Derivation:
        if self.alphabet != other.alphabet:
            raise ValueError("alphabet mismatch")
        return Derivation({x: self.images[x] + other.images[x] for x in self.images})

    def __sub__(self, other: Derivation) -> Derivation:
        return self + other.scale(-1)

    def scale(self, coeff: Fraction | int) -> Derivation:
        return Derivation({x: image.scale(coeff) for x, image in self.images.items()})

    def __repr__(self) -> str:
        body = ", ".join(f"{x} -> {image}" for x, image in sorted(self.images.items()))
        return f"Derivation({body})"


def zero_derivation(alphabet: str) -> Derivation:
    return Derivation({letter: NCPoly.zero() for letter in alphabet})


def der_bracket(d1: Derivation, d2: Derivation) -> Derivation:
    """Commutator of derivations, computed on generators."""
    if d1.alphabet != d2.alphabet:
        raise ValueError("alphabet mismatch")
    return Derivation(
        {x: d1.apply(d2.images[x]) - d2.apply(d1.images[x]) for x in d1.images}
    )


@lru_cache(maxsize=None)
def epsilon(index: int) -> Derivation:
    """The weight-2i derivation of Lie[a,b]: a maps to a^{2i}.b and b to
    the alternating sum of brackets [a^j.b, a^{2i-1-j}.b]; it kills [a,b]."""
    if index < 0 or index % 2:
        raise ValueError("epsilon index must be even and nonnegative")
    i = index // 2
    image_b = NCPoly()
    for j in range(i):
        term = lie_bracket(ad_pow(A, j, B), ad_pow(A, index - 1 - j, B))
        image_b = image_b + term.scale((-1) ** j)
    return Derivation({"a": ad_pow(A, index, B), "b": image_b})


@lru_cache(maxsize=None)
def epsilon_tilde(index: int) -> Derivation:
    """The companion derivation of Lie[a,b,c]: a maps to a^{2i-1}.c, b to
    the alternating sum of [a^j.b, a^{2i-2-j}.c], and c to 0.  Index 0 is
    the derivation a -> b, b -> 0, c -> 0."""
    if index < 0 or index % 2:
        raise ValueError("epsilon_tilde index must be even and nonnegative")
    if index == 0:
        return Derivation({"a": B, "b": NCPoly.zero(), "c": NCPoly.zero()})
    i = index // 2
    image_b = NCPoly()
    for j in range(i):
        term = lie_bracket(ad_pow(A, j, B), ad_pow(A, index - 2 - j, C))
        image_b = image_b + term.scale((-1) ** j)
    return Derivation({"a": ad_pow(A, index - 1, C), "b": image_b, "c": NCPoly.zero()})


def alpha(i: int) -> NCPoly:
    """a^{i-1}.b, for i >= 1."""
    if i < 1:
        raise ValueError("alpha index must be >= 1")
    return ad_pow(A, i - 1, B)


def alpha_tilde(i: int) -> NCPoly:
    """a^{i-2}.c, for i >= 2."""
    if i < 2:
        raise ValueError("alpha_tilde index must be >= 2")
    return ad_pow(A, i - 2, C)


def inner(f: NCPoly) -> Derivation:
    """Derivation of Lie[a,b] sending a to [a, f] and b to 0; f must be Lie."""
    if not f.is_zero() and not is_lie_element(f):
        raise ValueError("inner derivation requires a Lie element")
    return Derivation({"a": lie_bracket(A, f), "b": NCPoly.zero()})


def inner_tilde(f: NCPoly) -> Derivation:
    """Derivation of Lie[a,c] sending a to [a, f] and c to 0; f must be Lie."""
    if not f.is_zero() and not is_lie_element(f):
        raise ValueError("inner derivation requires a Lie element")
    return Derivation({"a": lie_bracket(A, f), "c": NCPoly.zero()})


def poisson(f: NCPoly, g: NCPoly, alphabet: str | None = None) -> NCPoly:
    """Poisson bracket {f, g} = [f, g] + D_f(g) - D_g(f), where D_* sends
    a to [a, *] and the other generator (b over {a,b}, c over {a,c}) to 0."""
    if alphabet is None:
        letters = f.letters() | g.letters()
        if "b" in letters and "c" in letters:
            raise ValueError("mixed alphabet; pass alphabet explicitly")
        alphabet = "ac" if "c" in letters else "ab"
    make = inner if alphabet == "ab" else inner_tilde
    return lie_bracket(f, g) + make(f).apply(g) - make(g).apply(f)
