"""JSON interchange for polynomials and certificates.

Rationals travel as strings "p/q" in lowest terms ("p" when q = 1).
All serializations are deterministically ordered so identical inputs
produce byte-identical output.
"""

from __future__ import annotations

from fractions import Fraction

from .words import NCPoly, monomial_key


def frac_to_str(value: Fraction) -> str:
    value = Fraction(value)
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def frac_from_str(text: str) -> Fraction:
    return Fraction(text)


def ncpoly_to_json(poly: NCPoly) -> list[dict]:
    return [
        {"word": word, "coeff": frac_to_str(coeff)}
        for word, coeff in sorted(poly.terms.items(), key=lambda kv: monomial_key(kv[0]))
    ]


def ncpoly_from_json(data: list[dict]) -> NCPoly:
    terms: dict[str, Fraction] = {}
    for entry in data:
        word = entry["word"]
        coeff = frac_from_str(entry["coeff"])
        terms[word] = terms.get(word, Fraction(0)) + coeff
    return NCPoly(terms)


def commpoly_to_json(poly) -> dict:
    return {
        "arity": poly.arity,
        "terms": [
            {"exp": list(exp), "coeff": frac_to_str(coeff)}
            for exp, coeff in sorted(
                poly.terms.items(), key=lambda kv: (sum(kv[0]), kv[0])
            )
        ],
    }


def commpoly_from_json(data: dict):
    from .moulds import CommPoly

    arity = int(data["arity"])
    terms = {}
    for entry in data["terms"]:
        exp = tuple(int(e) for e in entry["exp"])
        if len(exp) != arity:
            raise ValueError(f"exponent vector {exp} does not match arity {arity}")
        terms[exp] = terms.get(exp, Fraction(0)) + frac_from_str(entry["coeff"])
    return CommPoly(arity, terms)
