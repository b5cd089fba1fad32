"""Formal bracket expressions over the derivation generators.

A generator leaf g(i, j) stands for the j-fold ad-power of the index-0
derivation applied to the index-i one.  Expressions are brackets and
rational linear combinations of such leaves; they evaluate to concrete
derivations in either family ("eps" on {a,b}, "eps-tilde" on {a,b,c}).

Text syntax (also used by the CLI):

    e4                     generator, index 4
    E0^2.e12               twice ad-e0 applied to e12
    [e4,[e6,e8]]           brackets
    4*h(2,10,3) - 25*h(4,8,3) + 21*h(6,6,3)
                           rational combinations; h(p,q,d) expands to the
                           highest-weight bracket combination
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .derivations import Derivation, der_bracket, epsilon, epsilon_tilde
from .serialize import frac_from_str, frac_to_str


@dataclass(frozen=True)
class Gen:
    i: int
    j: int = 0


@dataclass(frozen=True)
class Bracket:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Sum:
    terms: tuple[tuple[Fraction, "Expr"], ...]


Expr = Gen | Bracket | Sum


def normalize(expr: Expr) -> Expr:
    """Flatten nested sums, fold scalars, drop zero terms."""
    if isinstance(expr, Gen):
        return expr
    if isinstance(expr, Bracket):
        return Bracket(normalize(expr.left), normalize(expr.right))
    flat: list[tuple[Fraction, Expr]] = []
    for coeff, term in expr.terms:
        term = normalize(term)
        if coeff == 0:
            continue
        if isinstance(term, Sum):
            flat.extend((coeff * c, t) for c, t in term.terms)
        else:
            flat.append((coeff, term))
    if len(flat) == 1 and flat[0][0] == 1:
        return flat[0][1]
    return Sum(tuple(flat))


@lru_cache(maxsize=None)
def _generator(family: str, i: int, j: int) -> Derivation:
    base = epsilon if family == "eps" else epsilon_tilde
    if i % 2:
        raise ValueError(f"generator index {i} is odd")
    d = base(i)
    e0 = base(0)
    for _ in range(j):
        d = der_bracket(e0, d)
    return d


def eval_bracket_expr(expr: Expr, family: str = "eps") -> Derivation:
    """Evaluate a bracket expression to a derivation of the chosen family."""
    if family not in ("eps", "eps-tilde"):
        raise ValueError(f"unknown family {family!r}")
    if isinstance(expr, Gen):
        return _generator(family, expr.i, expr.j)
    if isinstance(expr, Bracket):
        return der_bracket(eval_bracket_expr(expr.left, family), eval_bracket_expr(expr.right, family))
    if not expr.terms:
        alphabet = "ab" if family == "eps" else "abc"
        from .derivations import zero_derivation

        return zero_derivation(alphabet)
    total = None
    for coeff, term in expr.terms:
        piece = eval_bracket_expr(term, family).scale(coeff)
        total = piece if total is None else total + piece
    return total


# ---------------------------------------------------------------------------
# Text form
# ---------------------------------------------------------------------------

class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


_TOKEN = re.compile(
    r"\s*(?:(?P<egen>E0\^(?P<j>\d+)\.e(?P<ei>\d+))|(?P<gen>e(?P<i>\d+))"
    r"|(?P<h>h)|(?P<num>\d+)|(?P<sym>[\[\],+\-*/()]))"
)


def _tokenize(text: str) -> list[tuple[str, object, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            raise ParseError(f"unexpected character {stripped[0]!r}", len(text) - len(stripped))
        if m.group("egen"):
            tokens.append(("gen", (int(m.group("ei")), int(m.group("j"))), m.start("egen")))
        elif m.group("gen"):
            tokens.append(("gen", (int(m.group("i")), 0), m.start("gen")))
        elif m.group("h"):
            tokens.append(("h", None, m.start("h")))
        elif m.group("num"):
            tokens.append(("num", int(m.group("num")), m.start("num")))
        else:
            tokens.append((m.group("sym"), None, m.start("sym")))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> tuple[str, object, int]:
        return self.tokens[self.pos]

    def take(self, kind: str | None = None) -> tuple[str, object, int]:
        tok = self.tokens[self.pos]
        if kind is not None and tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[0]!r}", tok[2])
        self.pos += 1
        return tok

    def parse(self) -> Expr:
        expr = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"trailing input {tok[0]!r}", tok[2])
        return normalize(expr)

    def expr(self) -> Expr:
        terms = [self.term(Fraction(1))]
        while self.peek()[0] in ("+", "-"):
            sign = Fraction(1) if self.take()[0] == "+" else Fraction(-1)
            terms.append(self.term(sign))
        return Sum(tuple(terms))

    def term(self, sign: Fraction) -> tuple[Fraction, Expr]:
        coeff = sign
        if self.peek()[0] == "-":
            self.take()
            coeff = -coeff
        if self.peek()[0] == "num":
            coeff *= self.rational()
            if self.peek()[0] == "*":
                self.take("*")
            else:
                # bare scalar: scalar multiple of nothing is not a derivation term
                tok = self.peek()
                raise ParseError("expected '*' after scalar", tok[2])
        return (coeff, self.factor())

    def rational(self) -> Fraction:
        num = self.take("num")[1]
        if self.peek()[0] == "/":
            self.take("/")
            den = self.take("num")[1]
            return Fraction(num, den)
        return Fraction(num)

    def factor(self) -> Expr:
        kind, value, position = self.peek()
        if kind == "gen":
            self.take()
            i, j = value
            return Gen(i, j)
        if kind == "[":
            self.take()
            left = self.expr()
            self.take(",")
            right = self.expr()
            self.take("]")
            return Bracket(normalize(left), normalize(right))
        if kind == "h":
            self.take()
            self.take("(")
            p = self.take("num")[1]
            self.take(",")
            q = self.take("num")[1]
            self.take(",")
            d = self.take("num")[1]
            self.take(")")
            from .relations import h_element

            return h_element(p, q, d)
        if kind == "(":
            self.take()
            inner = self.expr()
            self.take(")")
            return normalize(inner)
        raise ParseError(f"expected a generator, bracket or h(...), found {kind!r}", position)


def parse_bracket_expr(text: str) -> Expr:
    """Parse the text syntax; syntax errors carry the character position."""
    return _Parser(text).parse()


def print_bracket_expr(expr: Expr) -> str:
    expr = normalize(expr)
    if isinstance(expr, Gen):
        return f"e{expr.i}" if expr.j == 0 else f"E0^{expr.j}.e{expr.i}"
    if isinstance(expr, Bracket):
        return f"[{print_bracket_expr(expr.left)},{print_bracket_expr(expr.right)}]"
    if not expr.terms:
        return "0*e0"
    parts = []
    for coeff, term in expr.terms:
        body = print_bracket_expr(term)
        mag = coeff if coeff > 0 else -coeff
        piece = body if mag == 1 else f"{frac_to_str(mag)}*{body}"
        if not parts:
            parts.append(piece if coeff > 0 else f"-{piece}")
        else:
            parts.append(f"+ {piece}" if coeff > 0 else f"- {piece}")
    return " ".join(parts)


# ---------------------------------------------------------------------------
# JSON mirror
# ---------------------------------------------------------------------------

def expr_to_json(expr: Expr) -> dict:
    if isinstance(expr, Gen):
        return {"type": "gen", "i": expr.i, "j": expr.j}
    if isinstance(expr, Bracket):
        return {"type": "bracket", "left": expr_to_json(expr.left), "right": expr_to_json(expr.right)}
    return {
        "type": "sum",
        "terms": [{"coeff": frac_to_str(c), "expr": expr_to_json(t)} for c, t in expr.terms],
    }


def expr_from_json(data: dict) -> Expr:
    kind = data.get("type")
    if kind == "gen":
        return Gen(int(data["i"]), int(data["j"]))
    if kind == "bracket":
        return Bracket(expr_from_json(data["left"]), expr_from_json(data["right"]))
    if kind == "sum":
        return Sum(tuple((frac_from_str(t["coeff"]), expr_from_json(t["expr"])) for t in data["terms"]))
    raise ValueError(f"unknown expression node type {kind!r}")
