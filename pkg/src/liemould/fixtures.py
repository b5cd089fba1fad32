"""Embedded read-only fixtures: the period vectors of the Ramanujan cusp
form and the reference right-hand side for the classical depth-3 lift."""

from __future__ import annotations

from fractions import Fraction

from .relations import PeriodVector

DELTA_D2 = PeriodVector(
    label="Delta",
    d=2,
    weight=14,
    coefficients={2: Fraction(1), 4: Fraction(-3)},
    provenance="even period vector (1, -3) of the weight-12 cusp form Delta",
)

DELTA_D3 = PeriodVector(
    label="Delta",
    d=3,
    weight=16,
    coefficients={2: Fraction(4), 4: Fraction(-25), 6: Fraction(21)},
    provenance="odd period vector (4, -25, 21) of the weight-12 cusp form Delta",
)

# Reference right-hand side quoted for the depth-3 lift of the Delta
# relation; kept as a comparison target only.  The engine re-derives the
# lift coefficients itself, because the second term involves the index-2
# generator, which commutes with the whole family (its bracket is computed
# and its vanishing status recorded by the lift report).
EQ1_REFERENCE_TEXT = "-345/8*[e6,[e6,e4]] + 231/20*[e4,[e8,e2]]"

# The same combination with the index-2 generator replaced by index 4; the
# lift report checks this variant as well, since the derived certificate
# turns out to match it exactly.
EQ1_INDEX4_TEXT = "-345/8*[e6,[e6,e4]] + 231/20*[e4,[e8,e4]]"

# An expression of the same shape that is not expected to lift (no cusp
# form backs it); used for the recorded expected-failure probe.
EISENSTEIN_TYPE_TEXT = "h(2,10,3)"

FIXTURES = {
    "delta-d2": DELTA_D2,
    "delta-d3": DELTA_D3,
}
