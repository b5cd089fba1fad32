import random
from fractions import Fraction as F

from liemould.linalg import RowSpan, membership, rref, solve


def test_rref_examples():
    reduced, pivots = rref([{0: F(1)}, {1: F(1)}])
    assert pivots == [0, 1]
    assert reduced == [{0: F(1)}, {1: F(1)}]

    reduced, pivots = rref([{0: F(1), 1: F(2)}, {0: F(2), 1: F(4)}])
    assert pivots == [0]
    assert reduced == [{0: F(1), 1: F(2)}]


def test_rref_idempotent_and_deterministic():
    rng = random.Random(3)
    for _ in range(30):
        rows = [
            {c: F(rng.randint(-4, 4), rng.randint(1, 3)) for c in range(5) if rng.random() < 0.5}
            for _ in range(4)
        ]
        rows = [{c: v for c, v in row.items() if v} for row in rows]
        first, piv1 = rref(rows)
        again, piv2 = rref([dict(r) for r in rows])
        assert (first, piv1) == (again, piv2)
        assert rref(first) == (first, piv1)


def test_solve_examples():
    result = solve([{0: F(1)}, {1: F(1)}], {0: F(2), 1: F(3)}, 2)
    assert result.particular == {0: F(2), 1: F(3)}
    assert result.nullspace == []

    result = solve([{0: F(1), 1: F(1)}], {0: F(1)}, 2)
    assert result.particular == {0: F(1)}
    assert result.nullspace == [{1: F(1), 0: F(-1)}]

    result = solve([{0: F(1)}, {0: F(1)}], {0: F(1), 1: F(2)}, 1)
    assert result.particular is None
    assert result.infeasible_row is not None


def test_membership_examples():
    s1, s2 = {0: F(1), 2: F(3)}, {1: F(2)}
    assert membership({}, [s1, s2]) == {}
    combined = {0: F(1), 1: F(4), 2: F(3)}
    assert membership(combined, [s1, s2]) == {0: F(1), 1: F(2)}
    assert membership({3: F(1)}, [s1, s2]) is None


def test_solution_verification_random():
    rng = random.Random(0)
    for _ in range(150):
        n, m = rng.randint(1, 6), rng.randint(1, 6)
        rows = [
            {c: F(rng.randint(-3, 3), rng.randint(1, 4)) for c in range(n) if rng.random() < 0.6}
            for _ in range(m)
        ]
        rows = [{c: v for c, v in row.items() if v} for row in rows]
        rhs = {i: F(rng.randint(-2, 2)) for i in range(m)}
        result = solve(rows, rhs, n)
        if result.particular is not None:
            for i, row in enumerate(rows):
                value = sum((result.particular.get(c, F(0)) * v for c, v in row.items()), F(0))
                assert value == rhs.get(i, F(0))
            for vector in result.nullspace:
                for row in rows:
                    assert sum((vector.get(c, F(0)) * v for c, v in row.items()), F(0)) == 0
        else:
            assert result.infeasible_row is not None


def test_rowspan_expresses_members_exactly():
    rng = random.Random(1)
    for _ in range(150):
        n, m = rng.randint(1, 7), rng.randint(1, 7)
        gens = [
            {c: F(rng.randint(-3, 3), rng.randint(1, 4)) for c in range(n) if rng.random() < 0.6}
            for _ in range(m)
        ]
        gens = [{c: v for c, v in g.items() if v} for g in gens]
        span = RowSpan(gens)
        coeffs = [F(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(m)]
        combo: dict[int, F] = {}
        for g, coeff in zip(gens, coeffs):
            for c, v in g.items():
                combo[c] = combo.get(c, F(0)) + coeff * v
        combo = {c: v for c, v in combo.items() if v}
        got = span.membership(dict(combo))
        assert got is not None
        rebuilt: dict[int, F] = {}
        for idx, coeff in got.items():
            for c, v in gens[idx].items():
                rebuilt[c] = rebuilt.get(c, F(0)) + coeff * v
        assert {c: v for c, v in rebuilt.items() if v} == combo
