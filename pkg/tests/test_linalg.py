from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from oracles import _rank
from plspheres.linalg import MERSENNE31, is_prime, rank_mod_p, rank_rational, rref_mod_p, rref_rational
from plspheres.verdict import Budget, BudgetExhausted, Verdict, no, unknown, yes

small = st.integers(-9, 9)
matrices = st.integers(1, 6).flatmap(lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=1, max_size=6))


def test_is_prime():
    assert is_prime(2) and is_prime(MERSENNE31) and not is_prime(1) and not is_prime(2**31 + 1)


def test_rref_examples():
    rows, piv = rref_mod_p([[2, 4], [1, 2]], 7)
    assert piv == [0] and rows.tolist()[0] == [1, 2]
    rows, piv = rref_rational([[2, 4], [1, 3]], 2)
    assert piv == [0, 1] and rows == [[1, 0], [0, 1]]
    assert rank_mod_p([[1, 1], [1, 1]], 2) == 1
    assert rank_mod_p([[1, 1], [1, -1]], 2) == 1  # -1 = 1 mod 2
    assert rank_rational([[1, 1], [1, -1]], 2) == 2


@given(matrices)
def test_ranks_agree_with_oracle(m):
    r = _rank(m)
    # |det| of any minor is below 9^6 * 6! < p, so GF(p) sees the same rank
    assert rank_mod_p(m, MERSENNE31) == r
    assert rank_rational(m, len(m[0])) == r


@given(matrices)
def test_rref_is_reduced(m):
    rows, piv = rref_rational(m, len(m[0]))
    for i, p in enumerate(piv):
        assert rows[i][p] == 1
        assert all(rows[k][p] == 0 for k in range(len(rows)) if k != i)
    assert all(isinstance(x, Fraction) or isinstance(x, int) for r in rows for x in r)


def test_budget():
    b = Budget(3)
    b.tick(2)
    with pytest.raises(BudgetExhausted):
        b.tick(2)
    assert b.spent == 3
    assert Budget.coerce(b) is b and Budget.coerce(5).limit == 5


def test_tristate_json():
    assert yes().to_json()["verdict"] == "yes"
    assert no("x").to_json() == {"verdict": "no", "budget_spent": 0, "obstruction": "x"}
    u = unknown(Budget(4))
    assert u.verdict is Verdict.UNKNOWN and not u.decided
