import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ringcert.exactalg import (
    GF,
    QQ,
    ZZ,
    content,
    deg,
    drop_trailing_zeros,
    formal_derivative,
    get_d,
    list_add,
    list_mul,
    list_sub,
    monic,
    mul_pointwise,
    poly_divmod,
    poly_eval,
    poly_gcd,
    poly_mod_pow,
    poly_xgcd,
    reduce_mod_p,
)

int_lists = st.lists(st.integers(min_value=-50, max_value=50), max_size=8).map(
    drop_trailing_zeros
)


def fp_lists(p, max_size=8):
    return st.lists(st.integers(min_value=0, max_value=p - 1), max_size=max_size).map(
        drop_trailing_zeros
    )


class TestDropTrailingZeros:
    def test_examples(self):
        assert drop_trailing_zeros([1, 0, 2, 0, 0]) == [1, 0, 2]
        assert drop_trailing_zeros([0, 0]) == []
        assert drop_trailing_zeros([3, 14, 15]) == [3, 14, 15]

    @given(st.lists(st.integers(min_value=-5, max_value=5), max_size=10))
    def test_idempotent_and_nonincreasing(self, l):
        once = drop_trailing_zeros(l)
        assert drop_trailing_zeros(once) == once
        assert len(once) <= len(l)


class TestListArithmetic:
    def test_add_examples(self):
        assert list_add(ZZ, [1, 2], [3]) == [4, 2]
        assert list_add(ZZ, [1, 2], [-1, -2]) == []
        assert list_add(ZZ, [0, 1], [0, 1]) == [0, 2]

    def test_mul_examples(self):
        assert list_mul(ZZ, [0, 1], [0, 1]) == [0, 0, 1]
        assert list_mul(ZZ, [], [5, 7]) == []
        assert list_mul(ZZ, [-1, 1], [1, 1]) == [-1, 0, 1]

    def test_mul_pointwise_examples(self):
        assert mul_pointwise(ZZ, 2, [1, 3]) == [2, 6]
        assert mul_pointwise(ZZ, 0, [1, 3]) == []
        assert mul_pointwise(ZZ, -1, [1, -1]) == [-1, 1]

    def test_get_d_examples(self):
        assert get_d([4, 5], 1, 0) == 5
        assert get_d([4, 5], 7, 0) == 0
        assert get_d([], 0, 9) == 9

    @given(int_lists, int_lists)
    def test_add_commutes(self, a, b):
        assert list_add(ZZ, a, b) == list_add(ZZ, b, a)

    @given(int_lists, int_lists)
    def test_mul_commutes(self, a, b):
        assert list_mul(ZZ, a, b) == list_mul(ZZ, b, a)

    @given(int_lists, int_lists, int_lists)
    def test_ring_laws(self, a, b, c):
        assert list_mul(ZZ, a, list_mul(ZZ, b, c)) == list_mul(ZZ, list_mul(ZZ, a, b), c)
        lhs = list_mul(ZZ, a, list_add(ZZ, b, c))
        rhs = list_add(ZZ, list_mul(ZZ, a, b), list_mul(ZZ, a, c))
        assert lhs == rhs

    @given(int_lists, int_lists, st.integers(min_value=-30, max_value=30))
    def test_arithmetic_matches_evaluation(self, a, b, x):
        assert poly_eval(ZZ, list_add(ZZ, a, b), x) == poly_eval(ZZ, a, x) + poly_eval(
            ZZ, b, x
        )
        assert poly_eval(ZZ, list_mul(ZZ, a, b), x) == poly_eval(ZZ, a, x) * poly_eval(
            ZZ, b, x
        )


class TestDivmodXgcd:
    def test_divmod_examples(self):
        f3 = GF(3)
        q, r = poly_divmod(f3, [1, 0, 1], [0, 1])  # (X^2+1) / X
        assert q == [0, 1] and r == [1]
        f = [2, 1, 1]
        q, r = poly_divmod(f3, f, f)
        assert q == [1] and r == []
        f5 = GF(5)
        q, r = poly_divmod(f5, [0, 0, 0, 1], [4, 1])  # X^3 / (X - 1)
        assert q == [1, 1, 1] and r == [1]
        # oracle: reconstruct
        assert list_add(f5, list_mul(f5, q, [4, 1]), r) == [0, 0, 0, 1]

    def test_divmod_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            poly_divmod(GF(3), [1], [])

    def test_xgcd_examples(self):
        f2 = GF(2)
        d, a, b = poly_xgcd(f2, [0, 1], [1, 1])
        assert d == [1]
        assert list_add(f2, list_mul(f2, a, [0, 1]), list_mul(f2, b, [1, 1])) == [1]

        f5 = GF(5)
        d, a, b = poly_xgcd(f5, [3, 0, 1], [])  # xgcd(f, 0)
        assert d == monic(f5, [3, 0, 1]) and b == []

        d, a, b = poly_xgcd(f5, [4, 0, 1], [4, 1])  # X^2-1, X-1
        assert d == [4, 1]
        assert a == [] and b == [1]

    def test_xgcd_both_zero(self):
        with pytest.raises(ValueError):
            poly_xgcd(GF(3), [], [])

    @pytest.mark.parametrize("p", [2, 3, 5, 7])
    def test_divmod_reconstruction_random(self, p):
        rng = random.Random(p * 101)
        field = GF(p)
        for _ in range(200):
            f = drop_trailing_zeros([rng.randrange(p) for _ in range(rng.randrange(8))])
            g = drop_trailing_zeros([rng.randrange(p) for _ in range(rng.randrange(1, 6))])
            if not g:
                continue
            q, r = poly_divmod(field, f, g)
            assert deg(r) < deg(g)
            assert list_add(field, list_mul(field, q, g), r) == f

    @pytest.mark.parametrize("p", [2, 3, 5, 7])
    def test_xgcd_bezout_and_divides(self, p):
        rng = random.Random(p * 777)
        field = GF(p)
        for _ in range(150):
            f = drop_trailing_zeros([rng.randrange(p) for _ in range(rng.randrange(7))])
            g = drop_trailing_zeros([rng.randrange(p) for _ in range(rng.randrange(7))])
            if not f and not g:
                continue
            d, a, b = poly_xgcd(field, f, g)
            assert list_add(field, list_mul(field, a, f), list_mul(field, b, g)) == d
            for h in (f, g):
                if h:
                    assert poly_divmod(field, h, d)[1] == []


class TestReductionEvalDerivative:
    def test_reduce_examples(self):
        assert reduce_mod_p([4, 3, 1], 3) == [1, 0, 1]
        assert reduce_mod_p([0, 1, 3], 3) == [0, 1]
        assert reduce_mod_p([-10, -3, 0, 1], 2) == [0, 1, 0, 1]

    @pytest.mark.parametrize("p", [2, 3, 5])
    def test_reduce_is_ring_hom(self, p):
        rng = random.Random(p)
        field = GF(p)
        for _ in range(100):
            f = [rng.randrange(-20, 20) for _ in range(rng.randrange(6))]
            g = [rng.randrange(-20, 20) for _ in range(rng.randrange(6))]
            f, g = drop_trailing_zeros(f), drop_trailing_zeros(g)
            assert reduce_mod_p(list_mul(ZZ, f, g), p) == list_mul(
                field, reduce_mod_p(f, p), reduce_mod_p(g, p)
            )

    def test_eval_examples(self):
        assert poly_eval(ZZ, [1, 0, 1], 4) == 17
        assert poly_eval(ZZ, [7, 3, 9], 0) == 7
        assert poly_eval(ZZ, [], 12345) == 0

    def test_derivative_examples(self):
        assert formal_derivative(ZZ, [-80, -30, 0, 1]) == [-30, 0, 3]
        assert formal_derivative(ZZ, [5]) == []
        p = 5
        xp = [0] * p + [1]
        assert formal_derivative(GF(p), xp) == []

    def test_mod_pow(self):
        f3 = GF(3)
        f = [1, 0, 1]
        assert poly_mod_pow(f3, [0, 1], 9, f) == [0, 1]
        assert poly_mod_pow(f3, [0, 1], 0, f) == [1]

    def test_gcd(self):
        f5 = GF(5)
        assert poly_gcd(f5, [4, 0, 1], [4, 1]) == [4, 1]

    def test_content(self):
        assert content([2, 4, 6]) == 2
        assert content([]) == 0
        assert content([-3, 9]) == 3


class TestRationals:
    def test_fraction_domain(self):
        f = [Fraction(1, 2), Fraction(1)]
        g = [Fraction(-1, 2), Fraction(1)]
        assert list_mul(QQ, f, g) == [Fraction(-1, 4), Fraction(0), Fraction(1)]
        q, r = poly_divmod(QQ, [Fraction(1), Fraction(0), Fraction(1)], f)
        assert list_add(QQ, list_mul(QQ, q, f), r) == [Fraction(1), Fraction(0), Fraction(1)]


@settings(max_examples=50)
@given(fp_lists(5), fp_lists(5), fp_lists(5))
def test_fp_ring_laws(a, b, c):
    f5 = GF(5)
    assert list_mul(f5, a, list_mul(f5, b, c)) == list_mul(f5, list_mul(f5, a, b), c)
    assert list_mul(f5, a, list_add(f5, b, c)) == list_add(
        f5, list_mul(f5, a, b), list_mul(f5, a, c)
    )
    assert list_sub(f5, a, a) == []
