import dataclasses
import random
from fractions import Fraction

import pytest

from ringcert.exactalg import GF, ZZ, drop_trailing_zeros, get_d, list_mul
from ringcert.linalg import det_bareiss, mat_mul, solve_upper_triangular, transpose
from ringcert.orders import (
    NotAnOrder,
    build_order_description,
    element_coordinates,
    hnf,
    index_z,
    reduce_table_mod_p,
    theta_coordinates,
    times_table_of,
    tt_mul,
    tt_pow,
    verify_order_builder,
)

# cubic field Q[X]/<X^3 - 3X - 10> with integral basis {1, a, (a - a^2)/2}
CUBIC_T = [-10, -3, 0, 1]
CUBIC_D = 2
CUBIC_B = [[2, 0, 0], [0, 2, 0], [0, 1, -1]]

GAUSS_T = [1, 0, 1]
GAUSS_B = [[1, 0], [0, 1]]


@pytest.fixture(scope="module")
def cubic():
    return build_order_description(CUBIC_T, CUBIC_D, CUBIC_B)


@pytest.fixture(scope="module")
def gauss():
    return build_order_description(GAUSS_T, 1, GAUSS_B)


class TestBuilder:
    def test_cubic_fixture_verifies(self, cubic):
        assert verify_order_builder(cubic).accepted

    def test_cubic_w3_squared(self, cubic):
        # ((a - a^2)/2)^2 = -5*w1 + 2*w2 - 2*w3
        assert list(cubic.mul_coords[2][0]) == [-5, 2, -2]

    def test_corrupt_structure_constant_rejected(self, cubic):
        bad_coords = [list(map(list, row)) for row in cubic.mul_coords]
        bad_coords[2][0][0] = -4
        bad = dataclasses.replace(
            cubic,
            mul_coords=tuple(tuple(tuple(v) for v in row) for row in bad_coords),
        )
        v = verify_order_builder(bad)
        assert not v.accepted and v.reason == "order/identity/i=2/j=2"

    def test_non_ring_basis_raises(self):
        # {1, a, a^2/2} is not closed under multiplication
        with pytest.raises(NotAnOrder):
            build_order_description(CUBIC_T, 2, [[2, 0, 0], [0, 2, 0], [0, 0, 1]])

    def test_gauss_table(self, gauss):
        tt = times_table_of(gauss)
        assert tt.table == (((1, 0), (0, 1)), ((0, 1), (-1, 0)))

    def test_one_coords(self, cubic):
        assert list(cubic.one_coords) == [1, 0, 0]


class TestTimesTableArithmetic:
    def test_gauss_i_squared(self, gauss):
        tt = times_table_of(gauss)
        assert tt_mul(ZZ, tt, [0, 1], [0, 1]) == [-1]

    def test_gauss_i_fourth(self, gauss):
        tt = times_table_of(gauss)
        assert tt_pow(ZZ, tt, [0, 1], 4) == [1]

    def test_unit_row(self, cubic):
        tt = times_table_of(cubic)
        rng = random.Random(1)
        for _ in range(20):
            x = [rng.randrange(-9, 10) for _ in range(3)]
            assert tt_mul(ZZ, tt, [1], x) == drop_trailing_zeros(x)

    def test_cubic_w3_squared_via_table(self, cubic):
        tt = times_table_of(cubic)
        assert tt_mul(ZZ, tt, [0, 0, 1], [0, 0, 1]) == [-5, 2, -2]
        assert tt_pow(ZZ, tt, [0, 0, 1], 2) == [-5, 2, -2]

    def test_pow_edge_cases(self, cubic):
        tt = times_table_of(cubic)
        assert tt_pow(ZZ, tt, [3, 1, 2], 1) == [3, 1, 2]
        assert tt_pow(ZZ, tt, [3, 1, 2], 0, one_coords=list(cubic.one_coords)) == [1]
        with pytest.raises(ValueError):
            tt_pow(ZZ, tt, [3, 1, 2], 0)

    def test_ring_laws_random(self, cubic):
        tt = times_table_of(cubic)
        rng = random.Random(9)
        for _ in range(60):
            x, y, z = (
                [rng.randrange(-7, 8) for _ in range(3)] for _ in range(3)
            )
            assert tt_mul(ZZ, tt, x, y) == tt_mul(ZZ, tt, y, x)
            lhs = tt_mul(ZZ, tt, x, tt_mul(ZZ, tt, y, z))
            rhs = tt_mul(ZZ, tt, tt_mul(ZZ, tt, x, y), z)
            assert lhs == rhs

    def test_oracle_polynomial_route(self, cubic):
        # multiply via Q[X] mod T and re-express against the basis
        tt = times_table_of(cubic)
        rng = random.Random(4)
        b_mat = [[cubic.basis_columns[j][i] for j in range(3)] for i in range(3)]
        for _ in range(100):
            x = [rng.randrange(-9, 10) for _ in range(3)]
            y = [rng.randrange(-9, 10) for _ in range(3)]
            got = tt_mul(ZZ, tt, x, y)
            px = [sum(cubic.basis_columns[k][i] * x[k] for k in range(3)) for i in range(3)]
            py = [sum(cubic.basis_columns[k][i] * y[k] for k in range(3)) for i in range(3)]
            prod = list_mul(ZZ, drop_trailing_zeros(px), drop_trailing_zeros(py))
            # reduce modulo T, then solve B * z = rem / d
            from ringcert.orders import _divmod_by_monic_int

            _, rem = _divmod_by_monic_int(prod, CUBIC_T)
            z = solve_upper_triangular(
                b_mat, [Fraction(get_d(rem, k, 0), CUBIC_D) for k in range(3)]
            )
            assert all(c.denominator == 1 for c in z)
            assert drop_trailing_zeros([int(c) for c in z]) == got

    def test_mod_p_table(self, cubic):
        tt = reduce_table_mod_p(times_table_of(cubic), 3)
        f3 = GF(3)
        assert tt_mul(f3, tt, [0, 0, 1], [0, 0, 1]) == [1, 2, 1]


class TestHNF:
    def test_example(self):
        h, u = hnf([[0, 1], [2, 0]])
        assert h == [[1, 0], [0, 2]]
        assert mat_mul([[0, 1], [2, 0]], u) == h
        assert abs(det_bareiss(u)) == 1

    def test_identity(self):
        h, u = hnf([[1, 0], [0, 1]])
        assert h == [[1, 0], [0, 1]]

    def test_already_hnf(self):
        m = [[2, 0], [0, 3]]
        h, _ = hnf(m)
        assert h == m

    def test_rank_deficiency(self):
        with pytest.raises(ValueError):
            hnf([[1, 1], [1, 1]])

    def test_random_properties(self):
        rng = random.Random(12)
        for _ in range(50):
            n = rng.randrange(1, 5)
            m = [[rng.randrange(-9, 10) for _ in range(n)] for _ in range(n)]
            if det_bareiss(m) == 0:
                continue
            h, u = hnf(m)
            assert mat_mul(m, u) == h
            assert abs(det_bareiss(u)) == 1
            for i in range(n):
                assert h[i][i] > 0
                for j in range(i):
                    assert h[i][j] == 0
                for j in range(i + 1, n):
                    assert 0 <= h[i][j] < h[i][i]
            # invariance under column permutations
            perm = list(range(n))
            rng.shuffle(perm)
            mp = [[m[i][perm[j]] for j in range(n)] for i in range(n)]
            hp, _ = hnf(mp)
            assert hp == h


class TestIndex:
    def test_diagonal(self):
        m = [[1, 0], [0, 1]]
        n = [[2, 0], [0, 3]]
        assert index_z(m, n) == 6
        assert index_z(m, m) == 1

    def test_power_basis_inside_cubic(self, cubic):
        b = [[cubic.basis_columns[j][i] for j in range(3)] for i in range(3)]
        d_id = [[2 if i == j else 0 for j in range(3)] for i in range(3)]
        assert index_z(b, d_id) == 2

    def test_not_contained(self):
        with pytest.raises(ValueError):
            index_z([[2, 0], [0, 2]], [[1, 0], [0, 1]])

    def test_index_one_iff_equal(self):
        rng = random.Random(3)
        for _ in range(30):
            n = rng.randrange(1, 4)
            m = [[rng.randrange(-5, 6) for _ in range(n)] for _ in range(n)]
            if det_bareiss(m) == 0:
                continue
            u = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
            # a random unimodular transform of m spans the same lattice
            for _ in range(4):
                i, j = rng.randrange(n), rng.randrange(n)
                if i != j:
                    c = rng.randrange(-2, 3)
                    for r in range(n):
                        u[r][j] += c * u[r][i]
            same = mat_mul(m, u)
            assert index_z(m, same) == 1
            assert index_z(same, m) == 1


class TestElementCoordinates:
    def test_theta_in_cubic(self, cubic):
        assert theta_coordinates(cubic) == [0, 1, 0]

    def test_w3_roundtrip(self, cubic):
        # (X - X^2)/2 has coordinates e_3
        assert element_coordinates(cubic, [0, 1, -1], 2) == [0, 0, 1]

    def test_outside(self, cubic):
        assert element_coordinates(cubic, [0, 0, 1], 2) is None  # a^2/2 not integral
