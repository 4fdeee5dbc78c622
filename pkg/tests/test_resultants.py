import random

import pytest

from ringcert.exactalg import GF, ZZ, deg, drop_trailing_zeros, list_mul
from ringcert.orders import build_order_description
from ringcert.resultants import (
    check_order_discriminant,
    disc_order,
    disc_poly,
    power_basis_index,
    resultant,
    sylvester_matrix,
)


def poly_from_roots(dom, roots, lead=1):
    f = [dom.from_int(lead)]
    for r in roots:
        f = list_mul(dom, f, [dom.neg(r), dom.one])
    return f


def naive_det(m):
    n = len(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    total = 0
    for j in range(n):
        if m[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1 :] for row in m[1:]]
        total += (-1) ** j * m[0][j] * naive_det(minor)
    return total


class TestResultant:
    def test_shared_root_vanishes(self):
        assert resultant(ZZ, [0, 0, 1], [0, 2]) == 0  # X^2 and 2X

    def test_constant_g(self):
        assert resultant(ZZ, [5, 1, 3], [1]) == 1
        assert resultant(ZZ, [5, 1, 3, 7], [2]) == 8  # c^(deg f)

    def test_linear_pair_pins_convention(self):
        # roots 2 and 5: (-1)^(1*1) * (2 - 5) = 3
        assert resultant(ZZ, [-2, 1], [-5, 1]) == 3

    def test_matches_naive_determinant(self):
        rng = random.Random(6)
        for _ in range(60):
            f = drop_trailing_zeros([rng.randrange(-6, 7) for _ in range(rng.randrange(1, 5))])
            g = drop_trailing_zeros([rng.randrange(-6, 7) for _ in range(rng.randrange(1, 5))])
            if deg(f) < 0 or deg(g) < 0:
                continue
            s = sylvester_matrix(f, g)
            assert resultant(ZZ, f, g) == naive_det(s)

    @pytest.mark.parametrize("p", [5, 7, 11])
    def test_product_form_oracle(self, p):
        field = GF(p)
        rng = random.Random(p * 31)
        for _ in range(150):
            n = rng.randrange(1, 4)
            m = rng.randrange(1, 4)
            a = rng.randrange(1, p)
            b = rng.randrange(1, p)
            alphas = [rng.randrange(p) for _ in range(n)]
            betas = [rng.randrange(p) for _ in range(m)]
            f = poly_from_roots(field, alphas, a)
            g = poly_from_roots(field, betas, b)
            prod = 1
            for x in alphas:
                for y in betas:
                    prod = (prod * (x - y)) % p
            expected = (pow(-1, n * m, p) * pow(a, m, p) * pow(b, n, p) * prod) % p
            assert resultant(field, f, g) == expected

    @pytest.mark.parametrize("p", [5, 7])
    def test_swap_rule(self, p):
        field = GF(p)
        rng = random.Random(p)
        for _ in range(80):
            f = drop_trailing_zeros([rng.randrange(p) for _ in range(rng.randrange(1, 5))])
            g = drop_trailing_zeros([rng.randrange(p) for _ in range(rng.randrange(1, 5))])
            if deg(f) < 0 or deg(g) < 0:
                continue
            lhs = resultant(field, f, g)
            rhs = (pow(-1, deg(f) * deg(g), p) * resultant(field, g, f)) % p
            assert lhs == rhs

    @pytest.mark.parametrize("p", [7, 11])
    def test_common_root_dichotomy(self, p):
        field = GF(p)
        rng = random.Random(p + 1)
        for _ in range(80):
            alphas = [rng.randrange(p) for _ in range(rng.randrange(1, 4))]
            betas = [rng.randrange(p) for _ in range(rng.randrange(1, 4))]
            f = poly_from_roots(field, alphas)
            g = poly_from_roots(field, betas)
            r = resultant(field, f, g)
            if set(alphas) & set(betas):
                assert r == 0
            else:
                assert r != 0

    def test_zero_polynomial_rejected(self):
        with pytest.raises(ValueError):
            resultant(ZZ, [], [1, 2])


class TestDiscriminant:
    def test_cubic_anchor(self):
        # classical depressed-cubic value -4p^3 - 27q^2 = -64800, and the
        # convention here gives resultant(f, f') = +64800
        assert disc_poly([-80, -30, 0, 1]) == 64800

    def test_repeated_root(self):
        assert disc_poly([0, 0, 1]) == 0

    def test_quadratic(self):
        # X^2 + X + 1: b^2 - 4c = -3; this convention yields +3
        assert disc_poly([1, 1, 1]) == 3

    def test_power_basis_bridge(self):
        # prod_{i<j} (a_i - a_j)^2 = (-1)^(n(n-1)/2) * disc(f) for split f
        for p in (5, 7, 11):
            field = GF(p)
            rng = random.Random(p * 13)
            for _ in range(60):
                n = rng.randrange(2, 5)
                roots = rng.sample(range(p), n)
                f = poly_from_roots(field, roots)
                prod = 1
                for i in range(n):
                    for j in range(i + 1, n):
                        prod = (prod * (roots[i] - roots[j]) ** 2) % p
                sign = pow(-1, n * (n - 1) // 2, p)
                assert (sign * disc_poly_fp(field, f)) % p == prod


def disc_poly_fp(field, f):
    from ringcert.exactalg import formal_derivative

    return resultant(field, f, formal_derivative(field, f))


class TestOrderDiscriminant:
    def test_cubic_30_80(self):
        desc = build_order_description([-80, -30, 0, 1], 2, [[2, 0, 0], [0, 2, 0], [2, 0, 1]])
        od = disc_order(desc)
        assert od.index == 2
        assert od.value == -16200
        assert check_order_discriminant(desc, -16200).accepted
        v = check_order_discriminant(desc, -16201)
        assert not v.accepted and "mismatch" in v.reason

    def test_monogenic(self):
        desc = build_order_description([1, -1, 1], 1, [[1, 0], [0, 1]])
        od = disc_order(desc)
        assert od.index == 1
        assert od.value == -3

    def test_cubic_3_10(self):
        desc = build_order_description([-10, -3, 0, 1], 2, [[2, 0, 0], [0, 2, 0], [0, 1, -1]])
        od = disc_order(desc)
        assert od.index == 2
        # disc(T) = -2592 classically; value = (-1)^3 * 2592 / 4
        assert od.value == -648

    def test_index_routes_agree(self):
        for T, d, cols in [
            ([-80, -30, 0, 1], 2, [[2, 0, 0], [0, 2, 0], [2, 0, 1]]),
            ([-10, -3, 0, 1], 2, [[2, 0, 0], [0, 2, 0], [0, 1, -1]]),
            ([1, -1, 1], 1, [[1, 0], [0, 1]]),
        ]:
            desc = build_order_description(T, d, cols)
            n = desc.n
            b = [[desc.basis_columns[j][i] for j in range(n)] for i in range(n)]
            d_id = [[d if i == j else 0 for j in range(n)] for i in range(n)]
            from ringcert.orders import index_z

            assert power_basis_index(desc) == index_z(b, d_id)
