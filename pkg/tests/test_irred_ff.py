import dataclasses
import itertools
import random

import pytest

from ringcert.exactalg import GF, deg, drop_trailing_zeros, list_mul, poly_divmod
from ringcert.irred_ff import (
    RabinCertificate,
    ReducibleWitness,
    base_digits,
    factor_poly,
    generate_rabin,
    is_irreducible,
    residue_chain,
    verify_rabin,
    verify_reducible_witness,
)


def brute_force_irreducible(p, f):
    """Trial division by every monic polynomial of degree 1..deg(f)//2."""
    field = GF(p)
    n = deg(f)
    if n <= 0:
        return False
    if n == 1:
        return True
    for d in range(1, n // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            g = list(tail) + [1]
            if poly_divmod(field, f, g)[1] == []:
                return False
    return True


def all_polys(p, degree):
    for lead in range(1, p):
        for tail in itertools.product(range(p), repeat=degree):
            yield list(tail) + [lead]


def test_base_digits():
    assert base_digits(5, 2) == [1, 0, 1]
    assert base_digits(2, 2) == [0, 1]
    assert base_digits(5, 5) == [0, 1]
    assert base_digits(0, 2) == [0]


class TestGenerateVerify:
    def test_x2_plus_1_mod_3(self):
        cert = generate_rabin([1, 0, 1], 3)
        assert isinstance(cert, RabinCertificate)
        # Frobenius chain: X, X^3 = 2X, X^9 = X modulo f
        assert [list(h) for h in cert.h] == [[0, 1], [0, 2], [0, 1]]
        assert verify_rabin(cert).accepted

    def test_degree_one(self):
        cert = generate_rabin([0, 1], 7)
        assert isinstance(cert, RabinCertificate)
        assert cert.n_factors == ()
        assert verify_rabin(cert).accepted

    def test_reducible_witness(self):
        out = generate_rabin([0, 1, 1], 2)  # X^2 + X
        assert isinstance(out, ReducibleWitness)
        assert list(out.factor) == [0, 1]
        assert verify_reducible_witness(out).accepted

    def test_x2_minus_1_mod_3_factor(self):
        out = generate_rabin([-1, 0, 1], 3)
        assert isinstance(out, ReducibleWitness)
        assert list(out.factor) == [2, 1]  # X - 1
        assert list_mul(GF(3), list(out.factor), list(out.cofactor)) == [2, 0, 1]

    def test_mutated_h_end_rejected_at_check_iii(self):
        cert = generate_rabin([1, 0, 1], 3)
        bad_h = list(cert.h)
        bad_h[-1] = (1, 1)  # X + 1
        bad = dataclasses.replace(cert, h=tuple(bad_h))
        v = verify_rabin(bad)
        assert not v.accepted
        assert v.reason.startswith("rabin/check-i")

    def test_base_t_equals_p(self):
        cert = generate_rabin([1, 0, 1], 3, t=3)
        assert isinstance(cert, RabinCertificate)
        assert cert.t == 3 and cert.s == 1
        assert verify_rabin(cert).accepted

    def test_larger_base_p_certificate(self):
        # an irreducible octic over GF(2) picks t = p by the heuristic
        f = [1, 1, 0, 1, 1, 0, 0, 0, 1]
        assert brute_force_irreducible(2, f)
        cert = generate_rabin(f, 2)
        assert isinstance(cert, RabinCertificate)
        assert verify_rabin(cert).accepted


class TestResidueChain:
    def test_example(self):
        f3 = GF(3)
        y, steps = residue_chain(f3, [0, 1], 9, [1, 0, 1])
        assert y == [0, 1]
        assert steps[-1] == y

    def test_e_one_and_zero(self):
        f3 = GF(3)
        assert residue_chain(f3, [2, 1], 1, [1, 0, 1])[0] == [2, 1]
        assert residue_chain(f3, [2, 1], 0, [1, 0, 1])[0] == [1]

    def test_matches_mod_pow(self):
        rng = random.Random(7)
        f5 = GF(5)
        f = [2, 0, 1, 1]
        for _ in range(40):
            g = drop_trailing_zeros([rng.randrange(5) for _ in range(4)])
            e = rng.randrange(0, 200)
            y, _ = residue_chain(f5, g, e, f)
            naive = [1]
            for _ in range(e):
                naive = poly_divmod(f5, list_mul(f5, naive, g), f)[1]
            assert y == naive


class TestSoundness:
    @pytest.mark.parametrize("p", [2, 3])
    def test_exhaustive_small(self, p):
        for degree in (1, 2, 3):
            for f in all_polys(p, degree):
                out = generate_rabin(f, p)
                expect = brute_force_irreducible(p, f)
                if expect:
                    assert isinstance(out, RabinCertificate), f
                    assert verify_rabin(out).accepted, f
                else:
                    assert isinstance(out, ReducibleWitness), f
                    assert verify_reducible_witness(out).accepted, f

    def test_check_ii_implies_frobenius_step(self):
        # independent check that each h_{i+1} is h_i^p modulo f
        p = 5
        field = GF(p)
        f = [3, 3, 0, 4, 1]
        assert brute_force_irreducible(p, f)
        cert = generate_rabin(f, p)
        assert isinstance(cert, RabinCertificate)
        for i in range(cert.n):
            expected, _ = residue_chain(field, list(cert.h[i]), p, f)
            actual = poly_divmod(field, list(cert.h[i + 1]), f)[1]
            assert actual == expected

    def test_factor_poly_reconstructs(self):
        rng = random.Random(3)
        for p in (2, 3, 5, 7):
            field = GF(p)
            for _ in range(25):
                f = drop_trailing_zeros([rng.randrange(p) for _ in range(rng.randrange(2, 8))])
                if deg(f) < 1:
                    continue
                unit, factors = factor_poly(field, f)
                prod = [unit]
                for fac, mult in factors:
                    assert is_irreducible(field, fac)
                    assert fac[-1] == 1
                    for _ in range(mult):
                        prod = list_mul(field, prod, fac)
                assert prod == f


class TestMutationRobustness:
    def test_coefficient_mutations_rejected(self):
        rng = random.Random(42)
        p = 5
        f = [3, 3, 0, 4, 1]
        cert = generate_rabin(f, p)
        assert isinstance(cert, RabinCertificate)
        rejected = 0
        attempts = 0
        while rejected < 100 and attempts < 400:
            attempts += 1
            mutated = _mutate_one_coefficient(cert, rng)
            if mutated is None:
                continue
            v = verify_rabin(mutated)
            assert not v.accepted, mutated
            assert v.reason
            rejected += 1
        assert rejected >= 100


def _mutate_one_coefficient(cert, rng):
    """Bump one residue somewhere in the certificate by a nonzero amount."""
    p = cert.p
    fields = ["L", "h", "g", "hprime", "a", "b"]
    name = rng.choice(fields)
    val = getattr(cert, name)

    def mutate_poly(poly):
        poly = list(poly)
        if not poly:
            poly = [0]
        i = rng.randrange(len(poly))
        poly[i] = (poly[i] + rng.randrange(1, p)) % p
        return tuple(drop_trailing_zeros(poly))

    if name == "L":
        return dataclasses.replace(cert, L=mutate_poly(val))
    if name == "h":
        rows = list(val)
        i = rng.randrange(len(rows))
        rows[i] = mutate_poly(rows[i])
        return dataclasses.replace(cert, h=tuple(rows))
    if name in ("g", "hprime"):
        rows = [list(r) for r in val]
        i = rng.randrange(len(rows))
        j = rng.randrange(len(rows[i]))
        rows[i][j] = mutate_poly(rows[i][j])
        return dataclasses.replace(cert, **{name: tuple(tuple(r) for r in rows)})
    rows = list(val)
    nonempty = [i for i, r in enumerate(rows) if r]
    if not nonempty:
        return None
    i = rng.choice(nonempty)
    rows[i] = mutate_poly(rows[i])
    return dataclasses.replace(cert, **{name: tuple(rows)})
