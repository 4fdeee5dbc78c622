from ringcert.primality import (
    PrattCertificate,
    factorize,
    generate_pratt,
    is_prime_trial,
    is_probable_prime,
    sieve_primes,
    verify_pratt,
)


def test_trial_division_small():
    primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29}
    for n in range(31):
        assert is_prime_trial(n) == (n in primes)


def test_sieve_matches_trial():
    assert sieve_primes(100) == [n for n in range(101) if is_prime_trial(n)]


def test_factorize():
    assert factorize(1) == []
    assert factorize(2592) == [(2, 5), (3, 4)]
    assert factorize(64800) == [(2, 5), (3, 4), (5, 2)]
    assert factorize(2869) == [(19, 1), (151, 1)]
    # needs rho: two eight-digit primes
    n = 10000019 * 10000079
    assert factorize(n) == [(10000019, 1), (10000079, 1)]


def test_pratt_base_case():
    assert verify_pratt(PrattCertificate(2, 1, ())).accepted


def test_pratt_17():
    cert = PrattCertificate(17, 3, ((2, 4, None),))
    assert verify_pratt(cert).accepted
    # 3^8 = 6561 = 16 mod 17, so the order condition really bites
    assert pow(3, 8, 17) == 16


def test_pratt_rejects_composite():
    # 15 - 1 = 14 = 2 * 7; no witness can have order 14 mod 15
    for w in range(2, 15):
        cert = PrattCertificate(
            15, w, ((2, 1, None), (7, 1, PrattCertificate(7, 3, ((2, 1, None), (3, 1, PrattCertificate(3, 2, ((2, 1, None),)))))))
        )
        v = verify_pratt(cert)
        assert not v.accepted and v.reason


def test_pratt_rejects_bad_factorization():
    cert = PrattCertificate(17, 3, ((2, 3, None),))  # 2^3 != 16
    v = verify_pratt(cert)
    assert not v.accepted and "factorization" in v.reason


def test_generate_matches_sieve_exhaustively():
    cache = {}
    primes = set(sieve_primes(10_000))
    for n in range(2, 10_000):
        cert = generate_pratt(n, _cache=cache)
        if n in primes:
            assert cert is not None and verify_pratt(cert).accepted, n
        else:
            assert cert is None, n


def test_probable_prime_agrees_with_trial():
    for n in range(2, 2000):
        assert is_probable_prime(n) == is_prime_trial(n)
