"""Primality: trial division, deterministic Miller-Rabin, Pratt certificates.

The verifier side accepts primes below TRIAL_DIVISION_BOUND by direct trial
division and insists on a Pratt certificate beyond that.  Miller-Rabin and
Pollard rho are generator-side search tools only; nothing a verifier
concludes ever rests on them.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .verdict import Verdict

TRIAL_DIVISION_BOUND = 10**6

# Deterministic Miller-Rabin witness set, valid for all n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime_trial(n: int) -> bool:
    """Trial division up to sqrt(n). Deterministic, for small n."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def is_probable_prime(n: int) -> bool:
    """Miller-Rabin with a fixed witness set (deterministic below 3.3e24)."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = (x * x) % n
            if x == n - 1:
                break
        else:
            return False
    return True


def sieve_primes(limit: int) -> list[int]:
    """All primes <= limit."""
    if limit < 2:
        return []
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for p in range(2, int(limit**0.5) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(flags[p * p :: p]))
    return [i for i, f in enumerate(flags) if f]


def _pollard_rho(n: int, rng: random.Random) -> int:
    """A nontrivial factor of odd composite n (Brent's cycle variant)."""
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = (q * abs(x - y)) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def factorize(n: int, rng: random.Random | None = None) -> list[tuple[int, int]]:
    """Prime factorization of n >= 1 as sorted (prime, exponent) pairs.

    Trial division by small primes first, Pollard rho for what remains.
    Generator-side only.
    """
    if n < 1:
        raise ValueError("factorize expects n >= 1")
    if rng is None:
        rng = random.Random(0xF0F0 ^ n)
    factors: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    d = 7
    wheel = (4, 2, 4, 2, 4, 6, 2, 6)
    w = 0
    while d * d <= n and d < 10**6:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += wheel[w]
        w = (w + 1) % 8
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_probable_prime(m):
            factors[m] = factors.get(m, 0) + 1
            continue
        g = _pollard_rho(m, rng)
        stack.append(g)
        stack.append(m // g)
    return sorted(factors.items())


# ---------------------------------------------------------------------------
# Pratt certificates
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PrattCertificate:
    """Recursive primality certificate.

    ``factors`` lists (q, e, sub) over the prime factorization of P - 1,
    where sub is the nested certificate for q (None exactly when q == 2).
    P == 2 is the base case: witness 1, empty factor list.
    """

    P: int
    witness: int
    factors: tuple[tuple[int, int, "PrattCertificate | None"], ...]


def verify_pratt(cert: PrattCertificate) -> Verdict:
    """Check the Pratt conditions recursively."""
    P = cert.P
    if P < 2:
        return Verdict.reject(f"pratt/range/P={P}")
    if P == 2:
        return Verdict.accept()
    if P % 2 == 0:
        return Verdict.reject(f"pratt/even/P={P}")
    prod = 1
    for q, e, _sub in cert.factors:
        if q < 2 or e < 1:
            return Verdict.reject(f"pratt/factorization/P={P}/q={q}")
        prod *= q**e
    if prod != P - 1:
        return Verdict.reject(f"pratt/factorization/P={P}")
    g = cert.witness
    if not (1 < g < P):
        return Verdict.reject(f"pratt/witness-range/P={P}")
    if pow(g, P - 1, P) != 1:
        return Verdict.reject(f"pratt/fermat/P={P}")
    seen = set()
    for q, _e, sub in cert.factors:
        if q in seen:
            return Verdict.reject(f"pratt/duplicate-factor/P={P}/q={q}")
        seen.add(q)
        if pow(g, (P - 1) // q, P) == 1:
            return Verdict.reject(f"pratt/order/P={P}/q={q}")
        if q == 2:
            if sub is not None and sub.P != 2:
                return Verdict.reject(f"pratt/sub-mismatch/P={P}/q={q}")
            continue
        if sub is None:
            return Verdict.reject(f"pratt/missing-sub/P={P}/q={q}")
        if sub.P != q:
            return Verdict.reject(f"pratt/sub-mismatch/P={P}/q={q}")
        inner = verify_pratt(sub)
        if not inner:
            return inner.prefixed(f"pratt/q={q}")
    return Verdict.accept()


def generate_pratt(
    P: int, rng: random.Random | None = None, _cache: dict | None = None
) -> PrattCertificate | None:
    """Build a Pratt certificate for prime P; None if P is not prime."""
    if _cache is None:
        _cache = {}
    if P in _cache:
        return _cache[P]
    if P < 2:
        return None
    if P == 2:
        cert = PrattCertificate(2, 1, ())
        _cache[P] = cert
        return cert
    if not is_probable_prime(P):
        return None
    fac = factorize(P - 1, rng)
    entries = []
    for q, e in fac:
        sub = None
        if q != 2:
            sub = generate_pratt(q, rng, _cache)
            if sub is None:
                return None
        entries.append((q, e, sub))
    for g in range(2, P):
        if pow(g, P - 1, P) != 1:
            return None  # not prime after all
        if all(pow(g, (P - 1) // q, P) != 1 for q, _e, _s in entries):
            cert = PrattCertificate(P, g, tuple(entries))
            _cache[P] = cert
            return cert
    return None


def certify_prime_for_verifier(p: int, pratt: PrattCertificate | None) -> Verdict:
    """Verifier-side primality policy.

    Primes below TRIAL_DIVISION_BOUND are checked by trial division; larger
    ones must come with a Pratt certificate.
    """
    if p < TRIAL_DIVISION_BOUND:
        if is_prime_trial(p):
            return Verdict.accept()
        return Verdict.reject(f"prime/composite/p={p}")
    if pratt is None:
        return Verdict.reject(f"prime/missing-certificate/p={p}")
    if pratt.P != p:
        return Verdict.reject(f"prime/certificate-mismatch/p={p}")
    return verify_pratt(pratt).prefixed(f"prime/p={p}")
