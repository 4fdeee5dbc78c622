"""Irreducibility certificates for polynomials over prime fields.

A certificate for f of degree n over GF(p) carries a chain h_0..h_n of
Frobenius residues together with the intermediate values and quotients of a
base-t square-and-multiply computation of each p-th power, plus Bezout
pairs showing gcd(f, h_{n/q} - X) = 1 for the primes q dividing n.  The
verifier re-checks everything with polynomial additions and multiplications
only; it never divides.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import primality
from .exactalg import (
    GF,
    PrimeField,
    deg,
    drop_trailing_zeros,
    formal_derivative,
    list_add,
    list_mul,
    list_pow,
    list_sub,
    monic,
    poly_divmod,
    poly_gcd,
    poly_mod_pow,
    poly_xgcd,
)
from .verdict import Verdict

X_POLY = [0, 1]


def base_digits(n: int, t: int) -> list[int]:
    """Base-t digits of n, least significant first."""
    if t < 2:
        raise ValueError("base must be >= 2")
    if n == 0:
        return [0]
    out = []
    while n:
        out.append(n % t)
        n //= t
    return out


@dataclass(frozen=True)
class RabinCertificate:
    p: int
    n: int
    t: int          # exponent base, 2 or p
    s: int          # p has s+1 base-t digits
    L: tuple[int, ...]                      # coefficients of f over GF(p)
    h: tuple[tuple[int, ...], ...]          # n+1 residues
    g: tuple[tuple[tuple[int, ...], ...], ...]       # n x s quotients
    hprime: tuple[tuple[tuple[int, ...], ...], ...]  # n x (s+1) chain values
    a: tuple[tuple[int, ...], ...]          # n Bezout cofactors (sparse)
    b: tuple[tuple[int, ...], ...]
    n_factors: tuple[tuple[int, int], ...]  # (prime, exponent) with product n
    n_factor_pratt: tuple[primality.PrattCertificate | None, ...]


@dataclass(frozen=True)
class ReducibleWitness:
    """A nontrivial factorization f = factor * cofactor, checkable by one product."""

    p: int
    L: tuple[int, ...]
    factor: tuple[int, ...]
    cofactor: tuple[int, ...]


def verify_reducible_witness(wit: ReducibleWitness) -> Verdict:
    field = GF(wit.p)
    f = list(wit.L)
    fac = list(wit.factor)
    if not (0 < deg(fac) < deg(f)):
        return Verdict.reject("reducible-ff/degree")
    if list_mul(field, fac, list(wit.cofactor)) != f:
        return Verdict.reject("reducible-ff/product")
    return Verdict.accept()


def verify_rabin(cert: RabinCertificate) -> Verdict:
    """Check statements (i)-(iv); acceptance proves f irreducible over GF(p)."""
    p, n, t, s = cert.p, cert.n, cert.t, cert.s
    if n <= 0:
        return Verdict.reject("rabin/degree")
    if t not in (2, p):
        return Verdict.reject("rabin/base")
    field = GF(p)
    f = list(cert.L)
    if any(not (0 <= c < p) for c in f):
        return Verdict.reject("rabin/coefficient-range")
    if drop_trailing_zeros(f) != f or deg(f) != n:
        return Verdict.reject("rabin/degree")

    digits = base_digits(p, t)
    if len(digits) != s + 1:
        return Verdict.reject("rabin/digits")

    # factorization of n, with certified prime factors
    if len(cert.n_factors) != len(cert.n_factor_pratt):
        return Verdict.reject("rabin/factorization-shape")
    prod = 1
    for (q, e), pratt in zip(cert.n_factors, cert.n_factor_pratt):
        if e < 1:
            return Verdict.reject(f"rabin/factorization/q={q}")
        prod *= q**e
        ok = primality.certify_prime_for_verifier(q, pratt)
        if not ok:
            return ok.prefixed("rabin")
    if prod != n:
        return Verdict.reject("rabin/factorization")

    if len(cert.h) != n + 1:
        return Verdict.reject("rabin/shape/h")
    if len(cert.g) != n or any(len(row) != s for row in cert.g):
        return Verdict.reject("rabin/shape/g")
    if len(cert.hprime) != n or any(len(row) != s + 1 for row in cert.hprime):
        return Verdict.reject("rabin/shape/hprime")
    if len(cert.a) != n or len(cert.b) != n:
        return Verdict.reject("rabin/shape/bezout")

    h = [list(row) for row in cert.h]
    hp = [[list(x) for x in row] for row in cert.hprime]
    g = [[list(x) for x in row] for row in cert.g]

    # (i) chain endpoints: top of each chain is h_i^{b_s}, bottom is h_{i+1}
    for i in range(n):
        if hp[i][s] != list_pow(field, h[i], digits[s]):
            return Verdict.reject(f"rabin/check-i/i={i}")
        if hp[i][0] != h[i + 1]:
            return Verdict.reject(f"rabin/check-i/i={i}")

    # (ii) one square-and-multiply step per digit:
    #      f*g_ij = (h'_{i,j+1})^t * h_i^{b_j} - h'_{ij}
    for i in range(n):
        for j in range(s):
            lhs = list_mul(field, f, g[i][j])
            rhs = list_mul(
                field,
                list_pow(field, hp[i][j + 1], t),
                list_pow(field, h[i], digits[j]),
            )
            rhs = list_sub(field, rhs, hp[i][j])
            if lhs != rhs:
                return Verdict.reject(f"rabin/check-ii/i={i}/j={j}")

    # (iii) chain starts and ends at X
    if h[0] != X_POLY or h[n] != X_POLY:
        return Verdict.reject("rabin/check-iii")

    # (iv) coprimality with h_{n/q} - X for each prime q | n
    used = set()
    for q, _e in cert.n_factors:
        k = n // q
        used.add(k)
        hm_minus_x = list_sub(field, h[k], X_POLY)
        lhs = list_add(
            field,
            list_mul(field, list(cert.a[k]), f),
            list_mul(field, list(cert.b[k]), hm_minus_x),
        )
        if lhs != [field.one]:
            return Verdict.reject(f"rabin/check-iv/q={q}")
    for k in range(n):
        if k not in used and (cert.a[k] or cert.b[k]):
            return Verdict.reject(f"rabin/witness-shape/k={k}")
    return Verdict.accept()


def residue_chain(
    field: PrimeField, g: list[int], e: int, f: list[int], base: int = 2
) -> tuple[list[int], list[list[int]]]:
    """g^e mod f via base-`base` square and multiply.

    Returns (final residue, intermediates [y_s, ..., y_0]); y_0 is the
    result.  The intermediates become the h' rows of a certificate.
    """
    if not f:
        raise ZeroDivisionError("zero modulus")
    digits = base_digits(e, base)
    s = len(digits) - 1
    y = poly_divmod(field, list_pow(field, g, digits[s]), f)[1]
    steps = [y]
    for j in range(s - 1, -1, -1):
        y = list_mul(field, list_pow(field, y, base), list_pow(field, g, digits[j]))
        y = poly_divmod(field, y, f)[1]
        steps.append(y)
    return steps[-1], steps


# ---------------------------------------------------------------------------
# generator side
# ---------------------------------------------------------------------------


def _stable_seed(*parts: int) -> int:
    h = 0x811C9DC5
    for v in parts:
        for b in v.to_bytes((v.bit_length() + 15) // 8 + 1, "little", signed=True):
            h = ((h ^ b) * 0x01000193) % (1 << 64)
    return h


def _frobenius_power(field: PrimeField, f: list[int]) -> list[int]:
    """For f with zero derivative over GF(p), the g with g^p = f."""
    p = field.p
    return drop_trailing_zeros([f[i] for i in range(0, len(f), p)])


def find_factor(field: PrimeField, f: list[int], rng: random.Random) -> list[int] | None:
    """A monic nontrivial factor of f, or None when f is irreducible.

    Linear factors are searched by increasing root representative first so
    small witnesses come out deterministically; beyond that, distinct-degree
    plus Cantor-Zassenhaus equal-degree splitting.
    """
    p = field.p
    f = monic(field, f)
    n = deg(f)
    if n <= 1:
        return None
    # exhaustive root scan only for small p; it makes small factors come out
    # in a fixed order, and larger p is covered by the distinct-degree sweep
    if p <= 1000:
        for r in range(p):
            rem = 0
            for c in reversed(f):
                rem = (rem * r + c) % p
            if rem == 0:
                return [(-r) % p, 1]
    fp = formal_derivative(field, f)
    if not fp:
        return _frobenius_power(field, f)
    d = poly_gcd(field, f, fp)
    if 0 < deg(d) < n:
        return d
    # f squarefree with no linear factor: distinct-degree sweep
    h = poly_divmod(field, X_POLY, f)[1]
    for degree in range(1, n // 2 + 1):
        h = poly_mod_pow(field, h, p, f)
        g = poly_gcd(field, f, list_sub(field, h, X_POLY))
        if deg(g) <= 0:
            continue
        if deg(g) < n:
            return _equal_degree_split(field, g, degree, rng)
        return _equal_degree_split(field, f, degree, rng)
    return None


def _equal_degree_split(
    field: PrimeField, f: list[int], d: int, rng: random.Random
) -> list[int]:
    """An irreducible factor of f, all of whose factors have degree d."""
    p = field.p
    n = deg(f)
    if n == d:
        return monic(field, f)
    while True:
        u = [rng.randrange(p) for _ in range(n)]
        u = drop_trailing_zeros(u)
        if deg(u) < 1:
            continue
        g = poly_gcd(field, f, u)
        if 0 < deg(g) < n:
            return _equal_degree_split(field, g, d, rng)
        if p == 2:
            # trace map u + u^2 + ... + u^(2^(d-1)) splits over GF(2)
            t = poly_divmod(field, u, f)[1]
            acc = t
            for _ in range(d - 1):
                t = poly_mod_pow(field, t, 2, f)
                acc = list_add(field, acc, t)
            g = poly_gcd(field, f, acc)
        else:
            e = (p**d - 1) // 2
            w = poly_mod_pow(field, u, e, f)
            g = poly_gcd(field, f, list_sub(field, w, [1]))
        if 0 < deg(g) < n:
            return _equal_degree_split(field, g, d, rng)


def factor_poly(
    field: PrimeField, f: list[int], rng: random.Random | None = None
) -> tuple[int, list[tuple[list[int], int]]]:
    """Full factorization over GF(p): (unit, [(monic irreducible, multiplicity)]).

    Generator-side; deterministic for a given input via a derived seed.
    """
    if not f:
        raise ValueError("cannot factor the zero polynomial")
    if rng is None:
        rng = random.Random(_stable_seed(field.p, *f))
    unit = f[-1] % field.p
    rest = monic(field, f)
    out: dict[tuple[int, ...], int] = {}
    stack = [rest]
    while stack:
        cur = stack.pop()
        if deg(cur) == 0:
            continue
        fac = find_factor(field, cur, rng)
        if fac is None:
            key = tuple(cur)
            out[key] = out.get(key, 0) + 1
            continue
        q, r = poly_divmod(field, cur, fac)
        if r:
            raise AssertionError("factor does not divide")
        stack.append(fac)
        stack.append(q)
    factors = sorted(out.items(), key=lambda kv: (len(kv[0]), kv[0]))
    return unit, [(list(k), m) for k, m in factors]


def radical_fp(field: PrimeField, f: list[int], rng: random.Random | None = None) -> list[int]:
    """Product of the distinct monic irreducible factors of f."""
    _unit, factors = factor_poly(field, f, rng)
    rad = [field.one]
    for fac, _m in factors:
        rad = list_mul(field, rad, fac)
    return rad


def is_irreducible(field: PrimeField, f: list[int]) -> bool:
    """Rabin's criterion computed directly; generator-side test."""
    n = deg(f)
    if n <= 0:
        return False
    if n == 1:
        return True
    p = field.p
    powers = [poly_divmod(field, X_POLY, f)[1]]
    for _ in range(n):
        powers.append(poly_mod_pow(field, powers[-1], p, f))
    if powers[n] != powers[0]:
        return False
    for q, _e in primality.factorize(n):
        m = n // q
        g = poly_gcd(field, f, list_sub(field, powers[m], X_POLY))
        if deg(g) != 0:
            return False
    return True


def choose_base(p: int, n: int) -> int:
    """Exponent base heuristic: p-th powers are cheap when p is tiny and n large."""
    return p if (p <= 5 and n >= 8) else 2


def generate_rabin(
    f: list[int], p: int, t: int | None = None, rng: random.Random | None = None
) -> RabinCertificate | ReducibleWitness:
    """Certificate for irreducible f over GF(p), or a factorization witness."""
    field = GF(p)
    f = [c % p for c in f]
    f = drop_trailing_zeros(f)
    n = deg(f)
    if n <= 0:
        raise ValueError("degree must be positive")
    if rng is None:
        rng = random.Random(_stable_seed(p, n, *f))
    if t is None:
        t = choose_base(p, n)
    if t not in (2, p):
        raise ValueError("exponent base must be 2 or p")

    if n > 1:
        fac = find_factor(field, monic(field, f), rng)
        if fac is not None:
            q, r = poly_divmod(field, f, fac)
            assert not r
            return ReducibleWitness(p, tuple(f), tuple(fac), tuple(q))

    digits = base_digits(p, t)
    s = len(digits) - 1

    # Frobenius residue chain h_i = X^{p^i} mod f, pinned to X at both ends
    h: list[list[int]] = [list(X_POLY)]
    for i in range(1, n + 1):
        if i == n:
            h.append(list(X_POLY))
        else:
            h.append(poly_mod_pow(field, h[i - 1], p, f))

    g_rows = []
    hp_rows = []
    for i in range(n):
        hp = [None] * (s + 1)
        hp[s] = list_pow(field, h[i], digits[s])
        for j in range(s - 1, 0, -1):
            step = list_mul(
                field, list_pow(field, hp[j + 1], t), list_pow(field, h[i], digits[j])
            )
            hp[j] = poly_divmod(field, step, f)[1]
        hp[0] = h[i + 1]
        grow = []
        for j in range(s):
            num = list_mul(
                field, list_pow(field, hp[j + 1], t), list_pow(field, h[i], digits[j])
            )
            num = list_sub(field, num, hp[j])
            q, r = poly_divmod(field, num, f)
            assert not r, "chain step not divisible by f"
            grow.append(tuple(q))
        g_rows.append(tuple(grow))
        hp_rows.append(tuple(tuple(x) for x in hp))

    n_factors = primality.factorize(n) if n > 1 else []
    pratt_list: list[primality.PrattCertificate | None] = []
    for q, _e in n_factors:
        if q < primality.TRIAL_DIVISION_BOUND:
            pratt_list.append(None)
        else:
            pratt_list.append(primality.generate_pratt(q))

    a_rows: list[tuple[int, ...]] = [()] * n
    b_rows: list[tuple[int, ...]] = [()] * n
    for q, _e in n_factors:
        k = n // q
        target = list_sub(field, h[k], X_POLY)
        d, u, v = poly_xgcd(field, f, target)
        assert d == [field.one], "not coprime; f should have been irreducible"
        a_rows[k] = tuple(u)
        b_rows[k] = tuple(v)

    cert = RabinCertificate(
        p=p,
        n=n,
        t=t,
        s=s,
        L=tuple(f),
        h=tuple(tuple(x) for x in h),
        g=tuple(g_rows),
        hprime=tuple(hp_rows),
        a=tuple(a_rows),
        b=tuple(b_rows),
        n_factors=tuple(n_factors),
        n_factor_pratt=tuple(pratt_list),
    )
    return cert
