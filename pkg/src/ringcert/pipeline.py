"""The global driver: prove that a supplied basis spans the full ring of
integers of Q[X]/<T>.

A bundle chains together: an irreducibility certificate for T, the order
builder for the basis, membership of theta, a separability witness
a*T + b*T' = N with a certified factorization of N, and one maximality
certificate per prime factor of N.  Any prime not dividing N is
automatically fine (T stays separable mod p there), so acceptance of the
bundle means the order is the whole ring of integers.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from . import irred_int, maximality, primality
from .exactalg import (
    QQ,
    ZZ,
    deg,
    drop_trailing_zeros,
    formal_derivative,
    list_add,
    list_mul,
    list_sub,
    mul_pointwise,
    poly_xgcd,
)
from .irred_int import DegreeAnalysisCertificate, LPFWCertificate
from .maximality import (
    DedekindCertificate,
    KernelWitness,
    PMaxLongCertificate,
    PMaxShortCertificate,
)
from .orders import (
    NotAnOrder,
    OrderDescription,
    build_order_description,
    theta_coordinates,
    times_table_of,
    verify_order_builder,
)
from .resultants import check_order_discriminant, resultant
from .verdict import Verdict

MaximalityCert = DedekindCertificate | PMaxShortCertificate | PMaxLongCertificate


@dataclass(frozen=True)
class PrimeEntry:
    p: int
    exponent: int
    pratt: primality.PrattCertificate | None  # required for large p
    cert: MaximalityCert


@dataclass(frozen=True)
class CertificateBundle:
    T: tuple[int, ...]
    irreducibility: DegreeAnalysisCertificate | LPFWCertificate
    order: OrderDescription
    theta_coords: tuple[int, ...]
    theta_witness: tuple[int, ...]  # sum x_k b_k - T*witness = d*X
    bezout_a: tuple[int, ...]      # a*T + b*T' = N
    bezout_b: tuple[int, ...]
    n_value: int                   # N, nonzero
    n_sign: int                    # +1 or -1; N = sign * prod p^e
    primes: tuple[PrimeEntry, ...]
    claimed_disc: int | None = None


@dataclass(frozen=True)
class NotMaximalReport:
    """Generator outcome when the basis provably misses an integral element."""

    p: int
    kernel_coords: tuple[int, ...]


def parallel_map(fn, items, threads: int = 1):
    """Apply fn to items, optionally on a thread pool; results stay in input
    order so verdict aggregation is independent of the thread count."""
    items = list(items)
    if threads <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    from concurrent.futures import ThreadPoolExecutor

    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def verify_bundle(bundle: CertificateBundle, threads: int = 1) -> Verdict:
    """Re-check every component; acceptance means the order is the full ring
    of integers of Q[X]/<T>."""
    T = list(bundle.T)
    n = deg(T)
    if n < 1 or T[-1] != 1:
        return Verdict.reject("bundle/T-not-monic")

    # irreducibility of T, bound to the same coefficients
    irr = bundle.irreducibility
    if list(irr.f) != T:
        return Verdict.reject("bundle/irred/binding")
    if isinstance(irr, LPFWCertificate):
        ok = irred_int.verify_lpfw(irr)
    else:
        ok = irred_int.verify_degree_analysis(irr)
    if not ok:
        return ok.prefixed("bundle/irred")

    # the order description
    desc = bundle.order
    if list(desc.T) != T:
        return Verdict.reject("bundle/order/binding")
    ok = verify_order_builder(desc)
    if not ok:
        return ok.prefixed("bundle")

    # theta inside the order: sum_k x_k b_k - T * witness = d * X
    if len(bundle.theta_coords) != n:
        return Verdict.reject("bundle/theta")
    combo: list[int] = []
    for k in range(n):
        combo = list_add(
            ZZ,
            combo,
            mul_pointwise(
                ZZ, bundle.theta_coords[k], drop_trailing_zeros(list(desc.basis_columns[k]))
            ),
        )
    combo = list_sub(ZZ, combo, list_mul(ZZ, T, list(bundle.theta_witness)))
    if combo != [0, desc.d]:
        return Verdict.reject("bundle/theta")

    # factorization of N with certified primes
    if bundle.n_value == 0:
        return Verdict.reject("bundle/separability/zero")
    if bundle.n_sign not in (1, -1):
        return Verdict.reject("bundle/prime-factorization/sign")
    prod = bundle.n_sign
    seen: set[int] = set()
    for entry in bundle.primes:
        if entry.p in seen:
            return Verdict.reject(f"bundle/prime-factorization/duplicate/p={entry.p}")
        seen.add(entry.p)
        if entry.exponent < 1:
            return Verdict.reject(f"bundle/prime-factorization/exponent/p={entry.p}")
        prod *= entry.p**entry.exponent
    if prod != bundle.n_value:
        return Verdict.reject("bundle/prime-factorization")
    for entry in bundle.primes:
        ok = primality.certify_prime_for_verifier(entry.p, entry.pratt)
        if not ok:
            return ok.prefixed("bundle")

    # one maximality certificate per prime, checked over the times table
    tt = times_table_of(desc)

    def check_entry(entry: PrimeEntry) -> Verdict:
        cert = entry.cert
        if isinstance(cert, DedekindCertificate):
            if list(cert.T) != T or cert.p != entry.p:
                return Verdict.reject(f"bundle/p={entry.p}/binding")
            return maximality.verify_dedekind(cert).prefixed(f"bundle/p={entry.p}")
        if isinstance(cert, PMaxShortCertificate):
            if cert.p != entry.p:
                return Verdict.reject(f"bundle/p={entry.p}/binding")
            return maximality.verify_pmax_short(tt, entry.p, cert).prefixed(
                f"bundle/p={entry.p}"
            )
        if isinstance(cert, PMaxLongCertificate):
            if cert.p != entry.p:
                return Verdict.reject(f"bundle/p={entry.p}/binding")
            return maximality.verify_pmax_long(tt, entry.p, cert).prefixed(
                f"bundle/p={entry.p}"
            )
        return Verdict.reject(f"bundle/p={entry.p}/unknown-kind")

    for v in parallel_map(check_entry, bundle.primes, threads):
        if not v:
            return v

    # the separability identity itself
    tprime = formal_derivative(ZZ, T)
    lhs = list_add(
        ZZ,
        list_mul(ZZ, list(bundle.bezout_a), T),
        list_mul(ZZ, list(bundle.bezout_b), tprime),
    )
    if lhs != drop_trailing_zeros([bundle.n_value]):
        return Verdict.reject("bundle/separability")

    if bundle.claimed_disc is not None:
        ok = check_order_discriminant(desc, bundle.claimed_disc)
        if not ok:
            return ok.prefixed("bundle")
    return Verdict.accept()


def claim_discriminant(bundle: CertificateBundle, claimed: int, threads: int = 1) -> Verdict:
    """Verify the bundle, then compare the claimed discriminant exactly."""
    ok = verify_bundle(bundle, threads=threads)
    if not ok:
        return ok
    return check_order_discriminant(bundle.order, claimed)


# ---------------------------------------------------------------------------
# generator side
# ---------------------------------------------------------------------------


class BundleError(Exception):
    """Generation failed: reducible T, bad basis, or budget exhaustion."""

    def __init__(self, message: str, report: NotMaximalReport | None = None):
        super().__init__(message)
        self.report = report


@dataclass
class BundleBudget:
    irred: irred_int.IntIrredBudget = dc_field(default_factory=irred_int.IntIrredBudget)
    witness_budget: int = 512
    seed: int = 0


def _bezout_witness(T: list[int]) -> tuple[list[int], list[int], int]:
    """Integer a, b with a*T + b*T' = resultant(T, T'), nonzero for separable T."""
    tprime = formal_derivative(ZZ, T)
    res = resultant(ZZ, T, tprime)
    if res == 0:
        raise BundleError("defining polynomial is not separable")
    tq = [Fraction(c) for c in T]
    tpq = [Fraction(c) for c in tprime]
    d, u, v = poly_xgcd(QQ, tq, tpq)
    if d != [Fraction(1)]:
        raise BundleError("defining polynomial is not separable")
    a = [Fraction(res) * c for c in u]
    b = [Fraction(res) * c for c in v]
    assert all(c.denominator == 1 for c in a + b), "resultant-scaled cofactors must be integral"
    return [int(c) for c in a], [int(c) for c in b], res


def generate_bundle(
    T: list[int],
    d: int,
    basis_columns: list[list[int]],
    budget: BundleBudget | None = None,
    claimed_disc: int | None = None,
) -> CertificateBundle:
    """Assemble a bundle that verify_bundle accepts, or raise BundleError.

    Strategy: certify irreducibility of T, build the order, take
    N = resultant(T, T'), then per prime p | N try the Dedekind criterion
    first and fall back to kernel certificates.  A provably nontrivial
    kernel at some p aborts with a NotMaximalReport attached.
    """
    if budget is None:
        budget = BundleBudget()
    rng = random.Random(budget.seed)
    T = drop_trailing_zeros(list(T))
    if deg(T) < 1 or T[-1] != 1:
        raise BundleError("defining polynomial must be monic of positive degree")

    irr = irred_int.generate_int_irred(T, budget=budget.irred, rng=rng)
    if isinstance(irr, irred_int.ReducibleWitnessInt):
        raise BundleError(f"defining polynomial is reducible; factor {list(irr.factor)}")

    try:
        desc = build_order_description(T, d, basis_columns)
    except NotAnOrder as e:
        raise BundleError(f"basis does not span an order: {e}") from e

    theta = theta_coordinates(desc)
    if theta is None:
        raise BundleError("theta does not lie in the span of the basis")
    from .orders import _divmod_by_monic_int

    theta_q, _ = _divmod_by_monic_int([0, d], T)
    theta_witness = mul_pointwise(ZZ, -1, theta_q)

    bez_a, bez_b, n_value = _bezout_witness(T)
    sign = 1 if n_value > 0 else -1
    factors = primality.factorize(abs(n_value), rng)

    tt = times_table_of(desc)
    entries: list[PrimeEntry] = []
    for p, e in factors:
        pratt = None
        if p >= primality.TRIAL_DIVISION_BOUND:
            pratt = primality.generate_pratt(p, rng)
            if pratt is None:
                raise BundleError(f"failed to certify prime {p}")
        ded = maximality.generate_dedekind(T, p, rng)
        if ded is not None and maximality.verify_dedekind(ded).accepted:
            entries.append(PrimeEntry(p, e, pratt, ded))
            continue
        cert = maximality.generate_pmax(tt, p, witness_budget=budget.witness_budget, rng=rng)
        if isinstance(cert, KernelWitness):
            raise BundleError(
                f"order is not maximal at {p}",
                report=NotMaximalReport(p, cert.coords),
            )
        entries.append(PrimeEntry(p, e, pratt, cert))

    bundle = CertificateBundle(
        T=tuple(T),
        irreducibility=irr,
        order=desc,
        theta_coords=tuple(theta),
        theta_witness=tuple(theta_witness),
        bezout_a=tuple(bez_a),
        bezout_b=tuple(bez_b),
        n_value=n_value,
        n_sign=sign,
        primes=tuple(entries),
        claimed_disc=claimed_disc,
    )
    check = verify_bundle(bundle)
    if not check:
        raise BundleError(f"internal error: generated bundle fails at {check.reason}")
    return bundle
