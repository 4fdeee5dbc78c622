"""p-maximality certificates for an order given by a times table.

Two routes:

* the Dedekind criterion on the defining polynomial T, which settles every
  prime not dividing the index of Z[theta] and many that do not survive it;
* kernel certificates: exhibit a basis of the radical quotient via the
  iterated Frobenius, then show that multiplication acts faithfully on it.
  The short form carries a single witness element; the long form carries
  the full endomorphism matrices and always exists when O is p-maximal.

Verification works entirely over the times table: products over Z,
Frobenius powers over the table reduced mod p, and pivot-pattern reads for
every linear-independence claim.  No kernels or determinants are ever
computed by the verifier.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .exactalg import (
    GF,
    ZZ,
    deg,
    drop_trailing_zeros,
    list_add,
    list_mul,
    list_pow,
    list_sub,
    mul_pointwise,
    poly_divmod,
    poly_xgcd,
    reduce_mod_p,
)
from .irred_ff import radical_fp
from .linalg import (
    nullspace_fp,
    pattern_reduce_fp,
    rank_fp,
    solve_exact,
    transpose,
)
from .orders import TimesTable, reduce_table_mod_p, tt_mul, tt_pow
from .verdict import Verdict

# ---------------------------------------------------------------------------
# Dedekind criterion
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DedekindCertificate:
    T: tuple[int, ...]
    p: int
    g: tuple[int, ...]  # lift of the radical of T mod p
    h: tuple[int, ...]  # lift of (T mod p) / (g mod p)
    f: tuple[int, ...]  # (g*h - T) / p over Z
    a: tuple[int, ...]  # cofactors over GF(p): a*fbar + b*gbar + c*hbar = 1
    b: tuple[int, ...]
    c: tuple[int, ...]
    rad_quotient: tuple[int, ...]       # (T mod p) / gbar
    rad_power_exp: int                  # n_r with T | g^{n_r} mod p
    rad_power_witness: tuple[int, ...]  # gbar^{n_r} / (T mod p)
    sqfree_u: tuple[int, ...]           # u*gbar + v*gbar' = 1
    sqfree_v: tuple[int, ...]


def _fp_range_ok(p: int, *polys: tuple[int, ...]) -> bool:
    return all(all(0 <= c < p for c in poly) for poly in polys)


def verify_dedekind(cert: DedekindCertificate) -> Verdict:
    """Acceptance certifies that p does not divide the index of Z[theta] in
    the maximal order, hence p-maximality of any full-rank order containing
    theta.  Primality of p is certified upstream."""
    T = list(cert.T)
    p = cert.p
    n = deg(T)
    if n < 1 or T[-1] != 1:
        return Verdict.reject("dedekind/T-not-monic")
    if p < 2:
        return Verdict.reject("dedekind/modulus")
    field = GF(p)
    if not _fp_range_ok(
        p,
        cert.a,
        cert.b,
        cert.c,
        cert.rad_quotient,
        cert.rad_power_witness,
        cert.sqfree_u,
        cert.sqfree_v,
    ):
        return Verdict.reject("dedekind/coefficient-range")
    Tbar = reduce_mod_p(T, p)
    gbar = reduce_mod_p(list(cert.g), p)
    hbar = reduce_mod_p(list(cert.h), p)
    fbar = reduce_mod_p(list(cert.f), p)

    if list_mul(field, gbar, list(cert.rad_quotient)) != Tbar:
        return Verdict.reject("dedekind/radical-divides")
    if not (1 <= cert.rad_power_exp <= n):
        return Verdict.reject("dedekind/radical-exponent")
    if list_mul(field, Tbar, list(cert.rad_power_witness)) != list_pow(
        field, gbar, cert.rad_power_exp
    ):
        return Verdict.reject("dedekind/radical-power")
    gprime = drop_trailing_zeros([(i * cert.g[i]) % p for i in range(1, len(cert.g))])
    lhs = list_add(
        field,
        list_mul(field, list(cert.sqfree_u), gbar),
        list_mul(field, list(cert.sqfree_v), gprime),
    )
    if lhs != [1 % p]:
        return Verdict.reject("dedekind/radical-squarefree")

    prod = list_sub(ZZ, list_mul(ZZ, list(cert.g), list(cert.h)), T)
    if mul_pointwise(ZZ, p, list(cert.f)) != prod:
        return Verdict.reject("dedekind/factor-identity")

    combo = list_add(
        field,
        list_mul(field, list(cert.a), fbar),
        list_add(
            field,
            list_mul(field, list(cert.b), gbar),
            list_mul(field, list(cert.c), hbar),
        ),
    )
    if combo != [1 % p]:
        return Verdict.reject("dedekind/gcd")
    return Verdict.accept()


def generate_dedekind(
    T: list[int], p: int, rng: random.Random | None = None
) -> DedekindCertificate | None:
    """Build a Dedekind certificate at p, or None when the criterion fails."""
    field = GF(p)
    T = drop_trailing_zeros(list(T))
    n = deg(T)
    Tbar = reduce_mod_p(T, p)
    rad = radical_fp(field, Tbar, rng)
    hbar, rem = poly_divmod(field, Tbar, rad)
    assert not rem
    g = list(rad)
    h = list(hbar)
    prod = list_sub(ZZ, list_mul(ZZ, g, h), T)
    assert all(c % p == 0 for c in prod)
    f = [c // p for c in prod]
    fbar = reduce_mod_p(f, p)

    d1, u1, v1 = poly_xgcd(field, fbar, rad)
    d2, u2, v2 = poly_xgcd(field, d1, hbar)
    if d2 != [1 % p]:
        return None
    a = list_mul(field, u2, u1)
    b = list_mul(field, u2, v1)
    c = v2

    power = list_pow(field, rad, n)
    wit, rem = poly_divmod(field, power, Tbar)
    assert not rem
    dsq, su, sv = poly_xgcd(field, rad, drop_trailing_zeros([(i * rad[i]) % p for i in range(1, len(rad))]))
    assert dsq == [1 % p]
    return DedekindCertificate(
        T=tuple(T),
        p=p,
        g=tuple(g),
        h=tuple(h),
        f=tuple(f),
        a=tuple(a),
        b=tuple(b),
        c=tuple(c),
        rad_quotient=tuple(hbar),
        rad_power_exp=n,
        rad_power_witness=tuple(wit),
        sqfree_u=tuple(su),
        sqfree_v=tuple(sv),
    )


# ---------------------------------------------------------------------------
# kernel certificates
# ---------------------------------------------------------------------------

Pivot = tuple[str, int]  # ("A", k) points into the V block, ("B", k) into pW


@dataclass(frozen=True)
class PMaxShortCertificate:
    p: int
    t: int
    m: int
    n: int
    V: tuple[tuple[int, ...], ...]      # m x r over Z
    W: tuple[tuple[int, ...], ...]      # n x r over Z
    U: tuple[tuple[int, ...], ...]      # n x r over GF(p)
    nu: tuple[int, ...]                 # m pivot columns for V mod p
    omega: tuple[int, ...]              # n pivot columns for U
    X: tuple[tuple[int, ...], ...]      # r x r over Z
    beta: tuple[int, ...]               # m witness coordinates
    gamma: tuple[int, ...]              # n witness coordinates
    a: tuple[tuple[int, ...], ...]      # r x m over Z
    c: tuple[tuple[int, ...], ...]      # r x n over Z
    eta: tuple[Pivot, ...]              # r pivot positions


@dataclass(frozen=True)
class PMaxLongCertificate:
    p: int
    t: int
    m: int
    n: int
    V: tuple[tuple[int, ...], ...]
    W: tuple[tuple[int, ...], ...]
    U: tuple[tuple[int, ...], ...]
    nu: tuple[int, ...]
    omega: tuple[int, ...]
    X: tuple[tuple[int, ...], ...]
    a: tuple[tuple[tuple[int, ...], ...], ...]  # r x m x m
    c: tuple[tuple[tuple[int, ...], ...], ...]  # r x m x n
    d: tuple[tuple[tuple[int, ...], ...], ...]  # r x n x m
    e: tuple[tuple[tuple[int, ...], ...], ...]  # r x n x n
    eta: tuple[tuple[Pivot, Pivot], ...]        # r (input, output) pairs


@dataclass(frozen=True)
class KernelWitness:
    """Evidence of non-maximality: a nonzero element of ker(phi) at p."""

    p: int
    coords: tuple[int, ...]


def _pivot_pattern_ok(rows: list[list[int]], col: int, owner: int) -> bool:
    if rows[owner][col] == 0:
        return False
    return all(rows[j][col] == 0 for j in range(len(rows)) if j != owner)


def _matrix_shape_ok(mat, rows: int, cols: int) -> bool:
    return len(mat) == rows and all(len(r) == cols for r in mat)


def _vw_combination(
    V, W, a_row: list[int], c_row: list[int], p: int, r: int
) -> list[int]:
    """sum_k a_k * V[k] + p * sum_k c_k * W[k] as an exact integer vector."""
    out = [0] * r
    for k, coef in enumerate(a_row):
        if coef:
            for j in range(r):
                out[j] += coef * V[k][j]
    for k, coef in enumerate(c_row):
        if coef:
            for j in range(r):
                out[j] += p * coef * W[k][j]
    return out


def _check_common(tt: TimesTable, p: int, cert, kind: str) -> Verdict | tuple:
    """Shared dimension checks and statements (i), (ii), (iv), (v).

    Returns a Verdict on failure, or the tuple of reusable intermediates.
    """
    r = tt.n
    m, n, t = cert.m, cert.n, cert.t
    if cert.p != p:
        return Verdict.reject(f"{kind}/modulus")
    if m < 0 or n < 1 or m + n != r:
        return Verdict.reject(f"{kind}/dims")
    # minimality of t bounds the verifier's exponentiation work
    if t != minimal_frobenius_exponent(p, r):
        return Verdict.reject(f"{kind}/exponent")
    if not _matrix_shape_ok(cert.V, m, r) or not _matrix_shape_ok(cert.W, n, r):
        return Verdict.reject(f"{kind}/shape")
    if not _matrix_shape_ok(cert.U, n, r):
        return Verdict.reject(f"{kind}/shape")
    if any(not (0 <= x < p) for row in cert.U for x in row):
        return Verdict.reject(f"{kind}/coefficient-range")
    if len(cert.nu) != m or len(cert.omega) != n:
        return Verdict.reject(f"{kind}/shape")
    if any(not (0 <= x < r) for x in cert.nu) or any(
        not (0 <= x < r) for x in cert.omega
    ):
        return Verdict.reject(f"{kind}/pivot-range")

    vbar = [[x % p for x in row] for row in cert.V]
    wbar = [[x % p for x in row] for row in cert.W]
    urows = [list(row) for row in cert.U]

    for i in range(m):
        if not _pivot_pattern_ok(vbar, cert.nu[i], i):
            return Verdict.reject(f"{kind}/check-i/i={i}")
    for i in range(n):
        if not _pivot_pattern_ok(urows, cert.omega[i], i):
            return Verdict.reject(f"{kind}/check-ii/i={i}")

    field = GF(p)
    tt_p = reduce_table_mod_p(tt, p)
    exponent = p**t
    for i in range(m):
        z = tt_pow(field, tt_p, vbar[i], exponent)
        if z != []:
            return Verdict.reject(f"{kind}/check-iv/i={i}")
    for i in range(n):
        z = tt_pow(field, tt_p, wbar[i], exponent)
        if z != drop_trailing_zeros(urows[i]):
            return Verdict.reject(f"{kind}/check-v/i={i}")
    return (r, m, n, field)


def verify_pmax_short(tt: TimesTable, p: int, cert: PMaxShortCertificate) -> Verdict:
    """Statements (i)-(vi) of the short certificate over the times table.

    With m = 0 the Frobenius is bijective on O/pO, the radical is p*O, and
    statements (ii) and (v) alone already force p-maximality; the witness
    fields must then be empty.
    """
    common = _check_common(tt, p, cert, "pmax-short")
    if isinstance(common, Verdict):
        return common
    r, m, n, _field = common

    if m == 0:
        if cert.X or cert.beta or cert.gamma or cert.a or cert.c or cert.eta:
            return Verdict.reject("pmax-short/simplified-shape")
        return Verdict.accept()

    if not _matrix_shape_ok(cert.X, r, r):
        return Verdict.reject("pmax-short/shape")
    if len(cert.beta) != m or len(cert.gamma) != n or len(cert.eta) != r:
        return Verdict.reject("pmax-short/shape")
    if not _matrix_shape_ok(cert.a, r, m) or not _matrix_shape_ok(cert.c, r, n):
        return Verdict.reject("pmax-short/shape")

    abar = [[x % p for x in row] for row in cert.a]
    cbar = [[x % p for x in row] for row in cert.c]
    for i, (kind_tag, k) in enumerate(cert.eta):
        if kind_tag == "A":
            if not (0 <= k < m) or not _pivot_pattern_ok(abar, k, i):
                return Verdict.reject(f"pmax-short/check-iii/i={i}")
        elif kind_tag == "B":
            if not (0 <= k < n) or not _pivot_pattern_ok(cbar, k, i):
                return Verdict.reject(f"pmax-short/check-iii/i={i}")
        else:
            return Verdict.reject(f"pmax-short/check-iii/i={i}")

    beta_w = _vw_combination(cert.V, cert.W, list(cert.beta), list(cert.gamma), p, r)
    for i in range(r):
        lhs = tt_mul(ZZ, tt, list(cert.X[i]), beta_w)
        rhs = _vw_combination(cert.V, cert.W, list(cert.a[i]), list(cert.c[i]), p, r)
        if lhs != drop_trailing_zeros(rhs):
            return Verdict.reject(f"pmax-short/check-vi/i={i}")
    return Verdict.accept()


def verify_pmax_long(tt: TimesTable, p: int, cert: PMaxLongCertificate) -> Verdict:
    """Statements (i)-(vii) of the long certificate."""
    common = _check_common(tt, p, cert, "pmax-long")
    if isinstance(common, Verdict):
        return common
    r, m, n, _field = common

    if m == 0:
        if cert.X or cert.a or cert.c or cert.d or cert.e or cert.eta:
            return Verdict.reject("pmax-long/simplified-shape")
        return Verdict.accept()

    if not _matrix_shape_ok(cert.X, r, r) or len(cert.eta) != r:
        return Verdict.reject("pmax-long/shape")
    for arr, rows, cols in ((cert.a, m, m), (cert.c, m, n), (cert.d, n, m), (cert.e, n, n)):
        if len(arr) != r or any(not _matrix_shape_ok(block, rows, cols) for block in arr):
            return Verdict.reject("pmax-long/shape")

    # (iii): each certificate row owns one matrix-entry position
    for i, (eta_in, eta_out) in enumerate(cert.eta):
        tag_in, u = eta_in
        tag_out, v = eta_out
        if tag_in not in ("A", "B") or tag_out not in ("A", "B"):
            return Verdict.reject(f"pmax-long/check-iii/i={i}")
        if tag_in == "A" and not (0 <= u < m):
            return Verdict.reject(f"pmax-long/check-iii/i={i}")
        if tag_in == "B" and not (0 <= u < n):
            return Verdict.reject(f"pmax-long/check-iii/i={i}")
        if tag_out == "A" and not (0 <= v < m):
            return Verdict.reject(f"pmax-long/check-iii/i={i}")
        if tag_out == "B" and not (0 <= v < n):
            return Verdict.reject(f"pmax-long/check-iii/i={i}")
        if (tag_in, tag_out) == ("A", "A"):
            col = [cert.a[j][u][v] % p for j in range(r)]
        elif (tag_in, tag_out) == ("A", "B"):
            col = [cert.c[j][u][v] % p for j in range(r)]
        elif (tag_in, tag_out) == ("B", "A"):
            col = [cert.d[j][u][v] % p for j in range(r)]
        else:
            col = [cert.e[j][u][v] % p for j in range(r)]
        if col[i] == 0 or any(col[j] != 0 for j in range(r) if j != i):
            return Verdict.reject(f"pmax-long/check-iii/i={i}")

    # (vi): x_i * v_j expands over the V block and p times the W block
    for i in range(r):
        for j in range(m):
            lhs = tt_mul(ZZ, tt, list(cert.X[i]), list(cert.V[j]))
            rhs = _vw_combination(cert.V, cert.W, list(cert.a[i][j]), list(cert.c[i][j]), p, r)
            if lhs != drop_trailing_zeros(rhs):
                return Verdict.reject(f"pmax-long/check-vi/i={i}/j={j}")
    # (vii): x_i * (p w_j) likewise
    for i in range(r):
        for j in range(n):
            pw = [p * x for x in cert.W[j]]
            lhs = tt_mul(ZZ, tt, list(cert.X[i]), pw)
            rhs = _vw_combination(cert.V, cert.W, list(cert.d[i][j]), list(cert.e[i][j]), p, r)
            if lhs != drop_trailing_zeros(rhs):
                return Verdict.reject(f"pmax-long/check-vii/i={i}/j={j}")
    return Verdict.accept()


# ---------------------------------------------------------------------------
# generator side
# ---------------------------------------------------------------------------


def minimal_frobenius_exponent(p: int, r: int) -> int:
    t = 0
    power = 1
    while power < r:
        power *= p
        t += 1
    return t


def frobenius_kernel_basis(
    tt: TimesTable, p: int, t: int
) -> tuple[list[list[int]], list[int], list[list[int]], list[list[int]], list[int]]:
    """Kernel and complement data for the iterated Frobenius on O/pO.

    Returns (V rows over GF(p) with pivot pattern, their pivot columns nu,
    W rows over Z, U = Frobenius images of W with pivot pattern, omega).
    The stacked integer matrix [V; W] is unimodular by construction, which
    keeps every later decomposition over {V, pW} integral.
    """
    field = GF(p)
    tt_p = reduce_table_mod_p(tt, p)
    r = tt.n
    exponent = p**t
    frob = []
    for j in range(r):
        e_j = [0] * j + [1]
        img = tt_pow(field, tt_p, e_j, exponent)
        frob.append([(img[k] if k < len(img) else 0) for k in range(r)])

    vbar, nu = nullspace_fp(transpose(frob), p)
    m = len(vbar)
    if m + (r - m) != r:
        raise AssertionError("rank accounting failure")
    complement = [c for c in range(r) if c not in nu]
    w_rows = [[1 if k == c else 0 for k in range(r)] for c in complement]
    u_rows = [list(frob[c]) for c in complement]
    u_patterned, omega = pattern_reduce_fp(u_rows, p, mirror=w_rows)
    return vbar, nu, w_rows, u_patterned, omega


def _decompose_over_vw(
    V: list[list[int]], W: list[list[int]], p: int, y: list[int]
) -> tuple[list[int], list[int]]:
    """Integer (a, c) with y = sum a_k V_k + p sum c_k W_k.

    Exists and is unique because [V; W] is unimodular and y lies in the
    radical lattice; both facts are asserted."""
    stacked = [list(row) for row in V] + [list(row) for row in W]
    sol = solve_exact(transpose(stacked), y)
    assert all(v.denominator == 1 for v in sol), "non-integral decomposition"
    coeffs = [int(v) for v in sol]
    a = coeffs[: len(V)]
    b = coeffs[len(V) :]
    assert all(x % p == 0 for x in b), "element outside the radical lattice"
    return a, [x // p for x in b]


def _pad(vec: list[int], r: int) -> list[int]:
    return [(vec[k] if k < len(vec) else 0) for k in range(r)]


def find_witness(
    tt: TimesTable,
    p: int,
    V: list[list[int]],
    W: list[list[int]],
    budget: int = 512,
    rng: random.Random | None = None,
) -> tuple[list[int], list[int]] | None:
    """A witness element of the radical quotient on which multiplication by
    the whole order stays independent; None triggers the long certificate.

    All 0/1 coordinate vectors are tried first, then random ones up to the
    budget."""
    r = tt.n
    m, n = len(V), len(W)
    if rng is None:
        rng = random.Random(0xBE7A + p)
    tried = 0

    def candidates():
        for bits in itertools.product(range(2), repeat=r):
            if any(bits):
                yield list(bits[:m]), list(bits[m:])
        while True:
            yield [rng.randrange(p) for _ in range(m)], [rng.randrange(p) for _ in range(n)]

    for beta, gamma in candidates():
        tried += 1
        if tried > budget:
            return None
        beta_w = _vw_combination(V, W, beta, gamma, p, r)
        rho = []
        for i in range(r):
            y = _pad(tt_mul(ZZ, tt, [0] * i + [1], beta_w), r)
            a, c = _decompose_over_vw(V, W, p, y)
            rho.append([x % p for x in a] + [x % p for x in c])
        if rank_fp(rho, p) == r:
            return beta, gamma
    return None


def generate_pmax(
    tt: TimesTable,
    p: int,
    witness_budget: int = 512,
    rng: random.Random | None = None,
    prefer_long: bool = False,
) -> PMaxShortCertificate | PMaxLongCertificate | KernelWitness:
    """A p-maximality certificate for the order behind tt, or a kernel witness
    proving that the order is not p-maximal.

    The short form is preferred whenever a witness turns up; prefer_long
    skips the witness search (the long form exists whenever the order is
    p-maximal, so this only trades certificate size)."""
    r = tt.n
    t = minimal_frobenius_exponent(p, r)
    vbar, nu, w_rows, u_rows, omega = frobenius_kernel_basis(tt, p, t)
    m = len(vbar)
    n = r - m

    if m == 0:
        return PMaxShortCertificate(
            p=p, t=t, m=0, n=n,
            V=(), W=tuple(tuple(row) for row in w_rows),
            U=tuple(tuple(row) for row in u_rows),
            nu=(), omega=tuple(omega),
            X=(), beta=(), gamma=(), a=(), c=(), eta=(),
        )

    V = [list(row) for row in vbar]
    W = [list(row) for row in w_rows]

    witness = None
    if not prefer_long:
        witness = find_witness(tt, p, V, W, budget=witness_budget, rng=rng)
    if witness is not None:
        beta, gamma = witness
        beta_w = _vw_combination(V, W, beta, gamma, p, r)
        rho = []
        for i in range(r):
            y = _pad(tt_mul(ZZ, tt, [0] * i + [1], beta_w), r)
            a_row, c_row = _decompose_over_vw(V, W, p, y)
            rho.append([x % p for x in a_row] + [x % p for x in c_row])
        X = [[1 if i == j else 0 for j in range(r)] for i in range(r)]
        _patterned, pivots = pattern_reduce_fp(rho, p, mirror=X)
        a_rows, c_rows = [], []
        for i in range(r):
            y = _pad(tt_mul(ZZ, tt, X[i], beta_w), r)
            a_row, c_row = _decompose_over_vw(V, W, p, y)
            a_rows.append(tuple(a_row))
            c_rows.append(tuple(c_row))
        eta = tuple(("A", q) if q < m else ("B", q - m) for q in pivots)
        return PMaxShortCertificate(
            p=p, t=t, m=m, n=n,
            V=tuple(tuple(row) for row in V),
            W=tuple(tuple(row) for row in W),
            U=tuple(tuple(row) for row in u_rows),
            nu=tuple(nu), omega=tuple(omega),
            X=tuple(tuple(row) for row in X),
            beta=tuple(beta), gamma=tuple(gamma),
            a=tuple(a_rows), c=tuple(c_rows),
            eta=eta,
        )

    # long form: flatten the endomorphism matrices of multiplication by e_i
    inputs = [list(row) for row in V] + [[p * x for x in row] for row in W]

    def endo_row(x: list[int]) -> list[int]:
        flat = []
        for u in range(r):
            y = _pad(tt_mul(ZZ, tt, x, inputs[u]), r)
            a_row, c_row = _decompose_over_vw(V, W, p, y)
            flat.extend([v % p for v in a_row] + [v % p for v in c_row])
        return flat

    phi = [endo_row([0] * i + [1]) for i in range(r)]
    if rank_fp(phi, p) < r:
        kernel, _free = nullspace_fp(transpose(phi), p)
        return KernelWitness(p, tuple(kernel[0]))

    X = [[1 if i == j else 0 for j in range(r)] for i in range(r)]
    _patterned, pivots = pattern_reduce_fp(phi, p, mirror=X)
    a_arr, c_arr, d_arr, e_arr = [], [], [], []
    for i in range(r):
        a_blocks, c_blocks, d_blocks, e_blocks = [], [], [], []
        for j in range(m):
            y = _pad(tt_mul(ZZ, tt, X[i], V[j]), r)
            a_row, c_row = _decompose_over_vw(V, W, p, y)
            a_blocks.append(tuple(a_row))
            c_blocks.append(tuple(c_row))
        for j in range(n):
            y = _pad(tt_mul(ZZ, tt, X[i], [p * x for x in W[j]]), r)
            d_row, e_row = _decompose_over_vw(V, W, p, y)
            d_blocks.append(tuple(d_row))
            e_blocks.append(tuple(e_row))
        a_arr.append(tuple(a_blocks))
        c_arr.append(tuple(c_blocks))
        d_arr.append(tuple(d_blocks))
        e_arr.append(tuple(e_blocks))

    def block_of(q: int) -> Pivot:
        return ("A", q) if q < m else ("B", q - m)

    eta_pairs = tuple((block_of(q // r), block_of(q % r)) for q in pivots)
    return PMaxLongCertificate(
        p=p, t=t, m=m, n=n,
        V=tuple(tuple(row) for row in V),
        W=tuple(tuple(row) for row in W),
        U=tuple(tuple(row) for row in u_rows),
        nu=tuple(nu), omega=tuple(omega),
        X=tuple(tuple(row) for row in X),
        a=tuple(a_arr), c=tuple(c_arr), d=tuple(d_arr), e=tuple(e_arr),
        eta=eta_pairs,
    )
