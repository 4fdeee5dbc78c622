"""Orders in a number field, described by an explicit basis.

An order O in K = Q[X]/<T> of degree n is presented by a denominator d and
an upper-triangular integer matrix B whose column j holds the coefficients
of b_j = d*w_j as a polynomial in theta.  Closure under multiplication is
certified by structure constants a_ijk and witness polynomials s_ij through
the identity

    b_i * b_j = d * sum_k a_ijk * b_k - T * s_ij

checked for i <= j, and membership of 1 by one more identity of the same
shape.  A verified description yields a times table, and all further
arithmetic in O happens on coordinate vectors against that table.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactalg import (
    ZZ,
    deg,
    drop_trailing_zeros,
    get_d,
    list_add,
    list_mul,
    list_sub,
    mul_pointwise,
)
from .linalg import (
    det_bareiss,
    fractions_all_integral,
    solve_exact,
    solve_upper_triangular,
    transpose,
)
from .verdict import Verdict


@dataclass(frozen=True)
class OrderDescription:
    n: int
    T: tuple[int, ...]                      # monic, degree n
    d: int                                  # common denominator, nonzero
    basis_columns: tuple[tuple[int, ...], ...]  # column j = coeffs of b_j, len n
    # ragged upper triangle: mul_coords[i][j-i] are the coordinates of w_i*w_j
    mul_coords: tuple[tuple[tuple[int, ...], ...], ...]
    mul_witness: tuple[tuple[tuple[int, ...], ...], ...]  # s_ij polynomials
    one_coords: tuple[int, ...]
    one_witness: tuple[int, ...]


@dataclass(frozen=True)
class TimesTable:
    n: int
    table: tuple[tuple[tuple[int, ...], ...], ...]  # table[i][j] = coords of w_i*w_j


def _column_poly(desc: OrderDescription, j: int) -> list[int]:
    return drop_trailing_zeros(list(desc.basis_columns[j]))


def verify_order_builder(desc: OrderDescription) -> Verdict:
    """Check the whole description; acceptance certifies that the basis spans
    a subring of K containing 1, hence an order inside the ring of integers."""
    n = desc.n
    T = list(desc.T)
    if deg(T) != n or n < 1:
        return Verdict.reject("order/T-degree")
    if T[-1] != 1:
        return Verdict.reject("order/T-not-monic")
    if desc.d == 0:
        return Verdict.reject("order/denominator-zero")
    if len(desc.basis_columns) != n or any(len(c) != n for c in desc.basis_columns):
        return Verdict.reject("order/B-shape")
    for j in range(n):
        if desc.basis_columns[j][j] == 0:
            return Verdict.reject(f"order/B-diagonal/j={j}")
        for i in range(j + 1, n):
            if desc.basis_columns[j][i] != 0:
                return Verdict.reject(f"order/B-triangular/i={i}/j={j}")
    if len(desc.mul_coords) != n or len(desc.mul_witness) != n:
        return Verdict.reject("order/products-shape")
    for i in range(n):
        if len(desc.mul_coords[i]) != n - i or len(desc.mul_witness[i]) != n - i:
            return Verdict.reject(f"order/products-shape/i={i}")
        if any(len(v) != n for v in desc.mul_coords[i]):
            return Verdict.reject(f"order/products-shape/i={i}")

    b = [_column_poly(desc, j) for j in range(n)]
    for i in range(n):
        for j in range(i, n):
            coords = desc.mul_coords[i][j - i]
            combo: list[int] = []
            for k in range(n):
                combo = list_add(ZZ, combo, mul_pointwise(ZZ, coords[k], b[k]))
            rhs = list_sub(
                ZZ,
                mul_pointwise(ZZ, desc.d, combo),
                list_mul(ZZ, T, list(desc.mul_witness[i][j - i])),
            )
            if list_mul(ZZ, b[i], b[j]) != rhs:
                return Verdict.reject(f"order/identity/i={i}/j={j}")

    if len(desc.one_coords) != n:
        return Verdict.reject("order/one-shape")
    combo = []
    for k in range(n):
        combo = list_add(ZZ, combo, mul_pointwise(ZZ, desc.one_coords[k], b[k]))
    lhs = list_sub(ZZ, combo, list_mul(ZZ, T, list(desc.one_witness)))
    if lhs != drop_trailing_zeros([desc.d]):
        return Verdict.reject("order/one")
    return Verdict.accept()


def times_table_of(desc: OrderDescription) -> TimesTable:
    """Symmetrized coordinate table; call only on a verified description."""
    n = desc.n
    table = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            vec = tuple(desc.mul_coords[i][j - i])
            table[i][j] = vec
            table[j][i] = vec
    return TimesTable(n, tuple(tuple(row) for row in table))


def tt_mul(dom, tt: TimesTable, x: list, y: list) -> list:
    """Product of coordinate vectors; short lists read as zero-padded."""
    out: list = []
    for i in range(min(len(x), tt.n)):
        xi = x[i]
        if xi == 0:
            continue
        for j in range(min(len(y), tt.n)):
            yj = y[j]
            if yj == 0:
                continue
            out = list_add(dom, out, mul_pointwise(dom, dom.mul(xi, yj), list(tt.table[i][j])))
    return out


def tt_pow(dom, tt: TimesTable, x: list, e: int, one_coords: list | None = None) -> list:
    """x^e by square and multiply over the times table."""
    if e < 0:
        raise ValueError("negative exponent")
    if e == 0:
        if one_coords is None:
            raise ValueError("x^0 needs the coordinates of 1")
        return drop_trailing_zeros(list(one_coords))
    result = None
    base = drop_trailing_zeros(list(x))
    while e:
        if e & 1:
            result = base if result is None else tt_mul(dom, tt, result, base)
        e >>= 1
        if e:
            base = tt_mul(dom, tt, base, base)
    return drop_trailing_zeros(result)


def reduce_table_mod_p(tt: TimesTable, p: int) -> TimesTable:
    """The times table of O/pO with respect to the reduced basis."""
    return TimesTable(
        tt.n,
        tuple(
            tuple(tuple(c % p for c in vec) for vec in row) for row in tt.table
        ),
    )


def hnf(m: list[list[int]]) -> tuple[list[list[int]], list[list[int]]]:
    """Column-style Hermite normal form: returns (H, U) with M*U = H.

    H is upper triangular with positive diagonal and entries reduced modulo
    the diagonal to the right of it; U is unimodular.  Raises ValueError on
    rank deficiency.
    """
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("need a square matrix")
    h = [list(row) for row in m]
    u = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def colop(j, k, a, bb, c, dd):
        # (col_j, col_k) <- (a*col_j + b*col_k, c*col_j + d*col_k)
        for mat in (h, u):
            for r in range(n):
                vj, vk = mat[r][j], mat[r][k]
                mat[r][j] = a * vj + bb * vk
                mat[r][k] = c * vj + dd * vk

    from math import gcd

    for r in range(n - 1, -1, -1):
        # clear row r left of the pivot column r
        for j in range(r):
            if h[r][j] == 0:
                continue
            vj, vk = h[r][j], h[r][r]
            if vk == 0:
                colop(j, r, 0, 1, 1, 0)  # swap columns j and r
                continue
            g = gcd(vj, vk)
            x, y = _bezout(vj, vk)
            # column r receives the gcd, column j a zero at row r
            colop(j, r, -(vk // g), vj // g, x, y)
        if h[r][r] == 0:
            raise ValueError("rank deficiency")
        if h[r][r] < 0:
            for mat in (h, u):
                for row in mat:
                    row[r] = -row[r]
        for c in range(r + 1, n):
            q = h[r][c] // h[r][r]
            if q:
                for mat in (h, u):
                    for row in mat:
                        row[c] -= q * row[r]
    return h, u


def _bezout(a: int, b: int) -> tuple[int, int]:
    """x, y with x*a + y*b = gcd(a, b)."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_s, old_t = -old_s, -old_t
    return old_s, old_t


def index_z(m_basis: list[list[int]], n_basis: list[list[int]]) -> int:
    """|det C| for the coordinate matrix C with M*C = N (columns are basis
    vectors).  1 means the two lattices are equal.  Raises ValueError when N
    is not contained in the span of M over the integers."""
    cols_n = transpose(n_basis)
    coord_cols = []
    for col in cols_n:
        x = solve_exact(m_basis, col)
        if not fractions_all_integral(x):
            raise ValueError("second lattice is not contained in the first")
        coord_cols.append([int(v) for v in x])
    c = transpose(coord_cols)
    return abs(det_bareiss(c))


# ---------------------------------------------------------------------------
# generator side: structure constants from a raw basis
# ---------------------------------------------------------------------------


class NotAnOrder(Exception):
    """The given basis does not span a ring (or fails shape constraints)."""


def build_order_description(
    T: list[int], d: int, basis_columns: list[list[int]]
) -> OrderDescription:
    """Find the structure constants and witnesses for a basis, or raise.

    Expects T monic of degree n, d nonzero, and B upper triangular with
    nonzero diagonal (a Hermite-shaped basis).  Raises NotAnOrder when the
    products w_i*w_j do not have integral coordinates, i.e. the span is not
    closed under multiplication, or when 1 is not in the span.
    """
    T = drop_trailing_zeros(list(T))
    n = deg(T)
    if n < 1 or T[-1] != 1:
        raise NotAnOrder("defining polynomial must be monic of positive degree")
    if d == 0:
        raise NotAnOrder("denominator must be nonzero")
    if len(basis_columns) != n or any(len(c) != n for c in basis_columns):
        raise NotAnOrder("basis matrix must be n x n")
    for j in range(n):
        if basis_columns[j][j] == 0:
            raise NotAnOrder("zero diagonal entry in the basis matrix")
        for i in range(j + 1, n):
            if basis_columns[j][i] != 0:
                raise NotAnOrder("basis matrix must be upper triangular")

    b_mat = [[basis_columns[j][i] for j in range(n)] for i in range(n)]  # rows
    b_polys = [drop_trailing_zeros(list(c)) for c in basis_columns]
    Tq = [Fraction(c) for c in T]

    mul_coords = []
    mul_witness = []
    for i in range(n):
        row_coords = []
        row_wit = []
        for j in range(i, n):
            prod = list_mul(ZZ, b_polys[i], b_polys[j])
            q, rem = _divmod_by_monic_int(prod, T)
            coords = solve_upper_triangular(b_mat, [Fraction(get_d(rem, k, 0), d) for k in range(n)])
            if not fractions_all_integral(coords):
                raise NotAnOrder(f"product w_{i+1}*w_{j+1} leaves the span")
            row_coords.append(tuple(int(c) for c in coords))
            row_wit.append(tuple(mul_pointwise(ZZ, -1, q)))
        mul_coords.append(tuple(row_coords))
        mul_witness.append(tuple(row_wit))

    one = solve_upper_triangular(b_mat, [Fraction(d)] + [Fraction(0)] * (n - 1))
    if not fractions_all_integral(one):
        raise NotAnOrder("1 is not in the span of the basis")
    return OrderDescription(
        n=n,
        T=tuple(T),
        d=d,
        basis_columns=tuple(tuple(c) for c in basis_columns),
        mul_coords=tuple(mul_coords),
        mul_witness=tuple(mul_witness),
        one_coords=tuple(int(c) for c in one),
        one_witness=(),
    )


def _divmod_by_monic_int(f: list[int], g: list[int]) -> tuple[list[int], list[int]]:
    """Division with remainder by a monic integer polynomial stays integral."""
    q = [0] * max(len(f) - len(g) + 1, 0)
    r = list(f)
    while len(r) >= len(g):
        c = r[-1]
        k = len(r) - len(g)
        q[k] = c
        for i in range(len(g)):
            r[k + i] -= c * g[i]
        r = drop_trailing_zeros(r)
    return drop_trailing_zeros(q), r


def theta_coordinates(desc: OrderDescription) -> list[int] | None:
    """Coordinates of theta in the basis, or None when theta is outside O."""
    return element_coordinates(desc, [0, 1], 1)


def element_coordinates(desc: OrderDescription, poly_num: list[int], den: int) -> list[int] | None:
    """Coordinates of (1/den)*poly(theta) in the basis, or None if not in O."""
    n = desc.n
    b_mat = [[desc.basis_columns[j][i] for j in range(n)] for i in range(n)]
    _, rem = _divmod_by_monic_int(poly_num, list(desc.T))
    rhs = [Fraction(get_d(rem, k, 0) * desc.d, den) for k in range(n)]
    x = solve_upper_triangular(b_mat, rhs)
    if not fractions_all_integral(x):
        return None
    return [int(v) for v in x]
