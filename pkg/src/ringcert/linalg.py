"""Exact linear algebra over the integers, rationals and prime fields.

Matrices are lists of rows.  Everything here is deterministic and exact;
no floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction


def identity_matrix(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(m: list[list]) -> list[list]:
    return [list(col) for col in zip(*m)] if m else []


def mat_vec(m: list[list], v: list) -> list:
    return [sum(row[j] * v[j] for j in range(len(v))) for row in m]


def mat_mul(a: list[list], b: list[list]) -> list[list]:
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def det_bareiss(m: list[list[int]]) -> int:
    """Determinant of an integer matrix by fraction-free Bareiss elimination.

    Intermediate entries stay integral (each division is exact), which keeps
    the cost polynomial instead of the exponential blowup of cofactor
    expansion.
    """
    a = [list(row) for row in m]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def det_fp(m: list[list[int]], p: int) -> int:
    """Determinant over GF(p) by Gaussian elimination."""
    a = [[x % p for x in row] for row in m]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("determinant of a non-square matrix")
    det = 1
    for k in range(n):
        pivot = next((i for i in range(k, n) if a[i][k] != 0), None)
        if pivot is None:
            return 0
        if pivot != k:
            a[k], a[pivot] = a[pivot], a[k]
            det = (-det) % p
        det = (det * a[k][k]) % p
        inv = pow(a[k][k], -1, p)
        for i in range(k + 1, n):
            if a[i][k]:
                factor = (a[i][k] * inv) % p
                a[i] = [(x - factor * y) % p for x, y in zip(a[i], a[k])]
    return det


def rref_fp(m: list[list[int]], p: int) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form over GF(p); returns (rows, pivot columns).

    Zero rows are kept at the bottom so the caller can read off the rank.
    """
    a = [[x % p for x in row] for row in m]
    rows = len(a)
    cols = len(a[0]) if a else 0
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        inv = pow(a[r][c], -1, p)
        a[r] = [(x * inv) % p for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c]:
                factor = a[i][c]
                a[i] = [(x - factor * y) % p for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return a, pivots


def rank_fp(m: list[list[int]], p: int) -> int:
    if not m:
        return 0
    _, pivots = rref_fp(m, p)
    return len(pivots)


def nullspace_fp(m: list[list[int]], p: int) -> tuple[list[list[int]], list[int]]:
    """Basis of {x : m . x = 0} over GF(p), one row per basis vector.

    Each returned vector has 1 at its own free column and 0 at the other
    free columns, so the collection directly exhibits its own linear
    independence.  Returns (basis rows, free columns).
    """
    cols = len(m[0]) if m else 0
    rref, pivots = rref_fp(m, p)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for c in free:
        v = [0] * cols
        v[c] = 1
        for r, pc in enumerate(pivots):
            v[pc] = (-rref[r][c]) % p
        basis.append(v)
    return basis, free


def pattern_reduce_fp(
    m: list[list[int]], p: int, mirror: list[list[int]] | None = None
) -> tuple[list[list[int]], list[int]]:
    """Gauss-Jordan over GF(p) using only swaps and row additions (no scaling).

    Afterwards every nonzero row has a pivot column that is zero in all
    other rows; pivot entries need not be 1.  When ``mirror`` is given, the
    same operations are applied to it over the integers (multipliers lifted
    to [0, p)), so the mirror transformation stays unimodular.

    Returns (reduced rows, pivot column per row).  Raises ValueError if the
    rows are linearly dependent.
    """
    a = [[x % p for x in row] for row in m]
    rows = len(a)
    cols = len(a[0]) if a else 0
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if pivot is None:
            continue
        if pivot != r:
            a[r], a[pivot] = a[pivot], a[r]
            if mirror is not None:
                mirror[r], mirror[pivot] = mirror[pivot], mirror[r]
        inv = pow(a[r][c], -1, p)
        for i in range(rows):
            if i != r and a[i][c]:
                factor = (a[i][c] * inv) % p
                a[i] = [(x - factor * y) % p for x, y in zip(a[i], a[r])]
                if mirror is not None:
                    mirror[i] = [x - factor * y for x, y in zip(mirror[i], mirror[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    if r < rows:
        raise ValueError("rows are linearly dependent")
    return a, pivots


def solve_exact(a: list[list], b: list) -> list[Fraction]:
    """Unique exact solution of a.x = b for square a; raises if singular."""
    n = len(a)
    aug = [[Fraction(x) for x in row] + [Fraction(b[i])] for i, row in enumerate(a)]
    for k in range(n):
        pivot = next((i for i in range(k, n) if aug[i][k] != 0), None)
        if pivot is None:
            raise ValueError("singular matrix")
        aug[k], aug[pivot] = aug[pivot], aug[k]
        inv = 1 / aug[k][k]
        aug[k] = [x * inv for x in aug[k]]
        for i in range(n):
            if i != k and aug[i][k] != 0:
                f = aug[i][k]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[k])]
    return [aug[i][n] for i in range(n)]


def solve_upper_triangular(b: list[list], rhs: list) -> list[Fraction]:
    """Back-substitution against an upper-triangular matrix with nonzero diagonal."""
    n = len(b)
    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        acc = Fraction(rhs[i])
        for j in range(i + 1, n):
            acc -= Fraction(b[i][j]) * x[j]
        if b[i][i] == 0:
            raise ValueError("zero diagonal entry")
        x[i] = acc / Fraction(b[i][i])
    return x


def fractions_all_integral(xs: list[Fraction]) -> bool:
    return all(x.denominator == 1 for x in xs)
