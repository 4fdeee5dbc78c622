"""Resultants via Sylvester determinants, and discriminants built on them.

Convention: the Sylvester matrix of f (degree n) and g (degree m) is
(m+n) x (m+n), rows holding ascending coefficient lists, the m shifted
copies of f first, then the n shifted copies of g.  With this layout

    resultant(f, g) = (-1)^(n*m) * lc(f)^m * lc(g)^n * prod (alpha_i - beta_j)

over the roots alpha of f and beta of g, and the swap rule
resultant(f, g) = (-1)^(n*m) * resultant(g, f) holds.  The discriminant of
f is resultant(f, f') with no leading-coefficient scaling.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactalg import PrimeField, ZZ, deg, formal_derivative
from .linalg import det_bareiss, det_fp
from .orders import OrderDescription, index_z
from .verdict import Verdict


def sylvester_matrix(f: list, g: list, zero=0) -> list[list]:
    """Rows of shifted coefficients, f-rows first, ascending within each row."""
    n, m = deg(f), deg(g)
    if n < 0 or m < 0:
        raise ValueError("resultant of a zero polynomial")
    size = n + m
    rows = []
    for i in range(m):
        row = [zero] * size
        for k, c in enumerate(f):
            row[i + k] = c
        rows.append(row)
    for i in range(n):
        row = [zero] * size
        for k, c in enumerate(g):
            row[i + k] = c
        rows.append(row)
    return rows


def resultant(dom, f: list, g: list):
    """Determinant of the Sylvester matrix, exactly."""
    s = sylvester_matrix(f, g, zero=dom.zero)
    if not s:
        return dom.one  # both constant: empty product
    if isinstance(dom, PrimeField):
        return det_fp(s, dom.p)
    if dom is ZZ:
        return det_bareiss(s)
    raise TypeError(f"resultant not implemented over {dom!r}")


def disc_poly(f: list[int]) -> int:
    """resultant(f, f') over the integers; requires deg f >= 1."""
    if deg(f) < 1:
        raise ValueError("discriminant needs degree >= 1")
    return resultant(ZZ, f, formal_derivative(ZZ, f))


@dataclass(frozen=True)
class OrderDiscriminant:
    value: int
    disc_T: int       # resultant(T, T')
    index: int        # [O : Z[theta]]
    sign_exp: int     # parity exponent n(n-1)/2


def power_basis_index(desc: OrderDescription) -> int:
    """[O : Z[theta]] for a verified description with theta in O.

    Determinant route d^n / |det B| first, cross-checked against the
    lattice-index route when the division is not exact."""
    n = desc.n
    b = [[desc.basis_columns[j][i] for j in range(n)] for i in range(n)]
    det_b = abs(det_bareiss(b))
    dn = abs(desc.d) ** n
    if det_b != 0 and dn % det_b == 0:
        return dn // det_b
    d_id = [[desc.d if i == j else 0 for j in range(n)] for i in range(n)]
    return index_z(b, d_id)


def disc_order(desc: OrderDescription) -> OrderDiscriminant:
    """disc(O) = (-1)^(n(n-1)/2) * disc(T) / index^2, with exact division.

    Requires theta in O (checked); raises ValueError otherwise or when the
    division is not exact, which signals inconsistent inputs.
    """
    from .orders import theta_coordinates

    n = desc.n
    if theta_coordinates(desc) is None:
        raise ValueError("theta is not in the order")
    d_t = disc_poly(list(desc.T))
    idx = power_basis_index(desc)
    sign_exp = (n * (n - 1) // 2) % 2
    signed = -d_t if sign_exp else d_t
    if idx == 0 or signed % (idx * idx) != 0:
        raise ValueError("discriminant division is not exact")
    return OrderDiscriminant(signed // (idx * idx), d_t, idx, sign_exp)


def check_order_discriminant(desc: OrderDescription, claimed: int) -> Verdict:
    """Compare a claimed discriminant against both computation routes."""
    n = desc.n
    b = [[desc.basis_columns[j][i] for j in range(n)] for i in range(n)]
    try:
        od = disc_order(desc)
    except ValueError as e:
        return Verdict.reject(f"disc-claim/{e}")
    if od.value != claimed:
        d_id = [[desc.d if i == j else 0 for j in range(n)] for i in range(n)]
        idx2 = index_z(b, d_id)
        signed = -od.disc_T if od.sign_exp else od.disc_T
        other = signed // (idx2 * idx2) if idx2 and signed % (idx2 * idx2) == 0 else None
        return Verdict.reject(
            f"disc-claim/mismatch/claimed={claimed}/det-route={od.value}/hnf-route={other}"
        )
    return Verdict.accept()
