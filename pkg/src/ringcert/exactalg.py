"""Exact arithmetic kernel.

Polynomials are dense coefficient lists in ascending degree order: index i
holds the coefficient of X^i.  The canonical form has no trailing zeros and
the zero polynomial is the empty list.  Every operation here returns
canonical lists, so polynomial equality is plain list equality.

Coefficients live in one of three domains, passed explicitly to each
operation:

* ``ZZ``    -- arbitrary-precision integers (Python int)
* ``QQ``    -- exact rationals (fractions.Fraction)
* ``GF(p)`` -- the prime field, residues stored as ints in [0, p)
"""

from __future__ import annotations

from fractions import Fraction


class IntegerRing:
    """The ring of integers. Elements are Python ints."""

    zero = 0
    one = 1
    is_field = False

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def from_int(self, k):
        return k

    def __repr__(self):
        return "ZZ"


class RationalField:
    """The field of rationals. Elements are fractions.Fraction."""

    zero = Fraction(0)
    one = Fraction(1)
    is_field = True

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)

    def from_int(self, k):
        return Fraction(k)

    def __repr__(self):
        return "QQ"


class PrimeField:
    """The field with p elements, p prime. Elements are ints in [0, p).

    Primality of p is the caller's responsibility; certificates vouch for
    it where it matters.  Mixing residues from different moduli cannot
    happen silently because all arithmetic goes through one field object.
    """

    is_field = True

    def __init__(self, p: int):
        if p < 2:
            raise ValueError(f"modulus must be >= 2, got {p}")
        self.p = p
        self.zero = 0
        self.one = 1 % p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError(f"inverse of zero in GF({self.p})")
        return pow(a, -1, self.p)

    def from_int(self, k):
        return k % self.p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"GF({self.p})"


ZZ = IntegerRing()
QQ = RationalField()

_gf_cache: dict[int, PrimeField] = {}


def GF(p: int) -> PrimeField:
    field = _gf_cache.get(p)
    if field is None:
        field = _gf_cache[p] = PrimeField(p)
    return field


# ---------------------------------------------------------------------------
# list-level polynomial operations
# ---------------------------------------------------------------------------


def drop_trailing_zeros(l: list) -> list:
    """Longest prefix of l whose last element is nonzero (empty if all zero)."""
    k = len(l)
    while k > 0 and l[k - 1] == 0:
        k -= 1
    return list(l[:k])


def get_d(l: list, i: int, default=0):
    """The i-th entry of l, or default when i is out of bounds."""
    if 0 <= i < len(l):
        return l[i]
    return default


def deg(l: list) -> int:
    """Degree of a canonical list; the zero polynomial has degree -1."""
    return len(l) - 1


def lc(l: list):
    """Leading coefficient of a nonzero canonical list."""
    if not l:
        raise ValueError("zero polynomial has no leading coefficient")
    return l[-1]


def constant(dom, c) -> list:
    c = dom.from_int(c) if isinstance(c, int) else c
    return [] if c == 0 else [c]


def list_add(dom, a: list, b: list) -> list:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] = dom.add(out[i], x)
    return drop_trailing_zeros(out)


def list_neg(dom, a: list) -> list:
    return [dom.neg(x) for x in a]


def list_sub(dom, a: list, b: list) -> list:
    return list_add(dom, a, list_neg(dom, b))


def mul_pointwise(dom, c, l: list) -> list:
    """Scalar multiple c*l, canonicalized."""
    if c == 0:
        return []
    return drop_trailing_zeros([dom.mul(c, x) for x in l])


def list_mul(dom, a: list, b: list) -> list:
    """Convolution product, canonicalized."""
    if not a or not b:
        return []
    out = [dom.zero] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] = dom.add(out[i + j], dom.mul(ai, bj))
    return drop_trailing_zeros(out)


def list_pow(dom, a: list, e: int) -> list:
    """Exact e-th power by repeated squaring (no modulus)."""
    if e < 0:
        raise ValueError("negative exponent")
    result = [dom.one]
    base = list(a)
    while e:
        if e & 1:
            result = list_mul(dom, result, base)
        e >>= 1
        if e:
            base = list_mul(dom, base, base)
    return result


def poly_eval(dom, f: list, x):
    """Horner evaluation of f at x."""
    acc = dom.zero
    for c in reversed(f):
        acc = dom.add(dom.mul(acc, x), c)
    return acc


def formal_derivative(dom, f: list) -> list:
    out = [dom.mul(dom.from_int(i), f[i]) for i in range(1, len(f))]
    return drop_trailing_zeros(out)


def reduce_mod_p(f: list[int], p: int) -> list[int]:
    """Coefficientwise reduction of an integer polynomial modulo p."""
    return drop_trailing_zeros([c % p for c in f])


def poly_divmod(field, f: list, g: list) -> tuple[list, list]:
    """Quotient and remainder of f by g over a field; g must be nonzero."""
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    if not field.is_field:
        raise TypeError("poly_divmod needs a field domain")
    inv_lead = field.inv(lc(g))
    q = [field.zero] * max(len(f) - len(g) + 1, 0)
    r = list(f)
    while len(r) >= len(g):
        c = field.mul(r[-1], inv_lead)
        k = len(r) - len(g)
        q[k] = c
        for i in range(len(g)):
            r[k + i] = field.sub(r[k + i], field.mul(c, g[i]))
        r = drop_trailing_zeros(r)
    return drop_trailing_zeros(q), drop_trailing_zeros(r)


def monic(field, f: list) -> list:
    """Scale f by the inverse of its leading coefficient."""
    if not f:
        raise ValueError("cannot normalize the zero polynomial")
    return mul_pointwise(field, field.inv(lc(f)), f)


def poly_xgcd(field, f: list, g: list) -> tuple[list, list, list]:
    """Extended gcd: returns (d, a, b) with d monic and a*f + b*g = d."""
    if not f and not g:
        raise ValueError("xgcd of two zero polynomials")
    r0, r1 = list(f), list(g)
    s0, s1 = [field.one], []
    t0, t1 = [], [field.one]
    while r1:
        q, r = poly_divmod(field, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, list_sub(field, s0, list_mul(field, q, s1))
        t0, t1 = t1, list_sub(field, t0, list_mul(field, q, t1))
    c = field.inv(lc(r0))
    return (
        mul_pointwise(field, c, r0),
        mul_pointwise(field, c, s0),
        mul_pointwise(field, c, t0),
    )


def poly_gcd(field, f: list, g: list) -> list:
    if not f and not g:
        return []
    r0, r1 = list(f), list(g)
    while r1:
        _, r = poly_divmod(field, r0, r1)
        r0, r1 = r1, r
    return monic(field, r0)


def poly_mod_pow(field, g: list, e: int, f: list) -> list:
    """g^e reduced modulo f, by square and multiply."""
    if not f:
        raise ZeroDivisionError("zero modulus")
    if e < 0:
        raise ValueError("negative exponent")
    result = poly_divmod(field, [field.one], f)[1]
    base = poly_divmod(field, g, f)[1]
    while e:
        if e & 1:
            result = poly_divmod(field, list_mul(field, result, base), f)[1]
        e >>= 1
        if e:
            base = poly_divmod(field, list_mul(field, base, base), f)[1]
    return result


def content(f: list[int]) -> int:
    """Positive gcd of the integer coefficients (0 for the zero polynomial)."""
    from math import gcd

    g = 0
    for c in f:
        g = gcd(g, c)
    return g


def primitive_part(f: list[int]) -> list[int]:
    c = content(f)
    if c in (0, 1):
        return list(f)
    return [x // c for x in f]


def poly_to_str(f: list, var: str = "X") -> str:
    """Human-readable rendering, for messages and CLI output only."""
    if not f:
        return "0"
    parts = []
    for i, c in enumerate(f):
        if c == 0:
            continue
        if i == 0:
            parts.append(str(c))
        else:
            xp = var if i == 1 else f"{var}^{i}"
            if c == 1:
                parts.append(xp)
            elif c == -1:
                parts.append(f"-{xp}")
            else:
                parts.append(f"{c}*{xp}")
    return " + ".join(parts).replace("+ -", "- ")
