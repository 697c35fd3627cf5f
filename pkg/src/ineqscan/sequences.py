"""The base integer sequences, as total functions of a positive integer.

Definitions, for n >= 1:

    z(n)   largest integer with 3*z(n) < 2n            (equals (2n-1)//3)
    m(n)   largest integer with m(n)**2 <= 2n          (integer square root)
    r(n)   least r >= 0 with n <= 2**r
    c(n)   2n - 2*z(n) + 2
    x(n)   z(n) - (r(n) + 1)*m(n)
    y(n)   2**(c(n) - m(n)) - n**(m(n) - 1)

y(n) splits into pow2_term(n) = 2**(c(n)-m(n)) and npow_term(n) =
n**(m(n)-1).  Both terms grow to thousands of digits quickly, so the
sign of y is decided by exact comparison of the terms rather than by
subtracting them; ask for y_value only when you really need the digits.
The gap c(n) - m(n) is at least 2 for every n (exactly 2 only at n = 2),
which keeps the pow2_term exponent positive.
"""

from dataclasses import dataclass
from typing import Iterator

from .exactarith import cmp_pow2_vs_pow, isqrt, nat_pow


@dataclass(frozen=True)
class SequenceRow:
    """Every sequence value at a single n, mutually consistent."""

    n: int
    z: int
    m: int
    r: int
    c: int
    x: int
    c_minus_m: int
    y_sign: int


def _require_positive(n: int) -> None:
    if n < 1:
        raise ValueError("n must be a positive integer")


def z(n: int) -> int:
    """Largest integer with 3*z < 2n."""
    _require_positive(n)
    return (2 * n - 1) // 3


def m(n: int) -> int:
    """Largest integer whose square is at most 2n."""
    _require_positive(n)
    return isqrt(2 * n)


def r(n: int) -> int:
    """Least non-negative r with n <= 2**r; 0 for n = 1."""
    _require_positive(n)
    return (n - 1).bit_length()


def c(n: int) -> int:
    """2n - 2*z(n) + 2; non-decreasing, steps by 2 at multiples of 3."""
    _require_positive(n)
    return 2 * n - 2 * z(n) + 2


def x(n: int) -> int:
    """z(n) - (r(n) + 1)*m(n)."""
    _require_positive(n)
    return z(n) - (r(n) + 1) * m(n)


def pow2_term(n: int) -> int:
    """2**(c(n) - m(n)), the power-of-two side of y(n)."""
    _require_positive(n)
    return 1 << (c(n) - m(n))


def npow_term(n: int) -> int:
    """n**(m(n) - 1), the n-power side of y(n)."""
    _require_positive(n)
    return nat_pow(n, m(n) - 1)


def y_sign(n: int) -> int:
    """Exact sign of y(n), computed without forming the difference."""
    _require_positive(n)
    return cmp_pow2_vs_pow(c(n) - m(n), n, m(n) - 1)


def y_value(n: int) -> int:
    """The exact integer y(n) = pow2_term(n) - npow_term(n).

    This builds both terms in full; for n in the thousands the result
    already has hundreds of digits.  Prefer y_sign for large scans.
    """
    _require_positive(n)
    return pow2_term(n) - npow_term(n)


def row(n: int) -> SequenceRow:
    """All sequence values at n bundled into one record."""
    _require_positive(n)
    zz = (2 * n - 1) // 3
    mm = isqrt(2 * n)
    rr = (n - 1).bit_length()
    cc = 2 * n - 2 * zz + 2
    return SequenceRow(
        n=n,
        z=zz,
        m=mm,
        r=rr,
        c=cc,
        x=zz - (rr + 1) * mm,
        c_minus_m=cc - mm,
        y_sign=cmp_pow2_vs_pow(cc - mm, n, mm - 1),
    )


def scan(lo: int, hi: int) -> Iterator[tuple[int, int, int, int, int, int]]:
    """Yield (n, z, m, r, c, x) for each n in [lo, hi].

    Streaming counterpart of row() for range scans: m is advanced
    incrementally instead of recomputed from scratch, which keeps a full
    scan close to constant work per step.  An empty range yields nothing.
    """
    if lo < 1:
        raise ValueError("lo must be a positive integer")
    mm = isqrt(2 * lo)
    for n in range(lo, hi + 1):
        nn = 2 * n
        while (mm + 1) * (mm + 1) <= nn:
            mm += 1
        zz = (nn - 1) // 3
        rr = (n - 1).bit_length()
        cc = nn - 2 * zz + 2
        yield n, zz, mm, rr, cc, zz - (rr + 1) * mm
