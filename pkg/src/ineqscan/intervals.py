"""Maximal intervals on which m and r are simultaneously constant.

m(n) is constant on blocks pinned down by its defining square inequality
and r(n) on blocks of consecutive powers of two.  Intersecting the two
block structures gives maximal intervals on which x(n) is non-decreasing
and moves in lockstep with z(n).  Chaining these intervals from n = 1
tiles the positive integers; the first 41 links of the chain reach 577.
"""

from dataclasses import dataclass

from . import sequences


@dataclass(frozen=True)
class IntervalRecord:
    """One link of the interval chain.

    Attributes:
        index: 1-based position in the chain.
        lo, hi: the interval [lo, hi], inclusive.
        r_const: the constant value of r on the interval.
        m_const: the constant value of m on the interval.
        x_lo, x_hi: x at the endpoints; x is non-decreasing inside, so
            these are also the minimum and maximum of x on the interval.
    """

    index: int
    lo: int
    hi: int
    r_const: int
    m_const: int
    x_lo: int
    x_hi: int


def d_bounds(n: int) -> tuple[int, int]:
    """Smallest and largest n' with m(n') == m(n).

    With t = m(n), those are ceil(t*t/2) and floor(t*t/2) + t; pure
    integer arithmetic either way.
    """
    t = sequences.m(n)
    sq = t * t
    return (sq + 1) // 2, sq // 2 + t


def e_bounds(n: int) -> tuple[int, int]:
    """Smallest and largest n' with r(n') == r(n).

    r is 0 exactly at n = 1, giving the degenerate block (1, 1); for
    r >= 1 the block is (2**(r-1) + 1, 2**r).
    """
    s = sequences.r(n)
    if s == 0:
        return 1, 1
    return (1 << (s - 1)) + 1, 1 << s


def f_bounds(n: int) -> tuple[int, int]:
    """The maximal interval around n on which both m and r are constant:
    the intersection of d_bounds(n) and e_bounds(n)."""
    d1, d2 = d_bounds(n)
    e1, e2 = e_bounds(n)
    return max(d1, e1), min(d2, e2)


def interval_table(n_max: int) -> list[IntervalRecord]:
    """The interval chain from 1, one record per link, while links start
    at or below n_max.

    Each emitted interval is reported in full, so the last hi may exceed
    n_max; the chain stops as soon as the next link would start beyond
    n_max.  Records are consecutive and disjoint and cover [1, n_max].
    """
    if n_max < 1:
        raise ValueError("n_max must be a positive integer")
    records = []
    lo = 1
    index = 1
    while lo <= n_max:
        _, hi = f_bounds(lo)
        records.append(
            IntervalRecord(
                index=index,
                lo=lo,
                hi=hi,
                r_const=sequences.r(lo),
                m_const=sequences.m(lo),
                x_lo=sequences.x(lo),
                x_hi=sequences.x(hi),
            )
        )
        lo = hi + 1
        index += 1
    return records
