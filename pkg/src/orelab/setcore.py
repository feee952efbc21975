"""Exact integer combinatorics: binomials, r-subset streams, closed-form bounds.

Vertex sets are plain Python ints used as bitmasks (bit ``i - 1`` is vertex
``i``).  Every quantity is an exact integer; values are range-checked against
a signed 128-bit width so that a result which would not fit a fixed-width
implementation is reported instead of silently accepted.
"""

from __future__ import annotations

import enum
import math
from collections.abc import Iterator

N_MAX = 128
INT128_MAX = (1 << 127) - 1


def checked(value: int) -> int:
    """Return ``value`` unchanged, raising OverflowError outside int128."""
    if value > INT128_MAX or value < -INT128_MAX - 1:
        raise OverflowError(f"value exceeds the checked 128-bit width: {value}")
    return value


def binom(a: int, b: int) -> int:
    """C(a, b) with the total convention C(a, b) = 0 for b < 0 or b > a.

    Negative ``a`` also yields 0; the bound formulas only ever produce it
    for parameters below a statement's range.
    """
    if b < 0 or a < 0 or b > a:
        return 0
    return checked(math.comb(a, b))


def enumerate_subsets(n: int, r: int) -> Iterator[int]:
    """Yield every r-subset of [n] as a bitmask, in strictly increasing order."""
    if n > N_MAX:
        raise ValueError(f"n={n} exceeds n_max={N_MAX}")
    if r < 0 or r > n:
        raise ValueError(f"need 0 <= r <= n, got r={r}, n={n}")
    if r == 0:
        yield 0
        return
    x = (1 << r) - 1
    limit = 1 << n
    while x < limit:
        yield x
        # Gosper's hack: next integer with the same popcount.
        c = x & -x
        y = x + c
        x = (((x ^ y) >> 2) // c) | y


def subset_rank(mask: int) -> int:
    """Colexicographic rank of ``mask`` among sets of the same size.

    Colex order on r-subsets coincides with increasing bitmask order.
    """
    rank = 0
    j = 1
    while mask:
        low = mask & -mask
        rank += math.comb(low.bit_length() - 1, j)
        j += 1
        mask ^= low
    return rank


def subset_unrank(rank: int, r: int) -> int:
    """Inverse of :func:`subset_rank` for r-subsets."""
    mask = 0
    for j in range(r, 0, -1):
        c = j - 1
        while math.comb(c + 1, j) <= rank:
            c += 1
        rank -= math.comb(c, j)
        mask |= 1 << c
    return mask


class Bound(enum.Enum):
    EKR_ORE = "EKR_ORE"
    HM_ORE = "HM_ORE"
    MATCH_ORE = "MATCH_ORE"
    ERDOS_EDGE = "ERDOS_EDGE"
    HM_SIZE = "HM_SIZE"
    COVER_SIZE = "COVER_SIZE"
    CLIQUE_SIZE = "CLIQUE_SIZE"
    REGULAR_CAP = "REGULAR_CAP"
    WILSON_CAP = "WILSON_CAP"
    THIRD_FAMILY_CAP = "THIRD_FAMILY_CAP"
    CROSS_NONTRIV_CAP = "CROSS_NONTRIV_CAP"
    THREE_TRANSVERSAL_CAP = "THREE_TRANSVERSAL_CAP"
    MAXDEG_CAP = "MAXDEG_CAP"
    MAXDEG_HYP = "MAXDEG_HYP"
    MATCH_EDGE = "MATCH_EDGE"
    CROSS_ORE_CAP = "CROSS_ORE_CAP"
    CROSS_DEG_CAP = "CROSS_DEG_CAP"
    ROOTED_DEG = "ROOTED_DEG"


def _need(name: str, value: int | None) -> int:
    if value is None:
        raise ValueError(f"bound requires parameter {name!r}")
    return value


def eval_bound(
    kind: Bound | str,
    n: int,
    r: int,
    *,
    s: int | None = None,
    t: int | None = None,
    ell: int | None = None,
    i: int | None = None,
) -> int:
    """Evaluate a named closed-form bound exactly.

    ``REGULAR_CAP`` is the floor of the regular-intersecting size cap; when
    its denominator vanishes (r < 3 together with n <= r + 2) the cap is
    vacuous and ``C(n, r)`` is returned.
    """
    kind = Bound(kind)
    C = binom
    if kind is Bound.EKR_ORE:
        v = r * C(n - 2, r - 2)
    elif kind is Bound.HM_ORE:
        v = r * (C(n - 2, r - 2) - C(n - r - 2, r - 2))
    elif kind is Bound.MATCH_ORE:
        s = _need("s", s)
        v = r * (C(n - 1, r - 1) - C(n - s, r - 1))
    elif kind is Bound.ERDOS_EDGE:
        s = _need("s", s)
        v = max(C(r * s - 1, r), C(n, r) - C(n - (s - 1), r))
    elif kind is Bound.HM_SIZE:
        v = C(n - 1, r - 1) - C(n - r - 1, r - 1) + 1
    elif kind is Bound.COVER_SIZE:
        s = _need("s", s)
        v = C(n, r) - C(n - (s - 1), r)
    elif kind is Bound.CLIQUE_SIZE:
        s = _need("s", s)
        v = C(r * s - 1, r)
    elif kind is Bound.REGULAR_CAP:
        num, den = regular_cap_ratio(n, r)
        v = C(n, r) if den == 0 else (num * C(n, r)) // den
    elif kind is Bound.WILSON_CAP:
        t = _need("t", t)
        v = C(n - t, r - t)
    elif kind is Bound.THIRD_FAMILY_CAP:
        v = C(n - 1, r - 1) - C(n - r - 1, r - 1) - C(n - r - 2, r - 2) + 2
    elif kind is Bound.CROSS_NONTRIV_CAP:
        v = (C(n - 1, r - 1) + 1) * (C(n - 1, r - 1) - C(n - r - 1, r - 1))
    elif kind is Bound.THREE_TRANSVERSAL_CAP:
        ell = _need("ell", ell)
        v = ell * ell * C(n - 3, r - 3)
    elif kind is Bound.MAXDEG_CAP:
        i = _need("i", i)
        v = C(n - 1, r - 1) - C(n - i - 1, r - 1) + C(n - i - 1, r - i)
    elif kind is Bound.MAXDEG_HYP:
        i = _need("i", i)
        v = C(n - 1, r - 1) - C(n - i - 1, r - 1)
    elif kind is Bound.MATCH_EDGE:
        s = _need("s", s)
        v = C(n, r) - C(n - (s - 1), r)
    elif kind is Bound.CROSS_ORE_CAP:
        v = r * r * C(n - 2, r - 2) ** 2
    elif kind is Bound.CROSS_DEG_CAP:
        v = C(n - 2, r - 2) ** 2
    elif kind is Bound.ROOTED_DEG:
        s = _need("s", s)
        v = 2 * (s - 1) * C(n - 2, r - 2)
    else:  # pragma: no cover - enum is closed
        raise ValueError(kind)
    return checked(v)


def regular_cap_ratio(n: int, r: int) -> tuple[int, int]:
    """(num, den) with the regular-intersecting cap equal to C(n, r) * num / den."""
    head = r * (r - 1) * (r - 2)
    tail = (n - r) * (n - r - 1) * (n - r - 2)
    return head, head + tail


def check_sandwich_inequality(a: int, b: int, c: int) -> bool:
    """Whether c*C(a-1,b-1) > C(a,b) - C(a-c,b) > c*C(a-c,b-1) holds exactly."""
    left = checked(c * binom(a - 1, b - 1))
    mid = binom(a, b) - binom(a - c, b)
    right = checked(c * binom(a - c, b - 1))
    return left > mid > right
