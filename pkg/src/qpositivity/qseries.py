"""Constructors for the named q-series of the overpartition-moment circle.

Everything here is built from :class:`~qpositivity.series.TruncatedSeries`
primitives:

* ``h_series`` -- the Lambert-type series
  h(q) = sum_{n>=1} (-1)^{n+1} q^{n(n+1)/2} / (1 - q^n) that encodes the
  first positive rank/crank moment difference for overpartitions.
* ``euler_product`` / ``partition_series`` -- (q)_inf and its reciprocal.
* ``restricted_partition_series`` -- partitions with no part divisible by d.
* ``overpartition_series`` -- ordinary overpartition counts.
* ``cm_series`` -- h(q^m)/(q)_inf, the weighted m-string counts C_m(n).
* ``m_series`` -- M_m(q) = (h(q) - m*h(q^m))/(q)_inf, the series whose
  coefficient positivity is under investigation.
* ``strong_diff_series`` -- (p1*h(q^{p1}) - p2*h(q^{p2}))/(q)_inf and its
  negation, the two orientations of the stronger prime-pair conjecture.
"""

from __future__ import annotations

import enum

from .series import ParameterError, TruncatedSeries, pentagonal_terms


class Orientation(enum.Enum):
    """Sign convention for the prime-pair difference series.

    ``AS_PRINTED`` is p1*h(q^{p1}) - p2*h(q^{p2}) over (q)_inf, the literal
    reading of the conjectured expression.  ``SWAPPED`` is its negation,
    which equals M_{p1}(q) - M_{p2}(q).  Both exist because the literal
    expression provably has a negative coefficient at q^{p2}, so a verifier
    has to be able to scan either convention and say which one it scanned.
    """

    AS_PRINTED = "printed"
    SWAPPED = "swapped"


def is_prime(n: int) -> bool:
    """Trial-division primality check; parameters here are all small."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def h_series(order: int) -> TruncatedSeries:
    """h(q) = sum_{n>=1} (-1)^{n+1} q^{n(n+1)/2} / (1 - q^n), truncated.

    Each term expands to the geometric progression
    (-1)^{n+1} * (q^{T_n} + q^{T_n + n} + q^{T_n + 2n} + ...) with
    T_n = n(n+1)/2, so the coefficient array is filled with strided
    additions: O(N log N) work in total.
    """
    if order < 0:
        raise ParameterError(f"order must be nonnegative, got {order}")
    c = [0] * (order + 1)
    n = 1
    while n * (n + 1) // 2 <= order:
        start = n * (n + 1) // 2
        if n % 2:
            for j in range(start, order + 1, n):
                c[j] += 1
        else:
            for j in range(start, order + 1, n):
                c[j] -= 1
        n += 1
    return TruncatedSeries(order, c)


def euler_product(order: int) -> TruncatedSeries:
    """(q)_inf = prod_{n>=1}(1 - q^n), truncated.

    Built directly from its pentagonal-number expansion, so the result is
    sparse: about 2*sqrt(2N/3) nonzero terms.
    """
    if order < 0:
        raise ParameterError(f"order must be nonnegative, got {order}")
    c = [0] * (order + 1)
    c[0] = 1
    for g, s in pentagonal_terms(order):
        c[g] = s
    return TruncatedSeries(order, c)


def partition_series(order: int) -> TruncatedSeries:
    """1/(q)_inf: coefficient n is the partition count p(n)."""
    return TruncatedSeries.one(order).divide_by_euler()


def restricted_partition_series(order: int, d: int) -> TruncatedSeries:
    """Partitions into parts not divisible by d: (q^d; q^d)_inf / (q)_inf."""
    if d < 2:
        raise ParameterError(f"modulus must be >= 2, got {d}")
    return euler_product(order).substitute_power(d).divide_by_euler()


def overpartition_series(order: int) -> TruncatedSeries:
    """Overpartition counts: prod (1 + q^n)/(1 - q^n).

    Since 1 + q^n = (1 - q^{2n})/(1 - q^n), this is (q^2; q^2)_inf divided
    by (q)_inf twice, which keeps every factor on the fast pentagonal path.
    """
    if order < 0:
        raise ParameterError(f"order must be nonnegative, got {order}")
    doubled = euler_product(order).substitute_power(2)
    return doubled.divide_by_euler().divide_by_euler()


def cm_series(m: int, order: int) -> TruncatedSeries:
    """h(q^m)/(q)_inf: coefficient n is the weighted m-string count C_m(n)."""
    if m < 1:
        raise ParameterError(f"m must be >= 1, got {m}")
    return h_series(order).substitute_power(m).divide_by_euler()


def m_series(m: int, order: int) -> TruncatedSeries:
    """M_m(q) = (h(q) - m*h(q^m)) / (q)_inf, truncated."""
    if m < 2:
        raise ParameterError(f"m must be >= 2, got {m}")
    h = h_series(order)
    numerator = h.combine(h.substitute_power(m), 1, -m)
    return numerator.divide_by_euler()


def strong_diff_series(
    p1: int,
    p2: int,
    order: int,
    orientation: Orientation = Orientation.AS_PRINTED,
) -> TruncatedSeries:
    """The prime-pair difference series in the requested orientation.

    AS_PRINTED: (p1*h(q^{p1}) - p2*h(q^{p2})) / (q)_inf.
    SWAPPED:    the negation, equal to M_{p1}(q) - M_{p2}(q).
    """
    _validate_prime_pair(p1, p2)
    orientation = Orientation(orientation)
    h = h_series(order)
    h1 = h.substitute_power(p1)
    h2 = h.substitute_power(p2)
    if orientation is Orientation.AS_PRINTED:
        numerator = h1.combine(h2, p1, -p2)
    else:
        numerator = h2.combine(h1, p2, -p1)
    return numerator.divide_by_euler()


def _validate_prime_pair(p1: int, p2: int) -> None:
    if not is_prime(p1) or not is_prime(p2):
        raise ParameterError(f"({p1}, {p2}) must both be prime")
    if not p1 > p2 >= 2:
        raise ParameterError(f"need p1 > p2 >= 2, got ({p1}, {p2})")
