"""Brute-force combinatorial ground truth for weighted m-string counts.

An *m-string* of a partition is a set of parts m(1+k), m(3+k), ...,
m(2j-1+k) for some j >= 1 and 0 <= k <= j; its weight is 1 when k is 0 or j
and 2 otherwise.  C_m(n) is the weighted number of m-strings over all
partitions of n.  This module computes C_m(n) by explicit enumeration, with
no series arithmetic anywhere, so it can cross-check the analytic identity
C_m(n) = [q^n] h(q^m)/(q)_inf from a completely independent direction.

Two conventions are deliberately pinned down here (the enumeration is
exponential, so they are cheap to test and load-bearing):

* membership is by part *value*: {1, 1, 1} hosts the (j=1, k=0) 1-string
  once, not three times;
* nested and overlapping (j, k) pairs all count: {3, 1} hosts both
  (j=1, k=0) and (j=2, k=0).

Both are forced by requiring the enumeration to agree with the series
coefficients of h(q^m)/(q)_inf; the calibration tests keep them honest.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

from .series import ParameterError

ORACLE_CEILING = 45
"""Largest n the enumeration accepts by default; p(45) = 89,134 partitions."""


class OracleLimitError(ValueError):
    """The requested n is beyond the enumeration ceiling."""


@dataclass(frozen=True)
class Partition:
    """A partition of n into non-increasing positive parts."""

    n: int
    parts: tuple[int, ...]
    part_set: frozenset[int]

    @classmethod
    def from_parts(cls, parts: Sequence[int]) -> "Partition":
        parts = tuple(parts)
        if not parts or any(p < 1 for p in parts):
            raise ValueError(f"parts must be positive, got {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be non-increasing, got {parts}")
        return cls(sum(parts), parts, frozenset(parts))


@dataclass(frozen=True)
class MString:
    """One occurrence (j, k) of an m-string, with its weight."""

    m: int
    j: int
    k: int

    @property
    def weight(self) -> int:
        return 1 if self.k in (0, self.j) else 2

    @cached_property
    def parts_required(self) -> frozenset[int]:
        return frozenset(self.m * (2 * i - 1 + self.k) for i in range(1, self.j + 1))


def enumerate_partitions(n: int, ceiling: int = ORACLE_CEILING) -> Iterator[Partition]:
    """Yield every partition of n once, largest-part-first (reverse lexicographic)."""
    if n < 1:
        raise ParameterError(f"n must be >= 1, got {n}")
    if n > ceiling:
        raise OracleLimitError(
            f"n = {n} exceeds the enumeration ceiling {ceiling}; "
            "use the series coefficients instead"
        )
    for parts in _descending_partitions(n, n):
        yield Partition(n, parts, frozenset(parts))


def _descending_partitions(n: int, max_part: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _descending_partitions(n - first, first):
            yield (first,) + rest


def find_m_strings(partition: Partition, m: int) -> list[MString]:
    """All (j, k) m-strings whose required parts appear in the partition.

    Presence is tested by value against ``partition.part_set``; every
    qualifying (j, k) is reported exactly once, in lexicographic (j, k)
    order, including nested strings that share parts.
    """
    if m < 1:
        raise ParameterError(f"m must be >= 1, got {m}")
    n = partition.n
    parts = partition.part_set
    found: list[MString] = []
    j = 1
    while m * j * j <= n:
        for k in range(j + 1):
            # sum of required parts is m*(j^2 + j*k); stop once it passes n
            if m * (j * j + j * k) > n:
                break
            if all(m * (2 * i - 1 + k) in parts for i in range(1, j + 1)):
                found.append(MString(m, j, k))
        j += 1
    return found


def c_m_oracle(m: int, n: int, ceiling: int = ORACLE_CEILING) -> int:
    """Weighted m-string count C_m(n), by exhaustive enumeration."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    total = 0
    for partition in enumerate_partitions(n, ceiling):
        for string in find_m_strings(partition, m):
            total += string.weight
    return total


def ParameterErrorish(n: int) -> ValueError:
    return ValueError(f"n must be >= 1, got {n}")
