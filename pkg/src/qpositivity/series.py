"""Exact truncated formal power series over Python's big integers.

A :class:`TruncatedSeries` stores the coefficients of q^0 .. q^N for a fixed
truncation order N.  All arithmetic is exact; coefficients are plain ``int``
objects and can grow without bound.  Operations never resize their operands:
mixing two series of different orders is an error, because silent order
coercion is the classic source of wrong-tail bugs in series code.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping


class OrderMismatchError(ValueError):
    """Two series with different truncation orders were combined."""


class NonUnitError(ValueError):
    """Inversion requested for a series whose constant term is not +1 or -1."""


class ParameterError(ValueError):
    """A numeric parameter is outside its documented domain."""


def pentagonal_terms(limit: int) -> list[tuple[int, int]]:
    """Exponent/sign pairs of prod_{n>=1}(1 - q^n) = sum_k (-1)^k q^{k(3k-1)/2}.

    Returns ``(g, s)`` for every nonzero generalized pentagonal number
    ``g = k(3k-1)/2 <= limit`` (k = 1, -1, 2, -2, ...), in increasing order of
    ``g``, with ``s = (-1)^k``.  The constant term (k = 0) is not included.
    """
    if limit < 0:
        raise ParameterError(f"limit must be nonnegative, got {limit}")
    terms: list[tuple[int, int]] = []
    k = 1
    while True:
        g = k * (3 * k - 1) // 2
        if g > limit:
            break
        sign = -1 if k % 2 else 1
        terms.append((g, sign))
        g = k * (3 * k + 1) // 2
        if g <= limit:
            terms.append((g, sign))
        k += 1
    return terms


class TruncatedSeries:
    """Coefficients of q^0 .. q^order with exact integer arithmetic.

    Instances are immutable: every operation returns a new series of the
    same order, so values can be shared freely across threads or processes.
    """

    __slots__ = ("order", "coeffs")

    order: int
    coeffs: tuple[int, ...]

    def __init__(self, order: int, coeffs: Iterable[int]):
        values = tuple(coeffs)
        if order < 0:
            raise ParameterError(f"order must be nonnegative, got {order}")
        if len(values) != order + 1:
            raise ParameterError(
                f"need exactly {order + 1} coefficients for order {order}, "
                f"got {len(values)}"
            )
        for v in values:
            if not isinstance(v, int):
                raise TypeError(f"coefficients must be int, got {type(v).__name__}")
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", values)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("TruncatedSeries is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int]) -> "TruncatedSeries":
        """Build a series whose order is one less than the coefficient count."""
        values = tuple(coeffs)
        return cls(len(values) - 1, values)

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls(order, (0,) * (order + 1))

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls(order, (1,) + (0,) * order)

    @classmethod
    def from_terms(cls, order: int, terms: Mapping[int, int]) -> "TruncatedSeries":
        """Series with the given exponent -> coefficient map; the rest zero."""
        c = [0] * (order + 1)
        for exponent, value in terms.items():
            if not 0 <= exponent <= order:
                raise ParameterError(
                    f"exponent {exponent} outside [0, {order}]"
                )
            c[exponent] += value
        return cls(order, c)

    # -- basic protocol ----------------------------------------------------

    def __getitem__(self, n: int) -> int:
        if not 0 <= n <= self.order:
            raise IndexError(f"exponent {n} outside [0, {self.order}]")
        return self.coeffs[n]

    def __iter__(self) -> Iterator[int]:
        return iter(self.coeffs)

    def __len__(self) -> int:
        return self.order + 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __repr__(self) -> str:
        shown = ", ".join(str(c) for c in self.coeffs[:8])
        if self.order >= 8:
            shown += ", ..."
        return f"TruncatedSeries(order={self.order}, coeffs=({shown}))"

    def support(self) -> list[int]:
        """Exponents with a nonzero coefficient, ascending."""
        return [n for n, c in enumerate(self.coeffs) if c]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _require_same_order(self, other: "TruncatedSeries") -> None:
        if self.order != other.order:
            raise OrderMismatchError(
                f"orders differ: {self.order} != {other.order}"
            )

    # -- ring operations ---------------------------------------------------

    def combine(self, other: "TruncatedSeries", c1: int, c2: int) -> "TruncatedSeries":
        """Linear combination c1*self + c2*other, coefficient by coefficient."""
        self._require_same_order(other)
        a, b = self.coeffs, other.coeffs
        return TruncatedSeries(
            self.order, [c1 * a[i] + c2 * b[i] for i in range(self.order + 1)]
        )

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.combine(other, 1, 1)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.combine(other, 1, -1)

    def __neg__(self) -> "TruncatedSeries":
        return self.scale(-1)

    def scale(self, c: int) -> "TruncatedSeries":
        return TruncatedSeries(self.order, [c * v for v in self.coeffs])

    def mul(self, other: "TruncatedSeries") -> "TruncatedSeries":
        """Truncated Cauchy product.

        Uses schoolbook convolution, except that when one operand has at most
        ``2*sqrt(2N) + 2`` nonzero terms (true for Euler-style products thanks
        to their pentagonal support) only that support is iterated, dropping
        the cost from O(N^2) to O(N^1.5) coefficient operations.
        """
        self._require_same_order(other)
        n_max = self.order
        threshold = 2 * int((2 * n_max) ** 0.5) + 2

        sparse, dense = None, None
        for first, second in ((self, other), (other, self)):
            nonzero = first.support()
            if len(nonzero) <= threshold:
                sparse, dense = first, second
                sparse_support = nonzero
                break

        out = [0] * (n_max + 1)
        if sparse is not None:
            d = dense.coeffs
            s = sparse.coeffs
            for e in sparse_support:
                ce = s[e]
                for n in range(e, n_max + 1):
                    out[n] += ce * d[n - e]
        else:
            a, b = self.coeffs, other.coeffs
            for i in range(n_max + 1):
                ai = a[i]
                if not ai:
                    continue
                for j in range(n_max + 1 - i):
                    out[i + j] += ai * b[j]
        return TruncatedSeries(n_max, out)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.mul(other)

    def invert_unit(self) -> "TruncatedSeries":
        """Multiplicative inverse, requiring a constant term of +1 or -1.

        Those are the only constant terms with an integer-coefficient inverse.
        """
        a = self.coeffs
        if a[0] not in (1, -1):
            raise NonUnitError(
                f"constant term must be +1 or -1 for an integer inverse, got {a[0]}"
            )
        a0 = a[0]
        n_max = self.order
        b = [0] * (n_max + 1)
        b[0] = a0
        for n in range(1, n_max + 1):
            acc = 0
            for i in range(1, n + 1):
                ai = a[i]
                if ai:
                    acc += ai * b[n - i]
            b[n] = -a0 * acc
        return TruncatedSeries(n_max, b)

    def substitute_power(self, m: int) -> "TruncatedSeries":
        """Substitute q -> q^m, truncating at the original order."""
        if m < 1:
            raise ParameterError(f"substitution power must be >= 1, got {m}")
        if m == 1:
            return self
        n_max = self.order
        out = [0] * (n_max + 1)
        for j in range(0, n_max + 1, m):
            out[j] = self.coeffs[j // m]
        return TruncatedSeries(n_max, out)

    def divide_by_euler(self) -> "TruncatedSeries":
        """Divide by prod_{n>=1}(1 - q^n) without a full convolution.

        Writing E(q) for the product and c = self / E, comparing coefficients
        in c * E = self gives the recurrence

            c(n) = self(n) + sum_{k != 0} (-1)^{k+1} c(n - k(3k-1)/2),

        over the nonzero generalized pentagonal numbers <= n.  Only
        O(sqrt(n)) earlier terms feed each coefficient, so the whole division
        costs O(N^1.5) big-integer additions.
        """
        n_max = self.order
        pents = pentagonal_terms(n_max)
        d = self.coeffs
        c = [0] * (n_max + 1)
        for n in range(n_max + 1):
            acc = d[n]
            for g, s in pents:
                if g > n:
                    break
                if s < 0:
                    acc += c[n - g]
                else:
                    acc -= c[n - g]
            c[n] = acc
        return TruncatedSeries(n_max, c)
