"""Closed-form sizes of the encodings, for checks and very large instances."""

from typing import Optional

from bayesarith.core.system import SystemCounts
from bayesarith.encoder.multiplication import FactoringSpec


def addition_counts(n: int, n_data: Optional[int] = None) -> SystemCounts:
    """Sizes of the n-bit addition system; data defaults to fixing U and V."""
    return SystemCounts(
        unknowns=28 * n - 16,
        positive=8 * n - 3,
        data=2 * n if n_data is None else n_data,
        structural=2 * n,
        universal=28 * n - 20,
    )


def shifted_counts(n: int, m: int, n_data: int = 0) -> SystemCounts:
    """Sizes of the shifted-addition system.

    Universal equations total 3mn-2n + 4(3mn-2m-3n) + 12(mn-m-n) = 27mn-20m-26n.
    """
    return SystemCounts(
        unknowns=26 * m * n - 16 * m - 24 * n,
        positive=7 * m * n - 3 * m - 6 * n,
        data=n_data,
        structural=2 * n * (m - 1),
        universal=27 * m * n - 20 * m - 26 * n,
    )


def multiplication_counts(n: int, m: int, n_data: Optional[int] = None) -> SystemCounts:
    """Sizes of the n-by-m multiplication system; data defaults to fixing C (m+n bits)."""
    return SystemCounts(
        unknowns=30 * m * n - 14 * m - 22 * n,
        positive=8 * m * n - 2 * m - 5 * n,
        data=m + n if n_data is None else n_data,
        structural=3 * m * n - 2 * n,
        universal=31 * m * n - 19 * m - 25 * n,
    )


def factoring_counts(bit_length: int) -> SystemCounts:
    """Sizes of the factoring system for any C of the given bit length."""
    spec = FactoringSpec(1 << (bit_length - 1))
    return multiplication_counts(spec.n, spec.m)


def unknowns_by_arity(n: int, m: int) -> dict[int, int]:
    """Multiplication unknowns split by number of literals."""
    return {
        1: 2 * (3 * m * n + m - n),
        2: 4 * (4 * m * n - 2 * m - 3 * n),
        3: 8 * (m * n - m - n),
    }
