"""Exact arithmetic on EGF coefficient sequences.

A sequence ``a`` stands for the series sum a_n x^n / n!, so products of EGFs
are binomial convolutions.  Everything is integer arithmetic; no closed
form is ever evaluated.

``exp_integral(f)`` solves g = 1 + integral(g f), i.e. g = exp(integral f), which
counts avoiders of k-sigma from the avoiders f of sigma.  ``k_sigma_k_counts``
then gives h = 1 + integral(g^2) for k-sigma-k.
"""

from __future__ import annotations

from typing import Sequence

from pogp.enumeration import CountSeq

__all__ = [
    "pascal_rows", "binomial_convolve", "exp_integral", "k_sigma_k_counts",
    "bicolored_bell", "shift_left",
]


def pascal_rows(n: int) -> list[list[int]]:
    rows = [[1]]
    for _ in range(n):
        prev = rows[-1]
        rows.append([1] + [prev[i] + prev[i + 1] for i in range(len(prev) - 1)] + [1])
    return rows


def binomial_convolve(a: Sequence[int], b: Sequence[int]) -> CountSeq:
    """c_n = sum_i C(n, i) a_i b_(n-i), the EGF product."""
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")
    if not a:
        return ()
    rows = pascal_rows(len(a) - 1)
    return tuple(
        sum(rows[n][i] * a[i] * b[n - i] for i in range(n + 1)) for n in range(len(a))
    )


def exp_integral(f: Sequence[int], length: int | None = None) -> CountSeq:
    """g_0 = 1, g_(n+1) = sum_i C(n, i) g_i f_(n-i).

    From f_0..f_N this yields g_0..g_(N+1); ``length`` truncates.
    """
    total = len(f) + 1 if length is None else length
    if total > len(f) + 1:
        raise ValueError(f"need f up to index {total - 2} for {total} terms")
    rows = pascal_rows(max(total - 1, 0))
    g = [1]
    for n in range(total - 1):
        g.append(sum(rows[n][i] * g[i] * f[n - i] for i in range(n + 1)))
    return tuple(g[:total])


def k_sigma_k_counts(f: Sequence[int], length: int | None = None) -> CountSeq:
    """h_0 = 1, h_(n+1) = sum_i C(n, i) g_i g_(n-i) with g = exp_integral(f).

    From f_0..f_N this yields h_0..h_(N+2); ``length`` truncates.
    """
    g = exp_integral(f)
    total = len(g) + 1 if length is None else length
    if total > len(g) + 1:
        raise ValueError(f"need f up to index {total - 3} for {total} terms")
    sq = binomial_convolve(g, g)
    return ((1,) + sq)[:total]


def bicolored_bell(n: int) -> CountSeq:
    """Bicolored set partitions of [0..n]: EGF exp(2(e^x - 1))."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return exp_integral((2,) * n, length=n + 1)


def shift_left(a: Sequence[int]) -> CountSeq:
    return tuple(a[1:])
