"""Determinants of skew matrices by three independent routes.

The primary route expands det(B) over canonical perfect matchings of
{1, .., R}: for weighted-Cauchy matrices the determinant equals the sum over
matchings of the product of squared matched entries (all cross terms cancel
through the Cauchy cocycle identity), hence is a polynomial in the squared
entries and vanishes identically for odd R.  Two oracles cross-check it: an
LU determinant and a Pfaffian computed by skew elimination, whose square is
the determinant of any even skew matrix.
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache

import numpy as np

from .spectra import require_skew

# (R-1)!! matchings: R = 16 means ~2e6 terms, the desk-scale knee.
MATCHING_CAP = 16
# Principal-minor sums do binom(R, k) * (k-1)!! work; cap accordingly.
MINOR_SUM_CAP = 12


@lru_cache(maxsize=None)
def enumerate_matchings(R: int) -> tuple:
    """All canonical perfect matchings of {1, .., R} (1-based pairs).

    Canonical means every pair is (m, n) with m < n and pairs are listed by
    increasing first element, which the recursion (always match the smallest
    free index first) produces without deduplication.
    """
    if R % 2 != 0 or R < 2:
        raise ValueError("perfect matchings need an even positive size")
    if R > MATCHING_CAP:
        raise ValueError(f"matching enumeration capped at R = {MATCHING_CAP}")

    def rec(free: tuple) -> list:
        if not free:
            return [()]
        head, rest = free[0], free[1:]
        out = []
        for i, partner in enumerate(rest):
            remaining = rest[:i] + rest[i + 1 :]
            for tail in rec(remaining):
                out.append(((head, partner),) + tail)
        return out

    return tuple(rec(tuple(range(1, R + 1))))


@lru_cache(maxsize=None)
def _matching_index_arrays(R: int):
    matchings = enumerate_matchings(R)
    arr = np.array(matchings, dtype=np.intp) - 1  # (n_match, R/2, 2), 0-based
    return arr[:, :, 0], arr[:, :, 1]


def det_matching(B, check: bool = False) -> float:
    """Determinant via the perfect-matching expansion in squared entries.

    Valid for matrices of weighted-Cauchy form (the expansion drops all cross
    terms, which only cancel for that class).  ``check=True`` cross-checks
    against the squared Pfaffian and raises if they disagree, which flags
    inputs outside the weighted-Cauchy class.
    """
    B = require_skew(B)
    R = B.shape[0]
    if R % 2 == 1:
        return 0.0
    if R > MATCHING_CAP:
        raise ValueError(f"det_matching capped at R = {MATCHING_CAP}")
    if R == 0:
        return 1.0
    im, jn = _matching_index_arrays(R)
    b2 = B * B
    terms = np.prod(b2[im, jn], axis=1)
    value = math.fsum(terms.tolist())
    if check:
        ref = pfaffian(B) ** 2
        if abs(value - ref) > 1e-10 * max(1.0, abs(ref)):
            raise ValueError(
                "matching expansion disagrees with Pfaffian^2: "
                "input is not of weighted-Cauchy form "
                f"(matching={value!r}, pfaffian^2={ref!r})"
            )
    return value


def det_lu(M) -> float:
    """Determinant via partially pivoted LU factorization (oracle route)."""
    M = np.asarray(M, dtype=float)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError("matrix must be square")
    if M.shape[0] == 0:
        return 1.0
    return float(np.linalg.det(M))


def pfaffian(B) -> float:
    """Pfaffian of an even-dimensional real skew matrix.

    Skew Gaussian elimination with partial pivoting; sign convention
    Pf([[0, b], [-b, 0]]) = b.  Satisfies pfaffian(B)^2 = det(B).
    """
    B = require_skew(B)
    R = B.shape[0]
    if R % 2 == 1:
        raise ValueError("the Pfaffian of an odd-dimensional matrix is undefined here (0 determinant)")
    if R == 0:
        return 1.0
    A = B.astype(float, copy=True)
    value = 1.0
    for k in range(0, R - 1, 2):
        pivot = k + 1 + int(np.argmax(np.abs(A[k + 1 :, k])))
        if pivot != k + 1:
            A[[k + 1, pivot], k:] = A[[pivot, k + 1], k:]
            A[k:, [k + 1, pivot]] = A[k:, [pivot, k + 1]]
            value = -value
        if A[k + 1, k] == 0.0:
            return 0.0
        value *= A[k, k + 1]
        if k + 2 < R:
            tau = A[k, k + 2 :] / A[k, k + 1]
            col = A[k + 2 :, k + 1]
            A[k + 2 :, k + 2 :] += np.outer(tau, col) - np.outer(col, tau)
    return value


def principal_minor_sum(B, k: int) -> float:
    """Sum of all k x k principal minors, via the matching expansion.

    Equals the k-th elementary symmetric function of the eigenvalues.  Odd k
    gives exactly zero since every odd principal minor of a skew matrix
    vanishes.
    """
    B = require_skew(B)
    R = B.shape[0]
    if not 1 <= k <= R:
        raise ValueError("minor order k must satisfy 1 <= k <= R")
    if R > MINOR_SUM_CAP:
        raise ValueError(f"principal_minor_sum capped at R = {MINOR_SUM_CAP}")
    if k % 2 == 1:
        return 0.0
    parts = []
    for subset in itertools.combinations(range(R), k):
        idx = np.fromiter(subset, dtype=np.intp)
        parts.append(det_matching(B[np.ix_(idx, idx)]))
    return math.fsum(parts)


def newton_girard_power_sums(sigmas, L: int) -> list:
    """Power sums s_1..s_L from elementary symmetric functions sigma_1..

    Classical Newton-Girard recursion
    s_l = sum_{i=1}^{l-1} (-1)^(i-1) sigma_i s_{l-i} + (-1)^(l-1) l sigma_l,
    with sigma_i = 0 beyond the supplied list.
    """
    if L < 1:
        raise ValueError("L must be >= 1")
    sig = list(sigmas)

    def sigma(i: int) -> float:
        return float(sig[i - 1]) if i <= len(sig) else 0.0

    s: list[float] = []
    for l in range(1, L + 1):
        total = math.fsum(
            (-1.0) ** (i - 1) * sigma(i) * s[l - i - 1] for i in range(1, l)
        )
        total += (-1.0) ** (l - 1) * l * sigma(l)
        s.append(total)
    return s
