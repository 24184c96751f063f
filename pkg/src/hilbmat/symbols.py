"""Toeplitz symbol machinery: symbols, quadratic forms, convergence rates.

A symbol is a Fourier series f(x) = sum_r c_r exp(i r x) on [0, 2*pi]; its
Toeplitz matrix has entry (m, n) = c_{m-n}.  For any unit coefficient vector
u, the trigonometric polynomial phi(x) = (2*pi)^(-1/2) sum_n u_n e^{i(n-1)x}
satisfies  u* C_R u = integral of f |phi|^2  (quadratic-form identity), and
this module evaluates the integral side independently of the matrix side:
by exact uniform-grid quadrature when f is a finite trigonometric
polynomial, and by exact piecewise antiderivatives against the Fourier
expansion of |phi|^2 for the two discontinuous closed forms (the sawtooth
symbol of the skew Hilbert matrix and the band indicator of the prolate
matrix), where generic quadrature would suffer from the Gibbs phenomenon.

Sign note: with the (m, n) = c_{m-n} convention, the coefficients c_r = 1/r
generate exactly the skew Hilbert matrix, and the corresponding closed-form
symbol is i*(pi - x) on (0, 2*pi), vanishing at the endpoints.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ._util import write_csv
from .matrices import prolate_matrix, toeplitz_from_symbol
from .spectra import spectral_norm

# Uniform-grid quadrature on [0, 2*pi] is exact for trigonometric polynomials
# of degree < number of points; 8R + 64 leaves margin over degree 2(R-1)
# integrands plus symbol truncation.
GRID_POINTS_PER_DIM = 8
GRID_POINTS_EXTRA = 64

# Double precision floor for gap measurements pi - |largest eigenvalue|.
GAP_FLOOR = 1e-13


@dataclass(frozen=True)
class SymbolSeries:
    """Fourier coefficients c_r for |r| <= K, optionally with a closed form.

    ``kind`` tags an exact evaluator: "hilbert" (sawtooth i*(pi - x)),
    "prolate" (band indicator of height pi, bandwidth parameter ``w``), or
    "cosine" (2 cos x).  Tagged series can extend their coefficient band on
    demand; untagged series are undefined beyond K.
    """

    coeffs: dict
    K: int
    kind: str | None = None
    w: float | None = field(default=None)

    def __post_init__(self):
        if self.K < 0:
            raise ValueError("coefficient band K must be >= 0")
        for r in self.coeffs:
            if abs(int(r)) > self.K:
                raise ValueError(f"coefficient index {r} outside band |r| <= {self.K}")

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_coeffs(cls, coeffs, K=None) -> "SymbolSeries":
        coeffs = {int(r): complex(v) for r, v in coeffs.items()}
        if K is None:
            K = max((abs(r) for r in coeffs), default=0)
        return cls(coeffs=coeffs, K=int(K))

    @classmethod
    def hilbert(cls, K: int) -> "SymbolSeries":
        coeffs = {r: 1.0 / r for r in range(-K, K + 1) if r != 0}
        return cls(coeffs=coeffs, K=K, kind="hilbert")

    @classmethod
    def prolate(cls, w: float, K: int) -> "SymbolSeries":
        if not 0.0 < w < 0.5:
            raise ValueError("bandwidth w must lie in (0, 1/2)")
        coeffs = {0: 2.0 * np.pi * w}
        for r in range(1, K + 1):
            val = np.sin(2.0 * np.pi * w * r) / r
            coeffs[r] = val
            coeffs[-r] = val
        return cls(coeffs=coeffs, K=K, kind="prolate", w=w)

    @classmethod
    def cosine(cls) -> "SymbolSeries":
        return cls(coeffs={1: 1.0, -1: 1.0}, K=1, kind="cosine")

    @classmethod
    def constant(cls, c0) -> "SymbolSeries":
        return cls(coeffs={0: complex(c0)}, K=0, kind="constant")

    # -- coefficient access --------------------------------------------------

    def coeff(self, r: int):
        r = int(r)
        if abs(r) <= self.K:
            return self.coeffs.get(r, 0.0)
        if self.kind == "hilbert":
            return 1.0 / r
        if self.kind == "prolate":
            return np.sin(2.0 * np.pi * self.w * r) / r
        if self.kind in ("cosine", "constant"):
            return 0.0
        raise ValueError(
            f"coefficient c_{r} undefined: band is |r| <= {self.K} and no closed form"
        )

    def with_band(self, K: int) -> "SymbolSeries":
        """Same symbol with coefficients materialized out to |r| <= K."""
        coeffs = {r: self.coeff(r) for r in range(-K, K + 1)}
        coeffs = {r: v for r, v in coeffs.items() if v != 0.0}
        return SymbolSeries(coeffs=coeffs, K=K, kind=self.kind, w=self.w)

    # -- evaluation ----------------------------------------------------------

    def eval(self, x):
        """Symbol value(s) at x in [0, 2*pi]: closed form when tagged."""
        x = np.asarray(x, dtype=float)
        if np.any((x < 0.0) | (x > 2.0 * np.pi)):
            raise ValueError("x must lie in [0, 2*pi]")
        if self.kind == "hilbert":
            out = 1j * (np.pi - x)
            interior = (x > 0.0) & (x < 2.0 * np.pi)
            out = np.where(interior, out, 0.0 + 0.0j)
            return out if out.ndim else complex(out)
        if self.kind == "prolate":
            band = (x <= 2.0 * np.pi * self.w) | (x >= 2.0 * np.pi * (1.0 - self.w))
            out = np.where(band, np.pi, 0.0).astype(complex)
            return out if out.ndim else complex(out)
        if self.kind == "cosine":
            out = 2.0 * np.cos(x) + 0.0j
            return out if out.ndim else complex(out)
        out = np.zeros_like(x, dtype=complex)
        for r, c in self.coeffs.items():
            out += c * np.exp(1j * r * x)
        return out if out.ndim else complex(out)

    def sup_abs(self, samples: int = 8192) -> float:
        """Supremum of |f| over [0, 2*pi] (exact for the tagged kinds)."""
        if self.kind in ("hilbert", "prolate"):
            return float(np.pi)
        if self.kind == "cosine":
            return 2.0
        if self.kind == "constant":
            return abs(self.coeffs.get(0, 0.0))
        x = np.linspace(0.0, 2.0 * np.pi, samples, endpoint=False)
        return float(np.abs(self.eval(x)).max())

    def is_real_symbol(self, tol: float = 1e-12) -> bool:
        return all(
            abs(self.coeff(r) - np.conj(self.coeff(-r))) <= tol
            for r in range(0, self.K + 1)
        )


# ---------------------------------------------------------------------------
# Trigonometric polynomials phi built from unit coefficient vectors.
# ---------------------------------------------------------------------------


def phi_values(u, x):
    """phi(x) = (2*pi)^(-1/2) sum_n u_n exp(i (n-1) x), vectorized in x."""
    u = np.asarray(u, dtype=complex)
    x = np.asarray(x, dtype=float)
    n = np.arange(u.size)
    return np.exp(1j * np.outer(x, n)) @ u / np.sqrt(2.0 * np.pi)


def phi_sq_fourier(u):
    """Fourier coefficients d_k of |phi|^2 for k = -(R-1) .. R-1.

    |phi(x)|^2 = sum_k d_k exp(i k x) with d_k = (2*pi)^(-1)
    sum_m u_m conj(u_{m-k}); returned as (offsets, coefficients).
    """
    u = np.asarray(u, dtype=complex)
    R = u.size
    s = np.correlate(u, u, mode="full")  # s[R-1+k] = sum_m u_{m+k} conj(u_m)
    offsets = np.arange(-(R - 1), R)
    return offsets, s / (2.0 * np.pi)


def grid_quadrature(series: SymbolSeries, u, npoints=None) -> complex:
    """Uniform-grid value of the integral of f |phi|^2 over [0, 2*pi].

    Exact to roundoff whenever f is a trigonometric polynomial and the grid
    has more points than the integrand degree.
    """
    u = np.asarray(u, dtype=complex)
    R = u.size
    if npoints is None:
        npoints = GRID_POINTS_PER_DIM * R + GRID_POINTS_EXTRA
    x = 2.0 * np.pi * np.arange(npoints) / npoints
    fx = series.eval(x)
    px = np.abs(phi_values(u, x)) ** 2
    return complex(np.sum(fx * px) * (2.0 * np.pi / npoints))


def _exact_hilbert_integral(u) -> complex:
    # integral of i*(pi - x) e^{ikx} over [0, 2*pi] is -2*pi/k for k != 0, 0 at k = 0
    offsets, d = phi_sq_fourier(u)
    nz = offsets != 0
    return complex(np.sum(d[nz] * (-2.0 * np.pi / offsets[nz])))


def _interval_exp_integral(k: np.ndarray, a: float, b: float) -> np.ndarray:
    out = np.empty(k.shape, dtype=complex)
    nz = k != 0
    kk = k[nz]
    out[nz] = (np.exp(1j * kk * b) - np.exp(1j * kk * a)) / (1j * kk)
    out[~nz] = b - a
    return out


def _exact_prolate_integral(w: float, u) -> complex:
    offsets, d = phi_sq_fourier(u)
    k = offsets.astype(float)
    part1 = _interval_exp_integral(k, 0.0, 2.0 * np.pi * w)
    part2 = _interval_exp_integral(k, 2.0 * np.pi * (1.0 - w), 2.0 * np.pi)
    return complex(np.pi * np.sum(d * (part1 + part2)))


def integral_side(series: SymbolSeries, u) -> complex:
    """Integral of f |phi|^2 over [0, 2*pi], by the appropriate exact route."""
    if series.kind == "hilbert":
        return _exact_hilbert_integral(u)
    if series.kind == "prolate":
        return _exact_prolate_integral(series.w, u)
    return grid_quadrature(series, u)


def quadratic_form(series: SymbolSeries, u, C=None):
    """Both sides of the quadratic-form identity u* C_R u = integral f |phi|^2.

    Returns ``(matrix_side, integral_side)``.  ``C`` may supply a prebuilt
    Toeplitz matrix; otherwise it is generated from the series.
    """
    u = np.asarray(u, dtype=complex)
    norm = float(np.linalg.norm(u))
    if abs(norm - 1.0) > 1e-10:
        raise ValueError("coefficient vector must have unit Euclidean norm")
    R = u.size
    if C is None:
        C = toeplitz_from_symbol(series, R)
    matrix = complex(np.vdot(u, C @ u))
    return matrix, integral_side(series, u)


# ---------------------------------------------------------------------------
# Convergence-rate experiments.
# ---------------------------------------------------------------------------


def _smooth_symbol_peak(series: SymbolSeries, samples: int = 8192):
    """(max value, argmax, second derivative) of a smooth real symbol.

    Returns None when the symbol is degenerate for the rate law (vanishing
    curvature at the peak, e.g. a constant symbol).
    """
    if series.kind == "cosine":
        return 2.0, 0.0, -2.0
    x = np.linspace(0.0, 2.0 * np.pi, samples, endpoint=False)
    fx = series.eval(x).real
    j = int(np.argmax(fx))
    x0 = float(x[j])
    # Newton refinement on f' using the analytic derivatives of the series.
    rs = np.array([r for r in range(-series.K, series.K + 1)])
    cs = np.array([series.coeff(int(r)) for r in rs])
    for _ in range(60):
        e = np.exp(1j * rs * x0)
        d1 = float(np.sum(1j * rs * cs * e).real)
        d2 = float(np.sum(-(rs**2) * cs * e).real)
        if d2 == 0.0:
            break
        step = d1 / d2
        x0 -= step
        if abs(step) < 1e-14:
            break
    e = np.exp(1j * rs * x0)
    fmax = float(np.sum(cs * e).real)
    fpp = float(np.sum(-(rs**2) * cs * e).real)
    if abs(fpp) < 1e-9 * max(1.0, abs(fmax)):
        return None
    return fmax, x0 % (2.0 * np.pi), fpp


def gs_rate_check(series: SymbolSeries, R_list):
    """Spectral-norm convergence rate table for a smooth real symbol.

    For a twice-differentiable symbol with a unique quadratic maximum the gap
    max f - ||C_R|| behaves like pi^2 |f''(x0)| / (2 R^2).  Returns
    ``(rows, peak)`` where rows are (R, gap, predicted, ratio) and peak is
    the (max, argmax, f'') triple, or ``(None, None)`` when the symbol is
    degenerate for the rate law.
    """
    peak = _smooth_symbol_peak(series)
    if peak is None:
        return None, None
    fmax, x0, fpp = peak
    rows = []
    for R in R_list:
        # the symbol under study is the finite polynomial itself, so
        # coefficients beyond the band are exact zeros
        C = toeplitz_from_symbol(dict(series.coeffs), int(R))
        norm = spectral_norm(C)
        gap = fmax - norm
        predicted = np.pi**2 * abs(fpp) / (2.0 * R**2)
        rows.append((int(R), float(gap), float(predicted), float(gap / predicted)))
    return rows, peak


def prolate_gap(w: float, R_list):
    """Gaps pi - ||P_R|| for the prolate matrix, plus a log-linear decay fit.

    The gap decays exponentially in R and crosses the double-precision floor
    quickly (by R of a few dozen for moderate w); rows beyond the floor carry
    NaN log-gaps and are excluded from the slope fit.  Returns
    ``(rows, slope)`` with rows (R, gap, log_gap); slope is None when fewer
    than two rows stay above the floor.
    """
    if not 0.0 < w < 0.5:
        raise ValueError("bandwidth w must lie in (0, 1/2)")
    rows = []
    for R in R_list:
        norm = spectral_norm(prolate_matrix(int(R), w))
        gap = float(np.pi - norm)
        log_gap = float(np.log(gap)) if gap > GAP_FLOOR else float("nan")
        rows.append((int(R), gap, log_gap))
    valid = [(R, lg) for R, _, lg in rows if np.isfinite(lg)]
    slope = None
    if len(valid) >= 2:
        Rs = np.array([v[0] for v in valid], dtype=float)
        lgs = np.array([v[1] for v in valid])
        slope = float(np.polyfit(Rs, lgs, 1)[0])
    return rows, slope


def write_gs_rate_csv(rows, target):
    write_csv(target, ["R", "gap", "predicted", "ratio"], rows)


def write_prolate_csv(rows, target):
    write_csv(target, ["R", "gap", "log_gap"], rows)
