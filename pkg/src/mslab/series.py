"""Truncated Taylor series on the unit disc with coefficient-space norms.

Everything downstream works with analytic functions f = sum_k c_k z^k held as
their first N+1 Taylor coefficients together with a bound on the l2-mass of
the discarded tail.  Three norms are carried purely in coefficient space,

    Hardy        sum_k |c_k|^2,
    Bergman      sum_k |c_k|^2 / (k+1),
    Dirichlet    sum_k |c_k|^2 * (k+1),

each under a square root.  Differentiation acts on coefficients as
c_k -> (k+1) c_{k+1}, which makes the splitting

    ||f||_Dirichlet^2 = ||f'||_Bergman^2 + ||f||_Hardy^2

an exact identity of finite sums, not an approximation; the test suite checks
it at rounding level.

Series are immutable values: every operation returns a fresh instance and the
backing arrays are write-protected.  Tail bounds are propagated through each
operation conservatively, and for the geometric kernels they are exact, which
is what lets truncation choices downstream be certified rather than guessed.
The truncation policy for a configuration of n poles of max modulus r lives
in :func:`policy_truncation`.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

__all__ = [
    "NormKind",
    "TaylorSeries",
    "polynomial",
    "norm",
    "norm_sq",
    "inner",
    "differentiate",
    "evaluate",
    "multiply",
    "add",
    "scale",
    "cauchy_kernel_series",
    "blaschke_factor_series",
    "compose_with_blaschke_factor",
    "policy_truncation",
]

# Slack admitted when checking |z| <= 1: points on the unit circle produced
# by cos/sin land within a few ulp of modulus one.
_CIRCLE_SLACK = 1e-12


class NormKind(enum.Enum):
    """Coefficient weight family; ``weights(L)[k]`` multiplies |c_k|^2."""

    HARDY = "hardy"
    BERGMAN = "bergman"
    DIRICHLET = "dirichlet"

    def weights(self, length: int) -> np.ndarray:
        k = np.arange(length, dtype=np.float64)
        if self is NormKind.HARDY:
            return np.ones(length, dtype=np.float64)
        if self is NormKind.BERGMAN:
            return 1.0 / (k + 1.0)
        return k + 1.0


@dataclass(frozen=True)
class TaylorSeries:
    """Immutable truncated Taylor series.

    Parameters
    ----------
    coeffs : array_like of complex
        Taylor coefficients c_0 .. c_N.  At least one entry.
    tail_bound : float, optional
        Bound on sqrt(sum_{k>N} |c_k|^2) for the discarded coefficients.
        Zero (the default) declares the series to be an exact polynomial.
    """

    coeffs: np.ndarray
    tail_bound: float = 0.0

    def __post_init__(self) -> None:
        arr = np.atleast_1d(np.asarray(self.coeffs, dtype=np.complex128))
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("coefficients must form a nonempty 1-d array")
        if not np.all(np.isfinite(arr)):
            raise ValueError("coefficients must be finite")
        tb = float(self.tail_bound)
        if not (tb >= 0.0 and math.isfinite(tb)):
            raise ValueError("tail_bound must be finite and nonnegative")
        arr = arr.copy()
        arr.setflags(write=False)
        object.__setattr__(self, "coeffs", arr)
        object.__setattr__(self, "tail_bound", tb)

    @property
    def trunc_len(self) -> int:
        return int(self.coeffs.size)

    def __str__(self) -> str:
        # Debug rendering, one "k: re im" line per stored coefficient.
        lines = [
            f"{k}: {c.real:.17g} {c.imag:.17g}" for k, c in enumerate(self.coeffs)
        ]
        if self.tail_bound > 0.0:
            lines.append(f"tail<= {self.tail_bound:.3e}")
        return "\n".join(lines)


def polynomial(coeffs: Iterable[complex]) -> TaylorSeries:
    """Exact polynomial (tail bound zero)."""
    return TaylorSeries(np.asarray(list(coeffs), dtype=np.complex128))


def norm_sq(f: TaylorSeries, kind: NormKind) -> float:
    w = kind.weights(f.trunc_len)
    return float(np.real(np.vdot(f.coeffs * w, f.coeffs)))


def norm(f: TaylorSeries, kind: NormKind) -> float:
    return math.sqrt(norm_sq(f, kind))


def inner(f: TaylorSeries, g: TaylorSeries, kind: NormKind = NormKind.HARDY) -> complex:
    """Weighted coefficient pairing sum_k w_k f_k conj(g_k) over shared length."""
    L = min(f.trunc_len, g.trunc_len)
    w = kind.weights(L)
    return complex(np.sum(w * f.coeffs[:L] * np.conj(g.coeffs[:L])))


def differentiate(f: TaylorSeries) -> TaylorSeries:
    """Termwise derivative, c_k -> (k+1) c_{k+1}.

    The truncation length drops by one (minimum one); the tail bound is
    scaled by the input length, a conservative factor for the geometrically
    decaying series this laboratory produces.
    """
    L = f.trunc_len
    tail = f.tail_bound * L
    if L == 1:
        return TaylorSeries(np.zeros(1, dtype=np.complex128), tail)
    return TaylorSeries(f.coeffs[1:] * np.arange(1, L, dtype=np.float64), tail)


def evaluate(f: TaylorSeries, z: complex) -> complex:
    """Horner evaluation at a point of the closed unit disc."""
    z = complex(z)
    if abs(z) > 1.0 + _CIRCLE_SLACK:
        raise ValueError(f"evaluation point outside the closed unit disc: |z|={abs(z)}")
    return complex(np.polyval(f.coeffs[::-1], z))


def _l1(a: np.ndarray) -> float:
    return float(np.sum(np.abs(a)))


def multiply(f: TaylorSeries, g: TaylorSeries) -> TaylorSeries:
    """Cauchy product, truncated to the certified shared length.

    An exact polynomial factor (tail bound zero) behaves as zero-padded, so
    multiplying by a polynomial keeps the other factor's full length; two
    exact polynomials produce their exact product.  Otherwise coefficients
    beyond min(len f, len g) would involve unknown tail entries and are
    dropped, their mass folded into the tail bound via l1-l2 convolution
    estimates.
    """
    conv = np.convolve(f.coeffs, g.coeffs)
    f_poly = f.tail_bound == 0.0
    g_poly = g.tail_bound == 0.0
    if f_poly and g_poly:
        L = conv.size
    elif f_poly:
        L = g.trunc_len
    elif g_poly:
        L = f.trunc_len
    else:
        L = min(f.trunc_len, g.trunc_len)
    dropped = float(np.linalg.norm(conv[L:])) if L < conv.size else 0.0
    tail = (
        dropped
        + _l1(f.coeffs) * g.tail_bound
        + _l1(g.coeffs) * f.tail_bound
        + f.tail_bound * g.tail_bound
    )
    return TaylorSeries(conv[:L], tail)


def add(f: TaylorSeries, g: TaylorSeries) -> TaylorSeries:
    """Coefficientwise sum over the longer length; tail bounds add."""
    L = max(f.trunc_len, g.trunc_len)
    out = np.zeros(L, dtype=np.complex128)
    out[: f.trunc_len] += f.coeffs
    out[: g.trunc_len] += g.coeffs
    return TaylorSeries(out, f.tail_bound + g.tail_bound)


def scale(f: TaylorSeries, c: complex) -> TaylorSeries:
    return TaylorSeries(f.coeffs * complex(c), abs(c) * f.tail_bound)


def cauchy_kernel_series(lam: complex, N: int) -> TaylorSeries:
    """Reproducing kernel 1/(1 - conj(lam) z) truncated at degree N.

    Coefficients are conj(lam)^k; the discarded tail has l2-mass exactly
    |lam|^{N+1} / sqrt(1 - |lam|^2), which is stored as the tail bound.
    """
    lam = complex(lam)
    if abs(lam) >= 1.0:
        raise ValueError(f"kernel point must lie inside the open disc: |lam|={abs(lam)}")
    if N < 0:
        raise ValueError("truncation degree must be nonnegative")
    c = np.empty(N + 1, dtype=np.complex128)
    c[0] = 1.0
    if N > 0:
        c[1:] = np.cumprod(np.full(N, np.conj(lam), dtype=np.complex128))
    tail = abs(lam) ** (N + 1) / math.sqrt(1.0 - abs(lam) ** 2)
    return TaylorSeries(c, tail)


def blaschke_factor_series(lam: complex, N: int) -> TaylorSeries:
    """Taylor expansion of the disc automorphism b(z) = (lam - z)/(1 - conj(lam) z).

    b = lam - (1 - |lam|^2) sum_{k>=1} conj(lam)^{k-1} z^k; the tail bound
    |lam|^N sqrt(1 - |lam|^2) is exact, as for the kernel.
    """
    lam = complex(lam)
    if abs(lam) >= 1.0:
        raise ValueError(f"factor zero must lie inside the open disc: |lam|={abs(lam)}")
    if N < 0:
        raise ValueError("truncation degree must be nonnegative")
    one_minus = 1.0 - abs(lam) ** 2
    c = np.zeros(N + 1, dtype=np.complex128)
    c[0] = lam
    if N >= 1:
        c[1] = -one_minus
        if N >= 2:
            c[2:] = -one_minus * np.cumprod(
                np.full(N - 1, np.conj(lam), dtype=np.complex128)
            )
    tail = abs(lam) ** N * math.sqrt(one_minus)
    return TaylorSeries(c, tail)


def compose_with_blaschke_factor(f: TaylorSeries, lam: complex, N: int) -> TaylorSeries:
    """Taylor coefficients of f(b_lam(z)) to length N+1.

    Computed by Horner recursion in the truncated b_lam series, so each step
    is an ordinary truncated product and coefficients 0..N of the result are
    exact for polynomial input.  The propagated tail bound is capped by the
    norm-level estimate sqrt((1+|lam|)/(1-|lam|)) ||f||_Hardy, the composition
    operator bound on the Hardy space, which stays meaningful when the
    stepwise l1 estimates become pessimistic at high degree.
    """
    lam = complex(lam)
    if N < 0:
        raise ValueError("truncation degree must be nonnegative")
    b = blaschke_factor_series(lam, N)
    out = TaylorSeries(np.array([f.coeffs[-1]]), 0.0)
    for k in range(f.trunc_len - 2, -1, -1):
        out = multiply(out, b)
        if out.trunc_len > N + 1:
            out = TaylorSeries(out.coeffs[: N + 1], out.tail_bound)
        shifted = np.array(out.coeffs)
        shifted[0] += f.coeffs[k]
        out = TaylorSeries(shifted, out.tail_bound)
    rho = abs(lam)
    comp_bound = math.sqrt((1.0 + rho) / (1.0 - rho)) * (
        norm(f, NormKind.HARDY) + f.tail_bound
    )
    tail = min(out.tail_bound + f.tail_bound * math.sqrt((1.0 + rho) / (1.0 - rho)),
               comp_bound)
    if out.trunc_len < N + 1:
        padded = np.zeros(N + 1, dtype=np.complex128)
        padded[: out.trunc_len] = out.coeffs
        return TaylorSeries(padded, tail)
    return TaylorSeries(out.coeffs, tail)


def policy_truncation(n: int, radius: float) -> int:
    """Default truncation length exponent for n poles of max modulus ``radius``.

    A degree-n inner factor with zeros of modulus r carries Taylor mass up to
    index about n (1+r)/(1-r), the peak boundary phase velocity, plus a
    transition region of width a few n^(1/3)/(1-r); beyond that the
    coefficients decay geometrically with ratio r.  The returned N adds a
    geometric margin that pushes the certified tail below the 1e-14 scale, so
    orthonormality of the resulting bases certifies at the 1e-10 level.
    """
    if n < 1:
        raise ValueError("need at least one pole")
    if not 0.0 <= radius < 1.0:
        raise ValueError("radius must lie in [0, 1)")
    if radius == 0.0:
        return n + 2
    spread = math.ceil((n * (1.0 + radius) + 3.0 * n ** (1.0 / 3.0)) / (1.0 - radius))
    margin = math.ceil(math.log(1e-14 * (1.0 - radius)) / math.log(radius))
    return max(spread + margin, 64)
