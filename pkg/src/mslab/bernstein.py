"""Derivative-operator constants on model spaces, with bound envelopes.

For a configuration sigma the constant of interest is the norm of
differentiation from the model space (Hardy norm on the source) into either
the Bergman or the Hardy space,

    C(sigma, target) = sup { ||f'||_target : f in K_B, ||f||_Hardy <= 1 }.

Since the Malmquist basis is orthonormal in the Hardy pairing, the square of
this constant is exactly the top eigenvalue of the target-weighted Gram of
the differentiated basis, so the computed value is the constant of the
finite-dimensional operator itself, not an estimate.  The closed-form
envelopes bracketing the one-point family, the growth comparison for the
Hardy target, the audit of a closed form that fails numerically, and the
test-function scaffolding used to prove the envelopes are all collected
here, each evaluated by at least two independent routes in the test suite.

The supremum over all configurations of fixed size and radius is not
attained at any known finite candidate set; :func:`sup_constant_search`
produces certified lower bounds for it from one-point plus seeded random
candidates and coordinate-wise refinement of the best.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .blaschke import MalmquistBasis, PoleConfiguration, malmquist_basis_auto
from .hermitian import gram_matrix, max_eigenpair
from .series import (
    NormKind,
    TaylorSeries,
    add,
    differentiate,
    norm,
    norm_sq,
    polynomial,
    scale,
)

__all__ = [
    "BernsteinResult",
    "BoundEnvelope",
    "bernstein_constant_sigma",
    "constant_from_basis",
    "eq4_envelope",
    "z2_upper_hardy",
    "EnPrimeAudit",
    "en_prime_bergman_audit",
    "step2_test_function",
    "default_alternation_depth",
    "Step2Report",
    "step2_expansion_check",
    "RatioRow",
    "asymptotic_ratio_sweep",
    "sup_constant_search",
]


@dataclass(frozen=True)
class BoundEnvelope:
    """Closed-form bracket [lower, upper] tagged by the formula it came from."""

    lower: float | None
    upper: float | None
    formula_id: str

    def __post_init__(self) -> None:
        if self.lower is not None and self.upper is not None:
            if self.lower > self.upper + 1e-12:
                raise ValueError(
                    f"envelope {self.formula_id} inverted: {self.lower} > {self.upper}"
                )


@dataclass(frozen=True)
class BernsteinResult:
    """Computed constant with extremal witness and truncation diagnostics."""

    sigma: PoleConfiguration
    target: NormKind
    constant: float
    extremal: np.ndarray
    trunc_len: int
    residual: float


def _check_target(target: NormKind) -> None:
    if target not in (NormKind.BERGMAN, NormKind.HARDY):
        raise ValueError(f"target must be Bergman or Hardy, got {target}")


def constant_from_basis(basis: MalmquistBasis, target: NormKind) -> BernsteinResult:
    """Constant of differentiation on an already-built basis."""
    _check_target(target)
    derivs = [differentiate(e) for e in basis.elements]
    gram = gram_matrix(derivs, target)
    pair = max_eigenpair(gram)
    constant = math.sqrt(max(pair.value, 0.0))
    vec = np.array(pair.vector)
    vec.setflags(write=False)
    return BernsteinResult(
        basis.sigma, target, constant, vec, basis.trunc_len, pair.residual
    )


def bernstein_constant_sigma(
    sigma: PoleConfiguration, target: NormKind, trunc: int | None = None
) -> BernsteinResult:
    """Exact norm of differentiation on the model space of ``sigma``."""
    _check_target(target)
    basis = malmquist_basis_auto(sigma, trunc)
    return constant_from_basis(basis, target)


def eq4_envelope(n: int, r: float) -> BoundEnvelope:
    """Two-sided envelope for the one-point family, Bergman target.

    Both ends scale like sqrt(n/(1-r)); the lower end is an audited quantity
    (see :func:`en_prime_bergman_audit`) and is published as informational
    rather than bracket-checked.
    """
    if n < 1 or not 0.0 <= r < 1.0:
        raise ValueError("need n >= 1 and r in [0, 1)")
    scale_factor = math.sqrt(n / (1.0 - r))
    lower = math.sqrt(max(1.0 - (1.0 - r) / n, 0.0)) * scale_factor
    upper = math.sqrt(1.0 + r + 1.0 / math.sqrt(n)) * scale_factor
    return BoundEnvelope(lower, upper, "eq4")


def z2_upper_hardy(n: int, r: float) -> float:
    """Upper bound for the Hardy-target constant over all configurations
    of n points with radius at most r."""
    if n < 1 or not 0.0 <= r < 1.0:
        raise ValueError("need n >= 1 and r in [0, 1)")
    return (1.0 + r + 1.0 / math.sqrt(n)) * n / (1.0 - r)


@dataclass(frozen=True)
class EnPrimeAudit:
    """Audit of the closed form claimed for the squared Bergman norm of the
    last one-point Malmquist element's derivative.

    ``numeric_sq`` is the coefficient-pipeline value, ``quadrature_sq`` the
    integral-oracle value of the same quantity, and ``closed_form_sq`` the
    published formula n/(1-r) (1 - (1-r)/n).  The discrepancy
    (numeric - closed form) is reported, never reconciled: the two agree at
    r = 0 and split for r > 0.
    """

    n: int
    r: float
    numeric_sq: float
    quadrature_sq: float
    closed_form_sq: float
    trunc_len: int

    @property
    def discrepancy(self) -> float:
        return self.numeric_sq - self.closed_form_sq


def en_prime_bergman_audit(n: int, r: float, trunc: int | None = None) -> EnPrimeAudit:
    from .quadrature import DiscQuadrature, bergman_norm_quadrature

    if n < 1 or not 0.0 <= r < 1.0:
        raise ValueError("need n >= 1 and r in [0, 1)")
    basis = malmquist_basis_auto(PoleConfiguration.one_point(n, r), trunc)
    deriv = differentiate(basis.elements[-1])
    numeric = norm_sq(deriv, NormKind.BERGMAN)
    quad = bergman_norm_quadrature(
        deriv, DiscQuadrature.for_degree(deriv.trunc_len - 1)
    )
    closed = n / (1.0 - r) * (1.0 - (1.0 - r) / n)
    return EnPrimeAudit(n, r, numeric, quad, closed, basis.trunc_len)


def default_alternation_depth(n: int) -> int:
    """Even depth s = 2 floor(sqrt(n)/2) used by the growth test function."""
    return 2 * (int(math.isqrt(n)) // 2)


def step2_test_function(
    n: int, r: float, s: int, trunc: int | None = None
) -> TaylorSeries:
    """Alternating tail sum f = sum_{k=0}^{s+2} (-1)^k e_{n-k} on the
    one-point space; its squared Hardy norm is s + 3 by orthonormality."""
    if s < 0 or s % 2 != 0:
        raise ValueError("alternation depth must be even and nonnegative")
    if s + 2 >= n:
        raise ValueError(f"depth {s} underflows the basis of dimension {n}")
    basis = malmquist_basis_auto(PoleConfiguration.one_point(n, r), trunc)
    out = basis.elements[n - 1]
    for k in range(1, s + 3):
        out = add(out, scale(basis.elements[n - k - 1], (-1.0) ** k))
    return out


@dataclass(frozen=True)
class Step2Report:
    """Numerical verification of the derivative-norm expansion on the
    one-point space.

    For f = sum a_k e_k the derivative pulls back under the disc
    automorphism to (A - B)/sqrt(1-r^2) with

        A(v) = (1 - r v) sum_{k=0}^{n-2} (k+1) a_{k+2} v^k,
        B(v) = r sum_{k=0}^{n-1} a_{k+1} v^k,

    so that ||f'||_Bergman = ||A - B||_Bergman / sqrt(1-r^2) exactly
    (``identity_gap`` measures this in floating point).  ``lhs17`` is the
    Bergman square of A computed from the assembled polynomial; ``rhs17``
    re-evaluates it termwise,

        |a_2|^2 + |2 a_3 - r a_2|^2 / 2
        + sum_{k=2}^{n-2} |(k+1) a_{k+2} - r k a_{k+1}|^2 / (k+1)
        + r^2 (n-1)^2 |a_n|^2 / n,

    the k = 1 and k = n-1 terms present only when the indices exist.
    ``eq18`` bounds ||B|| by r ||f||_Hardy, and the sandwich
    ``eq16_lower <= eq16_mid <= eq16_upper`` is the triangle inequality
    applied to (A - B) after normalizing by ||f|| sqrt(n (1+r)).
    """

    n: int
    r: float
    lhs17: float
    rhs17: float
    identity_gap: float
    eq18_norm: float
    eq18_bound: float
    eq16_lower: float
    eq16_mid: float
    eq16_upper: float

    @property
    def gap17(self) -> float:
        return abs(self.lhs17 - self.rhs17)

    @property
    def eq18_slack(self) -> float:
        return self.eq18_bound - self.eq18_norm

    def ok(self, tol: float = 1e-9) -> bool:
        scale17 = max(1.0, abs(self.lhs17))
        return (
            self.gap17 <= tol * scale17
            and self.eq18_slack >= -tol
            and self.eq16_lower <= self.eq16_mid + tol
            and self.eq16_mid <= self.eq16_upper + tol
        )


def step2_expansion_check(
    n: int, r: float, coords: Sequence[complex], trunc: int | None = None
) -> Step2Report:
    """Evaluate both sides of the derivative-norm expansion for
    f = sum coords[k] e_{k+1} on the one-point space at radius r."""
    a = np.asarray(coords, dtype=np.complex128)
    if a.shape != (n,):
        raise ValueError(f"need exactly n = {n} coordinates")
    if n < 2:
        raise ValueError("the expansion needs n >= 2")
    if not 0.0 <= r < 1.0:
        raise ValueError("need r in [0, 1)")

    # A(v) and B(v) in the automorphism variable; exact polynomials.
    g_deriv = polynomial(np.arange(1, n, dtype=np.float64) * a[1:])
    A = polynomial(np.convolve([1.0, -r], g_deriv.coeffs))
    B = polynomial(r * a)
    lhs17 = norm_sq(A, NormKind.BERGMAN)

    rhs17 = abs(a[1]) ** 2
    if n >= 3:
        rhs17 += abs(2.0 * a[2] - r * a[1]) ** 2 / 2.0
    for k in range(2, n - 1):
        rhs17 += abs((k + 1) * a[k + 1] - r * k * a[k]) ** 2 / (k + 1)
    rhs17 += r**2 * (n - 1) ** 2 * abs(a[n - 1]) ** 2 / n

    f_norm = float(np.linalg.norm(a))
    eq18_norm = norm(B, NormKind.BERGMAN)
    eq18_bound = r * f_norm

    basis = malmquist_basis_auto(PoleConfiguration.one_point(n, r), trunc)
    f = basis.elements[0]
    f = scale(f, a[0])
    for k in range(1, n):
        f = add(f, scale(basis.elements[k], a[k]))
    fprime_bergman = norm(differentiate(f), NormKind.BERGMAN)
    diff = add(A, scale(B, -1.0))
    identity_gap = abs(
        fprime_bergman - norm(diff, NormKind.BERGMAN) / math.sqrt(1.0 - r**2)
    )

    kappa = 1.0 / (f_norm * math.sqrt(n * (1.0 + r)))
    normA = math.sqrt(lhs17)
    eq16_lower = kappa * (normA - eq18_norm)
    eq16_mid = math.sqrt((1.0 - r) / n) * fprime_bergman / f_norm
    eq16_upper = kappa * (normA + eq18_norm)

    return Step2Report(
        n,
        r,
        lhs17,
        rhs17,
        identity_gap,
        eq18_norm,
        eq18_bound,
        eq16_lower,
        eq16_mid,
        eq16_upper,
    )


@dataclass(frozen=True)
class RatioRow:
    """One row of a growth sweep: constant against its predicted scale."""

    n: int
    r: float
    target: NormKind
    constant: float
    ratio: float
    limit: float

    @property
    def gap(self) -> float:
        return self.limit - self.ratio


def asymptotic_ratio_sweep(
    r: float, n_list: Sequence[int], target: NormKind, trunc: int | None = None
) -> list[RatioRow]:
    """One-point constants against their growth laws.

    Bergman target: C / sqrt(n) against sqrt((1+r)/(1-r)).
    Hardy target:   C / n       against (1+r)/(1-r).
    """
    _check_target(target)
    rows = []
    for n in n_list:
        res = bernstein_constant_sigma(PoleConfiguration.one_point(n, r), target, trunc)
        if target is NormKind.BERGMAN:
            ratio = res.constant / math.sqrt(n)
            limit = math.sqrt((1.0 + r) / (1.0 - r))
        else:
            ratio = res.constant / n
            limit = (1.0 + r) / (1.0 - r)
        rows.append(RatioRow(n, r, target, res.constant, ratio, limit))
    return rows


def _refine(
    sigma: PoleConfiguration, target: NormKind, radius_cap: float, best: float
) -> tuple[PoleConfiguration, float]:
    """Coordinate-wise greedy refinement within the closed disc of the cap."""
    pts = list(sigma.points)
    value = best
    for step in (radius_cap / 8.0, radius_cap / 32.0, radius_cap / 128.0):
        if step == 0.0:
            break
        improved = True
        while improved:
            improved = False
            for i in range(len(pts)):
                for delta in (step, -step, 1j * step, -1j * step):
                    cand = pts[i] + delta
                    if abs(cand) > radius_cap:
                        continue
                    trial_pts = list(pts)
                    trial_pts[i] = cand
                    trial = PoleConfiguration(tuple(trial_pts))
                    trial_value = bernstein_constant_sigma(trial, target).constant
                    if trial_value > value + 1e-12:
                        pts, value, improved = trial_pts, trial_value, True
    return PoleConfiguration(tuple(pts)), value


def sup_constant_search(
    n: int,
    r: float,
    target: NormKind,
    count: int = 10,
    seed: int = 0,
    refine: bool = True,
) -> tuple[list[BernsteinResult], BernsteinResult]:
    """Lower-bound search for the supremum over configurations of size n and
    radius at most r.

    Candidates are the one-point configuration at radius r plus ``count``
    seeded uniform-in-disc samples; the best is then refined coordinate-wise.
    Returns (per-candidate results, refined best).  Only ever a lower bound:
    attainment of the supremum is an open question this laboratory does not
    decide.
    """
    _check_target(target)
    if r == 0.0:
        one = bernstein_constant_sigma(PoleConfiguration.one_point(n, 0.0), target)
        return [one], one
    rng = np.random.default_rng(seed)
    candidates = [PoleConfiguration.one_point(n, r)]
    for _ in range(count):
        rad = r * np.sqrt(rng.uniform(0.0, 1.0, size=n))
        ang = rng.uniform(0.0, 2.0 * np.pi, size=n)
        candidates.append(
            PoleConfiguration(tuple(complex(p) for p in rad * np.exp(1j * ang)))
        )
    results = [bernstein_constant_sigma(sig, target) for sig in candidates]
    best = max(range(len(results)), key=lambda i: results[i].constant)
    if not refine:
        return results, results[best]
    refined_sigma, _ = _refine(
        candidates[best], target, r, results[best].constant
    )
    return results, bernstein_constant_sigma(refined_sigma, target)
