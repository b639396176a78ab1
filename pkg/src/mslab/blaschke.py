"""Finite Blaschke products, Malmquist bases, and model-space projections.

A configuration sigma = (lam_1, ..., lam_n) of points of the open unit disc
determines the degree-n Blaschke product B = prod_j (lam_j - z)/(1 - conj(lam_j) z)
and the n-dimensional model space K_B, the orthogonal complement of B H^2 in
the Hardy space.  The Malmquist family

    e_1 = sqrt(1-|lam_1|^2) / (1 - conj(lam_1) z),
    e_k = b_{lam_1} ... b_{lam_{k-1}} sqrt(1-|lam_k|^2) / (1 - conj(lam_k) z),

is an orthonormal basis of K_B in the Hardy pairing, built here by iterated
truncated products of exact geometric series; the stored coefficients of each
element are the true Taylor coefficients, only the tail beyond the truncation
is missing.  Construction certifies orthonormality of the computed Gram
against the identity and refuses truncations too short to certify.

The orthogonal projection onto K_B expands against this basis in coefficient
space.  Everything is invariant under rotations of the disc up to unimodular
column phases, which downstream constants never see.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

import numpy as np

from .errors import CertificationError
from .series import (
    TaylorSeries,
    blaschke_factor_series,
    cauchy_kernel_series,
    multiply,
    policy_truncation,
    scale,
)

__all__ = [
    "PoleConfiguration",
    "MalmquistBasis",
    "blaschke_factor_eval",
    "blaschke_product_eval",
    "malmquist_basis",
    "malmquist_basis_auto",
    "model_projection",
    "parse_sigma_spec",
]

# Largest Gram deviation from the identity accepted as orthonormal.
ORTHO_TOL = 1e-10


@dataclass(frozen=True)
class PoleConfiguration:
    """Finite multiset of disc points defining a model space.

    Points are kept in the given order (multiplicities are simply repeated
    entries); the radius is the largest modulus.
    """

    points: tuple[complex, ...]

    def __post_init__(self) -> None:
        pts = tuple(complex(p) for p in self.points)
        if len(pts) == 0:
            raise ValueError("a configuration needs at least one point")
        for p in pts:
            if abs(p) >= 1.0:
                raise ValueError(f"configuration point outside the open disc: |{p}|={abs(p)}")
        object.__setattr__(self, "points", pts)

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def radius(self) -> float:
        return max(abs(p) for p in self.points)

    @classmethod
    def one_point(cls, n: int, lam: complex) -> "PoleConfiguration":
        if n < 1:
            raise ValueError("need n >= 1")
        return cls((complex(lam),) * n)

    def rotated(self, theta: float) -> "PoleConfiguration":
        w = complex(math.cos(theta), math.sin(theta))
        return PoleConfiguration(tuple(w * p for p in self.points))

    def key(self) -> str:
        """Canonical text form, parseable back by :func:`parse_sigma_spec`."""
        return ";".join(f"{p.real:.17g},{p.imag:.17g}" for p in self.points)


def blaschke_factor_eval(lam: complex, z: complex) -> complex:
    """Value of (lam - z)/(1 - conj(lam) z); involution of the disc."""
    lam, z = complex(lam), complex(z)
    if abs(lam) >= 1.0:
        raise ValueError(f"factor zero must lie inside the open disc: |lam|={abs(lam)}")
    den = 1.0 - np.conj(lam) * z
    if abs(den) < 1e-15:
        raise ValueError("evaluation at the pole of the factor")
    return complex((lam - z) / den)


def blaschke_product_eval(sigma: PoleConfiguration, z: complex) -> complex:
    out = complex(1.0)
    for p in sigma.points:
        out *= blaschke_factor_eval(p, z)
    return out


@dataclass(frozen=True)
class MalmquistBasis:
    """Orthonormal basis of the model space of a configuration.

    ``elements[k]`` holds the (k+1)-th Malmquist function; ``ortho_defect``
    is the certified max deviation of the Hardy Gram from the identity.
    """

    sigma: PoleConfiguration
    elements: tuple[TaylorSeries, ...]
    trunc_len: int
    ortho_defect: float

    def coefficient_matrix(self) -> np.ndarray:
        """Columns are the stored coefficient vectors, shape (trunc_len, n)."""
        return np.column_stack([e.coeffs for e in self.elements])


def _hardy_gram(matrix: np.ndarray) -> np.ndarray:
    return matrix.conj().T @ matrix


def malmquist_basis(sigma: PoleConfiguration, N: int) -> MalmquistBasis:
    """Build the Malmquist basis truncated at degree N and certify it.

    Raises
    ------
    CertificationError
        If the Hardy Gram of the truncated elements deviates from the
        identity by more than ``ORTHO_TOL`` in any entry, i.e. the truncation
        is too short to certify orthonormality.
    """
    if N + 1 <= sigma.n:
        raise CertificationError(
            f"truncation {N} cannot carry an {sigma.n}-dimensional space"
        )
    elements: list[TaylorSeries] = []
    prefix = TaylorSeries(np.ones(1, dtype=np.complex128))
    for j, lam in enumerate(sigma.points):
        unit_kernel = scale(
            cauchy_kernel_series(lam, N), math.sqrt(1.0 - abs(lam) ** 2)
        )
        e = multiply(prefix, unit_kernel)
        if e.trunc_len > N + 1:
            e = TaylorSeries(e.coeffs[: N + 1], e.tail_bound)
        elements.append(e)
        if j < sigma.n - 1:
            prefix = multiply(prefix, blaschke_factor_series(lam, N))
            if prefix.trunc_len > N + 1:
                prefix = TaylorSeries(prefix.coeffs[: N + 1], prefix.tail_bound)
    L = max(e.trunc_len for e in elements)
    mat = np.zeros((L, sigma.n), dtype=np.complex128)
    for k, e in enumerate(elements):
        mat[: e.trunc_len, k] = e.coeffs
    gram = _hardy_gram(mat)
    defect = float(np.max(np.abs(gram - np.eye(sigma.n))))
    if defect > ORTHO_TOL:
        raise CertificationError(
            f"truncation {N} too small to certify orthonormality "
            f"(Gram defect {defect:.3e} > {ORTHO_TOL:.0e})"
        )
    return MalmquistBasis(sigma, tuple(elements), L, defect)


def malmquist_basis_auto(
    sigma: PoleConfiguration, trunc: int | None = None
) -> MalmquistBasis:
    """Basis at the policy truncation, doubling up to twice if certification fails."""
    if trunc is not None:
        return malmquist_basis(sigma, trunc)
    N = policy_truncation(sigma.n, sigma.radius)
    last: CertificationError | None = None
    for _ in range(3):
        try:
            return malmquist_basis(sigma, N)
        except CertificationError as exc:
            last = exc
            N *= 2
    raise CertificationError(f"certification failed up to truncation {N // 2}: {last}")


def model_projection(f: TaylorSeries, basis: MalmquistBasis) -> TaylorSeries:
    """Orthogonal projection of f onto the model space, P f = sum (f, e_k) e_k.

    The pairing runs over coefficients shared with the basis truncation; the
    result's tail bound collects the elementwise tails weighted by the
    expansion coefficients plus the pairing error from f's own tail.
    """
    mat = basis.coefficient_matrix()
    L = min(f.trunc_len, mat.shape[0])
    coeffs = mat[:L].conj().T @ f.coeffs[:L]
    out = mat @ coeffs
    tail = float(
        sum(abs(c) * e.tail_bound for c, e in zip(coeffs, basis.elements))
        + f.tail_bound
    )
    return TaylorSeries(out, tail)


_ONE_POINT_RE = re.compile(r"^one-point:n=(\d+),r=([0-9.eE+-]+)$")
_RANDOM_RE = re.compile(
    r"^random:n=(\d+),r=([0-9.eE+-]+),count=(\d+)(?:,seed=(\d+))?$"
)


def parse_sigma_spec(text: str, default_seed: int = 0) -> list[PoleConfiguration]:
    """Parse a configuration spec string into one or more configurations.

    Grammar (documented in the CLI help as well):

    * explicit points: ``re,im;re,im;...`` e.g. ``0.3,0;-0.2,0.1``
    * repeated real point: ``one-point:n=<k>,r=<x>``
    * seeded samples, uniform in the disc of radius r:
      ``random:n=<k>,r=<x>,count=<m>[,seed=<s>]`` (seed defaults to
      ``default_seed``); expands to ``count`` configurations.
    """
    text = text.strip().replace("−", "-")
    if not text:
        raise ValueError("empty configuration spec")
    m = _ONE_POINT_RE.match(text)
    if m:
        n, r = int(m.group(1)), float(m.group(2))
        if not 0.0 <= r < 1.0:
            raise ValueError(f"one-point radius must lie in [0, 1): {r}")
        return [PoleConfiguration.one_point(n, r)]
    m = _RANDOM_RE.match(text)
    if m:
        n, r, count = int(m.group(1)), float(m.group(2)), int(m.group(3))
        seed = int(m.group(4)) if m.group(4) is not None else default_seed
        if not 0.0 <= r < 1.0:
            raise ValueError(f"random radius must lie in [0, 1): {r}")
        if count < 1:
            raise ValueError("random count must be positive")
        rng = np.random.default_rng(seed)
        configs = []
        for _ in range(count):
            rad = r * np.sqrt(rng.uniform(0.0, 1.0, size=n))
            ang = rng.uniform(0.0, 2.0 * np.pi, size=n)
            pts = rad * np.exp(1j * ang)
            configs.append(PoleConfiguration(tuple(complex(p) for p in pts)))
        return configs
    if text.startswith(("one-point:", "random:")):
        raise ValueError(f"malformed configuration spec: {text!r}")
    points = []
    for chunk in text.split(";"):
        parts = chunk.split(",")
        if len(parts) != 2:
            raise ValueError(f"expected 're,im' pair, got {chunk!r}")
        try:
            re_part, im_part = float(parts[0]), float(parts[1])
        except ValueError as exc:
            raise ValueError(f"bad number in configuration spec: {chunk!r}") from exc
        points.append(complex(re_part, im_part))
    return [PoleConfiguration(tuple(points))]


def multiplicity_groups(sigma: PoleConfiguration) -> list[tuple[complex, int]]:
    """Group equal points preserving first-occurrence order.

    Distinct points closer than 1e-8 are rejected: the constraint systems
    they produce are numerically indistinguishable from a multiplicity yet
    not treated as one.
    """
    groups: list[tuple[complex, int]] = []
    for p in sigma.points:
        for i, (q, m) in enumerate(groups):
            if p == q:
                groups[i] = (q, m + 1)
                break
            if abs(p - q) < 1e-8:
                raise CertificationError(
                    f"distinct points {p} and {q} closer than 1e-8; "
                    "merge them into a multiplicity instead"
                )
        else:
            groups.append((p, 1))
    return groups
