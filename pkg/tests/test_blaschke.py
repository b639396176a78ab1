"""Tests for pole configurations, Malmquist bases and model-space projections."""

import numpy as np
import pytest

from mslab.blaschke import (
    PoleConfiguration,
    blaschke_factor_eval,
    blaschke_product_eval,
    malmquist_basis,
    malmquist_basis_auto,
    model_projection,
    multiplicity_groups,
    parse_sigma_spec,
)
from mslab.errors import CertificationError
from mslab.series import (
    NormKind,
    blaschke_factor_series,
    evaluate,
    multiply,
    norm,
    norm_sq,
    polynomial,
)


def _random_config(rng, n, max_r):
    rad = max_r * np.sqrt(rng.uniform(0.0, 1.0, size=n))
    ang = rng.uniform(0.0, 2.0 * np.pi, size=n)
    return PoleConfiguration(tuple(rad * np.exp(1j * ang)))


class TestPoleConfiguration:
    """Container invariants for the point multiset."""

    def test_rejects_boundary_points(self):
        """Points must lie strictly inside the disc."""
        with pytest.raises(ValueError):
            PoleConfiguration((1.0,))

    def test_rejects_empty(self):
        """At least one point is required."""
        with pytest.raises(ValueError):
            PoleConfiguration(())

    def test_one_point_repeats(self):
        """one_point builds n copies of the same value."""
        sig = PoleConfiguration.one_point(3, 0.5)
        assert sig.points == (0.5 + 0j,) * 3
        assert sig.n == 3 and sig.radius == 0.5

    def test_rotation_preserves_radius(self):
        """Rotating the configuration keeps all moduli."""
        sig = PoleConfiguration((0.3, 0.1 + 0.2j))
        rot = sig.rotated(1.1)
        np.testing.assert_allclose(rot.radius, sig.radius, rtol=1e-15)
        assert rot.n == sig.n

    def test_key_round_trips(self):
        """key() output parses back to the same points."""
        sig = PoleConfiguration((0.25 - 0.125j, -0.5 + 0j))
        (back,) = parse_sigma_spec(sig.key())
        np.testing.assert_allclose(back.points, sig.points, rtol=0, atol=0)


class TestBlaschkeEval:
    """Pointwise product values."""

    def test_vanishes_at_configuration_points(self):
        """B(lam_j) = 0 for every configuration point."""
        sig = PoleConfiguration((0.3, -0.2 + 0.4j, 0.1j))
        for p in sig.points:
            assert abs(blaschke_product_eval(sig, p)) < 1e-14

    def test_unimodular_on_circle(self):
        """|B| = 1 on the unit circle."""
        sig = PoleConfiguration((0.5, 0.2 - 0.3j))
        for t in np.linspace(0.0, 2.0 * np.pi, 17):
            z = complex(np.cos(t), np.sin(t))
            np.testing.assert_allclose(abs(blaschke_product_eval(sig, z)), 1.0, rtol=1e-12)

    def test_factor_is_involution(self):
        """b_lam(b_lam(z)) = z inside the disc."""
        lam, z = 0.4 + 0.1j, 0.2 - 0.6j
        np.testing.assert_allclose(
            blaschke_factor_eval(lam, blaschke_factor_eval(lam, z)), z, rtol=1e-14
        )

    def test_factor_rejects_outside_zero(self):
        """Factor zeros on or outside the circle are refused."""
        with pytest.raises(ValueError):
            blaschke_factor_eval(1.2, 0.0)


class TestMalmquistBasis:
    """Construction, certification and hand values of the orthonormal basis."""

    def test_origin_basis_is_signed_monomials(self):
        """At sigma = {0,...,0} the elements are (-z)^k up to stored padding."""
        sig = PoleConfiguration.one_point(3, 0.0)
        basis = malmquist_basis_auto(sig)
        for k, e in enumerate(basis.elements):
            expect = np.zeros(e.trunc_len, dtype=complex)
            expect[k] = (-1.0) ** k
            np.testing.assert_allclose(e.coeffs, expect, atol=1e-15)

    def test_first_element_is_normalized_kernel(self):
        """e_1 has coefficients sqrt(1-|lam|^2) conj(lam)^k."""
        lam = 0.4 + 0.3j
        sig = PoleConfiguration((lam, 0.2))
        basis = malmquist_basis_auto(sig)
        e1 = basis.elements[0]
        expect = np.sqrt(1.0 - abs(lam) ** 2) * np.conj(lam) ** np.arange(e1.trunc_len)
        np.testing.assert_allclose(e1.coeffs, expect, rtol=1e-13)

    def test_second_element_matches_pointwise_formula(self):
        """e_2 = b_{lam_1} times normalized kernel at lam_2, checked by evaluation."""
        a, b = 0.3 - 0.1j, -0.25 + 0.2j
        basis = malmquist_basis_auto(PoleConfiguration((a, b)))
        for z in (0.0, 0.4, -0.3j):
            direct = blaschke_factor_eval(a, z) * np.sqrt(1.0 - abs(b) ** 2) / (
                1.0 - np.conj(b) * z
            )
            np.testing.assert_allclose(evaluate(basis.elements[1], z), direct, atol=1e-12)

    def test_gram_is_identity(self):
        """Random configurations certify orthonormality at the tolerance."""
        rng = np.random.default_rng(42)
        for _ in range(25):
            sig = _random_config(rng, int(rng.integers(1, 9)), 0.8)
            basis = malmquist_basis_auto(sig)
            mat = basis.coefficient_matrix()
            gram = mat.conj().T @ mat
            np.testing.assert_allclose(gram, np.eye(sig.n), atol=1e-10)
            assert basis.ortho_defect <= 1e-10

    def test_short_truncation_refused(self):
        """A window shorter than the dimension cannot certify."""
        with pytest.raises(CertificationError):
            malmquist_basis(PoleConfiguration.one_point(4, 0.0), 3)

    def test_uncertifiable_truncation_raises(self):
        """A too-short window at positive radius fails the Gram certificate."""
        with pytest.raises(CertificationError):
            malmquist_basis(PoleConfiguration.one_point(6, 0.7), 8)

    def test_explicit_truncation_respected(self):
        """Passing trunc pins the stored length."""
        basis = malmquist_basis_auto(PoleConfiguration((0.5,)), trunc=96)
        assert basis.trunc_len == 97


class TestModelProjection:
    """Orthogonal projection onto the model space."""

    def test_reproduces_basis_elements(self):
        """P e_k = e_k on the stored window."""
        rng = np.random.default_rng(7)
        sig = _random_config(rng, 4, 0.6)
        basis = malmquist_basis_auto(sig)
        for e in basis.elements:
            proj = model_projection(e, basis)
            np.testing.assert_allclose(proj.coeffs, e.coeffs, atol=1e-10)

    def test_idempotent_and_contractive(self):
        """P^2 f = P f and the Hardy norm never grows."""
        rng = np.random.default_rng(19)
        sig = _random_config(rng, 5, 0.7)
        basis = malmquist_basis_auto(sig)
        f = polynomial(rng.normal(size=30) + 1j * rng.normal(size=30))
        pf = model_projection(f, basis)
        ppf = model_projection(pf, basis)
        np.testing.assert_allclose(ppf.coeffs, pf.coeffs, atol=1e-11)
        assert norm(pf, NormKind.HARDY) <= norm(f, NormKind.HARDY) + 1e-12

    def test_annihilates_multiples_of_the_product(self):
        """f = B g lies in the orthogonal complement, so P f vanishes."""
        rng = np.random.default_rng(3)
        sig = _random_config(rng, 3, 0.5)
        basis = malmquist_basis_auto(sig)
        N = basis.trunc_len - 1
        B = polynomial([1.0])
        for p in sig.points:
            B = multiply(B, blaschke_factor_series(p, N))
        g = polynomial(rng.normal(size=5) + 1j * rng.normal(size=5))
        f = multiply(B, g)
        proj = model_projection(f, basis)
        assert norm(proj, NormKind.HARDY) <= 1e-8 * max(1.0, norm(f, NormKind.HARDY))

    def test_pythagoras(self):
        """Hardy mass splits between the projection and the residual."""
        rng = np.random.default_rng(23)
        sig = _random_config(rng, 4, 0.6)
        basis = malmquist_basis_auto(sig)
        f = polynomial(rng.normal(size=basis.trunc_len))
        pf = model_projection(f, basis)
        res = np.zeros(basis.trunc_len, dtype=complex)
        res[: f.trunc_len] = f.coeffs
        res -= pf.coeffs
        lhs = norm_sq(f, NormKind.HARDY)
        rhs = norm_sq(pf, NormKind.HARDY) + float(np.vdot(res, res).real)
        np.testing.assert_allclose(lhs, rhs, rtol=1e-12)


class TestParseSigmaSpec:
    """Text grammar for configurations."""

    def test_explicit_points(self):
        """Semicolon-separated re,im pairs give a single configuration."""
        (sig,) = parse_sigma_spec("0.3,0;-0.2,0.1")
        assert sig.points == (0.3 + 0j, -0.2 + 0.1j)

    def test_one_point_form(self):
        """one-point:n=,r= repeats a real point."""
        (sig,) = parse_sigma_spec("one-point:n=4,r=0.5")
        assert sig.points == (0.5 + 0j,) * 4

    def test_random_form_is_seed_deterministic(self):
        """random:... with a fixed seed reproduces the same configurations."""
        a = parse_sigma_spec("random:n=3,r=0.6,count=5,seed=11")
        b = parse_sigma_spec("random:n=3,r=0.6,count=5,seed=11")
        assert len(a) == 5
        for x, y in zip(a, b):
            assert x.points == y.points
            assert x.radius <= 0.6

    def test_random_default_seed_argument(self):
        """Omitting seed falls back to the provided default."""
        a = parse_sigma_spec("random:n=2,r=0.4,count=3", default_seed=9)
        b = parse_sigma_spec("random:n=2,r=0.4,count=3,seed=9")
        for x, y in zip(a, b):
            assert x.points == y.points

    def test_malformed_specs_raise(self):
        """Bad grammar is a ValueError, not a silent guess."""
        for bad in ("", "0.3", "one-point:n=2", "random:n=2,r=0.5", "0.3,0;;0.1,0", "a,b"):
            with pytest.raises(ValueError):
                parse_sigma_spec(bad)

    def test_radius_bounds_enforced(self):
        """Radii at or beyond one are refused in the shorthand forms."""
        with pytest.raises(ValueError):
            parse_sigma_spec("one-point:n=2,r=1.0")


class TestMultiplicityGroups:
    """Grouping of repeated points."""

    def test_groups_preserve_order_and_count(self):
        """Repeated entries accumulate in first-occurrence order."""
        sig = PoleConfiguration((0.5, 0.2j, 0.5, 0.5))
        assert multiplicity_groups(sig) == [(0.5 + 0j, 3), (0.2j, 1)]

    def test_near_collision_rejected(self):
        """Distinct points closer than the resolution limit are an error."""
        sig = PoleConfiguration((0.5, 0.5 + 1e-9))
        with pytest.raises(CertificationError):
            multiplicity_groups(sig)
