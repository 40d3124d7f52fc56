from __future__ import annotations

import math

import pytest

from thetacalc.elliptic_k3 import (
    EllipticPair,
    chi_of_vector,
    chi_pair,
    compute_nu,
    elliptic_lattice,
    normalize_vector,
    normalized_vector,
    ns_class,
    strange_duality_dims,
    tautological_line_bundle,
    theta_bundle_class,
)
from thetacalc.errors import DivisibilityError, DomainError, NuTooWeakError
from thetacalc.mukai import mukai_pairing


def test_lattice_shape():
    lattice = elliptic_lattice()
    assert lattice.gram == ((-2, 1), (1, 0))
    sigma, fiber = ns_class(1, 0), ns_class(0, 1)
    assert sigma.dot(sigma) == -2
    assert fiber.dot(fiber) == 0
    assert sigma.dot(fiber) == 1


def test_normalize_already_normalized():
    vector, twists = normalize_vector(2, 3, -1)
    assert twists == 0
    assert vector.a == 5
    assert mukai_pairing(vector.vector, vector.vector) == 8


def test_normalize_rank_one_is_ideal_sheaf_twist():
    vector, twists = normalize_vector(1, 7, 0)
    assert twists == 0
    assert vector.a == 7
    assert vector.vector.rank == 1
    assert vector.vector.c1.coords == (1, 7)
    assert vector.vector.point == 0


def test_normalize_with_down_twist():
    # one down-twist reaches chi = 1; the half-dimension is twist-invariant
    vector, twists = normalize_vector(2, 2, 0)
    assert twists == -1
    assert vector.a == 2
    assert mukai_pairing(vector.vector, vector.vector) == 2 * vector.a - 2


def test_normalize_with_up_twists():
    vector, twists = normalize_vector(3, 4, -5)
    assert twists == 3
    assert vector.a == 4 + 15
    assert chi_of_vector(vector.vector) == 1


def test_normalized_vector_pairing_grid():
    for r in range(1, 7):
        for a in range(1, 41):
            vector = normalized_vector(r, a).vector
            assert mukai_pairing(vector, vector) == 2 * a - 2
            assert vector.c1.dot(ns_class(0, 1)) == 1
            assert chi_of_vector(vector) == 1


def test_compute_nu_examples():
    result = compute_nu(2, 3, 12, 15)
    assert result.nu == -2 and result.divisible and result.nu_strong
    result = compute_nu(2, 2, 5, 5)
    assert result.nu == 0 and not result.nu_strong
    with pytest.raises(DivisibilityError) as info:
        compute_nu(2, 2, 10, 10)
    assert str(info.value) == "divisibility: 4 does not divide 18"


def test_chi_pair_examples():
    assert chi_pair(2, 3, 12, 15) == 10
    assert chi_pair(2, 2, 5, 5) == 0
    assert chi_pair(1, 1, 1, 1) == 0


def test_chi_pair_nu_consistency():
    for r in range(1, 5):
        for s in range(1, 5):
            total = r + s
            for m in range(1, 12):
                a_plus_b = m * total + 2
                a = max(1, a_plus_b // 2)
                b = a_plus_b - a
                if b < 1:
                    continue
                nu = compute_nu(r, s, a, b).nu
                assert chi_pair(r, s, a, b) + nu * total == 0


def test_theta_class_frozen_case():
    theta = theta_bundle_class(2, 3, 12, 15)
    assert theta.L.coords == (5, 10)
    assert theta.chi == 27
    assert theta.m_exponent == 1
    assert theta.hilb_points == 12


def test_theta_class_second_case():
    # nu = (4-2) - 16/4 = -2, so L = 4s + 8f and chi(L) = 18 = a+b
    theta = theta_bundle_class(2, 2, 9, 9)
    assert compute_nu(2, 2, 9, 9).nu == -2
    assert theta.L.coords == (4, 8)
    assert theta.chi == 18


def test_theta_class_requires_rank_two():
    with pytest.raises(DomainError):
        theta_bundle_class(1, 4, 12, 15)
    with pytest.raises(DivisibilityError):
        theta_bundle_class(2, 2, 10, 10)


def test_dims_frozen_case():
    dims = strange_duality_dims(2, 3, 12, 15)
    assert dims.dim_a == dims.dim_b == math.comb(27, 12) == 17383860
    assert dims.equal
    assert dims.corollary_applies  # boundary: <v,v> + <w,w> = 50 = 2*(r+s)^2


def test_dims_weak_nu_rejected():
    with pytest.raises(NuTooWeakError):
        strange_duality_dims(2, 2, 5, 5)  # nu = 0


def test_dims_balanced_case():
    dims = strange_duality_dims(3, 3, 19, 19)
    assert compute_nu(3, 3, 19, 19).nu == -2
    assert dims.dim_a == math.comb(38, 19)
    assert dims.equal


def test_dims_rank_one_partner_excluded_from_corollary():
    dims = strange_duality_dims(2, 1, 5, 6)  # nu = 1 - 9/3 = -2
    assert dims.dim_a == dims.dim_b == math.comb(11, 5)
    assert dims.equal
    assert not dims.corollary_applies  # needs both ranks >= 2


def test_chi_identity_and_dims_on_grid():
    for r in range(2, 8):
        for s in range(1, 8 - r + 1):
            total = r + s
            for a_plus_b in range(total + 2, 81, total):
                if (a_plus_b - 2) % total:
                    continue
                a = a_plus_b // 2
                b = a_plus_b - a
                if a < 1 or b < 1:
                    continue
                theta = theta_bundle_class(r, s, a, b)
                assert theta.chi == a + b
                nu = compute_nu(r, s, a, b).nu
                if nu < -1:
                    dims = strange_duality_dims(r, s, a, b)
                    assert dims.dim_a == dims.dim_b
                else:
                    with pytest.raises(NuTooWeakError):
                        strange_duality_dims(r, s, a, b)


def test_strength_condition_equivalences():
    for r in range(1, 7):
        for s in range(1, 7):
            total = r + s
            for m in range(1, 16):
                a_plus_b = m * total + 2
                a = a_plus_b // 2
                b = a_plus_b - a
                if a < 1 or b < 1:
                    continue
                result = compute_nu(r, s, a, b)
                strong = -result.nu > 1
                assert strong == (a + b >= total**2 + 2)
                pairing_sum = (2 * a - 2) + (2 * b - 2)
                assert strong == (pairing_sum >= 2 * total**2)
                assert result.nu_strong == strong


def test_tautological_line_bundle():
    divisor = ns_class(2, 5)
    rank0 = tautological_line_bundle(0, divisor, 3)
    assert rank0.ns_part == divisor and rank0.m_exponent == 0
    exceptional = tautological_line_bundle(1, ns_class(0, 0), 2)
    assert exceptional.ns_part.is_zero and exceptional.m_exponent == 1
    # only determinant and rank matter, so twisting by an ideal sheaf changes nothing
    assert tautological_line_bundle(2, divisor, 4) == tautological_line_bundle(2, divisor, 4)
    with pytest.raises(DomainError):
        tautological_line_bundle(1, divisor, 0)


def test_elliptic_pair_builder():
    pair = EllipticPair.build(2, 3, 12, 15)
    assert pair.nu == -2
    assert pair.L.coords == (5, 10)
    assert pair.chi_L == 27
    assert pair.predicted_dims == (17383860, 17383860)
    with pytest.raises(DivisibilityError):
        EllipticPair.build(2, 2, 10, 10)
