from __future__ import annotations

import json
import math
import random
from fractions import Fraction
from itertools import permutations

import pytest

from thetacalc.errors import DegenerateConfigError, DomainError
from thetacalc.power_duality import (
    PointConfig,
    SubsetIndex,
    det_exact,
    evaluate_sym_form,
    evaluation_covector,
    evaluation_matrix,
    incidence_form,
    monomial_exponents,
    multinomial,
    pair_wedge,
    subsets_colex,
    sym_duality_matrix,
    theta_vanishes,
    wedge_coefficients,
    wedge_duality_matrix,
)

MODEL3 = ((0, 0), (1, 0), (0, 1))
MODEL4 = ((0, 0), (1, 0), (0, 1), (1, 1))
MODEL6 = ((0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2))


def test_subsets_colex_order():
    assert subsets_colex(4, 2) == ((1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 4))
    assert subsets_colex(3, 0) == ((),)


def test_subset_index_validation():
    assert SubsetIndex(5, (1, 4)).complement == (2, 3, 5)
    with pytest.raises(DomainError):
        SubsetIndex(3, (2, 2))
    with pytest.raises(DomainError):
        SubsetIndex(3, (0, 1))


def test_wedge_matrix_two_one():
    m = wedge_duality_matrix(2, 1)
    assert m.entry_by_subsets((1,), (2,)) == 1
    assert m.entry_by_subsets((2,), (1,)) == -1
    assert m.entry_by_subsets((1,), (1,)) == 0


def test_wedge_matrix_three_one_signs():
    m = wedge_duality_matrix(3, 1)
    assert m.entry_by_subsets((1,), (2, 3)) == 1
    assert m.entry_by_subsets((2,), (1, 3)) == -1
    assert m.entry_by_subsets((3,), (1, 2)) == 1


def test_wedge_matrix_k_zero():
    for n in (1, 4, 7):
        m = wedge_duality_matrix(n, 0)
        assert m.dense() == [[1]]


def test_wedge_matrix_out_of_range():
    with pytest.raises(DomainError):
        wedge_duality_matrix(3, 4)
    with pytest.raises(DomainError):
        wedge_duality_matrix(3, -1)


@pytest.mark.parametrize("n", range(0, 9))
def test_wedge_determinant_agrees_with_dense(n):
    for k in range(n + 1):
        m = wedge_duality_matrix(n, k)
        assert m.determinant() in (-1, 1)
        assert det_exact(m.dense()) == m.determinant()


def test_wedge_transpose_sign_law_small():
    for n in range(1, 9):
        for k in range(n + 1):
            forward = wedge_duality_matrix(n, k)
            backward = wedge_duality_matrix(n, n - k)
            sign = (-1) ** (k * (n - k))
            back_rows = {s: i for i, s in enumerate(backward.rows)}
            for i, s in enumerate(forward.rows):
                comp = forward.cols[forward.row_to_col[i]]
                j = back_rows[comp]
                assert forward.signs[i] == sign * backward.signs[j]


def test_pair_wedge_examples():
    one = Fraction(1)
    alpha = [one, 0, 0]
    beta = [0, 0, one]  # e_{2,3} is last in colex among 2-subsets of {1,2,3}
    assert subsets_colex(3, 2) == ((1, 2), (1, 3), (2, 3))
    assert pair_wedge(3, 1, alpha, beta) == 1
    beta_repeat = [one, 0, 0]  # e_{1,2} shares the index 1 with e_1
    assert pair_wedge(3, 1, alpha, beta_repeat) == 0
    doubled = [2 * one, 0, 0]
    assert pair_wedge(3, 1, doubled, beta) == 2 * pair_wedge(3, 1, alpha, beta)
    with pytest.raises(DomainError):
        pair_wedge(3, 1, [one], beta)


def test_evaluation_covector_examples():
    assert evaluation_covector((Fraction(0), Fraction(0)), MODEL3) == (1, 0, 0)
    assert evaluation_covector((Fraction(1), Fraction(2)), MODEL3) == (1, 1, 2)
    assert evaluation_covector((Fraction(2), Fraction(0)), ((0, 0), (1, 0), (2, 0))) == (1, 2, 4)


def test_theta_vanishes_examples():
    z = [(Fraction(0), Fraction(0))]
    assert not theta_vanishes(z, [(Fraction(1), Fraction(0)), (Fraction(0), Fraction(1))], MODEL3)
    assert theta_vanishes(z, [(Fraction(1), Fraction(1)), (Fraction(2), Fraction(2))], MODEL3)
    vandermonde = [(Fraction(0), Fraction(5))], [(Fraction(1), Fraction(7))]
    assert not theta_vanishes(*vandermonde, ((0, 0), (1, 0)))
    with pytest.raises(DegenerateConfigError):
        theta_vanishes([(Fraction(1), Fraction(1))], [(Fraction(1), Fraction(1))], ((0, 0), (1, 0)))
    with pytest.raises(DomainError):
        theta_vanishes(z, [], MODEL3)


def _random_point(rng: random.Random):
    return (
        Fraction(rng.randint(-9, 9), rng.randint(1, 3)),
        Fraction(rng.randint(-9, 9), rng.randint(1, 3)),
    )


def _distinct_points(rng: random.Random, count: int):
    points = set()
    while len(points) < count:
        points.add(_random_point(rng))
    return sorted(points)


def _pairing_data(z_points, w_points, model):
    n = len(model)
    k = len(z_points)
    rows = evaluation_matrix(list(z_points) + list(w_points), model)
    alpha = wedge_coefficients(rows[:k], n, k)
    beta = wedge_coefficients(rows[k:], n, n - k)
    return det_exact(rows), pair_wedge(n, k, alpha, beta)


@pytest.mark.parametrize(
    "model,k",
    [(MODEL3, 1), (MODEL3, 2), (MODEL4, 1), (MODEL4, 2), (MODEL6, 2), (MODEL6, 3)],
)
def test_determinant_equals_wedge_pairing(model, k):
    rng = random.Random(len(model) * 31)
    n = len(model)
    for _ in range(60):
        points = _distinct_points(rng, n)
        det, pairing = _pairing_data(points[:k], points[k:], model)
        assert det == pairing
        assert theta_vanishes(points[:k], points[k:], model) == (pairing == 0)


def test_vanishing_configurations_detected():
    rng = random.Random(2024)
    # three collinear points kill a linear section
    slope, intercept = Fraction(2, 3), Fraction(1, 5)
    xs = (Fraction(0), Fraction(1), Fraction(2))
    line = [(x, slope * x + intercept) for x in xs]
    assert theta_vanishes(line[:1], line[1:], MODEL3)
    det, pairing = _pairing_data(line[:1], line[1:], MODEL3)
    assert det == pairing == 0
    # (x-a)(y-b) lies in the span of MODEL4 and kills an axis-aligned cross
    a, b = Fraction(1), Fraction(-2)
    cross = [(a, Fraction(0)), (a, Fraction(3)), (Fraction(5), b), (Fraction(-1), b)]
    assert theta_vanishes(cross[:2], cross[2:], MODEL4)
    # six points on a degenerate conic (two lines) kill a quadratic section
    lines = []
    for s, c in ((Fraction(1), Fraction(0)), (Fraction(-1, 2), Fraction(3))):
        for x in rng.sample(range(-5, 6), 3):
            lines.append((Fraction(x), s * x + c))
    assert len(set(lines)) == 6
    assert theta_vanishes(lines[:3], lines[3:], MODEL6)


def test_vanishing_invariant_under_basis_change():
    rng = random.Random(77)
    n = 4
    for _ in range(40):
        points = _distinct_points(rng, n)
        rows = evaluation_matrix(points, MODEL4)
        base_det = det_exact(rows)
        while True:
            basis = [[Fraction(rng.randint(-3, 3)) for _ in range(n)] for _ in range(n)]
            change = det_exact(basis)
            if change != 0:
                break
        mixed = [
            [sum(row[i] * basis[i][j] for i in range(n)) for j in range(n)]
            for row in rows
        ]
        assert det_exact(mixed) == base_det * change
        assert (det_exact(mixed) == 0) == (base_det == 0)


def test_monomial_exponents_order():
    assert monomial_exponents(2, 2) == ((2, 0), (1, 1), (0, 2))
    assert monomial_exponents(3, 1) == ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    assert monomial_exponents(1, 5) == ((5,),)


def test_multinomial_against_permutation_count():
    for alpha in ((2, 0), (1, 1), (2, 1), (1, 1, 1), (3, 1), (2, 2)):
        letters = []
        for symbol, count in enumerate(alpha):
            letters += [symbol] * count
        assert multinomial(alpha) == len(set(permutations(letters)))


def test_sym_duality_matrix_examples():
    assert sym_duality_matrix(1, 4).dense() == [[1]]
    assert sym_duality_matrix(2, 1).dense() == [[1, 0], [0, 1]]
    assert sym_duality_matrix(2, 2).diagonal == (1, 2, 1)
    assert sym_duality_matrix(2, 2).monomials == ((2, 0), (1, 1), (0, 2))
    with pytest.raises(DomainError):
        sym_duality_matrix(0, 1)


def test_sym_duality_matrix_full_rank():
    for w_dim in range(1, 5):
        for n in range(1, 5):
            matrix = sym_duality_matrix(w_dim, n)
            assert matrix.size == math.comb(w_dim + n - 1, n)
            assert matrix.full_rank
            assert det_exact(matrix.dense()) != 0


def test_incidence_form_examples():
    point = (Fraction(3), Fraction(4))
    assert incidence_form([point], MODEL3) == evaluation_covector(point, MODEL3)
    two = incidence_form([(Fraction(1), Fraction(0)), (Fraction(2), Fraction(0))], ((0, 0), (1, 0)))
    assert two == (1, 3, 2)  # (a + b)(a + 2b) = a^2 + 3ab + 2b^2
    # every model section vanishes at the origin, so the form is identically zero
    killing = incidence_form([(Fraction(0), Fraction(0)), (Fraction(1), Fraction(1))], ((1, 0), (0, 1)))
    for t in ((1, 0), (0, 1), (3, -2)):
        assert evaluate_sym_form(killing, 2, 2, t) == 0


def test_incidence_form_evaluation_contract():
    rng = random.Random(13)
    for model in (MODEL3, MODEL4):
        for _ in range(40):
            points = _distinct_points(rng, 3)
            coeffs = incidence_form(points, model)
            t = [Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in model]
            expected = math.prod(
                sum(tc * val for tc, val in zip(t, evaluation_covector(p, model)))
                for p in points
            )
            assert evaluate_sym_form(coeffs, len(model), len(points), t) == expected


def test_wedge_json_export_layout():
    m = wedge_duality_matrix(3, 1)
    data = m.to_json_dict()
    assert data == {
        "n": 3,
        "k": 1,
        "index_order": "colex",
        "entries": [[0, 2, 1], [1, 1, -1], [2, 0, 1]],
    }
    json.dumps(data)


def test_point_config_parsing():
    config = PointConfig.from_json_dict(
        {"model": [[0, 0], [1, 0]], "points": [["1/2", 3], [-1, "2/7"]]}
    )
    assert config.section_model == ((0, 0), (1, 0))
    assert config.points == ((Fraction(1, 2), Fraction(3)), (Fraction(-1), Fraction(2, 7)))
