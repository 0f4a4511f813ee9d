"""Correction matrix, sign calibration, and the closed index formula."""

import numpy as np
import pytest

from symindex import (
    HalfInt,
    PUBLISHED_SIGN,
    calibrate_sign,
    correction_matrix,
    correction_sign,
    fundamental_solution,
    make_system,
    maslov_via_formula,
    plane_block_generator,
    standard_J,
    transversality_H,
    triple_index_cross_check,
    triple_routes_from,
    validate,
)
from symindex.autonomous import split_blocks
from symindex.errors import (
    NotHamiltonian,
    NotSymplectic,
    OddDimension,
    TransversalityViolated,
)
from symindex.halfint import ZERO
from symindex.symplectic import random_symplectic


def test_make_system_validation():
    with pytest.raises(OddDimension):
        make_system(np.zeros((3, 3)))
    with pytest.raises(NotHamiltonian):
        make_system(np.eye(2))


def test_fundamental_solution_is_symplectic_flow():
    h = plane_block_generator([("elliptic", 2.0), ("hyperbolic", 0.7)])
    system = make_system(h)
    j = standard_J(2)
    for t in (0.0, 0.31, 1.0):
        psi = system.psi(t)
        np.testing.assert_allclose(psi.T @ j @ psi, j, atol=1e-10)
    np.testing.assert_allclose(fundamental_solution(h, 1.0), system.psi(1.0), atol=0)


def test_block_split():
    m = np.arange(16.0).reshape(4, 4)
    a, b, c, d = split_blocks(m)
    np.testing.assert_array_equal(a, [[0.0, 1.0], [4.0, 5.0]])
    np.testing.assert_array_equal(b, [[2.0, 3.0], [6.0, 7.0]])
    np.testing.assert_array_equal(c, [[8.0, 9.0], [12.0, 13.0]])
    np.testing.assert_array_equal(d, [[10.0, 11.0], [14.0, 15.0]])


def test_rotation_correction_matrix_closed_form():
    # for a single rotating plane the correction is 2 tan(alpha/2)
    for alpha in (2.0, 5.0):
        system = make_system(plane_block_generator([("elliptic", alpha)]))
        x = correction_matrix(system)
        assert x.shape == (1, 1)
        assert x[0, 0] == pytest.approx(2.0 * np.tan(alpha / 2.0), abs=1e-9)
    assert correction_sign(make_system(plane_block_generator([("elliptic", 2.0)]))) == 1
    assert correction_sign(make_system(plane_block_generator([("elliptic", 5.0)]))) == -1


def test_transversality_detection():
    assert transversality_H(make_system(plane_block_generator([("elliptic", 2.0)])))
    # hyperbolic flows keep the vertical: off-diagonal block stays zero
    assert not transversality_H(make_system(plane_block_generator([("hyperbolic", 0.8)])))
    # a full turn returns to the identity
    assert not transversality_H(make_system(plane_block_generator([("elliptic", 2.0 * np.pi)])))


def test_correction_requires_symplectic_input():
    with pytest.raises(NotSymplectic):
        triple_routes_from(np.eye(2) * 2.0)


def test_correction_requires_invertible_corner():
    system = make_system(plane_block_generator([("hyperbolic", 0.8)]))
    with pytest.raises(TransversalityViolated):
        correction_matrix(system)


def test_time_one_map_J_triple_routes():
    """psi(1) = J is the smallest nontrivial fixed point of the whole
    route comparison: every route gives -1."""
    check = triple_routes_from(standard_J(1))
    assert check.tau_direct == -1
    assert check.tau_reduced == -1
    assert check.sign_x == -1
    assert check.sign_y == -1
    assert check.consistent


def test_triple_routes_on_random_flows():
    for seed in (3, 4, 6):
        m = random_symplectic(2, seed, scale=0.8)
        check = triple_routes_from(m)
        assert check.consistent


def test_cross_check_runs_on_system():
    system = make_system(plane_block_generator([("elliptic", 2.0)]))
    check = triple_index_cross_check(system)
    assert check.consistent


def test_calibration_is_minus_one():
    assert calibrate_sign() == -1
    assert PUBLISHED_SIGN == 1


def test_formula_for_rotations():
    system = make_system(plane_block_generator([("elliptic", 2.0)]))
    assert maslov_via_formula(system) == HalfInt(1)
    system = make_system(plane_block_generator([("elliptic", 5.0)]))
    assert maslov_via_formula(system) == HalfInt(3)


def test_validate_full_report():
    report = validate(make_system(plane_block_generator([("elliptic", 5.0)])))
    assert report.orbit_index == HalfInt(3)
    assert report.graph_index == HalfInt(2)
    assert report.sigma == -1
    assert report.correction == -1
    assert report.formula_index == HalfInt(3)
    assert report.tau_direct == report.tau_reduced
    assert report.agree


def test_validate_skips_formula_off_transversality():
    report = validate(make_system(plane_block_generator([("hyperbolic", 0.8)])))
    assert report.orbit_index == ZERO
    assert report.graph_index == ZERO
    assert report.formula_index is None
    assert report.agree


def test_validate_handles_degenerate_correction():
    # persistent eigenvalue 1: the correction matrix is 0, its sign is 0,
    # and the formula reduces to the graph index
    shear = np.array([[0.0, 1.0], [0.0, 0.0]])
    report = validate(make_system(shear))
    assert report.orbit_index == HalfInt(-1)
    assert report.graph_index == HalfInt(-1)
    assert report.correction == 0
    assert report.formula_index == HalfInt(-1)
    assert report.agree


def test_validate_is_deterministic():
    h = plane_block_generator([("elliptic", 2.0), ("elliptic", -3.0)])
    r1 = validate(make_system(h))
    r2 = validate(make_system(h))
    assert r1 == r2


def test_mixed_system_agreement():
    h = plane_block_generator([("hyperbolic", 1.0), ("elliptic", 2.0)])
    report = validate(make_system(h))
    assert report.orbit_index == HalfInt(1)
    assert report.graph_index == HalfInt(2)
    assert report.agree
