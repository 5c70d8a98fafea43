"""Side views: normalization, kernels, agreement matrices, t-test machinery."""

import math

import numpy as np
import pytest

from sidemine.views import (
    DegenerateViewError,
    KernelMatrix,
    SideView,
    consistency_ttest,
    minmax_normalize,
    omega_matrix,
    phi_laplacian,
    rbf_kernel,
    student_t_sf,
    theta_matrix,
    welch_ttest,
)

from oracles import t_sf_by_quadrature


# -- normalization -------------------------------------------------------------


def test_minmax_basic_column():
    v = minmax_normalize(SideView(np.array([[2.0], [4.0], [6.0]])))
    assert np.allclose(v.values[:, 0], [0.0, 0.5, 1.0])


def test_minmax_constant_column_maps_to_zero():
    v = minmax_normalize(SideView(np.array([[5.0, 1.0], [5.0, 3.0], [5.0, 2.0]])))
    assert np.all(v.values[:, 0] == 0.0)
    assert np.allclose(v.values[:, 1], [0.0, 1.0, 0.5])


def test_minmax_full_range_column_unchanged():
    col = np.array([[0.0], [1.0], [0.25]])
    v = minmax_normalize(SideView(col))
    assert np.allclose(v.values, col)


def test_minmax_preserves_name_and_weight():
    v = minmax_normalize(SideView(np.zeros((3, 1)), name="bmi", weight=2.0))
    assert v.name == "bmi" and v.weight == 2.0


def test_side_view_validation():
    with pytest.raises(ValueError):
        SideView(np.array([1.0, 2.0]))  # not 2-D
    with pytest.raises(ValueError):
        SideView(np.array([[np.nan]]))
    with pytest.raises(ValueError):
        SideView(np.zeros((2, 2)), weight=-1.0)


# -- kernel --------------------------------------------------------------------


def test_rbf_identical_rows_give_unit_similarity():
    k = rbf_kernel(SideView(np.array([[0.3, 0.4], [0.3, 0.4]])))
    assert np.allclose(k.values, 1.0)


def test_rbf_hand_value_and_mean():
    k = rbf_kernel(SideView(np.array([[0.0, 0.0], [1.0, 1.0]])))
    assert math.isclose(k.values[0, 1], math.exp(-1.0), rel_tol=0, abs_tol=1e-12)
    expected_mean = (2.0 + 2.0 * math.exp(-1.0)) / 4.0
    assert math.isclose(k.mean, expected_mean, abs_tol=1e-12)
    assert math.isclose(expected_mean, 0.683940, abs_tol=5e-7)


def test_rbf_symmetric_unit_diagonal():
    rng = np.random.default_rng(3)
    k = rbf_kernel(SideView(rng.random((8, 3))))
    assert np.array_equal(k.values, k.values.T)
    assert np.allclose(np.diag(k.values), 1.0)
    assert np.all(k.values > 0) and np.all(k.values <= 1)


def test_rbf_rejects_zero_dimensional_view():
    with pytest.raises(ValueError):
        rbf_kernel(SideView(np.zeros((3, 0))))


# -- agreement matrices ----------------------------------------------------------


def test_theta_worked_example():
    k = KernelMatrix(np.array([[1.0, 0.5], [0.5, 1.0]]), 0.75)
    theta = theta_matrix(k)
    assert np.allclose(theta, [[0.5, -0.5], [-0.5, 0.5]])


def test_theta_constant_kernel_is_degenerate():
    k = KernelMatrix(np.ones((3, 3)), 1.0)
    with pytest.raises(DegenerateViewError):
        theta_matrix(k)


def test_theta_mass_balance_on_random_kernels():
    rng = np.random.default_rng(9)
    for _ in range(20):
        v = SideView(rng.random((7, 2)))
        k = rbf_kernel(v)
        theta = theta_matrix(k)
        high = k.values >= k.mean
        assert math.isclose(theta[high].sum(), 1.0, abs_tol=1e-12)
        assert math.isclose(theta[~high].sum(), -1.0, abs_tol=1e-12)


def test_omega_worked_example():
    omega = omega_matrix([1, -1])
    assert np.allclose(omega, [[0.5, -0.5], [-0.5, 0.5]])


def test_omega_single_class_rejected():
    with pytest.raises(ValueError):
        omega_matrix([1, 1, 1])


def test_omega_symmetric():
    rng = np.random.default_rng(17)
    for _ in range(10):
        y = rng.choice([-1, 1], size=9)
        if len(set(y.tolist())) < 2:
            continue
        omega = omega_matrix(y)
        assert np.array_equal(omega, omega.T)


# -- Laplacian pair --------------------------------------------------------------


def test_phi_laplacian_worked_example():
    m = np.array([[0.5, -0.5], [-0.5, 0.5]])
    lp = phi_laplacian(m, [(m, 1.0)])
    assert np.allclose(lp.phi, [[1.0, -1.0], [-1.0, 1.0]])
    assert np.allclose(lp.lap, [[-1.0, 1.0], [1.0, -1.0]])
    assert np.allclose(lp.lap_hat, [[-1.0, 0.0], [0.0, -1.0]])


def test_phi_laplacian_row_sums_and_quadratic_identity():
    rng = np.random.default_rng(31)
    for _ in range(100):
        n = int(rng.integers(2, 10))
        phi = rng.normal(size=(n, n))
        phi = (phi + phi.T) / 2
        lp = phi_laplacian(phi)
        assert np.max(np.abs(lp.lap.sum(axis=1))) < 1e-12
        assert np.all(lp.lap_hat <= 0)
        assert np.all(lp.lap_hat <= lp.lap + 1e-15)
        f = rng.integers(0, 2, size=n).astype(float)
        direct = f @ lp.lap @ f
        pairwise = 0.5 * np.sum(lp.phi * (f[:, None] - f[None, :]) ** 2)
        assert math.isclose(direct, pairwise, abs_tol=1e-9)


def test_phi_laplacian_empty_views_uses_omega_alone():
    omega = omega_matrix([1, 1, -1])
    lp = phi_laplacian(omega, [])
    assert np.allclose(lp.phi, omega)


def test_phi_laplacian_dimension_mismatch():
    with pytest.raises(ValueError):
        phi_laplacian(np.eye(3), [(np.eye(2), 1.0)])
    with pytest.raises(ValueError):
        phi_laplacian(np.eye(3), [(np.eye(3), -0.5)])


# -- Welch t ---------------------------------------------------------------------


def test_welch_identical_samples_give_zero_t():
    t, df = welch_ttest([1.0, 2.0, 3.0], [1.0, 2.0, 3.0])
    assert t == 0.0
    assert student_t_sf(t, df) == 0.5


def test_welch_hand_computed_example():
    # a = [1,2,3,4], b = [2,4,6,8]: t = -sqrt(3), df = 75/17 by hand.
    t, df = welch_ttest([1.0, 2.0, 3.0, 4.0], [2.0, 4.0, 6.0, 8.0])
    assert math.isclose(t, -math.sqrt(3.0), abs_tol=1e-12)
    assert math.isclose(df, 75.0 / 17.0, abs_tol=1e-12)


def test_welch_degenerate_and_infinite_cases():
    with pytest.raises(DegenerateViewError):
        welch_ttest([2.0, 2.0], [2.0, 2.0])
    t, df = welch_ttest([3.0, 3.0], [1.0, 1.0])
    assert t == math.inf and df == 2.0
    assert student_t_sf(t, df) == 0.0
    t, _ = welch_ttest([1.0, 1.0], [3.0, 3.0])
    assert student_t_sf(t, 2.0) == 1.0


# -- consistency test -------------------------------------------------------------


def _kernel_from_rows(rows):
    rows = np.asarray(rows, dtype=float)
    return KernelMatrix(rows, float(rows.mean()))


def test_consistency_ttest_detects_block_structure():
    # Same-class pairs similar (0.9), cross-class pairs dissimilar (0.1).
    y = np.array([1, 1, 1, -1, -1, -1])
    k = np.where(np.equal.outer(y, y), 0.9, 0.1)
    np.fill_diagonal(k, 1.0)
    jitter = np.random.default_rng(0).normal(0, 1e-3, k.shape)
    k = k + (jitter + jitter.T) / 2
    res = consistency_ttest(_kernel_from_rows(k), y, seed=5)
    assert res.p_value < 1e-6
    assert res.n_per_group == 6  # 6 same-class vs 9 cross-class pairs -> min 6
    assert res.df > 0


def test_consistency_ttest_is_seed_deterministic():
    rng = np.random.default_rng(2)
    v = SideView(rng.random((12, 3)))
    y = np.array([1, -1] * 6)
    k = rbf_kernel(v)
    r1 = consistency_ttest(k, y, seed=7)
    r2 = consistency_ttest(k, y, seed=7)
    assert (r1.statistic, r1.df, r1.p_value) == (r2.statistic, r2.df, r2.p_value)


def test_consistency_ttest_validation():
    k = _kernel_from_rows(np.eye(4))
    with pytest.raises(ValueError):
        consistency_ttest(k, [1, 1, 1, 1], seed=0)
    with pytest.raises(ValueError):
        consistency_ttest(k, [1, -1, 1], seed=0)


# -- Student-t survival function ---------------------------------------------------


def test_student_t_sf_against_quadrature_oracle():
    for t in [0.0, 0.5, 1.0, 2.0, 5.0]:
        for df in [1.0, 2.0, 10.0, 100.0]:
            expected = t_sf_by_quadrature(t, df)
            got = student_t_sf(t, df)
            assert abs(got - expected) <= 1e-9, (t, df, got, expected)


def test_student_t_sf_symmetry_and_closed_forms():
    assert student_t_sf(0.0, 3.0) == 0.5
    # Cauchy closed form: P(T > 1) = 1/2 - arctan(1)/pi = 1/4.
    assert math.isclose(student_t_sf(1.0, 1.0), 0.25, abs_tol=1e-12)
    for t in [0.3, 1.7, 4.2]:
        assert math.isclose(
            student_t_sf(-t, 7.0), 1.0 - student_t_sf(t, 7.0), abs_tol=1e-12
        )


def test_student_t_sf_large_df_matches_normal_tail():
    normal_tail = 0.5 * math.erfc(1.96 / math.sqrt(2.0))
    assert abs(student_t_sf(1.96, 1e6) - normal_tail) <= 1e-4


def test_student_t_sf_rejects_bad_df():
    with pytest.raises(ValueError):
        student_t_sf(1.0, 0.0)
    with pytest.raises(ValueError):
        student_t_sf(float("nan"), 2.0)
