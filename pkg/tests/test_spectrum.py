import math
from types import SimpleNamespace

import numpy as np
import pytest

from vqe_kernel.ansatz import AnsatzParams
from vqe_kernel.config import SpectrumSettings
from vqe_kernel.errors import DomainError
from vqe_kernel.lorenz import Branch, LorenzParams, StabilityClass, classify_stability, equilibrium, jacobian
from vqe_kernel.oracle import eig_reference
from vqe_kernel.spectrum import (
    DedupDecision,
    EigenvalueEstimate,
    SearchGrid,
    dedup,
    find_spectrum,
    pad_for,
    search_bounds,
)
from vqe_kernel.spectrum import finder
from vqe_kernel.vqe import OuterResult, find_eigenvalue


def _estimate(value, residual=1e-12):
    return EigenvalueEstimate(value=complex(value), residual=residual, start_point=0j)


def _inside(grid, z, mirror=True):
    im = abs(z.imag) if mirror else z.imag
    return grid.re_min - 1e-12 <= z.real <= grid.re_max + 1e-12 and grid.im_min - 1e-12 <= im <= grid.im_max + 1e-12


# ── grid ──────────────────────────────────────────────


def test_search_bounds_diagonal():
    grid = search_bounds(np.diag([1.0, 2.0, 3.0]))
    assert grid.re_max == pytest.approx(3.0)  # Gershgorin bound beats √14 here
    assert grid.re_max <= math.sqrt(14)
    assert (grid.re_count, grid.im_count) == (9, 5)
    assert grid.im_min == 0.0
    assert all(_inside(grid, z) for z in (1, 2, 3))


def test_search_bounds_zero_matrix_collapses():
    grid = search_bounds(np.zeros((3, 3)))
    assert list(grid.points()) == [0j]


def test_search_bounds_lorenz_contains_spectrum(lorenz_classic):
    j = jacobian(lorenz_classic, equilibrium(lorenz_classic, Branch.TRIVIAL))
    grid = search_bounds(j)
    assert all(_inside(grid, z) for z in eig_reference(j).eigenvalues)


def test_search_bounds_complex_matrix_uses_full_plane():
    grid = search_bounds(np.array([[1j, 0], [0, -1j]]))
    assert grid.im_min == -grid.im_max
    assert (grid.re_count, grid.im_count) == (9, 9)


def test_grid_points_are_row_major():
    grid = SearchGrid(-1.0, 1.0, 0.0, 2.0, 3, 2)
    assert list(grid.points()) == [-1, 0, 1, -1 + 2j, 2j, 1 + 2j]
    assert len(grid) == 6


def test_grid_validation():
    with pytest.raises(DomainError):
        SearchGrid(1.0, -1.0, 0.0, 1.0, 3, 3)
    with pytest.raises(DomainError):
        SearchGrid(0.0, 0.0, 0.0, 1.0, 3, 3)
    with pytest.raises(DomainError):
        SearchGrid(-1.0, 1.0, 2.0, 1.0, 3, 3)


# ── dedup ──────────────────────────────────────────────


def test_dedup_absorbs_close_candidate():
    merged, decision = dedup([_estimate(1.0)], _estimate(1.0004), 1e-3)
    assert decision is DedupDecision.ABSORBED
    assert merged == [_estimate(1.0)]


def test_dedup_appends_distant_candidate():
    merged, decision = dedup([_estimate(1.0)], _estimate(2.0), 1e-3)
    assert decision is DedupDecision.APPENDED
    assert [e.value for e in merged] == [1.0, 2.0]


def test_dedup_keeps_lower_residual():
    first = _estimate(-2.6666, residual=1e-9)
    second = _estimate(-2.6668, residual=1e-11)
    merged, decision = dedup([first], second, 1e-3)
    assert decision is DedupDecision.REPLACED
    assert merged == [second]


def test_dedup_rejects_non_positive_radius():
    with pytest.raises(DomainError):
        dedup([], _estimate(1.0), 0.0)


# ── full search ──────────────────────────────────────────────


def test_diagonal_spectrum_is_complete(fast_settings):
    m = np.diag([1.0, 2.0, 3.0])
    grid = SearchGrid(0.5, 3.5, 0.0, 0.0, 4, 1)
    report = find_spectrum(m, grid, fast_settings, real_axis=True)
    assert report.complete
    assert [e.value for e in report.estimates] == pytest.approx([1, 2, 3], abs=1e-4)
    assert all(e.residual < fast_settings.accept_threshold(m) for e in report.estimates)
    assert report.starts_used <= len(grid)


@pytest.mark.slow
def test_diagonal_spectrum_from_default_grid(fast_settings):
    m = np.diag([1.0, 2.0, 3.0])
    report = find_spectrum(m, search_bounds(m), fast_settings)
    assert report.complete
    assert [e.value for e in report.estimates] == pytest.approx([1, 2, 3], abs=1e-4)
    assert all(e.residual < fast_settings.accept_threshold(m) for e in report.estimates)
    assert report.starts_used <= len(search_bounds(m))


def test_complex_pair_found_from_upper_half_plane(fast_settings):
    m = np.array([[0.0, -1.0], [1.0, 0.0]])  # λ² + 1
    report = find_spectrum(m, search_bounds(m), fast_settings)
    assert report.complete
    assert report.values() == pytest.approx([-1j, 1j], abs=1e-4)
    assert sum(e.conjugate_completed for e in report.estimates) == 1


def test_incomplete_search_adds_note(fast_settings):
    m = np.diag([1.0, 1.0])
    report = find_spectrum(m, SearchGrid(0.0, 2.0, 0.0, 0.0, 2, 1), fast_settings)
    assert not report.complete
    assert report.values() == pytest.approx([1.0], abs=1e-4)
    assert report.notes


def test_report_is_closed_under_conjugation(fast_settings):
    m = np.array([[1.0, -2.0, 0.0], [2.0, 1.0, 0.0], [0.0, 0.0, -3.0]])
    report = find_spectrum(m, search_bounds(m), fast_settings)
    values = report.values()
    assert sorted(values, key=lambda z: (z.real, z.imag)) == sorted(
        (v.conjugate() for v in values), key=lambda z: (z.real, z.imag)
    )


def test_reported_values_are_fixed_points(fast_settings):
    m = np.array([[1.0, 2.0], [0.0, 3.0]])
    grid = search_bounds(m)
    report = find_spectrum(m, grid, fast_settings)
    assert report.complete
    delta = fast_settings.dedup_delta(m)
    for e in report.estimates:
        again = find_eigenvalue(
            m, e.value, fast_settings.inner, fast_settings.outer, pad_for(m, grid, fast_settings),
            accept_tol=fast_settings.accept_threshold(m),
        )
        assert again.accepted
        assert abs(again.epsilon_star - e.value) < delta


def _scripted(values, abandoned=()):
    """find_eigenvalue stand-in: start z descends to values.get(z, z); polishing keeps its start."""

    def fake(m, eps0, inner_cfg, outer_cfg, d, **kwargs):
        eps0 = complex(eps0)
        target = eps0 if kwargs.get("warm_start") is not None else complex(values.get(eps0, eps0))
        return OuterResult(
            epsilon_star=target,
            residual=1e-20,
            trace=[(eps0, 1.0), (target, 1e-20)],
            accepted=eps0 not in abandoned,
            inner=SimpleNamespace(theta_star=AnsatzParams.zeros()),
            iterations=1,
            converged=True,
            abandoned=eps0 in abandoned,
        )

    return fake


def test_more_than_n_values_is_not_complete(monkeypatch, fast_settings):
    # the complex value brings its conjugate along: three values for a 2x2 matrix
    monkeypatch.setattr(finder, "find_eigenvalue", _scripted({0.5: 1.0, 1.0: 0.5 + 1j}))
    report = find_spectrum(np.diag([1.0, 2.0]), SearchGrid(0.5, 1.0, 0.0, 1.0, 2, 2), fast_settings)
    assert len(report.estimates) == 3
    assert not report.complete
    assert any("spurious" in note for note in report.notes)


def test_abandoned_starts_are_skipped(monkeypatch, fast_settings):
    monkeypatch.setattr(finder, "find_eigenvalue", _scripted({0.0: 1.0, 1.0: 2.0}, abandoned={1.0}))
    report = find_spectrum(np.diag([1.0, 2.0]), SearchGrid(0.0, 2.0, 0.0, 0.0, 3, 1), fast_settings)
    assert report.values() == [1.0, 2.0]
    assert report.complete
    assert report.starts_used == 3
    assert not report.suspect


def _lorenz_report(rho, branch, settings=None):
    p = LorenzParams(rho=rho)
    j = jacobian(p, equilibrium(p, branch))
    return j, find_spectrum(j, search_bounds(j), settings or SpectrumSettings())


def _matches(values, expected, tol):
    values = sorted(values, key=lambda z: (z.real, z.imag))
    expected = sorted((complex(e) for e in expected), key=lambda z: (z.real, z.imag))
    return len(values) == len(expected) and all(abs(v - e) <= tol for v, e in zip(values, expected))


@pytest.mark.slow
@pytest.mark.parametrize(
    "rho, branch, expected, stability",
    [
        (0.5, Branch.TRIVIAL, [-10.52, -2.67, -0.48], StabilityClass.STABLE_NODE),
        (1.1, Branch.TRIVIAL, [-11.09, -2.67, 0.09], StabilityClass.UNSTABLE_SADDLE),
        (1.1, Branch.PLUS, [-11.03, -2.44, -0.20], StabilityClass.STABLE_NODE),
        (24.5, Branch.TRIVIAL, [-21.79, -2.67, 10.79], StabilityClass.UNSTABLE_SADDLE),
        (24.5, Branch.PLUS, [-13.65, -0.01 + 9.58j, -0.01 - 9.58j], StabilityClass.STABLE_SPIRAL),
        (28.0, Branch.TRIVIAL, [-22.83, -2.67, 11.83], StabilityClass.UNSTABLE_SADDLE),
        (28.0, Branch.PLUS, [-13.85, 0.09 + 10.19j, 0.09 - 10.19j], StabilityClass.UNSTABLE_SPIRAL),
    ],
)
def test_lorenz_tables(rho, branch, expected, stability):
    j, report = _lorenz_report(rho, branch)
    assert report.complete
    assert _matches(report.values(), expected, 0.02)
    assert _matches(report.values(), eig_reference(j).eigenvalues, 1e-4)
    assert classify_stability(report.values()) is stability
    if any(isinstance(e, complex) for e in expected):
        assert sum(e.conjugate_completed for e in report.estimates) == 1


@pytest.mark.slow
@pytest.mark.parametrize("rho", [0.5, 1.1, 24.5, 28.0])
def test_trivial_point_matches_closed_form(rho):
    sigma, beta = 10.0, 8.0 / 3.0
    _, report = _lorenz_report(rho, Branch.TRIVIAL)
    disc = math.sqrt((sigma + 1) ** 2 - 4 * sigma * (1 - rho))
    expected = [-beta, (-(sigma + 1) - disc) / 2, (-(sigma + 1) + disc) / 2]
    assert _matches(report.values(), expected, 1e-4)


@pytest.mark.slow
def test_random_real_matrices_with_separated_spectra(rng, fast_settings):
    checked = 0
    while checked < 100:
        m = rng.standard_normal((3, 3))
        oracle = eig_reference(m).eigenvalues
        if min(abs(a - b) for i, a in enumerate(oracle) for b in oracle[i + 1:]) <= 0.5:
            continue
        report = find_spectrum(m, search_bounds(m), fast_settings)
        assert report.complete
        assert _matches(report.values(), oracle, 1e-4)
        checked += 1
