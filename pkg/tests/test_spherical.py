"""Spherical projections and factored-field bookkeeping."""

from __future__ import annotations

import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from conformal_heat.errors import DomainError
from conformal_heat.log_radial import LogRadialGrid, RadialSamples
from conformal_heat.spherical import (
    FactoredField,
    GridField2D,
    decompose_1d,
    decompose_2d,
    project_pm,
    projection_kernel,
    recompose_1d,
    recompose_2d,
)


def test_projection_kernel_circle_projects_cos2():
    # (1/2pi) integral of C~_2^0(cos(phi - phi')) cos(2 phi') dphi' = cos(2 phi)
    n = 128
    phi = 2 * math.pi * np.arange(n) / n
    dphi = 2 * math.pi / n
    for target in (0.0, 0.9):
        kern = np.array([projection_kernel(2, 2, math.cos(target - p)) for p in phi])
        val = float(np.sum(kern * np.cos(2 * phi)) * dphi)
        assert val == pytest.approx(math.cos(2 * target), abs=1e-12)
        kern1 = np.array([projection_kernel(1, 2, math.cos(target - p)) for p in phi])
        assert float(np.sum(kern1 * np.cos(2 * phi)) * dphi) == pytest.approx(0.0, abs=1e-12)


def test_projection_kernel_sphere_addition_theorem():
    # degree-1 projection reproduces Y(w) = w_z on S^2; Gauss-Legendre in
    # cos(theta'), trapezoid in phi', is the quadrature oracle.
    nodes, weights = np.polynomial.legendre.leggauss(40)
    nphi = 80
    phip = 2 * math.pi * np.arange(nphi) / nphi
    dphi = 2 * math.pi / nphi
    for big_theta in (0.4, 1.3):
        wz = math.cos(big_theta)
        acc = 0.0
        for x, w in zip(nodes, weights):
            cos_angle = wz * x + math.sin(big_theta) * math.sqrt(1 - x * x) * np.cos(phip)
            kern = np.array([projection_kernel(1, 3, c) for c in cos_angle])
            acc += w * float(np.sum(kern * x)) * dphi
        assert acc == pytest.approx(wz, abs=1e-10)


def test_projection_kernel_two_point_sphere():
    # N = 1: kernel values (1 + t)/2 resp. (1 - t)/2 times the point masses
    assert projection_kernel(0, 1, 1.0) == pytest.approx(0.5)
    assert projection_kernel(0, 1, -1.0) == pytest.approx(0.5)
    assert projection_kernel(1, 1, 1.0) == pytest.approx(0.5)
    assert projection_kernel(1, 1, -1.0) == pytest.approx(-0.5)


def test_project_pm_values():
    even, odd = project_pm(np.array([1.0, 1.0]))
    assert_allclose(even, [1.0, 1.0])
    assert_allclose(odd, [0.0, 0.0])
    even, odd = project_pm(np.array([2.0, 0.0]))
    assert_allclose(even, [1.0, 1.0])
    assert_allclose(odd, [1.0, -1.0])


def _grid(dim, n=64):
    return LogRadialGrid(dim, -6.0, 6.0, n)


def test_decompose_recompose_roundtrip():
    grid = _grid(2)
    rng = np.random.default_rng(17)
    field = GridField2D(grid, rng.standard_normal((16, grid.n)) + 1j * rng.standard_normal((16, grid.n)))
    parts = decompose_2d(field)
    back = recompose_2d(parts, n_phi=16)
    assert np.max(np.abs(back.values - field.values)) < 1e-12 * np.max(np.abs(field.values))
    # Parseval across components
    total = sum(p.norm() ** 2 for p in parts)
    assert total == pytest.approx(field.norm() ** 2, rel=1e-12)


def test_decompose_pure_profile_single_mode():
    grid = _grid(2)
    profile = np.exp(-grid.s**2)
    field = GridField2D(grid, np.tile(profile, (8, 1)))
    parts = decompose_2d(field)
    assert len(parts) == 1
    assert parts[0].mode == 0 and parts[0].degree == 0


def test_decompose_cos2_gives_degree_two():
    grid = _grid(2)
    phi = 2 * math.pi * np.arange(16) / 16
    field = GridField2D(grid, np.cos(2 * phi)[:, None] * np.exp(-grid.s**2)[None, :])
    parts = decompose_2d(field)
    assert sorted(p.mode for p in parts) == [-2, 2]
    assert all(p.degree == 2 for p in parts)


def test_decompose_1d_roundtrip():
    grid = _grid(1)
    rng = np.random.default_rng(2)
    field = GridField2D(grid, rng.standard_normal((2, grid.n)))
    parts = decompose_1d(field)
    assert [p.degree for p in parts] == [0, 1]
    back = recompose_1d(parts)
    assert_allclose(back.values, field.values, atol=1e-14)
    total = sum(p.norm() ** 2 for p in parts)
    assert total == pytest.approx(field.norm() ** 2, rel=1e-12)


def test_factored_field_validation():
    grid3 = _grid(3)
    samples = RadialSamples(grid3, np.zeros(grid3.n))
    FactoredField(2, samples, None)  # fine
    with pytest.raises(DomainError):
        FactoredField(2, samples, 2)  # N >= 3 slots are abstract
    grid2 = _grid(2)
    s2 = RadialSamples(grid2, np.zeros(grid2.n))
    with pytest.raises(DomainError):
        FactoredField(2, s2, None)
    with pytest.raises(DomainError):
        FactoredField(2, s2, 3)
    grid1 = _grid(1)
    s1 = RadialSamples(grid1, np.zeros(grid1.n))
    with pytest.raises(DomainError):
        FactoredField(2, s1, 2)


def test_grid_field_validation():
    grid1 = _grid(1)
    with pytest.raises(DomainError):
        GridField2D(grid1, np.zeros((3, grid1.n)))
    grid2 = _grid(2)
    with pytest.raises(DomainError):
        GridField2D(grid2, np.zeros((4, grid2.n)))  # n_phi below 8
    with pytest.raises(DomainError):
        GridField2D(_grid(3), np.zeros((8, 64)))
