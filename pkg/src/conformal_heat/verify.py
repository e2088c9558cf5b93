"""Self-check suites: each returns a list of named defect measurements.

The suites exercise the library along independent routes (exact power-sum
algebra, kernel quadrature, spectral multipliers, closed forms) and report
the worst defect per check against its pinned tolerance.  They are shared
between the command line verifier and the acceptance tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .kernels import radial_kernel, radial_semigroup_matrix, closed_form_1d, closed_form_2d, closed_form_4d, full_kernel_series, KernelQuery, as_time, apply_radial_kernel
from .ladder import (
    LadderOperatorSpec,
    commutator_defect,
    degeneration_trace,
    rescaled_pair,
    standard_basis,
)
from .log_radial import LogRadialGrid, RadialSamples, u_inverse, weighted_norm
from .spectral_calculus import G0Exponent, apply_exp_g0, apply_scaling_direct
from .spherical import FactoredField, projection_kernel
from .special_functions import ThetaArgs, theta, theta_dv


@dataclass
class CheckResult:
    suite: str
    name: str
    defect: float
    tol: float

    @property
    def passed(self) -> bool:
        return self.defect < self.tol


GridShape = tuple[float, float, int]
_DEFAULT_SHAPE: GridShape = (-16.0, 16.0, 2048)

_SL2_A = (0.5, 1.0, 2.0, 3.0)
_SL2_DIMS = (1, 2, 3, 4)
_SL2_DEGREES = (0, 1, 2, 3)


def _component(grid: LogRadialGrid, degree: int, values) -> FactoredField:
    mode = degree if grid.dim <= 2 else None
    return FactoredField(degree, RadialSamples(grid, values), mode)


def _gaussian_samples(grid: LogRadialGrid, center: float = 0.3, width: float = 1.0) -> np.ndarray:
    return np.exp(-((grid.s - center) ** 2) / (2.0 * width**2))


def _rel_error(got: RadialSamples, want: RadialSamples) -> float:
    diff = RadialSamples(got.grid, got.values - want.values)
    scale = weighted_norm(want)
    return weighted_norm(diff) / scale if scale > 0 else weighted_norm(diff)


def suite_sl2() -> list[CheckResult]:
    """Nine commutator checks on the 18-point exponent basis.

    Three triple relations at a != 0, the same three after contraction
    scaling, and the three pairwise brackets of the commuting limit family.
    """
    basis = standard_basis()
    out: list[CheckResult] = []

    def sweep(make_defect) -> float:
        worst = 0.0
        for a in _SL2_A:
            for dim in _SL2_DIMS:
                degrees = (0, 1) if dim == 1 else _SL2_DEGREES
                for m in degrees:
                    worst = max(worst, make_defect(a, m, dim))
        return worst

    def spec(kind, a, m, dim):
        return LadderOperatorSpec(kind, a, m, dim)

    relations = [
        ("[H, E+] = 2 E+", lambda a, m, n: commutator_defect(
            spec("H", a, m, n), spec("E+", a, m, n), [(2.0, spec("E+", a, m, n))], basis)),
        ("[H, E-] = -2 E-", lambda a, m, n: commutator_defect(
            spec("H", a, m, n), spec("E-", a, m, n), [(-2.0, spec("E-", a, m, n))], basis)),
        ("[E+, E-] = H", lambda a, m, n: commutator_defect(
            spec("E+", a, m, n), spec("E-", a, m, n), spec("H", a, m, n), basis)),
    ]
    for name, fn in relations:
        out.append(CheckResult("sl2", name, sweep(fn), 1e-12))

    def resc_defect(k1, k2, rhs_factor_kind, a, m, n):
        x = rescaled_pair(k1, a, m, n)
        y = rescaled_pair(k2, a, m, n)
        factor, kind = rhs_factor_kind
        expected = [(factor * a * c, s) for c, s in rescaled_pair(kind, a, m, n)]
        return commutator_defect(x, y, expected, basis)

    out.append(CheckResult("sl2", "[aH, aE+] = 2a aE+", sweep(
        lambda a, m, n: resc_defect("H", "E+", (2.0, "E+"), a, m, n)), 1e-12))
    out.append(CheckResult("sl2", "[aH, aE-] = -2a aE-", sweep(
        lambda a, m, n: resc_defect("H", "E-", (-2.0, "E-"), a, m, n)), 1e-12))
    out.append(CheckResult("sl2", "[aE+, aE-] = a aH", sweep(
        lambda a, m, n: resc_defect("E+", "E-", (1.0, "H"), a, m, n)), 1e-12))

    def limit_defect(k1, k2, m, n):
        x = LadderOperatorSpec(k1, None, m, n)
        y = LadderOperatorSpec(k2, None, m, n)
        return commutator_defect(x, y, None, basis)

    for k1, k2 in (("H", "E+"), ("H", "E-"), ("E+", "E-")):
        worst = 0.0
        for dim in _SL2_DIMS:
            degrees = (0, 1) if dim == 1 else _SL2_DEGREES
            for m in degrees:
                worst = max(worst, limit_defect(k1, k2, m, dim))
        out.append(CheckResult("sl2", f"limit [{k1}, {k2}] = 0", worst, 1e-12))
    return out


def suite_degeneration() -> list[CheckResult]:
    """Rescaled brackets contract linearly in a; the limit family commutes."""
    basis = standard_basis()
    a_seq = (1e-1, 1e-2, 1e-3)
    out: list[CheckResult] = []
    for pair in (("H", "E+"), ("H", "E-"), ("E+", "E-")):
        worst_ratio_err = 0.0
        for dim in _SL2_DIMS:
            degrees = (0, 1) if dim == 1 else _SL2_DEGREES
            for m in degrees:
                defects = degeneration_trace(a_seq, pair, basis, m, dim)
                for d0, d1 in zip(defects, defects[1:]):
                    ratio = d0 / d1 if d1 > 0 else math.inf
                    worst_ratio_err = max(worst_ratio_err, abs(ratio - 10.0))
        out.append(
            CheckResult("degeneration", f"[a{pair[0]}, a{pair[1]}] defect ratio ~ 10",
                        worst_ratio_err, 0.5)
        )
    worst = 0.0
    for k1, k2 in (("H", "E+"), ("H", "E-"), ("E+", "E-")):
        for dim in _SL2_DIMS:
            degrees = (0, 1) if dim == 1 else _SL2_DEGREES
            for m in degrees:
                worst = max(
                    worst,
                    commutator_defect(
                        LadderOperatorSpec(k1, None, m, dim),
                        LadderOperatorSpec(k2, None, m, dim),
                        None,
                        basis,
                    ),
                )
    out.append(CheckResult("degeneration", "limit family commutes", worst, 1e-12))
    return out


def suite_spectral(shape: GridShape = _DEFAULT_SHAPE) -> list[CheckResult]:
    """Spectral multiplier route against direct kernel quadrature."""
    s_min, s_max, n = shape
    out: list[CheckResult] = []
    for dim in (2, 3, 4):
        grid = LogRadialGrid(dim, s_min, s_max, n)
        g = _gaussian_samples(grid)
        base = u_inverse(grid, g)
        for z in (0.5 + 0.0j, 0.3 + 0.4j):
            matrix = radial_semigroup_matrix(dim, z, grid)
            worst = 0.0
            for m in range(5):
                field = _component(grid, m, base.values)
                spectral = apply_exp_g0(G0Exponent(z3=z), field).radial
                quadrature = apply_radial_kernel(base, m, z, matrix=matrix)
                worst = max(worst, _rel_error(spectral, quadrature))
            out.append(
                CheckResult("spectral", f"N={dim}, z={z}: multiplier vs quadrature, m<=4",
                            worst, 1e-8)
            )
    return out


_FORM_RADII = (0.6, 1.0, 1.9)
_FORM_RADII_P = (0.45, 1.1, 2.3)
_FORM_TIMES = (0.4 + 0.0j, 0.5 + 0.4j, 0.7 - 0.3j)


def _rel(a: complex, b: complex) -> float:
    scale = max(abs(a), abs(b))
    return abs(a - b) / scale if scale > 0 else 0.0


def suite_theta_forms() -> list[CheckResult]:
    """Closed theta forms against the truncated Gegenbauer series."""
    out: list[CheckResult] = []

    worst = 0.0
    for r in _FORM_RADII:
        for rp in _FORM_RADII_P:
            for t in (-1.0, 1.0):
                for z in _FORM_TIMES:
                    series = full_kernel_series(KernelQuery(1, as_time(z), r, rp, t, 1e-15))
                    closed = closed_form_1d(r, t * rp, z)
                    worst = max(worst, _rel(series, closed))
    out.append(CheckResult("theta", "N=1 closed form vs series", worst, 1e-14))

    worst = 0.0
    for r in _FORM_RADII:
        for rp in _FORM_RADII_P:
            for t in (-0.7, 0.2, 0.85):
                for z in _FORM_TIMES:
                    series = full_kernel_series(KernelQuery(2, as_time(z), r, rp, t, 1e-15))
                    closed = closed_form_2d(r, rp, z, t=t)
                    worst = max(worst, _rel(series, closed))
    out.append(CheckResult("theta", "N=2 closed form vs series", worst, 1e-9))

    worst = 0.0
    for r in _FORM_RADII:
        for rp in _FORM_RADII_P:
            for t in (-0.7, 0.2, 0.85):
                for z in _FORM_TIMES:
                    series = full_kernel_series(KernelQuery(4, as_time(z), r, rp, t, 1e-15))
                    closed = closed_form_4d(r, rp, t, z)
                    worst = max(worst, _rel(series, closed))
    out.append(CheckResult("theta", "N=4 closed form vs series", worst, 1e-8))
    return out


def _random_band_limited(grid: LogRadialGrid, rng: np.random.Generator) -> RadialSamples:
    from .log_radial import FrequencySamples, fourier_inverse

    n = grid.n
    spec = np.zeros(n, dtype=complex)
    band = slice(n // 2 - n // 8, n // 2 + n // 8)
    width = band.stop - band.start
    spec[band] = rng.standard_normal(width) + 1j * rng.standard_normal(width)
    g = fourier_inverse(FrequencySamples(grid, spec))
    return u_inverse(grid, g)


def suite_unitarity(shape: GridShape = _DEFAULT_SHAPE) -> list[CheckResult]:
    """Purely imaginary exponents preserve the weighted norm."""
    s_min, s_max, n = shape
    rng = np.random.default_rng(20260817)
    out: list[CheckResult] = []
    for z3 in (0.7j, -1.3j):
        exponent = G0Exponent(z1=0.4j, z3=z3)
        worst = 0.0
        for dim in (1, 2, 3, 4):
            grid = LogRadialGrid(dim, s_min, s_max, n)
            degrees = (0, 1) if dim == 1 else (0, 2)
            for m in degrees:
                f = _random_band_limited(grid, rng)
                field = _component(grid, m, f.values)
                before = weighted_norm(field.radial)
                after = weighted_norm(apply_exp_g0(exponent, field).radial)
                worst = max(worst, abs(after - before) / before)
        out.append(
            CheckResult("unitarity", f"norm preserved, z1=0.4i, z3={z3}", worst, 1e-12)
        )
    return out


def suite_scaling(shape: GridShape = _DEFAULT_SHAPE) -> list[CheckResult]:
    """Spectral dilation (z1 = i t) against the direct index-shift route."""
    s_min, s_max, n = shape
    out: list[CheckResult] = []
    for steps in (32, -96):
        worst = 0.0
        for dim in (1, 2, 3, 4):
            grid = LogRadialGrid(dim, s_min, s_max, n)
            t = 0.5 * steps * grid.ds
            g = _gaussian_samples(grid, center=-0.4, width=0.8)
            degrees = (0, 1) if dim == 1 else (0, 1, 2)
            for m in degrees:
                field = _component(grid, m, u_inverse(grid, g).values)
                spectral = apply_exp_g0(G0Exponent(z1=1j * t), field).radial
                direct = apply_scaling_direct(t, field).radial
                worst = max(worst, _rel_error(spectral, direct))
        out.append(CheckResult("scaling", f"shift by {steps} samples", worst, 1e-10))
    return out


def suite_semigroup(shape: GridShape = _DEFAULT_SHAPE) -> list[CheckResult]:
    """K(z1) composed with K(z2) under quadrature equals K(z1 + z2)."""
    s_min, s_max, n = shape
    z1, z2 = 0.3, 0.5
    out: list[CheckResult] = []
    for dim, m in ((1, 0), (2, 0), (2, 3), (3, 1), (4, 2)):
        grid = LogRadialGrid(dim, s_min, s_max, n)
        rho = grid.r
        w = rho ** (dim - 2) * grid.ds
        worst = 0.0
        for r in (0.7, 1.3):
            for rp in (0.9, 2.0):
                left = radial_kernel(m, dim, r, rho, z1)
                right = radial_kernel(m, dim, rho, rp, z2)
                composed = complex(np.sum(left * right * w))
                direct = radial_kernel(m, dim, r, rp, z1 + z2)
                worst = max(worst, abs(composed - direct) / abs(direct))
        out.append(CheckResult("semigroup", f"N={dim}, m={m}", worst, 1e-6))
    return out


_THETA_AT_I = 1.086434811213308  # independent direct summation, frozen


def suite_special() -> list[CheckResult]:
    """Theta value and derivative spot checks."""
    out: list[CheckResult] = []
    val = theta(ThetaArgs(0.0, 1j, 1e-15))
    out.append(CheckResult("special", "theta(0, i)", abs(val - _THETA_AT_I), 1e-12))

    worst = 0.0
    h = 1e-5
    for v, tau in ((0.2, 0.5j), (0.4, 0.8j), (-0.15, 0.35j)):
        d = theta_dv(ThetaArgs(v, tau, 1e-15))
        fd = (theta(ThetaArgs(v + h, tau, 1e-15)) - theta(ThetaArgs(v - h, tau, 1e-15))) / (2 * h)
        worst = max(worst, abs(d - fd) / abs(d))
    out.append(CheckResult("special", "theta_dv vs centered differences", worst, 1e-6))
    return out


def suite_projection(n_phi: int = 256, max_degree: int = 20) -> list[CheckResult]:
    """Projection quadrature on the circle: idempotent, mutually orthogonal."""
    phi = 2.0 * math.pi * np.arange(n_phi) / n_phi
    dphi = 2.0 * math.pi / n_phi
    row_cos = np.cos(phi)  # cos of angular separation from 0

    def proj_matrix(m: int) -> np.ndarray:
        row = np.array([projection_kernel(m, 2, c) for c in row_cos])
        idx = (np.arange(n_phi)[:, None] - np.arange(n_phi)[None, :]) % n_phi
        return row[idx] * dphi

    rng = np.random.default_rng(7)
    coeffs = rng.standard_normal(2 * max_degree + 1) + 1j * rng.standard_normal(2 * max_degree + 1)
    p = np.zeros(n_phi, dtype=complex)
    for i, k in enumerate(range(-max_degree, max_degree + 1)):
        p += coeffs[i] * np.exp(1j * k * phi)

    worst_idem = 0.0
    worst_orth = 0.0
    for m in range(max_degree + 1):
        proj = proj_matrix(m)
        pm = proj @ p
        worst_idem = max(worst_idem, float(np.max(np.abs(proj @ pm - pm))))
        for k in range(-max_degree, max_degree + 1):
            if abs(k) == m:
                continue
            mode = np.exp(1j * k * phi)
            worst_orth = max(worst_orth, float(np.max(np.abs(proj @ mode))))
    return [
        CheckResult("projection", "idempotence on band-limited data", worst_idem, 1e-10),
        CheckResult("projection", "kills other modes", worst_orth, 1e-10),
    ]


SUITES = {
    "sl2": suite_sl2,
    "degeneration": suite_degeneration,
    "spectral": suite_spectral,
    "theta": suite_theta_forms,
    "unitarity": suite_unitarity,
    "scaling": suite_scaling,
    "semigroup": suite_semigroup,
    "special": suite_special,
    "projection": suite_projection,
}

_GRID_AWARE = {"spectral", "unitarity", "scaling", "semigroup"}


def run_suites(names=None, shape: GridShape = _DEFAULT_SHAPE) -> list[CheckResult]:
    if names is None:
        names = list(SUITES)
    results: list[CheckResult] = []
    for name in names:
        if name not in SUITES:
            raise KeyError(f"unknown suite {name!r}; choices: {sorted(SUITES)}")
        fn = SUITES[name]
        results.extend(fn(shape) if name in _GRID_AWARE else fn())
    return results
