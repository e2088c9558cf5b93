"""Integral kernels of the semigroup exp(z |x|^2 Delta) and their closed forms.

On the degree-m spherical component the semigroup acts through the radial
kernel (valid for Re z > 0)

    K_m(r, r'; z) = (4 pi z)^{-1/2} exp(-z (m + (N-2)/2)^2)
                    exp(-(log r - log r')^2 / (4 z)) (r r')^{-(N-2)/2},

integrated against r'^{N-3} dr'.  Summing the components against the zonal
kernels gives the full-space kernel

    K(r w, r' w'; z) = (Gamma(N/2) / (2 pi^{N/2})) (4 pi z)^{-1/2}
                       exp(-(log r - log r')^2/(4 z)) (r r')^{-(N-2)/2}
                       sum_m exp(-z (m + (N-2)/2)^2) C~_m^{(N-2)/2}(<w, w'>),

with certified truncation of the m-sum.  For N = 1, 2, 4 the sum collapses
to theta-function closed forms.  All square roots of z take the principal
branch (Re sqrt >= 0, positive on the positive reals), tracked explicitly
by ComplexTime.  On the line Re z = 0 the operator is unitary but has no
pointwise kernel; those requests raise InvalidRegimeError and must go
through the spectral route.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, InvalidRegimeError
from .log_radial import LogRadialGrid, RadialSamples
from .special_functions import (
    ThetaArgs,
    chebyshev_t,
    chebyshev_u,
    gegenbauer_tilde,
    gegenbauer_tilde_sup,
    theta,
    theta_dv,
)

# beyond this cos-angle the N = 4 closed form loses too much to cancellation
_NEAR_DIAGONAL = 1.0 - 1e-6


@dataclass(frozen=True)
class ComplexTime:
    """Complex semigroup time with its principal square root pinned down."""

    z: complex
    sqrt_z: complex = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "sqrt_z", cmath.sqrt(self.z))


def as_time(z) -> ComplexTime:
    return z if isinstance(z, ComplexTime) else ComplexTime(complex(z))


def _require_kernel_regime(ct: ComplexTime) -> ComplexTime:
    if not (ct.z.real > 0):
        raise InvalidRegimeError(
            f"integral kernels need Re z > 0, got z = {ct.z}; "
            "the Re z = 0 unitary regime is spectral-only"
        )
    return ct


@dataclass(frozen=True)
class KernelQuery:
    """One full-kernel evaluation point (r w, r' w') with t = <w, w'>."""

    dim: int
    z: ComplexTime
    r: float
    r_prime: float
    t: float
    tol: float = 1e-12

    def __post_init__(self):
        if self.dim < 1:
            raise DomainError("dim must be >= 1")
        if not (self.r > 0 and self.r_prime > 0):
            raise DomainError("radii must be positive")
        if abs(self.t) > 1.0 + 1e-12:
            raise DomainError(f"t={self.t} outside [-1, 1]")
        if not (self.tol > 0):
            raise DomainError("tol must be positive")


def _gauss_factor(ct: ComplexTime, r, rp, dim: int):
    # (4 pi z)^{-1/2} exp(-(log r - log r')^2 / (4 z)) (r r')^{-(N-2)/2}
    dlog = np.log(r) - np.log(rp)
    inv_sqrt = 1.0 / (2.0 * math.sqrt(math.pi) * ct.sqrt_z)
    return inv_sqrt * np.exp(-dlog * dlog / (4.0 * ct.z)) * (np.asarray(r) * np.asarray(rp)) ** (-0.5 * (dim - 2))


def radial_kernel(m: int, dim: int, r, r_prime, z) -> complex:
    """Degree-m radial kernel K_m(r, r'; z); broadcasts over r, r'."""
    if m < 0 or dim < 1:
        raise DomainError("need m >= 0 and dim >= 1")
    if np.any(np.asarray(r) <= 0) or np.any(np.asarray(r_prime) <= 0):
        raise DomainError("radii must be positive")
    ct = _require_kernel_regime(as_time(z))
    nu = 0.5 * (dim - 2)
    out = cmath.exp(-ct.z * (m + nu) ** 2) * _gauss_factor(ct, r, r_prime, dim)
    return complex(out) if np.ndim(out) == 0 else out


def truncation_degree(dim: int, z, tol: float) -> int:
    """Smallest M with sum_{m > M} sup|C~_m| exp(-Re z (m + nu)^2) < tol."""
    if math.isinf(tol):
        return 0
    if not (tol > 0):
        raise DomainError("tol must be positive")
    ct = _require_kernel_regime(as_time(z))
    x = ct.z.real
    if dim == 1:
        return 1  # C~_m^{-1/2}(+-1) vanishes for m >= 2
    nu = 0.5 * (dim - 2)
    # Accumulate certified term bounds until the leftover tail is provably
    # geometric with ratio <= 1/2, then pick the first admissible M.
    terms: list[float] = []
    m = 0
    while True:
        t_m = gegenbauer_tilde_sup(m, nu) * math.exp(-x * (m + nu) ** 2)
        terms.append(t_m)
        if m >= 1 and terms[-2] > 0:
            ratio = terms[-1] / terms[-2]
            if ratio <= 0.5 and terms[-1] <= 0.25 * tol:
                break
        m += 1
        if m > 200_000:
            raise InvalidRegimeError(f"no certified truncation for Re z = {x}, tol = {tol}")
    # terms[-1] bounds the tail beyond the last computed index (ratio <= 1/2)
    cut = len(terms) - 1
    tail = terms[-1]
    while cut >= 1 and tail + terms[cut] < tol:
        tail += terms[cut]
        cut -= 1
    return cut


def full_kernel_series(q: KernelQuery) -> complex:
    """Full kernel by the truncated Gegenbauer series.

    The absolute truncation error is at most q.tol times the Gaussian
    prefactor (the zonal prefactor Gamma(N/2)/(2 pi^{N/2}) < 1 shrinks it
    further).
    """
    ct = _require_kernel_regime(q.z)
    nu = 0.5 * (q.dim - 2)
    cut = truncation_degree(q.dim, ct, q.tol)
    acc = 0.0 + 0.0j
    for m in range(cut + 1):
        acc += cmath.exp(-ct.z * (m + nu) ** 2) * gegenbauer_tilde(m, nu, q.t)
    pref = math.gamma(0.5 * q.dim) / (2.0 * math.pi ** (0.5 * q.dim))
    return complex(pref * _gauss_factor(ct, q.r, q.r_prime, q.dim) * acc)


def closed_form_1d(x: float, x_prime: float, z) -> complex:
    """N = 1 kernel on R \\ {0}; vanishes for opposite signs."""
    if x == 0 or x_prime == 0:
        raise DomainError("the kernel lives on R \\ {0}")
    ct = _require_kernel_regime(as_time(z))
    if x * x_prime < 0:
        return 0.0 + 0.0j
    r, rp = abs(x), abs(x_prime)
    dlog = math.log(r) - math.log(rp)
    return complex(
        cmath.exp(-ct.z / 4.0)
        / (2.0 * math.sqrt(math.pi) * ct.sqrt_z)
        * cmath.exp(-dlog * dlog / (4.0 * ct.z))
        * math.sqrt(r * rp)
    )


def closed_form_2d(r: float, r_prime: float, z, *, t: float | None = None,
                   angle: float | None = None, tol: float = 1e-14) -> complex:
    """N = 2 kernel through the theta function.

    The angular separation enters as theta(dphi/(2 pi), i z / pi); pass
    either the cos-angle t (mapped through arccos into [0, pi]) or a signed
    angle, equivalent because theta is even in v.
    """
    if (t is None) == (angle is None):
        raise DomainError("give exactly one of t or angle")
    ct = _require_kernel_regime(as_time(z))
    if angle is None:
        if abs(t) > 1.0 + 1e-12:
            raise DomainError(f"t={t} outside [-1, 1]")
        angle = math.acos(min(1.0, max(-1.0, t)))
    dlog = math.log(r) - math.log(r_prime)
    pref = 1.0 / (2.0 * math.pi) / (2.0 * math.sqrt(math.pi) * ct.sqrt_z)
    th = theta(ThetaArgs(angle / (2.0 * math.pi), 1j * ct.z / math.pi, tol))
    return complex(pref * cmath.exp(-dlog * dlog / (4.0 * ct.z)) * th)


def closed_form_4d(r: float, r_prime: float, t: float, z, tol: float = 1e-14) -> complex:
    """N = 4 kernel through the v-derivative of theta.

    Uses the identity sum_m exp(-z (m+1)^2) (m+1) U_m(cos a) =
    -(4 pi sin a)^{-1} theta_dv(a/(2 pi), i z / pi).  Within 1e-6 of the
    poles t = +-1 the sin-a cancellation is avoided by falling back to the
    Gegenbauer series, which is regular there (U_m(1) = m + 1).
    """
    ct = _require_kernel_regime(as_time(z))
    if abs(t) > 1.0 + 1e-12:
        raise DomainError(f"t={t} outside [-1, 1]")
    t = min(1.0, max(-1.0, t))
    if abs(t) > _NEAR_DIAGONAL:
        return full_kernel_series(KernelQuery(4, ct, r, r_prime, t, tol))
    a = math.acos(t)
    dlog = math.log(r) - math.log(r_prime)
    dv = theta_dv(ThetaArgs(a / (2.0 * math.pi), 1j * ct.z / math.pi, tol))
    pref = -1.0 / (8.0 * math.pi**3) / (2.0 * math.sqrt(math.pi) * ct.sqrt_z)
    return complex(
        pref
        * cmath.exp(-dlog * dlog / (4.0 * ct.z))
        / (r * r_prime)
        / math.sqrt(1.0 - t * t)
        * dv
    )


def radial_semigroup_matrix(dim: int, z, grid: LogRadialGrid) -> np.ndarray:
    """Quadrature matrix B with (B f)_j = int K_0-part; degree enters later.

    B already folds in the measure weights r'^{N-2} ds but not the degree
    factor exp(-z (m + nu)^2):  apply_radial_kernel multiplies it back.
    Rebuilding B is the expensive step, so callers doing many degrees at a
    fixed (dim, z) should reuse one matrix.
    """
    ct = _require_kernel_regime(as_time(z))
    s = grid.s
    ds2 = (s[:, None] - s[None, :]) ** 2
    base = np.exp(-ds2 / (4.0 * ct.z)) / (2.0 * math.sqrt(math.pi) * ct.sqrt_z)
    half = -0.5 * (dim - 2)
    left = np.exp(half * s)
    right = np.exp(half * s) * grid.r ** (dim - 2) * grid.ds
    return base * np.outer(left, right)


def apply_radial_kernel(f: RadialSamples, m: int, z,
                        matrix: np.ndarray | None = None) -> RadialSamples:
    """Apply the degree-m semigroup by direct kernel quadrature."""
    if m < 0:
        raise DomainError("need m >= 0")
    ct = _require_kernel_regime(as_time(z))
    grid = f.grid
    if matrix is None:
        matrix = radial_semigroup_matrix(grid.dim, ct, grid)
    nu = 0.5 * (grid.dim - 2)
    scale = cmath.exp(-ct.z * (m + nu) ** 2)
    return RadialSamples(grid, scale * (matrix @ f.values))


def apply_full_kernel_2d(field, z, tol: float = 1e-13):
    """Apply the N = 2 semigroup to a grid field by separated quadrature.

    The kernel factors as an s-Toeplitz Gaussian times the angular theta
    factor, so the double integral is two one-dimensional quadratures.
    """
    from .spherical import GridField2D  # local import to avoid a cycle

    ct = _require_kernel_regime(as_time(z))
    if field.grid.dim != 2:
        raise DomainError("expected an N = 2 grid field")
    grid = field.grid
    n_phi = field.n_phi
    radial = radial_semigroup_matrix(2, ct, grid)
    tau = 1j * ct.z / math.pi
    th_row = np.array([theta(ThetaArgs(k / n_phi, tau, tol)) for k in range(n_phi)])
    idx = (np.arange(n_phi)[:, None] - np.arange(n_phi)[None, :]) % n_phi
    angular = th_row[idx] / n_phi  # (1/2pi) theta(dphi/2pi) dphi with dphi = 2pi/n_phi
    return GridField2D(grid, angular @ field.values @ radial.T)


def apply_full_kernel_1d(field, z):
    """Apply the N = 1 semigroup on the two-sign grid; signs do not mix."""
    from .spherical import GridField2D

    ct = _require_kernel_regime(as_time(z))
    if field.grid.dim != 1:
        raise DomainError("expected an N = 1 grid field")
    grid = field.grid
    base = radial_semigroup_matrix(1, ct, grid)
    scale = cmath.exp(-ct.z / 4.0)  # (m + nu)^2 = 1/4 for both parities
    rows = np.stack([scale * (base @ field.values[0]), scale * (base @ field.values[1])])
    return GridField2D(grid, rows)
