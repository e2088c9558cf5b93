"""Functional calculus for the degenerate generators through the log-radial transform.

The three commuting limit generators act on the degree-m component, after
the unitary U and the Fourier transform, as multiplication operators:

    2 sum x_j d_j + N - 2   ->  2 i sigma,
    i                       ->  i,
    i |x|^2 Delta           ->  -i (sigma^2 + (m + (N-2)/2)^2).

The exponential exp((z1/i)(2 sum x_j d_j + N - 2) + z2 + z3 |x|^2 Delta) is
therefore the Fourier multiplier

    exp(2 z1 sigma + z2 - z3 (sigma^2 + (m + (N-2)/2)^2)).

Its operator norm over sigma in R classifies the exponent: unitary when all
three real parts vanish, bounded when Re z1 = 0 and Re z3 >= 0 (the scalar
|e^{z2}| only rescales), unbounded otherwise.  Unbounded exponents are
refused rather than evaluated on a finite grid, where the blowup would be
silently truncated.

For purely imaginary z1 = i t the exponential is the dilation
F -> e^{(N-2) t} F(e^{2 t} x), which on the log grid is an index shift by
2 t / ds; apply_scaling_direct realizes that route without any transform.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, GridAlignmentError, UnboundedExponentError
from .log_radial import (
    RadialSamples,
    fourier_forward,
    fourier_inverse,
    u_forward,
    u_inverse,
)
from .spherical import FactoredField, GridField2D, decompose_1d, decompose_2d, recompose_1d, recompose_2d


class Boundedness(enum.Enum):
    BOUNDED_UNITARY = "bounded-unitary"
    BOUNDED = "bounded"
    UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class G0Exponent:
    """Coefficients (z1, z2, z3) of the degenerate generators in the exponent."""

    z1: complex = 0.0
    z2: complex = 0.0
    z3: complex = 0.0

    @classmethod
    def from_unitary_triple(cls, t1: float, t2: float, t3: float) -> "G0Exponent":
        """Exponent of the unitary one-parameter groups: real t's, times i."""
        return cls(1j * t1, 1j * t2, 1j * t3)

    def is_zero(self) -> bool:
        return self.z1 == 0 and self.z2 == 0 and self.z3 == 0


def is_bounded(exponent: G0Exponent) -> Boundedness:
    """Classify the multiplier sup over sigma in R and all degrees m."""
    re1, re2, re3 = exponent.z1.real, exponent.z2.real, exponent.z3.real
    if re1 == 0.0 and re3 >= 0.0:
        if re2 == 0.0 and re3 == 0.0:
            return Boundedness.BOUNDED_UNITARY
        return Boundedness.BOUNDED
    return Boundedness.UNBOUNDED


def multiplier(exponent: G0Exponent, m: int, sigma, dim: int):
    """Evaluate exp(2 z1 sigma + z2 - z3 (sigma^2 + (m + (N-2)/2)^2))."""
    if m < 0 or dim < 1:
        raise DomainError("need m >= 0 and dim >= 1")
    sigma = np.asarray(sigma)
    shift = (m + 0.5 * (dim - 2)) ** 2
    out = np.exp(2.0 * exponent.z1 * sigma + exponent.z2 - exponent.z3 * (sigma**2 + shift))
    return complex(out) if out.ndim == 0 else out


def _require_applicable(exponent: G0Exponent) -> None:
    if is_bounded(exponent) is Boundedness.UNBOUNDED:
        raise UnboundedExponentError(
            f"exponent (z1={exponent.z1}, z2={exponent.z2}, z3={exponent.z3}) generates "
            "an unbounded operator (need Re z1 = 0 and Re z3 >= 0); refusing to evaluate"
        )


def apply_exp_g0(exponent: G0Exponent, field: FactoredField) -> FactoredField:
    """Apply the exponential through the spectral route on one component."""
    _require_applicable(exponent)
    if exponent.is_zero():
        return FactoredField(field.degree, field.radial.copy(), field.mode)
    grid = field.radial.grid
    gh = fourier_forward(grid, u_forward(field.radial))
    gh.values *= multiplier(exponent, field.degree, grid.sigma, grid.dim)
    out = u_inverse(grid, fourier_inverse(gh))
    return FactoredField(field.degree, out, field.mode)


def apply_exp_g0_grid(exponent: G0Exponent, field: GridField2D) -> GridField2D:
    """Apply the exponential to a full N = 1 or N = 2 grid field."""
    if field.grid.dim == 2:
        parts = decompose_2d(field)
        return recompose_2d([apply_exp_g0(exponent, p) for p in parts], n_phi=field.n_phi)
    parts = decompose_1d(field)
    return recompose_1d([apply_exp_g0(exponent, p) for p in parts])


def _shift_steps(t: float, ds: float) -> int:
    steps = 2.0 * t / ds
    rounded = round(steps)
    if abs(steps - rounded) > 1e-9:
        raise GridAlignmentError(
            f"scaling by t={t} shifts log-radius by 2t={2*t}, not a multiple of ds={ds}"
        )
    return int(rounded)


def apply_scaling_direct(t: float, field: FactoredField | GridField2D | RadialSamples):
    """Dilation F -> e^{(N-2) t} F(e^{2 t} x) as a grid index shift.

    Needs 2 t to be an integer multiple of ds; the shift wraps periodically,
    which is harmless for data supported away from the grid ends.
    """
    if isinstance(field, FactoredField):
        return FactoredField(field.degree, apply_scaling_direct(t, field.radial), field.mode)
    if isinstance(field, GridField2D):
        grid = field.grid
        k = _shift_steps(t, grid.ds)
        factor = np.exp((grid.dim - 2) * t)
        return GridField2D(grid, factor * np.roll(field.values, -k, axis=1))
    grid = field.grid
    k = _shift_steps(t, grid.ds)
    factor = np.exp((grid.dim - 2) * t)
    return RadialSamples(grid, factor * np.roll(field.values, -k))
