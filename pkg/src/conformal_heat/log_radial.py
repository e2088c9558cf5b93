"""Log-radial change of variables and the unitary Fourier transform.

The radial Hilbert space is L2(R_+, r^{N-3} dr).  Substituting r = e^s and
weighting by e^{(N-2)s/2} gives a unitary onto L2(R, ds):

    (U f)(s)     = e^{(N-2)s/2} f(e^s),
    (U^{-1} g)(r) = r^{-(N-2)/2} g(log r).

On the line we use the symmetric Fourier convention

    g^(sigma) = (2 pi)^{-1/2} int g(s) e^{-i sigma s} ds,

discretized on a periodic grid s_j = s_min + j ds as a rescaled DFT, so the
discrete transform is exactly unitary between the weighted norms below.
Frequencies are kept in signed (fftshift) order sigma_k = 2 pi k / (n ds)
with k = -n/2 .. n/2 - 1.

Sampled functions should decay below roughly 1e-13 inside the central half
of [s_min, s_max]; the transform is periodic and wraps anything that leaks
past the ends.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import DomainError


def _is_pow2(n: int) -> bool:
    return n >= 1 and (n & (n - 1)) == 0


@dataclass(frozen=True)
class LogRadialGrid:
    """Periodic grid in s = log r carrying the ambient dimension N."""

    dim: int
    s_min: float = -16.0
    s_max: float = 16.0
    n: int = 2048

    def __post_init__(self):
        if self.dim < 1:
            raise DomainError(f"dim must be >= 1, got {self.dim}")
        if not (self.s_min < self.s_max):
            raise DomainError("need s_min < s_max")
        if not _is_pow2(self.n) or self.n < 8:
            raise DomainError(f"n={self.n} must be a power of two >= 8")

    @property
    def ds(self) -> float:
        return (self.s_max - self.s_min) / self.n

    @cached_property
    def s(self) -> np.ndarray:
        return self.s_min + self.ds * np.arange(self.n)

    @cached_property
    def r(self) -> np.ndarray:
        return np.exp(self.s)

    @cached_property
    def sigma(self) -> np.ndarray:
        """Frequency samples in fftshift order, sigma_k = 2 pi k/(n ds)."""
        return np.fft.fftshift(2.0 * math.pi * np.fft.fftfreq(self.n, d=self.ds))


@dataclass
class RadialSamples:
    """Samples of a radial profile f(r_j) on a log-radial grid."""

    grid: LogRadialGrid
    values: np.ndarray

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=complex)
        if self.values.shape != (self.grid.n,):
            raise DomainError(f"expected {self.grid.n} samples, got shape {self.values.shape}")

    def copy(self) -> "RadialSamples":
        return RadialSamples(self.grid, self.values.copy())


@dataclass
class FrequencySamples:
    """Samples g^(sigma_k) in the fftshift order of LogRadialGrid.sigma."""

    grid: LogRadialGrid
    values: np.ndarray

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=complex)
        if self.values.shape != (self.grid.n,):
            raise DomainError(f"expected {self.grid.n} samples, got shape {self.values.shape}")


def u_forward(f: RadialSamples) -> np.ndarray:
    """Push f through U: returns g(s_j) = e^{(N-2) s_j / 2} f(r_j)."""
    w = np.exp(0.5 * (f.grid.dim - 2) * f.grid.s)
    return w * f.values


def u_inverse(grid: LogRadialGrid, g: np.ndarray) -> RadialSamples:
    """Pull s-side samples back: f(r_j) = r_j^{-(N-2)/2} g(s_j)."""
    w = np.exp(-0.5 * (grid.dim - 2) * grid.s)
    return RadialSamples(grid, w * np.asarray(g, dtype=complex))


def fourier_forward(grid: LogRadialGrid, g: np.ndarray) -> FrequencySamples:
    """Discrete realization of g -> g^, exactly unitary for the norms below.

    g^(sigma_k) = (ds / sqrt(2 pi)) e^{-i sigma_k s_min} FFT(g)_k, stored in
    fftshift order to match grid.sigma.
    """
    g = np.asarray(g, dtype=complex)
    if g.shape != (grid.n,):
        raise DomainError(f"expected {grid.n} samples, got shape {g.shape}")
    spec = np.fft.fft(g)
    sigma_unshifted = 2.0 * math.pi * np.fft.fftfreq(grid.n, d=grid.ds)
    spec *= grid.ds / math.sqrt(2.0 * math.pi) * np.exp(-1j * sigma_unshifted * grid.s_min)
    return FrequencySamples(grid, np.fft.fftshift(spec))


def fourier_inverse(gh: FrequencySamples) -> np.ndarray:
    """Inverse of fourier_forward; returns s-side samples g(s_j)."""
    grid = gh.grid
    spec = np.fft.ifftshift(gh.values).astype(complex)
    sigma_unshifted = 2.0 * math.pi * np.fft.fftfreq(grid.n, d=grid.ds)
    spec = spec * np.exp(1j * sigma_unshifted * grid.s_min)
    return np.fft.ifft(spec) * (math.sqrt(2.0 * math.pi) / grid.ds)


def weighted_norm(f: RadialSamples) -> float:
    """Discrete L2(r^{N-3} dr) norm; r^{N-3} dr = r^{N-2} ds on the log grid."""
    w = f.grid.r ** (f.grid.dim - 2)
    return math.sqrt(float(np.sum(np.abs(f.values) ** 2 * w) * f.grid.ds))


def frequency_norm(gh: FrequencySamples) -> float:
    """Discrete L2(d sigma) norm on the frequency side."""
    dsigma = 2.0 * math.pi / (gh.grid.n * gh.grid.ds)
    return math.sqrt(float(np.sum(np.abs(gh.values) ** 2) * dsigma))
