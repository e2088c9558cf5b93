"""Exact ladder-operator actions on power functions r^lambda.

With theta = r d/dr the three radial generators at parameter a != 0 act on
r^lambda as

    H  : r^lambda -> ((2 lambda + a + N - 2)/a) r^lambda
    E+ : r^lambda -> (i/a) r^{lambda + a}
    E- : r^lambda -> (i/a) (lambda - m)(lambda + m + N - 2) r^{lambda - a}

and their a -> 0 limits (after rescaling by a) become the commuting family

    H  : r^lambda -> (2 lambda + N - 2) r^lambda
    E+ : r^lambda -> i r^lambda
    E- : r^lambda -> i (lambda - m)(lambda + m + N - 2) r^lambda.

These actions are exact on finite power sums, so commutator identities can
be checked to roundoff with no discretization error.  Exponents produced by
chains like (lambda + a) - a may differ from lambda by an ulp, so PowerSum
coalesces exponents closer than a tight tolerance before comparing.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DomainError

_EXP_MERGE = 1e-12  # exponents closer than this collapse to one term


@dataclass(frozen=True)
class LadderOperatorSpec:
    """One generator: kind in {"H", "E+", "E-"}, a = None for the limit family."""

    kind: str
    a: complex | None
    degree: int
    dim: int

    def __post_init__(self):
        if self.kind not in ("H", "E+", "E-"):
            raise DomainError(f"unknown generator kind {self.kind!r}")
        if self.a is not None and self.a == 0:
            raise DomainError("a must be nonzero; use a=None for the limit family")
        if self.degree < 0 or self.dim < 1:
            raise DomainError("need degree >= 0 and dim >= 1")


# a linear combination sum_k c_k X_k of generators
OperatorCombination = Sequence[tuple[complex, LadderOperatorSpec]]


class PowerSum:
    """Finite sum of terms c * r^lambda with complex c and lambda."""

    __slots__ = ("terms",)

    def __init__(self, terms: Iterable[tuple[complex, complex]] = ()):
        self.terms: list[tuple[complex, complex]] = []
        for lam, coeff in terms:
            self._accumulate(complex(lam), complex(coeff))

    @classmethod
    def power(cls, lam: complex, coeff: complex = 1.0) -> "PowerSum":
        return cls([(lam, coeff)])

    def _accumulate(self, lam: complex, coeff: complex) -> None:
        for i, (lam0, c0) in enumerate(self.terms):
            if abs(lam - lam0) <= _EXP_MERGE * (1.0 + abs(lam0)):
                self.terms[i] = (lam0, c0 + coeff)
                return
        self.terms.append((lam, coeff))

    def __add__(self, other: "PowerSum") -> "PowerSum":
        out = PowerSum(self.terms)
        for lam, c in other.terms:
            out._accumulate(lam, c)
        return out

    def __sub__(self, other: "PowerSum") -> "PowerSum":
        return self + other.scale(-1.0)

    def scale(self, factor: complex) -> "PowerSum":
        return PowerSum([(lam, factor * c) for lam, c in self.terms])

    def max_coeff(self) -> float:
        return max((abs(c) for _, c in self.terms), default=0.0)


def act(op: LadderOperatorSpec, f: PowerSum) -> PowerSum:
    """Apply one generator to a power sum, exactly termwise."""
    c = op.dim - 2
    m = op.degree
    out: list[tuple[complex, complex]] = []
    for lam, coeff in f.terms:
        if op.a is None:
            if op.kind == "H":
                out.append((lam, coeff * (2.0 * lam + c)))
            elif op.kind == "E+":
                out.append((lam, coeff * 1j))
            else:
                out.append((lam, coeff * 1j * (lam - m) * (lam + m + c)))
        else:
            a = op.a
            if op.kind == "H":
                out.append((lam, coeff * (2.0 * lam + a + c) / a))
            elif op.kind == "E+":
                out.append((lam + a, coeff * 1j / a))
            else:
                out.append((lam - a, coeff * (1j / a) * (lam - m) * (lam + m + c)))
    return PowerSum(out)


def _as_combination(op) -> OperatorCombination:
    if isinstance(op, LadderOperatorSpec):
        return [(1.0, op)]
    return list(op)


def act_combination(op, f: PowerSum) -> PowerSum:
    out = PowerSum()
    for coeff, spec in _as_combination(op):
        out = out + act(spec, f).scale(coeff)
    return out


def commutator_defect(x, y, expected, basis: Iterable[complex]) -> float:
    """Max coefficient of ([X, Y] - expected) r^lambda over the basis.

    x, y, expected may each be a LadderOperatorSpec or a linear combination;
    expected may also be None for the zero operator.
    """
    worst = 0.0
    for lam in basis:
        f = PowerSum.power(lam)
        bracket = act_combination(x, act_combination(y, f)) - act_combination(
            y, act_combination(x, f)
        )
        if expected is not None:
            bracket = bracket - act_combination(expected, f)
        worst = max(worst, bracket.max_coeff())
    return worst


def rescaled_pair(kind: str, a: complex, degree: int, dim: int) -> OperatorCombination:
    """The contraction-scaled generator a * X_a as a combination."""
    return [(a, LadderOperatorSpec(kind, a, degree, dim))]


def degeneration_trace(
    a_sequence: Sequence[complex],
    pair: tuple[str, str],
    basis: Iterable[complex],
    degree: int,
    dim: int,
) -> list[float]:
    """Commutator defects of the rescaled pair against zero, per value of a.

    The rescaled brackets contract like [a X_a, a Y_a] = a * (linear in the
    rescaled family), so the defects must drop linearly with a.
    """
    basis = list(basis)
    out = []
    for a in a_sequence:
        x = rescaled_pair(pair[0], a, degree, dim)
        y = rescaled_pair(pair[1], a, degree, dim)
        out.append(commutator_defect(x, y, None, basis))
    return out


def standard_basis() -> list[complex]:
    """The 18-point exponent basis {-2..3} + i{-1, 0, 1} used by the checks."""
    return [complex(p, q) for p in range(-2, 4) for q in (-1, 0, 1)]
