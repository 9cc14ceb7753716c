"""Linear recurrences with constant coefficients: exact iteration,
normalization from general form, the characteristic polynomial, and the
ratio-of-successive-terms estimator.

Iteration is the ground truth everything else is checked against, so the
all-integer case runs in exact arbitrary-precision arithmetic.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ArityMismatch, NonConvergent, ZeroDivisionInRatio, ZeroLeadingCoefficient


def _is_integral(value) -> bool:
    return isinstance(value, int) or (isinstance(value, float) and value.is_integer())


@dataclass(frozen=True)
class Recurrence:
    """x_{k+n} = c_{n-1} x_{k+n-1} + ... + c_0 x_k with seeds x_0..x_{n-1}."""

    coeffs: tuple
    seeds: tuple
    integral: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        object.__setattr__(self, "seeds", tuple(self.seeds))
        if len(self.coeffs) < 1:
            raise ArityMismatch("recurrence needs at least one coefficient")
        if len(self.seeds) != len(self.coeffs):
            raise ArityMismatch(
                f"{len(self.coeffs)} coefficients need {len(self.coeffs)} seeds, "
                f"got {len(self.seeds)}"
            )
        integral = all(_is_integral(v) for v in self.coeffs + self.seeds)
        object.__setattr__(self, "integral", integral)

    @property
    def order(self) -> int:
        return len(self.coeffs)


@dataclass(frozen=True)
class CharPoly:
    """Monic characteristic polynomial x^n = c_{n-1} x^(n-1) + ... + c_0."""

    degree: int
    coeffs: tuple  # c_0..c_{n-1}

    def __post_init__(self):
        if self.degree != len(self.coeffs):
            raise ArityMismatch("degree must equal the coefficient count")

    def value(self, z: complex) -> complex:
        """p(z) = z^n - c_{n-1} z^(n-1) - ... - c_0, by Horner."""
        acc = complex(1)
        for c in reversed(self.coeffs):
            acc = acc * z - c
        return acc


def from_general(a) -> tuple:
    """Coefficients c_j = -a_j/a_n from the general form sum(a_j x_{k+j}) = 0.

    Exact division (results stay integers when they are integers).
    """
    a = list(a)
    if len(a) < 2:
        raise ArityMismatch("general form needs at least a_0 and a_1")
    if a[-1] == 0:
        raise ZeroLeadingCoefficient("a_n must be nonzero")
    out = []
    for aj in a[:-1]:
        c = -Fraction(aj) / Fraction(a[-1])
        out.append(int(c) if c.denominator == 1 else float(c))
    return tuple(out)


def iterate(rec: Recurrence, count: int):
    """First `count` terms; exact integers when the recurrence is integral."""
    if rec.integral:
        window = [int(x) for x in rec.seeds]
        coeffs = [int(c) for c in rec.coeffs]
    else:
        window = [float(x) for x in rec.seeds]
        coeffs = [float(c) for c in rec.coeffs]
    n = rec.order
    out = list(window[:count])
    while len(out) < count:
        nxt = sum(c * x for c, x in zip(coeffs, window))
        out.append(nxt)
        window = window[1:] + [nxt]
    return out


def characteristic_polynomial(rec: Recurrence) -> CharPoly:
    return CharPoly(rec.order, rec.coeffs)


def characteristic_ratio(rec: Recurrence, iters: int) -> float:
    """Estimate lim x_{k+1}/x_k from the term at k = iters-1.

    The last five ratio estimates must agree to 1e-6 (Cauchy-style check);
    otherwise the limit is not considered established.
    """
    n = rec.order
    if iters < n + 2:
        raise ValueError(f"iters must be at least order+2 = {n + 2}")
    seq = iterate(rec, iters + 1)

    probes = range(max(iters - 5, 0), iters)
    ratios = []
    for k in probes:
        if seq[k] == 0:
            raise ZeroDivisionInRatio(f"term x_{k} is zero at a probe index")
        if rec.integral:
            ratios.append(float(Fraction(seq[k + 1], seq[k])))
        else:
            ratios.append(seq[k + 1] / seq[k])
    for prev, cur in zip(ratios, ratios[1:]):
        if abs(cur - prev) > 1e-6:
            raise NonConvergent(
                f"ratio estimates still moving by {abs(cur - prev):.3g} near k={iters}"
            )
    return ratios[-1]
