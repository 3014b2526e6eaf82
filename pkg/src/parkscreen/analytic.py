"""Closed-form layer densities for 3-site multilayer parking with screening.

The lattice has three active columns (center and two borders, each receiving
unit-rate Poisson arrivals) between two inert boundary columns.  Consecutive
particles in the center column are separated by a random vertical jump
``d >= 1``: one plus the larger of the two border arrival counts during the
center interarrival window.  Jumps are independent and identically
distributed, which makes the center column a renewal process in the layer
index.  Everything in this module is derived from that structure:

* :func:`jump_pmf` / :func:`empty_run_pmf` - the exact jump distribution,
* :func:`renewal_weights` - probability that the i-th center particle lands
  exactly on a given layer (i-fold convolution of the jump pmf),
* :func:`density_profile` / :func:`density_at` - the closed-form
  ``C - e^{-t} * poly(t)`` layer-occupancy curve built from those weights,
* :func:`end_density` - the exact t -> infinity occupancy of a layer,
* :func:`expected_run` / :func:`limit_density` - the high-layer limit
  ``(10 - sqrt(5))/19`` via the mean empty-run length.

All intermediate arithmetic is exact rational; floating point appears only
when a caller asks for a numeric evaluation.

A caveat worth knowing: the closed-form time profile treats the jump sizes
as independent of the center arrival clock.  That is exact in the
t -> infinity limit (the end densities and the high-layer limit are exact),
but at finite t the true occupancy of the simulated process rises faster
than the closed form.  See the simulator test suite for the quantified gap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exactmath import Rational, binomial, rational_pow

__all__ = [
    "DensityProfile",
    "RenewalWeights",
    "SurdValue",
    "LIMIT_DENSITY",
    "jump_pmf",
    "jump_pmf_table",
    "empty_run_pmf",
    "renewal_weights",
    "renewal_weights_naive",
    "density_profile",
    "density_at",
    "end_density",
    "end_density_sequence",
    "limit_density",
    "border_count_pmf",
    "cond_expected_run",
    "expected_run",
    "central_binomial_series",
]

_THIRD = Fraction(1, 3)


# ---------------------------------------------------------------------------
# jump / empty-run distributions
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def jump_pmf(d: int) -> Rational:
    """P(vertical jump between consecutive center particles = d), exactly.

    ``d`` is one plus the larger of the two border Poisson counts over an
    Exp(1) window:

        P(d) = (2/3) * sum_{k=0}^{d-2} C(d+k-1, k) (1/3)^{d+k-1}
                     + C(2d-2, d-1) (1/3)^{2d-1}

    Jumps start at 1, so d = 0 is rejected.
    """
    if d < 1:
        raise ValueError(f"jump distance must be >= 1, got {d}")
    head = sum(
        binomial(d + k - 1, k) * rational_pow(_THIRD, d + k - 1)
        for k in range(d - 1)
    )
    return Fraction(2, 3) * head + binomial(2 * d - 2, d - 1) * rational_pow(_THIRD, 2 * d - 1)


def jump_pmf_table(max_d: int) -> dict[int, Rational]:
    """Tabulated jump pmf for d = 1..max_d.

    The table never sums to 1 exactly: the tail beyond any finite max_d is
    strictly positive (it decays geometrically at ratio 4/9).
    """
    if max_d < 1:
        raise ValueError(f"max_d must be >= 1, got {max_d}")
    return {d: jump_pmf(d) for d in range(1, max_d + 1)}


def empty_run_pmf(d: int) -> Rational:
    """P(empty run between consecutive center particles = d), exactly.

    The empty run is the larger of the two border arrival counts during one
    Exp(1) center interarrival window:

        P(d) = (2/3) * sum_{k=0}^{d-1} C(d+k, k) (1/3)^{d+k}
                     + C(2d, d) (1/3)^{2d+1}

    Since the jump is the run plus one, ``empty_run_pmf(d) == jump_pmf(d+1)``
    (asserted by the test suite; the two are computed independently).
    """
    if d < 0:
        raise ValueError(f"run length must be >= 0, got {d}")
    head = sum(
        binomial(d + k, k) * rational_pow(_THIRD, d + k)
        for k in range(d)
    )
    return Fraction(2, 3) * head + binomial(2 * d, d) * rational_pow(_THIRD, 2 * d + 1)


# ---------------------------------------------------------------------------
# renewal weights
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RenewalWeights:
    """w[i-1] = P(the i-th center particle lands exactly on the layer)."""

    layer: int
    weights: tuple[Rational, ...]

    def total(self) -> Rational:
        return sum(self.weights, Fraction(0))


def renewal_weights(r: int) -> RenewalWeights:
    """Landing weights w_1..w_r for layer r by iterated exact convolution.

    w_i is the i-fold convolution of the jump pmf evaluated at r.  The
    convolution table costs O(r^2) rational entries instead of the
    2^(r-1) compositions the definition sums over.
    """
    if r < 1:
        raise ValueError(f"layer must be >= 1, got {r}")
    pmf = [Fraction(0)] + [jump_pmf(d) for d in range(1, r + 1)]
    # conv[s] = i-fold convolution at layer s, rolled forward in i.
    conv = pmf[:]
    weights = [conv[r]]
    for _ in range(2, r + 1):
        nxt = [Fraction(0)] * (r + 1)
        for s in range(2, r + 1):
            acc = Fraction(0)
            for d in range(1, s):
                if conv[s - d]:
                    acc += pmf[d] * conv[s - d]
            nxt[s] = acc
        conv = nxt
        weights.append(conv[r])
    return RenewalWeights(layer=r, weights=tuple(weights))


_NAIVE_MAX = 14


def renewal_weights_naive(r: int) -> RenewalWeights:
    """Landing weights by explicit enumeration of all 2^(r-1) compositions.

    Test oracle for :func:`renewal_weights`; rejects r > 14 because the
    enumeration is exponential.
    """
    if r < 1:
        raise ValueError(f"layer must be >= 1, got {r}")
    if r > _NAIVE_MAX:
        raise ValueError(
            f"enumeration supports layers up to {_NAIVE_MAX}, got {r}"
        )
    totals = [Fraction(0)] * (r + 1)

    def extend(remaining: int, parts: int, product: Fraction) -> None:
        if remaining == 0:
            totals[parts] += product
            return
        for d in range(1, remaining + 1):
            extend(remaining - d, parts + 1, product * jump_pmf(d))

    extend(r, 0, Fraction(1))
    return RenewalWeights(layer=r, weights=tuple(totals[1 : r + 1]))


# ---------------------------------------------------------------------------
# density profiles
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DensityProfile:
    """Closed-form occupancy curve of a center-column layer.

    The curve is ``C - e^{-t} * sum_l coeffs[l] t^l / l!`` with exact
    rational C and coefficients.  ``coeffs[0] == C`` so the value at t = 0
    is exactly zero; the coefficients are the tail sums of the landing
    weights, hence nonincreasing and bounded by C.
    """

    layer: int
    constant: Rational
    coeffs: tuple[Rational, ...]

    def value_at(self, t: float) -> float:
        if not math.isfinite(t) or t < 0:
            raise ValueError(f"time must be finite and >= 0, got {t}")
        poly = 0.0
        term = 1.0
        for l, b in enumerate(self.coeffs):
            if l > 0:
                term *= t / l
            poly += float(b) * term
        return float(self.constant) - math.exp(-t) * poly


@lru_cache(maxsize=None)
def density_profile(r: int) -> DensityProfile:
    """Exact occupancy curve of center-column layer r.

    The particle that can fill layer r is the i-th center arrival with
    probability w_i; its arrival-count envelope contributes t^l/l! terms up
    to degree i, so the coefficient of t^l/l! is the tail sum of the
    weights from index max(l, 1) upward.
    """
    w = renewal_weights(r).weights
    constant = sum(w, Fraction(0))
    coeffs = [constant]
    tail = constant
    for l in range(1, r + 1):
        if l >= 2:
            tail -= w[l - 2]
        coeffs.append(tail)
    return DensityProfile(layer=r, constant=constant, coeffs=tuple(coeffs))


def density_at(r: int, t: float) -> float:
    """Closed-form occupancy of center-column layer r at time t (float)."""
    return density_profile(r).value_at(t)


# ---------------------------------------------------------------------------
# end densities
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def end_density_sequence(r_max: int) -> tuple[Rational, ...]:
    """Exact eventual occupancies (u_0..u_r_max) of the center column.

    u_0 = 1 by convention and u_r = sum_d jump_pmf(d) * u_{r-d}: a layer is
    eventually hit iff some earlier hit layer is one jump below it.  This is
    the O(r^2) production path; it agrees with summing the renewal weights
    (equality is exercised exactly by the tests).
    """
    if r_max < 0:
        raise ValueError(f"r_max must be >= 0, got {r_max}")
    pmf = [Fraction(0)] + [jump_pmf(d) for d in range(1, r_max + 1)]
    seq = [Fraction(1)]
    for s in range(1, r_max + 1):
        seq.append(sum(pmf[d] * seq[s - d] for d in range(1, s + 1)))
    return tuple(seq)


def end_density(r: int) -> Rational:
    """Exact probability that center-column layer r is eventually occupied."""
    if r < 1:
        raise ValueError(f"layer must be >= 1, got {r}")
    return end_density_sequence(r)[r]


# ---------------------------------------------------------------------------
# high-layer limit
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SurdValue:
    """Exact surd of the form (a - sqrt(b)) / c with integer a, b, c."""

    integer_part: int
    radicand: int
    denominator: int

    def value(self) -> float:
        return (self.integer_part - math.sqrt(self.radicand)) / self.denominator

    def __str__(self) -> str:
        return f"({self.integer_part} - sqrt({self.radicand}))/{self.denominator}"


#: Exact high-layer limit of the center-column end density: (10 - sqrt(5))/19.
LIMIT_DENSITY = SurdValue(integer_part=10, radicand=5, denominator=19)


def limit_density() -> float:
    """High-layer limit of the end density, (10 - sqrt(5))/19 ~ 0.4086281."""
    return LIMIT_DENSITY.value()


def border_count_pmf(n: int) -> Rational:
    """P(n border arrivals during one center interarrival window) = (1/3)(2/3)^n.

    Both borders together arrive at rate 2 against the center's rate 1, so
    the count between consecutive center arrivals is geometric.
    """
    if n < 0:
        raise ValueError(f"count must be >= 0, got {n}")
    return Fraction(1, 3) * rational_pow(Fraction(2, 3), n)


def cond_expected_run(n: int) -> Rational:
    """Expected empty run given n border arrivals in the window, exactly.

    The n arrivals split between the two borders like fair coin flips and
    the run is the larger share, so for n = 2k the mean is
    ``k + k C(2k,k) / 4^k`` and for n = 2k+1 it is
    ``(2k+1)/2 * (1 + C(2k,k) / 4^k)``.  Both closed forms equal the
    defining sum ``sum_i max(i, n-i) C(n,i) / 2^n`` (tested exactly).
    """
    if n < 0:
        raise ValueError(f"count must be >= 0, got {n}")
    k, odd = divmod(n, 2)
    central = Fraction(binomial(2 * k, k), 4**k)
    if odd:
        return Fraction(2 * k + 1, 2) * (1 + central)
    return k * (1 + central)


def expected_run(tolerance: float) -> float:
    """Mean empty run between consecutive center particles, within tolerance.

    Sums the even/odd pairs of ``cond_expected_run(n) * border_count_pmf(n)``
    with exact rational partial sums.  Each even+odd pair is dominated by a
    geometric envelope of ratio 4/9, so the series is truncated once a pair
    drops below tolerance/10 (leaving a tail well under tolerance).  The
    limit is 1 + 1/sqrt(5) ~ 1.4472136.
    """
    if not (tolerance > 0) or not math.isfinite(tolerance):
        raise ValueError(f"tolerance must be a positive finite real, got {tolerance}")
    total = Fraction(0)
    k = 0
    while True:
        pair = (
            cond_expected_run(2 * k) * border_count_pmf(2 * k)
            + cond_expected_run(2 * k + 1) * border_count_pmf(2 * k + 1)
        )
        total += pair
        if k >= 1 and pair < Fraction(tolerance) / 10:
            return float(total)
        k += 1


def central_binomial_series(x: Rational, k_max: int) -> tuple[Rational, Rational]:
    """Partial sums of sum C(2k,k) x^k and sum k C(2k,k) x^k up to k_max.

    Both series converge for 0 <= x < 1/4, to 1/sqrt(1-4x) and
    2x/(1-4x)^(3/2) respectively; this helper exists so the tests can pin
    the convergence behind :func:`expected_run` at x = 1/9.
    """
    x = Fraction(x)
    if not (0 <= x < Fraction(1, 4)):
        raise ValueError(f"series argument must satisfy 0 <= x < 1/4, got {x}")
    if k_max < 0:
        raise ValueError(f"k_max must be >= 0, got {k_max}")
    plain = Fraction(0)
    weighted = Fraction(0)
    power = Fraction(1)
    for k in range(k_max + 1):
        term = binomial(2 * k, k) * power
        plain += term
        weighted += k * term
        power *= x
    return plain, weighted
