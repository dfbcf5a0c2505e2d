"""Members of the Janowski-type (j,k)-symmetric starlike class.

The class is defined by the subordination z f'/f < (1 + A z^m)/(1 + B z^m)
with m = j + k - 1.  Members are generated by picking the subordination
witness directly at the level w = z^m through certified Schwarz seeds:
any analytic v with v(0) = 0 and |v(w)| <= |w| yields

    z f'/f - 1 = (A - B) V / (1 + B V),     V(z) = v(z^m),

and f is recovered as z * exp(int_0^z (z f'/f - 1) dt / t).  The identity
seed v(w) = w reproduces the closed-form extremal function.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import InvalidParams, InvalidSeed, TruncationTooSmall
from .series import (
    TruncatedSeries,
    compose_power,
    div,
    exp_series,
    from_coeffs,
    integrate_over_t,
    monomial,
    one,
    pow_complex,
    scale,
)


@dataclass(frozen=True)
class ClassParams:
    """Parameters (j, k, A, B) of the class; m = j + k - 1."""

    j: int
    k: int
    A: complex
    B: float

    def __post_init__(self):
        object.__setattr__(self, "A", complex(self.A))
        object.__setattr__(self, "B", float(self.B))
        if self.k < 1 or self.j < 0:
            raise InvalidParams(f"need j >= 0 and k >= 1, got (j, k) = ({self.j}, {self.k})")
        if not (0 <= self.j <= self.k - 1 or (self.j, self.k) == (1, 1)):
            raise InvalidParams(f"(j, k) = ({self.j}, {self.k}) outside 0 <= j <= k-1 (or (1, 1))")
        if self.j + self.k - 1 < 1:
            raise InvalidParams("degenerate pair j = 0, k = 1")
        if not -1.0 <= self.B <= 0.0:
            raise InvalidParams(f"B = {self.B} outside [-1, 0]")
        if self.A == complex(self.B):
            raise InvalidParams("A = B degenerates the class")

    @property
    def m(self) -> int:
        return self.j + self.k - 1


class SchwarzSeed:
    """Parametric analytic self-map v of the disk with v(0) = 0, |v(w)| <= |w|."""

    def label(self) -> str:
        raise NotImplementedError

    def sort_key(self) -> tuple:
        return (self.label(),)


@dataclass(frozen=True)
class Identity(SchwarzSeed):
    """v(w) = w (the subordination becomes an equality)."""

    def label(self) -> str:
        return "identity"


@dataclass(frozen=True)
class Rotation(SchwarzSeed):
    """v(w) = e^{i theta} w."""

    theta: float

    def label(self) -> str:
        return f"rotation(theta={self.theta:.6g})"

    def sort_key(self) -> tuple:
        return ("rotation", self.theta)


@dataclass(frozen=True)
class ExpDamp(SchwarzSeed):
    """v(w) = e^{i theta} w e^{c (w - 1)}, c >= 0.

    Certified by Re(w) < 1 on the disk, hence |e^{c(w-1)}| <= 1.
    """

    theta: float
    c: float

    def __post_init__(self):
        if self.c < 0:
            raise InvalidSeed(f"damping c = {self.c} must be nonnegative")

    def label(self) -> str:
        return f"expdamp(theta={self.theta:.6g},c={self.c:.6g})"

    def sort_key(self) -> tuple:
        return ("expdamp", self.theta, self.c)


@dataclass(frozen=True)
class Polynomial(SchwarzSeed):
    """v(w) = sum_{i>=1} p_i w^i, certified by sum |p_i| <= 1."""

    coeffs: tuple[complex, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(complex(c) for c in self.coeffs))
        if sum(abs(c) for c in self.coeffs) > 1.0 + 1e-12:
            raise InvalidSeed("polynomial seed violates sum |p_i| <= 1")

    def label(self) -> str:
        body = ",".join(f"{c.real:.6g}{c.imag:+.6g}i" for c in self.coeffs)
        return f"poly({body})"

    def sort_key(self) -> tuple:
        return ("poly",) + tuple(x for c in self.coeffs for x in (c.real, c.imag))


def seed_series(seed: SchwarzSeed, order: int) -> TruncatedSeries:
    """Taylor coefficients of v(w) at 0, truncated at `order`; v(0) = 0 exactly."""
    cs = [0j] * (order + 1)
    if isinstance(seed, Identity):
        if order >= 1:
            cs[1] = 1.0
    elif isinstance(seed, Rotation):
        if order >= 1:
            cs[1] = cmath.exp(1j * seed.theta)
    elif isinstance(seed, ExpDamp):
        # w e^{c(w-1)} = e^{-c} sum_i c^i w^{i+1} / i!
        factor = cmath.exp(1j * seed.theta) * math.exp(-seed.c)
        term = complex(factor)
        for i in range(order):
            cs[i + 1] = term
            term *= seed.c / (i + 1)
    elif isinstance(seed, Polynomial):
        for i, c in enumerate(seed.coeffs, start=1):
            if i <= order:
                cs[i] = c
    else:
        raise InvalidSeed(f"unknown seed type {type(seed).__name__}")
    return TruncatedSeries(tuple(cs))


@dataclass(frozen=True)
class ClassMember:
    """A generated class member f with its provenance.

    `order` is the truncation order of log(f/z); `series` holds f itself and
    carries one extra coefficient (order + 1) so that f/z is exact through
    z^order.
    """

    series: TruncatedSeries
    params: ClassParams
    seed: SchwarzSeed
    order: int

    def ratio_series(self) -> TruncatedSeries:
        """f(z)/z, a unit-constant-term series of order `order`."""
        return TruncatedSeries(self.series.coeffs[1:])


def _lift(ratio: TruncatedSeries, params: ClassParams, seed: SchwarzSeed) -> ClassMember:
    """Prepend the zero constant term: f = z * ratio."""
    f = TruncatedSeries((0j,) + ratio.coeffs)
    return ClassMember(series=f, params=params, seed=seed, order=ratio.order)


def extremal_function(params: ClassParams, order: int) -> ClassMember:
    """The closed-form extremal member, truncated at log-order `order`.

    f = z exp(A z^m / m) for B = 0, z (1 + B z^m)^{(A-B)/(mB)} otherwise.
    """
    m = params.m
    if order < m:
        raise TruncationTooSmall(f"order {order} < m = {m}")
    if params.B == 0.0:
        ratio = exp_series(monomial(params.A / m, m, order))
    else:
        base = from_coeffs([1.0], order) + monomial(params.B, m, order)
        ratio = pow_complex(base, (params.A - params.B) / (m * params.B))
    return _lift(ratio, params, Identity())


def member_from_seed(params: ClassParams, seed: SchwarzSeed, order: int) -> ClassMember:
    """Generate the member induced by a Schwarz seed at level w = z^m."""
    m = params.m
    if order < m:
        raise TruncationTooSmall(f"order {order} < m = {m}")
    V = compose_power(seed_series(seed, order), m, order)
    # z f'/f - 1 = (A - B) V / (1 + B V); constant terms stay exactly zero
    P = div(scale(V, params.A - params.B), one(order) + scale(V, params.B))
    ratio = exp_series(integrate_over_t(P))
    return _lift(ratio, params, seed)


def q_function(params: ClassParams, order: int) -> TruncatedSeries:
    """The superordinate series for z/f: e^{-A z^m / m} or (1 + B z^m)^{-(A-B)/(mB)}."""
    m = params.m
    if params.B == 0.0:
        return exp_series(monomial(-params.A / m, m, order))
    base = from_coeffs([1.0], order) + monomial(params.B, m, order)
    return pow_complex(base, -(params.A - params.B) / (m * params.B))


def suggested_order(params: ClassParams, eps: float = 1e-13, cap: int = 4096) -> int:
    """Truncation order making the extremal geometric tail below `eps`.

    Picks N = m * N_d with B^{2 N_d} / (1 - B^2) < eps; B = 0 needs only a
    handful of terms, B = -1 is capped (the tail there decays like 1/N).
    """
    m = params.m
    b2 = params.B * params.B
    if b2 == 0.0:
        return 32 * m
    if b2 >= 1.0:
        return 512 * m
    n_d = max(8, math.ceil(math.log(eps * (1.0 - b2)) / math.log(b2)))
    return m * min(n_d, cap)


def radial_derivative(member: ClassMember) -> TruncatedSeries:
    """z f'/f - 1 recomputed from the stored series (consistency probe).

    With f = z * R this equals z R'/R.
    """
    ratio = member.ratio_series()
    num = TruncatedSeries(tuple(n * c for n, c in enumerate(ratio.coeffs)))
    return div(num, ratio)
