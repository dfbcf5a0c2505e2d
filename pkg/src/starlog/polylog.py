"""Polylogarithm Li_v(x) on x in [0, 1], accurate to 1e-12 absolute.

The dilogarithm (v = 2) is the primary order: for x <= 1/2 the defining
series already converges geometrically at rate <= 2^-n; for x > 1/2 the
Euler reflection identity

    Li_2(x) + Li_2(1 - x) = pi^2/6 - ln(x) ln(1 - x)

restores that rate.  Orders v > 2 fall back to the direct series, with an
Euler-Maclaurin tail at x = 1 (where the value is zeta(v)).
"""

from __future__ import annotations

import math

from .errors import DomainError

ZETA2 = math.pi**2 / 6


def _series_sum(v: float, x: float, max_terms: int = 20_000_000) -> float:
    """Direct sum of x^n / n^v; stops once both tail bounds fall below 1e-16."""
    terms = []
    xn = 1.0
    for n in range(1, max_terms + 1):
        xn *= x
        term = xn / n**v
        terms.append(term)
        if term == 0.0:
            break
        # geometric tail and integral-test tail; either certifies the cut
        geo = term * x / (1.0 - x) if x < 1.0 else math.inf
        power = xn * x * n ** (1.0 - v) / (v - 1.0) if v > 1.0 else math.inf
        if min(geo, power) < 1e-16:
            break
    return math.fsum(terms)


def _zeta_direct(v: float, cutoff: int = 100_000) -> float:
    """zeta(v) for v > 2 by direct sum plus an Euler-Maclaurin tail."""
    head = math.fsum(n ** (-v) for n in range(1, cutoff + 1))
    a = cutoff + 1
    tail = a ** (1.0 - v) / (v - 1.0) + 0.5 * a ** (-v) + v / 12.0 * a ** (-v - 1.0)
    return head + tail


def li(v: float, x: float) -> float:
    """Li_v(x) = sum_{n>=1} x^n / n^v for x in [0, 1].

    Supported orders: v >= 2 on the closed interval, or v > 1 with x < 1
    (there the direct series is still absolutely convergent).
    """
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"argument x={x} outside [0, 1]")
    if v < 2.0 and not (v > 1.0 and x < 1.0):
        raise DomainError(f"order v={v} unsupported at x={x}")
    if x == 0.0:
        return 0.0
    if v == 2.0:
        if x == 1.0:
            return ZETA2
        if x > 0.5:
            return ZETA2 - math.log(x) * math.log1p(-x) - _series_sum(2.0, 1.0 - x)
        return _series_sum(2.0, x)
    if x == 1.0:
        return _zeta_direct(v)
    return _series_sum(v, x)


def li_ratio(x: float) -> float:
    """Li_2(x)/x, extended by its limit value 1 at x = 0."""
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"argument x={x} outside [0, 1]")
    if x == 0.0:
        return 1.0
    return li(2.0, x) / x
