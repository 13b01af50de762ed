"""Gaussian-kernel special functions used by the heavy-traffic asymptotics.

The central objects are the semi-infinite integrals

    G1(b) = int_0^inf e(b,t) / (1 - e(b,t)) dt
    G2(b) = int_0^inf b^2/(b^2+t^2) * e(b,t) / (1 - e(b,t)) dt
    G0(b) = G1(b) - G2(b)
    G5(b) = int_0^inf e(b,t) / (1 - e(b,t))^2 dt
    G6(b) = int_0^inf b^2/(b^2+t^2) * e(b,t) / (1 - e(b,t))^2 dt
    G4(b) = G5(b) - G6(b)
    G3(b) = int_0^inf t^2/(b^2+t^2)^2 * e(b,t) / (1 - e(b,t)) dt

with e(b,t) = exp(-b^2-t^2), plus the empty-system functional

    F(beta) = sum_{n>=1} (1/n) P(N(0,1) > beta sqrt(n))

and the expected all-time maximum of a Gaussian random walk with drift
-beta and unit variance.

Each G and F admits a power series in b whose coefficients are Riemann
zeta values at negative half-integers; the series converge on
0 < b < sqrt(2*pi) (0 < beta < 2*sqrt(pi) for F and the walk maximum).
Every operation evaluates both the series (when applicable) and an
adaptive quadrature of the defining integral so the two independent
routes can be cross-checked.

All functions are pure and stateless; they are safe to call from any
number of threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from scipy.integrate import quad as _scipy_quad

__all__ = [
    "SeriesResult",
    "zeta",
    "erfc",
    "lerch_phi",
    "g0",
    "g1",
    "g2",
    "g3",
    "g4",
    "g5",
    "g6",
    "f_of_beta",
    "em_beta",
    "SQRT_TWO_PI",
    "TWO_SQRT_PI",
]

SQRT_PI = math.sqrt(math.pi)
SQRT_TWO_PI = math.sqrt(2.0 * math.pi)  # series validity bound for the G family
TWO_SQRT_PI = 2.0 * math.sqrt(math.pi)  # series validity bound for F and E[max]

_T_MAX = 9.0  # exp(-81) ~ 6e-36: the integrand tail beyond this is invisible
_MAX_SERIES_TERMS = 600
_REL_STOP = 1e-17


@dataclass(frozen=True)
class SeriesResult:
    """Value of a function computed by zeta series with quadrature backup.

    ``value`` is the series sum when ``in_domain`` is true, otherwise the
    quadrature result.  ``truncation_bound`` is an absolute bound on the
    discarded series tail (the quadrature error estimate when the series
    does not apply).  ``quad_value`` always carries the direct quadrature
    of the defining integral.
    """

    value: float
    terms_used: int
    truncation_bound: float
    in_domain: bool
    quad_value: float


# ----------------------------------------------------------------------
# Riemann zeta on the real line (pole at 1 excluded)
# ----------------------------------------------------------------------

# B_2, B_4, ..., B_20
_BERNOULLI_2K = (
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
)
_EM_N = 25


def _zeta_em(s: float) -> float:
    """Euler-Maclaurin evaluation of zeta, reliable for s > -15, s != 1."""
    n = _EM_N
    pieces = [float(k) ** (-s) for k in range(1, n)]
    pieces.append(n ** (1.0 - s) / (s - 1.0))
    pieces.append(0.5 * n ** (-s))
    rising = s  # s (s+1) ... (s+2k-2)
    npow = float(n) ** (-s - 1.0)
    for k, b2k in enumerate(_BERNOULLI_2K, start=1):
        pieces.append(b2k / math.factorial(2 * k) * rising * npow)
        rising *= (s + 2 * k - 1) * (s + 2 * k)
        npow /= n * n
    return math.fsum(pieces)


def _sinpi(y: float) -> float:
    """sin(pi*y) with exact zeros at integer y."""
    m = math.floor(y)
    r = y - m
    if r == 0.0:
        return 0.0
    val = math.sin(math.pi * r)
    return -val if m % 2 else val


@lru_cache(maxsize=None)
def zeta(x: float) -> float:
    """Riemann zeta function for real x != 1.

    Positive arguments (and the strip [0, 1)) go through Euler-Maclaurin
    summation; negative arguments are reflected to (1, inf) through the
    functional equation.  Absolute accuracy is about 1e-14 on [-60, 0.999]
    and relative 1e-15 for x > 1.
    """
    x = float(x)
    if x == 1.0:
        raise ValueError("zeta has a pole at x = 1")
    if x >= 0.0:
        return _zeta_em(x)
    # reflection: zeta(x) = 2^x pi^(x-1) sin(pi x / 2) Gamma(1-x) zeta(1-x)
    sin_term = _sinpi(0.5 * x)
    if sin_term == 0.0:
        return 0.0
    return (
        2.0**x
        * math.pi ** (x - 1.0)
        * sin_term
        * math.gamma(1.0 - x)
        * _zeta_em(1.0 - x)
    )


@lru_cache(maxsize=None)
def _zeta_sign_log(x: float) -> tuple[float, float]:
    """(sign, log|zeta(x)|) valid far into the negative axis.

    Needed because zeta at large negative half-integers overflows a double
    while the series terms that contain it stay small.
    """
    if x > -1.0:
        val = zeta(x)
        return math.copysign(1.0, val), math.log(abs(val))
    sin_term = _sinpi(0.5 * x)
    if sin_term == 0.0:
        return 0.0, -math.inf
    log_abs = (
        x * math.log(2.0)
        + (x - 1.0) * math.log(math.pi)
        + math.log(abs(sin_term))
        + math.lgamma(1.0 - x)
        + math.log(_zeta_em(1.0 - x))
    )
    return math.copysign(1.0, sin_term), log_abs


# ----------------------------------------------------------------------
# erfc and Lerch's transcendent
# ----------------------------------------------------------------------

def erfc(x: float) -> float:
    """Complementary error function (2/sqrt(pi)) int_x^inf e^(-t^2) dt."""
    return math.erfc(x)


def lerch_phi(z: float, s_param: float, v: float = 1.0) -> float:
    """Lerch transcendent sum_{k>=0} z^k / (k+v)^s for 0 < z < 1, v = 1.

    Plain term summation is used away from z = 1; near z = 1 the sum is
    accelerated through the polylogarithm expansion around the singular
    point, whose coefficients are zeta values.  Relative accuracy is about
    1e-13 for the parameter pairs used here (s = 1/2 and s = -1/2).
    """
    if v != 1.0:
        raise ValueError("only v = 1 is supported")
    if not 0.0 < z < 1.0:
        raise ValueError("lerch_phi requires 0 < z < 1 (divergent otherwise)")
    if z <= 0.5:
        total = 0.0
        term = 1.0  # k = 0
        k = 0
        parts = []
        while k < 10000:
            val = term / (k + 1.0) ** s_param
            parts.append(val)
            total += val
            if abs(val) < 1e-18 * abs(total):
                break
            k += 1
            term *= z
        return math.fsum(parts)
    # z near 1: Li_s(e^-w) = Gamma(1-s) w^(s-1) + sum_r zeta(s-r) (-w)^r / r!
    w = -math.log(z)  # in (0, log 2], well inside the |w| < 2 pi disk
    parts = [math.gamma(1.0 - s_param) * w ** (s_param - 1.0)]
    total = parts[0]
    wpow = 1.0
    fact = 1.0
    for r in range(0, 300):
        if r > 0:
            wpow *= -w
            fact *= r
        val = zeta(s_param - r) * wpow / fact
        parts.append(val)
        total += val
        if r > 3 and abs(val) < 1e-18 * abs(total):
            break
    return math.fsum(parts) / z


# ----------------------------------------------------------------------
# zeta tail series shared by the G family, F, and the walk maximum
# ----------------------------------------------------------------------

def _zeta_tail_terms(
    c: float, x: float, shifts: tuple[int, ...]
) -> tuple[list[float], float]:
    """Terms of sum_{r>=0} zeta(c - r) x^r / (r! prod_j (2r + j)).

    Returns the evaluated terms and a bound on the discarded tail.  The
    magnitudes are assembled in log space so that the growth of zeta at
    negative arguments never overflows.  Converges for |x| < 2*pi.
    """
    if x == 0.0:
        denom = 1.0
        for j in shifts:
            denom *= j
        return [zeta(c) / denom], 0.0
    ln_ax = math.log(abs(x))
    neg = x < 0.0
    terms: list[float] = []
    scale = 1e-300
    small_streak = 0
    for r in range(_MAX_SERIES_TERMS):
        sgn, lz = _zeta_sign_log(c - r)
        lt = lz + r * ln_ax - math.lgamma(r + 1.0)
        for j in shifts:
            lt -= math.log(2.0 * r + j)
        t = sgn * math.exp(lt)
        if neg and (r % 2):
            t = -t
        terms.append(t)
        scale = max(scale, abs(math.fsum(terms)))
        if abs(t) < _REL_STOP * scale:
            small_streak += 1
            if small_streak >= 2:
                break
        else:
            small_streak = 0
    q = abs(x) / (2.0 * math.pi)
    tail = abs(terms[-1]) * (q / (1.0 - q)) if q < 1.0 else math.inf
    return terms, tail


# ----------------------------------------------------------------------
# quadrature of the defining integrals
# ----------------------------------------------------------------------

def _kernel(x: float) -> float:
    # e^-x / (1 - e^-x), stable for both tiny and large x
    return 1.0 / math.expm1(x)


def _kernel_sq(x: float) -> float:
    # e^-x / (1 - e^-x)^2
    em = math.exp(-x)
    d = -math.expm1(-x)
    return em / (d * d)


def _quad(f, b: float) -> tuple[float, float]:
    pts = sorted({p for p in (b, 3.0 * b, 1.0) if 0.0 < p < _T_MAX})
    val, err = _scipy_quad(
        f, 0.0, _T_MAX, points=pts, limit=400, epsabs=1e-13, epsrel=1e-13,
        full_output=0,
    )[:2]
    return val, err


def _g0_quad(b: float, t_max: float = _T_MAX) -> tuple[float, float]:
    b2 = b * b

    def f(t: float) -> float:
        t2 = t * t
        return t2 / (b2 + t2) * _kernel(b2 + t2)

    if t_max == _T_MAX:
        return _quad(f, b)
    return _scipy_quad(f, 0.0, t_max, limit=400, epsabs=1e-13, epsrel=1e-13)[:2]


def _g1_quad(b: float) -> tuple[float, float]:
    b2 = b * b
    return _quad(lambda t: _kernel(b2 + t * t), b)


def _g2_quad(b: float) -> tuple[float, float]:
    b2 = b * b
    return _quad(lambda t: b2 / (b2 + t * t) * _kernel(b2 + t * t), b)


def _g3_quad(b: float) -> tuple[float, float]:
    b2 = b * b

    def f(t: float) -> float:
        t2 = t * t
        u = b2 + t2
        return t2 / (u * u) * _kernel(u)

    return _quad(f, b)


def _g4_quad(b: float) -> tuple[float, float]:
    b2 = b * b

    def f(t: float) -> float:
        t2 = t * t
        return t2 / (b2 + t2) * _kernel_sq(b2 + t2)

    return _quad(f, b)


def _g5_quad(b: float) -> tuple[float, float]:
    b2 = b * b
    return _quad(lambda t: _kernel_sq(b2 + t * t), b)


def _g6_quad(b: float) -> tuple[float, float]:
    b2 = b * b
    return _quad(lambda t: b2 / (b2 + t * t) * _kernel_sq(b2 + t * t), b)


def _f_quad(beta: float) -> tuple[float, float]:
    # F(beta) = -(1/pi) int_0^inf b/(b^2+t^2) ln(1 - e^(-b^2-t^2)) dt,  b = beta/sqrt(2)
    b = beta / math.sqrt(2.0)
    b2 = b * b

    def f(t: float) -> float:
        x = b2 + t * t
        return b / (b2 + t * t) * math.log1p(-math.exp(-x))

    val, err = _quad(f, b)
    return -val / math.pi, err / math.pi


# ----------------------------------------------------------------------
# the G family
# ----------------------------------------------------------------------

def _check_b(b: float) -> None:
    if not b > 0.0:
        raise ValueError("argument b must be positive")


def _series_result(
    b: float, series_fn, quad_fn, bound_limit: float = SQRT_TWO_PI
) -> SeriesResult:
    qv, qerr = quad_fn(b)
    if 0.0 < b < bound_limit:
        value, used, bound = series_fn(b)
        return SeriesResult(value, used, bound, True, qv)
    return SeriesResult(qv, 0, qerr, False, qv)


def _g0_series(b: float) -> tuple[float, int, float]:
    x = -b * b
    terms, tail = _zeta_tail_terms(-0.5, x, (1, 2))
    head = [
        math.pi / (4.0 * b),
        math.pi * b / 4.0,
        0.5 * SQRT_PI * zeta(0.5),
    ]
    scale = SQRT_PI * b * b
    value = math.fsum(head + [scale * t for t in terms])
    return value, len(terms), scale * tail


def _g1_series(b: float) -> tuple[float, int, float]:
    x = -b * b
    terms, tail = _zeta_tail_terms(0.5, x, ())
    head = [math.pi / (2.0 * b)]
    scale = 0.5 * SQRT_PI
    value = math.fsum(head + [scale * t for t in terms])
    return value, len(terms), scale * tail


def _g2_series(b: float) -> tuple[float, int, float]:
    x = -b * b
    terms, tail = _zeta_tail_terms(-0.5, x, (1,))
    head = [math.pi / (4.0 * b), -math.pi * b / 4.0]
    scale = -SQRT_PI * b * b
    value = math.fsum(head + [scale * t for t in terms])
    return value, len(terms), abs(scale) * tail


def _g3_series(b: float) -> tuple[float, int, float]:
    x = -b * b
    terms, tail = _zeta_tail_terms(-1.5, x, (1, 2, 3))
    b3 = b * b * b
    head = [
        math.pi / (16.0 * b3),
        -math.pi / (8.0 * b),
        -math.pi * b / 24.0,
        -SQRT_PI * zeta(-0.5),
    ]
    scale = -2.0 * SQRT_PI * b * b
    value = math.fsum(head + [scale * t for t in terms])
    return value, len(terms), abs(scale) * tail


def _g4_series(b: float) -> tuple[float, int, float]:
    x = -b * b
    terms, tail = _zeta_tail_terms(-1.5, x, (1, 2))
    b3 = b * b * b
    head = [
        math.pi / (16.0 * b3),
        math.pi * b / 24.0,
        0.5 * SQRT_PI * zeta(-0.5),
    ]
    scale = SQRT_PI * b * b
    value = math.fsum(head + [scale * t for t in terms])
    return value, len(terms), scale * tail


def _g5_series(b: float) -> tuple[float, int, float]:
    x = -b * b
    terms, tail = _zeta_tail_terms(-0.5, x, ())
    b3 = b * b * b
    head = [math.pi / (4.0 * b3)]
    scale = 0.5 * SQRT_PI
    value = math.fsum(head + [scale * t for t in terms])
    return value, len(terms), scale * tail


def _g6_series(b: float) -> tuple[float, int, float]:
    x = -b * b
    terms, tail = _zeta_tail_terms(-1.5, x, (1,))
    b3 = b * b * b
    head = [3.0 * math.pi / (16.0 * b3), -math.pi * b / 24.0]
    scale = -SQRT_PI * b * b
    value = math.fsum(head + [scale * t for t in terms])
    return value, len(terms), abs(scale) * tail


def g0(b: float) -> SeriesResult:
    """G0(b): the mean-congestion kernel integral (equals G1 - G2)."""
    _check_b(b)
    return _series_result(b, _g0_series, _g0_quad)


def g1(b: float) -> SeriesResult:
    _check_b(b)
    return _series_result(b, _g1_series, _g1_quad)


def g2(b: float) -> SeriesResult:
    _check_b(b)
    return _series_result(b, _g2_series, _g2_quad)


def g3(b: float) -> SeriesResult:
    """G3(b): the variance kernel integral (equals G2/(2 b^2) - G4)."""
    _check_b(b)
    return _series_result(b, _g3_series, _g3_quad)


def g4(b: float) -> SeriesResult:
    _check_b(b)
    return _series_result(b, _g4_series, _g4_quad)


def g5(b: float) -> SeriesResult:
    _check_b(b)
    return _series_result(b, _g5_series, _g5_quad)


def g6(b: float) -> SeriesResult:
    _check_b(b)
    return _series_result(b, _g6_series, _g6_quad)


# ----------------------------------------------------------------------
# empty-system functional and the Gaussian walk maximum
# ----------------------------------------------------------------------

def _f_series(beta: float) -> tuple[float, int, float]:
    x = -0.5 * beta * beta
    terms, tail = _zeta_tail_terms(0.5, x, (1,))
    head = [-math.log(beta), -0.5 * math.log(2.0)]
    scale = -beta / SQRT_TWO_PI
    value = math.fsum(head + [scale * t for t in terms])
    return value, len(terms), abs(scale) * tail


def f_of_beta(beta: float) -> SeriesResult:
    """F(beta) = sum_{n>=1} (1/n) P(N(0,1) > beta sqrt(n)).

    The series route is valid on 0 < beta < 2*sqrt(pi); elsewhere the
    value comes from quadrature of the equivalent contour-kernel integral.
    """
    if not beta > 0.0:
        raise ValueError("beta must be positive")
    return _series_result(beta, _f_series, _f_quad, bound_limit=TWO_SQRT_PI)


def em_beta(beta: float) -> float:
    """Expected all-time maximum of a Gaussian walk with drift -beta, var 1.

    Series evaluation only, valid for 0 < beta < 2*sqrt(pi); outside that
    interval a ValueError is raised (no integral form is provided here).
    Absolute accuracy is about 1e-12.
    """
    if not 0.0 < beta < TWO_SQRT_PI:
        raise ValueError(
            f"em_beta requires 0 < beta < 2*sqrt(pi) = {TWO_SQRT_PI:.6f}"
        )
    x = -0.5 * beta * beta
    terms, _ = _zeta_tail_terms(-0.5, x, (1, 2))
    head = [
        0.5 / beta,
        zeta(0.5) / SQRT_TWO_PI,
        0.25 * beta,
    ]
    scale = beta * beta / SQRT_TWO_PI
    return math.fsum(head + [scale * t for t in terms])
