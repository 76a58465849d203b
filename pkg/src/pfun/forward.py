"""Forward p-functions by inversion of the monotone inverse functions.

``sin_p``/``cos_p`` invert ``arcsin_p``; ``sinh_p``/``cosh_p``/``tanh_p``
invert ``arcsinh_p``. Both inversions work in a variable chosen so the
equation is well conditioned everywhere on the principal domain:

* near ``x = pi_p/2`` the unknown is ``z = (1 - sin_p x)^((p-1)/p)``, in which
  the tail integral is close to linear, and ``cos_p`` is formed from
  ``1 - sin_p`` without cancellation;
* beyond ``x = c_p`` the unknown is ``v = log(sinh_p x)``, with the exact
  bracket ``x - c_p <= v <= 2^(1/p) (x - c_p)``.

Arguments past ``X_MAX`` are rejected for ``sinh_p``/``cosh_p`` (values of
order ``e^30`` and up are not useful here); ``tanh_p`` is extended with the
asymptotic ``log sinh_p(x) ~ x - c_p + K_p``, which is exact to double
precision there.
"""

from __future__ import annotations

import math
from dataclasses import replace
from enum import Enum
from functools import lru_cache

from .errors import DomainError
from .inverse import ARCSIN_SPLIT, arcsin_p, arcsin_tail, arcsinh_log, arcsinh_p, one_minus_pow
from .numerics import DEFAULT_CONFIG, Interval, NumericConfig, central_diff, integrate, solve_bracketed
from .special import PLike, as_p, c_p, pi_p

__all__ = [
    "X_MAX",
    "FunctionKind",
    "forward_eval",
    "derivative_eval",
    "forward_domain",
    "sin_p",
    "cos_p",
    "tan_p",
    "sinh_p",
    "cosh_p",
    "tanh_p",
    "sin_cos_p",
    "plaplacian_lambda_profile",
]

X_MAX = 30.0


class FunctionKind(Enum):
    SIN = "sin_p"
    COS = "cos_p"
    TAN = "tan_p"
    SINH = "sinh_p"
    COSH = "cosh_p"
    TANH = "tanh_p"

    def __str__(self) -> str:
        return self.value


def forward_domain(kind: FunctionKind, p: PLike) -> tuple[float, float, bool]:
    """Principal domain as ``(lo, hi, hi_included)``; ``tanh_p`` has ``hi = inf``."""
    q = as_p(p)
    if kind in (FunctionKind.SIN, FunctionKind.COS):
        return 0.0, 0.5 * pi_p(q), True
    if kind is FunctionKind.TAN:
        return 0.0, 0.5 * pi_p(q), False
    if kind is FunctionKind.TANH:
        return 0.0, math.inf, False
    return 0.0, X_MAX, True


# Arguments this many ulps past a closed upper bound are snapped onto it;
# pi_p/2 is itself rounded, so grids built from it can overshoot slightly.
_ENDPOINT_ULPS = 4


def _check_domain(kind: FunctionKind, q: float, x: float) -> float:
    lo, hi, closed = forward_domain(kind, q)
    x = float(x)
    if closed and hi < x <= hi + _ENDPOINT_ULPS * math.ulp(hi):
        return hi
    inside = lo <= x <= hi if closed else lo <= x < hi
    if not inside or math.isnan(x):
        right = "]" if closed else ")"
        raise DomainError(f"{kind.value}: x must lie in [{lo:g}, {hi:.15g}{right}, got {x!r}")
    return x


def _root_cfg(cfg: NumericConfig) -> NumericConfig:
    # Newton converges quadratically, so a tight residual costs one extra step.
    return replace(cfg, abs_tol=cfg.abs_tol * 1e-3)


@lru_cache(maxsize=256)
def _arcsin_split(q: float, cfg: NumericConfig) -> float:
    return arcsin_p(q, ARCSIN_SPLIT, cfg)


@lru_cache(maxsize=1 << 16)
def _sin_cos(q: float, x: float, cfg: NumericConfig) -> tuple[float, float]:
    half = 0.5 * pi_p(q)
    if x == 0.0:
        return 0.0, 1.0
    if x == half:
        return 1.0, 0.0
    rcfg = _root_cfg(cfg)
    inv = -1.0 / q
    if x <= _arcsin_split(q, cfg):
        guess = min(max(math.sin(x * math.pi / pi_p(q)), 1e-300), ARCSIN_SPLIT)
        res = solve_bracketed(
            lambda s: arcsin_p(q, s, cfg) - x,
            Interval(0.0, ARCSIN_SPLIT),
            rcfg,
            fprime=lambda s: (1.0 - s**q) ** inv,
            x0=guess,
        )
        s = res.root
        return s, (1.0 - s**q) ** (1.0 / q)

    # Near the top: solve tail(w) = pi_p/2 - x in z = w^((q-1)/q).
    target = half - x
    expo = q / (q - 1.0)

    def tail_eq(z: float) -> float:
        return arcsin_tail(q, z**expo, cfg) - target

    def tail_slope(z: float) -> float:
        if z == 0.0:
            return q ** (-1.0 / q) * expo
        w = z**expo
        return one_minus_pow(q, w) ** inv * expo * w / z

    z_hi = ARCSIN_SPLIT ** (1.0 / expo)
    guess = target * (1.0 - 1.0 / q) * q ** (1.0 / q)
    res = solve_bracketed(
        tail_eq,
        Interval(0.0, z_hi),
        rcfg,
        fprime=tail_slope,
        x0=guess if 0.0 < guess < z_hi else None,
    )
    w = res.root**expo
    return 1.0 - w, one_minus_pow(q, w) ** (1.0 / q)


def sin_cos_p(p: PLike, x: float, cfg: NumericConfig = DEFAULT_CONFIG) -> tuple[float, float]:
    """``(sin_p(x), cos_p(x))`` on ``[0, pi_p/2]`` from a single inversion."""
    q = as_p(p)
    return _sin_cos(q, _check_domain(FunctionKind.SIN, q, x), cfg)


@lru_cache(maxsize=256)
def _tanh_shift(q: float, cfg: NumericConfig) -> float:
    """``K_p = int_0^inf 1 - (1 + e^(-p u))^(-1/p) du``."""
    inv = -1.0 / q
    return integrate(lambda u: -math.expm1(inv * math.log1p(math.exp(-q * u))), Interval(0.0, 40.0 / q), cfg)


@lru_cache(maxsize=1 << 16)
def _hyperbolic(q: float, x: float, cfg: NumericConfig) -> tuple[float, float, float]:
    """``(sinh_p, cosh_p, tanh_p)`` at ``x``; ``sinh_p``/``cosh_p`` are inf past X_MAX."""
    if x == 0.0:
        return 0.0, 1.0, 0.0
    cp = c_p(q)
    inv = -1.0 / q
    if x > X_MAX:
        v = x - cp + _tanh_shift(q, cfg)
        return math.inf, math.inf, (1.0 + math.exp(-q * v)) ** inv
    rcfg = _root_cfg(cfg)
    if x <= cp:
        res = solve_bracketed(
            lambda s: arcsinh_p(q, s, cfg) - x,
            Interval(0.0, 1.0),
            rcfg,
            fprime=lambda s: (1.0 + s**q) ** inv,
            x0=min(math.sinh(x), 0.999),
        )
        s = res.root
        cosh = (1.0 + s**q) ** (1.0 / q)
        return s, cosh, s / cosh
    lo = x - cp
    hi = lo * 2.0 ** (1.0 / q)
    res = solve_bracketed(
        lambda v: arcsinh_log(q, v, cfg) - x,
        Interval(lo, hi),
        rcfg,
        fprime=lambda v: (1.0 + math.exp(-q * v)) ** inv,
    )
    v = res.root
    k = (1.0 + math.exp(-q * v)) ** (1.0 / q)
    s = math.exp(v)
    return s, s * k, 1.0 / k


def forward_eval(kind: FunctionKind, p: PLike, x: float, cfg: NumericConfig = DEFAULT_CONFIG) -> float:
    """Evaluate a forward p-function on its principal domain."""
    q = as_p(p)
    x = _check_domain(kind, q, x)
    if kind is FunctionKind.SIN:
        return _sin_cos(q, x, cfg)[0]
    if kind is FunctionKind.COS:
        return _sin_cos(q, x, cfg)[1]
    if kind is FunctionKind.TAN:
        s, c = _sin_cos(q, x, cfg)
        return s / c
    s, c, t = _hyperbolic(q, x, cfg)
    if kind is FunctionKind.SINH:
        return s
    if kind is FunctionKind.COSH:
        return c
    return t


def derivative_eval(kind: FunctionKind, p: PLike, x: float, cfg: NumericConfig = DEFAULT_CONFIG) -> float:
    """Closed-form derivative of a forward p-function.

    ``cosh_p' = cosh_p^(2-p) sinh_p^(p-1)``, the hyperbolic counterpart of
    the ``cos_p`` rule. Raises :class:`DomainError` where the formula is
    singular, e.g. ``cos_p'`` at ``pi_p/2`` for ``p > 2``.
    """
    q = as_p(p)
    if kind is FunctionKind.TANH and x > X_MAX:
        x = _check_domain(kind, q, x)
        t = _hyperbolic(q, x, cfg)[2]
        return -math.expm1(q * math.log(t))
    if kind is FunctionKind.SIN:
        d = forward_eval(FunctionKind.COS, q, x, cfg)
    elif kind is FunctionKind.COS:
        s, c = sin_cos_p(q, x, cfg)
        if s == 0.0:
            d = 0.0
        elif c == 0.0 and q > 2.0:
            d = math.inf
        else:
            d = -(c ** (2.0 - q)) * s ** (q - 1.0)
    elif kind is FunctionKind.TAN:
        d = 1.0 + forward_eval(FunctionKind.TAN, q, x, cfg) ** q
    else:
        x = _check_domain(kind, q, x)
        s, c, t = _hyperbolic(q, x, cfg)
        if kind is FunctionKind.SINH:
            d = c
        elif kind is FunctionKind.COSH:
            d = c ** (2.0 - q) * s ** (q - 1.0)
        else:
            # 1 - tanh_p^p = cosh_p^-p, without the cancellation near t = 1
            d = c ** -q
    if not math.isfinite(d):
        raise DomainError(f"{kind.value}': derivative formula is singular at x={x!r} for p={q:g}")
    return d


def sin_p(p: PLike, x: float, cfg: NumericConfig = DEFAULT_CONFIG) -> float:
    return forward_eval(FunctionKind.SIN, p, x, cfg)


def cos_p(p: PLike, x: float, cfg: NumericConfig = DEFAULT_CONFIG) -> float:
    return forward_eval(FunctionKind.COS, p, x, cfg)


def tan_p(p: PLike, x: float, cfg: NumericConfig = DEFAULT_CONFIG) -> float:
    return forward_eval(FunctionKind.TAN, p, x, cfg)


def sinh_p(p: PLike, x: float, cfg: NumericConfig = DEFAULT_CONFIG) -> float:
    return forward_eval(FunctionKind.SINH, p, x, cfg)


def cosh_p(p: PLike, x: float, cfg: NumericConfig = DEFAULT_CONFIG) -> float:
    return forward_eval(FunctionKind.COSH, p, x, cfg)


def tanh_p(p: PLike, x: float, cfg: NumericConfig = DEFAULT_CONFIG) -> float:
    return forward_eval(FunctionKind.TANH, p, x, cfg)


def _sin_cos_full(q: float, x: float, cfg: NumericConfig) -> tuple[float, float]:
    """``sin_p``/``cos_p`` on ``[0, pi_p]`` by reflection about ``pi_p/2``."""
    half = 0.5 * pi_p(q)
    if x <= half:
        return _sin_cos(q, x, cfg)
    s, c = _sin_cos(q, max(pi_p(q) - x, 0.0), cfg)
    return s, -c


def plaplacian_lambda_profile(p: PLike, n: int, cfg: NumericConfig = DEFAULT_CONFIG) -> list[float]:
    """Pointwise eigenvalue ratio of ``u(t) = sin_p(pi_p t)`` on (0, 1).

    At ``t_i = i/(n+1)``, ``i = 1..n``, returns
    ``-(|u'|^(p-2) u')' / (|u|^(p-2) u)``, with ``u'`` in closed form and the
    outer derivative by central difference. For an eigenfunction of the
    one-dimensional p-Laplacian with zero boundary values the list is
    constant; with the reflection used here the constant comes out as
    ``(p - 1) pi_p^p``.
    """
    q = as_p(p)
    if n < 8:
        raise DomainError(f"n must be at least 8, got {n}")
    scale = pi_p(q)

    def flux(t: float) -> float:
        c = _sin_cos_full(q, scale * t, cfg)[1]
        du = scale * c
        return math.copysign(abs(du) ** (q - 1.0), du)

    out = []
    for i in range(1, n + 1):
        t = i / (n + 1)
        s = _sin_cos_full(q, scale * t, cfg)[0]
        out.append(-central_diff(flux, t, cfg) / s ** (q - 1.0))
    return out
