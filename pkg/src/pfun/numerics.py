"""Numerical kernels: double-exponential quadrature, safeguarded root
finding and central differences.

Everything here is a pure function of its arguments; tolerances travel in a
:class:`NumericConfig`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional

from .errors import BracketError, ConvergenceError, DomainError

__all__ = [
    "NumericConfig",
    "Interval",
    "RootResult",
    "DEFAULT_CONFIG",
    "integrate",
    "solve_bracketed",
    "central_diff",
]

_EPS = 2.220446049250313e-16

# Quadrature layout. Nodes are generated out to |t| <= _T_MAX, where the
# endpoint offset exp(-pi*sinh(t)) is still a normal double.
_T_MAX = 6.08
_MIN_LEVEL = 3
_MAX_LEVEL = 10
# Outward summation along one side stops once a term drops below this
# fraction of the accumulated absolute sum.
_TAIL_CUTOFF = 1e-18


@dataclass(frozen=True)
class NumericConfig:
    abs_tol: float = 1e-12
    rel_tol: float = 1e-12
    max_iter: int = 200
    fd_step: float = 1e-6

    def __post_init__(self) -> None:
        if not self.abs_tol > 0:
            raise ValueError("abs_tol must be positive")
        if not self.rel_tol > 0:
            raise ValueError("rel_tol must be positive")
        if self.max_iter < 1:
            raise ValueError("max_iter must be at least 1")
        if not self.fd_step > 0:
            raise ValueError("fd_step must be positive")


DEFAULT_CONFIG = NumericConfig()


@dataclass(frozen=True)
class Interval:
    lo: float
    hi: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.lo) and math.isfinite(self.hi)):
            raise ValueError(f"interval bounds must be finite, got [{self.lo}, {self.hi}]")
        if not self.lo < self.hi:
            raise ValueError(f"interval needs lo < hi, got [{self.lo}, {self.hi}]")

    @property
    def width(self) -> float:
        return self.hi - self.lo

    def __contains__(self, x: float) -> bool:
        return self.lo <= x <= self.hi


@dataclass(frozen=True)
class RootResult:
    root: float
    residual: float
    iterations: int


@lru_cache(maxsize=None)
def _level_nodes(level: int) -> tuple[tuple[float, float, float], ...]:
    """Positive tanh-sinh abscissae introduced at ``level``.

    Each entry is ``(t, offset, weight)`` for the unit interval: the node sits
    ``offset`` away from an endpoint and carries ``weight`` (before the
    factor ``h``). Level 0 holds the integers, later levels the odd
    multiples of ``2**-level``.
    """
    h = 2.0**-level
    start, stride = (1, 1) if level == 0 else (1, 2)
    out = []
    k = start
    while True:
        t = k * h
        if t > _T_MAX:
            break
        q = math.exp(-math.pi * math.sinh(t))
        offset = q / (1.0 + q)
        weight = math.pi * math.cosh(t) * q / (1.0 + q) ** 2
        out.append((t, offset, weight))
        k += stride
    return tuple(out)


def _eval(f: Callable[..., float], *args: float) -> float:
    y = f(*args)
    if math.isnan(y):
        raise DomainError(f"integrand returned NaN at interior point {args[0]!r}")
    return y


def _level_sum(
    f: Callable[..., float], a: float, b: float, level: int, complement: bool
) -> tuple[float, float, float]:
    """Weighted sum over the nodes new at ``level``.

    Returns ``(sum, abs_sum, rounding)`` where ``rounding`` bounds the change
    caused by nodes whose position could not be represented at the intended
    offset from an endpoint (plain mode only).
    """
    width = b - a
    total = 0.0
    abs_total = 0.0
    rounding = 0.0
    if level == 0:
        mid = a + 0.5 * width
        v = (math.pi / 4.0) * (_eval(f, mid, 0.5 * width) if complement else _eval(f, mid))
        total += v
        abs_total += abs(v)
    nodes = _level_nodes(level)
    for side in (0, 1):
        side_abs = 0.0
        for t, offset, weight in nodes:
            delta = width * offset
            if side == 0:
                x = a + delta
                actual = x - a
            else:
                x = b - delta
                actual = b - x
            if complement:
                if delta == 0.0:
                    break
                v = weight * _eval(f, x, delta if side == 0 else -delta)
            else:
                if actual <= 0.0:
                    break
                v = weight * _eval(f, x)
                rounding += abs(v) * abs(actual - delta) / delta
            total += v
            side_abs += abs(v)
            if t > 1.0 and abs(v) <= _TAIL_CUTOFF * (abs_total + side_abs):
                break
        abs_total += side_abs
    return total * width, abs_total * width, rounding * width


def integrate(
    f: Callable[..., float],
    iv: Interval,
    cfg: NumericConfig = DEFAULT_CONFIG,
    *,
    complement: bool = False,
) -> float:
    """Integrate ``f`` over ``iv`` with the tanh-sinh rule.

    The step is halved until the error estimate drops to
    ``max(abs_tol, rel_tol*|I|)``. Algebraic endpoint singularities are
    fine and ``f`` is never evaluated at ``iv.lo`` or ``iv.hi``.

    With ``complement=True`` the integrand is called as ``f(x, xc)`` where
    ``xc`` is the exact signed offset of ``x`` from the nearer endpoint
    (``x - lo`` on the left half, ``x - hi`` on the right half). Use it when
    a singular endpoint is not at 0: in plain mode nodes next to such an
    endpoint round onto a coarse grid of doubles, which caps the attainable
    accuracy (roughly 1e-8 for an inverse square root singularity at 1) and
    the error estimate is widened to account for that.

    Raises
    ------
    ConvergenceError
        The estimate did not settle within the maximum refinement depth.
    DomainError
        ``f`` returned NaN.
    """
    a, b = iv.lo, iv.hi
    s, abs_s, rounding = _level_sum(f, a, b, 0, complement)
    estimate = s  # h = 1
    prev_diff = math.inf
    err = math.inf
    for level in range(1, _MAX_LEVEL + 1):
        h = 2.0**-level
        s_new, abs_new, rnd_new = _level_sum(f, a, b, level, complement)
        s += s_new
        abs_s += abs_new
        rounding += rnd_new
        new_estimate = s * h
        diff = abs(new_estimate - estimate)
        estimate = new_estimate
        if not math.isfinite(estimate):
            raise ConvergenceError("quadrature produced a non-finite value", estimate, math.inf)
        # Double-exponential convergence roughly squares the error per halving.
        if 0.0 < diff < prev_diff and math.isfinite(prev_diff):
            err = diff * diff / prev_diff
        else:
            err = diff
        floor = 64.0 * _EPS * abs_s * h + rounding * h
        if level >= _MIN_LEVEL and err <= max(cfg.abs_tol, cfg.rel_tol * abs(estimate), floor):
            return estimate
        if diff > 0.0:
            prev_diff = diff
    raise ConvergenceError(
        f"tanh-sinh quadrature on [{a}, {b}] did not converge (error estimate {err:.3g})",
        estimate,
        err,
    )


def solve_bracketed(
    f: Callable[[float], float],
    iv: Interval,
    cfg: NumericConfig = DEFAULT_CONFIG,
    fprime: Optional[Callable[[float], float]] = None,
    x0: Optional[float] = None,
) -> RootResult:
    """Find a root of ``f`` inside ``iv`` by safeguarded Newton/bisection.

    Newton steps (secant steps when ``fprime`` is not given) are taken only
    while they land inside the current bracket and shrink fast enough;
    otherwise the bracket is bisected. After five rejected steps the method
    falls back to pure bisection. Iteration stops when ``|f(x)| <= abs_tol``,
    the bracket is narrower than ``abs_tol``, or an accepted Newton/secant
    step is shorter than ``abs_tol``.
    """
    lo, hi = iv.lo, iv.hi
    flo, fhi = f(lo), f(hi)
    if flo == 0.0:
        return RootResult(lo, 0.0, 0)
    if fhi == 0.0:
        return RootResult(hi, 0.0, 0)
    if math.isnan(flo) or math.isnan(fhi) or (flo > 0) == (fhi > 0):
        raise BracketError(f"no sign change on [{lo}, {hi}]: f(lo)={flo!r}, f(hi)={fhi!r}")
    # Orient so that f(a) < 0 < f(b).
    a, b = (lo, hi) if flo < 0 else (hi, lo)
    fa, fb = (flo, fhi) if flo < 0 else (fhi, flo)

    if x0 is not None and lo < x0 < hi:
        x = x0
    elif fprime is None:
        x = a - fa * (b - a) / (fb - fa)
        if not lo < x < hi:
            x = 0.5 * (lo + hi)
    else:
        x = 0.5 * (lo + hi)
    fx = f(x)
    x_prev, f_prev = (a, fa) if abs(fa) < abs(fb) else (b, fb)
    dx_old = abs(hi - lo)
    dx = dx_old
    rejected = 0

    for it in range(1, cfg.max_iter + 1):
        if math.isnan(fx):
            raise DomainError(f"function returned NaN at {x!r}")
        if fx == 0.0 or abs(fx) <= cfg.abs_tol:
            return RootResult(x, abs(fx), it)
        if fx < 0:
            a, fa = x, fx
        else:
            b, fb = x, fx
        if abs(b - a) <= cfg.abs_tol:
            return RootResult(x, abs(fx), it)

        step = math.nan
        if rejected < 5:
            if fprime is not None:
                d = fprime(x)
                if d != 0.0 and math.isfinite(d):
                    step = fx / d
            elif fx != f_prev:
                step = fx * (x - x_prev) / (fx - f_prev)
        left, right = min(a, b), max(a, b)
        candidate = x - step
        if math.isfinite(step) and left < candidate < right and abs(2.0 * step) <= dx_old:
            if abs(step) <= cfg.abs_tol:
                f_new = f(candidate)
                if abs(f_new) <= abs(fx):
                    return RootResult(candidate, abs(f_new), it + 1)
                return RootResult(x, abs(fx), it + 1)
            dx_old, dx = dx, abs(step)
            x_new = candidate
        else:
            if math.isfinite(step):
                rejected += 1
            dx_old, dx = dx, 0.5 * (right - left)
            x_new = left + dx
        x_prev, f_prev = x, fx
        if abs(x_new - x) <= 2.0 * _EPS * abs(x) + 1e-300:
            return RootResult(x, abs(fx), it)
        x = x_new
        fx = f(x)
    raise ConvergenceError(
        f"root not found in {cfg.max_iter} iterations on [{lo}, {hi}]", x, abs(fx)
    )


def central_diff(f: Callable[[float], float], x: float, cfg: NumericConfig = DEFAULT_CONFIG) -> float:
    """Symmetric difference quotient with step ``fd_step * max(1, |x|)``."""
    h = cfg.fd_step * max(1.0, abs(x))
    try:
        fp = f(x + h)
        fm = f(x - h)
    except (ArithmeticError, ValueError) as exc:
        raise DomainError(f"stencil evaluation failed around x={x!r}: {exc}") from exc
    d = (fp - fm) / (2.0 * h)
    if not math.isfinite(d):
        raise DomainError(f"non-finite difference quotient at x={x!r}")
    return d
