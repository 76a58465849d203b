"""Inverse p-functions, evaluated by quadrature of their defining integrals.

Where an integrand is singular (``arcsin_p`` at t = 1) or has a pole
(``arctanh_p`` at t = 1) the integral is rewritten so that the quadrature
never has to resolve the singularity at a non-zero endpoint:

* ``arcsin_p(x)`` for ``x > 1/2`` is ``pi_p/2`` minus the tail integral over
  ``u = 1 - t`` in ``[0, 1 - x]``, whose singular endpoint sits at ``u = 0``.
* ``arctanh_p(x)`` for ``x > 1/2`` integrates the integrand minus its pole
  part ``1/(p (1 - t))``; the pole part is added back in closed form.
"""

from __future__ import annotations

import math
from enum import Enum

from .errors import DomainError
from .numerics import DEFAULT_CONFIG, Interval, NumericConfig, integrate
from .special import PLike, as_p, c_p, pi_p

__all__ = [
    "InverseKind",
    "arcsin_p",
    "arccos_p",
    "arctan_p",
    "arcsinh_p",
    "arctanh_p",
    "inverse_eval",
    "inverse_domain",
]

# arcsin_p switches to the complementary tail integral above this argument.
ARCSIN_SPLIT = 0.5


class InverseKind(Enum):
    ARCSIN = "arcsin_p"
    ARCCOS = "arccos_p"
    ARCTAN = "arctan_p"
    ARCSINH = "arcsinh_p"
    ARCTANH = "arctanh_p"

    def __str__(self) -> str:
        return self.value


def one_minus_pow(p: float, u: float) -> float:
    """``1 - (1 - u)**p`` without cancellation for small ``u``."""
    return -math.expm1(p * math.log1p(-u))


def _check_unit(name: str, x: float, closed: bool = True) -> None:
    ok = 0.0 <= x <= 1.0 if closed else 0.0 <= x < 1.0
    if not ok:
        bracket = "]" if closed else ")"
        raise DomainError(f"{name}: x must lie in [0, 1{bracket}, got {x!r}")


def arcsin_tail(p: float, w: float, cfg: NumericConfig = DEFAULT_CONFIG) -> float:
    """``pi_p/2 - arcsin_p(1 - w)``, i.e. the integral of the kernel over [1 - w, 1]."""
    if w <= 0.0:
        return 0.0
    inv = -1.0 / p
    return integrate(lambda u: one_minus_pow(p, u) ** inv, Interval(0.0, w), cfg)


def arcsin_p(p: PLike, x: float, cfg: NumericConfig = DEFAULT_CONFIG) -> float:
    """``arcsin_p(x) = int_0^x (1 - t^p)^(-1/p) dt`` on [0, 1]."""
    q = as_p(p)
    _check_unit("arcsin_p", x)
    if x == 0.0:
        return 0.0
    if x == 1.0:
        return 0.5 * pi_p(q)
    if x <= ARCSIN_SPLIT:
        inv = -1.0 / q
        return integrate(lambda t: (1.0 - t**q) ** inv, Interval(0.0, x), cfg)
    return 0.5 * pi_p(q) - arcsin_tail(q, 1.0 - x, cfg)


def arccos_p(p: PLike, x: float, cfg: NumericConfig = DEFAULT_CONFIG) -> float:
    """``arccos_p(x) = arcsin_p((1 - x^p)^(1/p))``."""
    q = as_p(p)
    _check_unit("arccos_p", x)
    return arcsin_p(q, (1.0 - x**q) ** (1.0 / q), cfg)


def arctan_p(p: PLike, x: float, cfg: NumericConfig = DEFAULT_CONFIG) -> float:
    """``arctan_p(x) = int_0^x dt / (1 + t^p)`` on [0, 1]."""
    q = as_p(p)
    _check_unit("arctan_p", x)
    if x == 0.0:
        return 0.0
    return integrate(lambda t: 1.0 / (1.0 + t**q), Interval(0.0, x), cfg)


def arcsinh_log(p: float, v: float, cfg: NumericConfig = DEFAULT_CONFIG) -> float:
    """``arcsinh_p(exp(v))`` for ``v >= 0``.

    Substituting ``t = e^u`` on [1, x] gives the bounded integrand
    ``(1 + e^(-p u))^(-1/p)``, which stays well conditioned for huge x.
    """
    if v <= 0.0:
        return c_p(p)
    inv = -1.0 / p
    return c_p(p) + integrate(lambda u: (1.0 + math.exp(-p * u)) ** inv, Interval(0.0, v), cfg)


def arcsinh_p(p: PLike, x: float, cfg: NumericConfig = DEFAULT_CONFIG) -> float:
    """``arcsinh_p(x) = int_0^x (1 + t^p)^(-1/p) dt`` for ``x >= 0``.

    The principal domain is [0, 1]; larger arguments are accepted because
    ``sinh_p`` inverts this function on the whole half-line.
    """
    q = as_p(p)
    if not (x >= 0.0 and math.isfinite(x)):
        raise DomainError(f"arcsinh_p: x must be a finite number >= 0, got {x!r}")
    if x == 0.0:
        return 0.0
    if x <= 1.0:
        inv = -1.0 / q
        return integrate(lambda t: (1.0 + t**q) ** inv, Interval(0.0, x), cfg)
    return arcsinh_log(q, math.log(x), cfg)


def arctanh_p(p: PLike, x: float, cfg: NumericConfig = DEFAULT_CONFIG) -> float:
    """``arctanh_p(x) = int_0^x dt / (1 - t^p)`` on [0, 1); grows without bound as x -> 1."""
    q = as_p(p)
    _check_unit("arctanh_p", x, closed=False)
    if x == 0.0:
        return 0.0
    if x <= 0.5:
        return integrate(lambda t: 1.0 / (1.0 - t**q), Interval(0.0, x), cfg)

    def regular(t: float) -> float:
        u = 1.0 - t  # exact for t >= 1/2
        if t < 0.5:
            return 1.0 / (1.0 - t**q) - 1.0 / (q * u)
        return 1.0 / one_minus_pow(q, u) - 1.0 / (q * u)

    return integrate(regular, Interval(0.0, x), cfg) - math.log1p(-x) / q


_DISPATCH = {
    InverseKind.ARCSIN: arcsin_p,
    InverseKind.ARCCOS: arccos_p,
    InverseKind.ARCTAN: arctan_p,
    InverseKind.ARCSINH: arcsinh_p,
    InverseKind.ARCTANH: arctanh_p,
}


def inverse_eval(kind: InverseKind, p: PLike, x: float, cfg: NumericConfig = DEFAULT_CONFIG) -> float:
    return _DISPATCH[kind](p, x, cfg)


def inverse_domain(kind: InverseKind) -> tuple[float, float, bool]:
    """Principal domain as ``(lo, hi, hi_included)``."""
    if kind is InverseKind.ARCTANH:
        return 0.0, 1.0, False
    return 0.0, 1.0, True
