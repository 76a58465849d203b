"""Classical special functions and the constants pi_p, b_p, c_p.

Each constant has a primary evaluation route plus an alternative one kept
for cross-validation:

* ``pi_p``: ``2*pi / (p*sin(pi/p))``; alternative ``(2/p)*B(1 - 1/p, 1/p)``.
* ``b_p``: digamma form; alternative hypergeometric form.
* ``c_p``: hypergeometric form; the quadrature route lives with the inverse
  functions (``arcsinh_p(p, 1)``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Union

from .errors import ConvergenceError, DomainError

__all__ = [
    "PParam",
    "as_p",
    "beta",
    "digamma",
    "gauss_2f1",
    "pi_p",
    "pi_p_beta",
    "b_p",
    "b_p_hypergeometric",
    "c_p",
]

EULER_GAMMA = 0.57721566490153286061

# B_{2k} / (2k) for k = 1..7, i.e. up to the B_14 term of the asymptotic
# digamma series. Truncation error at x >= 6 is below 2e-13.
_DIGAMMA_COEFFS = (
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
)
_DIGAMMA_SHIFT = 6.0


@dataclass(frozen=True)
class PParam:
    """The family parameter ``p > 1``."""

    p: float

    def __post_init__(self) -> None:
        if not (isinstance(self.p, (int, float)) and math.isfinite(self.p) and self.p > 1):
            raise DomainError(f"p must be a finite real number > 1, got {self.p!r}")

    def __float__(self) -> float:
        return float(self.p)


PLike = Union[PParam, float]


def as_p(p: PLike) -> float:
    """Validate ``p`` and return it as a float."""
    if isinstance(p, PParam):
        return float(p.p)
    return float(PParam(float(p)).p)


def beta(a: float, b: float) -> float:
    """Euler beta function through ``math.lgamma``."""
    if not (a > 0 and b > 0):
        raise DomainError(f"beta needs positive arguments, got ({a!r}, {b!r})")
    return math.exp(math.lgamma(a) + math.lgamma(b) - math.lgamma(a + b))


def digamma(x: float) -> float:
    """Digamma function for ``x > 0``.

    Shifts the argument up to ``x >= 6`` with ``psi(x) = psi(x + 1) - 1/x``
    and then sums the asymptotic series.
    """
    if not x > 0 or not math.isfinite(x):
        raise DomainError(f"digamma is implemented for finite x > 0, got {x!r}")
    acc = 0.0
    while x < _DIGAMMA_SHIFT:
        acc -= 1.0 / x
        x += 1.0
    inv2 = 1.0 / (x * x)
    series = 0.0
    power = inv2
    for c in _DIGAMMA_COEFFS:
        series += c * power
        power *= inv2
    return acc + math.log(x) - 0.5 / x - series


def gauss_2f1(a: float, b: float, c: float, z: float, max_iter: int = 200) -> float:
    """Gauss hypergeometric series ``F(a, b; c; z)`` for ``|z| <= 1/2``."""
    if c <= 0 and c == math.floor(c):
        raise DomainError(f"c must not be a non-positive integer, got {c!r}")
    if abs(z) > 0.5:
        raise DomainError(f"gauss_2f1 is restricted to |z| <= 1/2, got z={z!r}")
    total = 1.0
    term = 1.0
    for k in range(max_iter):
        term *= (a + k) * (b + k) / ((c + k) * (k + 1)) * z
        total += term
        if abs(term) <= 1e-16 * abs(total):
            return total
    raise ConvergenceError(
        f"2F1({a}, {b}; {c}; {z}) series did not converge in {max_iter} terms", total, abs(term)
    )


@lru_cache(maxsize=256)
def _pi_p(p: float) -> float:
    return 2.0 * math.pi / (p * math.sin(math.pi / p))


def pi_p(p: PLike) -> float:
    """Generalized pi, ``2 * arcsin_p(1)``, via ``2*pi / (p*sin(pi/p))``."""
    return _pi_p(as_p(p))


def pi_p_beta(p: PLike) -> float:
    """``pi_p`` through the beta integral ``(2/p) * B(1 - 1/p, 1/p)``."""
    q = as_p(p)
    return 2.0 / q * beta(1.0 - 1.0 / q, 1.0 / q)


@lru_cache(maxsize=256)
def _b_p(p: float) -> float:
    return (digamma((1.0 + p) / (2.0 * p)) - digamma(1.0 / (2.0 * p))) / (2.0 * p)


def b_p(p: PLike) -> float:
    """Supremum of ``arctan_p`` on [0, 1], from the digamma closed form."""
    return _b_p(as_p(p))


def b_p_hypergeometric(p: PLike) -> float:
    """``b_p = 2**(-1/p) * F(1/p, 1/p; 1 + 1/p; 1/2)``."""
    q = as_p(p)
    return 2.0 ** (-1.0 / q) * gauss_2f1(1.0 / q, 1.0 / q, 1.0 + 1.0 / q, 0.5)


@lru_cache(maxsize=256)
def _c_p(p: float) -> float:
    return 0.5 ** (1.0 / p) * gauss_2f1(1.0, 1.0 / p, 1.0 + 1.0 / p, 0.5)


def c_p(p: PLike) -> float:
    """Supremum of ``arcsinh_p`` on [0, 1], ``2**(-1/p) * F(1, 1/p; 1 + 1/p; 1/2)``."""
    return _c_p(as_p(p))
