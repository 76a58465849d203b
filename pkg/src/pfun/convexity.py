"""Grid-based verification of mean-convexity inequalities.

Everything here is floating-point evidence on finite grids, not a proof:
a ``Holds`` verdict says no sampled pair violated the inequality by more
than ``margin_tol``.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field, replace
from enum import Enum
from typing import Callable, NamedTuple, Optional, Sequence

from .errors import PFunError
from .forward import X_MAX, FunctionKind, derivative_eval, forward_eval
from .inverse import arctan_p, arctanh_p, arcsinh_p
from .means import Mean, MeanKind, evaluate_mean
from .numerics import DEFAULT_CONFIG, Interval, NumericConfig, RootResult, integrate, solve_bracketed
from .special import PLike, as_p, pi_p

__all__ = [
    "Direction",
    "Verdict",
    "Profile",
    "GridSpec",
    "ConvexityReport",
    "IntegralCheck",
    "Claim",
    "CLAIMS",
    "TIGHT_CONFIG",
    "mn_convexity_check",
    "monotone_profile",
    "profile_values",
    "chebyshev_check",
    "jensen_check",
    "solve_s_p",
    "solve_r_p",
    "get_claim",
    "default_grid",
    "check_claim",
    "run_theorem_suite",
]

# Tolerances used to confirm a suspected violation before reporting it.
TIGHT_CONFIG = NumericConfig(abs_tol=1e-14, rel_tol=1e-14)
# Domains bounded by s_p or r_p are shrunk by this much at both ends.
DOMAIN_SHRINK = 1e-6

_EVAL_ERRORS = (PFunError, ArithmeticError, ValueError)


class Direction(Enum):
    """``CONVEX_LE``: f(M(x,y)) <= N(f(x),f(y)); ``CONCAVE_GE``: the reverse."""

    CONVEX_LE = "convex"
    CONCAVE_GE = "concave"

    def flipped(self) -> "Direction":
        return Direction.CONCAVE_GE if self is Direction.CONVEX_LE else Direction.CONVEX_LE


class Verdict(Enum):
    HOLDS = "Holds"
    VIOLATED = "Violated"
    INCONCLUSIVE = "Inconclusive"

    def __str__(self) -> str:
        return self.value


class Profile(Enum):
    INCREASING = "Increasing"
    DECREASING = "Decreasing"
    NON_MONOTONE = "NonMonotone"


@dataclass(frozen=True)
class GridSpec:
    """``n`` cell midpoints of ``domain``; bivariate checks use all n*n pairs."""

    domain: Interval
    n: int
    margin_tol: float = 1e-9

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError(f"grid needs n >= 2, got {self.n}")
        if not self.margin_tol >= 0:
            raise ValueError("margin_tol must be non-negative")

    def points(self) -> list[float]:
        lo, step = self.domain.lo, self.domain.width / self.n
        return [lo + (i + 0.5) * step for i in range(self.n)]


@dataclass
class ConvexityReport:
    claim_id: str
    p: float
    verdict: Verdict
    worst_margin: float
    worst_point: tuple[float, float]
    pairs_checked: int
    note: str = ""

    def to_dict(self) -> dict:
        d = asdict(self)
        d["verdict"] = self.verdict.value
        d["worst_point"] = list(self.worst_point)
        return d


class IntegralCheck(NamedTuple):
    lhs: float
    rhs: float
    ok: bool


def _margin(
    f: Callable[[float], float],
    inner: Mean,
    outer: Mean,
    direction: Direction,
    x: float,
    y: float,
    fx: float,
    fy: float,
) -> float:
    fm = f(evaluate_mean(inner, x, y))
    outer_val = evaluate_mean(outer, fx, fy)
    return outer_val - fm if direction is Direction.CONVEX_LE else fm - outer_val


def mn_convexity_check(
    f: Callable[[float], float],
    inner: Mean,
    outer: Mean,
    grid: GridSpec,
    direction: Direction,
    *,
    f_tight: Optional[Callable[[float], float]] = None,
    claim_id: str = "",
    p: float = math.nan,
    note: str = "",
) -> ConvexityReport:
    """Check ``f(inner(x, y)) <= outer(f(x), f(y))`` (or ``>=``) on a grid.

    The margin is ``outer(f(x), f(y)) - f(inner(x, y))`` for ``CONVEX_LE`` and
    its negation for ``CONCAVE_GE``; the report carries the smallest one.
    Pairs below ``-margin_tol`` are re-evaluated with ``f_tight`` (when
    given) and only count as violations if they stay below.
    """
    xs = grid.points()
    tol = grid.margin_tol
    memo: dict[float, float] = {}

    def fval(x: float) -> float:
        v = memo.get(x)
        if v is None:
            v = f(x)
            if not (math.isfinite(v) and v > 0):
                raise ValueError(f"f({x!r}) = {v!r} is not a positive finite number")
            memo[x] = v
        return v

    worst = (math.inf, (math.nan, math.nan))
    clean = worst  # worst among pairs within tolerance
    violators: list[tuple[float, tuple[float, float]]] = []
    pairs = 0
    for i, x in enumerate(xs):
        for y in xs[i:]:
            try:
                fx, fy = fval(x), fval(y)
                m = _margin(fval, inner, outer, direction, x, y, fx, fy)
            except _EVAL_ERRORS as exc:
                return ConvexityReport(
                    claim_id, p, Verdict.INCONCLUSIVE, math.nan, (x, y), pairs,
                    f"evaluation failed: {exc}",
                )
            pairs += 1 if x == y else 2
            entry = (m, (x, y))
            worst = min(worst, entry)
            if m < -tol:
                violators.append(entry)
            else:
                clean = min(clean, entry)

    if not violators:
        return ConvexityReport(claim_id, p, Verdict.HOLDS, worst[0], worst[1], pairs, note)
    if f_tight is None:
        return ConvexityReport(claim_id, p, Verdict.VIOLATED, worst[0], worst[1], pairs, note)

    # Confirm suspected violations at tight tolerance, worst first.
    for _, (x, y) in sorted(violators):
        try:
            m = _margin(f_tight, inner, outer, direction, x, y, f_tight(x), f_tight(y))
        except _EVAL_ERRORS as exc:
            return ConvexityReport(
                claim_id, p, Verdict.INCONCLUSIVE, math.nan, (x, y), pairs,
                f"evaluation failed at tight tolerance: {exc}",
            )
        if m < -tol:
            return ConvexityReport(claim_id, p, Verdict.VIOLATED, m, (x, y), pairs, note)
        clean = min(clean, (m, (x, y)))
    return ConvexityReport(claim_id, p, Verdict.HOLDS, clean[0], clean[1], pairs, note)


def profile_values(
    f: Callable[[float], float],
    f_prime: Callable[[float], float],
    a: float,
    b: float,
    xs: Sequence[float],
) -> list[float]:
    """``x^(1-a) f'(x) / f(x)^(1-b)`` at each point of ``xs``."""
    return [x ** (1.0 - a) * f_prime(x) / f(x) ** (1.0 - b) for x in xs]


def monotone_profile(
    f: Callable[[float], float],
    f_prime: Callable[[float], float],
    a: float,
    b: float,
    grid: GridSpec,
) -> Profile:
    """Classify the monotonicity of the (a, b)-profile on the grid.

    ``(a, b) = (-1, -1)`` gives ``x^2 f'/f^2`` (harmonic-harmonic convexity),
    ``(1, 0)`` gives ``f'/f`` (log-convexity). Consecutive differences are
    compared against ``grid.margin_tol``; a flat profile counts as
    increasing.
    """
    g = profile_values(f, f_prime, a, b, grid.points())
    diffs = [v - u for u, v in zip(g, g[1:])]
    if any(math.isnan(d) for d in diffs):
        raise ValueError("profile evaluation produced NaN")
    tol = grid.margin_tol
    if all(d >= -tol for d in diffs):
        return Profile.INCREASING
    if all(d <= tol for d in diffs):
        return Profile.DECREASING
    return Profile.NON_MONOTONE


def chebyshev_check(
    f: Callable[[float], float],
    g: Callable[[float], float],
    w: Callable[[float], float],
    iv: Interval,
    cfg: NumericConfig = DEFAULT_CONFIG,
    tol: float = 1e-9,
) -> IntegralCheck:
    """``int w f * int w g <= int w * int w f g`` for similarly ordered f, g.

    The caller knows whether f and g are similarly or oppositely ordered;
    ``ok`` only reports whether the similarly-ordered form holds.
    """
    lhs = integrate(lambda x: w(x) * f(x), iv, cfg) * integrate(lambda x: w(x) * g(x), iv, cfg)
    rhs = integrate(w, iv, cfg) * integrate(lambda x: w(x) * f(x) * g(x), iv, cfg)
    return IntegralCheck(lhs, rhs, lhs <= rhs + tol)


def jensen_check(
    f_convex: Callable[[float], float],
    phi: Callable[[float], float],
    iv: Interval,
    cfg: NumericConfig = DEFAULT_CONFIG,
    tol: float = 1e-9,
) -> IntegralCheck:
    """``f(mean of phi) <= mean of f(phi)`` over ``iv``."""
    lhs = f_convex(integrate(phi, iv, cfg) / iv.width)
    rhs = integrate(lambda x: f_convex(phi(x)), iv, cfg) / iv.width
    return IntegralCheck(lhs, rhs, lhs <= rhs + tol)


def _upper_bracket(f: Callable[[float], float], top: float) -> float:
    """Walk towards ``top`` until ``f`` turns positive."""
    for j in range(1, 80):
        x = top * (1.0 - 0.6**j)
        if x >= top:
            break
        if f(x) > 0:
            return x
    raise PFunError(f"no sign change found below {top}")


def _polish(cfg: NumericConfig) -> NumericConfig:
    # Newton is quadratic here; the extra digits cost about one iteration.
    return replace(cfg, abs_tol=cfg.abs_tol * 1e-3)


def solve_s_p(p: PLike, cfg: NumericConfig = DEFAULT_CONFIG) -> RootResult:
    """Root of ``tan_p(x) = (p - 1)^(-1/p)`` on ``(0, pi_p/2)``."""
    q = as_p(p)
    level = (q - 1.0) ** (-1.0 / q)

    def eq(x: float) -> float:
        return forward_eval(FunctionKind.TAN, q, x, cfg) - level

    hi = _upper_bracket(eq, 0.5 * pi_p(q))
    return solve_bracketed(
        eq, Interval(0.0, hi), _polish(cfg),
        fprime=lambda x: derivative_eval(FunctionKind.TAN, q, x, cfg),
    )


def solve_r_p(p: PLike, cfg: NumericConfig = DEFAULT_CONFIG) -> RootResult:
    """Root of ``x^(p-1) arctanh_p(x) = 1/p`` on ``(0, 1)``.

    Beyond this point ``arctanh_p`` is log-convex.
    """
    q = as_p(p)

    def eq(x: float) -> float:
        return x ** (q - 1.0) * arctanh_p(q, x, cfg) - 1.0 / q

    def slope(x: float) -> float:
        return (q - 1.0) * x ** (q - 2.0) * arctanh_p(q, x, cfg) + x ** (q - 1.0) / (1.0 - x**q)

    hi = _upper_bracket(eq, 1.0)
    return solve_bracketed(eq, Interval(0.0, hi), _polish(cfg), fprime=slope)


# ---------------------------------------------------------------------------
# Claim catalogue


def _forward(kind: FunctionKind, reciprocal: bool = False):
    def build(q: float, cfg: NumericConfig) -> Callable[[float], float]:
        if reciprocal:
            return lambda x: 1.0 / forward_eval(kind, q, x, cfg)
        return lambda x: forward_eval(kind, q, x, cfg)

    return build


def _inverse(fn):
    def build(q: float, cfg: NumericConfig) -> Callable[[float], float]:
        return lambda x: fn(q, x, cfg)

    return build


def _quarter_period(q: float, cfg: NumericConfig) -> tuple[float, float]:
    return 0.0, 0.5 * pi_p(q)


def _hyperbolic_range(q: float, cfg: NumericConfig) -> tuple[float, float]:
    return 0.0, X_MAX


def _unit(q: float, cfg: NumericConfig) -> tuple[float, float]:
    return 0.0, 1.0


def _above_s_p(q: float, cfg: NumericConfig) -> tuple[float, float]:
    return solve_s_p(q, cfg).root + DOMAIN_SHRINK, 0.5 * pi_p(q) - DOMAIN_SHRINK


def _above_r_p(q: float, cfg: NumericConfig) -> tuple[float, float]:
    return solve_r_p(q, cfg).root + DOMAIN_SHRINK, 1.0 - DOMAIN_SHRINK


@dataclass(frozen=True)
class Claim:
    """One inequality ``f(inner(x, y)) <=/>= outer(f(x), f(y))`` on a domain."""

    claim_id: str
    statement: str
    build: Callable[[float, NumericConfig], Callable[[float], float]] = field(repr=False)
    inner: Mean
    outer: Mean
    direction: Direction
    domain: Callable[[float, NumericConfig], tuple[float, float]] = field(repr=False)
    p_min: float = 1.0
    p_min_inclusive: bool = False
    note: str = ""

    def p_ok(self, p: float) -> bool:
        return p >= self.p_min if self.p_min_inclusive else p > self.p_min

    @property
    def p_range(self) -> str:
        return f"p {'>=' if self.p_min_inclusive else '>'} {self.p_min:g}"


_LOG = MeanKind.LOGARITHMIC
_ARI = MeanKind.ARITHMETIC

CLAIMS: tuple[Claim, ...] = (
    Claim("thm1.3-1", "L(sin_p x, sin_p y) <= sin_p(L(x, y))",
          _forward(FunctionKind.SIN), _LOG, _LOG, Direction.CONCAVE_GE, _quarter_period),
    Claim("thm1.3-2", "L(cos_p x, cos_p y) <= cos_p(L(x, y))",
          _forward(FunctionKind.COS), _LOG, _LOG, Direction.CONCAVE_GE, _quarter_period,
          p_min=2.0, p_min_inclusive=True),
    Claim("thm1.4-1", "L(1/sin_p x, 1/sin_p y) >= 1/sin_p(A(x, y))",
          _forward(FunctionKind.SIN, reciprocal=True), _ARI, _LOG, Direction.CONVEX_LE, _quarter_period),
    Claim("thm1.4-2", "L(1/cos_p x, 1/cos_p y) >= 1/cos_p(L(x, y))",
          _forward(FunctionKind.COS, reciprocal=True), _LOG, _LOG, Direction.CONVEX_LE, _quarter_period),
    Claim("thm1.4-3", "L(tanh_p x, tanh_p y) <= tanh_p(A(x, y))",
          _forward(FunctionKind.TANH), _ARI, _LOG, Direction.CONCAVE_GE, _hyperbolic_range),
    Claim("thm1.4-4", "L(arcsinh_p x, arcsinh_p y) <= arcsinh_p(A(x, y))",
          _inverse(arcsinh_p), _ARI, _LOG, Direction.CONCAVE_GE, _unit),
    Claim("thm1.4-5", "L(arctan_p x, arctan_p y) <= arctan_p(A(x, y))",
          _inverse(arctan_p), _ARI, _LOG, Direction.CONCAVE_GE, _unit),
    Claim("cor2.5-1", "L(tan_p x, tan_p y) >= tan_p(L(x, y)) on (s_p, pi_p/2)",
          _forward(FunctionKind.TAN), _LOG, _LOG, Direction.CONVEX_LE, _above_s_p),
    Claim("cor2.5-2", "L(arctanh_p x, arctanh_p y) >= arctanh_p(L(x, y)) on (r_p, 1)",
          _inverse(arctanh_p), _LOG, _LOG, Direction.CONVEX_LE, _above_r_p,
          note="r_p solves x^(p-1) arctanh_p(x) = 1/p"),
)

_BY_ID = {c.claim_id: c for c in CLAIMS}


def get_claim(claim_id: str) -> Claim:
    try:
        return _BY_ID[claim_id]
    except KeyError:
        raise KeyError(f"unknown claim {claim_id!r}; known: {', '.join(sorted(_BY_ID))}") from None


def default_grid(n: int = 40, margin_tol: float = 1e-9) -> GridSpec:
    """Grid over ``[0, X_MAX]``, which contains every claim's domain."""
    return GridSpec(Interval(0.0, X_MAX), n, margin_tol)


def check_claim(
    claim: Claim,
    p: PLike,
    grid: Optional[GridSpec] = None,
    *,
    reverse: bool = False,
    cfg: NumericConfig = DEFAULT_CONFIG,
    tight_cfg: Optional[NumericConfig] = TIGHT_CONFIG,
) -> ConvexityReport:
    """Run one claim for one ``p`` on ``grid.domain`` intersected with the claim's domain.

    ``reverse=True`` checks the opposite inequality, which should fail for
    a non-vacuous claim.
    """
    q = as_p(p)
    grid = grid or default_grid()
    direction = claim.direction.flipped() if reverse else claim.direction
    claim_id = claim.claim_id + (" (reversed)" if reverse else "")
    try:
        lo, hi = claim.domain(q, cfg)
        dom = Interval(max(lo, grid.domain.lo), min(hi, grid.domain.hi))
    except (PFunError, ArithmeticError, ValueError) as exc:
        return ConvexityReport(claim_id, q, Verdict.INCONCLUSIVE, math.nan, (math.nan, math.nan), 0,
                               f"domain setup failed: {exc}")
    sub = GridSpec(dom, grid.n, grid.margin_tol)
    return mn_convexity_check(
        claim.build(q, cfg), claim.inner, claim.outer, sub, direction,
        f_tight=claim.build(q, tight_cfg) if tight_cfg is not None else None,
        claim_id=claim_id, p=q, note=claim.note,
    )


def run_theorem_suite(
    p_set: Sequence[PLike],
    grid: Optional[GridSpec] = None,
    claims: Optional[Sequence[Claim]] = None,
    cfg: NumericConfig = DEFAULT_CONFIG,
) -> list[ConvexityReport]:
    """One report per applicable (claim, p), sorted by claim id then p.

    Pairs whose ``p`` lies outside a claim's stated range are left out.
    """
    if not p_set:
        raise ValueError("p_set must not be empty")
    ps = sorted({as_p(p) for p in p_set})
    todo = sorted(claims if claims is not None else CLAIMS, key=lambda c: c.claim_id)
    return [check_claim(c, p, grid, cfg=cfg) for c in todo for p in ps if c.p_ok(p)]
