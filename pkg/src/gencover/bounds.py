"""Asymptotic rate bounds for block-metric covering, and their curves.

Closed forms for the ball-covering lower bound, the naive upper bound, and
the improved binary t=2 upper bound built from the auxiliary function f(rho);
f has both a closed form and an independent grid-maximization oracle over the
two constrained exponent functions it is defined from.  Rates are clamped to
[0, 1] at output.  All computation is double precision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, NoSignChange


def entropy(q: int, x: float) -> float:
    """q-ary entropy H_q(x) = x log_q(q-1) - x log_q x - (1-x) log_q(1-x).

    Uses the convention 0 log 0 = 0 at both endpoints.
    """
    if q < 2:
        raise DomainError(f"alphabet size {q} must be at least 2")
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"entropy argument {x} outside [0, 1]")
    lq = math.log(q)
    out = x * math.log(q - 1) / lq
    if 0.0 < x:
        out -= x * math.log(x) / lq
    if x < 1.0:
        out -= (1.0 - x) * math.log(1.0 - x) / lq
    return out


def _h2(x: float) -> float:
    if x <= 0.0 or x >= 1.0:
        return 0.0
    return -x * math.log2(x) - (1.0 - x) * math.log2(1.0 - x)


def lower_bound_rate(t: int, q: int, rho: float) -> float:
    """Ball-covering lower bound max(0, 1 - H_{q^t}(rho)) on the minimal rate."""
    if not 0.0 <= rho <= 1.0:
        raise DomainError(f"rho {rho} outside [0, 1]")
    if t < 1:
        raise DomainError("t must be at least 1")
    if rho >= 1.0 - q**-t:
        return 0.0
    return max(0.0, 1.0 - entropy(q**t, rho))


def naive_upper(t: int, q: int, rho: float) -> float:
    """Upper bound 1 - H_q(rho / t) from answering each query separately."""
    if t < 2:
        raise DomainError("the naive bound needs t >= 2")
    if not 0.0 <= rho <= 1.0:
        raise DomainError(f"rho {rho} outside [0, 1]")
    return max(0.0, min(1.0, 1.0 - entropy(q, rho / t)))


def s_func(rho: float) -> float:
    """s(rho) = (1 + 8 rho - sqrt(1 + 16 rho - 16 rho^2)) / 10."""
    return (1.0 + 8.0 * rho - math.sqrt(1.0 + 16.0 * rho - 16.0 * rho * rho)) / 10.0


def f_closed(rho: float) -> float:
    """Closed form of f: H_2(s) + 2s + 2(1-s) H_2((rho-s)/(1-s)) below 3/4, else 3."""
    if not 0.0 <= rho <= 1.0:
        raise DomainError(f"rho {rho} outside [0, 1]")
    if rho >= 0.75:
        return 3.0
    s = s_func(rho)
    return _h2(s) + 2.0 * s + 2.0 * (1.0 - s) * _h2((rho - s) / (1.0 - s))


def _f1_value(a: float, b: float, g: float) -> float:
    """Exponent rate H_2(a) + a H_2(b/a) + 2(a-b) + (1-a+b) H_2(g/(1-a+b)).

    The a -> 0 and (1-a+b) -> 0 limits are 0 for the respective terms.
    """
    out = _h2(a) + 2.0 * (a - b)
    if a > 0.0:
        out += a * _h2(b / a)
    rest = 1.0 - a + b
    if rest > 0.0:
        out += rest * _h2(g / rest)
    return out


def _f2_value(a: float, b: float) -> float:
    """Exponent rate H_2(a) + 2(1-a) H_2(b/(1-a)) + 2a, with the a -> 1 limit 0."""
    out = _h2(a) + 2.0 * a
    rest = 1.0 - a
    if rest > 0.0:
        out += 2.0 * rest * _h2(b / rest)
    return out


def _axis(lo: float, hi: float, step: float) -> list[float]:
    """Grid points lo, lo+step, ... plus the exact endpoints."""
    if hi <= lo:
        return [lo] if hi == lo else []
    n = int((hi - lo) / step)
    pts = [lo + i * step for i in range(n + 1)]
    if pts[-1] < hi - 1e-15:
        pts.append(hi)
    else:
        pts[-1] = hi
    return pts


@dataclass(frozen=True)
class FGridResult:
    value: float
    f1: float
    argmax_f1: tuple[float, float, float]
    f2: float
    argmax_f2: tuple[float, float]


def f_grid(rho: float, grid_step: float = 0.005, refine_rounds: int = 3) -> FGridResult:
    """Maximize the two exponent functions on their constraint domains by grid
    search, then locally refine the grid around each incumbent.

    The search knows nothing about the closed form: it is the independent
    check that the piecewise formula and the maximization agree.  Refinement
    shrinks the step by 5x per round around the best point (re-clipped to the
    constraints), so the quadratic grid error becomes negligible even where
    the entropy terms are steep.
    """
    if not 0.0 <= rho <= 1.0:
        raise DomainError(f"rho {rho} outside [0, 1]")
    if grid_step > 0.01 or grid_step <= 0.0:
        raise DomainError("grid_step must be in (0, 0.01]")

    def search_f1(a_lo, a_hi, b_bounds, g_bounds, step):
        best = (-1.0, (0.0, 0.0, 0.0))
        for a in _axis(max(0.0, a_lo), min(rho, a_hi), step):
            b_lo, b_hi = (0.0, a) if b_bounds is None else b_bounds
            for b in _axis(max(0.0, b_lo), min(a, b_hi), step):
                g_cap = rho - a + b
                g_lo, g_hi = (0.0, g_cap) if g_bounds is None else g_bounds
                for g in _axis(max(0.0, g_lo), min(g_cap, g_hi), step):
                    v = _f1_value(a, b, g)
                    if v > best[0]:
                        best = (v, (a, b, g))
        return best

    def search_f2(a_lo, a_hi, b_bounds, step):
        best = (-1.0, (0.0, 0.0))
        for a in _axis(max(0.0, a_lo), min(rho, a_hi), step):
            b_lo, b_hi = (0.0, rho - a) if b_bounds is None else b_bounds
            for b in _axis(max(0.0, b_lo), min(rho - a, b_hi), step):
                v = _f2_value(a, b)
                if v > best[0]:
                    best = (v, (a, b))
        return best

    f1, (a1, b1, g1) = search_f1(0.0, rho, None, None, grid_step)
    f2, (a2, b2) = search_f2(0.0, rho, None, grid_step)
    step = grid_step
    for _ in range(refine_rounds):
        step /= 5.0
        f1, (a1, b1, g1) = search_f1(
            a1 - 5 * step, a1 + 5 * step, (b1 - 5 * step, b1 + 5 * step), (g1 - 5 * step, g1 + 5 * step), step
        )
        f2, (a2, b2) = search_f2(a2 - 5 * step, a2 + 5 * step, (b2 - 5 * step, b2 + 5 * step), step)
    return FGridResult(
        value=max(f1, f2), f1=f1, argmax_f1=(a1, b1, g1), f2=f2, argmax_f2=(a2, b2)
    )


def main_upper(rho: float) -> float:
    """Binary t=2 upper bound: 1 - (4 H_4(rho) - f(rho)) below 3/4, else 0."""
    if not 0.0 <= rho <= 1.0:
        raise DomainError(f"rho {rho} outside [0, 1]")
    if rho >= 0.75:
        return 0.0
    value = 1.0 - (4.0 * entropy(4, rho) - f_closed(rho))
    return max(0.0, min(1.0, value))


def bisect_root(diff, lo: float, hi: float, tolerance: float) -> float:
    """Bisection for a negative-to-positive sign change of diff on [lo, hi]."""
    if not diff(lo) < 0.0 < diff(hi):
        raise NoSignChange(f"no sign change over ({lo}, {hi})")
    while hi - lo > tolerance:
        mid = 0.5 * (lo + hi)
        if diff(mid) < 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def crossover(tolerance: float = 1e-4) -> float:
    """The rho where the naive bound stops beating the improved one.

    Bisection on naive_upper(2,2,rho) - main_upper(rho) over (0.01, 0.5);
    below the root the naive bound is smaller, above it is larger.
    """
    if tolerance < 1e-4:
        raise DomainError("tolerance must be at least 1e-4")
    return bisect_root(
        lambda r: naive_upper(2, 2, r) - main_upper(r), 0.01, 0.5, tolerance
    )


@dataclass(frozen=True)
class BoundCurvePoint:
    """One sample of the binary t=2 bound curves at normalized radius rho."""

    rho: float
    f: float
    lower: float
    naive_upper: float
    main_upper: float


def emit_curve(rho_min: float, rho_max: float, step: float) -> list[BoundCurvePoint]:
    """Inclusive, deterministic sampling of all bound curves over [rho_min, rho_max]."""
    if not (0.0 <= rho_min < rho_max <= 1.0):
        raise DomainError("need 0 <= rho_min < rho_max <= 1")
    if step <= 0.0:
        raise DomainError("step must be positive")
    count = round((rho_max - rho_min) / step)
    if abs(rho_min + count * step - rho_max) > 1e-9:
        count = int((rho_max - rho_min) / step + 1e-9)
    points = []
    for i in range(count + 1):
        rho = min(rho_min + i * step, rho_max)
        points.append(
            BoundCurvePoint(
                rho=rho,
                f=f_closed(rho),
                lower=lower_bound_rate(2, 2, rho),
                naive_upper=naive_upper(2, 2, rho),
                main_upper=main_upper(rho),
            )
        )
    return points


CSV_HEADER = "rho,f,lower,naive_upper,main_upper"


def curve_to_csv(points: list[BoundCurvePoint]) -> str:
    lines = [CSV_HEADER]
    for p in points:
        lines.append(
            f"{p.rho:.6f},{p.f:.6f},{p.lower:.6f},{p.naive_upper:.6f},{p.main_upper:.6f}"
        )
    return "\n".join(lines) + "\n"


def write_curve_csv(points: list[BoundCurvePoint], path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(curve_to_csv(points))
