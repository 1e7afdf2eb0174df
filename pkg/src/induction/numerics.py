"""Special functions and a bracketing root finder.

Everything downstream reduces to beta-function arithmetic: binomial tail
probabilities, Beta CDFs and their inverses, and beta moments.  The regularized
incomplete beta function is evaluated by its continued fraction (modified
Lentz), switching to the reflected argument where the fraction converges
slowly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .errors import BracketError, DomainError, NumericError

_CF_EPS = 1e-16
_CF_TINY = 1e-300
_CF_MAX_ITER = 10_000


@dataclass(frozen=True)
class ToleranceConfig:
    abs_tol: float = 1e-12
    rel_tol: float = 1e-10
    max_iter: int = 200

    def __post_init__(self):
        if not self.abs_tol > 0:
            raise DomainError(f"abs_tol must be positive, got {self.abs_tol}")
        if not self.rel_tol > 0:
            raise DomainError(f"rel_tol must be positive, got {self.rel_tol}")
        if int(self.max_iter) != self.max_iter or self.max_iter < 1:
            raise DomainError(f"max_iter must be a positive integer, got {self.max_iter}")


DEFAULT_TOLERANCE = ToleranceConfig()


def log_gamma(x: float) -> float:
    """Natural log of the gamma function for ``x > 0``."""
    if not x > 0 or math.isinf(x):
        raise DomainError(f"log_gamma requires a finite x > 0, got {x}")
    return math.lgamma(x)


def log_beta(a: float, b: float) -> float:
    """``ln B(a, b)`` for ``a, b > 0``."""
    if not (a > 0 and b > 0):
        raise DomainError(f"log_beta requires a, b > 0, got ({a}, {b})")
    return math.lgamma(a) + math.lgamma(b) - math.lgamma(a + b)


def _beta_cf(a: float, b: float, x: float) -> float:
    # Continued fraction for I_x(a,b) up to the prefactor x^a (1-x)^b / (a B(a,b)).
    qab = a + b
    qap = a + 1.0
    qam = a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < _CF_TINY:
        d = _CF_TINY
    d = 1.0 / d
    h = d
    for m in range(1, _CF_MAX_ITER + 1):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < _CF_TINY:
            d = _CF_TINY
        c = 1.0 + aa / c
        if abs(c) < _CF_TINY:
            c = _CF_TINY
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < _CF_TINY:
            d = _CF_TINY
        c = 1.0 + aa / c
        if abs(c) < _CF_TINY:
            c = _CF_TINY
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _CF_EPS:
            return h
    raise NumericError(f"incomplete beta continued fraction did not converge for a={a}, b={b}, x={x}")


def reg_inc_beta(a: float, b: float, x: float) -> float:
    """Regularized incomplete beta function ``I_x(a, b)``."""
    if not (a > 0 and b > 0) or math.isinf(a) or math.isinf(b):
        raise DomainError(f"reg_inc_beta requires finite a, b > 0, got ({a}, {b})")
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"reg_inc_beta requires 0 <= x <= 1, got {x}")
    if x == 0.0:
        return 0.0
    if x == 1.0:
        return 1.0
    log_front = a * math.log(x) + b * math.log1p(-x) - log_beta(a, b)
    if x < (a + 1.0) / (a + b + 2.0):
        value = math.exp(log_front) * _beta_cf(a, b, x) / a
    else:
        value = 1.0 - math.exp(log_front) * _beta_cf(b, a, 1.0 - x) / b
    return min(1.0, max(0.0, value))


def find_root(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    cfg: ToleranceConfig = DEFAULT_TOLERANCE,
    secant: bool = True,
) -> float:
    """Root of a monotone function bracketed by ``[lo, hi]``.

    Alternates secant and bisection steps when ``secant`` is true, so the
    bracket at least halves every two iterations.  Stops once
    ``|f(x)| < cfg.abs_tol`` or the bracket is narrower than ``cfg.rel_tol * |x|``.
    """
    if lo > hi:
        lo, hi = hi, lo
    flo, fhi = f(lo), f(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if (flo > 0) == (fhi > 0):
        raise BracketError(f"no sign change on [{lo}, {hi}]: f={flo}, {fhi}", bracket=(lo, hi))

    x = 0.5 * (lo + hi)
    for it in range(cfg.max_iter):
        mid = 0.5 * (lo + hi)
        x = mid
        if secant and it % 2 == 0 and fhi != flo:
            guess = hi - fhi * (hi - lo) / (fhi - flo)
            if lo < guess < hi:
                x = guess
        fx = f(x)
        if abs(fx) < cfg.abs_tol:
            return x
        if (fx > 0) == (flo > 0):
            lo, flo = x, fx
        else:
            hi, fhi = x, fx
        if hi - lo < cfg.rel_tol * abs(x) or not lo < 0.5 * (lo + hi) < hi:
            return x
    raise NumericError(f"root finder exceeded {cfg.max_iter} iterations", bracket=(lo, hi))


def inv_reg_inc_beta(
    a: float, b: float, p: float, cfg: ToleranceConfig = DEFAULT_TOLERANCE
) -> float:
    """Solve ``I_x(a, b) = p`` for ``x``."""
    if not (a > 0 and b > 0):
        raise DomainError(f"inv_reg_inc_beta requires a, b > 0, got ({a}, {b})")
    if not 0.0 <= p <= 1.0:
        raise DomainError(f"inv_reg_inc_beta requires 0 <= p <= 1, got {p}")
    if p == 0.0:
        return 0.0
    if p == 1.0:
        return 1.0
    if p > 0.5:
        # Work in the smaller tail: I_x(a,b) = p  <=>  I_{1-x}(b,a) = 1-p.
        return 1.0 - inv_reg_inc_beta(b, a, 1.0 - p, cfg)
    # Scale the residual tolerance with p so small tail probabilities keep
    # their relative accuracy.
    local = ToleranceConfig(
        abs_tol=min(cfg.abs_tol, cfg.abs_tol * p * 1e3), rel_tol=cfg.rel_tol, max_iter=cfg.max_iter
    )
    return find_root(lambda t: reg_inc_beta(a, b, t) - p, 0.0, 1.0, local)
