"""Bernoulli data, likelihoods, and the distributions placed on the success rate.

``GeneralizedBeta`` keeps only the shape ``(a, b)`` of ``theta^(a-1) (1-theta)^(b-1)``
so that improper members such as Beta(0, 1) and Beta(1, 0) can be carried
around and updated without ever being normalized.  ``ThetaDistribution`` adds
point masses at the two boundaries; the mass at ``theta = 1`` is the
probability of the general proposition "every trial succeeds".
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import DomainError, NormalizationError, UndefinedEstimateError
from .numerics import log_beta, reg_inc_beta

_MASS_TOL = 1e-12


@dataclass(frozen=True)
class BernoulliData:
    """``n`` trials with ``x`` successes."""

    n: int
    x: int

    def __post_init__(self):
        for name in ("n", "x"):
            value = getattr(self, name)
            if isinstance(value, bool) or int(value) != value:
                raise DomainError(f"{name} must be an integer, got {value!r}")
            object.__setattr__(self, name, int(value))
        if self.n < 0 or self.x < 0:
            raise DomainError(f"counts must be non-negative, got n={self.n}, x={self.x}")
        if self.x > self.n:
            raise DomainError(f"successes exceed trials: x={self.x} > n={self.n}")

    @property
    def failures(self) -> int:
        return self.n - self.x

    @property
    def all_successes(self) -> bool:
        return self.x == self.n

    @classmethod
    def all_success(cls, n: int) -> BernoulliData:
        return cls(n, n)

    def __add__(self, other: BernoulliData) -> BernoulliData:
        if not isinstance(other, BernoulliData):
            return NotImplemented
        return BernoulliData(self.n + other.n, self.x + other.x)


@dataclass(frozen=True)
class GeneralizedBeta:
    """Beta(a, b) shape with ``a, b >= 0``; improper when either is zero."""

    a: float
    b: float

    def __post_init__(self):
        if not (self.a >= 0 and self.b >= 0) or math.isinf(self.a) or math.isinf(self.b):
            raise DomainError(f"Beta shape must be finite and non-negative, got ({self.a}, {self.b})")

    @property
    def proper(self) -> bool:
        return self.a > 0 and self.b > 0

    def _require_proper(self, what: str):
        if not self.proper:
            raise NormalizationError(f"{what} undefined for improper Beta({self.a}, {self.b})")

    def log_norm(self) -> float:
        """``ln B(a, b)``, the log normalizing constant."""
        self._require_proper("normalizing constant")
        return log_beta(self.a, self.b)

    def kernel(self, theta: float) -> float:
        """Unnormalized density ``theta^(a-1) (1-theta)^(b-1)``."""
        _check_theta(theta)
        return _pow0(theta, self.a - 1.0) * _pow0(1.0 - theta, self.b - 1.0)

    def pdf(self, theta: float) -> float:
        self._require_proper("density")
        _check_theta(theta)
        if theta in (0.0, 1.0):
            return self.kernel(theta) / math.exp(self.log_norm())
        log_k = (self.a - 1.0) * math.log(theta) + (self.b - 1.0) * math.log1p(-theta)
        return math.exp(log_k - self.log_norm())

    def cdf(self, theta: float) -> float:
        self._require_proper("CDF")
        _check_theta(theta)
        return reg_inc_beta(self.a, self.b, theta)

    def mean(self) -> float:
        self._require_proper("mean")
        return self.a / (self.a + self.b)

    def moment(self, m: int) -> float:
        """``E[theta^m]`` for a non-negative integer ``m``."""
        self._require_proper("moment")
        if m < 0 or int(m) != m:
            raise DomainError(f"moment order must be a non-negative integer, got {m}")
        if m <= 1000:
            out = 1.0
            for i in range(int(m)):
                out *= (self.a + i) / (self.a + self.b + i)
            return out
        return math.exp(log_beta(self.a + m, self.b) - log_beta(self.a, self.b))

    def update(self, data: BernoulliData) -> GeneralizedBeta:
        """Conjugate update: multiply by the likelihood of ``data``."""
        return GeneralizedBeta(self.a + data.x, self.b + data.failures)


@dataclass(frozen=True)
class ThetaDistribution:
    """Boundary atoms plus a (possibly improper) Beta continuous part.

    ``kolmogorov`` is false when the measure descends from an improper prior;
    its masses are then confidences rather than probabilities.
    """

    atom0: float = 0.0
    atom1: float = 0.0
    cont: GeneralizedBeta = field(default_factory=lambda: GeneralizedBeta(1.0, 1.0))
    cont_weight: float = 1.0
    kolmogorov: bool = True

    def __post_init__(self):
        for name in ("atom0", "atom1", "cont_weight"):
            w = getattr(self, name)
            if not w >= 0 or math.isinf(w):
                raise DomainError(f"{name} must be a finite non-negative weight, got {w}")
        if self.proper:
            total = self.atom0 + self.atom1 + self.cont_weight
            if abs(total - 1.0) > _MASS_TOL:
                raise DomainError(f"weights of a proper distribution must sum to 1, got {total}")

    @property
    def proper(self) -> bool:
        return self.cont.proper or self.cont_weight == 0.0

    @classmethod
    def beta(cls, a: float, b: float) -> ThetaDistribution:
        """Purely continuous Beta(a, b); improper shapes are allowed."""
        shape = GeneralizedBeta(a, b)
        return cls(cont=shape, cont_weight=1.0, kolmogorov=shape.proper)

    @classmethod
    def point(cls, theta: int) -> ThetaDistribution:
        """All mass on the boundary ``theta`` (0 or 1)."""
        if theta == 1:
            return cls(atom1=1.0, cont_weight=0.0)
        if theta == 0:
            return cls(atom0=1.0, cont_weight=0.0)
        raise DomainError(f"point masses live at 0 or 1, got {theta}")

    @classmethod
    def mixture(cls, atom1: float, cont: GeneralizedBeta, atom0: float = 0.0) -> ThetaDistribution:
        return cls(atom0=atom0, atom1=atom1, cont=cont, cont_weight=1.0 - atom0 - atom1)


def _check_theta(theta: float):
    if not 0.0 <= theta <= 1.0:
        raise DomainError(f"theta must lie in [0, 1], got {theta}")


def _pow0(base: float, exponent: float) -> float:
    # 0**0 == 1 by convention; 0**negative is an integrable singularity.
    if base == 0.0:
        if exponent == 0:
            return 1.0
        return 0.0 if exponent > 0 else math.inf
    return base**exponent


def likelihood(data: BernoulliData, theta: float) -> float:
    """``theta^x (1-theta)^(n-x)`` with ``0^0 = 1``."""
    _check_theta(theta)
    if data.n > 1000:
        return math.exp(log_likelihood(data, theta))
    return _pow0(theta, data.x) * _pow0(1.0 - theta, data.failures)


def log_likelihood(data: BernoulliData, theta: float) -> float:
    """Log of :func:`likelihood`; ``-inf`` when a boundary ``theta`` contradicts the data."""
    _check_theta(theta)
    total = 0.0
    if data.x:
        if theta == 0.0:
            return -math.inf
        total += data.x * math.log(theta)
    if data.failures:
        if theta == 1.0:
            return -math.inf
        total += data.failures * math.log1p(-theta)
    return total


def mle(data: BernoulliData) -> float:
    if data.n == 0:
        raise UndefinedEstimateError("the success rate has no estimate from zero trials")
    return data.x / data.n
