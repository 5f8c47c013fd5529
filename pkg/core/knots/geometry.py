"""
The (p, q) torus knot on the unit 3-sphere |u|^2 + |w|^2 = 1 in C^2.

Two radii are supported. The clifford variant puts the curve on the torus
|u| = |w| = 1/sqrt(2); the equation-locus variant puts it on the locus
u^q = w^p itself, which forces |u| = r and |w| = r^(q/p) with
r^2 + r^(2q/p) = 1.
"""

from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Any, Dict, Tuple

import numpy as np
from scipy.optimize import bisect
from scipy.spatial.distance import pdist

from core.config import settings
from core.errors import KnotConfigError
from core.utils.log import get_logger

logger = get_logger("KNOT")

MIN_SAMPLES = 8


class KnotVariant(str, Enum):
    CLIFFORD = "clifford"
    EQUATION_LOCUS = "equation-locus"


def _variant(value) -> KnotVariant:
    try:
        return KnotVariant(value)
    except ValueError as e:
        raise KnotConfigError(
            f"unknown variant {value!r}; expected one of {[v.value for v in KnotVariant]}") from e


def minimum_samples(q: int) -> int:
    """Below this the per-step phase change of w can reach pi."""
    return max(MIN_SAMPLES, 2 * q + 1)


@dataclass(frozen=True)
class KnotCurveConfig:
    variant: KnotVariant = field(default_factory=lambda: _variant(settings.knot_variant))
    samples: int = field(default_factory=lambda: settings.knot_samples)
    p: int = 2
    q: int = 3

    def __post_init__(self):
        object.__setattr__(self, "variant", _variant(self.variant))
        if self.p < 1 or self.q < 1:
            raise KnotConfigError(f"exponents must be positive, got ({self.p}, {self.q})")
        if self.samples < minimum_samples(self.q):
            raise KnotConfigError(
                f"{self.samples} samples is too few for q = {self.q}; need at least {minimum_samples(self.q)}")


@dataclass(frozen=True)
class TorusKnotSample:
    t: float
    u: complex
    w: complex

    def sphere_error(self) -> float:
        return abs(abs(self.u) ** 2 + abs(self.w) ** 2 - 1.0)


@lru_cache(maxsize=None)
def equation_locus_radius(p: int = 2, q: int = 3) -> float:
    """Root in (0, 1) of r^2 + r^(2q/p) = 1; about 0.7548776662 for the trefoil."""
    return bisect(lambda r: r ** 2 + r ** (2 * q / p) - 1.0, 0.0, 1.0, xtol=settings.bisection_xtol)


def radii(variant: KnotVariant, p: int = 2, q: int = 3) -> Tuple[float, float]:
    if _variant(variant) is KnotVariant.CLIFFORD:
        return 1 / np.sqrt(2), 1 / np.sqrt(2)
    r = equation_locus_radius(p, q)
    return r, r ** (q / p)


def torus_knot_point(t: float, variant=KnotVariant.EQUATION_LOCUS, p: int = 2, q: int = 3) -> TorusKnotSample:
    if not 0.0 <= t < 1.0:
        raise KnotConfigError(f"t must lie in [0, 1), got {t}")
    a, b = radii(variant, p, q)
    u = a * np.exp(2j * np.pi * p * t)
    w = b * np.exp(2j * np.pi * q * t)
    return TorusKnotSample(float(t), complex(u), complex(w))


def sample_curve(config: KnotCurveConfig) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(t, u, w) at t = k / samples, k = 0 .. samples-1."""
    t = np.arange(config.samples) / config.samples
    a, b = radii(config.variant, config.p, config.q)
    u = a * np.exp(2j * np.pi * config.p * t)
    w = b * np.exp(2j * np.pi * config.q * t)
    return t, u, w


def _winding(z: np.ndarray) -> int:
    # principal-value increments around the closed curve, last sample back to the first
    steps = np.angle(np.roll(z, -1) / z)
    return int(round(float(np.sum(steps)) / (2 * np.pi)))


def winding_of(u: np.ndarray, w: np.ndarray) -> Tuple[int, int]:
    return _winding(np.asarray(u)), _winding(np.asarray(w))


def winding_numbers(config: KnotCurveConfig) -> Tuple[int, int]:
    _, u, w = sample_curve(config)
    return winding_of(u, w)


def max_equation_residual(config: KnotCurveConfig) -> float:
    """max |u^q - w^p| over the samples; only meaningful on the equation locus."""
    if config.variant is not KnotVariant.EQUATION_LOCUS:
        raise KnotConfigError(
            f"u^{config.q} = w^{config.p} only holds on the equation-locus variant, not {config.variant.value}")
    _, u, w = sample_curve(config)
    return float(np.max(np.abs(u ** config.q - w ** config.p)))


def sphere_residual(config: KnotCurveConfig) -> float:
    _, u, w = sample_curve(config)
    return float(np.max(np.abs(np.abs(u) ** 2 + np.abs(w) ** 2 - 1.0)))


def torus_residual(config: KnotCurveConfig) -> float:
    """max ||u| - |w||; zero on the clifford torus."""
    _, u, w = sample_curve(config)
    return float(np.max(np.abs(np.abs(u) - np.abs(w))))


def min_pairwise_distance(config: KnotCurveConfig) -> float:
    """Smallest distance in R^4 between two distinct samples."""
    _, u, w = sample_curve(config)
    points = np.column_stack([u.real, u.imag, w.real, w.imag])
    return float(np.min(pdist(points)))


def knot_report(config: KnotCurveConfig) -> Dict[str, Any]:
    winding = winding_numbers(config)
    sphere = sphere_residual(config)
    distance = min_pairwise_distance(config)
    residual = max_equation_residual(config) if config.variant is KnotVariant.EQUATION_LOCUS else None

    checks = {
        "winding": winding == (config.p, config.q),
        "sphere": sphere <= settings.construction_tolerance,
        "injective": distance > 0.0,
    }
    if residual is not None:
        checks["equation"] = residual <= settings.residual_tolerance
    else:
        checks["clifford_torus"] = torus_residual(config) <= settings.construction_tolerance

    report = {
        "variant": config.variant.value,
        "samples": config.samples,
        "exponents": [config.p, config.q],
        "radii": list(radii(config.variant, config.p, config.q)),
        "winding": list(winding),
        "max_residual": residual,
        "sphere_residual": sphere,
        "min_pairwise_distance": distance,
        "checks": checks,
        "ok": all(checks.values()),
    }
    logger.info("%s curve, %d samples: winding %s, ok=%s",
                config.variant.value, config.samples, winding, report["ok"])
    return report
