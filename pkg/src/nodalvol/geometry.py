"""Model manifolds: charts, metrics, Christoffel symbols, Ricci curvature.

Three hard-coded families, all with closed-form tensor data:

* flat torus T^n = [0,1)^n, n = 1..3, periodic, identity metric;
* the unit round 2-sphere in the (theta, phi) chart, theta in (0, pi),
  phi in [0, 2*pi), metric diag(1, sin^2 theta); the only nonzero
  Christoffel symbols are Gamma^theta_{phi phi} = -sin(theta)cos(theta)
  and Gamma^phi_{theta phi} = Gamma^phi_{phi theta} = cot(theta);
  Ricci equals the metric (unit radius);
* the flat box [0,1]^n, n = 1..2, identity metric, boundary faces
  {x_i = 0} and {x_i = 1}.

All operations are pure and accept either a single chart point of shape
(dim,) or a batch of shape (m, dim); outputs carry the matching leading
shape.
"""

from dataclasses import dataclass

import numpy as np

from .errors import ConfigError, DomainError

__all__ = [
    "Manifold",
    "MetricAtPoint",
    "ChristoffelAtPoint",
    "RicciAtPoint",
    "MANIFOLD_NAMES",
    "manifold",
    "flat_torus",
    "unit_sphere2",
    "flat_box",
    "metric_at",
    "christoffel_at",
    "ricci_at",
    "raise_index",
]


@dataclass(frozen=True)
class Manifold:
    """One of the model manifolds, identified by kind and chart dimension."""

    kind: str  # "torus", "sphere" or "box"
    dim: int

    @property
    def name(self) -> str:
        return f"{self.kind}{self.dim}"

    @property
    def is_flat(self) -> bool:
        return self.kind != "sphere"

    @property
    def has_boundary(self) -> bool:
        return self.kind == "box"

    @property
    def volume(self) -> float:
        return 4.0 * np.pi if self.kind == "sphere" else 1.0


def flat_torus(dim: int) -> Manifold:
    if not 1 <= dim <= 3:
        raise ConfigError(f"torus dimension must be 1..3, got {dim}")
    return Manifold("torus", dim)


def unit_sphere2() -> Manifold:
    return Manifold("sphere", 2)


def flat_box(dim: int) -> Manifold:
    if not 1 <= dim <= 2:
        raise ConfigError(f"box dimension must be 1..2, got {dim}")
    return Manifold("box", dim)


MANIFOLD_NAMES = ("torus1", "torus2", "torus3", "sphere2", "box1", "box2")


def manifold(name: str) -> Manifold:
    """Look up a manifold by its CLI/config name, e.g. "torus2" or "sphere2"."""
    if name == "sphere2":
        return unit_sphere2()
    if name.startswith("torus") and name[5:] in ("1", "2", "3"):
        return flat_torus(int(name[5:]))
    if name.startswith("box") and name[3:] in ("1", "2"):
        return flat_box(int(name[3:]))
    raise ConfigError(f"unknown manifold {name!r}; expected one of {MANIFOLD_NAMES}")


@dataclass(frozen=True)
class MetricAtPoint:
    """Metric tensor g, its inverse and sqrt(det g) at one or many points."""

    g: np.ndarray        # (..., n, n)
    g_inv: np.ndarray    # (..., n, n)
    sqrt_det: np.ndarray  # (...,)


@dataclass(frozen=True)
class ChristoffelAtPoint:
    """Christoffel symbols Gamma^k_{ij}, indexed gamma[..., k, i, j]."""

    gamma: np.ndarray  # (..., n, n, n)


@dataclass(frozen=True)
class RicciAtPoint:
    """Ricci tensor with lower indices."""

    ric: np.ndarray  # (..., n, n)


def _as_batch(m: Manifold, p):
    pts = np.asarray(p, dtype=float)
    if pts.ndim == 1:
        return pts[None, :], True
    if pts.ndim != 2:
        raise ConfigError(f"points must have shape (dim,) or (m, dim), got {pts.shape}")
    return pts, False


def check_chart(m: Manifold, p) -> np.ndarray:
    """Validate chart membership; returns the points as a (m, dim) batch."""
    pts, _ = _as_batch(m, p)
    if pts.shape[1] != m.dim:
        raise ConfigError(f"{m.name} expects {m.dim}-dimensional points, got {pts.shape[1]}")
    if m.kind == "torus":
        if np.any(pts < 0.0) or np.any(pts >= 1.0):
            raise DomainError(f"torus chart point outside [0,1)^{m.dim}")
    elif m.kind == "box":
        if np.any(pts < 0.0) or np.any(pts > 1.0):
            raise DomainError(f"box chart point outside [0,1]^{m.dim}")
    else:
        theta, phi = pts[:, 0], pts[:, 1]
        if np.any(theta <= 0.0) or np.any(theta >= np.pi):
            raise DomainError("sphere chart requires theta in (0, pi)")
        if np.any(phi < 0.0) or np.any(phi >= 2.0 * np.pi):
            raise DomainError("sphere chart requires phi in [0, 2*pi)")
    return pts


def _maybe_single(arr: np.ndarray, single: bool) -> np.ndarray:
    return arr[0] if single else arr


def metric_at(m: Manifold, p) -> MetricAtPoint:
    """Closed-form metric data at chart point(s) p."""
    pts, single = _as_batch(m, p)
    check_chart(m, pts)
    npts, n = pts.shape
    if m.is_flat:
        eye = np.eye(n)
        g = np.broadcast_to(eye, (npts, n, n))
        sq = np.broadcast_to(np.float64(1.0), (npts,))
        return MetricAtPoint(_maybe_single(g, single), _maybe_single(g, single),
                             _maybe_single(sq, single))
    sin_t = np.sin(pts[:, 0])
    g = np.zeros((npts, 2, 2))
    g_inv = np.zeros((npts, 2, 2))
    g[:, 0, 0] = 1.0
    g[:, 1, 1] = sin_t * sin_t
    g_inv[:, 0, 0] = 1.0
    g_inv[:, 1, 1] = 1.0 / (sin_t * sin_t)
    return MetricAtPoint(_maybe_single(g, single), _maybe_single(g_inv, single),
                         _maybe_single(sin_t, single))


def christoffel_at(m: Manifold, p) -> ChristoffelAtPoint:
    """Closed-form Christoffel symbols at chart point(s) p."""
    pts, single = _as_batch(m, p)
    check_chart(m, pts)
    npts, n = pts.shape
    if m.is_flat:
        gamma = np.broadcast_to(np.zeros((n, n, n)), (npts, n, n, n))
        return ChristoffelAtPoint(_maybe_single(gamma, single))
    theta = pts[:, 0]
    sin_t, cos_t = np.sin(theta), np.cos(theta)
    gamma = np.zeros((npts, 2, 2, 2))
    gamma[:, 0, 1, 1] = -sin_t * cos_t          # Gamma^theta_{phi phi}
    gamma[:, 1, 0, 1] = cos_t / sin_t           # Gamma^phi_{theta phi}
    gamma[:, 1, 1, 0] = gamma[:, 1, 0, 1]
    return ChristoffelAtPoint(_maybe_single(gamma, single))


def ricci_at(m: Manifold, p) -> RicciAtPoint:
    """Closed-form Ricci tensor at chart point(s) p (equals g on the unit sphere)."""
    pts, single = _as_batch(m, p)
    check_chart(m, pts)
    npts, n = pts.shape
    if m.is_flat:
        ric = np.broadcast_to(np.zeros((n, n)), (npts, n, n))
        return RicciAtPoint(_maybe_single(ric, single))
    return RicciAtPoint(metric_at(m, p).g)


def raise_index(metric: MetricAtPoint, covector) -> np.ndarray:
    """Apply the musical isomorphism: g_inv . covector."""
    cov = np.asarray(covector, dtype=float)
    if metric.g_inv.ndim == 2:
        return metric.g_inv @ cov
    return np.einsum("mij,mj->mi", metric.g_inv, cov)
