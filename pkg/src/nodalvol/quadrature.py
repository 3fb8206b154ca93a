"""Deterministic quadrature rules for the model manifolds.

Weights always include the Riemannian volume element, so integrating the
constant 1 returns vol(M): 1 for tori and boxes, 4*pi for the sphere.

Node ordering is canonical and documented per rule (row-major over the
tensor grid); every reduction over nodes uses compensated summation in
that order, which makes integrals bitwise reproducible regardless of the
worker-thread count used to *evaluate* integrands.

Tori and box interiors use midpoint tensor grids at half-offsets
(i + 1/2)/N so symmetric test fields (sin, cos) do not put nodes exactly
on their zero set.  The sphere uses Gauss-Legendre nodes in u = cos(theta)
(so no node ever sits at a pole) tensored with a uniform half-offset
phi grid.
"""

import math
from dataclasses import dataclass

import numpy as np
from numpy.polynomial.legendre import leggauss

from .errors import ConfigError

__all__ = [
    "QuadratureRule",
    "FaceRule",
    "torus_rule",
    "sphere_rule",
    "box_rule",
    "box_face_rules",
    "integrate",
    "comp_sum",
]

# Fixed chunk length for the compensated reduction; independent of thread
# count by construction.
_CHUNK = 1 << 16


@dataclass(frozen=True)
class QuadratureRule:
    nodes: np.ndarray    # (m, dim), canonical row-major order
    weights: np.ndarray  # (m,), includes sqrt(det g)
    label: str
    manifold_name: str
    resolution: tuple


@dataclass(frozen=True)
class FaceRule:
    """Quadrature on one boundary face of a box, with its outward normal."""

    face: str            # e.g. "x0=0"
    normal: np.ndarray   # (dim,), constant outward unit normal
    rule: QuadratureRule


def _tensor_midpoint(dim: int, n: int) -> np.ndarray:
    axis = (np.arange(n) + 0.5) / n
    grids = np.meshgrid(*([axis] * dim), indexing="ij")
    return np.stack([g.ravel() for g in grids], axis=-1)


def torus_rule(dim: int, n: int) -> QuadratureRule:
    """Uniform midpoint tensor grid on the flat torus, weight n^-dim per node."""
    if not 1 <= dim <= 3:
        raise ConfigError(f"torus dimension must be 1..3, got {dim}")
    if n < 8:
        raise ConfigError(f"torus rule needs N >= 8, got {n}")
    nodes = _tensor_midpoint(dim, n)
    weights = np.full(len(nodes), float(n) ** (-dim))
    return QuadratureRule(nodes, weights, f"torus{dim}-uniform-{n}", f"torus{dim}", (n,) * dim)


def sphere_rule(n_theta: int, n_phi: int) -> QuadratureRule:
    """Gauss-Legendre in u = cos(theta) times uniform phi on the unit sphere.

    The Gauss weights integrate du = sin(theta) d(theta), so sqrt(det g) is
    already folded in.  Node order: u ascending (theta descending), phi
    ascending within each theta row.
    """
    if n_theta < 8 or n_phi < 16:
        raise ConfigError(f"sphere rule needs N_theta >= 8 and N_phi >= 16, got {n_theta}x{n_phi}")
    u, wu = leggauss(n_theta)
    theta = np.arccos(u)
    phi = (np.arange(n_phi) + 0.5) * (2.0 * np.pi / n_phi)
    nodes = np.empty((n_theta * n_phi, 2))
    nodes[:, 0] = np.repeat(theta, n_phi)
    nodes[:, 1] = np.tile(phi, n_theta)
    weights = np.repeat(wu, n_phi) * (2.0 * np.pi / n_phi)
    return QuadratureRule(nodes, weights, f"sphere2-gauss-{n_theta}x{n_phi}", "sphere2",
                          (n_theta, n_phi))


def box_rule(dim: int, n: int) -> QuadratureRule:
    """Midpoint tensor rule on the interior of the box [0,1]^dim."""
    if not 1 <= dim <= 2:
        raise ConfigError(f"box dimension must be 1..2, got {dim}")
    if n < 8:
        raise ConfigError(f"box rule needs N >= 8, got {n}")
    nodes = _tensor_midpoint(dim, n)
    weights = np.full(len(nodes), float(n) ** (-dim))
    return QuadratureRule(nodes, weights, f"box{dim}-midpoint-{n}", f"box{dim}", (n,) * dim)


def box_face_rules(dim: int, n: int) -> list:
    """Midpoint rules on all 2*dim faces of [0,1]^dim with outward normals.

    In dimension 1 the faces are the endpoints: a single node of weight 1.
    """
    if not 1 <= dim <= 2:
        raise ConfigError(f"box dimension must be 1..2, got {dim}")
    if n < 8:
        raise ConfigError(f"box face rules need N >= 8, got {n}")
    faces = []
    for axis in range(dim):
        for side in (0.0, 1.0):
            normal = np.zeros(dim)
            normal[axis] = -1.0 if side == 0.0 else 1.0
            if dim == 1:
                nodes = np.array([[side]])
                weights = np.array([1.0])
            else:
                t = (np.arange(n) + 0.5) / n
                nodes = np.empty((n, 2))
                nodes[:, axis] = side
                nodes[:, 1 - axis] = t
                weights = np.full(n, 1.0 / n)
            face = f"x{axis}={int(side)}"
            rule = QuadratureRule(nodes, weights, f"box{dim}-face-{face}-{n}",
                                  f"box{dim}", (n,))
            faces.append(FaceRule(face, normal, rule))
    return faces


def comp_sum(values) -> float:
    """Compensated sum in canonical order.

    Fixed-size chunks are summed exactly (math.fsum) and the chunk totals are
    combined with Neumaier compensation in chunk order, so the result does not
    depend on how the *evaluation* of values was parallelized.
    """
    x = np.ascontiguousarray(values, dtype=float)
    total = 0.0
    comp = 0.0
    for start in range(0, x.size, _CHUNK):
        s = math.fsum(x[start:start + _CHUNK])
        t = total + s
        if abs(total) >= abs(s):
            comp += (total - t) + s
        else:
            comp += (s - t) + total
        total = t
    return total + comp


def integrate(values, rule: QuadratureRule) -> float:
    """Compensated dot product of per-node values with the rule's weights."""
    vals = np.asarray(values, dtype=float)
    if vals.shape != rule.weights.shape:
        raise ConfigError(f"got {vals.shape} values for {rule.weights.shape} nodes")
    return comp_sum(vals * rule.weights)
