"""Chart arithmetic for the projective representation space.

Directions are stored in the affine chart spanned by the simple roots
(coordinate sum 1); directions of height zero live on the hyperplane at
infinity and carry a sign-canonicalized unit vector instead.
"""

import enum
import math
from dataclasses import dataclass

import numpy as np

HEIGHT_TOL = 1e-12
ISO_TOL = 1e-9


class Causal(enum.Enum):
    SPACE_LIKE = "space-like"
    TIME_LIKE = "time-like"
    LIGHT_LIKE = "light-like"


@dataclass(frozen=True)
class ProjectivePoint:
    """A direction in projective space, in chart coordinates.

    ``coords`` sum to 1 for affine points; for at-infinity points they sum to
    0, have unit Euclidean norm, and the first nonzero coordinate is positive.
    ``bnorm`` caches B(x, x) of the chart representative.
    """

    coords: np.ndarray
    at_infinity: bool
    bnorm: float

    def __repr__(self):
        tag = "inf" if self.at_infinity else "aff"
        vals = ", ".join(f"{v:.6f}" for v in self.coords)
        return f"ProjectivePoint[{tag}]({vals})"


def to_chart(sys, v, height_tol=HEIGHT_TOL):
    """Chart point of a nonzero vector: v/h(v), or an at-infinity direction."""
    v = np.asarray(v, dtype=float)
    norm = np.linalg.norm(v)
    if norm == 0:
        raise ValueError("cannot project the zero vector")
    h = float(np.sum(v))
    if abs(h) > height_tol * norm:
        coords = v / h
    else:
        coords = v / norm
        coords = coords - np.sum(coords) / len(coords)  # snap onto the h=0 plane
        coords /= np.linalg.norm(coords)
        lead = coords[np.nonzero(np.abs(coords) > 1e-12)[0][0]]
        if lead < 0:
            coords = -coords
    bnorm = float(coords @ sys.form @ coords)
    coords.setflags(write=False)
    return ProjectivePoint(coords=coords, at_infinity=abs(h) <= height_tol * norm, bnorm=bnorm)


def chart_distance(p, q):
    """Euclidean distance in the affine chart; infinite across the chart boundary."""
    if p.at_infinity or q.at_infinity:
        if p.at_infinity and q.at_infinity:
            return float(np.linalg.norm(p.coords - q.coords))
        return math.inf
    return float(np.linalg.norm(p.coords - q.coords))


def causal_character(sys, v, iso_tol=ISO_TOL):
    """Sign of B(v, v) with a zero band relative to the squared vector norm."""
    v = np.asarray(v, dtype=float)
    norm2 = float(v @ v)
    if norm2 == 0:
        raise ValueError("causal character of the zero vector is undefined")
    b = float(v @ sys.form @ v)
    if abs(b) <= iso_tol * norm2:
        return Causal.LIGHT_LIKE
    return Causal.SPACE_LIKE if b > 0 else Causal.TIME_LIKE


def timelike_center(sys):
    """A time-like chart point (eigendirection of the negative eigenvalue of B)."""
    sys.require_lorentzian("finding a time-like center")
    evals, evecs = np.linalg.eigh(sys.form)
    v = evecs[:, np.argmin(evals)]
    if np.sum(v) < 0:
        v = -v
    return to_chart(sys, v)


@dataclass(frozen=True)
class ConicSection:
    """Discretized light cone restricted to the height-1 slice.

    ``vertices`` is an (m, n) array of chart points, each satisfying
    |B(x, x)| < 1e-6.  ``center`` is the time-like chart point the rays were
    shot from; ``resolution`` the requested number of directions.
    """

    vertices: np.ndarray
    center: np.ndarray
    resolution: int


def _chart_plane_basis(n):
    """Euclidean-orthonormal basis of the sum-zero subspace."""
    basis = []
    for k in range(1, n):
        v = np.zeros(n)
        v[:k] = 1.0
        v[k] = -k
        basis.append(v / np.linalg.norm(v))
    return np.array(basis)


def light_conic(sys, resolution=256):
    """Zero set of B on the affine chart, for rank 3 (curve) or 4 (mesh).

    From a time-like center c, shoot rays along chart-plane directions d and
    solve B(c + t d, c + t d) = 0 for the positive root t.
    """
    n = sys.rank
    if n not in (3, 4):
        raise ValueError(f"light conic plotting supports rank 3 or 4, not {n}")
    sys.require_lorentzian("the light conic")
    c = timelike_center(sys).coords
    plane = _chart_plane_basis(n)
    if n == 3:
        theta = np.linspace(0.0, 2 * math.pi, resolution, endpoint=False)
        dirs = np.outer(np.cos(theta), plane[0]) + np.outer(np.sin(theta), plane[1])
    else:
        # Latitude/longitude sampling of directions in the 3-dim chart plane.
        m = max(4, int(math.sqrt(resolution)))
        phi = np.linspace(0.0, math.pi, m)
        theta = np.linspace(0.0, 2 * math.pi, 2 * m, endpoint=False)
        pp, tt = np.meshgrid(phi, theta)
        u = np.stack(
            [np.sin(pp) * np.cos(tt), np.sin(pp) * np.sin(tt), np.cos(pp)], axis=-1
        ).reshape(-1, 3)
        dirs = u @ plane
    B = sys.form
    cc = float(c @ B @ c)
    verts = []
    for d in dirs:
        dd = float(d @ B @ d)
        cd = float(c @ B @ d)
        if dd <= 0:
            continue  # ray stays inside the cone; conic unbounded this way
        disc = cd * cd - dd * cc
        t = (-cd + math.sqrt(disc)) / dd
        x = c + t * d
        verts.append(x / np.sum(x))
    vertices = np.array(verts)
    vertices.setflags(write=False)
    return ConicSection(vertices=vertices, center=c, resolution=resolution)
