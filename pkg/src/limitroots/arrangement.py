"""Positive roots by depth, weights, and the projective arrangement.

Reflecting hyperplanes of positive roots cut projective space into cells;
pairs of roots whose pairing drops below -1 intersect the light cone
transversally, and their codimension-2 intersection is a space-like limit
direction (it equals the unimodular subspace of the product of the two
reflections).
"""

import enum
from dataclasses import dataclass

import numpy as np
from scipy.linalg import null_space, subspace_angles

from .errors import ExtractionError
from .graphs import word_to_str
from .projective import ProjectivePoint, to_chart
from .spectral import Kind, classify, unimodular_subspace

ROOT_DEDUP = 1e-9
PAIRING_TOL = 1e-9


@dataclass(frozen=True)
class Root:
    """A positive root: coefficient vector over the simple roots, its BFS
    depth, and a minimal word (prefix, base) with vector = prefix(alpha_base)."""

    vector: np.ndarray
    depth: int
    word: tuple
    base: int

    def word_str(self):
        return word_to_str(self.word + (self.base,))


@dataclass(frozen=True)
class Weight:
    vector: np.ndarray
    index: int


class IntersectionKind(enum.Enum):
    SPACE_LIKE = "space-like"
    LIGHT_LIKE = "light-like"
    TIME_LIKE = "time-like"


@dataclass(frozen=True)
class Codim2Intersection:
    pair: tuple
    basis: np.ndarray
    kind: IntersectionKind
    pairing: float

    def chart_point(self, sys):
        """For rank 3 the intersection is a single projective point."""
        if self.basis.shape[1] != 1:
            raise ValueError("chart_point applies to 1-dimensional intersections only")
        return to_chart(sys, self.basis[:, 0])


def roots_by_depth(sys, max_depth):
    """All positive roots of depth <= max_depth by BFS from the simple roots.

    Depth is the first-discovery BFS level, matching the minimal number of
    reflections needed to reach the root from a simple root, plus one.
    """
    if max_depth < 1:
        raise ValueError("max_depth must be >= 1")
    n = sys.rank
    roots = []
    index = {}

    def key(vec):
        return np.round(vec / ROOT_DEDUP).astype(np.int64).tobytes()

    for s in range(n):
        vec = np.eye(n)[s]
        vec.setflags(write=False)
        index[key(vec)] = len(roots)
        roots.append(Root(vector=vec, depth=1, word=(), base=s))
    frontier = list(roots)
    for depth in range(2, max_depth + 1):
        next_frontier = []
        for root in frontier:
            for s in range(n):
                vec = sys.gens[s] @ root.vector
                if np.min(vec) < -1e-9:
                    continue  # left the positive cone; image is a negative root
                k = key(vec)
                if k in index:
                    continue
                vec.setflags(write=False)
                new = Root(vector=vec, depth=depth, word=(s,) + root.word, base=root.base)
                index[k] = len(roots)
                roots.append(new)
                next_frontier.append(new)
        frontier = next_frontier
        if not frontier:
            break
    return roots


def fundamental_weights(sys):
    """Dual-basis vectors: columns of the inverse of the form matrix."""
    if abs(np.linalg.det(sys.form)) < 1e-12:
        raise ValueError("fundamental weights need a nonsingular form")
    inv = np.linalg.inv(sys.form)
    out = []
    for s in range(sys.rank):
        vec = inv[:, s].copy()
        vec.setflags(write=False)
        out.append(Weight(vector=vec, index=s))
    return out


def _intersection_basis(sys, v1, v2):
    basis = null_space(np.vstack([sys.form @ v1, sys.form @ v2]))
    if basis.shape[1] != sys.rank - 2:
        raise ExtractionError(
            f"codimension-2 intersection has dimension {basis.shape[1]}"
        )
    return basis


def codim2_spacelike(sys, roots, tol=PAIRING_TOL, include_all=False):
    """Codimension-2 intersections over root pairs.

    Pairs with pairing < -1 - tol are space-like (products of the two
    reflections are hyperbolic); pairs with pairing = -1 within tol are
    flagged light-like (parabolic tangency).  Other pairs are omitted unless
    ``include_all`` asks for diagnostics.
    """
    out = []
    for i in range(len(roots)):
        for j in range(i + 1, len(roots)):
            r1, r2 = roots[i], roots[j]
            pairing = float(r1.vector @ sys.form @ r2.vector)
            if pairing < -1.0 - tol:
                kind = IntersectionKind.SPACE_LIKE
            elif abs(pairing + 1.0) <= tol:
                kind = IntersectionKind.LIGHT_LIKE
            elif include_all:
                kind = IntersectionKind.TIME_LIKE
            else:
                continue
            basis = _intersection_basis(sys, r1.vector, r2.vector)
            if kind is IntersectionKind.SPACE_LIKE:
                gram = basis.T @ sys.form @ basis
                if np.min(np.linalg.eigvalsh(gram)) <= 0:
                    raise ExtractionError(
                        f"restricted form not positive-definite for pair "
                        f"({r1.word_str()}, {r2.word_str()})"
                    )
            out.append(
                Codim2Intersection(pair=(r1, r2), basis=basis, kind=kind, pairing=pairing)
            )
    return out


def intersection_equals_unimodular(sys, ci, angle_tol=1e-7):
    """Check that the intersection equals the unimodular subspace of the
    product of the two reflections (principal angle below tolerance)."""
    if ci.kind is not IntersectionKind.SPACE_LIKE:
        raise ValueError("intersection_equals_unimodular requires a space-like pair")
    r1, r2 = ci.pair
    w = sys.reflection_in(r1.vector) @ sys.reflection_in(r2.vector)
    sc = classify(sys, w)
    if sc.kind is not Kind.HYPERBOLIC:
        return False
    angles = subspace_angles(ci.basis, unimodular_subspace(sys, sc))
    return bool(np.max(angles) < angle_tol)


def sign_vector(sys, point, roots, zero_tol=PAIRING_TOL):
    """Sign of B(x, gamma) for each root, as a string over +, -, 0."""
    x = point.coords if isinstance(point, ProjectivePoint) else np.asarray(point, float)
    signs = []
    for root in roots:
        b = float(x @ sys.form @ root.vector)
        if abs(b) <= zero_tol:
            signs.append("0")
        else:
            signs.append("+" if b > 0 else "-")
    return "".join(signs)


@dataclass(frozen=True)
class DescentResult:
    word: tuple
    point: ProjectivePoint
    in_tits_cone: bool  # False means inconclusive, not a proof of absence


def descend_to_fundamental(sys, point, max_steps):
    """Greedy descent toward the fundamental chamber.

    In root coordinates the chamber whose chart image contains the simplex
    interior is {x : B(x, alpha_s) <= 0 for all s} (the simplex center pairs
    negatively with every simple root), so a positive pairing marks a wall
    separating the point from the chamber.  The corresponding reflection is
    applied until all pairings are nonpositive (Tits-cone membership
    certified) or the step budget runs out (inconclusive).
    """
    if max_steps < 1:
        raise ValueError("max_steps must be >= 1")
    x = np.array(
        point.coords if isinstance(point, ProjectivePoint) else point, dtype=float
    )
    word = []
    for _ in range(max_steps):
        pairings = sys.form @ x
        scale = max(1.0, float(np.max(np.abs(x))))
        separating = np.nonzero(pairings > 1e-9 * scale)[0]
        if separating.size == 0:
            return DescentResult(word=tuple(word), point=to_chart(sys, x), in_tits_cone=True)
        s = int(separating[0])
        x = sys.gens[s] @ x
        word.append(s)
    return DescentResult(word=tuple(word), point=to_chart(sys, x), in_tits_cone=False)
