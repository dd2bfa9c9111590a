"""Geometric representation: bilinear form, signature, simple reflection matrices."""

import math
from dataclasses import dataclass

import numpy as np

from .errors import GraphError, NotLorentzianError
from .graphs import INF, CoxeterGraph

# Relative zero band for eigenvalues when counting the signature.
SIGNATURE_ZERO_TOL = 1e-9


def build_form(graph: CoxeterGraph) -> np.ndarray:
    """Symmetric matrix of the bilinear form: 1 on the diagonal,
    -cos(pi/m) for finite labels, -c for infinite labels."""
    n = graph.rank
    B = np.eye(n)
    for i in range(n):
        for j in range(i + 1, n):
            m = graph.label(i, j)
            if m is INF:
                v = -graph.cparam(i, j)
            else:
                v = -math.cos(math.pi / m)
            B[i, j] = B[j, i] = v
    return B


def signature(B, zero_tol=SIGNATURE_ZERO_TOL):
    """Counts (n_plus, n_minus, n_zero) of eigenvalues of a symmetric matrix.

    The zero band is ``zero_tol`` relative to the largest eigenvalue magnitude.
    Raises if the answer changes when the band is shrunk tenfold (borderline).
    """
    B = np.asarray(B, dtype=float)
    if not np.allclose(B, B.T, atol=1e-12):
        raise ValueError("signature requires a symmetric matrix")
    evals = np.linalg.eigvalsh(B)
    scale = max(np.max(np.abs(evals)), 1e-300)

    def count(tol):
        tau = tol * scale
        return (
            int(np.sum(evals > tau)),
            int(np.sum(evals < -tau)),
            int(np.sum(np.abs(evals) <= tau)),
        )

    sig = count(zero_tol)
    if sig != count(zero_tol / 10):
        raise ValueError(f"borderline signature: eigenvalues {evals} near zero band")
    return sig


def generator_matrix(B, s):
    """Matrix of the reflection in the simple root alpha_s: column t is
    alpha_t - 2 B(alpha_t, alpha_s) alpha_s."""
    n = B.shape[0]
    M = np.eye(n)
    M[s, :] -= 2.0 * B[s, :]
    return M


def system_type(B):
    """'finite', 'affine', 'lorentzian' or 'other' from the signature of B."""
    n = B.shape[0]
    n_plus, n_minus, n_zero = signature(B)
    if (n_plus, n_minus, n_zero) == (n, 0, 0):
        return "finite"
    if n_minus == 0:
        return "affine"
    if (n_plus, n_minus, n_zero) == (n - 1, 1, 0):
        return "lorentzian"
    return "other"


@dataclass(frozen=True)
class GeometricSystem:
    """A Coxeter graph together with its bilinear form and reflection matrices.

    Immutable; matrices are stored with writeable=False so instances can be
    shared freely across threads.
    """

    graph: CoxeterGraph
    form: np.ndarray
    signature: tuple
    gens: tuple

    @classmethod
    def from_graph(cls, graph: CoxeterGraph):
        B = build_form(graph)
        sig = signature(B)
        gens = tuple(generator_matrix(B, s) for s in range(graph.rank))
        B.setflags(write=False)
        for g in gens:
            g.setflags(write=False)
        return cls(graph=graph, form=B, signature=sig, gens=gens)

    @property
    def rank(self):
        return self.graph.rank

    @property
    def is_lorentzian(self):
        n = self.rank
        return self.signature == (n - 1, 1, 0)

    @property
    def simple_roots(self):
        return np.eye(self.rank)

    def bilinear(self, x, y):
        """B(x, y); accepts stacked rows in either argument."""
        return np.asarray(x) @ self.form @ np.asarray(y)

    def require_lorentzian(self, what="this operation"):
        if not self.is_lorentzian:
            raise NotLorentzianError(
                f"{what} requires a Lorentzian system; signature is {self.signature}"
            )

    def reflection_in(self, root):
        """Matrix of the reflection in an arbitrary non-isotropic vector."""
        root = np.asarray(root, dtype=float)
        norm = float(root @ self.form @ root)
        if abs(norm) < 1e-12:
            raise ValueError("cannot reflect in an isotropic vector")
        return np.eye(self.rank) - (2.0 / norm) * np.outer(root, self.form @ root)


def make_system(graph_or_name):
    """Convenience constructor from a CoxeterGraph, builtin name, or file path."""
    from .graphs import load_graph

    if isinstance(graph_or_name, CoxeterGraph):
        return GeometricSystem.from_graph(graph_or_name)
    if isinstance(graph_or_name, str):
        return GeometricSystem.from_graph(load_graph(graph_or_name))
    raise GraphError(f"cannot build a system from {graph_or_name!r}")
