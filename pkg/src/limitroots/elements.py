"""Group elements as matrices, reduced words, and breadth-first enumeration."""

from dataclasses import dataclass

import numpy as np

from .errors import EnumerationError
from .graphs import word_to_str

# Dedup fingerprint grid and the entrywise tolerance used to confirm that two
# matrices with equal fingerprints really are the same element.
FINGERPRINT_GRID = 1e-7
MATCH_TOL = 1e-9
MAX_ENTRY = 1e12


@dataclass(frozen=True)
class GroupElement:
    """A group element: canonical reduced word plus its representation matrix."""

    word: tuple
    matrix: np.ndarray

    @property
    def length(self):
        return len(self.word)

    def __repr__(self):
        return f"GroupElement({word_to_str(self.word)!r})"


def _root_is_negative(v, tol=1e-9):
    """A root vector is negative when all coordinates are <= 0 (up to tolerance)."""
    scale = max(1.0, float(np.max(np.abs(v))))
    return np.max(v) <= tol * scale and np.min(v) < -tol * scale


def matrix_inverse(sys, M):
    """Inverse of a B-isometry via M^-1 = B^-1 M^T B."""
    return np.linalg.solve(sys.form, M.T @ sys.form)


def reduced_word(sys, M, max_length=100000):
    """Lexicographically minimal reduced word of the element with matrix M.

    Repeatedly strips the smallest left descent s (detected by M^-1 sending
    alpha_s to a negative root).  Since all reduced words share the same
    length, lex-minimal equals ShortLex-minimal.
    """
    n = sys.rank
    cur = np.array(M, dtype=float)
    curinv = matrix_inverse(sys, cur)
    word = []
    # Roundoff inherited from the input persists through the descent at the
    # input's absolute scale, so the sign and identity tests must widen with it.
    tol = min(1e-2, 1e-9 * max(1.0, float(np.max(np.abs(cur)))))
    while np.max(np.abs(cur - np.eye(n))) > max(1e-6, tol):
        for s in range(n):
            if _root_is_negative(curinv[:, s], tol=tol):
                break
        else:
            raise EnumerationError(
                "no descent found; matrix is not in the represented group "
                "or numerics degraded"
            )
        cur = sys.gens[s] @ cur
        curinv = curinv @ sys.gens[s]
        word.append(s)
        if len(word) > max_length:
            raise EnumerationError(f"reduced word exceeds {max_length} letters")
    return tuple(word)


def element_of(sys, word):
    """Element for an arbitrary word (not necessarily reduced).

    The matrix is the ordered product of generator matrices; the stored word
    is replaced by the ShortLex-minimal reduced word.
    """
    M = np.eye(sys.rank)
    for s in word:
        M = M @ sys.gens[s]
    return GroupElement(word=reduced_word(sys, M), matrix=M)


def _fingerprint(M, grid):
    return np.round(M / grid).astype(np.int64).tobytes()


class ElementStore:
    """One canonical representative per group element up to a maximum length.

    Elements are stored in BFS (ShortLex) order; the fingerprint index maps a
    quantized matrix to its element id.
    """

    def __init__(self, sys, grid=FINGERPRINT_GRID):
        self.sys = sys
        self.grid = grid
        self.elements = []
        self._index = {}
        self._by_length = {}

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @property
    def max_length(self):
        return max(self._by_length) if self._by_length else -1

    def counts(self):
        """Number of elements at each length 0..max_length."""
        return [len(self._by_length.get(k, ())) for k in range(self.max_length + 1)]

    def of_length(self, k):
        return [self.elements[i] for i in self._by_length.get(k, ())]

    def with_length(self, lo, hi):
        out = []
        for k in range(lo, hi + 1):
            out.extend(self.of_length(k))
        return out

    def lookup(self, M):
        """Element id for a matrix, or None if not stored."""
        idx = self._index.get(_fingerprint(M, self.grid))
        if idx is None:
            return None
        if np.max(np.abs(self.elements[idx].matrix - M)) > 10 * MATCH_TOL:
            return None
        return idx

    def _insert(self, elem):
        if np.max(np.abs(elem.matrix)) > MAX_ENTRY:
            raise EnumerationError(
                f"matrix entries exceed {MAX_ENTRY:g} at length {elem.length}; "
                "quantized dedup is no longer meaningful at this depth"
            )
        key = _fingerprint(elem.matrix, self.grid)
        idx = self._index.get(key)
        if idx is not None:
            diff = np.max(np.abs(self.elements[idx].matrix - elem.matrix))
            if diff > MATCH_TOL:
                raise EnumerationError(
                    f"fingerprint collision at grid {self.grid:g}: matrices differ by "
                    f"{diff:g}; retry with a smaller dedup epsilon"
                )
            return False
        elem.matrix.setflags(write=False)
        self._index[key] = len(self.elements)
        self._by_length.setdefault(elem.length, []).append(len(self.elements))
        self.elements.append(elem)
        return True

    def restrict(self, max_length):
        """New store containing only elements of length <= max_length."""
        out = ElementStore(self.sys, self.grid)
        for elem in self.elements:
            if elem.length <= max_length:
                out._insert(GroupElement(elem.word, np.array(elem.matrix)))
        return out


def enumerate_elements(sys, max_length, grid=FINGERPRINT_GRID):
    """All group elements of length <= max_length by Cayley-graph BFS.

    Deterministic: the frontier is expanded in ShortLex order and generators
    are tried in index order, so each element's stored word is its
    ShortLex-minimal reduced word.
    """
    if max_length < 0:
        raise ValueError("max_length must be >= 0")
    store = ElementStore(sys, grid)
    identity = GroupElement(word=(), matrix=np.eye(sys.rank))
    store._insert(identity)
    frontier = [identity]
    for _ in range(max_length):
        next_frontier = []
        for elem in frontier:
            for s in range(sys.rank):
                cand = GroupElement(word=elem.word + (s,), matrix=elem.matrix @ sys.gens[s])
                if store._insert(cand):
                    next_frontier.append(cand)
        frontier = next_frontier
        if not frontier:
            break
    return store
