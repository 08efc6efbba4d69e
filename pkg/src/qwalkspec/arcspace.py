"""Arc space of a regular graph and its walk matrices, exactly over Z.

Every undirected edge {u, v} contributes the two opposite arcs (u, v) and
(v, u).  The canonical arc order lists edges lexicographically (u < v) and
places each arc immediately before its reversal, so the reversal permutation
is block diagonal with 2x2 swaps and fixtures stay readable.

The walk transition matrix of a k-regular graph has entries 2/k and 2/k - 1;
to keep every downstream support computation sign-exact, this module only
ever materializes the integer scalings W = k*U and kQ.  Sign patterns of
powers are unchanged by the positive scaling, so supports of U^m and W^m
coincide.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ValencyError
from .graphs import Graph, is_regular
from .intmat import int_eye, int_zeros, mat_mul


@dataclass(frozen=True)
class ArcSpace:
    """Canonical arc indexing of a k-regular graph."""

    graph: Graph
    k: int
    arcs: tuple  # nk ordered (tail, head) pairs
    reverse: tuple  # reverse[i] = index of the reversed arc

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def size(self) -> int:
        return len(self.arcs)


def build_arc_space(g: Graph) -> ArcSpace:
    """Index the nk arcs of a regular graph (valency >= 1)."""
    k = is_regular(g)
    if k is None:
        raise ValencyError("graph is not regular")
    if k < 1:
        raise ValencyError(f"valency {k} < 1: no arcs to index")
    arcs = []
    for u, v in g.sorted_edges():
        arcs.append((u, v))
        arcs.append((v, u))
    reverse = []
    for i in range(0, len(arcs), 2):
        reverse.extend([i + 1, i])
    return ArcSpace(g, k, tuple(arcs), tuple(reverse))


def ins_matrix(a: ArcSpace) -> np.ndarray:
    """n x nk 0/1 matrix: entry (i, j) = 1 iff vertex i is the head of arc j."""
    m = int_zeros(a.n, a.size)
    for j, (_, head) in enumerate(a.arcs):
        m[head, j] = 1
    return m


def outs_matrix(a: ArcSpace) -> np.ndarray:
    """n x nk 0/1 matrix: entry (i, j) = 1 iff vertex i is the tail of arc j."""
    m = int_zeros(a.n, a.size)
    for j, (tail, _) in enumerate(a.arcs):
        m[tail, j] = 1
    return m


def reversal_matrix(a: ArcSpace) -> np.ndarray:
    """The arc-reversal permutation P: symmetric, P^2 = I, zero diagonal."""
    m = int_zeros(a.size, a.size)
    for j, r in enumerate(a.reverse):
        m[r, j] = 1
    return m


def scaled_transition_matrix(a: ArcSpace) -> np.ndarray:
    """W = k*U = 2*outs^T*ins - k*P.

    Entry (j, i) is 2 when arc i can continue into arc j without
    backtracking, 2 - k when j is the reversal of i, and 0 otherwise.
    """
    w = 2 * mat_mul(outs_matrix(a).T, ins_matrix(a))
    for j, r in enumerate(a.reverse):
        w[r, j] -= a.k
    return w


def scaled_reflection_q(a: ArcSpace) -> np.ndarray:
    """kQ = 2*ins^T*ins - k*I; satisfies (kQ)^2 = k^2 I."""
    q = 2 * mat_mul(ins_matrix(a).T, ins_matrix(a))
    for i in range(a.size):
        q[i, i] -= a.k
    return q


def arc_permutation(a: ArcSpace, perm) -> list:
    """Arc indices induced by a vertex permutation.

    Returns sigma with sigma[j] = index, in the arc space of the relabeled
    graph, of arc j's image.  Useful for similarity checks in tests.
    """
    target = {}
    relabeled = sorted(
        tuple(sorted((perm[u], perm[v]))) for (u, v) in a.graph.edges
    )
    idx = 0
    for u, v in relabeled:
        target[(u, v)] = idx
        target[(v, u)] = idx + 1
        idx += 2
    return [target[(perm[t], perm[h])] for (t, h) in a.arcs]


def identity_like(a: ArcSpace) -> np.ndarray:
    return int_eye(a.size)
