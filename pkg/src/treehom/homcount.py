"""Exact H-coloring counts: class-based tree walk, brute force, path-pair
tables, the KC difference decomposition, and weighted partition functions.

All counting is in arbitrary-precision integers (counts grow like d^n);
weighted counts use exact Fractions throughout, never floats.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence, Union

from .automorphy import AUT_SIZE_LIMIT, SimilarityMatrix, class_data
from .graphs import SizeLimitError, TargetGraph, Tree
from .trees import bare_path

BRUTE_FORCE_BUDGET = 10 ** 8

# a loopless graph for brute-force / partition-function inputs: either a Tree
# or a bare (n, edges) pair
LooplessGraph = Union[Tree, tuple[int, Sequence[tuple[int, int]]]]


def _as_graph(G: LooplessGraph) -> tuple[int, list[tuple[int, int]]]:
    if isinstance(G, Tree):
        return G.n, list(G.edges)
    n, edges = G
    return n, list(edges)


# ---------------------------------------------------------------------------
# class-based tree walk

def _rooted_order(T: Tree, root: int) -> tuple[list[int], list[int]]:
    """(vertices in post-order, parent array) for T rooted at root."""
    parent = [-1] * T.n
    order = [root]
    parent[root] = root
    for v in order:
        for u in T.neighbors(v):
            if parent[u] < 0:
                parent[u] = v
                order.append(u)
    parent[root] = -1
    order.reverse()
    return order, parent


def hom_vector(T: Tree, root: int, M: SimilarityMatrix) -> tuple[int, ...]:
    """Entry p = number of H-colorings sending root into the class at
    position p of M's ordering (any fixed representative)."""
    if not 0 <= root < T.n:
        raise ValueError(f"root {root} not a vertex of the tree")
    k = M.k
    order, parent = _rooted_order(T, root)
    h: list[tuple[int, ...] | None] = [None] * T.n
    for v in order:
        vec = [1] * k
        for c in T.neighbors(v):
            if parent[c] != v:
                continue
            child = h[c]
            msg = [sum(M.m[i][j] * child[j] for j in range(k)) for i in range(k)]
            vec = [a * b for a, b in zip(vec, msg)]
        h[v] = tuple(vec)
    return h[root]


def hom_count(T: Tree, H: TargetGraph, size_limit: int = AUT_SIZE_LIMIT) -> int:
    """hom(T, H) via the similarity-class tree walk."""
    _, M = class_data(H, size_limit)
    h = hom_vector(T, 0, M)
    return sum(a * x for a, x in zip(M.sizes, h))


def tree_hom(T: Tree, H: TargetGraph) -> int:
    """hom(T, H) by dynamic programming over individual target vertices.

    No automorphism machinery; works for any target size. Used for sweeps
    and as the route for targets past the automorphism-search limit.
    """
    order, parent = _rooted_order(T, 0)
    nbrs = [H.neighbors(v) for v in H.vertices()]
    h: list[list[int] | None] = [None] * T.n
    for v in order:
        vec = [1] * H.n
        for c in T.neighbors(v):
            if parent[c] != v:
                continue
            child = h[c]
            vec = [vec[x] * sum(child[y] for y in nbrs[x]) for x in H.vertices()]
        h[v] = vec
    return sum(h[0])


# ---------------------------------------------------------------------------
# brute force oracle

def hom_brute_force(G: LooplessGraph, H: TargetGraph,
                    budget: int = BRUTE_FORCE_BUDGET) -> int:
    """Count H-colorings by enumerating every vertex map and checking edges."""
    n, edges = _as_graph(G)
    if H.n == 0:
        return 0 if n > 0 else 1
    if H.n ** n > budget:
        raise SizeLimitError(f"brute force needs {H.n}^{n} maps, budget is {budget}")
    count = 0
    for f in product(range(H.n), repeat=n):
        if all(H.has_edge(f[u], f[v]) for u, v in edges):
            count += 1
    return count


# ---------------------------------------------------------------------------
# path-pair counts

class PathPairTable:
    """p[i][j] = H-colorings of the t-vertex path with endpoints in the
    classes at positions i and j of the matrix ordering."""

    def __init__(self, t: int, p: tuple[tuple[int, ...], ...]):
        self.t = t
        self.p = p

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return self.p[ij[0]][ij[1]]


def path_pair_counts(t: int, M: SimilarityMatrix) -> PathPairTable:
    """Built by iterating the class transfer step t-1 times from indicator
    vectors, then weighting rows by class sizes."""
    if t < 1:
        raise ValueError("path length must be >= 1 vertex")
    k = M.k
    # q[i][j]: colorings of P_t with x_1 a fixed representative of class i
    # and x_t anywhere in class j; q for t=1 is the identity
    q = [[1 if i == j else 0 for j in range(k)] for i in range(k)]
    for _ in range(t - 1):
        q = [[sum(M.m[i][l] * q_l[j] for l, q_l in enumerate(q)) for j in range(k)]
             for i in range(k)]
    p = tuple(tuple(M.sizes[i] * q[i][j] for j in range(k)) for i in range(k))
    return PathPairTable(t, p)


# ---------------------------------------------------------------------------
# KC difference decomposition

def kc_difference_decomposition(
    T: Tree, v_left: int, v_right: int, H: TargetGraph,
    size_limit: int = AUT_SIZE_LIMIT,
) -> tuple[int, int]:
    """(lhs, rhs) with lhs = hom(T_KC, H) - hom(T, H) computed directly and
    rhs the pairwise-difference sum over the L/R rooted vectors and the
    path-pair table; the two agree."""
    from .trees import kc_move

    pth = bare_path(T, v_left, v_right)
    t = len(pth)
    _, M = class_data(H, size_limit)
    moved = kc_move(T, v_left, v_right)
    lhs = hom_count(moved, H, size_limit) - hom_count(T, H, size_limit)

    internal = set(pth[1:-1])
    left = _side_component(T, v_left, internal, v_right)
    right = _side_component(T, v_right, internal, v_left)
    ell = hom_vector(*left, M)
    arr = hom_vector(*right, M)
    p = path_pair_counts(t, M)
    k = M.k
    rhs = sum(
        (ell[j] - ell[i]) * (arr[j] - arr[i]) * p[i, j]
        for i in range(k) for j in range(i + 1, k)
    )
    return lhs, rhs


def _side_component(T: Tree, anchor: int, internal: set[int],
                    other_end: int) -> tuple[Tree, int]:
    """The component of T - path containing anchor, plus anchor's new index."""
    blocked = internal | {other_end}
    comp = {anchor}
    stack = [anchor]
    while stack:
        u = stack.pop()
        for w in T.neighbors(u):
            if w not in blocked and w not in comp:
                comp.add(w)
                stack.append(w)
    verts = sorted(comp)
    relabel = {v: i for i, v in enumerate(verts)}
    edges = [(relabel[u], relabel[v]) for u, v in T.edges
             if u in relabel and v in relabel]
    return Tree.from_edges(len(verts), edges), relabel[anchor]


# ---------------------------------------------------------------------------
# weighted partition functions

ActivityVector = tuple[Fraction, ...]


def activities(values: Iterable[Union[int, str, Fraction]]) -> ActivityVector:
    """Exact positive activities, one per target vertex ("3/2", 1, Fraction...)."""
    out = tuple(Fraction(v) for v in values)
    if any(a <= 0 for a in out):
        raise ValueError("activities must be strictly positive")
    return out


def tree_partition_function(T: Tree, H: TargetGraph, lam: ActivityVector) -> Fraction:
    """Weighted tree walk over individual target vertices (activities may
    break automorphic symmetry, so classes cannot be used here)."""
    if len(lam) != H.n:
        raise ValueError(f"need {H.n} activities, got {len(lam)}")
    order, parent = _rooted_order(T, 0)
    nbrs = [H.neighbors(v) for v in H.vertices()]
    h: list[list[Fraction] | None] = [None] * T.n
    for v in order:
        vec = list(lam)
        for c in T.neighbors(v):
            if parent[c] != v:
                continue
            child = h[c]
            vec = [vec[x] * sum(child[y] for y in nbrs[x]) for x in H.vertices()]
        h[v] = vec
    return sum(h[0], Fraction(0))


def partition_function(G: LooplessGraph, H: TargetGraph, lam: ActivityVector,
                       budget: int = BRUTE_FORCE_BUDGET) -> Fraction:
    """Activity-weighted sum over all H-colorings of G, exact.

    Trees use the weighted tree walk (any size); other graphs fall back to
    budgeted brute-force enumeration.
    """
    if isinstance(G, Tree):
        return tree_partition_function(G, H, lam)
    if len(lam) != H.n:
        raise ValueError(f"need {H.n} activities, got {len(lam)}")
    n, edges = _as_graph(G)
    if H.n == 0:
        return Fraction(0 if n > 0 else 1)
    if H.n ** n > budget:
        raise SizeLimitError(f"brute force needs {H.n}^{n} maps, budget is {budget}")
    total = Fraction(0)
    for f in product(range(H.n), repeat=n):
        if all(H.has_edge(f[u], f[v]) for u, v in edges):
            w = Fraction(1)
            for x in f:
                w *= lam[x]
            total += w
    return total


def check_blowup_identity(G: LooplessGraph, H: TargetGraph,
                          sizes: Sequence[int], scale: int = 1,
                          budget: int = BRUTE_FORCE_BUDGET) -> tuple[Fraction, int]:
    """(lhs, rhs) for the scaling identity between the weighted partition
    function at activities sizes[i]/scale and the coloring count into the
    blow-up of H by sizes; the two agree exactly."""
    from .graphs import blow_up

    lam = activities(Fraction(s, scale) for s in sizes)
    n, _ = _as_graph(G)
    lhs = Fraction(scale) ** n * partition_function(G, H, lam, budget)
    big = blow_up(H, sizes)
    if isinstance(G, Tree):
        rhs = tree_hom(G, big)
    else:
        rhs = hom_brute_force(G, big, budget)
    return lhs, rhs
