"""Automorphism orbits, similarity matrices, and the increasing-columns test.

Automorphisms are found by backtracking over vertex images, pruned by an
iterated neighborhood-color refinement, so structured graphs of a couple of
dozen vertices (e.g. the 21-vertex Folkman-plus-dominating example) are still
fast despite the worst case being factorial. The default size guard is 12
vertices; callers that know their graph is tame can raise it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product

from .graphs import SizeLimitError, TargetGraph

AUT_SIZE_LIMIT = 12
ORDERING_CLASS_LIMIT = 9


@dataclass(frozen=True)
class OrbitPartition:
    """Automorphism orbits of a target graph, indexed by least contained vertex."""

    graph: TargetGraph
    classes: tuple[tuple[int, ...], ...]
    class_of: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.classes)


@dataclass(frozen=True)
class SimilarityMatrix:
    """Cross-class neighbor counts m[i][j] under a chosen class ordering.

    ordering[p] is the original class index placed at position p; sizes[p]
    is the size of that class.
    """

    k: int
    m: tuple[tuple[int, ...], ...]
    sizes: tuple[int, ...]
    ordering: tuple[int, ...]


def _refined_colors(H: TargetGraph) -> list[int]:
    """Stable iterated refinement of (degree, loop) vertex colors."""
    col = {v: hash((H.degree(v), H.has_loop(v))) for v in H.vertices()}
    ncolors = len(set(col.values()))
    while True:
        raw = {
            v: (col[v], tuple(sorted(col[u] for u in H.neighbors(v))))
            for v in H.vertices()
        }
        palette = {c: i for i, c in enumerate(sorted(set(raw.values()), key=repr))}
        col = {v: palette[raw[v]] for v in H.vertices()}
        if len(palette) == ncolors:
            return [col[v] for v in H.vertices()]
        ncolors = len(palette)


def automorphisms(H: TargetGraph, size_limit: int = AUT_SIZE_LIMIT) -> list[tuple[int, ...]]:
    """All loop- and adjacency-preserving vertex permutations."""
    if H.n > size_limit:
        raise SizeLimitError(f"automorphism search limited to {size_limit} vertices, got {H.n}")
    if H.n == 0:
        return [()]
    color = _refined_colors(H)
    by_color: dict[int, list[int]] = {}
    for v in H.vertices():
        by_color.setdefault(color[v], []).append(v)

    # map vertices in an order that keeps each new vertex adjacent to a
    # mapped one where possible (tight candidate sets)
    order: list[int] = []
    placed = [False] * H.n
    start = min(H.vertices(), key=lambda v: (len(by_color[color[v]]), v))
    stack = [start]
    while len(order) < H.n:
        if stack:
            v = stack.pop()
            if placed[v]:
                continue
        else:
            v = min((u for u in H.vertices() if not placed[u]),
                    key=lambda u: (len(by_color[color[u]]), u))
        placed[v] = True
        order.append(v)
        stack.extend(sorted(H.neighbors(v) - {v}, reverse=True))

    found: list[tuple[int, ...]] = []
    image: dict[int, int] = {}
    used = [False] * H.n

    def extend(pos: int) -> None:
        if pos == H.n:
            found.append(tuple(image[v] for v in range(H.n)))
            return
        v = order[pos]
        mapped_nbrs = [u for u in H.neighbors(v) if u in image and u != v]
        if mapped_nbrs:
            cands = set(H.neighbors(image[mapped_nbrs[0]]))
        else:
            cands = set(by_color[color[v]])
        for w in sorted(cands):
            if used[w] or color[w] != color[v]:
                continue
            ok = all(H.has_edge(image[u], w) == H.has_edge(u, v)
                     for u in image)
            if ok and H.has_loop(w) == H.has_loop(v):
                image[v] = w
                used[w] = True
                extend(pos + 1)
                used[w] = False
                del image[v]

    extend(0)
    return found


def orbit_partition(H: TargetGraph, size_limit: int = AUT_SIZE_LIMIT) -> OrbitPartition:
    """Orbits of the automorphism group, classes indexed by least vertex."""
    auts = automorphisms(H, size_limit)
    parent = list(range(H.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for sigma in auts:
        for v in H.vertices():
            ru, rv = find(v), find(sigma[v])
            if ru != rv:
                parent[ru] = rv
    groups: dict[int, list[int]] = {}
    for v in H.vertices():
        groups.setdefault(find(v), []).append(v)
    classes = tuple(tuple(sorted(g)) for g in sorted(groups.values(), key=min))
    class_of = [0] * H.n
    for i, cls in enumerate(classes):
        for v in cls:
            class_of[v] = i
    return OrbitPartition(H, classes, tuple(class_of))


def similarity_matrix(
    P: OrbitPartition,
    ordering: tuple[int, ...] | None = None,
    check_representatives: bool = False,
) -> SimilarityMatrix:
    """m[i][j] = neighbors in class j of any vertex in class i.

    ordering permutes the classes (identity by default). With
    check_representatives, representative-independence is asserted.
    """
    k = P.k
    if ordering is None:
        ordering = tuple(range(k))
    if sorted(ordering) != list(range(k)):
        raise ValueError(f"ordering {ordering} is not a permutation of 0..{k - 1}")
    H = P.graph
    m = []
    for i in ordering:
        rep = P.classes[i][0]
        row = [sum(1 for u in H.neighbors(rep) if P.class_of[u] == j) for j in ordering]
        if check_representatives:
            for other in P.classes[i][1:]:
                alt = [sum(1 for u in H.neighbors(other) if P.class_of[u] == j)
                       for j in ordering]
                assert alt == row, f"orbit class {i} is not equitable"
        m.append(tuple(row))
    sizes = tuple(len(P.classes[i]) for i in ordering)
    return SimilarityMatrix(k, tuple(m), sizes, tuple(ordering))


def has_increasing_columns(M: SimilarityMatrix) -> bool:
    """True iff every terminal column-segment sum is non-decreasing down rows."""
    for c in range(M.k):
        for i in range(M.k - 1):
            if sum(M.m[i][c:]) > sum(M.m[i + 1][c:]):
                return False
    return True


def find_increasing_ordering(
    H: TargetGraph,
    size_limit: int = AUT_SIZE_LIMIT,
    class_limit: int = ORDERING_CLASS_LIMIT,
) -> tuple[tuple[int, ...], SimilarityMatrix] | None:
    """First class ordering (lexicographic) whose matrix passes, or None.

    A passing ordering must be sorted by class degree (the full-row terminal
    sum is the degree), so only permutations within equal-degree blocks are
    tried; the lexicographically first passing ordering is unaffected.
    """
    P = orbit_partition(H, size_limit)
    if P.k > class_limit:
        raise SizeLimitError(f"ordering search limited to {class_limit} classes, got {P.k}")
    base = similarity_matrix(P)
    deg = [sum(base.m[i]) for i in range(P.k)]
    blocks: list[list[int]] = []
    for i in sorted(range(P.k), key=lambda i: (deg[i], i)):
        if blocks and deg[blocks[-1][0]] == deg[i]:
            blocks[-1].append(i)
        else:
            blocks.append([i])
    for parts in product(*(permutations(b) for b in blocks)):
        ordering = tuple(i for part in parts for i in part)
        M = similarity_matrix(P, ordering)
        if has_increasing_columns(M):
            return ordering, M
    return None


@lru_cache(maxsize=None)
def class_data(H: TargetGraph, size_limit: int = AUT_SIZE_LIMIT):
    """(OrbitPartition, identity-ordered SimilarityMatrix) for H, cached."""
    P = orbit_partition(H, size_limit)
    return P, similarity_matrix(P)
