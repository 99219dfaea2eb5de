"""Minimizer sweeps over trees, path-minimality verdicts and certificates,
named target families, and loop-threshold recognition.

The sweeps are exhaustive over all non-isomorphic trees of each order and
report exact counts; "strongly path-minimal at desk scale" always means
per-n verdicts up to the swept bound, never the unbounded property.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Optional, Union

from .automorphy import (
    AUT_SIZE_LIMIT,
    SimilarityMatrix,
    find_increasing_ordering,
    has_increasing_columns,
    orbit_partition,
    similarity_matrix,
)
from .graphs import TargetGraph
from .homcount import path_pair_counts, tree_hom
from .trees import all_trees, canonical_code, has_balanced_bipartition, path, star


# ---------------------------------------------------------------------------
# target catalog: every loopy graph on at most three vertices

def _tg(n: int, *edges: tuple[int, int]) -> TargetGraph:
    return TargetGraph.from_edges(n, edges)


#: All 28 targets on <= 3 vertices, keyed 1..28. Vertices are 0,1,2 with the
#: third vertex (when present) the "apex"; loops written as (v, v).
SMALL_TARGETS: dict[int, TargetGraph] = {
    1: _tg(1),
    2: _tg(1, (0, 0)),
    3: _tg(2),
    4: _tg(2, (1, 1)),
    5: _tg(2, (0, 0), (1, 1)),
    6: _tg(2, (0, 1)),
    7: _tg(2, (0, 0), (0, 1)),
    8: _tg(2, (0, 0), (0, 1), (1, 1)),
    9: _tg(3),
    10: _tg(3, (1, 1)),
    11: _tg(3, (0, 0), (2, 2)),
    12: _tg(3, (0, 0), (1, 1), (2, 2)),
    13: _tg(3, (0, 1)),
    14: _tg(3, (0, 1), (2, 2)),
    15: _tg(3, (0, 0), (0, 1)),
    16: _tg(3, (0, 0), (0, 1), (2, 2)),
    17: _tg(3, (0, 0), (0, 1), (1, 1)),
    18: _tg(3, (0, 0), (0, 1), (1, 1), (2, 2)),
    19: _tg(3, (0, 1), (1, 2)),
    20: _tg(3, (0, 0), (0, 1), (1, 2)),
    21: _tg(3, (0, 1), (1, 1), (1, 2)),
    22: _tg(3, (0, 1), (1, 1), (1, 2), (2, 2)),
    23: _tg(3, (0, 0), (0, 1), (1, 2), (2, 2)),
    24: _tg(3, (0, 0), (0, 1), (1, 1), (1, 2), (2, 2)),
    25: _tg(3, (0, 1), (0, 2), (1, 2)),
    26: _tg(3, (0, 0), (0, 1), (0, 2), (1, 2)),
    27: _tg(3, (0, 0), (0, 1), (0, 2), (1, 1), (1, 2)),
    28: _tg(3, (0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2)),
}

#: One looped vertex joined to an unlooped vertex; colorings of G by this
#: target are exactly the independent sets of G.
H_IND = SMALL_TARGETS[7]


# ---------------------------------------------------------------------------
# family constructors

def make_capacity_graph(C: int) -> TargetGraph:
    """Vertices 0..C, edge {a, b} whenever a + b <= C (loop at i iff 2i <= C)."""
    if C < 1:
        raise ValueError("capacity must be >= 1")
    edges = [(a, b) for a in range(C + 1) for b in range(a, C + 1) if a + b <= C]
    return TargetGraph.from_edges(C + 1, edges)


def make_widom_rowlinson(k: int) -> TargetGraph:
    """Fully looped star: center 0 adjacent to k looped leaf vertices."""
    if k < 1:
        raise ValueError("need k >= 1 particle types")
    edges = [(v, v) for v in range(k + 1)] + [(0, v) for v in range(1, k + 1)]
    return TargetGraph.from_edges(k + 1, edges)


def make_H_abl(a: int, b: int, ell: int) -> TargetGraph:
    """A clique on b vertices with ell a-cliques appended at each clique
    vertex, each appended clique sharing only that vertex."""
    if a < 1 or b < 1 or ell < 0:
        raise ValueError("need a, b >= 1 and ell >= 0")
    edges = [(u, v) for u, v in combinations(range(b), 2)]
    nxt = b
    for v in range(b):
        for _ in range(ell):
            new = list(range(nxt, nxt + a - 1))
            nxt += a - 1
            members = [v] + new
            edges += [(x, y) for x, y in combinations(members, 2)]
    return TargetGraph.from_edges(nxt, edges)


def make_folkman_plus_dominating() -> TargetGraph:
    """The 21-vertex example: subdivide every edge of a 5-clique, clone the
    five branch vertices, then add one looped dominating vertex.

    Vertices 0..9 are the clones (two per original clique vertex), 10..19
    the subdivision vertices (one per clique edge), 20 the dominating vertex.
    """
    clones = {(i, c): 2 * i + c for i in range(5) for c in range(2)}
    edges = []
    sub = 10
    for i, j in combinations(range(5), 2):
        for c in range(2):
            edges.append((clones[(i, c)], sub))
            edges.append((clones[(j, c)], sub))
        sub += 1
    edges += [(v, 20) for v in range(20)]
    edges.append((20, 20))
    return TargetGraph.from_edges(21, edges)


# ---------------------------------------------------------------------------
# loop-threshold recognition

def is_loop_threshold(H: TargetGraph) -> Optional[tuple[int, ...]]:
    """A vertex ordering with nested neighborhoods, or None.

    If any nested ordering exists the degree-sorted one works: equal-degree
    vertices in a nested chain have identical neighborhoods, so only the
    pairwise containment along the degree sort needs checking.
    """
    order = sorted(H.vertices(), key=lambda v: (H.degree(v), v))
    for u, v in zip(order, order[1:]):
        if not H.neighbors(u) <= H.neighbors(v):
            return None
    return tuple(order)


# ---------------------------------------------------------------------------
# minimizer sweeps

@dataclass(frozen=True)
class MinimizerReport:
    n: int
    min_count: int
    minimizers: tuple[str, ...]  # canonical codes attaining the minimum
    path_is_min: bool
    path_is_unique_min: bool
    max_count: int
    star_is_max: bool


@dataclass(frozen=True)
class StrongHLCertificate:
    """Witness data for strict path minimality: per path length t a class
    pair (low, high) with a joint endpoint coloring and strictly ordered
    endpoint counts at every probed length s."""

    ordering: tuple[int, ...]
    t_max: int
    s_max: int
    witnesses: tuple[tuple[int, tuple[int, int]], ...]


@dataclass(frozen=True)
class HLVerdict:
    n_max: int
    reports: tuple[MinimizerReport, ...]
    matrix_certificate: Optional[tuple[tuple[int, ...], SimilarityMatrix]]
    strong_certificate: Optional[StrongHLCertificate]

    @property
    def hoffman_london(self) -> bool:
        return all(r.path_is_min for r in self.reports)

    @property
    def strongly_hoffman_london(self) -> bool:
        return all(r.path_is_unique_min for r in self.reports if r.n >= 4)


def sweep_counts(H: TargetGraph, n: int) -> dict[str, int]:
    """Exact hom count per canonical tree code at order n."""
    return {ct.code: tree_hom(ct.tree, H) for ct in all_trees(n)}


def minimizers(H: TargetGraph, n: int) -> MinimizerReport:
    counts = sweep_counts(H, n)
    lo = min(counts.values())
    hi = max(counts.values())
    mins = tuple(sorted(c for c, v in counts.items() if v == lo))
    path_code = canonical_code(path(n))
    star_code = canonical_code(star(n)) if n >= 2 else path_code
    return MinimizerReport(
        n=n,
        min_count=lo,
        minimizers=mins,
        path_is_min=path_code in mins,
        path_is_unique_min=mins == (path_code,),
        max_count=hi,
        star_is_max=counts[star_code] == hi,
    )


def verify_hoffman_london(H: TargetGraph, n_max: int,
                          size_limit: int = AUT_SIZE_LIMIT) -> HLVerdict:
    reports = tuple(minimizers(H, n) for n in range(2, n_max + 1))
    try:
        cert = find_increasing_ordering(H, size_limit)
    except Exception:
        cert = None
    strong = None
    if cert is not None:
        got = check_strong_hl_certificate(H, cert[0], t_max=n_max, s_max=n_max,
                                          size_limit=size_limit)
        if isinstance(got, StrongHLCertificate):
            strong = got
    return HLVerdict(n_max, reports, cert, strong)


def check_strong_hl_certificate(
    H: TargetGraph, ordering: tuple[int, ...], t_max: int = 9, s_max: int = 9,
    size_limit: int = AUT_SIZE_LIMIT,
) -> Union[StrongHLCertificate, str]:
    """Search, for each path length 2..t_max, for a class pair (a, b) with a
    joint endpoint coloring and strictly larger endpoint counts for b at
    every length 2..s_max; lexicographically least pair wins."""
    P = orbit_partition(H, size_limit)
    M = similarity_matrix(P, ordering)
    if not has_increasing_columns(M):
        return "ordering does not pass the increasing-columns test"
    k = M.k
    # endpoint vectors h(P_s, end) for s = 2..s_max
    vec = [1] * k
    endpoint = {}
    for s in range(2, s_max + 1):
        vec = [sum(M.m[i][j] * vec[j] for j in range(k)) for i in range(k)]
        endpoint[s] = vec
    witnesses = []
    for t in range(2, t_max + 1):
        p = path_pair_counts(t, M)
        found = None
        for a in range(k):
            for b in range(k):
                if a == b or p[a, b] == 0:
                    continue
                if all(endpoint[s][b] > endpoint[s][a] for s in range(2, s_max + 1)):
                    found = (a, b)
                    break
            if found:
                break
        if found is None:
            return f"no witness class pair for path length t={t}"
        witnesses.append((t, found))
    return StrongHLCertificate(tuple(ordering), t_max, s_max, tuple(witnesses))


# ---------------------------------------------------------------------------
# sweeps against the named bounds

def sidorenko_check(H: TargetGraph, n_max: int):
    """Verify the star maximizes at every order; returns (ok, violation)
    where violation is (n, code, count, star_count) for the first offender."""
    for n in range(2, n_max + 1):
        counts = sweep_counts(H, n)
        star_count = counts[canonical_code(star(n))]
        for code in sorted(counts):
            if counts[code] > star_count:
                return False, (n, code, counts[code], star_count)
    return True, None


def find_hl_counterexample_search(H: TargetGraph, n_max: int):
    """First (n, code, count, path_count) with a non-path tree strictly
    beating the path, or None."""
    for n in range(2, n_max + 1):
        counts = sweep_counts(H, n)
        path_count = counts[canonical_code(path(n))]
        for code in sorted(counts):
            if counts[code] < path_count:
                return n, code, counts[code], path_count
    return None


# ---------------------------------------------------------------------------
# classification of the small-target catalog

LABEL_ALL = "all-trees"
LABEL_PATHS = "paths"
LABEL_BALANCED = "balanced-bipartition-trees"
LABEL_ZERO = "zero-count"
LABEL_OTHER = "other"


@dataclass(frozen=True)
class ClassificationRow:
    target_id: int
    min_counts: tuple[tuple[int, int], ...]            # (n, min hom count)
    labels: tuple[tuple[int, frozenset[str]], ...]     # (n, applicable labels)
    summary: str


@lru_cache(maxsize=None)
def _balanced_codes(n: int) -> frozenset[str]:
    return frozenset(ct.code for ct in all_trees(n) if has_balanced_bipartition(ct.tree))


def _labels_for(n: int, mins: tuple[str, ...], min_count: int) -> frozenset[str]:
    """All class labels the minimizer set matches at this order.

    At small n the descriptions coincide (e.g. on 4 vertices the path is the
    only balanced-bipartition tree), so a set is returned rather than forcing
    an arbitrary precedence.
    """
    got = frozenset(mins)
    out = set()
    if min_count == 0:
        out.add(LABEL_ZERO)
    if got == frozenset(ct.code for ct in all_trees(n)):
        out.add(LABEL_ALL)
    if got == {canonical_code(path(n))}:
        out.add(LABEL_PATHS)
    if got == _balanced_codes(n):
        out.add(LABEL_BALANCED)
    return frozenset(out) if out else frozenset({LABEL_OTHER})


_LABEL_PRIORITY = (LABEL_ZERO, LABEL_ALL, LABEL_PATHS, LABEL_BALANCED, LABEL_OTHER)


def classify_small_targets(n_max: int) -> list[ClassificationRow]:
    rows = []
    for hid, H in SMALL_TARGETS.items():
        mins, labels = [], []
        for n in range(2, n_max + 1):
            rep = minimizers(H, n)
            mins.append((n, rep.min_count))
            labels.append((n, _labels_for(n, rep.minimizers, rep.min_count)))
        # orders below 4 are degenerate (at most two tree classes exist, so
        # the label sets coincide); summarize from the informative orders
        informative = [labs for n, labs in labels if n >= 4] or [labs for _, labs in labels]
        common = frozenset.intersection(*informative)
        summary = next((lab for lab in _LABEL_PRIORITY if lab in common), "mixed")
        rows.append(ClassificationRow(hid, tuple(mins), tuple(labels), summary))
    return rows


def display_label(labels: frozenset[str]) -> str:
    """One representative label when a minimizer set matches several classes."""
    return next(lab for lab in _LABEL_PRIORITY if lab in labels)
