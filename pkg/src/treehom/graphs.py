"""Target graphs (loops allowed) and trees.

Degree convention: a loop contributes 1 to the degree of its vertex, not 2.
This differs from the common convention and is used consistently everywhere
in this package (regularity tests, similarity matrices, nested-neighborhood
orderings all depend on it).

Edges are stored as normalized pairs (u, v) with u <= v; (u, u) is a loop.
All graph and tree values are immutable after construction and safe to share.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from typing import Iterable, Optional


class GraphParseError(ValueError):
    """Malformed graph text (bad header, bad index, duplicate edge...)."""


class SizeLimitError(ValueError):
    """Input exceeds a configured exhaustive-search limit."""


def _normalize_edges(edges: Iterable[tuple[int, int]]) -> frozenset[tuple[int, int]]:
    return frozenset((u, v) if u <= v else (v, u) for u, v in edges)


@dataclass(frozen=True)
class TargetGraph:
    """A coloring-constraint graph: simple, undirected, loops allowed."""

    n: int
    edges: frozenset[tuple[int, int]]
    _adj: tuple[frozenset[int], ...] = field(
        init=False, repr=False, compare=False, hash=False, default=()
    )

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            if not (0 <= u <= v < self.n):
                raise ValueError(f"edge ({u},{v}) out of range for n={self.n}")
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "_adj", tuple(frozenset(s) for s in adj))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "TargetGraph":
        return cls(n, _normalize_edges(edges))

    def neighbors(self, v: int) -> frozenset[int]:
        """Open neighborhood; contains v itself iff v is looped."""
        return self._adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def has_loop(self, v: int) -> bool:
        return (v, v) in self.edges

    def degree(self, v: int) -> int:
        """Number of incident edges; a loop counts once."""
        return len(self._adj[v])

    def vertices(self) -> range:
        return range(self.n)


@dataclass(frozen=True)
class Tree:
    """A connected acyclic loopless graph; validated eagerly on construction."""

    n: int
    edges: tuple[tuple[int, int], ...]
    _adj: tuple[tuple[int, ...], ...] = field(
        init=False, repr=False, compare=False, hash=False, default=()
    )

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("a tree has at least one vertex")
        if len(self.edges) != self.n - 1:
            raise ValueError(f"a tree on {self.n} vertices needs {self.n - 1} edges, "
                             f"got {len(self.edges)}")
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u},{v}) out of range for n={self.n}")
            if u == v:
                raise ValueError(f"loop at {u}: trees are loopless")
            ru, rv = find(u), find(v)
            if ru == rv:
                raise ValueError(f"edge ({u},{v}) closes a cycle")
            parent[ru] = rv
            adj[u].append(v)
            adj[v].append(u)
        object.__setattr__(self, "_adj", tuple(tuple(sorted(a)) for a in adj))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Tree":
        return cls(n, tuple(sorted((u, v) if u <= v else (v, u) for u, v in edges)))

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def vertices(self) -> range:
        return range(self.n)


# ---------------------------------------------------------------------------
# parsing / formatting (loopy edge-list text format)

def parse_graph(text: str) -> TargetGraph:
    """Parse the loopy edge-list format.

    First non-comment line is "n m"; then m lines "u v" with 0-based vertex
    indices, where "u u" denotes a loop. Lines starting with '#' are comments.
    """
    lines = [(i + 1, ln.strip()) for i, ln in enumerate(text.splitlines())]
    lines = [(no, ln) for no, ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise GraphParseError("empty graph description")
    no, header = lines[0]
    parts = header.split()
    if len(parts) != 2:
        raise GraphParseError(f"line {no}: header must be 'n m', got {header!r}")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise GraphParseError(f"line {no}: header must be two integers, got {header!r}")
    if n < 0 or m < 0:
        raise GraphParseError(f"line {no}: negative count in header {header!r}")
    body = lines[1:]
    if len(body) != m:
        raise GraphParseError(f"header announces {m} edges but {len(body)} edge lines found")
    seen: set[tuple[int, int]] = set()
    for no, ln in body:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphParseError(f"line {no}: edge must be 'u v', got {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(f"line {no}: edge must be two integers, got {ln!r}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(f"line {no}: vertex index out of range 0..{n - 1} in {ln!r}")
        e = (min(u, v), max(u, v))
        if e in seen:
            raise GraphParseError(f"line {no}: duplicate edge {ln!r}")
        seen.add(e)
    return TargetGraph(n, frozenset(seen))


def format_graph(H: TargetGraph) -> str:
    """Inverse of parse_graph (up to edge order)."""
    lines = [f"{H.n} {len(H.edges)}"]
    lines += [f"{u} {v}" for u, v in sorted(H.edges)]
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# constructions

def disjoint_union(H1: TargetGraph, H2: TargetGraph) -> TargetGraph:
    off = H1.n
    edges = set(H1.edges) | {(u + off, v + off) for u, v in H2.edges}
    return TargetGraph.from_edges(H1.n + H2.n, edges)


def tensor_product(H1: TargetGraph, H2: TargetGraph) -> TargetGraph:
    """Vertices are pairs; (x1,y1)~(x2,y2) iff x1~x2 and y1~y2."""
    def idx(x: int, y: int) -> int:
        return x * H2.n + y

    edges = set()
    for x1 in H1.vertices():
        for x2 in H1.neighbors(x1):
            for y1 in H2.vertices():
                for y2 in H2.neighbors(y1):
                    edges.add((min(idx(x1, y1), idx(x2, y2)), max(idx(x1, y1), idx(x2, y2))))
    return TargetGraph.from_edges(H1.n * H2.n, edges)


def blow_up(H: TargetGraph, sizes: Iterable[int]) -> TargetGraph:
    """Replace vertex v by a cluster of sizes[v] vertices.

    Looped vertices become fully looped cliques, unlooped become empty sets,
    edges become complete bipartite connections.
    """
    sizes = list(sizes)
    if len(sizes) != H.n:
        raise ValueError(f"need one size per vertex: got {len(sizes)} for n={H.n}")
    if any(s < 1 for s in sizes):
        raise ValueError("blow-up sizes must be positive")
    start = [0] * H.n
    for v in range(1, H.n):
        start[v] = start[v - 1] + sizes[v - 1]
    total = sum(sizes)
    edges = set()
    for u, v in H.edges:
        for i in range(sizes[u]):
            for j in range(sizes[v]):
                a, b = start[u] + i, start[v] + j
                if u == v and j < i:
                    continue
                edges.add((min(a, b), max(a, b)))
    return TargetGraph.from_edges(total, edges)


def add_looped_dominating(H: TargetGraph, b: int) -> TargetGraph:
    """Add b new looped vertices, each adjacent to every vertex (old and new)."""
    if b < 0:
        raise ValueError("b must be non-negative")
    edges = set(H.edges)
    for i in range(b):
        w = H.n + i
        edges.update((v, w) for v in range(w))
        edges.add((w, w))
    return TargetGraph.from_edges(H.n + b, edges)


def remove_isolated(H: TargetGraph) -> TargetGraph:
    """Drop every v with N(v) <= {v}; a lone looped vertex counts as isolated."""
    keep = [v for v in H.vertices() if H.neighbors(v) - {v}]
    relabel = {v: i for i, v in enumerate(keep)}
    edges = {(relabel[u], relabel[v]) for u, v in H.edges if u in relabel and v in relabel}
    return TargetGraph.from_edges(len(keep), edges)


def is_regular(H: TargetGraph) -> Optional[int]:
    """The common degree if H is regular (loop counting once), else None."""
    if H.n == 0:
        return None
    degs = {H.degree(v) for v in H.vertices()}
    return degs.pop() if len(degs) == 1 else None


def components(H: TargetGraph) -> list[list[int]]:
    """Connected components, ordered by least vertex index."""
    seen: set[int] = set()
    out: list[list[int]] = []
    for v in H.vertices():
        if v in seen:
            continue
        comp = [v]
        seen.add(v)
        stack = [v]
        while stack:
            u = stack.pop()
            for w in H.neighbors(u):
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        out.append(sorted(comp))
    return out


def induced_subgraph(H: TargetGraph, vertices: Iterable[int]) -> TargetGraph:
    verts = sorted(set(vertices))
    relabel = {v: i for i, v in enumerate(verts)}
    edges = {(relabel[u], relabel[v]) for u, v in H.edges if u in relabel and v in relabel}
    return TargetGraph.from_edges(len(verts), edges)


def bipartition(T: Tree) -> tuple[list[int], list[int]]:
    """The unique 2-coloring classes (X, Y) of a tree, with |X| <= |Y|."""
    color = [-1] * T.n
    color[0] = 0
    stack = [0]
    while stack:
        u = stack.pop()
        for w in T.neighbors(u):
            if color[w] < 0:
                color[w] = 1 - color[u]
                stack.append(w)
    x = [v for v in T.vertices() if color[v] == 0]
    y = [v for v in T.vertices() if color[v] == 1]
    return (x, y) if len(x) <= len(y) else (y, x)


# ---------------------------------------------------------------------------
# isomorphism by canonical form (exhaustive with pruning, desk scale only)

_ISO_LIMIT = 12


def canonical_form(H: TargetGraph, limit: int = _ISO_LIMIT) -> tuple:
    """Lexicographically least edge set over all relabelings.

    Valid for small graphs only (permutations within (degree, loop) classes
    are tried exhaustively).
    """
    if H.n > limit:
        raise SizeLimitError(f"canonical form limited to {limit} vertices, got {H.n}")
    sig = sorted(range(H.n), key=lambda v: (H.degree(v), H.has_loop(v), _nbr_sig(H, v)))
    best: Optional[tuple] = None
    # permute only within equal-signature blocks; cheap and still exact
    blocks: list[list[int]] = []
    for v in sig:
        key = (H.degree(v), H.has_loop(v), _nbr_sig(H, v))
        if blocks and blocks[-1][0] == key:
            blocks[-1][1].append(v)
        else:
            blocks.append([key, [v]])  # type: ignore[list-item]
    for assignment in _block_perms([b[1] for b in blocks]):
        relabel = {v: i for i, v in enumerate(assignment)}
        form = tuple(sorted(
            (min(relabel[u], relabel[v]), max(relabel[u], relabel[v])) for u, v in H.edges
        ))
        if best is None or form < best:
            best = form
    return (H.n, best)


def _nbr_sig(H: TargetGraph, v: int) -> tuple:
    return tuple(sorted((H.degree(u), H.has_loop(u)) for u in H.neighbors(v)))


def _block_perms(blocks: list[list[int]]):
    if not blocks:
        yield []
        return
    head, rest = blocks[0], blocks[1:]
    for perm in permutations(head):
        for tail in _block_perms(rest):
            yield list(perm) + tail


def is_isomorphic(H1: TargetGraph, H2: TargetGraph, limit: int = _ISO_LIMIT) -> bool:
    if H1.n != H2.n or len(H1.edges) != len(H2.edges):
        return False
    return canonical_form(H1, limit) == canonical_form(H2, limit)
