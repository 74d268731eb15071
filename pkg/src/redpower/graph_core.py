"""Immutable simple graphs and digraphs over vertices ``0..n-1``, stored as bitmasks."""
from __future__ import annotations

import csv
import io
import json
import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

INF = math.inf


def bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class SimpleGraph:
    n: int
    adj: tuple[int, ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match n")
        for v, m in enumerate(self.adj):
            if m >> v & 1:
                raise ValueError(f"self-loop at {v}")
            if m >> self.n:
                raise ValueError(f"neighbor out of range at {v}")
            for u in bits(m):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency {v}-{u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]],
                   labels: Sequence[str] | None = None) -> "SimpleGraph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj), tuple(labels) if labels is not None else None)

    @classmethod
    def empty(cls, n: int) -> "SimpleGraph":
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> "SimpleGraph":
        full = (1 << n) - 1
        return cls(n, tuple(full ^ (1 << v) for v in range(n)))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels else str(v)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [m.bit_count() for m in self.adj]

    @property
    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]


@dataclass(frozen=True)
class DiGraph:
    n: int
    out_adj: tuple[int, ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        for v, m in enumerate(self.out_adj):
            if m >> v & 1:
                raise ValueError(f"self-loop at {v}")

    def arcs(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.out_adj[u])]

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.out_adj[u] >> v & 1)

    def underlying(self) -> SimpleGraph:
        adj = list(self.out_adj)
        for u in range(self.n):
            for v in bits(self.out_adj[u]):
                adj[v] |= 1 << u
        return SimpleGraph(self.n, tuple(adj), self.labels)

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels else str(v)


# ---------------------------------------------------------------------------
# structural queries

def _reach(g: SimpleGraph, start: int, allowed: int) -> int:
    """Bitmask of vertices reachable from ``start`` inside ``allowed``."""
    seen = frontier = 1 << start
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


def component_masks(g: SimpleGraph, allowed: int | None = None) -> list[int]:
    rest = g.full_mask if allowed is None else allowed
    comps = []
    while rest:
        v = (rest & -rest).bit_length() - 1
        c = _reach(g, v, rest)
        comps.append(c)
        rest &= ~c
    return comps


def components(g: SimpleGraph) -> list[list[int]]:
    return [list(bits(c)) for c in component_masks(g)]


def is_connected(g: SimpleGraph) -> bool:
    return g.n > 0 and len(component_masks(g)) == 1


def bfs_distances(g: SimpleGraph, src: int) -> list[float]:
    dist: list[float] = [INF] * g.n
    dist[src] = 0
    seen = frontier = 1 << src
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
        for v in bits(frontier):
            dist[v] = d
    return dist


def eccentricity(g: SimpleGraph, v: int) -> float:
    return max(bfs_distances(g, v))


def diameter(g: SimpleGraph) -> float:
    """Largest distance; ``INF`` if disconnected. A single vertex has diameter 0."""
    if g.n <= 1:
        return 0
    if not is_connected(g):
        return INF
    return max(eccentricity(g, v) for v in range(g.n))


def girth(g: SimpleGraph) -> float:
    best = INF
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        q = deque([root])
        while q:
            u = q.popleft()
            if 2 * dist[u] >= best:
                break
            for w in bits(g.adj[u]):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    q.append(w)
                elif w != parent[u]:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def complement(g: SimpleGraph) -> SimpleGraph:
    full = g.full_mask
    return SimpleGraph(g.n, tuple(full & ~m & ~(1 << v) for v, m in enumerate(g.adj)), g.labels)


def induced_subgraph(g: SimpleGraph, keep: Iterable[int]) -> SimpleGraph:
    keep = sorted(set(keep))
    pos = {v: i for i, v in enumerate(keep)}
    adj = []
    for v in keep:
        m = 0
        for u in bits(g.adj[v]):
            if u in pos:
                m |= 1 << pos[u]
        adj.append(m)
    labels = tuple(g.label(v) for v in keep) if g.labels else None
    return SimpleGraph(len(keep), tuple(adj), labels)


def is_bipartite(g: SimpleGraph) -> bool:
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            for w in bits(g.adj[u]):
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    q.append(w)
                elif color[w] == color[u]:
                    return False
    return True


def is_triangle_free(g: SimpleGraph) -> bool:
    return not any(g.adj[u] & g.adj[v] for u, v in g.edges())


def find_claw(g: SimpleGraph) -> tuple[int, int, int, int] | None:
    """Return (center, a, b, c) for an induced K_{1,3}, or None."""
    for v in range(g.n):
        nb = g.neighbors(v)
        if len(nb) < 3:
            continue
        for a in nb:
            rest = g.adj[v] & ~g.adj[a] & ~((1 << (a + 1)) - 1)
            for b in bits(rest):
                third = rest & ~g.adj[b] & ~((1 << (b + 1)) - 1)
                if third:
                    return v, a, b, (third & -third).bit_length() - 1
    return None


def multipartite_parts(g: SimpleGraph) -> list[int] | None:
    """Part sizes if ``g`` is complete multipartite (complement is a union of cliques)."""
    comp = complement(g)
    sizes = []
    for c in component_masks(comp):
        k = c.bit_count()
        if any((comp.adj[v] | (1 << v)) & c != c for v in bits(c)):
            return None
        sizes.append(k)
    return sorted(sizes)


@dataclass(frozen=True)
class ShapeReport:
    is_acyclic: bool
    is_tree: bool
    is_star: bool
    is_path: bool
    is_cycle: bool
    is_bipartite: bool
    is_triangle_free: bool
    is_claw_free: bool
    multipartite: tuple[int, ...] | None


def classify_shape(g: SimpleGraph) -> ShapeReport:
    n, m = g.n, g.edge_count
    c = len(component_masks(g))
    deg = g.degrees()
    acyclic = m == n - c
    tree = n >= 1 and c == 1 and m == n - 1
    parts = multipartite_parts(g)
    return ShapeReport(
        is_acyclic=acyclic,
        is_tree=tree,
        is_star=tree and n >= 2 and max(deg) == n - 1,
        is_path=tree and max(deg, default=0) <= 2,
        is_cycle=n >= 3 and c == 1 and all(d == 2 for d in deg),
        is_bipartite=is_bipartite(g),
        is_triangle_free=is_triangle_free(g),
        is_claw_free=find_claw(g) is None,
        multipartite=tuple(parts) if parts is not None else None,
    )


# ---------------------------------------------------------------------------
# export / import

def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(g: SimpleGraph | DiGraph, name: str = "G") -> str:
    directed = isinstance(g, DiGraph)
    lines = [f"{'digraph' if directed else 'graph'} {_dot_quote(name)} {{"]
    for v in range(g.n):
        lines.append(f"  {v} [label={_dot_quote(g.label(v))}];")
    op = "->" if directed else "--"
    for u, v in (g.arcs() if directed else g.edges()):
        lines.append(f"  {u} {op} {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(g: SimpleGraph | DiGraph) -> dict:
    directed = isinstance(g, DiGraph)
    doc = {"n": g.n, "edges": [list(e) for e in (g.arcs() if directed else g.edges())]}
    if directed:
        doc["directed"] = True
    if g.labels:
        doc["labels"] = list(g.labels)
    return doc


def from_json(doc: dict | str) -> SimpleGraph | DiGraph:
    if isinstance(doc, str):
        doc = json.loads(doc)
    n = int(doc["n"])
    labels = tuple(doc["labels"]) if doc.get("labels") else None
    pairs = [(int(u), int(v)) for u, v in doc["edges"]]
    if doc.get("directed"):
        out = [0] * n
        for u, v in pairs:
            out[u] |= 1 << v
        return DiGraph(n, tuple(out), labels)
    return SimpleGraph.from_edges(n, pairs, labels)


def to_csv(g: SimpleGraph | DiGraph) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["source", "target"])
    w.writerows(g.arcs() if isinstance(g, DiGraph) else g.edges())
    return buf.getvalue()


def from_csv(text: str, n: int | None = None) -> SimpleGraph:
    rows = [r for r in csv.reader(io.StringIO(text)) if r]
    if rows and not rows[0][0].strip().lstrip("-").isdigit():
        rows = rows[1:]
    pairs = [(int(u), int(v)) for u, v in rows]
    if n is None:
        n = 1 + max((max(e) for e in pairs), default=-1)
    return SimpleGraph.from_edges(n, pairs)
