"""Exact graph invariants with explicit size caps.

Every solver is deterministic: vertices are scanned in ascending id order
wherever a tie has to be broken, so witnesses are reproducible.
"""
from __future__ import annotations

import json
import math
from collections import deque
from dataclasses import asdict, dataclass, field

from .graph_core import (INF, SimpleGraph, bits, complement, component_masks, diameter,
                         girth, is_connected)


class CapExceeded(Exception):
    def __init__(self, what: str, n: int, cap: int):
        super().__init__(f"{what}: {n} vertices exceeds cap {cap}")
        self.what, self.n, self.cap = what, n, cap


@dataclass(frozen=True)
class Caps:
    solver_cap: int = 256
    hamiltonian_cap: int = 64
    perfect_cap: int = 40

    def __post_init__(self):
        if min(self.solver_cap, self.hamiltonian_cap, self.perfect_cap) < 1:
            raise ValueError("caps must be >= 1")


DEFAULT_CAPS = Caps()


def _check_cap(what: str, g: SimpleGraph, cap: int) -> None:
    if g.n > cap:
        raise CapExceeded(what, g.n, cap)


def _lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


# ---------------------------------------------------------------------------
# maximum clique: branch and bound with greedy colouring bounds

def _colour_sort(adj, cand: int) -> tuple[list[int], list[int]]:
    order, bounds = [], []
    uncoloured = cand
    k = 0
    while uncoloured:
        k += 1
        q = uncoloured
        while q:
            v = _lowest(q)
            q &= ~adj[v] & ~(1 << v)
            uncoloured &= ~(1 << v)
            order.append(v)
            bounds.append(k)
    return order, bounds


def max_clique(g: SimpleGraph, cap: int = DEFAULT_CAPS.solver_cap) -> list[int]:
    """A maximum clique of ``g`` (sorted vertex list)."""
    _check_cap("clique_number", g, cap)
    if g.n == 0:
        return []
    adj = g.adj
    best: list[int] = [0]

    def expand(clique: list[int], cand: int) -> None:
        nonlocal best
        order, bounds = _colour_sort(adj, cand)
        for idx in range(len(order) - 1, -1, -1):
            if len(clique) + bounds[idx] <= len(best):
                return
            v = order[idx]
            nxt = cand & adj[v]
            clique.append(v)
            if nxt:
                expand(clique, nxt)
            elif len(clique) > len(best):
                best = list(clique)
            clique.pop()
            cand &= ~(1 << v)

    expand([], g.full_mask)
    return sorted(best)


def clique_number(g: SimpleGraph, cap: int = DEFAULT_CAPS.solver_cap) -> int:
    return len(max_clique(g, cap))


def independence_number(g: SimpleGraph, cap: int = DEFAULT_CAPS.solver_cap) -> int:
    _check_cap("independence_number", g, cap)
    return clique_number(complement(g), cap)


def max_independent_set(g: SimpleGraph, cap: int = DEFAULT_CAPS.solver_cap) -> list[int]:
    return max_clique(complement(g), cap)


# ---------------------------------------------------------------------------
# chromatic number: DSATUR backtracking, iterative deepening on k

def _dsatur_greedy(g: SimpleGraph) -> list[int]:
    n, adj = g.n, g.adj
    colour = [-1] * n
    classes: list[int] = []
    for _ in range(n):
        v = _pick_dsatur(adj, colour, classes)
        for c, members in enumerate(classes):
            if not adj[v] & members:
                break
        else:
            c = len(classes)
            classes.append(0)
        colour[v] = c
        classes[c] |= 1 << v
    return colour


def _pick_dsatur(adj, colour, classes) -> int:
    best, key = -1, None
    uncoloured_mask = 0
    for v, c in enumerate(colour):
        if c < 0:
            uncoloured_mask |= 1 << v
    for v in bits(uncoloured_mask):
        sat = sum(1 for m in classes if adj[v] & m)
        k = (sat, (adj[v] & uncoloured_mask).bit_count())
        if key is None or k > key:
            best, key = v, k
    return best


def k_colouring(g: SimpleGraph, k: int) -> list[int] | None:
    """A proper colouring with at most ``k`` colours, or None."""
    n, adj = g.n, g.adj
    if n == 0:
        return []
    if k <= 0:
        return None
    colour = [-1] * n
    classes: list[int] = []

    def solve(remaining: int) -> bool:
        if remaining == 0:
            return True
        v = _pick_dsatur(adj, colour, classes)
        used = len(classes)
        for c in range(min(used + 1, k)):
            if c < used and adj[v] & classes[c]:
                continue
            if c == used:
                classes.append(0)
            colour[v] = c
            classes[c] |= 1 << v
            if solve(remaining - 1):
                return True
            classes[c] &= ~(1 << v)
            colour[v] = -1
            if c == used:
                classes.pop()
        return False

    return colour if solve(n) else None


def chromatic_colouring(g: SimpleGraph, cap: int = DEFAULT_CAPS.solver_cap) -> list[int]:
    """An optimal colouring.  The clique number is only used as a lower bound."""
    _check_cap("chromatic_number", g, cap)
    if g.n == 0:
        return []
    upper = _dsatur_greedy(g)
    hi = max(upper) + 1
    lo = clique_number(g, cap)
    for k in range(lo, hi):
        c = k_colouring(g, k)
        if c is not None:
            return c
    return upper


def chromatic_number(g: SimpleGraph, cap: int = DEFAULT_CAPS.solver_cap) -> int:
    c = chromatic_colouring(g, cap)
    return max(c) + 1 if c else 0


# ---------------------------------------------------------------------------
# vertex connectivity: unit-capacity max flow on the split-vertex network

class _FlowNet:
    def __init__(self, size: int):
        self.head = [[] for _ in range(size)]
        self.to: list[int] = []
        self.cap: list[int] = []

    def add(self, u: int, v: int, c: int) -> None:
        self.head[u].append(len(self.to))
        self.to.append(v)
        self.cap.append(c)
        self.head[v].append(len(self.to))
        self.to.append(u)
        self.cap.append(0)

    def max_flow(self, s: int, t: int, limit: int) -> int:
        """Dinic's algorithm, stopping once the flow reaches ``limit``."""
        flow = 0
        head, to, cap = self.head, self.to, self.cap
        while flow < limit:
            level = [-1] * len(head)
            level[s] = 0
            q = deque([s])
            while q:
                u = q.popleft()
                for a in head[u]:
                    if cap[a] > 0 and level[to[a]] < 0:
                        level[to[a]] = level[u] + 1
                        q.append(to[a])
            if level[t] < 0:
                break
            it = [0] * len(head)

            def push(u: int) -> bool:
                if u == t:
                    return True
                arcs = head[u]
                while it[u] < len(arcs):
                    a = arcs[it[u]]
                    v = to[a]
                    if cap[a] > 0 and level[v] == level[u] + 1 and push(v):
                        cap[a] -= 1
                        cap[a ^ 1] += 1
                        return True
                    it[u] += 1
                return False

            while flow < limit and push(s):
                flow += 1
        return flow


def local_vertex_connectivity(g: SimpleGraph, s: int, t: int, limit: int | None = None) -> int:
    """Maximum number of internally disjoint s-t paths for non-adjacent s, t."""
    if g.has_edge(s, t) or s == t:
        raise ValueError("local connectivity needs distinct non-adjacent vertices")
    n = g.n
    big = n + 1
    net = _FlowNet(2 * n)
    for v in range(n):
        net.add(2 * v, 2 * v + 1, big if v in (s, t) else 1)
    for u, v in g.edges():
        net.add(2 * u + 1, 2 * v, 1)
        net.add(2 * v + 1, 2 * u, 1)
    return net.max_flow(2 * s + 1, 2 * t, big if limit is None else limit)


def vertex_connectivity(g: SimpleGraph, cap: int = DEFAULT_CAPS.solver_cap) -> int:
    """kappa(g); 0 for disconnected or one-vertex graphs, n-1 for K_n."""
    _check_cap("vertex_connectivity", g, cap)
    n = g.n
    if n <= 1 or not is_connected(g):
        return 0
    deg = g.degrees()
    if min(deg) == n - 1:
        return n - 1
    k = min(deg)
    # A minimum separator misses one of the first k+1 vertices; that vertex and a
    # later vertex on the far side give the minimum.
    i = 0
    while i <= k and i < n:
        for j in range(i + 1, n):
            if g.has_edge(i, j):
                continue
            # common neighbours are internally disjoint i-j paths, so they bound
            # the local connectivity from below
            if (g.adj[i] & g.adj[j]).bit_count() >= k:
                continue
            k = min(k, local_vertex_connectivity(g, i, j, limit=k))
        i += 1
    return k


# ---------------------------------------------------------------------------
# cut vertices and cut edges

def _lowlink(g: SimpleGraph):
    n = g.n
    disc = [-1] * n
    low = [0] * n
    cut_v: set[int] = set()
    cut_e: list[tuple[int, int]] = []
    timer = 0
    for root in range(n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = timer
        timer += 1
        children = 0
        stack = [(root, -1, iter(g.neighbors(root)))]
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] < 0:
                    disc[w] = low[w] = timer
                    timer += 1
                    if u == root:
                        children += 1
                    stack.append((w, u, iter(g.neighbors(w))))
                    advanced = True
                    break
                if w != parent:
                    low[u] = min(low[u], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent >= 0:
                low[parent] = min(low[parent], low[u])
                if low[u] > disc[parent]:
                    cut_e.append((min(parent, u), max(parent, u)))
                if parent != root and low[u] >= disc[parent]:
                    cut_v.add(parent)
        if children >= 2:
            cut_v.add(root)
    return sorted(cut_v), sorted(cut_e)


def cut_vertices(g: SimpleGraph) -> list[int]:
    return _lowlink(g)[0]


def cut_edges(g: SimpleGraph) -> list[tuple[int, int]]:
    return _lowlink(g)[1]


def is_two_connected(g: SimpleGraph) -> bool:
    return g.n >= 3 and is_connected(g) and not cut_vertices(g)


# ---------------------------------------------------------------------------
# Hamiltonicity

def _twin_obstruction(g: SimpleGraph) -> bool:
    """True if some class of false twins outnumbers its common neighbourhood.

    Deleting that neighbourhood leaves more components than deleted vertices,
    which no Hamiltonian graph allows.
    """
    classes: dict[int, int] = {}
    for v, m in enumerate(g.adj):
        classes[m] = classes.get(m, 0) + 1
    return any(size > nb.bit_count() for nb, size in classes.items())


def hamiltonian_cycle(g: SimpleGraph, cap: int = DEFAULT_CAPS.hamiltonian_cap) -> list[int] | None:
    """A Hamiltonian cycle as a vertex list (without repeating the start), or None."""
    _check_cap("is_hamiltonian", g, cap)
    n, adj = g.n, g.adj
    if n <= 2:
        return None
    if min(g.degrees()) < 2 or not is_connected(g) or cut_vertices(g) or _twin_obstruction(g):
        return None
    full = g.full_mask
    start = min(range(n), key=lambda v: (g.degree(v), v))
    path = [start]

    def feasible(visited: int, last: int) -> bool:
        free = full & ~visited
        ends = (1 << last) | (1 << start)
        for u in bits(free):
            if (adj[u] & (free | ends)).bit_count() < 2:
                return False
        # the unvisited vertices must be reachable from the path end
        seen = frontier = 1 << last
        allowed = free | (1 << last)
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= adj[v]
            frontier = nxt & allowed & ~seen
            seen |= frontier
        return seen & free == free

    def extend(visited: int) -> bool:
        last = path[-1]
        if visited == full:
            return bool(adj[last] >> start & 1)
        cand = adj[last] & ~visited
        if not cand:
            return False
        free = full & ~visited
        order = sorted(bits(cand), key=lambda w: ((adj[w] & free).bit_count(), w))
        for w in order:
            nv = visited | (1 << w)
            if nv != full and not feasible(nv, w):
                continue
            path.append(w)
            if extend(nv):
                return True
            path.pop()
        return False

    return list(path) if extend(1 << start) else None


def is_hamiltonian(g: SimpleGraph, cap: int = DEFAULT_CAPS.hamiltonian_cap) -> bool:
    return hamiltonian_cycle(g, cap) is not None


# ---------------------------------------------------------------------------
# perfectness via odd holes and odd antiholes

def _reduce_for_holes(g: SimpleGraph) -> SimpleGraph:
    """Drop vertices that cannot lie on a hole of length >= 5 in g or its complement.

    Universal and isolated vertices are never on such a cycle, and of two twins
    (equal open or closed neighbourhoods) at most one can be, with either
    choice equivalent.
    """
    from .graph_core import induced_subgraph

    while True:
        n, adj = g.n, g.adj
        full = g.full_mask
        drop = set()
        seen_open: dict[int, int] = {}
        seen_closed: dict[int, int] = {}
        for v in range(n):
            m = adj[v]
            if m == 0 or m == full & ~(1 << v):
                drop.add(v)
                continue
            closed = m | (1 << v)
            if m in seen_open or closed in seen_closed:
                drop.add(v)
                continue
            seen_open[m] = v
            seen_closed[closed] = v
        if not drop:
            return g
        g = induced_subgraph(g, [v for v in range(n) if v not in drop])


def find_odd_hole(g: SimpleGraph) -> list[int] | None:
    """An induced odd cycle of length >= 5 (vertex list), or None.

    Grows induced paths from each start vertex ``s`` through vertices above
    ``s`` only, so every hole is found from its smallest vertex.
    """
    adj = g.adj

    def grow(s: int, above: int, path: list[int], blocked: int, on_path: int):
        last = path[-1]
        for w in bits(adj[last] & above & ~on_path & ~blocked):
            if adj[w] >> s & 1:
                length = len(path) + 1
                if length >= 5 and length % 2:
                    return path + [w]
                continue
            path.append(w)
            found = grow(s, above, path, blocked | adj[last], on_path | (1 << w))
            path.pop()
            if found:
                return found
        return None

    for s in range(g.n):
        above = g.full_mask & ~((1 << (s + 1)) - 1)
        for p1 in bits(adj[s] & above):
            found = grow(s, above, [s, p1], 0, (1 << s) | (1 << p1))
            if found:
                return found
    return None


def odd_hole_or_antihole(g: SimpleGraph, cap: int = DEFAULT_CAPS.perfect_cap):
    """``("hole", cycle)`` or ``("antihole", cycle)`` in original ids, or None."""
    _check_cap("is_perfect", g, cap)
    labelled = SimpleGraph(g.n, g.adj, tuple(str(v) for v in range(g.n)))
    h = _reduce_for_holes(labelled)
    ids = [int(x) for x in h.labels] if h.labels else []
    for kind, graph in (("hole", h), ("antihole", complement(h))):
        cyc = find_odd_hole(graph)
        if cyc:
            return kind, [ids[v] for v in cyc]
    return None


def is_perfect(g: SimpleGraph, cap: int = DEFAULT_CAPS.perfect_cap) -> bool:
    return odd_hole_or_antihole(g, cap) is None


# ---------------------------------------------------------------------------
# report

SKIPPED = "skipped"


@dataclass
class InvariantReport:
    n: int
    clique_number: int | None = None
    chromatic_number: int | None = None
    independence_number: int | None = None
    vertex_connectivity: int | None = None
    girth: float | None = None
    diameter: float | None = None
    component_count: int | None = None
    cut_vertices: list | None = None
    cut_edges: list | None = None
    is_hamiltonian: bool | None = None
    is_perfect: bool | None = None
    method_notes: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        out = {}
        for k, v in asdict(self).items():
            if isinstance(v, float) and math.isinf(v):
                v = "inf"
            elif v is None and k in self.method_notes:
                v = SKIPPED
            out[k] = v
        return out

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_dict(cls, doc: dict) -> "InvariantReport":
        vals = {}
        for k, v in doc.items():
            if v == "inf":
                v = INF
            elif v == SKIPPED:
                v = None
            elif k == "cut_edges" and v is not None:
                v = [tuple(e) for e in v]
            vals[k] = v
        return cls(**vals)


def compute_report(g: SimpleGraph, caps: Caps = DEFAULT_CAPS, labels: bool = False) -> InvariantReport:
    """Compute every invariant, recording ``exact`` or ``skipped(cap=..)`` per field."""
    rep = InvariantReport(n=g.n)
    name = g.label if labels else (lambda v: v)

    def run(fieldname, fn, cap):
        try:
            setattr(rep, fieldname, fn())
            rep.method_notes[fieldname] = "exact"
        except CapExceeded as exc:
            rep.method_notes[fieldname] = f"skipped(cap={exc.cap})"

    run("clique_number", lambda: clique_number(g, caps.solver_cap), caps.solver_cap)
    run("chromatic_number", lambda: chromatic_number(g, caps.solver_cap), caps.solver_cap)
    run("independence_number", lambda: independence_number(g, caps.solver_cap), caps.solver_cap)
    run("vertex_connectivity", lambda: vertex_connectivity(g, caps.solver_cap), caps.solver_cap)
    run("girth", lambda: girth(g), None)
    run("diameter", lambda: diameter(g), None)
    run("component_count", lambda: len(component_masks(g)), None)
    cv, ce = _lowlink(g)
    run("cut_vertices", lambda: [name(v) for v in cv], None)
    run("cut_edges", lambda: [(name(u), name(v)) for u, v in ce], None)
    run("is_hamiltonian", lambda: is_hamiltonian(g, caps.hamiltonian_cap), caps.hamiltonian_cap)
    run("is_perfect", lambda: is_perfect(g, caps.perfect_cap), caps.perfect_cap)
    return rep
