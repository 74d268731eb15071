"""Brute-force reference implementations used only by the tests.

Everything here works from first principles (Python sets, permutations,
subset enumeration) and shares no code with the package solvers.
"""
from __future__ import annotations

import itertools
import math

import networkx as nx


# --- groups -----------------------------------------------------------------

def powers(table, x):
    """Element set of <x> by repeated multiplication, from the raw table."""
    seen = {0}
    y = x
    while y not in seen:
        seen.add(y)
        y = table[y][x]
    return frozenset(seen)


def element_order(table, x):
    return len(powers(table, x))


def is_group_table(table) -> bool:
    n = len(table)
    rng = range(n)
    if any(table[0][j] != j or table[j][0] != j for j in rng):
        return False
    if any(sorted(row) != list(rng) for row in table):
        return False
    if any(sorted(table[i][j] for i in rng) != list(rng) for j in rng):
        return False
    return all(table[table[a][b]][c] == table[a][table[b][c]]
               for a in rng for b in rng for c in rng)


def brute_edges(table, family: str, proper: bool) -> set[tuple[int, int]]:
    """Edge set of P / RP (optionally without identity) by direct set inclusion."""
    n = len(table)
    subs = [powers(table, x) for x in range(n)]
    start = 1 if proper else 0
    edges = set()
    for u in range(start, n):
        for v in range(u + 1, n):
            a, b = subs[u], subs[v]
            if family == "power":
                hit = a <= b or b <= a
            else:
                hit = a < b or b < a
            if hit:
                edges.add((u - start, v - start))
    return edges


def brute_arcs(table, family: str, proper: bool) -> set[tuple[int, int]]:
    n = len(table)
    subs = [powers(table, x) for x in range(n)]
    start = 1 if proper else 0
    arcs = set()
    for u in range(start, n):
        for v in range(start, n):
            if u == v:
                continue
            hit = v in subs[u] if family == "power" else subs[v] < subs[u]
            if hit:
                arcs.add((u - start, v - start))
    return arcs


def is_nilpotent_brute(table) -> bool:
    """Nilpotent iff it is the direct product of its Sylow subgroups, i.e. elements of
    coprime order commute and the p-elements number exactly the p-part of |G|."""
    n = len(table)
    orders = [element_order(table, x) for x in range(n)]
    for x in range(n):
        for y in range(n):
            if math.gcd(orders[x], orders[y]) == 1 and table[x][y] != table[y][x]:
                return False
    p_part = {}
    m = n
    p = 2
    while m > 1:
        while m % p == 0:
            p_part[p] = p_part.get(p, 1) * p
            m //= p
        p += 1
    for p, size in p_part.items():
        count = sum(1 for o in orders if o == 1 or all(q == p for q in _primes(o)))
        if count != size:
            return False
    return True


def _primes(n):
    out, p = [], 2
    while n > 1:
        while n % p == 0:
            out.append(p)
            n //= p
        p += 1
    return out


# --- graphs -----------------------------------------------------------------

def to_nx(g) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def adjacency_sets(g):
    return [set(g.neighbors(v)) for v in range(g.n)]


def brute_clique_number(g) -> int:
    adj = adjacency_sets(g)
    for k in range(g.n, 0, -1):
        for sub in itertools.combinations(range(g.n), k):
            if all(b in adj[a] for a, b in itertools.combinations(sub, 2)):
                return k
    return 0


def brute_independence_number(g) -> int:
    adj = adjacency_sets(g)
    for k in range(g.n, 0, -1):
        for sub in itertools.combinations(range(g.n), k):
            if all(b not in adj[a] for a, b in itertools.combinations(sub, 2)):
                return k
    return 0


def brute_chromatic_number(g) -> int:
    """Smallest k admitting a proper colouring, by exhaustive backtracking in vertex order.

    Colours are introduced in increasing order (vertex i uses at most one new
    colour) which removes permuted copies but still tries every colouring class.
    """
    if g.n == 0:
        return 0
    adj = adjacency_sets(g)

    def colour(i, col, used, k):
        if i == g.n:
            return True
        for c in range(min(k, used + 1)):
            if all(col[u] != c for u in adj[i] if u < i):
                col[i] = c
                if colour(i + 1, col, max(used, c + 1), k):
                    return True
        return False

    for k in range(1, g.n + 1):
        if colour(0, [None] * g.n, 0, k):
            return k
    return g.n


def brute_hamiltonian(g) -> bool:
    if g.n <= 2:
        return False
    adj = adjacency_sets(g)
    for perm in itertools.permutations(range(1, g.n)):
        cyc = (0,) + perm
        if all(cyc[i + 1] in adj[cyc[i]] for i in range(g.n - 1)) and 0 in adj[cyc[-1]]:
            return True
    return False


def _components_without(adj, n, removed):
    left = [v for v in range(n) if v not in removed]
    seen, comps = set(), 0
    for s in left:
        if s in seen:
            continue
        comps += 1
        stack = [s]
        seen.add(s)
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in seen and w not in removed:
                    seen.add(w)
                    stack.append(w)
    return comps, len(left)


def brute_vertex_connectivity(g) -> int:
    adj = adjacency_sets(g)
    n = g.n
    for k in range(n):
        for cut in itertools.combinations(range(n), k):
            comps, left = _components_without(adj, n, set(cut))
            if comps != 1 or left <= 1:
                return k
    return max(n - 1, 0)


def brute_cut_vertices(g) -> list[int]:
    adj = adjacency_sets(g)
    base, _ = _components_without(adj, g.n, set())
    out = []
    for v in range(g.n):
        c, _ = _components_without(adj, g.n, {v})
        if c > base:
            out.append(v)
    return out


def brute_is_perfect(g) -> bool:
    """Check omega = chi on every induced subgraph (definition of perfectness)."""
    from redpower.graph_core import induced_subgraph
    for k in range(1, g.n + 1):
        for sub in itertools.combinations(range(g.n), k):
            h = induced_subgraph(g, sub)
            if brute_clique_number(h) != brute_chromatic_number(h):
                return False
    return True
