"""Power graphs and reduced power graphs of a finite group.

Vertices are group elements.  Proper variants drop the identity, so vertex
``i`` of a proper graph is element ``i + 1``; labels keep the element names.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd

from .graph_core import DiGraph, SimpleGraph
from .group_core import FiniteGroup, GroupError

POWER = "power"
REDUCED = "reduced"


class UnsupportedFamily(GroupError):
    pass


@dataclass(frozen=True)
class GraphVariant:
    family: str = REDUCED
    directed: bool = False
    proper: bool = False

    def __post_init__(self):
        if self.family not in (POWER, REDUCED):
            raise ValueError(f"unknown graph family {self.family!r}")

    def vertex_count(self, g: FiniteGroup) -> int:
        return g.order - 1 if self.proper else g.order

    @property
    def symbol(self) -> str:
        base = "RP" if self.family == REDUCED else "P"
        return ("->" if self.directed else "") + base + ("*" if self.proper else "")


RP = GraphVariant(REDUCED)
RP_STAR = GraphVariant(REDUCED, proper=True)
P = GraphVariant(POWER)
P_STAR = GraphVariant(POWER, proper=True)


def element_of(variant: GraphVariant, vertex: int) -> int:
    return vertex + 1 if variant.proper else vertex


def vertex_of(variant: GraphVariant, element: int) -> int:
    if variant.proper and element == 0:
        raise ValueError("identity is not a vertex of a proper graph")
    return element - 1 if variant.proper else element


def _class_mask(g: FiniteGroup, u: int) -> int:
    lat = g.lattice
    m = 0
    for x in lat.classes[lat.class_of[u]]:
        m |= 1 << x
    return m


def build(g: FiniteGroup, variant: GraphVariant = RP) -> SimpleGraph | DiGraph:
    """Construct the power or reduced power graph (or digraph) of ``g``."""
    if variant.family == POWER:
        out = [m & ~(1 << u) for u, m in enumerate(g.lattice.masks)]
    else:
        out = [g.lattice.masks[u] & ~_class_mask(g, u) for u in range(g.order)]
    names = tuple(g.name(x) for x in range(g.order))
    if variant.proper:
        out = [m >> 1 for m in out[1:]]
        names = names[1:]
    n = len(out)
    if variant.directed:
        return DiGraph(n, tuple(out), names)
    adj = list(out)
    for u in range(n):
        m = out[u]
        while m:
            low = m & -m
            adj[low.bit_length() - 1] |= 1 << u
            m ^= low
    return SimpleGraph(n, tuple(adj), names)


# ---------------------------------------------------------------------------
# closed-form structure for dihedral, dicyclic and semidihedral groups

@dataclass(frozen=True)
class KnownStructure:
    """Predicted shape of RP(G) for a metacyclic family, built from number theory only.

    ``graph`` is the predicted RP(G) on element indices (identity 0, a^i at i,
    a^i b at m + i).  ``parts`` names the vertex blocks used in the expression.
    """

    family: str
    n: int
    expression: str
    parts: dict
    graph: SimpleGraph


def _cyclic_proper_edges(m: int, offset: int = 0):
    """Edges of RP*(Z_m) by the gcd rule: <i> is strictly inside <j> iff gcd(j,m) strictly divides gcd(i,m)."""
    edges = []
    for i in range(1, m):
        di = gcd(i, m)
        for j in range(i + 1, m):
            dj = gcd(j, m)
            if di != dj and (di % dj == 0 or dj % di == 0):
                edges.append((i + offset, j + offset))
    return edges


_FAMILY = re.compile(r"^(SD|D|Q)(\d+)$")


def decompose_known(g: FiniteGroup) -> KnownStructure:
    mt = _FAMILY.match(g.label)
    if not mt:
        raise UnsupportedFamily(f"no closed-form structure for {g.label!r}")
    fam, order = mt.group(1), int(mt.group(2))
    if order != g.order:
        raise UnsupportedFamily(f"label {g.label!r} does not match order {g.order}")
    m = order // 2                    # size of <a>
    rotations = list(range(1, m))
    outer = list(range(m, 2 * m))
    edges = [(0, v) for v in range(1, order)]
    edges += _cyclic_proper_edges(m)
    if fam == "D":
        n = m
        expr = f"K_1 + (RP*(Z_{n}) ∪ K̄_{n})"
        if not _cyclic_proper_edges(n):
            expr += f" = K_1 + K̄_{2 * n - 1}"
        parts = {"identity": [0], "rotations": rotations, "reflections": outer}
    elif fam == "Q":
        n = order // 4
        center = n                    # a^n, the unique involution
        edges += [(center, v) for v in outer]
        expr = (f"K_1 + (RP*(Z_{2 * n}) with a^{n} joined to {n} classes "
                f"{{a^i b, a^(i+{n}) b}} of order-4 elements)")
        parts = {"identity": [0], "rotations": rotations, "central_involution": [center],
                 "order4_outer": outer}
    else:
        n = order // 8
        center = 2 * n                # a^{2n}
        odd = [m + k for k in range(m) if k % 2]
        even = [m + k for k in range(m) if k % 2 == 0]
        edges += [(center, v) for v in odd]
        expr = (f"K_1 + (RP*(Z_{4 * n}) with a^{2 * n} joined to {2 * n} order-4 a^k b (k odd) "
                f"∪ K̄_{2 * n} involutions a^k b (k even))")
        parts = {"identity": [0], "rotations": rotations, "central_involution": [center],
                 "order4_outer": odd, "involution_outer": even}
    graph = SimpleGraph.from_edges(order, edges, tuple(g.name(x) for x in range(order)))
    return KnownStructure(fam, n, expr, parts, graph)
