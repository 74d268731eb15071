"""Machine checks T1..T25 for reduced power graphs, evaluated over a group catalog.

Each check compares a formula side (element orders, lattice counts, number
theory from ``group_core``) against a graph side (graphs from ``powergraph``
and solvers from ``invariants``).  Results are plain data; a failing check
always carries a witness.
"""
from __future__ import annotations

import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from pathlib import Path
from typing import Any, Callable, Iterable, Sequence

from . import invariants as inv
from .graph_core import (INF, SimpleGraph, classify_shape, component_masks, diameter, find_claw,
                         girth, is_connected, is_triangle_free)
from .group_core import (FiniteGroup, abelian_invariants, big_omega, build_group, cyclic,
                         dicyclic, dihedral, euler_phi, factorize,
                         from_cayley_table, is_abelian, is_cyclic, is_nilpotent, is_prime,
                         prime_power, semidihedral, sylow_structure)
from .powergraph import P, P_STAR, RP, RP_STAR, build, decompose_known, element_of

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"


# ---------------------------------------------------------------------------
# data types

@dataclass
class Claim:
    """One sub-statement of a check: expected (formula side) vs computed (graph side)."""

    name: str
    expected: Any
    computed: Any
    ok: bool
    witness: Any = None
    note: str = ""


def eq(name: str, expected, computed, witness=None, note: str = "") -> Claim:
    return Claim(name, expected, computed, expected == computed, witness, note)


@dataclass(frozen=True)
class TheoremCheck:
    id: str
    description: str
    anchor: str
    applicability: Callable[["GroupContext"], str | None]
    evaluate: Callable[["GroupContext"], list[Claim]]


@dataclass
class TheoremCheckResult:
    check_id: str
    group: str
    status: str
    expected: Any = None
    computed: Any = None
    witness: Any = None
    reason: str = ""

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_dict(self) -> dict:
        return {"check": self.check_id, "group": self.group, "status": self.status,
                "expected": _jsonable(self.expected), "computed": _jsonable(self.computed),
                "witness": _jsonable(self.witness), "reason": self.reason}


def _jsonable(v):
    if isinstance(v, float) and math.isinf(v):
        return "inf"
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple, set, frozenset)):
        items = sorted(v, key=repr) if isinstance(v, (set, frozenset)) else v
        return [_jsonable(x) for x in items]
    return v


@dataclass
class SuiteReport:
    results: list[TheoremCheckResult]
    checks: list[str]
    groups: list[str]
    caps: inv.Caps = inv.DEFAULT_CAPS

    def count(self, status: str) -> int:
        return sum(r.status == status for r in self.results)

    @property
    def summary(self) -> dict:
        return {"checks": len(self.checks), "groups": len(self.groups),
                "total": len(self.results), PASS: self.count(PASS),
                FAIL: self.count(FAIL), SKIPPED: self.count(SKIPPED)}

    @property
    def failures(self) -> list[TheoremCheckResult]:
        return [r for r in self.results if r.status == FAIL]

    @property
    def ok(self) -> bool:
        return not self.failures

    def by_check(self, check_id: str) -> list[TheoremCheckResult]:
        return [r for r in self.results if r.check_id == check_id]

    def to_dict(self) -> dict:
        return {"summary": self.summary,
                "caps": {"solver_cap": self.caps.solver_cap,
                         "hamiltonian_cap": self.caps.hamiltonian_cap,
                         "perfect_cap": self.caps.perfect_cap},
                "results": [r.to_dict() for r in self.results]}

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    def to_table(self, verbose: bool = False) -> str:
        lines = []
        for cid in self.checks:
            rows = self.by_check(cid)
            n_pass = sum(r.status == PASS for r in rows)
            n_fail = sum(r.status == FAIL for r in rows)
            n_skip = sum(r.status == SKIPPED for r in rows)
            lines.append(f"{cid:<4} pass={n_pass:<4} fail={n_fail:<4} skipped={n_skip:<4} "
                         f"{CHECKS[cid].description}")
            for r in rows:
                if r.status == FAIL:
                    lines.append(f"     FAIL {r.group}: witness={_jsonable(r.witness)}")
                elif verbose and r.reason:
                    lines.append(f"     {r.status} {r.group}: {r.reason}")
        s = self.summary
        lines.append(f"total={s['total']} pass={s[PASS]} fail={s[FAIL]} skipped={s[SKIPPED]}")
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# per-group cache

_SOLVERS: dict[str, Callable[[SimpleGraph, inv.Caps], Any]] = {
    "omega": lambda g, c: inv.clique_number(g, c.solver_cap),
    "chi": lambda g, c: inv.chromatic_number(g, c.solver_cap),
    "alpha": lambda g, c: inv.independence_number(g, c.solver_cap),
    "kappa": lambda g, c: inv.vertex_connectivity(g, c.solver_cap),
    "ham": lambda g, c: inv.is_hamiltonian(g, c.hamiltonian_cap),
    "perfect": lambda g, c: inv.is_perfect(g, c.perfect_cap),
    "cutv": lambda g, c: inv.cut_vertices(g),
    "cute": lambda g, c: inv.cut_edges(g),
    "two_conn": lambda g, c: inv.is_two_connected(g),
    "comps": lambda g, c: len(component_masks(g)),
    "connected": lambda g, c: is_connected(g),
    "diam": lambda g, c: diameter(g),
    "girth": lambda g, c: girth(g),
    "tri_free": lambda g, c: is_triangle_free(g),
    "shape": lambda g, c: classify_shape(g),
}


class GroupContext:
    """Lazily computed graphs and invariants of one group, shared by all checks."""

    def __init__(self, g: FiniteGroup, caps: inv.Caps = inv.DEFAULT_CAPS):
        self.g = g
        self.caps = caps
        self._inv: dict[tuple[str, str], Any] = {}

    @cached_property
    def graphs(self) -> dict[str, SimpleGraph]:
        return {"RP": build(self.g, RP), "RP*": build(self.g, RP_STAR),
                "P": build(self.g, P), "P*": build(self.g, P_STAR)}

    def inv(self, graph: str, what: str):
        key = (graph, what)
        if key not in self._inv:
            self._inv[key] = _SOLVERS[what](self.graphs[graph], self.caps)
        return self._inv[key]

    @property
    def n(self) -> int:
        return self.g.order

    @property
    def orders(self) -> tuple[int, ...]:
        return self.g.lattice.orders

    @cached_property
    def pi_e(self) -> frozenset[int]:
        return frozenset(self.orders)

    @cached_property
    def omega_max(self) -> int:
        return max(big_omega(o) for o in self.orders)

    @cached_property
    def cyclic(self) -> bool:
        return is_cyclic(self.g)

    @cached_property
    def cyclic_prime_power(self) -> tuple[int, int] | None:
        """``(p, k)`` if G is cyclic of order p^k."""
        return prime_power(self.n) if self.cyclic else None

    @cached_property
    def p_group(self) -> tuple[int, int] | None:
        return prime_power(self.n)

    @cached_property
    def involutions(self) -> int:
        return self.orders.count(2)

    @cached_property
    def generalized_quaternion(self) -> bool:
        return (self.p_group is not None and self.p_group[0] == 2 and self.n >= 8
                and not self.cyclic and self.involutions == 1)

    @cached_property
    def is_q8(self) -> bool:
        return self.n == 8 and self.generalized_quaternion

    @cached_property
    def is_zpq(self) -> bool:
        f = factorize(self.n)
        return self.cyclic and len(f) == 2 and all(e == 1 for e in f.values())

    @cached_property
    def nilpotent(self) -> bool:
        return is_nilpotent(self.g)

    def vertex_element(self, graph: str, v: int) -> int:
        return element_of(RP_STAR if graph.endswith("*") else RP, v)

    def names(self, graph: str, vs: Iterable[int]) -> list[str]:
        return [self.g.name(self.vertex_element(graph, v)) for v in vs]


# ---------------------------------------------------------------------------
# reference invariants of cyclic groups (T3, T22)

@lru_cache(maxsize=None)
def _cyclic_ref(n: int, graph: str, what: str, caps: inv.Caps) -> Any:
    return GroupContext(cyclic(n), caps).inv(graph, what)


# ---------------------------------------------------------------------------
# applicability predicates

def _always(ctx: GroupContext) -> str | None:
    return None


def _noncyclic(ctx):
    return "cyclic group" if ctx.cyclic else None


def _cyclic_only(ctx):
    return None if ctx.cyclic else "not cyclic"


def _abelian_only(ctx):
    return None if is_abelian(ctx.g) else "not abelian"


def _p_group_only(ctx):
    return None if ctx.p_group else "not a p-group"


def _order_at_least_3(ctx):
    return None if ctx.n >= 3 else "RP* has a single vertex"


def _perfect_cap(ctx):
    return None if ctx.n <= ctx.caps.perfect_cap else f"cap: order {ctx.n} > perfect_cap {ctx.caps.perfect_cap}"


_KNOWN_CTORS = {"D": dihedral, "Q": dicyclic, "SD": semidihedral}


def _known_family(ctx) -> str | None:
    try:
        ks = decompose_known(ctx.g)
    except Exception:
        ks = None
    if ks is not None:
        if _KNOWN_CTORS[ks.family](ctx.n).table == ctx.g.table:
            return ks.family
    return None


def _families_or_p_groups(ctx):
    if _known_family(ctx) or ctx.p_group:
        return None
    return "not D_2n, Q_4n, SD_8n or a p-group"


# ---------------------------------------------------------------------------
# checks

def _prime_chain(ctx: GroupContext) -> list[int]:
    """x_1, ..., x_Omega: x_i = x^(o(x)/(q_1...q_i)) for the ordered prime factors of o(x)."""
    g = ctx.g
    x = max(range(ctx.n), key=lambda y: (big_omega(ctx.orders[y]), -y))
    o = ctx.orders[x]
    primes = [p for p, e in sorted(factorize(o).items()) for _ in range(e)] if o > 1 else []
    chain, prod = [], 1
    for q in primes:
        prod *= q
        chain.append(g.power(x, o // prod))
    return chain


def t1(ctx):
    graph = ctx.graphs["RP*"]
    colour = [big_omega(ctx.orders[v + 1]) for v in range(graph.n)]
    clash = next(((u, v) for u, v in graph.edges() if colour[u] == colour[v]), None)
    chain = _prime_chain(ctx)
    levels = [big_omega(ctx.orders[x]) for x in chain]
    clique = all(graph.has_edge(a - 1, b - 1) for i, a in enumerate(chain) for b in chain[i + 1:])
    names = [ctx.g.name(x) for x in chain]
    return [
        eq("X_i classes colour RP* properly", None,
           ctx.names("RP*", clash) if clash else None, witness=clash),
        eq("number of non-empty classes", ctx.omega_max, len(set(colour))),
        eq("chain levels Omega(o(x_i)) = i", list(range(1, ctx.omega_max + 1)), levels, witness=names),
        eq("chain is a clique of RP*", True, clique, witness=names),
    ]


def t2(ctx):
    w = ctx.omega_max
    return [
        eq("omega(RP*)", w, ctx.inv("RP*", "omega")),
        eq("chi(RP*)", w, ctx.inv("RP*", "chi")),
        eq("omega(RP)", w + 1, ctx.inv("RP", "omega")),
        eq("chi(RP)", w + 1, ctx.inv("RP", "chi")),
    ]


def t3(ctx):
    claims = []
    for graph in ("RP", "RP*"):
        for what in ("omega", "chi"):
            mine = ctx.inv(graph, what)
            ref = _cyclic_ref(ctx.n, graph, what, ctx.caps)
            claims.append(Claim(f"{what}({graph}(G)) < {what}({graph}(Z_{ctx.n}))",
                                f"< {ref}", mine, mine < ref, witness=(mine, ref)))
    return claims


def t4(ctx):
    graph = ctx.graphs["RP*"]
    bip = ctx.inv("RP*", "shape").is_bipartite and graph.edge_count > 0
    return [eq("RP* bipartite with an edge iff Omega_max = 2", ctx.omega_max == 2, bip)]


def t5(ctx):
    return [
        eq("RP* triangle-free iff Omega(o) <= 2 for all orders", ctx.omega_max <= 2,
           ctx.inv("RP*", "tri_free")),
        eq("RP triangle-free iff every non-identity element has prime order",
           all(o == 1 or is_prime(o) for o in ctx.pi_e), ctx.inv("RP", "tri_free")),
    ]


def t6(ctx):
    parts = ctx.inv("RP*", "shape").multipartite
    rp_parts = ctx.inv("RP", "shape").multipartite
    cpp = ctx.cyclic_prime_power
    named = ctx.is_q8 or ctx.is_zpq or (cpp is not None and cpp[1] == 2)
    k_star = len(parts) if parts is not None else None
    k_rp = len(rp_parts) if rp_parts is not None else None
    claims = [
        eq("RP* complete bipartite iff G in {Z_p^2, Z_pq, Q_8}", named, k_star == 2,
           witness=parts),
        eq("RP* complete k-partite (k>=3): k = exponent of Z_p^k",
           cpp[1] if cpp and cpp[1] >= 3 else None,
           k_star if k_star is not None and k_star >= 3 else None, witness=parts),
    ]
    if cpp:
        p, k = cpp
        claims.append(eq("part sizes of RP*(Z_p^k)",
                         sorted(p ** i * (p - 1) for i in range(k)),
                         list(parts) if parts is not None else None))
    expected_rp = None
    note = ""
    if cpp and cpp[1] >= 2:
        expected_rp = cpp[1] + 1
    elif ctx.is_zpq or ctx.is_q8:
        expected_rp = 3
        note = "RP(G) complete 3-partite for Z_pq / Q_8, outside the Z_{p^(k-1)} family"
    claims.append(eq("RP complete k-partite (k>=3) iff RP* complete (k-1)-partite", expected_rp,
                     k_rp if k_rp is not None and k_rp >= 3 else None, witness=rp_parts, note=note))
    return claims


def t7(ctx):
    shape = ctx.inv("RP*", "shape")
    named = (ctx.cyclic and ctx.n == 4) or ctx.is_q8
    return [
        eq("RP* tree iff RP* star", shape.is_tree, shape.is_star),
        eq("RP* star iff G in {Z_4, Q_8}", named, shape.is_star),
    ]


def _orders_in_4_or_prime(ctx) -> bool:
    return all(o in (1, 4) or is_prime(o) for o in ctx.pi_e)


def t8(ctx):
    w = ctx.omega_max
    if w >= 3:
        expected = 3
    elif w == 2 and not _orders_in_4_or_prime(ctx):
        expected = 4
    else:
        expected = INF
    return [
        eq("girth(RP*)", expected, ctx.inv("RP*", "girth")),
        eq("girth(RP) = 3 iff RP not triangle-free", not ctx.inv("RP", "tri_free"),
           ctx.inv("RP", "girth") == 3),
    ]


def t9(ctx):
    claims = []
    for graph in ("RP", "RP*"):
        hole = inv.odd_hole_or_antihole(ctx.graphs[graph], ctx.caps.perfect_cap)
        claims.append(eq(f"{graph} perfect", None,
                         (hole[0], ctx.names(graph, hole[1])) if hole else None))
        claims.append(eq(f"omega({graph}) = chi({graph})", ctx.inv(graph, "omega"),
                         ctx.inv(graph, "chi")))
    return claims


def _prime_exponent_classification(ctx) -> bool:
    """p-group of exponent p, or non-nilpotent of order p^a q with element orders in {1, p, q}."""
    f = factorize(ctx.n)
    if len(f) == 1:
        p = next(iter(f))
        return ctx.pi_e <= {1, p}
    if len(f) == 2 and not ctx.nilpotent:
        for q, e in f.items():
            if e == 1 and ctx.pi_e <= {1, *f}:
                return True
    return False


def t10(ctx):
    prime_only = all(o == 1 or is_prime(o) for o in ctx.pi_e)
    return [
        eq("RP* acyclic iff orders in {1,4} u primes", _orders_in_4_or_prime(ctx),
           ctx.inv("RP*", "shape").is_acyclic),
        eq("RP acyclic iff non-identity orders prime", prime_only,
           ctx.inv("RP", "shape").is_acyclic),
        eq("prime orders iff exponent-p p-group or non-nilpotent p^a q",
           prime_only, _prime_exponent_classification(ctx)),
    ]


def t11(ctx):
    divs = abelian_invariants(ctx.g)
    elementary = len(set(divs)) == 1 and is_prime(divs[0])
    z4z2 = set(divs) <= {2, 4} and 4 in divs
    return [
        eq("RP* acyclic iff Z_p^n, Z_4^n or Z_4^m x Z_2^n", elementary or z4z2,
           ctx.inv("RP*", "shape").is_acyclic, witness=divs),
        eq("RP acyclic iff Z_p^n", elementary, ctx.inv("RP", "shape").is_acyclic, witness=divs),
    ]


def t12(ctx):
    claw = ctx.inv("RP", "shape").is_claw_free
    return [eq("RP claw-free iff G in {Z_2, Z_3, Z_4}", ctx.cyclic and ctx.n <= 4, claw)]


def t13(ctx):
    lat = ctx.g.lattice
    four = sorted({lat.masks[x] for x in range(ctx.n) if ctx.orders[x] == 4})
    trivial = all(a & b == 1 for i, a in enumerate(four) for b in four[i + 1:])
    expected = _orders_in_4_or_prime(ctx) and trivial
    claw_free = ctx.inv("RP*", "shape").is_claw_free
    witness = None if claw_free else ctx.names("RP*", find_claw(ctx.graphs["RP*"]))
    return [eq("RP* claw-free iff orders in {1,4} u primes and order-4 subgroups meet trivially",
               expected, claw_free, witness=witness)]


def t14(ctx):
    return [eq(f"{graph} is not a cycle", False, ctx.inv(graph, "shape").is_cycle)
            for graph in ("RP", "RP*")]


def t15(ctx):
    graph = ctx.graphs["RP*"]
    cut_r = set(ctx.inv("RP*", "cutv"))
    cut_p = set(ctx.inv("P*", "cutv"))
    bad = [v for v in range(graph.n) if graph.degree(v) >= 3 and (v in cut_r) != (v in cut_p)]
    return [eq("deg >= 3: cut vertex of RP* iff cut vertex of P*", [], ctx.names("RP*", bad))]


def t16(ctx):
    claims = []
    for graph in ("RP*", "P*"):
        bad = [v for v in ctx.inv(graph, "cutv") if ctx.orders[v + 1] != 2]
        claims.append(eq(f"cut vertices of {graph} have order 2", [], ctx.names(graph, bad)))
    return claims


def t17(ctx):
    cuts = ctx.inv("RP*", "cutv")
    return [eq("cyclic: RP* has a cut vertex iff G = Z_4", ctx.n == 4, bool(cuts),
               witness=ctx.names("RP*", cuts))]


def _edge_set_claim(ctx, graph: str, pred: Callable[[int], bool], name: str) -> Claim:
    g = ctx.graphs[graph]
    shift = 1 if graph.endswith("*") else 0
    expected = {(u, v) for u, v in g.edges() if pred(u + shift) or pred(v + shift)}
    computed = set(ctx.inv(graph, "cute"))
    diff = sorted(expected ^ computed)
    witness = [ctx.names(graph, e) for e in diff] or None
    return Claim(name, len(expected), len(computed), not diff, witness)


def t18(ctx):
    lat = ctx.g.lattice
    claims = [
        _edge_set_claim(ctx, "RP*", lambda x: ctx.orders[x] == 4 and lat.is_maximal(x),
                        "cut edges of RP* = edges at a maximal cyclic subgroup of order 4"),
        _edge_set_claim(ctx, "RP", lambda x: is_prime(ctx.orders[x]) and lat.is_maximal(x),
                        "cut edges of RP = edges at a maximal cyclic subgroup of prime order"),
    ]
    if ctx.cyclic:
        claims.append(eq("Z_n: RP* has a cut edge iff n = 4", ctx.n == 4, bool(ctx.inv("RP*", "cute"))))
        claims.append(eq("Z_n: RP has a cut edge iff n prime", is_prime(ctx.n), bool(ctx.inv("RP", "cute"))))
    return claims


def t19(ctx):
    n = ctx.n
    phi = euler_phi(n)
    k, ks = ctx.inv("RP", "kappa"), ctx.inv("RP*", "kappa")
    two_p = n % 2 == 0 and is_prime(n // 2)
    claims = []
    if 2 * phi + 1 >= n:
        claims.append(eq("kappa(RP) = n - phi(n)", n - phi, k))
        claims.append(eq("kappa(RP*) = n - phi(n) - 1", n - phi - 1, ks))
    else:
        claims.append(Claim("kappa(RP) >= phi(n) + 1", f">= {phi + 1}", k, k >= phi + 1))
        claims.append(Claim("kappa(RP*) >= phi(n)", f">= {phi}", ks, ks >= phi))
        if two_p:
            claims.append(eq("kappa(RP(Z_2p)) = phi(n) + 1", phi + 1, k))
            claims.append(eq("kappa(RP*(Z_2p)) = phi(n)", phi, ks))
    pp = ctx.cyclic_prime_power
    if pp:
        p, m = pp
        claims.append(eq("kappa(RP(Z_p^m)) = p^(m-1)", p ** (m - 1), k))
        claims.append(eq("kappa(RP*(Z_p^m)) = p^(m-1) - 1", p ** (m - 1) - 1, ks))
    return claims


def t20(ctx):
    a, a_star = ctx.inv("RP", "alpha"), ctx.inv("RP*", "alpha")
    claims = [eq("alpha(RP) = alpha(RP*)", a_star, a)]
    if ctx.cyclic:
        pp = ctx.cyclic_prime_power
        phi = euler_phi(ctx.n)
        if pp:
            p, m = pp
            claims.append(eq("alpha(RP*(Z_p^m)) = p^(m-1)(p-1)", p ** (m - 1) * (p - 1), a_star))
        else:
            claims.append(Claim("alpha(RP*(Z_n)) >= phi(n)", f">= {phi}", a_star, a_star >= phi))
            if ctx.is_zpq and ctx.n % 2:
                claims.append(eq("alpha(RP*(Z_pq)) = phi(pq), p, q odd", phi, a_star))
    return claims


def t21(ctx):
    p, k = ctx.p_group
    ham = ctx.inv("RP", "ham")
    claims = [eq("RP* not Hamiltonian", False, ctx.inv("RP*", "ham"))]
    if ctx.cyclic:
        claims.append(eq("RP(Z_p^n) Hamiltonian iff p = 2, n >= 2", p == 2 and k >= 2, ham))
    else:
        claims.append(eq("non-cyclic p-group: RP not Hamiltonian", False, ham))
    return claims


def _alpha_pair(base: int, ref: int) -> list[int]:
    return [base + ref - 1, base + ref]


def t22(ctx):
    claims = []
    fam = _known_family(ctx)
    if fam:
        ks = decompose_known(ctx.g)
        rp = ctx.graphs["RP"]
        diff = sorted(set(rp.edges()) ^ set(ks.graph.edges()))
        claims.append(Claim(f"RP(G) = {ks.expression}", ks.graph.edge_count, rp.edge_count,
                            not diff, [ctx.names("RP", e) for e in diff[:5]] or None))
        n = ks.n
        k, ks_, a = ctx.inv("RP", "kappa"), ctx.inv("RP*", "kappa"), ctx.inv("RP", "alpha")
        if fam == "D":
            claims.append(eq("kappa(RP(D_2n)) = 1", 1, k))
            claims.append(eq("alpha(RP(D_2n)) = n + alpha(RP(Z_n))",
                             n + _cyclic_ref(n, "RP", "alpha", ctx.caps), a))
        elif fam == "Q":
            claims.append(eq("kappa(RP(Q_4n)) = 2", 2, k))
            claims.append(eq("kappa(RP*(Q_4n)) = 1", 1, ks_))
            pair = _alpha_pair(2 * n, _cyclic_ref(2 * n, "RP", "alpha", ctx.caps))
            claims.append(Claim("alpha(RP(Q_4n)) in {2n + alpha(RP(Z_2n)) - 1, 2n + alpha(RP(Z_2n))}",
                                pair, a, a in pair))
        elif n >= 3:
            claims.append(eq("kappa(RP(SD_8n)) = 1", 1, k))
            claims.append(eq("kappa(RP*(SD_8n)) = 0", 0, ks_,
                             note="involutions a^k b (k even) are isolated in RP*, so RP* is disconnected"))
            pair = _alpha_pair(4 * n, _cyclic_ref(4 * n, "RP", "alpha", ctx.caps))
            claims.append(Claim("alpha(RP(SD_8n)) in {4n + alpha(RP(Z_4n)) - 1, 4n + alpha(RP(Z_4n))}",
                                pair, a, a in pair))
        if fam != "SD" or n >= 3:
            claims.append(eq("RP not Hamiltonian", False, ctx.inv("RP", "ham")))
            claims.append(eq("RP* not Hamiltonian", False, ctx.inv("RP*", "ham")))
    if ctx.p_group:
        p, m = ctx.p_group
        if ctx.cyclic:
            expected = p ** (m - 1)
        elif ctx.generalized_quaternion:
            expected = 2
        else:
            expected = 1
        claims.append(eq("p-group kappa(RP): p^(m-1) cyclic / 2 quaternion / 1 otherwise",
                         expected, ctx.inv("RP", "kappa")))
    return claims


def t23(ctx):
    m = ctx.g.lattice.maximal_counts()
    shift = sum(mp * (p - 2) for p, mp in m.items())
    c_r, c_p = ctx.inv("RP*", "comps"), ctx.inv("P*", "comps")
    claims = [eq("c(RP*) = c(P*) + sum m_p (p-2)", c_p + shift, c_r, witness=dict(sorted(m.items())))]
    if ctx.cyclic and is_prime(ctx.n):
        claims.append(eq("Z_p: c(RP*) = p - 1", ctx.n - 1, c_r))
    elif ctx.cyclic:
        claims.append(eq("Z_n, n not prime: c(RP*) = c(P*)", c_p, c_r))
    no_odd = not any(mp for p, mp in m.items() if p != 2)
    claims.append(eq("c(RP*) = c(P*) iff cyclic non-prime or no maximal cyclic subgroup of odd prime order",
                     (ctx.cyclic and not is_prime(ctx.n)) or no_odd, c_r == c_p))
    return claims


def t24(ctx):
    d, ds, dp = ctx.inv("RP", "diam"), ctx.inv("RP*", "diam"), ctx.inv("P*", "diam")
    claims = [eq("diam(RP) = 1 iff G = Z_2, else 2", 1 if ctx.n == 2 else 2, d)]
    pp = ctx.cyclic_prime_power
    if pp and pp[1] >= 2:
        claims.append(eq("diam(RP*(Z_p^n)) = 2, n >= 2", 2, ds))
    elif pp and ctx.n == 2:
        claims.append(eq("diam(RP*(Z_2)) = 0 (single vertex)", 0, ds))
    elif pp:
        claims.append(eq("diam(RP*(Z_p)) = inf", INF, ds))
    else:
        claims.append(eq("diam(RP*) = diam(P*)", dp, ds))
    a = ds == 2
    b = d == ds
    claims.append(eq("diam(RP*) = 2 iff diam(RP) = diam(RP*)", a, b))
    if ctx.nilpotent:
        syl = sylow_structure(ctx.g)
        c = all(s in ("cyclic", "generalized_quaternion") for s in syl.values()) and not is_prime(ctx.n)
        claims.append(eq("diam(RP*) = 2 iff nilpotent with cyclic or quaternion Sylows, not Z_p",
                         c, a, witness=syl))
    else:
        claims.append(eq("non-nilpotent: diam(RP*) != 2", False, a))
    return claims


def t25(ctx):
    graph = ctx.graphs["RP*"]
    lat = ctx.g.lattice
    pend = [v for v in range(graph.n) if graph.degree(v) == 1]
    claims = [eq("pendant vertices of RP* have order 4", [],
                 ctx.names("RP*", [v for v in pend if ctx.orders[v + 1] != 4]))]
    max4 = [x - 1 for x in range(1, ctx.n) if ctx.orders[x] == 4 and lat.is_maximal(x)]
    claims.append(eq("maximal cyclic of order 4 generators are pendant", [],
                     ctx.names("RP*", [v for v in max4 if graph.degree(v) != 1])))
    if not is_prime(ctx.n):
        conn = ctx.inv("RP*", "connected")
        claims.append(eq("RP* connected iff P* connected", ctx.inv("P*", "connected"), conn))
        if ctx.p_group:
            claims.append(eq("p-group: RP* connected iff cyclic or generalized quaternion",
                             ctx.cyclic or ctx.generalized_quaternion, conn))
        if ctx.n % 2:
            claims.append(eq("odd order: RP* connected iff RP* 2-connected", conn,
                             ctx.inv("RP*", "two_conn")))
            claims.append(eq("odd order: RP* 2-connected iff P* 2-connected",
                             ctx.inv("P*", "two_conn"), ctx.inv("RP*", "two_conn")))
    return claims


CHECK_LIST: list[TheoremCheck] = [
    TheoremCheck("T1", "Omega-level classes colour RP*; prime chain is a clique",
                 "X_i = {x : Omega(o(x)) = i}", _always, t1),
    TheoremCheck("T2", "omega = chi = Omega_max on RP*, Omega_max + 1 on RP",
                 "omega(RP*(G)) = Omega(n) = chi(RP*(G))", _always, t2),
    TheoremCheck("T3", "non-cyclic G has smaller omega, chi than Z_n",
                 "omega(RP(G)) < omega(RP(Z_n)) for non-cyclic G", _noncyclic, t3),
    TheoremCheck("T4", "RP* bipartite iff Omega_max = 2",
                 "non-prime orders of the form p^2 or pq", _always, t4),
    TheoremCheck("T5", "triangle-freeness of RP* and RP",
                 "Omega(n) <= 2 for all n in pi_e", _always, t5),
    TheoremCheck("T6", "complete multipartite classification",
                 "K_{p-1, p(p-1), ..., p^(k-1)(p-1)}", _always, t6),
    TheoremCheck("T7", "RP* tree iff star iff G in {Z_4, Q_8}",
                 "RP*(Z_4) = K_{1,2}, RP*(Q_8) = K_{1,6}", _order_at_least_3, t7),
    TheoremCheck("T8", "girth of RP* (3 / 4 / inf) and of RP",
                 "gr = 3 if Omega_max >= 3", _always, t8),
    TheoremCheck("T9", "RP and RP* are perfect", "no odd hole or odd antihole",
                 _perfect_cap, t9),
    TheoremCheck("T10", "acyclicity of RP* and RP by element orders",
                 "pi_e(G) subset of {1,4} u P", _always, t10),
    TheoremCheck("T11", "acyclicity for abelian groups", "Z_p^n, Z_4^n, Z_4^m x Z_2^n",
                 _abelian_only, t11),
    TheoremCheck("T12", "RP claw-free iff G in {Z_2, Z_3, Z_4}", "K_{1,3}-free RP(G)",
                 _always, t12),
    TheoremCheck("T13", "RP* claw-free characterization",
                 "order-4 cyclic subgroups intersect trivially", _always, t13),
    TheoremCheck("T14", "RP and RP* are never cycles", "RP(G) != C_n", _always, t14),
    TheoremCheck("T15", "cut vertices of degree >= 3 agree for RP* and P*",
                 "deg_RP*(x) >= 3", _always, t15),
    TheoremCheck("T16", "cut vertices of RP* and P* have order 2", "o(x) = 2", _always, t16),
    TheoremCheck("T17", "cyclic: RP* has a cut vertex iff Z_4", "G = Z_4", _cyclic_only, t17),
    TheoremCheck("T18", "cut-edge characterization for RP* and RP",
                 "maximal cyclic subgroup of order 4", _always, t18),
    TheoremCheck("T19", "vertex connectivity of RP(Z_n) and RP*(Z_n)",
                 "kappa(RP(Z_n)) = n - phi(n) if 2 phi(n) + 1 >= n", _cyclic_only, t19),
    TheoremCheck("T20", "independence numbers", "alpha(RP*(Z_p^m)) = p^(m-1)(p-1)",
                 _always, t20),
    TheoremCheck("T21", "Hamiltonicity for p-groups", "RP(Z_p^n) Hamiltonian iff p = 2, n >= 2",
                 _p_group_only, t21),
    TheoremCheck("T22", "D_2n, Q_4n, SD_8n structure and p-group connectivity",
                 "RP(D_2n) = K_1 + (RP*(Z_n) u K_n complement)", _families_or_p_groups, t22),
    TheoremCheck("T23", "component count of RP* vs P*", "c(RP*) = c(P*) + sum m_p (p - 2)",
                 _always, t23),
    TheoremCheck("T24", "diameters of RP and RP*", "diam(RP*(G)) = diam(P*(G)) otherwise",
                 _always, t24),
    TheoremCheck("T25", "connectivity lemmas for RP*", "pendant vertex has order 4",
                 _always, t25),
]
CHECKS: dict[str, TheoremCheck] = {c.id: c for c in CHECK_LIST}


class UnknownCheck(KeyError):
    pass


def resolve_checks(only: Iterable[str] | None) -> list[TheoremCheck]:
    if only is None:
        return list(CHECK_LIST)
    wanted = [s.strip().upper() for s in only if s.strip()]
    bad = [s for s in wanted if s not in CHECKS]
    if bad:
        raise UnknownCheck(f"unknown check id(s): {', '.join(bad)}")
    return [c for c in CHECK_LIST if c.id in wanted]


# ---------------------------------------------------------------------------
# running

def _fold(check: TheoremCheck, group: str, claims: list[Claim]) -> TheoremCheckResult:
    if not claims:
        return TheoremCheckResult(check.id, group, SKIPPED, reason="no sub-claim applies")
    failed = [c for c in claims if not c.ok]
    witness = {c.name: c.witness if c.witness is not None else
               {"expected": c.expected, "computed": c.computed} for c in failed} or None
    notes = "; ".join(c.note for c in claims if c.note)
    return TheoremCheckResult(check.id, group, FAIL if failed else PASS,
                              {c.name: c.expected for c in claims},
                              {c.name: c.computed for c in claims}, witness, notes)


def _run_in_context(check: TheoremCheck, ctx: GroupContext) -> TheoremCheckResult:
    label = ctx.g.label
    reason = check.applicability(ctx)
    if reason is not None:
        return TheoremCheckResult(check.id, label, SKIPPED, reason=reason)
    try:
        claims = check.evaluate(ctx)
    except inv.CapExceeded as exc:
        return TheoremCheckResult(check.id, label, SKIPPED, reason=f"cap: {exc}")
    return _fold(check, label, claims)


def run_check(check: TheoremCheck | str, g: FiniteGroup,
              caps: inv.Caps = inv.DEFAULT_CAPS) -> TheoremCheckResult:
    if isinstance(check, str):
        check = resolve_checks([check])[0]
    return _run_in_context(check, GroupContext(g, caps))


def _run_group(args) -> list[TheoremCheckResult]:
    g, ids, caps = args
    ctx = GroupContext(g, caps)
    return [_run_in_context(CHECKS[i], ctx) for i in ids]


def run_suite(catalog: Sequence[FiniteGroup], only: Iterable[str] | None = None,
              caps: inv.Caps = inv.DEFAULT_CAPS, workers: int = 1) -> SuiteReport:
    """Evaluate every selected check on every group.

    Results are ordered by group then check regardless of ``workers``, so
    reports are identical across runs.
    """
    checks = resolve_checks(only)
    ids = [c.id for c in checks]
    jobs = [(g, ids, caps) for g in catalog]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            per_group = list(pool.map(_run_group, jobs))
    else:
        per_group = [_run_group(j) for j in jobs]
    results = [r for rows in per_group for r in rows]
    return SuiteReport(results, ids, [g.label for g in catalog], caps)


# ---------------------------------------------------------------------------
# catalog

def _abelian_key(g: FiniteGroup) -> tuple[int, ...]:
    return abelian_invariants(g)


def _product_label(factors: Sequence[int]) -> str:
    return "x".join(f"Z{f}" for f in factors)


def default_catalog(max_order: int, extra: Iterable[str | Path] = ()) -> list[FiniteGroup]:
    """Groups of order 2..max_order from the standard families, one per abelian type,
    followed by groups loaded from Cayley-table files in ``extra``."""
    groups: list[FiniteGroup] = []
    seen_abelian: set[tuple[int, ...]] = set()

    def add_abelian(g: FiniteGroup):
        key = _abelian_key(g)
        if key not in seen_abelian:
            seen_abelian.add(key)
            groups.append(g)

    for n in range(2, max_order + 1):
        add_abelian(cyclic(n))
    for p in range(2, max_order + 1):
        if not is_prime(p):
            continue
        k = 2
        while p ** k <= max_order:
            add_abelian(build_group(f"E{p}^{k}"))
            k += 1
    for m in range(1, 8):
        for k in range(0, 8):
            if 4 ** m * 2 ** k <= max_order and (m, k) != (1, 0):
                add_abelian(build_group(_product_label([4] * m + [2] * k)))
    for a in range(2, max_order + 1):
        for b in range(a, max_order // a + 1):
            if b % a == 0:
                add_abelian(build_group(_product_label([a, b])))
    for n in range(3, max_order // 2 + 1):
        groups.append(dihedral(2 * n))
    for n in range(2, max_order // 4 + 1):
        groups.append(dicyclic(4 * n))
    for n in range(2, max_order // 8 + 1):
        groups.append(semidihedral(8 * n))
    groups.sort(key=lambda g: g.order)
    for path in extra:
        path = Path(path)
        groups.append(from_cayley_table(path.read_text(), label=path.stem))
    return groups


__all__ = ["CHECKS", "CHECK_LIST", "Claim", "GroupContext", "SuiteReport", "TheoremCheck",
           "TheoremCheckResult", "UnknownCheck", "default_catalog",
           "resolve_checks", "run_check", "run_suite", "PASS", "FAIL", "SKIPPED"]
