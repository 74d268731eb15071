"""Finite groups given by Cayley tables, and the cyclic-subgroup data derived from them.

Every group is stored as an ``n x n`` table of element indices with the identity
at index 0.  All queries (element orders, generated subgroups, nilpotency,
Sylow shapes) are computed from the table alone.
"""
from __future__ import annotations

import csv
import io
import json
import random
import re
from dataclasses import dataclass, field
from functools import cached_property, reduce
from typing import Iterable, Sequence

import numpy as np

DEFAULT_MAX_ORDER = 512
EXHAUSTIVE_ASSOC_LIMIT = 128


class GroupError(Exception):
    """Base class for group construction and query errors."""


class MalformedSpec(GroupError):
    pass


class InvalidParameter(GroupError):
    pass


class ParseError(GroupError):
    pass


class OrderCapExceeded(GroupError):
    pass


class NotNilpotent(GroupError):
    pass


class NotAGroup(GroupError):
    def __init__(self, axiom: str, witness: tuple):
        super().__init__(f"table violates {axiom}: witness {witness}")
        self.axiom = axiom
        self.witness = witness


# ---------------------------------------------------------------------------
# number theory

def factorize(n: int) -> dict[int, int]:
    """Prime factorization of ``n >= 1`` as ``{prime: exponent}``."""
    if n < 1:
        raise ValueError(f"factorize needs n >= 1, got {n}")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def big_omega(n: int) -> int:
    """Number of prime factors of ``n`` counted with multiplicity."""
    return sum(factorize(n).values())


def euler_phi(n: int) -> int:
    result = n
    for p in factorize(n):
        result = result // p * (p - 1)
    return result


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == {n: 1}


def prime_power(n: int) -> tuple[int, int] | None:
    """Return ``(p, k)`` if ``n = p**k`` with ``k >= 1``, else None."""
    f = factorize(n) if n >= 2 else {}
    if len(f) == 1:
        (p, k), = f.items()
        return p, k
    return None


# ---------------------------------------------------------------------------
# the group type

@dataclass(frozen=True)
class FiniteGroup:
    """A finite group as a Cayley table; ``table[i][j]`` is the index of g_i * g_j.

    The identity is always index 0.  ``names`` are display labels for elements
    and do not take part in equality.
    """

    table: tuple[tuple[int, ...], ...]
    label: str = ""
    names: tuple[str, ...] | None = field(default=None, compare=False, repr=False)

    identity = 0

    @property
    def order(self) -> int:
        return len(self.table)

    def __hash__(self) -> int:
        return self._hash

    @cached_property
    def _hash(self) -> int:
        return hash((self.label, self.table))

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def name(self, i: int) -> str:
        return self.names[i] if self.names else str(i)

    @cached_property
    def inverses(self) -> tuple[int, ...]:
        return tuple(row.index(0) for row in self.table)

    def power(self, x: int, k: int) -> int:
        """``x**k`` for ``k >= 0`` by repeated squaring."""
        result, base = 0, x
        while k:
            if k & 1:
                result = self.table[result][base]
            base = self.table[base][base]
            k >>= 1
        return result

    @cached_property
    def lattice(self) -> "CyclicSubgroupLattice":
        return _compute_lattice(self)

    def to_json(self) -> dict:
        doc = {"label": self.label, "order": self.order,
               "table": [list(r) for r in self.table]}
        if self.names:
            doc["names"] = list(self.names)
        return doc

    def to_csv(self) -> str:
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(self.table)
        return buf.getvalue()


@dataclass(frozen=True)
class CyclicSubgroupLattice:
    """Per-element cyclic subgroups, generator classes and maximal cyclic subgroups."""

    orders: tuple[int, ...]
    gen_subgroup: tuple[tuple[int, ...], ...]
    masks: tuple[int, ...]          # bitmask of gen_subgroup[x]
    classes: tuple[tuple[int, ...], ...]
    class_of: tuple[int, ...]       # index into classes
    maximal_cyclic: tuple[tuple[int, ...], ...]

    def contains(self, x: int, y: int) -> bool:
        """True iff <y> is a subset of <x>."""
        return bool(self.masks[x] >> y & 1)

    def is_maximal(self, x: int) -> bool:
        return self.gen_subgroup[x] in self._maximal_set

    @cached_property
    def _maximal_set(self) -> frozenset:
        return frozenset(self.maximal_cyclic)

    def maximal_counts(self) -> dict[int, int]:
        """Number of maximal cyclic subgroups of each prime order (m_p)."""
        counts: dict[int, int] = {}
        for c in self.maximal_cyclic:
            if is_prime(len(c)):
                counts[len(c)] = counts.get(len(c), 0) + 1
        return counts


@dataclass(frozen=True)
class ElementOrderProfile:
    pi_e: tuple[int, ...]
    omega_max: int
    witness: int


def _mask(elems: Iterable[int]) -> int:
    m = 0
    for e in elems:
        m |= 1 << e
    return m


def _compute_lattice(g: FiniteGroup) -> CyclicSubgroupLattice:
    n = g.order
    t = g.table
    subs = []
    for x in range(n):
        elems = [0]
        y = x
        while y != 0:
            elems.append(y)
            y = t[y][x]
        subs.append(tuple(sorted(elems)))
    orders = tuple(len(s) for s in subs)
    masks = tuple(_mask(s) for s in subs)

    by_set: dict[tuple[int, ...], list[int]] = {}
    for x, s in enumerate(subs):
        by_set.setdefault(s, []).append(x)
    classes = tuple(tuple(v) for v in by_set.values())
    class_of = [0] * n
    for ci, members in enumerate(classes):
        for x in members:
            class_of[x] = ci

    distinct = [(len(s), masks[members[0]], s) for s, members in by_set.items()]
    maximal = []
    for size, m, s in distinct:
        if not any(size2 > size and m & m2 == m for size2, m2, _ in distinct):
            maximal.append(s)
    return CyclicSubgroupLattice(orders, tuple(subs), masks, classes,
                                 tuple(class_of), tuple(sorted(maximal)))


def compute_lattice(g: FiniteGroup) -> CyclicSubgroupLattice:
    return g.lattice


def order_profile(g: FiniteGroup) -> ElementOrderProfile:
    orders = g.lattice.orders
    witness = max(range(g.order), key=lambda x: (big_omega(orders[x]), -x))
    return ElementOrderProfile(tuple(sorted(set(orders))),
                               big_omega(orders[witness]), witness)


# ---------------------------------------------------------------------------
# validation and import

def _validate(table: Sequence[Sequence[int]], exhaustive: bool | None = None) -> None:
    n = len(table)
    arr = np.asarray(table, dtype=np.int64)
    expected = np.arange(n)
    for i in range(n):
        if not np.array_equal(np.sort(arr[i]), expected):
            raise NotAGroup("latin square (row)", (i,))
        if not np.array_equal(np.sort(arr[:, i]), expected):
            raise NotAGroup("latin square (column)", (i,))
    if not (np.array_equal(arr[0], expected) and np.array_equal(arr[:, 0], expected)):
        raise NotAGroup("identity", (0,))
    if exhaustive is None:
        exhaustive = n <= EXHAUSTIVE_ASSOC_LIMIT
    if exhaustive:
        # left[a, b, c] = (ab)c ; right[a, b, c] = a(bc)
        left = arr[arr]
        right = arr[:, arr]
        bad = np.argwhere(left != right)
        if len(bad):
            raise NotAGroup("associativity", tuple(int(v) for v in bad[0]))
    else:
        rng = random.Random(0)
        for _ in range(10 * n * n):
            a, b, c = rng.randrange(n), rng.randrange(n), rng.randrange(n)
            if arr[arr[a, b], c] != arr[a, arr[b, c]]:
                raise NotAGroup("associativity", (a, b, c))


def _find_identity(table: Sequence[Sequence[int]]) -> int:
    n = len(table)
    for e in range(n):
        if list(table[e]) == list(range(n)) and all(table[i][e] == i for i in range(n)):
            return e
    raise NotAGroup("identity", ())


def _renumber(table, names, e):
    """Swap index ``e`` with index 0 so the identity sits at 0."""
    perm = list(range(len(table)))
    perm[0], perm[e] = e, 0       # perm maps new index -> old index
    inv = perm[:]                 # a transposition is its own inverse
    new = [[inv[table[perm[i]][perm[j]]] for j in range(len(table))]
           for i in range(len(table))]
    new_names = [names[perm[i]] for i in range(len(table))] if names else None
    return new, new_names


def from_cayley_table(raw, *, max_order: int = DEFAULT_MAX_ORDER,
                      exhaustive: bool | None = None, label: str = "") -> FiniteGroup:
    """Build a validated group from a JSON/CSV document, a dict, or a list of rows."""
    names = None
    if isinstance(raw, (bytes, str)):
        text = raw.decode() if isinstance(raw, bytes) else raw
        stripped = text.strip()
        if not stripped:
            raise ParseError("empty table document")
        if stripped[0] in "{[":
            try:
                raw = json.loads(stripped)
            except json.JSONDecodeError as exc:
                raise ParseError(f"bad JSON: {exc}") from None
        else:
            try:
                raw = [[int(c) for c in row if c.strip() != ""]
                       for row in csv.reader(io.StringIO(stripped)) if row]
            except ValueError as exc:
                raise ParseError(f"bad CSV entry: {exc}") from None
    if isinstance(raw, dict):
        if "table" not in raw:
            raise ParseError("JSON document has no 'table' field")
        label = raw.get("label", label) or label
        names = raw.get("names")
        declared = raw.get("order")
        rows = raw["table"]
        if declared is not None and declared != len(rows):
            raise ParseError(f"declared order {declared} but table has {len(rows)} rows")
    else:
        rows = raw
    try:
        table = [[int(v) for v in row] for row in rows]
    except (TypeError, ValueError) as exc:
        raise ParseError(f"table entries must be integers: {exc}") from None
    n = len(table)
    if n == 0:
        raise ParseError("empty table")
    if any(len(r) != n for r in table):
        raise ParseError("table is not square")
    if any(not 0 <= v < n for r in table for v in r):
        raise ParseError("table entry out of range")
    if names is not None and len(names) != n:
        raise ParseError("names length does not match order")
    if n > max_order:
        raise OrderCapExceeded(f"order {n} exceeds cap {max_order}")
    for i in range(n):
        if sorted(table[i]) != list(range(n)):
            raise NotAGroup("latin square (row)", (i,))
    e = _find_identity(table)
    if e != 0:
        table, names = _renumber(table, names, e)
    _validate(table, exhaustive)
    return FiniteGroup(tuple(map(tuple, table)), label or f"T{n}",
                       tuple(names) if names else None)


# ---------------------------------------------------------------------------
# built-in families

def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise InvalidParameter("Z<n> needs n >= 1")
    table = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    return FiniteGroup(table, f"Z{n}", tuple(str(i) for i in range(n)))


def _ab_names(m: int) -> tuple[str, ...]:
    def rot(i):
        return "e" if i == 0 else ("a" if i == 1 else f"a^{i}")
    return tuple(rot(i) for i in range(m)) + tuple(
        "b" if i == 0 else f"{rot(i)}b" for i in range(m))


def _metacyclic(m: int, r: int, b2: int, label: str) -> FiniteGroup:
    """Group a^i b^s with a^m = e, b a = a^r b, b^2 = a^b2; index i + s*m."""
    def mul(x, y):
        i, s = x % m, x // m
        j, t = y % m, y // m
        k = (i + (j * r if s else j)) % m
        if s and t:
            return (k + b2) % m
        return k + m * (s ^ t)
    table = tuple(tuple(mul(x, y) for y in range(2 * m)) for x in range(2 * m))
    return FiniteGroup(table, label, _ab_names(m))


def dihedral(order: int) -> FiniteGroup:
    if order % 2 or order < 6:
        raise InvalidParameter(f"D<2n> needs even order with n >= 3, got {order}")
    n = order // 2
    return _metacyclic(n, n - 1, 0, f"D{order}")


def dicyclic(order: int) -> FiniteGroup:
    """Q_{4n}: a^{2n} = e, b^2 = a^n, b a b^-1 = a^-1."""
    if order % 4 or order < 8:
        raise InvalidParameter(f"Q<4n> needs order divisible by 4 with n >= 2, got {order}")
    n = order // 4
    return _metacyclic(2 * n, 2 * n - 1, n, f"Q{order}")


def semidihedral(order: int) -> FiniteGroup:
    """SD_{8n}: a^{4n} = e = b^2, b a b^-1 = a^{2n-1}."""
    if order % 8 or order < 16:
        raise InvalidParameter(f"SD<8n> needs order divisible by 8 with n >= 2, got {order}")
    n = order // 8
    return _metacyclic(4 * n, 2 * n - 1, 0, f"SD{order}")


def _product_name(a: str, b: str) -> str:
    inner = a[1:-1] if a.startswith("(") and a.endswith(")") else a
    return f"({inner},{b})"


def direct_product(g: FiniteGroup, h: FiniteGroup, *,
                   max_order: int = DEFAULT_MAX_ORDER, label: str | None = None) -> FiniteGroup:
    n, m = g.order, h.order
    if n * m > max_order:
        raise OrderCapExceeded(f"|{g.label}|*|{h.label}| = {n * m} exceeds cap {max_order}")
    gt, ht = g.table, h.table
    table = tuple(
        tuple(gt[i1][i2] * m + ht[j1][j2] for i2 in range(n) for j2 in range(m))
        for i1 in range(n) for j1 in range(m))
    names = tuple(_product_name(g.name(i), h.name(j)) for i in range(n) for j in range(m))
    return FiniteGroup(table, label or f"{g.label}x{h.label}", names)


_FACTOR = re.compile(r"^(?:(SD|Z|D|Q)(\d+)|E(\d+)\^(\d+))$")


def build_group(spec: str, *, max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    """Build a group from a spec such as ``Z12``, ``D24``, ``Q16``, ``SD16``, ``E2^3``, ``Z4xZ2``."""
    if not isinstance(spec, str) or not spec.strip():
        raise MalformedSpec(f"empty group spec {spec!r}")
    parts = spec.strip().split("x")
    factors = []
    for part in parts:
        mt = _FACTOR.match(part)
        if not mt:
            raise MalformedSpec(f"cannot parse factor {part!r} in {spec!r}")
        fam, num, p, k = mt.groups()
        if fam is not None:
            order = int(num)
            if order > max_order:
                raise OrderCapExceeded(f"{part}: order {order} exceeds cap {max_order}")
            factors.append({"Z": cyclic, "D": dihedral, "Q": dicyclic,
                            "SD": semidihedral}[fam](order))
        else:
            p, k = int(p), int(k)
            if not is_prime(p) or k < 1:
                raise InvalidParameter(f"E<p>^<k> needs prime p and k >= 1, got {part}")
            if p ** k > max_order:
                raise OrderCapExceeded(f"{part}: order {p ** k} exceeds cap {max_order}")
            zp = cyclic(p)
            factors.append(reduce(lambda a, b: direct_product(a, b, max_order=max_order),
                                  [zp] * k))
    g = reduce(lambda a, b: direct_product(a, b, max_order=max_order), factors)
    return FiniteGroup(g.table, spec.strip(), g.names)


# ---------------------------------------------------------------------------
# structural queries

def is_abelian(g: FiniteGroup) -> bool:
    t = g.table
    return all(t[i][j] == t[j][i] for i in range(g.order) for j in range(i + 1, g.order))


def is_cyclic(g: FiniteGroup) -> bool:
    return g.order in g.lattice.orders


def _center_chain_step(g: FiniteGroup, z: set[int]) -> set[int]:
    t, inv = g.table, g.inverses
    nxt = set()
    for x in range(g.order):
        if all(t[t[t[x][y]][inv[x]]][inv[y]] in z for y in range(g.order)):
            nxt.add(x)
    return nxt


def upper_central_series(g: FiniteGroup) -> list[frozenset[int]]:
    series = [frozenset({0})]
    while True:
        nxt = frozenset(_center_chain_step(g, set(series[-1])))
        if nxt == series[-1]:
            return series
        series.append(nxt)


def is_nilpotent(g: FiniteGroup) -> bool:
    return len(upper_central_series(g)[-1]) == g.order


def sylow_structure(g: FiniteGroup) -> dict[int, str]:
    """Classify each Sylow subgroup of a nilpotent group as
    ``cyclic``, ``generalized_quaternion`` or ``other``."""
    if not is_nilpotent(g):
        raise NotNilpotent(f"{g.label} is not nilpotent")
    orders = g.lattice.orders
    out = {}
    for p, a in factorize(g.order).items() if g.order > 1 else []:
        size = p ** a
        sylow = [o for o in orders if o == 1 or (prime_power(o) or (0,))[0] == p]
        assert len(sylow) == size, "p-elements of a nilpotent group form its Sylow subgroup"
        if size in sylow:
            out[p] = "cyclic"
        elif p == 2 and sylow.count(2) == 1:
            out[p] = "generalized_quaternion"
        else:
            out[p] = "other"
    return out


def abelian_invariants(g: FiniteGroup) -> tuple[int, ...]:
    """Elementary divisors (prime powers, sorted) of an abelian group."""
    if not is_abelian(g):
        raise GroupError(f"{g.label} is not abelian")
    orders = g.lattice.orders
    divisors: list[int] = []
    for p in sorted(factorize(g.order)) if g.order > 1 else []:
        # omega_k = #{x : x^{p^k} = e}; log_p(omega_k / omega_{k-1}) = #{cyclic factors of order >= p^k}
        k, prev, ge = 1, 1, []
        while True:
            cnt = sum(1 for o in orders if (p ** k) % o == 0)
            if cnt == prev:
                break
            r, q = 0, cnt // prev
            while q > 1:
                q //= p
                r += 1
            ge.append(r)
            prev = cnt
            k += 1
        ge.append(0)
        for k in range(1, len(ge)):
            divisors += [p ** k] * (ge[k - 1] - ge[k])
    return tuple(sorted(divisors))


def is_p_group(g: FiniteGroup) -> bool:
    return prime_power(g.order) is not None
