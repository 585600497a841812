"""Exhaustive subgroup lattices over element-index bitsets.

Enumeration seeds with every cyclic subgroup and repeatedly joins existing
entries with prime-power cyclic subgroups until a fixed point; that reaches
every subgroup because each subgroup is generated by its prime-power cyclic
subgroups and all intermediate joins are again subgroups. Equivalence with a
brute-force oracle is part of the test suite.
"""

from __future__ import annotations

from typing import NamedTuple, Optional

from .errors import LatticeCapError, PermlatError
from .groups import (
    Group,
    Subgroup,
    _close_bits,
    _conjugate_bits,
    _iter_bits,
)

DEFAULT_LATTICE_CAP = 400


class ProductSet(NamedTuple):
    size: int
    is_group: bool
    bits: int


class SubgroupLattice:
    """All subgroups of a group, sorted by (order, bitset), plus conjugacy
    classes and normality/maximality flags."""

    def __init__(self, group: Group, all_bits: list[int]):
        self.group = group
        entries = sorted(all_bits, key=lambda b: (b.bit_count(), b))
        self.subgroups = [Subgroup(group, b) for b in entries]
        self.index_by_bits = {b: i for i, b in enumerate(entries)}
        self._by_order: dict[int, list[int]] = {}
        for i, sub in enumerate(self.subgroups):
            self._by_order.setdefault(sub.order, []).append(i)
        self._memo: dict = {}
        self._compute_conjugacy()
        self._compute_flags()

    # -- construction helpers --------------------------------------------

    def _compute_conjugacy(self) -> None:
        g = self.group
        t = g.table()
        inv = g.inverse_table()
        gidx = g.generator_indices()
        n = len(self.subgroups)
        class_of = [-1] * n
        classes: list[list[int]] = []
        for i in range(n):
            if class_of[i] != -1:
                continue
            cid = len(classes)
            class_of[i] = cid
            orbit = [i]
            stack = [i]
            while stack:
                j = stack.pop()
                bits = self.subgroups[j].members
                for gi in gidx:
                    cb = _conjugate_bits(t, inv, bits, gi)
                    k = self.index_by_bits[cb]
                    if class_of[k] == -1:
                        class_of[k] = cid
                        orbit.append(k)
                        stack.append(k)
            classes.append(sorted(orbit))
        self.conjugacy_classes = classes
        self.class_of = class_of
        self.normal_flags = [len(classes[c]) == 1 for c in class_of]

    def _compute_flags(self) -> None:
        n = len(self.subgroups)
        top = n - 1
        maximal = [False] * n
        for i in range(n - 1):
            mi = self.subgroups[i].members
            oi = self.subgroups[i].order
            is_max = True
            for j in range(i + 1, top):
                sj = self.subgroups[j]
                if sj.order > oi and mi & ~sj.members == 0:
                    is_max = False
                    break
            maximal[i] = is_max
        self.maximal_flags = maximal
        minimal_normal = [False] * n
        for i in range(1, n):
            if not self.normal_flags[i]:
                continue
            mi = self.subgroups[i].members
            ok = True
            for j in range(1, i):
                if self.normal_flags[j] and self.subgroups[j].members & ~mi == 0:
                    ok = False
                    break
            minimal_normal[i] = ok
        self.minimal_normal_flags = minimal_normal

    # -- basic queries -----------------------------------------------------

    def __len__(self) -> int:
        return len(self.subgroups)

    def index_of(self, sub: Subgroup) -> int:
        try:
            return self.index_by_bits[sub.members]
        except KeyError:
            raise PermlatError("subgroup not found in lattice") from None

    def entry(self, bits: int) -> Subgroup:
        return self.subgroups[self.index_by_bits[bits]]

    def of_order(self, order: int) -> list[int]:
        return self._by_order.get(order, [])

    def within(self, bits: int, order: Optional[int] = None) -> list[int]:
        """Indices of entries contained in the given bitset."""
        idxs = self.of_order(order) if order is not None else range(len(self.subgroups))
        return [i for i in idxs if self.subgroups[i].members & ~bits == 0]

    def top(self) -> Subgroup:
        return self.subgroups[-1]

    def bottom(self) -> Subgroup:
        return self.subgroups[0]

    # -- lattice operations -------------------------------------------------

    def join(self, a: Subgroup, b: Subgroup) -> Subgroup:
        t = self.group.table()
        if a.order >= b.order:
            bits = _close_bits(t, a.members, a.generator_indices, b.generator_indices)
        else:
            bits = _close_bits(t, b.members, b.generator_indices, a.generator_indices)
        return self.entry(bits)

    def intersect(self, a: Subgroup, b: Subgroup) -> Subgroup:
        return self.entry(a.members & b.members)

    def maximal_subgroups(self) -> list[Subgroup]:
        return [s for s, f in zip(self.subgroups, self.maximal_flags) if f]

    def minimal_normal_subgroups(self) -> list[Subgroup]:
        return [
            s for s, f in zip(self.subgroups, self.minimal_normal_flags) if f
        ]

    def normal_subgroups(self) -> list[Subgroup]:
        return [s for s, f in zip(self.subgroups, self.normal_flags) if f]

    def frattini(self) -> Subgroup:
        bits = (1 << self.group.order) - 1
        for s, f in zip(self.subgroups, self.maximal_flags):
            if f:
                bits &= s.members
        return self.entry(bits)

    def socle(self) -> Subgroup:
        mins = self.minimal_normal_subgroups()
        if not mins:
            return self.subgroups[0]
        t = self.group.table()
        bits = mins[0].members
        gens = mins[0].generator_indices
        for m in mins[1:]:
            bits = _close_bits(t, bits, gens, m.generator_indices)
            gens = gens + m.generator_indices
        return self.entry(bits)

    def sylow(self, p: int) -> tuple[Subgroup, list[Subgroup]]:
        """A Sylow p-subgroup (lowest-index) and the list of its conjugates.

        Sylow's theorems are asserted: the count is 1 mod p and divides |G|.
        """
        e = self.group.prime_factorization.get(p, 0)
        target = p**e
        idxs = self.of_order(target)
        if not idxs:
            raise PermlatError(f"no subgroup of order {target} found")
        rep = idxs[0]
        cls = self.conjugacy_classes[self.class_of[rep]]
        if set(cls) != set(idxs):
            raise PermlatError(f"Sylow {p}-subgroups are not all conjugate")
        count = len(cls)
        if count % p != 1 % p or self.group.order % count:
            raise PermlatError(f"Sylow count {count} violates Sylow's theorems")
        return self.subgroups[rep], [self.subgroups[i] for i in cls]

    def complements(self, h: Subgroup) -> list[Subgroup]:
        """All T with H*T = G and trivial intersection, in canonical order."""
        g_order = self.group.order
        want = g_order // h.order
        out = []
        for i in self.of_order(want):
            t = self.subgroups[i]
            if h.members & t.members == 1:
                out.append(t)
        return out


def enumerate_subgroups(group: Group, cap: int = DEFAULT_LATTICE_CAP) -> SubgroupLattice:
    """Every subgroup of ``group``. Hard error if |G| exceeds ``cap``."""
    if group.order > cap:
        raise LatticeCapError(
            f"group order {group.order} exceeds lattice cap {cap}", cap
        )
    t = group.table()
    orders = group.element_orders()
    n = group.order

    cyclic_bits: dict[int, int] = {}  # bits -> generating element
    for i in range(1, n):
        bits = 1
        x = i
        while x != 0:
            bits |= 1 << x
            x = t[x][i]
        if bits not in cyclic_bits:
            cyclic_bits[bits] = i

    pp_cyclics = [
        (bits, g)
        for bits, g in cyclic_bits.items()
        if len(_factor_set(orders[g])) == 1
    ]

    subs: dict[int, None] = {1: None}
    gens_of: dict[int, tuple[int, ...]] = {1: ()}
    for bits, g in cyclic_bits.items():
        if bits not in subs:
            subs[bits] = None
            gens_of[bits] = (g,)
    work = list(subs.keys())
    while work:
        hb = work.pop()
        hgens = gens_of[hb]
        hsize = hb.bit_count()
        for cb, cg in pp_cyclics:
            if (hb >> cg) & 1:
                continue
            if hsize >= cb.bit_count():
                jb = _close_bits(t, hb, hgens, (cg,))
            else:
                jb = _close_bits(t, cb, (cg,), hgens)
            if jb not in subs:
                subs[jb] = None
                gens_of[jb] = hgens + (cg,)
                work.append(jb)
    return SubgroupLattice(group, list(subs.keys()))


def _factor_set(m: int) -> set[int]:
    out = set()
    d = 2
    while d * d <= m:
        if m % d == 0:
            out.add(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        out.add(m)
    return out


# -- subgroup operations that do not need the full lattice -------------------


def normalizer(h: Subgroup) -> Subgroup:
    g = h.parent
    t = g.table()
    inv = g.inverse_table()
    bits = 0
    for x in range(g.order):
        if _conjugate_bits(t, inv, h.members, x) == h.members:
            bits |= 1 << x
    return Subgroup(g, bits)


def centralizer(h: Subgroup) -> Subgroup:
    g = h.parent
    t = g.table()
    gens = h.generator_indices
    bits = 0
    for x in range(g.order):
        if all(t[x][y] == t[y][x] for y in gens):
            bits |= 1 << x
    return Subgroup(g, bits)


def core(h: Subgroup) -> Subgroup:
    """Largest normal subgroup of the parent contained in h."""
    g = h.parent
    t = g.table()
    inv = g.inverse_table()
    gidx = g.generator_indices()
    bits = h.members
    changed = True
    while changed:
        changed = False
        for gi in gidx:
            nb = bits & _conjugate_bits(t, inv, bits, gi)
            if nb != bits:
                bits = nb
                changed = True
    return Subgroup(g, bits)


def normal_closure(h: Subgroup) -> Subgroup:
    bits, gens = _normal_closure_bits(
        h.parent, h.parent.generator_indices(), h.members, h.generator_indices
    )
    return Subgroup(h.parent, bits, gens)


def _normal_closure_bits(group: Group, ambient_gens, h_bits: int, h_gens):
    """Closure of H under conjugation by the given ambient generators."""
    t = group.table()
    inv = group.inverse_table()
    bits = h_bits
    gens = list(h_gens)
    stack = list(h_gens)
    while stack:
        x = stack.pop()
        for g in ambient_gens:
            y = t[t[inv[g]][x]][g]
            if not (bits >> y) & 1:
                bits = _close_bits(t, bits, tuple(gens), (y,))
                gens.append(y)
                stack.append(y)
    return bits, tuple(gens)


def is_subnormal(h: Subgroup) -> bool:
    """Whether iterated normal closures descend from G exactly to H."""
    g = h.parent
    cur_bits = (1 << g.order) - 1
    cur_gens = g.generator_indices()
    while True:
        nb, ngens = _normal_closure_bits(g, cur_gens, h.members, h.generator_indices)
        if nb == cur_bits:
            return cur_bits == h.members
        cur_bits, cur_gens = nb, ngens


def product_set(h: Subgroup, k: Subgroup) -> ProductSet:
    """The set HK with its size and whether it forms a subgroup."""
    if h.parent is not k.parent:
        raise PermlatError("subgroups of different parents")
    t = h.parent.table()
    k_members = k.element_indices()
    bits = 0
    for a in _iter_bits(h.members):
        row = t[a]
        for b in k_members:
            bits |= 1 << row[b]
    size = bits.bit_count()
    gens = tuple(dict.fromkeys(h.generator_indices + k.generator_indices))
    is_group = True
    for x in _iter_bits(bits):
        row = t[x]
        if any(not (bits >> row[g]) & 1 for g in gens):
            is_group = False
            break
    return ProductSet(size, is_group, bits)


def permutes(h: Subgroup, k: Subgroup) -> bool:
    """True iff HK = KH, i.e. the product set is a subgroup."""
    inter = (h.members & k.members).bit_count()
    size = h.order * k.order // inter
    g_order = h.parent.order
    if g_order % size:
        return False
    if size == g_order or size == h.order or size == k.order:
        return True
    t = h.parent.table()
    if h.order >= k.order:
        jb = _close_bits(t, h.members, h.generator_indices, k.generator_indices)
    else:
        jb = _close_bits(t, k.members, k.generator_indices, h.generator_indices)
    return jb.bit_count() == size
