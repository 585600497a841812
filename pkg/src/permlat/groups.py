"""Finite permutation groups.

A Group owns a canonically sorted element table (lexicographic on image
tuples, so the identity is always index 0) and, lazily, an index-level
multiplication table. All heavier algorithms in the package work on element
indices and bitsets over them; permutations are the construction layer.
"""

from __future__ import annotations

import random
from typing import Iterable, NamedTuple, Optional, Sequence

import numpy as np

from .errors import (
    ActionRelationError,
    BadTableError,
    DegreeMismatchError,
    GroupOrderCapError,
    NotAutomorphismError,
    NotNormalError,
    PermlatError,
)
from .perms import Perm

DEFAULT_GROUP_CAP = 2000

# Cayley tables are checked for associativity on every triple up to this
# order; above it, 10*n^2 seeded random triples are sampled instead.
ASSOC_FULL_CHECK_MAX = 729
ASSOC_SAMPLE_FACTOR = 10
_ASSOC_SEED = 0x657A


def _iter_bits(mask: int):
    """Indices of set bits, ascending."""
    while mask:
        lsb = mask & -mask
        yield lsb.bit_length() - 1
        mask ^= lsb


def _close_bits(table, base_bits: int, base_gens, new_gens) -> int:
    """Bitset of the subgroup generated by a subgroup and extra elements.

    ``base_bits`` must be the bitset of an actual subgroup with generator
    indices ``base_gens``. Grows by whole right cosets of the base, so the
    cost is linear in the size of the result.
    """
    bits = base_bits
    gens = tuple(dict.fromkeys((*base_gens, *new_gens)))
    if not gens:
        return bits
    base_members = list(_iter_bits(base_bits))
    stack = [0]
    while stack:
        row = table[stack.pop()]
        for g in gens:
            w = row[g]
            if not (bits >> w) & 1:
                for b in base_members:
                    bits |= 1 << table[b][w]
                stack.append(w)
    return bits


def _extract_generators(table, bits: int) -> tuple[int, ...]:
    """Greedy generator indices for the subgroup bitset, scanned ascending."""
    if bits == 1:
        return ()
    gens: list[int] = []
    cur = 1
    for i in _iter_bits(bits):
        if not (cur >> i) & 1:
            cur = _close_bits(table, cur, tuple(gens), (i,))
            gens.append(i)
            if cur == bits:
                break
    if cur != bits:
        raise PermlatError("bitset is not closed under multiplication")
    return tuple(gens)


def _conjugate_bits(table, inv, bits: int, g: int) -> int:
    """Bitset of g^-1 * H * g."""
    row = table[inv[g]]
    out = 0
    for x in _iter_bits(bits):
        out |= 1 << table[row[x]][g]
    return out


class CayleyTable:
    """Multiplication table over element indices 0..order-1.

    Validated on construction: every row and column is a permutation, an
    identity index exists, and associativity holds (all triples up to order
    729, a seeded random sample of 10*n^2 triples above that).
    """

    __slots__ = ("order", "table", "identity_index")

    def __init__(self, table: Sequence[Sequence[int]], validate: bool = True):
        self.table = [list(row) for row in table]
        self.order = len(self.table)
        if any(len(row) != self.order for row in self.table):
            raise BadTableError("table is not square")
        self.identity_index = self._find_identity()
        if validate:
            self.validate()

    def _find_identity(self) -> int:
        n = self.order
        for i, row in enumerate(self.table):
            if all(row[j] == j for j in range(n)):
                # left identity; require it to be two-sided
                if all(self.table[j][i] == j for j in range(n)):
                    return i
        raise BadTableError("table has no identity element")

    def validate(self) -> None:
        n = self.order
        arr = np.asarray(self.table, dtype=np.int64)
        if arr.shape != (n, n):
            raise BadTableError("table is not square")
        expect = np.arange(n)
        if not (np.sort(arr, axis=1) == expect).all():
            raise BadTableError("some row is not a permutation")
        if not (np.sort(arr, axis=0) == expect[:, None]).all():
            raise BadTableError("some column is not a permutation")
        if n <= ASSOC_FULL_CHECK_MAX:
            for a in range(n):
                left = arr[arr[a]]            # left[b,c] = (a*b)*c
                right = arr[a][arr]           # right[b,c] = a*(b*c)
                if not (left == right).all():
                    raise BadTableError(f"associativity fails at a={a}")
        else:
            rng = random.Random(_ASSOC_SEED)
            t = self.table
            for _ in range(ASSOC_SAMPLE_FACTOR * n * n):
                a = rng.randrange(n)
                b = rng.randrange(n)
                c = rng.randrange(n)
                if t[t[a][b]][c] != t[a][t[b][c]]:
                    raise BadTableError(
                        f"associativity fails at ({a},{b},{c})"
                    )


class Group:
    """An immutable finite permutation group with canonical element order."""

    __slots__ = (
        "degree",
        "generators",
        "elements",
        "order",
        "name",
        "_index",
        "_table",
        "_inv",
        "_orders",
        "_memo",
    )

    def __init__(
        self,
        degree: int,
        generators: Sequence[Perm],
        elements: Sequence[Perm],
        name: Optional[str] = None,
        table: Optional[list[list[int]]] = None,
    ):
        self.degree = degree
        self.generators = tuple(generators)
        self.elements = tuple(elements)
        self.order = len(self.elements)
        self.name = name
        if self.order == 0 or not self.elements[0].is_identity():
            raise PermlatError("element list must start with the identity")
        for i in range(self.order - 1):
            if not self.elements[i].images < self.elements[i + 1].images:
                raise PermlatError("elements are not canonically sorted")
        self._index = {p.images: i for i, p in enumerate(self.elements)}
        self._table = table
        self._inv = None
        self._orders = None
        self._memo: dict = {}

    # -- element access -------------------------------------------------

    def index_of(self, p: Perm) -> int:
        try:
            return self._index[p.images]
        except KeyError:
            raise PermlatError(f"{p!r} is not an element of this group") from None

    def __contains__(self, p: Perm) -> bool:
        return isinstance(p, Perm) and p.images in self._index

    def element(self, i: int) -> Perm:
        return self.elements[i]

    def generator_indices(self) -> tuple[int, ...]:
        return tuple(self.index_of(g) for g in self.generators)

    # -- index-level machinery -------------------------------------------

    def table(self) -> list[list[int]]:
        if self._table is None:
            idx = self._index
            self._table = [
                [idx[(a * b).images] for b in self.elements] for a in self.elements
            ]
        return self._table

    def inverse_table(self) -> list[int]:
        if self._inv is None:
            idx = self._index
            self._inv = [idx[p.inverse().images] for p in self.elements]
        return self._inv

    def element_orders(self) -> list[int]:
        if self._orders is None:
            self._orders = [p.order() for p in self.elements]
        return self._orders

    @property
    def prime_factorization(self) -> dict[int, int]:
        memo = self._memo.get("primefac")
        if memo is None:
            memo = _factorize(self.order)
            self._memo["primefac"] = memo
        return memo

    def is_abelian(self) -> bool:
        memo = self._memo.get("abelian")
        if memo is None:
            memo = all(
                (a * b).images == (b * a).images
                for i, a in enumerate(self.generators)
                for b in self.generators[i + 1:]
            )
            self._memo["abelian"] = memo
        return memo

    def conjugacy_classes(self) -> tuple[list[list[int]], list[int]]:
        """Element conjugacy classes (sorted index lists) and class index map."""
        memo = self._memo.get("conjclasses")
        if memo is None:
            t = self.table()
            inv = self.inverse_table()
            gidx = self.generator_indices()
            class_of = [-1] * self.order
            classes: list[list[int]] = []
            for x in range(self.order):
                if class_of[x] != -1:
                    continue
                cid = len(classes)
                class_of[x] = cid
                orbit = [x]
                stack = [x]
                while stack:
                    y = stack.pop()
                    for g in gidx:
                        z = t[t[inv[g]][y]][g]
                        if class_of[z] == -1:
                            class_of[z] = cid
                            orbit.append(z)
                            stack.append(z)
                classes.append(sorted(orbit))
            memo = (classes, class_of)
            self._memo["conjclasses"] = memo
        return memo

    # -- subgroup handles -------------------------------------------------

    def subgroup(self, members: int, generator_indices=None) -> "Subgroup":
        return Subgroup(self, members, generator_indices)

    def trivial_subgroup(self) -> "Subgroup":
        return Subgroup(self, 1, ())

    def full_subgroup(self) -> "Subgroup":
        bits = (1 << self.order) - 1
        return Subgroup(self, bits, self.generator_indices())

    def subgroup_generated_by(self, perms: Iterable[Perm]) -> "Subgroup":
        idxs = tuple(self.index_of(p) for p in perms)
        t = self.table()
        bits = _close_bits(t, 1, (), idxs)
        gens = tuple(dict.fromkeys(i for i in idxs if i != 0))
        return Subgroup(self, bits, gens if gens else ())

    def __repr__(self) -> str:
        label = self.name or f"degree {self.degree}"
        return f"Group<{label}, order {self.order}>"


class Subgroup:
    """A subgroup, held as a bitset over the parent's element indices."""

    __slots__ = ("parent", "members", "order", "generator_indices")

    def __init__(self, parent: Group, members: int, generator_indices=None):
        self.parent = parent
        self.members = members
        self.order = members.bit_count()
        if not members & 1:
            raise PermlatError("subgroup must contain the identity")
        if parent.order % self.order:
            raise PermlatError(
                f"order {self.order} does not divide group order {parent.order}"
            )
        if generator_indices is None:
            generator_indices = _extract_generators(parent.table(), members)
        self.generator_indices = tuple(generator_indices)

    @property
    def index(self) -> int:
        return self.parent.order // self.order

    @property
    def generators(self) -> tuple[Perm, ...]:
        return tuple(self.parent.elements[i] for i in self.generator_indices)

    def element_indices(self) -> list[int]:
        return list(_iter_bits(self.members))

    def elements(self) -> list[Perm]:
        return [self.parent.elements[i] for i in _iter_bits(self.members)]

    def contains(self, other: "Subgroup") -> bool:
        return other.members & ~self.members == 0

    def contains_index(self, i: int) -> bool:
        return bool((self.members >> i) & 1)

    def is_trivial(self) -> bool:
        return self.order == 1

    def is_full(self) -> bool:
        return self.order == self.parent.order

    def conjugate(self, g: int) -> "Subgroup":
        t = self.parent.table()
        inv = self.parent.inverse_table()
        bits = _conjugate_bits(t, inv, self.members, g)
        row = t[inv[g]]
        gens = tuple(t[row[x]][g] for x in self.generator_indices)
        return Subgroup(self.parent, bits, gens)

    def is_normal(self) -> bool:
        t = self.parent.table()
        inv = self.parent.inverse_table()
        return all(
            _conjugate_bits(t, inv, self.members, g) == self.members
            for g in self.parent.generator_indices()
        )

    def is_elementary_abelian(self) -> bool:
        if self.order == 1:
            return True
        fac = _factorize(self.order)
        if len(fac) != 1:
            return False
        p = next(iter(fac))
        orders = self.parent.element_orders()
        if any(orders[i] not in (1, p) for i in _iter_bits(self.members)):
            return False
        els = self.elements()
        return all(
            (a * b).images == (b * a).images
            for i, a in enumerate(els)
            for b in els[i + 1:]
        )

    def is_cyclic(self) -> bool:
        orders = self.parent.element_orders()
        return any(orders[i] == self.order for i in _iter_bits(self.members))

    def as_group(self) -> Group:
        """Materialize as a standalone Group (table derived from the parent)."""
        cache = self.parent._memo.setdefault("subgroup_groups", {})
        got = cache.get(self.members)
        if got is None:
            pt = self.parent.table()
            idxs = self.element_indices()
            pos = {old: new for new, old in enumerate(idxs)}
            table = [[pos[pt[a][b]] for b in idxs] for a in idxs]
            got = Group(
                self.parent.degree,
                self.generators,
                tuple(self.parent.elements[i] for i in idxs),
                table=table,
            )
            cache[self.members] = got
        return got

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subgroup)
            and self.parent is other.parent
            and self.members == other.members
        )

    def __hash__(self) -> int:
        return hash((id(self.parent), self.members))

    def describe(self) -> str:
        gens = ", ".join(p.cycle_notation() for p in self.generators) or "()"
        return f"<order {self.order}: {gens}>"

    def __repr__(self) -> str:
        return f"Subgroup{self.describe()}"


class QuotientResult(NamedTuple):
    group: Group
    projection: tuple[int, ...]


def _factorize(n: int) -> dict[int, int]:
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


def close_generators(
    degree: int,
    gens: Sequence[Perm],
    cap: int = DEFAULT_GROUP_CAP,
    name: Optional[str] = None,
) -> Group:
    """Group generated by ``gens`` via breadth-first closure.

    Raises GroupOrderCapError as soon as the element count exceeds ``cap``.
    """
    if degree < 1:
        raise PermlatError("degree must be at least 1")
    gens = tuple(gens)
    for g in gens:
        if g.degree != degree:
            raise DegreeMismatchError(
                f"generator degree {g.degree} != group degree {degree}"
            )
    identity = Perm.identity(degree)
    seen = {identity.images}
    elems = [identity]
    mult_gens = [g for g in gens if not g.is_identity()]
    queue = [identity]
    while queue:
        x = queue.pop()
        for g in mult_gens:
            y = x * g
            if y.images not in seen:
                seen.add(y.images)
                elems.append(y)
                queue.append(y)
                if len(elems) > cap:
                    raise GroupOrderCapError(
                        f"group order exceeds cap {cap}", cap
                    )
    elems.sort(key=lambda p: p.images)
    return Group(degree, gens, elems, name=name)


def group_from_cayley(
    cay: CayleyTable,
    name: Optional[str] = None,
    generator_indices: Optional[Sequence[int]] = None,
) -> Group:
    """Permutation group of degree ``order`` via the regular representation.

    Element g becomes the permutation x -> x*g of the index set, which makes
    the representation a homomorphism under left-to-right composition.
    """
    n = cay.order
    t = cay.table
    perms = [
        Perm._unchecked(tuple(t[x][g] + 1 for x in range(n))) for g in range(n)
    ]
    order_idx = sorted(range(n), key=lambda g: perms[g].images)
    pos = [0] * n
    for new, old in enumerate(order_idx):
        pos[old] = new
    elements = tuple(perms[old] for old in order_idx)
    table = [
        [pos[t[order_idx[a]][order_idx[b]]] for b in range(n)] for a in range(n)
    ]
    if generator_indices is None:
        gen_pos = _extract_generators(table, (1 << n) - 1)
    else:
        gen_pos = tuple(pos[g] for g in generator_indices)
    gens = tuple(elements[i] for i in gen_pos)
    return Group(n, gens, elements, name=name, table=table)


def direct_product(a: Group, b: Group, cap: int = DEFAULT_GROUP_CAP) -> Group:
    """Direct product acting on the disjoint union of the two point sets."""
    order = a.order * b.order
    if order > cap:
        raise GroupOrderCapError(f"product order {order} exceeds cap {cap}", cap)
    da = a.degree
    shift = tuple(range(da + 1, da + b.degree + 1))
    identity_b = tuple(range(da + 1, da + b.degree + 1))

    elements = []
    for p in a.elements:
        pim = p.images
        for q in b.elements:
            elements.append(
                Perm._unchecked(pim + tuple(x + da for x in q.images))
            )
    ta, tb = a.table(), b.table()
    nb = b.order
    table = [
        [ta[i1][i2] * nb + tb[j1][j2] for i2 in range(a.order) for j2 in range(nb)]
        for i1 in range(a.order)
        for j1 in range(nb)
    ]
    identity_a = tuple(range(1, da + 1))
    gens = [Perm._unchecked(p.images + identity_b) for p in a.generators]
    gens += [
        Perm._unchecked(identity_a + tuple(x + da for x in q.images))
        for q in b.generators
    ]
    name = f"{a.name} x {b.name}" if a.name and b.name else None
    return Group(da + b.degree, gens, elements, name=name, table=table)


def _extend_automorphism(ngroup: Group, images: Sequence[Perm]) -> tuple[int, ...]:
    """Extend a generator-image list to an automorphism, as an index map.

    Walks the multiplication-by-generator graph of the group; any
    inconsistency or failure of bijectivity raises NotAutomorphismError.
    """
    if len(images) != len(ngroup.generators):
        raise NotAutomorphismError(
            f"expected {len(ngroup.generators)} images, got {len(images)}"
        )
    t = ngroup.table()
    gidx = ngroup.generator_indices()
    try:
        img_idx = [ngroup.index_of(p) for p in images]
    except PermlatError as exc:
        raise NotAutomorphismError(str(exc)) from None
    n = ngroup.order
    phi = [-1] * n
    phi[0] = 0
    stack = [0]
    while stack:
        x = stack.pop()
        fx = phi[x]
        for gi, ii in zip(gidx, img_idx):
            y = t[x][gi]
            fy = t[fx][ii]
            if phi[y] == -1:
                phi[y] = fy
                stack.append(y)
            elif phi[y] != fy:
                raise NotAutomorphismError(
                    "generator images do not define a homomorphism"
                )
    if -1 in phi or len(set(phi)) != n:
        raise NotAutomorphismError("generator images do not define a bijection")
    return tuple(phi)


def _extend_action(
    top: Group, gen_auts: Sequence[tuple[int, ...]], n: int
) -> list[tuple[int, ...]]:
    """Automorphism for every element of ``top``; checks relations hold."""
    t = top.table()
    gidx = top.generator_indices()
    auts: list = [None] * top.order
    auts[0] = tuple(range(n))
    stack = [0]
    while stack:
        x = stack.pop()
        ax = auts[x]
        for gi, ag in zip(gidx, gen_auts):
            y = t[x][gi]
            ay = tuple(ax[k] for k in ag)
            if auts[y] is None:
                auts[y] = ay
                stack.append(y)
            elif auts[y] != ay:
                raise ActionRelationError(
                    "action does not respect the top group's relations"
                )
    return auts


def semidirect_product(
    normal: Group,
    top: Group,
    action: Sequence[Sequence[Perm]],
    cap: int = DEFAULT_GROUP_CAP,
    name: Optional[str] = None,
) -> Group:
    """Semidirect product N x| H, returned via the regular representation.

    ``action[i]`` lists the images of N's generators under the automorphism
    assigned to H's i-th generator. Pairs multiply by
    (n1, h1)(n2, h2) = (n1 * phi_h1(n2), h1 h2).
    """
    order = normal.order * top.order
    if order > cap:
        raise GroupOrderCapError(f"product order {order} exceeds cap {cap}", cap)
    if len(action) != len(top.generators):
        raise ActionRelationError(
            f"need one image list per top generator "
            f"({len(top.generators)}), got {len(action)}"
        )
    gen_auts = [_extend_automorphism(normal, imgs) for imgs in action]
    auts = _extend_action(top, gen_auts, normal.order)
    tn, tt = normal.table(), top.table()
    nt = top.order
    table = [[0] * order for _ in range(order)]
    for n1 in range(normal.order):
        row_n = tn[n1]
        for h1 in range(nt):
            aut = auts[h1]
            row_t = tt[h1]
            row = table[n1 * nt + h1]
            for n2 in range(normal.order):
                v = row_n[aut[n2]] * nt
                base = n2 * nt
                for h2 in range(nt):
                    row[base + h2] = v + row_t[h2]
    cay = CayleyTable(table)
    pair_gens = [gi * nt for gi in normal.generator_indices()]
    pair_gens += list(top.generator_indices())
    pair_gens = [g for g in pair_gens if g != 0]
    return group_from_cayley(cay, name=name, generator_indices=pair_gens)


def trivial_group(degree: int = 1) -> Group:
    return close_generators(degree, [])


def wreath_regular(bottom: Group, k: int, cap: int = DEFAULT_GROUP_CAP) -> Group:
    """Regular wreath product: k copies of ``bottom`` with C_k rotating them."""
    if k < 1:
        raise PermlatError("wreath degree must be at least 1")
    order = bottom.order**k * k
    if order > cap:
        raise GroupOrderCapError(f"wreath order {order} exceeds cap {cap}", cap)
    base = bottom
    for _ in range(k - 1):
        base = direct_product(base, bottom, cap=cap)
    if k == 1:
        return semidirect_product(base, trivial_group(), [], cap=cap)
    top = close_generators(k, [Perm.from_cycles(k, [tuple(range(1, k + 1))])])
    m = len(bottom.generators)
    images = [
        base.generators[((j // m + 1) % k) * m + (j % m)] for j in range(k * m)
    ]
    return semidirect_product(base, top, [images], cap=cap)


def quotient(group: Group, normal: Subgroup) -> QuotientResult:
    """Quotient acting on right cosets, with the index-level projection map.

    The quotient group has degree |G : N|; projection[i] is the quotient
    element index of the i-th element of G.
    """
    if normal.parent is not group:
        raise PermlatError("subgroup does not belong to this group")
    if not normal.is_normal():
        raise NotNormalError("cannot quotient by a non-normal subgroup")
    t = group.table()
    n = group.order
    nmembers = normal.element_indices()
    m = n // normal.order
    coset_of = [-1] * n
    reps: list[int] = []
    for x in range(n):
        if coset_of[x] == -1:
            cid = len(reps)
            reps.append(x)
            for b in nmembers:
                coset_of[t[b][x]] = cid
    perms = [
        Perm._unchecked(tuple(coset_of[t[reps[i]][reps[j]]] + 1 for i in range(m)))
        for j in range(m)
    ]
    order_idx = sorted(range(m), key=lambda j: perms[j].images)
    pos = [0] * m
    for new, old in enumerate(order_idx):
        pos[old] = new
    elements = tuple(perms[old] for old in order_idx)
    table = [
        [pos[coset_of[t[reps[order_idx[a]]][reps[order_idx[b]]]]] for b in range(m)]
        for a in range(m)
    ]
    projection = tuple(pos[coset_of[x]] for x in range(n))
    gens = []
    seen_gens = set()
    for gi in group.generator_indices():
        q = projection[gi]
        if q != 0 and q not in seen_gens:
            seen_gens.add(q)
            gens.append(elements[q])
    qname = f"{group.name}/{normal.order}" if group.name else None
    qgroup = Group(m, tuple(gens), elements, name=qname, table=table)
    return QuotientResult(qgroup, projection)


def p_residual(group: Group, p: int) -> Subgroup:
    """Smallest normal subgroup with p-power index.

    Computed as the subgroup generated by all elements of order coprime to
    p; equality with the normal-subgroup characterization is covered by the
    test suite.
    """
    t = group.table()
    orders = group.element_orders()
    bits = 1
    gens: list[int] = []
    for i in range(1, group.order):
        if orders[i] % p and not (bits >> i) & 1:
            bits = _close_bits(t, bits, tuple(gens), (i,))
            gens.append(i)
    return Subgroup(group, bits, tuple(gens))
