"""Subgroup embedding predicates on top of the lattice: s-permutability,
the s-permutable join H_sG, weak s-supplementation, weak s-permutability,
c-normality, supersolvable supplements, permutability, complements.

Existential searches scan lattice entries in canonical order, so the first
witness found is deterministic. Predicates and witnesses are memoized on
the lattice keyed by subgroup bitset.
"""

from __future__ import annotations

from typing import NamedTuple, Optional

from .groups import Subgroup, _close_bits
from .lattice import SubgroupLattice, is_subnormal, permutes
from .structure import is_supersolvable


class SupplementWitness(NamedTuple):
    """Certificate that a supplement T satisfies an embedding predicate.

    ``bound`` is the subgroup the intersection was compared against
    (H_sG for the weak supplement properties, the core for c-normality,
    the trivial subgroup for plain complements).
    """

    property: str
    T: Subgroup
    intersection: Subgroup
    bound: Subgroup

    def describe(self) -> str:
        return (
            f"{self.property} via T = {self.T.describe()}, "
            f"intersection order {self.intersection.order}, "
            f"bound order {self.bound.order}"
        )


def _memo(lat: SubgroupLattice, key, compute):
    store = lat._memo
    if key not in store:
        store[key] = compute()
    return store[key]


def _resolve(lat: SubgroupLattice, h: Subgroup) -> Subgroup:
    return lat.subgroups[lat.index_of(h)]


def sylow_family(lat: SubgroupLattice) -> list:
    """All Sylow subgroups of the group: (p, list of conjugates) per prime."""

    def compute():
        return [
            (p, lat.sylow(p)[1])
            for p in sorted(lat.group.prime_factorization)
        ]

    return _memo(lat, "sylow_family", compute)


def is_s_permutable(lat: SubgroupLattice, h: Subgroup) -> bool:
    """Whether H permutes with every Sylow subgroup of the group."""
    h = _resolve(lat, h)

    def compute():
        if lat.normal_flags[lat.index_of(h)]:
            return True
        for _p, conjugates in sylow_family(lat):
            for q in conjugates:
                if not permutes(h, q):
                    return False
        return True

    return _memo(lat, ("sperm", h.members), compute)


def h_sG(lat: SubgroupLattice, h: Subgroup) -> Subgroup:
    """Join of all subgroups of H that are s-permutable in the group."""
    h = _resolve(lat, h)

    def compute():
        if is_s_permutable(lat, h):
            return h
        t = lat.group.table()
        bits = 1
        gens: tuple[int, ...] = ()
        for i in lat.within(h.members):
            e = lat.subgroups[i]
            if e.members & ~bits == 0:
                continue
            if is_s_permutable(lat, e):
                bits = _close_bits(t, bits, gens, e.generator_indices)
                gens = gens + e.generator_indices
        return lat.entry(bits)

    return _memo(lat, ("hsg", h.members), compute)


def supplements(lat: SubgroupLattice, h: Subgroup) -> list:
    """All T with H*T = G as a set, i.e. |H||T| = |G||H meet T|."""
    h = _resolve(lat, h)

    def compute():
        g_order = lat.group.order
        out = []
        for e in lat.subgroups:
            if e.order * h.order < g_order:
                continue
            inter = (e.members & h.members).bit_count()
            if e.order * h.order == g_order * inter:
                out.append(e)
        assert out and out[-1].is_full(), "G itself must always supplement"
        return out

    return _memo(lat, ("supps", h.members), compute)


def subnormal_in(lat: SubgroupLattice, h: Subgroup) -> bool:
    h = _resolve(lat, h)

    def compute():
        if lat.normal_flags[lat.index_of(h)]:
            return True
        return is_subnormal(h)

    return _memo(lat, ("subn", h.members), compute)


def _supplement_scan(lat, h, prop, require_subnormal):
    hsg = None
    for t in supplements(lat, h):
        if require_subnormal and not subnormal_in(lat, t):
            continue
        inter = h.members & t.members
        if inter != 1 and hsg is None:
            hsg = h_sG(lat, h)
        if inter == 1 or inter & ~hsg.members == 0:
            if hsg is None:
                hsg = h_sG(lat, h)
            return True, SupplementWitness(prop, t, lat.entry(inter), hsg)
    return False, None


def is_weakly_s_supplemented(
    lat: SubgroupLattice, h: Subgroup
) -> tuple[bool, Optional[SupplementWitness]]:
    """Whether some supplement T has H meet T inside h_sG(G, H)."""
    h = _resolve(lat, h)
    return _memo(
        lat,
        ("wss", h.members),
        lambda: _supplement_scan(lat, h, "weakly_s_supplemented", False),
    )


def is_weakly_s_permutable(
    lat: SubgroupLattice, h: Subgroup
) -> tuple[bool, Optional[SupplementWitness]]:
    """Same as weak s-supplementation but T must be subnormal."""
    h = _resolve(lat, h)
    return _memo(
        lat,
        ("wsp", h.members),
        lambda: _supplement_scan(lat, h, "weakly_s_permutable", True),
    )


def core_of(lat: SubgroupLattice, h: Subgroup) -> Subgroup:
    """Largest normal subgroup inside H: intersection of H's conjugates."""
    h = _resolve(lat, h)

    def compute():
        bits = (1 << lat.group.order) - 1
        for i in lat.conjugacy_classes[lat.class_of[lat.index_of(h)]]:
            bits &= lat.subgroups[i].members
        return lat.entry(bits)

    return _memo(lat, ("core", h.members), compute)


def is_c_normal(lat: SubgroupLattice, h: Subgroup) -> bool:
    """Whether some normal T has HT = G and H meet T inside the core of H."""
    h = _resolve(lat, h)

    def compute():
        g_order = lat.group.order
        bound = core_of(lat, h).members
        for t in lat.normal_subgroups():
            if t.order * h.order < g_order:
                continue
            inter = h.members & t.members
            if t.order * h.order != g_order * inter.bit_count():
                continue
            if inter & ~bound == 0:
                return True
        return False

    return _memo(lat, ("cnorm", h.members), compute)


def has_supersolvable_supplement(
    lat: SubgroupLattice, h: Subgroup
) -> tuple[bool, Optional[Subgroup]]:
    h = _resolve(lat, h)

    def compute():
        for t in supplements(lat, h):
            if is_supersolvable(t.as_group()):
                return True, t
        return False, None

    return _memo(lat, ("sss", h.members), compute)


def is_complemented(lat: SubgroupLattice, h: Subgroup) -> bool:
    h = _resolve(lat, h)
    return bool(lat.complements(h))


def is_permutable(lat: SubgroupLattice, h: Subgroup) -> bool:
    """Whether H permutes with every subgroup of the group."""
    h = _resolve(lat, h)

    def compute():
        return all(permutes(h, e) for e in lat.subgroups)

    return _memo(lat, ("perm", h.members), compute)
