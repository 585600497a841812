"""Slow reference implementations used to cross-check the fast code.

Everything here works directly on a group's multiplication table with
plain Python sets of element indices. No bitsets, no shared closure
code, and a different enumeration strategy, so agreement with the
library is a meaningful check rather than the same bug twice.
"""

from __future__ import annotations


def close_set(t, seed):
    """Product closure of a set of element indices. 0 is the identity.

    Rescans the whole current set each round. Quadratic and proud of it.
    """
    cur = {0} | set(seed)
    while True:
        add = set()
        for a in cur:
            row = t[a]
            for b in cur:
                c = row[b]
                if c not in cur:
                    add.add(c)
        if not add:
            return frozenset(cur)
        cur |= add


def is_subgroup_set(group, elems):
    t = group.table()
    inv = group.inverse_table()
    if 0 not in elems:
        return False
    for a in elems:
        if inv[a] not in elems:
            return False
        for b in elems:
            if t[a][b] not in elems:
                return False
    return True


def brute_subgroups(group):
    """Every subgroup of the group, as frozensets of element indices.

    Seeds with every cyclic subgroup, then joins each known subgroup
    with each cyclic one until nothing new appears. Any subgroup
    <x1,...,xk> is reached through the prefix chain of those joins.
    """
    t = group.table()
    cyclics = {close_set(t, [i]) for i in range(1, group.order)}
    found = {frozenset([0])} | cyclics
    work = list(found)
    while work:
        base = work.pop()
        for cyc in cyclics:
            if cyc <= base:
                continue
            joined = close_set(t, base | cyc)
            if joined not in found:
                found.add(joined)
                work.append(joined)
    for sub in found:
        assert is_subgroup_set(group, sub)
    return found


def brute_is_normal(group, elems):
    """Conjugates every member by every group element, no orbit tricks."""
    t = group.table()
    inv = group.inverse_table()
    for g in range(group.order):
        gi = inv[g]
        for x in elems:
            if t[t[gi][x]][g] not in elems:
                return False
    return True


def brute_normal_subgroups(group):
    return [s for s in brute_subgroups(group) if brute_is_normal(group, s)]


def prime_chain_reachable(group, normal_sets):
    """Normal subgroups reachable from the trivial one by prime-index steps.

    A step goes from N to M when N < M and [M:N] is prime; both ends
    must be normal in the whole group. Reachability from 1 says exactly
    that every chief factor below the endpoint has prime order.
    """
    sets = sorted({frozenset(s) for s in normal_sets}, key=len)
    reached = {frozenset([0])}
    grew = True
    while grew:
        grew = False
        for m in sets:
            if m in reached:
                continue
            for n in reached:
                if len(m) % len(n) != 0:
                    continue
                if _is_prime(len(m) // len(n)) and n < m:
                    reached.add(m)
                    grew = True
                    break
    return reached


def chain_hypercenter(group, normal_sets=None):
    """Largest normal subgroup reachable through prime-index refinement.

    With normal_sets omitted the normal subgroups are found by brute
    force too (fine up to order ~50); callers with bigger groups pass
    their own list.
    """
    if normal_sets is None:
        normal_sets = brute_normal_subgroups(group)
    reached = prime_chain_reachable(group, normal_sets)
    best = max(reached, key=len)
    for r in reached:
        assert r <= best, "reachable set has two maximal elements"
    return best


def brute_supersolvable(group, normal_sets=None):
    return len(chain_hypercenter(group, normal_sets)) == group.order


def commutator_closure(group):
    """Subgroup generated by all commutators a^-1 b^-1 a b."""
    t = group.table()
    inv = group.inverse_table()
    n = group.order
    comms = set()
    for a in range(n):
        for b in range(n):
            comms.add(t[t[t[inv[a]][inv[b]]][a]][b])
    return close_set(t, comms)


def naive_product_set(group, a_elems, b_elems):
    t = group.table()
    return {t[a][b] for a in a_elems for b in b_elems}


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True
