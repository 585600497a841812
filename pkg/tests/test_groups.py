import pytest

from permlat.errors import (
    ActionRelationError,
    BadTableError,
    GroupOrderCapError,
    NotAutomorphismError,
)
from permlat.groups import (
    CayleyTable,
    close_generators,
    direct_product,
    p_residual,
    quotient,
    semidirect_product,
    trivial_group,
    wreath_regular,
)
from permlat.perms import Perm, parse_cycle_string
from permlat.structure import fingerprint, is_nilpotent

from oracles import close_set, commutator_closure, naive_product_set


def gens(degree, *texts):
    return [parse_cycle_string(t, degree) for t in texts]


def test_close_generators_s4():
    g = close_generators(4, gens(4, "(1 2)", "(1 2 3 4)"))
    assert g.order == 24


def test_close_generators_empty():
    g = close_generators(3, [])
    assert g.order == 1


def test_close_generators_s5():
    g = close_generators(5, gens(5, "(1 2 3 4 5)", "(1 2)"))
    assert g.order == 120


def test_close_generators_cap():
    with pytest.raises(GroupOrderCapError):
        close_generators(5, gens(5, "(1 2 3 4 5)", "(1 2)"), cap=100)


def test_element_orders():
    g = close_generators(5, gens(5, "(1 2)(3 4)", "(1 2 3)(4 5)"))
    e = g.element(0)
    assert e.order() == 1
    assert parse_cycle_string("(1 2)(3 4)", 5).order() == 2
    assert parse_cycle_string("(1 2 3)(4 5)", 5).order() == 6


def test_canonical_element_order():
    g = close_generators(3, gens(3, "(1 2)", "(1 2 3)"))
    images = [p.images for p in g.elements]
    assert images == sorted(images)
    assert g.element(0) == Perm.identity(3)


def c_n(n):
    return close_generators(n, [Perm.from_cycles(n, [tuple(range(1, n + 1))])])


def test_direct_product_orders():
    g = direct_product(c_n(2), c_n(3))
    assert g.order == 6
    assert g.is_abelian()


def test_direct_product_d8_c3_nilpotent():
    d8 = close_generators(4, gens(4, "(1 2 3 4)", "(1 3)"))
    assert d8.order == 8
    g = direct_product(d8, c_n(3))
    assert g.order == 24
    assert is_nilpotent(g)


def test_direct_product_with_trivial():
    s3 = close_generators(3, gens(3, "(1 2)", "(1 2 3)"))
    g = direct_product(s3, trivial_group())
    assert g.order == 6
    assert sorted(p.order() for p in g.elements) == sorted(
        p.order() for p in s3.elements
    )


def test_semidirect_inversion_is_s3():
    c3 = c_n(3)
    c2 = c_n(2)
    inverted = [c3.generators[0].inverse()]
    g = semidirect_product(c3, c2, [inverted])
    assert g.order == 6
    assert not g.is_abelian()
    s3 = close_generators(3, gens(3, "(1 2)", "(1 2 3)"))
    assert fingerprint(g) == fingerprint(s3)


def test_semidirect_rejects_non_automorphism():
    c4 = c_n(4)
    c2 = c_n(2)
    bad = [c4.generators[0] * c4.generators[0]]  # x -> x^2 kills order
    with pytest.raises(NotAutomorphismError):
        semidirect_product(c4, c2, [bad])


def test_semidirect_action_arity_checked():
    with pytest.raises(ActionRelationError):
        semidirect_product(c_n(3), c_n(2), [])


def test_wreath_orders():
    s3 = close_generators(3, gens(3, "(1 2)", "(1 2 3)"))
    assert wreath_regular(s3, 3, cap=1000).order == 648
    w = wreath_regular(c_n(2), 2)
    assert w.order == 8
    d8 = close_generators(4, gens(4, "(1 2 3 4)", "(1 3)"))
    assert fingerprint(w) == fingerprint(d8)


def test_wreath_degree_one():
    a4 = close_generators(4, gens(4, "(1 2 3)", "(2 3 4)"))
    assert fingerprint(wreath_regular(a4, 1)) == fingerprint(a4)


def test_quotient_s4_by_v4():
    s4 = close_generators(4, gens(4, "(1 2)", "(1 2 3 4)"))
    v4 = s4.subgroup_generated_by(gens(4, "(1 2)(3 4)", "(1 3)(2 4)"))
    q = quotient(s4, v4)
    assert q.group.order == 6
    assert not q.group.is_abelian()
    s3 = close_generators(3, gens(3, "(1 2)", "(1 2 3)"))
    assert fingerprint(q.group) == fingerprint(s3)
    # projection is a homomorphism onto the quotient
    t = s4.table()
    qt = q.group.table()
    for a in range(24):
        for b in range(24):
            assert q.projection[t[a][b]] == qt[q.projection[a]][q.projection[b]]


def test_quotient_degenerate_cases():
    s4 = close_generators(4, gens(4, "(1 2)", "(1 2 3 4)"))
    assert quotient(s4, s4.full_subgroup()).group.order == 1
    assert quotient(s4, s4.trivial_subgroup()).group.order == 24


def test_p_residual_s4():
    s4 = close_generators(4, gens(4, "(1 2)", "(1 2 3 4)"))
    r = p_residual(s4, 2)
    assert r.order == 12
    assert r.is_normal()
    # A4 is the unique order-12 subgroup: all even permutations
    assert all(parity_even(p) for p in r.elements())


def parity_even(p):
    flips = sum(1 for c in p.cycles() for _ in range(len(c) - 1))
    return flips % 2 == 0


def test_p_residual_of_p_group():
    d8 = close_generators(4, gens(4, "(1 2 3 4)", "(1 3)"))
    assert p_residual(d8, 2).order == 1


def test_p_residual_minimality():
    # normal, p-power index, inside every normal subgroup of p-power index
    for g in (
        close_generators(4, gens(4, "(1 2)", "(1 2 3 4)")),
        close_generators(3, gens(3, "(1 2)", "(1 2 3)")),
        direct_product(c_n(6), c_n(2)),
    ):
        for p in g.prime_factorization:
            r = p_residual(g, p)
            assert r.is_normal()
            index = g.order // r.order
            while index % p == 0:
                index //= p
            assert index == 1
            for sub in all_normal_index_p_power(g, p):
                assert r.members & ~sub == 0


def all_normal_index_p_power(g, p):
    from oracles import brute_normal_subgroups

    out = []
    for s in brute_normal_subgroups(g):
        index = g.order // len(s)
        while index % p == 0:
            index //= p
        if index == 1:
            bits = 0
            for i in s:
                bits |= 1 << i
            out.append(bits)
    return out


def test_cayley_table_rejects_non_group():
    with pytest.raises(BadTableError):
        CayleyTable([[0, 1], [1, 1]])
    with pytest.raises(BadTableError):
        CayleyTable([[1, 0], [0, 1], [0, 1]])


def test_conjugacy_classes_partition():
    s4 = close_generators(4, gens(4, "(1 2)", "(1 2 3 4)"))
    classes, class_of = s4.conjugacy_classes()
    assert sorted(len(c) for c in classes) == [1, 3, 6, 6, 8]
    assert sorted(i for c in classes for i in c) == list(range(24))
    for c in classes:
        assert len({class_of[i] for i in c}) == 1


def test_derived_subgroup_matches_commutator_oracle():
    for g in (
        close_generators(3, gens(3, "(1 2)", "(1 2 3)")),
        close_generators(4, gens(4, "(1 2)", "(1 2 3 4)")),
        close_generators(4, gens(4, "(1 2 3 4)", "(1 3)")),
        direct_product(c_n(4), c_n(2)),
    ):
        from permlat.structure import derived_subgroup

        want = commutator_closure(g)
        got = set(derived_subgroup(g).element_indices())
        assert got == want


def test_naive_closure_agrees_with_library_closure():
    s4 = close_generators(4, gens(4, "(1 2)", "(1 2 3 4)"))
    t = s4.table()
    a = s4.index_of(parse_cycle_string("(1 2)", 4))
    b = s4.index_of(parse_cycle_string("(1 3 4)", 4))
    assert len(close_set(t, [a, b])) == 24
    sub = s4.subgroup_generated_by(gens(4, "(1 2)", "(1 3 4)"))
    assert sub.order == 24


def test_product_set_sizes():
    s3 = close_generators(3, gens(3, "(1 2)", "(1 2 3)"))
    h = {0, s3.index_of(parse_cycle_string("(1 2)", 3))}
    k = {0, s3.index_of(parse_cycle_string("(1 3)", 3))}
    assert len(naive_product_set(s3, h, k)) == 4
    a3 = {0} | {
        s3.index_of(parse_cycle_string(c, 3)) for c in ["(1 2 3)", "(1 3 2)"]
    }
    assert len(naive_product_set(s3, h, a3)) == 6
