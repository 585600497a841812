"""Verification harness: hypothesis/conclusion checkers for the cataloged
statements (ids thmB, thm12, L2.1..L2.9, L3.1, C3.2, L3.3, L3.5,
C4.3..C4.12, remark1), the q13 scanner, and the order-324 example build.

The statement ids are opaque labels fixed by the CLI contract. Every
checker evaluates "hypothesis implies conclusion" instances over a group
and reports Verdicts; a consistent=False verdict is a build-breaking
event for any statement in the catalog.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, NamedTuple, Optional

from .errors import NotNormalError, PermlatError
from .groups import (
    Group,
    Perm,
    Subgroup,
    _iter_bits,
    close_generators,
    p_residual,
    quotient,
    wreath_regular,
)
from .lattice import (
    DEFAULT_LATTICE_CAP,
    SubgroupLattice,
    enumerate_subgroups,
    normalizer,
)
from .structure import (
    chief_series,
    derived_subgroup,
    exponent,
    fingerprint,
    fitting_subgroup,
    iota,
    is_nilpotent,
    is_p_nilpotent,
    is_p_solvable,
    is_solvable,
    is_supersolvable,
    minimal_normal_subgroups,
    p_core,
    p_length,
    p_prime_core,
    phi_p_group,
    u_hypercenter,
)
from .embedding import (
    has_supersolvable_supplement,
    is_c_normal,
    is_complemented,
    is_permutable,
    is_s_permutable,
    is_weakly_s_permutable,
    is_weakly_s_supplemented,
)

DEFAULT_MAX_NORMAL_E = 20


@dataclass(frozen=True)
class Verdict:
    """One checked instance of a statement on a group."""

    statement_id: str
    group_id: str
    instance: str
    hypothesis_satisfied: bool
    conclusion_holds: Optional[bool]
    consistent: bool
    witnesses: tuple = ()

    def as_dict(self) -> dict:
        return {
            "statement": self.statement_id,
            "group": self.group_id,
            "instance": self.instance,
            "hypothesis_satisfied": self.hypothesis_satisfied,
            "conclusion_holds": self.conclusion_holds,
            "consistent": self.consistent,
            "witnesses": list(self.witnesses),
        }


def _implication(statement_id, group_id, instance, qualifying, failures, witnesses=()):
    """Verdict for a universally quantified implication: ``qualifying`` says
    whether any instance met the hypothesis, ``failures`` lists conclusion
    breakers among them."""
    conclusion = None if not qualifying else not failures
    return Verdict(
        statement_id,
        group_id,
        instance,
        hypothesis_satisfied=qualifying,
        conclusion_holds=conclusion,
        consistent=(not qualifying) or bool(conclusion),
        witnesses=tuple(failures[:3]) + tuple(witnesses),
    )


class DOrderEntry(NamedTuple):
    d_order: int
    clause_holds: bool
    failing_h: Optional[str]
    cond_i: bool
    cond_ii: bool
    cond_iii: bool
    two_d_rule_applied: bool


class SylowReport(NamedTuple):
    p: int
    sylow_order: int
    sylow_cyclic: bool
    d_orders: list
    satisfied: bool
    satisfied_with_condition: bool


class HypothesisReport(NamedTuple):
    group_id: str
    e_id: str
    mode: str
    per_prime: list
    hypothesis: bool
    hypothesis_with_condition: bool


class GroupAnalysis:
    """A corpus group with its lazily built lattice and quotient caches."""

    def __init__(
        self,
        group: Group,
        name: Optional[str] = None,
        lattice_cap: int = DEFAULT_LATTICE_CAP,
        max_normal_e: int = DEFAULT_MAX_NORMAL_E,
    ):
        self.group = group
        self.name = name or group.name or f"order{group.order}"
        self.lattice_cap = lattice_cap
        self.max_normal_e = max_normal_e
        self._lat: Optional[SubgroupLattice] = None
        self._quots: dict = {}
        self._subs: dict = {}

    @property
    def lat(self) -> SubgroupLattice:
        if self._lat is None:
            self._lat = enumerate_subgroups(self.group, cap=self.lattice_cap)
        return self._lat

    def label(self, sub: Subgroup) -> str:
        return f"#{self.lat.index_of(sub):03d}(order {sub.order})"

    def normal_e(self) -> tuple[list, bool]:
        """Normal subgroups to pair as E, largest first, capped."""
        norms = sorted(
            self.lat.normal_subgroups(), key=lambda s: (-s.order, s.members)
        )
        if len(norms) > self.max_normal_e:
            return norms[: self.max_normal_e], True
        return norms, False

    def quotient_by(self, n: Subgroup):
        """(GroupAnalysis of G/N, projection from G element indices)."""
        key = n.members
        if key not in self._quots:
            qr = quotient(self.group, n)
            qa = GroupAnalysis(
                qr.group,
                name=f"{self.name}/{self.label(n)}",
                lattice_cap=self.lattice_cap,
            )
            self._quots[key] = (qa, qr.projection)
        return self._quots[key]

    def subgroup_analysis(self, k: Subgroup):
        """(GroupAnalysis of K as a group, map from G index to K index)."""
        key = k.members
        if key not in self._subs:
            idxmap = {gi: ki for ki, gi in enumerate(k.element_indices())}
            ka = GroupAnalysis(
                k.as_group(),
                name=f"{self.name}|{self.label(k)}",
                lattice_cap=self.lattice_cap,
            )
            self._subs[key] = (ka, idxmap)
        return self._subs[key]

    @staticmethod
    def image_bits(projection, bits: int) -> int:
        out = 0
        for i in _iter_bits(bits):
            out |= 1 << projection[i]
        return out


def sub_bits_in_parent(inner: Subgroup, outer: Subgroup) -> int:
    """Bits (in the outer subgroup's parent) of a subgroup computed inside
    outer.as_group()."""
    elems = outer.element_indices()
    bits = 0
    for j in _iter_bits(inner.members):
        bits |= 1 << elems[j]
    return bits


# -- thmB / thm12 hypothesis machinery ----------------------------------------


def _order_clause(ga: GroupAnalysis, p_sub: Subgroup, order: int, mode: str):
    """Whether every subgroup of p_sub of the given order that lacks a
    supersolvable supplement in G satisfies the mode's weak property in G.
    Returns (holds, first failing subgroup description or None)."""
    lat = ga.lat
    pred = (
        is_weakly_s_supplemented
        if mode == "supplemented"
        else is_weakly_s_permutable
    )
    for i in lat.within(p_sub.members, order=order):
        h = lat.subgroups[i]
        if has_supersolvable_supplement(lat, h)[0]:
            continue
        if pred(lat, h)[0]:
            continue
        return False, h.describe()
    return True, None


def sylow_of(ga: GroupAnalysis, e: Subgroup, p: int) -> Subgroup:
    """Lowest-index Sylow p-subgroup of the subgroup e."""
    pf = e.as_group().prime_factorization
    target = p ** pf.get(p, 0)
    idxs = ga.lat.within(e.members, order=target)
    if not idxs:
        raise PermlatError(f"no order-{target} subgroup inside {e.describe()}")
    return ga.lat.subgroups[idxs[0]]


def thmB_hypothesis(
    ga: GroupAnalysis, e: Subgroup, mode: str = "supplemented"
) -> HypothesisReport:
    """Evaluate the per-Sylow order-|D| clause on a normal subgroup E.

    For each prime p with non-cyclic Sylow P of E and each |D| = p^k with
    0 < k < iota(P): the clause holds iff every subgroup of P of order |D|
    (and of order 2|D| when p = 2, P is nonabelian, and |P:D| > 2) has a
    supersolvable supplement in G or is weakly s-supplemented (mode
    "supplemented") resp. weakly s-permutable (mode "permutable") in G.
    Conditions (i)/(ii)/(iii) are recorded per (P, |D|); the report's
    hypothesis_with_condition requires some |D| whose clause AND one of
    the conditions hold, for every non-cyclic Sylow.
    """
    if mode not in ("supplemented", "permutable"):
        raise PermlatError(f"unknown mode {mode!r}")
    lat = ga.lat
    e = lat.subgroups[lat.index_of(e)]
    if not lat.normal_flags[lat.index_of(e)]:
        raise NotNormalError(f"E = {e.describe()} is not normal")
    per_prime = []
    hyp = True
    hyp_cond = True
    e_pf = e.as_group().prime_factorization
    for p in sorted(e_pf):
        rep = sylow_of(ga, e, p)
        if rep.is_cyclic():
            per_prime.append(
                SylowReport(p, rep.order, True, [], True, True)
            )
            continue
        p_group = rep.as_group()
        i_p = iota(rep.order, p)
        derived_order = derived_subgroup(p_group).order
        i_pprime = iota(derived_order, p)
        cond_i = phi_p_group(p_group).members != derived_subgroup(p_group).members
        entries = []
        any_clause = False
        any_with_cond = False
        for k in range(1, i_p):
            d = p**k
            two_d = p == 2 and not p_group.is_abelian() and rep.order // d > 2
            holds, failing = _order_clause(ga, rep, d, mode)
            if holds and two_d:
                holds, failing = _order_clause(ga, rep, 2 * d, mode)
            cond_ii = d <= derived_order
            cond_iii = derived_order < d and (
                math.gcd(i_p - i_pprime, k - i_pprime) == 1
                or math.gcd(i_p, i_p - k) == 1
            )
            entries.append(
                DOrderEntry(d, holds, failing, cond_i, cond_ii, cond_iii, two_d)
            )
            if holds:
                any_clause = True
                if cond_i or cond_ii or cond_iii:
                    any_with_cond = True
        per_prime.append(
            SylowReport(p, rep.order, False, entries, any_clause, any_with_cond)
        )
        hyp = hyp and any_clause
        hyp_cond = hyp_cond and any_with_cond
    return HypothesisReport(ga.name, ga.label(e), mode, per_prime, hyp, hyp_cond)


def _formation(formation):
    if formation is None:
        return "U", is_supersolvable
    label, pred = formation
    return f"{label} (user formation, soundness not guaranteed)", pred


def _hyp_witnesses(rep: HypothesisReport) -> list:
    out = []
    for syl in rep.per_prime:
        if syl.sylow_cyclic:
            out.append(f"p={syl.p}: Sylow cyclic, imposes nothing")
            continue
        chosen = next(
            (
                d
                for d in syl.d_orders
                if d.clause_holds and (d.cond_i or d.cond_ii or d.cond_iii)
            ),
            None,
        )
        if chosen is not None:
            conds = "".join(
                name
                for name, on in (
                    ("(i)", chosen.cond_i),
                    ("(ii)", chosen.cond_ii),
                    ("(iii)", chosen.cond_iii),
                )
                if on
            )
            out.append(
                f"p={syl.p}: clause holds at |D|={chosen.d_order} with {conds}"
            )
        else:
            fails = [d for d in syl.d_orders if not d.clause_holds]
            if fails:
                d = fails[-1]
                out.append(
                    f"p={syl.p}: clause fails at |D|={d.d_order}, H = {d.failing_h}"
                )
            else:
                out.append(f"p={syl.p}: clause holds but no condition does")
    return out


def check_thmB(
    ga: GroupAnalysis,
    e: Subgroup,
    mode: str = "supplemented",
    formation=None,
) -> Verdict:
    """hypothesis: G/E in F and the per-Sylow clause; the supplemented mode
    additionally requires one of conditions (i)-(iii) per Sylow, the
    permutable mode does not. Conclusion: G in F."""
    label, pred = _formation(formation)
    rep = thmB_hypothesis(ga, e, mode)
    qa, _ = ga.quotient_by(e)
    quotient_in_f = pred(qa.group)
    clause = (
        rep.hypothesis_with_condition
        if mode == "supplemented"
        else rep.hypothesis
    )
    hyp = quotient_in_f and clause
    concl = pred(ga.group)
    witnesses = [f"formation {label}", f"G/E in F: {quotient_in_f}"]
    witnesses.extend(_hyp_witnesses(rep))
    return Verdict(
        "thmB" if mode == "supplemented" else "thm12",
        ga.name,
        f"E={ga.label(e)}",
        hypothesis_satisfied=hyp,
        conclusion_holds=concl,
        consistent=(not hyp) or concl,
        witnesses=tuple(witnesses),
    )


def check_thm12(ga: GroupAnalysis, e: Subgroup, formation=None) -> Verdict:
    return check_thmB(ga, e, mode="permutable", formation=formation)


def scan_question13(ga: GroupAnalysis) -> list:
    """Flag (G, E) counterexample candidates: the clause without conditions
    (i)-(iii) plus G/E supersolvable, but G not supersolvable.

    Never hard-fails on a flag alone. Superset consistency: a flagged
    instance must NOT also satisfy some condition (that would contradict
    the proved implication and is reported as inconsistent).
    """
    out = []
    normals, _trunc = ga.normal_e()
    for e in normals:
        rep = thmB_hypothesis(ga, e, "supplemented")
        qa, _ = ga.quotient_by(e)
        quotient_in_u = is_supersolvable(qa.group)
        hyp = quotient_in_u and rep.hypothesis
        concl = is_supersolvable(ga.group)
        flagged = hyp and not concl
        contradiction = flagged and rep.hypothesis_with_condition
        witnesses = []
        if flagged:
            witnesses.append("counterexample candidate for the open question")
            witnesses.extend(_hyp_witnesses(rep))
        out.append(
            Verdict(
                "q13",
                ga.name,
                f"E={ga.label(e)}",
                hypothesis_satisfied=hyp,
                conclusion_holds=concl if hyp else None,
                consistent=not contradiction,
                witnesses=tuple(witnesses),
            )
        )
    return out


# -- L-series checkers -------------------------------------------------------


def check_L2_1(ga: GroupAnalysis) -> list:
    """Three closure properties of weak s-supplementation: quotient
    equivalence over a normal subgroup, restriction to intermediate
    subgroups, and coprime image after a normal subgroup."""
    lat = ga.lat
    verdicts = []

    fails = []
    count = 0
    for h in lat.normal_subgroups():
        if h.is_full():
            continue
        qa, proj = ga.quotient_by(h)
        qlat = qa.lat
        for k in lat.subgroups:
            if h.members & ~k.members:
                continue
            count += 1
            img = qlat.entry(GroupAnalysis.image_bits(proj, k.members))
            in_quotient = is_weakly_s_supplemented(qlat, img)[0]
            in_group = is_weakly_s_supplemented(lat, k)[0]
            if in_quotient != in_group:
                fails.append(
                    f"H={ga.label(h)} K={ga.label(k)}: "
                    f"quotient {in_quotient} vs group {in_group}"
                )
    verdicts.append(_implication("L2.1", ga.name, "(i)", count > 0, fails))

    fails = []
    count = 0
    for k in lat.subgroups:
        if k.is_full() or k.order == 1:
            continue
        ka, idxmap = ga.subgroup_analysis(k)
        for i in lat.within(k.members):
            h = lat.subgroups[i]
            if not is_weakly_s_supplemented(lat, h)[0]:
                continue
            count += 1
            bits = 0
            for gi in _iter_bits(h.members):
                bits |= 1 << idxmap[gi]
            if not is_weakly_s_supplemented(ka.lat, ka.lat.entry(bits))[0]:
                fails.append(f"H={ga.label(h)} K={ga.label(k)}")
    verdicts.append(_implication("L2.1", ga.name, "(ii)", count > 0, fails))

    fails = []
    count = 0
    for n in lat.normal_subgroups():
        if n.is_full():
            continue
        qa, proj = ga.quotient_by(n)
        for e in lat.subgroups:
            if math.gcd(n.order, e.order) != 1:
                continue
            if not is_weakly_s_supplemented(lat, e)[0]:
                continue
            count += 1
            en = lat.join(n, e)
            img = qa.lat.entry(GroupAnalysis.image_bits(proj, en.members))
            if not is_weakly_s_supplemented(qa.lat, img)[0]:
                fails.append(f"N={ga.label(n)} E={ga.label(e)}")
    verdicts.append(_implication("L2.1", ga.name, "(iii)", count > 0, fails))
    return verdicts


def _is_p_group_entry(sub: Subgroup):
    """(p, exponent) when the subgroup is a nontrivial p-group, else None."""
    pf = sub.as_group().prime_factorization
    if len(pf) != 1:
        return None
    return next(iter(pf.items()))


def check_L2_2(ga: GroupAnalysis) -> list:
    """Normal p-subgroup P lies in the U-hypercenter iff its image mod
    Phi(P) lies in the U-hypercenter of the quotient."""
    lat = ga.lat
    zu = u_hypercenter(ga.group).members
    fails = []
    count = 0
    for p_sub in lat.normal_subgroups():
        if p_sub.order == 1 or _is_p_group_entry(p_sub) is None:
            continue
        count += 1
        left = p_sub.members & ~zu == 0
        phi = phi_p_group(p_sub.as_group())
        phi_sub = lat.entry(sub_bits_in_parent(phi, p_sub))
        qa, proj = ga.quotient_by(phi_sub)
        img = GroupAnalysis.image_bits(proj, p_sub.members)
        right = img & ~u_hypercenter(qa.group).members == 0
        if left != right:
            fails.append(f"P={ga.label(p_sub)}: {left} vs mod-Phi(P) {right}")
    return [_implication("L2.2", ga.name, "all normal p-subgroups", count > 0, fails)]


def check_L2_3(ga: GroupAnalysis) -> list:
    """s-permutable p-subgroups are normalized by the p-residual."""
    lat = ga.lat
    residuals = {}
    fails = []
    count = 0
    for sub in lat.subgroups:
        pe = _is_p_group_entry(sub)
        if pe is None:
            continue
        if not is_s_permutable(lat, sub):
            continue
        count += 1
        p = pe[0]
        if p not in residuals:
            residuals[p] = p_residual(ga.group, p).members
        if residuals[p] & ~normalizer(sub).members:
            fails.append(f"H={ga.label(sub)} p={p}")
    return [_implication("L2.3", ga.name, "s-permutable p-subgroups", count > 0, fails)]


def check_L2_4(ga: GroupAnalysis) -> list:
    """p-solvable G with trivial O_p': every subgroup containing O_p
    also has trivial O_p'."""
    lat = ga.lat
    verdicts = []
    for p in sorted(ga.group.prime_factorization):
        hyp = (
            is_p_solvable(ga.group, p)
            and p_prime_core(ga.group, p).order == 1
        )
        fails = []
        if hyp:
            op = p_core(ga.group, p).members
            for sub in lat.subgroups:
                if op & ~sub.members:
                    continue
                if p_prime_core(sub.as_group(), p).order != 1:
                    fails.append(f"H={ga.label(sub)}")
        verdicts.append(_implication("L2.4", ga.name, f"p={p}", hyp, fails))
    return verdicts


def _direct_minimal_decomposition(ga: GroupAnalysis, n_sub: Subgroup):
    """Greedy direct decomposition of a normal subgroup into minimal normal
    subgroups of G. Returns the chosen factors, or None if their product
    does not reach the whole subgroup.

    Greedy is complete here: whenever a minimal normal M inside N is not
    contained in the accumulated product A, M meet A is a proper normal
    subgroup of M, hence trivial, so M extends the direct product.
    """
    from .groups import _close_bits

    t = ga.group.table()
    acc = 1
    gens: tuple[int, ...] = ()
    chosen = []
    for m in ga.lat.minimal_normal_subgroups():
        if m.members & ~n_sub.members:
            continue
        if (m.members & acc) != 1:
            continue
        new = _close_bits(t, acc, gens, m.generator_indices)
        if new.bit_count() != acc.bit_count() * m.order:
            raise PermlatError("normal product with trivial meet is not direct")
        acc = new
        gens = gens + m.generator_indices
        chosen.append(m)
    if acc != n_sub.members:
        return None
    return chosen


def check_L2_5(ga: GroupAnalysis) -> list:
    """Nilpotent normal N avoiding the Frattini subgroup is a direct
    product of minimal normal subgroups (so N lies in the socle)."""
    lat = ga.lat
    phi = lat.frattini().members
    socle = lat.socle().members
    fails = []
    count = 0
    for n in lat.normal_subgroups():
        if n.order == 1:
            continue
        if (n.members & phi) != 1:
            continue
        if not is_nilpotent(n.as_group()):
            continue
        count += 1
        if n.members & ~socle:
            fails.append(f"N={ga.label(n)} escapes the socle")
            continue
        if _direct_minimal_decomposition(ga, n) is None:
            fails.append(f"N={ga.label(n)} is not a product of minimal normals")
    return [_implication("L2.5", ga.name, "nilpotent normal, Phi-avoiding", count > 0, fails)]


def _alternating(n: int) -> Group:
    if n <= 2:
        return close_generators(max(n, 1), [], name=f"A{n}")
    if n == 3:
        return close_generators(3, [Perm.from_cycles(3, [(1, 2, 3)])], name="A3")
    cycle = tuple(range(1, n + 1)) if n % 2 else tuple(range(2, n + 1))
    gens = [Perm.from_cycles(n, [(1, 2, 3)]), Perm.from_cycles(n, [cycle])]
    return close_generators(n, gens, name=f"A{n}")


def _psl_orders(max_order: int):
    """(order, n, q, index) for PSL_n(q) with the projective-space index."""
    out = []
    for n in (2, 3, 4):
        for q in (2, 3, 4, 5, 7, 8, 9, 11, 13):
            size = 1
            for i in range(2, n + 1):
                size *= q**i - 1
            size *= q ** (n * (n - 1) // 2)
            size //= math.gcd(n, q - 1)
            if size <= max_order:
                out.append((size, n, q, (q**n - 1) // (q - 1)))
    return out


def check_L2_6(ga: GroupAnalysis) -> list:
    """Prime-power-index subgroups of nonabelian simple groups match the
    classified cases: alternating point stabilizers, or projective linear
    groups with the projective-space index."""
    from .structure import is_simple, _prime_power_base

    g = ga.group
    if g.is_abelian() or not is_simple(g):
        return []
    lat = ga.lat
    psl = _psl_orders(10**6)
    fails = []
    count = 0
    details = []
    for sub in lat.subgroups:
        if sub.is_full():
            continue
        index = g.order // sub.order
        if _prime_power_base(index) is None:
            continue
        count += 1
        matched = None
        if math.factorial(index) // 2 == g.order:
            if fingerprint(sub.as_group()) == fingerprint(_alternating(index - 1)):
                matched = f"alternating point stabilizer, n={index}"
        if matched is None:
            for size, n, q, proj_index in psl:
                if size == g.order and proj_index == index:
                    matched = f"projective linear index, PSL_{n}({q})"
                    break
        if matched is None and g.order == 660 and sub.order == 60:
            matched = "PSL_2(11) with an order-60 point stabilizer"
        if matched is None:
            fails.append(f"H={ga.label(sub)} index {index} matches no case")
        else:
            details.append(f"index {index}: {matched}")
    return [
        _implication(
            "L2.6",
            ga.name,
            "prime-power-index subgroups",
            count > 0,
            fails,
            witnesses=tuple(sorted(set(details))),
        )
    ]


def _min_prime_sylow(ga: GroupAnalysis):
    if ga.group.order == 1:
        return None
    p = min(ga.group.prime_factorization)
    return p, ga.lat.sylow(p)[0]


def check_L2_7(ga: GroupAnalysis) -> list:
    """Every maximal subgroup of a minimal-prime Sylow subgroup lacking a
    supersolvable supplement is weakly s-supplemented: then the group is
    p-nilpotent for that prime."""
    ps = _min_prime_sylow(ga)
    if ps is None:
        return []
    p, rep = ps
    lat = ga.lat
    witness = None
    for i in lat.within(rep.members, order=rep.order // p):
        h = lat.subgroups[i]
        if has_supersolvable_supplement(lat, h)[0]:
            continue
        if is_weakly_s_supplemented(lat, h)[0]:
            continue
        witness = h.describe()
        break
    hyp = witness is None
    concl = is_p_nilpotent(ga.group, p) if hyp else None
    return [
        Verdict(
            "L2.7",
            ga.name,
            f"p={p}",
            hyp,
            concl,
            (not hyp) or bool(concl),
            witnesses=(f"failing maximal H = {witness}",) if witness else (),
        )
    ]


def check_L2_8(ga: GroupAnalysis) -> list:
    """Structure of minimal non-p-nilpotent groups: normal Sylow p with a
    cyclic non-normal complement, Frattini-minimal image, and the exponent
    restriction."""
    lat = ga.lat
    g = ga.group
    verdicts = []
    for p in sorted(g.prime_factorization):
        if is_p_nilpotent(g, p):
            verdicts.append(
                Verdict("L2.8", ga.name, f"p={p}", False, None, True)
            )
            continue
        minimal = True
        for sub in reversed(lat.subgroups):
            if sub.is_full():
                continue
            if not is_p_nilpotent(sub.as_group(), p):
                minimal = False
                break
        if not minimal:
            verdicts.append(
                Verdict("L2.8", ga.name, f"p={p}", False, None, True)
            )
            continue
        fails = []
        rep, conjugates = lat.sylow(p)
        p_normal = len(conjugates) == 1
        others = [q for q in g.prime_factorization if q != p]
        complement_ok = False
        if len(others) == 1:
            q = others[0]
            qrep, qconj = lat.sylow(q)
            complement_ok = qrep.is_cyclic() and len(qconj) > 1
        if not (p_normal and complement_ok):
            fails.append("no normal Sylow p with cyclic non-normal q-complement")
        if p_normal:
            phi_sub = lat.entry(
                sub_bits_in_parent(phi_p_group(rep.as_group()), rep)
            )
            qa, proj = ga.quotient_by(phi_sub)
            img = GroupAnalysis.image_bits(proj, rep.members)
            if not any(
                m.members == img for m in minimal_normal_subgroups(qa.group)
            ):
                fails.append("P mod Phi(P) is not minimal normal")
        exp = exponent(rep.as_group())
        if rep.as_group().is_abelian() or p > 2:
            if exp != p:
                fails.append(f"exponent {exp} != {p}")
        elif exp != 4:
            fails.append(f"exponent {exp} != 4")
        verdicts.append(
            Verdict(
                "L2.8",
                ga.name,
                f"p={p}",
                True,
                not fails,
                not fails,
                witnesses=tuple(fails),
            )
        )
    return verdicts


def check_L2_9(ga: GroupAnalysis) -> list:
    """Subgroups of order p (and 4, when the minimal-prime Sylow is a
    nonabelian 2-group) weakly s-supplemented unless supersolvably
    supplemented: then p-nilpotent."""
    ps = _min_prime_sylow(ga)
    if ps is None:
        return []
    p, rep = ps
    lat = ga.lat
    orders = [p]
    if p == 2 and rep.order >= 4 and not rep.as_group().is_abelian():
        orders.append(4)
    witness = None
    for order in orders:
        for i in lat.within(rep.members, order=order):
            h = lat.subgroups[i]
            if has_supersolvable_supplement(lat, h)[0]:
                continue
            if is_weakly_s_supplemented(lat, h)[0]:
                continue
            witness = h.describe()
            break
        if witness:
            break
    hyp = witness is None
    concl = is_p_nilpotent(ga.group, p) if hyp else None
    return [
        Verdict(
            "L2.9",
            ga.name,
            f"p={p}",
            hyp,
            concl,
            (not hyp) or bool(concl),
            witnesses=(f"failing H = {witness}",) if witness else (),
        )
    ]


def _normal_p_subgroup_instances(ga: GroupAnalysis, require_phi_avoiding: bool):
    """(P, p, iota(P)) for nontrivial normal p-subgroups with iota >= 2,
    optionally restricted to those meeting the Frattini subgroup trivially."""
    lat = ga.lat
    phi = lat.frattini().members
    out = []
    for p_sub in lat.normal_subgroups():
        pe = _is_p_group_entry(p_sub)
        if pe is None or pe[1] < 2:
            continue
        if require_phi_avoiding and (p_sub.members & phi) != 1:
            continue
        out.append((p_sub, pe[0], pe[1]))
    return out


def check_L3_1(ga: GroupAnalysis) -> list:
    """Normal p-subgroup P avoiding Phi(G), every subgroup of order |D|
    weakly s-supplemented: P is a direct product of minimal normal
    subgroups of one common order p^s with s dividing iota(D)."""
    verdicts = []
    for p_sub, p, ip in _normal_p_subgroup_instances(ga, require_phi_avoiding=True):
        for k in range(1, ip):
            d = p**k
            holds, failing = _order_clause(ga, p_sub, d, "supplemented")
            concl = None
            witnesses = []
            if not holds:
                witnesses.append(f"clause fails at H = {failing}")
            else:
                decomp = _direct_minimal_decomposition(ga, p_sub)
                if decomp is None:
                    concl = False
                    witnesses.append("P is not a product of minimal normals of G")
                else:
                    orders = sorted({m.order for m in decomp})
                    if len(orders) != 1:
                        concl = False
                        witnesses.append(f"mixed minimal normal orders {orders}")
                    else:
                        s = iota(orders[0], p)
                        concl = k % s == 0
                        witnesses.append(
                            f"{len(decomp)} minimal normal factors of order {orders[0]}"
                        )
                        if not concl:
                            witnesses.append(f"iota(D)={k} not a multiple of s={s}")
            verdicts.append(
                Verdict(
                    "L3.1",
                    ga.name,
                    f"P={ga.label(p_sub)} |D|={d}",
                    holds,
                    concl,
                    (not holds) or bool(concl),
                    witnesses=tuple(witnesses),
                )
            )
    return verdicts


def check_C3_2(ga: GroupAnalysis) -> list:
    """Adds a coprimality side condition on iota(P) and iota(D) to the
    order-|D| clause; then P lies in the supersolvable hypercenter."""
    zu = u_hypercenter(ga.group).members
    verdicts = []
    for p_sub, p, ip in _normal_p_subgroup_instances(ga, require_phi_avoiding=True):
        for k in range(1, ip):
            d = p**k
            arith = math.gcd(ip, k) == 1 or math.gcd(ip - k, k) == 1
            if not arith:
                continue
            holds, failing = _order_clause(ga, p_sub, d, "supplemented")
            concl = (p_sub.members & ~zu == 0) if holds else None
            witnesses = ()
            if not holds:
                witnesses = (f"clause fails at H = {failing}",)
            elif not concl:
                witnesses = ("P escapes the supersolvable hypercenter",)
            verdicts.append(
                Verdict(
                    "C3.2",
                    ga.name,
                    f"P={ga.label(p_sub)} |D|={d}",
                    holds,
                    concl,
                    (not holds) or bool(concl),
                    witnesses=witnesses,
                )
            )
    return verdicts


def check_L3_3(ga: GroupAnalysis) -> list:
    """Normal p-subgroup P with the order-|D| (and 2|D| for nonabelian
    2-groups) clause, plus P' < P meet Phi(G) or |D| <= |P'|: P lies in
    the supersolvable hypercenter."""
    lat = ga.lat
    phi = lat.frattini().members
    zu = u_hypercenter(ga.group).members
    verdicts = []
    for p_sub, p, ip in _normal_p_subgroup_instances(ga, require_phi_avoiding=False):
        p_group = p_sub.as_group()
        derived_bits = sub_bits_in_parent(derived_subgroup(p_group), p_sub)
        derived_order = derived_bits.bit_count()
        meet_phi = p_sub.members & phi
        derived_in_phi = (
            derived_bits & ~meet_phi == 0 and derived_bits != meet_phi
        )
        two_d = p == 2 and not p_group.is_abelian()
        for k in range(1, ip):
            d = p**k
            if not (derived_in_phi or d <= derived_order):
                continue
            holds, failing = _order_clause(ga, p_sub, d, "supplemented")
            if holds and two_d:
                holds, failing = _order_clause(ga, p_sub, 2 * d, "supplemented")
            concl = (p_sub.members & ~zu == 0) if holds else None
            witnesses = ()
            if not holds:
                witnesses = (f"clause fails at H = {failing}",)
            elif not concl:
                witnesses = ("P escapes the supersolvable hypercenter",)
            verdicts.append(
                Verdict(
                    "L3.3",
                    ga.name,
                    f"P={ga.label(p_sub)} |D|={d}",
                    holds,
                    concl,
                    (not holds) or bool(concl),
                    witnesses=witnesses,
                )
            )
    return verdicts


def check_L3_5(ga: GroupAnalysis) -> list:
    """Minimal prime p, Sylow P, order-|D| clause (with the nonabelian
    2-group companion order 2|D|): G is p-solvable of p-length at most 1."""
    ps = _min_prime_sylow(ga)
    if ps is None:
        return []
    p, rep = ps
    pf = rep.as_group().prime_factorization
    ip = pf.get(p, 0)
    if ip < 2:
        return []
    two_d = p == 2 and not rep.as_group().is_abelian()
    verdicts = []
    for k in range(1, ip):
        d = p**k
        holds, failing = _order_clause(ga, rep, d, "supplemented")
        if holds and two_d:
            holds, failing = _order_clause(ga, rep, 2 * d, "supplemented")
        concl = None
        witnesses = ()
        if not holds:
            witnesses = (f"clause fails at H = {failing}",)
        else:
            pl = p_length(ga.group, p)
            concl = pl.is_p_solvable and pl.p_length <= 1
            if not concl:
                witnesses = (
                    f"p-solvable {pl.is_p_solvable}, p-length {pl.p_length}",
                )
        verdicts.append(
            Verdict(
                "L3.5",
                ga.name,
                f"p={p} |D|={d}",
                holds,
                concl,
                (not holds) or bool(concl),
                witnesses=witnesses,
            )
        )
    return verdicts


# -- C-series checkers -------------------------------------------------------


def _group_verdict(statement_id, ga, hyp, concl_pred, witnesses=()):
    concl = concl_pred() if hyp else None
    return Verdict(
        statement_id,
        ga.name,
        "group",
        hyp,
        concl,
        (not hyp) or bool(concl),
        witnesses=tuple(witnesses),
    )


def _sylow_maximal_indices(ga: GroupAnalysis):
    """(p, index) over the maximal subgroups of one Sylow p-subgroup per
    prime. One representative is enough for conjugation-invariant
    predicates: conjugation carries the maximal subgroups of one Sylow
    p-subgroup onto those of any other."""
    lat = ga.lat
    out = []
    for p in sorted(ga.group.prime_factorization):
        rep = lat.sylow(p)[0]
        for i in lat.within(rep.members, order=rep.order // p):
            out.append((p, i))
    return out


def _entries_of_order(ga: GroupAnalysis, order: int, inside=None, cyclic_only=False):
    lat = ga.lat
    bits = inside.members if inside is not None else lat.top().members
    out = []
    for i in lat.within(bits, order=order):
        sub = lat.subgroups[i]
        if cyclic_only and not sub.is_cyclic():
            continue
        out.append(sub)
    return out


def _prime_order_entries(ga: GroupAnalysis, inside=None):
    out = []
    for p in sorted(ga.group.prime_factorization):
        out.extend(_entries_of_order(ga, p, inside=inside))
    return out


def check_C4_3(ga: GroupAnalysis) -> list:
    """Odd order with every prime-order subgroup normal: supersolvable."""
    wit = []
    hyp = ga.group.order % 2 == 1
    if not hyp:
        wit.append("group has even order")
    else:
        for sub in _prime_order_entries(ga):
            if not ga.lat.normal_flags[ga.lat.index_of(sub)]:
                hyp = False
                wit.append(f"nonnormal H = {ga.label(sub)}")
                break
    return [_group_verdict("C4.3", ga, hyp, lambda: is_supersolvable(ga.group), wit)]


def _maximal_of_sylow_hyp(ga: GroupAnalysis, ok) -> tuple:
    for p, i in _sylow_maximal_indices(ga):
        sub = ga.lat.subgroups[i]
        if not ok(i, sub):
            return False, (f"p={p} failing maximal H = {ga.label(sub)}",)
    return True, ()


def check_C4_4(ga: GroupAnalysis) -> list:
    """Maximal subgroups of the Sylow subgroups all normal: supersolvable."""
    lat = ga.lat
    hyp, wit = _maximal_of_sylow_hyp(ga, lambda i, sub: lat.normal_flags[i])
    return [_group_verdict("C4.4", ga, hyp, lambda: is_supersolvable(ga.group), wit)]


def check_C4_5(ga: GroupAnalysis) -> list:
    """Subgroups of prime order or order 4 all c-normal: supersolvable."""
    lat = ga.lat
    wit = []
    hyp = True
    for sub in _prime_order_entries(ga) + _entries_of_order(ga, 4):
        if not is_c_normal(lat, sub):
            hyp = False
            wit.append(f"non-c-normal H = {ga.label(sub)}")
            break
    return [_group_verdict("C4.5", ga, hyp, lambda: is_supersolvable(ga.group), wit)]


def check_C4_6(ga: GroupAnalysis) -> list:
    """Maximal subgroups of the Sylow subgroups all c-normal: supersolvable."""
    lat = ga.lat
    hyp, wit = _maximal_of_sylow_hyp(ga, lambda i, sub: is_c_normal(lat, sub))
    return [_group_verdict("C4.6", ga, hyp, lambda: is_supersolvable(ga.group), wit)]


def check_C4_7(ga: GroupAnalysis) -> list:
    """Maximal subgroups of the Sylow subgroups lacking a supersolvable
    supplement all normal: supersolvable."""
    lat = ga.lat
    hyp, wit = _maximal_of_sylow_hyp(
        ga,
        lambda i, sub: has_supersolvable_supplement(lat, sub)[0]
        or lat.normal_flags[i],
    )
    return [_group_verdict("C4.7", ga, hyp, lambda: is_supersolvable(ga.group), wit)]


def check_C4_8(ga: GroupAnalysis) -> list:
    """Maximal subgroups of the Sylow subgroups lacking a supersolvable
    supplement all c-normal: supersolvable."""
    lat = ga.lat
    hyp, wit = _maximal_of_sylow_hyp(
        ga,
        lambda i, sub: has_supersolvable_supplement(lat, sub)[0]
        or is_c_normal(lat, sub),
    )
    return [_group_verdict("C4.8", ga, hyp, lambda: is_supersolvable(ga.group), wit)]


def u_residual(ga: GroupAnalysis) -> Subgroup:
    """Smallest normal subgroup with supersolvable quotient. The
    intersection over all such normals works because the class is a
    formation; the resulting quotient is checked to be supersolvable."""
    lat = ga.lat
    bits = lat.top().members
    for n in lat.normal_subgroups():
        if bits & ~n.members == 0:
            continue
        qa, _ = ga.quotient_by(n)
        if is_supersolvable(qa.group):
            bits &= n.members
    res = lat.entry(bits)
    qa, _ = ga.quotient_by(res)
    if not is_supersolvable(qa.group):
        raise PermlatError("residual quotient is not supersolvable")
    return res


def check_C4_9(ga: GroupAnalysis) -> list:
    """Minimal subgroups and cyclic order-4 subgroups of the
    supersolvable residual all c-normal in G: G supersolvable."""
    lat = ga.lat
    res = u_residual(ga)
    wit = [f"residual = {ga.label(res)}"]
    hyp = True
    targets = _prime_order_entries(ga, inside=res) + _entries_of_order(
        ga, 4, inside=res, cyclic_only=True
    )
    for sub in targets:
        if not is_c_normal(lat, sub):
            hyp = False
            wit.append(f"non-c-normal H = {ga.label(sub)}")
            break
    return [_group_verdict("C4.9", ga, hyp, lambda: is_supersolvable(ga.group), wit)]


def check_C4_10(ga: GroupAnalysis) -> list:
    """Per normal E with supersolvable quotient: abelian Sylow 2-subgroup
    of G and every minimal subgroup of E permutable in G force G
    supersolvable."""
    lat = ga.lat
    syl2 = lat.sylow(2)[0] if ga.group.order % 2 == 0 else None
    syl2_abelian = syl2 is None or syl2.as_group().is_abelian()
    verdicts = []
    normals, _trunc = ga.normal_e()
    for e in normals:
        qa, _ = ga.quotient_by(e)
        hyp = is_supersolvable(qa.group) and syl2_abelian
        wit = []
        if hyp:
            for sub in _prime_order_entries(ga, inside=e):
                if not is_permutable(lat, sub):
                    hyp = False
                    wit.append(f"non-permutable H = {ga.label(sub)}")
                    break
        concl = is_supersolvable(ga.group) if hyp else None
        verdicts.append(
            Verdict(
                "C4.10",
                ga.name,
                f"E={ga.label(e)}",
                hyp,
                concl,
                (not hyp) or bool(concl),
                witnesses=tuple(wit),
            )
        )
    return verdicts


def check_C4_11(ga: GroupAnalysis) -> list:
    """Solvable G with the maximal subgroups of the Sylow subgroups of the
    Fitting subgroup all normal in G: supersolvable. The Sylow p-subgroup
    of the Fitting subgroup is O_p(G), its unique one."""
    lat = ga.lat
    wit = []
    hyp = is_solvable(ga.group)
    if not hyp:
        wit.append("group is not solvable")
    else:
        fit = fitting_subgroup(ga.group)
        for p in sorted(fit.as_group().prime_factorization):
            op = p_core(ga.group, p)
            for i in lat.within(op.members, order=op.order // p):
                if not lat.normal_flags[i]:
                    hyp = False
                    wit.append(
                        f"p={p} nonnormal maximal H = {ga.label(lat.subgroups[i])}"
                    )
                    break
            if not hyp:
                break
    return [_group_verdict("C4.11", ga, hyp, lambda: is_supersolvable(ga.group), wit)]


def check_C4_12(ga: GroupAnalysis) -> list:
    """Per solvable normal E with supersolvable quotient: minimal subgroups
    and cyclic order-4 subgroups of E weakly s-permutable in G force G
    supersolvable."""
    lat = ga.lat
    verdicts = []
    normals, _trunc = ga.normal_e()
    for e in normals:
        qa, _ = ga.quotient_by(e)
        hyp = is_supersolvable(qa.group) and is_solvable(e.as_group())
        wit = []
        if hyp:
            targets = _prime_order_entries(ga, inside=e) + _entries_of_order(
                ga, 4, inside=e, cyclic_only=True
            )
            for sub in targets:
                if not is_weakly_s_permutable(lat, sub)[0]:
                    hyp = False
                    wit.append(f"non-wsp H = {ga.label(sub)}")
                    break
        concl = is_supersolvable(ga.group) if hyp else None
        verdicts.append(
            Verdict(
                "C4.12",
                ga.name,
                f"E={ga.label(e)}",
                hyp,
                concl,
                (not hyp) or bool(concl),
                witnesses=tuple(wit),
            )
        )
    return verdicts


def check_remark1(ga: GroupAnalysis) -> list:
    """Arithmetic note: when iota(D) is 1 or iota(P) - 1 (D minimal or
    maximal in P), one of the coprimality pairs (iota(P), iota(D)) or
    (iota(P), iota(P:D)) is 1. Pure arithmetic over the group's prime
    exponents; no lattice needed."""
    verdicts = []
    for p, a in sorted(ga.group.prime_factorization.items()):
        if a < 2:
            continue
        for k in range(1, a):
            extremal = k == 1 or k == a - 1
            ok = math.gcd(a, k) == 1 or math.gcd(a, a - k) == 1
            verdicts.append(
                Verdict(
                    "remark1",
                    ga.name,
                    f"p={p} iota(D)={k}",
                    extremal,
                    ok if extremal else None,
                    (not extremal) or ok,
                )
            )
    return verdicts


# -- order-324 control example -----------------------------------------------


class Example42(NamedTuple):
    group: Group
    facts: tuple

    def lines(self) -> list[str]:
        return [f"{k}: {v}" for k, v in self.facts]


def _require(cond, message: str):
    if not cond:
        raise PermlatError(f"example reproduction failed: {message}")


def build_example42(lattice_cap: int = DEFAULT_LATTICE_CAP) -> Example42:
    """Control group of order 324 where the minimal-prime hypothesis is
    dropped and the p-length conclusion fails.

    The 2-residual of the regular wreath product of S3 by C3 has order
    324, an elementary abelian O_3 of order 27 with quotient of type A4,
    and a Sylow 3-subgroup of order 81 whose maximal subgroups are all
    complemented (hence weakly s-supplemented) in G. Yet the 3-length of
    G is 2: the order-|D| clause alone does not bound p-length once p is
    not the smallest prime divisor.
    """
    s3 = close_generators(
        3,
        [Perm.from_cycles(3, [(1, 2, 3)]), Perm.from_cycles(3, [(1, 2)])],
        name="S3",
    )
    b = wreath_regular(s3, 3)
    _require(b.order == 648, f"wreath order {b.order} != 648")
    g = p_residual(b, 2).as_group()
    _require(g.order == 324, f"2-residual order {g.order} != 324")
    ga = GroupAnalysis(g, "example324", lattice_cap=lattice_cap)
    lat = ga.lat
    o3 = lat.entry(p_core(g, 3).members)
    _require(o3.order == 27, f"O_3 order {o3.order} != 27")
    _require(o3.is_elementary_abelian(), "O_3 is not elementary abelian")
    qa, _ = ga.quotient_by(o3)
    qname = fingerprint(qa.group).name
    _require(qname == "A4", f"G/O_3 has type {qname}, not A4")
    rep = lat.sylow(3)[0]
    _require(rep.order == 81, f"Sylow 3-subgroup order {rep.order} != 81")
    maximal_idxs = lat.within(rep.members, order=rep.order // 3)
    _require(maximal_idxs, "Sylow 3-subgroup has no maximal subgroups")
    for i in maximal_idxs:
        h = lat.subgroups[i]
        _require(
            is_complemented(lat, h), f"maximal {ga.label(h)} not complemented"
        )
        _require(
            is_weakly_s_supplemented(lat, h)[0],
            f"maximal {ga.label(h)} not weakly s-supplemented",
        )
    pl = p_length(g, 3)
    _require(pl.is_p_solvable, "G is not 3-solvable")
    _require(pl.p_length == 2, f"3-length {pl.p_length} != 2")
    comps = lat.complements(o3)
    _require(comps, "O_3 has no complement")
    _require(
        comps[0].order == 12, f"O_3 complement order {comps[0].order} != 12"
    )
    facts = (
        ("wreath product order", b.order),
        ("2-residual order", g.order),
        ("subgroup count", len(lat.subgroups)),
        ("O_3 order", o3.order),
        ("O_3 elementary abelian", True),
        ("quotient by O_3", qname),
        ("Sylow 3-subgroup order", rep.order),
        ("maximal subgroups of Sylow 3", len(maximal_idxs)),
        ("each complemented in G", True),
        ("each weakly s-supplemented in G", True),
        ("3-length of G", pl.p_length),
        ("O_3 complement order", comps[0].order),
    )
    return Example42(g, facts)


# -- statement registry ------------------------------------------------------


def check_thmB_all(ga: GroupAnalysis) -> list:
    normals, _trunc = ga.normal_e()
    return [check_thmB(ga, e) for e in normals]


def check_thm12_all(ga: GroupAnalysis) -> list:
    normals, _trunc = ga.normal_e()
    return [check_thm12(ga, e) for e in normals]


@dataclass(frozen=True)
class StatementSpec:
    statement_id: str
    checker: Callable
    default_max_order: int
    note: str = ""


def _spec(statement_id, checker, default_max_order, note=""):
    return StatementSpec(statement_id, checker, default_max_order, note)


STATEMENTS = {
    s.statement_id: s
    for s in (
        _spec("thmB", check_thmB_all, 200, "E ranges over the largest normal subgroups"),
        _spec("thm12", check_thm12_all, 200, "E ranges over the largest normal subgroups"),
        _spec("L2.1", check_L2_1, 100, "re-enumerates a lattice per normal subgroup"),
        _spec("L2.2", check_L2_2, 200),
        _spec("L2.3", check_L2_3, 200),
        _spec("L2.4", check_L2_4, 200),
        _spec("L2.5", check_L2_5, 200),
        _spec("L2.6", check_L2_6, 720, "nonabelian simple groups only"),
        _spec("L2.7", check_L2_7, 200),
        _spec("L2.8", check_L2_8, 200),
        _spec("L2.9", check_L2_9, 200),
        _spec("L3.1", check_L3_1, 100, "per normal p-subgroup and order |D|"),
        _spec("C3.2", check_C3_2, 100, "per normal p-subgroup and order |D|"),
        _spec("L3.3", check_L3_3, 100, "per normal p-subgroup and order |D|"),
        _spec("L3.5", check_L3_5, 100, "per order |D| in the minimal-prime Sylow"),
        _spec("C4.3", check_C4_3, 200),
        _spec("C4.4", check_C4_4, 200),
        _spec("C4.5", check_C4_5, 200),
        _spec("C4.6", check_C4_6, 200),
        _spec("C4.7", check_C4_7, 200),
        _spec("C4.8", check_C4_8, 200),
        _spec("C4.9", check_C4_9, 200),
        _spec("C4.10", check_C4_10, 200, "E ranges over the largest normal subgroups"),
        _spec("C4.11", check_C4_11, 200),
        _spec("C4.12", check_C4_12, 200, "E ranges over the largest normal subgroups"),
        _spec("remark1", check_remark1, 200, "pure arithmetic, no lattice"),
    )
}

STATEMENT_IDS = tuple(STATEMENTS)


def verify_statement(statement_id: str, ga: GroupAnalysis) -> list:
    """Run one statement's checker on one analyzed group."""
    try:
        spec = STATEMENTS[statement_id]
    except KeyError:
        known = ", ".join(STATEMENT_IDS)
        raise PermlatError(
            f"unknown statement id {statement_id!r} (known: {known})"
        ) from None
    return spec.checker(ga)
