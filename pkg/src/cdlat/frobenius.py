"""Frobenius actions, kernels and complements."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .cd import CDReport, cd_lattice, cd_measure
from .errors import (ActionNotFaithful, NotAbelian, NotAComplement, NotCoprime,
                     NotNormal)
from .group import (Group, SubgroupSet, centralizer, is_abelian_subgroup,
                    is_nilpotent, is_normal, sort_subgroups, subgroup_as_group)
from .subgroups import DEFAULT_LIMITS, Limits

_CHUNK = 1 << 22


@dataclass
class FrobeniusWitness:
    group: Group
    kernel: SubgroupSet
    complement: SubgroupSet
    condition_results: tuple[bool, bool, bool, bool]
    is_frobenius: bool

    @property
    def conditions_agree(self) -> bool:
        return len(set(self.condition_results)) == 1


def _conjugates(G: Group, xs: np.ndarray, gs: np.ndarray) -> np.ndarray:
    """Matrix of g^-1 x g with rows indexed by gs and columns by xs."""
    return np.asarray(G.mul(G.mul(G.inverse[gs][:, None], xs[None, :]), gs[:, None]))


def _rows(count: int, width: int) -> int:
    return max(1, _CHUNK // max(width, 1))


def _check_complement(G: Group, N: SubgroupSet, A: SubgroupSet) -> None:
    if not is_normal(G, N):
        raise NotAComplement("N is not normal in G", witness={"kernel_order": N.order})
    meet = N & A
    if not meet.is_trivial():
        raise NotAComplement("N and A intersect nontrivially", witness={"element": int(meet.ids()[1])})
    if N.order * A.order != G.order:
        raise NotAComplement(f"|N||A| = {N.order * A.order} != |G| = {G.order}")


def action_fixes_nothing(G: Group, N: SubgroupSet, A: SubgroupSet) -> bool:
    """No nonidentity a in A fixes a nonidentity n in N under conjugation."""
    n_ids = N.ids()[1:]
    a_ids = A.ids()[1:]
    step = _rows(a_ids.size, n_ids.size)
    for s in range(0, a_ids.size, step):
        if (_conjugates(G, n_ids, a_ids[s:s + step]) == n_ids[None, :]).any():
            return False
    return True


def complement_is_malnormal(G: Group, A: SubgroupSet) -> bool:
    """A meets A^g trivially for every g outside A."""
    a_ids = A.ids()[1:]
    mask = A.mask()
    outside = np.flatnonzero(~mask)
    step = _rows(outside.size, a_ids.size)
    for s in range(0, outside.size, step):
        if mask[_conjugates(G, a_ids, outside[s:s + step])].any():
            return False
    return True


def _centralizers_inside(G: Group, X: SubgroupSet) -> bool:
    """C_G(x) is contained in X for every nonidentity x in X."""
    reps = np.unique(G.cyclic_reps[X.ids()[1:]]).tolist()
    cents = G.element_centralizers(reps)
    return all(bits & ~X.bits == 0 for bits in cents.values())


def frobenius_conditions(G: Group, N: SubgroupSet, A: SubgroupSet) -> FrobeniusWitness:
    """Evaluate four characterizations of a Frobenius complement separately.

    1. conjugation by A fixes no nonidentity element of N;
    2. A meets each conjugate A^g (g not in A) trivially;
    3. C_G(a) lies in A for each nonidentity a in A;
    4. C_G(n) lies in N for each nonidentity n in N.
    """
    _check_complement(G, N, A)
    results = (
        action_fixes_nothing(G, N, A),
        complement_is_malnormal(G, A),
        _centralizers_inside(G, A),
        _centralizers_inside(G, N),
    )
    nontrivial = not N.is_trivial() and not A.is_trivial()
    return FrobeniusWitness(G, N, A, results, nontrivial and all(results))


def _normalizes(G: Group, N: SubgroupSet, H: SubgroupSet) -> bool:
    h_ids = H.ids()
    gens = np.asarray([g for g in N.ids().tolist() if g], dtype=np.int64)
    if gens.size == 0:
        return True
    return bool(H.mask()[_conjugates(G, h_ids, gens)].all())


def regular_orbit_search(G: Group, N: SubgroupSet, H: SubgroupSet) -> int | None:
    """Some x in H whose stabilizer in N (acting by conjugation) is trivial.

    ``None`` means no regular orbit exists, which for a faithful coprime
    action of an abelian group would contradict the regular orbit theorem;
    callers treat it as a finding.
    """
    if not is_abelian_subgroup(G, N):
        raise NotAbelian("acting subgroup N is not abelian")
    if math.gcd(N.order, H.order) != 1:
        raise NotCoprime(f"gcd(|N|, |H|) = {math.gcd(N.order, H.order)} != 1")
    if not _normalizes(G, N, H):
        raise NotNormal("N does not normalize H")
    kernel = N & centralizer(G, H)
    if not kernel.is_trivial():
        raise ActionNotFaithful("N acts unfaithfully on H", witness={"element": int(kernel.ids()[1])})
    n_ids = N.ids()[1:]
    h_ids = H.ids()
    if n_ids.size == 0:
        return int(h_ids[0])
    fixed = (_conjugates(G, h_ids, n_ids) == h_ids[None, :]).any(axis=0)
    free = np.flatnonzero(~fixed)
    return int(h_ids[free[0]]) if free.size else None


def cd_lattice_within(G: Group, N: SubgroupSet, method: str = "closure_family",
                      limits: Limits = DEFAULT_LIMITS, check_properties: bool = True) -> CDReport:
    """CD(N) with members expressed as subgroups of G."""
    sub, embed = subgroup_as_group(G, N)
    rep = cd_lattice(sub, method, limits, check_properties)

    def lift(H: SubgroupSet) -> SubgroupSet:
        return SubgroupSet.from_ids(embed[H.ids()], G.order)

    rep.members = sort_subgroups(lift(H) for H in rep.members)
    rep.cd_subgroup = lift(rep.cd_subgroup)
    rep.top = lift(rep.top)
    return rep


@dataclass
class FrobeniusCDComparison:
    witness: FrobeniusWitness
    cd_group: CDReport | None
    cd_kernel: CDReport | None
    checks: dict[str, bool] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return bool(self.checks) and all(self.checks.values())


def verify_theorem6(G: Group, N: SubgroupSet, A: SubgroupSet, method: str = "closure_family",
                    limits: Limits = DEFAULT_LIMITS, group_report: CDReport | None = None) -> FrobeniusCDComparison:
    """Compare CD(G) with CD(N) for a Frobenius group with kernel N and complement A."""
    witness = frobenius_conditions(G, N, A)
    if not witness.is_frobenius:
        return FrobeniusCDComparison(witness, None, None, {"is_frobenius": False})
    cd_g = group_report or cd_lattice(G, method, limits)
    cd_n = cd_lattice_within(G, N, method, limits)
    z_n = centralizer(G, N) & N
    sub, _ = subgroup_as_group(G, N)
    members_g = set(cd_g.members)
    checks = {
        "is_frobenius": True,
        "kernel_order_mod_complement": N.order % A.order == 1,
        "kernel_center_order_mod_complement": z_n.order % A.order == 1,
        "center_trivial": G.center.is_trivial(),
        "kernel_nilpotent": is_nilpotent(sub),
        "kernel_measure_exceeds_order": cd_measure(G, N) == N.order * z_n.order > G.order,
        "extremes_excluded": G.trivial() not in members_g and G.full() not in members_g,
        "cd_equal": cd_g.members == cd_n.members,
        "measures_agree": all(
            cd_measure(G, H) == H.order * (centralizer(G, H) & N).order == cd_n.max_measure
            for H in cd_g.members),
    }
    return FrobeniusCDComparison(witness, cd_g, cd_n, checks)
