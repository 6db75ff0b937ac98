"""Chermak-Delgado measure and lattice.

Two routes to CD(G):

* ``closure_family`` maximizes over the subgroups that are intersections
  of element centralizers.  Every CD member H satisfies H = C(C(H)), so it
  is such an intersection; and for any H, C(C(H)) contains H and has the
  same centralizer, so the maximum over the family is m(G).
* ``brute_force`` maximizes over every subgroup (the oracle).
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from itertools import product

import numpy as np

from .errors import SizeGuard
from .group import (UNKNOWN, Group, SubgroupSet, centralizer, generating_set,
                    is_characteristic, sort_subgroups)
from .subgroups import DEFAULT_LIMITS, Limits, all_subgroups, join, meet

METHODS = ("closure_family", "brute_force")


@dataclass
class CDReport:
    group_order: int
    max_measure: int
    members: list[SubgroupSet]
    cd_subgroup: SubgroupSet
    top: SubgroupSet
    is_chain: bool
    chain_length: int | None
    method: str
    property_checks: dict[str, object] = field(default_factory=dict)
    diagnostics: dict[str, object] = field(default_factory=dict)

    def member_set(self) -> set[SubgroupSet]:
        return set(self.members)

    def failed_checks(self) -> list[str]:
        return [k for k, v in self.property_checks.items() if v is False]


def cd_measure(G: Group, H: SubgroupSet) -> int:
    """m_G(H) = |H| |C_G(H)|."""
    return H.order * centralizer(G, H).order


def centralizer_closed_family(G: Group, bound: int = DEFAULT_LIMITS.family_bound) -> list[SubgroupSet]:
    """All intersections of element centralizers (G itself included).

    Built one element centralizer s at a time: the family grows by f & s
    for every member f.  An inverted index element -> members limits the
    work to members meeting s outside Z(G); every other f gives f & s = Z(G),
    which is always a member.
    """
    n = G.order
    full = (1 << n) - 1
    reps = np.unique(G.cyclic_reps)
    reps = reps[reps != 0].tolist()
    cents = G.element_centralizers(reps)
    z_bits = full
    for bits in cents.values():
        z_bits &= bits
    z_mask = SubgroupSet(z_bits, n).mask()
    gens = sorted(set(cents.values()) - {full}, key=lambda b: (-b.bit_count(), b))

    members: list[int] = []
    seen: set[int] = set()
    index: dict[int, list[int]] = {}

    def insert(bits: int) -> None:
        seen.add(bits)
        k = len(members)
        members.append(bits)
        ids = np.flatnonzero(SubgroupSet(bits, n).mask() & ~z_mask)
        for e in ids.tolist():
            index.setdefault(e, []).append(k)
        if len(members) > bound:
            raise SizeGuard(f"centralizer-closed family exceeds {bound} members")

    insert(full)
    for s in gens:
        s_ids = np.flatnonzero(SubgroupSet(s, n).mask() & ~z_mask)
        cand: set[int] = set()
        for e in s_ids.tolist():
            cand.update(index.get(e, ()))
        fresh = {s} | {members[k] & s for k in cand}
        for bits in sorted(fresh):
            if bits not in seen:
                insert(bits)
    if z_bits not in seen:
        insert(z_bits)
    return sort_subgroups(SubgroupSet(b, n) for b in members)


def _is_chain(members: list[SubgroupSet]) -> bool:
    return all(a <= b for a, b in zip(members, members[1:]))


def cd_lattice(G: Group, method: str = "closure_family", limits: Limits = DEFAULT_LIMITS,
               check_properties: bool = True) -> CDReport:
    """CD(G) by the chosen method, with the lattice property checks."""
    if method == "closure_family":
        family = centralizer_closed_family(G, limits.family_bound)
    elif method == "brute_force":
        family = all_subgroups(G, limits).subgroups
    else:
        raise ValueError(f"unknown method {method!r}")
    best, members = -1, []
    for H in family:
        m = cd_measure(G, H)
        if m > best:
            best, members = m, [H]
        elif m == best:
            members.append(H)
    members = sort_subgroups(members)
    bottom_bits = members[0].bits
    for H in members[1:]:
        bottom_bits &= H.bits
    chain = _is_chain(members)
    report = CDReport(
        group_order=G.order,
        max_measure=best,
        members=members,
        cd_subgroup=SubgroupSet(bottom_bits, G.order),
        top=members[-1],
        is_chain=chain,
        chain_length=len(members) - 1 if chain else None,
        method=method,
        diagnostics={"family_size": len(family), "max_measure_equals_order": best == G.order},
    )
    if check_properties:
        report.property_checks = verify_cd_properties(G, report, limits.aut_limit)
    return report


def cd_subgroup(report: CDReport) -> SubgroupSet:
    """M(G), the minimum member."""
    return report.cd_subgroup


def verify_cd_properties(G: Group, report: CDReport, aut_limit: int = DEFAULT_LIMITS.aut_limit) -> dict[str, object]:
    members = report.members
    mset = set(members)
    checks: dict[str, object] = {}
    checks["members_attain_max"] = all(cd_measure(G, H) == report.max_measure for H in members)
    checks["max_measure_ge_order"] = report.max_measure >= G.order

    joins: dict[tuple[int, int], SubgroupSet] = {}

    def j(a: SubgroupSet, b: SubgroupSet) -> SubgroupSet:
        key = (a.bits, b.bits) if a.bits <= b.bits else (b.bits, a.bits)
        if key not in joins:
            joins[key] = join(G, a, b)
        return joins[key]

    checks["meet_closed"] = all(meet(a, b) in mset for a in members for b in members)
    checks["join_closed"] = all(j(a, b) in mset for a in members for b in members)
    checks["modular"] = all(j(x, meet(y, z)) == meet(j(x, y), z)
                            for x, y, z in product(members, repeat=3) if x <= z)

    cents = {H: centralizer(G, H) for H in members}
    checks["duality_closed"] = all(c in mset for c in cents.values())
    checks["duality_involution"] = all(
        (cents[H] in cents and cents[cents[H]] == H) or centralizer(G, cents[H]) == H
        for H in members)
    checks["duality_reverses_inclusion"] = all(
        cents[b] <= cents[a] for a in members for b in members if a <= b)

    M = report.cd_subgroup
    checks["minimum_is_member"] = M in mset and all(M <= H for H in members)
    checks["maximum_is_member"] = all(H <= report.top for H in members)
    checks["minimum_abelian"] = M <= cents.get(M, centralizer(G, M))
    checks["minimum_contains_center"] = G.center <= M
    checks["minimum_characteristic"] = is_characteristic(G, M, aut_limit)
    return checks


# --------------------------------------------------------------------------
# serialization

def subgroup_digest(H: SubgroupSet) -> str:
    raw = H.bits.to_bytes((H.n + 7) // 8, "little")
    return hashlib.sha256(raw).hexdigest()[:16]


def describe_subgroup(G: Group, H: SubgroupSet, element_limit: int = 64) -> dict:
    out = {"order": H.order, "generators": list(generating_set(G, H)), "digest": subgroup_digest(H)}
    if H.order <= element_limit:
        out["elements"] = H.ids().tolist()
    return out


def check_value(v: object) -> object:
    return "unknown" if v is UNKNOWN else bool(v)


def report_to_dict(G: Group, report: CDReport, element_limit: int = 64) -> dict:
    members = []
    for H in report.members:
        d = describe_subgroup(G, H, element_limit)
        d["measure"] = report.max_measure
        members.append(d)
    return {
        "order": report.group_order,
        "max_measure": report.max_measure,
        "members": members,
        "cd_subgroup": describe_subgroup(G, report.cd_subgroup, element_limit),
        "top": describe_subgroup(G, report.top, element_limit),
        "is_chain": report.is_chain,
        "chain_length": report.chain_length,
        "method": report.method,
        "property_checks": {k: check_value(v) for k, v in sorted(report.property_checks.items())},
    }
