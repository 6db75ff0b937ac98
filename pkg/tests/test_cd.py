from __future__ import annotations

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cdlat.cd import (cd_lattice, cd_measure, cd_subgroup, centralizer_closed_family,
                      describe_subgroup, report_to_dict, subgroup_digest, verify_cd_properties)
from cdlat.constructors import (cyclic, dihedral, direct_product, heisenberg_gf, quaternion8,
                                symmetric, zm_group)
from cdlat.errors import SizeGuard
from cdlat.group import UNKNOWN, SubgroupSet, center, centralizer, closure
from cdlat.harness import zm_triples
from cdlat.subgroups import Limits, all_subgroups

from conftest import brute_cd, brute_subgroups, medium_groups, small_groups

ALL = {**small_groups(), **medium_groups()}


def _intersection_closure_oracle(G) -> set[SubgroupSet]:
    """Every intersection of a set of element centralizers, by repeated pairwise meets."""
    n = G.order
    cents = {centralizer(G, closure(G, [g])) for g in range(n)}
    family = set(cents) | {G.full()}
    while True:
        new = {a & b for a in family for b in family} - family
        if not new:
            return family
        family |= new


# --------------------------------------------------------------------------
# measure

@pytest.mark.parametrize("name", sorted(ALL))
def test_measure_extremes(name):
    G = ALL[name]
    assert cd_measure(G, G.trivial()) == G.order
    assert cd_measure(G, G.full()) == G.order * center(G).order


def test_measure_abelian():
    for G in (cyclic(12), direct_product(cyclic(2), cyclic(4))):
        assert cd_measure(G, G.full()) == G.order ** 2


def test_measure_heisenberg_a(heis7):
    A = closure(heis7, heis7.named["A"])
    assert cd_measure(heis7, A) == 2401 ** 2 == 5_764_801


# --------------------------------------------------------------------------
# closure family

def test_family_abelian():
    assert centralizer_closed_family(cyclic(10)) == [cyclic(10).full()]


def test_family_s3():
    G = zm_group(3, 2, 2)
    fam = centralizer_closed_family(G)
    assert sorted(H.order for H in fam) == [1, 2, 2, 2, 3, 6]


def test_family_q8():
    # every element centralizer contains Z(Q8), so the trivial subgroup is not
    # centralizer-closed: C(C(1)) = Z; the family is the other five subgroups
    G = quaternion8()
    fam = set(centralizer_closed_family(G))
    assert fam == set(all_subgroups(G).subgroups) - {G.trivial()}
    assert centralizer(G, centralizer(G, G.trivial())) == center(G)


@pytest.mark.parametrize("name", sorted(ALL))
def test_family_matches_intersection_oracle(name):
    G = ALL[name]
    fam = centralizer_closed_family(G)
    assert set(fam) == _intersection_closure_oracle(G)
    assert len(set(fam)) == len(fam)


@pytest.mark.parametrize("name", sorted(ALL))
def test_family_members_are_double_centralizers(name):
    G = ALL[name]
    for H in centralizer_closed_family(G):
        assert centralizer(G, centralizer(G, H)) == H


def test_family_guard():
    with pytest.raises(SizeGuard):
        centralizer_closed_family(symmetric(4), bound=5)


# --------------------------------------------------------------------------
# the lattice

def test_cyclic_six():
    rep = cd_lattice(cyclic(6))
    assert rep.members == [cyclic(6).full()] and rep.max_measure == 36
    assert rep.is_chain and rep.chain_length == 0


def test_q8():
    G = quaternion8()
    rep = cd_lattice(G)
    expected = {center(G), G.full()} | {closure(G, G.named[k]) for k in ("i", "j", "k")}
    assert rep.max_measure == 16 and rep.member_set() == expected
    assert not rep.is_chain and rep.chain_length is None
    assert cd_subgroup(rep) == center(G) and rep.top == G.full()
    # duality swaps Q8 and Z and fixes each cyclic subgroup of order 4
    assert centralizer(G, G.full()) == center(G)
    for k in ("i", "j", "k"):
        C = closure(G, G.named[k])
        assert centralizer(G, C) == C


def test_zm_5_4_2():
    G = zm_group(5, 4, 2)
    rep = cd_lattice(G)
    assert rep.max_measure == 25
    assert rep.members == [closure(G, G.named["a"])] and rep.chain_length == 0


def test_d5():
    G = dihedral(10)
    rep = cd_lattice(G)
    assert cd_subgroup(rep).order == 5 and rep.members == [cd_subgroup(rep)]


def test_s3_properties():
    G = zm_group(3, 2, 2)
    rep = cd_lattice(G)
    assert cd_subgroup(rep) == closure(G, G.named["a"])
    assert all(v is True for v in rep.property_checks.values())


def test_d4_not_a_chain():
    rep = cd_lattice(dihedral(8))
    assert not rep.is_chain and rep.max_measure == 16 and len(rep.members) == 5


@pytest.mark.parametrize("name", sorted(small_groups()))
def test_methods_match_power_set_oracle(name):
    G = small_groups()[name]
    m, members = brute_cd(G, brute_subgroups(G))
    for method in ("closure_family", "brute_force"):
        rep = cd_lattice(G, method)
        assert rep.max_measure == m and rep.members == members


@pytest.mark.parametrize("name", sorted(medium_groups()))
def test_methods_agree(name):
    G = medium_groups()[name]
    a = cd_lattice(G, "closure_family")
    b = cd_lattice(G, "brute_force")
    assert a.max_measure == b.max_measure and a.members == b.members
    assert b.max_measure == brute_cd(G, all_subgroups(G).subgroups)[0]


@pytest.mark.parametrize("name", sorted(ALL))
def test_property_checks_hold(name):
    G = ALL[name]
    rep = cd_lattice(G)
    assert rep.failed_checks() == []
    assert rep.property_checks["minimum_characteristic"] is True


@pytest.mark.parametrize("name", sorted(ALL))
def test_report_invariants(name):
    G = ALL[name]
    rep = cd_lattice(G)
    mset = rep.member_set()
    for H in rep.members:
        assert cd_measure(G, H) == rep.max_measure
        assert rep.cd_subgroup <= H <= rep.top
        C = centralizer(G, H)
        assert C in mset and centralizer(G, C) == H
    chain = all(a <= b or b <= a for a, b in itertools.combinations(rep.members, 2))
    assert rep.is_chain == chain
    if chain:
        assert rep.chain_length == len(rep.members) - 1
    assert rep.max_measure >= G.order
    assert rep.diagnostics["max_measure_equals_order"] == (rep.max_measure == G.order)


@pytest.mark.parametrize("name", [k for k, G in sorted(ALL.items()) if G.is_abelian])
def test_abelian_groups(name):
    G = ALL[name]
    rep = cd_lattice(G)
    assert rep.members == [G.full()] and rep.max_measure == G.order ** 2


ZM_SAMPLE = [t for t in zm_triples(120) if t[0] > 1]


@given(st.sampled_from(ZM_SAMPLE), st.sampled_from([1, 2, 3]))
def test_oracle_equivalence_random_products(triple, k):
    G = zm_group(*triple)
    if k > 1 and G.order * k <= 200:
        G = direct_product(G, cyclic(k))
    a = cd_lattice(G, "closure_family", check_properties=False)
    b = cd_lattice(G, "brute_force", check_properties=False)
    assert (a.max_measure, a.members) == (b.max_measure, b.members)


@given(st.sampled_from(sorted(ALL)))
def test_recheck_is_stable(name):
    G = ALL[name]
    rep = cd_lattice(G)
    assert verify_cd_properties(G, rep) == rep.property_checks


def test_characteristic_unknown_above_guard(heis7):
    P = heisenberg_gf(3)
    rep = cd_lattice(P, limits=Limits(aut_limit=2))
    assert rep.property_checks["minimum_characteristic"] is UNKNOWN
    assert rep.failed_checks() == []


def test_prop_checks_detect_corruption():
    G = zm_group(3, 2, 2)
    rep = cd_lattice(G)
    rep.members = rep.members + [closure(G, G.named["b"])]
    checks = verify_cd_properties(G, rep)
    assert checks["members_attain_max"] is False
    assert checks["meet_closed"] is False


def test_unknown_method():
    with pytest.raises(ValueError):
        cd_lattice(cyclic(3), "magic")


def test_brute_force_guard():
    with pytest.raises(SizeGuard):
        cd_lattice(heisenberg_gf(3), "brute_force")


def test_heisenberg3_cd():
    P = heisenberg_gf(3)
    A = closure(P, P.named["A"])
    a = cd_lattice(P)
    b = cd_lattice(P, "brute_force", Limits(order_bound=243))
    assert a.members == b.members == [A]
    assert a.max_measure == 81 * 81


# --------------------------------------------------------------------------
# serialization

def test_report_to_dict():
    G = quaternion8()
    d = report_to_dict(G, cd_lattice(G))
    assert d["max_measure"] == 16 and len(d["members"]) == 5
    assert d["property_checks"]["modular"] is True
    assert [m["order"] for m in d["members"]] == [2, 4, 4, 4, 8]
    assert all("elements" in m for m in d["members"])
    small = report_to_dict(G, cd_lattice(G), element_limit=2)
    assert "elements" in small["members"][0] and "elements" not in small["members"][1]


def test_describe_subgroup():
    G = symmetric(4)
    H = all_subgroups(G).subgroups[-2]
    d = describe_subgroup(G, H)
    assert d["digest"] == subgroup_digest(H) and len(d["digest"]) == 16
    assert closure(G, d["generators"]) == H
    assert d["elements"] == H.ids().tolist()
