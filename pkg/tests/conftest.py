from __future__ import annotations

import itertools

import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from cdlat.constructors import (ActionSpec, cyclic, dihedral, direct_product,
                                quaternion8, semidirect_product, symmetric, zm_group)
from cdlat.group import Group, SubgroupSet

settings.register_profile("cdlat", max_examples=40, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("cdlat")


def table_of(G: Group) -> list[list[int]]:
    e = G.elements
    return np.asarray(G.mul(e[:, None], e[None, :])).tolist()


def brute_subgroups(G: Group) -> set[SubgroupSet]:
    """Every subset containing 1 and closed under products (power set scan)."""
    t = table_of(G)
    n = G.order
    found = set()
    others = list(range(1, n))
    for k in range(len(others) + 1):
        for combo in itertools.combinations(others, k):
            s = {0, *combo}
            if all(t[a][b] in s for a in s for b in s):
                found.add(SubgroupSet.from_ids(sorted(s), n))
    return found


def brute_centralizer(G: Group, H: SubgroupSet) -> SubgroupSet:
    t = table_of(G)
    hs = H.ids().tolist()
    return SubgroupSet.from_ids([g for g in range(G.order) if all(t[g][h] == t[h][g] for h in hs)], G.order)


def brute_cd(G: Group, subgroups) -> tuple[int, list[SubgroupSet]]:
    best, members = -1, []
    for H in subgroups:
        m = H.order * brute_centralizer(G, H).order
        if m > best:
            best, members = m, [H]
        elif m == best:
            members.append(H)
    return best, sorted(members, key=lambda s: s.sort_key)


def f21() -> Group:
    return semidirect_product(cyclic(7), cyclic(3), ActionSpec.power(cyclic(7), cyclic(3), 2))


def small_groups() -> dict[str, Group]:
    return {
        "Z1": cyclic(1), "Z2": cyclic(2), "Z6": cyclic(6), "Z8": cyclic(8),
        "V4": direct_product(cyclic(2), cyclic(2)), "S3": zm_group(3, 2, 2),
        "Q8": quaternion8(), "D4": dihedral(8), "D5": dihedral(10), "D6": dihedral(12),
        "Z2xZ4": direct_product(cyclic(2), cyclic(4)),
    }


def medium_groups() -> dict[str, Group]:
    return {
        "S4": symmetric(4), "D8": dihedral(16), "F21": f21(), "ZM(5,4,2)": zm_group(5, 4, 2),
        "Q8xZ3": direct_product(quaternion8(), cyclic(3)), "D4xZ2": direct_product(dihedral(8), cyclic(2)),
        "ZM(7,6,3)": zm_group(7, 6, 3), "S3xS3": direct_product(zm_group(3, 2, 2), zm_group(3, 2, 2)),
        "Z12": cyclic(12),
    }


@pytest.fixture(scope="session")
def small() -> dict[str, Group]:
    return small_groups()


@pytest.fixture(scope="session")
def medium() -> dict[str, Group]:
    return medium_groups()


@pytest.fixture(scope="session")
def heis7():
    from cdlat.constructors import heisenberg_gf
    return heisenberg_gf(7)


@pytest.fixture(scope="session")
def sec3_group(heis7):
    from cdlat.constructors import scalar_automorphism_extension
    return scalar_automorphism_extension(heis7, 2)
