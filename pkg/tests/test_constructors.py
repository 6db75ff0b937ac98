from __future__ import annotations

import itertools
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from cdlat.constructors import (ActionSpec, GroupSpec, build_group, check_zm_parameters,
                                cyclic, dihedral, direct_product, heisenberg_gf,
                                multiplicative_order, quaternion8, scalar_automorphism,
                                scalar_automorphism_extension, semidirect_product, spec,
                                spec_from_dict, symmetric, zm_center_generator, zm_group)
from cdlat.errors import (InvalidAction, InvalidLambda, InvalidSpec, InvalidZMParameters,
                          NotAbelian, NotCoprime, NotCoprimeOrders, SizeGuard)
from cdlat.fields import gf2_make, gf_make
from cdlat.group import (center, centralizer, closure, is_normal, validate_group)
from cdlat.harness import zm_triples

from conftest import f21, table_of


def _brute_center_order(G) -> int:
    t = table_of(G)
    n = G.order
    return sum(all(t[z][g] == t[g][z] for g in range(n)) for z in range(n))


# --------------------------------------------------------------------------
# small families

def test_cyclic_one_is_trivial():
    G = cyclic(1)
    assert G.order == 1 and G.is_abelian and G.generators == ()


@pytest.mark.parametrize("n", [2, 5, 12])
def test_cyclic(n):
    G = cyclic(n)
    validate_group(G)
    assert closure(G, [1]).order == n and G.is_abelian


def test_dihedral_ten():
    G = dihedral(10)
    validate_group(G)
    assert G.order == 10 and not G.is_abelian
    assert _brute_center_order(G) == 1 == center(G).order


@pytest.mark.parametrize("two_n, z", [(4, 4), (6, 1), (8, 2), (12, 2), (16, 2), (18, 1)])
def test_dihedral_centers(two_n, z):
    G = dihedral(two_n)
    assert center(G).order == z == _brute_center_order(G)


def test_dihedral_relations():
    G = dihedral(16)
    r, s = G.named["r"][0], G.named["s"][0]
    assert G.power(r, 8) == 0 and G.power(s, 2) == 0
    assert G.mul(G.mul(s, r), s) == G.inv(r)


def test_quaternion8():
    G = quaternion8()
    validate_group(G)
    t = table_of(G)
    involutions = [g for g in range(1, 8) if t[g][g] == 0]
    assert G.order == 8 and _brute_center_order(G) == 2 and len(involutions) == 1


@pytest.mark.parametrize("k, n", [(1, 1), (2, 2), (3, 6), (4, 24), (5, 120)])
def test_symmetric(k, n):
    G = symmetric(k)
    validate_group(G)
    assert G.order == n
    assert closure(G, G.generators).order == n
    assert G.labels[0] == "".join(str(i) for i in range(k))


def test_symmetric_composition_convention():
    G = symmetric(3)
    idx = {lab: i for i, lab in enumerate(G.labels)}
    # (g h)(x) = g(h(x)); g = 102, h = 021 gives g(h(x)) = 120
    assert G.labels[G.mul(idx["102"], idx["021"])] == "120"


@pytest.mark.parametrize("bad", [0, 6, 9])
def test_symmetric_rejects(bad):
    with pytest.raises(InvalidSpec):
        symmetric(bad)


@pytest.mark.parametrize("bad", [0, 2, 3, 7])
def test_dihedral_rejects(bad):
    with pytest.raises(InvalidSpec):
        dihedral(bad)


def test_direct_product():
    G = direct_product(dihedral(8), cyclic(3))
    validate_group(G)
    assert G.order == 24 and center(G).order == 6
    assert closure(G, G.generators).order == 24
    left = closure(G, G.named["left"])
    right = closure(G, G.named["right"])
    assert left.order == 8 and right.order == 3
    assert is_normal(G, left) and is_normal(G, right)


def test_size_guard_on_overflow():
    with pytest.raises(SizeGuard):
        direct_product(cyclic(300), cyclic(300))
    with pytest.raises(SizeGuard):
        heisenberg_gf(11)


# --------------------------------------------------------------------------
# ZM groups

@pytest.mark.parametrize("r, m, d", [(1, 5, 1), (2, 3, 2), (2, 5, 4), (3, 7, 6), (2, 7, 3), (4, 9, 3)])
def test_multiplicative_order(r, m, d):
    assert multiplicative_order(r, m) == d


def test_multiplicative_order_not_coprime():
    with pytest.raises(NotCoprime):
        multiplicative_order(2, 4)


def test_zm_s3():
    G = zm_group(3, 2, 2)
    validate_group(G)
    assert G.order == 6 and not G.is_abelian and center(G).is_trivial()
    assert G.labels[G.named["a"][0]] == "a" and G.labels[G.named["b"][0]] == "b"


def test_zm_order_20():
    G = zm_group(5, 4, 2)
    assert G.order == 20 and center(G).is_trivial()


def test_zm_relation():
    G = zm_group(7, 3, 2)
    a, b = G.named["a"][0], G.named["b"][0]
    assert G.mul(G.mul(G.inv(b), a), b) == G.power(a, 2)
    assert G.power(a, 7) == 0 and G.power(b, 3) == 0


def test_zm_invalid():
    with pytest.raises(InvalidZMParameters) as info:
        zm_group(4, 2, 3)
    assert "gcd(m, r-1) != 1" in str(info.value)
    with pytest.raises(InvalidZMParameters, match=r"gcd\(m, n\)"):
        zm_group(3, 3, 1)
    with pytest.raises(InvalidZMParameters, match=r"r\^n"):
        zm_group(7, 2, 2)


def test_zm_triples_are_valid_and_complete():
    triples = zm_triples(60)
    expected = []
    for m in range(1, 61):
        for n in range(1, 61 // m + 1):
            if m * n > 60 or math.gcd(m, n) != 1:
                continue
            # ZM(1, n, r) does not depend on r, so r = 1 stands for it
            for r in (range(m) if m > 1 else [1]):
                if math.gcd(m, r - 1) == 1 and pow(r, n, m) == 1 % m:
                    expected.append((m, n, r))
    assert sorted(triples) == sorted(expected)


def test_zm_center_is_generated_by_b_power_d():
    # exhaustive over every valid triple with mn <= 200
    for m, n, r in zm_triples(200):
        G = zm_group(m, n, r)
        z = zm_center_generator(m, n, r)
        assert center(G) == closure(G, [z]), (m, n, r)


# --------------------------------------------------------------------------
# semidirect products

def test_trivial_action_is_direct_product():
    A, B = cyclic(5), cyclic(4)
    G = semidirect_product(A, B, ActionSpec.trivial(A, B))
    assert G.is_abelian and G.order == 20
    D = direct_product(A, B)
    assert np.array_equal(G.table, D.table)


def test_f21():
    G = f21()
    validate_group(G)
    assert G.order == 21 and center(G).is_trivial()
    A = closure(G, G.named["A"])
    B = closure(G, G.named["B"])
    assert is_normal(G, A) and (A & B).is_trivial() and A.order * B.order == 21


def test_constant_map_rejected():
    A, B = cyclic(5), cyclic(2)
    with pytest.raises(InvalidAction):
        semidirect_product(A, B, ActionSpec((1,), (1,), ((0,),)))


def test_relation_violation_rejected():
    # x -> x^2 has order 4 on Z5, so it cannot be the image of a generator of Z2
    A, B = cyclic(5), cyclic(2)
    with pytest.raises(InvalidAction) as info:
        semidirect_product(A, B, ActionSpec.power(A, B, 2))
    assert info.value.witness is not None


def test_non_homomorphism_rejected():
    A = direct_product(cyclic(3), cyclic(3))
    B = cyclic(2)
    with pytest.raises(InvalidAction):
        semidirect_product(A, B, ActionSpec((3, 1), (1,), ((1, 1),)))


def test_semidirect_guards():
    with pytest.raises(NotCoprimeOrders):
        semidirect_product(cyclic(4), cyclic(2), ActionSpec.trivial(cyclic(4), cyclic(2)))
    S3 = zm_group(3, 2, 2)
    with pytest.raises(NotAbelian):
        semidirect_product(S3, cyclic(5), ActionSpec.trivial(S3, cyclic(5)))


@given(st.sampled_from([(5, 4), (7, 6), (7, 3), (9, 2), (11, 5), (13, 4), (9, 6)]), st.integers(0, 60))
def test_power_actions(orders, k):
    ma, nb = orders
    A, B = cyclic(ma), cyclic(nb)
    e = k % ma
    if math.gcd(e, ma) != 1 or math.gcd(ma, nb) != 1:
        return
    action = ActionSpec.power(A, B, e)
    if pow(e, nb, ma) != 1:
        with pytest.raises(InvalidAction):
            semidirect_product(A, B, action)
        return
    G = semidirect_product(A, B, action)
    validate_group(G)
    Ae, Be = closure(G, G.named["A"]), closure(G, G.named["B"])
    assert is_normal(G, Ae) and (Ae & Be).is_trivial() and Ae.order * Be.order == G.order
    a, b = G.named["A"][0], G.named["B"][0]
    assert G.mul(G.mul(G.inv(b), a), b) == G.power(a, e)


def test_zm_matches_power_semidirect():
    # ZM(m, n, r) is Z_m x| Z_n with b acting by x -> x^r, and the ids agree
    for m, n, r in [(3, 2, 2), (5, 4, 2), (7, 3, 2), (7, 6, 3)]:
        Z = zm_group(m, n, r)
        S = semidirect_product(cyclic(m), cyclic(n), ActionSpec.power(cyclic(m), cyclic(n), r))
        assert np.array_equal(Z.table, S.table)


# --------------------------------------------------------------------------
# Heisenberg-type group

def _field_product(x, y, p):
    """Reference product (a, b, c)(a', b', c') = (a + a', b + b' + a c', c + c') with field objects."""
    (a, b, c), (a2, b2, c2) = x, y
    return a + a2, b + b2 + a * c2.embed(), c + c2


def _decode(i, p):
    digits = []
    for _ in range(5):
        i, d = divmod(i, p)
        digits.append(d)
    c, b1, b0, a1, a0 = digits
    return gf2_make(p, a0, a1), gf2_make(p, b0, b1), gf_make(p, c)


def _encode(t, p):
    a, b, c = t
    return (((a.c0 * p + a.c1) * p + b.c0) * p + b.c1) * p + c.c0


@pytest.mark.parametrize("p", [3, 7])
def test_heisenberg_product_matches_field_formula(p):
    P = heisenberg_gf(p)
    rng = np.random.default_rng(p)
    xs = rng.integers(0, P.order, 400)
    ys = rng.integers(0, P.order, 400)
    got = np.asarray(P.mul(xs, ys)).tolist()
    for x, y, z in zip(xs.tolist(), ys.tolist(), got):
        assert z == _encode(_field_product(_decode(x, p), _decode(y, p), p), p)
    for x in xs.tolist():
        assert P.mul(x, int(P.inverse[x])) == 0


def test_heisenberg_7(heis7):
    P = heis7
    assert P.order == 16807 and not P.is_abelian
    assert center(P).order == 49
    A = closure(P, P.named["A"])
    assert A.order == 2401 and P.order // A.order == 7
    assert centralizer(P, A) == A


def test_heisenberg_3():
    P = heisenberg_gf(3)
    validate_group(P)
    assert P.order == 243 and center(P).order == 9 == _brute_center_order(P)
    A = closure(P, P.named["A"])
    assert A.order == 81 and centralizer(P, A) == A


def test_heisenberg_rejects_even_or_composite():
    for p in (2, 4, 9):
        with pytest.raises(InvalidSpec):
            heisenberg_gf(p)


def test_sec3_extension(sec3_group, heis7):
    G = sec3_group
    assert G.order == 50421 == 3 * 7 ** 5
    assert G.info["x_order"] == 3 and G.info["fixed_point_free"] is True
    x = G.named["x"][0]
    assert G.power(x, 3) == 0 and G.power(x, 1) != 0
    # conjugation by x is exactly (a, b, c) -> (2a, 4b, 2c) on all of P
    n = heis7.elements
    conj = np.asarray(G.mul(G.mul(int(G.inverse[x]), n), x))
    assert np.array_equal(conj, scalar_automorphism(heis7, 2))
    rng = np.random.default_rng(0)
    for i in rng.integers(0, heis7.order, 300).tolist():
        a, b, c = _decode(i, 7)
        two = gf_make(7, 2)
        assert conj[i] == _encode((a * two, b * gf_make(7, 4), c * two), 7)


def test_scalar_map_is_automorphism_on_generators(heis7):
    sigma = scalar_automorphism(heis7, 2)
    one_a = _encode((gf2_make(7, 1), gf2_make(7, 0), gf_make(7, 0)), 7)
    one_c = _encode((gf2_make(7, 0), gf2_make(7, 0), gf_make(7, 1)), 7)
    assert sigma[heis7.mul(one_a, one_c)] == heis7.mul(int(sigma[one_a]), int(sigma[one_c]))


def test_scalar_extension_rejects_identity_lambda():
    P = heisenberg_gf(3)
    with pytest.raises(InvalidLambda):
        scalar_automorphism_extension(P, 1)
    with pytest.raises(InvalidLambda):
        scalar_automorphism_extension(P, 4)
    with pytest.raises(InvalidLambda):
        scalar_automorphism_extension(P, 3)


def test_scalar_extension_p3():
    P = heisenberg_gf(3)
    G = scalar_automorphism_extension(P, 2)
    validate_group(G)
    # lambda = 2 has order 2 mod 3 but lambda^2 = 1, so x centralizes the b-part
    assert G.order == 486 and G.info["fixed_point_free"] is False


@pytest.mark.parametrize("p, lam, fpf", [(5, 2, False), (5, 4, False), (7, 3, False), (7, 2, True), (7, 6, False), (13, 3, True), (13, 5, False)])
def test_fixed_point_freeness_predicted(p, lam, fpf):
    e = multiplicative_order(lam, p)
    predicted = all(pow(lam, k, p) != 1 and pow(lam, 2 * k, p) != 1 for k in range(1, e))
    assert predicted == fpf
    if p == 5:
        G = scalar_automorphism_extension(heisenberg_gf(5), lam)
        assert G.info["fixed_point_free"] == fpf


# --------------------------------------------------------------------------
# specs

def test_spec_round_trip():
    data = {"family": "semidirect", "params": {
        "a": {"family": "cyclic", "params": {"n": 7}},
        "b": {"family": "cyclic", "params": {"n": 3}},
        "action": {"power": 2}}}
    s = spec_from_dict(data)
    G = build_group(s)
    assert G.order == 21 and center(G).is_trivial()
    assert spec_from_dict(G.spec.to_dict()).to_dict() == G.spec.to_dict()


def test_spec_images_action():
    data = {"family": "semidirect", "params": {
        "a": {"family": "direct_product", "params": {
            "left": {"family": "cyclic", "params": {"n": 3}},
            "right": {"family": "cyclic", "params": {"n": 3}}}},
        "b": {"family": "cyclic", "params": {"n": 2}},
        "action": {"images": [[6, 2]]}}}
    G = build_group(spec_from_dict(data))
    assert G.order == 18 and center(G).is_trivial()


@pytest.mark.parametrize("bad", [
    [],
    {"family": "nope"},
    {"family": "cyclic"},
    {"family": "cyclic", "params": {"n": 3, "m": 1}},
    {"family": "cyclic", "params": {"n": "3"}},
    {"family": "cyclic", "params": {"n": True}},
    {"family": "cyclic", "params": {"n": 3}, "extra": 1},
    {"family": "zm", "params": {"m": 4, "n": 2, "r": 3}},
    {"family": "semidirect", "params": {"a": {"family": "cyclic", "params": {"n": 5}},
                                        "b": {"family": "cyclic", "params": {"n": 2}},
                                        "action": {"power": 4, "images": [[1]]}}},
])
def test_bad_specs_rejected(bad):
    with pytest.raises(InvalidSpec):
        build_group(spec_from_dict(bad))


def test_spec_describe():
    assert spec("zm", m=5, n=4, r=2).describe() == "ZM(5,4,2)"
    assert GroupSpec("quaternion8").describe() == "Q8"


def test_all_families_build():
    specs = [spec("cyclic", n=4), spec("dihedral", two_n=8), spec("quaternion8"), spec("symmetric", k=3),
             spec("direct_product", left=spec("cyclic", n=2), right=spec("cyclic", n=2)),
             spec("zm", m=5, n=4, r=2), spec("heisenberg_gf", p=3), spec("scalar_ext", p=5, lambda_=2)]
    specs[-1] = GroupSpec("scalar_ext", {"p": 5, "lambda": 2})
    orders = [build_group(s).order for s in specs]
    assert orders == [4, 8, 8, 6, 4, 20, 243, 4 * 5 ** 5]


@pytest.mark.parametrize("m, n, r", list(itertools.islice(zm_triples(60), 0, None, 7)))
def test_zm_groups_validate(m, n, r):
    check_zm_parameters(m, n, r)
    validate_group(zm_group(m, n, r))
