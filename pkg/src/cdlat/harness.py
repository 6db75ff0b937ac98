"""Mechanical verification of the CD results on concrete instances.

Each check builds a group from a :class:`GroupSpec`, evaluates the claimed
closed form (measure and member set) independently of the CD engine, and
compares it exactly with the engine's output.  Expected member sets are
given by generators resolved through ``closure``, never by raw ids.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Any, Callable

from .cd import CDReport, cd_lattice, cd_measure, check_value, describe_subgroup
from .constructors import (GroupSpec, build_group, check_zm_parameters,
                           multiplicative_order, scalar_automorphism,
                           scalar_automorphism_extension, heisenberg_gf, spec)
from .errors import InvalidSpec, NotAbelian, NotIndexP, NotPGroup
from .fields import is_prime
from .frobenius import frobenius_conditions, regular_orbit_search, verify_theorem6
from .group import (UNKNOWN, Group, SubgroupSet, centralizer, closure,
                    is_abelian_subgroup)
from .subgroups import DEFAULT_LIMITS, Limits

FAST_SUITES = ("theorem3", "corollary4", "theorem6", "prop5", "corollary2", "prop7",
               "properties", "chain-classes")
STRETCH_SUITES = ("example-sec3",)


@dataclass
class VerificationOutcome:
    claim_id: str
    instance: GroupSpec
    expected: dict
    actual: dict
    passed: bool
    runtime_ms: int
    detail: dict = field(default_factory=dict)

    def to_dict(self, timings: bool = False) -> dict:
        out = {"claim_id": self.claim_id, "instance": self.instance.to_dict(),
               "expected": self.expected, "actual": self.actual, "passed": self.passed,
               "detail": self.detail}
        if timings:
            out["runtime_ms"] = self.runtime_ms
        return out


def _outcome(claim_id: str, instance: GroupSpec, work: Callable[[], tuple[dict, dict, dict]]) -> VerificationOutcome:
    start = time.perf_counter()
    expected, actual, detail = work()
    ms = int((time.perf_counter() - start) * 1000)
    return VerificationOutcome(claim_id, instance, expected, actual, expected == actual, ms, detail)


def _members(G: Group, subs) -> list[dict]:
    return [describe_subgroup(G, H, element_limit=0) for H in subs]


def _named(G: Group, *names: str) -> SubgroupSet:
    return closure(G, [g for n in names for g in G.named[n]])


def _cd_summary(G: Group, report: CDReport) -> dict:
    return {"max_measure": report.max_measure, "cd": _members(G, report.members),
            "property_failures": report.failed_checks()}


def _cross_checked(G: Group, limits: Limits, oracle: bool) -> tuple[CDReport, dict]:
    """Closure-family report, plus agreement with the oracle when requested."""
    report = cd_lattice(G, "closure_family", limits)
    extra: dict[str, Any] = {}
    if oracle:
        brute = cd_lattice(G, "brute_force", limits, check_properties=False)
        extra["oracle_agrees"] = (brute.members == report.members
                                  and brute.max_measure == report.max_measure)
    return report, extra


# --------------------------------------------------------------------------
# coprime abelian semidirect products

def verify_theorem3(a_spec: GroupSpec, b_spec: GroupSpec, action: dict, oracle: bool = True,
                    limits: Limits = DEFAULT_LIMITS, claim_id: str = "theorem3") -> VerificationOutcome:
    """m(G) = |A|^2 |C_B(A)|^2 and CD(G) = {A C_B(A)} for G = A x| B."""
    instance = spec("semidirect", a=a_spec, b=b_spec, action=action)

    def work():
        G = build_group(instance)
        A, B = _named(G, "A"), _named(G, "B")
        cba = centralizer(G, A) & B
        target = closure(G, G.named["A"] + tuple(cba.ids().tolist()))
        expected = {"max_measure": (A.order * cba.order) ** 2, "cd": _members(G, [target]),
                    "property_failures": []}
        report, extra = _cross_checked(G, limits, oracle)
        actual = _cd_summary(G, report)
        if oracle:
            expected["oracle_agrees"] = True
            actual.update(extra)
        faithful = cba.is_trivial()
        return expected, actual, {"order": G.order, "faithful": faithful, "c_b_a_order": cba.order}

    return _outcome(claim_id, instance, work)


def _z(n: int) -> GroupSpec:
    return spec("cyclic", n=n)


def _z3z3() -> GroupSpec:
    return spec("direct_product", left=_z(3), right=_z(3))


# Z3 x Z3 has ids 3 x + y; its generators are 3 = (1, 0) and 1 = (0, 1).
THEOREM3_CASES: list[tuple[str, GroupSpec, GroupSpec, dict]] = [
    ("Z5:Z4[x^2]", _z(5), _z(4), {"power": 2}),
    ("Z5:Z4[x^4]", _z(5), _z(4), {"power": 4}),
    ("Z5:Z4[trivial]", _z(5), _z(4), {"power": 1}),
    ("Z5:Z2[x^4]", _z(5), _z(2), {"power": 4}),
    ("Z7:Z3[x^2]", _z(7), _z(3), {"power": 2}),
    ("Z7:Z6[x^3]", _z(7), _z(6), {"power": 3}),
    ("Z7:Z6[x^2]", _z(7), _z(6), {"power": 2}),
    ("Z9:Z2[x^8]", _z(9), _z(2), {"power": 8}),
    ("Z9:Z4[x^8]", _z(9), _z(4), {"power": 8}),
    ("Z9:Z10[x^8]", _z(9), _z(10), {"power": 8}),
    ("Z3^2:Z2[-I]", _z3z3(), _z(2), {"a_generators": [3, 1], "images": [[6, 2]]}),
    ("Z3^2:Z4[rot]", _z3z3(), _z(4), {"a_generators": [3, 1], "images": [[1, 6]]}),
    ("Z3^2:Z8[1+t]", _z3z3(), _z(8), {"a_generators": [3, 1], "images": [[4, 7]]}),
    ("Z3^2:Z2^2[diag]", _z3z3(), spec("direct_product", left=_z(2), right=_z(2)),
     {"a_generators": [3, 1], "b_generators": [2, 1], "images": [[6, 1], [3, 2]]}),
    ("Z3^2:Z4[-I]", _z3z3(), _z(4), {"a_generators": [3, 1], "images": [[6, 2]]}),
]


# --------------------------------------------------------------------------
# ZM groups

def verify_corollary4(m: int, n: int, r: int, oracle: bool = True,
                      limits: Limits = DEFAULT_LIMITS) -> VerificationOutcome:
    """m(G) = m^2 n^2 / d^2 and CD(G) = {<a, b^d>} with d = ord_m(r)."""
    check_zm_parameters(m, n, r)
    instance = spec("zm", m=m, n=n, r=r)

    def work():
        G = build_group(instance)
        d = multiplicative_order(r, m)
        a, b = G.named["a"][0], G.named["b"][0]
        target = closure(G, [a, G.power(b, d)])
        expected = {"max_measure": (m * n // d) ** 2, "cd": _members(G, [target]),
                    "property_failures": [], "center_order": n // d, "chain_length": 0}
        report, extra = _cross_checked(G, limits, oracle)
        actual = _cd_summary(G, report)
        actual.update({"center_order": G.center.order, "chain_length": report.chain_length})
        if oracle:
            expected["oracle_agrees"] = True
            actual.update(extra)
        return expected, actual, {"d": d}

    return _outcome(f"corollary4:zm({m},{n},{r})", instance, work)


def zm_triples(bound: int) -> list[tuple[int, int, int]]:
    """All valid (m, n, r) with m n <= bound; r in 2..m-1, or r = 1 when m = 1."""
    out = []
    for m in range(1, bound + 1):
        for n in range(1, bound // m + 1):
            for r in ([1] if m == 1 else range(2, m)):
                try:
                    check_zm_parameters(m, n, r)
                except InvalidSpec:
                    continue
                out.append((m, n, r))
    return out


def scan_zm(bound: int = 200, oracle: bool = True, limits: Limits = DEFAULT_LIMITS) -> list[VerificationOutcome]:
    return [verify_corollary4(m, n, r, oracle, limits) for m, n, r in zm_triples(bound)]


# --------------------------------------------------------------------------
# p-groups with an abelian subgroup of index p

def _prime_power(n: int) -> int | None:
    for p in range(2, n + 1):
        if n % p == 0:
            while n % p == 0:
                n //= p
            return p if n == 1 else None
    return None


def verify_prop7(p_spec: GroupSpec, a_generators: list[int], oracle: bool = True,
                 limits: Limits = DEFAULT_LIMITS, name: str = "") -> VerificationOutcome:
    """CD(P) = {A} exactly when |P : Z(P)| > p^2; both sides computed separately."""
    def work():
        P = build_group(p_spec)
        p = _prime_power(P.order)
        if p is None:
            raise NotPGroup(f"order {P.order} is not a prime power")
        A = closure(P, a_generators)
        if not is_abelian_subgroup(P, A):
            raise NotAbelian("A is not abelian")
        if A.order * p != P.order:
            raise NotIndexP(f"|P : A| = {P.order // A.order} != {p}")
        index = P.order // P.center.order
        report, extra = _cross_checked(P, limits, oracle)
        expected = {"cd_is_A": index > p * p, "property_failures": []}
        actual = {"cd_is_A": report.members == [A], "property_failures": report.failed_checks()}
        if not P.is_abelian:
            expected.update({"centralizer_is_A": True, "measure_of_A": A.order ** 2})
            actual.update({"centralizer_is_A": centralizer(P, A) == A, "measure_of_A": cd_measure(P, A)})
        if oracle:
            expected["oracle_agrees"] = True
            actual.update(extra)
        return expected, actual, {"p": p, "center_index": index, "cd_size": len(report.members)}

    return _outcome(f"prop7:{name or p_spec.describe()}", p_spec, work)


PROP7_CASES: list[tuple[str, GroupSpec, list[int], Limits]] = [
    ("D16", spec("dihedral", two_n=16), [2], DEFAULT_LIMITS),
    ("D32", spec("dihedral", two_n=32), [2], DEFAULT_LIMITS),
    ("D8", spec("dihedral", two_n=8), [2], DEFAULT_LIMITS),
    ("Q8", spec("quaternion8"), [2], DEFAULT_LIMITS),
    # D8 x Z2 has ids 2 g + h; A = <r> x Z2
    ("D8xZ2", spec("direct_product", left=spec("dihedral", two_n=8), right=_z(2)), [4, 1], DEFAULT_LIMITS),
    ("Z8", _z(8), [2], DEFAULT_LIMITS),
    # heisenberg_gf(3): A = {(a, b, 0)} generated by the a- and b-parts
    ("Heis3", spec("heisenberg_gf", p=3), [81, 27, 9, 3], Limits(order_bound=243)),
]


# --------------------------------------------------------------------------
# Frobenius groups

@dataclass(frozen=True)
class ComplementCase:
    name: str
    group: GroupSpec
    kernel: tuple[str, ...]
    complement: tuple[str, ...]


def _sd(a: GroupSpec, b: GroupSpec, action: dict) -> GroupSpec:
    return spec("semidirect", a=a, b=b, action=action)


FROBENIUS_CASES = [
    ComplementCase("S3", spec("zm", m=3, n=2, r=2), ("a",), ("b",)),
    ComplementCase("D5", spec("dihedral", two_n=10), ("r",), ("s",)),
    ComplementCase("D7", spec("dihedral", two_n=14), ("r",), ("s",)),
    ComplementCase("F21", _sd(_z(7), _z(3), {"power": 2}), ("A",), ("B",)),
    ComplementCase("F20", _sd(_z(5), _z(4), {"power": 2}), ("A",), ("B",)),
    ComplementCase("Z11:Z5", _sd(_z(11), _z(5), {"power": 3}), ("A",), ("B",)),
]

NON_FROBENIUS_CASES = [
    ComplementCase("Z6", _sd(_z(3), _z(2), {"power": 1}), ("A",), ("B",)),
    ComplementCase("Z5xZ4", _sd(_z(5), _z(4), {"power": 1}), ("A",), ("B",)),
    ComplementCase("Z7:Z6[x^2]", _sd(_z(7), _z(6), {"power": 2}), ("A",), ("B",)),
    ComplementCase("Z9:Z4[x^8]", _sd(_z(9), _z(4), {"power": 8}), ("A",), ("B",)),
    ComplementCase("Z3^2:Z4[-I]", _sd(_z3z3(), _z(4), {"a_generators": [3, 1], "images": [[6, 2]]}), ("A",), ("B",)),
    ComplementCase("Z3^2:Z2^2[diag]", _sd(_z3z3(), spec("direct_product", left=_z(2), right=_z(2)),
                                          {"a_generators": [3, 1], "b_generators": [2, 1],
                                           "images": [[6, 1], [3, 2]]}), ("A",), ("B",)),
    # S4 with kernel V4 and complement S3 (a stabilizer of a point)
    ComplementCase("S4", spec("symmetric", k=4), ("V4",), ("S3",)),
]

EXTRA_FROBENIUS_CASES = [
    ComplementCase("Z7:Z6[x^3]", _sd(_z(7), _z(6), {"power": 3}), ("A",), ("B",)),
    ComplementCase("D9", _sd(_z(9), _z(2), {"power": 8}), ("A",), ("B",)),
    ComplementCase("Z3^2:Z2[-I]", _sd(_z3z3(), _z(2), {"a_generators": [3, 1], "images": [[6, 2]]}), ("A",), ("B",)),
    ComplementCase("Z3^2:Z4[rot]", _sd(_z3z3(), _z(4), {"a_generators": [3, 1], "images": [[1, 6]]}), ("A",), ("B",)),
    ComplementCase("Z3^2:Z8[1+t]", _sd(_z3z3(), _z(8), {"a_generators": [3, 1], "images": [[4, 7]]}), ("A",), ("B",)),
    # A4 = (Z2 x Z2) x| Z3, the generator acting by [[0, 1], [1, 1]]
    ComplementCase("A4", _sd(spec("direct_product", left=_z(2), right=_z(2)), _z(3),
                             {"a_generators": [2, 1], "images": [[1, 3]]}), ("A",), ("B",)),
]


def _s4_parts(G: Group) -> dict[str, tuple[int, ...]]:
    # symmetric(4) ids are lexicographic permutations of (0, 1, 2, 3)
    from itertools import permutations
    perms = list(permutations(range(4)))
    idx = {q: i for i, q in enumerate(perms)}
    v4 = [(1, 0, 3, 2), (2, 3, 0, 1), (3, 2, 1, 0)]
    s3 = [(1, 0, 2, 3), (0, 2, 1, 3)]
    return {"V4": tuple(idx[q] for q in v4), "S3": tuple(idx[q] for q in s3)}


def _case_parts(case: ComplementCase) -> tuple[Group, SubgroupSet, SubgroupSet]:
    G = build_group(case.group)
    named = dict(G.named)
    if case.group.family == "symmetric":
        named.update(_s4_parts(G))
    N = closure(G, [g for k in case.kernel for g in named[k]])
    A = closure(G, [g for k in case.complement for g in named[k]])
    return G, N, A


def verify_theorem6_case(case: ComplementCase, oracle: bool = True,
                         limits: Limits = DEFAULT_LIMITS) -> VerificationOutcome:
    def work():
        G, N, A = _case_parts(case)
        rep = verify_theorem6(G, N, A, "closure_family", limits)
        expected = {k: True for k in rep.checks}
        actual = dict(rep.checks)
        if oracle:
            brute = verify_theorem6(G, N, A, "brute_force", limits)
            expected["oracle_cd_equal"] = True
            actual["oracle_cd_equal"] = (brute.checks.get("cd_equal", False)
                                         and brute.cd_group.members == rep.cd_group.members)
        detail = {"cd": _members(G, rep.cd_group.members) if rep.cd_group else []}
        return expected, actual, detail

    return _outcome(f"theorem6:{case.name}", case.group, work)


def verify_prop5_case(case: ComplementCase) -> VerificationOutcome:
    """The four Frobenius characterizations agree on a complement pair."""
    def work():
        G, N, A = _case_parts(case)
        w = frobenius_conditions(G, N, A)
        first = w.condition_results[0]
        return ({"conditions": [first] * 4}, {"conditions": list(w.condition_results)},
                {"is_frobenius": w.is_frobenius})

    return _outcome(f"prop5:{case.name}", case.group, work)


def verify_corollary2_case(case: ComplementCase) -> VerificationOutcome:
    """A faithful coprime abelian action has a regular orbit."""
    def work():
        G, H, N = _case_parts(case)
        x = regular_orbit_search(G, N, H)
        return {"regular_orbit_found": True}, {"regular_orbit_found": x is not None}, {"witness": x}

    return _outcome(f"corollary2:{case.name}", case.group, work)


def corollary2_cases() -> list[ComplementCase]:
    """Faithful coprime abelian actions: Frobenius complements acting on kernels."""
    out = FROBENIUS_CASES + EXTRA_FROBENIUS_CASES
    out.append(ComplementCase("Z3^2:Z2^2[diag]", NON_FROBENIUS_CASES[5].group, ("A",), ("B",)))
    out.append(ComplementCase("Z13:Z3[x^3]", _sd(_z(13), _z(3), {"power": 3}), ("A",), ("B",)))
    out.append(ComplementCase("Z13:Z4[x^5]", _sd(_z(13), _z(4), {"power": 5}), ("A",), ("B",)))
    return out


# --------------------------------------------------------------------------
# the order 3 * 7^5 example

def verify_example_sec3(p: int = 7, lam: int = 2, limits: Limits = DEFAULT_LIMITS) -> VerificationOutcome:
    """P = heisenberg_gf(p), G = P x| <x>; CD(G) = CD(P) = {A}."""
    instance = spec("scalar_ext", p=p, **{"lambda": lam})

    def work():
        P = heisenberg_gf(p)
        G = scalar_automorphism_extension(P, lam)
        A_P = closure(P, P.named["A"])
        cd_p = cd_lattice(P, "closure_family", limits)
        N, X, A = _named(G, "P"), _named(G, "x"), _named(G, "A")
        w = frobenius_conditions(G, N, X)
        cd_g = cd_lattice(G, "closure_family", limits)
        e = G.info["x_order"]
        sigma = scalar_automorphism(P, lam)
        x = G.named["x"][0]
        conj = G.mul(G.mul(int(G.inverse[x]), N.ids()), x)
        expected = {
            "order_P": p ** 5, "center_order_P": p ** 2, "A_abelian": True, "A_index": p,
            "x_order": 3 if (p, lam) == (7, 2) else e, "x_acts_as_scalar_map": True,
            "x_fixed_point_free": True, "frobenius_conditions": [True] * 4,
            "cd_P": _members(P, [A_P]), "cd_G": _members(G, [A]),
            "max_measure_G": (p ** 4) ** 2, "property_failures": [],
        }
        actual = {
            "order_P": P.order, "center_order_P": P.center.order,
            "A_abelian": is_abelian_subgroup(P, A_P), "A_index": P.order // A_P.order,
            "x_order": G.element_orders[x].item(),
            "x_acts_as_scalar_map": bool((conj == sigma[N.ids()]).all()),
            "x_fixed_point_free": G.info["fixed_point_free"],
            "frobenius_conditions": list(w.condition_results),
            "cd_P": _members(P, cd_p.members), "cd_G": _members(G, cd_g.members),
            "max_measure_G": cd_g.max_measure,
            "property_failures": cd_p.failed_checks() + cd_g.failed_checks(),
        }
        detail = {"order_G": G.order, "family_size_P": cd_p.diagnostics["family_size"],
                  "family_size_G": cd_g.diagnostics["family_size"],
                  "minimum_characteristic": check_value(cd_g.property_checks.get("minimum_characteristic", UNKNOWN))}
        return expected, actual, detail

    return _outcome(f"example-sec3:p={p},lambda={lam}", instance, work)


# --------------------------------------------------------------------------
# corpus-wide checks

@dataclass(frozen=True)
class CorpusEntry:
    name: str
    spec: GroupSpec
    kinds: tuple[str, ...] = ()


def default_corpus() -> list[CorpusEntry]:
    """Small groups used by the method-equivalence and property suites."""
    entries = [
        CorpusEntry("Z1", _z(1)), CorpusEntry("Z6", _z(6), ("theorem3",)), CorpusEntry("Z12", _z(12)),
        CorpusEntry("Z2^3", spec("direct_product", left=spec("direct_product", left=_z(2), right=_z(2)), right=_z(2))),
        CorpusEntry("S3", spec("zm", m=3, n=2, r=2), ("theorem3", "frobenius_abelian_kernel")),
        CorpusEntry("Q8", spec("quaternion8")), CorpusEntry("D4", spec("dihedral", two_n=8)),
        CorpusEntry("D5", spec("dihedral", two_n=10), ("theorem3", "frobenius_abelian_kernel")),
        CorpusEntry("D6", spec("dihedral", two_n=12)),
        CorpusEntry("D7", spec("dihedral", two_n=14), ("theorem3", "frobenius_abelian_kernel")),
        CorpusEntry("D8", spec("dihedral", two_n=16)), CorpusEntry("D16", spec("dihedral", two_n=32)),
        CorpusEntry("D100", spec("dihedral", two_n=200)),
        CorpusEntry("S4", spec("symmetric", k=4)), CorpusEntry("S5", spec("symmetric", k=5)),
        CorpusEntry("D4xZ2", spec("direct_product", left=spec("dihedral", two_n=8), right=_z(2))),
        CorpusEntry("Q8xZ3", spec("direct_product", left=spec("quaternion8"), right=_z(3))),
        CorpusEntry("S3xS3", spec("direct_product", left=spec("zm", m=3, n=2, r=2), right=spec("zm", m=3, n=2, r=2))),
        CorpusEntry("ZM(5,4,2)", spec("zm", m=5, n=4, r=2), ("theorem3", "frobenius_abelian_kernel")),
        CorpusEntry("ZM(7,6,3)", spec("zm", m=7, n=6, r=3), ("theorem3", "frobenius_abelian_kernel")),
        CorpusEntry("ZM(7,3,2)", spec("zm", m=7, n=3, r=2), ("theorem3", "frobenius_abelian_kernel")),
        CorpusEntry("ZM(13,12,2)", spec("zm", m=13, n=12, r=2), ("theorem3", "frobenius_abelian_kernel")),
    ]

    def add(name: str, group_spec: GroupSpec, kinds: tuple[str, ...]) -> None:
        if any(e.spec == group_spec for e in entries):
            return
        if any(e.name == name for e in entries):
            name += "(sd)"
        entries.append(CorpusEntry(name, group_spec, kinds))

    for case in FROBENIUS_CASES + EXTRA_FROBENIUS_CASES:
        if case.group.family == "semidirect":
            add(case.name, case.group, ("theorem3", "frobenius_abelian_kernel"))
    for case in NON_FROBENIUS_CASES:
        if case.group.family == "semidirect":
            add(case.name, case.group, ("theorem3",))
    for name, a, b, action in THEOREM3_CASES:
        add(name, _sd(a, b, action), ("theorem3",))
    return entries


def verify_corpus_entry(entry: CorpusEntry, limits: Limits = DEFAULT_LIMITS) -> VerificationOutcome:
    """Closure-family and oracle agree, and every lattice property holds."""
    def work():
        G = build_group(entry.spec)
        report, extra = _cross_checked(G, limits, oracle=G.order <= limits.order_bound)
        checks = {k: check_value(v) for k, v in sorted(report.property_checks.items())}
        expected = {"oracle_agrees": True, "property_failures": []}
        actual = {"oracle_agrees": extra.get("oracle_agrees", False),
                  "property_failures": report.failed_checks()}
        if G.is_abelian:
            expected["abelian_cd"] = {"members": [describe_subgroup(G, G.full(), 0)], "max_measure": G.order ** 2}
            actual["abelian_cd"] = {"members": _members(G, report.members), "max_measure": report.max_measure}
        detail = {"order": G.order, "max_measure": report.max_measure, "cd_size": len(report.members),
                  "is_chain": report.is_chain, "chain_length": report.chain_length, "checks": checks}
        return expected, actual, detail

    return _outcome(f"properties:{entry.name}", entry.spec, work)


def census_row(name: str, group_spec: GroupSpec, limits: Limits = DEFAULT_LIMITS,
               method: str = "closure_family") -> dict:
    """One scan row; groups beyond a guard are marked skipped."""
    from .errors import SizeGuard
    try:
        G = build_group(group_spec)
        r = cd_lattice(G, method, limits, check_properties=False)
    except SizeGuard as exc:
        return {"name": name, "spec": group_spec.to_dict(), "skipped": str(exc)}
    return {"name": name, "spec": group_spec.to_dict(), "order": G.order, "max_measure": r.max_measure,
            "cd_size": len(r.members), "is_chain": r.is_chain, "chain_length": r.chain_length}


def verify_cd_chain_classes(corpus: list[CorpusEntry] | None = None,
                            limits: Limits = DEFAULT_LIMITS) -> dict:
    """Tabulate chain-of-length-0 CD lattices; check the two sufficient families."""
    corpus = default_corpus() if corpus is None else corpus
    rows = []
    violations = []
    for entry in corpus:
        row = census_row(entry.name, entry.spec, limits)
        row["kinds"] = list(entry.kinds)
        row["singleton"] = row.get("cd_size") == 1
        if entry.kinds and "skipped" not in row and not row["singleton"]:
            violations.append(entry.name)
        rows.append(row)
    return {"rows": rows, "violations": violations, "passed": not violations}


def chain_classes_outcome(corpus: list[CorpusEntry] | None = None,
                          limits: Limits = DEFAULT_LIMITS) -> VerificationOutcome:
    def work():
        summary = verify_cd_chain_classes(corpus, limits)
        singles = sorted(r["name"] for r in summary["rows"] if r["singleton"])
        return {"violations": []}, {"violations": summary["violations"]}, {"singletons": singles}

    return _outcome("chain-classes", spec("cyclic", n=1), work)


# --------------------------------------------------------------------------
# suite assembly

Task = tuple[str, tuple]


def suite_tasks(suite: str, bound: int = 200, oracle: bool = True) -> list[Task]:
    """Picklable task descriptors; :func:`run_task` evaluates one."""
    if suite == "theorem3":
        return [("theorem3", (i, oracle)) for i in range(len(THEOREM3_CASES))]
    if suite == "corollary4":
        return [("corollary4", (m, n, r, oracle)) for m, n, r in zm_triples(bound)]
    if suite == "theorem6":
        return [("theorem6", (i, oracle)) for i in range(len(FROBENIUS_CASES))]
    if suite == "prop5":
        return [("prop5", (i,)) for i in range(len(_prop5_cases()))]
    if suite == "corollary2":
        return [("corollary2", (i,)) for i in range(len(corollary2_cases()))]
    if suite == "prop7":
        return [("prop7", (i, oracle)) for i in range(len(PROP7_CASES))]
    if suite == "properties":
        return [("properties", (i,)) for i in range(len(default_corpus()))]
    if suite == "chain-classes":
        return [("chain-classes", ())]
    if suite == "example-sec3":
        return [("example-sec3", ())]
    raise ValueError(f"unknown suite {suite!r}")


def _prop5_cases() -> list[ComplementCase]:
    return FROBENIUS_CASES + EXTRA_FROBENIUS_CASES + NON_FROBENIUS_CASES


def run_task(task: Task) -> VerificationOutcome:
    kind, args = task
    if kind == "theorem3":
        name, a, b, action = THEOREM3_CASES[args[0]]
        return verify_theorem3(a, b, action, oracle=args[1], claim_id=f"theorem3:{name}")
    if kind == "corollary4":
        return verify_corollary4(*args)
    if kind == "theorem6":
        return verify_theorem6_case(FROBENIUS_CASES[args[0]], oracle=args[1])
    if kind == "prop5":
        return verify_prop5_case(_prop5_cases()[args[0]])
    if kind == "corollary2":
        return verify_corollary2_case(corollary2_cases()[args[0]])
    if kind == "prop7":
        name, s, gens, limits = PROP7_CASES[args[0]]
        return verify_prop7(s, gens, oracle=args[1], limits=limits, name=name)
    if kind == "properties":
        return verify_corpus_entry(default_corpus()[args[0]])
    if kind == "chain-classes":
        return chain_classes_outcome()
    if kind == "example-sec3":
        return verify_example_sec3()
    raise ValueError(f"unknown task {kind!r}")


def run_suites(suites: list[str], bound: int = 200, threads: int = 1,
               oracle: bool = True) -> list[VerificationOutcome]:
    """Run suites in order; with ``threads > 1`` tasks go to a process pool,
    and results are still collected in task order."""
    tasks = [t for s in suites for t in suite_tasks(s, bound, oracle)]
    if threads <= 1 or len(tasks) <= 1:
        return [run_task(t) for t in tasks]
    from concurrent.futures import ProcessPoolExecutor
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(run_task, tasks, chunksize=max(1, len(tasks) // (threads * 4))))
