"""Group families used throughout the package.

Every constructor describes its multiplication as a vectorized kernel over
element ids; groups up to :data:`~cdlat.group.DENSE_MAX_ORDER` get the
kernel evaluated into a dense Cayley table, larger ones keep the kernel.
Element ids follow the lexicographic order of each family's natural
parameter tuple, so the identity is always id 0.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Any, Callable, Sequence

import numpy as np

from .errors import (InvalidAction, InvalidLambda, InvalidSpec, InvalidZMParameters,
                     NotAbelian, NotCoprime, NotCoprimeOrders, SizeGuard)
from .fields import is_prime, smallest_nonresidue
from .group import (DENSE_MAX_ORDER, Group, _smallest_dtype, closure_mask,
                    extend_homomorphism)

MAX_ORDER = 1 << 16

FAMILIES = ("cyclic", "dihedral", "quaternion8", "symmetric", "direct_product",
            "zm", "semidirect", "heisenberg_gf", "scalar_ext")


@dataclass
class GroupSpec:
    """Declarative recipe: a family name plus its parameters.

    Nested specs (``direct_product``, ``semidirect``) hold GroupSpec values
    in their parameters.
    """

    family: str
    params: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        def conv(v):
            if isinstance(v, GroupSpec):
                return v.to_dict()
            if isinstance(v, dict):
                return {k: conv(x) for k, x in v.items()}
            if isinstance(v, (list, tuple)):
                return [conv(x) for x in v]
            return v
        return {"family": self.family, "params": conv(self.params)}

    def describe(self) -> str:
        p = self.params
        if self.family in ("direct_product",):
            return f"{p['left'].describe()} x {p['right'].describe()}"
        if self.family == "semidirect":
            return f"{p['a'].describe()} : {p['b'].describe()} {_describe_action(p['action'])}"
        if self.family == "quaternion8":
            return "Q8"
        short = {"cyclic": "Z", "dihedral": "D", "symmetric": "S", "zm": "ZM",
                 "heisenberg_gf": "Heis", "scalar_ext": "Heis:x"}[self.family]
        args = ",".join(f"{v}" for v in p.values())
        return f"{short}({args})"


def _describe_action(action: dict) -> str:
    if "power" in action:
        return f"[x->x^{action['power']}]"
    return f"[images={action.get('images')}]"


@dataclass(frozen=True)
class ActionSpec:
    """Action of an abelian group B on an abelian group A.

    ``images[i][j]`` is the image of ``a_generators[j]`` under
    ``b_generators[i]``; the action is ``b^-1 a b = image``.
    """

    a_generators: tuple[int, ...]
    b_generators: tuple[int, ...]
    images: tuple[tuple[int, ...], ...]

    @classmethod
    def power(cls, A: Group, B: Group, exponent: int | Sequence[int]) -> "ActionSpec":
        """Each generator of B raises every element of A to a fixed power."""
        b_gens = B.generators
        exps = [exponent] * len(b_gens) if isinstance(exponent, int) else list(exponent)
        if len(exps) != len(b_gens):
            raise InvalidAction("one exponent per generator of B is required")
        a_gens = A.generators
        return cls(tuple(a_gens), tuple(b_gens),
                   tuple(tuple(A.power(g, e) for g in a_gens) for e in exps))

    @classmethod
    def trivial(cls, A: Group, B: Group) -> "ActionSpec":
        return cls.power(A, B, 1)


# --------------------------------------------------------------------------
# helpers

def _finish(order: int, kernel: Callable[[np.ndarray, np.ndarray], np.ndarray],
            inverse: np.ndarray, **kwargs) -> Group:
    if order > MAX_ORDER:
        raise SizeGuard(f"group order {order} exceeds the table budget {MAX_ORDER}")
    if order <= DENSE_MAX_ORDER:
        ids = np.arange(order, dtype=np.int64)
        table = np.empty((order, order), dtype=_smallest_dtype(order))
        step = max(1, (1 << 22) // order)
        for start in range(0, order, step):
            rows = ids[start:start + step, None]
            table[start:start + step] = kernel(*np.broadcast_arrays(rows, ids[None, :]))
        return Group(order, table=table, inverse=inverse, trusted=True, **kwargs)
    return Group(order, kernel=kernel, inverse=inverse, trusted=True, **kwargs)


def _power_label(sym: str, k: int) -> str:
    if k == 0:
        return ""
    return sym if k == 1 else f"{sym}^{k}"


def _word(*parts: str) -> str:
    word = " ".join(p for p in parts if p)
    return word or "1"


def multiplicative_order(r: int, m: int) -> int:
    """Least k >= 1 with r^k = 1 (mod m)."""
    if m < 1:
        raise NotCoprime(f"modulus {m} must be positive")
    if math.gcd(r, m) != 1:
        raise NotCoprime(f"gcd({r}, {m}) != 1")
    if m == 1:
        return 1
    k, x = 1, r % m
    while x != 1:
        x = x * r % m
        k += 1
    return k


# --------------------------------------------------------------------------
# small families

def cyclic(n: int) -> Group:
    if n < 1:
        raise InvalidSpec("cyclic group needs n >= 1")

    def kernel(a, b):
        return (a + b) % n

    ids = np.arange(n)
    return _finish(n, kernel, (-ids) % n,
                   labels=[_word(_power_label("g", k)) for k in range(n)],
                   spec=GroupSpec("cyclic", {"n": n}),
                   named={"g": (1 % n,)}, generators=(1,) if n > 1 else ())


def dihedral(two_n: int) -> Group:
    """Symmetries of a regular n-gon, |G| = two_n; ids 2i + j for r^i s^j."""
    if two_n < 4 or two_n % 2:
        raise InvalidSpec("dihedral group needs an even order >= 4")
    n = two_n // 2

    def kernel(x, y):
        i, j = np.divmod(x, 2)
        k, l = np.divmod(y, 2)
        return ((i + np.where(j == 1, -k, k)) % n) * 2 + (j + l) % 2

    ids = np.arange(two_n)
    i, j = np.divmod(ids, 2)
    inverse = np.where(j == 1, ids, ((-i) % n) * 2)
    labels = [_word(_power_label("r", a), _power_label("s", b)) for a in range(n) for b in range(2)]
    return _finish(two_n, kernel, inverse, labels=labels,
                   spec=GroupSpec("dihedral", {"two_n": two_n}),
                   named={"r": (2,), "s": (1,)}, generators=(2, 1))


_Q_UNITS = [(1, 0, 0, 0), (-1, 0, 0, 0), (0, 1, 0, 0), (0, -1, 0, 0),
            (0, 0, 1, 0), (0, 0, -1, 0), (0, 0, 0, 1), (0, 0, 0, -1)]


def _qmul(x, y):
    a1, b1, c1, d1 = x
    a2, b2, c2, d2 = y
    return (a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2)


def quaternion8() -> Group:
    index = {u: k for k, u in enumerate(_Q_UNITS)}
    table = np.array([[index[_qmul(x, y)] for y in _Q_UNITS] for x in _Q_UNITS])

    def kernel(a, b):
        return table[a, b]

    labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    return _finish(8, kernel, np.argmin(table, axis=1), labels=labels,
                   spec=GroupSpec("quaternion8", {}),
                   named={"i": (2,), "j": (4,), "k": (6,), "-1": (1,)}, generators=(2, 4))


def symmetric(k: int) -> Group:
    """S_k (k <= 5) on permutations in lexicographic order; (g h)(x) = g(h(x))."""
    if not 1 <= k <= 5:
        raise InvalidSpec("symmetric(k) supports 1 <= k <= 5")
    perms = np.array(list(itertools.permutations(range(k))), dtype=np.int64).reshape(-1, k)
    n = perms.shape[0]
    weights = k ** np.arange(k - 1, -1, -1)
    lookup = np.full(k ** k, -1, dtype=np.int64)
    lookup[perms @ weights] = np.arange(n)

    def kernel(a, b):
        composed = np.take_along_axis(perms[a], perms[b], axis=-1)
        return lookup[composed @ weights]

    inverse = lookup[np.argsort(perms, axis=1) @ weights]
    labels = ["".join(str(v) for v in p) for p in perms.tolist()]
    gens = ()
    if k >= 2:
        cycle = lookup[(np.roll(np.arange(k), -1)) @ weights]
        swap = np.arange(k)
        swap[[0, 1]] = swap[[1, 0]]
        gens = tuple(sorted({int(cycle), int(lookup[swap @ weights])}))
    return _finish(n, kernel, inverse, labels=labels,
                   spec=GroupSpec("symmetric", {"k": k}), generators=gens)


def direct_product(G: Group, H: Group) -> Group:
    """Ids ``g * |H| + h`` for the pair (g, h)."""
    h = H.order

    def kernel(x, y):
        return np.asarray(G.mul(x // h, y // h)) * h + np.asarray(H.mul(x % h, y % h))

    ids = np.arange(G.order * h)
    inverse = G.inverse[ids // h] * h + H.inverse[ids % h]
    named = {"left": tuple(g * h for g in G.generators),
             "right": tuple(H.generators)}
    named.update({f"left.{k}": tuple(g * h for g in v) for k, v in G.named.items()})
    named.update({f"right.{k}": tuple(v) for k, v in H.named.items()})
    labels = None
    if G.order * h <= DENSE_MAX_ORDER:
        labels = [f"({G.label(a)},{H.label(b)})" for a in range(G.order) for b in range(h)]
    spec = None
    if G.spec is not None and H.spec is not None:
        spec = GroupSpec("direct_product", {"left": G.spec, "right": H.spec})
    return _finish(G.order * h, kernel, inverse, labels=labels, spec=spec, named=named,
                   generators=named["left"] + named["right"])


# --------------------------------------------------------------------------
# ZM groups

def check_zm_parameters(m: int, n: int, r: int) -> None:
    if m < 1 or n < 1:
        raise InvalidZMParameters("m and n must be positive")
    violated = []
    if math.gcd(m, n) != 1:
        violated.append("gcd(m, n) != 1")
    if math.gcd(m, r - 1) != 1:
        violated.append("gcd(m, r-1) != 1")
    if pow(r, n, m) != 1 % m:
        violated.append("r^n != 1 (mod m)")
    if violated:
        raise InvalidZMParameters("; ".join(violated), (m, n, r))


def zm_group(m: int, n: int, r: int) -> Group:
    """ZM(m, n, r) = <a, b | a^m = b^n = 1, b^-1 a b = a^r>.

    Ids ``i * n + j`` for a^i b^j; named elements ``a`` and ``b``.
    """
    check_zm_parameters(m, n, r)
    s = pow(r, -1, m) if m > 1 else 0
    s_pow = np.array([pow(s, j, m) for j in range(n)], dtype=np.int64)
    r_pow = np.array([pow(r, j, m) for j in range(n)], dtype=np.int64)

    def kernel(x, y):
        i, j = np.divmod(x, n)
        k, l = np.divmod(y, n)
        return ((i + k * s_pow[j]) % m) * n + (j + l) % n

    ids = np.arange(m * n)
    i, j = np.divmod(ids, n)
    inverse = ((-i * r_pow[j]) % m) * n + (-j) % n
    labels = [_word(_power_label("a", a), _power_label("b", b)) for a in range(m) for b in range(n)]
    a_id, b_id = (1 % m) * n, 1 % n
    return _finish(m * n, kernel, inverse, labels=labels,
                   spec=GroupSpec("zm", {"m": m, "n": n, "r": r}),
                   named={"a": (a_id,), "b": (b_id,)},
                   generators=tuple(g for g in (a_id, b_id) if g))


# --------------------------------------------------------------------------
# coprime semidirect products of abelian groups

def _action_permutations(A: Group, B: Group, action: ActionSpec) -> np.ndarray:
    """psi[b] = permutation of A induced by b (validated)."""
    if len(action.images) != len(action.b_generators):
        raise InvalidAction("one image tuple per generator of B is required")
    if not closure_mask(A, action.a_generators).all():
        raise InvalidAction("a_generators do not generate A", action.a_generators)
    if not closure_mask(B, action.b_generators).all():
        raise InvalidAction("b_generators do not generate B", action.b_generators)
    gen_perms = []
    for b, imgs in zip(action.b_generators, action.images):
        if len(imgs) != len(action.a_generators):
            raise InvalidAction("image tuple length differs from a_generators", b)
        if any(not 0 <= int(x) < A.order for x in imgs):
            raise InvalidAction("image id out of range", (b, imgs))
        phi = extend_homomorphism(A, A, action.a_generators, imgs)
        if phi is None:
            raise InvalidAction(f"images under generator {b} do not define a homomorphism", (b, imgs))
        if np.unique(phi).size != A.order:
            raise InvalidAction(f"images under generator {b} are not bijective", (b, imgs))
        gen_perms.append(phi)
    gen_perms = np.array(gen_perms, dtype=np.int64)
    psi = np.full((B.order, A.order), -1, dtype=np.int64)
    psi[0] = np.arange(A.order)
    from .group import _bfs_levels
    bgens = list(action.b_generators)
    for els, parents, gidx in _bfs_levels(B, bgens):
        psi[els] = np.take_along_axis(gen_perms[gidx], psi[parents], axis=1)
    # every relation of B must be respected: psi(b g) = psi(g) o psi(b)
    for k, g in enumerate(bgens):
        moved = psi[np.asarray(B.mul(B.elements, g))]
        expected = gen_perms[k][psi]
        bad = np.flatnonzero((moved != expected).any(axis=1))
        if bad.size:
            raise InvalidAction("assignment does not extend to a homomorphism B -> Aut(A)",
                                (int(bad[0]), g))
    return psi


def semidirect_product(A: Group, B: Group, action: ActionSpec, spec: GroupSpec | None = None) -> Group:
    """A x| B for abelian A, B of coprime orders.

    Ids ``a * |B| + b`` for the element a b; multiplication follows
    ``b^-1 a b = psi_b(a)``.  Named: ``A`` and ``B`` (embedded generators).
    """
    if not A.is_abelian:
        raise NotAbelian("A must be abelian")
    if not B.is_abelian:
        raise NotAbelian("B must be abelian")
    if math.gcd(A.order, B.order) != 1:
        raise NotCoprimeOrders(f"gcd(|A|, |B|) = gcd({A.order}, {B.order}) != 1")
    psi = _action_permutations(A, B, action)
    nb = B.order

    def kernel(x, y):
        a1, b1 = np.divmod(x, nb)
        a2, b2 = np.divmod(y, nb)
        moved = psi[B.inverse[b1], a2]
        return np.asarray(A.mul(a1, moved)) * nb + np.asarray(B.mul(b1, b2))

    ids = np.arange(A.order * nb)
    a, b = np.divmod(ids, nb)
    inverse = psi[b, A.inverse[a]] * nb + B.inverse[b]
    a_emb = tuple(int(g) * nb for g in action.a_generators)
    b_emb = tuple(int(g) for g in action.b_generators)
    labels = None
    if A.order * nb <= DENSE_MAX_ORDER:
        labels = [_word(A.label(x) if x else "", B.label(y) if y else "")
                  for x in range(A.order) for y in range(nb)]
    if spec is None and A.spec is not None and B.spec is not None:
        spec = GroupSpec("semidirect", {"a": A.spec, "b": B.spec, "action": {
            "a_generators": list(action.a_generators),
            "b_generators": list(action.b_generators),
            "images": [list(t) for t in action.images]}})
    return _finish(A.order * nb, kernel, inverse, labels=labels, spec=spec,
                   named={"A": a_emb, "B": b_emb}, generators=a_emb + b_emb)


# --------------------------------------------------------------------------
# the Heisenberg-type group over GF(p^2) and its scalar extension

def _heis_decode(x: np.ndarray, p: int):
    x, c = np.divmod(x, p)
    x, b1 = np.divmod(x, p)
    x, b0 = np.divmod(x, p)
    a0, a1 = np.divmod(x, p)
    return a0, a1, b0, b1, c


def _heis_encode(a0, a1, b0, b1, c, p: int):
    return (((a0 * p + a1) * p + b0) * p + b1) * p + c


def heisenberg_gf(p: int, max_order: int = MAX_ORDER) -> Group:
    """Upper unitriangular matrices [[1, a, b], [0, 1, c], [0, 0, 1]] with
    a, b in GF(p^2) and c in GF(p).

    (a, b, c)(a', b', c') = (a + a', b + b' + a c', c + c').  Ids encode
    the coefficient tuple (a0, a1, b0, b1, c) in base p, a0 most
    significant.  Named subsets: ``A`` (c = 0), ``Z`` (the b-part),
    ``a`` and ``c`` generators.
    """
    if p == 2 or not is_prime(p):
        raise InvalidSpec(f"p = {p} is not an odd prime")
    order = p ** 5
    if order > max_order:
        raise SizeGuard(f"heisenberg_gf({p}) has order {order} > {max_order}")

    # id = (u * p^2 + v) * p + c with u, v the GF(p^2) codes of a, b
    q = p * p
    ids = np.arange(order, dtype=np.int64)
    u_of, v_of, c_of = (ids // (q * p)).astype(np.int32), (ids // p % q).astype(np.int32), (ids % p).astype(np.int32)
    codes = np.arange(q, dtype=np.int32)
    add2 = ((codes[:, None] // p + codes[None, :] // p) % p * p + (codes[:, None] + codes[None, :]) % p).astype(np.int32)
    scal = ((codes[:, None] // p * np.arange(p)) % p * p + (codes[:, None] % p * np.arange(p)) % p).astype(np.int32)
    addp = (np.arange(p)[:, None] + np.arange(p)[None, :]) % p

    def kernel(x, y):
        u1, v1, c1 = u_of[x], v_of[x], c_of[x]
        u2, v2, c2 = u_of[y], v_of[y], c_of[y]
        u = add2[u1, u2]
        v = add2[add2[v1, v2], scal[u1, c2]]
        return (u.astype(np.int64) * q + v) * p + addp[c1, c2]

    ids = np.arange(order, dtype=np.int64)
    a0, a1, b0, b1, c = _heis_decode(ids, p)
    inverse = _heis_encode((-a0) % p, (-a1) % p, (-b0 + a0 * c) % p, (-b1 + a1 * c) % p, (-c) % p, p)

    def enc(*t):
        return int(_heis_encode(*t, p))

    a_gens = (enc(1, 0, 0, 0, 0), enc(0, 1, 0, 0, 0))
    z_gens = (enc(0, 0, 1, 0, 0), enc(0, 0, 0, 1, 0))
    c_gen = (enc(0, 0, 0, 0, 1),)
    return _finish(order, kernel, inverse, spec=GroupSpec("heisenberg_gf", {"p": p}),
                   named={"A": a_gens + z_gens, "Z": z_gens, "a": a_gens, "c": c_gen},
                   generators=a_gens + c_gen,
                   labels=[f"({x0}+{x1}t,{y0}+{y1}t,{z})" for x0, x1, y0, y1, z in
                           zip(*(v.tolist() for v in (a0, a1, b0, b1, c)))])


def scalar_automorphism(P: Group, lam: int) -> np.ndarray:
    """The permutation (a, b, c) -> (lam a, lam^2 b, lam c) of heisenberg_gf ids."""
    p = P.spec.params["p"]
    a0, a1, b0, b1, c = _heis_decode(P.elements, p)
    l2 = lam * lam
    return _heis_encode(lam * a0 % p, lam * a1 % p, l2 * b0 % p, l2 * b1 % p, lam * c % p, p)


def scalar_automorphism_extension(P: Group, lam: int) -> Group:
    """P x| <x> where x^-1 n x = (lam a, lam^2 b, lam c) and x has order
    e = ord_p(lam).

    Ids ``k * |P| + n`` for the element n x^k, so P keeps its own ids.  The
    automorphism property, the order of x and fixed-point-freeness are all
    checked on the element level; ``info["fixed_point_free"]`` records the
    last one.
    """
    if P.spec is None or P.spec.family != "heisenberg_gf":
        raise InvalidSpec("scalar_automorphism_extension expects a heisenberg_gf group")
    p = P.spec.params["p"]
    if lam % p == 0:
        raise InvalidLambda(f"lambda = {lam} is not a unit mod {p}")
    if lam % p == 1:
        raise InvalidLambda("lambda = 1 gives the identity automorphism")
    e = multiplicative_order(lam, p)
    N = P.order
    if e * N > MAX_ORDER:
        raise SizeGuard(f"extension order {e * N} exceeds {MAX_ORDER}")
    sigma = scalar_automorphism(P, lam)
    if np.unique(sigma).size != N:
        raise InvalidLambda("scalar map is not bijective", lam)
    for g in P.generators:
        if not np.array_equal(sigma[np.asarray(P.mul(P.elements, g))],
                              np.asarray(P.mul(sigma, int(sigma[g])))):
            raise InvalidLambda("scalar map is not a homomorphism", (lam, g))
    powers = [np.arange(N, dtype=np.int64)]
    for _ in range(e):
        powers.append(sigma[powers[-1]])
    if not np.array_equal(powers[e], powers[0]) or any(
            np.array_equal(powers[k], powers[0]) for k in range(1, e)):
        raise InvalidLambda(f"scalar automorphism does not have order {e}", lam)
    sig = np.array(powers[:e])
    nonid = np.arange(1, N)
    fpf = all(not np.any(sig[k, nonid] == nonid) for k in range(1, e))
    predicted = all(pow(lam, k, p) != 1 and pow(lam, 2 * k, p) != 1 for k in range(1, e))
    if predicted and not fpf:
        raise AssertionError("scalar automorphism predicted fixed-point free but is not")

    ids = np.arange(e * N, dtype=np.int64)
    k_of, n_of = np.divmod(ids, N)

    def kernel(x, y):
        k1, n1 = k_of[x], n_of[x]
        k2, n2 = k_of[y], n_of[y]
        moved = sig[(-k1) % e, n2]
        return ((k1 + k2) % e) * N + np.asarray(P.mul(n1, moved))

    inverse = ((-k_of) % e) * N + sig[k_of, P.inverse[n_of]]
    labels = None
    if P.labels is not None:
        labels = [P.labels[j] + ("" if i == 0 else (" x" if i == 1 else f" x^{i}"))
                  for i in range(e) for j in range(N)]
    group = _finish(e * N, kernel, inverse, labels=labels,
                    spec=GroupSpec("scalar_ext", {"p": p, "lambda": lam}),
                    named={"P": P.generators, "x": (N,), "A": P.named["A"], "Z": P.named["Z"]},
                    generators=P.generators + (N,))
    group.info.update({"fixed_point_free": fpf, "x_order": e, "kernel_order": N})
    return group


# --------------------------------------------------------------------------
# spec dispatch

def _int_param(params: dict, name: str) -> int:
    v = params.get(name)
    if isinstance(v, bool) or not isinstance(v, int):
        raise InvalidSpec(f"parameter {name!r} must be an integer")
    return v


def action_from_params(A: Group, B: Group, action: dict) -> ActionSpec:
    if "power" in action:
        return ActionSpec.power(A, B, action["power"])
    a_gens = tuple(action.get("a_generators", A.generators))
    b_gens = tuple(action.get("b_generators", B.generators))
    images = tuple(tuple(t) for t in action["images"])
    return ActionSpec(a_gens, b_gens, images)


def build_group(spec: GroupSpec) -> Group:
    f, p = spec.family, spec.params
    if f == "cyclic":
        return cyclic(_int_param(p, "n"))
    if f == "dihedral":
        return dihedral(_int_param(p, "two_n"))
    if f == "quaternion8":
        return quaternion8()
    if f == "symmetric":
        return symmetric(_int_param(p, "k"))
    if f == "direct_product":
        return direct_product(build_group(p["left"]), build_group(p["right"]))
    if f == "zm":
        return zm_group(_int_param(p, "m"), _int_param(p, "n"), _int_param(p, "r"))
    if f == "semidirect":
        A, B = build_group(p["a"]), build_group(p["b"])
        return semidirect_product(A, B, action_from_params(A, B, p["action"]), spec=spec)
    if f == "heisenberg_gf":
        return heisenberg_gf(_int_param(p, "p"))
    if f == "scalar_ext":
        P = heisenberg_gf(_int_param(p, "p"))
        return scalar_automorphism_extension(P, _int_param(p, "lambda"))
    raise InvalidSpec(f"unknown family {f!r}")


def zm_center_generator(m: int, n: int, r: int) -> int:
    """Id of b^d in zm_group(m, n, r), d = ord_m(r)."""
    d = multiplicative_order(r, m)
    return d % n


_PARAMS = {
    "cyclic": {"n"},
    "dihedral": {"two_n"},
    "quaternion8": set(),
    "symmetric": {"k"},
    "direct_product": {"left", "right"},
    "zm": {"m", "n", "r"},
    "semidirect": {"a", "b", "action"},
    "heisenberg_gf": {"p"},
    "scalar_ext": {"p", "lambda"},
}
_ACTION_KEYS = ({"power"}, {"images"}, {"images", "a_generators"}, {"images", "b_generators"},
                {"images", "a_generators", "b_generators"})


def _int_list(v, name: str, depth: int = 1) -> list:
    if not isinstance(v, list):
        raise InvalidSpec(f"{name} must be a list")
    if depth == 1:
        if any(isinstance(x, bool) or not isinstance(x, int) for x in v):
            raise InvalidSpec(f"{name} must contain integers")
        return list(v)
    return [_int_list(x, name, depth - 1) for x in v]


def spec_from_dict(data: Any) -> GroupSpec:
    """Parse ``{"family": ..., "params": {...}}`` strictly (unknown keys rejected)."""
    if not isinstance(data, dict):
        raise InvalidSpec("group spec must be a JSON object")
    extra = set(data) - {"family", "params"}
    if extra:
        raise InvalidSpec(f"unknown spec field(s): {', '.join(sorted(extra))}")
    family = data.get("family")
    if family not in _PARAMS:
        raise InvalidSpec(f"unknown family {family!r}")
    params = data.get("params", {})
    if not isinstance(params, dict):
        raise InvalidSpec("params must be a JSON object")
    keys = set(params)
    if keys != _PARAMS[family]:
        missing, unknown = _PARAMS[family] - keys, keys - _PARAMS[family]
        parts = []
        if missing:
            parts.append(f"missing parameter(s): {', '.join(sorted(missing))}")
        if unknown:
            parts.append(f"unknown parameter(s): {', '.join(sorted(unknown))}")
        raise InvalidSpec(f"{family}: " + "; ".join(parts))
    out: dict[str, Any] = {}
    for k, v in params.items():
        if k in ("left", "right", "a", "b"):
            out[k] = spec_from_dict(v)
        elif k == "action":
            if not isinstance(v, dict) or set(v) not in _ACTION_KEYS:
                raise InvalidSpec("action must be {\"power\": k} or {\"images\": [[...]], "
                                  "optional \"a_generators\", \"b_generators\"}")
            act: dict[str, Any] = {}
            if "power" in v:
                pw = v["power"]
                act["power"] = _int_list(pw, "power") if isinstance(pw, list) else _int_param(v, "power")
            else:
                act["images"] = _int_list(v["images"], "images", 2)
                for g in ("a_generators", "b_generators"):
                    if g in v:
                        act[g] = _int_list(v[g], g)
            out[k] = act
        else:
            out[k] = _int_param(params, k)
    return GroupSpec(family, out)


def spec(family: str, **params: Any) -> GroupSpec:
    """Shorthand used by the harness corpus."""
    return GroupSpec(family, params)
