"""Finite groups as Cayley tables over element ids ``0..n-1`` (identity = 0).

Small groups store a dense ``n x n`` table.  Constructor-built groups that
are too large for a dense table (the order-50421 Frobenius group needs
~5 GB even at 16 bits per entry) instead carry a vectorized multiplication
kernel with the same contract: ``mul(a, b)`` broadcasts over id arrays.
Every algorithm below only goes through ``Group.mul`` / ``Group.inv``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Iterator, Sequence

import numpy as np

from .errors import NotAGroup, SizeGuard

# Above this order constructors switch to a multiplication kernel.
DENSE_MAX_ORDER = 8192
ASSOC_EXHAUSTIVE_BOUND = 512
LATIN_FULL_BOUND = 4096
AUTOMORPHISM_LIMIT = 512

# Rough cap on temporaries (elements) for chunked vectorized scans.
_CHUNK = 1 << 22


class _UnknownType:
    """Explicit third truth value for checks skipped by a size guard."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "UNKNOWN"

    def __bool__(self) -> bool:
        raise TypeError("UNKNOWN has no truth value")


UNKNOWN = _UnknownType()


# --------------------------------------------------------------------------
# bitset helpers

def mask_to_bits(mask: np.ndarray) -> int:
    return int.from_bytes(np.packbits(mask, bitorder="little").tobytes(), "little")


def bits_to_mask(bits: int, n: int) -> np.ndarray:
    raw = np.frombuffer(bits.to_bytes((n + 7) // 8, "little"), dtype=np.uint8)
    return np.unpackbits(raw, bitorder="little")[:n].astype(bool)


def ids_to_bits(ids: Iterable[int] | np.ndarray, n: int) -> int:
    mask = np.zeros(n, dtype=bool)
    mask[np.asarray(list(ids) if not isinstance(ids, np.ndarray) else ids, dtype=np.int64)] = True
    return mask_to_bits(mask)


def _rows_to_bits(masks: np.ndarray) -> list[int]:
    packed = np.packbits(masks, axis=1, bitorder="little")
    return [int.from_bytes(row.tobytes(), "little") for row in packed]


@dataclass(frozen=True)
class SubgroupSet:
    """A set of element ids of an ambient group of order ``n``, as a bitset.

    Equality and hashing use the bits.  Sorting uses ``(order, bits)``,
    which is the canonical order of every subgroup list in this package.
    """

    bits: int
    n: int
    order: int = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "order", self.bits.bit_count())

    @classmethod
    def from_ids(cls, ids: Iterable[int] | np.ndarray, n: int) -> "SubgroupSet":
        return cls(ids_to_bits(ids, n), n)

    @property
    def sort_key(self) -> tuple[int, int]:
        return (self.order, self.bits)

    def mask(self) -> np.ndarray:
        return bits_to_mask(self.bits, self.n)

    def ids(self) -> np.ndarray:
        return np.flatnonzero(self.mask())

    def __contains__(self, g: int) -> bool:
        return bool((self.bits >> int(g)) & 1)

    def __iter__(self) -> Iterator[int]:
        return iter(self.ids().tolist())

    def __len__(self) -> int:
        return self.order

    def __and__(self, other: "SubgroupSet") -> "SubgroupSet":
        return SubgroupSet(self.bits & other.bits, self.n)

    def __le__(self, other: "SubgroupSet") -> bool:
        return self.bits & other.bits == self.bits

    def __lt__(self, other: "SubgroupSet") -> bool:
        return self.bits != other.bits and self <= other

    def issubset(self, other: "SubgroupSet") -> bool:
        return self <= other

    def is_trivial(self) -> bool:
        return self.bits == 1

    def __repr__(self) -> str:
        if self.order <= 12:
            return f"SubgroupSet({self.ids().tolist()}, n={self.n})"
        return f"SubgroupSet(order={self.order}, n={self.n})"


def sort_subgroups(subs: Iterable[SubgroupSet]) -> list[SubgroupSet]:
    return sorted(subs, key=lambda s: s.sort_key)


# --------------------------------------------------------------------------
# the group

Kernel = Callable[[np.ndarray, np.ndarray], np.ndarray]


class Group:
    """A finite group on ids ``0..order-1`` with identity 0.

    Build through :func:`from_cayley_table` (validated) or the constructors
    module; the raw initializer trusts its inputs.  ``named`` maps names to
    tuples of element ids (distinguished generators, e.g. ``a`` and ``b``
    of a ZM group), so callers can describe subgroups independently of the
    id layout.
    """

    def __init__(
        self,
        order: int,
        *,
        table: np.ndarray | None = None,
        kernel: Kernel | None = None,
        inverse: np.ndarray | None = None,
        labels: Sequence[str] | None = None,
        spec=None,
        named: dict[str, tuple[int, ...]] | None = None,
        generators: Sequence[int] | None = None,
        trusted: bool = False,
    ) -> None:
        if (table is None) == (kernel is None):
            raise ValueError("exactly one of table / kernel is required")
        self.order = int(order)
        self.table = table
        self._kernel = kernel
        if inverse is None:
            if table is None:
                raise ValueError("kernel groups must supply inverse")
            inverse = np.argmin(table, axis=1)
        self.inverse = np.asarray(inverse, dtype=np.int64)
        self.labels = list(labels) if labels is not None else None
        self.spec = spec
        self.named = dict(named or {})
        self._generators = tuple(int(g) for g in generators) if generators is not None else None
        self.trusted = trusted
        self.info: dict = {}
        self._cent_cache: dict[int, int] = {}

    def __repr__(self) -> str:
        kind = "dense" if self.is_dense else "kernel"
        return f"Group(order={self.order}, {kind})"

    def __len__(self) -> int:
        return self.order

    @property
    def is_dense(self) -> bool:
        return self.table is not None

    def mul(self, a, b) -> np.ndarray:
        if self.table is not None:
            return self.table[a, b]
        a, b = np.broadcast_arrays(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
        return self._kernel(a, b)

    def inv(self, a) -> np.ndarray:
        return self.inverse[a]

    def label(self, g: int) -> str:
        if self.labels is None:
            return str(int(g))
        return self.labels[int(g)]

    @property
    def elements(self) -> np.ndarray:
        return np.arange(self.order, dtype=np.int64)

    def full(self) -> SubgroupSet:
        return SubgroupSet((1 << self.order) - 1, self.order)

    def trivial(self) -> SubgroupSet:
        return SubgroupSet(1, self.order)

    def subset(self, ids: Iterable[int]) -> SubgroupSet:
        return SubgroupSet.from_ids(ids, self.order)

    def row(self, g: int) -> np.ndarray:
        return np.asarray(self.mul(int(g), self.elements), dtype=np.int64)

    def power(self, g: int, k: int) -> int:
        result, base = 0, int(g)
        k = int(k)
        while k:
            if k & 1:
                result = int(self.mul(result, base))
            base = int(self.mul(base, base))
            k >>= 1
        return result

    # ---- cached per-element data

    @cached_property
    def element_orders(self) -> np.ndarray:
        n = self.order
        orders = np.ones(n, dtype=np.int64)
        active = np.arange(1, n, dtype=np.int64)
        cur = active.copy()
        k = 1
        while active.size:
            k += 1
            cur = np.asarray(self.mul(cur, active), dtype=np.int64)
            done = cur == 0
            orders[active[done]] = k
            active, cur = active[~done], cur[~done]
        return orders

    @cached_property
    def cyclic_reps(self) -> np.ndarray:
        """For each g, the smallest id generating the cyclic subgroup <g>."""
        orders = self.element_orders
        reps = self.elements.copy()
        cur = self.elements.copy()
        for k in range(2, int(orders.max()) + 1):
            cur = np.asarray(self.mul(cur, self.elements), dtype=np.int64)
            ok = (k < orders) & (np.gcd(k, orders) == 1)
            reps[ok] = np.minimum(reps[ok], cur[ok])
        return reps

    @cached_property
    def generators(self) -> tuple[int, ...]:
        if self._generators is not None:
            return self._generators
        return generating_set(self, self.full())

    @cached_property
    def is_abelian(self) -> bool:
        gens = np.asarray(self.generators, dtype=np.int64)
        if gens.size == 0:
            return True
        return bool(np.array_equal(self.mul(gens[:, None], gens[None, :]),
                                   self.mul(gens[None, :], gens[:, None])))

    @cached_property
    def conjugacy_data(self) -> tuple[np.ndarray, np.ndarray]:
        """Per element x: the smallest id c of its class, and t with t^-1 c t = x."""
        n = self.order
        rep = np.full(n, -1, dtype=np.int64)
        trans = np.zeros(n, dtype=np.int64)
        gens = np.asarray(self.generators, dtype=np.int64)
        ginv = self.inverse[gens]
        for x in range(n):
            if rep[x] >= 0:
                continue
            rep[x] = x
            frontier = np.array([x], dtype=np.int64)
            while frontier.size:
                conj = np.asarray(self.mul(self.mul(ginv[None, :], frontier[:, None]), gens[None, :])).ravel()
                ts = np.asarray(self.mul(trans[frontier][:, None], gens[None, :])).ravel()
                new, first = np.unique(conj, return_index=True)
                keep = rep[new] < 0
                new, first = new[keep], first[keep]
                rep[new] = x
                trans[new] = ts[first]
                frontier = new
        return rep, trans

    def _scan_centralizers(self, reps: np.ndarray) -> list[int]:
        everything = self.elements
        step = max(1, _CHUNK // max(self.order, 1))
        out: list[int] = []
        for start in range(0, reps.size, step):
            chunk = reps[start:start + step]
            left = self.mul(chunk[:, None], everything[None, :])
            right = self.mul(everything[None, :], chunk[:, None])
            out.extend(_rows_to_bits(left == right))
        return out

    def _class_centralizers(self, reps: np.ndarray) -> list[int]:
        # C(t^-1 c t) = t^-1 C(c) t: scan one element per class, conjugate the rest
        crep, trans = self.conjugacy_data
        classes = np.unique(crep[reps])
        base = dict(zip(classes.tolist(), self._scan_centralizers(classes)))
        out: dict[int, int] = {}
        for c in classes.tolist():
            members = reps[crep[reps] == c]
            cent = SubgroupSet(base[c], self.order).ids()
            step = max(1, _CHUNK // max(cent.size, 1))
            for start in range(0, members.size, step):
                rs = members[start:start + step]
                t = trans[rs]
                conj = np.asarray(self.mul(self.mul(self.inverse[t][:, None], cent[None, :]), t[:, None]))
                masks = np.zeros((rs.size, self.order), dtype=bool)
                masks[np.arange(rs.size)[:, None], conj] = True
                out.update(zip(rs.tolist(), _rows_to_bits(masks)))
        return [out[r] for r in reps.tolist()]

    def element_centralizers(self, reps: Iterable[int], strategy: str = "auto") -> dict[int, int]:
        """Bitsets of C_G(r) for cyclic representatives ``r`` (memoized).

        ``strategy`` is ``"scan"`` (test every element against r),
        ``"classes"`` (scan one element per conjugacy class and conjugate)
        or ``"auto"`` (classes for kernel-backed groups).
        """
        reps = [int(r) for r in reps]
        missing = np.array(sorted({r for r in reps if r not in self._cent_cache}), dtype=np.int64)
        if missing.size:
            if strategy == "auto":
                strategy = "scan" if self.is_dense else "classes"
            if strategy == "scan":
                found = self._scan_centralizers(missing)
            elif strategy == "classes":
                found = self._class_centralizers(missing)
            else:
                raise ValueError(f"unknown strategy {strategy!r}")
            self._cent_cache.update(zip(missing.tolist(), found))
        return {r: self._cent_cache[r] for r in reps}

    def element_centralizer(self, g: int) -> SubgroupSet:
        rep = int(self.cyclic_reps[int(g)])
        return SubgroupSet(self.element_centralizers([rep])[rep], self.order)

    @cached_property
    def center(self) -> SubgroupSet:
        return centralizer(self, self.full())


# --------------------------------------------------------------------------
# construction and validation

def _relabel_identity(table: np.ndarray, e: int) -> np.ndarray:
    if e == 0:
        return table
    swap = np.arange(table.shape[0])
    swap[0], swap[e] = e, 0
    return swap[table[np.ix_(swap, swap)]]


def _smallest_dtype(n: int):
    if n <= 1 << 8:
        return np.uint8
    if n <= 1 << 16:
        return np.uint16
    return np.uint32


def dense_table(table) -> np.ndarray:
    table = np.asarray(table)
    return table.astype(_smallest_dtype(table.shape[0]))


def from_cayley_table(table, labels: Sequence[str] | None = None, *,
                      assoc_bound: int = ASSOC_EXHAUSTIVE_BOUND) -> Group:
    """Validate a multiplication table and wrap it as a :class:`Group`.

    The identity is moved to id 0 if needed (labels follow).  Raises
    :class:`NotAGroup` with a witness on any axiom failure.
    """
    t = np.asarray(table, dtype=np.int64)
    if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
        raise NotAGroup("table must be a non-empty square array", t.shape)
    n = t.shape[0]
    if t.min() < 0 or t.max() >= n:
        bad = tuple(int(x) for x in np.argwhere((t < 0) | (t >= n))[0])
        raise NotAGroup(f"entry out of range at {bad}", bad)
    ident = np.flatnonzero((t == np.arange(n)).all(axis=1) & (t == np.arange(n)[:, None]).all(axis=0))
    if ident.size == 0:
        raise NotAGroup("no two-sided identity element", None)
    e = int(ident[0])
    if labels is not None and e:
        labels = list(labels)
        labels[0], labels[e] = labels[e], labels[0]
    group = Group(n, table=dense_table(_relabel_identity(t, e)), inverse=np.zeros(n, np.int64),
                  labels=labels)
    _check_latin(group, full=True)
    group.inverse = _inverse_from_table(group.table)
    check_associativity(group, assoc_bound)
    return group


def _inverse_from_table(table: np.ndarray) -> np.ndarray:
    n = table.shape[0]
    inv = np.argmin(table, axis=1).astype(np.int64)
    back = table[inv, np.arange(n)]
    if np.any(table[np.arange(n), inv] != 0) or np.any(back != 0):
        g = int(np.flatnonzero(back != 0)[0]) if np.any(back != 0) else 0
        raise NotAGroup(f"element {g} has no two-sided inverse", (g, int(inv[g])))
    return inv


def _check_latin(group: Group, *, full: bool, samples: int = 64, seed: int = 0) -> None:
    n = group.order
    target = np.arange(n)
    if full:
        idx = target
    else:
        idx = np.unique(np.random.default_rng(seed).integers(0, n, size=samples))
    step = max(1, _CHUNK // n)
    for start in range(0, idx.size, step):
        chunk = idx[start:start + step]
        rows = np.sort(np.asarray(group.mul(chunk[:, None], target[None, :])), axis=1)
        cols = np.sort(np.asarray(group.mul(target[None, :], chunk[:, None])), axis=1)
        for name, block in (("row", rows), ("column", cols)):
            bad = np.flatnonzero((block != target).any(axis=1))
            if bad.size:
                g = int(chunk[bad[0]])
                raise NotAGroup(f"{name} {g} is not a permutation (Latin square violated)", (name, g))


def check_associativity(group: Group, exhaustive_bound: int = ASSOC_EXHAUSTIVE_BOUND,
                        samples: int = 200_000, seed: int = 0) -> None:
    """Exhaustive below ``exhaustive_bound``, seeded random triples above."""
    n = group.order
    if n <= exhaustive_bound:
        everything = np.arange(n)
        for a in range(n):
            ab = np.asarray(group.mul(a, everything))
            left = group.mul(ab[:, None], everything[None, :])
            right = group.mul(a, group.mul(everything[:, None], everything[None, :]))
            bad = np.argwhere(left != right)
            if bad.size:
                b, c = (int(x) for x in bad[0])
                raise NotAGroup(f"associativity fails for ({a}, {b}, {c})", (a, b, c))
        return
    rng = np.random.default_rng(seed)
    a, b, c = rng.integers(0, n, size=(3, samples))
    left = group.mul(group.mul(a, b), c)
    right = group.mul(a, group.mul(b, c))
    bad = np.flatnonzero(left != right)
    if bad.size:
        i = bad[0]
        triple = (int(a[i]), int(b[i]), int(c[i]))
        raise NotAGroup(f"associativity fails for {triple}", triple)


def validate_group(group: Group, assoc_bound: int = ASSOC_EXHAUSTIVE_BOUND,
                   latin_bound: int = LATIN_FULL_BOUND) -> None:
    """Full axiom check: identity, inverses, Latin square, associativity."""
    n = group.order
    everything = np.arange(n)
    if not (np.array_equal(group.mul(0, everything), everything)
            and np.array_equal(group.mul(everything, 0), everything)):
        raise NotAGroup("id 0 is not the identity", 0)
    inv = group.inverse
    if np.any(group.mul(everything, inv) != 0) or np.any(group.mul(inv, everything) != 0):
        g = int(np.flatnonzero(group.mul(everything, inv) != 0)[0]) if np.any(group.mul(everything, inv) != 0) else 0
        raise NotAGroup(f"inverse map wrong at {g}", g)
    _check_latin(group, full=n <= latin_bound)
    check_associativity(group, assoc_bound)


# --------------------------------------------------------------------------
# subgroup-level primitives

_SQUARING_LIMIT = 1 << 18


def closure_mask(group: Group, gens: Iterable[int]) -> np.ndarray:
    gens = np.unique(np.asarray(list(gens), dtype=np.int64))
    mask = np.zeros(group.order, dtype=bool)
    mask[0] = True
    gens = gens[gens != 0]
    mask[gens] = True
    elems = np.flatnonzero(mask)
    # S <- S.S doubles word length per round; stop once S is closed
    while elems.size * elems.size <= _SQUARING_LIMIT:
        mask[np.asarray(group.mul(elems[:, None], elems[None, :])).ravel()] = True
        grown = np.flatnonzero(mask)
        if grown.size == elems.size:
            return mask
        elems = grown
    frontier = elems
    while frontier.size and gens.size:
        prod = np.unique(np.asarray(group.mul(frontier[:, None], gens[None, :])).ravel())
        frontier = prod[~mask[prod]]
        mask[frontier] = True
    return mask


def closure(group: Group, gens: Iterable[int]) -> SubgroupSet:
    """Smallest subgroup containing ``gens`` (the trivial subgroup for none)."""
    return SubgroupSet(mask_to_bits(closure_mask(group, gens)), group.order)


def is_subgroup(group: Group, H: SubgroupSet) -> bool:
    if not H.bits & 1:
        return False
    ids = H.ids()
    mask = H.mask()
    # closed under products with a generating set, and finite => subgroup
    gens = np.asarray(generating_set(group, H, check=False), dtype=np.int64)
    if gens.size == 0:
        return H.order == 1
    return bool(mask[np.asarray(group.mul(ids[:, None], gens[None, :]))].all())


def generating_set(group: Group, H: SubgroupSet, *, check: bool = True) -> tuple[int, ...]:
    """Deterministic small generating set of ``H``.

    Elements are tried by decreasing element order (then id); one is kept
    whenever it lies outside the span so far.
    """
    ids = H.ids()
    if ids.size <= 1:
        return ()
    orders = group.element_orders[ids]
    candidates = ids[np.lexsort((ids, -orders))]
    span = np.zeros(group.order, dtype=bool)
    span[0] = True
    gens: list[int] = []
    target = H.order
    for g in candidates.tolist():
        if span[g]:
            continue
        gens.append(g)
        span = closure_mask(group, gens)
        if span.sum() >= target:
            break
    if check and mask_to_bits(span) != H.bits:
        raise ValueError("set is not a subgroup")
    return tuple(gens)


def centralizer(group: Group, H: SubgroupSet) -> SubgroupSet:
    """C_G(H), as the intersection of the element centralizers over H.

    Elements generating the same cyclic subgroup share a centralizer, so
    only one representative per cyclic subgroup of H is visited.
    """
    if H.bits == 1:
        return group.full()
    reps = np.unique(group.cyclic_reps[H.ids()])
    reps = reps[reps != 0]
    acc = (1 << group.order) - 1
    for bits in group.element_centralizers(reps.tolist()).values():
        acc &= bits
    return SubgroupSet(acc, group.order)


def centralizer_scan(group: Group, H: SubgroupSet) -> SubgroupSet:
    """C_G(H) by the definition: every g tested against every h in H."""
    hs = H.ids()
    everything = group.elements
    step = max(1, _CHUNK // max(hs.size, 1))
    keep = np.zeros(group.order, dtype=bool)
    for start in range(0, group.order, step):
        gs = everything[start:start + step]
        left = group.mul(gs[:, None], hs[None, :])
        right = group.mul(hs[None, :], gs[:, None])
        keep[start:start + step] = (left == right).all(axis=1)
    return SubgroupSet(mask_to_bits(keep), group.order)


def center(group: Group) -> SubgroupSet:
    return group.center


def mul(group: Group, a: int, b: int) -> int:
    return int(group.mul(int(a), int(b)))


def inv(group: Group, a: int) -> int:
    return int(group.inverse[int(a)])


def order_of_element(group: Group, g: int) -> int:
    return int(group.element_orders[int(g)])


def cyclic_subgroup(group: Group, g: int) -> SubgroupSet:
    powers = [0]
    x = int(g)
    while x != 0:
        powers.append(x)
        x = int(group.mul(x, int(g)))
    return group.subset(powers)


def is_abelian_subgroup(group: Group, H: SubgroupSet) -> bool:
    return H <= centralizer(group, H)


def conjugate_subgroup(group: Group, H: SubgroupSet, g: int) -> SubgroupSet:
    """H^g = g^-1 H g."""
    g = int(g)
    conj = group.mul(group.mul(int(group.inverse[g]), H.ids()), g)
    return group.subset(np.asarray(conj))


def is_normal(group: Group, H: SubgroupSet) -> bool:
    mask = H.mask()
    ids = H.ids()
    for g in group.generators:
        conj = group.mul(group.mul(int(group.inverse[g]), ids), g)
        if not mask[np.asarray(conj)].all():
            return False
    return True


def upper_central_series(group: Group) -> list[SubgroupSet]:
    """Z_0 = 1 <= Z_1 = Z(G) <= ... until it stabilizes.

    Z_{i+1} = {g : [g, x] in Z_i for every generator x of G}; commuting
    modulo Z_i with a generating set is enough since Z_i is normal.
    """
    everything = group.elements
    inv_all = group.inverse
    gens = group.generators
    series = [group.trivial()]
    current = series[0].mask()
    while True:
        nxt = np.ones(group.order, dtype=bool)
        for x in gens:
            xi = int(group.inverse[x])
            comm = group.mul(group.mul(inv_all, xi), group.mul(everything, x))
            nxt &= current[np.asarray(comm)]
        if np.array_equal(nxt, current):
            return series
        current = nxt
        series.append(SubgroupSet(mask_to_bits(current), group.order))


def is_nilpotent(group: Group) -> bool:
    return upper_central_series(group)[-1].order == group.order


def commutator_subgroup(group: Group, H: SubgroupSet | None = None) -> SubgroupSet:
    """[H, H] (the derived subgroup of H; of G when H is omitted)."""
    ids = group.elements if H is None else H.ids()
    comm = group.mul(group.mul(group.inverse[ids][:, None], group.inverse[ids][None, :]),
                     group.mul(ids[:, None], ids[None, :]))
    return SubgroupSet(mask_to_bits(closure_mask(group, np.unique(np.asarray(comm)))), group.order)


def derived_series(group: Group) -> list[SubgroupSet]:
    series = [group.full()]
    while True:
        nxt = commutator_subgroup(group, series[-1])
        if nxt == series[-1]:
            return series
        series.append(nxt)


def is_solvable(group: Group) -> bool:
    return derived_series(group)[-1].order == 1


def subgroup_as_group(group: Group, H: SubgroupSet) -> tuple[Group, np.ndarray]:
    """Restrict the multiplication to ``H``; returns the group and the
    embedding ``embed[k] = id in G of the k-th element of H``."""
    embed = H.ids()
    k = embed.size
    pos = np.full(group.order, -1, dtype=np.int64)
    pos[embed] = np.arange(k)
    inverse = pos[group.inverse[embed]]
    if k <= DENSE_MAX_ORDER:
        table = np.empty((k, k), dtype=_smallest_dtype(k))
        step = max(1, _CHUNK // k)
        for start in range(0, k, step):
            block = pos[np.asarray(group.mul(embed[start:start + step, None], embed[None, :]))]
            if np.any(block < 0):
                raise ValueError("set is not closed under multiplication")
            table[start:start + step] = block
        sub = Group(k, table=table, inverse=inverse, trusted=True)
    else:
        def kernel(a: np.ndarray, b: np.ndarray) -> np.ndarray:
            return pos[group.mul(embed[a], embed[b])]
        sub = Group(k, kernel=kernel, inverse=inverse, trusted=True)
    if group.labels is not None:
        sub.labels = [group.labels[i] for i in embed.tolist()]
    return sub, embed


def quotient_map_small(group: Group, N: SubgroupSet, limit: int = 4096) -> tuple[Group, np.ndarray]:
    """G/N for normal N; returns the quotient and the projection array."""
    if group.order > limit:
        raise SizeGuard(f"quotient of a group of order {group.order} exceeds limit {limit}")
    nids = N.ids()
    cosets = np.asarray(group.mul(group.elements[:, None], nids[None, :])).min(axis=1)
    reps, proj = np.unique(cosets, return_inverse=True)
    table = proj[np.asarray(group.mul(reps[:, None], reps[None, :]))]
    # reps[0] == 0 since 0 is the smallest id of the coset N itself.
    q = Group(reps.size, table=dense_table(table), trusted=True)
    return q, proj.astype(np.int64)


# --------------------------------------------------------------------------
# automorphisms

def _greedy_generating_sequence(group: Group) -> list[int]:
    # one candidate per cyclic subgroup, larger element orders first
    reps = np.unique(group.cyclic_reps)
    reps = reps[np.argsort(-group.element_orders[reps], kind="stable")].tolist()
    gens: list[int] = []
    span = closure_mask(group, gens)
    while not span.all():
        best, best_size = -1, -1
        for g in reps:
            if span[g]:
                continue
            size = int(closure_mask(group, gens + [g]).sum())
            if size > best_size:
                best, best_size = g, size
                if size == group.order:
                    break
        gens.append(best)
        span = closure_mask(group, gens)
    return gens


def _bfs_levels(group: Group, gens: list[int]) -> list[tuple[np.ndarray, np.ndarray, np.ndarray]]:
    """BFS tree of <gens> from the identity: per level (elements, parents, gen index)."""
    seen = np.zeros(group.order, dtype=bool)
    seen[0] = True
    frontier = np.zeros(1, dtype=np.int64)
    levels = []
    g_arr = np.asarray(gens, dtype=np.int64)
    while frontier.size:
        prod = np.asarray(group.mul(frontier[:, None], g_arr[None, :]))
        parents = np.repeat(frontier, g_arr.size)
        gidx = np.tile(np.arange(g_arr.size), frontier.size)
        flat = prod.ravel()
        new_els, first = np.unique(flat, return_index=True)
        keep = ~seen[new_els]
        new_els, first = new_els[keep], first[keep]
        seen[new_els] = True
        if new_els.size:
            levels.append((new_els, parents[first], gidx[first]))
        frontier = new_els
    return levels


def extend_homomorphism(source: Group, target: Group, gens: Sequence[int],
                        images: Sequence[int]) -> np.ndarray | None:
    """Extend gens -> images to a homomorphism <gens> -> target.

    Returns an array ``phi`` of length ``source.order`` (-1 outside
    <gens>), or ``None`` when the assignment is inconsistent.
    """
    gens = [int(g) for g in gens]
    imgs = np.asarray(images, dtype=np.int64)
    phi = np.full(source.order, -1, dtype=np.int64)
    phi[0] = 0
    for els, parents, gidx in _bfs_levels(source, gens):
        phi[els] = np.asarray(target.mul(phi[parents], imgs[gidx]))
    dom = np.flatnonzero(phi >= 0)
    for g, img in zip(gens, imgs.tolist()):
        if not np.array_equal(phi[np.asarray(source.mul(dom, g))], np.asarray(target.mul(phi[dom], img))):
            return None
    return phi


class _AutSearch:
    """Backtracking over images of a greedy generating sequence.

    Candidate images must match element order and centralizer order.  A
    partial assignment is kept only if it extends to an injective
    homomorphism of the prefix subgroup.
    """

    def __init__(self, group: Group) -> None:
        self.group = group
        self.gens = _greedy_generating_sequence(group)
        self.levels = [_bfs_levels(group, self.gens[:k + 1]) for k in range(len(self.gens))]
        orders = group.element_orders
        reps = group.cyclic_reps
        cents = group.element_centralizers(np.unique(reps).tolist())
        csize = np.asarray([cents[int(r)].bit_count() for r in reps.tolist()], dtype=np.int64)
        self.candidates = [np.flatnonzero((orders == orders[g]) & (csize == csize[g])).tolist()
                           for g in self.gens]

    def partial(self, images: list[int]) -> np.ndarray | None:
        G = self.group
        phi = np.full(G.order, -1, dtype=np.int64)
        phi[0] = 0
        imgs = np.asarray(images, dtype=np.int64)
        for els, parents, gidx in self.levels[len(images) - 1]:
            phi[els] = np.asarray(G.mul(phi[parents], imgs[gidx]))
        dom = np.flatnonzero(phi >= 0)
        vals = phi[dom]
        if np.unique(vals).size != vals.size:
            return None
        for g, img in zip(self.gens, images):
            if not np.array_equal(phi[np.asarray(G.mul(dom, g))], np.asarray(G.mul(vals, img))):
                return None
        return phi

    def search(self, images: list[int]) -> Iterator[np.ndarray]:
        k = len(images)
        if k == len(self.gens):
            yield self.partial(images)
            return
        for c in self.candidates[k]:
            if k + 1 < len(self.gens) and self.partial(images + [c]) is None:
                continue
            if k + 1 == len(self.gens):
                phi = self.partial(images + [c])
                if phi is not None:
                    yield phi
            else:
                yield from self.search(images + [c])


def iter_automorphisms(group: Group, limit: int = AUTOMORPHISM_LIMIT) -> Iterator[np.ndarray]:
    """Every automorphism, as an element permutation."""
    if group.order > limit:
        raise SizeGuard(f"automorphisms of a group of order {group.order} exceed limit {limit}")
    if group.order == 1:
        yield np.zeros(1, dtype=np.int64)
        return
    yield from _AutSearch(group).search([])


def automorphisms_small(group: Group, limit: int = AUTOMORPHISM_LIMIT) -> list[np.ndarray]:
    """All automorphisms as element permutations (SizeGuard above ``limit``)."""
    return list(iter_automorphisms(group, limit))


def _orbit(point: int, perms: list[np.ndarray]) -> set[int]:
    orbit, todo = {point}, [point]
    while todo:
        x = todo.pop()
        for p in perms:
            y = int(p[x])
            if y not in orbit:
                orbit.add(y)
                todo.append(y)
    return orbit


def automorphism_generators(group: Group, limit: int = AUTOMORPHISM_LIMIT) -> tuple[list[np.ndarray], int]:
    """A generating set of Aut(G) and |Aut(G)|, by a stabilizer chain.

    S_k fixes the first k generators g_0..g_{k-1}.  Working from the bottom
    up, the orbit of g_k under S_k is grown from known generators; each
    candidate outside it is tested once for an extending automorphism, and
    a failure rules out its whole orbit.
    """
    if group.order > limit:
        raise SizeGuard(f"automorphisms of a group of order {group.order} exceed limit {limit}")
    if group.order == 1:
        return [], 1
    search = _AutSearch(group)
    gens = search.gens
    perms: list[np.ndarray] = []
    size = 1
    for k in range(len(gens) - 1, -1, -1):
        fixed = gens[:k]
        orbit = _orbit(gens[k], perms)
        bad: set[int] = set()
        for c in search.candidates[k]:
            if c in orbit or c in bad:
                continue
            if search.partial(fixed + [c]) is None:
                bad |= _orbit(c, perms)
                continue
            phi = next(search.search(fixed + [c]), None) if k + 1 < len(gens) else search.partial(fixed + [c])
            if phi is None:
                bad |= _orbit(c, perms)
            else:
                perms.append(phi)
                orbit = _orbit(gens[k], perms)
        size *= len(orbit)
    return perms, size


def is_characteristic(group: Group, H: SubgroupSet, limit: int = AUTOMORPHISM_LIMIT):
    """True/False when |G| <= limit, otherwise :data:`UNKNOWN`."""
    if group.order > limit:
        return UNKNOWN
    if H.order in (1, group.order):
        return True
    mask = H.mask()
    hgens = np.asarray(generating_set(group, H), dtype=np.int64)
    perms, _ = automorphism_generators(group, limit)
    return all(mask[phi[hgens]].all() for phi in perms)


def divisors(n: int) -> list[int]:
    small = [d for d in range(1, math.isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))
