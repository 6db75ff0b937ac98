"""Exhaustive subgroup enumeration by cyclic extension, and lattice meet/join."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .errors import SizeGuard
from .group import (Group, SubgroupSet, closure, closure_mask, generating_set,
                    is_solvable, mask_to_bits, sort_subgroups)


@dataclass(frozen=True)
class Limits:
    """Engineering guards (none of these bounds comes from the mathematics)."""

    order_bound: int = 200
    count_bound: int = 100_000
    family_bound: int = 200_000
    aut_limit: int = 512

    def __post_init__(self) -> None:
        for name in ("order_bound", "count_bound", "family_bound", "aut_limit"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")


DEFAULT_LIMITS = Limits()


@dataclass
class SubgroupInventory:
    group: Group
    subgroups: list[SubgroupSet]
    limits: Limits

    def __len__(self) -> int:
        return len(self.subgroups)

    def __iter__(self) -> Iterator[SubgroupSet]:
        return iter(self.subgroups)

    def __contains__(self, H: SubgroupSet) -> bool:
        return H in set(self.subgroups)


def _join_with_element(G: Group, h_ids: np.ndarray, h_mask: np.ndarray,
                       gens: tuple[int, ...], g: int, powers: np.ndarray) -> np.ndarray:
    conj = G.mul(G.mul(int(G.inverse[g]), h_ids), g)
    if h_mask[np.asarray(conj)].all():
        # g normalizes H, so <H, g> is the union of the cosets H g^k
        mask = np.zeros(G.order, dtype=bool)
        mask[np.asarray(G.mul(h_ids[:, None], powers[None, :])).ravel()] = True
        return mask
    return closure_mask(G, gens + (g,))


def _powers(G: Group, g: int) -> np.ndarray:
    out = [0]
    x = g
    while x != 0:
        out.append(x)
        x = int(G.mul(x, g))
    return np.asarray(out, dtype=np.int64)


def _normalizer_mask(G: Group, h_ids: np.ndarray, h_mask: np.ndarray) -> np.ndarray:
    everything = G.elements
    conj = G.mul(G.mul(G.inverse[:, None], h_ids[None, :]), everything[:, None])
    return h_mask[np.asarray(conj)].all(axis=1)


def all_subgroups(G: Group, limits: Limits = DEFAULT_LIMITS,
                  element_order: Sequence[int] | None = None,
                  strategy: str = "auto") -> SubgroupInventory:
    """Every subgroup of ``G`` by the cyclic extension method.

    Seeds with the cyclic subgroups, then joins each enumerated H with
    elements g outside it until no new subgroup appears.  Elements in the
    same coset H g^k (k prime to the order of g) give the same join and are
    skipped.

    ``strategy="full"`` tries every g.  ``"normalizer"`` only tries g in
    N_G(H), which is complete for solvable groups: a nontrivial subgroup U
    has a normal subgroup V of prime index, and U = <V, g> for g in U - V.
    ``"auto"`` picks ``normalizer`` exactly when G is solvable.

    Raises :class:`SizeGuard` rather than returning a partial list.
    """
    if strategy not in ("auto", "full", "normalizer"):
        raise ValueError(f"unknown strategy {strategy!r}")
    n = G.order
    if n > limits.order_bound:
        raise SizeGuard(f"group order {n} exceeds order bound {limits.order_bound}")
    order = np.arange(n) if element_order is None else np.asarray(element_order, dtype=np.int64)
    if sorted(order.tolist()) != list(range(n)):
        raise ValueError("element_order must be a permutation of the element ids")

    powers = {}
    known: dict[int, tuple[int, ...]] = {1: ()}
    queue: list[int] = []
    for g in order.tolist():
        if g == 0:
            continue
        pw = _powers(G, g)
        powers[g] = pw
        mask = np.zeros(n, dtype=bool)
        mask[pw] = True
        bits = mask_to_bits(mask)
        if bits not in known:
            known[bits] = (g,)
            queue.append(bits)

    if strategy == "auto":
        strategy = "normalizer" if is_solvable(G) else "full"
    orders = G.element_orders
    coprime = {g: pw[np.gcd(np.arange(pw.size), pw.size) == 1] for g, pw in powers.items()}
    head = 0
    while head < len(queue):
        bits = queue[head]
        head += 1
        gens = known[bits]
        h = SubgroupSet(bits, n)
        h_mask = h.mask()
        h_ids = np.flatnonzero(h_mask)
        covered = h_mask.copy()
        if strategy == "normalizer":
            covered |= ~_normalizer_mask(G, h_ids, h_mask)
        for g in order.tolist():
            if covered[g]:
                continue
            j_mask = _join_with_element(G, h_ids, h_mask, gens, g, powers[g])
            j_bits = mask_to_bits(j_mask)
            if j_bits not in known:
                known[j_bits] = gens + (g,)
                queue.append(j_bits)
                if len(known) > limits.count_bound:
                    raise SizeGuard(f"more than {limits.count_bound} subgroups")
            gk = coprime[g] if orders[g] > 1 else powers[g]
            covered[np.asarray(G.mul(h_ids[:, None], gk[None, :])).ravel()] = True
            covered[np.asarray(G.mul(gk[:, None], h_ids[None, :])).ravel()] = True
    subs = sort_subgroups(SubgroupSet(b, n) for b in known)
    return SubgroupInventory(G, subs, limits)


def meet(H: SubgroupSet, K: SubgroupSet) -> SubgroupSet:
    return H & K


def join(G: Group, H: SubgroupSet, K: SubgroupSet) -> SubgroupSet:
    if H <= K:
        return K
    if K <= H:
        return H
    return closure(G, generating_set(G, H) + generating_set(G, K))
