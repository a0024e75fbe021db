"""Homomorphisms between table groups: validation, kernels and images,
exhaustive enumeration, isomorphism search, and the joint-generation test
used as the extremal-epi criterion for cospans."""

from __future__ import annotations

from functools import lru_cache
from itertools import product as iproduct

import numpy as np

from . import _kernels
from .errors import DomainMismatch, NotHomomorphism, SearchBudgetExceeded
from .groups import (
    FiniteGroup,
    Subgroup,
    _frozen,
    element_orders,
    generating_sequence,
    subgroup_closure,
)

DEFAULT_SEARCH_BUDGET = 1_000_000


class Homomorphism:
    """A validated map of element indices between two finite groups."""

    __slots__ = ("source", "target", "map")

    def __init__(self, source: FiniteGroup, target: FiniteGroup, map_: np.ndarray):
        self.source = source
        self.target = target
        self.map = _frozen(map_)

    def __call__(self, a: int) -> int:
        return int(self.map[a])

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, Homomorphism):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and np.array_equal(self.map, other.map)
        )

    def __hash__(self) -> int:
        return hash((hash(self.source), hash(self.target), self.map.tobytes()))

    def __repr__(self) -> str:
        return f"Homomorphism({self.source.label!r} -> {self.target.label!r})"

    def is_injective(self) -> bool:
        return len(set(self.map.tolist())) == self.source.order

    def is_surjective(self) -> bool:
        return len(set(self.map.tolist())) == self.target.order

    def is_bijective(self) -> bool:
        return self.source.order == self.target.order and self.is_injective()


class Cospan:
    """Two coterminal homomorphisms (k: X -> A, s: B -> A)."""

    __slots__ = ("left", "right")

    def __init__(self, left: Homomorphism, right: Homomorphism):
        if left.target != right.target:
            raise DomainMismatch("cospan legs must share their codomain")
        self.left = left
        self.right = right

    @property
    def apex(self) -> FiniteGroup:
        return self.left.target

    def __eq__(self, other) -> bool:
        if not isinstance(other, Cospan):
            return NotImplemented
        return self.left == other.left and self.right == other.right

    def __hash__(self) -> int:
        return hash((self.left, self.right))

    def __repr__(self) -> str:
        return (
            f"Cospan({self.left.source.label!r} -> {self.apex.label!r}"
            f" <- {self.right.source.label!r})"
        )


def make_hom(g: FiniteGroup, h: FiniteGroup, map_) -> Homomorphism:
    arr = np.ascontiguousarray(map_, dtype=np.int32)
    if arr.ndim != 1 or arr.shape[0] != g.order:
        raise ValueError(f"map must have length {g.order}")
    if arr.min() < 0 or arr.max() >= h.order:
        raise ValueError("map entries out of target range")
    if arr[0] != 0:
        raise NotHomomorphism(0, 0)
    witness = _kernels.hom_violation(g.mul, h.mul, arr)
    if witness is not None:
        raise NotHomomorphism(*witness)
    return Homomorphism(g, h, arr)


def identity_hom(g: FiniteGroup) -> Homomorphism:
    return Homomorphism(g, g, np.arange(g.order, dtype=np.int32))


def zero_hom(g: FiniteGroup, h: FiniteGroup) -> Homomorphism:
    return Homomorphism(g, h, np.zeros(g.order, dtype=np.int32))


def kernel_image(h: Homomorphism) -> tuple[Subgroup, Subgroup]:
    """(preimage of 0, pointwise image) — both are subgroups already."""
    ker = np.where(h.map == 0)[0].tolist()
    img = sorted(set(h.map.tolist()))
    return Subgroup(h.source, ker), Subgroup(h.target, img)


def compose(outer: Homomorphism, inner: Homomorphism) -> Homomorphism:
    """outer o inner, revalidated."""
    if inner.target != outer.source:
        raise DomainMismatch(
            f"cannot compose {outer!r} after {inner!r}: middle groups differ"
        )
    return make_hom(inner.source, outer.target, outer.map[inner.map])


def _hom_candidates(
    g: FiniteGroup, h: FiniteGroup, budget: int
) -> tuple[tuple[int, ...], list[list[int]]]:
    gens = generating_sequence(g)
    ords_g = element_orders(g)
    ords_h = element_orders(h)
    cands = [
        [y for y in range(h.order) if int(ords_g[x]) % int(ords_h[y]) == 0]
        for x in gens
    ]
    total = 1
    for c in cands:
        total *= len(c)
    if total > budget:
        raise SearchBudgetExceeded(total, budget)
    return gens, cands


@lru_cache(maxsize=None)
def all_homomorphisms(
    g: FiniteGroup, h: FiniteGroup, budget: int = DEFAULT_SEARCH_BUDGET
) -> tuple[Homomorphism, ...]:
    """Every homomorphism g -> h, ordered lexicographically by map table.

    Backtracks over generator images with element-order-divisibility pruning;
    each candidate is completed by forced extension and then fully verified.
    """
    if g.order == 1:
        return (zero_hom(g, h),)
    gens, cands = _hom_candidates(g, h, budget)
    gen_arr = np.asarray(gens, dtype=np.int32)
    found: list[np.ndarray] = []
    for imgs in iproduct(*cands):
        status, phi = _kernels.forced_extension(
            g.mul, h.mul, gen_arr, np.asarray(imgs, dtype=np.int32)
        )
        if status != 0:
            continue
        arr = np.asarray(phi, dtype=np.int32)
        if _kernels.hom_violation(g.mul, h.mul, arr) is None:
            found.append(arr)
    found.sort(key=lambda a: a.tolist())
    return tuple(Homomorphism(g, h, a) for a in found)


def find_isomorphism(
    g: FiniteGroup, h: FiniteGroup, budget: int = DEFAULT_SEARCH_BUDGET
) -> Homomorphism | None:
    """First bijective homomorphism in search order, or None."""
    if g.order != h.order:
        return None
    ords_g = element_orders(g)
    ords_h = element_orders(h)
    if sorted(ords_g.tolist()) != sorted(ords_h.tolist()):
        return None
    if g.order == 1:
        return zero_hom(g, h)
    gens = generating_sequence(g)
    cands = [
        [y for y in range(h.order) if int(ords_h[y]) == int(ords_g[x])] for x in gens
    ]
    total = 1
    for c in cands:
        total *= len(c)
    if total > budget:
        raise SearchBudgetExceeded(total, budget)
    gen_arr = np.asarray(gens, dtype=np.int32)
    for imgs in iproduct(*cands):
        status, phi = _kernels.forced_extension(
            g.mul, h.mul, gen_arr, np.asarray(imgs, dtype=np.int32)
        )
        if status != 0:
            continue
        if len(set(phi)) != g.order:
            continue
        arr = np.asarray(phi, dtype=np.int32)
        if _kernels.hom_violation(g.mul, h.mul, arr) is None:
            return Homomorphism(g, h, arr)
    return None


@lru_cache(maxsize=None)
def is_jointly_generating(c: Cospan) -> bool:
    """True iff the images of the two legs generate the codomain.

    For table groups this is the extremal-epi test for cospans: a cospan
    factors through no proper subgroup exactly when its images generate.
    """
    a = c.apex
    seed = set(c.left.map.tolist()) | set(c.right.map.tolist())
    return subgroup_closure(a, seed).order == a.order
