"""Finite groups as multiplication tables over element indices 0..n-1.

Conventions used everywhere in the package:

* the identity sits at index 0;
* a group is its table — equality is table identity, structural comparison
  goes through ``twistcomm.homs.find_isomorphism``;
* all arrays are immutable int32 numpy arrays, so every value can be shared
  freely across threads.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial
from typing import Iterable, Sequence

import numpy as np

from . import _kernels
from .errors import (
    MissingInverse,
    NoIdentityAtZero,
    NotAssociative,
    NotNormal,
    SizeCapExceeded,
)

DEFAULT_SIZE_CAP = 5040

BUILTIN_KINDS = ("cyclic", "dihedral", "symmetric", "quaternion8", "klein4")


def _frozen(a, dtype=np.int32) -> np.ndarray:
    out = np.ascontiguousarray(a, dtype=dtype)
    out.setflags(write=False)
    return out


class FiniteGroup:
    """A finite group: an n x n multiplication table plus derived inverses."""

    __slots__ = ("order", "mul", "inv", "label", "_hash")

    def __init__(self, mul: np.ndarray, inv: np.ndarray, label: str):
        self.mul = _frozen(mul)
        self.inv = _frozen(inv)
        self.order = int(self.mul.shape[0])
        self.label = label
        self._hash: int | None = None

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return self.order == other.order and np.array_equal(self.mul, other.mul)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.mul.tobytes())
        return self._hash

    def __repr__(self) -> str:
        return f"FiniteGroup({self.label!r}, order={self.order})"

    def elements(self) -> range:
        return range(self.order)

    def conjugate(self, g: int, x: int) -> int:
        """g * x * g^-1."""
        return int(self.mul[self.mul[g, x], self.inv[g]])

    def commutator(self, a: int, b: int) -> int:
        """a * b * a^-1 * b^-1."""
        m = self.mul
        return int(m[m[m[a, b], self.inv[a]], self.inv[b]])


class Subgroup:
    """A subgroup of ``parent`` as a strictly increasing element-index tuple."""

    __slots__ = ("parent", "elements")

    def __init__(self, parent: FiniteGroup, elements: Sequence[int]):
        elems = tuple(int(e) for e in elements)
        if not elems or elems[0] != 0 or list(elems) != sorted(set(elems)):
            raise ValueError("subgroup element list must be sorted, unique and contain 0")
        self.parent = parent
        self.elements = elems

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, idx: int) -> bool:
        return int(idx) in set(self.elements)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self.parent == other.parent and self.elements == other.elements

    def __hash__(self) -> int:
        return hash((hash(self.parent), self.elements))

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order}, of={self.parent.label!r})"

    def is_trivial(self) -> bool:
        return len(self.elements) == 1


def validate_group(table, label: str = "G") -> FiniteGroup:
    """Check all group axioms exhaustively and return the validated group.

    Raises NoIdentityAtZero / NotAssociative / MissingInverse with the
    witnessing element or triple.
    """
    mul = np.ascontiguousarray(table, dtype=np.int32)
    if mul.ndim != 2 or mul.shape[0] != mul.shape[1]:
        raise ValueError("multiplication table must be square")
    n = mul.shape[0]
    if n == 0:
        raise ValueError("group must be nonempty")
    if mul.min() < 0 or mul.max() >= n:
        raise ValueError("table entries must lie in [0, n)")

    idx = np.arange(n, dtype=np.int32)
    row_ok = np.array_equal(mul[0], idx)
    col_ok = np.array_equal(mul[:, 0], idx)
    if not (row_ok and col_ok):
        bad = int(np.argwhere(mul[0] != idx)[0][0]) if not row_ok else int(
            np.argwhere(mul[:, 0] != idx)[0][0]
        )
        raise NoIdentityAtZero(bad)

    witness = _kernels.first_nonassociative(mul)
    if witness is not None:
        raise NotAssociative(*witness)

    inv = np.full(n, -1, dtype=np.int32)
    for a in range(n):
        for b in np.where(mul[a] == 0)[0]:
            if mul[b, a] == 0:
                inv[a] = b
                break
        if inv[a] < 0:
            raise MissingInverse(a)
    return FiniteGroup(mul, inv, label)


def _cyclic_table(n: int) -> np.ndarray:
    idx = np.arange(n, dtype=np.int32)
    return (idx[:, None] + idx[None, :]) % n


def _dihedral_table(n: int) -> np.ndarray:
    # element (i, j) = r^i s^j at index i + n*j, with s r s = r^-1
    order = 2 * n
    mul = np.zeros((order, order), dtype=np.int32)
    for p in range(order):
        i, j = p % n, p // n
        for q in range(order):
            k, l = q % n, q // n
            ri = (i + k) % n if j == 0 else (i - k) % n
            mul[p, q] = ri + n * ((j + l) % 2)
    return mul


def _symmetric_table(n: int) -> np.ndarray:
    from itertools import permutations

    perms = sorted(permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    order = len(perms)
    mul = np.zeros((order, order), dtype=np.int32)
    for i, p in enumerate(perms):
        for j, q in enumerate(perms):
            mul[i, j] = index[tuple(p[q[x]] for x in range(n))]
    return mul


def _quaternion8_table() -> np.ndarray:
    # elements a^i b^j at index i + 4j, with a^4 = 1, b^2 = a^2, b a = a^-1 b
    mul = np.zeros((8, 8), dtype=np.int32)
    for p in range(8):
        i, j = p % 4, p // 4
        for q in range(8):
            k, l = q % 4, q // 4
            if j == 0:
                mul[p, q] = (i + k) % 4 + 4 * l
            elif l == 0:
                mul[p, q] = (i - k) % 4 + 4
            else:
                mul[p, q] = (i - k + 2) % 4
    return mul


def builtin_group(kind: str, n: int = 1, size_cap: int | None = None) -> FiniteGroup:
    """Construct a validated group from the built-in catalog of families."""
    cap = DEFAULT_SIZE_CAP if size_cap is None else size_cap
    if kind not in BUILTIN_KINDS:
        raise ValueError(f"unknown builtin kind {kind!r}; expected one of {BUILTIN_KINDS}")
    if kind in ("cyclic", "dihedral", "symmetric") and n < 1:
        raise ValueError("n must be >= 1")

    if kind == "cyclic":
        order, make, label = n, lambda: _cyclic_table(n), f"Z{n}"
    elif kind == "dihedral":
        order, make, label = 2 * n, lambda: _dihedral_table(n), f"D{n}"
    elif kind == "symmetric":
        order, make, label = factorial(n), lambda: _symmetric_table(n), f"S{n}"
    elif kind == "quaternion8":
        order, make, label = 8, _quaternion8_table, "Q8"
    else:  # klein4 = Z2 x Z2 with xor indexing
        z2 = _cyclic_table(2)
        order, label = 4, "klein4"
        make = lambda: (z2[:, None, :, None] * 2 + z2[None, :, None, :]).reshape(4, 4)

    if order > cap:
        raise SizeCapExceeded(order, cap)
    return validate_group(make(), label)


@lru_cache(maxsize=None)
def direct_product(
    g: FiniteGroup, h: FiniteGroup, size_cap: int | None = None
) -> tuple[FiniteGroup, tuple["Homomorphism", "Homomorphism"], tuple["Homomorphism", "Homomorphism"]]:
    """G x H on pairs (a, b) at index a*|H| + b, with projections and injections.

    Memoised: every returned value is immutable, and the classical cospan is
    rebuilt for each commutator call.
    """
    from .homs import make_hom

    cap = DEFAULT_SIZE_CAP if size_cap is None else size_cap
    order = g.order * h.order
    if order > cap:
        raise SizeCapExceeded(order, cap)
    nh = h.order
    mul = (g.mul[:, None, :, None].astype(np.int64) * nh + h.mul[None, :, None, :]).reshape(
        order, order
    )
    prod = validate_group(mul, f"{g.label}x{h.label}")
    idx = np.arange(order, dtype=np.int32)
    proj_g = make_hom(prod, g, idx // nh)
    proj_h = make_hom(prod, h, idx % nh)
    inj_g = make_hom(g, prod, np.arange(g.order, dtype=np.int32) * nh)
    inj_h = make_hom(h, prod, np.arange(h.order, dtype=np.int32))
    return prod, (proj_g, proj_h), (inj_g, inj_h)


def subgroup_closure(g: FiniteGroup, seed: Iterable[int]) -> Subgroup:
    """Least subgroup of g containing ``seed`` (worklist closure)."""
    seed_arr = np.asarray(sorted({int(s) for s in seed}), dtype=np.int32)
    if seed_arr.size and (seed_arr.min() < 0 or seed_arr.max() >= g.order):
        raise ValueError("seed indices out of range")
    return Subgroup(g, _kernels.closure(g.mul, seed_arr))


def normal_closure(g: FiniteGroup, seed: Iterable[int]) -> Subgroup:
    """Least normal subgroup containing ``seed``: close the set of all conjugates."""
    conj = {g.conjugate(a, int(s)) for s in seed for a in g.elements()}
    return subgroup_closure(g, conj)


def center(g: FiniteGroup) -> Subgroup:
    zs = np.where((g.mul == g.mul.T).all(axis=1))[0]
    return Subgroup(g, zs.tolist())


def is_abelian(g: FiniteGroup) -> bool:
    return bool(np.array_equal(g.mul, g.mul.T))


def is_normal(s: Subgroup) -> bool:
    g = s.parent
    members = set(s.elements)
    for a in g.elements():
        for x in s.elements:
            if g.conjugate(a, x) not in members:
                return False
    return True


def quotient(g: FiniteGroup, n: Subgroup) -> tuple[FiniteGroup, "Homomorphism"]:
    """G/N on cosets named by their minimal element, with the projection map."""
    from .homs import make_hom

    if n.parent is not g and n.parent != g:
        raise ValueError("subgroup does not live in the given group")
    for a in g.elements():
        for x in n.elements:
            if g.conjugate(a, x) not in set(n.elements):
                raise NotNormal(a, x)

    nelems = np.asarray(n.elements, dtype=np.int32)
    rep = np.asarray([int(g.mul[a, nelems].min()) for a in g.elements()], dtype=np.int32)
    reps = sorted(set(rep.tolist()))
    rep_index = {r: i for i, r in enumerate(reps)}
    order = len(reps)
    mul = np.zeros((order, order), dtype=np.int32)
    for i, r in enumerate(reps):
        for j, s in enumerate(reps):
            mul[i, j] = rep_index[int(rep[g.mul[r, s]])]
    q = validate_group(mul, f"{g.label}/N{n.order}")
    proj = make_hom(g, q, [rep_index[int(rep[a])] for a in g.elements()])
    from .homs import kernel_image

    ker, img = kernel_image(proj)
    if ker.elements != n.elements or img.order != order:
        raise AssertionError("quotient projection validation failed")  # pragma: no cover
    return q, proj


def element_orders(g: FiniteGroup) -> np.ndarray:
    """Order of every element, computed by iterated multiplication."""
    out = np.zeros(g.order, dtype=np.int32)
    for a in g.elements():
        x, k = a, 1
        while x != 0:
            x = int(g.mul[x, a])
            k += 1
        out[a] = k
    return out


@lru_cache(maxsize=None)
def generating_sequence(g: FiniteGroup) -> tuple[int, ...]:
    """Greedy minimal generating sequence: repeatedly add the smallest
    element index outside the current closure."""
    gens: list[int] = []
    current = {0}
    while len(current) < g.order:
        nxt = min(set(g.elements()) - current)
        gens.append(nxt)
        current = set(subgroup_closure(g, gens).elements)
    return tuple(gens)


def subgroup_as_group(s: Subgroup) -> tuple[FiniteGroup, "Homomorphism"]:
    """Reify a subgroup as a standalone group plus its inclusion map."""
    from .homs import make_hom

    g = s.parent
    elems = np.asarray(s.elements, dtype=np.int32)
    pos = {int(e): i for i, e in enumerate(elems)}
    order = len(elems)
    mul = np.zeros((order, order), dtype=np.int32)
    for i, a in enumerate(elems):
        for j, b in enumerate(elems):
            mul[i, j] = pos[int(g.mul[a, b])]
    sub = validate_group(mul, f"{g.label}|{order}")
    incl = make_hom(sub, g, elems)
    return sub, incl


def all_subgroups(g: FiniteGroup) -> tuple[Subgroup, ...]:
    """Every subgroup, found by closing one added generator at a time.

    Ordered by (order, element tuple) for reproducible sweeps.
    """
    seen = {(0,)}
    frontier = [(0,)]
    while frontier:
        base = frontier.pop()
        for x in g.elements():
            if x in base:
                continue
            closed = tuple(subgroup_closure(g, set(base) | {x}).elements)
            if closed not in seen:
                seen.add(closed)
                frontier.append(closed)
    ordered = sorted(seen, key=lambda t: (len(t), t))
    return tuple(Subgroup(g, t) for t in ordered)


@lru_cache(maxsize=None)
def automorphism_group(
    g: FiniteGroup, size_cap: int | None = None
) -> tuple[FiniteGroup, tuple[np.ndarray, ...]]:
    """The automorphism group of g as a table group plus an evaluation list.

    ``eval_tables[i]`` is the permutation of g realised by element i, with
    the composition convention eval(i*j) = eval(i) o eval(j) and the identity
    automorphism at index 0.
    """
    cap = DEFAULT_SIZE_CAP if size_cap is None else size_cap
    if g.order > cap:
        raise SizeCapExceeded(g.order, cap)

    gens = generating_sequence(g)
    orders = element_orders(g)
    tables = _all_isomorphism_tables(g, g, gens, orders, orders, bijective_same_order=True)
    tables.sort(key=lambda t: t.tolist())
    index = {t.tobytes(): i for i, t in enumerate(tables)}
    order = len(tables)
    mul = np.zeros((order, order), dtype=np.int32)
    for i, ti in enumerate(tables):
        for j, tj in enumerate(tables):
            mul[i, j] = index[np.ascontiguousarray(ti[tj]).tobytes()]
    aut = validate_group(mul, f"Aut({g.label})")
    evals = tuple(_frozen(t) for t in tables)
    return aut, evals


def _all_isomorphism_tables(
    g: FiniteGroup,
    h: FiniteGroup,
    gens: tuple[int, ...],
    orders_g: np.ndarray,
    orders_h: np.ndarray,
    bijective_same_order: bool,
) -> list[np.ndarray]:
    """Backtracking core shared by automorphism_group: all bijective
    structure-preserving maps g -> h extending images of ``gens``."""
    from itertools import product as iproduct

    if g.order != h.order:
        return []
    if not gens:
        return [np.zeros(1, dtype=np.int32)] if g.order == 1 else []
    cands = []
    for x in gens:
        ox = int(orders_g[x])
        cands.append([y for y in range(h.order) if int(orders_h[y]) == ox])
    out = []
    gen_arr = np.asarray(gens, dtype=np.int32)
    for imgs in iproduct(*cands):
        status, phi = _kernels.forced_extension(
            g.mul, h.mul, gen_arr, np.asarray(imgs, dtype=np.int32)
        )
        if status != 0:
            continue
        phi_arr = np.asarray(phi, dtype=np.int32)
        if len(set(phi)) != g.order:
            continue
        if _kernels.hom_violation(g.mul, h.mul, phi_arr) is None:
            out.append(phi_arr)
    return out


def relabel(g: FiniteGroup, perm: Sequence[int], label: str | None = None) -> FiniteGroup:
    """Isomorphic copy of g with element i renamed perm[i] (perm[0] must be 0)."""
    p = np.asarray(perm, dtype=np.int32)
    if p[0] != 0 or sorted(p.tolist()) != list(range(g.order)):
        raise ValueError("perm must be a permutation fixing 0")
    inv_p = np.zeros_like(p)
    inv_p[p] = np.arange(g.order, dtype=np.int32)
    mul = p[g.mul[inv_p[:, None], inv_p[None, :]]]
    return validate_group(mul, label or f"{g.label}~")
