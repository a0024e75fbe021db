"""Group actions and split extensions.

An action of B on X is stored as one automorphism permutation of X per
element of B.  The semidirect product realises the action as a split short
exact sequence (k, d, e); ``action_from_extension`` inverts the construction,
and the two directions are round-trip tested against each other.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .errors import (
    ConjugateEscapesKernel,
    DomainMismatch,
    IdentityNotFixed,
    NotAutomorphism,
    NotFunctorial,
    SizeCapExceeded,
)
from .groups import DEFAULT_SIZE_CAP, FiniteGroup, _frozen, automorphism_group
from .homs import (
    DEFAULT_SEARCH_BUDGET,
    Homomorphism,
    all_homomorphisms,
    kernel_image,
    make_hom,
)


class Action:
    """An action of ``actor`` on ``acted``: table[b] is the permutation of
    acted realised by b, with table[b*b'] = table[b] o table[b']."""

    __slots__ = ("actor", "acted", "table")

    def __init__(self, actor: FiniteGroup, acted: FiniteGroup, table: np.ndarray):
        self.actor = actor
        self.acted = acted
        self.table = _frozen(table)

    def __call__(self, b: int, x: int) -> int:
        return int(self.table[b, x])

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, Action):
            return NotImplemented
        return (
            self.actor == other.actor
            and self.acted == other.acted
            and np.array_equal(self.table, other.table)
        )

    def __hash__(self) -> int:
        return hash((hash(self.actor), hash(self.acted), self.table.tobytes()))

    def __repr__(self) -> str:
        return f"Action({self.actor.label!r} on {self.acted.label!r})"

    def is_trivial(self) -> bool:
        return bool(
            np.array_equal(
                self.table, np.tile(np.arange(self.acted.order), (self.actor.order, 1))
            )
        )


class SplitExtension:
    """The data (k, d, e) of a split short exact sequence.

    k: X -> T is the kernel inclusion, d: T -> B the retraction, e: B -> T
    the section; d o e = 1, d o k = 0, and image(k) = kernel(d).
    """

    __slots__ = ("k", "d", "e")

    def __init__(self, k: Homomorphism, d: Homomorphism, e: Homomorphism):
        self.k = k
        self.d = d
        self.e = e

    @property
    def total(self) -> FiniteGroup:
        return self.k.target

    @property
    def kernel_group(self) -> FiniteGroup:
        return self.k.source

    @property
    def base(self) -> FiniteGroup:
        return self.d.target

    def __repr__(self) -> str:
        return (
            f"SplitExtension({self.kernel_group.label!r} -> "
            f"{self.total.label!r} <-> {self.base.label!r})"
        )


def validate_action(actor: FiniteGroup, acted: FiniteGroup, table) -> Action:
    """Verify the three action axioms exhaustively."""
    tab = np.ascontiguousarray(table, dtype=np.int32)
    if tab.shape != (actor.order, acted.order):
        raise ValueError(f"action table must be {actor.order} x {acted.order}")
    idx = np.arange(acted.order, dtype=np.int32)
    if not np.array_equal(tab[0], idx):
        raise IdentityNotFixed()
    for b in actor.elements():
        row = tab[b]
        if not np.array_equal(np.sort(row), idx):
            raise NotAutomorphism(b)
        # row preserves the table: row[x*y] == row[x]*row[y]
        if not np.array_equal(row[acted.mul], acted.mul[row[:, None], row[None, :]]):
            raise NotAutomorphism(b)
    for b in actor.elements():
        for b2 in actor.elements():
            if not np.array_equal(tab[actor.mul[b, b2]], tab[b][tab[b2]]):
                raise NotFunctorial(b, b2)
    return Action(actor, acted, tab)


def trivial_action(actor: FiniteGroup, acted: FiniteGroup) -> Action:
    table = np.tile(np.arange(acted.order, dtype=np.int32), (actor.order, 1))
    return Action(actor, acted, table)


@lru_cache(maxsize=None)
def conjugation_action(g: FiniteGroup) -> Action:
    """The action of g on itself by x' |-> x * x' * x^-1."""
    table = np.zeros((g.order, g.order), dtype=np.int32)
    for x in g.elements():
        table[x] = g.mul[g.mul[x, :], g.inv[x]]
    return validate_action(g, g, table)


def canonical_action(kind: str, *groups: FiniteGroup) -> Action:
    """kind 'trivial' takes (actor, acted); kind 'conjugation' takes (X,)."""
    if kind == "trivial":
        actor, acted = groups
        return trivial_action(actor, acted)
    if kind == "conjugation":
        (g,) = groups
        return conjugation_action(g)
    raise ValueError(f"unknown canonical action kind {kind!r}")


@lru_cache(maxsize=None)
def semidirect_product(xi: Action, size_cap: int | None = None) -> SplitExtension:
    """X x| B on pairs (x, b) at index x + |X|*b, (x,b)(x',b') = (x*xi_b(x'), b*b').

    Memoised: the extension of a given action is requested by every twisted
    commutator over it.
    """
    cap = DEFAULT_SIZE_CAP if size_cap is None else size_cap
    x_grp, b_grp = xi.acted, xi.actor
    nx, nb = x_grp.order, b_grp.order
    order = nx * nb
    if order > cap:
        raise SizeCapExceeded(order, cap)

    idx = np.arange(order, dtype=np.int32)
    xs, bs = idx % nx, idx // nx
    acted_part = xi.table[bs[:, None], xs[None, :]]  # xi_{b_p}(x_q)
    mul = x_grp.mul[xs[:, None], acted_part] + nx * b_grp.mul[bs[:, None], bs[None, :]].astype(
        np.int64
    )

    from .groups import validate_group

    total = validate_group(mul, f"{x_grp.label}:{b_grp.label}")
    k = make_hom(x_grp, total, np.arange(nx, dtype=np.int32))
    e = make_hom(b_grp, total, nx * np.arange(nb, dtype=np.int32))
    d = make_hom(total, b_grp, bs)
    return make_split_extension(k, d, e)


def make_split_extension(k: Homomorphism, d: Homomorphism, e: Homomorphism) -> SplitExtension:
    """Validate the split-extension identities and wrap the triple."""
    if k.target != d.source or e.target != d.source or e.source != d.target:
        raise DomainMismatch("split extension arrows do not line up")
    if not np.array_equal(d.map[e.map], np.arange(d.target.order, dtype=np.int32)):
        raise ValueError("d o e is not the identity")
    if d.map[k.map].any():
        raise ValueError("d o k is not zero")
    if not k.is_injective():
        raise ValueError("kernel map is not injective")
    ker_d, _ = kernel_image(d)
    if sorted(k.map.tolist()) != list(ker_d.elements):
        raise ValueError("image of k differs from kernel of d")
    return SplitExtension(k, d, e)


def action_from_extension(ext: SplitExtension) -> Action:
    """Recover the action: xi_b(x) = k^-1( e(b) * k(x) * e(b)^-1 )."""
    t = ext.total
    x_grp, b_grp = ext.kernel_group, ext.base
    k_pos = {int(v): i for i, v in enumerate(ext.k.map)}
    table = np.zeros((b_grp.order, x_grp.order), dtype=np.int32)
    for b in b_grp.elements():
        tb = ext.e(b)
        for x in x_grp.elements():
            conj = t.conjugate(tb, ext.k(x))
            if conj not in k_pos:
                raise ConjugateEscapesKernel(b, x)
            table[b, x] = k_pos[conj]
    return validate_action(b_grp, x_grp, table)


def all_actions(
    b_grp: FiniteGroup, x_grp: FiniteGroup, budget: int = DEFAULT_SEARCH_BUDGET
) -> tuple[Action, ...]:
    """Every action of b_grp on x_grp, in the lexicographic order of the
    underlying homomorphisms into the automorphism group."""
    aut, evals = automorphism_group(x_grp)
    out = []
    for hom in all_homomorphisms(b_grp, aut, budget):
        table = np.stack([evals[hom(b)] for b in b_grp.elements()])
        out.append(validate_action(b_grp, x_grp, table))
    return tuple(out)


def is_equivariant(f: Homomorphism, g: Homomorphism, xi: Action, xi2: Action) -> bool:
    """True iff f(xi_b(x)) = xi2_{g(b)}(f(x)) for all b, x."""
    if f.source != xi.acted or g.source != xi.actor:
        raise DomainMismatch("f, g must start at the acted/actor groups of xi")
    if f.target != xi2.acted or g.target != xi2.actor:
        raise DomainMismatch("f, g must land in the acted/actor groups of xi2")
    for b in xi.actor.elements():
        lhs = f.map[xi.table[b]]
        rhs = xi2.table[g(b)][f.map]
        if not np.array_equal(lhs, rhs):
            return False
    return True
