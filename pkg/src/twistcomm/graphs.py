"""Reflexive graphs over table groups.

A reflexive graph is (C1, C0, d, c, e) with d o e = c o e = 1.  Its
normalisation is c restricted to the kernel of d; being a reflexive relation
or connected is equivalent to that restriction being injective or surjective,
and both readings are computed and compared.  Star-multiplicativity and
multiplicativity reduce to cooperator searches over pullback cospans.
"""

from __future__ import annotations

import numpy as np

from .commutators import cooperator, relative_commutator
from .errors import (
    DomainMismatch,
    InternalCrossCheckFailure,
    PcmFails,
    SearchBudgetExceeded,
)
from .groups import FiniteGroup, normal_closure, quotient, subgroup_as_group, validate_group
from .homs import (
    Cospan,
    Homomorphism,
    all_homomorphisms,
    compose,
    identity_hom,
    is_jointly_generating,
    kernel_image,
    make_hom,
    zero_hom,
)


class ReflexiveGraph:
    __slots__ = ("c1", "c0", "d", "c", "e")

    def __init__(self, d: Homomorphism, c: Homomorphism, e: Homomorphism):
        if d.source != c.source or d.target != c.target:
            raise DomainMismatch("d and c must be parallel")
        if e.source != d.target or e.target != d.source:
            raise DomainMismatch("e must point back from the object of objects")
        n0 = d.target.order
        ident = np.arange(n0, dtype=np.int32)
        if not np.array_equal(d.map[e.map], ident):
            raise ValueError("d o e is not the identity")
        if not np.array_equal(c.map[e.map], ident):
            raise ValueError("c o e is not the identity")
        self.c1 = d.source
        self.c0 = d.target
        self.d = d
        self.c = c
        self.e = e

    def __repr__(self) -> str:
        return f"ReflexiveGraph({self.c1.label!r} => {self.c0.label!r})"


class Pullback:
    """The fiber product {(g, h) : p(g) = q(h)} reified as a group.

    Carries the two projections and a pairing constructor for cones.
    """

    __slots__ = ("group", "proj1", "proj2", "_index", "_p", "_q")

    def __init__(self, p: Homomorphism, q: Homomorphism):
        if p.target != q.target:
            raise DomainMismatch("pullback legs must share their codomain")
        g, h = p.source, q.source
        nh = h.order
        packed = [
            a * nh + b
            for a in g.elements()
            for b in h.elements()
            if p(a) == q(b)
        ]
        index = {v: i for i, v in enumerate(packed)}
        order = len(packed)
        mul = np.zeros((order, order), dtype=np.int32)
        for i, v in enumerate(packed):
            a, b = divmod(v, nh)
            for j, w in enumerate(packed):
                a2, b2 = divmod(w, nh)
                mul[i, j] = index[int(g.mul[a, a2]) * nh + int(h.mul[b, b2])]
        self.group = validate_group(mul, f"{g.label}*{h.label}")
        self.proj1 = make_hom(self.group, g, [v // nh for v in packed])
        self.proj2 = make_hom(self.group, h, [v % nh for v in packed])
        self._index = index
        self._p = p
        self._q = q

    def pair(self, u: Homomorphism, v: Homomorphism) -> Homomorphism:
        """The induced map w |-> (u(w), v(w)) for a cone p o u = q o v."""
        if u.source != v.source:
            raise DomainMismatch("cone legs must share their domain")
        if not np.array_equal(self._p.map[u.map], self._q.map[v.map]):
            raise ValueError("not a cone: p o u differs from q o v")
        nh = self.proj2.target.order
        packed = u.map.astype(np.int64) * nh + v.map
        return make_hom(u.source, self.group, [self._index[int(w)] for w in packed])


def pullback(
    p: Homomorphism, q: Homomorphism
) -> tuple[FiniteGroup, Homomorphism, Homomorphism]:
    """Fiber product with its projections (see Pullback for the cone API)."""
    pb = Pullback(p, q)
    return pb.group, pb.proj1, pb.proj2


def graph_of_precrossed(cand) -> ReflexiveGraph:
    """The reflexive graph (X x| B, B, d, c, e) of a precrossed module."""
    from .xmod import check_pcm

    ok, witness = check_pcm(cand)
    if not ok:
        raise PcmFails()
    ext = cand.extension
    return ReflexiveGraph(ext.d, witness, ext.e)


def normalization(g: ReflexiveGraph) -> Homomorphism:
    """c restricted to the kernel of d, as an honest homomorphism."""
    ker, _ = kernel_image(g.d)
    _, incl = subgroup_as_group(ker)
    return compose(g.c, incl)


def _pairing_values(g: ReflexiveGraph) -> np.ndarray:
    return g.d.map.astype(np.int64) * g.c0.order + g.c.map


def is_reflexive_relation(g: ReflexiveGraph) -> bool:
    """Are d and c jointly monic?  Cross-checked: iff the normalisation is monic."""
    direct = len(set(_pairing_values(g).tolist())) == g.c1.order
    via_norm = normalization(g).is_injective()
    if direct != via_norm:
        raise InternalCrossCheckFailure(
            f"reflexive-relation routes disagree on {g!r}"
        )
    return direct


def is_connected(g: ReflexiveGraph) -> bool:
    """Is (d, c) surjective onto C0 x C0?  Cross-checked against the normalisation."""
    direct = len(set(_pairing_values(g).tolist())) == g.c0.order ** 2
    via_norm = normalization(g).is_surjective()
    if direct != via_norm:
        raise InternalCrossCheckFailure(f"connectedness routes disagree on {g!r}")
    return direct


def pi0(g: ReflexiveGraph) -> FiniteGroup:
    """C0 modulo the normal closure of {d(t) * c(t)^-1}.

    Cross-checked: trivial exactly when the graph is connected.
    """
    relators = g.c0.mul[g.d.map, g.c0.inv[g.c.map]]
    closure = normal_closure(g.c0, set(relators.tolist()))
    quot, _ = quotient(g.c0, closure)
    if (quot.order == 1) != is_connected(g):
        raise InternalCrossCheckFailure(f"pi0 triviality vs connectedness on {g!r}")
    return quot


def _star_cospan(g: ReflexiveGraph) -> tuple[Cospan, FiniteGroup]:
    """The cospan X -(k,0)-> C1 x_{C0} X <-(e o c o k, 1)- X over ker(d)."""
    ker, _ = kernel_image(g.d)
    ker_grp, incl = subgroup_as_group(ker)
    norm = compose(g.c, incl)
    pb = Pullback(g.d, norm)
    j1 = pb.pair(incl, zero_hom(ker_grp, ker_grp))
    j2 = pb.pair(compose(g.e, norm), identity_hom(ker_grp))
    return Cospan(j1, j2), ker_grp


def is_star_multiplicative(g: ReflexiveGraph) -> bool:
    """Does a star-multiplication exist?

    Decided by the cooperator of (1, 1) over the star cospan and by the
    vanishing of the matching twisted commutator; the two must agree.
    """
    cospan, ker_grp = _star_cospan(g)
    ident = identity_hom(ker_grp)
    via_coop = cooperator(cospan, ident, ident) is not None
    via_commut = relative_commutator(cospan, ident, ident).is_trivial
    if via_coop != via_commut:
        raise InternalCrossCheckFailure(
            f"star-multiplicativity routes disagree on {g!r}"
        )
    return via_coop


def is_multiplicative(g: ReflexiveGraph, hom_budget: int = 200_000) -> bool:
    """Does a multiplication m: C1 x_{C0} C1 -> C1 with both unit laws exist?

    Fast path: when the two unit sections jointly generate the fiber product
    (always the case for graphs of precrossed modules) the cooperator search
    is conclusive.  Otherwise fall back to scanning all homomorphisms.
    Cross-check: a multiplicative graph must be star-multiplicative.
    """
    pb = Pullback(g.d, g.c)
    u1 = pb.pair(identity_hom(g.c1), compose(g.e, g.d))
    u2 = pb.pair(compose(g.e, g.c), identity_hom(g.c1))
    cospan = Cospan(u1, u2)
    ident = identity_hom(g.c1)
    if is_jointly_generating(cospan):
        found = cooperator(cospan, ident, ident) is not None
    else:
        found = False
        try:
            candidates = all_homomorphisms(pb.group, g.c1, hom_budget)
        except SearchBudgetExceeded:
            raise
        for m in candidates:
            if np.array_equal(m.map[u1.map], ident.map) and np.array_equal(
                m.map[u2.map], ident.map
            ):
                found = True
                break
    if found and not is_star_multiplicative(g):
        raise InternalCrossCheckFailure(
            f"multiplicative graph {g!r} is not star-multiplicative"
        )
    return found
