"""Precrossed and crossed modules over table groups.

A candidate is a boundary map d: X -> B together with an action of B on X.
The precrossed-module condition (PCM) and the Peiffer condition (PFF) are
each decided twice — once through twisted-commutator vanishing, once through
the classical pointwise identity — and any disagreement raises
InternalCrossCheckFailure: the equivalence of the two routes is exactly what
this package exists to enforce.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .actions import (
    Action,
    SplitExtension,
    all_actions,
    conjugation_action,
    semidirect_product,
    validate_action,
)
from .commutators import cooperator, extension_cospan, relative_commutator
from .errors import (
    DomainMismatch,
    InternalCrossCheckFailure,
    NotInjective,
    NotSurjective,
)
from .groups import FiniteGroup, center, is_normal, subgroup_as_group
from .homs import (
    Homomorphism,
    all_homomorphisms,
    compose,
    identity_hom,
    kernel_image,
)

CLASS_NORMAL_SUBOBJECT = "normal-subobject"
CLASS_CENTRAL_EXTENSION = "central-extension"
CLASS_GENERAL = "general"
CLASS_NOT_XMOD = "not-xmod"


class PrecrossedCandidate:
    """A boundary/action couple, with its split extension cached."""

    __slots__ = ("boundary", "action", "extension")

    def __init__(
        self,
        boundary: Homomorphism,
        action: Action,
        extension: SplitExtension | None = None,
    ):
        if boundary.source != action.acted or boundary.target != action.actor:
            raise DomainMismatch("boundary must map the acted group to the actor group")
        self.boundary = boundary
        self.action = action
        self.extension = extension if extension is not None else semidirect_product(action)

    def __repr__(self) -> str:
        return (
            f"PrecrossedCandidate({self.boundary.source.label!r} -> "
            f"{self.boundary.target.label!r})"
        )


@dataclass(frozen=True)
class XModReport:
    pcm: bool
    pff: bool
    is_precrossed: bool
    is_crossed: bool
    connecting: Homomorphism | None
    classification: str


@lru_cache(maxsize=None)
def _conjugation_extension(g: FiniteGroup) -> SplitExtension:
    return semidirect_product(conjugation_action(g))


def check_pcm(cand: PrecrossedCandidate) -> tuple[bool, Homomorphism | None]:
    """Is the twisted commutator of (boundary, identity) trivial?

    Three routes must agree: commutator vanishing, existence of the
    connecting map c with c o e = 1 and c o k = boundary, and the pointwise
    equivariance d(xi_b(x)) = b * d(x) * b^-1.
    """
    ext = cand.extension
    bnd = cand.boundary
    b_grp = bnd.target
    cospan = extension_cospan(ext)

    commut = relative_commutator(cospan, bnd, identity_hom(b_grp))
    witness = cooperator(cospan, bnd, identity_hom(b_grp))

    xi = cand.action
    classical = True
    for b in b_grp.elements():
        lhs = bnd.map[xi.table[b]]
        rhs = b_grp.mul[b_grp.mul[b, bnd.map], b_grp.inv[b]]
        if not np.array_equal(lhs, rhs):
            classical = False
            break

    categorical = commut.is_trivial
    if categorical != (witness is not None) or categorical != classical:
        raise InternalCrossCheckFailure(
            f"PCM routes disagree on {cand!r}: commutator trivial={categorical}, "
            f"cooperator={witness is not None}, equivariance={classical}"
        )
    return categorical, witness


def check_pff(cand: PrecrossedCandidate) -> bool:
    """Is the commutator of (k, e o boundary) twisted by conjugation trivial?

    Cross-checked against the pointwise Peiffer identity
    xi_{d(x)}(x') = x * x' * x^-1.
    """
    x_grp = cand.boundary.source
    conj_ext = _conjugation_extension(x_grp)
    ext = cand.extension
    f = ext.k
    g = compose(ext.e, cand.boundary)
    commut = relative_commutator(extension_cospan(conj_ext), f, g)

    xi = cand.action
    classical = True
    conj = conjugation_action(x_grp)
    for x in x_grp.elements():
        if not np.array_equal(xi.table[cand.boundary(x)], conj.table[x]):
            classical = False
            break

    categorical = commut.is_trivial
    if categorical != classical:
        raise InternalCrossCheckFailure(
            f"PFF routes disagree on {cand!r}: commutator trivial={categorical}, "
            f"Peiffer identity={classical}"
        )
    return categorical


def is_central(bnd: Homomorphism) -> bool:
    """Does the kernel of bnd commute with the whole source group?

    Computed as triviality of the classical commutator of the kernel
    inclusion with the identity, cross-checked against kernel <= center.
    """
    from .commutators import huq_commutator

    ker, _ = kernel_image(bnd)
    ker_grp, incl = subgroup_as_group(ker)
    categorical = huq_commutator(incl, identity_hom(bnd.source)).is_trivial
    classical = set(ker.elements) <= set(center(bnd.source).elements)
    if categorical != classical:
        raise InternalCrossCheckFailure(
            f"centrality routes disagree on {bnd!r}: commutator={categorical}, "
            f"kernel-in-center={classical}"
        )
    return categorical


def analyze(cand: PrecrossedCandidate) -> XModReport:
    pcm, witness = check_pcm(cand)
    pff = check_pff(cand)
    crossed = pcm and pff
    if not crossed:
        classification = CLASS_NOT_XMOD
    elif cand.boundary.is_injective():
        classification = CLASS_NORMAL_SUBOBJECT
    elif cand.boundary.is_surjective() and is_central(cand.boundary):
        classification = CLASS_CENTRAL_EXTENSION
    else:
        classification = CLASS_GENERAL
    return XModReport(
        pcm=pcm,
        pff=pff,
        is_precrossed=pcm,
        is_crossed=crossed,
        connecting=witness,
        classification=classification,
    )


def action_for_central_extension(bnd: Homomorphism) -> Action | None:
    """For surjective bnd: the action xi_b(x) = x0 * x * x0^-1 with d(x0) = b.

    Exists (and is then unique) exactly when the kernel is central; the
    formula is re-verified across every preimage choice.
    """
    if not bnd.is_surjective():
        raise NotSurjective(f"{bnd!r} is not surjective")
    if not is_central(bnd):
        return None
    x_grp, b_grp = bnd.source, bnd.target
    table = np.zeros((b_grp.order, x_grp.order), dtype=np.int32)
    filled = np.zeros(b_grp.order, dtype=bool)
    for x0 in x_grp.elements():
        b = bnd(x0)
        row = x_grp.mul[x_grp.mul[x0, :], x_grp.inv[x0]]
        if not filled[b]:
            table[b] = row
            filled[b] = True
        elif not np.array_equal(table[b], row):
            raise InternalCrossCheckFailure(
                "central extension action is not well defined across preimages"
            )
    return validate_action(b_grp, x_grp, table)


def normal_subobject_action(incl: Homomorphism) -> Action | None:
    """For injective incl: conjugation of the target restricted to the image.

    Exists exactly when the image is normal; the resulting couple is then
    checked to pass both PCM and PFF.
    """
    if not incl.is_injective():
        raise NotInjective(f"{incl!r} is not injective")
    _, img = kernel_image(incl)
    if not is_normal(img):
        return None
    x_grp, b_grp = incl.source, incl.target
    pos = {int(v): i for i, v in enumerate(incl.map)}
    table = np.zeros((b_grp.order, x_grp.order), dtype=np.int32)
    for b in b_grp.elements():
        for x in x_grp.elements():
            table[b, x] = pos[b_grp.conjugate(b, incl(x))]
    xi = validate_action(b_grp, x_grp, table)
    report = analyze(PrecrossedCandidate(incl, xi))
    if not report.is_crossed:
        raise InternalCrossCheckFailure(
            "restricted conjugation on a normal image must be a crossed module"
        )
    return xi


def census(
    x_grp: FiniteGroup, b_grp: FiniteGroup
) -> tuple[tuple[PrecrossedCandidate, XModReport], ...]:
    """Analyze every (boundary, action) couple, boundary-major order."""
    actions = all_actions(b_grp, x_grp)
    extensions = [semidirect_product(xi) for xi in actions]
    out = []
    for bnd in all_homomorphisms(x_grp, b_grp):
        for xi, ext in zip(actions, extensions):
            cand = PrecrossedCandidate(bnd, xi, ext)
            out.append((cand, analyze(cand)))
    return tuple(out)


def census_summary(
    entries: tuple[tuple[PrecrossedCandidate, XModReport], ...]
) -> tuple[int, int, int]:
    """(total, precrossed, crossed) counts of a census."""
    total = len(entries)
    pre = sum(1 for _, r in entries if r.is_precrossed)
    crossed = sum(1 for _, r in entries if r.is_crossed)
    return total, pre, crossed
