"""Relative commutativity and commutators.

Two coterminal maps f: X -> Y, g: B -> Y commute relative to a cospan
(k: X -> A, s: B -> A) when a cooperator phi: A -> Y with phi o k = f and
phi o s = g exists.  The commutator of f and g relative to (k, s) measures
the failure: it collects the values [f,g](w) of all formal words w over X
and B that map to the identity under [k,s].

Two algorithms compute the commutator:

* the fiber method (normative): close the generator pairs
  {(k(x), f(x))} u {(s(b), g(b))} to a subgroup R <= A x Y and return
  {y : (0, y) in R} — this is exactly the image of the word kernel, since R
  is the set of all ([k,s](w), [f,g](w));
* the word oracle (test-only): enumerate word values level by level over the
  word length and close the collected kernel hits.

The fiber method requires the cospan to be extremally epic (images jointly
generate), which is what makes the commutator detect commutativity.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import _kernels
from .errors import CospanNotExtremallyEpic, DomainMismatch, SearchBudgetExceeded, SizeCapExceeded
from .groups import FiniteGroup, Subgroup, direct_product, generating_sequence, subgroup_closure
from .homs import Cospan, Homomorphism, identity_hom, is_jointly_generating, make_hom, zero_hom

# State budget for the pair-closure worklist (a byte per state of A x Y).
# Configured separately from the constructed-group size cap: acceptance-scale
# sweeps legitimately reach |A|*|Y| in the tens of thousands.
DEFAULT_STATE_CAP = 4_000_000


@dataclass(frozen=True)
class CommutatorResult:
    """A computed commutator: a subgroup of the common codomain of (f, g)."""

    value: Subgroup
    method: str  # "fiber" | "word-oracle"
    cospan_used: Cospan

    @property
    def is_trivial(self) -> bool:
        return self.value.is_trivial()


def _check_instance(c: Cospan, f: Homomorphism, g: Homomorphism) -> None:
    if f.source != c.left.source:
        raise DomainMismatch("f must start at the source of the left cospan leg")
    if g.source != c.right.source:
        raise DomainMismatch("g must start at the source of the right cospan leg")
    if f.target != g.target:
        raise DomainMismatch("f and g must share their codomain")
    if not is_jointly_generating(c):
        raise CospanNotExtremallyEpic()


def _edge_lists(c: Cospan, f: Homomorphism, g: Homomorphism) -> tuple[np.ndarray, np.ndarray]:
    """Generator pairs ((k(x), f(x)) for x in gens X) + ((s(b), g(b)) for b in gens B)."""
    gens_x = generating_sequence(f.source)
    gens_b = generating_sequence(g.source)
    in_a = [c.left(x) for x in gens_x] + [c.right(b) for b in gens_b]
    in_y = [f(x) for x in gens_x] + [g(b) for b in gens_b]
    return np.asarray(in_a, dtype=np.int32), np.asarray(in_y, dtype=np.int32)


def cooperator(c: Cospan, f: Homomorphism, g: Homomorphism) -> Homomorphism | None:
    """The unique phi with phi o k = f and phi o s = g, or None.

    Forced assignment from phi(0) = 0 along the generator edges; since the
    cospan images generate the codomain, every value is forced, so a conflict
    or a failed final verification conclusively rules the cooperator out.
    """
    _check_instance(c, f, g)
    a, y = c.apex, f.target
    gens_a, imgs_y = _edge_lists(c, f, g)
    status, phi = _kernels.forced_extension(a.mul, y.mul, gens_a, imgs_y)
    if status != 0:
        return None
    arr = np.asarray(phi, dtype=np.int32)
    if _kernels.hom_violation(a.mul, y.mul, arr) is not None:
        return None
    if not np.array_equal(arr[c.left.map], f.map):
        return None
    if not np.array_equal(arr[c.right.map], g.map):
        return None
    return Homomorphism(a, y, arr)


def relative_commutator(
    c: Cospan, f: Homomorphism, g: Homomorphism, state_cap: int | None = None
) -> CommutatorResult:
    """The commutator of f and g relative to the cospan, by the fiber method."""
    _check_instance(c, f, g)
    cap = DEFAULT_STATE_CAP if state_cap is None else state_cap
    a, y = c.apex, f.target
    states = a.order * y.order
    if states > cap:
        raise SizeCapExceeded(states, cap, what="pair-closure state space")
    gens_a, imgs_y = _edge_lists(c, f, g)
    fiber, _ = _kernels.product_closure_fiber(a.mul, y.mul, gens_a, imgs_y)
    return CommutatorResult(Subgroup(y, fiber), "fiber", c)


def word_oracle_commutator(
    c: Cospan, f: Homomorphism, g: Homomorphism, max_len: int
) -> CommutatorResult:
    """Independent oracle: enumerate words over X and B of length <= max_len.

    A word alternates letters from X and B; its images under [k,s] and [f,g]
    are tracked together, duplicates merged per (value pair, last factor).
    Every word whose [k,s]-value is the identity contributes its [f,g]-value;
    the result is the closure of the collected set.  Monotone in max_len and
    equal to the fiber method once saturated.
    """
    _check_instance(c, f, g)
    values = _word_values_by_length(c, f, g, max_len)
    return CommutatorResult(
        subgroup_closure(f.target, values[max_len]), "word-oracle", c
    )


def _word_values_by_length(
    c: Cospan,
    f: Homomorphism,
    g: Homomorphism,
    max_len: int,
    stop_when_exhausted: bool = False,
) -> list[set[int]]:
    """values[L] = set of [f,g](w) over words w of length <= L in the kernel of [k,s].

    States are (value in A, value in Y, factor of the last letter); letters
    range over all elements of X and of B, identity letters included, so the
    level sets grow monotonically with the length.  A level that introduces
    no new state implies all later levels are empty.
    """
    a, y = c.apex, f.target
    x_grp, b_grp = f.source, g.source
    x_letters = [(c.left(x), f(x)) for x in x_grp.elements()]
    b_letters = [(c.right(b), g(b)) for b in b_grp.elements()]
    mul_a, mul_y = a.mul, y.mul

    start = (0, 0, -1)  # empty word, no last factor
    level = {start}
    seen = {start}
    collected: set[int] = {0}
    out = [set(collected)]
    for _ in range(max_len):
        nxt = set()
        for av, yv, last in level:
            row_a = mul_a[av]
            row_y = mul_y[yv]
            if last != 0:
                for la, ly in x_letters:
                    st = (int(row_a[la]), int(row_y[ly]), 0)
                    if st not in seen:
                        seen.add(st)
                        nxt.add(st)
            if last != 1:
                for la, ly in b_letters:
                    st = (int(row_a[la]), int(row_y[ly]), 1)
                    if st not in seen:
                        seen.add(st)
                        nxt.add(st)
        if stop_when_exhausted and not nxt:
            break
        for av, yv, _last in nxt:
            if av == 0:
                collected.add(yv)
        out.append(set(collected))
        level = nxt
    return out


def saturate_word_oracle(
    c: Cospan, f: Homomorphism, g: Homomorphism, max_len: int | None = None
) -> tuple[CommutatorResult, int]:
    """Run the word enumeration to exhaustion.

    The level BFS ranges over a finite state space (word-value pairs plus the
    factor of the last letter), so once a level introduces no new state every
    later level is empty and the collected kernel values are those of *all*
    words, of any length.  Returns the exact saturated result and the last
    length that still introduced a state.  ``max_len`` guards runaway input:
    the default 2*|A|*|Y| + 1 bounds every instance.
    """
    values = _word_values_by_length(
        c,
        f,
        g,
        2 * c.apex.order * f.target.order + 1 if max_len is None else max_len,
        stop_when_exhausted=True,
    )
    result = CommutatorResult(
        subgroup_closure(f.target, values[-1]), "word-oracle", c
    )
    return result, len(values) - 1


@lru_cache(maxsize=None)
def product_cospan(x_grp: FiniteGroup, b_grp: FiniteGroup, size_cap: int | None = None) -> Cospan:
    """The classical cospan of product injections X -> X x B <- B."""
    _, _, (inj_x, inj_b) = direct_product(x_grp, b_grp, size_cap)
    return Cospan(inj_x, inj_b)


def huq_commutator(
    f: Homomorphism, g: Homomorphism, state_cap: int | None = None
) -> CommutatorResult:
    """The classical commutator: relative to the product-injection cospan.

    For subgroup inclusions this is the subgroup generated by commutators of
    the two images.
    """
    if f.target != g.target:
        raise DomainMismatch("f and g must share their codomain")
    return relative_commutator(product_cospan(f.source, g.source), f, g, state_cap)


def extension_cospan(ext) -> Cospan:
    """The (kernel, section) cospan of a split extension."""
    return Cospan(ext.k, ext.e)


def twisted_commutator(
    xi, f: Homomorphism, g: Homomorphism, state_cap: int | None = None
) -> CommutatorResult:
    """The commutator twisted by an action: relative to the cospan (k, e) of
    the split extension induced by xi."""
    from .actions import semidirect_product

    if f.source != xi.acted:
        raise DomainMismatch("f must start at the acted group")
    if g.source != xi.actor:
        raise DomainMismatch("g must start at the actor group")
    ext = semidirect_product(xi)
    return relative_commutator(extension_cospan(ext), f, g, state_cap)


def difference_commutator(
    f: Homomorphism, g: Homomorphism, state_cap: int | None = None
) -> CommutatorResult:
    """The commutator over the identity cospan: trivial iff f = g."""
    if f.source != g.source or f.target != g.target:
        raise DomainMismatch("f and g must be parallel")
    ident = identity_hom(f.source)
    return relative_commutator(Cospan(ident, ident), f, g, state_cap)


def subtractor(f: Homomorphism, g: Homomorphism) -> Homomorphism | None:
    """The subtractor of f: X -> Y along g: Y -> Z, if it exists.

    This is the cooperator of g and 0 over the cospan
    Y -(1,0)-> Y x X <-(f,1)- X, an instance of twisted commutativity for
    the conjugation-by-f action of X on Y.
    """
    if f.target != g.source:
        raise DomainMismatch("g must start at the codomain of f")
    y_grp, x_grp = f.target, f.source
    prod, _, (inj_y, _) = direct_product(y_grp, x_grp)
    graph_leg = make_hom(x_grp, prod, f.map.astype(np.int64) * x_grp.order + np.arange(x_grp.order))
    return cooperator(Cospan(inj_y, graph_leg), g, zero_hom(x_grp, g.target))
