"""Statement-by-statement verification sweeps.

Every identity the package relies on is checked here over concrete instance
families: detection of commutativity by commutator vanishing, oracle
agreement, equivariance translations, the precrossed/Peiffer conditions and
their classical forms, the special boundary shapes, the reflexive-graph
characterisations, round trips, and frozen census counts.

``run_all`` drives the `verify-paper` CLI command; the acceptance test suite
calls the individual sweeps at their contractual scales.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from importlib import resources

import numpy as np

from .actions import (
    Action,
    action_from_extension,
    all_actions,
    conjugation_action,
    semidirect_product,
    trivial_action,
)
from .commutators import (
    cooperator,
    difference_commutator,
    extension_cospan,
    huq_commutator,
    product_cospan,
    relative_commutator,
    saturate_word_oracle,
    twisted_commutator,
)
from .errors import TwistcommError
from .groups import (
    FiniteGroup,
    all_subgroups,
    automorphism_group,
    center,
    normal_closure,
    quotient,
    subgroup_as_group,
    subgroup_closure,
    validate_group,
)
from .homs import (
    Cospan,
    Homomorphism,
    all_homomorphisms,
    compose,
    find_isomorphism,
    identity_hom,
    kernel_image,
)
from .workspace import catalog
from .xmod import PrecrossedCandidate, analyze, census, census_summary, check_pcm, check_pff, is_central

FAMILY7 = ("Z2", "Z3", "Z4", "klein4", "S3", "D4", "Q8")
FAMILY5 = ("Z2", "Z3", "Z4", "klein4", "S3")

AUT_ORDER_FIXTURES = {"klein4": 6, "S3": 6, "Z8": 4}


@dataclass(frozen=True)
class VerifyConfig:
    """Scale knobs, all derived from one order bound.

    At the default ``max_order=8`` the derived caps land exactly on the
    contractual scales: cospans and codomains up to order 24, oracle
    instances up to order 12, censuses up to total order 48 and Peiffer
    sweeps up to total order 16.
    """

    max_order: int = 8

    @property
    def apex_cap(self) -> int:
        return 3 * self.max_order

    @property
    def target_cap(self) -> int:
        return 3 * self.max_order

    @property
    def oracle_cap(self) -> int:
        return (3 * self.max_order) // 2

    @property
    def catalog_cap(self) -> int:
        return 3 * self.max_order

    @property
    def census_total_cap(self) -> int:
        return 6 * self.max_order

    @property
    def pff_total_cap(self) -> int:
        return 2 * self.max_order


@dataclass
class StatementResult:
    statement: str
    instances: int
    failures: int
    millis: int
    notes: tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return self.failures == 0 and self.instances > 0


class _Recorder:
    """Counts instances and collects the first few failure messages."""

    def __init__(self):
        self.instances = 0
        self.failures = 0
        self.notes: list[str] = []

    def check(self, ok: bool, message: str = "") -> None:
        self.instances += 1
        if not ok:
            self.failures += 1
            if len(self.notes) < 5:
                self.notes.append(message)


def _finish(name: str, rec: _Recorder, started: float) -> StatementResult:
    return StatementResult(
        statement=name,
        instances=rec.instances,
        failures=rec.failures,
        millis=int((time.perf_counter() - started) * 1000),
        notes=tuple(rec.notes),
    )


def _family(cfg: VerifyConfig, names: tuple[str, ...]) -> list[tuple[str, FiniteGroup]]:
    ws = catalog()
    return [(n, ws.groups[n]) for n in names if ws.groups[n].order <= cfg.max_order]


def _catalog_upto(cfg: VerifyConfig, cap: int | None = None) -> list[tuple[str, FiniteGroup]]:
    ws = catalog()
    bound = cfg.catalog_cap if cap is None else cap
    return sorted(
        ((n, g) for n, g in ws.groups.items() if g.order <= bound),
        key=lambda item: (item[1].order, item[0]),
    )


CensusMap = dict[tuple[str, str], tuple]


def build_census_map(cfg: VerifyConfig, jobs: int = 1) -> CensusMap:
    """Census every family pair within the total-order bound, in parallel
    when asked; insertion order is the deterministic pair order."""
    fam = _family(cfg, FAMILY7)
    pairs = [
        (xn, bn)
        for xn, xg in fam
        for bn, bg in fam
        if xg.order * bg.order <= cfg.census_total_cap
    ]
    groups = dict(fam)

    def work(pair: tuple[str, str]):
        xn, bn = pair
        return census(groups[xn], groups[bn])

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(work, pairs))
    else:
        results = [work(p) for p in pairs]
    return dict(zip(pairs, results))


# --- individual statement sweeps -------------------------------------------


def verify_group_axioms(cfg: VerifyConfig) -> StatementResult:
    """Catalog tables satisfy the axioms; centers divide; Aut orders match
    their frozen values."""
    started = time.perf_counter()
    rec = _Recorder()
    ws = catalog()
    for name, g in sorted(ws.groups.items()):
        revalidated = validate_group(g.mul, name)
        rec.check(revalidated == g, f"{name} failed revalidation")
        rec.check(g.order % center(g).order == 0, f"|center| does not divide |{name}|")
    for name, expected in AUT_ORDER_FIXTURES.items():
        g = ws.groups[name]
        if g.order <= cfg.catalog_cap:
            aut, _ = automorphism_group(g)
            rec.check(
                aut.order == expected,
                f"|Aut({name})| = {aut.order}, expected {expected}",
            )
    return _finish("group-axioms", rec, started)


def _detection_cospans(cfg: VerifyConfig) -> list[tuple[str, Cospan]]:
    """Cospans from split extensions and from product injections."""
    fam = _family(cfg, FAMILY5)
    out: list[tuple[str, Cospan]] = []
    for bn, bg in fam:
        for xn, xg in fam:
            if xg.order * bg.order > cfg.apex_cap:
                continue
            for i, xi in enumerate(all_actions(bg, xg)):
                ext = semidirect_product(xi)
                out.append((f"sdp:{xn}:{bn}:{i}", extension_cospan(ext)))
            out.append((f"prod:{xn}:{bn}", product_cospan(xg, bg)))
    return out


def verify_detection(cfg: VerifyConfig) -> StatementResult:
    """A cooperator exists exactly when the relative commutator vanishes."""
    started = time.perf_counter()
    rec = _Recorder()
    fam = _family(cfg, FAMILY5)
    for tag, cospan in _detection_cospans(cfg):
        x_grp = cospan.left.source
        b_grp = cospan.right.source
        for yn, yg in fam:
            if yg.order > cfg.target_cap:
                continue
            for f in all_homomorphisms(x_grp, yg):
                for g in all_homomorphisms(b_grp, yg):
                    exists = cooperator(cospan, f, g) is not None
                    trivial = relative_commutator(cospan, f, g).is_trivial
                    rec.check(
                        exists == trivial,
                        f"detection fails on {tag} into {yn}: "
                        f"cooperator={exists}, trivial={trivial}",
                    )
    return _finish("commutator-detection", rec, started)


def verify_word_oracle(cfg: VerifyConfig) -> StatementResult:
    """The exhausted word enumeration equals the fiber-method value."""
    started = time.perf_counter()
    rec = _Recorder()
    fam = _family(cfg, FAMILY5)
    for tag, cospan in _detection_cospans(cfg):
        if cospan.apex.order > cfg.oracle_cap:
            continue
        x_grp = cospan.left.source
        b_grp = cospan.right.source
        for yn, yg in fam:
            if yg.order > cfg.oracle_cap:
                continue
            for f in all_homomorphisms(x_grp, yg):
                for g in all_homomorphisms(b_grp, yg):
                    oracle, _ = saturate_word_oracle(cospan, f, g)
                    fiber = relative_commutator(cospan, f, g)
                    rec.check(
                        oracle.value.elements == fiber.value.elements,
                        f"word oracle disagrees on {tag} into {yn}",
                    )
    return _finish("word-oracle-agreement", rec, started)


def verify_trivial_action_huq(cfg: VerifyConfig) -> StatementResult:
    """Commutators twisted by a trivial action equal the classical ones."""
    started = time.perf_counter()
    rec = _Recorder()
    small = _catalog_upto(cfg, cap=cfg.oracle_cap)
    for xn, xg in small:
        for bn, bg in small:
            xi = trivial_action(bg, xg)
            ext = semidirect_product(xi)
            cospan = extension_cospan(ext)
            for yn, yg in small:
                for f in all_homomorphisms(xg, yg):
                    for g in all_homomorphisms(bg, yg):
                        twisted = relative_commutator(cospan, f, g)
                        classical = huq_commutator(f, g)
                        rec.check(
                            twisted.value.elements == classical.value.elements,
                            f"trivial-action commutator differs on "
                            f"({xn},{bn})->{yn}",
                        )
    return _finish("trivial-action-classical", rec, started)


def verify_huq_subgroups(cfg: VerifyConfig) -> StatementResult:
    """For subgroup inclusions, the classical commutator is the subgroup
    generated by elementwise commutators."""
    started = time.perf_counter()
    rec = _Recorder()
    for name, g in _catalog_upto(cfg):
        subs = all_subgroups(g)
        reified = [subgroup_as_group(s) for s in subs]
        for ks, (_, incl_k) in zip(subs, reified):
            for ls, (_, incl_l) in zip(subs, reified):
                value = huq_commutator(incl_k, incl_l).value.elements
                brute = subgroup_closure(
                    g,
                    {
                        g.commutator(a, b)
                        for a in ks.elements
                        for b in ls.elements
                    },
                ).elements
                rec.check(
                    value == brute,
                    f"Huq value differs from commutator subgroup in {name}",
                )
    return _finish("huq-subgroup-pairs", rec, started)


def verify_equivariance(cfg: VerifyConfig) -> StatementResult:
    """Equivariance into a conjugation action, cooperator existence over the
    extension cospan, and commutator vanishing all agree; and equivariance
    for a pair of actions matches commutativity of the composed legs."""
    started = time.perf_counter()
    rec = _Recorder()
    fam = _family(cfg, FAMILY5)
    from .actions import is_equivariant

    family_actions: list[tuple[str, Action]] = []
    for bn, bg in fam:
        for xn, xg in fam:
            for i, xi in enumerate(all_actions(bg, xg)):
                family_actions.append((f"{xn}:{bn}:{i}", xi))

    for tag, xi in family_actions:
        ext = semidirect_product(xi)
        cospan = extension_cospan(ext)
        for yn, yg in fam:
            conj_y = conjugation_action(yg)
            for f in all_homomorphisms(xi.acted, yg):
                for g in all_homomorphisms(xi.actor, yg):
                    equivariant = is_equivariant(f, g, xi, conj_y)
                    via_coop = cooperator(cospan, f, g) is not None
                    via_commut = relative_commutator(cospan, f, g).is_trivial
                    rec.check(
                        equivariant == via_coop == via_commut,
                        f"three-way equivariance split on {tag} into {yn}: "
                        f"{equivariant}/{via_coop}/{via_commut}",
                    )

    # corollary form: equivariance for (xi, xi2) = commutativity of the
    # composed legs over the cospan of xi
    small_actions = [
        (tag, xi)
        for tag, xi in family_actions
        if xi.acted.order * xi.actor.order <= cfg.oracle_cap
    ]
    for tag, xi in small_actions:
        cospan = extension_cospan(semidirect_product(xi))
        for tag2, xi2 in small_actions:
            ext2 = semidirect_product(xi2)
            for f in all_homomorphisms(xi.acted, xi2.acted):
                for g in all_homomorphisms(xi.actor, xi2.actor):
                    equivariant = is_equivariant(f, g, xi, xi2)
                    lifted = (
                        cooperator(cospan, compose(ext2.k, f), compose(ext2.e, g))
                        is not None
                    )
                    rec.check(
                        equivariant == lifted,
                        f"corollary form fails on {tag} -> {tag2}",
                    )
    return _finish("equivariance-three-way", rec, started)


def verify_semidirect_conjugation(cfg: VerifyConfig) -> StatementResult:
    """In the split extension of an action, conjugating a kernel element by
    a section image realises the action: k(xi_b(x)) = e(b) k(x) e(b)^-1."""
    started = time.perf_counter()
    rec = _Recorder()
    fam = _family(cfg, FAMILY5)
    for bn, bg in fam:
        for xn, xg in fam:
            for i, xi in enumerate(all_actions(bg, xg)):
                ext = semidirect_product(xi)
                t = ext.total
                ok = True
                for b in bg.elements():
                    eb = ext.e(b)
                    for x in xg.elements():
                        if ext.k(xi(b, x)) != t.conjugate(eb, ext.k(x)):
                            ok = False
                rec.check(ok, f"conjugation identity fails for {xn}:{bn}:{i}")
    return _finish("semidirect-conjugation", rec, started)


def verify_pcm(cfg: VerifyConfig, census_map: CensusMap | None = None) -> StatementResult:
    """Census-wide agreement of the commutator, cooperator and classical
    routes of the precrossed-module condition (disagreement raises)."""
    started = time.perf_counter()
    rec = _Recorder()
    cmap = census_map if census_map is not None else build_census_map(cfg)
    for (xn, bn), entries in cmap.items():
        for cand, report in entries:
            try:
                pcm, witness = check_pcm(cand)
                ok = pcm == report.pcm and (witness is not None) == pcm
                rec.check(ok, f"PCM inconsistent for census ({xn},{bn})")
            except TwistcommError as exc:
                rec.check(False, f"PCM cross-check raised on ({xn},{bn}): {exc}")
    return _finish("pcm-cross-check", rec, started)


def verify_pff_chain(
    cfg: VerifyConfig, census_map: CensusMap | None = None
) -> StatementResult:
    """On precrossed entries: the Peiffer condition, star-multiplicativity
    and multiplicativity of the associated graph coincide."""
    from .graphs import graph_of_precrossed, is_multiplicative, is_star_multiplicative

    started = time.perf_counter()
    rec = _Recorder()
    cmap = census_map if census_map is not None else build_census_map(cfg)
    for (xn, bn), entries in cmap.items():
        for cand, report in entries:
            if not report.is_precrossed:
                continue
            if cand.extension.total.order > cfg.pff_total_cap:
                continue
            graph = graph_of_precrossed(cand)
            star = is_star_multiplicative(graph)
            mult = is_multiplicative(graph)
            rec.check(
                report.pff == star == mult,
                f"PFF chain splits on ({xn},{bn}): "
                f"pff={report.pff}, star={star}, mult={mult}",
            )
    return _finish("pff-chain", rec, started)


def verify_monic_boundary(cfg: VerifyConfig) -> StatementResult:
    """Injective boundaries: some compatible action exists iff the image is
    normal; the action is then unique and the Peiffer condition is free."""
    started = time.perf_counter()
    rec = _Recorder()
    from .groups import is_normal

    for name, g in _catalog_upto(cfg):
        for sub in all_subgroups(g):
            x_grp, incl = subgroup_as_group(sub)
            actions = all_actions(g, x_grp)
            extensions = [semidirect_product(xi) for xi in actions]
            matching = [
                xi
                for xi, ext in zip(actions, extensions)
                if check_pcm(PrecrossedCandidate(incl, xi, ext))[0]
            ]
            normal = is_normal(sub)
            rec.check(
                bool(matching) == normal,
                f"precrossed action existence vs normality differs for "
                f"order-{sub.order} subgroup of {name}",
            )
            if normal:
                rec.check(
                    len(matching) == 1,
                    f"compatible action not unique for subgroup of {name}",
                )
                rec.check(
                    check_pff(PrecrossedCandidate(incl, matching[0])),
                    f"Peiffer condition not automatic for subgroup of {name}",
                )
    return _finish("monic-boundary", rec, started)


def verify_epi_boundary(cfg: VerifyConfig) -> StatementResult:
    """Surjective boundaries: a crossed structure exists iff the kernel is
    central, and is then unique; crossed entries satisfy the centrality
    statement by construction of is_central."""
    started = time.perf_counter()
    rec = _Recorder()
    cat = _catalog_upto(cfg)
    for xn, xg in cat:
        for bn, bg in cat:
            if bg.order > xg.order:
                continue
            surjections = [h for h in all_homomorphisms(xg, bg) if h.is_surjective()]
            if not surjections:
                continue
            actions = all_actions(bg, xg)
            extensions = [semidirect_product(xi) for xi in actions]
            for bnd in surjections:
                crossed = [
                    xi
                    for xi, ext in zip(actions, extensions)
                    if analyze(PrecrossedCandidate(bnd, xi, ext)).is_crossed
                ]
                central = is_central(bnd)
                rec.check(
                    bool(crossed) == central,
                    f"crossed existence vs centrality differs for {xn}->{bn}",
                )
                if central:
                    rec.check(
                        len(crossed) == 1,
                        f"crossed action not unique for {xn}->{bn}",
                    )
                for xi in crossed:
                    ker, _ = kernel_image(bnd)
                    ker_grp, incl = subgroup_as_group(ker)
                    rec.check(
                        huq_commutator(incl, identity_hom(xg)).is_trivial,
                        f"kernel not central on a crossed entry {xn}->{bn}",
                    )
    return _finish("epi-boundary", rec, started)


def verify_graph_lemmas(
    cfg: VerifyConfig, census_map: CensusMap | None = None
) -> StatementResult:
    """Normalisation reads off relation-ness and connectedness; pi0 is
    trivial iff connected and is the cokernel of the boundary."""
    from .graphs import (
        graph_of_precrossed,
        is_connected,
        is_reflexive_relation,
        normalization,
        pi0,
    )

    started = time.perf_counter()
    rec = _Recorder()
    cmap = census_map if census_map is not None else build_census_map(cfg)
    for (xn, bn), entries in cmap.items():
        for cand, report in entries:
            if not report.is_precrossed:
                continue
            graph = graph_of_precrossed(cand)
            norm = normalization(graph)
            try:
                rel = is_reflexive_relation(graph)
                rec.check(
                    rel == norm.is_injective(),
                    f"relation lemma fails on ({xn},{bn})",
                )
                conn = is_connected(graph)
                rec.check(
                    conn == norm.is_surjective(),
                    f"connectedness lemma fails on ({xn},{bn})",
                )
                p0 = pi0(graph)
                rec.check(
                    (p0.order == 1) == conn,
                    f"pi0 triviality lemma fails on ({xn},{bn})",
                )
                _, img = kernel_image(cand.boundary)
                coker, _ = quotient(
                    cand.boundary.target,
                    normal_closure(cand.boundary.target, img.elements),
                )
                rec.check(
                    find_isomorphism(p0, coker) is not None,
                    f"pi0 is not the cokernel on ({xn},{bn})",
                )
            except TwistcommError as exc:
                rec.check(False, f"graph lemma raised on ({xn},{bn}): {exc}")
    return _finish("graph-lemmas", rec, started)


def verify_round_trips(cfg: VerifyConfig) -> StatementResult:
    """action -> extension -> action is the identity on tables; extension ->
    action -> extension is isomorphic over k, d, e; serialisation round-trips."""
    started = time.perf_counter()
    rec = _Recorder()
    fam = _family(cfg, FAMILY5)
    for bn, bg in fam:
        for xn, xg in fam:
            for i, xi in enumerate(all_actions(bg, xg)):
                ext = semidirect_product(xi)
                rec.check(
                    action_from_extension(ext) == xi,
                    f"action round trip fails for {xn}:{bn}:{i}",
                )
                back = semidirect_product(action_from_extension(ext))
                # comparison iso: (x, b) |-> k(x) * e(b), pairs at x + |X| b
                h_map = [
                    int(ext.total.mul[ext.k(p % xg.order), ext.e(p // xg.order)])
                    for p in range(back.total.order)
                ]
                from .homs import make_hom

                h = make_hom(back.total, ext.total, h_map)
                ok = (
                    h.is_bijective()
                    and np.array_equal(h.map[back.k.map], ext.k.map)
                    and np.array_equal(h.map[back.e.map], ext.e.map)
                    and np.array_equal(ext.d.map[h.map], back.d.map)
                )
                rec.check(ok, f"extension round trip fails for {xn}:{bn}:{i}")

    from .workspace import Workspace, parse, serialize

    ws = catalog()
    s3, z2, z3 = ws.groups["S3"], ws.groups["Z2"], ws.groups["Z3"]
    sgn = [h for h in all_homomorphisms(s3, z2) if h.is_surjective()][0]
    ws.add_hom("sgn", sgn, "S3", "Z2")
    flip = [a for a in all_actions(z2, z3) if not a.is_trivial()][0]
    ws.add_action("flip", flip, "Z2", "Z3")
    text = serialize(ws)
    reparsed = parse(text)
    rec.check(reparsed == ws, "parse(serialize) is not the identity")
    rec.check(serialize(reparsed) == text, "serialisation is not byte-stable")
    return _finish("round-trips", rec, started)


def _census_fixture_rows() -> dict[tuple[str, str], tuple[int, int, int]]:
    data = resources.files("twistcomm.data").joinpath("census_counts.tsv").read_text()
    out: dict[tuple[str, str], tuple[int, int, int]] = {}
    for line in data.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        xn, bn, total, pre, crossed = line.split("\t")
        out[(xn, bn)] = (int(total), int(pre), int(crossed))
    return out


def verify_census_counts(
    cfg: VerifyConfig, census_map: CensusMap | None = None
) -> StatementResult:
    """Live census summaries equal the committed regression counts."""
    started = time.perf_counter()
    rec = _Recorder()
    cmap = census_map if census_map is not None else build_census_map(cfg)
    fixtures = _census_fixture_rows()
    for pair, entries in cmap.items():
        expected = fixtures.get(pair)
        got = census_summary(entries)
        rec.check(
            expected == got,
            f"census counts for {pair} = {got}, fixture says {expected}",
        )
    return _finish("census-fixtures", rec, started)


def _bounded_cospans(cfg: VerifyConfig, cap: int) -> list[tuple[str, Cospan]]:
    return [
        (tag, cospan)
        for tag, cospan in _detection_cospans(cfg)
        if cospan.apex.order <= cap
    ]


def verify_postcomposition(cfg: VerifyConfig) -> StatementResult:
    """If f, g commute then h o f, h o g commute with cooperator h o phi;
    the converse holds for injective h."""
    started = time.perf_counter()
    rec = _Recorder()
    fam = _family(cfg, FAMILY5)
    for tag, cospan in _bounded_cospans(cfg, cfg.oracle_cap):
        x_grp = cospan.left.source
        b_grp = cospan.right.source
        for yn, yg in fam:
            if yg.order > cfg.max_order:
                continue
            for f in all_homomorphisms(x_grp, yg):
                for g in all_homomorphisms(b_grp, yg):
                    phi = cooperator(cospan, f, g)
                    for zn, zg in fam:
                        if zg.order > cfg.max_order:
                            continue
                        for h in all_homomorphisms(yg, zg):
                            hf, hg = compose(h, f), compose(h, g)
                            post = cooperator(cospan, hf, hg)
                            if phi is not None:
                                rec.check(
                                    post is not None
                                    and np.array_equal(post.map, h.map[phi.map]),
                                    f"postcomposition formula fails on {tag}",
                                )
                            elif h.is_injective():
                                rec.check(
                                    post is None,
                                    f"injective postcomposition converse fails on {tag}",
                                )
    return _finish("postcomposition", rec, started)


def verify_precomposition(cfg: VerifyConfig) -> StatementResult:
    """Cooperators compose across a morphism of cospans."""
    started = time.perf_counter()
    rec = _Recorder()
    fam = _family(cfg, FAMILY5)
    cospans = _bounded_cospans(cfg, cfg.max_order)
    for tag2, inner in cospans:  # (k', s') with legs X', B'
        x2, b2 = inner.left.source, inner.right.source
        for tag, outer in cospans:  # (k, s) with legs X, B
            x1, b1 = outer.left.source, outer.right.source
            for x_map in all_homomorphisms(x2, x1):
                for y_map in all_homomorphisms(b2, b1):
                    psi = cooperator(
                        inner, compose(outer.left, x_map), compose(outer.right, y_map)
                    )
                    if psi is None:
                        continue
                    for yn, yg in fam:
                        if yg.order > cfg.max_order:
                            continue
                        for f in all_homomorphisms(x1, yg):
                            for g in all_homomorphisms(b1, yg):
                                phi = cooperator(outer, f, g)
                                if phi is None:
                                    continue
                                expected = compose(phi, psi)
                                got = cooperator(
                                    inner, compose(f, x_map), compose(g, y_map)
                                )
                                rec.check(
                                    got == expected,
                                    f"precomposition formula fails on {tag2}->{tag}",
                                )
    return _finish("precomposition", rec, started)


def verify_direct_image(cfg: VerifyConfig) -> StatementResult:
    """The commutator of h o f and h o g is the image under h of the
    commutator of f and g."""
    started = time.perf_counter()
    rec = _Recorder()
    fam = _family(cfg, FAMILY5)
    for tag, cospan in _bounded_cospans(cfg, cfg.oracle_cap):
        x_grp = cospan.left.source
        b_grp = cospan.right.source
        for yn, yg in fam:
            if yg.order > cfg.max_order:
                continue
            for f in all_homomorphisms(x_grp, yg):
                for g in all_homomorphisms(b_grp, yg):
                    base = relative_commutator(cospan, f, g).value
                    for zn, zg in fam:
                        if zg.order > cfg.max_order:
                            continue
                        for h in all_homomorphisms(yg, zg):
                            mapped = tuple(sorted({h(v) for v in base.elements}))
                            pushed = relative_commutator(
                                cospan, compose(h, f), compose(h, g)
                            ).value.elements
                            rec.check(
                                mapped == pushed,
                                f"direct image fails on {tag} via {yn}->{zn}",
                            )
    return _finish("direct-image", rec, started)


def verify_difference_detection(cfg: VerifyConfig) -> StatementResult:
    """The commutator over the identity cospan vanishes exactly for equal maps."""
    started = time.perf_counter()
    rec = _Recorder()
    fam = _family(cfg, FAMILY5)
    for xn, xg in fam:
        for yn, yg in fam:
            homs = all_homomorphisms(xg, yg)
            for f in homs:
                for g in homs:
                    trivial = difference_commutator(f, g).is_trivial
                    rec.check(
                        trivial == (f == g),
                        f"difference detection fails on {xn}->{yn}",
                    )
    return _finish("difference-detection", rec, started)


STATEMENTS = (
    ("group-axioms", verify_group_axioms, False),
    ("commutator-detection", verify_detection, False),
    ("word-oracle-agreement", verify_word_oracle, False),
    ("trivial-action-classical", verify_trivial_action_huq, False),
    ("huq-subgroup-pairs", verify_huq_subgroups, False),
    ("equivariance-three-way", verify_equivariance, False),
    ("semidirect-conjugation", verify_semidirect_conjugation, False),
    ("pcm-cross-check", verify_pcm, True),
    ("pff-chain", verify_pff_chain, True),
    ("monic-boundary", verify_monic_boundary, False),
    ("epi-boundary", verify_epi_boundary, False),
    ("graph-lemmas", verify_graph_lemmas, True),
    ("round-trips", verify_round_trips, False),
    ("census-fixtures", verify_census_counts, True),
    ("postcomposition", verify_postcomposition, False),
    ("precomposition", verify_precomposition, False),
    ("direct-image", verify_direct_image, False),
    ("difference-detection", verify_difference_detection, False),
)


def run_all(max_order: int = 8, jobs: int = 1) -> list[StatementResult]:
    """Run every statement sweep; results in the fixed statement order."""
    cfg = VerifyConfig(max_order=max_order)
    census_map = build_census_map(cfg, jobs=jobs)

    def run_one(entry):
        name, fn, wants_census = entry
        try:
            if wants_census:
                return fn(cfg, census_map=census_map)
            return fn(cfg)
        except TwistcommError as exc:  # a raised cross-check is a failed statement
            return StatementResult(name, 1, 1, 0, (str(exc),))

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(run_one, STATEMENTS))
    return [run_one(entry) for entry in STATEMENTS]
