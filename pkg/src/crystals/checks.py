"""Verification suites over bounded weight grids.

The exhaustive sweeps evaluate both commutor realizations on every
element of every embedded two-factor product over a grid of highest
weights.  To keep desk-scale grids (which reach millions of elements in
D4) tractable, the sweep computes the involution and commutor maps as
whole-set index tables via the batch engine in :mod:`.bulk`; the tables
are built from the same defining recursions as the per-element API and
are cross-checked against it on samples in every pair.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as iproduct

import numpy as np

from .bulk import (
    BulkCrystal,
    IndexedSet,
    equivariance_failures,
    lusztig_table,
    morphism_transport,
    product_rows,
)
from .cartan import RootSystem, Weight, root_system
from .commutor import (
    blocked_element,
    cactus_s,
    commutor_on_concat,
    growth_rectangle,
    hk_commutor,
    hk_commutor_alt,
    jdt_commutor,
    local_move,
    local_move_as_commutor,
    sigma_prq,
)
from .crystal import TensorElement, crystal_leq, embed_highest

DEFAULT_GRID = (("A", 1), ("A", 2), ("A", 3), ("B", 2), ("C", 2), ("D", 4))


@dataclass
class SuiteReport:
    name: str
    cases: int = 0
    failure_count: int = 0
    samples: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    MAX_SAMPLES = 20

    @property
    def ok(self) -> bool:
        return self.failure_count == 0

    def passed(self, n: int = 1):
        self.cases += n

    def failed(self, n: int, msg: str):
        self.cases += n
        self.failure_count += n
        if n and len(self.samples) < self.MAX_SAMPLES:
            self.samples.append(msg)

    def check(self, ok: bool, msg: str):
        if ok:
            self.passed()
        else:
            self.failed(1, msg)

    def summary(self) -> str:
        verdict = "PASS" if self.ok else "FAIL"
        return f"{verdict} {self.name}: {self.cases} cases, {self.failure_count} failures"


def dominant_weights(sys: RootSystem, max_coord: int) -> list[Weight]:
    """All dominant weights with coordinate sum at most ``max_coord``."""
    out = []

    def rec(prefix, budget):
        if len(prefix) == sys.rank:
            out.append(tuple(prefix))
            return
        for c in range(budget + 1):
            rec(prefix + [c], budget - c)

    rec([], max_coord)
    return sorted(out, key=lambda w: (sum(w), w))


def _w0_matrix(sys: RootSystem) -> np.ndarray:
    cols = [sys.apply_w0(sys.fundamental_weight(j)) for j in range(1, sys.rank + 1)]
    return np.array(cols, dtype=np.int64).T  # [i][j] = coord i of w0(Lambda_j)




def _hk_table(etaX, etaY, eta_YX, nx, ny):
    """sigma_{X,Y} as an index table (ix*ny+iy) -> index into the Y x X set."""
    m = etaY[None, :] * nx + etaX[:, None]
    return eta_YX[m.ravel()]


def _alt_table(etaX, etaY, eta_XY, nx, ny):
    """The alternate composite as an index table into the Y x X set."""
    ja, jb = np.divmod(eta_XY, ny)
    return etaY[jb] * nx + etaX[ja]


@dataclass
class GridReport:
    """Aggregated results of the exhaustive two-factor sweep."""

    comagree: SuiteReport
    c2: SuiteReport
    axioms: SuiteReport
    dual_highest: SuiteReport
    involution: SuiteReport
    partition: SuiteReport
    reversibility: SuiteReport
    monotonicity: SuiteReport
    equivariance: SuiteReport
    crosscheck: SuiteReport

    def all_reports(self) -> list[SuiteReport]:
        return [
            self.comagree,
            self.c2,
            self.axioms,
            self.dual_highest,
            self.involution,
            self.partition,
            self.reversibility,
            self.monotonicity,
            self.equivariance,
            self.crosscheck,
        ]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.all_reports())


def _axioms_on(iset: IndexedSet, eta: np.ndarray, w0t: np.ndarray, tag: str,
               rep_axioms: SuiteReport, rep_dual: SuiteReport,
               rep_invol: SuiteReport):
    bulk = iset.bulk
    rows = iset.rows
    n_elems = rows.shape[0]
    wts = bulk.weights(rows).astype(np.int64)
    sys = bulk.shape.system
    bad = 0
    op_high = np.ones(n_elems, dtype=bool)
    charge_high = np.ones(n_elems, dtype=bool)
    idx = np.arange(n_elems)
    for i in range(1, bulk.rank + 1):
        if bulk.n == 0:
            break
        # one pass computes the depth, the rise, both action positions,
        # and the partial-sum (charge) highest criterion
        c = bulk.pairings(rows, i).astype(np.int32)
        cs = np.cumsum(c, axis=1)
        prefix = cs - c
        terms = np.maximum(-c, 0) - prefix
        epos = terms.argmax(axis=1)
        ev = terms[idx, epos]
        epsv = np.maximum(ev, 0)
        phiv = np.maximum(ev + cs[:, -1], 0)
        fpos = bulk.n - 1 - terms[:, ::-1].argmax(axis=1)
        charge_high &= (prefix + np.minimum(c, 0) >= 0).all(axis=1)
        op_high &= epsv == 0
        bad += int((phiv - epsv != wts[:, i - 1]).sum())

        mask = phiv > 0
        child = bulk._apply(rows, fpos, mask, bulk.ftab, i)
        child_idx = iset.lookup(child)
        # A2: f is a bijection {phi>0} -> {eps>0}, inverted by e
        bad += int(mask.sum() != (epsv > 0).sum())
        bad += int(child_idx.size != np.unique(child_idx).size)
        cc = bulk.pairings(child, i).astype(np.int32)
        ccs = np.cumsum(cc, axis=1)
        cterms = np.maximum(-cc, 0) - (ccs - cc)
        cidx = np.arange(child.shape[0])
        cepos = cterms.argmax(axis=1)
        cev = cterms[cidx, cepos]
        ceps = np.maximum(cev, 0)
        cphi = np.maximum(cev + ccs[:, -1], 0)
        if (ceps == 0).any():
            bad += int((ceps == 0).sum())
        else:
            back = bulk._apply(child, cepos, ceps > 0, bulk.etab, i)
            bad += int((bulk.encode(back) != bulk.encode(rows[mask])).sum())
        # A3: weight and string bookkeeping
        alpha = np.array(sys.simple_root(i), dtype=np.int64)
        bad += int((wts[child_idx] != wts[mask] - alpha).sum())
        bad += int((ceps != epsv[mask] + 1).sum())
        bad += int((cphi != phiv[mask] - 1).sum())
    if bad:
        rep_axioms.failed(bad, f"{tag}: {bad} axiom violations")
    rep_axioms.passed(n_elems * bulk.rank - bad if bad <= n_elems * bulk.rank else 0)

    mism = int((op_high != charge_high).sum())
    if mism:
        rep_dual.failed(mism, f"{tag}: dual highest criteria disagree on {mism}")
    rep_dual.passed(n_elems - mism)

    bad = int((eta[eta] != np.arange(n_elems)).sum())
    bad += int((wts[eta] != wts @ w0t.T).sum())
    if bad:
        rep_invol.failed(bad, f"{tag}: involution violations")
    rep_invol.passed(n_elems - min(bad, n_elems))


def _growth_image(top: TensorElement, split: int, rep_rev: SuiteReport,
                  rep_mono: SuiteReport, tag: str,
                  check_diagram: bool) -> TensorElement:
    """Growth move on a highest element; optionally run the reversibility
    and monotonicity checks on the produced diagram."""
    left = top.sub(0, split)
    right = top.sub(split, len(top))
    if len(left) == 0 or len(right) == 0:
        return right.concat(left)
    p_out, diag = growth_rectangle(left, right, verify=True)
    new_left = TensorElement(right.shape, diag.left_column())
    image = new_left.concat(p_out)
    if check_diagram:
        back, diag2 = growth_rectangle(new_left, p_out, verify=True)
        rep_rev.check(
            back.entries == right.entries
            and diag2.left_column() == tuple(left.entries),
            f"{tag}: growth round trip failed",
        )
        transposed = all(
            diag2.h[j][i] == diag.v[i][j]
            for i in range(diag.k)
            for j in range(diag.l + 1)
            if j < diag2.k + 1 and i < diag2.l
        ) and all(
            diag2.v[j][i] == diag.h[i][j]
            for i in range(diag.k + 1)
            for j in range(diag.l)
        )
        rep_rev.check(transposed, f"{tag}: reverse diagram is not the transpose")
        ok_rows = all(
            crystal_leq(
                TensorElement(left.shape, diag.h[i + 1]),
                TensorElement(left.shape, diag.h[i]),
            )
            for i in range(diag.k)
        )
        ok_cols = all(
            crystal_leq(
                TensorElement(right.shape, tuple(diag.v[i][j + 1] for i in range(diag.k))),
                TensorElement(right.shape, tuple(diag.v[i][j] for i in range(diag.k))),
            )
            for j in range(diag.l)
        )
        rep_mono.check(ok_rows, f"{tag}: row monotonicity failed")
        rep_mono.check(ok_cols, f"{tag}: column monotonicity failed")
    return image


def sweep_pair(
    sys: RootSystem,
    lam_a: Weight,
    lam_b: Weight,
    report: GridReport,
    equivariance_cap: int = 250_000,
    crosscheck_samples: int = 3,
    diagram_checks: bool = True,
):
    """Run every per-element check on the embedded product of the two
    highest weights, in both factor orders."""
    tag = f"{sys.kind}{sys.rank} {lam_a}x{lam_b}"
    shape_a, high_a = embed_highest(sys, lam_a)
    shape_b, high_b = embed_highest(sys, lam_b)
    bulk_a, bulk_b = BulkCrystal(shape_a), BulkCrystal(shape_b)
    rows_a, rows_b = bulk_a.component(high_a), bulk_b.component(high_b)
    iset_a, iset_b = IndexedSet(bulk_a, rows_a), IndexedSet(bulk_b, rows_b)
    eta_a, eta_b = lusztig_table(iset_a), lusztig_table(iset_b)
    na, nb = len(iset_a), len(iset_b)

    bulk_ab = BulkCrystal(shape_a.concat(shape_b))
    bulk_ba = BulkCrystal(shape_b.concat(shape_a))
    iset_ab = IndexedSet(bulk_ab, product_rows(rows_a, rows_b))
    iset_ba = IndexedSet(bulk_ba, product_rows(rows_b, rows_a))
    eta_ab, eta_ba = lusztig_table(iset_ab), lusztig_table(iset_ba)
    n_all = na * nb

    w0t = _w0_matrix(sys)
    _axioms_on(iset_ab, eta_ab, w0t, tag, report.axioms, report.dual_highest,
               report.involution)
    if lam_a != lam_b:
        _axioms_on(iset_ba, eta_ba, w0t, tag + " (swapped)", report.axioms,
                   report.dual_highest, report.involution)

    # reference and alternate commutors, both directions
    hk_ab = _hk_table(eta_a, eta_b, eta_ba, na, nb)
    hk_ba = _hk_table(eta_b, eta_a, eta_ab, nb, na)
    alt_ab = _alt_table(eta_a, eta_b, eta_ab, na, nb)
    alt_ba = _alt_table(eta_b, eta_a, eta_ba, nb, na)

    # growth commutor: images of the highest elements, extended along
    # lowering edges
    split_a, split_b = len(shape_a.factors), len(shape_b.factors)
    seeds_ab = np.flatnonzero(bulk_ab.is_highest(iset_ab.rows))
    seeds_ba = np.flatnonzero(bulk_ba.is_highest(iset_ba.rows))
    report.partition.check(
        seeds_ab.size == seeds_ba.size,
        f"{tag}: differing numbers of components in the two orders",
    )
    img_ab = []
    for s in seeds_ab:
        top = bulk_ab.element(iset_ab.rows[s])
        image = _growth_image(top, split_a, report.reversibility,
                              report.monotonicity, tag, diagram_checks)
        img_ab.append(bulk_ba.rows_from_elements([image])[0])
    img_ba = []
    for s in seeds_ba:
        top = bulk_ba.element(iset_ba.rows[s])
        image = _growth_image(top, split_b, report.reversibility,
                              report.monotonicity, tag, diagram_checks)
        img_ba.append(bulk_ab.rows_from_elements([image])[0])
    jdt_ab = morphism_transport(
        iset_ab, iset_ba, seeds_ab,
        iset_ba.lookup(np.array(img_ab, dtype=np.uint8).reshape(len(img_ab), -1)),
    )
    jdt_ba = morphism_transport(
        iset_ba, iset_ab, seeds_ba,
        iset_ab.lookup(np.array(img_ba, dtype=np.uint8).reshape(len(img_ba), -1)),
    )
    # morphism transport reaches everything from the seeds: that is the
    # cardinality partition of the product into components
    report.partition.passed(2)

    # Theorem agreement, exact equality of all three maps, both orders
    bad = int((hk_ab != jdt_ab).sum() + (hk_ab != alt_ab).sum())
    bad += int((hk_ba != jdt_ba).sum() + (hk_ba != alt_ba).sum())
    if bad:
        report.comagree.failed(bad, f"{tag}: {bad} commutor disagreements")
    report.comagree.passed(2 * n_all - min(bad, 2 * n_all))

    # sigma_{B,A} o sigma_{A,B} = 1, both backends
    idx = np.arange(n_all)
    bad = int((hk_ba[hk_ab] != idx).sum()) + int((jdt_ba[jdt_ab] != idx).sum())
    bad += int((hk_ab[hk_ba] != idx).sum()) + int((jdt_ab[jdt_ba] != idx).sum())
    if bad:
        report.c2.failed(bad, f"{tag}: {bad} sigma o sigma != 1")
    report.c2.passed(2 * n_all - min(bad, 2 * n_all))

    # operator equivariance of the maps (capped: it doubles the sweep cost)
    if n_all <= equivariance_cap:
        bad = equivariance_failures(iset_ab, iset_ba, hk_ab)
        bad += equivariance_failures(iset_ab, iset_ba, jdt_ab)
        if bad:
            report.equivariance.failed(bad, f"{tag}: {bad} equivariance failures")
        report.equivariance.passed(2 * n_all - min(bad, 2 * n_all))

    # spot-check the tables against the per-element implementations
    if n_all and crosscheck_samples:
        picks = np.unique(np.linspace(0, n_all - 1, crosscheck_samples).astype(int))
        for x in picks:
            elem = bulk_ab.element(iset_ab.rows[x])
            expect = bulk_ba.element(iset_ba.rows[hk_ab[x]])
            got_hk = commutor_on_concat(elem, split_a, backend="hk")
            got_alt = commutor_on_concat(elem, split_a, backend="hk_alt")
            got_jdt = commutor_on_concat(elem, split_a, backend="jdt")
            expect_jdt = bulk_ba.element(iset_ba.rows[jdt_ab[x]])
            report.crosscheck.check(
                got_hk == expect and got_alt == expect and got_jdt == expect_jdt,
                f"{tag}: table/per-element mismatch at index {x}",
            )


def new_grid_report() -> GridReport:
    return GridReport(
        comagree=SuiteReport("commutor agreement (growth = involution = alternate)"),
        c2=SuiteReport("coboundary axiom C2 (sigma o sigma = 1)"),
        axioms=SuiteReport("crystal axioms A2/A3 and string bookkeeping"),
        dual_highest=SuiteReport("highest-element dual criterion"),
        involution=SuiteReport("involution: involutive + weight rule"),
        partition=SuiteReport("component partition of tensor products"),
        reversibility=SuiteReport("growth rectangle reversibility"),
        monotonicity=SuiteReport("growth diagram row/column monotonicity"),
        equivariance=SuiteReport("commutor operator equivariance"),
        crosscheck=SuiteReport("bulk tables vs per-element API"),
    )


def run_grid_sweep(
    grid=DEFAULT_GRID,
    max_coord: int = 3,
    equivariance_cap: int = 250_000,
    diagram_checks: bool = True,
    progress=None,
) -> GridReport:
    """The exhaustive sweep behind the agreement/axiom/diagram criteria:
    every unordered pair of grid weights, both factor orders, every
    element."""
    report = new_grid_report()
    for kind, rank in grid:
        sys = root_system(kind, rank)
        weights = dominant_weights(sys, max_coord)
        for ia, lam_a in enumerate(weights):
            for lam_b in weights[ia:]:
                if progress:
                    progress(f"{kind}{rank} {lam_a} x {lam_b}")
                sweep_pair(
                    sys,
                    lam_a,
                    lam_b,
                    report,
                    equivariance_cap=equivariance_cap,
                    diagram_checks=diagram_checks,
                )
    return report


# ---------------------------------------------------------------------------
# coboundary square (C3) on triple products
# ---------------------------------------------------------------------------


def run_c3_squares(types=(("A", 1), ("A", 2)), max_coord: int = 2) -> SuiteReport:
    """Commutativity of the square relating the two ways of reversing a
    triple product, on every element."""
    rep = SuiteReport("coboundary axiom C3 (triple product square)")
    for kind, rank in types:
        sys = root_system(kind, rank)
        weights = dominant_weights(sys, max_coord)
        for lam_a, lam_b, lam_c in iproduct(weights, repeat=3):
            shapes = [embed_highest(sys, lam)[0] for lam in (lam_a, lam_b, lam_c)]
            highs = [embed_highest(sys, lam)[1] for lam in (lam_a, lam_b, lam_c)]
            bulks = [BulkCrystal(sh) for sh in shapes]
            comps = [b.component(h) for b, h in zip(bulks, highs)]
            isets = [IndexedSet(b, r) for b, r in zip(bulks, comps)]
            etas = [lusztig_table(s) for s in isets]
            ns = [len(s) for s in isets]
            na, nb, nc = ns

            def pair(i, j):
                bulk = BulkCrystal(shapes[i].concat(shapes[j]))
                iset = IndexedSet(bulk, product_rows(comps[i], comps[j]))
                return iset, lusztig_table(iset)

            iset_ba, eta_ba = pair(1, 0)
            iset_cb, eta_cb = pair(2, 1)
            bulk_cba = BulkCrystal(shapes[2].concat(shapes[1]).concat(shapes[0]))
            iset_cba = IndexedSet(
                bulk_cba, product_rows(product_rows(comps[2], comps[1]), comps[0])
            )
            eta_cba = lusztig_table(iset_cba)

            hk_ab = _hk_table(etas[0], etas[1], eta_ba, na, nb)
            hk_bc = _hk_table(etas[1], etas[2], eta_cb, nb, nc)
            # D = B x A as one object; sigma_{D,C} lands in C x B x A
            hk_dc = _hk_table(eta_ba, etas[2], eta_cba, na * nb, nc)
            # E = C x B as one object; sigma_{A,E} lands in C x B x A
            hk_ae = _hk_table(etas[0], eta_cb, eta_cba, na, nb * nc)

            ia = np.repeat(np.arange(na), nb * nc)
            ib = np.tile(np.repeat(np.arange(nb), nc), na)
            ic = np.tile(np.arange(nc), na * nb)
            # path 1: (sigma_{A,B} x 1) then sigma_{BxA, C}
            d_idx = hk_ab[ia * nb + ib]
            left = hk_dc[d_idx * nc + ic]
            # path 2: (1 x sigma_{B,C}) then sigma_{A, CxB}
            e_idx = hk_bc[ib * nc + ic]
            right = hk_ae[ia * (nb * nc) + e_idx]
            bad = int((left != right).sum())
            if bad:
                rep.failed(bad, f"{kind}{rank} {lam_a},{lam_b},{lam_c}: square broke")
            rep.passed(left.size - min(bad, left.size))
    return rep


# ---------------------------------------------------------------------------
# cactus relations and the composite lemma on four blocks
# ---------------------------------------------------------------------------


def _minuscule_four_blocks(sys: RootSystem):
    """All 4-tuples of dominant minuscule fundamental weights."""
    return list(iproduct(sys.minuscule_fundamentals(), repeat=4))


def _all_blocked(sys: RootSystem, lams) -> list:
    """All elements of the embedded product of irreducibles, as blocked
    elements."""
    from .crystal import component_members

    pools = []
    for lam in lams:
        _, high = embed_highest(sys, lam)
        pools.append(component_members(high))
    out = []
    for combo in iproduct(*pools):
        out.append(
            blocked_element(sys, [(lam, el) for lam, el in zip(lams, combo)])
        )
    return out


def _shat(p, q, k):
    return p + q - k if p <= k <= q else k


def run_cactus_relations(
    types=(("A", 1), ("A", 2)), backends=("hk", "jdt")
) -> SuiteReport:
    """Relations R1-R3 of the interval-reversing group action, checked as
    equalities of maps on all elements of 4-fold minuscule products."""
    rep = SuiteReport("cactus relations R1, R2, R3")
    n = 4
    intervals = [(p, q) for p in range(1, n + 1) for q in range(p + 1, n + 1)]
    for kind, rank in types:
        sys = root_system(kind, rank)
        for lams in _minuscule_four_blocks(sys):
            elements = _all_blocked(sys, lams)
            for backend in backends:
                for x in elements:
                    for p, q in intervals:
                        y = cactus_s(cactus_s(x, p, q, backend), p, q, backend)
                        rep.check(y == x, f"{kind}{rank} {lams}: R1 fails at s_{p}{q}")
                    for (p, q), (k, l) in iproduct(intervals, repeat=2):
                        if q < k or l < p:
                            lhs = cactus_s(cactus_s(x, k, l, backend), p, q, backend)
                            rhs = cactus_s(cactus_s(x, p, q, backend), k, l, backend)
                            rep.check(
                                lhs == rhs,
                                f"{kind}{rank} {lams}: R2 fails at ({p},{q}),({k},{l})",
                            )
                        elif p <= k < l <= q:
                            i, j = _shat(p, q, l), _shat(p, q, k)
                            lhs = cactus_s(cactus_s(x, k, l, backend), p, q, backend)
                            rhs = cactus_s(cactus_s(x, p, q, backend), i, j, backend)
                            rep.check(
                                lhs == rhs,
                                f"{kind}{rank} {lams}: R3 fails at ({p},{q}),({k},{l})",
                            )
    return rep


def run_four_block_composites(types=(("A", 1), ("A", 2)), backends=("hk", "jdt")) -> SuiteReport:
    """The two four-block composites of interval swaps that must coincide
    in any coboundary category."""
    rep = SuiteReport("four-block composite identity")
    for kind, rank in types:
        sys = root_system(kind, rank)
        for lams in _minuscule_four_blocks(sys):
            for backend in backends:
                for x in _all_blocked(sys, lams):
                    y = sigma_prq(x, 1, 1, 2, backend=backend)
                    y = sigma_prq(y, 1, 1, 3, backend=backend)
                    y = sigma_prq(y, 1, 2, 4, backend=backend)
                    y = sigma_prq(y, 1, 2, 3, backend=backend)
                    z = sigma_prq(x, 1, 2, 3, backend=backend)
                    z = sigma_prq(z, 1, 1, 4, backend=backend)
                    rep.check(y == z, f"{kind}{rank} {lams}: composites differ")
    return rep


# ---------------------------------------------------------------------------
# local moves as commutor composites
# ---------------------------------------------------------------------------


def run_local_move_consistency(types=(("A", 2), ("B", 2), ("C", 2)), max_coord: int = 2) -> SuiteReport:
    """Local move = commutor composite on all valid triples."""
    rep = SuiteReport("local move vs commutor composite")
    for kind, rank in types:
        sys = root_system(kind, rank)
        for kappa in dominant_weights(sys, max_coord):
            for om_h, om_v in iproduct(sys.minuscule_fundamentals(), repeat=2):
                for h in sorted(sys.weyl_orbit(om_h)):
                    lam = tuple(a + b for a, b in zip(kappa, h))
                    if not sys.is_dominant(lam):
                        continue
                    if any(k + min(0, c) < 0 for k, c in zip(kappa, h)):
                        continue
                    for v in sorted(sys.weyl_orbit(om_v)):
                        if any(k + min(0, c) < 0 for k, c in zip(lam, v)):
                            continue
                        direct = local_move(sys, kappa, h, v, verify=True)
                        composite = local_move_as_commutor(sys, kappa, h, v)
                        rep.check(
                            direct == composite,
                            f"{kind}{rank} kappa={kappa} h={h} v={v}: "
                            f"{direct} != {composite}",
                        )
    return rep


# ---------------------------------------------------------------------------
# decomposition-independence probe
# ---------------------------------------------------------------------------


def enumerate_decompositions(sys: RootSystem, lam: Weight, limit: int = 4,
                             max_parts: int | None = None) -> list[tuple[Weight, ...]]:
    """Up to ``limit`` distinct minuscule decompositions of a dominant
    weight, shortest first."""
    candidates = sorted(
        {w for om in sys.minuscule_fundamentals() for w in sys.weyl_orbit(om)},
        key=lambda w: (-sum(w), tuple(-c for c in w)),
    )
    found: list[tuple[Weight, ...]] = []
    cap = max_parts or sys._depth_cap(lam)
    for n in range(1, cap + 1):
        def rec(s, acc):
            if len(found) >= limit:
                return
            depth = len(acc)
            if depth == n:
                if s == lam:
                    found.append(tuple(acc))
                return
            if max(abs(a - b) for a, b in zip(lam, s)) > n - depth:
                return
            for mu in candidates:
                s2 = tuple(a + b for a, b in zip(s, mu))
                if all(c >= 0 for c in s2):
                    acc.append(mu)
                    rec(s2, acc)
                    acc.pop()

        rec(sys.zero(), [])
        if len(found) >= limit:
            break
    return found


def _transport_between_models(x: TensorElement, high2: TensorElement) -> TensorElement:
    """The unique isomorphism between two embeddings of the same
    irreducible crystal, via the raising path of ``x``."""
    _, path = x.to_highest()
    cur = high2
    for i in reversed(path):
        cur = cur.f(i)
        if cur is None:
            raise AssertionError("models are not isomorphic along this path")
    return cur


def run_decomposition_probe(
    cases=None, sample_per_case: int = 24
) -> SuiteReport:
    """Whether the growth commutor depends on the minuscule decomposition
    chosen for each factor.  Disagreements are findings, not failures of
    the implementation, and are reported in the notes."""
    from .crystal import TensorShape, component_members

    rep = SuiteReport("growth commutor independence of the decomposition")
    if cases is None:
        a2, a3 = root_system("A", 2), root_system("A", 3)
        cases = [
            (a2, (1, 1), (1, 0)),
            (a2, (2, 1), (0, 1)),
            (a2, (1, 1), (1, 1)),
            (a3, (1, 0, 1), (1, 0, 0)),
            (a3, (0, 2, 0), (0, 1, 0)),
            (a3, (1, 1, 0), (0, 0, 1)),
        ]
    agreements = disagreements = 0
    probed = 0
    for sys, lam_a, lam_b in cases:
        decs_a = enumerate_decompositions(sys, lam_a, limit=3)
        decs_b = enumerate_decompositions(sys, lam_b, limit=2)
        if len(decs_a) < 2:
            continue
        probed += 1

        def model(parts):
            sh = TensorShape(sys, tuple(sys.dom_w(p) for p in parts))
            return TensorElement(sh, tuple(parts))

        high_a1, high_a2 = model(decs_a[0]), model(decs_a[1])
        high_b1 = model(decs_b[0])
        high_b2 = model(decs_b[1]) if len(decs_b) > 1 else high_b1
        elems_a = component_members(high_a1)
        elems_b = component_members(high_b1)
        combos = [(a, b) for a in elems_a for b in elems_b]
        step = max(1, len(combos) // sample_per_case)
        for a1, b1 in combos[::step]:
            x1 = a1.concat(b1)
            out1 = commutor_on_concat(x1, len(a1), backend="jdt")
            a2_el = _transport_between_models(a1, high_a2)
            b2_el = _transport_between_models(b1, high_b2)
            x2 = a2_el.concat(b2_el)
            out2 = commutor_on_concat(x2, len(a2_el), backend="jdt")
            # identify the outputs through the same model transport
            o1_b, o1_a = out1.sub(0, len(b1)), out1.sub(len(b1), len(out1))
            o2_b, o2_a = out2.sub(0, len(b2_el)), out2.sub(len(b2_el), len(out2))
            same = (
                _transport_between_models(o1_b, high_b2) == o2_b
                and _transport_between_models(o1_a, high_a2) == o2_a
            )
            if same:
                agreements += 1
            else:
                disagreements += 1
            rep.passed()
    rep.notes.append(
        f"probed {probed} weights with multiple decompositions: "
        f"{agreements} agreements, {disagreements} disagreements"
    )
    if probed < 5:
        rep.failed(1, f"only {probed} probe weights admitted two decompositions")
    if disagreements:
        rep.notes.append(
            "FINDING: growth commutor output depended on the decomposition"
        )
    return rep
