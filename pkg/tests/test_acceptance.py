"""Acceptance suite.

The heavyweight item is the exhaustive two-factor sweep (every ordered
pair of dominant weights with coordinate sum <= 3 in A1, A2, A3, B2, C2
and D4, every element); it is computed once per session and consumed by
several tests.  Each test prints a single PASS/FAIL line with case
counts.
"""

import time

import pytest

from crystals import checks
from crystals.cartan import root_system
from crystals.commutor import blocked_from_entries, hk_commutor, jdt_commutor
from crystals.crystal import TensorElement, TensorShape

E1, E2, E3 = (1, 0), (-1, 1), (0, -1)


def report(name, reports, elapsed=None):
    ok = all(r.ok for r in reports)
    cases = sum(r.cases for r in reports)
    fails = sum(r.failure_count for r in reports)
    extra = f" [{elapsed:.1f}s]" if elapsed is not None else ""
    print(f"\n{'PASS' if ok else 'FAIL'} {name}: {cases} cases, "
          f"{fails} failures{extra}")
    for r in reports:
        print(f"  {r.summary()}")
        for s in r.samples[:10]:
            print(f"    {s}")
        for n in r.notes:
            print(f"  note: {n}")
    return ok


@pytest.fixture(scope="session")
def grid():
    t0 = time.time()
    rep = checks.run_grid_sweep()
    rep.elapsed = time.time() - t0
    return rep


def test_golden_example():
    t0 = time.time()
    a2 = root_system("A", 2)
    be = blocked_from_entries(a2, [(1, 1), (2, 0)], (E1, E1, E2, E3, E2))
    expected = (E1, E1, E2, E2, E3)
    ok = True
    for fn in (hk_commutor, jdt_commutor):
        out = fn(be)
        ok &= out.concat().entries == expected
        ok &= out.blocks[0].highest_weight == (2, 0)

    def el(*entries):
        sh = TensorShape(a2, tuple(a2.dom_w(w) for w in entries))
        return TensorElement(sh, entries)

    ok &= el(E1, E1, E2).lusztig_involution() == el(E3, E2, E3)
    ok &= el(E3, E2).lusztig_involution() == el(E2, E1)
    elapsed = time.time() - t0
    print(f"\n{'PASS' if ok else 'FAIL'} golden example "
          f"(both backends + involution values) [{elapsed:.3f}s]")
    assert ok
    assert elapsed < 1.0


def test_exhaustive_agreement_grid(grid):
    ok = report("exhaustive backend agreement over the weight grid",
                [grid.comagree, grid.crosscheck], grid.elapsed)
    assert ok


def test_coboundary_axioms(grid):
    t0 = time.time()
    c3 = checks.run_c3_squares()
    ok = report("coboundary axioms", [grid.c2, c3], time.time() - t0)
    assert ok


def test_cactus_relations():
    t0 = time.time()
    rep = checks.run_cactus_relations()
    ok = report("cactus relations on four blocks", [rep], time.time() - t0)
    assert ok


def test_four_block_composites():
    t0 = time.time()
    rep = checks.run_four_block_composites()
    ok = report("four-block composite identity", [rep], time.time() - t0)
    assert ok


def test_local_move_equals_commutor_composite():
    t0 = time.time()
    rep = checks.run_local_move_consistency()
    ok = report("local move as commutor composite", [rep], time.time() - t0)
    assert ok


def test_crystal_axioms_suite(grid):
    ok = report(
        "crystal axioms, dual highest criterion, involution rules, "
        "component partition",
        [grid.axioms, grid.dual_highest, grid.involution, grid.partition,
         grid.equivariance],
    )
    assert ok


def test_growth_reversibility_and_monotonicity(grid):
    ok = report("growth reversibility and monotonicity",
                [grid.reversibility, grid.monotonicity])
    assert ok


def test_decomposition_independence_probe():
    t0 = time.time()
    rep = checks.run_decomposition_probe()
    ok = report("decomposition independence probe (findings reported)",
                [rep], time.time() - t0)
    # disagreements are findings, recorded in the notes; the build only
    # requires the probe to run on enough weights
    assert ok
