"""Command line front end.

Weights are written in the fundamental-weight basis as comma-separated
integers ("1,0"), elements as semicolon-separated factor weights
("1,0;1,0;-1,1"), and multi-block elements with " | " between blocks.
For the classical types an epsilon-coordinate form such as "e1+e1+e2"
is accepted and rendered on request; fundamental coordinates remain the
canonical representation, so everything stays in exact integer (or
half-integer fraction) arithmetic.

Exit codes: 0 success, 1 check or match failure, 2 usage error,
3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
import time
from fractions import Fraction

from .cartan import (
    DecompositionError,
    RootSystem,
    UnsupportedTypeError,
    Weight,
    root_system,
)
from .commutor import (
    GrowthDiagram,
    LocalMoveError,
    QuasiMinusculeError,
    blocked_from_entries,
    cactus_s,
    commutor_on_concat,
    growth_rectangle,
)
from .crystal import TensorElement, TensorShape, embed_highest, max_elements

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_INVARIANT = 3

DEFAULT_MAX_RANK = 8


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# parsing and rendering
# ---------------------------------------------------------------------------


def parse_weight(text: str, sys_: RootSystem) -> Weight:
    text = text.strip()
    if "e" in text:
        return weight_from_epsilon(sys_, text)
    try:
        coords = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise UsageError(f"cannot parse weight {text!r}")
    if len(coords) != sys_.rank:
        raise UsageError(
            f"weight {text!r} has {len(coords)} coordinates, expected {sys_.rank}"
        )
    return coords


def parse_entries(text: str, sys_: RootSystem) -> tuple[Weight, ...]:
    text = text.strip()
    if not text:
        return ()
    return tuple(parse_weight(part, sys_) for part in text.split(";"))


def render_weight(w: Weight) -> str:
    return ",".join(str(c) for c in w)


def render_entries(entries) -> str:
    return ";".join(render_weight(w) for w in entries)


def _epsilon_dim(sys_: RootSystem) -> int:
    return sys_.rank + 1 if sys_.kind == "A" else sys_.rank


def epsilon_vector(sys_: RootSystem, w: Weight) -> tuple[Fraction, ...]:
    """Coordinates of a weight in the orthogonal epsilon basis (classical
    types only)."""
    kind, r = sys_.kind, sys_.rank
    c = [Fraction(x) for x in w]
    if kind == "A":
        # Lambda_i = e_1 + ... + e_i; last coordinate normalized to 0
        return tuple(sum(c[i:], Fraction(0)) for i in range(r)) + (Fraction(0),)
    if kind == "C":
        return tuple(sum(c[i:], Fraction(0)) for i in range(r))
    if kind == "B":
        # Lambda_r = (e_1 + ... + e_r)/2
        half = c[r - 1] / 2
        return tuple(sum(c[i : r - 1], Fraction(0)) + half for i in range(r))
    if kind == "D":
        # Lambda_{r-1} = (e_1+...+e_{r-1}-e_r)/2, Lambda_r = (...+e_r)/2
        s = (c[r - 2] + c[r - 1]) / 2
        out = [sum(c[i : r - 2], Fraction(0)) + s for i in range(r - 1)]
        out.append((c[r - 1] - c[r - 2]) / 2)
        return tuple(out)
    raise UsageError(f"epsilon coordinates are not defined for type {kind}")


def weight_from_epsilon_vector(sys_: RootSystem, a) -> Weight:
    kind, r = sys_.kind, sys_.rank
    a = [Fraction(x) for x in a]
    if kind == "A":
        if len(a) == r:
            a = a + [Fraction(0)]
        if len(a) != r + 1:
            raise UsageError(f"type A{r} epsilon form needs at most {r + 1} axes")
        c = [a[i] - a[i + 1] for i in range(r)]
    elif kind == "C":
        c = [a[i] - a[i + 1] for i in range(r - 1)] + [a[r - 1]]
    elif kind == "B":
        c = [a[i] - a[i + 1] for i in range(r - 1)] + [2 * a[r - 1]]
    elif kind == "D":
        c = [a[i] - a[i + 1] for i in range(r - 2)] + [
            a[r - 2] - a[r - 1],
            a[r - 2] + a[r - 1],
        ]
    else:
        raise UsageError(f"epsilon coordinates are not defined for type {kind}")
    if any(x.denominator != 1 for x in c):
        raise UsageError("epsilon expression is not a weight of this root system")
    return tuple(int(x) for x in c)


_EPS_TERM = re.compile(r"^(\d+)?e(\d+)(/2)?$")


def weight_from_epsilon(sys_: RootSystem, text: str) -> Weight:
    """Parse expressions like ``e1+e1+e2``, ``2e1-e3`` or ``e1/2+e2/2``."""
    dim = _epsilon_dim(sys_)
    a = [Fraction(0)] * dim
    s = text.replace(" ", "")
    if not s:
        raise UsageError("empty epsilon expression")
    if s == "0":
        return sys_.zero()
    if s[0] not in "+-":
        s = "+" + s
    for sign, term in re.findall(r"([+-])([^+-]+)", s):
        m = _EPS_TERM.match(term)
        if not m:
            raise UsageError(f"cannot parse epsilon term {term!r}")
        coef = Fraction(int(m.group(1) or 1))
        axis = int(m.group(2))
        if m.group(3):
            coef /= 2
        if not 1 <= axis <= dim:
            raise UsageError(f"axis e{axis} out of range for {sys_.kind}{sys_.rank}")
        a[axis - 1] += -coef if sign == "-" else coef
    return weight_from_epsilon_vector(sys_, a)


def render_weight_epsilon(sys_: RootSystem, w: Weight) -> str:
    a = epsilon_vector(sys_, w)
    terms = []
    for j, v in enumerate(a, start=1):
        sign = "-" if v < 0 else "+"
        v = abs(v)
        while v >= 1:
            terms.append((sign, f"e{j}"))
            v -= 1
        if v == Fraction(1, 2):
            terms.append((sign, f"e{j}/2"))
        elif v != 0:
            raise AssertionError("epsilon coordinate is not a half-integer")
    if not terms:
        return "0"
    out = terms[0][1] if terms[0][0] == "+" else "-" + terms[0][1]
    for sign, t in terms[1:]:
        out += sign + t
    return out


def render_entries_epsilon(sys_: RootSystem, entries) -> str:
    return ";".join(render_weight_epsilon(sys_, w) for w in entries)


def element_to_json(sys_: RootSystem, blocks) -> dict:
    """``blocks`` is a list of (highest weight, entries) pairs."""
    return {
        "type": sys_.kind,
        "rank": sys_.rank,
        "blocks": [
            {"lambda": list(lam), "entries": [list(w) for w in entries]}
            for lam, entries in blocks
        ],
    }


def element_from_json(data: dict):
    sys_ = root_system(data["type"], data["rank"])
    blocks = [
        (tuple(b["lambda"]), tuple(tuple(w) for w in b["entries"]))
        for b in data["blocks"]
    ]
    return sys_, blocks


# ---------------------------------------------------------------------------
# growth diagram rendering
# ---------------------------------------------------------------------------


def render_growth_diagram(diag: GrowthDiagram, epsilon: bool = False) -> str:
    """ASCII picture in matrix orientation: row index downward, corners
    drawn as '+', horizontal edge labels above the edge, vertical edge
    labels to the left of the edge."""
    sys_ = diag.system
    disp = (lambda w: render_weight_epsilon(sys_, w)) if epsilon else render_weight
    k, l = diag.k, diag.l
    if k == 0 and l == 0:
        return "+"
    hlab = [[disp(diag.h[i][j]) for j in range(l)] for i in range(k + 1)]
    vlab = [[disp(diag.v[i][j]) for j in range(l + 1)] for i in range(k)]
    # column j is wide enough for its horizontal labels and for the
    # vertical labels written just left of the bar at its right end
    col_w = [
        max(
            [len(hlab[i][j]) for i in range(k + 1)]
            + [len(vlab[i][j + 1]) for i in range(k)]
            + [2]
        )
        for j in range(l)
    ]
    gutter = max([len(vlab[i][0]) for i in range(k)] + [0])

    lines = []
    for i in range(k + 1):
        lab = " " * (gutter + 1)
        grid = " " * gutter + "+"
        for j in range(l):
            lab += " " + hlab[i][j].center(col_w[j]) + "  "
            grid += "-" * (col_w[j] + 2) + "+"
        lines.append(lab.rstrip())
        lines.append(grid)
        if i < k:
            row = vlab[i][0].rjust(gutter) + "|"
            for j in range(l):
                row += " " + vlab[i][j + 1].rjust(col_w[j]) + " |"
            lines.append(row)
    return "\n".join(line for line in lines if line.strip())


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def _get_system(args) -> RootSystem:
    max_rank = int(os.environ.get("CRYSTAL_MAX_RANK", DEFAULT_MAX_RANK))
    if args.rank > max_rank:
        raise UsageError(
            f"rank {args.rank} exceeds the guard ({max_rank}); "
            "set CRYSTAL_MAX_RANK to override"
        )
    try:
        return root_system(args.type, args.rank)
    except UnsupportedTypeError as exc:
        raise UsageError(str(exc))


def cmd_decompose(args) -> int:
    sys_ = _get_system(args)
    lam = parse_weight(args.weight, sys_)
    dec = sys_.minuscule_decomposition(lam)
    if args.format == "json":
        print(json.dumps({
            "type": sys_.kind,
            "rank": sys_.rank,
            "lambda": list(lam),
            "parts": [list(p) for p in dec.parts],
            "dominant_orbits": [list(p) for p in dec.dominant_orbits],
        }))
    elif args.format == "epsilon":
        print(render_entries_epsilon(sys_, dec.parts))
    else:
        print(render_entries(dec.parts))
    return EXIT_OK


def cmd_orbit(args) -> int:
    sys_ = _get_system(args)
    lam = parse_weight(args.weight, sys_)
    orbit = sorted(sys_.weyl_orbit(lam), reverse=True)
    if args.format == "json":
        print(json.dumps({
            "type": sys_.kind, "rank": sys_.rank,
            "weight": list(lam), "orbit": [list(w) for w in orbit],
        }))
    else:
        disp = (lambda w: render_weight_epsilon(sys_, w)) \
            if args.format == "epsilon" else render_weight
        for w in orbit:
            print(disp(w))
    return EXIT_OK


def _two_shapes(args, sys_):
    lam_l = parse_weight(args.left, sys_)
    lam_r = parse_weight(args.right, sys_)
    for lam in (lam_l, lam_r):
        if not sys_.is_dominant(lam):
            raise UsageError(f"weight {render_weight(lam)} is not dominant")
    sh_l, high_l = embed_highest(sys_, lam_l)
    sh_r, high_r = embed_highest(sys_, lam_r)
    return lam_l, lam_r, sh_l, high_l, sh_r, high_r


def cmd_maxima(args) -> int:
    sys_ = _get_system(args)
    lam_l, lam_r, sh_l, _, sh_r, _ = _two_shapes(args, sys_)
    shape_all = sh_l.concat(sh_r)
    rows = []
    for m in max_elements(shape_all):
        rows.append((m.weight(), m.entries))
    rows.sort(reverse=True)
    if args.format == "json":
        print(json.dumps({
            "type": sys_.kind, "rank": sys_.rank,
            "left": list(lam_l), "right": list(lam_r),
            "maxima": [
                {"weight": list(wt), "entries": [list(w) for w in entries]}
                for wt, entries in rows
            ],
        }))
    else:
        disp = (lambda ws: render_entries_epsilon(sys_, ws)) \
            if args.format == "epsilon" else render_entries
        for wt, entries in rows:
            print(f"{render_weight(wt)}  {disp(entries)}")
    return EXIT_OK


def cmd_commutor(args) -> int:
    sys_ = _get_system(args)
    lam_l, lam_r, sh_l, _, sh_r, _ = _two_shapes(args, sys_)
    shape_all = sh_l.concat(sh_r)
    entries = parse_entries(args.element, sys_)
    if len(entries) != len(shape_all.factors):
        raise UsageError(
            f"element has {len(entries)} factors; the embedded product "
            f"has {len(shape_all.factors)}"
        )
    try:
        elem = TensorElement(shape_all, entries)
    except (ValueError, AssertionError) as exc:
        raise UsageError(f"invalid element: {exc}")
    split = len(sh_l.factors)
    backends = ["hk", "jdt"] if args.backend == "both" else [args.backend]
    outputs = {}
    for backend in backends:
        out = commutor_on_concat(elem, split, backend=backend,
                                 verify=args.verify)
        nb = len(sh_r.factors)
        outputs[backend] = (out.sub(0, nb), out.sub(nb, len(out)))

    if args.format == "json":
        payload = {
            "type": sys_.kind, "rank": sys_.rank,
            "left": list(lam_l), "right": list(lam_r),
            "results": {
                b: element_to_json(sys_, [(lam_r, p1.entries), (lam_l, p2.entries)])
                for b, (p1, p2) in outputs.items()
            },
        }
        if len(backends) == 2:
            payload["match"] = outputs["hk"] == outputs["jdt"]
        print(json.dumps(payload))
    else:
        disp = (lambda ws: render_entries_epsilon(sys_, ws)) \
            if args.format == "epsilon" else render_entries
        for backend in backends:
            p1, p2 = outputs[backend]
            print(f"{backend}: {disp(p1.entries)} | {disp(p2.entries)}")
        if len(backends) == 2:
            verdict = "MATCH" if outputs["hk"] == outputs["jdt"] else "MISMATCH"
            print(verdict)
            if verdict == "MISMATCH":
                return EXIT_CHECK_FAILED
    return EXIT_OK


def cmd_growth(args) -> int:
    sys_ = _get_system(args)
    lam_l, lam_r, sh_l, high_l, sh_r, _ = _two_shapes(args, sys_)
    if args.element:
        entries = parse_entries(args.element, sys_)
        if len(entries) != len(sh_r.factors):
            raise UsageError(
                f"--element must give the {len(sh_r.factors)} factors of the "
                "right tensor part"
            )
        try:
            p = TensorElement(sh_r, entries)
        except (ValueError, AssertionError) as exc:
            raise UsageError(f"invalid element: {exc}")
    else:
        p = embed_highest(sys_, lam_r)[1]
    top = high_l.concat(p)
    if not top.is_highest():
        raise UsageError(
            "the pair (highest path, element) must be a max element of the "
            "product; use `maxima` to list valid elements"
        )
    if len(sh_l.factors) == 0 or len(sh_r.factors) == 0:
        print("+")
        return EXIT_OK
    p_out, diag = growth_rectangle(high_l, p, verify=args.verify)
    if args.format == "json":
        print(json.dumps({
            "type": sys_.kind, "rank": sys_.rank,
            "h": [[list(w) for w in row] for row in diag.h],
            "v": [[list(w) for w in row] for row in diag.v],
            "output": [list(w) for w in p_out.entries],
            "left_column": [list(w) for w in diag.left_column()],
        }))
    else:
        print(render_growth_diagram(diag, epsilon=args.format == "epsilon"))
        disp = (lambda ws: render_entries_epsilon(sys_, ws)) \
            if args.format == "epsilon" else render_entries
        print(f"output: {disp(tuple(diag.left_column()))} | {disp(p_out.entries)}")
    return EXIT_OK


def cmd_cactus(args) -> int:
    sys_ = _get_system(args)
    lams = [parse_weight(t, sys_) for t in args.blocks.split("|")]
    entries = parse_entries(args.element, sys_)
    sizes = []
    for lam in lams:
        if not sys_.is_dominant(lam):
            raise UsageError(f"block weight {render_weight(lam)} is not dominant")
        sizes.append(len(embed_highest(sys_, lam)[0].factors))
    if len(entries) != sum(sizes):
        raise UsageError(
            f"element has {len(entries)} factors; the embedded blocks "
            f"need {sum(sizes)}"
        )
    try:
        be = blocked_from_entries(sys_, lams, entries)
    except (ValueError, AssertionError) as exc:
        raise UsageError(f"invalid element: {exc}")
    p, q = args.p, args.q
    if not 1 <= p < q <= len(lams):
        raise UsageError(f"need 1 <= p < q <= {len(lams)}")
    backend = "hk" if args.backend == "both" else args.backend
    out = cactus_s(be, p, q, backend=backend)
    if args.format == "json":
        print(json.dumps(element_to_json(
            sys_, [(b.highest_weight, b.element.entries) for b in out.blocks])))
    else:
        disp = (lambda ws: render_entries_epsilon(sys_, ws)) \
            if args.format == "epsilon" else render_entries
        print(" | ".join(disp(b.element.entries) for b in out.blocks))
    if args.backend == "both":
        out2 = cactus_s(be, p, q, backend="jdt")
        if out2 != out:
            print("MISMATCH")
            return EXIT_CHECK_FAILED
        print("MATCH")
    return EXIT_OK


_CHECK_GRIDS = {
    # default grids sized to finish in seconds; widen with --types/--max-coord
    "comagree": ((("A", 1), ("A", 2), ("B", 2)), 2),
    "axioms": ((("A", 1), ("A", 2), ("B", 2)), 2),
    "involution": ((("A", 1), ("A", 2), ("B", 2)), 2),
    "cactus": ((("A", 1),), None),
}


def _parse_types(text: str):
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if not re.match(r"^[A-E]\d+$", tok):
            raise UsageError(f"cannot parse type {tok!r} (expected e.g. A2)")
        out.append((tok[0], int(tok[1:])))
    return tuple(out)


def cmd_check(args) -> int:
    from . import checks

    suite = args.suite
    if suite not in _CHECK_GRIDS:
        raise UsageError(f"unknown suite {suite!r}; one of {sorted(_CHECK_GRIDS)}")
    grid_types, grid_coord = _CHECK_GRIDS[suite]
    if args.types:
        grid_types = _parse_types(args.types)
    if args.max_coord is not None:
        grid_coord = args.max_coord
    max_rank = int(os.environ.get("CRYSTAL_MAX_RANK", DEFAULT_MAX_RANK))
    for kind, rank in grid_types:
        if rank > max_rank:
            raise UsageError(
                f"rank {rank} exceeds the guard ({max_rank}); "
                "set CRYSTAL_MAX_RANK to override"
            )
    t0 = time.time()
    if suite == "cactus":
        report = checks.run_cactus_relations(types=grid_types)
        reports = [report]
    else:
        grid = checks.run_grid_sweep(grid=grid_types, max_coord=grid_coord or 2)
        if suite == "comagree":
            reports = [grid.comagree, grid.c2, grid.crosscheck]
        elif suite == "involution":
            reports = [grid.involution]
        else:
            reports = [
                grid.axioms, grid.dual_highest, grid.partition,
                grid.reversibility, grid.monotonicity, grid.equivariance,
            ]
    elapsed = time.time() - t0
    ok = all(r.ok for r in reports)
    if args.format == "json":
        print(json.dumps({
            "suite": suite,
            "ok": ok,
            "seconds": round(elapsed, 2),
            "reports": [
                {"name": r.name, "cases": r.cases,
                 "failures": r.failure_count, "samples": r.samples}
                for r in reports
            ],
        }))
    else:
        for r in reports:
            print(r.summary())
            for s in r.samples:
                print(f"  {s}", file=sys.stderr)
        print(f"({elapsed:.1f}s)")
    return EXIT_OK if ok else EXIT_CHECK_FAILED


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------


def _add_system_args(p):
    p.add_argument("--type", required=True, choices=list("ABCDE"),
                   help="root system type")
    p.add_argument("--rank", required=True, type=int, help="root system rank")
    p.add_argument("--format", choices=["text", "json", "epsilon"],
                   default="text")
    p.add_argument("--verify", action="store_true",
                   help="run deep assertions during the computation")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="crystals",
        description="Commutors on tensor products of minuscule crystals.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", help="minuscule decomposition of a weight")
    _add_system_args(p)
    p.add_argument("--weight", required=True)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("orbit", help="Weyl group orbit of a weight")
    _add_system_args(p)
    p.add_argument("--weight", required=True)
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("maxima", help="max elements of an embedded product")
    _add_system_args(p)
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.set_defaults(func=cmd_maxima)

    p = sub.add_parser("commutor", help="apply the commutor to an element")
    _add_system_args(p)
    p.add_argument("--left", required=True, help="highest weight of the left factor")
    p.add_argument("--right", required=True, help="highest weight of the right factor")
    p.add_argument("--element", required=True,
                   help="all factors of the embedded product, e.g. '1,0;1,0;-1,1'")
    p.add_argument("--backend", choices=["hk", "jdt", "both"], default="both")
    p.set_defaults(func=cmd_commutor)

    p = sub.add_parser("growth", help="growth rectangle for a max element")
    _add_system_args(p)
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.add_argument("--element", default="",
                   help="right tensor part (defaults to its highest path)")
    p.set_defaults(func=cmd_growth)

    p = sub.add_parser("cactus", help="interval reversal on a blocked element")
    _add_system_args(p)
    p.add_argument("--blocks", required=True,
                   help="block highest weights separated by '|', e.g. '1,1|2,0'")
    p.add_argument("--element", required=True)
    p.add_argument("-p", type=int, required=True)
    p.add_argument("-q", type=int, required=True)
    p.add_argument("--backend", choices=["hk", "jdt", "both"], default="hk")
    p.set_defaults(func=cmd_cactus)

    p = sub.add_parser("check", help="run a verification suite")
    p.add_argument("suite", choices=sorted(_CHECK_GRIDS))
    p.add_argument("--types", default="",
                   help="comma-separated types, e.g. 'A2,B2,D4'")
    p.add_argument("--max-coord", type=int, default=None,
                   help="bound on dominant weight coordinate sums")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_check)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DecompositionError, QuasiMinusculeError, LocalMoveError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except AssertionError as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
