"""Command-line interface.

Exit codes: 0 on success (including checks whose mathematical answer is
"no"), 1 on domain errors, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .evenness import (distance_vector, energy, format_rational, is_maximally_even,
                       j_set, rational_decimal, rational_json, sum_distances)
from .graphs import (FamilySpec, build_family, is_distance_degree_regular,
                     parse_edge_list)
from .majorization import MajorizationRelation, check_me_majorization, majorize
from .music import (ASCII_GLYPHS, DISPLAY_GLYPHS, default_catalog, format_steps,
                    identify, load_catalog, names_by_distance_vector, render_rhythm,
                    step_sequence, step_symbols)
from .reproduce import TARGETS, run_targets
from .search import (DEFAULT_BUDGET, Objective, enumerate_optima,
                     verify_complement_property, verify_cycle_theorem)

_OBJECTIVES = {"min-energy": Objective.MIN_ENERGY, "max-sum": Objective.MAX_SUM}


def _parse_set(text: str) -> tuple[int, ...]:
    """Comma-separated vertices; surrounding braces are accepted and stripped."""
    body = text.strip().strip("{}").strip()
    if not body:
        return ()
    try:
        return tuple(int(tok.strip()) for tok in body.split(","))
    except ValueError:
        raise ValueError(f"bad vertex set {text!r}: expected comma-separated integers") from None


def _parse_tuple(text: str) -> tuple[Fraction, ...]:
    body = text.strip().strip("()").strip()
    if not body:
        raise ValueError(f"empty tuple {text!r}")
    try:
        return tuple(Fraction(tok.strip()) for tok in body.split(","))
    except ValueError:
        raise ValueError(f"bad tuple {text!r}: expected comma-separated numbers") from None


def _graph_from(args) -> "Graph":
    if getattr(args, "edge_list", None):
        with open(args.edge_list, encoding="utf-8") as fh:
            return parse_edge_list(fh.read())
    return build_family(FamilySpec.parse(args.graph))


def _catalog_from(args):
    if getattr(args, "catalog", None):
        with open(args.catalog, encoding="utf-8") as fh:
            return load_catalog(fh.read())
    return default_catalog()


def _add_graph_arguments(sub, edge_list: bool = True) -> None:
    group = sub.add_mutually_exclusive_group(required=True)
    group.add_argument("--graph", metavar="SPEC",
                       help="family spec: cycle:12, cyclepow:12:2, mobius:8, "
                            "hypercube:4, path:4, complete:5")
    if edge_list:
        group.add_argument("--edge-list", metavar="FILE",
                           help="file in the plain edge-list format")


def _emit(args, lines, obj) -> None:
    if args.format == "json":
        print(json.dumps(obj, indent=2))
    else:
        print("\n".join(lines))


def _set_str(members) -> str:
    return "{" + ",".join(str(v) for v in members) + "}"


def _vec_str(vec) -> str:
    return "(" + ",".join(str(d) for d in vec) + ")"


def _cmd_graph_info(args) -> int:
    g = _graph_from(args)
    dm = g.distances()
    ddr = is_distance_degree_regular(g)
    degs = g.degrees()
    lines = [
        f"graph: {g.label}",
        f"vertices: {g.n}",
        f"edges: {len(g.edges)}",
        f"degrees: min {min(degs)}, max {max(degs)}",
        f"diameter: {dm.diameter()}",
        f"distance degree regular: {'yes' if ddr else 'no'}",
    ]
    obj = {
        "graph": g.label,
        "n": g.n,
        "edge_count": len(g.edges),
        "edges": [list(e) for e in g.edges],
        "degrees": list(degs),
        "diameter": dm.diameter(),
        "distance_degree_regular": ddr,
    }
    _emit(args, lines, obj)
    return 0


def _cmd_energy(args) -> int:
    g = _graph_from(args)
    members = _parse_set(args.set)
    vec = distance_vector(g.distances(), members)
    e = energy(vec)
    s = sum_distances(vec)
    lines = [
        f"graph: {g.label}",
        f"set: {_set_str(members)}",
        f"D: {_vec_str(vec)}",
        f"S: {s}",
        f"E: {format_rational(e)} ({rational_decimal(e)})",
    ]
    obj = {
        "graph": g.label,
        "set": list(members),
        "distance_vector": list(vec),
        "sum": s,
        "energy": rational_json(e),
    }
    _emit(args, lines, obj)
    return 0


def _cmd_optimize(args) -> int:
    g = _graph_from(args)
    report = enumerate_optima(g, args.size, _OBJECTIVES[args.objective],
                              budget=args.budget, workers=args.workers,
                              classes=args.classes)
    if isinstance(report.optimum, Fraction):
        optimum = f"{format_rational(report.optimum)} ({rational_decimal(report.optimum)})"
    else:
        optimum = str(report.optimum)
    lines = [
        f"graph: {g.label}  m: {report.m}  objective: {report.objective.value}",
        f"optimum: {optimum}",
        f"witnesses: {report.witness_count}"
        + ("  (list truncated)" if report.truncated else ""),
    ]
    lines.extend(f"  {_set_str(w)}" for w in report.witnesses)
    if report.classes is not None:
        lines.append(f"classes (up to rotation and reflection): {len(report.classes)}")
        lines.extend(f"  {_set_str(rep)} x{size}" for rep, size in report.classes)
    _emit(args, lines, report.to_json_dict())
    return 0


def _cmd_me_gen(args) -> int:
    members = j_set(args.n, args.m, args.r)
    lines = [f"{_set_str(members)}"]
    obj = {"n": args.n, "m": args.m, "r": args.r, "set": list(members)}
    _emit(args, lines, obj)
    return 0


def _cmd_me_check(args) -> int:
    members = _parse_set(args.set)
    witnesses = is_maximally_even(args.n, members)
    if witnesses:
        lines = [f"maximally even (r = {', '.join(map(str, witnesses))})"]
    else:
        lines = ["not maximally even"]
    obj = {"n": args.n, "set": list(members),
           "maximally_even": bool(witnesses), "witnesses": witnesses}
    _emit(args, lines, obj)
    return 0


def _cmd_majorize(args) -> int:
    x = _parse_tuple(args.x)
    y = _parse_tuple(args.y)
    relation = majorize(x, y)
    wording = {
        MajorizationRelation.STRICTLY_BELOW: "x is strictly majorized by y (x is more even)",
        MajorizationRelation.EQUIVALENT: "x and y are permutations of each other",
        MajorizationRelation.STRICTLY_ABOVE: "y is strictly majorized by x (y is more even)",
        MajorizationRelation.INCOMPARABLE: "x and y are incomparable",
    }
    def num(v):
        return [e.numerator if e.denominator == 1 else str(e) for e in v]
    _emit(args, [wording[relation]],
          {"x": num(x), "y": num(y), "relation": relation.value})
    return 0


def _cmd_hasse(args) -> int:
    g = _graph_from(args)
    dm = g.distances()
    report = enumerate_optima(g, args.size, _OBJECTIVES[args.of],
                              budget=args.budget, workers=args.workers)
    from .majorization import hasse_diagram  # local to keep module import light
    reps: dict[tuple, tuple[int, ...]] = {}
    for w in report.witnesses:
        vec = distance_vector(dm, w)
        if vec not in reps or w < reps[vec]:
            reps[vec] = w
    names = names_by_distance_vector(_catalog_from(args), g.n, dm)
    vectors = sorted(reps)
    diagram = hasse_diagram(vectors, [names.get(v, []) for v in vectors])
    if args.format == "dot":
        print(diagram.to_dot())
        return 0
    lines = [f"nodes: {len(diagram.nodes)}"]
    for node in diagram.nodes:
        extra = ("  " + "; ".join(node.labels)) if node.labels else ""
        lines.append(f"  {node.key_str()}  E={format_rational(node.energy)} "
                     f"({rational_decimal(node.energy)})  S={node.total}{extra}")
    lines.append(f"covers: {len(diagram.covers)}")
    lines.extend(f"  {_vec_str(a)} -> {_vec_str(b)}" for a, b in diagram.covers)
    obj = {
        "graph": g.label,
        "m": args.size,
        "objective": _OBJECTIVES[args.of].value,
        "nodes": [{"vector": list(node.key),
                   "energy": rational_json(node.energy),
                   "sum": node.total,
                   "labels": list(node.labels)} for node in diagram.nodes],
        "covers": [[list(a), list(b)] for a, b in diagram.covers],
    }
    _emit(args, lines, obj)
    return 0


def _cmd_verify_thm1(args) -> int:
    ns = [args.n] if args.n else list(range(3, args.n_max + 1))
    all_hold = True
    for n in ns:
        result = verify_cycle_theorem(n, budget=args.budget, workers=args.workers)
        if result.holds:
            print(f"n={n}: OK (minimum-energy sets = maximally even sets for m=1..{n})")
        else:
            all_hold = False
            for row in result.rows:
                if not row.matches:
                    print(f"n={n} m={row.m}: MISMATCH "
                          f"only-minimal={row.only_minimal_energy} "
                          f"only-me={row.only_maximally_even}")
    print("result: " + ("PASS" if all_hold else "FAIL"))
    return 0


def _cmd_verify_thm2(args) -> int:
    g = _graph_from(args)
    result = verify_complement_property(g, args.size,
                                        budget=args.budget, workers=args.workers)
    print(f"graph: {result.graph}  m: {result.m}  (complement size {result.n - result.m})")
    print(f"distance degree regular: {'yes' if result.distance_degree_regular else 'no'}")
    print(f"minimizers: {result.witness_count} of size {result.m}, "
          f"{result.complement_witness_count} of size {result.n - result.m}")
    if result.holds:
        print("complementation maps minimizers exactly onto minimizers: yes")
    else:
        print("complementation maps minimizers exactly onto minimizers: NO")
        for w in result.not_minimal_complements[:5]:
            print(f"  complement {_set_str(w)} is not minimal")
        for w in result.unmatched_complement_minimizers[:5]:
            print(f"  minimizer {_set_str(w)} is not a complement of a minimizer")
    return 0


def _cmd_verify_thm4(args) -> int:
    ms = [args.m] if args.m else list(range(1, args.n + 1))
    all_hold = True
    for m in ms:
        result = check_me_majorization(args.n, m, budget=args.budget)
        if result.holds:
            print(f"n={args.n} m={m}: OK "
                  f"(max S = {result.max_sum}, {result.maximizer_vector_count} maximizer vectors)")
        else:
            all_hold = False
            for subset, me, below in result.counterexamples[:5]:
                print(f"n={args.n} m={m}: COUNTEREXAMPLE {_set_str(subset)} "
                      f"maximally-even={me} majorized-by-all={below}")
    print("result: " + ("PASS" if all_hold else "FAIL"))
    return 0


def _cmd_music_render(args) -> int:
    glyphs = DISPLAY_GLYPHS if args.glyphs else ASCII_GLYPHS
    members = _parse_set(args.set)
    grid = render_rhythm(args.n, members, glyphs)
    lines = [grid]
    obj = {"n": args.n, "onsets": list(members), "rhythm": grid}
    if members:
        gaps = step_sequence(args.n, members)
        lines.append(f"steps: {format_steps(gaps)}")
        obj["gaps"] = list(gaps)
        obj["steps"] = list(step_symbols(gaps))
    _emit(args, lines, obj)
    return 0


def _cmd_music_identify(args) -> int:
    members = _parse_set(args.set)
    names = identify(args.n, members, _catalog_from(args),
                     direction=args.direction, anchor=args.anchor)
    lines = names if names else ["no catalog match"]
    obj = {"n": args.n, "set": list(members), "direction": args.direction,
           "anchor": args.anchor, "names": names}
    _emit(args, lines, obj)
    return 0


def _cmd_reproduce(args) -> int:
    targets = list(TARGETS) if args.target == "all" else [args.target]
    figures_dir = None if args.no_figures else args.figures_dir
    reports = run_targets(targets, figures_dir,
                          budget=args.budget, workers=args.workers)
    failed = False
    for report in reports:
        status = "PASS" if report.passed else "FAIL"
        failed = failed or not report.passed
        print(f"{report.target}\t{status}\t{report.summary}")
        for fig in report.figures:
            print(f"wrote {fig}", file=sys.stderr)
    return 1 if failed else 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="evengraph",
        description="Evenness of vertex sets in finite graphs: exact energies, "
                    "maximally even sets, majorization, and musical readings.")
    subs = parser.add_subparsers(dest="command", required=True)

    def formats(sub, choices=("text", "json")):
        sub.add_argument("--format", choices=choices, default="text",
                         help="output format (default: text)")

    def budget(sub):
        sub.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                         help="subset enumeration budget (default: %(default)s)")
        sub.add_argument("--workers", type=int, default=1,
                         help="parallel scan chunks; never affects results")

    sub = subs.add_parser("graph-info", help="structural summary of a graph")
    _add_graph_arguments(sub)
    formats(sub)
    sub.set_defaults(func=_cmd_graph_info)

    sub = subs.add_parser("energy", help="distance vector, sum, and energy of a set")
    _add_graph_arguments(sub)
    sub.add_argument("--set", required=True, help="comma-separated vertices")
    formats(sub)
    sub.set_defaults(func=_cmd_energy)

    sub = subs.add_parser("optimize",
                          help="all minimum-energy or maximum-sum m-subsets")
    _add_graph_arguments(sub)
    sub.add_argument("--size", type=int, required=True, metavar="M")
    sub.add_argument("--objective", choices=sorted(_OBJECTIVES), default="min-energy")
    sub.add_argument("--classes", action="store_true",
                     help="also group witnesses up to rotation and reflection")
    budget(sub)
    formats(sub)
    sub.set_defaults(func=_cmd_optimize)

    sub = subs.add_parser("me-gen", help="generate a maximally even set")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--m", type=int, required=True)
    sub.add_argument("--r", type=int, default=0, help="rotation parameter (default 0)")
    formats(sub)
    sub.set_defaults(func=_cmd_me_gen)

    sub = subs.add_parser("me-check", help="test a set for maximal evenness")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--set", required=True)
    formats(sub)
    sub.set_defaults(func=_cmd_me_check)

    sub = subs.add_parser("majorize", help="compare two tuples under majorization")
    sub.add_argument("--x", required=True, help="comma-separated numbers")
    sub.add_argument("--y", required=True)
    formats(sub)
    sub.set_defaults(func=_cmd_majorize)

    sub = subs.add_parser("hasse",
                          help="majorization diagram of the optimal distance vectors")
    _add_graph_arguments(sub)
    sub.add_argument("--size", type=int, required=True, metavar="M")
    sub.add_argument("--of", choices=sorted(_OBJECTIVES), default="max-sum",
                     help="which optimal family to diagram (default: max-sum)")
    sub.add_argument("--catalog", help="override the name catalog file")
    budget(sub)
    formats(sub, ("text", "json", "dot"))
    sub.set_defaults(func=_cmd_hasse)

    sub = subs.add_parser("verify-thm1",
                          help="minimum energy = maximally even, on cycles")
    sub.add_argument("--n", type=int, help="single cycle size")
    sub.add_argument("--n-max", type=int, default=14,
                     help="sweep 3..N-MAX when --n is not given (default 14)")
    budget(sub)
    sub.set_defaults(func=_cmd_verify_thm1)

    sub = subs.add_parser("verify-thm2",
                          help="complement property of minimizers on one graph")
    _add_graph_arguments(sub)
    sub.add_argument("--size", type=int, required=True, metavar="M")
    budget(sub)
    sub.set_defaults(func=_cmd_verify_thm2)

    sub = subs.add_parser("verify-thm4",
                          help="maximally even = majorized by all sum maximizers")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--m", type=int, help="single size (default: all 1..n)")
    budget(sub)
    sub.set_defaults(func=_cmd_verify_thm4)

    sub = subs.add_parser("music-render", help="onset grid and step sequence")
    sub.add_argument("--n", type=int, required=True, help="beats per measure")
    sub.add_argument("--set", required=True, help="onset positions")
    sub.add_argument("--glyphs", action="store_true",
                     help="use the typographic onset/rest glyphs")
    formats(sub)
    sub.set_defaults(func=_cmd_music_render)

    sub = subs.add_parser("music-identify", help="name a rhythm or scale")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--set", required=True)
    sub.add_argument("--direction", choices=("clockwise", "counterclockwise"),
                     default="clockwise")
    sub.add_argument("--anchor", type=int, help="starting vertex of the reading")
    sub.add_argument("--catalog", help="override the name catalog file")
    formats(sub)
    sub.set_defaults(func=_cmd_music_identify)

    sub = subs.add_parser("reproduce",
                          help="recompute a named reference check and render its figure")
    sub.add_argument("target", choices=TARGETS + ("all",))
    sub.add_argument("--figures-dir", default="figures",
                     help="directory for rendered figures (default: ./figures)")
    sub.add_argument("--no-figures", action="store_true",
                     help="skip figure rendering")
    budget(sub)
    sub.set_defaults(func=_cmd_reproduce)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (None, 0) else int(exc.code)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
