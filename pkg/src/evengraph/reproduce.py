"""Named reference checks.

Each target recomputes one bundled reference result (stored in
data/expected.json) from scratch and reports PASS or FAIL per check; most
targets also render their figure to an output directory.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from pathlib import Path

from . import figures
from .evenness import (complement, distance_vector, energy, format_rational,
                       is_maximally_even, sum_distances)
from .graphs import FamilySpec, build_family, cycle, dihedral_canonical, path, rotated
from .majorization import MajorizationRelation, check_me_majorization, hasse_diagram, majorize
from .music import default_catalog, names_by_distance_vector, step_symbols, step_sequence
from .search import (DEFAULT_BUDGET, Objective, enumerate_optima,
                     verify_complement_property, verify_cycle_theorem)

__all__ = ["TARGETS", "Check", "TargetReport", "run_target", "run_targets"]

TARGETS = (
    "example-cycles",
    "fig2",
    "fig3",
    "fig5",
    "fig6",
    "p4-counterexample",
    "thm1-sweep",
    "thm2-sweep",
    "thm4-sweep",
)


@dataclass
class Check:
    label: str
    passed: bool
    detail: str = ""


@dataclass
class TargetReport:
    target: str
    checks: list[Check] = field(default_factory=list)
    figures: list[str] = field(default_factory=list)

    def add(self, label: str, passed, detail: str = "") -> None:
        self.checks.append(Check(label, bool(passed), detail))

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def summary(self) -> str:
        if self.passed:
            details = [c.detail for c in self.checks if c.detail]
            return "; ".join(details) if details else "all checks passed"
        failing = [c.label for c in self.checks if not c.passed]
        return "failed: " + ", ".join(failing)


@lru_cache(maxsize=1)
def _expected() -> dict:
    text = (resources.files("evengraph") / "data" / "expected.json").read_text("utf-8")
    return json.loads(text)


def _fraction(pair) -> Fraction:
    return Fraction(pair[0], pair[1])


def _graph(label: str):
    return build_family(FamilySpec.parse(label))


def _target_example_cycles(report: TargetReport, figdir: Path | None,
                           budget: int, workers: int) -> None:
    exp = _expected()["example-cycles"]
    g = _graph(exp["graph"])
    dm = g.distances()
    a = tuple(exp["set"])
    vec = distance_vector(dm, a)
    e = energy(vec)
    report.add("distance-vector", vec == tuple(exp["vector"]), f"D={vec}")
    report.add("sum", sum_distances(vec) == exp["sum"], f"S={sum_distances(vec)}")
    report.add("energy", e == _fraction(exp["energy"]), f"E={format_rational(e)}")

    opt = enumerate_optima(g, len(a), Objective.MIN_ENERGY,
                           budget=budget, workers=workers)
    rotations = {rotated(g.n, a, t) for t in range(g.n)}
    report.add("minimizers-are-the-rotations",
               opt.optimum == e and set(opt.witnesses) == rotations,
               f"{opt.witness_count} minimizers")
    sums = enumerate_optima(g, len(a), Objective.MAX_SUM,
                            budget=budget, workers=workers)
    report.add("sum-maximizers-strictly-larger",
               rotations < set(sums.witnesses),
               f"{sums.witness_count} sum maximizers")

    if figdir is not None:
        panels = [
            (g, tuple(exp["bunched"]), "bunched"),
            (g, a, f"maximally even, E={format_rational(e)}"),
        ]
        report.figures.append(
            figures.save_set_panels(figdir / "example-cycles.png", panels))


def _target_fig2(report: TargetReport, figdir: Path | None,
                 budget: int, workers: int) -> None:
    exp = _expected()["fig2"]
    g = _graph(exp["graph"])
    opt = enumerate_optima(g, exp["m"], Objective.MIN_ENERGY,
                           budget=budget, workers=workers, classes=True)
    sets = [tuple(s) for s in exp["sets"]]
    reps = {rep for rep, _ in opt.classes}
    report.add("class-count", len(opt.classes) == exp["class_count"],
               f"{len(opt.classes)} classes")
    report.add("classes-match-the-listed-sets",
               reps == {dihedral_canonical(g.n, s) for s in sets})
    report.add("listed-sets-are-minimizers",
               all(s in set(opt.witnesses) for s in sets))
    report.add("not-maximally-even-on-the-plain-cycle",
               all(not is_maximally_even(g.n, w) for w in opt.witnesses))
    steps_ok = all(list(step_symbols(step_sequence(g.n, s))) == exp["steps"][i]
                   for i, s in enumerate(sets))
    report.add("step-sequences", steps_ok,
               " ".join("".join(exp["steps"][i]) for i in range(len(sets))))

    cube = _expected()["fig2"]["hypercube"]
    qg = _graph(cube["graph"])
    qopt = enumerate_optima(qg, cube["m"], Objective.MIN_ENERGY,
                            budget=budget, workers=workers)
    report.add("hypercube-optimum",
               qopt.optimum == _fraction(cube["energy"])
               and qopt.witness_count == cube["witness_count"],
               f"cube E={format_rational(qopt.optimum)}, {qopt.witness_count} minimizers")

    if figdir is not None:
        panels = [(g, s, f"({chr(97 + i)}) {exp['scales'][i]}")
                  for i, s in enumerate(sets)]
        panels.append((qg, qopt.witnesses[0], "(d) on the 4-cube"))
        report.figures.append(
            figures.save_set_panels(figdir / "fig2.png", panels))


def _target_fig3(report: TargetReport, figdir: Path | None,
                 budget: int, workers: int) -> None:
    exp = _expected()["fig3"]
    catalog = default_catalog()
    panels = []
    for spec in exp["panels"]:
        g = _graph(spec["graph"])
        opt = enumerate_optima(g, spec["m"], Objective.MIN_ENERGY,
                               budget=budget, workers=workers, classes=True)
        contains = tuple(spec["contains"])
        label = f"{spec['graph']} m={spec['m']}"
        report.add(f"{label} class-count",
                   len(opt.classes) == spec["class_count"],
                   f"{label}: {len(opt.classes)} class(es)")
        report.add(f"{label} contains {contains}",
                   contains in set(opt.witnesses))
        report.add(f"{label} named",
                   spec["name"] in catalog.names(g.n, contains), spec["name"])
        panels.append((g, contains, spec["name"]))
    if figdir is not None:
        report.figures.append(
            figures.save_set_panels(figdir / "fig3.png", panels))


def _hasse_of_sum_maximizers(label: str, m: int, budget: int, workers: int):
    g = _graph(label)
    dm = g.distances()
    opt = enumerate_optima(g, m, Objective.MAX_SUM, budget=budget, workers=workers)
    reps: dict[tuple, tuple[int, ...]] = {}
    for w in opt.witnesses:
        vec = distance_vector(dm, w)
        if vec not in reps or w < reps[vec]:
            reps[vec] = w
    names = names_by_distance_vector(default_catalog(), g.n, dm)
    vectors = sorted(reps)
    diagram = hasse_diagram(vectors, [names.get(v, []) for v in vectors])
    return g, opt, reps, diagram


def _target_fig5(report: TargetReport, figdir: Path | None,
                 budget: int, workers: int) -> None:
    exp = _expected()["fig5"]
    g, opt, reps, diagram = _hasse_of_sum_maximizers(
        exp["graph"], exp["m"], budget, workers)
    report.add("max-sum", opt.optimum == exp["max_sum"], f"S*={opt.optimum}")
    want_nodes = {tuple(n["vector"]): _fraction(n["energy"]) for n in exp["nodes"]}
    got_nodes = {node.key: node.energy for node in diagram.nodes}
    report.add("distinct-vectors", got_nodes == want_nodes,
               f"{len(got_nodes)} vectors")
    energies = ", ".join(
        format_rational(got_nodes[tuple(n["vector"])]) for n in exp["nodes"]
        if tuple(n["vector"]) in got_nodes)
    report.add("energies", all(
        got_nodes.get(tuple(n["vector"])) == _fraction(n["energy"])
        for n in exp["nodes"]), f"energies {energies}")
    want_covers = {(tuple(a), tuple(b)) for a, b in exp["covers"]}
    report.add("covers", set(diagram.covers) == want_covers,
               f"{len(diagram.covers)} covers")
    a, b = (tuple(v) for v in exp["incomparable"])
    report.add("incomparable-pair",
               majorize(a, b) is MajorizationRelation.INCOMPARABLE,
               f"{a} vs {b}")
    if figdir is not None:
        report.figures.append(figures.save_hasse_figure(
            figdir / "fig5.png", diagram, reps, g.n,
            "size-3 maximum-sum classes under majorization"))


def _target_fig6(report: TargetReport, figdir: Path | None,
                 budget: int, workers: int) -> None:
    exp = _expected()["fig6"]
    g, opt, reps, diagram = _hasse_of_sum_maximizers(
        exp["graph"], exp["m"], budget, workers)
    report.add("max-sum", opt.optimum == exp["max_sum"], f"S*={opt.optimum}")
    report.add("vector-count", len(diagram.nodes) == exp["vector_count"],
               f"{len(diagram.nodes)} vectors")
    report.add("cover-count", len(diagram.covers) == exp["cover_count"],
               f"{len(diagram.covers)} covers")
    minimum = min(diagram.nodes, key=lambda node: node.energy)
    report.add("minimum-energy-node",
               minimum.key == tuple(exp["min_energy_vector"])
               and minimum.energy == _fraction(exp["min_energy"])
               and exp["min_energy_scale"] in minimum.labels,
               f"min node E={format_rational(minimum.energy)} ({exp['min_energy_scale']})")
    report.add("minimum-node-is-maximally-even",
               bool(is_maximally_even(g.n, reps[minimum.key])))
    named = sum(1 for node in diagram.nodes if node.labels)
    report.add("all-nodes-named", named == len(diagram.nodes),
               f"{named} named nodes")
    if figdir is not None:
        report.figures.append(figures.save_hasse_figure(
            figdir / "fig6.png", diagram, reps, g.n,
            "size-7 maximum-sum classes under majorization"))


def _target_p4(report: TargetReport, figdir: Path | None,
               budget: int, workers: int) -> None:
    exp = _expected()["p4-counterexample"]
    g = path(4)
    dm = g.distances()
    opt = enumerate_optima(g, exp["m"], Objective.MIN_ENERGY,
                           budget=budget, workers=workers)
    comp = tuple(exp["complement"])
    comp_energy = energy(distance_vector(dm, comp))
    report.add("minimum", opt.optimum == _fraction(exp["minimum_energy"]),
               f"E({tuple(exp['minimizers'][0])})={format_rational(opt.optimum)}")
    report.add("minimizers", [list(w) for w in opt.witnesses] == exp["minimizers"])
    report.add("complement-not-minimal",
               comp_energy == _fraction(exp["complement_energy"])
               and comp_energy > opt.optimum,
               f"E({comp})={format_rational(comp_energy)}")
    check = verify_complement_property(g, exp["m"], budget=budget, workers=workers)
    report.add("complement-property-fails", not check.holds, "property fails")
    report.add("not-distance-degree-regular",
               check.distance_degree_regular == exp["distance_degree_regular"])


def _target_thm1(report: TargetReport, figdir: Path | None,
                 budget: int, workers: int) -> None:
    exp = _expected()["thm1-sweep"]
    for n in range(exp["n_min"], exp["n_max"] + 1):
        result = verify_cycle_theorem(n, budget=budget, workers=workers)
        report.add(f"cycle:{n}", result.holds)
    report.add("range", True,
               f"minimum-energy = maximally even on cycles n={exp['n_min']}..{exp['n_max']}, all m")


def _target_thm2(report: TargetReport, figdir: Path | None,
                 budget: int, workers: int) -> None:
    exp = _expected()["thm2-sweep"]
    for case in exp["cases"]:
        g = _graph(case["graph"])
        for m in case["sizes"]:
            result = verify_complement_property(g, m, budget=budget, workers=workers)
            report.add(f"{case['graph']} m={m}",
                       result.holds and result.distance_degree_regular)
    report.add("summary", True,
               "complementation preserves minimizers on the distance-degree-regular cases")


def _target_thm4(report: TargetReport, figdir: Path | None,
                 budget: int, workers: int) -> None:
    exp = _expected()["thm4-sweep"]
    for n in range(exp["n_min"], exp["n_max"] + 1):
        for m in range(1, n + 1):
            result = check_me_majorization(n, m, budget=budget)
            report.add(f"n={n} m={m}", result.holds)
    report.add("range", True,
               f"maximally even = majorized by all sum-maximizer vectors, n={exp['n_min']}..{exp['n_max']}")


_RUNNERS = {
    "example-cycles": _target_example_cycles,
    "fig2": _target_fig2,
    "fig3": _target_fig3,
    "fig5": _target_fig5,
    "fig6": _target_fig6,
    "p4-counterexample": _target_p4,
    "thm1-sweep": _target_thm1,
    "thm2-sweep": _target_thm2,
    "thm4-sweep": _target_thm4,
}


def run_target(target: str, figures_dir=None, *, budget: int = DEFAULT_BUDGET,
               workers: int = 1) -> TargetReport:
    """Run one named reference check; figures_dir=None skips figure output."""
    if target not in _RUNNERS:
        raise ValueError(
            f"unknown target {target!r} (expected one of: {', '.join(TARGETS)})")
    figdir = None
    if figures_dir is not None:
        figdir = Path(figures_dir)
        figdir.mkdir(parents=True, exist_ok=True)
    report = TargetReport(target)
    _RUNNERS[target](report, figdir, budget, workers)
    return report


def run_targets(targets, figures_dir=None, *, budget: int = DEFAULT_BUDGET,
                workers: int = 1) -> list[TargetReport]:
    return [run_target(t, figures_dir, budget=budget, workers=workers)
            for t in targets]
