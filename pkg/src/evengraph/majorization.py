"""The majorization preorder on equal-length tuples.

x is majorized by y when x's descending prefix sums never exceed y's and the
totals agree; intuitively x spreads the same total more equitably.  This
module compares tuples exactly, performs equalizing (rich-to-poor) transfers,
evaluates the reciprocal-sum comparison function, builds Hasse diagrams of
the order over distance vectors, and runs the brute-force equivalence check
between maximal evenness and being majorized by every maximum-sum vector.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .evenness import distance_vector, format_rational, is_maximally_even
from .graphs import cycle
from .search import DEFAULT_BUDGET, BudgetExceededError, Objective, _optimize

__all__ = [
    "MajorizationRelation",
    "TransferError",
    "majorize",
    "robinhood_transfer",
    "schur_phi",
    "HasseNode",
    "HasseDiagram",
    "hasse_diagram",
    "MEMajorizationReport",
    "check_me_majorization",
]


class MajorizationRelation(enum.Enum):
    STRICTLY_BELOW = "strictly_below"
    EQUIVALENT = "equivalent"
    STRICTLY_ABOVE = "strictly_above"
    INCOMPARABLE = "incomparable"


class TransferError(ValueError):
    """An equalizing transfer violated its preconditions."""


def majorize(x: Sequence, y: Sequence) -> MajorizationRelation:
    """Where x stands relative to y in the majorization preorder.

    EQUIVALENT when the tuples agree as multisets; STRICTLY_BELOW when x is
    majorized by y; STRICTLY_ABOVE for the reverse; INCOMPARABLE otherwise,
    including whenever the totals differ.  Entries may be ints or fractions.
    """
    xs = sorted(x, reverse=True)
    ys = sorted(y, reverse=True)
    if len(xs) != len(ys):
        raise ValueError(
            f"majorization compares equal-length tuples, got {len(xs)} and {len(ys)}")
    if not xs:
        raise ValueError("majorization is undefined for empty tuples")
    if xs == ys:
        return MajorizationRelation.EQUIVALENT
    x_below = y_below = True
    px = py = 0
    for a, b in zip(xs[:-1], ys[:-1]):
        px += a
        py += b
        if px > py:
            x_below = False
        elif py > px:
            y_below = False
    if px + xs[-1] != py + ys[-1]:
        return MajorizationRelation.INCOMPARABLE
    if x_below:
        return MajorizationRelation.STRICTLY_BELOW
    if y_below:
        return MajorizationRelation.STRICTLY_ABOVE
    return MajorizationRelation.INCOMPARABLE


def robinhood_transfer(y: Sequence, from_index: int, to_index: int, amount) -> tuple:
    """Move `amount` from a larger entry toward a smaller one.

    Requires amount > 0 and y[from] - amount >= y[to] + amount, so the
    transfer never overshoots; the result is majorized by the input.
    """
    values = tuple(y)
    size = len(values)
    if not (0 <= from_index < size and 0 <= to_index < size):
        raise TransferError(f"transfer indices out of range 0..{size - 1}")
    if from_index == to_index:
        raise TransferError("transfer needs two distinct entries")
    if amount <= 0:
        raise TransferError(f"transfer amount must be positive, got {amount}")
    if values[from_index] - amount < values[to_index] + amount:
        raise TransferError(
            f"transfer of {amount} from {values[from_index]} to {values[to_index]} "
            "overshoots: the source must stay at least as large as the target")
    out = list(values)
    out[from_index] -= amount
    out[to_index] += amount
    return tuple(out)


def schur_phi(x: Iterable) -> Fraction:
    """Exact sum of reciprocals; decreases as tuples become more equitable."""
    total = Fraction(0)
    for entry in x:
        q = Fraction(entry)
        if q <= 0:
            raise ValueError(f"entries must be positive, got {entry}")
        total += 1 / q
    return total


@dataclass(frozen=True)
class HasseNode:
    key: tuple                 # entries sorted ascending; one node per multiset
    labels: tuple[str, ...]
    energy: Fraction | None    # reciprocal sum, when all entries are positive
    total: object              # sum of the entries

    def key_str(self) -> str:
        return "(" + ",".join(str(e) for e in self.key) + ")"


@dataclass(frozen=True)
class HasseDiagram:
    nodes: tuple[HasseNode, ...]
    covers: tuple[tuple[tuple, tuple], ...]  # (lower.key, upper.key), lower majorized

    def node(self, key: Sequence) -> HasseNode:
        want = tuple(sorted(key))
        for node in self.nodes:
            if node.key == want:
                return node
        raise KeyError(f"no node {want}")

    def to_dot(self, name: str = "majorization") -> str:
        """Graph-description text: one node per tuple, one edge per cover,
        directed from the majorized (more even) tuple to the majorizing one."""
        lines = [f"digraph {name} {{", "  rankdir=LR;", "  node [shape=box];"]
        for node in self.nodes:
            parts = [node.key_str()]
            if node.energy is not None:
                parts.append(f"E={format_rational(node.energy)}")
            parts.extend(node.labels)
            label = "\\n".join(parts)
            lines.append(f'  "{node.key_str()}" [label="{label}"];')
        for low, high in self.covers:
            low_str = "(" + ",".join(str(e) for e in low) + ")"
            high_str = "(" + ",".join(str(e) for e in high) + ")"
            lines.append(f'  "{low_str}" -> "{high_str}";')
        lines.append("}")
        return "\n".join(lines)


def hasse_diagram(vectors: Sequence[Sequence], labels: Sequence | None = None) -> HasseDiagram:
    """Transitive reduction of strict majorization over the given tuples.

    Tuples equal as multisets merge into one node whose labels concatenate.
    Covers run from the majorized tuple to the majorizing one, with every
    transitively implied pair removed.
    """
    if labels is None:
        labels = [()] * len(vectors)
    if len(labels) != len(vectors):
        raise ValueError("labels must parallel vectors")
    length = None
    merged: dict[tuple, list[str]] = {}
    for vec, lab in zip(vectors, labels):
        key = tuple(sorted(vec))
        if length is None:
            length = len(key)
        elif len(key) != length:
            raise ValueError(
                f"all tuples must share one length, got {length} and {len(key)}")
        names = [lab] if isinstance(lab, str) else list(lab)
        merged.setdefault(key, [])
        for name in names:
            if name not in merged[key]:
                merged[key].append(name)

    keys = sorted(merged)
    below = {(a, b) for a, b in itertools.permutations(keys, 2)
             if majorize(a, b) is MajorizationRelation.STRICTLY_BELOW}
    covers = []
    for a, b in sorted(below):
        if not any((a, c) in below and (c, b) in below for c in keys):
            covers.append((a, b))

    nodes = []
    for key in keys:
        positive = all(e > 0 for e in key)
        nodes.append(HasseNode(key, tuple(merged[key]),
                               schur_phi(key) if positive else None, sum(key)))
    return HasseDiagram(tuple(nodes), tuple(covers))


@dataclass(frozen=True)
class MEMajorizationReport:
    n: int
    m: int
    holds: bool
    max_sum: int
    maximizer_vector_count: int
    # (set, is maximally even, majorized by every maximizer vector)
    counterexamples: tuple[tuple[tuple[int, ...], bool, bool], ...]


def check_me_majorization(n: int, m: int, *, budget: int = DEFAULT_BUDGET
                          ) -> MEMajorizationReport:
    """Brute-force equivalence check on the n-cycle: an m-set is maximally
    even exactly when its distance vector is majorized by (or multiset-equal
    to) the distance vector of every maximum-sum m-set.
    """
    if n < 3:
        raise ValueError(f"cycle size must be >= 3, got {n}")
    if not 1 <= m <= n:
        raise ValueError(f"size must satisfy 1 <= m <= {n}, got {m}")
    total = math.comb(n, m)
    if total > budget:
        raise BudgetExceededError(
            f"C({n},{m}) = {total} subsets exceeds the enumeration budget {budget}")
    g = cycle(n)
    dm = g.distances()
    max_sum, maximizers = _optimize(g, m, Objective.MAX_SUM, budget=budget)
    vectors = sorted({distance_vector(dm, w) for w in maximizers})
    below_ok = (MajorizationRelation.STRICTLY_BELOW, MajorizationRelation.EQUIVALENT)
    bad = []
    for subset in itertools.combinations(range(n), m):
        me = bool(is_maximally_even(n, subset))
        if m == 1:
            below_all = True  # length-0 vectors: nothing to compare
        else:
            vec = distance_vector(dm, subset)
            below_all = all(majorize(vec, v) in below_ok for v in vectors)
        if me != below_all:
            bad.append((subset, me, below_all))
    return MEMajorizationReport(n, m, not bad, max_sum, len(vectors), tuple(bad))
