"""Musical readings of vertex sets on circular layouts.

A set on an n-circle can be printed as an onset/rest grid, summarized by its
circular step sequence, or matched against a catalog of named rhythms,
chords, and scales.  Catalog keys are canonical under rotation, so a set
whose mirror image is not one of its own rotations names only the clockwise
reading; its counterclockwise reading may carry a different name.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from importlib import resources
from typing import Iterable

from .evenness import check_vertex_set, distance_vector
from .graphs import DistanceMatrix, rotation_canonical

__all__ = [
    "ASCII_GLYPHS",
    "DISPLAY_GLYPHS",
    "CatalogError",
    "CatalogEntry",
    "Catalog",
    "render_rhythm",
    "step_sequence",
    "step_symbols",
    "format_steps",
    "onsets_from_steps",
    "identify",
    "load_catalog",
    "default_catalog",
    "names_by_distance_vector",
]

ASCII_GLYPHS = ("x", ".")
DISPLAY_GLYPHS = ("×", "·")  # the typographic onset/rest glyphs

_STEP_NAMES = {1: "H", 2: "W", 3: "WH"}


class CatalogError(ValueError):
    """Catalog text failed to parse or validate."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


def render_rhythm(n: int, onsets: Iterable[int],
                  glyphs: tuple[str, str] = ASCII_GLYPHS) -> str:
    """Bracketed beat grid with an onset glyph at each member position."""
    members = set(check_vertex_set(n, onsets))
    on, off = glyphs
    return "[" + "".join(on if i in members else off for i in range(n)) + "]"


def step_sequence(n: int, members: Iterable[int]) -> tuple[int, ...]:
    """Circular gaps between consecutive onsets, starting at the smallest.

    The gaps always sum to n; a single onset wraps the full circle.
    """
    a = check_vertex_set(n, members)
    if not a:
        raise ValueError("step sequence is undefined for an empty onset set")
    gaps = [a[i + 1] - a[i] for i in range(len(a) - 1)]
    gaps.append(n - a[-1] + a[0])
    assert sum(gaps) == n
    return tuple(gaps)


def step_symbols(gaps: Iterable[int]) -> tuple[str, ...]:
    """H for 1, W for 2, WH for 3; wider gaps render as plain integers."""
    return tuple(_STEP_NAMES.get(gap, str(gap)) for gap in gaps)


def format_steps(gaps: Iterable[int]) -> str:
    return "[" + ", ".join(step_symbols(gaps)) + "]"


def onsets_from_steps(n: int, start: int, gaps: Iterable[int]) -> tuple[int, ...]:
    """Rebuild the onset set from its first onset and circular gaps."""
    gaps = tuple(gaps)
    if sum(gaps) != n:
        raise ValueError(f"gaps sum to {sum(gaps)}, expected {n}")
    out = [start % n]
    for gap in gaps[:-1]:
        out.append((out[-1] + gap) % n)
    return tuple(sorted(out))


@dataclass(frozen=True)
class CatalogEntry:
    n: int
    members: tuple[int, ...]  # the set as written in the catalog source
    key: tuple[int, ...]      # least rotation of the set
    name: str
    tag: str


class Catalog:
    """Lookup table from circular vertex-set classes to traditional names."""

    def __init__(self, entries: Iterable[CatalogEntry]):
        self.entries = tuple(entries)
        self._index: dict[tuple[int, tuple[int, ...]], list[CatalogEntry]] = {}
        for entry in self.entries:
            self._index.setdefault((entry.n, entry.key), []).append(entry)

    def __len__(self) -> int:
        return len(self.entries)

    def lookup(self, n: int, members: Iterable[int]) -> list[CatalogEntry]:
        key = rotation_canonical(n, check_vertex_set(n, members))
        return list(self._index.get((n, key), ()))

    def names(self, n: int, members: Iterable[int]) -> list[str]:
        return [entry.name for entry in self.lookup(n, members)]


def identify(n: int, members: Iterable[int], catalog: Catalog,
             direction: str = "clockwise", anchor: int | None = None) -> list[str]:
    """Catalog names matching the set read in the given direction.

    A counterclockwise reading mirrors the set before lookup, and the anchor
    rotates the reading's starting vertex to 0.  Rotation-canonical keys make
    the anchor cosmetic, but exposing it keeps alternate readings of one set
    explicit and reproducible.
    """
    a = check_vertex_set(n, members)
    if direction not in ("clockwise", "counterclockwise"):
        raise ValueError(
            f"direction must be 'clockwise' or 'counterclockwise', got {direction!r}")
    t = 0 if anchor is None else int(anchor)
    if not 0 <= t < n:
        raise ValueError(f"anchor {t} out of range 0..{n - 1}")
    if direction == "clockwise":
        reading = tuple(sorted((x - t) % n for x in a))
    else:
        reading = tuple(sorted((t - x) % n for x in a))
    return catalog.names(n, reading)


def load_catalog(text: str) -> Catalog:
    """Parse catalog text: one ``n|v0,v1,...|name|tag`` entry per line.

    Vertex sets must be strictly increasing and in range 0..n-1; keys are
    canonicalized to the least rotation on load.  ``#`` starts a comment.
    """
    entries = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = [p.strip() for p in line.split("|")]
        if len(parts) != 4:
            raise CatalogError(
                f"expected 4 '|'-separated fields, got {len(parts)}", lineno)
        try:
            n = int(parts[0])
        except ValueError:
            raise CatalogError(f"bad circle size {parts[0]!r}", lineno) from None
        if n < 1:
            raise CatalogError(f"circle size must be positive, got {n}", lineno)
        try:
            members = tuple(int(tok) for tok in parts[1].split(","))
        except ValueError:
            raise CatalogError(f"bad vertex set {parts[1]!r}", lineno) from None
        if list(members) != sorted(set(members)):
            raise CatalogError(
                f"vertex set must be strictly increasing, got {parts[1]!r}", lineno)
        if members[0] < 0 or members[-1] >= n:
            raise CatalogError(
                f"vertex out of range 0..{n - 1} in {parts[1]!r}", lineno)
        gap_total = sum(step_sequence(n, members))
        if gap_total != n:
            raise CatalogError(
                f"circular gaps sum to {gap_total}, expected {n}", lineno)
        name = parts[2]
        if not name:
            raise CatalogError("empty display name", lineno)
        entries.append(CatalogEntry(n, members, rotation_canonical(n, members),
                                    name, parts[3]))
    return Catalog(entries)


def default_catalog() -> Catalog:
    """The bundled name catalog; EVENGRAPH_CATALOG overrides the file path."""
    override = os.environ.get("EVENGRAPH_CATALOG")
    if override:
        with open(override, encoding="utf-8") as fh:
            return load_catalog(fh.read())
    text = (resources.files("evengraph") / "data" / "catalog.txt").read_text("utf-8")
    return load_catalog(text)


def names_by_distance_vector(catalog: Catalog, n: int, dm: DistanceMatrix
                             ) -> dict[tuple[int, ...], list[str]]:
    """Catalog names for ambient size n, grouped by the distance vector of
    each entry's written set under the given distance matrix."""
    out: dict[tuple[int, ...], list[str]] = {}
    for entry in catalog.entries:
        if entry.n != n:
            continue
        vec = distance_vector(dm, entry.members)
        names = out.setdefault(vec, [])
        if entry.name not in names:
            names.append(entry.name)
    return out
