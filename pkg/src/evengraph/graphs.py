"""Finite simple graphs on vertices 0..n-1: family generators, exact
breadth-first distances, and circular-symmetry helpers.

Graphs are immutable once built.  Connectivity is enforced when distances are
requested, not at construction, so custom graphs can be assembled freely.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

__all__ = [
    "Graph",
    "DistanceMatrix",
    "FamilySpec",
    "GraphError",
    "FamilySpecError",
    "EdgeListError",
    "DisconnectedError",
    "build_family",
    "cycle",
    "cycle_power",
    "mobius_ladder",
    "hypercube",
    "path",
    "complete",
    "parse_edge_list",
    "all_pairs_distances",
    "vertex_distance_vector",
    "is_distance_degree_regular",
    "rotated",
    "reflected",
    "rotation_canonical",
    "dihedral_canonical",
]


class GraphError(ValueError):
    """A graph or graph request failed validation."""


class FamilySpecError(GraphError):
    """A family generator was given out-of-bounds parameters."""


class EdgeListError(GraphError):
    """Edge-list text failed to parse or validate."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class DisconnectedError(GraphError):
    """Distances were requested for a graph that is not connected."""

    def __init__(self, u: int, v: int):
        super().__init__(f"graph is not connected: no path from vertex {u} to vertex {v}")
        self.unreachable_pair = (u, v)


_FAMILIES = ("cycle", "cyclepow", "mobius", "hypercube", "path", "complete")


@dataclass(frozen=True)
class FamilySpec:
    """A named graph family with its integer parameters, e.g. ``cyclepow:12:2``."""

    kind: str
    params: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))
        self._validate()

    def _validate(self) -> None:
        kind, params = self.kind, self.params

        def need(count: int, cond: bool, msg: str) -> None:
            if len(params) != count:
                raise FamilySpecError(
                    f"{kind} takes {count} parameter(s), got {len(params)}")
            if not cond:
                raise FamilySpecError(f"{self}: {msg}")

        if kind == "cycle":
            need(1, params[0] >= 3, "cycle needs n >= 3")
        elif kind == "cyclepow":
            need(2, params[0] >= 3 and params[1] >= 1,
                 "cyclepow needs n >= 3 and k >= 1")
        elif kind == "mobius":
            need(1, params[0] >= 6 and params[0] % 2 == 0,
                 "mobius needs an even vertex count >= 6")
        elif kind == "hypercube":
            need(1, params[0] >= 1, "hypercube needs dimension d >= 1")
        elif kind == "path":
            need(1, params[0] >= 1, "path needs n >= 1")
        elif kind == "complete":
            need(1, params[0] >= 1, "complete needs n >= 1")
        else:
            raise FamilySpecError(
                f"unknown graph family {kind!r} (expected one of: {', '.join(_FAMILIES)})")

    def __str__(self) -> str:
        return ":".join([self.kind, *map(str, self.params)])

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        """Parse spec strings like ``cycle:12`` or ``cyclepow:12:2``."""
        parts = text.strip().split(":")
        kind, raw = parts[0].lower(), parts[1:]
        if kind not in _FAMILIES:
            raise FamilySpecError(
                f"unknown graph family {kind!r} (expected one of: {', '.join(_FAMILIES)})")
        try:
            params = tuple(int(p) for p in raw)
        except ValueError:
            raise FamilySpecError(f"non-integer parameter in {text!r}") from None
        return cls(kind, params)


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "edges", "family", "_neighbors", "_edge_set", "_dm")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]],
                 family: FamilySpec | None = None):
        if n < 1:
            raise GraphError(f"vertex count must be positive, got {n}")
        seen: set[tuple[int, int]] = set()
        canon: list[tuple[int, int]] = []
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u > v:
                u, v = v, u
            if (u, v) in seen:
                raise GraphError(f"duplicate edge ({u}, {v})")
            seen.add((u, v))
            canon.append((u, v))
        canon.sort()
        self.n = n
        self.edges = tuple(canon)
        self.family = family
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for u, v in canon:
            nbrs[u].append(v)
            nbrs[v].append(u)
        self._neighbors = tuple(tuple(sorted(b)) for b in nbrs)
        self._edge_set = seen
        self._dm: DistanceMatrix | None = None

    @property
    def label(self) -> str:
        return str(self.family) if self.family is not None else "custom"

    @property
    def dihedral_symmetric(self) -> bool:
        """True when rotating/reflecting labels mod n is known to preserve
        edges (the circulant-labeled generator families)."""
        return self.family is not None and self.family.kind in (
            "cycle", "cyclepow", "mobius", "complete")

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._neighbors[v]

    def degree(self, v: int) -> int:
        return len(self._neighbors[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self._neighbors)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._edge_set

    def is_connected(self) -> bool:
        return min(_bfs(self._neighbors, 0, self.n)) >= 0

    def distances(self) -> "DistanceMatrix":
        """All-pairs distance matrix, computed once and cached."""
        if self._dm is None:
            self._dm = all_pairs_distances(self)
        return self._dm

    def __eq__(self, other) -> bool:
        return (isinstance(other, Graph)
                and self.n == other.n and self.edges == other.edges)

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph({self.label}, n={self.n}, edges={len(self.edges)})"


class DistanceMatrix:
    """Exact all-pairs shortest-path distances (unit edge weights)."""

    __slots__ = ("n", "rows")

    def __init__(self, rows: Iterable[Iterable[int]]):
        self.rows = tuple(tuple(r) for r in rows)
        self.n = len(self.rows)

    def __getitem__(self, u: int) -> tuple[int, ...]:
        return self.rows[u]

    def diameter(self) -> int:
        return max(max(r) for r in self.rows)

    def __repr__(self) -> str:
        return f"DistanceMatrix(n={self.n}, diameter={self.diameter()})"


def _bfs(neighbors, source: int, n: int) -> list[int]:
    dist = [-1] * n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u]
        for w in neighbors[u]:
            if dist[w] < 0:
                dist[w] = du + 1
                queue.append(w)
    return dist


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """Breadth-first distances from every vertex.

    Raises DisconnectedError naming an unreachable pair when g is not
    connected.
    """
    rows = []
    for s in range(g.n):
        dist = _bfs(g._neighbors, s, g.n)
        if s == 0:
            for v, d in enumerate(dist):
                if d < 0:
                    raise DisconnectedError(0, v)
        rows.append(dist)
    return DistanceMatrix(rows)


def vertex_distance_vector(g: Graph, v: int) -> tuple[int, ...]:
    """Sorted distances from v to every other vertex."""
    dm = g.distances()
    row = dm[v]
    return tuple(sorted(row[u] for u in range(g.n) if u != v))


def is_distance_degree_regular(g: Graph) -> bool:
    """True when every vertex sees the same multiset of distances."""
    if g.n == 1:
        return True
    first = vertex_distance_vector(g, 0)
    return all(vertex_distance_vector(g, v) == first for v in range(1, g.n))


def cycle(n: int) -> Graph:
    spec = FamilySpec("cycle", (n,))
    return Graph(n, [(i, (i + 1) % n) for i in range(n)], spec)


def cycle_power(n: int, k: int) -> Graph:
    """Cycle plus edges between vertices at cycle distance <= k.

    For k >= ceil(n/2) every pair is within distance k, so the result is
    normalized to (and tagged as) the complete graph.
    """
    spec = FamilySpec("cyclepow", (n, k))
    if k >= (n + 1) // 2:
        return complete(n)
    edges = {(min(i, j), max(i, j))
             for i in range(n) for step in range(1, k + 1)
             for j in ((i + step) % n,)}
    return Graph(n, sorted(edges), spec)


def mobius_ladder(m: int) -> Graph:
    """Cycle on m vertices plus the m/2 antipodal rungs {i, i + m/2}."""
    spec = FamilySpec("mobius", (m,))
    half = m // 2
    edges = [(i, (i + 1) % m) for i in range(m)]
    edges.extend((i, i + half) for i in range(half))
    return Graph(m, edges, spec)


def hypercube(d: int) -> Graph:
    """2^d vertices labeled by their bits; edges join labels one bit apart."""
    spec = FamilySpec("hypercube", (d,))
    n = 1 << d
    edges = [(v, v | (1 << b)) for v in range(n) for b in range(d)
             if not (v >> b) & 1]
    return Graph(n, edges, spec)


def path(n: int) -> Graph:
    spec = FamilySpec("path", (n,))
    return Graph(n, [(i, i + 1) for i in range(n - 1)], spec)


def complete(n: int) -> Graph:
    spec = FamilySpec("complete", (n,))
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)], spec)


_BUILDERS = {
    "cycle": lambda p: cycle(*p),
    "cyclepow": lambda p: cycle_power(*p),
    "mobius": lambda p: mobius_ladder(*p),
    "hypercube": lambda p: hypercube(*p),
    "path": lambda p: path(*p),
    "complete": lambda p: complete(*p),
}


def build_family(spec: FamilySpec) -> Graph:
    """Build the canonical labeled graph for a family spec."""
    return _BUILDERS[spec.kind](spec.params)


def parse_edge_list(text: str) -> Graph:
    """Parse the plain edge-list format.

    The first non-blank, non-comment line is the vertex count n; every
    following line is ``u v``.  Lines starting with ``#`` are comments.
    Self-loops, duplicate edges, out-of-range vertices, and disconnected
    graphs are rejected.
    """
    n: int | None = None
    edges: list[tuple[int, int]] = []
    first_line: dict[tuple[int, int], int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if n is None:
            try:
                n = int(line)
            except ValueError:
                raise EdgeListError(f"expected vertex count, got {line!r}", lineno) from None
            if n < 1:
                raise EdgeListError(f"vertex count must be positive, got {n}", lineno)
            continue
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListError(f"expected 'u v', got {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListError(f"non-integer vertex in {line!r}", lineno) from None
        if u == v:
            raise EdgeListError(f"self-loop at vertex {u}", lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListError(f"vertex out of range 0..{n - 1}: ({u}, {v})", lineno)
        key = (min(u, v), max(u, v))
        if key in first_line:
            raise EdgeListError(
                f"duplicate edge ({key[0]}, {key[1]}), first seen on line {first_line[key]}",
                lineno)
        first_line[key] = lineno
        edges.append(key)
    if n is None:
        raise EdgeListError("empty edge list: missing vertex count")
    g = Graph(n, edges)
    dist = _bfs(g._neighbors, 0, n)
    for v, d in enumerate(dist):
        if d < 0:
            raise EdgeListError(f"graph is not connected: no path from vertex 0 to vertex {v}")
    return g


def rotated(n: int, members: Iterable[int], t: int) -> tuple[int, ...]:
    """The set shifted by t positions around the n-circle."""
    return tuple(sorted((x + t) % n for x in members))


def reflected(n: int, members: Iterable[int]) -> tuple[int, ...]:
    """The mirror image x -> -x mod n."""
    return tuple(sorted((-x) % n for x in members))


def rotation_canonical(n: int, members: Iterable[int]) -> tuple[int, ...]:
    """Lexicographically least rotation of the set."""
    base = tuple(sorted(x % n for x in members))
    if not base:
        return base
    return min(rotated(n, base, t) for t in range(n))


def dihedral_canonical(n: int, members: Iterable[int]) -> tuple[int, ...]:
    """Lexicographically least image under all 2n rotations and reflections."""
    base = tuple(sorted(x % n for x in members))
    if not base:
        return base
    return min(rotation_canonical(n, base), rotation_canonical(n, reflected(n, base)))
