"""Hypergraph instance model, structural queries, generators and text formats.

Vertices are dense 0-based integers ``0..n-1``.  Edges are sorted,
duplicate-free vertex tuples; the edge *list* may contain duplicate edges
(multiplicity is meaningful and counted by degree queries).  Instances are
immutable after construction and safe to share between threads.

The text exchange format ("HCE") is line oriented, UTF-8, 1-based:

    c <comment>                ignored
    p hce <n> <m>              header, exactly once, before any "e" line
    e <k> <v1> ... <vk>        one line per edge, k = vertex count
    t <edge_index> <threshold> optional per-edge activation threshold
    l <v> <label>              optional vertex label

Vertex-set files (cores, foundations) hold a single ``s <k> <v1> ... <vk>``
line, also 1-based.
"""

from __future__ import annotations

import math
import random
from collections import deque
from typing import Iterable, Mapping, Optional, Sequence


class HceParseError(ValueError):
    """Malformed instance text; ``line`` carries the 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class Hypergraph:
    """Immutable hypergraph with ``n`` vertices and an ordered edge list.

    The edge list order is the identity used by every per-edge output
    (thresholds, traces, layer reports).  Vertex labels are free-form
    strings used by the reduction compilers to record gadget provenance.
    """

    __slots__ = ("n", "edges", "labels", "_incidence")

    def __init__(
        self,
        n: int,
        edges: Iterable[Sequence[int]] = (),
        labels: Optional[Mapping[int, str]] = None,
    ):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        normalized = []
        for e in edges:
            vs = tuple(sorted(e))
            if not vs:
                raise ValueError("empty edges are not allowed")
            if any(vs[i] == vs[i + 1] for i in range(len(vs) - 1)):
                raise ValueError(f"edge {vs} repeats a vertex")
            if vs[0] < 0 or vs[-1] >= n:
                raise ValueError(f"edge {vs} has a vertex outside [0, {n})")
            normalized.append(vs)
        self.n = n
        self.edges = tuple(normalized)
        self.labels = dict(labels) if labels else {}
        for v in self.labels:
            if not 0 <= v < n:
                raise ValueError(f"label for vertex {v} outside [0, {n})")
        incidence: list[list[int]] = [[] for _ in range(n)]
        for i, e in enumerate(self.edges):
            for v in e:
                incidence[v].append(i)
        self._incidence = tuple(tuple(ix) for ix in incidence)

    @property
    def m(self) -> int:
        return len(self.edges)

    def incident_edges(self, v: int) -> tuple[int, ...]:
        """Indices of edges containing ``v`` (duplicates listed once each)."""
        self._check_vertex(v)
        return self._incidence[v]

    def degrees(self) -> list[int]:
        """Per-vertex incident edge count; duplicate edges count twice."""
        return [len(ix) for ix in self._incidence]

    def neighbors(self, v: int) -> set[int]:
        """All vertices sharing at least one edge with ``v`` (``v`` excluded)."""
        self._check_vertex(v)
        out: set[int] = set()
        for i in self._incidence[v]:
            out.update(self.edges[i])
        out.discard(v)
        return out

    def relabel(self, labels: Mapping[int, str]) -> "Hypergraph":
        """Copy of this instance carrying the given vertex labels."""
        return Hypergraph(self.n, self.edges, labels)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} outside [0, {self.n})")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return (
            self.n == other.n
            and self.edges == other.edges
            and self.labels == other.labels
        )

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Hypergraph(n={self.n}, m={self.m})"


def degrees(graph: Hypergraph) -> list[int]:
    return graph.degrees()


def neighbors(graph: Hypergraph, v: int) -> set[int]:
    return graph.neighbors(v)


def has_sdr(graph: Hypergraph) -> tuple[bool, Optional[dict[int, int]]]:
    """Test for a system of distinct representatives.

    Returns ``(True, assignment)`` where ``assignment`` maps each edge index
    to a distinct vertex contained in that edge, or ``(False, None)``.
    Computed as a maximum bipartite matching (augmenting paths) between
    edges and vertices.
    """
    if graph.m > graph.n:
        return False, None
    owner: dict[int, int] = {}  # vertex -> edge index currently matched to it

    def augment(edge_index: int, seen: set[int]) -> bool:
        for v in graph.edges[edge_index]:
            if v in seen:
                continue
            seen.add(v)
            if v not in owner or augment(owner[v], seen):
                owner[v] = edge_index
                return True
        return False

    for i in range(graph.m):
        if not augment(i, set()):
            return False, None
    return True, {i: v for v, i in owner.items()}


def shortest_hyperpath(graph: Hypergraph, s: int, t: int) -> Optional[int]:
    """Minimum number of edge hops between two distinct vertices.

    One hop moves between two vertices sharing an edge.  Returns ``None``
    when ``t`` is unreachable from ``s``.
    """
    graph._check_vertex(s)
    graph._check_vertex(t)
    if s == t:
        raise ValueError("endpoints must be distinct")
    dist = _bfs_distances(graph, (s,))
    d = dist[t]
    return d if d >= 0 else None


def _bfs_distances(graph: Hypergraph, sources: Iterable[int]) -> list[int]:
    """Multi-source hop distances over the shared-edge relation; -1 = unreachable."""
    dist = [-1] * graph.n
    queue: deque[int] = deque()
    for s in sources:
        if dist[s] < 0:
            dist[s] = 0
            queue.append(s)
    edge_done = [False] * graph.m
    while queue:
        v = queue.popleft()
        for i in graph._incidence[v]:
            if edge_done[i]:
                continue
            edge_done[i] = True
            for u in graph.edges[i]:
                if dist[u] < 0:
                    dist[u] = dist[v] + 1
                    queue.append(u)
    return dist


def diameter(graph: Hypergraph) -> float:
    """Maximum pairwise hop distance; ``math.inf`` when disconnected.

    Integer valued whenever finite.  Requires at least two vertices.
    """
    if graph.n < 2:
        raise ValueError("diameter needs at least two vertices")
    best = 0
    for s in range(graph.n):
        dist = _bfs_distances(graph, (s,))
        for d in dist:
            if d < 0:
                return math.inf
            if d > best:
                best = d
    return best


def generate_random(
    n: int, m: int, edge_size_min: int, edge_size_max: int, seed: int
) -> Hypergraph:
    """Deterministic random instance; identical parameters give identical bytes.

    Every edge draws a uniform size in ``[edge_size_min, edge_size_max]`` and
    a uniform vertex subset of that size (without replacement).
    """
    if not (1 <= edge_size_min <= edge_size_max <= n) and m > 0:
        raise ValueError("need 1 <= edge_size_min <= edge_size_max <= n")
    if n < 0 or m < 0:
        raise ValueError("counts must be non-negative")
    rng = random.Random(f"hce:{n}:{m}:{edge_size_min}:{edge_size_max}:{seed}")
    edges = []
    for _ in range(m):
        size = rng.randint(edge_size_min, edge_size_max)
        edges.append(sorted(rng.sample(range(n), size)))
    return Hypergraph(n, edges)


# ---------------------------------------------------------------------------
# HCE text format


def read_instance(text: str):
    """Parse HCE text into ``(Hypergraph, thresholds_or_None)``.

    ``thresholds`` is a list aligned with the edge list when the file has
    any ``t`` line, else ``None``.  Raises :class:`HceParseError` with the
    offending line number.
    """
    n = m = None
    edges: list[list[int]] = []
    labels: dict[int, str] = {}
    tlines: list[tuple[int, int, int]] = []  # (line_no, edge_index, threshold)
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        kind = fields[0]
        if kind == "p":
            if n is not None:
                raise HceParseError(line_no, "duplicate header")
            if len(fields) != 4 or fields[1] != "hce":
                raise HceParseError(line_no, f"malformed header {line!r}")
            try:
                n, m = int(fields[2]), int(fields[3])
            except ValueError:
                raise HceParseError(line_no, f"malformed header {line!r}") from None
            if n < 0 or m < 0:
                raise HceParseError(line_no, "negative count in header")
        elif kind == "e":
            if n is None:
                raise HceParseError(line_no, "edge before header")
            try:
                nums = [int(x) for x in fields[1:]]
            except ValueError:
                raise HceParseError(line_no, "non-integer in edge line") from None
            if not nums:
                raise HceParseError(line_no, "edge line without vertex count")
            k, vs = nums[0], nums[1:]
            if len(vs) != k:
                raise HceParseError(
                    line_no, f"edge declares {k} vertices but lists {len(vs)}"
                )
            if k < 1:
                raise HceParseError(line_no, "empty edge")
            for v in vs:
                if not 1 <= v <= n:
                    raise HceParseError(line_no, f"vertex {v} outside [1, {n}]")
            if len(set(vs)) != k:
                raise HceParseError(line_no, "repeated vertex in edge")
            edges.append([v - 1 for v in vs])
        elif kind == "t":
            if len(fields) != 3:
                raise HceParseError(line_no, "threshold line needs index and value")
            try:
                tlines.append((line_no, int(fields[1]), int(fields[2])))
            except ValueError:
                raise HceParseError(line_no, "non-integer in threshold line") from None
        elif kind == "l":
            if n is None:
                raise HceParseError(line_no, "label before header")
            if len(fields) < 3:
                raise HceParseError(line_no, "label line needs vertex and label")
            try:
                v = int(fields[1])
            except ValueError:
                raise HceParseError(line_no, "non-integer vertex in label line") from None
            if not 1 <= v <= n:
                raise HceParseError(line_no, f"vertex {v} outside [1, {n}]")
            labels[v - 1] = " ".join(fields[2:])
        else:
            raise HceParseError(line_no, f"unknown line kind {kind!r}")
    if n is None:
        raise HceParseError(1, "missing header")
    if len(edges) != m:
        raise HceParseError(1, f"header declares {m} edges, file has {len(edges)}")
    graph = Hypergraph(n, edges, labels)
    thresholds = None
    if tlines:
        thresholds = [max(len(e) - 1, 0) for e in graph.edges]
        for line_no, idx, value in tlines:
            if not 1 <= idx <= m:
                raise HceParseError(line_no, f"edge index {idx} outside [1, {m}]")
            thresholds[idx - 1] = value
    return graph, thresholds


def write_instance(
    graph: Hypergraph, thresholds: Optional[Sequence[int]] = None
) -> str:
    """Canonical HCE text; ``read_instance`` of the result round-trips."""
    out = [f"p hce {graph.n} {graph.m}"]
    for e in graph.edges:
        out.append("e " + " ".join(str(x) for x in (len(e), *(v + 1 for v in e))))
    if thresholds is not None:
        if len(thresholds) != graph.m:
            raise ValueError("thresholds length differs from edge count")
        for i, t in enumerate(thresholds):
            if t != max(len(graph.edges[i]) - 1, 0):
                out.append(f"t {i + 1} {t}")
    for v in sorted(graph.labels):
        out.append(f"l {v + 1} {graph.labels[v]}")
    return "\n".join(out) + "\n"


def read_vertex_set(text: str) -> set[int]:
    """Parse a one-line ``s <k> <v1> ... <vk>`` vertex-set file (1-based)."""
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] != "s":
            raise HceParseError(line_no, f"expected an 's' line, got {fields[0]!r}")
        try:
            nums = [int(x) for x in fields[1:]]
        except ValueError:
            raise HceParseError(line_no, "non-integer in vertex-set line") from None
        if not nums or len(nums) - 1 != nums[0]:
            raise HceParseError(line_no, "vertex count does not match list")
        if any(v < 1 for v in nums[1:]):
            raise HceParseError(line_no, "vertices are 1-based")
        return {v - 1 for v in nums[1:]}
    raise HceParseError(1, "missing 's' line")


def write_vertex_set(vertices: Iterable[int]) -> str:
    vs = sorted(vertices)
    return "s " + " ".join(str(x) for x in (len(vs), *(v + 1 for v in vs))) + "\n"
