"""Minimum-core search: linear-time peeling and the parameterized extension.

:func:`peel_nm` repeatedly strips, round by round, every edge that has a
degree-one vertex, removing one such vertex from the candidate core per
edge.  When it consumes all edges it has found a core of size ``n - m``
whose radius equals the number of rounds, and that radius is optimal among
all cores of that size; when some residual has no degree-one vertex, no
core of size ``n - m`` exists at all.

:func:`mincore_fpt` lifts this to cores of size ``n - m + a`` by deleting
every ``a``-subset of edges, peeling the remainder, and re-inserting the
deleted edges (which may add one final layer).  The run over all subsets
is embarrassingly parallel; results are aggregated deterministically.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional, Sequence

from .hypergraph import Hypergraph
from .oracle import DEFAULT_BUDGET, OracleBudget, _enumeration_guard
from .propagation import propagate

PEEL_FAILURE_MESSAGE = "no core of size n-m possible"


class NoCoreOfSizeNM(Exception):
    """Some residual hypergraph had no degree-one vertex."""

    def __init__(self):
        super().__init__(PEEL_FAILURE_MESSAGE)


class NotFoundWithin(Exception):
    """No core of size ``n - m + a`` exists for any ``a <= a_max``."""

    def __init__(self, a_max: int):
        super().__init__(f"no core of size n-m+a possible for any a <= {a_max}")
        self.a_max = a_max


@dataclass
class PeelResult:
    """Core of size ``n - m`` plus the layer structure the peeling certifies.

    ``layers[i]`` lists the edges of layer ``i + 1``: the edges deleted in
    round ``r - i`` of the peeling.  ``assimilator[e]`` is the vertex that
    was removed from the core when ``e`` was processed; it is the vertex
    ``e`` activates when the core propagates.
    """

    core: frozenset[int]
    layers: list[tuple[int, ...]]
    assimilator: dict[int, int]

    @property
    def radius(self) -> int:
        return len(self.layers)


@dataclass
class MinCoreResult:
    core: frozenset[int]
    radius: int
    deleted_edges: tuple[int, ...]
    parameter_a: int


def peel_nm(graph: Hypergraph) -> PeelResult:
    """Find a core of size ``n - m`` with optimal radius, or fail.

    Raises :class:`NoCoreOfSizeNM` when no such core exists.  Runs in time
    linear in the total incidence size.
    """
    n, m = graph.n, graph.m
    if m > n:
        raise NoCoreOfSizeNM()
    edges = graph.edges
    incidence = graph._incidence
    deg = graph.degrees()
    alive = [True] * m
    ptr = [0] * n
    remaining = m
    core = set(range(n))
    assimilator: dict[int, int] = {}
    rounds: list[tuple[int, ...]] = []
    frontier = [v for v in range(n) if deg[v] == 1]
    while remaining:
        if not frontier:
            raise NoCoreOfSizeNM()
        batch = set()
        for v in frontier:
            ix = incidence[v]
            p = ptr[v]
            while not alive[ix[p]]:
                p += 1
            ptr[v] = p
            batch.add(ix[p])
        ordered = sorted(batch)
        for ei in ordered:
            victim = min(v for v in edges[ei] if deg[v] == 1)
            assimilator[ei] = victim
            core.discard(victim)
        touched = set()
        for ei in ordered:
            alive[ei] = False
            remaining -= 1
            for u in edges[ei]:
                deg[u] -= 1
                touched.add(u)
        frontier = sorted(u for u in touched if deg[u] == 1)
        rounds.append(tuple(ordered))
    rounds.reverse()
    return PeelResult(core=frozenset(core), layers=rounds, assimilator=assimilator)


def _subgraph_without(graph: Hypergraph, deleted: Sequence[int]) -> Hypergraph:
    drop = set(deleted)
    return Hypergraph(
        graph.n, [e for i, e in enumerate(graph.edges) if i not in drop]
    )


def _attempt(graph: Hypergraph, deleted: tuple[int, ...]) -> Optional[tuple[int, int]]:
    """Peel with ``deleted`` removed; on success return (full radius, peel radius)."""
    try:
        res = peel_nm(_subgraph_without(graph, deleted))
    except NoCoreOfSizeNM:
        return None
    trace = propagate(graph, res.core)
    assert trace.verdict, "peeled core must stay a core after re-insertion"
    return trace.radius, res.radius


_POOL_GRAPH: Optional[Hypergraph] = None


def _pool_init(n: int, edges: tuple) -> None:
    global _POOL_GRAPH
    _POOL_GRAPH = Hypergraph(n, edges)


def _pool_run(chunk: list[tuple[int, ...]]) -> list[tuple[int, tuple[int, ...]]]:
    assert _POOL_GRAPH is not None
    out = []
    for deleted in chunk:
        hit = _attempt(_POOL_GRAPH, deleted)
        if hit is not None:
            out.append((hit[0], deleted))
    return out


def _chunks(items, size):
    it = iter(items)
    while True:
        block = list(itertools.islice(it, size))
        if not block:
            return
        yield block


def mincore_fpt(graph: Hypergraph, a_max: int, jobs: int = 1) -> MinCoreResult:
    """Minimum core with minimum radius, parameterized by ``a``.

    Tries ``a = 0, 1, ...`` in order; at the first ``a`` with any
    successful edge deletion it returns the minimum radius over all
    successful deletions, breaking radius ties by the lexicographically
    smallest deleted index tuple.  The output is independent of ``jobs``.
    """
    if a_max < 0:
        raise ValueError("a_max must be non-negative")
    m = graph.m
    for a in range(a_max + 1):
        if a > m:
            break
        best: Optional[tuple[int, tuple[int, ...]]] = None
        if jobs <= 1:
            for deleted in itertools.combinations(range(m), a):
                hit = _attempt(graph, deleted)
                if hit is not None and (best is None or hit[0] < best[0]):
                    best = (hit[0], deleted)
        else:
            combos = itertools.combinations(range(m), a)
            with ProcessPoolExecutor(
                max_workers=jobs,
                initializer=_pool_init,
                initargs=(graph.n, graph.edges),
            ) as pool:
                for block in pool.map(_pool_run, _chunks(combos, 64)):
                    for hit in block:
                        if best is None or hit < best:
                            best = hit
        if best is not None:
            radius_full, deleted = best
            try:
                res = peel_nm(_subgraph_without(graph, deleted))
            except NoCoreOfSizeNM:  # pragma: no cover - best came from a success
                raise AssertionError("winning deletion must re-peel")
            return MinCoreResult(
                core=res.core,
                radius=radius_full,
                deleted_edges=deleted,
                parameter_a=a,
            )
    raise NotFoundWithin(a_max)


def verify_optimal_radius_nm(
    graph: Hypergraph, budget: OracleBudget = DEFAULT_BUDGET
) -> bool:
    """Exhaustively confirm the peeled core's radius is optimal at size ``n - m``.

    True iff no core of size ``n - m`` has a strictly smaller radius than
    the one :func:`peel_nm` returns.  Propagates :class:`NoCoreOfSizeNM`
    when peeling fails and raises the budget error on oversized instances.
    """
    res = peel_nm(graph)
    _enumeration_guard(graph.n, budget)
    size = graph.n - graph.m
    for combo in itertools.combinations(range(graph.n), size):
        trace = propagate(graph, combo)
        if trace.verdict and trace.radius < res.radius:
            return False
    return True
