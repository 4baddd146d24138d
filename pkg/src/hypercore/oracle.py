"""Exponential-time ground truth for small instances.

Everything here is deliberately naive: exhaustive subset enumeration and a
one-edge-at-a-time reference activation check.  These routines exist to
cross-certify the fast algorithms and the gadget compilers, so they avoid
any cleverness that could share a bug with the code under test.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Optional

from .hypergraph import Hypergraph
from .propagation import Thresholds, propagate, resolve_thresholds


class BudgetExceededError(RuntimeError):
    """The instance is too large for exhaustive certification."""


@dataclass(frozen=True)
class OracleBudget:
    """Caps for the exhaustive searches, checked before enumerating.

    ``max_vertices`` bounds the vertex count; ``max_subsets`` bounds the
    number of candidate subsets the search may visit (checked one
    cardinality block ahead, so a run never starts a block it cannot
    finish).
    """

    max_vertices: int = 18
    max_subsets: int = 2_000_000


DEFAULT_BUDGET = OracleBudget()
# Radius certification enumerates every minimum core, so it gets a tighter default.
DEFAULT_RADIUS_BUDGET = OracleBudget(max_vertices=12)


def reference_is_core(graph: Hypergraph, core: Iterable[int]) -> bool:
    """Reference activation check under default thresholds.

    Follows the plain sequential procedure: drop edges inside the seed
    set, then repeatedly pick any single edge with exactly one missing
    vertex, absorb it, and drop newly filled edges.  Rescans the edge list
    every iteration.  Vertices in no edge must be seeds, as everywhere
    else in this package.
    """
    c = set(core)
    for v in c:
        if not 0 <= v < graph.n:
            raise ValueError(f"core vertex {v} outside [0, {graph.n})")
    if any(not graph.incident_edges(v) and v not in c for v in range(graph.n)):
        return False
    remaining = [set(e) for e in graph.edges if not set(e) <= c]
    while remaining:
        fired = None
        for e in remaining:
            if len(e & c) == len(e) - 1:
                fired = e
                break
        if fired is None:
            return False
        c |= fired
        remaining = [e for e in remaining if e & c != e]
    return True


def _enumeration_guard(n: int, budget: OracleBudget) -> None:
    if n > budget.max_vertices:
        raise BudgetExceededError(
            f"{n} vertices exceed the oracle budget of {budget.max_vertices}"
        )


def _block_guard(spent: int, n: int, k: int, budget: OracleBudget) -> int:
    block = math.comb(n, k)
    if spent + block > budget.max_subsets:
        raise BudgetExceededError(
            f"enumerating {spent + block} subsets exceeds the budget of"
            f" {budget.max_subsets}"
        )
    return spent + block


def oracle_min_core(
    graph: Hypergraph,
    thresholds: Thresholds = None,
    budget: OracleBudget = DEFAULT_BUDGET,
) -> tuple[int, frozenset[int]]:
    """Minimum core size with the first witness in (cardinality, lex) order."""
    _enumeration_guard(graph.n, budget)
    t = resolve_thresholds(graph, thresholds)
    from .propagation import is_core

    spent = 0
    for k in range(graph.n + 1):
        spent = _block_guard(spent, graph.n, k, budget)
        for combo in itertools.combinations(range(graph.n), k):
            if is_core(graph, combo, t):
                return k, frozenset(combo)
    raise AssertionError("the full vertex set is always a core")


def oracle_min_radius_over_min_cores(
    graph: Hypergraph,
    thresholds: Thresholds = None,
    budget: OracleBudget = DEFAULT_RADIUS_BUDGET,
) -> tuple[int, int, frozenset[int]]:
    """Enumerate every minimum-size core and return the best radius.

    Returns ``(min core size, min radius, witness)`` where the witness is
    the lexicographically first minimum core achieving the radius.
    """
    size, _ = oracle_min_core(graph, thresholds, budget)
    best = oracle_best_radius_at_size(graph, size, thresholds, budget)
    assert best is not None
    return size, best[0], best[1]


def oracle_best_radius_at_size(
    graph: Hypergraph,
    size: int,
    thresholds: Thresholds = None,
    budget: OracleBudget = DEFAULT_RADIUS_BUDGET,
) -> Optional[tuple[int, frozenset[int]]]:
    """Minimum radius over all cores of exactly ``size`` vertices, if any."""
    _enumeration_guard(graph.n, budget)
    t = resolve_thresholds(graph, thresholds)
    _block_guard(0, graph.n, size, budget)
    best: Optional[tuple[int, frozenset[int]]] = None
    for combo in itertools.combinations(range(graph.n), size):
        trace = propagate(graph, combo, t)
        if trace.verdict and (best is None or trace.radius < best[0]):
            best = (trace.radius, frozenset(combo))
    return best


def oracle_setcover(instance, budget: OracleBudget = DEFAULT_BUDGET):
    """Exact minimum set cover by subset enumeration over set indices.

    Returns ``(size, witness)`` with the lexicographically first optimal
    index tuple.
    """
    k = len(instance.sets)
    if 2**k > budget.max_subsets:
        raise BudgetExceededError(f"2^{k} covers exceed the subset budget")
    universe = frozenset(range(instance.universe_size))
    for size in range(k + 1):
        for combo in itertools.combinations(range(k), size):
            union: set[int] = set()
            for i in combo:
                union |= instance.sets[i]
            if union >= universe:
                return size, combo
    raise AssertionError("instance invariant guarantees the full family covers")


def oracle_minrep(instance, budget: OracleBudget = DEFAULT_BUDGET):
    """Exact minimum node pick covering every super-edge.

    Nodes are numbered ``0..|A|-1`` for the left side followed by
    ``|A|..|A|+|B|-1`` for the right side.  Returns ``(size, witness)``.
    """
    total = instance.num_a + instance.num_b
    if 2**total > budget.max_subsets:
        raise BudgetExceededError(f"2^{total} picks exceed the subset budget")
    supers = instance.super_edges()
    pairs_for = {
        se: [
            (a, instance.num_a + b)
            for a, b in instance.edges
            if (a // instance.m_a, b // instance.m_b) == se
        ]
        for se in supers
    }
    for size in range(total + 1):
        for combo in itertools.combinations(range(total), size):
            chosen = set(combo)
            if all(
                any(a in chosen and b in chosen for a, b in pairs_for[se])
                for se in supers
            ):
                return size, frozenset(combo)
    raise AssertionError("picking every node covers all super-edges")


def oracle_sat(formula, budget: OracleBudget = DEFAULT_BUDGET):
    """Exhaustive satisfiability check; returns ``(bool, witness_or_None)``.

    A witness maps variable index (1-based, as in the clause literals) to
    a boolean.
    """
    if 2**formula.num_vars > budget.max_subsets:
        raise BudgetExceededError(
            f"2^{formula.num_vars} assignments exceed the subset budget"
        )
    for bits in itertools.product((False, True), repeat=formula.num_vars):
        ok = True
        for clause in formula.clauses:
            if not any(bits[abs(lit) - 1] == (lit > 0) for lit in clause):
                ok = False
                break
        if ok:
            return True, {i + 1: b for i, b in enumerate(bits)}
    return False, None
