"""Acceptance gate: one test per criterion, one printed line per criterion.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
report lines.  Every tolerance is exact (these are combinatorial claims);
the only wall-clock criterion is the peeling performance one.
"""

import itertools
import math
import random
import subprocess
import sys
import time

import pytest

from hypercore import (
    CnfFormula,
    Hypergraph,
    MinrepInstance,
    NoCoreOfSizeNM,
    OracleBudget,
    SetCoverInstance,
    core_to_filtration,
    core_to_minrep,
    core_to_setcover,
    diameter,
    filtration_radius,
    generate_random,
    is_core,
    mincore_fpt,
    minrep_to_mincore,
    oracle_best_radius_at_size,
    oracle_min_core,
    oracle_min_radius_over_min_cores,
    oracle_minrep,
    oracle_sat,
    oracle_setcover,
    peel_nm,
    propagate,
    reference_is_core,
    setcover_to_mincore,
    setcover_to_mincore_3uniform,
    threesat_to_mincore_radius,
    threshold_add_per_edge,
    threshold_add_shared,
    triangulate_edge,
    validate_filtration,
    write_instance,
)
from hypercore.bounds import (
    GUARD_BAND,
    degree_radius_bound,
    diameter_radius_bound,
    layer_distance_check,
    max_degree,
    max_neighbor_count,
    neighbor_radius_bound,
)
from hypercore.oracle import BudgetExceededError

WIDE = OracleBudget(max_vertices=100, max_subsets=500_000)


def _report(num: int, name: str, ok: bool, detail: str = "") -> None:
    verdict = "PASS" if ok else "FAIL"
    suffix = f" [{detail}]" if detail else ""
    line = f"criterion {num:02d} ({name}): {verdict}{suffix}"
    print(line)
    assert ok, line


# ---------------------------------------------------------------------------
# Shared seeded family for criteria 2, 3, 5 and 12.  Edge sizes >= 2: the
# structural bound arguments of criterion 12 presuppose that activation
# travels along shared edges, which single-vertex edges bypass.


@pytest.fixture(scope="module")
def family():
    records = []
    for s in range(500):
        rng = random.Random(9100 + s)
        n = rng.randint(2, 12)
        m = rng.randint(0, n)
        g = generate_random(n, m, min(2, n), min(4, n), seed=9500 + s)
        try:
            peel = peel_nm(g)
        except NoCoreOfSizeNM:
            peel = None
        size, witness = oracle_min_core(g)
        records.append({"g": g, "peel": peel, "size": size, "witness": witness})
    return records


@pytest.fixture(scope="module")
def fpt_results(family):
    out = []
    for rec in family:
        g = rec["g"]
        result = mincore_fpt(g, g.n)
        best_size, best_radius, _ = oracle_min_radius_over_min_cores(g)
        out.append((result, best_size, best_radius))
    return out


def test_criterion_01_activation_check_agreement():
    """Literal one-edge-at-a-time check agrees with the fast check on all
    subsets of 200 seeded instances with n <= 8."""
    checked = 0
    for s in range(200):
        rng = random.Random(8100 + s)
        n = rng.randint(1, 8)
        m = rng.randint(0, 10)
        g = generate_random(n, m, 1, min(4, n), seed=8500 + s)
        for bits in range(2**n):
            core = frozenset(v for v in range(n) if bits >> v & 1)
            if reference_is_core(g, core) != is_core(g, core):
                _report(1, "activation agreement", False, f"seed {s} core {core}")
            checked += 1
    _report(1, "activation agreement", True, f"{checked} subset checks")


def test_criterion_02_peel_soundness_completeness(family):
    successes = 0
    for rec in family:
        g, peel = rec["g"], rec["peel"]
        expected = rec["size"] == g.n - g.m
        if (peel is not None) != expected:
            _report(2, "peel iff n-m core", False, f"{g}")
        if peel is not None:
            successes += 1
            if len(peel.core) != g.n - g.m:
                _report(2, "peel iff n-m core", False, "wrong core size")
            best = oracle_best_radius_at_size(g, g.n - g.m)
            if best is None or best[0] != peel.radius:
                _report(2, "peel iff n-m core", False, "suboptimal radius")
    _report(2, "peel iff n-m core", True, f"{successes}/500 peelable")


def test_criterion_03_fpt_optimality(family, fpt_results):
    for rec, (result, best_size, best_radius) in zip(family, fpt_results):
        g = rec["g"]
        if len(result.core) != rec["size"]:
            _report(3, "fpt optimality", False, f"size mismatch on {g}")
        if not is_core(g, result.core):
            _report(3, "fpt optimality", False, "fpt returned a non-core")
        if result.parameter_a != rec["size"] - (g.n - g.m):
            _report(3, "fpt optimality", False, "wrong parameter")
        if not best_radius <= result.radius <= best_radius + 1:
            _report(3, "fpt optimality", False, "radius out of band")
        if result.parameter_a == 0 and result.radius != best_radius:
            _report(3, "fpt optimality", False, "radius not exact at a=0")
    _report(3, "fpt optimality", True, "500 instances")


def _peelable_instance(n: int, seed: int) -> Hypergraph:
    """n vertices, n edges, consumable by peeling in a tree-like order.

    The first two edges are the size-1 and size-2 bootstrap (no size-3
    edge can fire from an empty seed set); the rest are size-3.
    """
    rng = random.Random(f"peelable:{n}:{seed}")
    order = list(range(n))
    rng.shuffle(order)
    edges = []
    for j in range(n):
        size = min(3, j + 1)
        picks = [order[j]]
        if size >= 2:
            lo = max(0, j - 50)
            picks += rng.sample(order[lo:j], size - 1)
        edges.append(sorted(picks))
    return Hypergraph(n, edges)


def _best_peel_time(g: Hypergraph, repetitions: int = 5) -> float:
    best = math.inf
    for _ in range(repetitions):
        t0 = time.perf_counter()
        res = peel_nm(g)
        best = min(best, time.perf_counter() - t0)
        assert res.core == frozenset()
    return best


def test_criterion_04_peel_performance():
    """Peeling time stays under a second at n = m = 10^4 and roughly doubles
    when n doubles.  The minimum over several runs estimates the
    deterministic cost; a noisy measurement is retaken up to twice (a
    super-linear implementation fails every attempt regardless)."""
    instances = {n: _peelable_instance(n, seed=7) for n in (10_000, 20_000, 40_000)}
    times = {}
    ok = False
    for _ in range(3):
        times = {n: _best_peel_time(g) for n, g in instances.items()}
        ok = (
            times[10_000] < 1.0
            and times[20_000] < 3 * times[10_000]
            and times[40_000] < 3 * times[20_000]
        )
        if ok:
            break
    detail = ", ".join(f"n={n}: {t * 1000:.0f}ms" for n, t in times.items())
    _report(4, "peel performance", ok, detail)


def test_criterion_05_filtration_round_trip(family):
    converted = 0
    for rec in family:
        g, peel = rec["g"], rec["peel"]
        if peel is None:
            continue
        filt = core_to_filtration(g, peel.core)
        ok, why = validate_filtration(g, filt)
        if not ok:
            _report(5, "filtration round trip", False, why)
        if filtration_radius(g, filt) != peel.radius:
            _report(5, "filtration round trip", False, "radius drift")
        if frozenset(filt.foundation) != peel.core:
            _report(5, "filtration round trip", False, "foundation drift")
        converted += 1
    _report(5, "filtration round trip", True, f"{converted} cores converted")


def _setcover_family():
    instances = []
    one = frozenset({0})
    for k in (1, 2, 3):
        instances.append(SetCoverInstance(1, (one,) * k))
    subsets2 = [frozenset({0}), frozenset({1}), frozenset({0, 1})]
    for k in (1, 2, 3):
        for combo in itertools.product(subsets2, repeat=k):
            if frozenset().union(*combo) == {0, 1}:
                instances.append(SetCoverInstance(2, combo))
    rng = random.Random(606)
    while len(instances) < 130:
        u = rng.choice((3, 4))
        k = rng.randint(2, 4)
        sets = [
            frozenset(rng.sample(range(u), rng.randint(1, u))) for _ in range(k)
        ]
        missing = set(range(u)) - set().union(*sets)
        if missing:
            sets[0] = sets[0] | missing
        instances.append(SetCoverInstance(u, tuple(sets)))
    return instances


def test_criterion_06_setcover_reduction():
    figure = SetCoverInstance(3, (frozenset({0}), frozenset({0, 1}), frozenset({2})))
    if oracle_min_core(setcover_to_mincore(figure).instance, budget=WIDE)[0] != 2:
        _report(6, "set cover reduction", False, "worked example drifted")
    instances = _setcover_family()
    for inst in instances:
        cert = setcover_to_mincore(inst)
        opt_cover = oracle_setcover(inst)[0]
        opt_core, witness = oracle_min_core(cert.instance, budget=WIDE)
        if opt_core != opt_cover:
            _report(6, "set cover reduction", False, f"{inst}")
        for core in (witness, frozenset(range(cert.instance.n))):
            cover = core_to_setcover(cert, core)
            if len(cover) > len(core):
                _report(6, "set cover reduction", False, "oversized extraction")
    _report(6, "set cover reduction", True, f"{len(instances)} instances")


def test_criterion_07_three_uniform_reduction():
    gate = OracleBudget(max_vertices=100, max_subsets=150_000)
    checked = skipped = 0
    for inst in _setcover_family():
        cert = setcover_to_mincore_3uniform(inst)
        if any(len(e) != 3 for e in cert.instance.edges):
            _report(7, "3-uniform reduction", False, "non-ternary edge")
        opt_cover = oracle_setcover(inst)[0]
        try:
            opt_core = oracle_min_core(cert.instance, budget=gate)[0]
        except BudgetExceededError:
            skipped += 1
            continue
        if opt_core != opt_cover + 1:
            _report(7, "3-uniform reduction", False, f"{inst}")
        checked += 1
    ok = checked >= 100
    _report(7, "3-uniform reduction", ok, f"{checked} checked, {skipped} over budget")


def test_criterion_08_triangulation_preserves_minimum():
    done = 0
    s = 0
    while done < 100:
        s += 1
        rng = random.Random(7300 + s)
        n = rng.randint(4, 8)
        m = rng.randint(1, 4)
        g = generate_random(n, m, 2, min(6, n), seed=7700 + s)
        big = [i for i, e in enumerate(g.edges) if len(e) >= 4]
        if not big:
            continue
        idx = rng.choice(big)
        expanded = triangulate_edge(g, idx)
        if expanded.n > 12:
            continue
        if oracle_min_core(g)[0] != oracle_min_core(expanded)[0]:
            _report(8, "triangulation invariance", False, f"seed {s}")
        done += 1
    _report(8, "triangulation invariance", True, f"{done} replacements")


def _minrep_instances():
    out = []
    rng = random.Random(515)
    while len(out) < 70:
        q_a, m_a = rng.choice(((1, 1), (1, 2), (2, 1), (1, 3), (3, 1), (2, 2)))
        q_b, m_b = rng.choice(((1, 1), (1, 2), (2, 1), (1, 3), (3, 1)))
        if q_a * m_a + q_b * m_b > 6:
            continue
        pairs = [(a, b) for a in range(q_a * m_a) for b in range(q_b * m_b)]
        count = rng.randint(1, min(5, len(pairs)))
        edges = tuple(sorted(rng.sample(pairs, count)))
        out.append(MinrepInstance(q_a, m_a, q_b, m_b, edges))
    return out


def test_criterion_09_minrep_reduction():
    gate = OracleBudget(max_vertices=100, max_subsets=150_000)
    checked = skipped = 0
    for inst in _minrep_instances():
        cert = minrep_to_mincore(inst)
        opt_pick, _ = oracle_minrep(inst)
        try:
            opt_core, witness = oracle_min_core(cert.instance, budget=gate)
        except BudgetExceededError:
            skipped += 1
            continue
        if opt_core != opt_pick:
            _report(9, "minrep reduction", False, f"{inst}")
        canonical = core_to_minrep(cert, witness)
        if not is_core(cert.instance, canonical):
            _report(9, "minrep reduction", False, "canonical set lost core-ness")
        if len(canonical) != len(witness):
            _report(9, "minrep reduction", False, "canonical size drift")
        if any(v >= cert.node_count for v in canonical):
            _report(9, "minrep reduction", False, "canonical set leaks gadget nodes")
        checked += 1
    ok = checked >= 50
    _report(9, "minrep reduction", ok, f"{checked} checked, {skipped} over budget")


def _random_formula(rng):
    nclauses = rng.choice((2, 2, 3))
    nvars = rng.randint(3, 4)
    clauses = []
    for _ in range(nclauses):
        vs = rng.sample(range(1, nvars + 1), 3)
        clauses.append(tuple(v if rng.random() < 0.5 else -v for v in vs))
    return CnfFormula(nvars, tuple(clauses))


def test_criterion_10_sat_radius_reduction():
    """Minimum-core radius k vs k+1 tracks satisfiability.

    Two- and three-clause formulas over three-distinct-literal clauses are
    always satisfiable (each clause excludes one eighth of the
    assignments, so at least five survive); that fact is re-proved
    exhaustively below.  The generated mix therefore certifies the
    satisfiable direction, and the unsatisfiable branch is certified
    per-core: on the smallest unsatisfiable formula (all eight sign
    patterns over three variables) every one-slot-per-clause core needs
    radius k + 1, and on two-clause instances every clashing slot choice
    costs exactly one extra round.
    """
    pool = [
        (s1 * 1, s2 * 2, s3 * 3)
        for s1 in (1, -1)
        for s2 in (1, -1)
        for s3 in (1, -1)
    ]
    for count in (2, 3):
        for combo in itertools.combinations(pool, count):
            if oracle_sat(CnfFormula(3, combo))[0] is not True:
                _report(10, "sat radius reduction", False, "small unsat formula?!")

    budget = OracleBudget(max_vertices=40, max_subsets=10**6)
    rng = random.Random(4100)
    formulas = [_random_formula(rng) for _ in range(22)]
    for phi in formulas:
        sat = oracle_sat(phi)[0]
        for k in (4, 5):
            cert = threesat_to_mincore_radius(phi, k)
            size, best, _ = oracle_min_radius_over_min_cores(
                cert.instance, budget=budget
            )
            if size != len(phi.clauses):
                _report(10, "sat radius reduction", False, "minimum core size drift")
            if (best <= k) != sat:
                _report(10, "sat radius reduction", False, f"{phi} at k={k}")

    phi8 = CnfFormula(3, tuple(pool))
    if oracle_sat(phi8)[0]:
        _report(10, "sat radius reduction", False, "eight-clause formula not unsat")
    k = 4
    cert8 = threesat_to_mincore_radius(phi8, k)
    rng = random.Random(4242)
    picks_list = [tuple(rng.randrange(3) for _ in range(8)) for _ in range(60)]
    picks_list.append((0,) * 8)
    for picks in picks_list:
        core = {cert8.literal_vertex(i, p) for i, p in enumerate(picks)}
        trace = propagate(cert8.instance, core)
        if not (trace.verdict and trace.radius == k + 1):
            _report(10, "sat radius reduction", False, f"slot core {picks}")

    clash = CnfFormula(3, ((1, 2, 3), (-1, -2, -3)))
    for k in (4, 5):
        cert = threesat_to_mincore_radius(clash, k)
        clashing = propagate(
            cert.instance, {cert.literal_vertex(0, 0), cert.literal_vertex(1, 0)}
        )
        compatible = propagate(
            cert.instance, {cert.literal_vertex(0, 0), cert.literal_vertex(1, 1)}
        )
        if not (clashing.radius == k + 1 and compatible.radius == k):
            _report(10, "sat radius reduction", False, "clash shift drifted")
    _report(
        10,
        "sat radius reduction",
        True,
        f"{len(formulas)} formulas x k in (4,5); unsat branch via slot cores",
    )


def test_criterion_11_threshold_transforms():
    for s in range(200):
        rng = random.Random(6200 + s)
        n = rng.randint(2, 9)
        m = rng.randint(1, 6)
        g = generate_random(n, m, 2, min(4, n), seed=6600 + s)
        t = [rng.randint(1, len(e) - 1) for e in g.edges]
        base = oracle_min_core(g, t)[0]
        gs, ts = threshold_add_shared(g, t)
        if oracle_min_core(gs, ts)[0] != base + 1:
            _report(11, "threshold transforms", False, f"shared drift at seed {s}")
        gp, tp = threshold_add_per_edge(g, t)
        if oracle_min_core(gp, tp)[0] != base:
            _report(11, "threshold transforms", False, f"per-edge drift at seed {s}")
    _report(11, "threshold transforms", True, "200 instances")


def test_criterion_12_radius_bounds(family, fpt_results):
    pairs = 0
    diameter_ties = 0
    for rec, (result, _, _) in zip(family, fpt_results):
        g = rec["g"]
        cores = [result.core]
        if rec["peel"] is not None:
            cores.append(rec["peel"].core)
        for core in cores:
            trace = propagate(g, core)
            assert trace.verdict
            r = trace.radius
            pairs += 1
            if not layer_distance_check(g, core):
                _report(12, "radius bounds", False, f"layer-distance on {g}")
            if not core:
                continue
            size = len(core)
            if max_neighbor_count(g) >= 2:
                if not r > neighbor_radius_bound(g, size) - GUARD_BAND:
                    _report(12, "radius bounds", False, f"neighbor bound on {g}")
            if max_degree(g) >= 2:
                if not r > degree_radius_bound(g, size) - GUARD_BAND:
                    _report(12, "radius bounds", False, f"degree bound on {g}")
            if g.n >= 2 and not math.isinf(diameter(g)):
                bound = diameter_radius_bound(g, size)
                if r < bound:
                    _report(12, "radius bounds", False, f"diameter bound on {g}")
                elif r == bound:
                    diameter_ties += 1  # documented central-seed boundary case
    _report(
        12,
        "radius bounds",
        True,
        f"{pairs} (instance, core) pairs; {diameter_ties} diameter ties",
    )


def _run_cli(*args):
    proc = subprocess.run(
        [sys.executable, "-m", "hypercore", *args],
        capture_output=True,
        text=True,
    )
    return proc.returncode, proc.stdout, proc.stderr


def test_criterion_13_cli_determinism(tmp_path):
    inst = tmp_path / "g.hce"
    inst.write_text(
        write_instance(
            Hypergraph(7, [(0, 1, 2), (2, 3), (3, 4, 5), (5, 6), (0, 6), (1, 4)])
        )
    )
    path_file = tmp_path / "path.hce"
    path_file.write_text("p hce 3 2\ne 2 1 2\ne 2 2 3\n")
    core_file = tmp_path / "core.txt"
    core_file.write_text("s 1 2\n")
    cnf = tmp_path / "phi.cnf"
    cnf.write_text("p cnf 3 2\n1 2 3 0\n-1 -2 -3 0\n")
    out = tmp_path / "out.hce"
    invocations = [
        ("gen", "--n", "8", "--m", "7", "--emin", "2", "--emax", "3", "--seed", "3"),
        ("peel", str(path_file)),
        ("check-core", str(path_file), str(core_file)),
        ("radius", str(path_file), str(core_file)),
        ("oracle", str(path_file), "--budget", "12", "--min-radius"),
        ("bounds", str(path_file), "--core-size", "1"),
        ("reduce", "3sat", str(cnf), "-k", "4", "-o", str(out)),
        ("convert", "core-to-filtration", str(path_file), str(core_file)),
        ("mincore", str(inst), "--max-a", "7", "--jobs", "1"),
        ("mincore", str(inst), "--max-a", "7", "--jobs", "2"),
        ("mincore", str(inst), "--max-a", "7", "--jobs", "4"),
    ]
    runs = 0
    mincore_outputs = set()
    for argv in invocations:
        first = _run_cli(*argv)
        for _ in range(2):
            if _run_cli(*argv) != first:
                _report(13, "cli determinism", False, " ".join(argv))
        runs += 3
        if argv[0] == "mincore":
            mincore_outputs.add(first)
    if len(mincore_outputs) != 1:
        _report(13, "cli determinism", False, "--jobs changed output bytes")
    _report(13, "cli determinism", True, f"{runs} invocations compared")
