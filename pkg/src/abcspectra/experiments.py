"""Exhaustive verification experiments over enumerated graph classes:
bound checks, extremal-tree ranking, threshold lemma sweeps, attainer
search, spectral-radius ordering, and the max-degree monotonicity probe.

Reports are deterministic: rows are sorted by descending spectral radius
with canonical-key tie-breaks, floats are serialized with shortest
round-trip representations, and repeated runs produce identical bytes.
Per-graph work may fan out over a process pool (environment variable
ABCSPECTRA_WORKERS, default: machine parallelism) without changing output.
"""

import json
import math
import os
from dataclasses import dataclass, field

from .bounds import (cyclomatic_upper_bound, degree_upper_bound,
                     degree_upper_bound_int)
from .enumeration import GraphClassSpec, graph_class
from .graph6 import encode_graph6
from .graphs import (GENERAL_KEY_CAP, TREE_KEY_CAP, canonical_key, complete,
                     cycle, delta_n_minus_3_trees, double_star, path, star,
                     star_plus_edge)
from .invariants import abc_matrix, abc_index, abc_spectral_radius

DEFAULT_TOL = 1e-9

CSV_HEADER = "key,graph6,n,m,delta,rho,bound,slack"


def row_key(g):
    """Stable printable identifier: the canonical key when the graph is
    within the exact-canonicalization caps, otherwise its graph6 string."""
    within = (g.is_tree() and g.n <= TREE_KEY_CAP) or g.n <= GENERAL_KEY_CAP
    if not within:
        return "g6:" + encode_graph6(g)
    key = canonical_key(g)
    if key[:1] == b"T":
        return key.decode("ascii")
    return key.hex()


# ---------------------------------------------------------------------------
# Spectral radius evaluation with memoization and optional process pool
# ---------------------------------------------------------------------------

_RHO_CACHE = {}


def _worker_count():
    raw = os.environ.get("ABCSPECTRA_WORKERS", "")
    if raw.strip():
        return max(1, int(raw))
    return os.cpu_count() or 1

_POOL_THRESHOLD = 64


def spectral_radii(graphs):
    """Spectral radii for a batch of graphs, memoized on the labeled
    graph6 encoding; order follows the input."""
    graphs = list(graphs)
    tags = [encode_graph6(g) for g in graphs]
    missing = [(t, g) for t, g in zip(tags, graphs) if t not in _RHO_CACHE]
    if missing:
        todo = [g for _, g in missing]
        values = None
        workers = _worker_count()
        if workers > 1 and len(todo) >= _POOL_THRESHOLD:
            try:
                from multiprocessing import Pool
                chunk = max(1, len(todo) // (4 * workers))
                with Pool(workers) as pool:
                    values = pool.map(abc_spectral_radius, todo, chunksize=chunk)
            except OSError:
                values = None
        if values is None:
            values = [abc_spectral_radius(g) for g in todo]
        for (t, _), v in zip(missing, values):
            _RHO_CACHE[t] = v
    return [_RHO_CACHE[t] for t in tags]


# ---------------------------------------------------------------------------
# Report containers
# ---------------------------------------------------------------------------

def _fmt(value):
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return str(value)


@dataclass(frozen=True)
class GraphRow:
    key: str
    graph6: str
    n: int
    m: int
    delta: int
    rho: float
    bound: float = None
    slack: float = None
    extra: dict = field(default_factory=dict)

    def csv(self):
        return ",".join(_fmt(v) for v in
                        (self.key, self.graph6, self.n, self.m, self.delta,
                         self.rho, self.bound, self.slack))


@dataclass(frozen=True)
class ExperimentReport:
    experiment_id: str
    class_label: str
    tolerance: float
    rows: tuple
    summary: dict

    @property
    def violations(self):
        return self.summary.get("violations", 0)

    @property
    def passed(self):
        return self.summary.get("passed", self.violations == 0)

    def to_csv_text(self):
        lines = [CSV_HEADER]
        lines.extend(row.csv() for row in self.rows)
        return "\n".join(lines) + "\n"

    def write_csv(self, path):
        with open(path, "w", encoding="ascii") as handle:
            handle.write(self.to_csv_text())

    def to_json_dict(self):
        return {
            "experiment_id": self.experiment_id,
            "class": self.class_label,
            "tolerance": self.tolerance,
            "rows": [
                {"key": r.key, "graph6": r.graph6, "n": r.n, "m": r.m,
                 "delta": r.delta, "rho": r.rho, "bound": r.bound,
                 "slack": r.slack, **r.extra}
                for r in self.rows],
            "summary": self.summary,
        }

    def write_json(self, path):
        with open(path, "w", encoding="ascii") as handle:
            json.dump(self.to_json_dict(), handle, indent=2)
            handle.write("\n")


def _make_rows(graphs, rhos, bound_fn=None, extra_fn=None):
    rows = []
    for g, rho in zip(graphs, rhos):
        bound = bound_fn(g, rho) if bound_fn is not None else None
        slack = None if bound is None else bound - rho
        extra = extra_fn(g, rho) if extra_fn is not None else {}
        rows.append(GraphRow(row_key(g), encode_graph6(g), g.n, g.m,
                             g.max_degree, rho, bound, slack, extra))
    rows.sort(key=lambda r: (-r.rho, r.key))
    return tuple(rows)


# ---------------------------------------------------------------------------
# Bound verification
# ---------------------------------------------------------------------------

BOUND_IDS = ("degree", "degree-int", "cyclomatic", "complete", "estrada", "tree")


def _bound_value(bound, g):
    if bound == "degree":
        return degree_upper_bound(g.n, g.m, g.max_degree)
    if bound == "degree-int":
        return degree_upper_bound_int(g.n, g.m, g.max_degree)
    if bound == "cyclomatic":
        return cyclomatic_upper_bound(g.n, g.cycle_rank)
    if bound == "complete":
        return math.sqrt(2 * g.n - 4)
    if bound == "estrada":
        return max(abc_matrix(g).row_sums)
    if bound == "tree":
        return math.sqrt(g.n - 2)
    raise ValueError(f"unknown bound id {bound!r}; choose from {BOUND_IDS}")


def verify_upper_bound(spec, bound="degree", tol=DEFAULT_TOL):
    """Check one upper bound against every graph of a class; a violation is
    a row whose slack (bound minus spectral radius) falls below -tol."""
    if tol <= 0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    if bound not in BOUND_IDS:
        raise ValueError(f"unknown bound id {bound!r}; choose from {BOUND_IDS}")
    if bound == "cyclomatic":
        ranks = {"trees": 0, "unicyclic": 1, "c-cyclic": spec.c,
                 "trees-max-degree": 0}
        if spec.kind not in ranks:
            raise ValueError(
                f"the cyclomatic bound needs a fixed cycle rank; class "
                f"{spec.kind!r} mixes them")
        if 2 * ranks[spec.kind] > spec.n - 1:
            raise ValueError(
                f"cycle rank {ranks[spec.kind]} exceeds (n-1)/2 at n = {spec.n}")
    if bound == "tree" and spec.kind not in ("trees", "trees-max-degree"):
        raise ValueError(f"the tree bound does not apply to class {spec.kind!r}")
    if bound == "complete" and spec.n < 3:
        raise ValueError("the complete-graph cap needs n >= 3")

    graphs = list(graph_class(spec))
    rhos = spectral_radii(graphs)

    extra_fn = None
    if bound == "estrada":
        def extra_fn(g, rho):
            lower = (2.0 / g.n) * abc_index(g)
            return {"estrada_lower": lower, "lower_slack": rho - lower}

    rows = _make_rows(graphs, rhos, lambda g, rho: _bound_value(bound, g),
                      extra_fn)
    violations = sum(1 for r in rows if r.slack < -tol)
    if bound == "estrada":
        violations += sum(1 for r in rows if r.extra["lower_slack"] < -tol)
    attainers = [r.key for r in rows if abs(r.slack) <= tol]
    summary = {
        "graphs": len(rows),
        "violations": violations,
        "attainers": attainers,
        "passed": violations == 0,
    }
    return ExperimentReport(f"verify-upper[{bound}]", spec.label(), tol,
                            rows, summary)


def find_attainers(spec, tol=DEFAULT_TOL):
    """Graphs of a class meeting the degree upper bound with equality
    within tol.  Exploration output: the summary records whether the star
    and the complete graph show up, and surfaces everything else found."""
    graphs = list(graph_class(spec))
    rhos = spectral_radii(graphs)
    rows = _make_rows(graphs, rhos, lambda g, rho: _bound_value("degree", g))
    attainers = sorted(r.key for r in rows if abs(r.slack) <= tol)
    star_key = row_key(star(spec.n))
    complete_key = row_key(complete(spec.n))
    summary = {
        "graphs": len(rows),
        "violations": 0,
        "attainers": attainers,
        "contains_star": star_key in attainers,
        "contains_complete": complete_key in attainers,
        "other_attainers": [k for k in attainers
                            if k not in (star_key, complete_key)],
        "passed": True,
    }
    return ExperimentReport("find-attainers", spec.label(), tol, rows, summary)


# ---------------------------------------------------------------------------
# Tree ranking and threshold lemmas
# ---------------------------------------------------------------------------

def verify_tree_ordering(n, tol=DEFAULT_TOL):
    """Rank all free trees of order n by spectral radius and check the
    extremal pattern: the star strictly first, the double star with n-3
    and 1 pendant leaves strictly second, the path last at
    sqrt(2) cos(pi/(n+1))."""
    if not (4 <= n <= TREE_KEY_CAP):
        raise ValueError(f"tree ordering supports 4 <= n <= {TREE_KEY_CAP}, got {n}")
    spec = GraphClassSpec("trees", n)
    graphs = list(graph_class(spec))
    rhos = spectral_radii(graphs)
    bound = math.sqrt(n - 2)
    rows = _make_rows(graphs, rhos, lambda g, rho: bound)

    star_key = row_key(star(n))
    second_key = row_key(double_star(n - 3, 1))
    path_key = row_key(path(n))
    path_value = math.sqrt(2.0) * math.cos(math.pi / (n + 1))

    checks = {
        "first_is_star": rows[0].key == star_key,
        "second_is_double_star": rows[min(1, len(rows) - 1)].key == second_key,
        "star_gap_strict": len(rows) < 2 or rows[0].rho - rows[1].rho > tol,
        "second_gap_strict": len(rows) < 3 or rows[1].rho - rows[2].rho > tol,
        "last_is_path": rows[-1].key == path_key,
        "path_value_match": abs(rows[-1].rho - path_value) <= 1e-10,
    }
    summary = {
        "graphs": len(rows),
        "violations": sum(1 for ok in checks.values() if not ok),
        "checks": checks,
        "ranking": [r.key for r in rows],
        "passed": all(checks.values()),
    }
    return ExperimentReport("tree-ordering", spec.label(), tol, rows, summary)


def verify_double_star_gate(n_values, tol=DEFAULT_TOL):
    """For each order n >= 4: the double star with n-3 and 1 pendant leaves
    sits strictly above sqrt(n-3.5), and its squared radius strictly
    exceeds (n-3)^2/(n-2) + 1/2.

    Rows carry the gate in the bound column with slack = rho - gate, the
    margin by which the lower-bound claim holds.
    """
    n_values = sorted(set(n_values))
    if any(n < 4 for n in n_values):
        raise ValueError("the double-star gate needs n >= 4")
    graphs = [double_star(n - 3, 1) for n in n_values]
    rhos = spectral_radii(graphs)
    rows = []
    per_n = {}
    for g, rho in zip(graphs, rhos):
        n = g.n
        gate = math.sqrt(n - 3.5)
        inner = (n - 3) ** 2 / (n - 2) + 0.5
        per_n[str(n)] = {
            "rho": rho,
            "gate": gate,
            "above_gate": rho - gate > tol,
            "square_above_inner": rho * rho - inner > tol,
        }
        rows.append(GraphRow(row_key(g), encode_graph6(g), n, g.m,
                             g.max_degree, rho, gate, rho - gate,
                             {"inner_margin": rho * rho - inner}))
    rows.sort(key=lambda r: (-r.rho, r.key))
    ok = all(v["above_gate"] and v["square_above_inner"] for v in per_n.values())
    summary = {
        "graphs": len(rows),
        "violations": sum(1 for v in per_n.values()
                          if not (v["above_gate"] and v["square_above_inner"])),
        "per_n": per_n,
        "passed": ok,
    }
    return ExperimentReport("double-star-gate", f"double-star(n={n_values})",
                            tol, tuple(rows), summary)


def verify_near_max_degree_trees(n_values, tol=DEFAULT_TOL):
    """For each order n >= 6: every tree whose maximum degree is n-3 stays
    strictly below sqrt(n-3.5)."""
    n_values = sorted(set(n_values))
    if any(n < 6 for n in n_values):
        raise ValueError("max-degree n-3 trees need n >= 6")
    graphs = []
    for n in n_values:
        graphs.extend(delta_n_minus_3_trees(n))
    rhos = spectral_radii(graphs)
    rows = _make_rows(graphs, rhos,
                      lambda g, rho: math.sqrt(g.n - 3.5))
    violations = sum(1 for r in rows if r.slack <= tol)  # strict claim
    summary = {
        "graphs": len(rows),
        "violations": violations,
        "min_margin": min(r.slack for r in rows),
        "passed": violations == 0,
    }
    return ExperimentReport("near-max-degree-trees",
                            f"trees-max-degree(n={n_values})", tol, rows, summary)


def verify_unicyclic_extremes(n, tol=DEFAULT_TOL):
    """Over all unicyclic graphs of order n: the cycle is the unique
    minimum (at sqrt(2)) and the star plus one edge the unique maximum."""
    if not (4 <= n <= 8):
        raise ValueError(f"unicyclic extremes support 4 <= n <= 8, got {n}")
    spec = GraphClassSpec("unicyclic", n)
    graphs = list(graph_class(spec))
    rhos = spectral_radii(graphs)
    rows = _make_rows(graphs, rhos)
    cycle_key = row_key(cycle(n))
    top_key = row_key(star_plus_edge(n))
    checks = {
        "min_is_cycle": rows[-1].key == cycle_key,
        "min_value_sqrt2": abs(rows[-1].rho - math.sqrt(2.0)) <= 1e-10,
        "min_unique": len(rows) < 2 or rows[-2].rho - rows[-1].rho > tol,
        "max_is_star_plus_edge": rows[0].key == top_key,
        "max_unique": len(rows) < 2 or rows[0].rho - rows[1].rho > tol,
    }
    summary = {
        "graphs": len(rows),
        "violations": sum(1 for ok in checks.values() if not ok),
        "checks": checks,
        "passed": all(checks.values()),
    }
    return ExperimentReport("unicyclic-extremes", spec.label(), tol, rows, summary)


# ---------------------------------------------------------------------------
# Open-ended explorations
# ---------------------------------------------------------------------------

def probe_delta_monotonicity(spec, tol=DEFAULT_TOL):
    """Smallest integer level such that any two class members whose maximum
    degrees both reach it are ordered by spectral radius exactly as by max
    degree.  Pure exploration: nothing is asserted beyond what was computed.
    """
    graphs = list(graph_class(spec))
    rhos = spectral_radii(graphs)
    rows = _make_rows(graphs, rhos)
    deltas = sorted({r.delta for r in rows})
    by_delta = {d: [r for r in rows if r.delta == d] for d in deltas}

    def violating_pair(level):
        # highest-rho row of the lower level vs lowest-rho row above it
        for i, d2 in enumerate(deltas):
            if d2 < level:
                continue
            for d1 in deltas[i + 1:]:
                hi_of_low = by_delta[d2][0]        # rows sorted by -rho
                lo_of_high = by_delta[d1][-1]
                if lo_of_high.rho <= hi_of_low.rho + tol:
                    return (lo_of_high, hi_of_low)
        return None

    level = deltas[0] if deltas else 0
    witness = None
    while True:
        pair = violating_pair(level)
        if pair is None:
            break
        witness = pair
        level += 1

    level_table = {
        str(d): {"count": len(by_delta[d]),
                 "rho_max": by_delta[d][0].rho,
                 "rho_min": by_delta[d][-1].rho}
        for d in deltas}
    summary = {
        "graphs": len(rows),
        "violations": 0,
        "monotone_level": level,
        "witness_below": None if witness is None else {
            "higher_degree": {"key": witness[0].key, "delta": witness[0].delta,
                              "rho": witness[0].rho},
            "lower_degree": {"key": witness[1].key, "delta": witness[1].delta,
                             "rho": witness[1].rho}},
        "level_table": level_table,
        "passed": True,
    }
    return ExperimentReport("delta-monotonicity-probe", spec.label(), tol,
                            rows, summary)


def order_class(spec, tol=DEFAULT_TOL):
    """Full spectral-radius ranking of a class.  Exact ties between
    non-isomorphic graphs are reported, never resolved."""
    graphs = list(graph_class(spec))
    rhos = spectral_radii(graphs)
    rows = _make_rows(graphs, rhos)
    ties = []
    run = [0]
    for i in range(1, len(rows)):
        if abs(rows[i].rho - rows[run[0]].rho) <= 1e-12:
            run.append(i)
        else:
            if len(run) > 1:
                ties.append([rows[j].key for j in run])
            run = [i]
    if len(run) > 1:
        ties.append([rows[j].key for j in run])
    summary = {
        "graphs": len(rows),
        "violations": 0,
        "ties": ties,
        "passed": True,
    }
    return ExperimentReport("order-class", spec.label(), tol, rows, summary)
