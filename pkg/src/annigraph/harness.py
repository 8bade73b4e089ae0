"""Per-spec dimension reports and the exhaustive verification sweep."""
from __future__ import annotations

import csv
import io
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import ag_graph
from .constructions import explicit_resolving_set
from .errors import GraphSizeError
from .formulas import Case, DimBounds, dim_bounds
from .metdim import ResolvingSetCertificate, exact_metric_dimension, is_resolving
from .ring_model import RingSpec

DEFAULT_EXACT_CAP = 500

FORMULA_MATCHES = "FormulaMatches"
WITHIN_BOUNDS = "WithinBounds"
MISMATCH = "MISMATCH"

CSV_COLUMNS = [
    "spec", "beta", "case", "vertices", "edges", "lower", "upper", "exact",
    "constructed_size", "constructed_resolves", "verdict", "ms_build", "ms_solve",
]


@dataclass
class DimReport:
    spec: RingSpec
    vertex_count: int
    edge_count: int
    bounds: DimBounds
    exact_solver: int | None = None
    basis: list | None = None
    constructed_set_size: int | None = None
    constructed_resolves: bool | None = None
    distances_agree: bool | None = None
    verdict: str = ""
    problems: list[str] = field(default_factory=list)
    ms_build: float = 0.0
    ms_solve: float = 0.0
    certificate: ResolvingSetCertificate | None = None
    constructed_certificate: ResolvingSetCertificate | None = None

    def csv_row(self, timings: bool = False) -> list:
        def fmt(x):
            if x is None:
                return ""
            if isinstance(x, bool):
                return "true" if x else "false"
            return x

        return [
            str(self.spec), self.bounds.beta, self.bounds.case.value,
            self.vertex_count, self.edge_count, self.bounds.lower, self.bounds.upper,
            fmt(self.exact_solver), fmt(self.constructed_set_size),
            fmt(self.constructed_resolves), self.verdict,
            f"{self.ms_build:.1f}" if timings else "",
            f"{self.ms_solve:.1f}" if timings else "",
        ]

    def to_json(self) -> dict:
        doc = {
            "spec": list(self.spec.orders),
            "beta": self.bounds.beta,
            "case": self.bounds.case.value,
            "vertices": self.vertex_count,
            "edges": self.edge_count,
            "lower": self.bounds.lower,
            "upper": self.bounds.upper,
            "epsilon": self.bounds.epsilon,
            "formula_exact": self.bounds.exact,
            "exact": self.exact_solver,
            "constructed_size": self.constructed_set_size,
            "constructed_resolves": self.constructed_resolves,
            "verdict": self.verdict,
        }
        if self.basis is not None:
            doc["basis"] = [str(v) for v in self.basis]
        if self.distances_agree is not None:
            doc["distances_agree"] = self.distances_agree
        if self.problems:
            doc["problems"] = self.problems
        if self.certificate is not None:
            doc["certificate"] = self.certificate.to_json()
        if self.constructed_certificate is not None:
            doc["constructed_certificate"] = self.constructed_certificate.to_json()
        return doc


def distances_agree(graph: ag_graph.AGGraph) -> bool:
    closed = ag_graph.closed_form_matrix(graph.spec, graph.exps)
    return bool(np.array_equal(closed, ag_graph.bfs_matrix(graph)))


def make_report(
    spec: RingSpec,
    exact: bool = True,
    construct: bool = True,
    check_distances: bool = False,
    certificate: bool = False,
    oracle: str = "closed",
    exact_cap: int = DEFAULT_EXACT_CAP,
) -> DimReport:
    bounds = dim_bounds(spec)
    t0 = time.perf_counter()
    graph = ag_graph.build(spec, oracle=oracle)
    graph.distances
    t1 = time.perf_counter()
    report = DimReport(spec, len(graph), graph.edge_count, bounds)
    report.ms_build = (t1 - t0) * 1000

    if check_distances:
        report.distances_agree = distances_agree(graph)
        if not report.distances_agree:
            report.problems.append("closed-form distances differ from BFS")

    if construct:
        X = explicit_resolving_set(spec)
        cert = is_resolving(graph, X)
        report.constructed_set_size = len(X)
        report.constructed_resolves = cert.resolves
        if certificate:
            report.constructed_certificate = cert
        if not cert.resolves:
            report.problems.append("constructed set does not resolve")
        if len(X) != bounds.upper:
            report.problems.append(
                f"constructed set has {len(X)} vertices, upper bound is {bounds.upper}"
            )

    if exact or certificate:
        if len(graph) > exact_cap:
            raise GraphSizeError(len(graph), exact_cap)
        t2 = time.perf_counter()
        dim, basis = exact_metric_dimension(graph)
        report.ms_solve = (time.perf_counter() - t2) * 1000
        report.exact_solver = dim
        report.basis = basis
        if certificate:
            report.certificate = is_resolving(graph, basis)
        if bounds.exact is not None and dim != bounds.exact:
            report.problems.append(f"solver gives {dim}, formula gives {bounds.exact}")
        elif not bounds.contains(dim):
            report.problems.append(
                f"solver gives {dim}, outside [{bounds.lower}, {bounds.upper}]"
            )

    if report.problems:
        report.verdict = MISMATCH
    elif bounds.case is Case.GENERAL:
        report.verdict = WITHIN_BOUNDS
    else:
        report.verdict = FORMULA_MATCHES
    return report


def sweep_grid(
    max_factors: int,
    max_order: int,
    max_vertices: int | None = None,
    ordered: bool = False,
) -> list[RingSpec]:
    """Order tuples with 1..max_factors entries in 1..max_order.

    Tuples equal up to sorting are kept once (in descending form) unless
    ``ordered`` is set.  The result is sorted by factor count, then tuple.
    """
    specs: set[tuple[int, ...]] = set()

    def extend(prefix: tuple[int, ...], top: int):
        if prefix:
            specs.add(prefix)
        if len(prefix) == max_factors:
            return
        for n in range(1, top + 1):
            extend(prefix + (n,), max_order if ordered else n)

    extend((), max_order)
    out = [RingSpec(t) for t in sorted(specs, key=lambda t: (len(t), t))]
    if max_vertices is not None:
        out = [s for s in out if s.vertex_count() <= max_vertices]
    return out


def _verify_one(spec: RingSpec) -> DimReport:
    return make_report(spec, exact=True, construct=True, check_distances=True)


def run_sweep(specs: list[RingSpec], jobs: int = 1) -> list[DimReport]:
    if jobs > 1 and len(specs) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_verify_one, specs, chunksize=1))
    else:
        reports = [_verify_one(s) for s in specs]
    # output order never depends on scheduling
    order = {s.orders: i for i, s in enumerate(specs)}
    return sorted(reports, key=lambda r: order[r.spec.orders])


def reports_to_csv(reports: list[DimReport], timings: bool = False) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in reports:
        writer.writerow(r.csv_row(timings))
    return buf.getvalue()
