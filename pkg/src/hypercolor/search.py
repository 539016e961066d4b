"""Randomized audit harness hunting for chromatic-gap instances.

Samples seeded random hypergraphs, computes both chromatic numbers exactly,
and reports every instance whose hypergraph chromatic number exceeds that of
its 1-intersection graph (under the configured parity and edge-size
filters).  Such instances are findings to surface and replay, not test
failures: for even class counts >= 4 none are known, and the harness exists
to look for them.

Determinism contract: trial i draws its instance from the seed
derive_seed(base_seed, i), so trials are order-independent and the report is
identical however the work is split across processes.  Every violation is
re-verified before the report is returned: the instance is regenerated from
its recorded seed and both chromatic numbers are recomputed from scratch.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from .color import four_color, two_color
from .core import Hypergraph, build_hypergraph, is_proper, one_intersection_graph
from .errors import (
    InternalInvariantViolation,
    NotBipartiteIntersection,
    NotFourColorableIntersection,
)
from .exact import (
    GRAPH_CAP,
    VERTEX_CAP,
    graph_chromatic_number,
    hypergraph_chromatic_number,
)
from .gen import distinct_edge_count, sample_edges
from .rng import Xoshiro256StarStar, derive_seed

MODES = ("conjecture_audit", "theorem_audit_3uniform", "two_color_stress", "four_color_stress")
PARITIES = ("even", "odd", "any")

REPORT_SCHEMA = "hypercolor.search-report/1"


@dataclass(frozen=True)
class SearchConfig:
    """What to sample and what counts as a violation."""

    n_range: tuple[int, int]
    m_range: tuple[int, int]
    size_range: tuple[int, int]
    trials: int
    base_seed: int
    parity_filter: str = "even"
    min_edge_size_filter: int = 2
    mode: str = "conjecture_audit"

    def validate(self) -> None:
        for name, (lo, hi) in (
            ("n_range", self.n_range),
            ("m_range", self.m_range),
            ("size_range", self.size_range),
        ):
            if lo > hi:
                raise ValueError(f"{name} is empty: {lo}..{hi}")
        if self.n_range[0] < 2:
            raise ValueError("n_range must start at 2 or more")
        if self.m_range[0] < 1:
            raise ValueError("m_range must start at 1 or more")
        if self.size_range[0] < 2:
            raise ValueError("hyperedges have size >= 2")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.parity_filter not in PARITIES:
            raise ValueError(f"parity_filter must be one of {PARITIES}")
        if self.min_edge_size_filter < 2:
            raise ValueError("min_edge_size_filter must be >= 2")
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}")


@dataclass(frozen=True)
class Violation:
    """One flagged instance, with everything needed to replay it."""

    trial: int
    seed: int
    kind: str  # chromatic_gap | invariant_violation | improper_coloring
    n: int
    edges: tuple[tuple[int, ...], ...]
    chromatic_intersection: int
    chromatic_hypergraph: int
    detail: str = ""

    def hypergraph(self) -> Hypergraph:
        return Hypergraph(n=self.n, edges=self.edges)


@dataclass(frozen=True)
class TrialResult:
    trial: int
    seed: int
    skipped: str | None = None  # None, or a skip kind: "cap" | "unsatisfiable"
    chromatic_intersection: int | None = None
    chromatic_hypergraph: int | None = None
    eligible: bool = False
    violation: Violation | None = None


@dataclass(frozen=True)
class SearchReport:
    config: SearchConfig
    cap_vertices: int
    cap_graph: int
    trials_run: int
    trials_skipped: int
    skip_breakdown: dict[str, int]
    eligible: int
    histogram: dict[tuple[int, int], int]
    violations: tuple[Violation, ...] = field(default=())

    def to_json(self) -> str:
        doc = {
            "schema": REPORT_SCHEMA,
            "config": {
                "n_range": list(self.config.n_range),
                "m_range": list(self.config.m_range),
                "size_range": list(self.config.size_range),
                "trials": self.config.trials,
                "base_seed": self.config.base_seed,
                "parity_filter": self.config.parity_filter,
                "min_edge_size_filter": self.config.min_edge_size_filter,
                "mode": self.config.mode,
            },
            "caps": {"vertices": self.cap_vertices, "intersection_graph": self.cap_graph},
            "trials_run": self.trials_run,
            "trials_skipped": self.trials_skipped,
            "skip_breakdown": {k: self.skip_breakdown[k] for k in sorted(self.skip_breakdown)},
            "eligible": self.eligible,
            "histogram": [
                {"chromatic_intersection": i, "chromatic_hypergraph": j, "count": c}
                for (i, j), c in sorted(self.histogram.items())
            ],
            "violations": [asdict(v) for v in self.violations],
        }
        return json.dumps(doc, indent=2) + "\n"

    def render_text(self) -> str:
        lines = [
            f"mode:            {self.config.mode}",
            f"trials:          {self.config.trials} requested, {self.trials_run} evaluated, "
            f"{self.trials_skipped} skipped",
            f"eligible:        {self.eligible}",
            f"violations:      {len(self.violations)}",
        ]
        if self.histogram:
            lines.append("")
            lines.append("chromatic pairs (1-intersection graph vs hypergraph):")
            lines.append(f"  {'ig':>4} {'hyper':>6} {'count':>8}")
            for (i, j), c in sorted(self.histogram.items()):
                lines.append(f"  {i:>4} {j:>6} {c:>8}")
        for v in self.violations:
            lines.append("")
            lines.append(
                f"VIOLATION trial={v.trial} seed={v.seed} kind={v.kind} "
                f"chi_ig={v.chromatic_intersection} chi_h={v.chromatic_hypergraph}"
            )
            lines.append(f"  n={v.n} edges={[list(e) for e in v.edges]}")
            if v.detail:
                lines.append(f"  {v.detail}")
        return "\n".join(lines) + "\n"


def _sample_trial_instance(cfg: SearchConfig, trial: int) -> tuple[int, Hypergraph | None, str | None]:
    """Draw trial's instance; returns (seed, hypergraph or None, skip kind or None)."""
    seed = derive_seed(cfg.base_seed, trial)
    rng = Xoshiro256StarStar(seed)
    n = rng.randint(*cfg.n_range)
    m = rng.randint(*cfg.m_range)
    if cfg.mode == "theorem_audit_3uniform":
        size_lo, size_hi = 3, 3
    else:
        size_lo, size_hi = cfg.size_range
    size_hi = min(size_hi, n)
    if size_lo > size_hi or m > distinct_edge_count(n, size_lo, size_hi):
        return seed, None, "unsatisfiable"
    h = build_hypergraph(n, sample_edges(rng, n, m, size_lo, size_hi))
    return seed, h, None


def _parity_ok(cfg: SearchConfig, chi_ig: int) -> bool:
    if cfg.mode == "theorem_audit_3uniform":
        return True  # 3-uniform instances are audited at every class count
    if cfg.parity_filter == "even":
        return chi_ig % 2 == 0
    if cfg.parity_filter == "odd":
        return chi_ig % 2 == 1
    return True


def _run_trial(cfg: SearchConfig, cap_vertices: int, cap_graph: int, trial: int) -> TrialResult:
    seed, h, skip = _sample_trial_instance(cfg, trial)
    if skip is not None:
        return TrialResult(trial=trial, seed=seed, skipped=skip)
    assert h is not None
    if h.n > cap_vertices or h.m > cap_graph:
        return TrialResult(trial=trial, seed=seed, skipped="cap")

    if cfg.mode in ("conjecture_audit", "theorem_audit_3uniform"):
        chi_ig = graph_chromatic_number(one_intersection_graph(h), cap=cap_graph)
        chi_h, _ = hypergraph_chromatic_number(h, cap=cap_vertices)
        eligible = (
            chi_ig >= 2
            and _parity_ok(cfg, chi_ig)
            and min(len(e) for e in h.edges) >= cfg.min_edge_size_filter
        )
        violation = None
        if eligible and chi_h > chi_ig:
            violation = Violation(
                trial=trial,
                seed=seed,
                kind="chromatic_gap",
                n=h.n,
                edges=h.edges,
                chromatic_intersection=chi_ig,
                chromatic_hypergraph=chi_h,
            )
        return TrialResult(
            trial=trial,
            seed=seed,
            chromatic_intersection=chi_ig,
            chromatic_hypergraph=chi_h,
            eligible=eligible,
            violation=violation,
        )

    if cfg.mode == "two_color_stress":
        return _stress_trial(h, trial, seed, cap_vertices, cap_graph, _two_color_probe)
    return _stress_trial(h, trial, seed, cap_vertices, cap_graph, _four_color_probe)


def _two_color_probe(h: Hypergraph, cap_graph: int) -> tuple[bool, str | None, str]:
    """Returns (eligible, failure kind or None, detail)."""
    try:
        coloring, _ = two_color(h)
    except NotBipartiteIntersection:
        return False, None, ""
    except InternalInvariantViolation as exc:
        return True, "invariant_violation", str(exc)
    ok, witnesses = is_proper(h, coloring)
    if not ok or coloring.k > 2:
        return True, "improper_coloring", f"k={coloring.k} monochromatic={witnesses}"
    return True, None, ""


def _four_color_probe(h: Hypergraph, cap_graph: int) -> tuple[bool, str | None, str]:
    try:
        result = four_color(h, cap=cap_graph)
    except NotFourColorableIntersection:
        return False, None, ""
    except InternalInvariantViolation as exc:
        return True, "invariant_violation", str(exc)
    coloring = result.coloring
    ok, witnesses = is_proper(h, coloring)
    summed = all(
        coloring[v] == result.low_coloring[v] + result.high_coloring[v]
        for v in range(h.n)
    )
    if not ok or coloring.k > 4 or not summed:
        return True, "improper_coloring", f"k={coloring.k} monochromatic={witnesses} sum_law={summed}"
    return True, None, ""


def _stress_trial(
    h: Hypergraph, trial: int, seed: int, cap_vertices: int, cap_graph: int, probe
) -> TrialResult:
    eligible, failure, detail = probe(h, cap_graph)
    violation = None
    if failure is not None:
        chi_ig = graph_chromatic_number(one_intersection_graph(h), cap=cap_graph)
        chi_h, _ = hypergraph_chromatic_number(h, cap=cap_vertices)
        violation = Violation(
            trial=trial,
            seed=seed,
            kind=failure,
            n=h.n,
            edges=h.edges,
            chromatic_intersection=chi_ig,
            chromatic_hypergraph=chi_h,
            detail=detail,
        )
    return TrialResult(trial=trial, seed=seed, eligible=eligible, violation=violation)


def _reverify(cfg: SearchConfig, cap_vertices: int, cap_graph: int, v: Violation) -> None:
    """Replay the violating instance from its seed and recompute everything fresh."""
    seed, h, skip = _sample_trial_instance(cfg, v.trial)
    if seed != v.seed or skip is not None or h is None or h.edges != v.edges or h.n != v.n:
        raise InternalInvariantViolation(
            f"violation at trial {v.trial} did not replay identically from seed {v.seed}"
        )
    chi_ig = graph_chromatic_number(one_intersection_graph(h), cap=cap_graph)
    chi_h, _ = hypergraph_chromatic_number(h, cap=cap_vertices)
    if chi_ig != v.chromatic_intersection or chi_h != v.chromatic_hypergraph:
        raise InternalInvariantViolation(
            f"violation at trial {v.trial} did not re-verify: recomputed "
            f"({chi_ig}, {chi_h}), recorded "
            f"({v.chromatic_intersection}, {v.chromatic_hypergraph})"
        )
    if v.kind == "chromatic_gap" and chi_h <= chi_ig:
        raise InternalInvariantViolation(
            f"violation at trial {v.trial} is not a chromatic gap on re-verification"
        )


def run_search(
    cfg: SearchConfig,
    jobs: int = 1,
    cap_vertices: int = VERTEX_CAP,
    cap_graph: int = GRAPH_CAP,
) -> SearchReport:
    """Run all trials (optionally across processes) and merge deterministically.

    The merge is by trial index, so the report does not depend on ``jobs``.
    """
    cfg.validate()
    trials = range(cfg.trials)
    if jobs <= 1:
        results = [_run_trial(cfg, cap_vertices, cap_graph, t) for t in trials]
    else:
        chunk = max(1, cfg.trials // (jobs * 8))
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(
                pool.map(
                    _trial_worker,
                    ((cfg, cap_vertices, cap_graph, t) for t in trials),
                    chunksize=chunk,
                )
            )
    results.sort(key=lambda r: r.trial)

    skip_breakdown: dict[str, int] = {}
    histogram: dict[tuple[int, int], int] = {}
    violations: list[Violation] = []
    eligible = 0
    for r in results:
        if r.skipped is not None:
            skip_breakdown[r.skipped] = skip_breakdown.get(r.skipped, 0) + 1
            continue
        if r.chromatic_intersection is not None and r.chromatic_hypergraph is not None:
            key = (r.chromatic_intersection, r.chromatic_hypergraph)
            histogram[key] = histogram.get(key, 0) + 1
        if r.eligible:
            eligible += 1
        if r.violation is not None:
            violations.append(r.violation)

    for v in violations:
        _reverify(cfg, cap_vertices, cap_graph, v)

    skipped = sum(skip_breakdown.values())
    return SearchReport(
        config=cfg,
        cap_vertices=cap_vertices,
        cap_graph=cap_graph,
        trials_run=cfg.trials - skipped,
        trials_skipped=skipped,
        skip_breakdown=skip_breakdown,
        eligible=eligible,
        histogram=histogram,
        violations=tuple(violations),
    )


def _trial_worker(args: tuple[SearchConfig, int, int, int]) -> TrialResult:
    cfg, cap_vertices, cap_graph, trial = args
    return _run_trial(cfg, cap_vertices, cap_graph, trial)
