"""The audit harness: determinism, rediscovery, and re-verification."""

import json

import pytest

from hypercolor.errors import InternalInvariantViolation
from hypercolor.search import (
    REPORT_SCHEMA,
    SearchConfig,
    Violation,
    _reverify,
    run_search,
)

BASE = dict(n_range=(3, 7), m_range=(1, 6), size_range=(2, 3), trials=30, base_seed=11)


def test_report_is_identical_across_jobs():
    cfg = SearchConfig(**BASE)
    assert run_search(cfg, jobs=1).to_json() == run_search(cfg, jobs=3).to_json()


def test_report_json_shape():
    cfg = SearchConfig(**BASE)
    doc = json.loads(run_search(cfg).to_json())
    assert doc["schema"] == REPORT_SCHEMA
    assert doc["config"]["base_seed"] == 11
    assert doc["trials_run"] + doc["trials_skipped"] == 30
    assert isinstance(doc["histogram"], list)
    for entry in doc["histogram"]:
        assert set(entry) == {"chromatic_intersection", "chromatic_hypergraph", "count"}


def test_histogram_counts_sum_to_trials_run():
    cfg = SearchConfig(**BASE)
    report = run_search(cfg)
    assert sum(report.histogram.values()) == report.trials_run


def test_even_parity_default_finds_nothing_small():
    report = run_search(SearchConfig(**BASE))
    assert report.violations == ()


def test_k4_is_rediscovered_under_odd_parity():
    # with n=4, m=6, sizes 2..2 every trial draws all six pairs: the complete
    # graph K_4, whose 1-intersection graph is 3-chromatic while the
    # hypergraph needs 4 colors
    cfg = SearchConfig(
        n_range=(4, 4), m_range=(6, 6), size_range=(2, 2),
        trials=4, base_seed=99, parity_filter="odd",
    )
    report = run_search(cfg)
    assert len(report.violations) == 4
    for v in report.violations:
        assert v.kind == "chromatic_gap"
        assert (v.chromatic_intersection, v.chromatic_hypergraph) == (3, 4)
        assert {frozenset(e) for e in v.edges} == {
            frozenset((a, b)) for a in range(4) for b in range(a + 1, 4)
        }
        assert v.hypergraph().m == 6


def test_violations_replay_from_their_seed():
    cfg = SearchConfig(
        n_range=(4, 4), m_range=(6, 6), size_range=(2, 2),
        trials=2, base_seed=99, parity_filter="odd",
    )
    report = run_search(cfg)
    for v in report.violations:
        _reverify(cfg, 24, 64, v)  # must not raise


def test_tampered_violation_fails_reverification():
    cfg = SearchConfig(
        n_range=(4, 4), m_range=(6, 6), size_range=(2, 2),
        trials=1, base_seed=99, parity_filter="odd",
    )
    (v,) = run_search(cfg).violations
    forged = Violation(
        trial=v.trial, seed=v.seed, kind=v.kind, n=v.n, edges=v.edges,
        chromatic_intersection=v.chromatic_intersection,
        chromatic_hypergraph=v.chromatic_hypergraph + 1,
    )
    with pytest.raises(InternalInvariantViolation):
        _reverify(cfg, 24, 64, forged)


def test_three_uniform_mode_ignores_parity_and_forces_size():
    cfg = SearchConfig(
        n_range=(3, 8), m_range=(1, 6), size_range=(2, 2), trials=40,
        base_seed=5, mode="theorem_audit_3uniform", parity_filter="odd",
    )
    report = run_search(cfg, jobs=2)
    assert report.violations == ()
    # odd chromatic intersection numbers appear in the histogram: the parity
    # filter really is ignored in this mode
    assert any(i % 2 == 1 for (i, _), c in report.histogram.items() if c)


def test_stress_modes_run_clean():
    for mode in ("two_color_stress", "four_color_stress"):
        cfg = SearchConfig(
            n_range=(2, 8), m_range=(1, 8), size_range=(2, 4), trials=60,
            base_seed=8, mode=mode,
        )
        report = run_search(cfg, jobs=2)
        assert report.violations == ()
        assert report.eligible > 0


def test_cap_skips_are_counted():
    cfg = SearchConfig(
        n_range=(30, 30), m_range=(3, 3), size_range=(2, 2), trials=5, base_seed=1,
    )
    report = run_search(cfg, cap_vertices=24)
    assert report.skip_breakdown == {"cap": 5}
    assert report.trials_run == 0


def test_unsatisfiable_draws_are_counted():
    cfg = SearchConfig(
        n_range=(2, 2), m_range=(2, 6), size_range=(2, 2), trials=10, base_seed=1,
    )
    report = run_search(cfg)
    # on two vertices only one edge exists, so m >= 2 is never satisfiable
    assert report.skip_breakdown.get("unsatisfiable", 0) > 0


@pytest.mark.parametrize(
    "bad",
    [
        dict(n_range=(5, 3)),
        dict(n_range=(1, 3)),
        dict(m_range=(0, 2)),
        dict(size_range=(1, 3)),
        dict(trials=0),
        dict(parity_filter="weird"),
        dict(min_edge_size_filter=1),
        dict(mode="nope"),
    ],
)
def test_config_validation(bad):
    cfg = SearchConfig(**{**BASE, **bad})
    with pytest.raises(ValueError):
        cfg.validate()
