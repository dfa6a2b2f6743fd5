"""Suite-runner behavior: config validation, determinism, statuses.

Oracles fixed before implementation:
  - default slope list (1, 2, -3): slope 1 is equianharmonic, so exactly
    the slope-1 rows of flex-arrangement (4), w0 (7), and transversality
    (1) fail; every other row passes or is informational.
  - the aggregate w0.nodes.count passes because slopes 2 and -3 audit to
    36 nodes each, while slope 1 is refused and reported per-slope.
  - slope -1 is excluded from the classical generic statement but its
    crossings do not collapse, so a w0 run at -1 audits 36 nodes.
"""

import json

import pytest

from hesselab.algebra.eisenstein import ZETA, eis, rat
from hesselab.checks import (
    DEFAULT_LAMBDA_TEXTS,
    PASS,
    SUITE_DESCRIPTIONS,
    SUITE_NAMES,
    ConfigError,
    attach_meta,
    build_config,
    parse_parameter,
    report_document,
    run_suite,
)
from hesselab.hesse import PencilParam


def statuses(report) -> dict:
    return {r.id: r.status for r in report.results}


class TestConfig:
    def test_defaults(self):
        config = build_config("orbits")
        assert config.suite == "orbits"
        assert config.lambdas == tuple(
            parse_parameter(t) for t in DEFAULT_LAMBDA_TEXTS
        )
        assert config.shear_seed == 0
        assert config.jobs == 1

    def test_dedupe_preserves_order(self):
        config = build_config("orbits", ("2", "1", "4/2", "1"))
        assert config.lambdas == (
            PencilParam.of(2),
            PencilParam.of(1),
        )

    def test_unknown_suite_rejected(self):
        with pytest.raises(ConfigError, match="unknown suite"):
            build_config("spectral")

    def test_singular_slope_rejected(self):
        for text in ("inf", "-1/2"):
            with pytest.raises(ConfigError, match="triangle"):
                build_config("orbits", (text,))

    def test_equianharmonic_slope_accepted(self):
        config = build_config("orbits", ("w",))
        assert config.lambdas[0].is_equianharmonic()

    def test_unparsable_slope_rejected(self):
        with pytest.raises(ConfigError, match="cannot read slope"):
            build_config("orbits", ("y1 + 1",))

    def test_jobs_from_environment(self, monkeypatch):
        monkeypatch.setenv("HESSE_LAB_JOBS", "3")
        assert build_config("orbits").jobs == 3
        monkeypatch.setenv("HESSE_LAB_JOBS", "zero")
        with pytest.raises(ConfigError, match="HESSE_LAB_JOBS"):
            build_config("orbits")

    def test_explicit_jobs_beat_environment(self, monkeypatch):
        monkeypatch.setenv("HESSE_LAB_JOBS", "3")
        assert build_config("orbits", jobs=2).jobs == 2

    def test_nonpositive_jobs_rejected(self):
        with pytest.raises(ConfigError, match="jobs"):
            build_config("orbits", jobs=0)

    def test_output_format_validated(self):
        assert build_config("orbits", out_format="json").out_format == "json"
        with pytest.raises(ConfigError, match="output format"):
            build_config("orbits", out_format="yaml")

    def test_parse_parameter_forms(self):
        assert parse_parameter("inf").is_infinite()
        assert parse_parameter("Infinity").is_infinite()
        assert parse_parameter("-5/3") == PencilParam.of(eis(rat(-5, 3)))
        assert parse_parameter("w").value() == ZETA


class TestRunner:
    def test_results_sorted_and_unique(self):
        report = run_suite(build_config("orbits"))
        ids = [r.id for r in report.results]
        assert ids == sorted(ids)
        assert len(set(ids)) == len(ids)

    def test_summary_matches_statuses(self):
        report = run_suite(build_config("hesse-identities"))
        tally = {"pass": 0, "fail": 0, "info": 0}
        for r in report.results:
            tally[r.status.lower()] += 1
        assert report.summary == tally

    def test_jobs_do_not_change_results(self):
        solo = run_suite(build_config("flex-arrangement", ("5",), jobs=1))
        multi = run_suite(build_config("flex-arrangement", ("5",), jobs=4))
        assert solo.results == multi.results

    def test_exit_code_tracks_failures(self):
        clean = run_suite(build_config("orbits"))
        assert clean.exit_code() == 0
        dirty = run_suite(build_config("flex-arrangement", ("1",)))
        assert dirty.exit_code() == 1


class TestSuiteBehaviors:
    def test_orbits_all_pass(self):
        report = run_suite(build_config("orbits"))
        assert report.summary == {"pass": 7, "fail": 0, "info": 0}
        assert statuses(report)["orbit.flexpoints.size"] == PASS

    def test_hesse_identities(self):
        report = run_suite(build_config("hesse-identities"))
        got = statuses(report)
        assert got["hessian.identity"] == PASS
        assert got["polar.determinant.identity"] == PASS
        assert got["polar.slope-cubic.roots"] == PASS
        assert got["polar.slope-cubic.documented-variant"] == "INFO"
        assert report.summary["fail"] == 0

    def test_flex_defaults_fail_only_at_slope_one(self):
        report = run_suite(build_config("flex-arrangement"))
        failed = {r.id for r in report.results if r.status == "FAIL"}
        assert failed == {
            "flex.crossings.count[lam=1]",
            "flex.crossings.simple[lam=1]",
            "flex.crossings.lines[lam=1]",
            "flex.crossings.orbits[lam=1]",
        }
        got = statuses(report)
        assert got["flex.crossings.iff[lam=1]"] == PASS
        assert got["flex.fermat.concurrency"] == PASS

    def test_flex_failure_rows_carry_witnesses(self):
        report = run_suite(build_config("flex-arrangement", ("1",)))
        row = next(r for r in report.results if r.id == "flex.crossings.count[lam=1]")
        assert row.computed == "30"
        assert len(row.witnesses) == 3

    def test_w0_defaults(self):
        report = run_suite(build_config("w0"))
        failed = {r.id for r in report.results if r.status == "FAIL"}
        assert failed == {
            f"{rid}[lam=1]"
            for rid in (
                "w0.assembly.degree",
                "w0.reduced.degree",
                "w0.nodes.count.by-lambda",
                "w0.nodes.type",
                "w0.contacts",
                "w0.nodes.off-member",
                "w0.lines.histogram",
            )
        }
        aggregate = next(r for r in report.results if r.id == "w0.nodes.count")
        assert aggregate.status == PASS
        assert any("refused" in w for w in aggregate.witnesses)

    def test_w0_excluded_but_generic_slope_passes(self):
        report = run_suite(build_config("w0", ("-1",)))
        assert report.summary["fail"] == 0
        got = statuses(report)
        assert got["w0.nodes.count.by-lambda[lam=-1]"] == PASS

    def test_transversality_defaults(self):
        report = run_suite(build_config("transversality"))
        failed = {r.id for r in report.results if r.status == "FAIL"}
        assert failed == {"probe.crossings.count[lam=1]"}
        got = statuses(report)
        assert got["probe.member.transversal[lam=1]"] == PASS
        assert got["probe.member.bezout[lam=1]"] == PASS

    def test_duality_single_slope(self):
        report = run_suite(build_config("duality", ("2",)))
        assert report.summary["fail"] == 0
        got = statuses(report)
        assert got["dual.member.cusps[lam=2]"] == PASS
        assert got["homology.matched.conjugate-pair"] == PASS
        assert got["homology.matched.documented-variant"] == "INFO"

    def test_enumerative_and_local_model(self):
        enum = run_suite(build_config("enumerative"))
        assert enum.summary["fail"] == 0
        local = run_suite(build_config("local-model"))
        assert local.summary == {"pass": 5, "fail": 0, "info": 1}


class TestReportDocument:
    def test_document_shape(self):
        report = run_suite(build_config("enumerative"))
        doc = report_document(report)
        assert doc["schema"] == 1
        assert sorted(doc) == ["config", "results", "schema", "summary"]
        assert doc["config"]["lambdas"] == ["1", "2", "-3"]
        assert all(
            sorted(r) == ["anchor", "computed", "expected", "id", "status", "witnesses"]
            for r in doc["results"]
        )

    def test_document_deterministic(self):
        first = run_suite(build_config("hesse-identities", jobs=2))
        second = run_suite(build_config("hesse-identities", jobs=2))
        assert json.dumps(report_document(first)) == json.dumps(
            report_document(second)
        )

    def test_meta_is_separate(self):
        report = run_suite(build_config("enumerative"))
        doc = attach_meta(report_document(report), report)
        assert sorted(doc["meta"]) == ["generated_at", "timings"]
        without = {k: v for k, v in doc.items() if k != "meta"}
        assert without == report_document(report)

    def test_required_ids_present(self):
        enum = report_document(run_suite(build_config("enumerative")))
        orbits = report_document(run_suite(build_config("orbits")))
        w0 = report_document(run_suite(build_config("w0", ("2",))))
        assert any(r["id"] == "plucker.18-36-72" for r in enum["results"])
        assert any(r["id"] == "orbit.flexpoints.size" for r in orbits["results"])
        assert any(r["id"] == "w0.nodes.count" for r in w0["results"])

    def test_suite_names_described(self):
        assert set(SUITE_DESCRIPTIONS) == set(SUITE_NAMES) | {"all"}
