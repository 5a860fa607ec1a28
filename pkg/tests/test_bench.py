import json

import pytest

from quadmis import PRESETS, BenchInstance, BenchSuite, bench_suite, gen_gnm, parse_suite, resolve_config, write_summary


def test_preset_tables():
    assert set(PRESETS) == {"er", "satlib", "gnm"}
    er = PRESETS["er"]
    assert (er["gamma"], er["alpha"], er["iterations"]) == (775.0, 0.6, 150)
    assert (er["batch_size"], er["batch_count"], er["init_scheme"]) == (256, 28, "random")
    sat = PRESETS["satlib"]
    assert (sat["gamma"], sat["alpha"], sat["iterations"]) == (775.0, 0.9, 50)
    assert (sat["batch_size"], sat["batch_count"], sat["init_scheme"]) == (128, 40, "degree")
    gnm = PRESETS["gnm"]
    assert (gnm["gamma"], gnm["alpha"], gnm["iterations"]) == ("strict-n", 0.5, 350)
    assert (gnm["batch_size"], gnm["batch_count"], gnm["init_scheme"]) == (1024, 10, "degree")


def test_resolve_config_defaults(fig1):
    cfg = resolve_config(fig1)
    assert cfg.gamma == 5.0  # strict-n resolves against the graph
    assert cfg.alpha == 0.5
    assert cfg.batch_size == 64
    assert cfg.init_scheme == "random"


def test_resolve_config_preset_and_overrides(fig1):
    cfg = resolve_config(fig1, preset="gnm", batch_size=16, seed=9)
    assert cfg.gamma == 5.0
    assert cfg.alpha == 0.5
    assert cfg.iterations == 350
    assert cfg.batch_size == 16
    assert cfg.batch_count == 10
    assert cfg.init_scheme == "degree"
    assert cfg.seed == 9


def test_resolve_config_none_overrides_ignored(fig1):
    cfg = resolve_config(fig1, preset="er", alpha=None, seed=None)
    assert cfg.alpha == 0.6
    assert cfg.gamma == 775.0


def test_resolve_config_rejects_junk(fig1):
    with pytest.raises(ValueError, match="unknown preset"):
        resolve_config(fig1, preset="huge")
    with pytest.raises(ValueError, match="unknown config fields"):
        resolve_config(fig1, stride=3)


def test_parse_suite():
    text = json.dumps(
        {
            "config": {"preset": "gnm", "batch_size": 32},
            "time_limit": 5,
            "instances": [
                {"er": [30, 0.2], "seed": 1},
                {"gnm": [40]},
                {"gnm": [40, 100], "seed": 2},
                {"file": "x.edges"},
            ],
        }
    )
    suite = parse_suite(text)
    assert suite.preset == "gnm"
    assert suite.options == {"batch_size": 32}
    assert suite.time_limit == 5
    kinds = [inst.kind for inst in suite.instances]
    assert kinds == ["er", "gnm", "gnm", "file"]
    assert suite.instances[0].p == 0.2
    assert suite.instances[1].m is None
    assert suite.instances[2].m == 100
    assert suite.instances[3].path == "x.edges"


def test_parse_suite_rejects_unknown_instance():
    with pytest.raises(ValueError):
        parse_suite(json.dumps({"instances": [{"torus": [3]}]}))


def test_bench_suite_runs_and_records_errors(tmp_path):
    suite = BenchSuite(
        instances=(
            BenchInstance("gnm", n=30, seed=0),
            BenchInstance("file", path=str(tmp_path / "missing.edges")),
        ),
        preset=None,
        options={"batch_size": 16, "iterations": 80},
    )
    summary = bench_suite(suite, workers=1)
    assert len(summary.rows) == 2
    good, bad = summary.rows
    assert good.error == ""
    assert good.n == 30 and good.m == (30 * 29 + 3) // 4
    assert good.best_size >= 1
    assert bad.error.startswith("FileNotFoundError")
    assert summary.mean_best == good.best_size
    assert len(summary.reports) == 1


def test_bench_summary_formats():
    suite = BenchSuite(
        instances=(BenchInstance("gnm", n=20, seed=1),),
        options={"batch_size": 8, "iterations": 50},
    )
    summary = bench_suite(suite, workers=1)
    doc = json.loads(write_summary(summary, "json"))
    assert doc["rows"][0]["n"] == 20
    assert doc["mean_best"] == summary.mean_best
    csv = write_summary(summary, "csv").splitlines()
    assert csv[0].startswith("source,n,m,")
    assert csv[-1].startswith("summary,")
    with pytest.raises(ValueError):
        write_summary(summary, "yaml")


def test_mean_best_none_when_everything_fails():
    suite = BenchSuite(instances=(BenchInstance("file", path="/definitely/not/here"),))
    summary = bench_suite(suite, workers=1)
    assert summary.mean_best is None
    assert summary.rows[0].error != ""


def test_instance_labels():
    assert BenchInstance("er", n=5, p=0.5, seed=2).label() == "er(n=5,p=0.5,seed=2)"
    assert BenchInstance("gnm", n=50, seed=0).label() == "gnm(n=50,m=613,seed=0)"
    assert BenchInstance("file", path="a/b.col").label() == "a/b.col"
