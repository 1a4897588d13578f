import json

import cqg


def test_suite_registry():
    assert cqg.suite_names() == [
        "ybe",
        "rtt",
        "hopf",
        "duality",
        "rll",
        "calculus",
        "all",
    ]


def test_braid_suite_passes_and_follows_schema():
    rep = cqg.run_suite("ybe", cqg.SuiteConfig())
    assert rep.gate_ok()
    doc = json.loads(cqg.emit_report(rep, "json"))
    assert doc["suite"] == "ybe"
    assert isinstance(doc["config_hash"], str)
    assert len(doc["checks"]) == 2
    for check in doc["checks"]:
        assert set(check) == {"id", "status", "anchor", "residual_terms", "ms"}
        assert check["status"] == "pass"
        assert check["residual_terms"] == 0


def test_reported_entries_never_gate():
    rep = cqg.run_suite("rll", cqg.SuiteConfig())
    assert rep.gate_ok()
    reported = [c for c in rep.checks if c.status == "reported"]
    assert len(reported) == 6
    assert all(c.residual_terms > 0 for c in reported)


def test_config_parsing_and_hash(tmp_path):
    path = tmp_path / "cfg.txt"
    path.write_text("palette = lambda, mu\nstep_budget = 200000\n")
    cfg = cqg.parse_config(str(path))
    assert cfg.step_budget == 200000
    assert cfg.palette == ["lambda", "mu"]
    assert cqg.config_hash(cfg) != cqg.config_hash(cqg.SuiteConfig())


def test_numeric_specializations_and_tables():
    cfg = cqg.SuiteConfig()
    cfg.add_q_specialization("4")
    cfg.add_colour_specialization({"lambda": "1", "mu": "-2"})
    rep = cqg.run_suite("calculus", cfg)
    assert rep.gate_ok()
    ids = [c.id for c in rep.checks]
    assert "coefficient-specialization-0" in ids
    assert "colour-specialization-0" in ids

    tables = cqg.render_tables(cfg)
    assert "w1 . a = " in tables
    relations = cqg.render_relations(cfg)
    assert "# 42 defining relations" in relations


def test_invalid_inputs_raise():
    import pytest

    with pytest.raises(ValueError):
        cqg.run_suite("nope", cqg.SuiteConfig())
    with pytest.raises(ValueError):
        cqg.parse_config("does_not_exist.txt")
