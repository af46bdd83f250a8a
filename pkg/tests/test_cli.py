import json

from regulab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_catalog_show(capsys):
    code, out, _ = run(capsys, "catalog", "show", "G_10")
    assert code == 0
    assert len(out.strip().splitlines()) == 9  # one line per edge


def test_catalog_list(capsys):
    code, out, _ = run(capsys, "catalog", "list")
    assert code == 0
    assert "G_10" in json.loads(out)["names"]


def test_reg_power_two(capsys):
    code, out, _ = run(capsys, "reg", "--graph", "C5", "--power", "2")
    assert code == 0
    payload = json.loads(out)
    assert payload["regularity"] == 4
    assert payload["field"] == 0


def test_reg_from_file(capsys, tmp_path):
    p = tmp_path / "path.txt"
    p.write_text("a b\nb c\nc d\n")
    code, out, _ = run(capsys, "reg", "--graph", str(p))
    assert code == 0
    assert json.loads(out)["regularity"] == 2


def test_reg_usage_errors(capsys):
    code, _, err = run(capsys, "reg", "--graph", "no_such_graph")
    assert code == 2 and "no such file" in err
    code, _, err = run(capsys, "reg", "--graph", "C5", "--power", "0")
    assert code == 2
    code, _, err = run(capsys, "reg", "--graph", "C5", "--char", "4")
    assert code == 2


def test_malformed_graph_file_reports_line(capsys, tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("a b\noops\n")
    code, _, err = run(capsys, "reg", "--graph", str(p))
    assert code == 2 and "line 2" in err


def test_betti_subcommand(capsys, tmp_path):
    p = tmp_path / "ideal.txt"
    p.write_text("x*y\ny*z\n")
    code, out, _ = run(capsys, "betti", str(p))
    assert code == 0
    payload = json.loads(out)
    assert payload["regularity"] == 2
    assert [0, 2, 2] in payload["betti"]


def test_analyze(capsys):
    code, out, _ = run(capsys, "analyze", "--graph", "catalog:G_1")
    assert code == 0
    payload = json.loads(out)
    assert payload["gap_free"] and payload["diamond_free"]
    assert payload["clique_number"] == 3
    assert payload["dominating_clique"] == ["a_0", "u_2", "u_3"]
    assert payload["classification"]["base"] == "G_1"


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "--graph", "G_4")
    assert code == 0
    assert json.loads(out)["status"] == "not (gap,diamond)-free"


def test_colon_graph(capsys):
    code, out, _ = run(capsys, "colon-graph", "--graph", "C5", "--edges", "u_1 u_2")
    assert code == 0
    payload = json.loads(out)
    assert payload["new_edges"] == [["u_0", "u_3"]]
    assert payload["squares"] == []
    code, _, err = run(capsys, "colon-graph", "--graph", "C5", "--edges", "u_0 u_2")
    assert code == 2 and "not an edge" in err


def test_verify_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "colon-values")
    assert code == 0
    payload = json.loads(out)
    assert payload["pass"] and payload["summary"]["failed"] == 0


def test_verify_unknown_suite(capsys):
    code, _, err = run(capsys, "verify", "--suite", "nope")
    assert code == 2 and "unknown suite" in err


def test_pretty_output(capsys):
    code, out, _ = run(capsys, "reg", "--graph", "K_3", "--pretty")
    assert code == 0
    assert "regularity" in out and not out.lstrip().startswith("{")


def test_jobs_env_fallback(capsys, monkeypatch):
    monkeypatch.setenv("REGULAB_JOBS", "2")
    from regulab.suites import resolve_jobs

    assert resolve_jobs(None) == 2
    assert resolve_jobs(3) == 3
    monkeypatch.delenv("REGULAB_JOBS")
    assert resolve_jobs(None) == 1
