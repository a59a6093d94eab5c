import json

import pytest

from hardlef import cli
from hardlef.catalog import CatalogEntry, builtin_entries

KT4 = """\
name kt4
dim 4
d e3 = e1^e2
omega = e4
eta = e3
"""


@pytest.fixture
def kt4_file(tmp_path):
    path = tmp_path / "kt4.model"
    path.write_text(KT4)
    return str(path)


def test_validate_ok(kt4_file, capsys):
    assert cli.main(["validate", kt4_file]) == 0
    out = capsys.readouterr().out
    assert "lee_field_U: E4" in out
    assert "anti_lee_field_V: E3" in out
    assert "Omega: e1^e2 + e3^e4" in out
    assert "invariant" in out  # the model caveat is always printed


def test_validate_contact(tmp_path, capsys):
    path = tmp_path / "h3.model"
    path.write_text("dim 3\nd e3 = e1^e2\neta = e3\n")
    assert cli.main(["validate", str(path)]) == 0
    assert "reeb_field: E3" in capsys.readouterr().out


def test_parse_error_exit_and_position(tmp_path, capsys):
    path = tmp_path / "bad.model"
    path.write_text("dim 3\nd e3 = e1 ^^ e2\n")
    assert cli.main(["validate", str(path)]) == 1
    err = capsys.readouterr().err
    assert "line 2" in err and "column 12" in err


def test_validation_failure_exit(tmp_path, capsys):
    path = tmp_path / "rank.model"
    path.write_text("dim 6\nd e3 = e1^e2\nomega = e4\neta = e3\n")
    assert cli.main(["validate", str(path)]) == 2
    assert "RankDefect" in capsys.readouterr().err


def test_usage_error_exit(capsys):
    assert cli.main(["lefschetz", "--bogus"]) == 1


def test_missing_file_exit(capsys):
    assert cli.main(["validate", "/nonexistent/x.model"]) == 1


def test_degree_error_exit(kt4_file, capsys):
    assert cli.main(["lefschetz", kt4_file, "--k", "99"]) == 1


def test_cohomology_tables(kt4_file, capsys):
    assert cli.main(["cohomology", kt4_file, "--basic", "U"]) == 0
    out = capsys.readouterr().out
    assert "1, 3, 4, 3, 1" in out
    assert "1, 2, 2, 1, 0" in out
    assert "b_equals_c_sum: yes" in out


def test_lefschetz_all_modes(kt4_file, capsys):
    assert cli.main(["lefschetz", kt4_file, "--mode", "all"]) == 0
    out = capsys.readouterr().out
    assert "hard Lefschetz (de Rham)" in out
    assert "hard Lefschetz (Lee-basic)" in out
    assert "contact hard Lefschetz" in out
    assert "Betti parity" in out
    assert "psi" in out
    assert "no obstruction found" in out


def test_json_reports_are_byte_identical(kt4_file, tmp_path, capsys):
    out1 = tmp_path / "a.json"
    out2 = tmp_path / "b.json"
    assert cli.main(["lefschetz", kt4_file, "--json", str(out1)]) == 0
    assert cli.main(["lefschetz", kt4_file, "--json", str(out2)]) == 0
    capsys.readouterr()
    assert out1.read_bytes() == out2.read_bytes()


def test_suite_green(capsys):
    assert cli.main(["suite", "--entry", "kt4", "--entry", "h3",
                     "--entry", "abelian4"]) == 0
    out = capsys.readouterr().out
    assert "all expected verdicts reproduced" in out


def test_suite_json_matches_schema(tmp_path, capsys):
    import jsonschema
    from importlib import resources
    out = tmp_path / "suite.json"
    assert cli.main(["suite", "--json", str(out)]) == 0
    capsys.readouterr()
    doc = json.loads(out.read_text())
    schema = json.loads(resources.files("hardlef").joinpath(
        "schema/report.schema.json").read_text())
    jsonschema.validate(doc, schema)


def test_suite_double_run_byte_identical(tmp_path, capsys):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    assert cli.main(["suite", "--json", str(a)]) == 0
    assert cli.main(["suite", "--json", str(b)]) == 0
    capsys.readouterr()
    assert a.read_bytes() == b.read_bytes()


def test_suite_mismatch_exits_3(monkeypatch, capsys):
    entries = builtin_entries()
    target = entries[0]
    broken = CatalogEntry(
        target.name, target.model, target.omega, target.eta,
        target.nilpotent, target.unimodular,
        {"betti": {"value": [9, 9, 9], "source": "definition"}},
        fingerprint=target.fingerprint)
    monkeypatch.setattr("hardlef.cli._catalog.builtin_entries",
                        lambda: (broken,))
    assert cli.main(["suite"]) == 3
    out = capsys.readouterr().out
    assert "mismatch" in out and "FAIL" in out


def test_suite_unknown_entry(capsys):
    assert cli.main(["suite", "--entry", "nope"]) == 1


def test_suite_threads_env(monkeypatch, tmp_path, capsys):
    serial = tmp_path / "serial.json"
    threaded = tmp_path / "threaded.json"
    assert cli.main(["suite", "--json", str(serial)]) == 0
    monkeypatch.setenv("HARDLEF_THREADS", "4")
    assert cli.main(["suite", "--json", str(threaded)]) == 0
    capsys.readouterr()
    assert serial.read_bytes() == threaded.read_bytes()


def test_export_roundtrip(tmp_path, capsys):
    from hardlef import modelfile
    out = tmp_path / "kt4.model"
    assert cli.main(["export", "kt4", "--out", str(out)]) == 0
    capsys.readouterr()
    doc = modelfile.load_path(out)
    kt4 = next(e for e in builtin_entries() if e.name == "kt4")
    assert doc.model == kt4.model
    assert doc.omega == kt4.omega and doc.eta == kt4.eta


def test_export_json_format(capsys):
    assert cli.main(["export", "h3", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["dim"] == 3
    assert data["differentials"]["e3"] == "e1^e2"


def test_export_unknown_entry(capsys):
    assert cli.main(["export", "nope"]) == 1
