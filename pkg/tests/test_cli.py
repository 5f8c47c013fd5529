import json

import pytest

from cli.commands import ExitCode, cmd_build, cmd_invariants, cmd_knot, cmd_pi1, cmd_report, main
from core.complex.delta_complex import new_complex
from core.complex.serialization import complex_to_json
from core.utils.helpers import read_json, write_json


@pytest.fixture
def built(tmp_path):
    def _build(space):
        path = tmp_path / f"{space}.json"
        assert cmd_build(space, path).exit_code is ExitCode.OK
        return path
    return _build


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_build_writes_document(built):
    doc = read_json(built("sub3-circle"))
    assert doc["dims"] == [1, 2, 2, 1]
    assert read_json(built("circle"))["dims"] == [1, 1]
    assert read_json(built("trefoil-complement"))["kind"] == "presentation"


def test_build_unknown_space(capsys):
    code, out = run(capsys, "build", "bogus", "--json")
    assert code == 2
    assert "error" in json.loads(out)


def test_build_to_stdout(capsys):
    code, out = run(capsys, "build", "sub2-circle")
    assert code == 0
    assert json.loads(out)["dims"] == [1, 2, 1]


def test_invariants_of_mobius_band(capsys, built):
    code, out = run(capsys, "invariants", str(built("sub2-circle")), "--json")
    result = json.loads(out)
    assert code == 0
    assert result["signature"] == ["Z", "Z", "0"]
    assert result["boundary"]["cells"] == [1, 1]
    assert result["boundary"]["edges"] == ["δ"]


def test_invariants_of_point(tmp_path):
    path = write_json(tmp_path / "point.json", complex_to_json(new_complex([1], {})))
    outcome = cmd_invariants(path, as_json=True)
    assert outcome.exit_code is ExitCode.OK
    assert json.loads(outcome.report)["euler"] == 1


def test_invariants_of_corrupted_file(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text('{"format": 1, "dims": [1, 1], "faces": {"1": [[0, 3]]}}', encoding="utf-8")
    assert run(capsys, "invariants", str(path))[0] == 1
    path.write_text("not json", encoding="utf-8")
    assert run(capsys, "invariants", str(path))[0] == 1
    assert run(capsys, "invariants", str(tmp_path / "missing.json"))[0] == 1
    path.write_bytes(b'{"format": 1, "dims": [1], "labels": {"0": ["\xff\xfe"]}}')
    assert run(capsys, "invariants", str(path))[0] == 1
    assert run(capsys, "pi1", str(path))[0] == 1


def test_pi1_of_sub3_circle(capsys, built):
    code, out = run(capsys, "pi1", str(built("sub3-circle")), "--simplify", "--json")
    result = json.loads(out)
    assert code == 0
    assert result["text"] == "<α, β | α, α^2 β^-1>"
    assert result["verdict"] == "trivial-with-trace"


def test_pi1_of_knot_complement(capsys, built):
    code, out = run(capsys, "pi1", str(built("trefoil-complement")), "--simplify", "--json")
    result = json.loads(out)
    assert code == 0
    assert result["torus"] == [2, 3]
    assert result["verdict"] == "not-trivial-abelian-witness"


def test_pi1_of_circle(built):
    result = json.loads(cmd_pi1(built("circle"), as_json=True).report)
    assert result["presentation"]["generators"] == ["γ"]
    assert result["presentation"]["relators"] == []
    assert result["abelianization"] == {"rank": 1, "torsion": []}


def test_pi1_of_disconnected_complex(tmp_path):
    path = write_json(tmp_path / "two-points.json", complex_to_json(new_complex([2], {})))
    assert cmd_pi1(path).exit_code is ExitCode.CHECK_FAILED


def test_pi1_rejects_numeric_labels(tmp_path):
    path = write_json(tmp_path / "loop.json",
                      {"format": 1, "dims": [1, 1], "faces": {"1": [[0, 0]]}, "labels": {"1": [5]}})
    assert cmd_pi1(path).exit_code is ExitCode.CHECK_FAILED


def test_knot_command(capsys):
    code, out = run(capsys, "knot", "--variant", "equation-locus", "--samples", "1000", "--json")
    report = json.loads(out)
    assert code == 0
    assert report["winding"] == [2, 3]
    assert report["max_residual"] <= 1e-9
    assert cmd_knot("clifford", 8).exit_code is ExitCode.OK


@pytest.mark.parametrize("argv", [
    ["knot", "--samples", "4"],
    ["knot", "--variant", "hopf"],
    ["knot", "--samples", "many"],
    ["--log-level", "bogus", "report"],
    [],
])
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_report_passes(capsys):
    code, out = run(capsys, "report")
    lines = out.strip().splitlines()
    assert code == 0
    assert len(lines) == 12
    assert all(line.startswith("PASS") for line in lines)


def test_report_json_matches_text(capsys):
    _, text = run(capsys, "report")
    code, out = run(capsys, "report", "--json")
    claims = json.loads(out)
    assert code == 0
    assert [c["status"] for c in claims] == [line.split()[0] for line in text.strip().splitlines()]
    assert {"claim", "status", "evidence"} <= set(claims[0])


def test_report_detects_misglued_sphere(misglued_builders):
    outcome = cmd_report(as_json=True, builders=misglued_builders)
    assert outcome.exit_code is ExitCode.CHECK_FAILED
    assert any(c["status"] == "FAIL" for c in json.loads(outcome.report))
