"""Tests for the pwpath command line."""

import json

import pytest
from typer.testing import CliRunner

from pwpath import __version__
from pwpath.cli import app
from pwpath.network.documents import parse_network
from tests.conftest import EX0, EX1, EX1_PATH, LOOP

runner = CliRunner()


@pytest.fixture
def ex1_file(write_doc):
    return write_doc(EX1)


class TestSolve:
    def test_adaptations(self, ex1_file):
        result = runner.invoke(app, ["solve", str(ex1_file), "--objective", "adaptations"])
        assert result.exit_code == 0
        doc = json.loads(result.stdout)
        assert doc["trace"] == "a b b̄ a"
        assert doc["word"] == "a b̄₂ a"
        assert doc["adaptations"] == 2
        assert doc["path"] == EX1_PATH

    def test_hops(self, ex1_file):
        result = runner.invoke(app, ["solve", str(ex1_file), "-o", "hops"])
        assert result.exit_code == 0
        assert json.loads(result.stdout)["hops"] == 4

    def test_emit_trace(self, ex1_file):
        result = runner.invoke(app, ["solve", str(ex1_file), "--emit", "trace"])
        assert result.stdout.strip() == "a b b̄ a"

    def test_emit_word(self, ex1_file):
        result = runner.invoke(app, ["solve", str(ex1_file), "-o", "adaptations", "-e", "word"])
        assert result.stdout.strip() == "a b̄₂ a"

    def test_no_path(self, write_doc):
        doc = json.loads(json.dumps(EX0))
        doc["nodes"][1]["functions"] = []
        result = runner.invoke(app, ["solve", str(write_doc(doc))])
        assert result.exit_code == 1
        assert "No feasible path" in result.output

    def test_missing_file(self, tmp_path):
        result = runner.invoke(app, ["solve", str(tmp_path / "nope.json")])
        assert result.exit_code == 2

    def test_malformed_document(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json", encoding="utf-8")
        result = runner.invoke(app, ["solve", str(path)])
        assert result.exit_code == 2
        assert "Error" in result.output

    def test_not_utf8(self, tmp_path):
        path = tmp_path / "latin1.json"
        path.write_bytes(b'{"protocols": ["\xff"]}')
        result = runner.invoke(app, ["solve", str(path)])
        assert result.exit_code == 2
        assert "UTF-8" in result.output

    def test_invalid_function(self, write_doc):
        doc = json.loads(json.dumps(EX0))
        doc["nodes"][0]["functions"] = [{"kind": "encap", "a": "a", "b": "a"}]
        result = runner.invoke(app, ["solve", str(write_doc(doc))])
        assert result.exit_code == 2


class TestVerify:
    def test_feasible(self, ex1_file, write_doc):
        path_file = write_doc({"path": EX1_PATH}, "path.json")
        result = runner.invoke(app, ["verify", str(ex1_file), str(path_file)])
        assert result.exit_code == 0
        assert result.stdout.strip() == "feasible"

    def test_mismatched_tunnel(self, ex1_file, write_doc):
        path = ["S", "a", "U", "b", "V", "b", "W", "a", "D"]
        result = runner.invoke(app, ["verify", str(ex1_file), str(write_doc({"path": path}, "path.json"))])
        assert result.exit_code == 1
        assert result.stdout.startswith("infeasible: invalid parenthesization")

    def test_oracle(self, ex1_file, write_doc):
        path_file = write_doc({"path": EX1_PATH}, "path.json")
        result = runner.invoke(app, ["verify", str(ex1_file), str(path_file), "--oracle", "-o", "adaptations"])
        assert result.exit_code == 0
        lines = result.stdout.splitlines()
        assert lines[0] == "feasible; optimal"
        assert lines[1] == "oracle adaptations: 2 (path adaptations: 2)"

    def test_result_document(self, ex1_file, tmp_path):
        solved = runner.invoke(app, ["solve", str(ex1_file)])
        result_file = tmp_path / "result.json"
        result_file.write_text(solved.stdout, encoding="utf-8")
        result = runner.invoke(app, ["verify", str(ex1_file), str(result_file), "--oracle"])
        assert result.stdout.splitlines()[0] == "feasible; optimal"

    def test_solve_then_verify(self, write_doc, tmp_path):
        topology = write_doc(LOOP)
        solved = runner.invoke(app, ["solve", str(topology), "-o", "adaptations"])
        result_file = tmp_path / "result.json"
        result_file.write_text(solved.stdout, encoding="utf-8")
        result = runner.invoke(app, ["verify", str(topology), str(result_file), "--oracle", "-o", "adaptations"])
        assert result.exit_code == 0
        assert result.stdout.splitlines()[0] == "feasible; optimal"

    def test_not_utf8(self, ex1_file, tmp_path):
        bad = tmp_path / "latin1.json"
        bad.write_bytes(b'{"path": ["S", "\xe9", "D"]}')
        assert runner.invoke(app, ["verify", str(ex1_file), str(bad)]).exit_code == 2
        assert runner.invoke(app, ["verify", str(bad), str(ex1_file)]).exit_code == 2

    def test_unknown_symbol(self, ex1_file, write_doc):
        path_file = write_doc({"path": ["S", "z", "D"]}, "path.json")
        result = runner.invoke(app, ["verify", str(ex1_file), str(path_file)])
        assert result.exit_code == 2


class TestExport:
    def test_transformed_pda(self, ex1_file):
        result = runner.invoke(app, ["export", str(ex1_file), "--what", "tpda"])
        assert result.exit_code == 0
        assert "(V_b, b̄₂, a, ∅, D_a)" in result.stdout.splitlines()

    def test_grammar(self, ex1_file):
        result = runner.invoke(app, ["export", str(ex1_file), "-w", "cfg"])
        assert "[V_b a D_a] -> b̄₂" in result.stdout.splitlines()

    def test_pda(self, write_doc):
        result = runner.invoke(app, ["export", str(write_doc(EX0)), "-w", "pda"])
        assert result.stdout.splitlines()[0] == "# states (3)"

    def test_network_dot(self, ex1_file):
        result = runner.invoke(app, ["export", str(ex1_file), "-f", "dot"])
        assert '"W" -> "D";' in result.stdout

    def test_grammar_has_no_dot(self, ex1_file):
        result = runner.invoke(app, ["export", str(ex1_file), "-w", "cfg", "-f", "dot"])
        assert result.exit_code == 2

    def test_unknown_artifact(self, ex1_file):
        result = runner.invoke(app, ["export", str(ex1_file), "-w", "graph"])
        assert result.exit_code == 2


class TestGen:
    def test_deterministic(self):
        first = runner.invoke(app, ["gen", "--seed", "7"])
        again = runner.invoke(app, ["gen", "--seed", "7"])
        assert first.exit_code == 0
        assert first.stdout == again.stdout
        net = parse_network(first.stdout)
        assert (net.source, net.destination) == ("S", "D")

    def test_sizes(self):
        result = runner.invoke(app, ["gen", "-n", "5", "-p", "3", "-s", "1"])
        net = parse_network(result.stdout)
        assert len(net.nodes) == 5
        assert net.alphabet == ("a", "b", "c")

    def test_invalid_settings(self):
        result = runner.invoke(app, ["gen", "--edge-probability", "1.5"])
        assert result.exit_code == 2


class TestMisc:
    def test_version(self):
        result = runner.invoke(app, ["--version"])
        assert result.exit_code == 0
        assert __version__ in result.stdout

    def test_bench(self):
        result = runner.invoke(app, ["bench", "--min-nodes", "3", "--max-nodes", "4", "-i", "1"])
        assert result.exit_code == 0
        assert "Pipeline sweep" in result.stdout

    def test_bench_invalid_range(self):
        result = runner.invoke(app, ["bench", "--min-nodes", "5", "--max-nodes", "4"])
        assert result.exit_code == 2

    def test_verbose_logs(self, ex1_file):
        result = runner.invoke(app, ["-V", "solve", str(ex1_file), "-e", "trace"])
        assert result.exit_code == 0
        assert "a b b̄ a" in result.stdout
