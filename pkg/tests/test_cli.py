"""CLI subcommands through the in-process client, including exit codes."""

import json

import pytest
from click.testing import CliRunner

from spherezone.cli import main

runner = CliRunner()

CONCURRENT = {"ring": "rational",
              "lines": [["1", "0", "0"], ["0", "1", "0"], ["1", "-1", "0"]]}


def invoke(*args):
    return runner.invoke(main, list(args))


class TestBuild:
    def test_random_table(self):
        result = invoke("build", "--n", "5", "--seed", "0")
        assert result.exit_code == 0
        assert "projective  V=10 E=20 F=11" in result.output

    def test_json_format(self):
        result = invoke("build", "--n", "4", "--format", "json")
        assert result.exit_code == 0
        data = json.loads(result.output)
        assert data["projective"] == {"V": 6, "E": 12, "F": 7}

    def test_doc_input(self, tmp_path):
        path = tmp_path / "tri.json"
        path.write_text(json.dumps({
            "ring": "rational",
            "lines": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]],
        }))
        result = invoke("build", "--doc", str(path))
        assert result.exit_code == 0
        assert "V=3 E=6 F=4" in result.output

    def test_out_file(self, tmp_path):
        out = tmp_path / "build.json"
        result = invoke("build", "--n", "4", "--format", "json",
                        "--out", str(out))
        assert result.exit_code == 0
        assert json.loads(out.read_text())["n"] == 4

    def test_missing_source_is_usage_error(self):
        result = invoke("build")
        assert result.exit_code != 0

    def test_degenerate_doc_exits_2(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(CONCURRENT))
        result = invoke("build", "--doc", str(path))
        assert result.exit_code == 2


class TestZones:
    def test_table(self):
        result = invoke("zones", "--n", "5", "--seed", "1")
        assert result.exit_code == 0
        assert "C(L) = 3" in result.output
        assert "C(l)=  14" in result.output


class TestVertexZones:
    def test_table(self):
        result = invoke("vertex-zones", "--n", "4")
        assert result.exit_code == 0
        assert "C(L) = 2" in result.output
        assert "C(v)=2" in result.output


class TestDischarge:
    def test_table(self):
        result = invoke("discharge", "--n", "6", "--seed", "2")
        assert result.exit_code == 0
        assert "w1=-6 w2=-6 w3=-6 (conserved: True)" in result.output


class TestLemma:
    def test_table(self):
        result = invoke("lemma")
        assert result.exit_code == 0
        for K in ("{3,3,4,8}", "{3,3,4,9}", "{3,3,4,10}", "{3,3,4,11}",
                  "{3,3,5,7}"):
            assert K in result.output

    def test_json(self):
        result = invoke("lemma", "--cap", "20", "--format", "json")
        data = json.loads(result.output)
        assert len(data["multisets"]) == 5


class TestVerify:
    @pytest.mark.parametrize("n", [4, 6, 8])
    def test_clean_run(self, n):
        result = invoke("verify", "--n", str(n), "--seed", "3")
        assert result.exit_code == 0
        assert "eq1: ok" in result.output
        assert "eq4: ok" in result.output

    def test_json(self):
        result = invoke("verify", "--n", "5", "--format", "json")
        assert json.loads(result.output)["ok"]


class TestSearch:
    def test_run(self):
        result = invoke("search", "--n", "5", "--trials", "3")
        assert result.exit_code == 0
        assert "max C(L) = 3" in result.output


class TestStats:
    def test_run(self):
        result = invoke("stats-q1", "--n", "4", "--trials", "3")
        assert result.exit_code == 0
        assert "mean ratio = 3.0000" in result.output


class TestExample:
    def test_icosahedral_table(self):
        result = invoke("example", "icosahedral")
        assert result.exit_code == 0
        assert "vertices: 45, C(L) = 5" in result.output

    def test_unknown_name(self):
        result = invoke("example", "cube")
        assert result.exit_code != 0


class TestRender:
    def test_stdout(self):
        result = invoke("render", "--n", "4", "--seed", "1")
        assert result.exit_code == 0
        assert result.output.startswith("<svg ")

    def test_out_file(self, tmp_path):
        out = tmp_path / "a.svg"
        result = invoke("render", "--n", "4", "--out", str(out),
                        "--tint", "--labels", "--size", "320")
        assert result.exit_code == 0
        text = out.read_text()
        assert 'width="320"' in text
        assert "<text " in text

    def test_example_render(self, tmp_path):
        out = tmp_path / "ico.svg"
        result = invoke("render", "--example", "icosahedral",
                        "--out", str(out))
        assert result.exit_code == 0
        assert out.read_text().count('<g class="line"') == 10
