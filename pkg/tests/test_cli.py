import io
import json
import subprocess
import sys

import jsonschema
import pytest

from lpaspec.cli import run
from lpaspec.graph import parse_graph
from lpaspec.report import report_schema

from named import SOURCES


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, text in SOURCES.items():
        p = tmp_path / f"{name.lower()}.g"
        p.write_text(text)
        paths[name] = str(p)
    return paths


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def call_json(*argv):
    code, out, _ = call(*argv, "--format", "json")
    return code, json.loads(out)


class TestCheck:
    def test_primitive_toeplitz(self, files):
        assert call("check", "primitive", files["TOEPLITZ"]) == (0, "", "")

    def test_primitive_loop(self, files):
        code, out, _ = call("check", "primitive", files["LOOP"])
        assert code == 1
        assert "exitless cycle (e)" in out

    def test_prime_two_loops(self, files):
        code, payload = call_json("check", "prime", files["TWO_LOOPS"])
        assert code == 1
        assert payload["holds"] is False
        assert payload["witness"]["kind"] == "mt3_pair"

    def test_json_on_success(self, files):
        code, payload = call_json("check", "simple", files["ROSE2"])
        assert code == 0 and payload == {"property": "simple", "holds": True, "witness": None}


class TestSpectrum:
    def test_loop_gf2_degree3(self, files):
        code, payload = call_json("spectrum", files["LOOP"], "--field", "gf:2", "--max-degree", "3")
        assert code == 0
        kinds = [d["type"] for d in payload["spectrum"]]
        assert kinds == ["graded"] + ["nongraded"] * 4
        polys = [d["polynomial"] for d in payload["spectrum"][1:]]
        assert polys == ["x+1", "x^2+x+1", "x^3+x+1", "x^3+x^2+1"]

    def test_rationals_symbolic(self, files):
        code, payload = call_json("spectrum", files["LOOP"])
        assert code == 0
        (ng,) = [d for d in payload["spectrum"] if d["type"] == "nongraded"]
        assert ng["symbolic"] is True
        assert "Spec(Q[x,x^-1])* (infinite)" in ng["polynomial"]

    def test_rationals_with_poly(self, files):
        code, payload = call_json("spectrum", files["LOOP"], "--poly", "x^2-2", "--poly", "x-1")
        assert code == 0
        assert [d["polynomial"] for d in payload["spectrum"][1:]] == ["x-1", "x^2-2"]

    def test_undecided_poly(self, files):
        code, _, err = call("spectrum", files["LOOP"], "--poly", "x^4+1")
        assert code == 3 and "error" in err
        code, _, _ = call("spectrum", files["LOOP"], "--poly", "x^4+1", "--assume-irreducible")
        assert code == 0

    def test_text(self, files):
        code, out, _ = call("spectrum", files["TOEPLITZ"], "--field", "gf:2")
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 3
        assert lines[2].startswith("nongraded") and "n=1" in lines[2]


class TestReport:
    @pytest.mark.parametrize("name", ["LOOP", "TOEPLITZ", "LINE3", "ROSE2", "TWO_LOOPS", "COMET2", "EMPTY"])
    @pytest.mark.parametrize("field", ["q", "gf:2"])
    def test_schema(self, files, name, field):
        code, payload = call_json("analyze", files[name], "--field", field, "--max-degree", "2")
        assert code == 0
        jsonschema.validate(payload, report_schema())

    def test_analyze_values(self, files):
        _, r = call_json("analyze", files["TOEPLITZ"], "--field", "gf:2")
        assert (r["prime"], r["primitive"], r["simple"]) == (True, True, False)
        assert r["recognized"]["tag"] == "ToeplitzPattern"
        assert r["witnesses"]["simple"] == {"kind": "proper_hsat", "H": ["w"]}

    def test_analyze_text(self, files):
        code, out, _ = call("analyze", files["LOOP"], "--field", "gf:2")
        assert code == 0
        assert "algebra: K[x,x^-1]" in out
        assert "primitive: False  [exitless cycle (e)]" in out


class TestSubcommands:
    def test_tails(self, files):
        code, out, _ = call("tails", files["TOEPLITZ"])
        assert out.splitlines() == ["{v,w} gamma", "{v} tau cycle (e)"]

    def test_closure(self, files):
        code, payload = call_json("closure", files["LINE3"], "--set", "u3")
        assert payload["closure"] == ["u1", "u2", "u3"]
        assert payload["stages"] == [["u3"], ["u2", "u3"], ["u1", "u2", "u3"]]
        code, out, _ = call("closure", files["LINE3"], "--set", "u3")
        assert out.splitlines()[0] == "closure: {u1,u2,u3}"

    def test_hsat(self, files):
        code, out, _ = call("hsat", files["TOEPLITZ"])
        assert out.splitlines() == ["{}", "{w}", "{v,w}"]

    def test_quotient_text_parses_back(self, files):
        code, out, _ = call("quotient", files["TOEPLITZ"], "--set", "w")
        assert code == 0
        assert out.startswith("# derived: quotient")
        assert parse_graph(out) == parse_graph(SOURCES["LOOP"])

    def test_restrict(self, files):
        code, payload = call_json("restrict", files["TWO_LOOPS"], "--set", "v")
        assert payload["graph"] == {"vertices": ["v"], "edges": [{"name": "e", "source": "v", "range": "v"}]}

    def test_extend(self, files):
        code, out, _ = call("extend", files["LOOP"])
        assert len(parse_graph(out).edges) == 2

    def test_hedge(self, files):
        code, payload = call_json("hedge", files["TOEPLITZ"], "--set", "w", "--bound", "3")
        assert code == 0
        assert payload["finite"] is False and payload["truncated"] is True
        assert payload["graph"]["vertices"] == ["w", "f", "ef", "eef"]
        code, out, _ = call("hedge", files["TOEPLITZ"], "--set", "w", "--bound", "3")
        assert parse_graph(out).vertices == ("w", "f", "ef", "eef")

    def test_dot(self, files):
        code, out, _ = call("dot", files["TOEPLITZ"])
        assert code == 0 and out.startswith("digraph")


class TestExitCodes:
    def test_parse_error(self, tmp_path):
        bad = tmp_path / "bad.g"
        bad.write_text("vertex v\nedge e v w\n")
        code, _, err = call("tails", str(bad))
        assert code == 2
        assert "line 2" in err and "undeclared endpoint w" in err

    def test_missing_file(self, tmp_path):
        assert call("tails", str(tmp_path / "nope.g"))[0] == 2

    @pytest.mark.parametrize(
        "argv",
        [[], ["frobnicate"], ["check", "nice", "x"], ["closure", "x"], ["hsat", "x", "--format", "xml"]],
    )
    def test_usage(self, argv):
        assert call(*argv)[0] == 2

    def test_bad_poly(self, files):
        assert call("spectrum", files["LOOP"], "--poly", "x^^2")[0] == 2

    def test_unknown_vertex(self, files):
        code, _, err = call("closure", files["LOOP"], "--set", "nope")
        assert code == 3 and "nope" in err

    def test_non_hereditary(self, files):
        assert call("quotient", files["TOEPLITZ"], "--set", "v")[0] == 3

    def test_threshold(self, tmp_path):
        p = tmp_path / "line.g"
        names = [f"n{i}" for i in range(22)]
        text = "".join(f"vertex {v}\n" for v in names)
        text += "".join(f"edge a{i} {a} {b}\n" for i, (a, b) in enumerate(zip(names, names[1:])))
        p.write_text(text)
        assert call("hsat", str(p), "--no-lattice")[0] == 3
        code, payload = call_json("hsat", str(p))
        assert code == 0 and len(payload["hsat"]) == 2

    def test_bad_field(self, files):
        assert call("spectrum", files["LOOP"], "--field", "gf:4")[0] == 3


def test_module_entry_point(files):
    proc = subprocess.run(
        [sys.executable, "-m", "lpaspec", "check", "primitive", files["LOOP"]],
        capture_output=True, text=True,
    )
    assert proc.returncode == 1
    assert "exitless cycle (e)" in proc.stdout
