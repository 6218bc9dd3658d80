import io
import json

import pytest

from main import App
from src.config.constant import ExitCode
from src.model.class_spec import ClassSpec
from src.model.gallery import complete, cycle, empty_graph, is_tournament
from src.model.sentences import phi_irr, phi_sym
from src.model.structure import Structure
from src.view.report_view import ReportView


class Run:
    """One CLI invocation with captured stdout and stderr"""

    def __init__(self, argv):
        self.stdout = io.StringIO()
        self.stderr = io.StringIO()
        app = App(view=ReportView(stdout=self.stdout, stderr=self.stderr))
        self.code = app.run(argv)

    @property
    def report(self):
        return json.loads(self.stdout.getvalue())


@pytest.fixture
def files(write_json, linear3, antichain3, c5, k3, p4):
    return {
        "linear": write_json("linear.json", linear3),
        "antichain": write_json("antichain.json", antichain3),
        "c5": write_json("c5.json", c5),
        "k3": write_json("k3.json", k3),
        "p4": write_json("p4.json", p4),
        "pair": write_json("pair.json", Structure.binary(2, [])),
        "symmetric": write_json(
            "symmetric.json", ClassSpec.create(axioms=[phi_irr(), phi_sym()])
        ),
    }


class TestCheck:
    def test_linear_order_is_maximal(self, files):
        run = Run(["check", "--in", files["linear"], "--class", "poset", "--max"])
        assert run.code == ExitCode.OK
        results = run.report["results"]
        assert results["member"] is True
        assert results["maximal"]["certified"] is True
        assert results["maximal"]["guarantee"] == "exact"

    def test_pentagon_is_maximal_triangle_free(self, files):
        run = Run(["check", "--in", files["c5"], "--class", "triangle_free", "--max"])
        assert run.code == ExitCode.OK
        assert run.report["results"]["maximal"]["guarantee"] == "closure"

    def test_triangle_is_not_a_member(self, files):
        run = Run(["check", "--in", files["k3"], "--class", "triangle_free", "--max"])
        assert run.code == ExitCode.FALSE
        assert run.report["results"]["member"] is False
        assert run.report["results"]["maximal"] is None

    def test_refuted_maximality_carries_a_witness(self, files):
        run = Run(["check", "--in", files["p4"], "--class", "triangle_free", "--max"])
        assert run.code == ExitCode.FALSE
        witness = Structure.from_dict(run.report["results"]["maximal"]["witness"])
        assert witness.tuple_count() == 8

    def test_report_records_inputs(self, files):
        run = Run(["check", "--in", files["antichain"], "--class", "poset", "--min"])
        assert run.code == ExitCode.OK
        report = run.report
        assert report["tool"] == "extremal-workbench"
        assert report["command"]["name"] == "check"
        assert set(report["inputs"]) == {"structure", "class"}
        assert report["results"]["reversibility"]["reversible"] is True

    def test_class_file(self, files, write_json, catalog):
        path = write_json("class.json", catalog("triangle_free"))
        run = Run(["check", "--in", files["c5"], "--class", path, "--max"])
        assert run.code == ExitCode.OK

    def test_identical_runs_give_identical_reports(self, files):
        argv = ["check", "--in", files["c5"], "--class", "triangle_free", "--max"]
        assert Run(argv).stdout.getvalue() == Run(argv).stdout.getvalue()

    def test_budget_exhaustion(self, files):
        argv = ["check", "--in", files["pair"], "--class", files["symmetric"], "--max"]
        assert Run(argv).code == ExitCode.FALSE
        run = Run(argv + ["--budget", "4"])
        assert run.code == ExitCode.BUDGET
        assert run.report["results"]["maximal"]["guarantee"] == "inconclusive"

    def test_report_file(self, files, tmp_path):
        out = tmp_path / "report.json"
        argv = ["check", "--in", files["c5"], "--class", "triangle_free"]
        run = Run(argv + ["--out", str(out)])
        assert run.code == ExitCode.OK
        assert run.stdout.getvalue() == ""
        assert json.loads(out.read_text(encoding="utf-8"))["results"]["member"] is True


class TestUsage:
    @pytest.mark.parametrize(
        "argv",
        [
            [],
            ["nonsense"],
            ["census", "--class", "poset"],
            ["census", "--n", "3", "--class", "poset", "--max", "--min"],
        ],
    )
    def test_argument_errors(self, argv):
        assert Run(argv).code == ExitCode.USAGE

    def test_missing_class(self, files):
        run = Run(["check", "--in", files["c5"]])
        assert run.code == ExitCode.USAGE
        assert "--class" in run.stderr.getvalue()

    def test_unknown_class(self, files):
        run = Run(["check", "--in", files["c5"], "--class", "no_such_class"])
        assert run.code == ExitCode.USAGE

    @pytest.mark.parametrize("value", ["many", "0"])
    def test_bad_environment_budget(self, monkeypatch, value):
        monkeypatch.setenv("EXTREMAL_BUDGET", value)
        run = Run(["gallery", "path", "--n", "3"])
        assert run.code == ExitCode.USAGE
        assert run.stderr.getvalue().startswith("error: EXTREMAL_BUDGET")
        assert run.stdout.getvalue() == ""
        monkeypatch.delenv("EXTREMAL_BUDGET")

    def test_missing_file(self, tmp_path):
        missing = str(tmp_path / "missing.json")
        run = Run(["check", "--in", missing, "--class", "poset"])
        assert run.code == ExitCode.USAGE

    def test_malformed_structure(self, write_json):
        path = write_json(
            "bad.json", {"signature": [2], "domain": 2, "relations": [[[0, 5]]]}
        )
        run = Run(["check", "--in", path, "--class", "poset"])
        assert run.code == ExitCode.USAGE
        assert run.stderr.getvalue().startswith("error:")

    def test_non_positive_budget(self):
        run = Run(["census", "--n", "2", "--class", "poset", "--budget", "0"])
        assert run.code == ExitCode.USAGE

    def test_version(self, capsys):
        assert Run(["--version"]).code == ExitCode.OK


class TestSaturate:
    def test_antichain_grows_into_a_linear_order(self, files, tmp_path):
        out = tmp_path / "result.json"
        report = tmp_path / "report.json"
        run = Run(
            ["saturate", "--in", files["antichain"], "--class", "poset",
             "--out", str(out), "--report", str(report)]
        )
        assert run.code == ExitCode.OK
        result = Structure.from_dict(json.loads(out.read_text(encoding="utf-8")))
        assert is_tournament(result)
        data = json.loads(report.read_text(encoding="utf-8"))
        assert data["command"]["tie_break"] == "lex"
        assert data["results"]["extreme"]["certified"] is True

    def test_seed_switches_to_random_tie_breaks(self, files):
        argv = ["saturate", "--in", files["antichain"], "--class", "poset"]
        argv += ["--seed", "4"]
        first, second = Run(argv), Run(argv)
        assert first.report["command"]["tie_break"] == "random"
        assert first.report["seed"] == 4
        assert first.stdout.getvalue() == second.stdout.getvalue()

    def test_shrinking(self, files, antichain3):
        run = Run(
            ["saturate", "--in", files["linear"], "--class", "poset", "--dir", "down"]
        )
        assert Structure.from_dict(run.report["results"]["structure"]) == antichain3

    def test_non_member_input(self, files):
        run = Run(["saturate", "--in", files["k3"], "--class", "triangle_free"])
        assert run.code == ExitCode.USAGE

    def test_inconclusive_check_exits_with_budget_code(self, files):
        argv = ["saturate", "--in", files["pair"], "--class", files["symmetric"]]
        run = Run(argv + ["--mode", "exact", "--budget", "4"])
        assert run.code == ExitCode.BUDGET
        assert run.report["results"]["extreme"]["guarantee"] == "inconclusive"

    def test_settled_check_exits_cleanly(self, files):
        argv = ["saturate", "--in", files["pair"], "--class", files["symmetric"]]
        run = Run(argv + ["--mode", "exact"])
        assert run.code == ExitCode.OK
        assert run.report["results"]["extreme"]["guarantee"] == "refuted"


class TestCensus:
    def test_counts(self):
        run = Run(["census", "--n", "3", "--class", "poset", "--up-to-iso"])
        assert run.code == ExitCode.OK
        assert run.report["results"]["count"] == 5

    def test_maximal_members(self):
        run = Run(["census", "--n", "3", "--class", "poset", "--max"])
        assert run.report["results"]["count"] == 6
        assert run.report["command"]["what"] == "max"

    @pytest.mark.parametrize("workers", ["2", "4"])
    def test_worker_count_does_not_change_the_output(self, workers):
        argv = ["census", "--n", "4", "--class", "triangle_free", "--seed", "3"]
        serial = Run(argv + ["--workers", "1"]).stdout.getvalue()
        assert Run(argv + ["--workers", workers]).stdout.getvalue() == serial

    def test_budget(self):
        run = Run(["census", "--n", "3", "--class", "poset", "--budget", "5"])
        assert run.code == ExitCode.BUDGET

    def test_empty_domain(self):
        assert Run(["census", "--n", "0", "--class", "poset"]).code == ExitCode.USAGE


class TestGallery:
    def test_cycle(self):
        run = Run(["gallery", "cycle", "--n", "5"])
        assert run.code == ExitCode.OK
        assert Structure.from_dict(run.report["results"]["structure"]) == cycle(5)

    def test_blowup(self, write_json):
        base = write_json("k2.json", complete(2))
        run = Run(["gallery", "blowup", "--in", base, "--sizes", "2,3"])
        s = Structure.from_dict(run.report["results"]["structure"])
        assert s.domain == 5 and s.tuple_count() == 12

    def test_structure_file(self, tmp_path):
        out = tmp_path / "e3.json"
        run = Run(["gallery", "empty", "--n", "3", "--out", str(out)])
        assert run.code == ExitCode.OK
        data = json.loads(out.read_text(encoding="utf-8"))
        assert Structure.from_dict(data) == empty_graph(3)

    def test_reflexivized(self):
        run = Run(["gallery", "reflexivized", "--n", "3", "--loops", "2"])
        assert run.report["command"]["loops"] == [2]
        s = Structure.from_dict(run.report["results"]["structure"])
        assert s.relation(0) == [(0, 1), (2, 2)]

    @pytest.mark.parametrize(
        "argv",
        [
            ["gallery", "cycle"],
            ["gallery", "multipartite"],
            ["gallery", "cycle", "--n", "2"],
            ["gallery", "star", "--sizes", "x"],
        ],
    )
    def test_bad_requests(self, argv):
        assert Run(argv).code == ExitCode.USAGE


class TestCondOrder:
    def test_verified_census(self, tmp_path):
        dot = tmp_path / "order.dot"
        run = Run(["condorder", "--n", "2", "--verify", "--dot", str(dot)])
        assert run.code == ExitCode.OK
        assert all(run.report["results"]["verification"].values())
        assert dot.read_text(encoding="utf-8").startswith("digraph condorder {")

    def test_too_large(self):
        assert Run(["condorder", "--n", "5"]).code == ExitCode.BUDGET


class TestFormula:
    def test_classify(self):
        run = Run(["formula", "classify", "A v0 . ~R0(v0,v0)"])
        assert run.code == ExitCode.OK
        classes = run.report["results"]["classes"]
        assert classes["N"] and classes["F"] and not classes["P"]

    def test_complement_transform(self):
        run = Run(["formula", "c", "R0(v0,v1)"])
        assert run.report["results"]["transformed"] == "~R0(v0,v1)"

    def test_eval(self, files):
        argv = ["formula", "eval", "R0(v0,v1)", "--in", files["c5"]]
        assert Run(argv + ["--valuation", '{"0": 0, "1": 1}']).code == ExitCode.OK
        assert Run(argv + ["--valuation", "[0, 2]"]).code == ExitCode.FALSE
        assert Run(argv + ["--valuation", "[0]"]).code == ExitCode.USAGE
        assert Run(argv + ["--valuation", "{"]).code == ExitCode.USAGE

    def test_syntax_error(self):
        run = Run(["formula", "parse", "A v0 ~R0(v0,v0)"])
        assert run.code == ExitCode.USAGE
        assert "position 5" in run.stderr.getvalue()


class TestLogging:
    def test_log_file(self, tmp_path):
        log = tmp_path / "run.log"
        run = Run(["gallery", "path", "--n", "3", "--log-file", str(log), "--timing"])
        assert run.code == ExitCode.OK
        assert "Running gallery" in log.read_text(encoding="utf-8")
