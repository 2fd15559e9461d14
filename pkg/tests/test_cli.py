import json

from lieslice.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run_cli(capsys, *argv)
    return code, json.loads(out)


class TestCommands:
    def test_classify_fixture(self, capsys):
        code, doc = run_json(
            capsys, "classify", "--matrix", "[[1,1,0],[0,1,0],[0,0,2]]"
        )
        assert code == 0
        assert doc["label"]["pairs"] == [
            {"size": 2, "partition": [2]},
            {"size": 1, "partition": [1]},
        ]

    def test_richardson_fixture(self, capsys):
        code, doc = run_json(capsys, "richardson", "--blocks", "1,1,1")
        assert code == 0 and doc["partition"] == [3]

    def test_induce(self, capsys):
        code, doc = run_json(
            capsys, "induce", "--blocks", "2,1", "--orbits", "[[1,1],[1]]"
        )
        assert code == 0 and doc["partition"] == [2, 1]

    def test_jordan(self, capsys):
        code, doc = run_json(
            capsys, "jordan", "--matrix", "[[1,1,0],[0,1,0],[0,0,2]]"
        )
        assert code == 0
        assert doc["semisimple"] == [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "2"]]
        assert doc["nilpotent"][0][1] == "1"

    def test_jm(self, capsys):
        code, doc = run_json(capsys, "jm", "--matrix", "[[0,1],[0,0]]")
        assert code == 0
        assert doc["h"] == [["1", "0"], ["0", "-1"]]
        assert doc["f"] == [["0", "0"], ["1", "0"]]

    def test_slodowy(self, capsys):
        code, doc = run_json(capsys, "slodowy", "--matrix", "[[0,1],[0,0]]")
        assert code == 0
        assert doc["dim"] == 2 and doc["weights"] == [-2, 0]

    def test_enumerate(self, capsys):
        code, doc = run_json(capsys, "enumerate", "--n", "2")
        assert code == 0 and doc["count"] == 3
        assert sorted(doc["dimensions"]) == [1, 3, 4]

    def test_class_dim(self, capsys):
        code, doc = run_json(
            capsys, "class-dim", "--label", '[{"size":2,"partition":[2]},{"size":1,"partition":[1]}]'
        )
        assert code == 0 and doc["dimension"] == 8

    def test_membership(self, capsys):
        code, doc = run_json(
            capsys,
            "membership",
            "--x", "[[1,0,0],[0,1,0],[0,0,2]]",
            "--y", "[[1,0,0],[0,2,0],[0,0,3]]",
        )
        assert code == 0 and doc["member"] is True and doc["rank_path"] is True

    def test_natural_slice(self, capsys):
        code, doc = run_json(
            capsys, "natural-slice", "--matrix", "[[0,1,0],[0,0,1],[0,0,0]]"
        )
        assert code == 0
        assert len(doc["entries"]) == 3

    def test_comp_slice(self, capsys):
        code, doc = run_json(
            capsys, "comp-slice", "--matrix", "[[1,1,0],[0,1,0],[0,0,2]]"
        )
        assert code == 0
        assert doc["x_is_member"] is True
        assert doc["nilpotent_part_is_member"] is False

    def test_residual(self, capsys):
        code, doc = run_json(
            capsys, "residual", "--algebra", "sl", "--matrix", "[[0,1],[0,0]]"
        )
        assert code == 0
        assert doc["C_order"] == 2 and doc["rank_T"] == 0

    def test_verify(self, capsys):
        code, doc = run_json(capsys, "verify", "weyl", "--seed", "7")
        assert code == 0 and doc["pass"] is True

    def test_atlas_json(self, capsys):
        code, doc = run_json(capsys, "atlas", "--n", "2")
        assert code == 0 and len(doc["document"]["nodes"]) == 3

    def test_atlas_dot(self, capsys):
        code, out = run_cli(capsys, "atlas", "--n", "2", "--format", "dot")
        assert code == 0 and out.startswith("digraph")


class TestExitCodes:
    def test_domain_error_is_1(self, capsys):
        code, doc = run_json(capsys, "classify", "--matrix", "[[0,1],[-1,0]]")
        assert code == 1
        assert doc["error"]["kind"] == "irrational_spectrum"
        assert "t^2" in doc["error"]["detail"]

    def test_malformed_json_is_2(self, capsys):
        code, doc = run_json(capsys, "classify", "--matrix", "this is not json")
        assert code == 2
        assert doc["error"]["kind"] == "malformed_input"

    def test_validation_error_is_2(self, capsys):
        code, doc = run_json(capsys, "induce", "--blocks", "2,1", "--orbits", '"nope"')
        assert code == 2

    def test_ragged_matrix_is_domain_or_malformed(self, capsys):
        code, doc = run_json(capsys, "classify", "--matrix", "[[1],[2,3]]")
        assert code in (1, 2)

    def test_stdin_input(self, capsys, monkeypatch):
        import io

        monkeypatch.setattr("sys.stdin", io.StringIO("[[1,0],[0,2]]"))
        code, doc = run_json(capsys, "classify")
        assert code == 0
        assert doc["label"]["pairs"] == [
            {"size": 1, "partition": [1]},
            {"size": 1, "partition": [1]},
        ]
