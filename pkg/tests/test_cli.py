"""
End-to-end tests for the command-line front end.
"""

import json

import pytest

from src.curve_birationality import __version__
from src.curve_birationality.cli import build_parser, config_from_args, main
from src.curve_birationality.reports import CLASSIFY_KEYS


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    """Keep configuration variables from the outer environment out of the tests."""
    for name in ("CURVE_FIELD", "CURVE_ORDER", "CURVE_JOBS", "CURVE_MAX_DEGREE", "DATABASE_URL"):
        monkeypatch.delenv(name, raising=False)


@pytest.fixture
def database_url(tmp_path):
    return f"sqlite:///{tmp_path / 'runs.db'}"


@pytest.fixture
def batch_file(tmp_path):
    path = tmp_path / "batch.txt"
    path.write_text(
        "# worked examples\n"
        "t^3; t^2 + t\n"
        "t; t^2; t^3\n"
        "5; 7\n"
        "t^10 + t^4; t^8 + 2*t^2; t^6 - t^4 + 1\n",
        encoding="utf-8",
    )
    return path


class TestClassify:
    """Test cases for the classify subcommand."""

    @pytest.mark.parametrize(
        ("polys", "label"),
        [
            (["t^3", "t^2 + t"], "BIRATIONAL, NOT ISOMORPHISM"),
            (["t", "t^2", "t^3"], "ISOMORPHISM"),
            (["2*t^8 + t^4 + 3*t + 1", "t^4 - 2*t^2 + 2"], "BIRATIONAL, NOT ISOMORPHISM"),
            (["t^10 + t^4", "t^8 + 2*t^2", "t^6 - t^4 + 1"], "NOT BIRATIONAL"),
        ],
    )
    def test_labels(self, capsys, polys, label):
        assert main(["classify", *polys]) == 0
        assert capsys.readouterr().out.splitlines()[0] == label

    def test_degenerate_image(self, capsys):
        assert main(["classify", "5", "7"]) == 3
        captured = capsys.readouterr()
        assert captured.err.strip().endswith("error: degenerate image (point)")
        assert captured.out == ""

    def test_show_basis(self, capsys):
        assert main(["classify", "--show-basis", "t^3", "t^2 + t"]) == 0
        out = capsys.readouterr().out
        assert "basis (monic):" in out
        assert "  s^2 + s + 1" in out

    def test_json(self, capsys):
        assert main(["classify", "--json", "t^3", "t^2 + t"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert tuple(data) == CLASSIFY_KEYS
        assert data["classification"] == "BirationalNotIsomorphism"
        assert data["staircase"] == 2
        assert data["am_check"] == "violated"
        assert data["version"] == __version__

    def test_json_infinite_staircase(self, capsys):
        assert main(["classify", "--json", "t^2"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["staircase"] == "infinite"
        assert data["basis_monic"] == ["t + s"]

    def test_prime_field(self, capsys):
        assert main(["classify", "--json", "--field", "F7", "t^2 - 2", "t^3"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["field"] == "F7"
        assert data["inputs"] == ["t^2 + 5", "t^3"]

    def test_inseparable(self, capsys):
        assert main(["classify", "--json", "--field", "F2", "t^2", "t^4"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["classification"] == "NotBirational"
        assert data["reasons"] == ["inseparable", "am_inapplicable"]


class TestUsageErrors:
    """Test cases for exit code 2."""

    def test_parse_error(self, capsys):
        assert main(["classify", "t^", "t"]) == 2
        assert "offset 2" in capsys.readouterr().err

    @pytest.mark.parametrize("field", ["F91", "F1", "Z", "F4294967311"])
    def test_bad_field(self, capsys, field):
        assert main(["classify", "--field", field, "t"]) == 2
        assert capsys.readouterr().err.startswith("error:")

    def test_polys_and_file(self, capsys, batch_file):
        assert main(["classify", "--file", str(batch_file), "t"]) == 2
        assert "not both" in capsys.readouterr().err

    def test_no_input(self, capsys):
        assert main(["classify"]) == 2

    def test_unreadable_file(self, capsys, tmp_path):
        assert main(["classify", "--file", str(tmp_path / "missing.txt")]) == 2
        assert "cannot read" in capsys.readouterr().err

    def test_unknown_order(self):
        with pytest.raises(SystemExit) as exc_info:
            main(["classify", "--order", "grevlex", "t"])
        assert exc_info.value.code == 2


class TestOtherSubcommands:
    """Test cases for gb and divdiff."""

    def test_gb(self, capsys):
        assert main(["gb", "t^3", "t^2 + t"]) == 0
        out = capsys.readouterr().out
        assert "reduced basis (2 elements):" in out
        assert "staircase: 2" in out

    def test_gb_json(self, capsys):
        assert main(["gb", "--json", "2*t^8 + t^4 + 3*t + 1", "t^4 - 2*t^2 + 2"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["basis_primitive"][0] == "t^2 + s^2 - 2"
        assert len(data["basis_monic"]) == 3
        assert data["staircase"] == 10

    def test_gb_constant(self, capsys):
        assert main(["gb", "4"]) == 3

    def test_divdiff(self, capsys):
        assert main(["divdiff", "t^3"]) == 0
        assert capsys.readouterr().out.splitlines() == [
            "f1 = t^3",
            "g1 = t^2 + t*s + s^2",
            "g1(s,s) = 3*s^2  [ok]",
        ]


class TestBatchFile:
    """Test cases for --file."""

    def test_text_output(self, capsys, batch_file):
        assert main(["classify", "--file", str(batch_file)]) == 3
        captured = capsys.readouterr()
        assert "# line 2\nBIRATIONAL, NOT ISOMORPHISM" in captured.out
        assert "# line 3\nISOMORPHISM" in captured.out
        assert "# line 5\nNOT BIRATIONAL" in captured.out
        assert "error: line 4: degenerate image (point)" in captured.err

    @pytest.mark.parametrize("jobs", ["1", "2"])
    def test_json_lines(self, capsys, batch_file, jobs):
        assert main(["classify", "--json", "--jobs", jobs, "--file", str(batch_file)]) == 3
        records = [json.loads(line) for line in capsys.readouterr().out.splitlines()]
        assert [r.get("classification") for r in records] == [
            "BirationalNotIsomorphism",
            "Isomorphism",
            None,
            "NotBirational",
        ]
        assert records[2]["exit_code"] == 3

    def test_exit_code_is_largest(self, capsys, tmp_path):
        path = tmp_path / "mixed.txt"
        path.write_text("t +\nt\n", encoding="utf-8")
        assert main(["classify", "--file", str(path)]) == 2
        path.write_text("t +\n5; 7\nt\n", encoding="utf-8")
        assert main(["classify", "--file", str(path)]) == 3


class TestConfiguration:
    """Test cases for flag > environment > default precedence."""

    def parse(self, *argv):
        return config_from_args(build_parser().parse_args(argv))

    def test_defaults(self):
        cfg = self.parse("classify", "t")
        assert cfg.field == "Q"
        assert cfg.order == "degrevlex"
        assert cfg.jobs == 1
        assert cfg.max_degree == 4096
        assert cfg.database_url is None

    def test_environment(self, monkeypatch):
        monkeypatch.setenv("CURVE_FIELD", "F101")
        monkeypatch.setenv("CURVE_ORDER", "lex")
        monkeypatch.setenv("CURVE_JOBS", "4")
        cfg = self.parse("classify", "t")
        assert (cfg.field, cfg.order, cfg.jobs) == ("F101", "lex", 4)

    def test_flags_override_environment(self, monkeypatch):
        monkeypatch.setenv("CURVE_FIELD", "F101")
        monkeypatch.setenv("CURVE_ORDER", "lex")
        cfg = self.parse("classify", "--field", "Q", "--order", "degrevlex", "t")
        assert (cfg.field, cfg.order) == ("Q", "degrevlex")

    def test_environment_reaches_output(self, capsys, monkeypatch):
        monkeypatch.setenv("CURVE_FIELD", "F7")
        assert main(["classify", "--json", "t^3", "t^2 + t"]) == 0
        assert json.loads(capsys.readouterr().out)["field"] == "F7"


class TestHistory:
    """Test cases for recording runs and the history subcommand."""

    def test_requires_database(self, capsys):
        assert main(["history"]) == 2
        assert "--record" in capsys.readouterr().err

    def test_empty(self, capsys, database_url):
        assert main(["history", "--record", database_url]) == 0
        assert capsys.readouterr().out.strip() == "No runs recorded"

    def test_record_and_list(self, capsys, database_url, batch_file):
        main(["classify", "--record", database_url, "t^3", "t^2 + t"])
        main(["classify", "--record", database_url, "--file", str(batch_file)])
        capsys.readouterr()

        assert main(["history", "--record", database_url]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert len(lines) == 4
        assert lines[0].startswith("#4 NotBirational [Q, degrevlex]")
        assert lines[-1] == "#1 BirationalNotIsomorphism [Q, degrevlex] t^3; t^2 + t staircase=2"

    def test_filter_and_json(self, capsys, database_url, batch_file):
        main(["classify", "--record", database_url, "--file", str(batch_file)])
        capsys.readouterr()

        assert main(["history", "--json", "--classification", "Isomorphism", "--record", database_url]) == 0
        records = [json.loads(line) for line in capsys.readouterr().out.splitlines()]
        assert [r["inputs"] for r in records] == ["t; t^2; t^3"]
        assert records[0]["staircase"] == 0

    def test_invalid_classification(self, capsys, database_url):
        assert main(["history", "--classification", "Maybe", "--record", database_url]) == 2
        assert "Invalid classification" in capsys.readouterr().err

    def test_stats_and_csv(self, capsys, database_url, batch_file, monkeypatch):
        monkeypatch.setenv("DATABASE_URL", database_url)
        main(["classify", "--file", str(batch_file)])
        capsys.readouterr()

        assert main(["history", "--stats"]) == 0
        assert "Total: 3 runs" in capsys.readouterr().out

        assert main(["history", "--csv"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0].startswith("Field,Order,Inputs")
        assert len(lines) == 4
