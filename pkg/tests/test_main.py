"""End-to-end tests for the free-links command line."""

import json
from pathlib import Path

import pytest

from free_links.invertibility import EXAMPLE_LINK
from free_links.main import EXIT_ERROR, EXIT_INCONCLUSIVE, EXIT_OK, build_parser, main

FIXTURES = Path(__file__).parent / "fixtures"


def run(capsys, *argv):
    """Run the CLI and return (exit code, parsed stdout report, stderr)."""
    code = main(list(argv))
    captured = capsys.readouterr()
    report = json.loads(captured.out) if captured.out.strip() else None
    return code, report, captured.err


class TestReports:
    """Test the JSON report of each subcommand."""

    def test_canon(self, capsys):
        """Test the canonical form of a relabeled knot."""
        code, report, _ = run(capsys, "canon", "2 1 2 1")
        assert code == EXIT_OK
        assert report == {"command": "canon", "input": "1 2 1 2", "result": "1 2 1 2"}

    def test_reduce(self, capsys):
        """Test R2 reduction."""
        code, report, _ = run(capsys, "reduce", "1 2 3 3 2 1")
        assert code == EXIT_OK
        assert report["result"] == {"irreducible": False, "reduced": "1 1", "crossings_removed": 2}

    def test_parity_default_kind(self, capsys):
        """Test that links get component parity by default."""
        code, report, _ = run(capsys, "parity", "1 2 1 3 4 ; 2 3 4")
        assert code == EXIT_OK
        assert report["result"] == {
            "kind": "component",
            "parities": {"1": "even", "2": "odd", "3": "odd", "4": "odd"},
        }

    def test_moves(self, capsys):
        """Test move enumeration restricted to one kind."""
        code, report, _ = run(capsys, "moves", "1 1 2 2", "--kinds", "R1_remove")
        assert code == EXIT_OK
        assert [m["labels"] for m in report["result"]] == [[1], [2]]

    def test_unknown_move_kind(self, capsys):
        """Test an invalid move kind."""
        code, report, err = run(capsys, "moves", "1 1", "--kinds", "R4")
        assert code == EXIT_ERROR
        assert report is None
        assert "R4" in err

    def test_bfs(self, capsys):
        """Test a one-move path."""
        code, report, _ = run(capsys, "bfs", "1 2 1 2", "o", "--max-crossings", "2", "--max-depth", "1")
        assert code == EXIT_OK
        assert report["result"]["found"]
        assert report["result"]["length"] == 1
        step = report["result"]["path"][0]
        assert step["kind"] == "R2_remove"
        assert step["resulting_diagram"] == "o"

    def test_bfs_not_found(self, capsys):
        """Test that a missing path is reported, not an error."""
        code, report, _ = run(capsys, "bfs", "1 2 1 2", "o", "--max-depth", "0")
        assert code == EXIT_OK
        assert report["result"]["found"] is False

    def test_bracket_square(self, capsys):
        """Test the square bracket of a curl."""
        code, report, _ = run(capsys, "bracket", "1 1", "--kind", "square")
        assert code == EXIT_OK
        assert report["result"]["members"] == ["o"]

    def test_bracket_curly2(self, capsys):
        """Test the oriented two-component bracket."""
        code, report, _ = run(capsys, "bracket", "+1 2 1 3 4 ; 2 3 4", "--kind", "curly2")
        assert code == EXIT_OK
        assert report["result"]["members"] == ["@ordered +1 ; 1"]

    def test_delta(self, capsys):
        """Test a vanishing splitting map."""
        code, report, _ = run(capsys, "delta", "1 2 1 2")
        assert code == EXIT_OK
        assert report["result"] == {"terms": []}

    def test_beta(self, capsys):
        """Test the distance sequence of the example link."""
        code, report, _ = run(capsys, "beta", EXAMPLE_LINK)
        assert code == EXIT_OK
        assert report["result"]["sequence"] == [3, 3, 3, 4, 6, 7, 6, 2, 6, 9, 6]

    def test_diagram_file(self, capsys):
        """Test reading the diagram from a file."""
        code, report, _ = run(capsys, "beta", "--file", str(FIXTURES / "link_L.txt"))
        assert code == EXIT_OK
        assert report["input"] == EXAMPLE_LINK

    def test_examples(self, capsys, mocker):
        """Test the built-in examples with the search stubbed out."""
        search = mocker.patch("free_links.main.search_long_example", return_value=None)
        code, report, err = run(capsys, "examples", "--max-crossings", "3")
        assert code == EXIT_OK
        search.assert_called_once_with(3)
        assert report["input"] is None
        assert report["result"]["link"] == EXAMPLE_LINK
        assert report["result"]["long_witness"] is None
        assert "Built-in examples" in err

    def test_examples_search_bound(self, capsys, monkeypatch, mocker):
        """Test that the search bound is capped by the configuration."""
        search = mocker.patch("free_links.main.search_long_example")
        monkeypatch.setenv("FREE_LINKS_SEARCH_MAX_CROSSINGS", "4")
        code, report, err = run(capsys, "examples", "--max-crossings", "6")
        assert code == EXIT_ERROR
        assert report is None
        assert "FREE_LINKS_SEARCH_MAX_CROSSINGS=4" in err
        search.assert_not_called()


class TestExitCodes:
    """Test exit codes and diagnostics."""

    def test_certify_link(self, capsys):
        """Test a successful certificate."""
        code, report, _ = run(capsys, "certify", "--theorem", "link", EXAMPLE_LINK)
        assert code == EXIT_OK
        assert report["result"]["verdict"] == "NonInvertible"

    def test_certify_inconclusive(self, capsys):
        """Test that an inconclusive certificate exits with 2."""
        code, report, _ = run(capsys, "certify", "--theorem", "long", "@long 1 2 1 2")
        assert code == EXIT_INCONCLUSIVE
        assert report["result"]["verdict"] == "Inconclusive"

    def test_certify_wrong_shape(self, capsys):
        """Test a theorem applied to the wrong kind of diagram."""
        code, report, err = run(capsys, "certify", "--theorem", "long", "1 2 1 2")
        assert code == EXIT_ERROR
        assert report is None
        assert "long knot" in err

    def test_malformed_input(self, capsys):
        """Test a parse error."""
        code, report, err = run(capsys, "canon", "1 2 1")
        assert code == EXIT_ERROR
        assert report is None
        assert "label 2 occurs 1 times" in err

    def test_non_ascii_digit(self, capsys):
        """Test that a superscript digit is reported as a bad label."""
        code, report, err = run(capsys, "canon", "1 ² 1 ²")
        assert code == EXIT_ERROR
        assert report is None
        assert "Invalid crossing label" in err

    def test_missing_diagram(self, capsys):
        """Test a subcommand without a diagram."""
        code, _, err = run(capsys, "canon")
        assert code == EXIT_ERROR
        assert "No diagram given" in err

    def test_missing_file(self, capsys, temp_dir):
        """Test a diagram file that does not exist."""
        code, _, err = run(capsys, "canon", "--file", str(temp_dir / "nope.txt"))
        assert code == EXIT_ERROR
        assert "not found" in err

    def test_configuration_error(self, capsys, mocker):
        """Test that a bad configuration stops the run."""
        mocker.patch("free_links.main.load_config", side_effect=ValueError("Invalid configuration"))
        code, report, err = run(capsys, "canon", "1 1")
        assert code == EXIT_ERROR
        assert report is None
        assert "Configuration error" in err

    def test_unexpected_error(self, capsys, mocker):
        """Test that unexpected exceptions exit with 1."""
        mocker.patch("free_links.main.canonical_code", side_effect=RuntimeError("boom"))
        code, _, err = run(capsys, "canon", "1 1")
        assert code == EXIT_ERROR
        assert "Unexpected error: boom" in err

    def test_bracket_guard(self, capsys, monkeypatch):
        """Test that the expansion limit comes from the configuration."""
        monkeypatch.setenv("FREE_LINKS_MAX_SMOOTHING_CROSSINGS", "0")
        code, _, err = run(capsys, "bracket", "1 2 1 ; 2")
        assert code == EXIT_ERROR
        assert "Refusing to expand" in err


class TestOutputDiscipline:
    """Test that stdout stays deterministic and stderr can be silenced."""

    @pytest.mark.parametrize("position", ["before", "after"])
    def test_json_only(self, capsys, position):
        """Test that --json-only silences diagnostics wherever it is given."""
        argv = ["canon", "2 1 2 1"]
        argv = ["--json-only", *argv] if position == "before" else [*argv, "--json-only"]
        code, report, err = run(capsys, *argv)
        assert code == EXIT_OK
        assert report["result"] == "1 2 1 2"
        assert err == ""

    def test_timing_on_stderr(self, capsys):
        """Test that timing goes to stderr only."""
        _, _, err = run(capsys, "canon", "1 1")
        assert "finished in" in err

    def test_identical_runs(self, capsys):
        """Test that two runs print the same bytes."""
        main(["certify", "--theorem", "link", EXAMPLE_LINK])
        first = capsys.readouterr().out
        main(["certify", "--theorem", "link", EXAMPLE_LINK])
        assert capsys.readouterr().out == first

    def test_parser_requires_command(self):
        """Test that a subcommand is required."""
        with pytest.raises(SystemExit):
            build_parser().parse_args([])
