"""
Tests for the fmre command-line interface
"""

import contextlib
import io
import json

import pytest

from main import __version__, create_parser, main
from model_factory import fm_source

CYCLE = fm_source(
    "feature A; relations decomposition and(B); end feature;",
    "feature B; relations decomposition and(A); end feature;",
)


@pytest.fixture(autouse=True)
def isolated(tmp_path, monkeypatch):
    """Run every command in an empty directory with no user configuration"""
    monkeypatch.chdir(tmp_path)
    monkeypatch.setenv("XDG_CONFIG_HOME", str(tmp_path / "xdg"))
    monkeypatch.delenv("FMRE_COLOR", raising=False)
    monkeypatch.delenv("FMRE_LOG_LEVEL", raising=False)


@pytest.fixture
def corpus_arg(corpus_path):
    return str(corpus_path)


class TestParser:
    """Test argument parsing"""

    def test_version(self, capsys):
        """Test --version"""
        assert main(["--version"]) == 0
        assert capsys.readouterr().out.strip() == f"fmre {__version__}"

    def test_command_required(self, capsys):
        """Test that a bare invocation is a usage error"""
        assert main([]) == 2
        assert "required" in capsys.readouterr().err

    def test_slice_defaults(self):
        """Test the slice option defaults"""
        args = create_parser().parse_args(["slice", "m.fm", "--feature", "A"])
        assert args.direction == "forward"
        assert args.relation == "and"
        assert args.alt == []
        assert args.out_dir == "slices"

    def test_repeatable_alternatives(self):
        """Test several --alt flags"""
        args = create_parser().parse_args(
            ["slice", "m.fm", "--feature", "A", "--relation", "or", "--alt", "B", "--alt", "C"]
        )
        assert args.alt == ["B", "C"]


class TestValidateCommand:
    """Test fmre validate"""

    def test_corpus_is_clean(self, corpus_arg, capsys):
        """Test the List model"""
        assert main(["validate", corpus_arg]) == 0
        assert capsys.readouterr().err == ""

    def test_cycle(self, tmp_path, capsys):
        """Test one error line for a decomposition cycle"""
        path = tmp_path / "cycle.fm"
        path.write_text(CYCLE, encoding="utf-8")
        assert main(["validate", str(path)]) == 1
        lines = capsys.readouterr().err.splitlines()
        assert len(lines) == 1
        assert lines[0].startswith(f"{path}:")
        assert ": error: " in lines[0]

    def test_missing_file(self, capsys):
        """Test an unreadable input"""
        assert main(["validate", "missing.fm"]) == 2
        assert capsys.readouterr().err.startswith("error: cannot read missing.fm:")

    def test_syntax_error(self, tmp_path, capsys):
        """Test located parse errors"""
        path = tmp_path / "broken.fm"
        path.write_text("feature model M;\nfeature A\nend fm M;\n", encoding="utf-8")
        assert main(["validate", str(path)]) == 1
        assert f"{path}:" in capsys.readouterr().err


class TestRecognizeCommand:
    """Test fmre recognize"""

    def test_configuration_block(self, corpus_arg, capsys):
        """Test the St-Queue recognition"""
        assert main(["recognize", corpus_arg, "--feature", "St-Queue"]) == 0
        assert capsys.readouterr().out == (
            "Feature: St-Queue\n"
            "Type: Configuration feature\n"
            "Meaning:\n"
            "  Name: St-Queue\n"
            "  Decomposition: select List (variation = static-list, variation = static_queue)\n"
            "  Constraint: Reject st-beh\n"
            "  Included in: ---\n"
        )

    def test_json(self, corpus_arg, capsys):
        """Test the JSON output"""
        assert main(["recognize", corpus_arg, "--feature", "static_queue", "--format", "json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["kind"] == "elementary"
        assert payload["meaning"]["included_in"] == ["St-Queue"]

    def test_unknown_feature(self, corpus_arg, capsys):
        """Test an undeclared feature"""
        assert main(["recognize", corpus_arg, "--feature", "nope"]) == 1
        assert "unknown feature 'nope'" in capsys.readouterr().err


class TestSliceCommand:
    """Test fmre slice"""

    def test_forward_and(self, corpus_arg, tmp_path, capsys):
        """Test the Static-list example"""
        out = tmp_path / "out"
        assert main(["slice", corpus_arg, "--feature", "Static-list", "-o", str(out)]) == 0
        assert capsys.readouterr().out == "3 slice(s)\n"
        assert sorted(p.name for p in out.iterdir()) == [
            "slice-1.fm",
            "slice-2.fm",
            "slice-3.fm",
        ]
        assert "feature st-beh;" in (out / "slice-2.fm").read_text(encoding="utf-8")

    def test_forward_or(self, corpus_arg, tmp_path, capsys):
        """Test the Static-list or static-queue example"""
        out = tmp_path / "out"
        argv = ["slice", corpus_arg, "--feature", "Static-list", "--relation", "or"]
        argv += ["--alt", "static-queue", "-o", str(out)]
        assert main(argv) == 0
        assert capsys.readouterr().out == "1 slice(s)\n"
        text = (out / "slice-1.fm").read_text(encoding="utf-8")
        assert "feature static_queue;" in text

    def test_alternatives_with_and(self, corpus_arg, capsys):
        """Test that AND queries reject --alt"""
        argv = ["slice", corpus_arg, "--feature", "static-list", "--alt", "static_queue"]
        assert main(argv) == 2
        assert capsys.readouterr().err.startswith("error: ")

    def test_unknown_alternative(self, corpus_arg, capsys):
        """Test an undeclared alternative"""
        argv = ["slice", corpus_arg, "--feature", "static-list", "--relation", "or"]
        assert main(argv + ["--alt", "ghost"]) == 1

    def test_default_out_dir_and_format(self, corpus_arg, tmp_path, capsys):
        """Test the slices directory and JSON slice files"""
        argv = ["slice", corpus_arg, "--feature", "str", "--direction", "backward"]
        assert main(argv + ["--format", "json"]) == 0
        assert capsys.readouterr().out == "1 slice(s)\n"
        document = json.loads((tmp_path / "slices" / "slice-1.json").read_text(encoding="utf-8"))
        assert {f["name"] for f in document["features"]} == {
            "str",
            "static-list",
            "static_queue",
            "List",
            "St-Queue",
        }

    def test_meaning(self, corpus_arg, tmp_path, capsys):
        """Test printing the recognition before the count"""
        argv = ["slice", corpus_arg, "--feature", "St-Queue", "--meaning"]
        assert main(argv + ["-o", str(tmp_path / "out")]) == 0
        out = capsys.readouterr().out
        assert out.startswith("Feature: St-Queue\nType: Configuration feature\n")
        assert out.endswith("1 slice(s)\n")

    def test_project_slice_format(self, corpus_arg, tmp_path, capsys):
        """Test slice_format from .fmre.yaml"""
        (tmp_path / ".fmre.yaml").write_text("slice_format: dot\n", encoding="utf-8")
        assert main(["slice", corpus_arg, "--feature", "static-stack"]) == 0
        assert (tmp_path / "slices" / "slice-1.dot").is_file()

    def test_stale_slices_removed(self, corpus_arg, tmp_path, capsys):
        """Test that a shorter run leaves only its own slice files"""
        out = tmp_path / "out"
        out.mkdir()
        (out / "notes.txt").write_text("keep", encoding="utf-8")
        assert main(["slice", corpus_arg, "--feature", "Static-list", "-o", str(out)]) == 0
        assert main(["slice", corpus_arg, "--feature", "static-stack", "-o", str(out)]) == 0
        assert capsys.readouterr().out == "3 slice(s)\n1 slice(s)\n"
        assert sorted(p.name for p in out.iterdir()) == ["notes.txt", "slice-1.fm"]
        assert "feature static-stack;" in (out / "slice-1.fm").read_text(encoding="utf-8")


class TestExportCommands:
    """Test fmre export and fmre import-check"""

    def test_json_round_trip(self, corpus_arg, tmp_path, capsys):
        """Test exporting and checking a JSON document"""
        assert main(["export", corpus_arg, "--format", "json"]) == 0
        document = tmp_path / "list.json"
        document.write_text(capsys.readouterr().out, encoding="utf-8")
        assert main(["import-check", str(document)]) == 0
        assert capsys.readouterr().out == "List: 10 feature(s)\n"

    def test_import_check_stdin(self, corpus_arg, monkeypatch, capsys):
        """Test reading the document from stdin"""
        assert main(["export", corpus_arg]) == 0
        monkeypatch.setattr("sys.stdin", io.StringIO(capsys.readouterr().out))
        assert main(["import-check"]) == 0
        assert capsys.readouterr().out == "List: 10 feature(s)\n"

    def test_import_check_schema_error(self, tmp_path, capsys):
        """Test a document missing its name"""
        document = tmp_path / "bad.json"
        document.write_text('{"schema": 1, "features": []}', encoding="utf-8")
        assert main(["import-check", str(document)]) == 1
        assert "missing field: name" in capsys.readouterr().err

    def test_dot(self, corpus_arg, capsys):
        """Test the Graphviz output"""
        assert main(["export", corpus_arg, "--format", "dot"]) == 0
        assert capsys.readouterr().out.startswith('digraph "List" {')

    def test_invalid_model_not_exported(self, tmp_path, capsys):
        """Test that export refuses a model with errors"""
        path = tmp_path / "cycle.fm"
        path.write_text(CYCLE, encoding="utf-8")
        assert main(["export", str(path)]) == 1
        captured = capsys.readouterr()
        assert captured.out == ""
        assert ": error: " in captured.err


class TestFmtCommand:
    """Test fmre fmt"""

    def test_fixed_point(self, corpus_arg, tmp_path, capsys):
        """Test that formatting canonical text changes nothing"""
        assert main(["fmt", corpus_arg]) == 0
        first = capsys.readouterr().out
        path = tmp_path / "canonical.fm"
        path.write_text(first, encoding="utf-8")
        assert main(["fmt", str(path)]) == 0
        assert capsys.readouterr().out == first

    def test_write_in_place(self, corpus_text, tmp_path, capsys):
        """Test -w"""
        path = tmp_path / "list.fm"
        path.write_text(corpus_text, encoding="utf-8")
        assert main(["fmt", "-w", str(path)]) == 0
        assert capsys.readouterr().out == ""
        assert not path.read_text(encoding="utf-8").startswith("//")

    def test_write_leaves_broken_file(self, tmp_path, capsys):
        """Test that a parse error never rewrites the file"""
        path = tmp_path / "broken.fm"
        text = "feature model M;\nfeature A\nend fm M;\n"
        path.write_text(text, encoding="utf-8")
        assert main(["fmt", "-w", str(path)]) == 1
        assert path.read_text(encoding="utf-8") == text

    def test_empty_model(self, tmp_path, capsys):
        """Test a model without features"""
        path = tmp_path / "empty.fm"
        path.write_text(fm_source(), encoding="utf-8")
        assert main(["fmt", str(path)]) == 0
        assert capsys.readouterr().out == "feature model M;\nend fm M;\n"


class TestClassifyCommand:
    """Test fmre classify"""

    def test_text(self, corpus_arg, capsys):
        """Test aligned rows"""
        assert main(["classify", corpus_arg]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert len(lines) == 10
        assert lines[-1] == "St-Queue      configuration"

    def test_json(self, corpus_arg, capsys):
        """Test the JSON rows"""
        assert main(["classify", corpus_arg, "--format", "json"]) == 0
        rows = json.loads(capsys.readouterr().out)
        assert [row["name"] for row in rows if row["kind"] == "configuration"] == ["St-Queue"]


class TestRepeatedRuns:
    """Test several invocations in one process"""

    def test_closed_stderr_between_runs(self, corpus_arg, tmp_path):
        """Test that a stderr closed after one run does not break the next"""
        with open(tmp_path / "first.err", "w", encoding="utf-8") as first:
            with contextlib.redirect_stderr(first):
                assert main(["validate", corpus_arg]) == 0

        second = io.StringIO()
        with contextlib.redirect_stderr(second):
            assert main(["validate", corpus_arg]) == 0
            assert main(["recognize", corpus_arg, "--feature", "nope"]) == 1
        assert "unknown feature 'nope'" in second.getvalue()

    def test_warnings_follow_current_stderr(self, corpus_arg, tmp_path):
        """Test that log output goes to the stderr of the latest run"""
        with open(tmp_path / "first.err", "w", encoding="utf-8") as first:
            with contextlib.redirect_stderr(first):
                assert main(["validate", corpus_arg]) == 0

        second = io.StringIO()
        with contextlib.redirect_stdout(io.StringIO()), contextlib.redirect_stderr(second):
            assert main(["recognize", corpus_arg, "--feature", "static-queue"]) == 0
        assert "Resolved feature name 'static-queue' to 'static_queue'" in second.getvalue()
