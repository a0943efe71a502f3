"""Command-line entry point and exit codes."""
import json

import pytest

from cli import EXIT_DISCONNECTED, EXIT_GUARD, EXIT_OK, EXIT_PARSE, export_corpus, main
from utils.edge_list_parser import format_edge_list, read_edge_list
from utils.gadgets import bowtie

BOWTIE = "5;1-3,2-3,1-2,3-4,3-5,4-5"


@pytest.fixture(autouse=True)
def single_worker(monkeypatch):
    monkeypatch.setenv("EDGERING_THREADS", "1")


def test_analyze_inline(capsys):
    assert main(["analyze", "--graph", BOWTIE, "--qmax", "4", "--jmax", "5"]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["polytope"]["degree"] == 2
    assert payload["ideal"]["summary"]["hypersurface"]


def test_analyze_file_as_table(tmp_path, capsys):
    path = tmp_path / "bowtie.txt"
    path.write_text(format_edge_list(bowtie()), encoding="utf-8")
    assert main(["analyze", str(path), "--qmax", "3", "--jmax", "4", "--format", "table"]) == EXIT_OK
    assert BOWTIE in capsys.readouterr().out


@pytest.mark.parametrize("argv, code", [
    (["analyze", "--graph", "3;1-2,2-2"], EXIT_PARSE),
    (["analyze", "--graph", "6;1-2,2-3,1-3,4-5,5-6,4-6", "--qmax", "3", "--jmax", "4"], EXIT_DISCONNECTED),
    (["analyze"], EXIT_PARSE),
    (["analyze", "/nonexistent/graph.txt"], EXIT_PARSE),
    (["corpus", "--max-n", "9"], EXIT_GUARD),
    (["verify", "L99"], EXIT_PARSE),
    (["frobnicate"], EXIT_PARSE),
    (["verify", "L44", "--k", "3"], EXIT_PARSE),
])
def test_exit_codes(argv, code):
    assert main(argv) == code


def test_verify(capsys):
    assert main(["verify", "L42", "--max-n", "4"]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["lemma_id"] == "L42"
    assert payload["counterexamples"] == []


def test_verify_store(tmp_path, monkeypatch):
    monkeypatch.setenv("EDGERING_DATABASE_URL", f"sqlite:///{tmp_path / 'runs.db'}")
    assert main(["verify", "L41", "--max-n", "4", "--store"]) == EXIT_OK
    assert (tmp_path / "runs.db").exists()


def test_corpus(capsys):
    assert main(["corpus", "--max-n", "4", "--which", "polytope"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["total"] == 10


def test_monotonicity(capsys):
    assert main(["monotonicity", "--max-n", "4", "--pairs", "10", "--seed", "2"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["seed"] == 2


def test_export_corpus(tmp_path):
    written = export_corpus(4, tmp_path / "corpus")
    assert len(written) == 9
    assert written[0].name == "graph_0002.txt"
    for path in written:
        graph = read_edge_list(path)
        assert graph.is_connected()


@pytest.mark.parametrize("argv", [
    ["verify", "L44", "--format", "table"],
    ["corpus", "--max-n", "3", "--which", "ideal", "--qmax", "3", "--format", "table"],
])
def test_table_output(argv, capsys):
    assert main(argv) == EXIT_OK
    assert capsys.readouterr().out.strip()
