"""Edge-list text format."""
import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from models.errors import EdgeListParseError
from models.graph import SimpleGraph
from utils.edge_list_parser import format_edge_list, parse_edge_list, parse_inline, read_edge_list
from utils.gadgets import bowtie

BOWTIE_TEXT = """# bowtie
5 6
1 3
2 3
1 2
3 4
3 5
4 5
"""


def test_parse_bowtie():
    g = parse_edge_list(BOWTIE_TEXT)
    assert g == bowtie()
    assert g.edges[0] == (1, 3)


def test_crlf_and_blank_lines():
    g = parse_edge_list("3 2\r\n\r\n1 2\r\n  2 3  \r\n")
    assert g.edges == ((1, 2), (2, 3))


def test_edge_order_is_variable_order():
    g = parse_edge_list("3 3\n3 1\n2 1\n3 2\n")
    assert g.edges == ((1, 3), (1, 2), (2, 3))


@pytest.mark.parametrize("text, line", [
    ("", 1),
    ("# only a comment\n", 1),
    ("3\n1 2\n", 1),
    ("3 0\n", 1),
    ("3 2\n1 2\n", 2),
    ("3 1\n1 2\n2 3\n", 3),
    ("3 1\n1 x\n", 2),
    ("3 1\n1 4\n", 2),
    ("3 1\n2 2\n", 2),
    ("3 2\n1 2\n2 1\n", 3),
    ("3 1\n1 2 3\n", 2),
])
def test_errors_carry_line_numbers(text, line):
    with pytest.raises(EdgeListParseError) as info:
        parse_edge_list(text)
    assert info.value.line_no == line
    assert f"at line {line}" in str(info.value)


def test_inline():
    g = parse_inline("5;1-3,2-3,1-2,3-4,3-5,4-5")
    assert g == bowtie()
    assert g.to_literal() == "5;1-3,2-3,1-2,3-4,3-5,4-5"


@pytest.mark.parametrize("literal", ["5", "0;1-2", "3;1-2-3", "3;1-1", "3;", "3;1-2,2-1", "x;1-2"])
def test_inline_errors(literal):
    with pytest.raises(EdgeListParseError):
        parse_inline(literal)


def test_read_file(tmp_path):
    path = tmp_path / "bowtie.txt"
    path.write_text(format_edge_list(bowtie(), comment="G6"), encoding="utf-8")
    assert read_edge_list(path) == bowtie()
    assert path.read_text(encoding="utf-8").startswith("# G6\n5 6\n")


@st.composite
def graphs(draw):
    n = draw(st.integers(min_value=2, max_value=8))
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    edges = draw(st.lists(st.sampled_from(pairs), min_size=1, unique=True))
    return SimpleGraph(n, tuple(edges))


@given(graphs())
@settings(max_examples=50)
def test_formatted_text_parses_back(g):
    assert parse_edge_list(format_edge_list(g)) == g
    assert parse_inline(g.to_literal()) == g
