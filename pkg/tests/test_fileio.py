import pytest

from dicolor import Digraph, ParseError, gen_dicycle
from dicolor.fileio import (
    format_coloring,
    format_digraph,
    format_lists,
    parse_coloring,
    parse_digraph,
    parse_lists,
    read_digraph,
    write_digraph,
)


def test_digraph_round_trip(tmp_path):
    d = Digraph(4, [(0, 1), (1, 0), (2, 3), (1, 3)])
    path = tmp_path / "d.txt"
    write_digraph(d, path)
    assert read_digraph(path) == d


def test_format_sorted_lf():
    d = Digraph(3, [(2, 0), (0, 1)])
    assert format_digraph(d) == "3 2\n0 1\n2 0\n"


def test_comments_and_duplicates_tolerated():
    text = "# a digon\n2 3\n0 1\n1 0\n# repeat\n0 1\n"
    assert parse_digraph(text) == Digraph(2, [(0, 1), (1, 0)])


def test_header_mismatch():
    with pytest.raises(ParseError):
        parse_digraph("2 2\n0 1\n")


def test_bad_tokens_carry_line_number():
    with pytest.raises(ParseError) as info:
        parse_digraph("2 1\n0 x\n")
    assert info.value.line == 2


def test_loop_rejected_as_parse_error():
    with pytest.raises(ParseError):
        parse_digraph("1 1\n0 0\n")


def test_empty_file():
    with pytest.raises(ParseError):
        parse_digraph("# nothing\n")


def test_lists_round_trip():
    lists = {0: (0, 2), 1: (1,)}
    assert parse_lists(format_lists(lists), 2) == lists


def test_lists_validation():
    with pytest.raises(ParseError):
        parse_lists("0 2 1\n", 1)  # announces 2 colors, lists 1
    with pytest.raises(ParseError):
        parse_lists("3 1 0\n", 2)  # vertex out of range
    with pytest.raises(ParseError):
        parse_lists("0 1 0\n0 1 1\n", 1)  # duplicate vertex


def test_coloring_round_trip():
    coloring = {0: 3, 2: 1}
    assert parse_coloring(format_coloring(coloring), 3) == coloring


def test_coloring_validation():
    with pytest.raises(ParseError):
        parse_coloring("0 1 2\n", 2)
    with pytest.raises(ParseError):
        parse_coloring("0 1\n0 2\n", 2)


def test_gen_then_read_identity(tmp_path):
    d = gen_dicycle(6)
    path = tmp_path / "c6.txt"
    write_digraph(d, path)
    assert read_digraph(path) == d
