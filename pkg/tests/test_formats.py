import json

import pytest

from pgsolve.formats import (
    DanglingEdge,
    DuplicateNode,
    NamedGame,
    PGSyntaxError,
    UnknownOwner,
    emit_pgsolver,
    emit_report,
    load_regions,
    parse_pgsolver,
)
from pgsolve.game import Owner
from pgsolve.generators import random_suite

E, O = Owner.EVEN, Owner.ODD


def test_parse_g1(g1):
    ng = parse_pgsolver("parity 1; 0 2 0 1; 1 1 0 0;")
    assert ng.game == g1
    assert ng.original_ids == (0, 1)


def test_parse_self_loop():
    ng = parse_pgsolver("0 3 1 0,1;\n1 2 0 0;\n")
    g = ng.game
    assert g.n == 3
    assert g.successors == ((2, 1), (0,), (0,))
    assert g.priorities == (3, 2, 3)
    assert ng.synthetic == {2}
    assert ng.original_ids == (0, 1, 2)
    assert ng.external([0, 1, 2]) == [0, 1]


def test_parse_sparse_names_and_layout():
    text = 'parity 99;\n10 4 1 30 "a b";\n30 0 0\n  10 ,\n20; 20 1 0 10;'
    ng = parse_pgsolver(text)
    assert ng.original_ids == (10, 20, 30)
    assert ng.names == {0: "a b"}
    assert ng.game.successors == ((2,), (0,), (0, 1))
    assert emit_pgsolver(ng) == 'parity 30;\n10 4 1 30 "a b";\n20 1 0 10;\n30 0 0 10,20;\n'


def test_start_line_ignored(g1):
    assert parse_pgsolver("parity 1;\nstart 0;\n0 2 0 1;\n1 1 0 0;\n").game == g1


def test_duplicate_edges_dropped():
    ng = parse_pgsolver("0 1 0 1,1;\n1 2 0 0;")
    assert ng.game.successors[0] == (1,)
    assert ng.notes


@pytest.mark.parametrize(
    "text, error, line",
    [
        ("0 2 2 1;", UnknownOwner, 1),
        ("parity 1;\n0 2 0 1;\n1 1 0 0\n", PGSyntaxError, 4),
        ("0 2 0 1;\n1 1 0 0;\n2 1 1 7;\n", DanglingEdge, 3),
        ("0 2 0 1;\n1 x 0 0;", PGSyntaxError, 2),
        ("0 2 0 1;\n0 1 0 0;", DuplicateNode, 2),
        ("0 2 0 ;", PGSyntaxError, 1),
    ],
)
def test_errors_carry_line(text, error, line):
    with pytest.raises(error) as e:
        parse_pgsolver(text)
    assert e.value.line == line


def test_unknown_owner_value():
    with pytest.raises(UnknownOwner) as e:
        parse_pgsolver("0 2 2 1;")
    assert e.value.value == 2 and e.value.column == 5


def test_syntax_error_reports_expectation():
    with pytest.raises(PGSyntaxError) as e:
        parse_pgsolver("0 2 0 1 1 1 0 0;")
    assert e.value.expected == "';'" and (e.value.line, e.value.column) == (1, 9)


def test_emit_g1(g1):
    assert emit_pgsolver(g1) == "parity 1;\n0 2 0 1;\n1 1 0 0;\n"


def test_emit_name(g1):
    ng = NamedGame(g1, (0, 1), {0: "init"})
    assert emit_pgsolver(ng).splitlines()[1] == '0 2 0 1 "init";'
    ng = NamedGame(g1, (0, 1), {1: 'say "hi"\\'})
    assert parse_pgsolver(emit_pgsolver(ng)).names == ng.names


def test_round_trip():
    for _, g in random_suite(100, max_n=20, max_priority=9, max_out=5):
        text = emit_pgsolver(g)
        back = parse_pgsolver(text)
        assert back.game == g
        assert back.original_ids == tuple(g.nodes)
        assert emit_pgsolver(back) == text


def test_report(g1):
    doc = {"input": "g1.gm", "algorithm": "classic", "win_even": [0, 1], "win_odd": []}
    text = emit_report(doc)
    assert json.loads(text) == doc
    assert text.index('"algorithm"') < text.index('"input"')
    assert load_regions(text) == ([0, 1], [])


def test_report_list_order():
    entries = [{"input": n, "algorithm": "qpt"} for n in ("c", "a", "b")]
    assert [e["input"] for e in json.loads(emit_report(entries))] == ["a", "b", "c"]
