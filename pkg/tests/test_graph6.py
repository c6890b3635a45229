import itertools
import random

import pytest

from abcspectra.graph6 import (Graph6Error, encode_graph6, iter_graph6,
                               parse_graph6, read_graph6_file,
                               write_graph6_file)
from abcspectra.graphs import Graph, make_graph, path


def test_size_byte_arithmetic():
    assert parse_graph6("D?{").n == 5


def test_k1_encodes_to_at_sign():
    assert encode_graph6(make_graph(1, [])) == "@"


def test_p4_round_trip():
    text = encode_graph6(path(4))
    assert text == "Ch"
    assert parse_graph6(text).edges == path(4).edges


def test_header_accepted():
    assert parse_graph6(">>graph6<<Ch").edges == path(4).edges


def test_round_trip_all_connected_order5(connected_by_n):
    catalog = connected_by_n[5]
    assert len(catalog) == 21
    for g in catalog:
        back = parse_graph6(encode_graph6(g))
        assert back.n == g.n and back.edges == g.edges


def test_round_trip_random_labeled_graphs():
    rng = random.Random(99)
    for n in range(1, 9):
        pairs = list(itertools.combinations(range(n), 2))
        for _ in range(40):
            g = Graph(n, [e for e in pairs if rng.random() < 0.5])
            back = parse_graph6(encode_graph6(g))
            assert back.n == g.n and back.edges == g.edges


def test_round_trip_order_62():
    rng = random.Random(7)
    pairs = list(itertools.combinations(range(62), 2))
    g = Graph(62, [e for e in pairs if rng.random() < 0.1])
    assert parse_graph6(encode_graph6(g)).edges == g.edges


def test_rejects_byte_outside_range():
    with pytest.raises(Graph6Error, match="offset 1"):
        parse_graph6("C" + chr(30))


def test_rejects_truncated_record():
    with pytest.raises(Graph6Error, match="truncated"):
        parse_graph6("D?")


def test_rejects_trailing_bytes():
    with pytest.raises(Graph6Error, match="trailing"):
        parse_graph6("Chh")


def test_rejects_multibyte_order():
    with pytest.raises(Graph6Error, match="not supported"):
        parse_graph6("~??")


def test_encode_rejects_large_order():
    pairs = [(i, i + 1) for i in range(62)]
    with pytest.raises(ValueError, match="62"):
        encode_graph6(Graph(63, pairs))


def test_file_round_trip_with_line_numbers(tmp_path):
    graphs = [path(3), path(4), make_graph(2, [(0, 1)])]
    target = tmp_path / "batch.g6"
    write_graph6_file(target, graphs, header=True)
    loaded = read_graph6_file(target)
    assert [lineno for lineno, _ in loaded] == [2, 3, 4]
    assert [g.edges for _, g in loaded] == [g.edges for g in graphs]


def test_iter_reports_offending_line():
    lines = ["Ch", "D?", "Bw"]
    with pytest.raises(Graph6Error, match="line 2"):
        list(iter_graph6(lines))
