"""graph6 text format: strict reader, short-form writer."""

import pytest

from cliquefold import (
    CapacityError,
    Graph,
    Graph6ParseError,
    are_isomorphic,
    canonical_graph,
    complete,
    cycle,
    edgeless,
    read_graph6,
    read_graph6_file,
    star,
    write_graph6,
    write_graph6_file,
)
from cliquefold.search import SearchSpace, enumerate_graphs


def test_tiny_round_trips():
    assert read_graph6("@") == edgeless(1)
    assert write_graph6(edgeless(1)) == "@"
    assert read_graph6("?") == edgeless(0)
    assert write_graph6(edgeless(0)) == "?"
    assert read_graph6("A_") == complete(2)
    assert write_graph6(complete(2)) == "A_"


def test_known_encodings():
    # K_{1,4} with the center labeled last
    assert read_graph6("D?{") == Graph.from_edges(5, [(0, 4), (1, 4), (2, 4), (3, 4)])
    assert write_graph6(canonical_graph(star(4))) == "D?{"
    assert write_graph6(cycle(5)) == "Dhc"
    assert read_graph6("Dhc") == cycle(5)
    # labels matter: center-first K_{1,4} is the same class but a different line
    s = write_graph6(star(4))
    assert s == "Ds_" != "D?{"
    assert read_graph6(s) == star(4)
    assert are_isomorphic(read_graph6(s), read_graph6("D?{"))


def test_header_tolerated():
    assert read_graph6(">>graph6<<Ds_") == star(4)


def test_bad_byte_reports_offset():
    with pytest.raises(Graph6ParseError) as ei:
        read_graph6("D?\x1f")
    assert ei.value.offset == 2
    with pytest.raises(Graph6ParseError):
        read_graph6("D?\x7f")


def test_nonzero_padding_rejected():
    # n=3 uses 3 bits; "B@" pads with a stray bit set
    with pytest.raises(Graph6ParseError):
        read_graph6("B@")
    assert read_graph6("B?") == edgeless(3)


def test_truncated_and_overlong():
    with pytest.raises(Graph6ParseError):
        read_graph6("D?")  # n=5 needs two payload bytes
    with pytest.raises(Graph6ParseError):
        read_graph6("D?{{")
    with pytest.raises(Graph6ParseError):
        read_graph6("")


def test_long_form_up_to_64():
    # ~ marks a 3-byte vertex count; E_63 then E_64, all-zero payload
    n63 = "~??~" + "?" * ((63 * 62 // 2 + 5) // 6)
    assert read_graph6(n63) == edgeless(63)
    n64 = "~?@?" + "?" * ((64 * 63 // 2 + 5) // 6)
    assert read_graph6(n64) == edgeless(64)
    with pytest.raises(Graph6ParseError):
        read_graph6("~?@@" + "?" * ((65 * 64 // 2 + 5) // 6))  # n=65 beyond cap


def test_very_long_form_rejected():
    with pytest.raises(Graph6ParseError):
        read_graph6("~~?????????")


def test_write_capacity_cutoff():
    assert write_graph6(edgeless(62)).startswith("}")
    with pytest.raises(CapacityError):
        write_graph6(edgeless(63))


def test_file_round_trip(tmp_path):
    gs = [edgeless(0), complete(4), cycle(6), star(5)]
    text = write_graph6_file(gs)
    assert text.count("\n") == len(gs) and text.endswith("\n")
    path = tmp_path / "batch.g6"
    path.write_text(text)
    assert read_graph6_file(path.read_text()) == gs


def test_file_reader_skips_blank_lines():
    assert read_graph6_file("\nDs_\n\nDhc\n") == [star(4), cycle(5)]


def test_round_trip_everything_small():
    for n in range(0, 7):
        for g in enumerate_graphs(SearchSpace(n)):
            s = write_graph6(g)
            assert read_graph6(s) == g
            assert write_graph6(read_graph6(s)) == s
