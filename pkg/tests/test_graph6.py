import networkx as nx
import pytest
from hypothesis import given

from symbreak.errors import ParseError
from symbreak.families import complete, cycle, mycielski_sequence
from symbreak.graph6 import from_graph6, read_graph6_lines, to_graph6

from helpers import graphs


def test_known_strings():
    assert to_graph6(cycle(6)) == "EhEG"
    assert to_graph6(complete(3)) == "Bw"
    assert to_graph6(mycielski_sequence(4)) == "JkLTAQGK?N_"
    assert to_graph6(complete(3), header=True) == ">>graph6<<Bw"


@given(graphs(max_n=12))
def test_roundtrip(g):
    assert from_graph6(to_graph6(g)) == g


@given(graphs(max_n=12))
def test_matches_networkx_encoder(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    ref = nx.to_graph6_bytes(h, header=False).decode().strip()
    assert to_graph6(g) == ref


def test_large_order_prefix():
    g = cycle(70)
    text = to_graph6(g)
    assert text[0] == "~"
    assert from_graph6(text) == g


@pytest.mark.parametrize("bad", ["", "A", "D?", "D???", "B\x01", "garbage"])
def test_parse_errors(bad):
    with pytest.raises(ParseError):
        from_graph6(bad)


def test_read_lines_skips_blanks():
    gs = read_graph6_lines(["Bw\n", "\n", ">>graph6<<EhEG\n"])
    assert gs == [complete(3), cycle(6)]
