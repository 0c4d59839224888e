from __future__ import annotations

import pytest

from actorkit import catalog, io
from actorkit.errors import NotAssociative, ParseError, RelationViolated
from actorkit.groupoid import find_xmod_isomorphism
from actorkit.rgraph import one_object


def test_group_round_trip_is_bit_exact():
    for name in catalog.NAMES:
        G = catalog.get(name)
        text = io.format_group(G)
        H = io.parse_group(text)
        assert H == G and H.name == G.name
        assert io.format_group(H) == text


def test_comments_and_blank_lines():
    text = "# cyclic of order 2\norder 2\n\n0 1  # row 0\n1 0\nname Z2\n"
    G = io.parse_group(text)
    assert G == catalog.get("Z2")
    assert io.format_group(G) == "order 2\n0 1\n1 0\nname Z2\n"


def test_parse_errors():
    with pytest.raises(ParseError):
        io.parse_group("order 2\n0 1\n")
    with pytest.raises(ParseError):
        io.parse_group("order 2\n0 1\n1 x\n")
    with pytest.raises(ParseError):
        io.parse_group("size 2\n0 1\n1 0\n")
    with pytest.raises(ParseError):
        io.parse_group("order 2\n0 1\n1 0\nextra\n")
    bad = "order 5\n0 1 2 3 4\n1 0 3 4 2\n2 4 0 1 3\n3 2 4 0 1\n4 3 1 2 0\n"
    with pytest.raises(NotAssociative):
        io.parse_group(bad)


def test_rg_round_trip_and_relation_check():
    R = one_object(catalog.get("Z3"))
    text = io.format_rg(R)
    assert io.detect_kind(text) == "rg"
    assert io.parse_rg(text) == R
    assert io.format_rg(io.parse_rg(text)) == text
    with pytest.raises(RelationViolated):
        io.parse_rg(io.format_group(catalog.get("Z2")) + "s: 0 0\nt: 0 1\n")


def test_xmod_round_trip():
    for name, M in catalog.crossed_module_examples():
        text = io.format_xmod(M)
        assert io.detect_kind(text) == "xmod"
        N = io.parse_xmod(text)
        assert io.format_xmod(N) == text
        assert find_xmod_isomorphism(M, N) is not None, name


def test_bundled_catalog_matches_builders():
    groups = catalog.load_catalog()
    assert [G.name for G in groups] == list(catalog.NAMES)
    for G in groups:
        assert G == catalog.get(G.name)
    assert len(catalog.load_catalog(max_order=8)) == 14


def test_bundled_xmods_match_builders():
    loaded = catalog.load_bundled_xmods()
    built = catalog.crossed_module_examples()
    assert [n for n, _ in loaded] == [n for n, _ in built]
    for (_, M), (_, N) in zip(loaded, built):
        assert io.format_xmod(M) == io.format_xmod(N)


def test_write_read_files(tmp_path):
    G = catalog.get("Q8")
    p = tmp_path / "q8.grp"
    io.write_group(G, p)
    assert io.read_group(p) == G
    paths = catalog.write_bundled_catalog(tmp_path / "cat")
    assert len(paths) == len(catalog.NAMES)
    assert [H.name for H in catalog.load_catalog(tmp_path / "cat")] == list(catalog.NAMES)
