import pytest

from fct.errors import ResourceLimitError, UsageError
from fct.nonnesting import (
    FilterChain,
    chain_statistics,
    enumerate_chains,
    enumerate_filters,
    extend_chain,
    h_triangle,
    indecomposable_histogram,
    indecomposables,
    is_filter,
    is_geometric,
    max_decomposition_rank,
    restrict_chain,
    simple_indecomposables,
)
from fct.poly import BivarPoly
from fct.rootsys import fuss_catalan_number, parabolic

from conftest import rsys
from oracles import (
    brute_chains,
    brute_filters,
    chain_root_sets,
    flat_decomposition_rank,
)

CHAIN_COUNTS = {
    ("A1", 1): 2, ("A1", 2): 3, ("A1", 3): 4,
    ("A2", 1): 5, ("A2", 2): 12, ("A2", 3): 22,
    ("B2", 1): 6, ("B2", 2): 15, ("B2", 3): 28,
    ("G2", 1): 8, ("G2", 2): 21, ("G2", 3): 40,
    ("A3", 1): 14, ("A3", 2): 55, ("A3", 3): 140,
    ("B3", 1): 20, ("B3", 2): 84, ("B3", 3): 220,
    ("D4", 1): 50, ("D4", 2): 336,
    ("F4", 1): 105, ("F4", 2): 780,
}


def test_enumerate_filters_against_brute_force():
    for name in ["A1", "A1xA1", "A2", "B2", "A3", "G2", "B3"]:
        rs = rsys(name)
        roots = rs.positive_roots
        filters = enumerate_filters(rs)
        assert list(filters) == sorted(filters)
        got = {
            frozenset(roots[i] for i in range(len(roots)) if (m >> i) & 1)
            for m in filters
        }
        assert got == brute_filters(rs)
        for m in filters:
            assert is_filter(rs, m)


def test_is_filter_rejects_non_filters():
    rs = rsys("A2")
    # {alpha_1} alone is not upward closed
    assert not is_filter(rs, 0b001)
    assert is_filter(rs, 0)
    assert is_filter(rs, 0b111)


def test_enumerate_chains_against_brute_force():
    for name, kmax in [("A1", 3), ("A2", 3), ("B2", 2), ("G2", 2), ("A3", 2)]:
        rs = rsys(name)
        for k in range(1, kmax + 1):
            got = {
                tuple(chain_root_sets(rs, ch.masks))
                for ch in enumerate_chains(rs, k)
            }
            assert got == brute_chains(rs, k), (name, k)


def test_chain_counts_match_catalan():
    for (name, k), count in CHAIN_COUNTS.items():
        rs = rsys(name)
        stats = chain_statistics(rs, k)
        assert sum(stats.values()) == count
        assert fuss_catalan_number(rs, k) == count


def test_chains_are_geometric_and_sorted():
    for name, k in [("A2", 2), ("B2", 2), ("G2", 2), ("A3", 2)]:
        rs = rsys(name)
        chains = enumerate_chains(rs, k)
        masks = [ch.masks for ch in chains]
        assert masks == sorted(masks)
        assert len(set(masks)) == len(masks)
        for ch in chains:
            assert is_geometric(ch)
            assert ch.mask_at(0) == (1 << len(rs.positive_roots)) - 1


def test_chain_levels():
    rs = rsys("A2")
    for ch in enumerate_chains(rs, 2):
        levels = ch.levels()
        for r in range(len(rs.positive_roots)):
            expected = max(
                [i for i in range(1, 3) if (ch.mask_at(i) >> r) & 1], default=0
            )
            assert levels[r] == expected


def test_max_decomposition_rank_against_flat_search():
    for name, k in [("A2", 2), ("A2", 3), ("B2", 2), ("G2", 2)]:
        rs = rsys(name)
        for ch in enumerate_chains(rs, k):
            levels = ch.levels()
            for r in range(len(rs.positive_roots)):
                assert max_decomposition_rank(ch, r) == flat_decomposition_rank(
                    rs, levels, r
                ), (name, k, r)


def test_census_matches_literal_indecomposables():
    for name, k in [("A2", 2), ("B2", 2), ("A3", 2), ("G2", 2), ("B3", 1)]:
        rs = rsys(name)
        stats = chain_statistics(rs, k)
        literal = {}
        for ch in enumerate_chains(rs, k):
            key = (len(indecomposables(ch, k)), len(simple_indecomposables(ch, k)))
            literal[key] = literal.get(key, 0) + 1
        assert stats == literal, (name, k)


def test_h_triangle_anchor():
    assert h_triangle(rsys("A2"), 1) == BivarPoly(
        {(0, 0): 1, (1, 0): 1, (1, 1): 2, (2, 2): 1}
    )
    # histogram rows sum to the chain count
    hist = indecomposable_histogram(rsys("B3"), 2)
    assert sum(hist) == 84
    assert len(hist) == 4


def test_restrict_extend_roundtrip():
    for name, k in [("A2", 2), ("B2", 2), ("A3", 1), ("G2", 2)]:
        rs = rsys(name)
        for ch in enumerate_chains(rs, k):
            for a in range(rs.n):
                if not (ch.masks[-1] >> a) & 1:
                    with pytest.raises(UsageError):
                        restrict_chain(ch, a)
                    continue
                sub = restrict_chain(ch, a)
                assert sub.rs is parabolic(rs, a)
                assert is_geometric(sub)
                assert extend_chain(rs, sub, a) == ch


def test_extend_chain_validates_parent():
    rs = rsys("A2")
    ch = enumerate_chains(rs, 1)[0]
    with pytest.raises(UsageError):
        extend_chain(rs, ch, 0)  # chain must live in the parabolic


def test_chain_enumeration_resource_bound():
    rs = rsys("E6")
    with pytest.raises(ResourceLimitError):
        enumerate_chains(rs, 3)


def test_k_validation():
    rs = rsys("A2")
    with pytest.raises(UsageError):
        enumerate_chains(rs, 0)
    with pytest.raises(UsageError):
        chain_statistics(rs, -1)


def test_filterchain_equality_and_hash():
    rs = rsys("A2")
    chains = enumerate_chains(rs, 2)
    again = FilterChain(rs, chains[0].masks)
    assert again == chains[0]
    assert hash(again) == hash(chains[0])
    assert chains[0] != chains[1]
