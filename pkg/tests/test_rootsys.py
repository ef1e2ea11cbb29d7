import pytest

from fct.errors import UsageError
from fct.rootsys import (
    TypeSpec,
    build_root_system,
    degrees,
    filter_generated,
    filter_mask,
    fuss_catalan_number,
    irreducible_factors,
    parabolic,
    parabolic_root_embedding,
    root_leq,
    support,
)

from conftest import rsys

POSITIVE_COUNTS = {
    "A1": 1, "A2": 3, "A3": 6, "B2": 4, "B3": 9,
    "G2": 6, "D4": 12, "F4": 24, "E6": 36,
}
COXETER_NUMBERS = {
    "A1": 2, "A2": 3, "A3": 4, "B2": 4, "B3": 6,
    "G2": 6, "D4": 6, "F4": 12, "E6": 12,
}


def test_typespec_parse_roundtrip():
    assert str(TypeSpec.parse("b3xA1")) == "B3xA1"
    assert str(TypeSpec.parse("F4")) == "F4"
    assert TypeSpec.parse("A2").rank == 2
    assert TypeSpec.parse("A2xB2xA1").rank == 5
    for bad in ["", "H3", "A", "A0", "Bx", "D3", "E9", "F5", "G3", "Q2"]:
        with pytest.raises(UsageError):
            TypeSpec.parse(bad)


def test_positive_root_counts_and_coxeter_numbers():
    for name, count in POSITIVE_COUNTS.items():
        rs = rsys(name)
        assert len(rs.positive_roots) == count
        assert rs.coxeter_number == COXETER_NUMBERS[name]
        # sum of degrees = |roots|/... : sum(d_i) = |Phi+| + n
        degs = degrees(name[0], int(name[1:]))
        assert sum(degs) == count + rs.n
        assert max(degs) == rs.coxeter_number


def test_roots_are_distinct_nonnegative_vectors():
    for name in POSITIVE_COUNTS:
        rs = rsys(name)
        seen = set(rs.positive_roots)
        assert len(seen) == len(rs.positive_roots)
        for r in rs.positive_roots:
            assert all(c >= 0 for c in r) and any(c > 0 for c in r)
        # simple roots first, in order
        for i in range(rs.n):
            assert rs.positive_roots[i] == tuple(
                1 if j == i else 0 for j in range(rs.n)
            )


def test_heights_and_highest_root():
    for name in ["A2", "B3", "G2", "F4", "D4"]:
        rs = rsys(name)
        hi = rs.positive_roots[rs.highest_roots[0]]
        assert sum(hi) == rs.coxeter_number - 1
        assert all(sum(r) <= sum(hi) for r in rs.positive_roots)
        # the highest root dominates every root coordinatewise
        assert all(root_leq(rs, r, hi) for r in rs.positive_roots)


def test_cartan_symmetrizer():
    for name in ["A3", "B3", "G2", "F4", "B2xG2"]:
        rs = rsys(name)
        d = rs.symmetrizer
        for i in range(rs.n):
            for j in range(rs.n):
                assert d[i] * rs.cartan[i][j] == d[j] * rs.cartan[j][i]
        assert all(x >= 1 for x in d)


def test_bipartition_two_colours():
    for name in ["A3", "B3", "F4", "D4", "A2xA1"]:
        rs = rsys(name)
        colour = rs.bipartition
        assert set(colour) <= {1, -1}
        for i in range(rs.n):
            for j in range(rs.n):
                if i != j and rs.cartan[i][j] != 0:
                    assert colour[i] != colour[j]


def test_sum_triples_literal():
    for name in ["A2", "B2", "B3", "G2", "D4"]:
        rs = rsys(name)
        idx = rs.root_index
        expected = set()
        for a, ra in enumerate(rs.positive_roots):
            for b, rb in enumerate(rs.positive_roots):
                if a > b:
                    continue
                total = tuple(x + y for x, y in zip(ra, rb))
                if total in idx:
                    expected.add(tuple(sorted((a, b))) + (idx[total],))
        got = {tuple(sorted((a, b))) + (c,) for a, b, c in rs.sum_triples}
        assert got == expected
        for c in range(len(rs.positive_roots)):
            pairs = {tuple(sorted(p)) for p in rs.pair_lists[c]}
            assert pairs == {(a, b) for a, b, cc in expected if cc == c}


def test_coroot_pairing_cartan_on_simples():
    for name in ["B3", "G2", "F4"]:
        rs = rsys(name)
        for i in range(rs.n):
            for j in range(rs.n):
                ei = rs.positive_roots[i]
                ej = rs.positive_roots[j]
                assert rs.coroot_pairing(ei, ej) == rs.cartan[i][j]
        for r in rs.positive_roots:
            assert rs.coroot_pairing(r, r) == 2


def test_filter_mask_and_support():
    rs = rsys("B3")
    for a in range(rs.n):
        gen = filter_generated(rs, a)
        mask = filter_mask(rs, a)
        assert gen == frozenset(
            r for i, r in enumerate(rs.positive_roots) if (mask >> i) & 1
        )
        alpha = rs.positive_roots[a]
        assert gen == frozenset(
            r for r in rs.positive_roots if root_leq(rs, alpha, r)
        )
    assert support(rs, rs.positive_roots[rs.highest_roots[0]]) == frozenset(
        range(rs.n)
    )


def test_parabolic_deletion():
    # B3 with an end node removed leaves A2 or B2 depending on the end
    rs = rsys("B3")
    ends = {}
    for a in range(3):
        sub = parabolic(rs, a)
        ends[a] = (str(sub.typespec), len(sub.positive_roots))
    assert ends[0] == ("B2", 4)
    assert ends[1] == ("A1xA1", 2)
    assert ends[2] == ("A2", 3)

    rs4 = rsys("F4")
    subfactors = {
        tuple(sorted(parabolic(rs4, a).typespec.factors)) for a in range(4)
    }
    assert subfactors == {
        (("A", 1), ("A", 2)),
        (("B", 3),),
        (("C", 3),),
    }


def test_parabolic_embedding_is_coefficient_faithful():
    for name, remove in [("A3", 1), ("B3", 0), ("F4", 2), ("D4", 3)]:
        rs = rsys(name)
        sub = parabolic(rs, remove)
        emb = parabolic_root_embedding(rs, remove)
        assert len(emb) == len(sub.positive_roots)
        keep = [i for i in range(rs.n) if i != remove]
        for pos, orig in enumerate(emb):
            img = rs.positive_roots[orig]
            assert img[remove] == 0
            assert tuple(img[i] for i in keep) == sub.positive_roots[pos]
        assert len(set(emb)) == len(emb)


def test_fuss_catalan_anchors():
    assert [fuss_catalan_number(rsys("A2"), k) for k in (1, 2, 3)] == [5, 12, 22]
    assert fuss_catalan_number(rsys("A3"), 3) == 140
    assert fuss_catalan_number(rsys("B3"), 3) == 220
    assert fuss_catalan_number(rsys("G2"), 3) == 40
    assert fuss_catalan_number(rsys("D4"), 1) == 50
    assert fuss_catalan_number(rsys("D4"), 2) == 336
    assert fuss_catalan_number(rsys("F4"), 1) == 105
    assert fuss_catalan_number(rsys("F4"), 2) == 780
    assert fuss_catalan_number(rsys("E6"), 1) == 833
    # multiplicative over factors
    assert fuss_catalan_number(rsys("A2xB2"), 2) == 12 * fuss_catalan_number(
        rsys("B2"), 2
    )


def test_irreducible_factors():
    rs = rsys("A2xB2xA1")
    parts = irreducible_factors(rs)
    assert [str(p.typespec) for p in parts] == ["A2", "B2", "A1"]
    assert sum(p.n for p in parts) == rs.n
    assert irreducible_factors(rsys("F4")) == (rsys("F4"),)


def test_root_system_identity_cache():
    assert rsys("B3") is rsys("B3")
    assert parabolic(rsys("B3"), 2) is parabolic(rsys("B3"), 2)
