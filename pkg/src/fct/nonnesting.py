"""Geometric chains of order filters in the root poset.

A k-chain is a nested family I_1 >= I_2 >= ... >= I_k of order filters,
with the conventions I_0 = all positive roots and I_i = I_k for i > k.
The chain is geometric when for all i, j in {0..k}

    (I_i + I_j) intersected with the roots lies in I_{i+j}, and
    (J_i + J_j) intersected with the roots lies in J_{i+j} for i+j <= k,

where J_i is the complement of I_i.  The geometric chains are the
k-divisible nonnesting partitions of the root system; their top-rank
indecomposable elements drive the H-triangle.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import kernels
from .errors import InternalInvariantError, ResourceLimitError, UsageError
from .poly import BivarPoly, require_h_support
from .rootsys import (
    RootSystem,
    build_root_system,
    filter_mask,
    parabolic,
    parabolic_root_embedding,
)

CHAIN_LIMIT = 5 * 10**6


@dataclass(frozen=True, eq=False)
class FilterChain:
    """A nested chain of k order filters, stored as root-index bitmasks."""

    rs: RootSystem
    masks: tuple

    def __eq__(self, other) -> bool:
        return self.rs is other.rs and self.masks == other.masks

    def __hash__(self) -> int:
        return hash(self.masks)

    @property
    def k(self) -> int:
        return len(self.masks)

    def mask_at(self, i: int) -> int:
        """I_i as a bitmask, honouring I_0 = all roots and I_i = I_k above k."""
        if i <= 0:
            return (1 << len(self.rs.positive_roots)) - 1
        return self.masks[min(i, self.k) - 1]

    def filter_at(self, i: int) -> frozenset:
        m = self.mask_at(i)
        return frozenset(
            r for idx, r in enumerate(self.rs.positive_roots) if (m >> idx) & 1
        )

    def complement_at(self, i: int) -> frozenset:
        m = self.mask_at(i)
        return frozenset(
            r for idx, r in enumerate(self.rs.positive_roots) if not (m >> idx) & 1
        )

    def levels(self) -> tuple:
        """For each root index, the largest i <= k with the root in I_i."""
        n_roots = len(self.rs.positive_roots)
        out = [0] * n_roots
        for i, m in enumerate(self.masks, start=1):
            for r in range(n_roots):
                if (m >> r) & 1:
                    out[r] = i
        return tuple(out)

    def root_indices(self) -> list:
        """JSON form: one sorted root-index list per filter."""
        return [
            [r for r in range(len(self.rs.positive_roots)) if (m >> r) & 1]
            for m in self.masks
        ]


@lru_cache(maxsize=None)
def enumerate_filters(rs: RootSystem) -> tuple:
    """All order filters of the root poset, as ascending bitmasks."""
    n_roots = len(rs.positive_roots)
    # covers[r] = roots immediately above r; membership of r requires them
    above = []
    for r_idx, r in enumerate(rs.positive_roots):
        ups = [
            s_idx
            for s_idx, s in enumerate(rs.positive_roots)
            if s_idx != r_idx and all(x <= y for x, y in zip(r, s))
        ]
        above.append(ups)
    order = sorted(range(n_roots), key=lambda r: -rs.heights[r])
    out = []

    def descend(pos, mask):
        if pos == len(order):
            out.append(mask)
            return
        r = order[pos]
        descend(pos + 1, mask)
        if all((mask >> s) & 1 for s in above[r]):
            descend(pos + 1, mask | (1 << r))

    descend(0, 0)
    return tuple(sorted(out))


def is_filter(rs: RootSystem, mask: int) -> bool:
    for r_idx, r in enumerate(rs.positive_roots):
        if (mask >> r_idx) & 1:
            continue
        for s_idx, s in enumerate(rs.positive_roots):
            if (mask >> s_idx) & 1 and all(x <= y for x, y in zip(s, r)):
                return False
    return True


def _chain_data(rs: RootSystem):
    filters = enumerate_filters(rs)
    subs = tuple(
        tuple(j for j, g in enumerate(filters) if g & ~f == 0)
        for f in filters
    )
    full = (1 << len(rs.positive_roots)) - 1
    return filters, subs, full


def is_geometric(chain: FilterChain) -> bool:
    """Literal evaluation of both displayed conditions on all index pairs."""
    rs = chain.rs
    k = chain.k
    triples = rs.sum_triples
    full = (1 << len(rs.positive_roots)) - 1
    for i in range(0, k + 1):
        for j in range(0, k + 1):
            x, y = chain.mask_at(i), chain.mask_at(j)
            z = chain.mask_at(min(i + j, k))
            for a, b, c in triples:
                if not (z >> c) & 1:
                    if ((x >> a) & 1 and (y >> b) & 1) or ((x >> b) & 1 and (y >> a) & 1):
                        return False
            if i + j <= k:
                jx, jy = full & ~x, full & ~y
                jz = chain.mask_at(i + j)
                for a, b, c in triples:
                    if (jz >> c) & 1:
                        if ((jx >> a) & 1 and (jy >> b) & 1) or (
                            (jx >> b) & 1 and (jy >> a) & 1
                        ):
                            return False
    return True


@lru_cache(maxsize=None)
def enumerate_chains(rs: RootSystem, k: int) -> tuple:
    """All geometric chains, sorted lexicographically by mask tuples."""
    if k < 1:
        raise UsageError("k must be a positive integer")
    filters, subs, full = _chain_data(rs)
    estimate = len(filters) ** min(k, 3)
    if estimate > CHAIN_LIMIT:
        raise ResourceLimitError(
            f"chain enumeration for {rs.typespec}, k={k} exceeds the bound"
        )
    raw = kernels.nn_chains(filters, subs, rs.sum_triples, k, full)
    return tuple(FilterChain(rs, masks) for masks in raw)


def chain_statistics(rs: RootSystem, k: int) -> dict:
    """Histogram (top indecomposables, simple ones) -> number of chains."""
    if k < 1:
        raise UsageError("k must be a positive integer")
    filters, subs, full = _chain_data(rs)
    return kernels.nn_census(
        filters,
        subs,
        rs.sum_triples,
        rs.pair_lists,
        k,
        full,
        len(rs.positive_roots),
        rs.n,
    )


def max_decomposition_rank(chain: FilterChain, root_idx: int) -> int:
    """Largest total of filter indices over decompositions of the root.

    The value is max(k_1 + ... + k_r) over all ways of writing the root
    as a sum of positive roots with the i-th summand in I_{k_i}, indices
    drawn from {0..k}.  Computed by dynamic programming in height order;
    the exhaustive search over flat decompositions gives the same value
    (verified in the tests).
    """
    rs = chain.rs
    levels = chain.levels()
    order = sorted(range(len(rs.positive_roots)), key=lambda r: rs.heights[r])
    best = {}
    for r in order:
        v = levels[r]
        for a, b in rs.pair_lists[r]:
            v = max(v, best[a] + best[b])
        best[r] = v
    return best[root_idx]


def indecomposables(chain: FilterChain, l: int) -> frozenset:
    """Root indices that are indecomposable of rank l in the chain.

    A root is rank-l indecomposable when it lies in I_l with maximal
    decomposition rank exactly l, is not a sum from I_i + I_j with
    i + j = l, and every way of extending it by a positive root beta to
    an element of top rank t <= k forces beta into I_{t-l}.
    """
    rs = chain.rs
    k = chain.k
    if not 1 <= l <= k:
        raise UsageError("rank must lie in 1..k")
    levels = chain.levels()
    idx = rs.root_index
    out = []
    for r, root in enumerate(rs.positive_roots):
        if levels[r] < l:
            continue
        if max_decomposition_rank(chain, r) != l:
            continue
        if any(
            min(levels[a], k) + min(levels[b], k) >= l
            for a, b in rs.pair_lists[r]
        ):
            # some split root_a + root_b with root_a in I_i, root_b in I_j,
            # i + j = l, indices within 0..k
            continue
        ok = True
        for beta_idx, beta in enumerate(rs.positive_roots):
            total = tuple(x + y for x, y in zip(root, beta))
            c = idx.get(total)
            if c is None:
                continue
            t = max_decomposition_rank(chain, c)
            if t <= k and levels[c] >= t and t - l > 0 and levels[beta_idx] < t - l:
                ok = False
                break
        if ok:
            out.append(r)
    return frozenset(out)


def simple_indecomposables(chain: FilterChain, l: int) -> frozenset:
    return frozenset(r for r in indecomposables(chain, l) if r < chain.rs.n)


@lru_cache(maxsize=None)
def h_triangle(rs: RootSystem, k: int) -> BivarPoly:
    """Sum of x^(top indecomposables) y^(simple ones) over geometric chains."""
    stats = chain_statistics(rs, k)
    out = BivarPoly({(i, s): c for (i, s), c in stats.items()})
    require_h_support(out)
    return out


def restrict_chain(chain: FilterChain, a: int):
    """Delete the filter generated by simple root a from every level.

    Requires a to index a simple root lying in the last filter.  Returns
    the resulting chain over parabolic(rs, a).
    """
    rs = chain.rs
    if not 0 <= a < rs.n:
        raise UsageError(f"simple root index {a} out of range")
    if not (chain.masks[-1] >> a) & 1:
        raise UsageError("the chosen simple root must lie in the last filter")
    gen = filter_mask(rs, a)
    embedding = parabolic_root_embedding(rs, a)
    sub = parabolic(rs, a)
    out = []
    for m in chain.masks:
        stripped = m & ~gen
        out.append(
            sum(
                1 << pos
                for pos, orig in enumerate(embedding)
                if (stripped >> orig) & 1
            )
        )
    return FilterChain(sub, tuple(out))


def extend_chain(rs: RootSystem, sub_chain: FilterChain, a: int) -> FilterChain:
    """Inverse of restrict_chain: add back the filter generated by a."""
    if not 0 <= a < rs.n:
        raise UsageError(f"simple root index {a} out of range")
    if sub_chain.rs is not parabolic(rs, a):
        raise UsageError("chain does not live in the parabolic at a")
    gen = filter_mask(rs, a)
    embedding = parabolic_root_embedding(rs, a)
    out = []
    for m in sub_chain.masks:
        lifted = gen
        for pos, orig in enumerate(embedding):
            if (m >> pos) & 1:
                lifted |= 1 << orig
        out.append(lifted)
    return FilterChain(rs, tuple(out))


def indecomposable_histogram(rs: RootSystem, k: int) -> tuple:
    """Entry i: number of geometric chains with i top-rank indecomposables."""
    stats = chain_statistics(rs, k)
    n = rs.n
    out = [0] * (n + 1)
    for (i, _), c in stats.items():
        out[i] += c
    return tuple(out)


def chains_to_json(chains) -> list:
    return [chain.root_indices() for chain in chains]
