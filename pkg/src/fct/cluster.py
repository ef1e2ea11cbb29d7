"""Generalised cluster complex from coloured almost positive roots.

Vertices are the n uncoloured negative simple roots together with k
coloured copies of every positive root.  Compatibility is the symmetric
relation generated from one base rule (a negative simple root is
compatible with a coloured root exactly when the simple root avoids its
support) by the coloured rotation: two vertices are compatible if and
only if their simultaneous rotations are.  Faces of the complex are the
pairwise compatible subsets, so they are exactly the cliques of the
compatibility graph.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import kernels, weyl
from .errors import InternalInvariantError, UsageError
from .poly import BivarPoly, require_f_support
from .rootsys import RootSystem, support


def _part_product(rs: RootSystem, sign: int, flip: bool) -> "weyl.GroupElement":
    """Product of the commuting simple reflections on one side of the
    diagram bipartition."""
    want = -sign if flip else sign
    w = weyl.identity(rs)
    for i in range(rs.n):
        if rs.bipartition[i] == want:
            w = weyl.compose(w, weyl.simple_reflection(rs, i))
    return w


def half_rotation(rs: RootSystem, sign: int, v: int, flip: bool = False) -> int:
    """One involution of the almost positive roots.

    Vertices are encoded as signed integers: a nonnegative value is a
    positive root index, -(i+1) stands for the negative of the i-th
    simple root.  The map fixes the negative simple roots on the side
    opposite to ``sign`` and acts by the product of the simple
    reflections on the ``sign`` side everywhere else.
    """
    if sign not in (1, -1):
        raise UsageError("sign must be +1 or -1")
    w = _part_product(rs, sign, flip)
    if v < 0:
        i = -v - 1
        side = -rs.bipartition[i] if flip else rs.bipartition[i]
        if side != sign:
            return v
        image = tuple(-x for x in w.apply_root(rs.positive_roots[i]))
    else:
        image = w.apply_root(rs.positive_roots[v])
    if image in rs.root_index:
        return rs.root_index[image]
    neg = tuple(-x for x in image)
    idx = rs.root_index.get(neg)
    if idx is None or idx >= rs.n:
        raise InternalInvariantError("rotation left the almost positive roots")
    return -(idx + 1)


def full_rotation(rs: RootSystem, v: int, flip: bool = False) -> int:
    """The composite of both half rotations, negatives-first order."""
    return half_rotation(rs, -1, half_rotation(rs, 1, v, flip), flip)


def vertex_count(rs: RootSystem, k: int) -> int:
    return rs.n + k * len(rs.positive_roots)


def vertex_name(rs: RootSystem, k: int, v: int) -> str:
    if v < rs.n:
        return f"-s{v}"
    r, c = divmod(v - rs.n, k)
    return f"r{r}({c + 1})"


@lru_cache(maxsize=None)
def colored_rotation(rs: RootSystem, k: int, flip: bool = False) -> tuple:
    """Permutation table of the rotation on all coloured vertices.

    Vertex layout: 0..n-1 are the negative simple roots, then each
    positive root contributes k consecutive vertices coloured 1..k in
    root-index order.  A coloured root below colour k just gains a
    colour; at colour k (and at negative simples) the uncoloured full
    rotation is applied and the image enters at colour 1 when positive.
    """
    if k < 1:
        raise UsageError("k must be a positive integer")
    n = rs.n

    def lift(u: int) -> int:
        return n + u * k if u >= 0 else -u - 1

    out = []
    for v in range(vertex_count(rs, k)):
        if v < n:
            out.append(lift(full_rotation(rs, -(v + 1), flip)))
        else:
            r, c = divmod(v - n, k)
            if c + 1 < k:
                out.append(v + 1)
            else:
                out.append(lift(full_rotation(rs, r, flip)))
    image = sorted(out)
    if image != list(range(len(out))):
        raise InternalInvariantError("coloured rotation is not a bijection")
    return tuple(out)


def _vertex_root(rs: RootSystem, k: int, v: int) -> int:
    """Signed encoding of a vertex's underlying almost positive root."""
    if v < rs.n:
        return -(v + 1)
    return (v - rs.n) // k


def compatible(rs: RootSystem, k: int, u: int, v: int, flip: bool = False) -> bool:
    """Compatibility of two distinct vertices.

    Rotates both vertices together until either becomes a negative
    simple root, then applies the support rule.  The orbit bound
    k(h+2)+k guards against a wrong rotation table.
    """
    if u == v:
        raise UsageError("compatibility is only defined for distinct vertices")
    rot = colored_rotation(rs, k, flip)
    bound = k * (rs.coxeter_number + 2) + k + 1
    for _ in range(bound):
        if u < rs.n or v < rs.n:
            if u < rs.n and v < rs.n:
                return True
            neg, other = (u, v) if u < rs.n else (v, u)
            beta = rs.positive_roots[(other - rs.n) // k]
            return neg not in support(rs, beta)
        u, v = rot[u], rot[v]
    raise InternalInvariantError("rotation orbit never reached a negative simple root")


@lru_cache(maxsize=None)
def compat_masks(rs: RootSystem, k: int, flip: bool = False) -> tuple:
    """Adjacency bitmasks of the compatibility graph."""
    nv = vertex_count(rs, k)
    masks = [0] * nv
    for u in range(nv):
        for v in range(u + 1, nv):
            if compatible(rs, k, u, v, flip):
                masks[u] |= 1 << v
                masks[v] |= 1 << u
    return tuple(masks)


@dataclass(frozen=True, eq=False)
class ClusterComplex:
    """Face census of the complex, with vertices kept as indices."""

    rs: RootSystem
    k: int
    counts: dict
    maximal_sizes: dict

    @property
    def facet_count(self) -> int:
        return self.maximal_sizes.get(self.rs.n, 0)

    def face_count(self) -> int:
        return sum(self.counts.values())


@lru_cache(maxsize=None)
def build_complex(rs: RootSystem, k: int, flip: bool = False) -> ClusterComplex:
    """Census of all faces, grouped by (coloured positives, negatives)."""
    if k < 1:
        raise UsageError("k must be a positive integer")
    masks = compat_masks(rs, k, flip)
    counts, max_hist = kernels.clique_census(masks, len(masks), rs.n)
    if set(max_hist) - {rs.n}:
        raise InternalInvariantError(
            f"complex is not pure: maximal face sizes {sorted(max_hist)}"
        )
    return ClusterComplex(rs, k, counts, max_hist)


def enumerate_faces(rs: RootSystem, k: int) -> tuple:
    """All faces as sorted vertex tuples, lexicographically ordered."""
    masks = compat_masks(rs, k)
    nv = len(masks)
    out = []

    def visit(face, ext, start):
        out.append(face)
        for v in range(start, nv):
            if (ext >> v) & 1:
                visit(face + (v,), ext & masks[v], v + 1)

    visit((), (1 << nv) - 1 if nv else 0, 0)
    return tuple(out)


@lru_cache(maxsize=None)
def f_triangle(rs: RootSystem, k: int, flip: bool = False) -> BivarPoly:
    """Face counts by (coloured positive roots, negative simple roots)."""
    cx = build_complex(rs, k, flip)
    out = BivarPoly({(l, m): c for (l, m), c in cx.counts.items()})
    require_f_support(out, rs.n)
    return out


def h_vector(rs: RootSystem, k: int) -> tuple:
    """Coefficients h_0..h_n with sum h_i x^(n-i) = sum f_lm (x-1)^(n-l-m)."""
    n = rs.n
    f = f_triangle(rs, k)
    acc = [0] * (n + 1)
    for (l, m), c in f.coeffs.items():
        shifted = _x_minus_one_power(n - l - m)
        for d, b in enumerate(shifted):
            acc[d] += c * b
    return tuple(acc[n - i] for i in range(n + 1))


def positive_h_vector(rs: RootSystem, k: int) -> tuple:
    """Same expansion restricted to faces without negative simple roots."""
    n = rs.n
    f = f_triangle(rs, k)
    acc = [0] * (n + 1)
    for (l, m), c in f.coeffs.items():
        if m:
            continue
        shifted = _x_minus_one_power(n - l)
        for d, b in enumerate(shifted):
            acc[d] += c * b
    return tuple(acc[n - i] for i in range(n + 1))


def positive_h_poly(rs: RootSystem, k: int) -> BivarPoly:
    """The polynomial sum_i h+_i x^(n-i), carried in the x variable."""
    hp = positive_h_vector(rs, k)
    n = rs.n
    return BivarPoly({(n - i, 0): hi for i, hi in enumerate(hp) if hi})


def _x_minus_one_power(e: int) -> list:
    """Ascending coefficients of (x-1)^e."""
    out = [1]
    for _ in range(e):
        out = [
            (out[d - 1] if d else 0) - (out[d] if d < len(out) else 0)
            for d in range(len(out) + 1)
        ]
    return out


def fnumbers_json(rs: RootSystem, k: int) -> dict:
    f = f_triangle(rs, k)
    return {"f": [[l, m, c] for (l, m), c in sorted(f.coeffs.items())]}
