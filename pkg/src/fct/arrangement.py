"""Dominant regions of the k-Catalan arrangement, exactly.

A dominant point is encoded by the vector t of its pairings with the
simple roots, so the hyperplane at height i normal to a positive root
with coefficient vector c becomes c.t = i and the whole arrangement is
a finite list of integer linear constraints.  Every region question
(nonemptiness, walls, boundedness, disjointness) reduces to rational
linear feasibility, which is decided by Fourier-Motzkin elimination.
Strict inequalities carry a flag standing for a single symbolic
epsilon > 0; combining rows with positive multipliers keeps the flag
meaningful, so no floating point or perturbation constants appear.

Each geometric chain determines one region: a root at level m lies in
the open strip between heights m and m+1, or beyond height k when
m = k.  Floors and ceilings of a region are its walls of positive
colour, split by whether the origin sits on the far or near side.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import nonnesting
from .errors import InternalInvariantError, UsageError
from .nonnesting import FilterChain
from .poly import BivarPoly
from .rootsys import RootSystem

# A row (coeffs, rhs, strict) asserts coeffs.t > rhs when strict else >=.
Row = tuple


def _normalize(row: Row) -> Row:
    coeffs, rhs, strict = row
    g = 0
    for v in coeffs:
        g = gcd(g, v)
    g = gcd(g, rhs)
    if g > 1:
        coeffs = tuple(v // g for v in coeffs)
        rhs = rhs // g
    return (coeffs, rhs, strict)


def _dominate(rows) -> list:
    """Keep only the tightest bound per coefficient vector."""
    best = {}
    for coeffs, rhs, strict in rows:
        seen = best.get(coeffs)
        if seen is None or (rhs, strict) > seen:
            best[coeffs] = (rhs, strict)
    return [(c, r, s) for c, (r, s) in best.items()]


def _zero_row_ok(row: Row) -> bool:
    _, rhs, strict = row
    return rhs < 0 or (rhs == 0 and not strict)


def _eliminate(rows, j: int):
    """Project away variable j; returns None on a visible contradiction."""
    pos, neg, rest = [], [], []
    for row in rows:
        cj = row[0][j]
        if cj > 0:
            pos.append(row)
        elif cj < 0:
            neg.append(row)
        else:
            rest.append(row)
    out = rest
    for pc, pr, ps in pos:
        for nc, nr, ns in neg:
            mp, mn = -nc[j], pc[j]
            coeffs = tuple(mp * a + mn * b for a, b in zip(pc, nc))
            row = _normalize((coeffs, mp * pr + mn * nr, ps or ns))
            if not any(coeffs):
                if not _zero_row_ok(row):
                    return None
                continue
            out.append(row)
    return _dominate(out)


def feasible(rows, n: int) -> bool:
    rows = _dominate(_normalize(r) for r in rows)
    live = []
    for row in rows:
        if any(row[0]):
            live.append(row)
        elif not _zero_row_ok(row):
            return False
    rows = live
    for j in range(n):
        rows = _eliminate(rows, j)
        if rows is None:
            return False
    return all(_zero_row_ok(r) for r in rows)


def interior_point(rows, n: int):
    """A rational point satisfying every row, or None.

    Back-substitutes through the elimination tower, taking midpoints of
    the surviving open intervals so strict rows end up strictly
    satisfied.
    """
    tower = []
    cur = _dominate(_normalize(r) for r in rows)
    for j in range(n - 1, -1, -1):
        tower.append(cur)
        cur = _eliminate(cur, j)
        if cur is None:
            return None
    if not all(_zero_row_ok(r) for r in cur):
        return None
    point = [Fraction(0)] * n
    for j in range(n):
        system = tower.pop()
        lo = hi = None
        for coeffs, rhs, strict in system:
            cj = coeffs[j]
            if cj == 0:
                continue
            rest = sum(c * point[s] for s, c in enumerate(coeffs) if s != j)
            bound = (Fraction(rhs) - rest) / cj
            if cj > 0 and (lo is None or (bound, strict) > lo):
                lo = (bound, strict)
            if cj < 0 and (hi is None or (bound, not strict) < hi):
                hi = (bound, not strict)
        if lo is None and hi is None:
            val = Fraction(0)
        elif hi is None:
            val = lo[0] + 1
        elif lo is None:
            val = hi[0] - 1
        else:
            if lo[0] > hi[0] or (lo[0] == hi[0] and (lo[1] or not hi[1])):
                raise InternalInvariantError("empty interval after feasibility")
            val = (lo[0] + hi[0]) / 2 if lo[0] < hi[0] else lo[0]
        point[j] = val
    return tuple(point)


@dataclass(frozen=True, eq=False)
class Region:
    """Open dominant cell determined by the level of every positive root."""

    rs: RootSystem
    k: int
    levels: tuple

    def system(self) -> list:
        rows = []
        for r, root in enumerate(self.rs.positive_roots):
            m = self.levels[r]
            rows.append((root, m, True))
            if m < self.k:
                neg = tuple(-c for c in root)
                rows.append((neg, -(m + 1), True))
        return rows

    def constraint_for(self, r: int, colour: int) -> Row:
        root = self.rs.positive_roots[r]
        if colour == self.levels[r]:
            return (root, colour, True)
        if colour == self.levels[r] + 1 and colour <= self.k:
            return (tuple(-c for c in root), -colour, True)
        raise UsageError("hyperplane does not bound this region's strip")


def region_from_chain(chain: FilterChain) -> Region:
    region = Region(chain.rs, chain.k, chain.levels())
    if not feasible(region.system(), chain.rs.n):
        raise InternalInvariantError("chain produced an empty region")
    return region


def levels_of_point(rs: RootSystem, k: int, point) -> tuple:
    """Level vector of a point meeting no hyperplane of the arrangement."""
    out = []
    for root in rs.positive_roots:
        v = sum((c * x for c, x in zip(root, point)), Fraction(0))
        if v.denominator == 1 and 0 <= v <= k:
            raise UsageError("point lies on an arrangement hyperplane")
        out.append(min(k, v.numerator // v.denominator))
    return tuple(out)


def is_wall(region: Region, r: int, colour: int) -> bool:
    """Whether the closure of the region meets the hyperplane in a facet.

    The candidate's own strip constraint is replaced by the equality
    and every other constraint stays strict; a point of the resulting
    system is a relative-interior facet point, so existence is exactly
    the affine-dimension n-1 condition.
    """
    own = region.constraint_for(r, colour)
    root = region.rs.positive_roots[r]
    rows = [row for row in region.system() if row != own]
    rows.append((root, colour, False))
    rows.append((tuple(-c for c in root), -colour, False))
    return feasible(rows, region.rs.n)


def is_bounded(region: Region) -> bool:
    """Triviality of the recession cone, tested one direction at a time."""
    rs, k = region.rs, region.k
    cone = []
    for r, root in enumerate(rs.positive_roots):
        cone.append((root, 0, False))
        if region.levels[r] < k:
            cone.append((tuple(-c for c in root), 0, False))
    for j in range(rs.n):
        for sign in (1, -1):
            probe = tuple(sign if s == j else 0 for s in range(rs.n))
            if feasible(cone + [(probe, 1, False)], rs.n):
                return False
    return True


@dataclass(frozen=True)
class WallReport:
    walls: tuple
    floors: tuple
    ceilings: tuple
    bounded: bool

    def coloured_ceiling_count(self, colour: int) -> int:
        return sum(1 for _, i in self.ceilings if i == colour)


def wall_report(region: Region) -> WallReport:
    walls, floors, ceilings = [], [], []
    for r in range(len(region.rs.positive_roots)):
        m = region.levels[r]
        candidates = [m] if m == region.k else [m, m + 1]
        for colour in candidates:
            if not is_wall(region, r, colour):
                continue
            walls.append((r, colour))
            if colour == 0:
                continue
            if colour == m:
                floors.append((r, colour))
            else:
                ceilings.append((r, colour))
    return WallReport(
        tuple(walls), tuple(floors), tuple(ceilings), is_bounded(region)
    )


def regions_of(rs: RootSystem, k: int) -> tuple:
    return tuple(
        region_from_chain(chain) for chain in nonnesting.enumerate_chains(rs, k)
    )


def ceilings_poly(rs: RootSystem, k: int) -> BivarPoly:
    """Sum of x^(number of colour-k ceilings) over bounded dominant regions."""
    coeffs = {}
    for region in regions_of(rs, k):
        report = wall_report(region)
        if not report.bounded:
            continue
        d = report.coloured_ceiling_count(k)
        coeffs[(d, 0)] = coeffs.get((d, 0), 0) + 1
    return BivarPoly(coeffs)


def verify_phi(rs: RootSystem, k: int):
    """Check floors = rank-wise indecomposables for every chain.

    Returns (True, None) or (False, first counterexample) where the
    counterexample records the chain levels and both floor sets.
    """
    for chain in nonnesting.enumerate_chains(rs, k):
        region = region_from_chain(chain)
        floors = set(wall_report(region).floors)
        expected = {
            (r, i)
            for i in range(1, k + 1)
            for r in nonnesting.indecomposables(chain, i)
        }
        if floors != expected:
            return False, {
                "levels": region.levels,
                "floors": sorted(floors),
                "indecomposables": sorted(expected),
            }
    return True, None


def verify_disjoint(rs: RootSystem, k: int):
    """Feasibility, interior-point level recovery, and pairwise disjointness."""
    regions = regions_of(rs, k)
    for region in regions:
        point = interior_point(region.system(), rs.n)
        if point is None:
            return False, {"levels": region.levels, "reason": "empty region"}
        if levels_of_point(rs, k, point) != region.levels:
            return False, {"levels": region.levels, "reason": "level mismatch"}
    for a in range(len(regions)):
        for b in range(a + 1, len(regions)):
            joint = regions[a].system() + regions[b].system()
            if feasible(joint, rs.n):
                return False, {
                    "levels": regions[a].levels,
                    "other": regions[b].levels,
                    "reason": "overlap",
                }
    return True, None


def regions_json(rs: RootSystem, k: int) -> list:
    out = []
    for region in regions_of(rs, k):
        report = wall_report(region)
        out.append(
            {
                "levels": list(region.levels),
                "walls": [list(w) for w in report.walls],
                "floors": [list(w) for w in report.floors],
                "ceilings": [list(w) for w in report.ceilings],
                "bounded": report.bounded,
                "CL_k": report.coloured_ceiling_count(k),
            }
        )
    return out
