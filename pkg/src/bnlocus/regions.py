"""Region algebra for the slope plane: exact membership and boundaries.

Implements the pentagon of nontrivial problems, the low-slope trapezia BGN
and M, their images under the shift maps T and their duality reflections U,
the assembled existence region (boundary ``f``), the Teixidor parallelogram
region (boundary ``t``) and the hyperelliptic region (boundary ``h``).

All memberships follow the strict/non-strict inequalities of the source
criteria exactly, including the isolated excluded corner points.  Everything
is a pure function of immutable values; region data is cached per genus.
"""
from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cached_property, lru_cache

from .arith import (
    BNPoint,
    Stability,
    _as_point,
    check_genus,
    format_rat,
    line_degree_bound_int,
    line_degree_bound_strict,
    rho_tilde,
    serre_dual_point,
)


class BmnoMode(Enum):
    """Boundary-inclusion regime for the assembled existence region.

    STABLE keeps every exclusion forced on an arbitrary curve;
    NON_HYPERELLIPTIC restores the right-hand tile boundaries;
    SEMISTABLE includes the whole upper boundary plus the threshold columns.
    """

    STABLE = "stable"
    NON_HYPERELLIPTIC = "nonhyperelliptic"
    SEMISTABLE = "semistable"


# ---------------------------------------------------------------------------
# piecewise-linear boundary functions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Piece:
    """One linear piece lo..hi of a boundary function.

    Endpoint ownership is explicit: the duality-reflected half of the
    assembled boundary is right-open/left-closed, the directly constructed
    half left-open/right-closed, so a single convention cannot serve both.
    """

    lo: Fraction
    hi: Fraction
    slope: Fraction
    intercept: Fraction
    include_lo: bool = False
    include_hi: bool = True

    def contains_x(self, mu: Fraction) -> bool:
        if mu < self.lo or mu > self.hi:
            return False
        if mu == self.lo:
            return self.include_lo
        if mu == self.hi:
            return self.include_hi
        return True

    def value_at(self, mu) -> Fraction:
        return self.slope * Fraction(mu) + self.intercept


@dataclass(frozen=True)
class BoundaryFn:
    """Piecewise-linear function whose pieces exactly tile an open interval."""

    pieces: tuple[Piece, ...]
    domain_lo: Fraction
    domain_hi: Fraction

    def __post_init__(self):
        ps = self.pieces
        if not ps:
            raise ValueError("boundary function needs at least one piece")
        if ps[0].lo != self.domain_lo or ps[-1].hi != self.domain_hi:
            raise ValueError("pieces do not span the stated domain")
        if ps[0].include_lo or ps[-1].include_hi:
            raise ValueError("domain is open; end pieces must not own endpoints")
        for a, b in zip(ps, ps[1:]):
            if a.hi != b.lo:
                raise ValueError(f"gap between pieces at {a.hi} vs {b.lo}")
            if a.include_hi == b.include_lo:
                raise ValueError(f"shared abscissa {a.hi} owned {'twice' if a.include_hi else 'by no piece'}")

    @cached_property
    def _los(self):
        return [p.lo for p in self.pieces]

    def piece_at(self, mu) -> Piece:
        mu = Fraction(mu)
        if not (self.domain_lo < mu < self.domain_hi):
            raise ValueError(f"{mu} outside domain ({self.domain_lo}, {self.domain_hi})")
        i = bisect_right(self._los, mu) - 1
        for j in (i, i + 1, i - 1):
            if 0 <= j < len(self.pieces) and self.pieces[j].contains_x(mu):
                return self.pieces[j]
        raise AssertionError(f"tiling failure at {mu}")

    def __call__(self, mu) -> Fraction:
        mu = Fraction(mu)
        return self.piece_at(mu).value_at(mu)

    def breakpoints(self) -> list[Fraction]:
        """All piece endpoints interior to the domain."""
        xs = {p.lo for p in self.pieces} | {p.hi for p in self.pieces}
        return sorted(x for x in xs if self.domain_lo < x < self.domain_hi)


def _seesaw_left_pieces(g: int) -> list[Piece]:
    """Upper boundary of the assembled region on (0, g-1].

    The assembly walks slope-1 tiles rightwards, switching to s+1 sections
    whenever the rank-one existence threshold for s+1 sections is reached;
    the final tile before each switch is the reflected-BGN triangle whose
    top has the steeper slope (threshold - s)/g.
    """
    pieces: list[Piece] = []
    s = 1
    while line_degree_bound_int(g, s) < g - 1:
        a = line_degree_bound_int(g, s)
        b = line_degree_bound_int(g, s + 1)
        # BGN-shaped tile over (a, a+1], top through (a+1, s) with slope s/g
        pieces.append(Piece(Fraction(a), Fraction(a + 1), Fraction(s, g), s - Fraction(s, g) * (a + 1)))
        if b <= g - 1:
            for dp in range(a, b - 2):
                pieces.append(Piece(Fraction(dp + 1), Fraction(dp + 2), Fraction(s, g), s - Fraction(s, g) * (dp + 1)))
            # replacement tile over (b-1, b], top through (b-1, s), slope (b-s)/g
            pieces.append(Piece(Fraction(b - 1), Fraction(b), Fraction(b - s, g), s - Fraction(b - s, g) * (b - 1)))
            s += 1
        else:
            for dp in range(a, g - 2):
                pieces.append(Piece(Fraction(dp + 1), Fraction(dp + 2), Fraction(s, g), s - Fraction(s, g) * (dp + 1)))
            break
    return pieces


@lru_cache(maxsize=None)
def bmno_boundary(g: int) -> BoundaryFn:
    """Seesaw upper boundary of the assembled existence region on (0, 2g-2).

    Built directly on (0, g-1]; the (g-1, 2g-2) part is the image of the
    graph under the duality reflection, which turns the left-open pieces
    into right-open ones.
    """
    check_genus(g, 3)
    left = _seesaw_left_pieces(g)
    out = list(left)
    first = True
    for p in reversed(left):
        # graph image of lam = m*mu + c under (mu, lam) -> (2g-2-mu, lam+g-1-mu)
        m, c = p.slope, p.intercept
        out.append(
            Piece(
                2 * (g - 1) - p.hi,
                2 * (g - 1) - p.lo,
                1 - m,
                m * (2 * g - 2) + c - (g - 1),
                include_lo=not first,
                include_hi=False,
            )
        )
        first = False
    return BoundaryFn(tuple(out), Fraction(0), Fraction(2 * g - 2))


@lru_cache(maxsize=None)
def teixidor_boundary(g: int) -> BoundaryFn:
    """Continuous non-decreasing boundary of the parallelogram region.

    Alternates unit-slope ramps over (D(s), D(s)+1] and plateaus at height s,
    where D is the strict rank-one threshold; tiles (0, 2g-2).
    """
    check_genus(g, 3)
    top = Fraction(2 * g - 2)
    pieces: list[Piece] = []
    s = 1
    while line_degree_bound_strict(g, s) < 2 * g - 2:
        r0 = Fraction(line_degree_bound_strict(g, s))
        r1 = min(r0 + 1, top)
        pieces.append(Piece(r0, r1, Fraction(1), s - 1 - r0))
        nxt = Fraction(line_degree_bound_strict(g, s + 1))
        if nxt > r1:
            pieces.append(Piece(r1, min(nxt, top), Fraction(0), Fraction(s)))
        s += 1
    last = pieces[-1]
    pieces[-1] = Piece(last.lo, last.hi, last.slope, last.intercept, last.include_lo, include_hi=False)
    return BoundaryFn(tuple(pieces), Fraction(0), top)


@lru_cache(maxsize=None)
def hyper_boundary(g: int) -> BoundaryFn:
    """Upper boundary of the hyperelliptic region: (s/g)(mu-2s+1)+s on (2s-2, 2s]."""
    check_genus(g, 3)
    pieces = [
        Piece(Fraction(2 * s - 2), Fraction(2 * s), Fraction(s, g), s - Fraction(s, g) * (2 * s - 1))
        for s in range(1, g)
    ]
    last = pieces[-1]
    pieces[-1] = Piece(last.lo, last.hi, last.slope, last.intercept, last.include_lo, include_hi=False)
    return BoundaryFn(tuple(pieces), Fraction(0), Fraction(2 * g - 2))


# ---------------------------------------------------------------------------
# elementary regions and shift maps
# ---------------------------------------------------------------------------


def in_pentagon(g: int, p) -> bool:
    """Pentagon of nontrivial problems: mu < lam+g-1, mu >= 2 lam-2,
    0 <= mu <= 2g-2, lam > 0."""
    check_genus(g)
    mu, lam = _as_point(p)
    return mu < lam + g - 1 and mu >= 2 * lam - 2 and 0 <= mu <= 2 * g - 2 and lam > 0


def in_half_pentagon(g: int, p) -> bool:
    """Left half of the pentagon (slope at most g-1), the duality fundamental domain."""
    p = _as_point(p)
    return in_pentagon(g, p) and p.mu <= g - 1


def _trapezium_top(g: int, mu: Fraction) -> Fraction:
    return Fraction(mu + g - 1, g)


def in_bgn(g: int, p) -> bool:
    """Slope-(0,1] trapezium 0 < lam <= (mu+g-1)/g minus its (1,1) corner."""
    check_genus(g, 3)
    mu, lam = _as_point(p)
    if not (0 < mu <= 1 and 0 < lam <= _trapezium_top(g, mu)):
        return False
    return not (mu == 1 and lam == 1)


def in_m(g: int, p) -> bool:
    """Slope-(1,2) trapezium plus the slope-2 sliver {(2, lam): 0 < lam < 1}."""
    check_genus(g, 3)
    mu, lam = _as_point(p)
    if 1 < mu < 2 and 0 < lam <= _trapezium_top(g, mu):
        return True
    return mu == 2 and 0 < lam < 1


def apply_t(d_shift: int, s: int, p) -> BNPoint:
    """Shift map (mu, lam) -> (mu + d_shift, s*lam)."""
    if s < 1:
        raise ValueError(f"section multiplier must be >= 1, got {s}")
    mu, lam = _as_point(p)
    return BNPoint(mu + d_shift, s * lam)


def apply_u(g: int, d_shift: int, s: int, p) -> BNPoint:
    """Duality reflection of the shift map: sigma composed with T."""
    check_genus(g)
    return serre_dual_point(g, apply_t(d_shift, s, p))


def in_translated_bgn(g: int, d_shift: int, s: int, p) -> bool:
    """Image of the BGN trapezium under T: d' < mu <= d'+1,
    0 < lam <= (s/g)(mu-d'-1)+s, minus the corner (d'+1, s)."""
    check_genus(g, 3)
    if s < 1:
        raise ValueError(f"section multiplier must be >= 1, got {s}")
    mu, lam = _as_point(p)
    if not (d_shift < mu <= d_shift + 1):
        return False
    if not (0 < lam <= Fraction(s, g) * (mu - d_shift - 1) + s):
        return False
    return not (mu == d_shift + 1 and lam == s)


def in_translated_m(g: int, d_shift: int, s: int, p) -> bool:
    """Image of the M trapezium under T: open strip d'+1 < mu < d'+2 under
    the same top line, plus the sliver {(d'+2, lam): 0 < lam < s}."""
    check_genus(g, 3)
    if s < 1:
        raise ValueError(f"section multiplier must be >= 1, got {s}")
    mu, lam = _as_point(p)
    if d_shift + 1 < mu < d_shift + 2 and 0 < lam <= Fraction(s, g) * (mu - d_shift - 1) + s:
        return True
    return mu == d_shift + 2 and 0 < lam < s


def u_params(g: int, d_shift: int, s: int) -> tuple[int, int]:
    """Anchor (d1, s1) of the reflected tile: the image of (1, 1) under U."""
    return 2 * g - 3 - d_shift, s + g - 2 - d_shift


def in_u_bgn_half(g: int, d_shift: int, s: int, p) -> bool:
    """Reflected BGN tile clipped to the left half: d1 <= mu < d1+1,
    0 < lam <= (1-s/g)(mu-d1)+s1, minus the anchor point (d1, s1)."""
    check_genus(g, 3)
    if s < 1:
        raise ValueError(f"section multiplier must be >= 1, got {s}")
    d1, s1 = u_params(g, d_shift, s)
    mu, lam = _as_point(p)
    if not (d1 <= mu < d1 + 1):
        return False
    if not (0 < lam <= (1 - Fraction(s, g)) * (mu - d1) + s1):
        return False
    return not (mu == d1 and lam == s1)


def in_u_m_half(g: int, d_shift: int, s: int, p) -> bool:
    """Reflected M tile clipped to the left half: open strip d1-1 < mu < d1
    under the same top, plus the sliver {(d1-1, lam): 0 < lam < s1-1}."""
    check_genus(g, 3)
    if s < 1:
        raise ValueError(f"section multiplier must be >= 1, got {s}")
    d1, s1 = u_params(g, d_shift, s)
    mu, lam = _as_point(p)
    if d1 - 1 < mu < d1 and 0 < lam <= (1 - Fraction(s, g)) * (mu - d1) + s1:
        return True
    return mu == d1 - 1 and 0 < lam < s1 - 1


# ---------------------------------------------------------------------------
# the assembled existence region
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Tile:
    """One tile of the assembled region, with its exact boundary semantics.

    kind 'bgn': (lo, lo+1] under the top line, corner (lo+1, s) removed.
    kind 'm':   open (lo, lo+1) under the top line, plus sliver at lo+1
                with lam < s.
    kind 'u':   [lo, lo+1) under the top line, anchor (lo, s) removed,
                plus sliver at lo+1 with lam < s.
    """

    kind: str
    lo: int
    s: int
    slope: Fraction
    intercept: Fraction

    def top(self, mu) -> Fraction:
        return self.slope * Fraction(mu) + self.intercept

    def contains(self, mu: Fraction, lam: Fraction) -> bool:
        if lam <= 0:
            return False
        if self.kind == "bgn":
            if not (self.lo < mu <= self.lo + 1):
                return False
            if lam > self.top(mu):
                return False
            return not (mu == self.lo + 1 and lam == self.s)
        if self.kind == "m":
            if self.lo < mu < self.lo + 1 and lam <= self.top(mu):
                return True
            return mu == self.lo + 1 and lam < self.s
        # reflected tile
        if self.lo <= mu < self.lo + 1 and lam <= self.top(mu) and not (mu == self.lo and lam == self.s):
            return True
        return mu == self.lo + 1 and lam < self.s


@dataclass(frozen=True)
class ExcludedBoundary:
    """Explicit record of one exclusion carried by the assembled region."""

    description: str
    citation: str


@lru_cache(maxsize=None)
def bmno_tiles(g: int) -> tuple[Tile, ...]:
    """The finite tile list whose union (with its reflection) is the region.

    Mirrors :func:`_seesaw_left_pieces` tile for tile, but keeps the exact
    per-tile boundary ownership instead of just the top line.
    """
    check_genus(g, 3)
    tiles: list[Tile] = []
    s = 1
    while line_degree_bound_int(g, s) < g - 1:
        a = line_degree_bound_int(g, s)
        b = line_degree_bound_int(g, s + 1)
        tiles.append(Tile("bgn", a, s, Fraction(s, g), s - Fraction(s, g) * (a + 1)))
        if b <= g - 1:
            for dp in range(a, b - 2):
                tiles.append(Tile("m", dp + 1, s, Fraction(s, g), s - Fraction(s, g) * (dp + 1)))
            tiles.append(Tile("u", b - 1, s, Fraction(b - s, g), s - Fraction(b - s, g) * (b - 1)))
            s += 1
        else:
            for dp in range(a, g - 2):
                tiles.append(Tile("m", dp + 1, s, Fraction(s, g), s - Fraction(s, g) * (dp + 1)))
            break
    return tuple(tiles)


def bmno_exclusions(g: int) -> tuple[ExcludedBoundary, ...]:
    """Human-readable inventory of what the stable-mode region leaves out."""
    check_genus(g, 3)
    out = [
        ExcludedBoundary("the slope-0 column and its dual slope-(2g-2) column",
                         "only the trivial and canonical bundles are stable there"),
        ExcludedBoundary("the corner (1,1) and every shifted corner (threshold+1, s)",
                         "the rank-one corner point admits no higher-rank stable bundle"),
    ]
    s = 1
    while line_degree_bound_int(g, s) < g - 1:
        a = line_degree_bound_int(g, s)
        out.append(
            ExcludedBoundary(
                f"integer slopes m with {a} < m <= next threshold at heights lam >= {s}",
                "tile boundaries not covered by the construction; open for arbitrary curves",
            )
        )
        s += 1
    return tuple(out)


def _in_tiles_half(g: int, mu: Fraction, lam: Fraction) -> bool:
    if not (0 < mu <= g - 1) or lam <= 0:
        return False
    for tile in bmno_tiles(g):
        if tile.lo > mu:
            break
        if tile.contains(mu, lam):
            return True
    return False


def _threshold_column(g: int, mu: Fraction) -> int | None:
    """Return s when mu equals the integer rank-one threshold for s sections."""
    if mu != int(mu):
        return None
    s = 1
    while True:
        a = line_degree_bound_int(g, s)
        if a > g - 1:
            return None
        if a == mu:
            return s
        if a > mu:
            return None
        s += 1


def in_bmno(g: int, p, mode: BmnoMode = BmnoMode.STABLE) -> bool:
    """Membership in the assembled existence region.

    STABLE mode is the explicit tile union (with reflection) minus every
    exclusion forced on an arbitrary curve; for genus 3 the isolated point
    (2, 1) is additionally known to belong.  NON_HYPERELLIPTIC restores the
    right-hand boundaries: everything under the seesaw except the threshold
    columns above (s-1)(1+1/g) and the shifted corners (threshold+1, s).
    SEMISTABLE includes the whole seesaw graph plus the threshold columns
    up to height s.
    """
    check_genus(g, 3)
    mode = BmnoMode(mode)
    p = _as_point(p)
    sp = serre_dual_point(g, p)
    if mode is BmnoMode.STABLE:
        if _in_tiles_half(g, p.mu, p.lam) or _in_tiles_half(g, sp.mu, sp.lam):
            return True
        return g == 3 and (p.mu, p.lam) == (2, 1)
    # the region is (left polygon) union its reflection; the reflected part is
    # bounded below by the image of lam > 0, so test the left-half formula at
    # the point and at its dual rather than the seesaw over the whole range
    f = bmno_boundary(g)

    def left_half(q: BNPoint) -> bool:
        if not (0 <= q.mu <= g - 1 and 0 < q.lam):
            return False
        if mode is BmnoMode.SEMISTABLE:
            s = _threshold_column(g, q.mu)
            if s is not None and q.lam <= s:
                return True
        if q.mu == 0 or q.lam > f(q.mu):
            return False
        if mode is BmnoMode.SEMISTABLE:
            return True
        s = _threshold_column(g, q.mu)
        if s is not None and q.lam > (s - 1) * (1 + Fraction(1, g)):
            return False
        if q.lam == int(q.lam):
            sc = _threshold_column(g, q.mu - 1)
            if sc is not None and q.lam == sc:
                return False
        return True

    return left_half(p) or left_half(sp)


# ---------------------------------------------------------------------------
# Teixidor parallelogram region
# ---------------------------------------------------------------------------


def _floor(x: Fraction) -> int:
    return math.floor(x)


def in_teixidor(g: int, p, stability: Stability = Stability.SEMISTABLE) -> bool:
    """Parallelogram-region membership.

    A point is in when the normalized count is nonnegative at the integer
    anchor selected by the fractional parts (ceiling anchor when the lambda
    fraction is nonzero and at most the mu fraction; floor/ceiling when it
    exceeds it; pure floor for integral lambda).  In stable mode, integral
    points whose left neighbour and dual left neighbour both have negative
    count are excluded; applying the exclusion on both sides of the duality
    keeps the stable region reflection-symmetric, which is legitimate since
    duality transports existence.
    """
    check_genus(g, 3)
    stability = Stability(stability)
    mu, lam = _as_point(p)
    if lam <= 0:
        raise ValueError(f"requires lam > 0, got {lam}")
    fl = lam - _floor(lam)
    fm = mu - _floor(mu)
    if fl == 0:
        ok = rho_tilde(g, BNPoint(_floor(mu), lam)) >= 0
    elif fl <= fm:
        ok = rho_tilde(g, BNPoint(_floor(mu) + 1, _floor(lam) + 1)) >= 0
    else:
        ok = rho_tilde(g, BNPoint(_floor(mu), _floor(lam) + 1)) >= 0
    if not ok:
        return False
    if stability is Stability.STABLE and fl == 0 and fm == 0:
        here = rho_tilde(g, BNPoint(mu - 1, lam)) < 0
        dual = serre_dual_point(g, BNPoint(mu, lam))
        there = rho_tilde(g, BNPoint(dual.mu - 1, dual.lam)) < 0
        if here and there:
            return False
    return True


# ---------------------------------------------------------------------------
# hyperelliptic region and strips
# ---------------------------------------------------------------------------


def in_bmno_h(g: int, p) -> bool:
    """Hyperelliptic region: union over 1 <= s <= g-1 of the shifted
    (BGN u M u {(2,1)}) tiles, clipped to the pentagon; reflection-symmetric."""
    check_genus(g, 3)
    mu, lam = _as_point(p)
    if not in_pentagon(g, p):
        return False
    if mu <= 0 or mu > 2 * g - 2:
        return False
    s = max(1, math.ceil(Fraction(mu, 2)))  # slope window (2s-2, 2s]
    if s > g - 1:
        return False
    if in_translated_bgn(g, 2 * s - 2, s, p) or in_translated_m(g, 2 * s - 2, s, p):
        return True
    return mu == 2 * s and lam == s  # image of the known point (2, 1)


def in_hyper_strips(g: int, p) -> bool:
    """Fully-settled hyperelliptic strips: for 1 <= s <= g-1 the band
    2s-1 < mu <= 2s with lam <= s, and its dual 2s-2 <= mu < 2s-1 with
    lam <= mu - s + 1."""
    check_genus(g, 3)
    mu, lam = _as_point(p)
    if lam <= 0:
        return False
    for s in range(1, g):
        if 2 * s - 1 < mu <= 2 * s and lam <= s:
            return True
        if 2 * s - 2 <= mu < 2 * s - 1 and lam <= mu - s + 1:
            return True
    return False


# ---------------------------------------------------------------------------
# polylines for plotting and serialization
# ---------------------------------------------------------------------------


class RegionKind(Enum):
    PENTAGON = "p"
    HALF = "r"
    BGN = "bgn"
    MERCAT = "m"
    T_BGN = "tbgn"
    T_M = "tm"
    BMNO = "bmno"
    TEIXIDOR = "teixidor"
    BMNO_H = "bmnoh"
    BN_CURVE = "bncurve"


@dataclass(frozen=True)
class RegionId:
    kind: RegionKind
    d_shift: int | None = None
    s: int | None = None

    def __post_init__(self):
        if self.kind in (RegionKind.T_BGN, RegionKind.T_M):
            if self.d_shift is None or self.s is None or self.s < 1:
                raise ValueError("shifted regions need d_shift and s >= 1")
        elif self.d_shift is not None or self.s is not None:
            raise ValueError(f"{self.kind.value} takes no parameters")

    def token(self) -> str:
        if self.kind in (RegionKind.T_BGN, RegionKind.T_M):
            return f"{self.kind.value}:{self.d_shift}:{self.s}"
        return self.kind.value

    def sort_key(self):
        return (self.kind.value, self.d_shift or 0, self.s or 0)


def parse_region_id(token: str) -> RegionId:
    token = token.strip().lower()
    if ":" in token:
        parts = token.split(":")
        if len(parts) != 3:
            raise ValueError(f"bad region token {token!r}; expected kind:d:s")
        kind = RegionKind(parts[0])
        return RegionId(kind, int(parts[1]), int(parts[2]))
    return RegionId(RegionKind(token))


@dataclass(frozen=True)
class PolySegment:
    start: BNPoint
    end: BNPoint
    include_start: bool
    include_end: bool
    include_interior: bool = True

    def to_json_dict(self) -> dict:
        return {
            "from": [format_rat(self.start.mu), format_rat(self.start.lam)],
            "to": [format_rat(self.end.mu), format_rat(self.end.lam)],
            "include_from": self.include_start,
            "include_to": self.include_end,
        }


def _seg(a, b, inc_a=True, inc_b=True, interior=True) -> PolySegment:
    return PolySegment(_as_point(a), _as_point(b), inc_a, inc_b, interior)


def _graph_segments(fn: BoundaryFn) -> list[PolySegment]:
    return [
        _seg((p.lo, p.value_at(p.lo)), (p.hi, p.value_at(p.hi)), p.include_lo, p.include_hi)
        for p in fn.pieces
    ]


def _pentagon_segments(g: int) -> list[PolySegment]:
    gg = Fraction(2 * g - 2)
    return [
        _seg((0, 0), (gg, 0), False, False, interior=False),          # lam > 0
        _seg((0, 0), (0, 1), False, True),                            # mu >= 0 edge
        _seg((0, 1), (gg, g), True, True),                            # Clifford edge
        _seg((gg, g), (gg, g - 1), True, True),                       # mu <= 2g-2 edge
        _seg((gg, g - 1), (g - 1, 0), False, False, interior=False),  # strict duality edge
    ]


def _half_segments(g: int) -> list[PolySegment]:
    top = Fraction(g + 1, 2)
    return [
        _seg((0, 0), (g - 1, 0), False, False, interior=False),
        _seg((0, 0), (0, 1), False, True),
        _seg((0, 1), (g - 1, top), True, True),
        _seg((g - 1, top), (g - 1, 0), True, False),
    ]


def _trapezium_segments(g: int, d_shift: int, s: int, kind: RegionKind) -> list[PolySegment]:
    lo_top = Fraction(s, g) * Fraction(0 - 1) + s  # top value at the left edge
    hi_top = Fraction(s, g) + s                    # top value at the right edge
    if kind in (RegionKind.BGN, RegionKind.T_BGN):
        a, b = Fraction(d_shift), Fraction(d_shift + 1)
        return [
            _seg((a, 0), (b, 0), False, False, interior=False),
            _seg((a, 0), (a, lo_top), False, False, interior=False),   # strict left edge
            _seg((a, lo_top), (b, s), False, False),                   # top; corner excluded
            _seg((b, s), (b, 0), False, False),                        # right edge below corner
        ]
    a, b = Fraction(d_shift + 1), Fraction(d_shift + 2)
    return [
        _seg((a, 0), (b, 0), False, False, interior=False),
        _seg((a, 0), (a, s), False, False, interior=False),
        _seg((a, s), (b, hi_top), False, False),
        _seg((b, hi_top), (b, s), False, False, interior=False),       # above the sliver
        _seg((b, s), (b, 0), False, False),                            # sliver
    ]


def boundary_polyline(g: int, region: RegionId) -> list[PolySegment]:
    """Exact-rational boundary segments of a region, with inclusion flags.

    The expected-dimension curve is not piecewise linear and is rejected;
    plots sample it separately.
    """
    check_genus(g, 3)
    k = region.kind
    if k is RegionKind.PENTAGON:
        return _pentagon_segments(g)
    if k is RegionKind.HALF:
        return _half_segments(g)
    if k is RegionKind.BGN:
        return _trapezium_segments(g, 0, 1, RegionKind.BGN)
    if k is RegionKind.MERCAT:
        return _trapezium_segments(g, 0, 1, RegionKind.MERCAT)
    if k is RegionKind.T_BGN:
        return _trapezium_segments(g, region.d_shift, region.s, RegionKind.T_BGN)
    if k is RegionKind.T_M:
        return _trapezium_segments(g, region.d_shift, region.s, RegionKind.T_M)
    if k is RegionKind.BMNO:
        return _graph_segments(bmno_boundary(g))
    if k is RegionKind.TEIXIDOR:
        return _graph_segments(teixidor_boundary(g))
    if k is RegionKind.BMNO_H:
        return _graph_segments(hyper_boundary(g))
    raise ValueError(f"no piecewise-linear boundary for region {region.token()!r}")


def polyline_json_dict(g: int, region: RegionId) -> dict:
    return {
        "region": region.token(),
        "genus": g,
        "segments": [s.to_json_dict() for s in boundary_polyline(g, region)],
    }


def region_membership(g: int, region: RegionId, p, *, mode: BmnoMode = BmnoMode.STABLE,
                      stability: Stability = Stability.SEMISTABLE) -> bool:
    """Uniform membership dispatch used by the command-line frontend."""
    k = region.kind
    p = _as_point(p)
    if k is RegionKind.PENTAGON:
        return in_pentagon(g, p)
    if k is RegionKind.HALF:
        return in_half_pentagon(g, p)
    if k is RegionKind.BGN:
        return in_bgn(g, p)
    if k is RegionKind.MERCAT:
        return in_m(g, p)
    if k is RegionKind.T_BGN:
        return in_translated_bgn(g, region.d_shift, region.s, p)
    if k is RegionKind.T_M:
        return in_translated_m(g, region.d_shift, region.s, p)
    if k is RegionKind.BMNO:
        return in_bmno(g, p, mode)
    if k is RegionKind.TEIXIDOR:
        return in_teixidor(g, p, stability)
    if k is RegionKind.BMNO_H:
        return in_bmno_h(g, p)
    if k is RegionKind.BN_CURVE:
        return p.lam > 0 and rho_tilde(g, p) >= 0
    raise ValueError(f"unknown region {region.token()!r}")
