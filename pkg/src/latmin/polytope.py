"""Exact convex polytope kernel.

Polytopes are stored canonically by their extreme points (sorted rational
vertex tuples).  Full-dimensional polytopes also carry an exact facet
description with primitive integer outward normals, plus the boundary
triangulation produced by the incremental hull, which drives volume.
"""

from __future__ import annotations

import enum
import math
from fractions import Fraction
from itertools import combinations, product

from .core import (
    IncrementalRank,
    as_ratvec,
    determinant,
    nullspace_vector,
    primitive,
    rank_rational,
    rat_str,
    solve_linear,
    vdot,
    vsub,
)
from .errors import DimensionDeficient, DimensionMismatch, NotSymmetric


class PointLocation(enum.Enum):
    INTERIOR = "interior"
    BOUNDARY = "boundary"
    OUTSIDE = "outside"


class Polytope:
    """Immutable rational polytope, canonical V-representation.

    Build instances through :func:`convex_hull`; the constructor trusts its
    arguments.
    """

    __slots__ = ("ambient_dim", "vertices", "affine_dim", "_facets",
                 "_boundary_simplices", "_chart")

    def __init__(self, ambient_dim, vertices, affine_dim, facets=None,
                 boundary_simplices=None, chart=None):
        self.ambient_dim = ambient_dim
        self.vertices = vertices
        self.affine_dim = affine_dim
        self._facets = facets
        self._boundary_simplices = boundary_simplices
        # (base point, basis rows, inner polytope) for lower-dimensional bodies
        self._chart = chart

    @property
    def is_full_dimensional(self) -> bool:
        return self.affine_dim == self.ambient_dim

    @property
    def facets(self):
        if not self.is_full_dimensional:
            raise DimensionDeficient(
                f"affine dimension {self.affine_dim} < ambient {self.ambient_dim}")
        return self._facets

    def __eq__(self, other):
        return (isinstance(other, Polytope)
                and self.ambient_dim == other.ambient_dim
                and self.vertices == other.vertices)

    def __hash__(self):
        return hash((self.ambient_dim, self.vertices))

    def __repr__(self):
        return (f"Polytope(dim={self.ambient_dim}, affine_dim={self.affine_dim}, "
                f"vertices={len(self.vertices)})")

    def to_json(self) -> dict:
        return {
            "dim": self.ambient_dim,
            "vertices": [[rat_str(c) for c in v] for v in self.vertices],
        }


class SymmetricBody:
    """A full-dimensional polytope whose vertex set is closed under negation.

    Such a body automatically has the origin in its interior.
    """

    __slots__ = ("body",)

    def __init__(self, body: Polytope):
        if not body.is_full_dimensional:
            raise DimensionDeficient("symmetric bodies must be full-dimensional")
        vset = set(body.vertices)
        for v in body.vertices:
            if tuple(-c for c in v) not in vset:
                raise NotSymmetric(f"vertex {v} has no mirror image")
        self.body = body

    @property
    def ambient_dim(self) -> int:
        return self.body.ambient_dim

    def __eq__(self, other):
        return isinstance(other, SymmetricBody) and self.body == other.body

    def __hash__(self):
        return hash(("sym", self.body))

    def __repr__(self):
        return f"SymmetricBody({self.body!r})"

    def to_json(self) -> dict:
        return self.body.to_json()


# ---------------------------------------------------------------------------
# convex hull


def convex_hull(points, d: int) -> Polytope:
    """Canonical hull of rational points in R^d.

    Keeps exactly the extreme points; computes the affine dimension, and for
    full-dimensional input the facet halfspaces and a boundary triangulation.
    """
    if d < 1:
        raise DimensionMismatch("ambient dimension must be positive")
    pts = []
    for p in points:
        q = as_ratvec(p)
        if len(q) != d:
            raise DimensionMismatch(f"point of length {len(q)} in dimension {d}")
        pts.append(q)
    if not pts:
        raise DimensionMismatch("need at least one point")
    pts = sorted(set(pts))

    base = pts[0]
    tracker = IncrementalRank(d)
    basis_idx = []
    for i in range(1, len(pts)):
        if tracker.add(vsub(pts[i], base)):
            basis_idx.append(i)
            if tracker.rank == d:
                break
    k = tracker.rank

    if k == 0:
        return Polytope(d, (base,), 0)

    if k < d:
        basis_rows = [vsub(pts[i], base) for i in basis_idx]
        coords = []
        cols = list(zip(*basis_rows))  # d rows of length k
        for p in pts:
            c = solve_linear(cols, vsub(p, base))
            assert c is not None
            coords.append(c)
        inner = convex_hull(coords, k)
        inner_to_outer = {c: p for c, p in zip(coords, pts)}
        verts = tuple(sorted(inner_to_outer[c] for c in inner.vertices))
        return Polytope(d, verts, k, chart=(base, tuple(basis_rows), inner))

    facet_simplices = _hull_full_dim(pts, d)

    # merge triangulated pieces into geometric facets
    hyperplanes = {}
    for verts_idx, normal, offset in facet_simplices:
        hyperplanes[(normal, offset)] = None
    facet_list = sorted(hyperplanes.keys())

    # candidate hull points are those on at least one facet hyperplane
    vertices = []
    for p in pts:
        active = [a for (a, b) in facet_list if vdot(a, p) == b]
        if len(active) >= d and rank_rational(active) == d:
            vertices.append(p)
    vertices = tuple(sorted(vertices))

    triangulation = tuple(tuple(pts[i] for i in verts_idx)
                          for verts_idx, _, _ in facet_simplices)
    return Polytope(d, vertices, d, facets=tuple(facet_list),
                    boundary_simplices=triangulation)


def _facet_hyperplane(points, ref, d):
    """Primitive integer outward normal and offset through d affinely
    independent points, oriented away from the interior point ref."""
    base = points[0]
    rows = [vsub(p, base) for p in points[1:]]
    n = nullspace_vector(rows, d)
    den = 1
    for c in n:
        den = den * c.denominator // math.gcd(den, c.denominator)
    normal = primitive([int(c * den) for c in n])
    offset = vdot(normal, base)
    side = vdot(normal, ref)
    if side > offset:
        normal = tuple(-c for c in normal)
        offset = -offset
    elif side == offset:
        raise AssertionError("reference point on facet hyperplane")
    return normal, offset


def _hull_full_dim(pts, d):
    """Beneath-beyond hull; returns triangulated boundary facets as
    (vertex index tuple, primitive outward normal, offset)."""
    if d == 1:
        lo, hi = 0, len(pts) - 1
        return [((lo,), (-1,), -pts[lo][0]), ((hi,), (1,), pts[hi][0])]

    base_i = 0
    tracker = IncrementalRank(d)
    simplex = [base_i]
    for i in range(1, len(pts)):
        if tracker.add(vsub(pts[i], pts[base_i])):
            simplex.append(i)
            if tracker.rank == d:
                break
    ref = tuple(sum(coords, Fraction(0)) / (d + 1)
                for coords in zip(*(pts[i] for i in simplex)))

    facets = {}
    next_id = 0
    for subset in combinations(simplex, d):
        normal, offset = _facet_hyperplane([pts[i] for i in subset], ref, d)
        facets[next_id] = (tuple(sorted(subset)), normal, offset)
        next_id += 1

    in_simplex = set(simplex)
    for p in range(len(pts)):
        if p in in_simplex:
            continue
        x = pts[p]
        visible = [fid for fid, (_, a, b) in facets.items() if vdot(a, x) > b]
        if not visible:
            continue
        ridge_count = {}
        for fid in visible:
            verts = facets[fid][0]
            for drop in verts:
                ridge = tuple(v for v in verts if v != drop)
                ridge_count[ridge] = ridge_count.get(ridge, 0) + 1
        for fid in visible:
            del facets[fid]
        for ridge, cnt in ridge_count.items():
            if cnt != 1:
                continue
            new_verts = tuple(sorted(ridge + (p,)))
            normal, offset = _facet_hyperplane([pts[i] for i in new_verts], ref, d)
            facets[next_id] = (new_verts, normal, offset)
            next_id += 1
    return list(facets.values())


# ---------------------------------------------------------------------------
# membership and enumeration


def locate(P: Polytope, x) -> PointLocation:
    """Classify a point as Interior, Boundary, or Outside of a full-dimensional P."""
    pt = as_ratvec(x)
    if len(pt) != P.ambient_dim:
        raise DimensionMismatch(f"point of length {len(pt)} in dimension {P.ambient_dim}")
    if not P.is_full_dimensional:
        raise DimensionDeficient("locate requires a full-dimensional polytope")
    on_boundary = False
    for a, b in P.facets:
        s = vdot(a, pt)
        if s > b:
            return PointLocation.OUTSIDE
        if s == b:
            on_boundary = True
    return PointLocation.BOUNDARY if on_boundary else PointLocation.INTERIOR


def contains(P: Polytope, x) -> bool:
    """Membership test valid in any affine dimension."""
    pt = as_ratvec(x)
    if len(pt) != P.ambient_dim:
        raise DimensionMismatch(f"point of length {len(pt)} in dimension {P.ambient_dim}")
    if P.is_full_dimensional:
        return locate(P, pt) is not PointLocation.OUTSIDE
    if P.affine_dim == 0:
        return pt == P.vertices[0]
    base, basis_rows, inner = P._chart
    cols = list(zip(*basis_rows))
    diff = vsub(pt, base)
    c = solve_linear(cols, diff)
    if c is None:
        return False
    # solve_linear gives one solution; verify it reproduces the point
    recon = tuple(sum(ci * row[j] for ci, row in zip(c, basis_rows)) for j in range(P.ambient_dim))
    if recon != tuple(diff):
        return False
    return contains(inner, c)


def lattice_points(P: Polytope, mode: str = "all") -> list:
    """Integer points of P, sorted lexicographically.

    ``mode`` is "all" or "interior"; the interior mode requires a
    full-dimensional polytope.  Enumeration scans the integer bounding box of
    the vertices and keeps points by exact membership.
    """
    if mode not in ("all", "interior"):
        raise ValueError(f"unknown mode {mode!r}")
    if mode == "interior" and not P.is_full_dimensional:
        raise DimensionDeficient("interior enumeration requires full dimension")
    ranges = []
    for j in range(P.ambient_dim):
        cs = [v[j] for v in P.vertices]
        ranges.append(range(math.ceil(min(cs)), math.floor(max(cs)) + 1))
    out = []
    for xs in product(*ranges):
        if mode == "interior":
            if locate(P, xs) is PointLocation.INTERIOR:
                out.append(xs)
        elif contains(P, xs):
            out.append(xs)
    return out


def volume(P: Polytope) -> Fraction:
    """Lebesgue volume normalized to the lattice (unit cube has volume 1).

    Lower-dimensional polytopes have volume 0.  Computed as a fan of exact
    determinant simplices from the first canonical vertex over the boundary
    triangulation.
    """
    d = P.ambient_dim
    if P.affine_dim < d:
        return Fraction(0)
    v0 = P.vertices[0]
    total = Fraction(0)
    for simplex in P._boundary_simplices:
        if v0 in simplex:
            continue
        rows = [vsub(s, v0) for s in simplex]
        total += abs(determinant(rows))
    return total / math.factorial(d)


# ---------------------------------------------------------------------------
# difference and polar bodies


def difference_body(P: Polytope) -> SymmetricBody:
    """The 0-symmetric body of pairwise vertex differences of P."""
    if not P.is_full_dimensional:
        raise DimensionDeficient("difference body requires a full-dimensional polytope")
    diffs = {vsub(v, w) for v in P.vertices for w in P.vertices}
    return SymmetricBody(convex_hull(diffs, P.ambient_dim))


def polar(K: SymmetricBody) -> SymmetricBody:
    """Polar body of a symmetric K: functionals bounded by 1 in absolute value on K.

    Vertices of the polar are facet normals of K rescaled to offset 1; its
    facets are in turn cut out by the vertices of K, which is what makes
    bipolarity an exact round trip.
    """
    body = K.body
    duals = []
    for a, b in body.facets:
        assert b > 0  # origin interior
        duals.append(tuple(Fraction(c) / b for c in a))
    return SymmetricBody(convex_hull(duals, body.ambient_dim))


def scale(P: Polytope, c) -> Polytope:
    """Dilate by a positive rational factor about the origin."""
    f = Fraction(c)
    if f <= 0:
        raise ValueError("scale factor must be positive")
    return convex_hull([tuple(f * x for x in v) for v in P.vertices], P.ambient_dim)
