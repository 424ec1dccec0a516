"""Lattice polytope geometry over Z^n, all arithmetic exact.

The objects here feed every invariant downstream: facet systems and
polar duals (reflexivity), Ehrhart psi-vectors (S-polynomials), and the
box points of height-lifted simplices (S~-polynomials and the abelian
quotient correspondence).

Conventions
-----------
* A ``FacetForm(normal, offset)`` encodes the valid inequality
  <normal, x> >= -offset with a primitive integer normal.
* Faces of a polytope that are not full-dimensional in the ambient
  lattice are handled through coordinates on their affine hull, using a
  basis of the *saturated* direction lattice, so lattice point counts
  and interior tests mean what they should.
* Height lifting appends a final coordinate equal to 1.  Box points of
  a k-simplex live in the lifted rank-(k+1) lattice; their last
  coordinate is the weight grading.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from math import comb

from . import intlin
from .errors import DegenerateInput, NotReflexive, NotSimplex
from .exactpoly import UnivariateInt


@dataclass(frozen=True)
class FacetForm:
    """One facet inequality <normal, x> >= -offset."""

    normal: tuple
    offset: int


@dataclass(frozen=True)
class Face:
    """A face of a polytope, referenced by parent vertex indices."""

    parent: "LatticePolytope"
    vertex_indices: tuple
    dim: int

    @property
    def vertices(self):
        return tuple(self.parent.vertices[i] for i in self.vertex_indices)

    def as_polytope(self):
        return LatticePolytope(self.parent.ambient_dim, self.vertices)


@dataclass(frozen=True)
class BoxPoint:
    """Lattice point of the half-open parallelepiped over a lifted simplex.

    ``lattice_point`` is given in the lifted affine-hull coordinates of
    the simplex; ``barycentric`` are the unique rationals in [0, 1) with
    lattice_point = sum lambda_i * (w_i, 1); ``weight`` equals the last
    coordinate of lattice_point; ``support`` is the set of vertex
    indices with lambda_i > 0.
    """

    lattice_point: tuple
    barycentric: tuple
    weight: Fraction
    support: frozenset


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def _affine_rank(points):
    """Dimension of the affine hull of a point tuple."""
    if len(points) <= 1:
        return 0
    p0 = points[0]
    diffs = [[x - y for x, y in zip(p, p0)] for p in points[1:]]
    n = len(p0)
    return n - len(intlin.kernel_basis(diffs, n))


def _facets_of_points(points, dim):
    """All facet inequalities of conv(points), as (normal, c) pairs with
    <normal, x> >= c on the hull; exhaustive hyperplane search over
    dim-subsets, which is fine at desk scale."""
    n = len(points[0])
    seen = {}
    for subset in combinations(range(len(points)), dim):
        base = points[subset[0]]
        diffs = [[points[i][k] - base[k] for k in range(n)] for i in subset[1:]]
        kern = intlin.kernel_basis(diffs, n)
        if len(kern) != 1:
            continue
        normal = tuple(intlin.primitive(kern[0]))
        c = _dot(normal, base)
        values = [_dot(normal, p) for p in points]
        if all(v >= c for v in values):
            pass
        elif all(v <= c for v in values):
            normal = tuple(-x for x in normal)
            c = -c
        else:
            continue
        seen[(normal, c)] = True
    return sorted(seen)


class LatticePolytope:
    """Convex hull of a distinct vertex list in Z^ambient_dim.

    The constructor rejects input points that are not vertices of the
    hull, so face indices stay stable.
    """

    __slots__ = ("ambient_dim", "vertices", "_cache")

    def __init__(self, ambient_dim, vertices):
        vertices = tuple(tuple(int(x) for x in v) for v in vertices)
        if not vertices:
            raise DegenerateInput("empty vertex list")
        if any(len(v) != ambient_dim for v in vertices):
            raise DegenerateInput("vertex length does not match ambient_dim")
        if len(set(vertices)) != len(vertices):
            raise DegenerateInput("vertices must be pairwise distinct")
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "_cache", {})
        self._validate_vertices()

    def __setattr__(self, key, value):
        raise AttributeError("LatticePolytope is immutable")

    def __eq__(self, other):
        return (isinstance(other, LatticePolytope)
                and self.ambient_dim == other.ambient_dim
                and self.vertices == other.vertices)

    def __hash__(self):
        return hash((self.ambient_dim, self.vertices))

    def __repr__(self):
        return (f"LatticePolytope(dim {self.dim} in Z^{self.ambient_dim}, "
                f"{len(self.vertices)} vertices)")

    # -- geometry in affine-hull coordinates -----------------------------

    @property
    def dim(self):
        if "dim" not in self._cache:
            self._cache["dim"] = _affine_rank(self.vertices)
        return self._cache["dim"]

    def is_simplex(self):
        return len(self.vertices) == self.dim + 1

    def _hull_data(self):
        """(v0, basis rows, hull-coordinate vertices).

        The basis spans the saturated direction lattice
        {x in Z^n : x in span_Q(vertices - v0)}, so the coordinate change
        is a bijection between lattice points of the affine hull and Z^m.
        """
        if "hull" in self._cache:
            return self._cache["hull"]
        n = self.ambient_dim
        v0 = self.vertices[0]
        diffs = [[x - y for x, y in zip(v, v0)] for v in self.vertices[1:]]
        ortho = intlin.kernel_basis(diffs, n) if diffs else intlin.identity(n)
        basis = intlin.kernel_basis(ortho, n) if ortho else intlin.identity(n)
        coords = []
        bt = intlin.transpose(basis) if basis else []
        for v in self.vertices:
            rhs = [x - y for x, y in zip(v, v0)]
            if basis:
                sol = intlin.rational_solve(bt, rhs)
                assert sol is not None and all(s.denominator == 1 for s in sol)
                coords.append(tuple(int(s) for s in sol))
            else:
                coords.append(())
        data = (v0, basis, tuple(coords))
        self._cache["hull"] = data
        return data

    def hull_vertices(self):
        """Vertices in affine-hull coordinates (full-dimensional in Z^dim)."""
        return self._hull_data()[2]

    def from_hull_coords(self, c):
        v0, basis, _ = self._hull_data()
        return tuple(v0[i] + sum(cj * basis[j][i] for j, cj in enumerate(c))
                     for i in range(self.ambient_dim))

    def _hull_facets(self):
        """Facets in hull coordinates as (normal, c) with <n, x> >= c."""
        if "hull_facets" not in self._cache:
            pts = self.hull_vertices()
            self._cache["hull_facets"] = (
                _facets_of_points(pts, self.dim) if self.dim >= 1 else [])
        return self._cache["hull_facets"]

    def _validate_vertices(self):
        m = self.dim
        if m == 0:
            return
        pts = self.hull_vertices()
        facets = self._hull_facets()
        for idx, p in enumerate(pts):
            tight = [list(nrm) for nrm, c in facets if _dot(nrm, p) == c]
            if m - len(intlin.kernel_basis(tight, m)) != m:
                raise DegenerateInput(
                    f"input point {self.vertices[idx]} is not a vertex of the hull")

    # -- lattice points ---------------------------------------------------

    def lattice_points(self, scale=1, interior_only=False):
        """Lattice points of scale*P in ambient coordinates, lex-ordered in
        hull coordinates; interior means relative interior."""
        if scale == 0:
            # 0*P is the origin; its relative interior is itself.
            return [tuple(0 for _ in range(self.ambient_dim))]
        m = self.dim
        if m == 0:
            pt = tuple(x * scale for x in self.vertices[0])
            return [pt]
        pts = [tuple(x * scale for x in p) for p in self.hull_vertices()]
        facets = [(nrm, c * scale) for nrm, c in self._hull_facets()]
        lo = [min(p[i] for p in pts) for i in range(m)]
        hi = [max(p[i] for p in pts) for i in range(m)]
        found = []
        for cand in product(*(range(a, b + 1) for a, b in zip(lo, hi))):
            ok = True
            for nrm, c in facets:
                val = _dot(nrm, cand)
                if val < c or (interior_only and val == c):
                    ok = False
                    break
            if ok:
                found.append(cand)
        v0, basis, _ = self._hull_data()
        sv0 = tuple(x * scale for x in v0)
        out = []
        for c in found:
            out.append(tuple(sv0[i] + sum(cj * basis[j][i]
                                          for j, cj in enumerate(c))
                             for i in range(self.ambient_dim)))
        return out


# -- public operations ------------------------------------------------------


def facet_representation(P: LatticePolytope):
    """Minimal facet system of a full-dimensional polytope, lex-ordered."""
    if P.dim != P.ambient_dim:
        raise DegenerateInput(
            f"polytope of dim {P.dim} is not full-dimensional in Z^{P.ambient_dim}")
    if len(P.vertices) < P.dim + 1:
        raise DegenerateInput("fewer than dim+1 vertices")
    facets = _facets_of_points(P.vertices, P.dim)
    return [FacetForm(normal=nrm, offset=-c) for nrm, c in facets]


def face_lattice(P: LatticePolytope):
    """All faces of P grouped by dimension, including P itself.

    Faces are computed as intersections of facet vertex sets, which is
    exact for vertex-described polytopes.
    """
    if "face_lattice" in P._cache:
        return P._cache["face_lattice"]
    m = P.dim
    all_idx = frozenset(range(len(P.vertices)))
    if m == 0:
        return {0: [Face(P, tuple(sorted(all_idx)), 0)]}
    pts = P.hull_vertices()
    facet_sets = []
    for nrm, c in P._hull_facets():
        facet_sets.append(frozenset(i for i, p in enumerate(pts)
                                    if _dot(nrm, p) == c))
    closure = set(facet_sets)
    frontier = list(facet_sets)
    while frontier:
        new = []
        for fs in facet_sets:
            for g in frontier:
                h = fs & g
                if h and h not in closure:
                    closure.add(h)
                    new.append(h)
        frontier = new
    closure.add(all_idx)
    by_dim = {}
    for s in closure:
        verts = tuple(P.vertices[i] for i in sorted(s))
        d = _affine_rank(verts)
        by_dim.setdefault(d, []).append(Face(P, tuple(sorted(s)), d))
    for d in by_dim:
        by_dim[d].sort(key=lambda f: f.vertex_indices)
    P._cache["face_lattice"] = by_dim
    return by_dim


def faces_of_dim(P: LatticePolytope, d):
    return face_lattice(P).get(d, [])


def proper_faces(P: LatticePolytope):
    """All faces of dimension 0 .. dim-1, ordered by (dim, indices)."""
    fl = face_lattice(P)
    out = []
    for d in range(P.dim):
        out.extend(fl.get(d, []))
    return out


def count_points(P: LatticePolytope, k, interior_only=False):
    """Number of lattice points of k*P (relative interior when flagged)."""
    if k < 0:
        raise DegenerateInput("dilation factor must be nonnegative")
    if k == 0:
        return 1
    return len(P.lattice_points(scale=k, interior_only=interior_only))


@lru_cache(maxsize=None)
def _box_tally_cached(P: LatticePolytope):
    """(S coefficients, S~ coefficients) of a simplex from its box points.

    Enumerates the quotient group Z^(k+1) / M Z^(k+1) (M = lifted vertex
    matrix) through a Smith-style diagonalization, walking group elements
    with incremental vector additions mod |det M|; each element is one
    box point, its weight is sum(w)/|det|, and full support means every
    residue coordinate is nonzero.
    """
    if not P.is_simplex():
        raise NotSimplex(f"{len(P.vertices)} vertices for dimension {P.dim}")
    k = P.dim
    lifted = [list(p) + [1] for p in P.hull_vertices()]
    M = intlin.transpose(lifted)
    d_signed = intlin.det(M)
    vol = abs(d_signed)
    s = [0] * (k + 1)
    st = [0] * (k + 1)
    if vol == 1:
        s[0] = 1
        if k + 1 == 0:
            st[0] = 1
        return (tuple(s), tuple(st))
    B = intlin.adjugate(M)
    if d_signed < 0:
        B = [[-x for x in row] for row in B]
    diag, left = intlin.diagonalize(M)
    linv = intlin.inverse_unimodular(left)
    gens = []
    for i, di in enumerate(diag):
        if di > 1:
            col = [sum(B[r][t] * linv[t][i] for t in range(k + 1)) % vol
                   for r in range(k + 1)]
            gens.append((di, col))
    assert vol == _prod(di for di, _ in gens)

    n1 = k + 1
    w0 = [0] * n1

    def walk(level, w):
        if level == len(gens):
            total = sum(w)
            assert total % vol == 0
            weight = total // vol
            s[weight] += 1
            if all(w):
                st[weight] += 1
            return
        di, col = gens[level]
        cur = list(w)
        for _ in range(di):
            walk(level + 1, cur)
            cur = [(a + b) % vol for a, b in zip(cur, col)]

    walk(0, w0)
    return (tuple(s), tuple(st))


def _prod(it):
    out = 1
    for x in it:
        out *= x
    return out


def box_s_polynomials(P: LatticePolytope):
    """(S(P;t), S~(P;t)) of a simplex, graded by box point weight."""
    s, st = _box_tally_cached(P)
    return UnivariateInt(s), UnivariateInt(st)


def box_points(P: LatticePolytope):
    """Explicit box points of a simplex, sorted by lifted lattice point."""
    if not P.is_simplex():
        raise NotSimplex(f"{len(P.vertices)} vertices for dimension {P.dim}")
    k = P.dim
    lifted = [list(p) + [1] for p in P.hull_vertices()]
    M = intlin.transpose(lifted)
    d_signed = intlin.det(M)
    vol = abs(d_signed)
    out = []
    if vol == 1:
        zero = tuple(0 for _ in range(k + 1))
        return [BoxPoint(zero, tuple(Fraction(0) for _ in range(k + 1)),
                         Fraction(0), frozenset())]
    B = intlin.adjugate(M)
    if d_signed < 0:
        B = [[-x for x in row] for row in B]
    diag, left = intlin.diagonalize(M)
    linv = intlin.inverse_unimodular(left)
    reps = [[0] * (k + 1)]
    for i, di in enumerate(diag):
        if di <= 1:
            continue
        col = [linv[r][i] for r in range(k + 1)]
        reps = [[a + t * b for a, b in zip(rep, col)]
                for rep in reps for t in range(di)]
    for x in reps:
        w = [sum(B[r][t] * x[t] for t in range(k + 1)) % vol
             for r in range(k + 1)]
        lam = tuple(Fraction(wi, vol) for wi in w)
        point = []
        for r in range(k + 1):
            num = sum(M[r][j] * w[j] for j in range(k + 1))
            assert num % vol == 0
            point.append(num // vol)
        out.append(BoxPoint(tuple(point), lam, Fraction(sum(w), vol),
                            frozenset(j for j, wi in enumerate(w) if wi)))
    out.sort(key=lambda b: b.lattice_point)
    return out


@lru_cache(maxsize=None)
def s_polynomial(P: LatticePolytope) -> UnivariateInt:
    """Ehrhart psi-vector (h*-polynomial) of P.

    Simplices go through the box point grading; everything else through
    the inclusion-exclusion transform of the counts l(kP),
    psi_j = sum_i (-1)^i C(m+1, i) l((j-i)P).
    """
    m = P.dim
    if P.is_simplex():
        return box_s_polynomials(P)[0]
    counts = [count_points(P, k) for k in range(m + 1)]
    psi = []
    for j in range(m + 1):
        psi.append(sum((-1) ** i * comb(m + 1, i) * counts[j - i]
                       for i in range(j + 1)))
    return UnivariateInt(psi)


def s_tilde_polynomial(P: LatticePolytope) -> UnivariateInt:
    """S~(P;t): the full-support box point grading; simplices only."""
    return box_s_polynomials(P)[1]


def l_star(P: LatticePolytope):
    """Interior lattice point count, read off the top psi coefficient."""
    return s_polynomial(P)[P.dim]


def normalized_volume(P: LatticePolytope):
    """dim! * vol(P) relative to the affine-hull lattice; equals S(P;1)."""
    if P.is_simplex():
        lifted = [list(p) + [1] for p in P.hull_vertices()]
        return abs(intlin.det(lifted))
    return s_polynomial(P)(1)


def is_reflexive(P: LatticePolytope):
    """True iff P is full-dimensional with the origin strictly interior
    and every facet at lattice distance 1."""
    if P.dim != P.ambient_dim:
        return False
    return all(f.offset == 1 for f in facet_representation(P))


def polar_dual(P: LatticePolytope) -> LatticePolytope:
    """Vertices of the dual are the facet normals; reflexive input only."""
    if "polar_dual" in P._cache:
        return P._cache["polar_dual"]
    if not is_reflexive(P):
        raise NotReflexive("polar dual is a lattice polytope only for "
                           "reflexive input")
    dual = LatticePolytope(P.ambient_dim,
                           [f.normal for f in facet_representation(P)])
    P._cache["polar_dual"] = dual
    return dual


def dual_face(P: LatticePolytope, theta: Face) -> Face:
    """theta* = {y in P* : <x, y> = -1 for all x in theta}."""
    if theta.parent is not P and theta.parent != P:
        raise DegenerateInput("face does not belong to the given polytope")
    if len(theta.vertex_indices) == len(P.vertices):
        raise DegenerateInput("dual_face is defined for proper faces only")
    dual = polar_dual(P)
    idx = tuple(i for i, dv in enumerate(dual.vertices)
                if all(_dot(dv, P.vertices[j]) == -1
                       for j in theta.vertex_indices))
    verts = tuple(dual.vertices[i] for i in idx)
    d = _affine_rank(verts)
    assert theta.dim + d == P.dim - 1, "face duality dimension formula failed"
    return Face(dual, idx, d)


def polytope_to_json(P: LatticePolytope):
    return {"ambient_dim": P.ambient_dim, "vertices": [list(v) for v in P.vertices]}


def polytope_from_json(data) -> LatticePolytope:
    try:
        return LatticePolytope(int(data["ambient_dim"]),
                               [tuple(v) for v in data["vertices"]])
    except (KeyError, TypeError) as exc:
        raise DegenerateInput(f"bad polytope file: {exc}") from exc
