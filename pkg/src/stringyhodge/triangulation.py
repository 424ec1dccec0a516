"""Full triangulations of lattice polytopes and the fiber-cohomology check.

The triangulation is built by deterministic incremental insertion in a
fixed point order: points outside the current hull are coned over the
visible boundary facets, points inside split every cell containing
them.  Every lattice point of the polytope ends up as a cell vertex, so
in dimension two the result is automatically unimodular, which is
exactly the regime where the identity being verified is guaranteed to
hold for smooth crepant resolutions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import intlin
from .errors import NotUnimodular, PreconditionViolated
from .exactpoly import UnivariateInt, binomial_poly
from .polytope import LatticePolytope, s_polynomial, _dot


@dataclass(frozen=True)
class Triangulation:
    base: LatticePolytope
    points: tuple              # all lattice points, in hull coordinates
    maximal_cells: tuple       # tuples of indices into points

    @property
    def dim(self):
        return self.base.dim


def _order_points(coords, order):
    if order == "lex":
        return sorted(coords)
    if order == "revlex":
        return sorted(coords, reverse=True)
    raise PreconditionViolated(f"unknown placement order {order!r}")


def _barycentric(cell_pts, p):
    """Barycentric coordinates of p w.r.t. an m-simplex in Z^m, or None
    if p is outside the closed simplex."""
    m = len(p)
    a = [[cell_pts[j][i] for j in range(m + 1)] for i in range(m)]
    a.append([1] * (m + 1))
    sol = intlin.rational_solve(a, list(p) + [1])
    if sol is None or any(x < 0 for x in sol):
        return None
    return sol


def placing_triangulation(P: LatticePolytope, order="lex") -> Triangulation:
    """Full triangulation using every lattice point of P, by incremental
    insertion in the given deterministic point order."""
    if P.dim < 1:
        raise PreconditionViolated("triangulation requires dim >= 1")
    m = P.dim
    # lattice_points returns ambient coordinates; work in hull coordinates
    v0, basis, _ = P._hull_data()
    bt = intlin.transpose(basis)
    coords = []
    for amb in P.lattice_points():
        rhs = [x - y for x, y in zip(amb, v0)]
        sol = intlin.rational_solve(bt, rhs)
        coords.append(tuple(int(s) for s in sol))
    coords = _order_points(coords, order)

    # initial simplex: first m+1 points of affine rank m, scanning in order
    pts = []
    used = []
    deferred = []
    for c in coords:
        if len(pts) <= m:
            trial = pts + [c]
            diffs = [[x - y for x, y in zip(q, trial[0])] for q in trial[1:]]
            rank = m - len(intlin.kernel_basis(diffs, m)) if diffs else 0
            if rank == len(trial) - 1:
                pts.append(c)
                continue
        deferred.append(c)
    if len(pts) != m + 1:
        raise PreconditionViolated("point set does not span the polytope")
    cells = [tuple(range(m + 1))]
    index = {p: i for i, p in enumerate(pts)}

    def boundary_facets():
        count = {}
        for cell in cells:
            for facet in combinations(cell, m):
                count[facet] = count.get(facet, 0) + 1
        return [f for f, c in count.items() if c == 1]

    for p in deferred:
        containing = []
        bary = {}
        for ci, cell in enumerate(cells):
            lam = _barycentric([pts[i] for i in cell], p)
            if lam is not None:
                containing.append(ci)
                bary[ci] = lam
        pi = index.get(p)
        if pi is None:
            pts.append(p)
            pi = len(pts) - 1
            index[p] = pi
        if containing:
            # split every cell containing p along the facets missing p
            new_cells = []
            for ci, cell in enumerate(cells):
                if ci not in containing:
                    new_cells.append(cell)
                    continue
                lam = bary[ci]
                for j, vtx in enumerate(cell):
                    if lam[j] > 0:
                        new_cells.append(tuple(sorted(set(cell) - {vtx})
                                               + [pi]))
            cells = new_cells
        else:
            # p is outside: cone over strictly visible boundary facets
            for facet in boundary_facets():
                fpts = [pts[i] for i in facet]
                diffs = [[x - y for x, y in zip(q, fpts[0])] for q in fpts[1:]]
                kern = intlin.kernel_basis(diffs, m) if diffs else intlin.identity(m)
                assert len(kern) == 1
                nrm = kern[0]
                c0 = _dot(nrm, fpts[0])
                # orient toward the complex interior using any off-facet cell vertex
                owner = next(cell for cell in cells
                             if set(facet) <= set(cell))
                ref = next(pts[i] for i in owner if i not in facet)
                side = _dot(nrm, ref) - c0
                val = _dot(nrm, p) - c0
                if side * val < 0:
                    cells.append(tuple(sorted(facet + (pi,))))
    return Triangulation(P, tuple(pts), tuple(sorted(cells)))


def is_unimodular(T: Triangulation) -> bool:
    """True iff every maximal cell spans the height-lifted lattice."""
    for cell in T.maximal_cells:
        lifted = [list(T.points[i]) + [1] for i in cell]
        if abs(intlin.det(lifted)) != 1:
            return False
    return True


def _all_complex_faces(T: Triangulation):
    """Every simplex of the complex, as a frozenset of point indices."""
    faces = set()
    for cell in T.maximal_cells:
        for r in range(1, len(cell) + 1):
            for sub in combinations(cell, r):
                faces.add(frozenset(sub))
    return faces


def cell_census(T: Triangulation):
    """a_i = number of i-dimensional cells not contained in the boundary."""
    m = T.dim
    facets = T.base._hull_facets()
    a = [0] * m
    a.append(0)
    for face in _all_complex_faces(T):
        fpts = [T.points[i] for i in face]
        if any(all(_dot(nrm, p) == c for p in fpts) for nrm, c in facets):
            continue
        a[len(face) - 1] += 1
    # Euler relation of the open polytope: sum (-1)^i a_i = (-1)^m
    chi = sum((-1) ** i * ai for i, ai in enumerate(a))
    assert chi == (-1) ** m, "census violates the open Euler relation"
    return tuple(a)


def verify_fiber_identity(P: LatticePolytope, order="lex"):
    """Check S(P;t) = sum_i a_i (t-1)^(m-i) for the census of a full
    unimodular triangulation of P.

    Raises NotUnimodular when the placed triangulation has a cell of
    volume > 1 (possible in dim >= 3); the identity is only an oracle
    for smooth crepant resolutions.
    """
    T = placing_triangulation(P, order=order)
    if not is_unimodular(T):
        raise NotUnimodular("triangulation has a non-unimodular cell")
    m = P.dim
    a = cell_census(T)
    lhs = s_polynomial(P)
    rhs = UnivariateInt.zero()
    for i, ai in enumerate(a):
        rhs = rhs + ai * binomial_poly(-1, m - i)
    return {
        "a": list(a),
        "s_from_ehrhart": lhs.to_json(),
        "s_from_cells": rhs.to_json(),
        "equal": lhs == rhs,
    }
