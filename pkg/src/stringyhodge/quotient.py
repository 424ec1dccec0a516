"""Finite monomial subgroups of SL(d, C), exactly.

A monomial matrix is a permutation matrix with root-of-unity entries;
we store the permutation and the d phase angles as rationals mod 1, so
composition, inversion and eigenvalue extraction stay in Q/Z.  This
covers every group the invariants here are evaluated on (diagonal
abelian groups, coordinate permutation actions, and their mixtures)
without cyclotomic field arithmetic.

The weight of g is the sum of its eigenvalue angles in [0,1); because
det g = 1 forces that sum to be an integer, the S-polynomial grading
psi_i(G) = #{classes of weight i} is always well defined for genuine
SL input.  The height is rk(g - 1), i.e. the number of nonzero angles.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import intlin, polytope
from .errors import (CapExceeded, DegreeMismatch, NonIntegralWeight,
                     NotAbelianDiagonal, NotSpecialLinear,
                     PreconditionViolated)
from .exactpoly import UnivariateInt


def _mod1(x: Fraction) -> Fraction:
    return x - (x.numerator // x.denominator)


def _perm_sign(perm):
    seen = [False] * len(perm)
    sign = 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


@dataclass(frozen=True)
class GroupElement:
    """Monomial matrix: coordinate i maps to coordinate perm[i] with
    phase angle phases[i] (entry e^(2 pi i phases[i]))."""

    degree: int
    perm: tuple
    phases: tuple

    def __post_init__(self):
        d = self.degree
        if sorted(self.perm) != list(range(d)) or len(self.phases) != d:
            raise PreconditionViolated("malformed monomial matrix data")
        phases = tuple(_mod1(Fraction(p)) for p in self.phases)
        object.__setattr__(self, "phases", phases)
        total = _mod1(sum(phases, Fraction(0)))
        required = Fraction(0) if _perm_sign(self.perm) == 1 else Fraction(1, 2)
        if total != required:
            raise NotSpecialLinear(
                f"phase sum {total} incompatible with permutation parity")

    @classmethod
    def identity(cls, degree):
        return cls(degree, tuple(range(degree)),
                   tuple(Fraction(0) for _ in range(degree)))

    @classmethod
    def diagonal(cls, phases):
        phases = tuple(Fraction(p) for p in phases)
        return cls(len(phases), tuple(range(len(phases))), phases)

    def sort_key(self):
        return (self.perm, self.phases)

    def is_diagonal(self):
        return self.perm == tuple(range(self.degree))


def compose(a: GroupElement, b: GroupElement) -> GroupElement:
    """Matrix product a*b (apply b first)."""
    if a.degree != b.degree:
        raise DegreeMismatch(f"{a.degree} != {b.degree}")
    perm = tuple(a.perm[b.perm[i]] for i in range(a.degree))
    phases = tuple(_mod1(b.phases[i] + a.phases[b.perm[i]])
                   for i in range(a.degree))
    return GroupElement(a.degree, perm, phases)


def inverse(a: GroupElement) -> GroupElement:
    inv_perm = [0] * a.degree
    for i, j in enumerate(a.perm):
        inv_perm[j] = i
    phases = tuple(_mod1(-a.phases[inv_perm[j]]) for j in range(a.degree))
    return GroupElement(a.degree, tuple(inv_perm), phases)


def eigen_angles(g: GroupElement):
    """(sorted angle multiset, wt(g), ht(g)).

    Each permutation cycle of length L with phase sum s contributes the
    angles frac((s + j)/L), j = 0..L-1, the L-th roots of the cycle
    product.
    """
    d = g.degree
    seen = [False] * d
    angles = []
    for i in range(d):
        if seen[i]:
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = True
            cyc.append(j)
            j = g.perm[j]
        s = sum((g.phases[c] for c in cyc), Fraction(0))
        L = len(cyc)
        for j in range(L):
            angles.append(_mod1(Fraction(s + j, L)))
    angles.sort()
    wt = sum(angles, Fraction(0))
    ht = sum(1 for a in angles if a != 0)
    return tuple(angles), wt, ht


def weight(g: GroupElement) -> Fraction:
    return eigen_angles(g)[1]


def height(g: GroupElement) -> int:
    return eigen_angles(g)[2]


class FiniteGroup:
    """Closure of a generator list, with conjugacy class data."""

    __slots__ = ("degree", "elements", "classes", "class_reps")

    def __init__(self, degree, elements, classes):
        self.degree = degree
        self.elements = tuple(elements)
        self.classes = tuple(tuple(c) for c in classes)
        self.class_reps = tuple(c[0] for c in self.classes)

    def __len__(self):
        return len(self.elements)

    def order(self):
        return len(self.elements)

    def is_abelian_diagonal(self):
        return all(g.is_diagonal() for g in self.elements)

    def weight_profile(self):
        """Sorted list of (wt, ht) pairs, one per conjugacy class."""
        out = [(eigen_angles(rep)[1], eigen_angles(rep)[2])
               for rep in self.class_reps]
        return sorted(out)


def generate(generators, cap=10 ** 6) -> FiniteGroup:
    """Closure by breadth-first products; classes by conjugation orbits.

    Class representatives are the lex-least elements, so output is
    deterministic regardless of generator order.
    """
    gens = list(generators)
    if not gens:
        raise PreconditionViolated("at least one generator required")
    d = gens[0].degree
    for g in gens:
        if g.degree != d:
            raise DegreeMismatch("generators of mixed degree")
    ident = GroupElement.identity(d)
    elements = {ident}
    frontier = [ident]
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = compose(x, g)
                if y not in elements:
                    if len(elements) >= cap:
                        raise CapExceeded(f"group order exceeds cap {cap}")
                    elements.add(y)
                    new.append(y)
        frontier = new
    ordered = sorted(elements, key=GroupElement.sort_key)
    gen_invs = [inverse(g) for g in gens]
    unassigned = dict.fromkeys(ordered)
    classes = []
    for x in ordered:
        if x not in unassigned:
            continue
        orbit = {x}
        queue = [x]
        while queue:
            y = queue.pop()
            for g, gi in zip(gens, gen_invs):
                z = compose(compose(g, y), gi)
                if z not in orbit:
                    orbit.add(z)
                    queue.append(z)
        for y in orbit:
            unassigned.pop(y, None)
        classes.append(sorted(orbit, key=GroupElement.sort_key))
    return FiniteGroup(d, ordered, classes)


def group_s_polynomials(G: FiniteGroup):
    """(S(G;t), S~(G;t)): class counts by weight, and by weight at full
    height.  Weights of SL elements are integers; the guard is kept for
    defence against malformed element data."""
    d = G.degree
    psi = [0] * d
    psi_tilde = [0] * d
    for rep in G.class_reps:
        _, wt, ht = eigen_angles(rep)
        if wt.denominator != 1:
            raise NonIntegralWeight(f"class of {rep} has weight {wt}")
        w = int(wt)
        psi[w] += 1
        if ht == d:
            psi_tilde[w] += 1
    return UnivariateInt(psi), UnivariateInt(psi_tilde)


def cyclic_sl3_betti(lam1, lam2, lam3):
    """Closed-form (dim H^0, dim H^2, dim H^4) of the crepant resolution
    fiber for the cyclic quotient C^3 / (1/n)(lam1, lam2, lam3)."""
    n = lam1 + lam2 + lam3
    if not all(0 < x < n for x in (lam1, lam2, lam3)):
        raise PreconditionViolated("each weight must lie strictly between 0 and |G|")
    if gcd(gcd(lam1, lam2), lam3) != 1:
        raise PreconditionViolated("weights must be coprime")
    gsum = sum(gcd(x, n) for x in (lam1, lam2, lam3))
    assert (n + gsum) % 2 == 0
    h2 = (n + gsum) // 2 - 2
    h4 = (n - gsum) // 2 + 1
    return (1, h2, h4)


def cyclic_group(n, weights) -> FiniteGroup:
    """The cyclic diagonal group generated by (1/n)(weights)."""
    g = GroupElement.diagonal([Fraction(w, n) for w in weights])
    return generate([g], cap=max(10 ** 6, n + 1))


def dwork_group(d) -> FiniteGroup:
    """The mirror quotient group of degree-(d+1) hypersurfaces in P^d,
    realized diagonally in SL(d, C) on an affine torus chart; its order
    is (d+1)^(d-1)."""
    n = d + 1
    gens = []
    for j in range(1, d):
        ph = [Fraction(0)] * d
        ph[0] = Fraction(1, n)
        ph[j] = Fraction(n - 1, n)
        gens.append(GroupElement.diagonal(ph))
    if d == 1:
        return generate([GroupElement.identity(1)])
    return generate(gens)


# -- the abelian group <-> simplex bridge ------------------------------------


def abelian_simplex_bridge(G: FiniteGroup) -> polytope.LatticePolytope:
    """Simplex of the toric quotient C^d / G for diagonal abelian G.

    Builds the lattice N = Z^d + (all phase vectors), rewrites the unit
    vectors in a basis of N, and returns their convex hull: a (d-1)-dim
    simplex whose box point grading reproduces the group grading.
    """
    if not G.is_abelian_diagonal():
        raise NotAbelianDiagonal("bridge requires a diagonal abelian group")
    d = G.degree
    denom = 1
    for g in G.elements:
        for p in g.phases:
            denom = denom * p.denominator // gcd(denom, p.denominator)
    rows = [[denom if i == j else 0 for j in range(d)] for i in range(d)]
    for g in G.elements:
        rows.append([int(p * denom) for p in g.phases])
    basis = intlin.row_hnf(rows)          # basis of denom * N
    assert len(basis) == d
    bt = intlin.transpose(basis)
    verts = []
    for i in range(d):
        e_scaled = [denom if j == i else 0 for j in range(d)]
        sol = intlin.rational_solve(bt, e_scaled)
        assert sol is not None and all(s.denominator == 1 for s in sol)
        verts.append(tuple(int(s) for s in sol))
    return polytope.LatticePolytope(d, verts)


def simplex_to_group(theta: polytope.LatticePolytope) -> FiniteGroup:
    """Inverse bridge: the diagonal abelian group graded by the box
    points of a lattice simplex."""
    boxes = polytope.box_points(theta)
    elements = [GroupElement.diagonal(b.barycentric) for b in boxes]
    elements.sort(key=GroupElement.sort_key)
    classes = [[g] for g in elements]
    return FiniteGroup(theta.dim + 1, elements, classes)


# -- serialization ------------------------------------------------------------


def group_to_json(generators):
    return {
        "degree": generators[0].degree,
        "generators": [
            {"perm": list(g.perm),
             "phases": [f"{p.numerator}/{p.denominator}" for p in g.phases]}
            for g in generators
        ],
    }


def group_from_json(data):
    """Parse a generator file; returns the generator list."""
    try:
        d = int(data["degree"])
        gens = []
        for g in data["generators"]:
            perm = tuple(int(i) for i in g["perm"])
            phases = tuple(Fraction(p) for p in g["phases"])
            gens.append(GroupElement(d, perm, phases))
        return gens
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, (NotSpecialLinear, PreconditionViolated)):
            raise
        raise PreconditionViolated(f"bad group file: {exc}") from exc
