"""Fixed test corpora: reflexive polytopes and simplex constructors.

The 16 polygons below are one representative per lattice-equivalence
class of reflexive polygons; they were enumerated as the reflexive
subpolygons of the three maximal ones and deduplicated by a unimodular
normal form.  The 3-polytope list is a fixed selection of well-known
reflexive examples (simplices of Gorenstein weighted projective spaces,
products, the cube/octahedron pair).
"""

from .errors import PreconditionViolated
from .polytope import LatticePolytope

REFLEXIVE_POLYGON_VERTICES = (
    ((-1, -1), (0, 1), (1, 0)),
    ((-1, -1), (-1, 1), (1, 0)),
    ((-1, -1), (-1, 1), (2, -1)),
    ((-1, -1), (-1, 1), (3, -1)),
    ((-1, -1), (-1, 2), (2, -1)),
    ((-1, -1), (-1, 0), (0, 1), (1, 0)),
    ((-1, 0), (-1, 1), (1, -1), (1, 0)),
    ((-1, -1), (-1, 0), (0, 1), (1, -1)),
    ((-1, -1), (-1, 1), (0, 1), (1, -1)),
    ((-1, -1), (-1, 0), (0, 1), (2, -1)),
    ((-1, -1), (-1, 1), (0, 1), (2, -1)),
    ((-1, -1), (-1, 1), (1, -1), (1, 1)),
    ((-1, -1), (-1, 0), (0, -1), (0, 1), (1, 0)),
    ((-1, -1), (-1, 0), (0, 1), (1, -1), (1, 0)),
    ((-1, -1), (-1, 1), (0, 1), (1, -1), (1, 0)),
    ((-1, 0), (-1, 1), (0, -1), (0, 1), (1, -1), (1, 0)),
)

REFLEXIVE_3POLYTOPE_VERTICES = (
    # simplex of P^3 and its dual
    ((1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, -1, -1)),
    ((3, -1, -1), (-1, 3, -1), (-1, -1, 3), (-1, -1, -1)),
    # cube / octahedron pair
    ((-1, -1, -1), (-1, -1, 1), (-1, 1, -1), (-1, 1, 1),
     (1, -1, -1), (1, -1, 1), (1, 1, -1), (1, 1, 1)),
    ((1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)),
    # Gorenstein weighted projective simplices
    ((1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, -2, -2)),     # P(1,1,2,2)
    ((1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, -1, -3)),     # P(1,1,1,3)
    ((1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, -2, -4)),     # P(1,1,2,4)
    ((1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, -4, -6)),     # P(1,1,4,6)
    # products / joins
    ((1, 0, 1), (0, 1, 1), (-1, -1, 1),
     (1, 0, -1), (0, 1, -1), (-1, -1, -1)),              # P^2 x P^1 prism
    ((1, 0, 0), (0, 1, 0), (-1, -1, 0), (0, 0, 1), (0, 0, -1)),  # bipyramid
)


def reflexive_polygons():
    return [LatticePolytope(2, v) for v in REFLEXIVE_POLYGON_VERTICES]


def reflexive_3polytopes():
    return [LatticePolytope(3, v) for v in REFLEXIVE_3POLYTOPE_VERTICES]


def standard_simplex(d) -> LatticePolytope:
    """conv{e_1, ..., e_d, -(e_1 + ... + e_d)}: the reflexive simplex of
    projective d-space (face-fan side)."""
    if d < 1:
        raise PreconditionViolated("need d >= 1")
    verts = [tuple(1 if j == i else 0 for j in range(d)) for i in range(d)]
    verts.append(tuple(-1 for _ in range(d)))
    return LatticePolytope(d, verts)


def weighted_projective_simplex(weights) -> LatticePolytope:
    """conv{e_1, ..., e_d, -(w_1 e_1 + ... + w_d e_d)}: the simplex of
    the weighted projective space P(1, w_1, ..., w_d).

    Reflexivity (equivalently the Gorenstein condition on the weights)
    is not checked here; callers should test is_reflexive where needed.
    """
    weights = tuple(int(w) for w in weights)
    if not weights or any(w < 1 for w in weights):
        raise PreconditionViolated("weights must be positive integers")
    d = len(weights)
    verts = [tuple(1 if j == i else 0 for j in range(d)) for i in range(d)]
    verts.append(tuple(-w for w in weights))
    return LatticePolytope(d, verts)


def mirror_simplex_corpus(max_dim=6):
    """The reflexive simplices exercised by the mirror-duality suite:
    projective spaces up to max_dim plus the two Gorenstein weighted
    fourfold examples (their duals are reached via polar_dual)."""
    corpus = [standard_simplex(d) for d in range(2, max_dim + 1)]
    corpus.append(weighted_projective_simplex((1, 1, 1, 2)))   # P(1,1,1,1,2)
    corpus.append(weighted_projective_simplex((1, 2, 2, 2)))   # P(1,1,2,2,2)
    return corpus
