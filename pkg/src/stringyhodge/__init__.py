"""Exact stringy Hodge invariants of Gorenstein toric and quotient
singularities: S- and S~-polynomials, stringy E-polynomials of toric
Fano varieties and Calabi-Yau hypersurfaces, orbifold Hodge numbers,
and mirror-duality verification for reflexive simplices.
"""

from .exactpoly import BivariateLaurent, UnivariateInt, lp_arith, lp_eval, mirror_transform
from .polytope import (BoxPoint, Face, FacetForm, LatticePolytope,
                       box_points, box_s_polynomials, count_points, dual_face,
                       face_lattice, facet_representation, is_reflexive,
                       l_star, normalized_volume, polar_dual, s_polynomial,
                       s_tilde_polynomial)
from .quotient import (FiniteGroup, GroupElement, abelian_simplex_bridge,
                       compose, cyclic_group, cyclic_sl3_betti, dwork_group,
                       eigen_angles, generate, group_s_polynomials, inverse,
                       simplex_to_group)
from .triangulation import (Triangulation, cell_census, is_unimodular,
                            placing_triangulation, verify_fiber_identity)
from .stringy import (HypersurfaceInvariants, StratumDatum, dwork_invariants,
                      e_st_fano, e_st_hyp_euler, e_st_hypersurface,
                      e_st_stratified, euler_number, h_st_p1,
                      hypersurface_face_e, mirror_check)
from .orbifold import (ComponentDatum, OrbifoldInput, SectorDatum,
                       orbifold_hodge, sector_hodge)

__version__ = "0.1.0"
