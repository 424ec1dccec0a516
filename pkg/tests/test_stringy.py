import json

import pytest

from stringyhodge.corpus import standard_simplex, weighted_projective_simplex
from stringyhodge.errors import (InconsistentStratification,
                                 NonPolynomialResult, NotReflexive,
                                 NotSimplex, OutOfRange)
from stringyhodge.exactpoly import BivariateLaurent, UnivariateInt
from stringyhodge.polytope import (LatticePolytope, count_points, dual_face,
                                   face_lattice, l_star, normalized_volume,
                                   polar_dual)
from stringyhodge.stringy import (StratumDatum, dwork_invariants, e_st_fano,
                                  e_st_hyp_euler, e_st_hypersurface,
                                  e_st_stratified, euler_number, h_st_p1,
                                  hypersurface_face_e, mirror_check,
                                  stratification_from_json)

P2_BIG = LatticePolytope(2, [(2, -1), (-1, 2), (-1, -1)])
DIAMOND = LatticePolytope(2, [(1, 0), (0, 1), (-1, 0), (0, -1)])
HEXAGON = LatticePolytope(2, [(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)])
UV = BivariateLaurent.monomial(1, 1)
ONE = BivariateLaurent.one()


def diag_poly(*coeffs):
    return BivariateLaurent.from_uv_diagonal(UnivariateInt(coeffs))


# -- independent Hodge-number oracle from raw point counts ---------------------


def h11_from_point_counts(delta):
    """h^(1,1) of the hypersurface family by pure lattice point counting
    on the dual polytope (no box points involved)."""
    d = delta.dim
    dual = polar_dual(delta)
    fl = face_lattice(dual)
    val = count_points(dual, 1) - d - 1
    for facet in fl[d - 1]:
        val -= l_star(facet.as_polytope())
    for eta in fl.get(d - 2, ()):
        val += l_star(eta.as_polytope()) * \
            l_star(dual_face(dual, eta).as_polytope())
    return val


# -- stratified evaluator -------------------------------------------------------


def test_single_smooth_stratum():
    e = BivariateLaurent({(0, 0): 1, (1, 1): 3})
    out = e_st_stratified([StratumDatum("x", e, UnivariateInt.one())])
    assert out == e


def test_p2_orbit_stratification():
    strata = [
        StratumDatum("torus", (UV - ONE) ** 2, UnivariateInt.one()),
        StratumDatum("edges", 3 * (UV - ONE), UnivariateInt.one()),
        StratumDatum("points", 3 * ONE, UnivariateInt.one()),
    ]
    assert e_st_stratified(strata) == diag_poly(1, 1, 1)


def test_a5_quintic_stratification_fixture(fixtures_dir):
    with open(fixtures_dir / "a5_quintic_strata.json") as fh:
        strata = stratification_from_json(json.load(fh))
    est = e_st_stratified(strata)
    assert euler_number(est) == -16
    assert est.evaluate(1, 1) == -16
    hodge = est.hodge_numbers()
    assert hodge[(1, 1)] == 5 and hodge[(2, 1)] == 13
    assert est.poincare_transform(3) == est


def test_stratified_detects_bad_order():
    good = StratumDatum("top", ONE, UnivariateInt.one(),
                        e_closure=ONE, s_tilde=UnivariateInt.one())
    bad = StratumDatum("deep", ONE, UnivariateInt((1,)),   # S should be 1 + t
                       e_closure=ONE, s_tilde=UnivariateInt((0, 1)),
                       less_than=("top",))
    with pytest.raises(InconsistentStratification):
        e_st_stratified([good, bad])


def test_stratified_detects_bad_closure():
    top = StratumDatum("top", ONE, UnivariateInt.one(),
                       e_closure=ONE, s_tilde=UnivariateInt.one())
    deep = StratumDatum("deep", ONE, UnivariateInt((1, 1)),
                        e_closure=3 * ONE, s_tilde=UnivariateInt((0, 1)),
                        less_than=("top",))
    with pytest.raises(InconsistentStratification):
        e_st_stratified([top, deep])


def test_stratified_detects_cycle():
    a = StratumDatum("a", ONE, UnivariateInt.one(), less_than=("b",))
    b = StratumDatum("b", ONE, UnivariateInt.one(), less_than=("a",))
    with pytest.raises(InconsistentStratification):
        e_st_stratified([a, b])


# -- toric Fano -------------------------------------------------------------------


def test_fano_p2():
    assert e_st_fano(P2_BIG) == diag_poly(1, 1, 1)


def test_fano_diamond():
    est = e_st_fano(DIAMOND)
    assert est == diag_poly(1, 6, 1)
    assert euler_number(est) == 8 == normalized_volume(polar_dual(DIAMOND))


def test_fano_smooth_equals_plain_e():
    # the hexagon's fan is smooth: E_st must be the honest E-polynomial,
    # 1 + 4uv + (uv)^2 for the del Pezzo surface of degree 6
    assert e_st_fano(HEXAGON) == diag_poly(1, 4, 1)


def test_fano_corpus_consistency(polygons16, polytopes3d):
    for P in polygons16 + polytopes3d + [standard_simplex(4)]:
        est = e_st_fano(P)          # internally checks both pipelines
        assert euler_number(est) == normalized_volume(polar_dual(P))
        assert est.poincare_transform(P.dim) == est
        assert all(h >= 0 for h in est.hodge_numbers().values())


def test_fano_requires_reflexive():
    with pytest.raises(NotReflexive):
        e_st_fano(LatticePolytope(2, [(0, 0), (1, 0), (0, 1)]))


# -- hypersurface face pieces -------------------------------------------------------


def test_face_e_unimodular_edge():
    edge = LatticePolytope(2, [(1, 0), (0, 1)])
    assert hypersurface_face_e(edge, "full_simplex") == ONE
    assert hypersurface_face_e(edge, "u_equals_1") == ONE


def test_face_e_modes_agree_on_simplex_faces():
    big = polar_dual(standard_simplex(3))
    fl = face_lattice(big)
    for dim in (1, 2, 3):
        for face in fl[dim]:
            P = face.as_polytope()
            full = hypersurface_face_e(P, "full_simplex")
            u1 = hypersurface_face_e(P, "u_equals_1")
            assert full.substitute_u1() == u1.substitute_u1()


def test_face_e_geometric_genus_coefficient():
    # the v^(dim-1) coefficient is (-1)^(dim-1) l*(theta)
    for P in [P2_BIG, polar_dual(standard_simplex(3)),
              weighted_projective_simplex((1, 2, 3))]:
        k = P.dim
        e = hypersurface_face_e(P, "full_simplex")
        assert e.coeff(0, k - 1) == (-1) ** (k - 1) * l_star(P)


def test_face_e_rejects_non_simplex_in_full_mode():
    with pytest.raises(NotSimplex):
        hypersurface_face_e(DIAMOND, "full_simplex")


# -- hypersurface invariants ---------------------------------------------------------


def test_quintic_mirror_family():
    inv = e_st_hypersurface(standard_simplex(4))
    assert inv.hodge[(1, 1)] == 101
    assert inv.hodge[(2, 1)] == 1
    assert inv.euler == 200
    assert euler_number(inv.e_st) == 200


def test_quintic_itself():
    inv = e_st_hypersurface(polar_dual(standard_simplex(4)))
    assert inv.hodge[(1, 1)] == 1
    assert inv.hodge[(2, 1)] == 101
    assert inv.euler == -200


def test_elliptic_curve_case():
    inv = e_st_hypersurface(standard_simplex(2))
    assert inv.e_st == BivariateLaurent(
        {(0, 0): 1, (1, 0): -1, (0, 1): -1, (1, 1): 1})
    assert inv.euler == 0


def test_h11_against_point_count_oracle():
    simplices = [standard_simplex(4),
                 weighted_projective_simplex((1, 1, 1, 2)),
                 weighted_projective_simplex((1, 2, 2, 2))]
    for delta in simplices + [polar_dual(s) for s in simplices]:
        inv = e_st_hypersurface(delta)
        assert inv.hodge.get((1, 1), 0) == h11_from_point_counts(delta)
        # h^(d-2,1) is h^(1,1) of the dual side
        assert inv.hodge.get((2, 1), 0) == \
            h11_from_point_counts(polar_dual(delta))


def test_u1_mode_on_non_simplex():
    inv = e_st_hypersurface(DIAMOND, mode="u_equals_1")
    assert inv.e_st is None
    assert inv.euler == 0          # elliptic curve again
    inv3 = e_st_hypersurface(LatticePolytope(3, [
        (1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)]),
        mode="u_equals_1")
    assert inv3.euler == 24        # K3


def test_full_mode_rejects_non_simplex():
    with pytest.raises(NotSimplex):
        e_st_hypersurface(DIAMOND, mode="full_simplex")
    with pytest.raises(NotReflexive):
        e_st_hypersurface(LatticePolytope(2, [(0, 0), (1, 0), (0, 1)]))


def test_u1_specialization_matches_full(simplex_corpus):
    for delta in simplex_corpus:
        for P in (delta, polar_dual(delta)):
            inv = e_st_hypersurface(P)          # asserts u1 agreement inside
            coeffs = inv.e_st.substitute_u1()
            d = P.dim
            assert all(coeffs.get(q, 0) == coeffs.get(d - 1 - q, 0)
                       for q in range(d))


def test_u1_mirror_sign_relation(polygons16, polytopes3d):
    for P in polygons16 + polytopes3d:
        d = P.dim
        f = e_st_hypersurface(P, mode="u_equals_1").e_st_u1
        g = e_st_hypersurface(polar_dual(P), mode="u_equals_1").e_st_u1
        assert f == (-1) ** (d - 1) * g


def test_poincare_duality_and_sign_positivity(simplex_corpus):
    for delta in simplex_corpus:
        inv = e_st_hypersurface(delta)
        d = delta.dim
        assert inv.e_st.poincare_transform(d - 1) == inv.e_st
        for (p, q), h in inv.hodge.items():
            assert h >= 0, (delta, p, q, h)


# -- Euler sums and h^(p,1) ------------------------------------------------------------


def test_hyp_euler_quintic_pair():
    assert e_st_hyp_euler(standard_simplex(4)) == 200
    assert e_st_hyp_euler(polar_dual(standard_simplex(4))) == -200


def test_hyp_euler_dim3_symmetric():
    for P in [standard_simplex(3), weighted_projective_simplex((1, 2, 2))]:
        assert e_st_hyp_euler(P) == e_st_hyp_euler(polar_dual(P))


def test_hyp_euler_dim2_is_zero(polygons16):
    for P in polygons16:
        assert e_st_hyp_euler(P) == 0


def test_hyp_euler_matches_e_st(simplex_corpus):
    for delta in simplex_corpus:
        inv = e_st_hypersurface(delta)
        assert e_st_hyp_euler(delta) == inv.euler
        assert e_st_hyp_euler(polar_dual(delta)) == \
            (-1) ** (delta.dim - 1) * inv.euler


def test_h_p1_range_errors():
    with pytest.raises(OutOfRange):
        h_st_p1(standard_simplex(4), 2)
    with pytest.raises(OutOfRange):
        h_st_p1(standard_simplex(5), 1)
    with pytest.raises(OutOfRange):
        h_st_p1(standard_simplex(5), 3)


def test_h_p1_matches_full_polynomial():
    for d in (5, 6):
        for delta in (standard_simplex(d), polar_dual(standard_simplex(d))):
            inv = e_st_hypersurface(delta)
            for p in range(2, d - 2):
                expect = (-1) ** (p + 1) * inv.e_st.coeff(p, 1)
                assert h_st_p1(delta, p) == expect


def test_h_p1_duality():
    for d in (5, 6):
        delta = standard_simplex(d)
        dual = polar_dual(delta)
        for p in range(2, d - 2):
            assert h_st_p1(delta, p) == h_st_p1(dual, d - 1 - p)


def test_h_p1_zero_interior_faces():
    # all codim-2 faces of the standard simplex are hollow
    assert h_st_p1(standard_simplex(5), 2) == 0


# -- mirror duality ----------------------------------------------------------------------


def test_mirror_check_quintic():
    rep = mirror_check(standard_simplex(4))
    assert rep["mirror_duality"]
    assert rep["euler_f"] == 200 and rep["euler_g"] == -200
    hf = {(p, q): h for p, q, h in rep["hodge_f"]}
    hg = {(p, q): h for p, q, h in rep["hodge_g"]}
    # transposed diamonds: h^(p,q) on one side is h^(d-1-p,q) on the other
    for (p, q), h in hf.items():
        assert hg[(3 - p, q)] == h


def test_mirror_check_self_dual_segment():
    rep = mirror_check(standard_simplex(1))
    assert rep["mirror_duality"]
    assert rep["e_st_f"] == rep["e_st_g"] == [[0, 0, 2]]


# -- closed forms -------------------------------------------------------------------------


def test_dwork_d4():
    inv = dwork_invariants(4)
    assert inv["h_pp"] == [1, 101, 101, 1]
    assert inv["euler"] == 200
    # the two closed forms in use agree: binomial sum and Chern number
    from math import comb
    assert comb(9, 4) - 5 * comb(5, 4) == 101
    assert (4 ** 5 + 1) // 5 - 5 == 200


def test_dwork_d2_elliptic():
    inv = dwork_invariants(2)
    assert inv["h_pp"][0] == 1
    assert inv["euler"] == 0


def test_dwork_d3_k3():
    inv = dwork_invariants(3)
    assert inv["h_pp"] == [1, 20, 1]
    assert inv["euler"] == 24


def test_dwork_internal_consistency():
    # euler must equal the diamond total: diagonal sum plus the d off-diagonal
    # delta-type entries h^(p,q) = delta(d-1-p, q)
    for d in range(2, 8):
        inv = dwork_invariants(d)
        off = sum(1 for p in range(d) if 2 * p != d - 1)
        assert inv["euler"] == sum(inv["h_pp"]) + (-1) ** (d - 1) * off
