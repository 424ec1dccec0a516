"""Acceptance suite: one test per criterion, each printing a PASS line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines; the whole suite is exact (no tolerances anywhere: every assertion
is integer or rational equality).
"""

import json
import random
from fractions import Fraction
from math import gcd

from stringyhodge.corpus import (mirror_simplex_corpus, reflexive_3polytopes,
                                 reflexive_polygons, standard_simplex)
from stringyhodge.exactpoly import mirror_transform
from stringyhodge.orbifold import orbifold_from_json, orbifold_hodge
from stringyhodge.polytope import (box_s_polynomials, normalized_volume,
                                   polar_dual)
from stringyhodge.quotient import (GroupElement, abelian_simplex_bridge,
                                   cyclic_group, cyclic_sl3_betti,
                                   eigen_angles, generate,
                                   group_s_polynomials, inverse)
from stringyhodge.stringy import (dwork_invariants, e_st_fano,
                                  e_st_hypersurface, euler_number,
                                  mirror_check)
from stringyhodge.triangulation import verify_fiber_identity

from test_polytope import check_reflexive_s_identity
from test_quotient import random_monomial_group


def test_criterion_1_a5_quintic(fixtures_dir):
    with open(fixtures_dir / "a5_quintic.json") as fh:
        data = orbifold_from_json(json.load(fh))
    result = orbifold_hodge(data)
    assert result["diamond"][(1, 1)] == 5
    assert result["diamond"][(2, 1)] == 13
    assert result["euler"] == -16

    zero = tuple(Fraction(0) for _ in range(5))
    a5 = generate([GroupElement(5, (1, 2, 0, 3, 4), zero),
                   GroupElement(5, (1, 2, 3, 4, 0), zero)])
    assert len(a5.classes) == 5
    assert [wt for wt, _ in a5.weight_profile()] == [0, 1, 1, 2, 2]
    print("\nACCEPTANCE 1 PASS: A5 quintic h11=5 h21=13 euler=-16; "
          "5 classes with weights {0,1,1,2,2}")


def test_criterion_2_z3_sevenfold(fixtures_dir):
    with open(fixtures_dir / "z3_sevenfold.json") as fh:
        data = orbifold_from_json(json.load(fh))
    result = orbifold_hodge(data)
    assert result["diamond"][(4, 3)] == 36
    print("\nACCEPTANCE 2 PASS: Z/3 sevenfold h43=36")


def test_criterion_3_cyclic_sl3_closed_form():
    cases = 0
    for n in range(3, 51):
        for lam1 in range(1, n - 1):
            for lam2 in range(lam1, n - lam1):
                lam3 = n - lam1 - lam2
                if lam3 < lam2:
                    continue
                if gcd(gcd(lam1, lam2), lam3) != 1:
                    continue
                G = cyclic_group(n, (lam1, lam2, lam3))
                S, _ = group_s_polynomials(G)
                h0, h2, h4 = cyclic_sl3_betti(lam1, lam2, lam3)
                assert (S[0], S[1], S[2]) == (h0, h2, h4), (lam1, lam2, lam3)
                cases += 1
    assert cases >= 100
    print(f"\nACCEPTANCE 3 PASS: cyclic SL(3) closed form exact on "
          f"{cases} admissible triples with |G| <= 50")


def test_criterion_4_dwork_cross_validation():
    for d in (2, 3, 4, 5):
        inv = e_st_hypersurface(standard_simplex(d), mode="full_simplex")
        oracle = dwork_invariants(d)
        assert [inv.hodge.get((p, p), 0) for p in range(d)] == oracle["h_pp"]
        assert inv.euler == oracle["euler"]
    assert dwork_invariants(4)["h_pp"][1] == 101
    assert dwork_invariants(4)["euler"] == 200
    print("\nACCEPTANCE 4 PASS: pencil-quotient closed forms reproduced "
          "for d=2,3,4,5 (d=4: h11=101, euler=200)")


def test_criterion_5_mirror_duality():
    checked = 0
    for delta in mirror_simplex_corpus(6):
        d = delta.dim
        rep = mirror_check(delta)       # asserts the transform internally
        assert rep["mirror_duality"]
        f = e_st_hypersurface(delta).e_st
        g = e_st_hypersurface(polar_dual(delta)).e_st
        assert f == mirror_transform(g, d - 1)
        checked += 1
    print(f"\nACCEPTANCE 5 PASS: mirror duality exact on {checked} "
          "reflexive-simplex pairs with d <= 6")


# -- criterion 6: the property suite ------------------------------------------


def test_criterion_6a_weight_height_duality():
    total = 0
    for seed in range(20):
        G = random_monomial_group(seed)
        assert G.order() <= 10 ** 4
        for g in G.elements:
            _, wt_g, ht_g = eigen_angles(g)
            _, wt_i, ht_i = eigen_angles(inverse(g))
            assert wt_g + wt_i == ht_g == ht_i
        total += G.order()
    print(f"\nACCEPTANCE 6a PASS: wt(g)+wt(g^-1)=ht(g) over 20 random "
          f"monomial groups ({total} elements)")


def test_criterion_6b_s_tilde_reciprocity():
    for seed in range(20):
        G = random_monomial_group(seed)
        _, st = group_s_polynomials(G)
        assert st == st.reversed_in_degree(G.degree)
    print("\nACCEPTANCE 6b PASS: S~ reciprocity on the same 20 groups")


def _abelian_bridge_corpus():
    """Diagonal abelian groups of order <= 200 in SL(2), SL(3), SL(4)."""
    groups = []
    rng = random.Random(11)
    for n in range(2, 26):
        groups.append(cyclic_group(n, (1, n - 1)))
    for n in range(3, 41):
        lams = sorted(rng.sample(range(1, n), 2))
        lam3 = n - sum(lams)
        if lam3 > 0 and gcd(gcd(lams[0], lams[1]), lam3) == 1:
            groups.append(cyclic_group(n, (lams[0], lams[1], lam3)))
    for n in (4, 5, 6, 7):
        groups.append(cyclic_group(n, (1, 1, 1, n - 3)))
    for gens in [
        [(Fraction(1, 2), Fraction(1, 2), Fraction(0)),
         (Fraction(0), Fraction(1, 2), Fraction(1, 2))],
        [(Fraction(1, 3), Fraction(2, 3), Fraction(0)),
         (Fraction(0), Fraction(1, 3), Fraction(2, 3))],
        [(Fraction(1, 2), Fraction(1, 2), Fraction(0), Fraction(0)),
         (Fraction(0), Fraction(0), Fraction(1, 2), Fraction(1, 2)),
         (Fraction(1, 4), Fraction(1, 4), Fraction(1, 4), Fraction(1, 4))],
        [(Fraction(1, 5), Fraction(4, 5), Fraction(0)),
         (Fraction(0), Fraction(1, 5), Fraction(4, 5))],
    ]:
        groups.append(generate([GroupElement.diagonal(p) for p in gens]))
    return [G for G in groups if G.order() <= 200]


def test_criterion_6c_abelian_bridge():
    corpus = _abelian_bridge_corpus()
    for G in corpus:
        theta = abelian_simplex_bridge(G)
        assert group_s_polynomials(G) == box_s_polynomials(theta)
    print(f"\nACCEPTANCE 6c PASS: abelian bridge S and S~ equal on "
          f"{len(corpus)} groups with |G| <= 200")


def test_criterion_6d_reflexive_s_identity():
    polys = reflexive_polygons()
    threes = reflexive_3polytopes()
    assert len(polys) == 16 and len(threes) == 10
    for P in polys + threes:
        check_reflexive_s_identity(P)
    print("\nACCEPTANCE 6d PASS: reflexive S-identity exact on all 16 "
          "polygons and 10 fixed 3-polytopes")


def test_criterion_6e_fano_two_pipelines():
    for P in reflexive_polygons() + reflexive_3polytopes():
        est = e_st_fano(P)      # raises if the two pipelines disagree
        assert euler_number(est) == normalized_volume(polar_dual(P))
    print("\nACCEPTANCE 6e PASS: Fano closed form == orbit sum and "
          "e_st = d! vol(dual) on the same corpus")


def _abelian_sl3_groups_up_to(max_order):
    """Every diagonal abelian subgroup of SL(3, C) with order <= max_order,
    enumerated through sublattices e Z^2 <= L <= Z^2 and deduplicated by
    the element set."""
    seen = {}
    for e in range(1, max_order + 1):
        for a in [x for x in range(1, e + 1) if e % x == 0]:
            for d in [x for x in range(1, e + 1) if e % x == 0]:
                if (e * e) // (a * d) > max_order:
                    continue
                for b in range(e):
                    if ((e // a) * b) % d != 0:
                        continue
                    elems = set()
                    for s in range(e // a):
                        for t in range(e // d):
                            x = (s * a) % e
                            y = (s * b + t * d) % e
                            elems.add((Fraction(x, e), Fraction(y, e),
                                       Fraction((-x - y) % e, e)))
                    key = frozenset(elems)
                    if key not in seen:
                        seen[key] = [GroupElement.diagonal(p) for p in
                                     sorted(elems)]
    return seen.values()


def test_criterion_6f_triangulation_oracle():
    count = 0
    for gens in _abelian_sl3_groups_up_to(30):
        G = generate(gens)
        assert G.order() <= 30
        theta = abelian_simplex_bridge(G)
        if theta.dim < 1:       # the trivial group gives a point
            continue
        for order in ("lex", "revlex"):
            report = verify_fiber_identity(theta, order=order)
            assert report["equal"], (G.order(), order)
        count += 1
    assert count >= 100
    print(f"\nACCEPTANCE 6f PASS: fiber identity holds for {count} abelian "
          "SL(3) quotients with |G| <= 30 under two placement orders")


def test_criterion_6g_duality_and_positivity():
    outputs = []
    for P in reflexive_polygons() + reflexive_3polytopes():
        outputs.append((P.dim, e_st_fano(P)))
    for delta in mirror_simplex_corpus(5):
        inv = e_st_hypersurface(delta)
        outputs.append((delta.dim - 1, inv.e_st))
    for dim, est in outputs:
        assert est.poincare_transform(dim) == est
        assert all(h >= 0 for h in est.hodge_numbers().values())
    print(f"\nACCEPTANCE 6g PASS: Poincare duality and sign positivity on "
          f"{len(outputs)} stringy E-polynomial outputs")
