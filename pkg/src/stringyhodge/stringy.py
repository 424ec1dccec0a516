"""String-theoretic E-polynomials.

Four routes to the same invariants live here and cross-check each other:

* the generic stratified evaluator, in both its open-stratum form
  (sum of E(stratum) * S(transverse singularity)) and its closed-stratum
  form (sum of E(closure) * S~);
* the closed formula for Gorenstein toric Fano varieties, checked
  against the torus-orbit sum over faces;
* the Calabi-Yau hypersurface formulas: the full (u, v) expression for
  reflexive simplices, assembled from S~-polynomials of the face pairs
  (theta, theta*), and the u = 1 specialization valid for every
  reflexive polytope;
* closed forms for the mirror family of degree-(d+1) hypersurfaces in
  P^d (the one-parameter pencil quotient), used as an independent
  oracle.

All intermediate Laurent terms (1/(uv), u^dim/v bookkeeping) are exact;
results that must be honest polynomials are verified to be so, and a
failed cancellation raises instead of silently returning garbage.

Sign conventions.  E-polynomials follow the compactly-supported
Hodge-Deligne convention, in which the coefficient of u^p v^q is
(-1)^(p+q) h^(p,q) for smooth compact strata, E of a k-torus is
(uv-1)^k, and the topological Euler number is the coefficient sum
(the value at u = v = 1).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Optional

from .errors import (InconsistentStratification, NonPolynomialResult,
                     NotReflexive, NotSimplex, OutOfRange,
                     PreconditionViolated)
from .exactpoly import BivariateLaurent, UnivariateInt, binomial_poly
from .polytope import (Face, LatticePolytope, box_s_polynomials, dual_face,
                       face_lattice, is_reflexive, l_star, normalized_volume,
                       polar_dual, s_polynomial)


def euler_number(p: BivariateLaurent) -> int:
    """Alternating Hodge sum sum_{p,q} (-1)^(p+q) h^(p,q): the coefficient
    total of an E-polynomial."""
    return p.total()


def _uv_pow_minus_one(k):
    """(uv - 1)^k as a BivariateLaurent."""
    return BivariateLaurent.from_uv_diagonal(binomial_poly(-1, k))


def _as_polytope(theta):
    if isinstance(theta, Face):
        return theta.as_polytope()
    return theta


# -- generic stratified evaluator --------------------------------------------


@dataclass(frozen=True)
class StratumDatum:
    """One stratum of a stratified variety with Gorenstein singularities.

    ``less_than`` lists the labels of strictly larger strata, i.e. those
    whose closure contains this stratum.  ``e_closure`` and ``s_tilde``
    may be omitted; the closed-stratum form is computed (and compared)
    only when they are present for every stratum.
    """

    label: str
    e_open: BivariateLaurent
    s: UnivariateInt
    e_closure: Optional[BivariateLaurent] = None
    s_tilde: Optional[UnivariateInt] = None
    less_than: tuple = field(default_factory=tuple)


def _check_acyclic(strata, by_label):
    state = {}

    def visit(lbl):
        if state.get(lbl) == 1:
            raise InconsistentStratification("cycle in the stratum order")
        if state.get(lbl) == 2:
            return
        state[lbl] = 1
        for nxt in by_label[lbl].less_than:
            visit(nxt)
        state[lbl] = 2

    for s in strata:
        visit(s.label)


def e_st_stratified(strata) -> BivariateLaurent:
    """Stringy E-polynomial of a stratified variety, computed two ways.

    Always evaluates sum E(X_i) * S(X_i; uv).  When closure data is
    present it also evaluates sum E(closure X_i) * S~(X_i; uv) and
    demands exact agreement, after first verifying that the declared
    order satisfies the canonical-stratification relation
    S(X_i) = S~(X_i) + sum_{X_i < X_j} S~(X_j) and closure additivity.
    """
    strata = list(strata)
    by_label = {s.label: s for s in strata}
    if len(by_label) != len(strata):
        raise InconsistentStratification("duplicate stratum labels")
    for s in strata:
        for lbl in s.less_than:
            if lbl not in by_label:
                raise InconsistentStratification(
                    f"unknown stratum {lbl!r} in order relation")
    _check_acyclic(strata, by_label)

    form1 = BivariateLaurent.zero()
    for s in strata:
        form1 = form1 + s.e_open * BivariateLaurent.from_uv_diagonal(s.s)

    have_closures = all(s.e_closure is not None and s.s_tilde is not None
                        for s in strata)
    if not have_closures:
        return form1

    for s in strata:
        expect = s.s_tilde
        for lbl in s.less_than:
            expect = expect + by_label[lbl].s_tilde
        if expect != s.s:
            raise InconsistentStratification(
                f"stratum {s.label!r}: S != S~ + sum of larger S~")
        closure = s.e_open
        for other in strata:
            if other.label != s.label and s.label in other.less_than:
                closure = closure + other.e_open
        if closure != s.e_closure:
            raise InconsistentStratification(
                f"stratum {s.label!r}: closure E-polynomial is not the sum "
                "of the open strata it contains")

    form2 = BivariateLaurent.zero()
    for s in strata:
        form2 = form2 + s.e_closure * BivariateLaurent.from_uv_diagonal(s.s_tilde)
    if form1 != form2:
        raise InconsistentStratification(
            "open-stratum and closed-stratum evaluations disagree")
    return form1


def stratification_from_json(data):
    try:
        strata = []
        for s in data["strata"]:
            strata.append(StratumDatum(
                label=str(s["label"]),
                e_open=BivariateLaurent.from_json(s["e_open"]),
                s=UnivariateInt.from_json(s["s"]),
                e_closure=(BivariateLaurent.from_json(s["e_closure"])
                           if s.get("e_closure") is not None else None),
                s_tilde=(UnivariateInt.from_json(s["s_tilde"])
                         if s.get("s_tilde") is not None else None),
                less_than=tuple(s.get("less_than", ())),
            ))
        return strata
    except (KeyError, TypeError, ValueError) as exc:
        raise PreconditionViolated(f"bad stratification file: {exc}") from exc


# -- toric Fano varieties -----------------------------------------------------


def e_st_fano(delta: LatticePolytope) -> BivariateLaurent:
    """Stringy E-polynomial of the Gorenstein toric Fano variety of a
    reflexive polytope, via the dual Ehrhart numerator; cross-checked
    against the torus-orbit stratification sum over all faces."""
    if not is_reflexive(delta):
        raise NotReflexive("Fano formula needs a reflexive polytope")
    d = delta.dim
    dual = polar_dual(delta)
    closed = BivariateLaurent.from_uv_diagonal(s_polynomial(dual))

    orbit = _uv_pow_minus_one(d)          # the open torus, S = 1
    fl = face_lattice(delta)
    for dim_theta in range(d):
        for theta in fl.get(dim_theta, ()):
            star = dual_face(delta, theta).as_polytope()
            orbit = orbit + _uv_pow_minus_one(dim_theta) * \
                BivariateLaurent.from_uv_diagonal(s_polynomial(star))
    if closed != orbit:
        raise InconsistentStratification(
            "Fano closed form disagrees with the orbit stratification sum")
    assert euler_number(closed) == normalized_volume(dual)
    return closed


# -- Calabi-Yau hypersurfaces -------------------------------------------------


def _stilde(theta: LatticePolytope) -> UnivariateInt:
    return box_s_polynomials(theta)[1]


def hypersurface_face_e(theta, mode="full_simplex") -> BivariateLaurent:
    """E-polynomial of the affine hypersurface piece sitting over the
    torus orbit of a face.

    full_simplex mode needs a simplex face (its S~ data comes from box
    points); u_equals_1 works for any face and returns the polynomial
    in v alone (stored with u-exponent 0).
    """
    P = _as_polytope(theta)
    k = P.dim
    if k < 1:
        raise PreconditionViolated("face must have dimension >= 1")
    if mode == "full_simplex":
        if not P.is_simplex():
            raise NotSimplex("full mode requires a simplex face")
        # ((uv-1)^k - (-1)^k) / uv
        lead = (_uv_pow_minus_one(k) - BivariateLaurent.from_int((-1) ** k)) \
            .shift(-1, -1)
        sign = (-1) ** (k - 1)
        tail = BivariateLaurent.zero()
        fl = face_lattice(P)
        for dim_tau in range(1, k + 1):
            for tau in fl.get(dim_tau, ()):
                st = _stilde(tau.as_polytope())
                if st:
                    tail = tail + BivariateLaurent.from_uinv_v(st) \
                        .shift(dim_tau, -1)
        out = lead + sign * tail
        if not all(b >= -1 for (_, b) in out.terms):
            raise NonPolynomialResult("unexpected v-pole in face E-polynomial")
        return out
    if mode == "u_equals_1":
        # ((v-1)^k + (-1)^(k-1) S(theta, v)) / v
        num = binomial_poly(-1, k) + (-1) ** (k - 1) * s_polynomial(P)
        if num[0] != 0:
            raise NonPolynomialResult("face numerator not divisible by v")
        return BivariateLaurent({(0, i - 1): num[i]
                                 for i in range(1, num.degree + 1)})
    raise PreconditionViolated(f"unknown mode {mode!r}")


@dataclass(frozen=True)
class HypersurfaceInvariants:
    """Stringy invariants of the Calabi-Yau hypersurface family of a
    reflexive polytope."""

    d: int
    e_st: Optional[BivariateLaurent]
    e_st_u1: BivariateLaurent
    euler: int
    h_p1: dict
    hodge: Optional[dict]


def _paired_faces(delta, lo, hi):
    """(theta, theta*) for faces of delta with lo <= dim theta <= hi."""
    fl = face_lattice(delta)
    out = []
    for dim_theta in range(lo, hi + 1):
        for theta in fl.get(dim_theta, ()):
            out.append((theta.as_polytope(),
                        dual_face(delta, theta).as_polytope()))
    return out


def _e_st_u1(delta: LatticePolytope) -> BivariateLaurent:
    """E_st at u = 1 for any reflexive polytope, from face S-polynomials."""
    d = delta.dim
    if d == 1:
        # the unique reflexive segment; the hypersurface is two reduced
        # points, below the range of the face summation
        return BivariateLaurent.from_int(2)
    dual = polar_dual(delta)
    sign = (-1) ** (d - 1)
    num = s_polynomial(dual) + sign * s_polynomial(delta)
    for theta, star in _paired_faces(delta, 1, d - 2):
        num = num + (-1) ** (theta.dim - 1) * \
            (s_polynomial(theta) * s_polynomial(star))
    fl = face_lattice(delta)
    for theta in fl.get(d - 1, ()):
        num = num - sign * s_polynomial(theta.as_polytope())
    for vertex in fl.get(0, ()):
        num = num - s_polynomial(dual_face(delta, vertex).as_polytope())
    if num and num[0] != 0:
        raise NonPolynomialResult("u=1 numerator not divisible by v")
    out = BivariateLaurent({(0, i - 1): num[i]
                            for i in range(1, max(num.degree + 1, 1))})
    coeffs = out.substitute_u1()
    if any(coeffs.get(q, 0) != coeffs.get(d - 1 - q, 0) for q in range(d)):
        raise NonPolynomialResult("u=1 output is not palindromic")
    return out


def e_st_hypersurface(delta: LatticePolytope,
                      mode="full_simplex") -> HypersurfaceInvariants:
    """Stringy E-data of the Calabi-Yau hypersurface family in the toric
    Fano variety of a reflexive polytope.

    full_simplex mode (reflexive simplices) assembles the complete
    (u, v) polynomial out of the S~-polynomials of the polytope, its
    dual, and all face pairs; the result must be an honest polynomial
    satisfying Poincare duality.  u_equals_1 works for every reflexive
    polytope but only determines the column sums of the Hodge diamond.
    """
    if not is_reflexive(delta):
        raise NotReflexive("hypersurface invariants need a reflexive polytope")
    d = delta.dim
    u1 = _e_st_u1(delta)
    euler = euler_number(u1)
    h_p1 = {p: h_st_p1(delta, p) for p in range(2, d - 2)} if d >= 5 else {}
    if mode == "u_equals_1":
        return HypersurfaceInvariants(d=d, e_st=None, e_st_u1=u1,
                                      euler=euler, h_p1=h_p1, hodge=None)
    if mode != "full_simplex":
        raise PreconditionViolated(f"unknown mode {mode!r}")
    if not delta.is_simplex():
        raise NotSimplex("full mode requires a reflexive simplex")
    dual = polar_dual(delta)
    sign = (-1) ** (d - 1)
    est = BivariateLaurent.from_uv_diagonal(_stilde(dual)).shift(-1, -1)
    est = est + sign * BivariateLaurent.from_uinv_v(_stilde(delta)).shift(d, -1)
    for theta, star in _paired_faces(delta, 1, d - 2):
        st_theta = _stilde(theta)
        st_star = _stilde(star)
        if st_theta and st_star:
            est = est + (-1) ** (theta.dim - 1) * (
                BivariateLaurent.from_uinv_v(st_theta).shift(theta.dim, -1)
                * BivariateLaurent.from_uv_diagonal(st_star))
    if not est.is_polynomial():
        raise NonPolynomialResult("Laurent terms failed to cancel in E_st")
    if est.poincare_transform(d - 1) != est:
        raise NonPolynomialResult("E_st violates Poincare duality")
    if est.substitute_u1() != u1.substitute_u1():
        raise InconsistentStratification(
            "u=1 specialization disagrees with the direct u=1 formula")
    assert euler_number(est) == euler
    return HypersurfaceInvariants(d=d, e_st=est, e_st_u1=u1, euler=euler,
                                  h_p1=h_p1, hodge=est.hodge_numbers())


def e_st_hyp_euler(delta: LatticePolytope) -> int:
    """Stringy Euler number of the hypersurface family as the alternating
    sum of normalized face-volume products over dual face pairs.

    The sign used is (-1)^(dim theta - 1), which is what the u = 1
    formula specializes to; it reproduces the Euler number of the full
    E_st polynomial on simplices of every dimension.
    """
    if not is_reflexive(delta):
        raise NotReflexive("Euler sum needs a reflexive polytope")
    d = delta.dim
    if d < 2:
        raise PreconditionViolated("need dim >= 2")
    total = 0
    for theta, star in _paired_faces(delta, 1, d - 2):
        total += (-1) ** (theta.dim - 1) * \
            normalized_volume(theta) * normalized_volume(star)
    return total


def h_st_p1(delta: LatticePolytope, p: int) -> int:
    """h^(p,1) of the hypersurface family, as the interior-point pairing
    over faces of codimension p; valid for d >= 5 and 2 <= p <= d-3."""
    if not is_reflexive(delta):
        raise NotReflexive("h^(p,1) pairing needs a reflexive polytope")
    d = delta.dim
    if d < 5 or not 2 <= p <= d - 3:
        raise OutOfRange(f"pairing formula needs d >= 5 and 2 <= p <= d-3; "
                         f"got d={d}, p={p}")
    total = 0
    for theta, star in _paired_faces(delta, d - p, d - p):
        total += l_star(theta) * l_star(star)
    return total


def mirror_check(delta: LatticePolytope) -> dict:
    """Full mirror-duality report for a reflexive simplex and its dual.

    Verifies E_st(f-side; u, v) = (-u)^(d-1) E_st(g-side; u^-1, v)
    exactly and returns both Hodge diamonds.
    """
    if not delta.is_simplex():
        raise NotSimplex("mirror check runs on reflexive simplices")
    d = delta.dim
    inv_f = e_st_hypersurface(delta, mode="full_simplex")
    inv_g = e_st_hypersurface(polar_dual(delta), mode="full_simplex")
    mirrored = inv_g.e_st.mirror_transform(d - 1)
    if inv_f.e_st != mirrored:
        raise InconsistentStratification("mirror duality transform failed")
    return {
        "d": d,
        "e_st_f": inv_f.e_st.to_json(),
        "e_st_g": inv_g.e_st.to_json(),
        "euler_f": inv_f.euler,
        "euler_g": inv_g.euler,
        "hodge_f": sorted([p, q, h] for (p, q), h in inv_f.hodge.items()),
        "hodge_g": sorted([p, q, h] for (p, q), h in inv_g.hodge.items()),
        "mirror_duality": True,
    }


def dwork_invariants(d: int) -> dict:
    """Closed-form stringy invariants of the mirror family of smooth
    degree-(d+1) Calabi-Yau hypersurfaces in P^d (the quotient of the
    one-parameter pencil by its diagonal symmetry group).

    h^(p,p) = sum_i (-1)^i C(d+1, i) C((p+1-i)d + p, d) + [2p == d-1];
    the Euler number is (-1)^(d-1) times the Euler number of the smooth
    degree-(d+1) hypersurface, computed from its Chern class.
    """
    if d < 2:
        raise PreconditionViolated("need d >= 2")
    h_pp = []
    for p in range(d):
        val = sum((-1) ** i * comb(d + 1, i) * comb((p + 1 - i) * d + p, d)
                  for i in range(p + 1))
        if 2 * p == d - 1:
            val += 1
        h_pp.append(val)
    euler_smooth = ((-d) ** (d + 1) - 1) // (d + 1) + d + 1
    euler = (-1) ** (d - 1) * euler_smooth
    return {"h_pp": h_pp, "euler": euler}
