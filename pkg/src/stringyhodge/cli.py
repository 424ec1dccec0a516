"""Command-line front end.

Every verb reads JSON files and writes one JSON document to stdout;
diagnostics go to stderr.  Output is byte-identical across runs on
identical input (keys sorted, compact separators).  Exit codes:
0 success, 2 invalid input, 3 resource limit exceeded, 4 internal
identity violation.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import orbifold, polytope, quotient, stringy, triangulation
from .errors import (IdentityViolation, InvalidInput, LimitExceeded,
                     StringyHodgeError)


def _load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except FileNotFoundError as exc:
        raise InvalidInput(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"{path} is not valid JSON: {exc}") from exc


def _load_polytope(path):
    return polytope.polytope_from_json(_load_json(path))


def _load_group(path, cap):
    gens = quotient.group_from_json(_load_json(path))
    return quotient.generate(gens, cap=cap)


def _element_json(g):
    return {"perm": list(g.perm),
            "phases": [f"{p.numerator}/{p.denominator}" for p in g.phases]}


# -- verb implementations -----------------------------------------------------


def _cmd_poly_info(args):
    P = _load_polytope(args.file)
    facets = polytope.facet_representation(P)
    return {
        "ambient_dim": P.ambient_dim,
        "dim": P.dim,
        "n_vertices": len(P.vertices),
        "vertices": [list(v) for v in P.vertices],
        "facets": [{"normal": list(f.normal), "offset": f.offset}
                   for f in facets],
        "reflexive": polytope.is_reflexive(P),
        "normalized_volume": polytope.normalized_volume(P),
        "lattice_points": polytope.count_points(P, 1),
        "interior_points": polytope.count_points(P, 1, interior_only=True),
    }


def _cmd_poly_dual(args):
    P = _load_polytope(args.file)
    return polytope.polytope_to_json(polytope.polar_dual(P))


def _cmd_poly_spoly(args):
    P = _load_polytope(args.file)
    return polytope.s_polynomial(P).to_json()


def _cmd_poly_box(args):
    P = _load_polytope(args.file)
    boxes = polytope.box_points(P)
    s, st = polytope.box_s_polynomials(P)
    return {
        "count": len(boxes),
        "s": s.to_json(),
        "s_tilde": st.to_json(),
        "box_points": [
            {"lattice_point": list(b.lattice_point),
             "barycentric": [f"{x.numerator}/{x.denominator}"
                             for x in b.barycentric],
             "weight": f"{b.weight.numerator}/{b.weight.denominator}",
             "support": sorted(b.support)}
            for b in boxes
        ],
    }


def _cmd_group_info(args):
    G = _load_group(args.file, args.cap)
    classes = []
    for cls in G.classes:
        _, wt, ht = quotient.eigen_angles(cls[0])
        classes.append({
            "representative": _element_json(cls[0]),
            "size": len(cls),
            "weight": f"{wt.numerator}/{wt.denominator}",
            "height": ht,
        })
    return {"degree": G.degree, "order": G.order(),
            "num_classes": len(G.classes), "classes": classes}


def _cmd_group_spoly(args):
    G = _load_group(args.file, args.cap)
    s, st = quotient.group_s_polynomials(G)
    return {"s": s.to_json(), "s_tilde": st.to_json()}


def _cmd_group_bridge(args):
    G = _load_group(args.file, args.cap)
    theta = quotient.abelian_simplex_bridge(G)
    s_g, st_g = quotient.group_s_polynomials(G)
    s_p, st_p = polytope.box_s_polynomials(theta)
    match = (s_g == s_p) and (st_g == st_p)
    if not match:
        raise IdentityViolation("bridge gradings disagree")
    return {"simplex": polytope.polytope_to_json(theta),
            "s": s_g.to_json(), "s_tilde": st_g.to_json(), "match": match}


def _cmd_tri_verify(args):
    P = _load_polytope(args.file)
    return triangulation.verify_fiber_identity(P, order=args.order)


def _cmd_stringy_fano(args):
    P = _load_polytope(args.file)
    est = stringy.e_st_fano(P)
    return {"e_st": est.to_json(), "euler": stringy.euler_number(est)}


def _cmd_stringy_hyp(args):
    P = _load_polytope(args.file)
    mode = "u_equals_1" if args.u1 else "full_simplex"
    inv = stringy.e_st_hypersurface(P, mode=mode)
    return {
        "d": inv.d,
        "e_st": inv.e_st.to_json() if inv.e_st is not None else None,
        "e_st_u1": inv.e_st_u1.to_json(),
        "euler": inv.euler,
        "h_p1": [[p, inv.h_p1[p]] for p in sorted(inv.h_p1)],
        "hodge_diamond": (sorted([p, q, h] for (p, q), h in inv.hodge.items())
                          if inv.hodge is not None else None),
    }


def _cmd_stringy_euler(args):
    P = _load_polytope(args.file)
    return {"euler": stringy.e_st_hyp_euler(P)}


def _cmd_stringy_hp1(args):
    P = _load_polytope(args.file)
    return {"p": args.p, "h_p1": stringy.h_st_p1(P, args.p)}


def _cmd_stringy_mirror(args):
    P = _load_polytope(args.file)
    return stringy.mirror_check(P)


def _cmd_stringy_dwork(args):
    inv = stringy.dwork_invariants(args.d)
    return {"d": args.d, "h_pp": inv["h_pp"], "h11": inv["h_pp"][1],
            "euler": inv["euler"]}


def _cmd_orbifold_hodge(args):
    data = orbifold.orbifold_from_json(_load_json(args.file))
    result = orbifold.orbifold_hodge(data)
    diamond = result["diamond"]
    return {
        "dimension": data.dimension,
        "hodge_diamond": orbifold.diamond_to_json(diamond),
        "h11": diamond.get((1, 1), 0),
        "h21": diamond.get((2, 1), 0),
        "euler": result["euler"],
    }


# -- dispatch -----------------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(
        prog="stringyhodge",
        description="Exact stringy Hodge invariants of toric and quotient "
                    "singularities.")
    parser.add_argument("--pretty", action="store_true",
                        help="indent the JSON output")
    sub = parser.add_subparsers(dest="group_verb", required=True)

    poly = sub.add_parser("poly", help="lattice polytope operations")
    psub = poly.add_subparsers(dest="verb", required=True)
    for name, fn, hlp in [
            ("info", _cmd_poly_info, "facets, volume, reflexivity"),
            ("dual", _cmd_poly_dual, "polar dual of a reflexive polytope"),
            ("spoly", _cmd_poly_spoly, "Ehrhart psi-vector"),
            ("box", _cmd_poly_box, "box points of a simplex")]:
        p = psub.add_parser(name, help=hlp)
        p.add_argument("file")
        p.set_defaults(fn=fn)

    group = sub.add_parser("group", help="finite monomial SL(d) subgroups")
    gsub = group.add_subparsers(dest="verb", required=True)
    for name, fn, hlp in [
            ("info", _cmd_group_info, "order and conjugacy class data"),
            ("spoly", _cmd_group_spoly, "S- and S~-polynomials"),
            ("bridge", _cmd_group_bridge, "abelian group -> simplex bridge")]:
        p = gsub.add_parser(name, help=hlp)
        p.add_argument("file")
        p.add_argument("--cap", type=int, default=10 ** 6,
                       help="group order cap (default 10^6)")
        p.set_defaults(fn=fn)

    tri = sub.add_parser("tri", help="triangulation checks")
    tsub = tri.add_subparsers(dest="verb", required=True)
    p = tsub.add_parser("verify", help="fiber cohomology identity")
    p.add_argument("file")
    p.add_argument("--order", choices=("lex", "revlex"), default="lex")
    p.set_defaults(fn=_cmd_tri_verify)

    st = sub.add_parser("stringy", help="stringy E-polynomials")
    ssub = st.add_subparsers(dest="verb", required=True)
    p = ssub.add_parser("fano", help="toric Fano E_st")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_stringy_fano)
    p = ssub.add_parser("hyp", help="Calabi-Yau hypersurface E_st")
    p.add_argument("file")
    p.add_argument("--u1", action="store_true",
                   help="u = 1 specialization (any reflexive polytope)")
    p.set_defaults(fn=_cmd_stringy_hyp)
    p = ssub.add_parser("euler", help="hypersurface Euler number via face volumes")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_stringy_euler)
    p = ssub.add_parser("hp1", help="h^(p,1) interior-point pairing")
    p.add_argument("file")
    p.add_argument("--p", type=int, required=True)
    p.set_defaults(fn=_cmd_stringy_hp1)
    p = ssub.add_parser("mirror", help="mirror duality report for a simplex")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_stringy_mirror)
    p = ssub.add_parser("dwork", help="closed-form pencil-quotient invariants")
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(fn=_cmd_stringy_dwork)

    orb = sub.add_parser("orbifold", help="orbifold Hodge numbers")
    osub = orb.add_subparsers(dest="verb", required=True)
    p = osub.add_parser("hodge", help="diamond and Euler number from sectors")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_orbifold_hodge)
    return parser


def dispatch(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        result = args.fn(args)
    except LimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except IdentityViolation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except (InvalidInput, StringyHodgeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.pretty:
        out = json.dumps(result, sort_keys=True, indent=2)
    else:
        out = json.dumps(result, sort_keys=True, separators=(",", ":"))
    print(out)
    return 0


def main():
    sys.exit(dispatch())


if __name__ == "__main__":
    main()
