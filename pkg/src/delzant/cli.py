"""Command-line interface: JSON ingestion, catalog access, identity
verification, and table reproduction.

Exit codes: 0 on pass, 1 on identity failure, 2 on input or usage errors.
"""

import argparse
import json
import sys

from . import bounds, catalog, gkm, oracle, reflexive, serialize
from .errors import DelzantError, MalformedInput, UnboundedSearch
from .report import VerificationReport


def _read_json(source):
    if source == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(source) as fh:
                text = fh.read()
        except OSError as e:
            raise MalformedInput(f"cannot read {source!r}: {e}")
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise MalformedInput(f"invalid JSON in {source!r}: {e}")


def _load_input(source):
    """Resolve an input spec to a polytope or graph.

    Accepts ``catalog:NAME``, a file path, or ``-`` for standard input.
    """
    if source.startswith("catalog:"):
        name = source[len("catalog:"):]
        try:
            return catalog.load(name)
        except KeyError as e:
            raise MalformedInput(str(e))
    data = _read_json(source)
    if isinstance(data, dict) and "ambient_dim" in data:
        return serialize.graph_from_json(data)
    return serialize.polytope_from_json(data)


def _emit(payload, text=False):
    if text:
        _emit_text(payload)
    else:
        print(json.dumps(payload, indent=2, sort_keys=True))


def _emit_text(payload, indent=0):
    pad = "  " * indent
    if isinstance(payload, dict):
        for k, v in payload.items():
            if isinstance(v, (dict, list)):
                print(f"{pad}{k}:")
                _emit_text(v, indent + 1)
            else:
                print(f"{pad}{k}: {v}")
    elif isinstance(payload, list):
        for v in payload:
            if isinstance(v, (dict, list)):
                _emit_text(v, indent + 1)
            else:
                print(f"{pad}{v}")
    else:
        print(f"{pad}{payload}")


def _report_exit(rep, text):
    _emit(rep.to_dict(), text)
    return 0 if rep.passed else 1


def cmd_check(args):
    obj = _load_input(args.input)
    which = args.which
    if which == "delzant":
        dr = reflexive.is_delzant(obj)
        rep = VerificationReport("delzant", dr.overall)
        rep.add_item("simple", dr.simple)
        rep.add_item("rational", dr.rational)
        for vid, ok in dr.smooth_per_vertex.items():
            rep.add_item(f"smooth vertex {vid}", ok)
    elif which == "reflexive":
        ok = reflexive.is_reflexive(obj)
        rep = VerificationReport("reflexive", ok)
    elif which == "gkm":
        rep = gkm.validate(obj)
    elif which == "gorenstein":
        cert = gkm.gorenstein_index(obj)
        rep = VerificationReport("gorenstein", cert.valid)
        rep.add_item("index", True, {"r": cert.r})
    else:  # pragma: no cover - argparse restricts choices
        raise MalformedInput(f"unknown check {which!r}")
    return _report_exit(rep, args.text)


def cmd_verify(args):
    obj = _load_input(args.input)
    ident = args.identity
    if ident == "main":
        rep = reflexive.verify_main_theorem(obj)
    elif ident == "12-24":
        rep = reflexive.verify_12_24(obj)
    elif ident == "combinatorics2":
        rep = reflexive.verify_thm_combinatorics2(obj)
    elif ident == "length-decomposition":
        rep = reflexive.verify_length_decomposition(obj)
    elif ident == "index-corollary":
        rep = reflexive.verify_index_corollary(obj)
    elif ident == "graph-corollary":
        rep = gkm.verify_graph_corollary(obj)
    elif ident.startswith("gorenstein:"):
        r = int(ident.split(":", 1)[1])
        rep = reflexive.verify_gorenstein(obj, r)
    else:
        raise MalformedInput(f"unknown identity {ident!r}")
    if args.with_oracle and hasattr(obj, "f_vector"):
        ok = oracle.brute_f_vector(obj) == obj.f_vector()
        rep.add_item("oracle f-vector", ok)
        for e in obj.edges():
            count = oracle.lattice_points_on_segment(
                obj.vertices[e[0]], obj.vertices[e[1]]
            )
            rep.add_item(f"oracle length {e}", count - 1 == obj.relative_length(e))
    return _report_exit(rep, args.text)


def cmd_dual(args):
    P = _load_input(args.input)
    _emit(serialize.polytope_to_json(P.dual()), args.text)
    return 0


def cmd_fvector(args):
    P = _load_input(args.input)
    out = {"f": list(P.f_vector())}
    if args.with_oracle:
        out["oracle_f"] = list(oracle.brute_f_vector(P))
        if out["oracle_f"] != out["f"]:
            _emit(out, args.text)
            return 1
    _emit(out, args.text)
    return 0


def _parse_xi(text):
    try:
        return tuple(int(c) for c in text.split(","))
    except ValueError:
        raise MalformedInput(f"cannot parse direction {text!r}")


def cmd_hvector(args):
    obj = _load_input(args.input)
    xi = _parse_xi(args.xi) if args.xi else None
    if hasattr(obj, "h_vector_comb"):
        out = {"h": list(obj.h_vector_comb())}
        if xi is not None or args.directed:
            out["h_directed"] = list(obj.h_vector_directed(xi))
    else:
        out = {"h": list(gkm.h_vector_graph(obj, xi))}
    _emit(out, args.text)
    return 0


def cmd_lengths(args):
    obj = _load_input(args.input)
    if hasattr(obj, "relative_length"):
        per = [
            {"edge": list(e), "length": serialize.num_to_json(obj.relative_length(e))}
            for e in obj.edges()
        ]
        total = reflexive.sum_lengths(obj)
    else:
        per = [
            {"edge": list(e), "length": serialize.num_to_json(obj.length(e))}
            for e in obj.edges()
        ]
        total = obj.sum_lengths()
    _emit({"edges": per, "sum": serialize.num_to_json(total)}, args.text)
    return 0


def cmd_gkm_build(args):
    from . import roots

    I = tuple(int(i) for i in args.I.split(",")) if args.I else ()
    rs = roots.build(args.type, args.rank)
    G = roots.coadjoint_graph(rs, I)
    rep = gkm.verify_graph_corollary(G)
    out = serialize.graph_to_json(G)
    out["h"] = list(gkm.h_vector_graph(G))
    out["sum_lengths"] = serialize.num_to_json(G.sum_lengths())
    out["verification"] = rep.to_dict()
    _emit(out, args.text)
    return 0 if rep.passed else 1


def cmd_gkm_check(args):
    G = _load_input(args.input)
    rep = gkm.validate(G)
    return _report_exit(rep, args.text)


def cmd_bounds_table(args):
    ns = range(args.n_min, args.n_max + 1)
    k0s = range(args.k0_min, args.k0_max + 1)
    table = bounds.table_c(ns, k0s)
    out = [
        {"n": n, "k0": k0, "constant": c, "coefficients": list(coef)}
        for (n, k0), (c, coef) in sorted(table.items())
    ]
    _emit(out, args.text)
    return 0


def cmd_bounds_enumerate(args):
    res = bounds.enumerate_admissible(
        args.n, args.k0, require_unimodal=args.unimodal, cap=args.cap
    )
    out = {
        "n": res.n,
        "k0": res.k0,
        "constraints": res.constraints,
        "half_vectors": [list(h) for h in res.half_vectors],
        "complete": res.complete,
    }
    _emit(out, args.text)
    return 0


def cmd_catalog_list(args):
    out = [
        {"name": e.name, "kind": e.kind, "note": e.note}
        for e in catalog.entries().values()
        if args.kind is None or e.kind == args.kind
    ]
    _emit(out, args.text)
    return 0


def cmd_catalog_show(args):
    obj = catalog.load(args.name)
    if hasattr(obj, "f_vector"):
        _emit(serialize.polytope_to_json(obj), args.text)
    else:
        _emit(serialize.graph_to_json(obj), args.text)
    return 0


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--text", action="store_true", help="aligned text output instead of JSON"
    )
    p = argparse.ArgumentParser(
        prog="delzant",
        description="Exact verification of edge-length identities for "
        "reflexive Delzant polytopes and GKM graphs.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", parents=[common], help="validate an input object")
    c.add_argument("which", choices=["delzant", "reflexive", "gkm", "gorenstein"])
    c.add_argument("input")
    c.set_defaults(func=cmd_check)

    v = sub.add_parser("verify", parents=[common], help="verify an identity on an input object")
    v.add_argument("identity")
    v.add_argument("input")
    v.add_argument("--with-oracle", action="store_true")
    v.set_defaults(func=cmd_verify)

    d = sub.add_parser("dual", parents=[common], help="polar dual of a reflexive polytope")
    d.add_argument("input")
    d.set_defaults(func=cmd_dual)

    f = sub.add_parser("fvector", parents=[common], help="f-vector of a polytope")
    f.add_argument("input")
    f.add_argument("--with-oracle", action="store_true")
    f.set_defaults(func=cmd_fvector)

    h = sub.add_parser("hvector", parents=[common], help="h-vector of a polytope or graph")
    h.add_argument("input")
    h.add_argument("--xi", help="generic direction as comma-separated integers")
    h.add_argument("--directed", action="store_true")
    h.set_defaults(func=cmd_hvector)

    l = sub.add_parser("lengths", parents=[common], help="edge lengths and their sum")
    l.add_argument("input")
    l.set_defaults(func=cmd_lengths)

    g = sub.add_parser("gkm", help="GKM graph operations")
    gsub = g.add_subparsers(dest="gkm_command", required=True)
    gb = gsub.add_parser("build", parents=[common], help="build a coadjoint Weyl-orbit graph")
    gb.add_argument("type", help="root system type: A, B, C, D or G2")
    gb.add_argument("rank", type=int)
    gb.add_argument("--I", default="", help="comma-separated 0-based simple-root indices")
    gb.set_defaults(func=cmd_gkm_build)
    gc = gsub.add_parser("check", parents=[common], help="validate a GKM graph")
    gc.add_argument("input")
    gc.set_defaults(func=cmd_gkm_check)

    b = sub.add_parser("bounds", help="coefficient tables and admissible vectors")
    bsub = b.add_subparsers(dest="bounds_command", required=True)
    bt = bsub.add_parser("table", parents=[common], help="coefficient table over ranges of n and k0")
    bt.add_argument("--n-min", type=int, default=2)
    bt.add_argument("--n-max", type=int, default=5)
    bt.add_argument("--k0-min", type=int, default=1)
    bt.add_argument("--k0-max", type=int, default=6)
    bt.set_defaults(func=cmd_bounds_table)
    be = bsub.add_parser("enumerate", parents=[common], help="admissible symmetric vectors for (n, k0)")
    be.add_argument("--n", type=int, required=True)
    be.add_argument("--k0", type=int, required=True)
    be.add_argument("--unimodal", action="store_true")
    be.add_argument("--cap", type=int)
    be.set_defaults(func=cmd_bounds_enumerate)

    cat = sub.add_parser("catalog", help="built-in example catalog")
    csub = cat.add_subparsers(dest="catalog_command", required=True)
    cl = csub.add_parser("list", parents=[common])
    cl.add_argument("--kind", choices=["polytope", "gkm-graph"])
    cl.set_defaults(func=cmd_catalog_list)
    cs = csub.add_parser("show", parents=[common])
    cs.add_argument("name")
    cs.set_defaults(func=cmd_catalog_show)

    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (MalformedInput, UnboundedSearch, KeyError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except DelzantError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
