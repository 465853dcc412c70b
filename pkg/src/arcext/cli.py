"""Command line front end: ``arcext VERB --m M --n N [options]``."""

import argparse
import csv
import io
import json
import sys

from .diagrams import check_weight, enumerate_weights


def _dump(obj):
    return json.dumps(obj, indent=1, sort_keys=True, default=str) + "\n"


def _csv(header, rows):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow([str(x) for x in r])
    return buf.getvalue()


def _elem(x):
    return {str(k): str(v) for k, v in sorted(x.items())}


def do_algebra(a, out):
    from .algebra import get_algebra

    A = get_algebra(a["m"], a["n"])
    ws = A.weights
    if out == "csv":
        return _csv(["row"] + ws, [[u] + [str(A.cartan_entry(u, v)) for v in ws] for u in ws])
    return _dump(
        {
            "m": A.m,
            "n": A.n,
            "dim": len(A),
            "graded_dimension": str(A.graded_dimension()),
            "weights": ws,
            "cartan": {u: {v: str(A.cartan_entry(u, v)) for v in ws} for u in ws},
            "basis": [[i, A.label(i), A.degree(i)] for i in range(len(A))],
        }
    )


def do_modules(a, out):
    from .algebra import get_algebra
    from .modules import cell_module, projective_module

    A = get_algebra(a["m"], a["n"])
    lam = check_weight(a["weight"], a["m"], a["n"])
    M = cell_module(A, lam) if a.get("what", "cell") == "cell" else projective_module(A, lam)
    if out == "csv":
        return _csv(["index", "label", "degree"], [[i, l, d] for i, (l, d) in enumerate(zip(M.labels, M.degrees))])
    return _dump({"module": M.name, "dim": len(M), "graded_dimension": str(M.graded_dimension()), "basis": [[l, d] for l, d in zip(M.labels, M.degrees)]})


def do_kl(a, out):
    from .kl import kl_poly

    if a.get("pair"):
        lam, mu = a["pair"]
        return _dump({"lambda": lam, "mu": mu, "p": str(kl_poly(lam, mu))})
    ws = enumerate_weights(a["m"], a["n"])
    if out == "csv":
        return _csv(["lambda"] + ws, [[u] + [str(kl_poly(u, v)) for v in ws] for u in ws])
    return _dump({u: {v: str(kl_poly(u, v)) for v in ws} for u in ws})


def do_resolve(a, out):
    from .algebra import get_algebra
    from .resolver import get_resolution

    A = get_algebra(a["m"], a["n"])
    lam = check_weight(a["weight"], a["m"], a["n"])
    cx = get_resolution(A, lam)
    if a.get("betti"):
        rows = [[i, mu, s, c] for i, row in cx.betti().items() for (mu, s), c in sorted(row.items())]
        if out == "csv":
            return _csv(["position", "weight", "shift", "multiplicity"], rows)
        return _dump({"weight": lam, "betti": rows})
    diffs = []
    for i, d in enumerate(cx.diffs):
        diffs.append([[src, tgt, _elem(x)] for (src, tgt), x in sorted(d.items())])
    if out == "csv":
        rows = [[i, s, t, k, v] for i, d in enumerate(diffs) for s, t, x in d for k, v in x.items()]
        return _csv(["map", "source", "target", "basis_id", "coefficient"], rows)
    return _dump({"weight": lam, "terms": cx.terms, "differentials": diffs})


def do_ext(a, out):
    from .dg import ext_table, get_splitting

    S = get_splitting(a["m"], a["n"])
    table = ext_table(S.dg, graded=a.get("graded", False))
    rows = [list(k) + [v] for k, v in table.items()]
    result = {"table": rows}
    if a.get("check_shelton"):
        from .shelton import cross_check

        result["shelton"] = cross_check(a["m"], a["n"], ext_table(S.dg))
    if a.get("structure"):
        cl = S.classes()
        consts = []
        for i in range(len(cl)):
            for j in range(len(cl)):
                if cl[i][1] == cl[j][0]:
                    for k, c in sorted(S.yoneda(i, j).items()):
                        consts.append([i, j, k, str(c)])
        result["classes"] = [[i, c[0], c[1], c[2], c[3]] for i, c in enumerate(cl)]
        result["structure"] = consts
    if out == "csv":
        head = ["source", "target", "k", "t", "dim"] if a.get("graded") else ["source", "target", "k", "dim"]
        return _csv(head, rows)
    return _dump(result)


def do_shelton(a, out):
    from .shelton import shelton_dims, shelton_table

    if a.get("pair"):
        x, y = a["pair"]
        return _dump({"x": x, "y": y, "dims": {str(k): v for k, v in sorted(shelton_dims(x, y).items())}})
    rows = [list(k) + [v] for k, v in shelton_table(a["m"], a["n"]).items()]
    if out == "csv":
        return _csv(["x", "y", "k", "dim"], rows)
    return _dump({"table": rows})


def do_ainfty(a, out):
    from .ainfty import AInftyModel, vanishing_scan
    from .dg import get_splitting

    S = get_splitting(a["m"], a["n"])
    model = AInftyModel(S, a.get("max_arity"))
    top = model.max_arity
    tables = {}
    for l in range(3, top + 1):
        tables[l] = model.table(l)
    last, witness = vanishing_scan(model, top)
    result = {
        "m": a["m"],
        "n": a["n"],
        "max_arity": top,
        "classes": [[i, c[0], c[1], c[2], c[3]] for i, c in enumerate(model.classes)],
        "nonzero_counts": {str(l): len(t) for l, t in tables.items()},
        "last_nonzero_arity": last,
    }
    dump_all = not a.get("dump_m3")
    entries = []
    for l, t in tables.items():
        if l == 3 or dump_all:
            for tup, v in sorted(t.items()):
                entries.append([l, list(tup), _elem(v)])
    result["entries"] = entries
    if out == "csv":
        rows = [[l, " ".join(map(str, tup)), k, c] for l, tup, v in entries for k, c in v.items()]
        return _csv(["arity", "tuple", "class", "coefficient"], rows)
    return _dump(result)


def do_quiver(a, out):
    from .dg import get_splitting
    from .quiver import emit_dot, n1_relations, n2_relations, quiver_presentation

    S = get_splitting(a["m"], a["n"])
    q = quiver_presentation(S)
    if out == "dot":
        return emit_dot(q)
    result = {"vertices": q.vertices, "arrows": q.arrows, "report": q.report}
    if a["n"] == 1:
        result["relations"] = n1_relations(S)
    elif a["n"] == 2:
        result["relations"] = n2_relations(S, q)
        result["colouring"] = "degree-based"
    if out == "csv":
        return _csv(["source", "target", "r", "t", "colour", "class", "corner"], [[x[k] for k in ("source", "target", "r", "t", "colour", "class", "corner")] for x in q.arrows])
    return _dump(result)


def do_suite(a, out):
    from .suite import load_config, run_suite

    over = {}
    if a.get("jobs"):
        over["jobs"] = a["jobs"]
    if a.get("seed") is not None:
        over["seed"] = a["seed"]
    cfg = load_config(a.get("config"), overrides=over)
    status, report = run_suite(cfg)
    a["_status"] = status
    if out == "csv":
        return _csv(["criterion", "name", "status"], [[k, v["name"], v["status"]] for k, v in report["criteria"].items()])
    return _dump(report)


VERBS = {
    "algebra": do_algebra,
    "modules": do_modules,
    "kl": do_kl,
    "resolve": do_resolve,
    "ext": do_ext,
    "shelton": do_shelton,
    "ainfty": do_ainfty,
    "quiver": do_quiver,
    "suite": do_suite,
}


def render(verb, args, out="json"):
    """The text a verb would print, for given keyword arguments."""
    return VERBS[verb](dict(args), out)


def build_parser():
    p = argparse.ArgumentParser(prog="arcext", description="Exact computations for K_m^n.")
    p.add_argument("verb", choices=sorted(VERBS))
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--out", choices=["json", "csv", "dot"], default="json")
    p.add_argument("--jobs", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--weight")
    p.add_argument("--what", choices=["cell", "proj"], default="cell")
    p.add_argument("--pair", nargs=2)
    p.add_argument("--betti", action="store_true")
    p.add_argument("--graded", action="store_true")
    p.add_argument("--check-shelton", action="store_true")
    p.add_argument("--structure", action="store_true")
    p.add_argument("--max-arity", type=int)
    p.add_argument("--dump-m3", action="store_true")
    p.add_argument("--config")
    p.add_argument("-o", "--output", help="write to a file instead of stdout")
    return p


def main(argv=None):
    ns = build_parser().parse_args(argv)
    args = vars(ns)
    verb, out, target = args.pop("verb"), args.pop("out"), args.pop("output")
    if out == "dot" and verb != "quiver":
        print("--out dot is only available for quiver", file=sys.stderr)
        return 2
    if verb in ("modules", "resolve") and not args.get("weight"):
        print(f"{verb} needs --weight", file=sys.stderr)
        return 2
    try:
        text = VERBS[verb](args, out)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    if target:
        with open(target, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return args.get("_status", 0)


if __name__ == "__main__":
    sys.exit(main())
