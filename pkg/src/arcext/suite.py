"""The acceptance checks, one function per criterion, and a driver.

Each check returns ``(ok, details)`` where ``details`` is JSON-friendly.
"""

import configparser
import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from .diagrams import weight_length

DEFAULTS = {
    "max_size": "6",
    "assoc_max_size": "5",
    "n1_max": "5",
    "quiver_n2": "3,4",
    "ainfty_cases": "1:1,2:1,3:1,4:1,5:1,2:2,3:2",
    "scan_arity": "7",
    "stasheff_case": "2:2",
    "stasheff_arity": "6",
    "criteria": "1,2,3,4,5,6,7,8,9,10",
    "seed": "0",
    "jobs": "1",
    "time_budget": "0",
}


def load_config(path=None, text=None, overrides=None):
    """Read ``key = value`` lines; a section header is optional."""
    cp = configparser.ConfigParser()
    cp.read_dict({"suite": DEFAULTS})
    if path is not None:
        with open(path) as fh:
            text = fh.read()
    if text:
        if not text.lstrip().startswith("["):
            text = "[suite]\n" + text
        cp.read_string(text)
    sec = cp["suite"]
    cfg = {
        "max_size": sec.getint("max_size"),
        "assoc_max_size": sec.getint("assoc_max_size"),
        "n1_max": sec.getint("n1_max"),
        "quiver_n2": _ints(sec["quiver_n2"]),
        "ainfty_cases": _pairs(sec["ainfty_cases"]),
        "scan_arity": sec.getint("scan_arity"),
        "stasheff_case": _pairs(sec["stasheff_case"])[0],
        "stasheff_arity": sec.getint("stasheff_arity"),
        "criteria": _ints(sec["criteria"]),
        "seed": sec.getint("seed"),
        "jobs": sec.getint("jobs"),
        "time_budget": sec.getfloat("time_budget"),
    }
    cfg.update(overrides or {})
    return cfg


def _ints(s):
    return [int(x) for x in s.replace(" ", "").split(",") if x]


def _pairs(s):
    out = []
    for chunk in s.replace(" ", "").split(","):
        if chunk:
            a, b = chunk.split(":")
            out.append((int(a), int(b)))
    return out


def cases_up_to(size):
    return [(m, s - m) for s in range(1, size + 1) for m in range(s, -1, -1)]


def _pmap(fn, args, jobs):
    if jobs > 1 and len(args) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            return list(ex.map(fn, args))
    return [fn(a) for a in args]


# 1: Shelton vs hom complex


def _oracle_case(mn):
    from .dg import DGAlgebra, ext_table
    from .shelton import cross_check

    m, n = mn
    r = cross_check(m, n, ext_table(DGAlgebra(m, n)))
    return {"case": [m, n], "total": r["total_ext"], "discrepancies": len(r["discrepancies"])}


def check_oracle(cfg):
    rows = _pmap(_oracle_case, cases_up_to(cfg["max_size"]), cfg["jobs"])
    return all(r["discrepancies"] == 0 for r in rows), rows


# 2: Betti numbers of the resolutions vs KL polynomials


def _betti_case(mn):
    from .algebra import get_algebra
    from .kl import kl_poly
    from .laurent import LaurentPoly
    from .resolver import get_resolution

    A = get_algebra(*mn)
    bad = 0
    for lam in A.weights:
        bp = get_resolution(A, lam).betti_polys()
        for mu in A.weights:
            if bp.get(mu, LaurentPoly()) != kl_poly(lam, mu):
                bad += 1
    return {"case": list(mn), "mismatches": bad}


def check_betti(cfg):
    rows = _pmap(_betti_case, cases_up_to(cfg["max_size"]), cfg["jobs"])
    return all(r["mismatches"] == 0 for r in rows), rows


# 3: fixtures


def check_fixtures(cfg):
    from .kl import kl_poly
    from .laurent import LaurentPoly

    fig = kl_poly("vvvv^^", "v^vv^v")
    ok = fig == LaurentPoly({4: 1, 2: 1})
    closed = True
    for N in range(1, cfg["n1_max"] + 1):
        for j in range(N + 1):
            for s in range(j + 1):
                lam = "v" * j + "^" + "v" * (N - j)
                mu = "v" * s + "^" + "v" * (N - s)
                if kl_poly(lam, mu) != LaurentPoly.monomial(j - s):
                    closed = False
    return ok and closed, {"example": str(fig), "n1_closed_form": closed}


# 4: vanishing bounds


def _bounds_case(mn):
    from .algebra import get_algebra
    from .dg import DGAlgebra, ext_table
    from .modules import bound_violations, cartan_bound_violations

    dg = DGAlgebra(*mn)
    ext = ext_table(dg)
    ext_bad = [k for k in ext if k[2] > weight_length(k[0]) - weight_length(k[1])]
    hom_bad = dg.vanishing_violations()
    A = get_algebra(*mn)
    return {
        "case": list(mn),
        "ext_vanishing": len(ext_bad),
        "hom_vanishing": len(hom_bad),
        "d_bounds": len(bound_violations(A)),
        "c_bounds": len(cartan_bound_violations(A)),
    }


def check_bounds(cfg):
    rows = _pmap(_bounds_case, cases_up_to(cfg["max_size"]), cfg["jobs"])
    ok = all(r["ext_vanishing"] == r["hom_vanishing"] == r["d_bounds"] == r["c_bounds"] == 0 for r in rows)
    return ok, rows


# 5: algebra sanity


def _algebra_case(mn):
    from .algebra import add_into, get_algebra
    from .modules import product_d_dt

    A = get_algebra(*mn)
    B = A.basis
    assoc = degree = 0
    by_left = {}
    for i, x in enumerate(B):
        by_left.setdefault(x.left, []).append(i)
    for i, x in enumerate(B):
        for j in by_left[x.right]:
            xy = A.multiply_basis(i, j)
            if any(A.degree(k) != A.degree(i) + A.degree(j) for k in xy):
                degree += 1
            for k in by_left[B[j].right]:
                lhs = A.multiply(xy, {k: Fraction(1)})
                rhs = A.multiply({i: Fraction(1)}, A.multiply_basis(j, k))
                if lhs != rhs:
                    assoc += 1
    one = A.unit()
    unit = sum(1 for i in range(len(A)) if A.multiply(one, {i: 1}) != {i: 1} or A.multiply({i: 1}, one) != {i: 1})
    sym = all(A.cartan_entry(a, b) == A.cartan_entry(b, a) for a in A.weights for b in A.weights)
    ddt = product_d_dt(A)
    cdd = all(ddt[(a, b)] == A.cartan_entry(a, b) for a in A.weights for b in A.weights)
    return {"case": list(mn), "dim": len(A), "assoc_failures": assoc, "degree_failures": degree, "unit_failures": unit, "cartan_symmetric": sym, "C_eq_DDt": cdd}


def check_algebra(cfg):
    rows = _pmap(_algebra_case, cases_up_to(cfg["assoc_max_size"]), cfg["jobs"])
    ok = all(r["assoc_failures"] == r["degree_failures"] == r["unit_failures"] == 0 and r["cartan_symmetric"] and r["C_eq_DDt"] for r in rows)
    return ok, rows


# 6: n = 1 quiver


def check_n1_quiver(cfg):
    from .dg import get_splitting
    from .quiver import n1_path_rank, n1_relations, n1_word_count

    rows = []
    ok = True
    for N in range(1, cfg["n1_max"] + 1):
        S = get_splitting(N, 1)
        rel = n1_relations(S)
        words = n1_word_count(N)
        rank = n1_path_rank(S)
        dimE = len(S.classes())
        good = not rel["failures"] and words == rank == dimE == (N + 1) ** 2
        ok &= good
        rows.append({"N": N, "relations_ok": not rel["failures"], "word_count": words, "path_rank": rank, "dim_E": dimE})
    return ok, rows


# 7: n = 2 quiver


def check_n2_quiver(cfg):
    from .dg import get_splitting
    from .quiver import n2_relations, quiver_presentation

    rows = []
    ok = True
    for N in cfg["quiver_n2"]:
        S = get_splitting(N - 1, 2)
        q = quiver_presentation(S)
        rels = n2_relations(S, q)
        seen = sorted({r["relation"] for r in rels})
        failures = [r for r in rels if not r["ok"]]
        scalars = {}
        for r in rels:
            if r["scalar"] is not None:
                scalars.setdefault(str(r["relation"]), set()).add(str(r["scalar"]))
        good = not failures and seen == list(range(1, 9)) and q.report["generates"]
        ok &= good
        rows.append(
            {
                "N": N,
                "instances": len(rels),
                "relations_seen": seen,
                "failures": len(failures),
                "scalars": {k: sorted(v) for k, v in sorted(scalars.items())},
                "colouring": "degree-based",
                "arrows": len(q.arrows),
            }
        )
    return ok, rows


# 8: A-infinity vanishing


def check_ainfty(cfg):
    from .ainfty import AInftyModel
    from .dg import HomElement, get_splitting

    rng = random.Random(cfg["seed"])
    rows = []
    ok = True
    for m, n in cfg["ainfty_cases"]:
        S = get_splitting(m, n)
        # spot-check the homotopy identity on random elements before trusting Q
        homotopy_ok = _spot_check_homotopy(S, rng, 20)
        model = AInftyModel(S)
        top = max(cfg["scan_arity"], n * n + 3)
        nonzero = {}
        for l in range(3, top + 1):
            nonzero[l] = sum(1 for _ in model.table(l).items())
        last = max([l for l, c in nonzero.items() if c] or [2])
        good = homotopy_ok and all(c == 0 for l, c in nonzero.items() if l > n * n + 2)
        if n == 1:
            good &= last == 2
        if n == 2:
            good &= nonzero[3] > 0 and all(c == 0 for l, c in nonzero.items() if l >= 4)
        ok &= good
        rows.append({"case": [m, n], "nonzero_counts": {str(k): v for k, v in nonzero.items()}, "last_nonzero_arity": last, "homotopy_spot_check": homotopy_ok})
    return ok, rows


def _spot_check_homotopy(S, rng, count):
    from .dg import HomElement

    dg = S.dg
    keys = [(l, u, r, t) for l in dg.weights for u in dg.weights for (r, t) in sorted(dg.blocks(l, u))]
    for _ in range(count):
        l, u, r, t = rng.choice(keys)
        basis = dg.block(l, u, r, t)
        F = HomElement(l, u, r, {k: Fraction(rng.randint(-2, 2)) for k in rng.sample(basis, min(3, len(basis)))}, t)
        if (F - S.Pi(F)).data != (dg.d(S.Q(F)) + S.Q(dg.d(F))).data:
            return False
    return True


# 9: Stasheff


def check_stasheff(cfg):
    from .ainfty import AInftyModel, stasheff_check
    from .dg import get_splitting

    m, n = cfg["stasheff_case"]
    model = AInftyModel(get_splitting(m, n))
    bad = stasheff_check(model, cfg["stasheff_arity"])
    counts = {str(N): sum(1 for _ in model.chains(N)) for N in range(3, cfg["stasheff_arity"] + 1)}
    return not bad, {"case": [m, n], "tuples_checked": counts, "violations": len(bad)}


# 10: determinism


def check_determinism(cfg):
    from . import clear_caches
    from .cli import render

    requests = [
        ("algebra", {"m": 2, "n": 2}, "json"),
        ("kl", {"m": 2, "n": 2}, "csv"),
        ("resolve", {"m": 2, "n": 2, "weight": "vv^^"}, "json"),
        ("ext", {"m": 2, "n": 2, "graded": True}, "csv"),
        ("ainfty", {"m": 2, "n": 2, "max_arity": 4, "dump_m3": True}, "json"),
        ("quiver", {"m": 2, "n": 2}, "dot"),
        ("shelton", {"m": 3, "n": 2}, "json"),
    ]
    first = [render(v, a, o) for v, a, o in requests]
    clear_caches()
    second = [render(v, a, o) for v, a, o in requests]
    same = [a == b for a, b in zip(first, second)]
    return all(same), {"outputs": len(requests), "identical": sum(same)}


CRITERIA = {
    1: ("oracle equivalence: Ext dims = Shelton", check_oracle),
    2: ("Betti numbers = KL polynomials", check_betti),
    3: ("labeled cap diagram fixture and n=1 closed form", check_fixtures),
    4: ("vanishing bounds", check_bounds),
    5: ("algebra sanity", check_algebra),
    6: ("n=1 quiver relations and dimension", check_n1_quiver),
    7: ("n=2 quiver relations", check_n2_quiver),
    8: ("A-infinity vanishing", check_ainfty),
    9: ("Stasheff identities", check_stasheff),
    10: ("determinism", check_determinism),
}


def run_suite(cfg=None):
    """Run the selected criteria; returns (exit status, report)."""
    cfg = cfg or load_config()
    start = time.monotonic()
    report = {"config": _jsonable(cfg), "criteria": {}}
    failed = False
    for num in cfg["criteria"]:
        name, fn = CRITERIA[num]
        if cfg["time_budget"] and time.monotonic() - start > cfg["time_budget"]:
            report["criteria"][str(num)] = {"name": name, "status": "skip", "reason": "time budget exceeded"}
            continue
        ok, details = fn(cfg)
        failed |= not ok
        report["criteria"][str(num)] = {"name": name, "status": "pass" if ok else "fail", "details": _jsonable(details)}
    skipped = any(v["status"] == "skip" for v in report["criteria"].values())
    report["status"] = "fail" if failed else ("partial" if skipped else "pass")
    return (1 if failed else 0), report


def _jsonable(x):
    return json.loads(json.dumps(x, default=str))
