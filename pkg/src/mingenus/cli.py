"""Command-line front end.

Every command builds a plain dict report, so the ``cmd_*`` functions can
be called directly from Python and the ``main`` entry point only handles
argument parsing, budget resolution, rendering and exit codes.

Exit codes: 0 success, 2 usage, 3 manifest/schema, 4 precondition,
5 search budget exhausted, 6 oracle mismatch, 7 oracle box too small.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from fractions import Fraction
from typing import Any, Dict, List, Mapping, Optional, Sequence

from . import __version__
from .adjunction import (
    BoundReport,
    adjunction_genus_lb,
    characteristic_class_bound,
    characteristic_numbers,
    characteristic_number,
    divisible_genus_lb,
    formal_dimension,
    formal_dimension_orthogonal,
    k_set,
)
from .catalog import (
    ExactFamily,
    Family,
    ReducedForm,
    closed_form_lb,
    exact_genus,
    is_reduced,
    list_reduced_classes_with_genus_le,
    reduced_search_region,
)
from .constructions import (
    e_form_plan,
    h_form_plan,
    multiple_class_plan,
    multiple_class_upper_bound,
    reduced_class_construction,
    reduced_class_plan,
    resolve_genus,
)
from .errors import (
    BudgetExhausted,
    DimensionError,
    LatticeError,
    ManifestError,
    PreconditionError,
)
from .intersections import disjointness_obstruction, intersection_lb
from .lattice import Lattice, divisibility
from .manifest import Manifest, load_manifest
from .search import CharWitness, SearchBudget, brute_force_min_pairing, min_abs_pairing

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_SCHEMA = 3
EXIT_PRECONDITION = 4
EXIT_BUDGET = 5
EXIT_MISMATCH = 6
EXIT_BOX = 7

ENV_MAX_NODES = "MINGENUS_MAX_NODES"
ENV_MAX_ABS_PAIRING = "MINGENUS_MAX_ABS_PAIRING"

DEFAULT_BOX = 9
MAX_RANK_DEFAULT_BOX = 4


class BoxTooSmall(PreconditionError):
    pass


# -- serialization -------------------------------------------------------------


def _num(x):
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return x


def witness_dict(w: Optional[CharWitness]):
    if w is None:
        return None
    return {"c": list(w.c), "square": w.square, "pairings": list(w.pairings)}


def bound_dict(r: Optional[BoundReport]):
    if r is None:
        return None
    return {
        "bound": r.bound,
        "strict": r.strict,
        "method": r.method.value,
        "exact": r.exact,
        "raw": _num(r.raw),
        "witness": witness_dict(r.witness),
        "hypotheses": list(r.hypotheses),
        "notes": list(r.notes),
    }


def budget_dict(b: SearchBudget):
    return {"max_nodes": b.max_nodes, "max_abs_pairing": b.max_abs_pairing if b.max_abs_pairing else "auto"}


def resolve_budget(
    manifest: Optional[Manifest] = None,
    env: Optional[Mapping[str, str]] = None,
    max_nodes: Optional[int] = None,
    max_abs_pairing: Optional[int] = None,
) -> SearchBudget:
    """Effective budget: manifest values, then environment, then flags."""
    env = os.environ if env is None else env
    vals: Dict[str, Optional[int]] = {"max_nodes": None, "max_abs_pairing": None}
    if manifest is not None:
        vals.update(manifest.budget)
    for key, var in (("max_nodes", ENV_MAX_NODES), ("max_abs_pairing", ENV_MAX_ABS_PAIRING)):
        raw = env.get(var)
        if raw is not None and raw.strip():
            try:
                v = int(raw)
            except ValueError:
                raise ManifestError(f"{var} must be a positive integer, got {raw!r}") from None
            if v <= 0:
                raise ManifestError(f"{var} must be a positive integer, got {raw!r}")
            vals[key] = v
    if max_nodes is not None:
        vals["max_nodes"] = max_nodes
    if max_abs_pairing is not None:
        vals["max_abs_pairing"] = max_abs_pairing
    kw = {k: v for k, v in vals.items() if v is not None}
    try:
        return SearchBudget(**kw)
    except ValueError as exc:
        raise ManifestError(str(exc)) from None


def _report(command: str, args: Dict[str, Any], manifest: Optional[Manifest], budget, results) -> Dict[str, Any]:
    h = hashlib.sha256()
    h.update(json.dumps({"command": command, "args": args}, sort_keys=True).encode())
    if manifest is not None:
        h.update(manifest.dumps().encode())
    rep = {"command": command, "args": args, "inputs_digest": h.hexdigest(), "version": __version__}
    if budget is not None:
        rep["budget"] = budget_dict(budget)
    rep["results"] = results
    return rep


def _budget(manifest, budget):
    return budget if budget is not None else resolve_budget(manifest)


# -- commands ------------------------------------------------------------------


def cmd_genus_lb(manifest: Manifest, class_ref: str, d: Optional[int] = None, budget: Optional[SearchBudget] = None):
    """Adjunction bound for a class; the K-set route too when it is a multiple.

    With ``d`` the class is read as the primitive xi and the target is d xi.
    """
    budget = _budget(manifest, budget)
    lat = manifest.lattice
    x = manifest.resolve(class_ref)
    if d is not None:
        if d < 1:
            raise PreconditionError("d must be positive")
        mult, xi = d, x
        if divisibility(xi)[0] != 1:
            raise PreconditionError("with --d the class must be primitive")
        target = tuple(d * v for v in xi)
    else:
        mult, xi = divisibility(x)
        target = x
    adj = adjunction_genus_lb(lat, target, budget)
    results: Dict[str, Any] = {
        "class": list(target),
        "square": lat.square(target),
        "divisibility": mult,
        "primitive": list(xi),
        "adjunction": bound_dict(adj),
    }
    best = adj
    if mult > 1:
        ks = k_set(lat, xi, mult, budget)
        div = divisible_genus_lb(lat, xi, mult, budget)
        m_tilde, _ = min_abs_pairing(lat, xi, budget)
        predicted = mult * lat.square(xi) - m_tilde
        k0_ok = ks.k0 == predicted if predicted >= 0 else ks.k0 is None
        results["k_set"] = {
            "K": list(ks.K),
            "k0": ks.k0,
            "min_pairing_primitive": m_tilde,
            "k0_identity_holds": k0_ok,
            "bound": bound_dict(div),
            "routes_agree": div.bound == adj.bound,
        }
        if div.bound > best.bound:
            best = div
    if manifest.flags.h1_zero and mult > 1:
        cc = characteristic_class_bound(lat, xi, mult, h1_zero=True)
        results["characteristic_class"] = bound_dict(cc)
        if cc is not None and cc.bound > best.bound:
            best = cc
    results["bound"] = best.bound
    args = {"class": class_ref, "d": d}
    return _report("genus-lb", args, manifest, budget, results)


def _basis_spheres(manifest: Manifest) -> bool:
    n = manifest.lattice.rank
    named = {tuple(abs(v) for v in manifest.classes[s]) for s in manifest.flags.sphere_hypotheses}
    return all(tuple(int(i == j) for j in range(n)) in named for i in range(n))


def _form_kind(lat: Lattice) -> str:
    g = [list(r) for r in lat.gram]
    if g == [[1]]:
        return "CP2"
    if g == [[0, 1], [1, 0]]:
        return "H"
    n = lat.rank - 1
    if 1 <= n <= 9 and g == [list(r) for r in Lattice.odd(n).gram]:
        return "E" if n == 1 else "rational"
    return "other"


def cmd_genus_ub(
    manifest: Manifest,
    class_ref: Optional[str] = None,
    g1: Optional[int] = None,
    d: Optional[int] = None,
    plan: Optional[str] = None,
):
    """Upper bound from an explicit configuration.

    Either a named plan, a class with the genus ``g1`` of a representative
    of its primitive part (parallel copies), or a class in a standard form
    whose basis classes are asserted to be spheres.
    """
    lat = manifest.lattice
    args = {"class": class_ref, "g1": g1, "d": d, "plan": plan}
    results: Dict[str, Any] = {}
    if plan is not None:
        if plan not in manifest.plans:
            raise ManifestError(f"unknown plan {plan!r}", path="plans")
        p = manifest.plans[plan]
        results = {"plan": p.to_dict(), "copies": p.copies, "points": p.points, "genus": resolve_genus(p)}
        return _report("genus-ub", args, manifest, None, results)
    if class_ref is None:
        raise PreconditionError("genus-ub needs a class or --plan")
    x = manifest.resolve(class_ref)
    if d is not None:
        x = tuple(d * v for v in x)
    mult, xi = divisibility(x)
    results["class"] = list(x)
    if g1 is not None:
        a = lat.square(xi)
        ub = multiple_class_upper_bound(a, g1, mult)
        p = multiple_class_plan(a, g1, mult)
        results.update(
            construction="parallel copies",
            plan=p.to_dict(),
            genus=ub,
            plan_genus=resolve_genus(p),
            hypotheses=[f"primitive class {list(xi)} represented with genus {g1}"],
        )
        return _report("genus-ub", args, manifest, None, results)

    kind = _form_kind(lat)
    if not _basis_spheres(manifest) and kind not in ("CP2",):
        raise PreconditionError(
            "no construction available: give --g1, --plan, or list the basis classes in flags.sphere_hypotheses"
        )
    hyp = ["basis classes represented by spheres"]
    if kind == "CP2":
        k = abs(x[0])
        genus = multiple_class_upper_bound(1, 0, k) if k else 0
        pl = multiple_class_plan(1, 0, k) if k else None
        hyp = ["line represented by a sphere"]
    elif kind == "H":
        p_, q_ = abs(x[0]), abs(x[1])
        if p_ * q_ == 0:
            pl, genus = None, 0
        else:
            pl = h_form_plan(p_, q_)
            genus = resolve_genus(pl)
    elif kind in ("E", "rational"):
        rf = ReducedForm.from_class(x)
        nz = [q for q in rf.qs if q]
        if kind == "E" and rf.p > (nz[0] if nz else 0):
            pl = e_form_plan(rf.p, nz[0] if nz else 0)
            genus = resolve_genus(pl)
        elif nz and all(q > 2 for q in nz) and sum(nz) <= rf.p:
            pl = reduced_class_plan(rf.p, rf.qs)
            genus = resolve_genus(pl)
        else:
            pl = None
            genus = reduced_class_construction(rf.p, rf.qs)
            if genus is None:
                raise PreconditionError("no construction applies to this class")
            hyp.append("handle moves for q_i in {1, 2}")
    else:
        raise PreconditionError("no standard construction for this form; give --g1 or --plan")
    results.update(construction=kind, plan=pl.to_dict() if pl else None, genus=genus, hypotheses=hyp)
    return _report("genus-ub", args, manifest, None, results)


def cmd_exact(manifest: Manifest, class_ref: str, budget: Optional[SearchBudget] = None):
    """Exact minimal genus for a standard form, under the manifest's flags."""
    budget = _budget(manifest, budget)
    lat = manifest.lattice
    x = manifest.resolve(class_ref)
    kind = _form_kind(lat)
    flags = manifest.flags
    spheres = _basis_spheres(manifest)
    exact = closed = None
    if kind == "CP2":
        exact = exact_genus(ExactFamily.CP2, assume=flags.rational_surface, d=x[0])
        closed = closed_form_lb(Family.CP2, d=x[0])
    elif kind == "H":
        exact = exact_genus(ExactFamily.H_SPHERES, assume=spheres, p=x[0], q=x[1])
        closed = closed_form_lb(Family.H, p=x[0], q=x[1])
    elif kind in ("E", "rational"):
        rf = ReducedForm.from_class(x)
        mult = divisibility(x)[0]
        prim = ReducedForm(rf.p // mult, tuple(q // mult for q in rf.qs))
        if kind == "E" and spheres:
            exact = exact_genus(ExactFamily.E_SPHERES, assume=True, p=x[0], q=x[1])
        elif flags.rational_surface:
            if not is_reduced(prim):
                raise PreconditionError("class is not in reduced position (p >= q1 + q2 + q3)")
            exact = exact_genus(ExactFamily.RATIONAL_SURFACE, assume=True, p=prim.p, qs=prim.qs, d=mult)
        if kind == "E" and lat.square(x) > 0:
            closed = closed_form_lb(Family.E, p=x[0], q=x[1])
        elif is_reduced(prim) and 2 <= prim.m <= 9 and prim.square > 0:
            closed = closed_form_lb(Family.REDUCED, p=prim.p, qs=prim.qs, d=mult)
    else:
        raise PreconditionError("exact values are only catalogued for <1>, H and <1> + n<-1>, n <= 9")
    engine = None
    if lat.signature.b_plus == 1 and lat.square(x) > 0:
        engine = adjunction_genus_lb(lat, x, budget)
    results = {
        "class": list(x),
        "family": kind,
        "exact": bound_dict(exact),
        "closed_form": bound_dict(closed),
        "engine": bound_dict(engine),
    }
    if exact is not None:
        lower = max(r.bound for r in (closed, engine) if r is not None) if (closed or engine) else 0
        results["gap"] = exact.bound - lower
    else:
        results["note"] = "hypotheses not asserted in flags; no exact value claimed"
    return _report("exact", {"class": class_ref}, manifest, budget, results)


def cmd_k_set(manifest: Manifest, class_ref: str, d: int, budget: Optional[SearchBudget] = None):
    budget = _budget(manifest, budget)
    lat = manifest.lattice
    xi = manifest.resolve(class_ref)
    res = k_set(lat, xi, d, budget)
    rule, _ = characteristic_numbers(lat.square(xi), d)
    div = divisible_genus_lb(lat, xi, d, budget)
    results = {
        "xi": list(xi),
        "d": d,
        "xi_square": lat.square(xi),
        "parity_rule": rule.value,
        "K": list(res.K),
        "k0": res.k0,
        "witnesses": [{"k": k, **witness_dict(res.witnesses[k])} for k in res.K],
        "bound": bound_dict(div),
    }
    return _report("k-set", {"class": class_ref, "d": d}, manifest, budget, results)


def cmd_dimension(manifest: Manifest, c1_ref: str, class_ref: str, d: int):
    lat = manifest.lattice
    c1 = manifest.resolve(c1_ref)
    xi = manifest.resolve(class_ref)
    value = formal_dimension(lat, c1, xi, d)
    other = formal_dimension_orthogonal(lat, c1, xi, d)
    p = lat.pair(c1, xi)
    results = {
        "c1": list(c1),
        "xi": list(xi),
        "d": d,
        "pairing": p,
        "k": characteristic_number(p, lat.square(xi), d),
        "dimension": _num(value),
        "dimension_orthogonal_form": _num(other),
        "forms_agree": value == other,
        "integral": value.denominator == 1,
    }
    return _report("dimension", {"c1": c1_ref, "class": class_ref, "d": d}, manifest, None, results)


def cmd_intersect(
    manifest: Manifest, class1: str, class2: str, g1: int, g2: int, budget: Optional[SearchBudget] = None
):
    budget = _budget(manifest, budget)
    lat = manifest.lattice
    s1, s2 = manifest.resolve(class1), manifest.resolve(class2)
    rep = intersection_lb(lat, s1, s2, g1, g2, budget)
    obstruction = disjointness_obstruction(lat, (s1, s2), (g1, g2), budget)
    results = {
        "classes": [list(s1), list(s2)],
        "genera": [g1, g2],
        "n_lb": rep.n_lb,
        "hypothesis_ok": rep.hypothesis_ok,
        "witness": witness_dict(rep.witness),
        "bound_sum": rep.bound_sum,
        "gilmer_lb": rep.gilmer_lb,
        "disjointness_obstruction": witness_dict(obstruction),
    }
    args = {"class1": class1, "class2": class2, "g1": g1, "g2": g2}
    return _report("intersect", args, manifest, budget, results)


def cmd_list_reduced(n: int, g: int):
    region = reduced_search_region(n, g)
    classes = list_reduced_classes_with_genus_le(n, g)
    rows = []
    for rf in classes:
        cf = closed_form_lb(Family.REDUCED, p=rf.p, qs=rf.qs)
        rows.append({"p": rf.p, "qs": list(rf.qs), "m": rf.m, "square": rf.square, "bound": cf.bound})
    results = {
        "n": n,
        "g": g,
        "q1_cutoffs": {str(m): v for m, v in region.items()},
        "count": len(rows),
        "classes": rows,
    }
    return _report("list-reduced", {"n": n, "g": g}, None, None, results)


def cmd_verify(manifest: Manifest, class_ref: str, box: Optional[int] = None, budget: Optional[SearchBudget] = None):
    """Cross-check the engine against exhaustive search in a box.

    Raises BoxTooSmall when the box holds no admissible vector; a
    disagreement is reported with ``agree: false``.
    """
    budget = _budget(manifest, budget)
    lat = manifest.lattice
    if box is None:
        if lat.rank > MAX_RANK_DEFAULT_BOX:
            raise PreconditionError(
                f"rank too large for the default box (rank {lat.rank} > {MAX_RANK_DEFAULT_BOX}); pass --box"
            )
        box = DEFAULT_BOX
    if box < 1:
        raise PreconditionError("box must be positive")
    x = manifest.resolve(class_ref)
    m, w = min_abs_pairing(lat, x, budget)
    oracle = brute_force_min_pairing(lat, x, box)
    if oracle is None:
        raise BoxTooSmall(f"no admissible characteristic vector with entries in [-{box}, {box}]")
    om, ow = oracle
    results = {
        "class": list(x),
        "box": box,
        "engine": {"m": m, "witness": witness_dict(w)},
        "oracle": {"m": om, "witness": witness_dict(ow)},
        "agree": m == om,
    }
    return _report("verify", {"class": class_ref, "box": box}, manifest, budget, results)


# -- rendering -----------------------------------------------------------------


def _fmt(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, list):
        return "[" + ", ".join(_fmt(x) for x in v) + "]"
    if isinstance(v, dict):
        return ", ".join(f"{k}={_fmt(x)}" for k, x in v.items())
    return str(v)


def _table(rows: List[Dict[str, Any]], indent: str) -> List[str]:
    cols = list(rows[0])
    cells = [[_fmt(r.get(c)) for c in cols] for r in rows]
    widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(cols)]
    out = [indent + "  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip()]
    for row in cells:
        out.append(indent + "  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip())
    return out


def _flatten(d: Dict[str, Any], prefix: str = "") -> List[tuple]:
    items = []
    for k, v in d.items():
        key = f"{prefix}{k}"
        if isinstance(v, dict) and v and not {"c", "square", "pairings"} <= set(v):
            items.extend(_flatten(v, key + "."))
        else:
            items.append((key, v))
    return items


def render_text(report: Dict[str, Any]) -> str:
    lines = [f"{report['command']}  (mingenus {report['version']})", f"inputs  sha256:{report['inputs_digest'][:16]}"]
    if "budget" in report:
        lines.append(f"budget  {_fmt(report['budget'])}")
    if "timing" in report:
        lines.append(f"time    {report['timing']['seconds']:.3f}s")
    lines.append("")
    flat = _flatten(report["results"])
    width = max((len(k) for k, v in flat if not _is_rows(v)), default=0)
    for key, v in flat:
        if _is_rows(v):
            lines.append(f"{key}:")
            lines.extend(_table(v, "  "))
        else:
            lines.append(f"{key.ljust(width)}  {_fmt(v)}")
    return "\n".join(lines) + "\n"


def _is_rows(v) -> bool:
    return isinstance(v, list) and bool(v) and all(isinstance(r, dict) for r in v)


def render_json(report: Dict[str, Any]) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


# -- argument parsing ----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-m", "--manifest", help="manifest file, or - for stdin")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--timing", action="store_true", help="include wall-clock time (breaks byte-identical output)")
    common.add_argument("--max-nodes", type=int, help=f"enumeration node cap (env {ENV_MAX_NODES})")
    common.add_argument("--max-abs-pairing", type=int, help=f"cap on |<c, x>| scanned (env {ENV_MAX_ABS_PAIRING})")

    parser = argparse.ArgumentParser(
        prog="mingenus",
        description="Exact lower and upper bounds on the minimal genus of surfaces in 4-manifolds.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("genus-lb", parents=[common], help="adjunction / K-set lower bound")
    p.add_argument("cls", metavar="CLASS", help="class name or literal like 3,2")
    p.add_argument("--d", type=int, help="bound d * CLASS (CLASS primitive)")

    p = sub.add_parser("genus-ub", parents=[common], help="construction upper bound")
    p.add_argument("cls", metavar="CLASS", nargs="?")
    p.add_argument("--g1", type=int, help="genus of a representative of the primitive class")
    p.add_argument("--d", type=int, help="multiply CLASS by d")
    p.add_argument("--plan", help="named plan from the manifest")

    p = sub.add_parser("exact", parents=[common], help="catalogued exact value under the manifest's flags")
    p.add_argument("cls", metavar="CLASS")

    p = sub.add_parser("k-set", parents=[common], help="characteristic-number set for d * xi")
    p.add_argument("cls", metavar="XI")
    p.add_argument("--d", type=int, required=True)

    p = sub.add_parser("dimension", parents=[common], help="formal dimension for c1 and d * xi")
    p.add_argument("c1", metavar="C1")
    p.add_argument("cls", metavar="XI")
    p.add_argument("--d", type=int, required=True)

    p = sub.add_parser("intersect", parents=[common], help="intersection bound for b+ = 2")
    p.add_argument("cls1", metavar="CLASS1")
    p.add_argument("cls2", metavar="CLASS2")
    p.add_argument("--g1", type=int, default=0)
    p.add_argument("--g2", type=int, default=0)

    p = sub.add_parser("list-reduced", parents=[common], help="reduced classes with bound <= g")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--g", type=int, required=True)

    p = sub.add_parser("verify", parents=[common], help="cross-check against brute force")
    p.add_argument("cls", metavar="CLASS")
    p.add_argument("--box", type=int)
    return parser


def _dispatch(ns) -> Dict[str, Any]:
    if ns.command == "list-reduced":
        return cmd_list_reduced(ns.n, ns.g)
    if not ns.manifest:
        raise ManifestError("this command needs --manifest")
    manifest = load_manifest(ns.manifest)
    budget = resolve_budget(manifest, None, ns.max_nodes, ns.max_abs_pairing)
    if ns.command == "genus-lb":
        return cmd_genus_lb(manifest, ns.cls, ns.d, budget)
    if ns.command == "genus-ub":
        return cmd_genus_ub(manifest, ns.cls, ns.g1, ns.d, ns.plan)
    if ns.command == "exact":
        return cmd_exact(manifest, ns.cls, budget)
    if ns.command == "k-set":
        return cmd_k_set(manifest, ns.cls, ns.d, budget)
    if ns.command == "dimension":
        return cmd_dimension(manifest, ns.c1, ns.cls, ns.d)
    if ns.command == "intersect":
        return cmd_intersect(manifest, ns.cls1, ns.cls2, ns.g1, ns.g2, budget)
    if ns.command == "verify":
        return cmd_verify(manifest, ns.cls, ns.box, budget)
    raise AssertionError(ns.command)


def _error(ns, kind: str, exc: Exception, code: int, out, err) -> int:
    payload = {"error": {"kind": kind, "message": str(exc), "exit_code": code}}
    state = getattr(exc, "state", None)
    if state:
        payload["error"]["state"] = state
    if ns.json:
        out.write(render_json(payload))
    else:
        extra = f" ({_fmt(state)})" if state else ""
        err.write(f"mingenus: {kind}: {exc}{extra}\n")
    return code


def main(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    ns = build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        report = _dispatch(ns)
    except (ManifestError, LatticeError, DimensionError) as exc:
        return _error(ns, "schema", exc, EXIT_SCHEMA, out, err)
    except BoxTooSmall as exc:
        return _error(ns, "box too small", exc, EXIT_BOX, out, err)
    except PreconditionError as exc:
        return _error(ns, "precondition", exc, EXIT_PRECONDITION, out, err)
    except BudgetExhausted as exc:
        return _error(ns, "budget exhausted", exc, EXIT_BUDGET, out, err)
    if ns.timing:
        report["timing"] = {"seconds": time.perf_counter() - start}
    out.write(render_json(report) if ns.json else render_text(report))
    if report["command"] == "verify" and not report["results"]["agree"]:
        err.write("mingenus: oracle mismatch\n")
        return EXIT_MISMATCH
    return EXIT_OK


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":  # pragma: no cover
    main_entry()
