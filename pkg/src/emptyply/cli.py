"""Command-line interface.

Every subcommand builds one dictionary of results.  Human output renders
it as ``key=value`` lines (numbers to 6 significant digits); ``--json``
prints the same dictionary, so machine output always carries every human
field.

Exit codes: 0 ok, 1 a check failed, 2 malformed input, 3 a request that a
proven bound rules out.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

import numpy as np

from . import analysis, constructions, io, svg
from .drawing import Drawing, ValidationError
from .errors import DomainError, InfeasibleByTheorem, NotAvailableError
from .plycore import is_empty_ply, lemma_report, ply_report, quarter_shped
from .search import SearchConfig, optimize_empty_ply

OK, FAILED, MALFORMED, INFEASIBLE = 0, 1, 2, 3


class _Abort(Exception):
    def __init__(self, code: int, data: dict):
        self.code = code
        self.data = data


# --- output -----------------------------------------------------------------

def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "none"
    if isinstance(value, float):
        return f"{value:.6g}"
    if isinstance(value, (list, tuple)):
        return "(" + ", ".join(_fmt(v) for v in value) + ")"
    return str(value)


def _line(data: dict, keys=None) -> str:
    keys = data.keys() if keys is None else keys
    return " ".join(f"{k}={_fmt(data[k])}" for k in keys)


def _clean(value):
    """JSON-ready copy: numpy scalars to Python, non-finite floats to strings."""
    if isinstance(value, dict):
        return {str(k): _clean(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, np.ndarray)):
        return [_clean(v) for v in value]
    if isinstance(value, np.generic):
        value = value.item()
    if isinstance(value, float) and not math.isfinite(value):
        return str(value)
    return value


def _emit(args, data: dict, lines: list[str], out) -> None:
    if args.json:
        out.write(json.dumps(_clean(data)) + "\n")
    else:
        for s in lines:
            out.write(s + "\n")


# --- helpers ----------------------------------------------------------------

def _load(path) -> Drawing:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise _Abort(MALFORMED, {"error": str(exc), "position": str(path)}) from None
    return io.loads(text)


def _vertex_id(drawing: Drawing, v: int):
    ids = drawing.metadata.get("source_ids")
    return ids[v] if ids else v


def _local_index(drawing: Drawing, vid: int) -> int:
    ids = drawing.metadata.get("source_ids")
    if ids:
        if vid not in ids:
            raise DomainError(f"unknown vertex id {vid}")
        return ids.index(vid)
    if not 0 <= vid < drawing.n:
        raise DomainError(f"unknown vertex id {vid}")
    return vid


def _placeholder(graph, meta) -> Drawing:
    """Abstract graphs are written with their vertices on the unit circle."""
    t = 2 * np.pi * np.arange(graph.n) / max(graph.n, 1)
    pos = np.stack([np.cos(t), np.sin(t)], axis=1)
    return Drawing(graph, pos, dict(meta, layout="circle placeholder"))


# --- subcommands --------------------------------------------------------------

def cmd_compute(args, out):
    drawing = _load(args.file)
    rep = ply_report(drawing)
    data = {
        "ply": rep.ply,
        "vertex_ply": rep.vertex_ply,
        "crossings": rep.crossings,
        "ply_witness": [rep.ply_witness.x, rep.ply_witness.y],
        "vertex_ply_witness": _vertex_id(drawing, rep.vertex_ply_witness),
    }
    lines = [_line(data, ("ply", "vertex_ply", "crossings")),
             _line(data, ("ply_witness", "vertex_ply_witness"))]
    _emit(args, data, lines, out)
    return OK


def cmd_verify_empty(args, out):
    drawing = _load(args.file)
    res = is_empty_ply(drawing)
    if res.empty:
        _emit(args, {"empty": True}, ["empty-ply"], out)
        return OK
    u, v = (_vertex_id(drawing, w) for w in res.witness)
    data = {"empty": False, "vertex": u, "disk_of": v}
    _emit(args, data, [f"not empty-ply: v{u} inside disk of v{v}"], out)
    return FAILED


def cmd_report(args, out):
    drawing = _load(args.file)
    root = None if args.tree_root is None else _local_index(drawing, args.tree_root)
    rep = lemma_report(drawing, tree_root=root)
    checks = {}
    lines = []
    for name, c in rep.checks().items():
        key = name.removesuffix("_ok")
        checks[key] = {"ok": c.ok, "witness": c.witness, "detail": c.detail}
        s = f"{key}: {'pass' if c.ok else 'FAIL'}"
        if c.witness is not None:
            s += f" witness={_fmt(c.witness)}"
        if c.detail:
            s += f" detail={c.detail}"
        lines.append(s)
    data = {"all_ok": rep.all_ok, "checks": checks}
    lines.append(_line(data, ("all_ok",)))
    _emit(args, data, lines, out)
    return OK if rep.all_ok else FAILED


_FAMILIES = ("star24", "small", "nested", "theta", "orthogonal-tree", "tiling-square",
             "complete", "complete-bipartite", "dary-tree")


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise DomainError(f"{args.family} needs --" + " --".join(missing))


def _generate(args) -> Drawing:
    f = args.family
    if f == "star24":
        return constructions.star24()
    if f == "small":
        _need(args, "name")
        return constructions.small_layout(args.name)
    if f == "nested":
        _need(args, "levels")
        return constructions.nested_triangles(args.levels, args.variant or "natural")
    if f == "theta":
        _need(args, "m")
        return constructions.theta_graph(args.m, args.variant or "nonplanar")
    if f == "orthogonal-tree":
        _need(args, "d", "q", "k")
        return constructions.orthogonal_tree(args.d, args.q, args.k)
    if f == "tiling-square":
        _need(args, "rows", "cols")
        base, squared = constructions.tiling_square(args.rows, args.cols)
        return base if args.variant == "base" else squared
    family = f.replace("-", "_")
    if f == "complete":
        _need(args, "n")
        params = {"n": args.n}
    elif f == "complete-bipartite":
        _need(args, "n", "m")
        params = {"n": args.n, "m": args.m}
    else:
        _need(args, "d", "k")
        params = {"d": args.d, "k": args.k}
    graph = constructions.abstract_family(family, **params)
    return _placeholder(graph, {"family": family, "params": params})


def cmd_gen(args, out):
    drawing = _generate(args)
    io.save(drawing, args.output)
    data = {"family": drawing.metadata.get("family", args.family), "n": drawing.n,
            "m": drawing.graph.m, "output": str(args.output)}
    _emit(args, data, [_line(data)], out)
    return OK


def cmd_search(args, out):
    drawing = _load(args.file)
    cfg = SearchConfig(seed=args.seed, restarts=args.restarts, iterations=args.iters)
    res = optimize_empty_ply(drawing.graph, cfg)
    io.save(res.drawing, args.output)
    data = {"status": res.status, "penalty": res.penalty, "restart": res.restart,
            "iterations": res.iterations, "output": str(args.output)}
    _emit(args, data, [_line(data)], out)
    return OK if res.success else FAILED


def cmd_ped(args, out):
    drawing = _load(args.file)
    stubs, crossings = quarter_shped(drawing)
    Path(args.output).write_text(svg.render(drawing, disks="none", stubs=stubs))
    data = {"stubs": len(stubs), "crossings": crossings, "output": str(args.output)}
    _emit(args, data, [_line(data)], out)
    return OK


def cmd_export(args, out):
    drawing = _load(args.file)
    text = svg.render(drawing, disks=args.disks, title=drawing.metadata.get("family"))
    Path(args.output).write_text(text)
    data = {"circles": text.count("<circle"), "disks": args.disks, "output": str(args.output)}
    _emit(args, data, [_line(data)], out)
    return OK


def _formula(args) -> dict:
    name = args.name
    if name == "k25":
        alpha = 2 * math.pi / 13 if args.alpha is None else args.alpha
        b = analysis.k25_bounds(alpha)
        return {"alpha": b.alpha, "lower": b.lower, "upper": b.upper,
                "discriminant": b.discriminant, "feasible": b.feasible}
    if name == "shrink":
        s = analysis.shrink_limit(0.5 if args.q is None else args.q)
        return {"q": s.q, "f": s.f, "dist_v1_w": s.dist_v1_w, "dist_v3_w": s.dist_v3_w}
    if name == "shrink-grid":
        q, f = analysis.shrink_grid_max(args.points)
        return {"points": args.points, "argmax_q": q, "max_f": f}
    if name == "fn":
        n = 200 if args.n is None else args.n
        return {"n": n, "f": analysis.fn_recurrence(n)}
    if name == "k8-region":
        if args.x is None or args.y is None:
            raise DomainError("k8-region needs --x and --y")
        return {"x": args.x, "y": args.y, "region": str(analysis.k8_region((args.x, args.y)))}
    if name == "region-diameter":
        if args.region is None:
            raise DomainError("region-diameter needs --region")
        return {"region": args.region,
                "diameter": analysis.k8_region_diameter(args.region, args.samples)}
    if name == "d-plus-cover":
        disk, ratio = analysis.d_plus_cover()
        return {"center": [disk.center.x, disk.center.y], "radius": disk.radius,
                "coverage_ratio": ratio}
    if name == "apollonius":
        if args.a is None or args.c is None or args.k is None:
            raise DomainError("apollonius needs --a X Y --c X Y --k K")
        from .geometry import apollonius_circle

        disk = apollonius_circle(tuple(args.a), tuple(args.c), args.k)
        return {"center": [disk.center.x, disk.center.y], "radius": disk.radius}
    if name == "k2m":
        s = analysis.k2m_analysis()
        return {"alpha_d_deg": s.alpha_d_deg, "beta1_deg": s.beta1_deg, "beta2_deg": s.beta2_deg,
                "outer_capacity": s.outer_capacity, "inner_capacity": s.inner_capacity,
                "naive_bound": s.naive_bound, "combined_bound": s.combined_bound}
    raise DomainError(f"unknown formula {name!r}")


_FORMULAS = ("k25", "shrink", "shrink-grid", "fn", "k8-region", "region-diameter",
             "d-plus-cover", "apollonius", "k2m")


def cmd_formulas(args, out):
    data = _formula(args)
    _emit(args, data, [_line(data)], out)
    return OK


# --- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="emptyply", description="Ply, vertex-ply and empty-ply drawings.")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    # also accepted after the subcommand; SUPPRESS keeps a leading flag alive
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(func=func)
        return sp

    sp = add("compute", cmd_compute, "ply, vertex-ply, crossings and witnesses")
    sp.add_argument("file")
    sp = add("verify-empty", cmd_verify_empty, "exit 0 iff the drawing is empty-ply")
    sp.add_argument("file")
    sp = add("report", cmd_report, "structural checks for empty-ply drawings")
    sp.add_argument("file")
    sp.add_argument("--tree-root", type=int, default=None)

    sp = add("gen", cmd_gen, "generate a construction")
    sp.add_argument("family", choices=_FAMILIES)
    sp.add_argument("-o", "--output", required=True)
    for flag in ("--n", "--m", "--levels", "--d", "--k", "--rows", "--cols"):
        sp.add_argument(flag, type=int)
    sp.add_argument("--q", type=float)
    sp.add_argument("--variant")
    sp.add_argument("--name", help="small layout name, e.g. K7 or K2_12")

    sp = add("search", cmd_search, "search for an empty-ply layout")
    sp.add_argument("file")
    sp.add_argument("-o", "--output", required=True)
    sp.add_argument("--seed", type=int, default=SearchConfig.seed)
    sp.add_argument("--restarts", type=int, default=SearchConfig.restarts)
    sp.add_argument("--iters", type=int, default=SearchConfig.iterations)

    sp = add("ped", cmd_ped, "quarter-stub partial edge drawing as SVG")
    sp.add_argument("file")
    sp.add_argument("-o", "--output", required=True)

    sp = add("formulas", cmd_formulas, "closed-form bounds")
    sp.add_argument("name", choices=_FORMULAS)
    sp.add_argument("--alpha", type=float, help="radians")
    sp.add_argument("--q", type=float)
    sp.add_argument("--n", type=int)
    sp.add_argument("--x", type=float)
    sp.add_argument("--y", type=float)
    sp.add_argument("--region")
    sp.add_argument("--samples", type=int, default=100_000)
    sp.add_argument("--points", type=int, default=9999)
    sp.add_argument("--a", type=float, nargs=2)
    sp.add_argument("--c", type=float, nargs=2)
    sp.add_argument("--k", type=float)

    sp = add("export", cmd_export, "SVG rendering with ply-disks")
    sp.add_argument("file")
    sp.add_argument("-o", "--output", required=True)
    sp.add_argument("--disks", choices=("full", "half", "none"), default="full")
    return p


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except _Abort as exc:
        data = exc.data
        code = exc.code
    except io.DocumentError as exc:
        data, code = {"error": str(exc).split(": ", 1)[-1], "position": exc.position}, MALFORMED
    except (InfeasibleByTheorem, NotAvailableError) as exc:
        data, code = {"error": str(exc), "theorem": exc.theorem}, INFEASIBLE
    except ValidationError as exc:
        data, code = {"error": str(exc), "position": str(exc.violations[0])}, MALFORMED
    except DomainError as exc:
        data, code = {"error": str(exc)}, MALFORMED
    if args.json:
        out.write(json.dumps(_clean(data)) + "\n")
    else:
        where = f" at {data['position']}" if "position" in data else ""
        err.write(f"error{where}: {data['error']}\n")
    return code


def main() -> None:
    sys.exit(run())
