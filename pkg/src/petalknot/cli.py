"""``petal``: command-line front end.

Exit codes: 0 on success, 2 when an input violates a precondition (the
message names the failing condition), 64 for an unknown subcommand.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import re
import sys
from pathlib import Path
from typing import Sequence

from .bounds import bounds_report
from .constructions import (
    PreconditionError,
    TorusKnotParams,
    braid_to_grid,
    surgery_minus_petal_permutation,
    surgery_plus_petal_permutation,
    theorem1_petal_permutation,
    torus_grid_diagram,
)
from .core import (
    ArcPresentation,
    DiagramError,
    GaussCode,
    GridDiagram,
    PetalPermutation,
    PlanarDiagramCode,
    arc_to_grid,
    gauss_to_pd,
    grid_to_arc,
    grid_to_gauss,
    grid_to_pd,
    is_petal_grid,
    pd_to_gauss,
    petal_grid_to_petal_perm,
    petal_perm_to_petal_grid,
    petal_projection_gauss,
    petal_projection_pd,
)
from .invariants import (
    DEFAULT_JONES_BUDGET,
    InvariantError,
    alexander_from_pd,
    determinant,
    jones_kauffman,
)
from .render import RenderSpec, render_svg
from .search import BudgetExceeded, MoveError, certify_petal_number, enumerate_petal_knots

EX_USAGE = 64
EX_PRECONDITION = 2
COMMANDS = ("construct", "convert", "invariant", "bounds", "enumerate", "certify", "render")
FORMATS = ("perm", "grid", "arc", "gauss", "pd")


class CliError(Exception):
    """Precondition failure reported with exit code 2."""


def jones_budget() -> int:
    raw = os.environ.get("PETAL_JONES_BUDGET")
    if raw is None or raw == "":
        return DEFAULT_JONES_BUDGET
    try:
        return int(raw)
    except ValueError:
        raise CliError(f"PETAL_JONES_BUDGET must be an integer, got {raw!r}") from None


# ---------------------------------------------------------------------------
# reading and writing diagrams


def _read_input(value: str) -> str:
    if value == "-":
        return sys.stdin.read()
    if value.lstrip().startswith("{") or "\n" in value:
        return value
    try:
        path = Path(value)
        if path.is_file():
            return path.read_text(encoding="utf-8")
    except OSError:
        pass
    return value


def _detect(text: str) -> str:
    t = text.strip()
    if t.startswith("{"):
        data = json.loads(t)
        for key, kind in (("heights", "perm"), ("x", "grid"), ("arcs", "arc"),
                          ("sequence", "gauss"), ("pd", "pd")):
            if key in data:
                return kind
        raise CliError("JSON input has none of heights/x/arcs/sequence/pd")
    if "X" in t:
        return "pd"
    if re.fullmatch(r"[\s\d,()\[\]]+", t):
        return "perm"
    raise CliError("cannot tell the input format; pass --from")


def parse_diagram(text: str, kind: str = "auto"):
    if kind == "auto":
        kind = _detect(text)
    t = text.strip()
    try:
        if kind == "perm":
            if t.startswith("{"):
                return PetalPermutation(tuple(json.loads(t)["heights"]))
            return PetalPermutation.from_text(t)
        if kind == "grid":
            return GridDiagram.from_json(t)
        if kind == "arc":
            return ArcPresentation(tuple(tuple(a) for a in json.loads(t)["arcs"]))
        if kind == "gauss":
            data = json.loads(t)
            return GaussCode(tuple(data["sequence"]), tuple(data["signs"]))
        if kind == "pd":
            if t.startswith("{"):
                data = json.loads(t)
                return PlanarDiagramCode(tuple(tuple(c) for c in data["pd"]), tuple(data.get("signs", ())))
            return PlanarDiagramCode.from_text(t)
    except (KeyError, TypeError, json.JSONDecodeError) as exc:
        raise CliError(f"malformed {kind} input: {exc}") from None
    raise CliError(f"unknown input format {kind!r}")


def convert(obj, to: str):
    """Convert any supported diagram object to the ``to`` representation."""
    if to == "perm":
        if isinstance(obj, PetalPermutation):
            return obj
        if isinstance(obj, ArcPresentation):
            obj = arc_to_grid(obj)
        if isinstance(obj, GridDiagram):
            if not is_petal_grid(obj):
                raise CliError("grid is not a petal grid diagram (columns must span n or n+1 rows)")
            return petal_grid_to_petal_perm(obj)
        raise CliError(f"cannot convert {type(obj).__name__} to a petal permutation")
    if to == "grid":
        if isinstance(obj, PetalPermutation):
            return petal_perm_to_petal_grid(obj).grid
        if isinstance(obj, ArcPresentation):
            return arc_to_grid(obj)
        if isinstance(obj, GridDiagram):
            return obj
        raise CliError(f"cannot convert {type(obj).__name__} to a grid diagram")
    if to == "arc":
        return grid_to_arc(convert(obj, "grid"))
    if to == "gauss":
        if isinstance(obj, GaussCode):
            return obj
        if isinstance(obj, PlanarDiagramCode):
            return pd_to_gauss(obj)
        if isinstance(obj, PetalPermutation):
            return petal_projection_gauss(obj)
        return grid_to_gauss(convert(obj, "grid"))
    if to == "pd":
        return to_pd(obj)
    raise CliError(f"unknown target format {to!r}")


def to_pd(obj) -> PlanarDiagramCode:
    if isinstance(obj, PlanarDiagramCode):
        return obj
    if isinstance(obj, GaussCode):
        return gauss_to_pd(obj)
    if isinstance(obj, PetalPermutation):
        return petal_projection_pd(obj)
    if isinstance(obj, ArcPresentation):
        obj = arc_to_grid(obj)
    return grid_to_pd(obj, cleanup=True)


def to_json_value(obj) -> dict:
    if isinstance(obj, PetalPermutation):
        return {"heights": list(obj.heights)}
    if isinstance(obj, GridDiagram):
        return json.loads(obj.to_json())
    if isinstance(obj, ArcPresentation):
        return {"arcs": [list(a) for a in obj.arcs]}
    if isinstance(obj, GaussCode):
        return {"sequence": list(obj.sequence), "signs": list(obj.signs)}
    if isinstance(obj, PlanarDiagramCode):
        return {"pd": [list(c) for c in obj.crossings], "signs": list(obj.signs)}
    raise TypeError(type(obj).__name__)


def to_text(obj) -> str:
    if isinstance(obj, PetalPermutation):
        return obj.to_text() + "\n"
    if isinstance(obj, PlanarDiagramCode):
        return obj.to_text()
    return _dump(to_json_value(obj))


def _dump(value) -> str:
    return json.dumps(value, sort_keys=True, ensure_ascii=False) + "\n"


# ---------------------------------------------------------------------------
# subcommands


def _emit_diagram(perm: PetalPermutation | None, grid: GridDiagram, fmt: str, extra: dict) -> str:
    if fmt == "perm":
        if perm is None:
            raise CliError("this construction is not a petal diagram; use --format json or grid")
        return perm.to_text() + "\n"
    if fmt == "grid":
        return grid.to_json() + "\n"
    if fmt == "svg":
        target = perm if perm is not None else grid
        return render_svg(RenderSpec(target, "petal-star" if perm is not None else "grid"))
    if fmt == "json":
        out = dict(extra)
        out["grid"] = json.loads(grid.to_json())
        if perm is not None:
            out["heights"] = list(perm.heights)
            out["petals"] = perm.petals
        return _dump(out)
    raise CliError(f"unknown format {fmt!r}")


def cmd_construct(a) -> str:
    kind = a.kind
    if kind == "theorem1":
        _need(a, "r", "s")
        perm = theorem1_petal_permutation(a.r, a.s, a.mirror)
        knot = TorusKnotParams(a.r, a.s)
    elif kind in ("surgery-plus", "surgery-minus"):
        _need(a, "r", "n")
        if kind == "surgery-plus":
            perm = surgery_plus_petal_permutation(a.r, a.n, a.mirror)
            knot = TorusKnotParams(a.r, a.n * a.r + 1)
        else:
            perm = surgery_minus_petal_permutation(a.r, a.n, a.mirror)
            knot = TorusKnotParams(a.r, a.n * a.r - 1)
    elif kind == "torus-grid":
        _need(a, "r", "s")
        g = torus_grid_diagram(a.r, a.s)
        if a.mirror:
            g = g.transpose()
        knot = TorusKnotParams(a.r, a.s)
        return _emit_diagram(None, g, a.format, {"construction": kind, "knot": str(knot),
                                                 "mirror": a.mirror, "size": g.size})
    elif kind == "braid":
        if a.word is None:
            raise CliError("braid needs --word, e.g. --word 1,1,1")
        word = [int(w) for w in a.word.split(",") if w.strip()]
        g = braid_to_grid(word, a.strands)
        return _emit_diagram(None, g, a.format, {"construction": kind, "word": word, "size": g.size})
    else:
        raise CliError(f"unknown construction {kind!r}")
    grid = petal_perm_to_petal_grid(perm).grid
    extra = {"construction": kind, "knot": str(knot.ordered()), "mirror": a.mirror}
    return _emit_diagram(perm, grid, a.format, extra)


def _need(a, *names):
    missing = [f"--{n}" for n in names if getattr(a, n) is None]
    if missing:
        raise CliError(f"{a.kind} needs {' and '.join(missing)}")


def cmd_convert(a) -> str:
    obj = parse_diagram(_read_input(a.input), a.source)
    out = convert(obj, a.to)
    if a.format == "json":
        return _dump(to_json_value(out))
    return to_text(out)


def cmd_invariant(a) -> str:
    obj = parse_diagram(_read_input(a.input), a.source)
    pd = to_pd(obj)
    result: dict = {"invariant": a.which, "crossings": pd.crossing_count}
    if a.which in ("alexander", "det"):
        alex = alexander_from_pd(pd)
        if a.which == "alexander":
            result["value"] = alex.to_json()
            result["text"] = alex.format()
        else:
            result["value"] = determinant(alex)
            result["text"] = str(result["value"])
    else:
        budget = jones_budget()
        j = jones_kauffman(pd, budget)
        if j is None:
            raise CliError(
                f"{pd.crossing_count} crossings exceed the Jones budget {budget} (PETAL_JONES_BUDGET)"
            )
        result["value"] = j.to_json()
        result["text"] = j.format()
    if a.format == "text":
        return result["text"] + "\n"
    return _dump(result)


def cmd_bounds(a) -> str:
    return _dump(bounds_report(a.r, a.s, assume_conjecture=a.assume_conjecture).to_json())


def _entry_row(e) -> dict:
    fp = e.fingerprint
    return {
        "petals": e.petals,
        "witness": e.witness.to_text(),
        "alexander": fp.alexander.format(),
        "determinant": fp.determinant,
        "jones": None if fp.jones is None else fp.jones.format(),
        "chiral": e.chiral,
    }


def cmd_enumerate(a) -> str:
    budget = a.jones_budget if a.jones_budget is not None else jones_budget()
    census = enumerate_petal_knots(a.petals, budget, workers=a.workers)
    rows = sorted((_entry_row(e) for e in census.values()),
                  key=lambda r: (len(r["alexander"]), r["alexander"], r["witness"]))
    if a.output == "json":
        return _dump({"petals": a.petals, "classes": len(rows), "knots": rows})
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=list(rows[0].keys()), lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()


def _parse_target(text: str) -> TorusKnotParams:
    m = re.fullmatch(r"\s*torus\s*:\s*(-?\d+)\s*,\s*(-?\d+)\s*", text)
    if not m:
        raise CliError(f"target must look like torus:R,S, got {text!r}")
    return TorusKnotParams(int(m.group(1)), int(m.group(2))).ordered()


def cmd_certify(a) -> str:
    k = _parse_target(a.target)
    k.require_nontrivial()
    budget = a.jones_budget if a.jones_budget is not None else jones_budget()
    cert = certify_petal_number(k, a.max_petals, budget, workers=a.workers)
    return _dump({
        "target": str(k),
        "value": cert.value,
        "witness": None if cert.witness is None else cert.witness.to_text(),
        "lower_bound": cert.lower_bound,
        "lower_bound_source": cert.lower_bound_source,
        "exact": cert.exact,
        "interval": list(cert.interval),
        "searched_up_to": cert.searched_up_to,
    })


def cmd_render(a) -> str:
    obj = parse_diagram(_read_input(a.input), a.source)
    if isinstance(obj, ArcPresentation):
        obj = arc_to_grid(obj)
    if not isinstance(obj, (PetalPermutation, GridDiagram)):
        raise CliError("render needs a petal permutation, grid or arc presentation")
    spec = RenderSpec(obj, a.style, size=a.size, stroke=a.stroke)
    return render_svg(spec)


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="petal", description="Petal diagrams of torus knots.")
    sub = p.add_subparsers(dest="command", metavar="{" + ",".join(COMMANDS) + "}")

    c = sub.add_parser("construct", help="build a diagram from a closed-form family")
    c.add_argument("kind", choices=["theorem1", "surgery-plus", "surgery-minus", "torus-grid", "braid"])
    c.add_argument("--r", type=int)
    c.add_argument("--s", type=int)
    c.add_argument("--n", type=int)
    c.add_argument("--word", help="comma separated signed generators (braid)")
    c.add_argument("--strands", type=int)
    c.add_argument("--mirror", action="store_true", help="emit the mirror image")
    c.add_argument("--format", default="perm", choices=["perm", "json", "grid", "svg"])
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("convert", help="convert between diagram encodings")
    v.add_argument("--from", dest="source", default="auto", choices=("auto",) + FORMATS)
    v.add_argument("--to", required=True, choices=FORMATS)
    v.add_argument("--input", required=True, help="file path, '-' for stdin, or inline text")
    v.add_argument("--format", default="text", choices=["text", "json"])
    v.set_defaults(func=cmd_convert)

    i = sub.add_parser("invariant", help="Alexander polynomial, determinant or Jones polynomial")
    i.add_argument("which", choices=["alexander", "det", "jones"])
    i.add_argument("--input", required=True)
    i.add_argument("--from", dest="source", default="auto", choices=("auto",) + FORMATS)
    i.add_argument("--format", default="json", choices=["json", "text"])
    i.set_defaults(func=cmd_invariant)

    b = sub.add_parser("bounds", help="petal number bounds for T(r,s)")
    b.add_argument("--r", type=int, required=True)
    b.add_argument("--s", type=int, required=True)
    b.add_argument("--assume-conjecture", action="store_true",
                   help="also report the unproven general formula")
    b.set_defaults(func=cmd_bounds)

    e = sub.add_parser("enumerate", help="knot census of all petal permutations of one size")
    e.add_argument("--petals", type=int, required=True)
    e.add_argument("--output", default="json", choices=["json", "csv"])
    e.add_argument("--workers", type=int, default=1)
    e.add_argument("--jones-budget", type=int)
    e.set_defaults(func=cmd_enumerate)

    f = sub.add_parser("certify", help="exhaustive petal number certificate")
    f.add_argument("--target", required=True, help="torus:R,S")
    f.add_argument("--max-petals", type=int, required=True)
    f.add_argument("--workers", type=int, default=1)
    f.add_argument("--jones-budget", type=int)
    f.set_defaults(func=cmd_certify)

    r = sub.add_parser("render", help="SVG drawing of a petal projection or grid")
    r.add_argument("--input", required=True)
    r.add_argument("--from", dest="source", default="auto", choices=("auto",) + FORMATS)
    r.add_argument("--style", default="petal-star", choices=["petal-star", "grid"])
    r.add_argument("--size", type=int, default=480)
    r.add_argument("--stroke", type=float, default=2.0)
    r.add_argument("--output", help="write here instead of standard output")
    r.set_defaults(func=cmd_render)
    return p


def run(argv: Sequence[str], out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    argv = list(argv)
    parser = build_parser()
    if not argv or argv[0] not in COMMANDS:
        if argv and argv[0] in ("-h", "--help"):
            parser.print_help(out)
            return 0
        if argv:
            err.write(f"petal: unknown subcommand {argv[0]!r}\n")
        parser.print_usage(err)
        return EX_USAGE
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text = args.func(args)
    except (CliError, PreconditionError, DiagramError, MoveError, BudgetExceeded,
            InvariantError) as exc:
        err.write(f"petal {args.command}: {exc}\n")
        return EX_PRECONDITION
    dest = getattr(args, "output", None) if args.command == "render" else None
    if dest:
        Path(dest).write_text(text, encoding="utf-8")
    else:
        out.write(text)
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
