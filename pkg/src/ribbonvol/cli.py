"""Command line interface.

Subcommands: enumerate, volume, psi, verify-kcf, identities, witten12,
angle.  Output is UTF-8 JSON (or CSV / LaTeX where noted), written to
stdout or --out.  Exit codes: 0 success, 1 verification failure, 2 usage
error.  Randomised commands require an explicit --seed, echoed in the
output.  MODULI_THREADS caps enumeration parallelism.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import __version__
from .exact import Poly
from .hypgeom import IdealPolygonChord, chords_cross, crossing_cos, crossing_cos_exact
from .kformula import cell_density, verify_form_identities, verify_kcf
from .ribbon import enumerate_graphs
from .volumes import kontsevich_volume, psi_numbers, is_stable
from .wittencycle import witten12_report

USAGE_ERROR = 2
VERIFICATION_FAILURE = 1


@dataclass(frozen=True)
class RunConfig:
    """One resolved invocation: what to run and where the output goes."""

    command: str
    g: int = None
    n: int = None
    degrees: tuple = None
    trials: int = None
    seed: int = None
    format: str = "json"
    out: str = None
    points: bool = False
    d: int = None
    chord1: tuple = None
    chord2: tuple = None

    @classmethod
    def from_args(cls, args) -> "RunConfig":
        fields = {k: getattr(args, k) for k in cls.__dataclass_fields__
                  if hasattr(args, k)}
        if fields.get("degrees") is not None:
            fields["degrees"] = tuple(fields["degrees"])
        return cls(**fields)


def _parse_degrees(text: str):
    try:
        degrees = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad degree list {text!r}")
    if not degrees:
        raise argparse.ArgumentTypeError("empty degree list")
    return degrees


def _parse_chord(text: str):
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"chord must be i,j; got {text!r}")
    return (int(parts[0]), int(parts[1]))


def _poly_latex(p: Poly) -> str:
    if not p.terms:
        return "0"
    pieces = []
    for exp, c in p._sorted_terms():
        mono = "".join(
            (f"{v}" if e == 1 else f"{v}^{{{e}}}")
            for v, e in zip(p.vars, exp) if e)
        c = Fraction(c) if not hasattr(c, "is_rational") else c
        frac = c if isinstance(c, Fraction) else c.as_fraction()
        if frac.denominator == 1:
            cs = str(frac.numerator)
        else:
            sign = "-" if frac < 0 else ""
            cs = f"{sign}\\tfrac{{{abs(frac.numerator)}}}{{{frac.denominator}}}"
        if mono and cs == "1":
            cs = ""
        elif mono and cs == "-1":
            cs = "-"
        pieces.append(f"{cs}{mono}")
    out = pieces[0]
    for piece in pieces[1:]:
        out += f" {piece}" if piece.startswith("-") else f" + {piece}"
    return out


def cmd_enumerate(args) -> tuple:
    degrees = args.degrees
    rows = []
    for graph, aut in enumerate_graphs(args.g, args.n, degrees):
        rows.append({"graph": graph.to_json(), "aut": aut,
                     "genus": graph.genus, "faces": graph.num_faces})
    payload = {
        "v": 1,
        "command": "enumerate",
        "g": args.g,
        "n": args.n,
        "degrees": sorted(degrees, reverse=True),
        "count": len(rows),
        "classes": rows,
    }
    if args.format == "csv":
        lines = ["index,aut,half_edges,s0,s1,face_labels"]
        for i, row in enumerate(rows):
            gj = row["graph"]
            lines.append(",".join([
                str(i), str(row["aut"]), str(gj["half_edges"]),
                " ".join(map(str, gj["s0"])),
                " ".join(map(str, gj["s1"])),
                " ".join(map(str, gj["face_labels"])),
            ]))
        return "\n".join(lines) + "\n", 0
    return payload, 0


def cmd_volume(args) -> tuple:
    if not is_stable(args.g, args.n):
        print(f"error: ({args.g},{args.n}) is unstable", file=sys.stderr)
        return None, USAGE_ERROR
    W = kontsevich_volume(args.g, args.n)
    if args.format == "latex":
        return f"W_{{{args.g},{args.n}}} = {_poly_latex(W)}\n", 0
    payload = {
        "v": 1,
        "command": "volume",
        "g": args.g,
        "n": args.n,
        "W": W.to_json(),
        "W_str": str(W),
    }
    return payload, 0


def cmd_psi(args) -> tuple:
    if not is_stable(args.g, args.n):
        print(f"error: ({args.g},{args.n}) is unstable", file=sys.stderr)
        return None, USAGE_ERROR
    table = psi_numbers(args.g, args.n)
    payload = {
        "v": 1,
        "command": "psi",
        "g": args.g,
        "n": args.n,
        "psi": [{"alpha": list(alpha), "value": str(val)}
                for alpha, val in sorted(table.items()) if val != 0],
    }
    return payload, 0


def cmd_verify_kcf(args) -> tuple:
    if not is_stable(args.g, args.n):
        print(f"error: ({args.g},{args.n}) is unstable", file=sys.stderr)
        return None, USAGE_ERROR
    report = verify_kcf(args.g, args.n, trials=args.trials, seed=args.seed)
    payload = {"v": 1, "command": "verify-kcf", **report}
    if not args.points:
        payload["points"] = payload["points"][:3]
    return payload, 0 if report["equal"] else VERIFICATION_FAILURE


def cmd_identities(args) -> tuple:
    from .ribbon import enumerate_trivalent

    if not is_stable(args.g, args.n):
        print(f"error: ({args.g},{args.n}) is unstable", file=sys.stderr)
        return None, USAGE_ERROR
    graphs = enumerate_trivalent(args.g, args.n)
    expected_density = Fraction(2) ** (1 - args.g)
    out = []
    all_ok = True
    for graph, aut in graphs:
        rep = verify_form_identities(graph)
        rho = cell_density(graph)
        ok = rep["ok"] and rho == expected_density
        all_ok &= ok
        out.append({"graph": graph.to_json(), "aut": aut, "checks": rep["checks"],
                    "density": str(rho), "ok": ok})
    payload = {
        "v": 1,
        "command": "identities",
        "g": args.g,
        "n": args.n,
        "expected_density": str(expected_density),
        "graphs": len(graphs),
        "ok": all_ok,
        "reports": out,
    }
    return payload, 0 if all_ok else VERIFICATION_FAILURE


def cmd_witten12(args) -> tuple:
    report = witten12_report()
    ok = (report["intersections"] == {"psi1": "1", "psi2": "1"})
    payload = {"v": 1, "command": "witten12", "ok": ok, **report}
    return payload, 0 if ok else VERIFICATION_FAILURE


def cmd_angle(args) -> tuple:
    try:
        c1 = IdealPolygonChord(args.d, args.chord1)
        c2 = IdealPolygonChord(args.d, args.chord2)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return None, USAGE_ERROR
    if not chords_cross(c1, c2):
        print("error: chords do not cross", file=sys.stderr)
        return None, VERIFICATION_FAILURE
    payload = {
        "v": 1,
        "command": "angle",
        "d": args.d,
        "chord1": list(args.chord1),
        "chord2": list(args.chord2),
        "cos": crossing_cos(c1, c2),
    }
    if args.d == 5:
        payload["cos_exact"] = crossing_cos_exact(c1, c2).to_json()
    return payload, 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ribbonvol",
        description="Exact ribbon graph volumes and moduli intersection numbers.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_gn=True):
        if needs_gn:
            p.add_argument("--g", type=int, required=True, help="genus")
            p.add_argument("--n", type=int, required=True, help="number of labelled faces")
        p.add_argument("--out", type=str, default=None, help="output path (default stdout)")

    p = sub.add_parser("enumerate", help="list ribbon graph classes with a degree sequence")
    common(p)
    p.add_argument("--degrees", type=_parse_degrees, required=True,
                   help="comma separated vertex degrees, e.g. 5,3")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("volume", help="Kontsevich volume polynomial W_{g,n}")
    common(p)
    p.add_argument("--format", choices=("json", "latex"), default="json")
    p.set_defaults(func=cmd_volume)

    p = sub.add_parser("psi", help="psi-class intersection numbers")
    common(p)
    p.set_defaults(func=cmd_psi)

    p = sub.add_parser("verify-kcf", help="verify the combinatorial formula at random points")
    common(p)
    p.add_argument("--trials", type=int, default=30)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--points", action="store_true", help="emit every sampled point")
    p.set_defaults(func=cmd_verify_kcf)

    p = sub.add_parser("identities", help="matrix identities and cell densities")
    common(p)
    p.set_defaults(func=cmd_identities)

    p = sub.add_parser("witten12", help="the (1,2) combinatorial cycle computation")
    common(p, needs_gn=False)
    p.set_defaults(func=cmd_witten12)

    p = sub.add_parser("angle", help="crossing angle of two regular ideal polygon chords")
    common(p, needs_gn=False)
    p.add_argument("--d", type=int, required=True, help="polygon degree")
    p.add_argument("--chord1", type=_parse_chord, required=True, help="i,j")
    p.add_argument("--chord2", type=_parse_chord, required=True, help="i,j")
    p.set_defaults(func=cmd_angle)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code not in (0, None) else 0
    config = RunConfig.from_args(args)
    try:
        payload, code = args.func(config)
    except ValueError as exc:
        print(json.dumps({"v": 1, "error": str(exc)}))
        return USAGE_ERROR
    if payload is None:
        return code
    text = payload if isinstance(payload, str) else json.dumps(payload, indent=1) + "\n"
    if config.out:
        with open(config.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
