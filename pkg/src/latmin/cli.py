"""Command-line surface.

Every command is a pure function of its arguments, input bytes, and seed;
identical invocations produce identical output bytes.  Reports are
newline-terminated canonical JSON on stdout.  Exit codes: 0 success, 1 a
verify suite recorded a violated verdict (an implementation bug, since the
checked theorems are proved), 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import gon, postulation, toric
from .core import as_intvec, parse_rat, rat_str
from .errors import LatminError
from .generate import GenerationError, SuiteConfig, generate_instance, instance_stream
from .polytope import Polytope, SymmetricBody, convex_hull, lattice_points, polar, volume
from .toric import MomentPolytope, ProductOfP1, ProjectiveSpace

SUITES = ("minkowski", "transference", "sharp2d", "flatness", "m2m", "postulation")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="latmin", add_help=False)
    sub = parser.add_subparsers(dest="command")
    io_cmds = {
        "width": "lattice width of a polytope",
        "minima": "successive minima of a symmetric body",
        "polar": "polar body of a symmetric body",
        "volume": "lattice-normalized volume",
        "points": "lattice points of a polytope",
        "toric-eps": "exact minima at an invariant point of a moment polytope",
        "toric-bracket": "minima brackets at a very general point",
        "postulation": "box counts / volumes or flag section counts",
    }
    for name, help_text in io_cmds.items():
        p = sub.add_parser(name, add_help=False, description=help_text)
        p.add_argument("--in", dest="infile")
        p.add_argument("--inline", dest="inline")
        p.add_argument("--out", dest="outfile")
        if name == "points":
            p.add_argument("--mode", choices=("all", "interior"), default="all")
        if name == "toric-eps":
            p.add_argument("--vertex", required=True)
    v = sub.add_parser("verify", add_help=False)
    v.add_argument("--suite", required=True, choices=SUITES)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--count", type=int, default=100)
    v.add_argument("--dim", type=int, default=2)
    v.add_argument("--bound", type=int, default=4)
    v.add_argument("--out", dest="outfile")
    return parser


def _load_json(args) -> dict:
    if args.inline is not None and args.infile is not None:
        raise UsageError("give --in or --inline, not both")
    if args.inline is not None:
        return json.loads(args.inline)
    if args.infile is not None:
        with open(args.infile, "rb") as fh:
            return json.loads(fh.read().decode("utf-8"))
    raise UsageError("an input is required (--in FILE or --inline JSON)")


def _parse_polytope(obj) -> Polytope:
    if not isinstance(obj, dict) or "dim" not in obj or "vertices" not in obj:
        raise LatminError('polytope JSON needs keys "dim" and "vertices"')
    d = int(obj["dim"])
    pts = [[parse_rat(c) for c in v] for v in obj["vertices"]]
    return convex_hull(pts, d)


def _dump(obj) -> bytes:
    return (json.dumps(obj, separators=(",", ":")) + "\n").encode("utf-8")


# ---------------------------------------------------------------------------
# verify suites


def _run_suite(cfg: SuiteConfig) -> dict:
    summary = {
        "suite": cfg.suite,
        "seed": cfg.seed,
        "count": cfg.count,
        "dim": cfg.dim,
        "bound": cfg.coord_bound,
        "holds": 0,
        "violated": 0,
    }
    extremes: dict = {}

    def _track(key: str, value: Fraction, bigger: bool):
        if key not in extremes:
            extremes[key] = value
        elif bigger and value > extremes[key]:
            extremes[key] = value
        elif not bigger and value < extremes[key]:
            extremes[key] = value

    if cfg.suite == "minkowski":
        for i in range(cfg.count):
            rep = gon.verify_minkowski_second(generate_instance(cfg, i))
            summary["holds" if rep.holds else "violated"] += 1
            prod = parse_rat(rep.quantities["product"])
            _track("min_product", prod, bigger=False)
            _track("max_product", prod, bigger=True)
        summary["min_product"] = rat_str(extremes["min_product"])
        summary["max_product"] = rat_str(extremes["max_product"])
    elif cfg.suite == "transference":
        for i in range(cfg.count):
            rep = gon.verify_transference(generate_instance(cfg, i))
            summary["holds" if rep.holds else "violated"] += 1
            for p in rep.quantities["pairings"]:
                _track("max_pairing", parse_rat(p), bigger=True)
        summary["max_pairing"] = rat_str(extremes["max_pairing"])
    elif cfg.suite == "sharp2d":
        cfg = SuiteConfig(cfg.suite, cfg.seed, cfg.count, 2, cfg.coord_bound)
        summary["dim"] = 2
        for i in range(cfg.count):
            rep = gon.verify_sharp_2d(generate_instance(cfg, i))
            summary["holds" if rep.holds else "violated"] += 1
            _track("max_product", parse_rat(rep.quantities["product"]), bigger=True)
        summary["max_product"] = rat_str(extremes["max_product"])
    elif cfg.suite == "flatness":
        for i in range(cfg.count):
            rep = gon.flatness_report(generate_instance(cfg, i))
            summary["holds" if rep.holds else "violated"] += 1
    elif cfg.suite == "m2m":
        for i in range(cfg.count):
            rng = instance_stream(cfg.seed, i)
            kind = rng.int_in(0, 2)
            if kind == 0:
                profile, mp = toric.exact_eps_family(
                    ProjectiveSpace(cfg.dim, rng.int_in(1, cfg.coord_bound)))
            elif kind == 1:
                weights = tuple(rng.int_in(1, cfg.coord_bound) for _ in range(cfg.dim))
                profile, mp = toric.exact_eps_family(ProductOfP1(weights))
            else:
                mp = _random_moment_polytope(rng, cfg.dim, cfg.coord_bound)
                profile = toric.eps_bracket_general(mp)
            rep = toric.verify_m2m(mp, profile)
            ok = rep.holds
            if profile.all_bracket:
                ok = ok and _ew_sandwich_ok(mp, profile)
            else:
                _track("max_ratio", parse_rat(rep.quantities["ratio"]), bigger=True)
            summary["holds" if ok else "violated"] += 1
        if "max_ratio" in extremes:
            summary["max_ratio"] = rat_str(extremes["max_ratio"])
    elif cfg.suite == "postulation":
        for i in range(cfg.count):
            rng = instance_stream(cfg.seed, i)
            t = tuple(Fraction(rng.int_in(0, 4 * cfg.coord_bound), rng.int_in(1, 4))
                      for _ in range(cfg.dim))
            rep = postulation.check_vol_bound(t)
            ok = rep.holds
            ts = tuple(sorted(t, reverse=True))
            if cfg.dim <= 3:
                ok = ok and (postulation.box_volume(ts)
                             == postulation.box_volume_closed_form(ts))
            summary["holds" if ok else "violated"] += 1
    return summary


def _random_moment_polytope(rng, dim: int, bound: int) -> MomentPolytope:
    for _ in range(1000):
        pts = [tuple(rng.int_in(-bound, bound) for _ in range(dim))
               for _ in range(dim + 4)]
        P = convex_hull(pts, dim)
        if P.is_full_dimensional:
            return MomentPolytope(P)
    raise GenerationError("no full-dimensional lattice polytope after 1000 tries")


def _ew_sandwich_ok(mp: MomentPolytope, profile) -> bool:
    w = gon.lattice_width(mp.polytope).width
    last = profile.entries[-1]
    return Fraction(w, mp.d) <= last.lo <= last.hi <= w


# ---------------------------------------------------------------------------
# command dispatch


def _dispatch(args) -> tuple[int, dict]:
    cmd = args.command
    if cmd == "verify":
        if args.count < 1 or not (2 <= args.dim <= 4) or args.bound < 1:
            raise UsageError("need count >= 1, 2 <= dim <= 4, bound >= 1")
        cfg = SuiteConfig(args.suite, args.seed % (1 << 64), args.count,
                          args.dim, args.bound)
        summary = _run_suite(cfg)
        return (1 if summary["violated"] else 0), summary

    obj = _load_json(args)
    if cmd == "postulation":
        if "t" in obj:
            t = [parse_rat(x) for x in obj["t"]]
            rep = postulation.check_vol_bound(t)
            return 0, {
                "t": [rat_str(x) for x in t],
                "count": postulation.box_count(t),
                "volume": rat_str(postulation.box_volume(t)),
                "bound": rep.quantities["bound"],
                "verdict": rep.verdict,
            }
        if {"d", "p", "q"} <= set(obj):
            return 0, {"h0": postulation.flag_h0(int(obj["d"]), obj["p"], int(obj["q"]))}
        raise LatminError('postulation input needs "t" or "d","p","q"')

    P = _parse_polytope(obj)
    if cmd == "width":
        return 0, gon.lattice_width(P).to_json()
    if cmd == "minima":
        return 0, gon.successive_minima(SymmetricBody(P)).to_json()
    if cmd == "polar":
        return 0, polar(SymmetricBody(P)).to_json()
    if cmd == "volume":
        return 0, {"volume": rat_str(volume(P))}
    if cmd == "points":
        pts = lattice_points(P, args.mode)
        return 0, {"mode": args.mode, "count": len(pts),
                   "points": [list(p) for p in pts]}
    if cmd == "toric-eps":
        u = as_intvec(int(c) for c in args.vertex.split(","))
        return 0, toric.eps_at_invariant_point(MomentPolytope(P), u).to_json()
    if cmd == "toric-bracket":
        return 0, toric.eps_bracket_general(MomentPolytope(P)).to_json()
    raise UsageError(f"unknown command {cmd!r}")


def run(argv: list) -> tuple[int, bytes]:
    """Execute one invocation; returns (exit_code, stdout_bytes)."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("a command is required")
        code, payload = _dispatch(args)
    except UsageError as exc:
        return 2, _dump({"error": {"code": "usage", "message": str(exc)}})
    except LatminError as exc:
        return 2, _dump({"error": {"code": type(exc).__name__, "message": str(exc)}})
    except (json.JSONDecodeError, OSError, KeyError, TypeError, ValueError) as exc:
        return 2, _dump({"error": {"code": "input", "message": str(exc)}})
    except GenerationError as exc:
        return 2, _dump({"error": {"code": "generation", "message": str(exc)}})
    out = _dump(payload)
    outfile = getattr(args, "outfile", None)
    if outfile:
        try:
            with open(outfile, "wb") as fh:
                fh.write(out)
        except OSError as exc:
            return 2, _dump({"error": {"code": "input", "message": str(exc)}})
    return code, out


def main() -> None:
    code, out = run(sys.argv[1:])
    sys.stdout.buffer.write(out)
    sys.stdout.buffer.flush()
    raise SystemExit(code)


if __name__ == "__main__":
    main()
