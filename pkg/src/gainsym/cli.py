"""Command-line front end: ``gainsym {spectrum,check,double,census,search}``.

Every command reads one graph document (or a built-in ``--fixture``) and
prints a JSON report carrying the command line, the sha256 digest of the
input, the tool version and the seed. ``--text`` switches to a plain
rendering. Exit codes: 0 success, 2 bad input, 3 internal inconsistency,
4 resource cap hit.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys

from . import __version__
from . import io as gio
from .constructions import DoubleKind, build_double, fixture, in_t4
from .core import ComplexUnit, underlying_properties
from .cycles import DEFAULT_BUDGET, census_is_negation_symmetric, cycle_census
from .equivalence import AUTOMORPHISM_MAX_N, CENSUS_MAX_K, is_sign_symmetric, is_switching_isomorphic
from .errors import GainGraphError, InputError, InternalConsistencyError, ParseError, ResourceError
from .search import SUCCESS_THRESHOLD, AnnealConfig, distinct_solutions
from .spectra import CHARPOLY_MAX_N, SYMMETRY_TOL, char_poly, eigenvalues, is_spectrally_symmetric

log = logging.getLogger(__name__)

EXIT_OK, EXIT_INPUT, EXIT_INTERNAL, EXIT_RESOURCE = 0, 2, 3, 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def parse_z(tokens) -> ComplexUnit | None:
    """``--z`` value: ``re,im``, ``p/q`` turns, ``turns p/q`` or ``0`` (no matching)."""
    tokens = list(tokens)
    if tokens and tokens[0] == "turns":
        if len(tokens) != 2:
            raise ParseError("--z turns expects one fraction")
        return gio.parse_gain({"turns": tokens[1]}, "--z")
    if len(tokens) != 1:
        raise ParseError("--z expects 're,im', 'p/q' or 'turns p/q'")
    text = tokens[0].strip()
    if text.startswith("turns:"):
        return gio.parse_gain({"turns": text[6:]}, "--z")
    if "," in text:
        re_, im_ = text.split(",", 1)
        return gio.parse_gain({"re": re_, "im": im_}, "--z")
    if text in ("0", "0.0"):
        return None
    if "/" in text:
        return gio.parse_gain({"turns": text}, "--z")
    return gio.parse_gain({"re": text, "im": 0.0}, "--z")


def _common(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("file", nargs="?", help="graph document (JSON)")
    src.add_argument("--fixture", help="built-in graph: example2, gamma_s:<s>, fig3a, fig3b")
    p.add_argument("--tolerance", type=float, default=None, help="numerical tolerance")
    p.add_argument("--max-n", type=int, default=None, help="order cap for exponential searches")
    p.add_argument("--budget", type=int, default=None, help="cycle enumeration budget")
    p.add_argument("--text", action="store_true", help="human-readable output")
    p.add_argument("-v", "--verbose", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gainsym", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"gainsym {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("spectrum", help="eigenvalues, characteristic polynomial, symmetry verdict")
    _common(p)

    p = sub.add_parser("check", help="sign-symmetry or switching isomorphism")
    _common(p)
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--sign-symmetric", action="store_true")
    mode.add_argument("--switching-iso", metavar="FILE2")
    p.add_argument("--census-k", type=int, default=CENSUS_MAX_K,
                   help="largest odd cycle order tried by the census obstruction (0 disables)")

    p = sub.add_parser("double", help="build one of the four doubles")
    _common(p)
    p.add_argument("--kind", required=True, choices=[k.value for k in DoubleKind])
    p.add_argument("--z", nargs="+", default=["1,0"], help="'re,im', 'p/q', 'turns p/q' or 0")
    p.add_argument("--anchor", type=int, default=0)
    p.add_argument("--b", metavar="FILE", help="JSON matrix B for the hermitian double (default I)")
    p.add_argument("--output", "-o", help="write the doubled document here")

    p = sub.add_parser("census", help="order-k cycle census by Re(gain)")
    _common(p)
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("search", help="anneal for a symmetric gain spectrum on the underlying graph")
    _common(p)
    defaults = AnnealConfig()
    p.add_argument("--iterations", type=int, default=defaults.iterations)
    p.add_argument("--restarts", type=int, default=defaults.restarts)
    p.add_argument("--cooling", type=float, default=defaults.cooling)
    p.add_argument("--seed", type=int, default=defaults.seed)
    p.add_argument("--runs", type=int, default=5)
    p.add_argument("--output", "-o", help="write the best gain graph here")
    return parser


def _load_input(args):
    if args.fixture:
        try:
            return fixture(args.fixture)
        except (KeyError, ValueError) as exc:
            raise ParseError(str(exc)) from None
    try:
        return gio.load(args.file)
    except OSError as exc:
        raise ParseError(f"cannot read {args.file}: {exc}") from None


def _census_rows(census) -> list:
    return [{"re": key, "count": count} for key, count in census.rows()]


def _witness(w) -> dict | None:
    if w is None:
        return None
    return {
        "perm": list(w.perm),
        "conversed": w.conversed,
        "switching": None if w.switching is None else list(w.switching),
    }


def cmd_spectrum(g, args) -> dict:
    tol = args.tolerance or SYMMETRY_TOL
    max_n = args.max_n or CHARPOLY_MAX_N
    verdict = is_spectrally_symmetric(g, tol=tol, max_n=max_n)
    out = {
        "n": g.n,
        "m": g.m,
        "eigenvalues": eigenvalues(g),
        "char_poly": char_poly(g, max_n) if g.n <= max_n else None,
        "symmetric": verdict.symmetric,
        "residual": verdict.residual,
        "pairing_residual": verdict.pairing_residual,
    }
    return out


def cmd_check(g, args) -> dict:
    tol = args.tolerance or 1e-9
    max_n = args.max_n or AUTOMORPHISM_MAX_N
    if args.switching_iso:
        other = gio.load(args.switching_iso)
        res = is_switching_isomorphic(g, other, tol=tol, max_n=max_n)
        return {"switching_isomorphic": res.result, "witness": _witness(res.witness), "reason": res.reason}
    budget = args.budget or 10**6
    res = is_sign_symmetric(g, census_k=args.census_k, use_census=args.census_k >= 3,
                            census_budget=budget, tol=tol, max_n=max_n)
    out = {"sign_symmetric": res.result, "witness": _witness(res.witness), "reason": res.reason}
    if res.obstruction is not None:
        out["obstruction"] = {"k": res.obstruction.k, "rows": _census_rows(res.obstruction)}
    return out


def cmd_double(g, args) -> dict:
    z = parse_z(args.z)
    b = None
    if args.b:
        try:
            with open(args.b, encoding="utf-8") as fh:
                b = gio.matrix_from_json(fh.read())
        except OSError as exc:
            raise ParseError(f"cannot read {args.b}: {exc}") from None
    kind = DoubleKind(args.kind)
    if kind is DoubleKind.IDENTITY_BLOCK and z is None:
        raise ParseError("the identity-block double needs a unit z")
    d = build_double(kind, g, z=z, anchor=args.anchor, b=b)
    tol = args.tolerance or SYMMETRY_TOL
    verdict = is_spectrally_symmetric(d, tol=tol)
    out = {
        "kind": kind.value,
        "n": d.n,
        "m": d.m,
        "spectrally_symmetric": verdict.symmetric,
        "residual": verdict.residual,
    }
    if kind is DoubleKind.SYLVESTER:
        out["z"] = z if z is not None else 0.0
        # sign-symmetry is only guaranteed to fail for z off the fourth roots of unity
        out["z_in_T4"] = z is not None and in_t4(z)
    try:
        sign = is_sign_symmetric(d, max_n=args.max_n or AUTOMORPHISM_MAX_N,
                                 census_budget=args.budget or 10**6)
        out["sign_symmetric"] = sign.result
        out["sign_reason"] = sign.reason
    except ResourceError as exc:
        out["sign_symmetric"] = None
        out["sign_reason"] = f"skipped: {exc}"
    if args.output:
        gio.dump(d, args.output)
        out["output"] = args.output
    else:
        out["document"] = gio.graph_to_dict(d)
    return out


def cmd_census(g, args) -> dict:
    census = cycle_census(g, args.k, budget=args.budget or DEFAULT_BUDGET)
    return {
        "k": census.k,
        "total": census.total,
        "rows": _census_rows(census),
        "negation_symmetric": census_is_negation_symmetric(census),
    }


def cmd_search(g, args) -> dict:
    if not underlying_properties(g).connected and g.n > 0:
        log.warning("underlying graph is disconnected; searching all components at once")
    cfg = AnnealConfig(iterations=args.iterations, restarts=args.restarts,
                       cooling=args.cooling, seed=args.seed)
    reps = distinct_solutions(g, cfg, runs=args.runs, max_n=args.max_n or AUTOMORPHISM_MAX_N)
    classes = [{
        "objective": r.objective,
        "restart_index": r.restart_index,
        "accepted_moves": r.accepted_moves,
        "basis_gains": [{"cycle": list(c), "gain": gain} for c, gain in r.basis_gains],
        "document": gio.graph_to_dict(r.gains),
    } for r in reps]
    out = {
        "runs": args.runs,
        "threshold": SUCCESS_THRESHOLD,
        "classes_found": len(reps),
        "classes": classes,
    }
    if args.output and reps:
        best = min(reps, key=lambda r: r.objective)
        gio.dump(best.gains, args.output)
        out["output"] = args.output
    return out


COMMANDS = {
    "spectrum": cmd_spectrum,
    "check": cmd_check,
    "double": cmd_double,
    "census": cmd_census,
    "search": cmd_search,
}


def _render_text(report: dict) -> str:
    lines = [f"gainsym {report['version']}  {report['command']}",
             f"input sha256 {report['input_digest']}"]
    if report.get("seed") is not None:
        lines.append(f"seed {report['seed']}")

    def walk(obj, indent):
        pad = "  " * indent
        for key, val in obj.items():
            if isinstance(val, dict):
                lines.append(f"{pad}{key}:")
                walk(val, indent + 1)
            elif isinstance(val, list) and val and isinstance(val[0], dict):
                lines.append(f"{pad}{key}:")
                for item in val:
                    lines.append(f"{pad}  - " + ", ".join(f"{k}={json.dumps(v)}" for k, v in item.items()))
            else:
                lines.append(f"{pad}{key}: {json.dumps(val)}")

    walk(report["results"], 1)
    return "\n".join(lines)


def run(argv=None) -> tuple:
    """Parse ``argv`` and execute; returns ``(exit_code, output_text)``."""
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        g = _load_input(args)
        results = COMMANDS[args.command](g, args)
    except InputError as exc:
        return EXIT_INPUT, f"error: {exc}"
    except ResourceError as exc:
        return EXIT_RESOURCE, f"error: resource cap: {exc}"
    except InternalConsistencyError as exc:
        return EXIT_INTERNAL, f"error: internal inconsistency: {exc}"
    except GainGraphError as exc:  # pragma: no cover
        return EXIT_INTERNAL, f"error: {exc}"
    report = {
        "command": " ".join(["gainsym"] + argv),
        "input_digest": gio.digest(g),
        "version": __version__,
        "seed": getattr(args, "seed", None),
        "results": results,
    }
    if args.text:
        return EXIT_OK, _render_text(gio.round_floats(report))
    return EXIT_OK, gio.to_report_json(report)


def main(argv=None) -> int:
    code, text = run(argv)
    stream = sys.stdout if code == EXIT_OK else sys.stderr
    print(text, file=stream)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
