"""Command-line front end: ``xfam <command> ...``.

Every command prints one report envelope on stdout::

    {"tool": "xfam", "command": ..., "params": {...}, "result": {...}, "elapsed_ms": ...}

Exit status is 0 on success, 1 when a verification finds a mismatch and 2 on
usage errors, malformed input or exceeded caps.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
import time
from fractions import Fraction
from typing import Any, Callable, Sequence

from . import bounds as bd
from . import lemmas
from . import oracle
from .constructions import CONSTRUCTIONS
from .exactmath import cascade, cascade_shadow_bound
from .setfamily import DEFAULT_ENUM_CAP, CapExceeded, Family, colex_segment, lex_segment, shadow

log = logging.getLogger("xfam")

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# -- command handlers: each returns (params, result, mismatch) ---------------

Handler = Callable[[argparse.Namespace], tuple[dict, Any, bool]]


def _cmd_cascade(a: argparse.Namespace):
    rep = cascade(a.m, a.k)
    return {"m": a.m, "k": a.k}, {"terms": rep.as_lists(), "t": rep.t}, False


def _cmd_shadow(a: argparse.Namespace):
    try:
        with open(a.family) as fh:
            fam = Family.from_json(fh.read())
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read family file {a.family}: {exc}") from exc
    sh = shadow(fam, a.ell)
    result = {"family_size": len(fam), "shadow_size": len(sh), "shadow": sh.to_dict()}
    if 1 <= a.ell < fam.k:
        result["cascade_bound"] = cascade_shadow_bound(len(fam), fam.k, a.ell) if len(fam) else 0
    return {"family": a.family, "ell": a.ell}, result, False


def _cmd_segment(a: argparse.Namespace):
    fn = lex_segment if a.order == "lex" else colex_segment
    fam = fn(a.n, a.k, a.m)
    return {"order": a.order, "n": a.n, "k": a.k, "m": a.m}, fam.to_dict(), False


def _parse_kv(tokens: Sequence[str], names: Sequence[str]) -> dict[str, int]:
    """``n=7 k=2`` style or positional tokens, in the order of ``names``."""
    out: dict[str, int] = {}
    pos = [t for t in tokens if "=" not in t]
    for t in tokens:
        if "=" in t:
            key, val = t.split("=", 1)
            key = "ell" if key in ("l", "ℓ") else key
            if key not in names:
                raise UsageError(f"unknown parameter {key!r}; expected {', '.join(names)}")
            out[key] = _int(val)
    free = [p for p in names if p not in out]
    if len(pos) > len(free):
        raise UsageError(f"too many parameters; expected {', '.join(names)}")
    out.update(zip(free, (_int(v) for v in pos)))
    return out


def _int(text: str) -> int:
    try:
        return int(text)
    except ValueError as exc:
        raise UsageError(f"expected an integer, got {text!r}") from exc


def _cmd_construct(a: argparse.Namespace):
    if a.name not in CONSTRUCTIONS:
        raise UsageError(f"unknown construction {a.name!r}; known: {', '.join(CONSTRUCTIONS)}")
    fn, names = CONSTRUCTIONS[a.name]
    params = _parse_kv(a.params, names)
    required = [p for p in names if p not in params and p != "x"]
    if required:
        raise UsageError(f"{a.name} needs {', '.join(names)}; missing {', '.join(required)}")
    out = fn(**params)
    if isinstance(out, tuple):
        A, B = out
        result = {"A": A.to_dict(), "B": B.to_dict(), "sizes": [len(A), len(B)], "product": str(len(A) * len(B))}
    else:
        result = {"family": out.to_dict(), "size": len(out)}
    return {"name": a.name, **params}, result, False


def _cmd_bound(a: argparse.Namespace):
    tid = a.theorem.upper()
    if tid not in bd.THEOREMS:
        raise UsageError(f"unknown theorem {a.theorem!r}; known: {', '.join(bd.THEOREMS)}")
    names = bd.theorem_params(tid)
    params = _parse_kv(a.params, names)
    missing = [p for p in names if p not in params]
    if missing:
        raise UsageError(f"{tid} needs {', '.join(names)}; missing {', '.join(missing)}")
    rep = bd.bound(tid, params)
    return {"theorem": tid, **params}, rep.to_dict(), False


def _cmd_gamma(a: argparse.Namespace):
    return {"n": a.n, "k": a.k, "ell": a.ell}, {"value": str(bd.gamma(a.n, a.k, a.ell))}, False


def _cmd_phi(a: argparse.Namespace):
    try:
        x = Fraction(a.x)
    except ValueError as exc:
        raise UsageError(f"x must be an integer or fraction, got {a.x!r}") from exc
    ev = bd.phi(a.n, a.k, a.ell, x)
    result = {"value": str(ev.value)}
    if a.second:
        result["second"] = str(bd.phi_second(a.n, a.k, a.ell, x))
    return {"n": a.n, "k": a.k, "ell": a.ell, "x": str(x)}, result, False


def _cmd_check_lemmas(a: argparse.Namespace):
    ids = tuple(i.upper() for i in a.lemma) if a.lemma else lemmas.LEMMA_IDS
    for i in ids:
        if i not in lemmas.LEMMAS:
            raise UsageError(f"unknown lemma {i!r}; known: {', '.join(lemmas.LEMMAS)}")

    def progress(res: lemmas.LemmaSweep) -> None:
        print(f"[check-lemmas] {res.lemma_id}: {res.checked} points, "
              f"{len(res.counterexamples)} counterexamples", file=sys.stderr, flush=True)

    sweeps = lemmas.sweep_all(a.max_n, a.workers, ids, progress)
    res = {"holds": all(s.holds for s in sweeps),
           "lemmas": [s.to_dict(limit=a.limit) for s in sweeps]}
    return {"max_n": a.max_n, "lemmas": list(ids)}, res, not res["holds"]


def _cmd_search(a: argparse.Namespace):
    window = tuple(a.window) if a.window else None
    params = {"n": a.n, "k": a.k, "ell": a.ell, "nontrivial": a.nontrivial,
              "window": list(window) if window else None, "lex": a.lex}
    if a.lex:
        if a.nontrivial:
            raise UsageError("--lex solves the unconstrained problem; drop --nontrivial")
        res = oracle.search_lex(a.n, a.k, a.ell, window, cap=a.max_level)
    else:
        cons = oracle.SearchConstraints(a.nontrivial, window, not a.all_pairs)
        res = oracle.search_exhaustive(a.n, a.k, a.ell, cons, cap=a.max_enumeration,
                                       workers=a.workers, seed=a.seed)
    return params, res.to_dict(), False


def _grid_from_args(a: argparse.Namespace) -> list[dict] | None:
    if not a.point and not a.grid:
        return None
    pts: list[dict] = []
    for p in a.point or []:
        row = {}
        for tok in p.split(","):
            if "=" not in tok:
                raise UsageError(f"grid point tokens look like n=7, got {tok!r}")
            key, val = tok.split("=", 1)
            row["ell" if key in ("l", "ℓ") else key.strip()] = _int(val)
        pts.append(row)
    if a.grid:
        try:
            with open(a.grid) as fh:
                pts.extend(json.load(fh))
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read grid file {a.grid}: {exc}") from exc
    return pts


def _cmd_verify(a: argparse.Namespace):
    tid = a.theorem.upper()
    if tid not in oracle.VERIFIERS:
        raise UsageError(f"unknown theorem {a.theorem!r}; known: {', '.join(oracle.VERIFIERS)}")
    grid = _grid_from_args(a)
    rep = oracle.verify_theorem(tid, grid, cap=a.max_enumeration, workers=a.workers, seed=a.seed)
    res = rep.to_dict()
    if not a.certificates:
        for r in res["records"]:
            r.pop("certificate", None)
    return {"theorem": tid, "grid": grid}, res, not rep.ok


COMMANDS: dict[str, Handler] = {
    "cascade": _cmd_cascade,
    "shadow": _cmd_shadow,
    "segment": _cmd_segment,
    "construct": _cmd_construct,
    "bound": _cmd_bound,
    "gamma": _cmd_gamma,
    "phi": _cmd_phi,
    "check-lemmas": _cmd_check_lemmas,
    "search": _cmd_search,
    "verify": _cmd_verify,
}


# -- output ------------------------------------------------------------------


def _flatten(obj: Any, prefix: str = "") -> list[tuple[str, str]]:
    if isinstance(obj, dict):
        out = []
        for key, val in obj.items():
            out.extend(_flatten(val, f"{prefix}.{key}" if prefix else str(key)))
        return out
    if isinstance(obj, list):
        out = []
        for i, val in enumerate(obj):
            out.extend(_flatten(val, f"{prefix}.{i}" if prefix else str(i)))
        return out
    if obj is None:
        return [(prefix, "")]
    if isinstance(obj, bool):
        return [(prefix, "true" if obj else "false")]
    return [(prefix, str(obj))]


def render(envelope: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(envelope, indent=2)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["key", "value"])
    w.writerows(_flatten(envelope))
    return buf.getvalue().rstrip("\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--max-enumeration", type=int, default=oracle.DEFAULT_SUBSET_CAP,
                        help="largest number of sets on the enumerated level of an exhaustive search (default: %(default)s)")
    common.add_argument("--max-level", type=int, default=DEFAULT_ENUM_CAP,
                        help="largest level size materialised by lex sweeps (default: %(default)s)")
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--seed", type=int, default=0, help="seed for sampled spot checks")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="xfam", description="Exact tools for cross-intersecting set families.")
    sub = p.add_subparsers(dest="command", required=True, metavar="command")

    s = sub.add_parser("cascade", parents=[common], help="k-cascade representation of m")
    s.add_argument("m", type=int)
    s.add_argument("k", type=int)

    s = sub.add_parser("shadow", parents=[common], help="ell-shadow of a family read from a JSON file")
    s.add_argument("family")
    s.add_argument("ell", type=int)

    s = sub.add_parser("segment", parents=[common], help="first m k-sets in lex or colex order")
    s.add_argument("order", choices=("lex", "colex"))
    s.add_argument("n", type=int)
    s.add_argument("k", type=int)
    s.add_argument("m", type=int)

    s = sub.add_parser("construct", parents=[common], help="build a named family or pair")
    s.add_argument("name", help=", ".join(CONSTRUCTIONS))
    s.add_argument("params", nargs="*", help="positional values or key=value")

    s = sub.add_parser("bound", parents=[common], help="evaluate a theorem's bound")
    s.add_argument("theorem", help=", ".join(bd.THEOREMS))
    s.add_argument("params", nargs="*", help="positional values or key=value")

    for name, helptext in (("gamma", "larger of the two nontrivial candidates"),):
        s = sub.add_parser(name, parents=[common], help=helptext)
        s.add_argument("n", type=int)
        s.add_argument("k", type=int)
        s.add_argument("ell", type=int)

    s = sub.add_parser("phi", parents=[common], help="the comparison polynomial at x")
    s.add_argument("n", type=int)
    s.add_argument("k", type=int)
    s.add_argument("ell", type=int)
    s.add_argument("x", help="integer or fraction such as 7/2")
    s.add_argument("--second", action="store_true", help="also print the second-derivative expression")

    s = sub.add_parser("check-lemmas", parents=[common], help="exact sweep of the auxiliary inequalities")
    s.add_argument("--max-n", type=int, default=100)
    s.add_argument("--lemma", action="append", help="restrict to these ids (repeatable)")
    s.add_argument("--limit", type=int, default=50, help="counterexamples listed per lemma")

    s = sub.add_parser("search", parents=[common], help="oracle maximum of |A||B|")
    s.add_argument("n", type=int)
    s.add_argument("k", type=int)
    s.add_argument("ell", type=int)
    s.add_argument("--nontrivial", action="store_true")
    s.add_argument("--window", type=int, nargs=2, metavar=("LO", "HI"), help="restrict |A| to [LO, HI]")
    s.add_argument("--lex", action="store_true", help="sweep lex segments instead of all maximal pairs")
    s.add_argument("--all-pairs", action="store_true", help="do not require maximality (enumerates the k level)")

    s = sub.add_parser("verify", parents=[common], help="compare oracle maxima with a theorem")
    s.add_argument("theorem", help=", ".join(oracle.VERIFIERS))
    s.add_argument("--point", action="append", help="grid point such as n=7,k=2,ell=3 (repeatable)")
    s.add_argument("--grid", help="JSON file with a list of parameter objects")
    s.add_argument("--certificates", action="store_true", help="include full search results")
    return p


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if args.workers < 1 or args.max_enumeration < 1:
        print("xfam: --workers and --max-enumeration must be positive", file=sys.stderr)
        return EXIT_USAGE
    t0 = time.perf_counter()
    try:
        params, result, mismatch = COMMANDS[args.command](args)
    except (UsageError, CapExceeded, bd.HypothesisError, ValueError, KeyError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"xfam {args.command}: {msg}", file=sys.stderr)
        return EXIT_USAGE
    envelope = {"tool": "xfam", "command": args.command, "params": params, "result": result,
                "elapsed_ms": int((time.perf_counter() - t0) * 1000)}
    print(render(envelope, args.format))
    return EXIT_MISMATCH if mismatch else EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
