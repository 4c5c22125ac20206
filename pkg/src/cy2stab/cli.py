"""Command line: normalize, hn, mass, hom, point, gromov, check, plot.

Exit codes: 0 success or passing check, 1 failing check or computation error,
2 usage error (bad flags, words, charges or config).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import suites
from . import zigzag as zz
from .automata import AutomatonError, occurrences_from_hn, phi_point, run
from .braids import BraidWord, NormalForm, WordError, check_quiver, exponent_sum, expand_a1hat, normalize, parse_word
from .config import RunConfig, load_config
from .psl2 import ProjPoint, base_point, det, point_of, word_matrix, word_of_point
from .stability import ChargeError, GromovA2, gromov, mass_of_hn
from .svg import FIGURES

ERROR_CODES = {
    WordError: ("word-error", 2),
    ChargeError: ("charge-error", 2),
    AutomatonError: ("automaton-error", 1),
    zz.OracleBudgetExceeded: ("oracle-budget", 1),
    zz.OracleError: ("oracle-error", 1),
    ValueError: ("usage-error", 2),
}


class UsageError(ValueError):
    pass


def _charge_arg(text: str) -> tuple[str, ...]:
    parts = tuple(t.strip() for t in text.split(","))
    if len(parts) != 4:
        raise argparse.ArgumentTypeError("expected four comma-separated numbers")
    return parts


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", default=argparse.SUPPRESS, help="JSON file with RunConfig fields")
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")
    p = argparse.ArgumentParser(prog="cy2stab", description=__doc__.splitlines()[0], parents=[common])
    sub = p.add_subparsers(dest="cmd", required=True)
    _add = sub.add_parser

    def add_parser(name, **kw):
        return _add(name, parents=[common], **kw)

    sub.add_parser = add_parser  # type: ignore[method-assign]

    def quiver(q):
        q.add_argument("--quiver", default=None, help="a2 or a1hat")

    def charge(q):
        q.add_argument("--charge", type=_charge_arg, default=None, metavar="RE1,IM1,RE2,IM2",
                       help="Z of the two simples (P1, P2 or P0, P1) as rationals, e.g. --charge=1,0,-1/3,1")

    q = sub.add_parser("normalize", help="admissible writing of a word")
    quiver(q)
    q.add_argument("word")

    q = sub.add_parser("hn", help="HN multiplicity vector of word . start")
    quiver(q)
    q.add_argument("--word", default="")
    q.add_argument("--start", required=True)

    q = sub.add_parser("mass", help="mass of word . start")
    quiver(q)
    charge(q)
    q.add_argument("--word", default="")
    q.add_argument("--start", required=True)

    q = sub.add_parser("hom", help="homBar between two sphericals")
    quiver(q)
    q.add_argument("--from", dest="src", required=True, help="[a:c], a base object, or WORD@BASE")
    q.add_argument("--to", dest="dst", required=True)
    q.add_argument("--oracle", action="store_true", help="compute with the zigzag oracle")

    q = sub.add_parser("point", help="point of word . base in P^1")
    quiver(q)
    q.add_argument("--word", default="")
    q.add_argument("--base", required=True)

    q = sub.add_parser("gromov", help="Gromov coordinates of a charge")
    quiver(q)
    charge(q)
    q.add_argument("--window", type=int, default=None)

    q = sub.add_parser("check", help="run a verification suite")
    q.add_argument("suite", choices=sorted(suites.SUITE_NAMES))
    quiver(q)
    q.add_argument("--depth", type=int, default=None)
    q.add_argument("--window", type=int, default=None)
    q.add_argument("--seed", type=int, default=None)
    q.add_argument("--budget", type=int, default=None)
    q.add_argument("--tol", type=float, default=None)

    q = sub.add_parser("plot", help="write an SVG figure")
    q.add_argument("figure", choices=sorted(FIGURES))
    q.add_argument("--depth", type=int, default=None)
    q.add_argument("--out", default=None, help="output file (default: <out_dir>/<figure>.svg)")
    return p


def _config(args: argparse.Namespace) -> tuple[RunConfig, dict]:
    """Config from file and flags, plus the keys the user set explicitly."""
    explicit: dict = {}
    cfg = RunConfig()
    if args.config:
        cfg = load_config(args.config)
        explicit.update({k: v for k, v in json.loads(Path(args.config).read_text()).items()})
    flags = {k: getattr(args, k, None) for k in ("quiver", "charge", "depth", "window", "seed", "budget", "tol")}
    flags = {k: v for k, v in flags.items() if v is not None}
    explicit.update(flags)
    return cfg.merged(**flags), explicit


def _word(text: str, quiver: str) -> BraidWord:
    return parse_word(text, quiver)


def _endpoint(text: str, quiver: str) -> tuple[ProjPoint, BraidWord | NormalForm | None, str | None]:
    """(point, word, base) from '[a:c]', 'P1' or 'WORD@BASE'."""
    text = text.strip()
    if text.startswith("["):
        return ProjPoint.parse(text), None, None
    if "@" in text:
        w, base = text.rsplit("@", 1)
        word = _word(w, quiver)
        return point_of(word, base.strip()), word, base.strip()
    return base_point(quiver, text), BraidWord(quiver), text  # type: ignore[arg-type]


def _oracle_object(point: ProjPoint, word, base, quiver: str) -> zz.DGComplex:
    if word is None:
        if quiver != "A2":
            raise UsageError("the oracle needs A1hat objects as WORD@BASE")
        word, base = word_of_point(point), "P2"
    return zz.apply_word(word, zz.base_object(quiver, base))  # type: ignore[arg-type]


def cmd_normalize(args, cfg) -> dict:
    w = _word(args.word, cfg.quiver)
    nf = normalize(w)
    rec = {"input": args.word, "normal_form": nf.text(), "gamma": nf.gamma, "body": [list(b) if isinstance(b, tuple) else b for b in nf.body]}
    if cfg.quiver == "A2":
        rec["psl2"] = str(word_matrix(nf))
        rec["exponent_sum"] = exponent_sum(nf)
        rec["certified"] = word_matrix(w) == word_matrix(nf) and exponent_sum(w) == exponent_sum(nf)
    else:
        rec["free_word"] = " ".join(f"s[{k}]" + ("" if s > 0 else "^-1") for k, s in expand_a1hat(nf))
        rec["certified"] = expand_a1hat(w) == expand_a1hat(nf)
    return rec


def cmd_hn(args, cfg) -> dict:
    v = run(normalize(_word(args.word, cfg.quiver)), args.start)
    return {
        "state": v.state, "vector": list(v.mult), "supports": list(v.supports),
        "occurrences": {f"P{k}": n for k, n in occurrences_from_hn(v).items()}, "point": str(phi_point(v)),
    }


def cmd_mass(args, cfg) -> dict:
    c = cfg.type_a_charge()
    v = run(normalize(_word(args.word, cfg.quiver)), args.start)
    return {"mass": mass_of_hn(c, v), "state": v.state, "vector": list(v.mult)}


def cmd_hom(args, cfg) -> dict:
    p, wp, bp = _endpoint(args.src, cfg.quiver)
    q, wq, bq = _endpoint(args.dst, cfg.quiver)
    factor = 1 if cfg.quiver == "A2" else 2
    formula = factor * abs(det(p, q))
    rec = {"from": str(p), "to": str(q), "homBar": formula}
    if args.oracle:
        x, y = _oracle_object(p, wp, bp, cfg.quiver), _oracle_object(q, wq, bq, cfg.quiver)
        rec["oracle"] = zz.homBar(x, y)
        rec["homBar"] = rec["oracle"]
        rec["agrees"] = rec["oracle"] == formula
    return rec


def cmd_point(args, cfg) -> dict:
    return {"point": str(point_of(_word(args.word, cfg.quiver), args.base))}


def cmd_gromov(args, cfg) -> dict:
    c = cfg.type_a_charge()
    window = args.window or 10
    g = gromov(c, window)
    if isinstance(g, GromovA2):
        return {"x": g.x, "y": g.y, "z": g.z, "degenerate": c.degenerate()}
    return {"window": window, "x": {str(k): v for k, v in g.values.items()}}


def cmd_check(args, cfg, explicit) -> tuple[dict, int]:
    params = {k: explicit[k] for k in ("depth", "window", "seed", "budget", "tol") if k in explicit}
    quiver = cfg.quiver if "quiver" in explicit else None
    report = suites.run_suite(args.suite, quiver, **params)
    return json.loads(report.to_json()) | {"summary": report.line()}, 0 if report.passed else 1


def cmd_plot(args, cfg) -> dict:
    fig = FIGURES[args.figure]
    kwargs = {}
    if args.depth is not None:
        kwargs = {"depth": args.depth} if args.figure == "exchange-graph" else {"farey_depth": args.depth} if args.figure == "boundary-circle" else {}
    text = fig(**kwargs)
    out = Path(args.out) if args.out else cfg.output_dir() / f"{args.figure}.svg"
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(text)
    return {"figure": args.figure, "path": str(out), "bytes": len(text)}


def _emit(rec: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(rec, indent=1, default=str))
        return
    if "summary" in rec:
        print(rec["summary"])
        return
    if set(rec) >= {"normal_form"}:
        print(rec["normal_form"])
        return
    for k, v in rec.items():
        print(f"{k}: {v}")


def main(argv: Sequence[str] | None = None) -> int:
    parser = _parser()
    args = parser.parse_args(argv)
    args.json = getattr(args, "json", False)
    args.config = getattr(args, "config", None)
    try:
        cfg, explicit = _config(args)
        if args.cmd == "check":
            rec, code = cmd_check(args, cfg, explicit)
        else:
            rec = {"normalize": cmd_normalize, "hn": cmd_hn, "mass": cmd_mass, "hom": cmd_hom, "point": cmd_point,
                   "gromov": cmd_gromov, "plot": cmd_plot}[args.cmd](args, cfg)
            code = 0
    except tuple(ERROR_CODES) as e:  # type: ignore[misc]
        name, code = next(v for k, v in ERROR_CODES.items() if isinstance(e, k))
        if args.json:
            print(json.dumps({"error": {"code": name, "message": str(e)}}))
        else:
            print(f"error ({name}): {e}", file=sys.stderr)
        return code
    _emit(rec, args.json)
    return code


if __name__ == "__main__":
    sys.exit(main())
