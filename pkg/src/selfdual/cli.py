"""Command-line front end.

Exit status: 0 when everything checked passes, 1 when a check fails,
2 for usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path


from . import kernel
from .bincode import BinaryCode, count_weights, min_weight
from .construct import ConstructionParams
from .derive import full_neighbor_vector
from .gray import LAYOUTS
from .manifests import TABLES, find_row
from .pipeline import (
    construct_record,
    extend_record,
    file_record,
    neighbor_record,
    record_for_row,
    verify,
)
from .records import CodeRecord
from .reproduce import FAIL, PASS, run_table, summarize
from .search import SearchConfig, run_search

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=1, sort_keys=True))
    else:
        print(text)


def _save(args, rec: CodeRecord) -> None:
    if getattr(args, "out", None):
        rec.save(args.out)
        if not args.json:
            print(f"wrote {args.out}")


def _is_row_id(text: str) -> bool:
    table, dot, idx = text.partition(".")
    return bool(dot) and table in TABLES and idx.isdigit()


def load_record(ref: str, layout: str = "block") -> CodeRecord:
    """A record from a manifest row id, a record JSON file or an ``n k`` text file."""
    if _is_row_id(ref):
        find_row(ref)
        return record_for_row(ref, "raw", layout)
    path = Path(ref)
    if not path.exists():
        raise UsageError(f"no such file or manifest row: {ref}")
    text = path.read_text()
    if text.lstrip().startswith("{"):
        return CodeRecord.load(path)
    code = BinaryCode.from_text(text)
    return CodeRecord("file", {"kind": "file", "path": str(path)}, code.generator, None)


def load_code(ref: str) -> BinaryCode:
    return load_record(ref).code()


# ----------------------------------------------------------------- commands

def cmd_construct(args) -> int:
    if args.row:
        if any([args.group, args.ring, args.gamma, args.v1, args.v2]):
            raise UsageError("--row cannot be combined with explicit parameters")
        row = find_row(args.row)
        if row.kind != "construct":
            raise UsageError(f"{args.row} is not a construction row")
        if row.skip:
            raise UsageError(f"{args.row} is unverifiable as printed: {row.skip}")
        f = row.fields
        params = ConstructionParams.from_text(f["group"], f["ring"], f["g12"], f["v1"], f["g34"], f["v2"])
    else:
        missing = [k for k in ("group", "ring", "gamma", "v1", "v2") if not getattr(args, k)]
        if missing:
            raise UsageError("missing " + ", ".join("--" + m for m in missing))
        gamma = args.gamma.split(",") if "," in args.gamma else args.gamma
        params = ConstructionParams.from_text(args.group, args.ring, ",".join(gamma[:2]), args.v1,
                                              ",".join(gamma[2:]), args.v2)
    rec = construct_record(params, args.gray_chain == "alternate", args.layout,
                           args.row or "construct", workers=args.workers)
    _save(args, rec)
    _emit(args, rec.to_json() if args.full else _brief(rec), rec.summary() + (f"  ({rec.note})" if rec.note else ""))
    return EXIT_OK if rec.self_dual else EXIT_FAIL


def _brief(rec: CodeRecord) -> dict:
    d = rec.to_json()
    d.pop("generator")
    d.pop("ring_generator")
    d["source"].pop("base", None)
    return d


def cmd_verify(args) -> int:
    rec = load_record(args.record)
    rep = verify(rec, workers=args.workers)
    text = ("OK " if rep.ok else "MISMATCH ") + rec.summary()
    if rep.messages:
        text += "\n" + "\n".join("  " + m for m in rep.messages)
    _emit(args, rep.as_dict(), text)
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_minweight(args) -> int:
    code = load_code(args.code)
    d = min_weight(code, workers=args.workers, backend=args.backend)
    out = {"n": code.n, "k": code.k, "d": d}
    if args.count:
        out["counts"] = count_weights(code, [d], workers=args.workers, backend=args.backend)
    _emit(args, out, f"[{code.n},{code.k},{d}]" + (f" A_{d}={out['counts'][d]}" if args.count else ""))
    return EXIT_OK


def cmd_classify(args) -> int:
    code = load_code(args.code)
    if not code.is_self_dual():
        _emit(args, {"self_dual": False, "n": code.n, "k": code.k}, f"[{code.n},{code.k}] is not self-dual")
        return EXIT_FAIL
    rec = file_record(code, args.code, workers=args.workers, backend=args.backend)
    _emit(args, rec.profile.to_json(), rec.summary() + (f"  ({rec.note})" if rec.note else ""))
    return EXIT_OK


def cmd_extend(args) -> int:
    base = load_record(args.base, args.layout)
    rec = extend_record(base, args.c, args.X, args.layout, workers=args.workers)
    _save(args, rec)
    _emit(args, _brief(rec), rec.summary() + (f"  ({rec.note})" if rec.note else ""))
    return EXIT_OK


def cmd_neighbor(args) -> int:
    base = load_record(args.base, args.layout)
    x = full_neighbor_vector(args.x, args.zero_prefix)
    if len(x) != base.n:
        raise UsageError(f"x has length {len(x)} after the zero prefix; the code has length {base.n}")
    rec = neighbor_record(base, x, args.coords, workers=args.workers)
    _save(args, rec)
    _emit(args, _brief(rec), f"{rec.summary()} (coords={args.coords})" + (f"  ({rec.note})" if rec.note else ""))
    return EXIT_OK


def cmd_search(args) -> int:
    params = dict(kv.split("=", 1) for kv in args.param or [])
    cfg = SearchConfig(
        group=args.group, ring=args.ring, gamma=args.gamma, mode=args.mode, samples=args.samples,
        budget=args.budget, target_d=args.d, target_type=args.type, family=args.family,
        params={k: int(v) for k, v in params.items()}, seed=args.seed,
        workers=args.search_workers, alternate=args.gray_chain == "alternate", layout=args.layout,
        resume=args.resume,
    )
    ledger = run_search(cfg)
    if args.out:
        Path(args.out).write_text(ledger.dumps() + "\n")
    if args.json:
        print(ledger.dumps())
    else:
        print(f"evaluated {ledger.evaluated} candidates "
              f"({ledger.not_self_dual} not self-dual, {ledger.screened_out} screened out)")
        for e in ledger.entries:
            prof = e["profile"]
            fam = f" {prof['family']} {prof['params']}" if prof.get("family") else ""
            counts = " ".join(f"A{w}={c}" for w, c in prof["counts"].items())
            print(f"  [{prof['n']},{len(e['generator'])},{prof['d']}] {prof['type']}{fam} {counts} "
                  f"hits={e['hits']} first={e['params']}")
        print(f"note: {ledger.note}")
        if ledger.resume:
            print(f"budget reached; resume with --resume {ledger.resume}")
    return EXIT_OK


def cmd_reproduce(args) -> int:
    tables = list(TABLES) if args.tables == ["all"] else args.tables
    for t in tables:
        if t not in TABLES:
            raise UsageError(f"unknown table {t!r}; known: {', '.join(TABLES)} or all")
    report = {}
    worst = EXIT_OK
    for t in tables:
        res = run_table(t, coords=args.coords, layout=args.layout,
                        alternate=args.gray_chain == "alternate", diagnose=args.diagnose)
        summ = summarize(res)
        report[t] = {"summary": summ, "rows": [r.as_dict() for r in res]}
        if summ[FAIL]:
            worst = EXIT_FAIL
        if not args.json:
            for r in res:
                print(r.line())
            print(f"{t}: {summ[PASS]} PASS, {summ[FAIL]} FAIL, {summ['SKIP']} SKIP")
    if args.json:
        print(json.dumps(report, indent=1, sort_keys=True))
    return worst


# ----------------------------------------------------------------- parser

def _common(p, layout=True):
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--workers", type=int, default=None,
                   help="enumeration threads (default: $SELFDUAL_WORKERS or 1)")
    if layout:
        p.add_argument("--layout", choices=LAYOUTS, default="block",
                       help="coordinate order of Gray images (default: block)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="selfdual", description=__doc__.splitlines()[0], allow_abbrev=False)
    ap.add_argument("--config", help="JSON file whose keys set defaults for the chosen subcommand")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a code from group-ring parameters")
    p.add_argument("--row", help="manifest row id, e.g. table5.1")
    p.add_argument("--group", help="C9, C3xC5 or C3,3")
    p.add_argument("--ring", help="F2, F2U, F4 or F4U")
    p.add_argument("--gamma", help="four border entries, e.g. 0,0,0,1")
    p.add_argument("--v1")
    p.add_argument("--v2")
    p.add_argument("--gray-chain", choices=("default", "alternate"), default="default")
    p.add_argument("--full", action="store_true", help="include generators in JSON output")
    p.add_argument("-o", "--out", help="write the record as JSON")
    _common(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="re-check a saved record")
    p.add_argument("record")
    _common(p, layout=False)
    p.set_defaults(func=cmd_verify)

    for name, func, helptext in (("minweight", cmd_minweight, "minimum weight of a code"),
                                 ("classify", cmd_classify, "type and enumerator family")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("code", help="record JSON, 'n k' generator file or manifest row id")
        p.add_argument("--backend", choices=sorted(kernel.BACKENDS), default=None)
        if name == "minweight":
            p.add_argument("--count", action="store_true", help="also count minimum-weight words")
        _common(p, layout=False)
        p.set_defaults(func=func)

    p = sub.add_parser("extend", help="length n+2 extension over F2 or F2+uF2")
    p.add_argument("--base", required=True, help="record, generator file or row id")
    p.add_argument("--c", required=True, help="unit of the base ring, e.g. 1 or 3 (= 1+u)")
    p.add_argument("--X", required=True, help="vector with <X,X> = 1, ring shorthand")
    p.add_argument("-o", "--out")
    _common(p)
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("neighbor", help="binary neighbor <<x>^perp & C, x>")
    p.add_argument("--base", required=True)
    p.add_argument("--x", required=True, help="0/1 string (suffix when --zero-prefix is given)")
    p.add_argument("--zero-prefix", type=int, default=0, metavar="L")
    p.add_argument("--coords", choices=("raw", "std"), default="raw",
                   help="read x in construction order or in standard-form coordinates")
    p.add_argument("-o", "--out")
    _common(p)
    p.set_defaults(func=cmd_neighbor)

    p = sub.add_parser("search", help="search construction parameters")
    p.add_argument("--group", required=True)
    p.add_argument("--ring", required=True)
    p.add_argument("--gamma", help="fix the border entries instead of trying all")
    p.add_argument("--mode", choices=("auto", "exhaustive", "random"), default="auto")
    p.add_argument("--samples", type=int, default=10000)
    p.add_argument("--budget", type=int, help="maximum full evaluations this run")
    p.add_argument("--d", type=int, help="target minimum weight")
    p.add_argument("--type", choices=("I", "II"))
    p.add_argument("--family")
    p.add_argument("--param", action="append", metavar="NAME=VALUE")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--search-workers", type=int, default=None,
                   help="candidate processes (default: $SELFDUAL_WORKERS or 1)")
    p.add_argument("--resume", help="token printed by an earlier run")
    p.add_argument("--gray-chain", choices=("default", "alternate"), default="default")
    p.add_argument("-o", "--out")
    _common(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("reproduce", help="re-run the built-in tables")
    p.add_argument("tables", nargs="+", help="table ids (table1 ... table10) or all")
    p.add_argument("--coords", choices=("auto", "std", "raw"), default="auto",
                   help="neighbor vector coordinates; auto tries std then raw")
    p.add_argument("--gray-chain", choices=("default", "alternate"), default="default")
    p.add_argument("--diagnose", action="store_true",
                   help="for failing construction rows, list single-entry changes that match")
    _common(p)
    p.set_defaults(func=cmd_reproduce)

    ap._subparsers_by_name = sub.choices
    return ap


def _apply_config(ap, argv):
    pre = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
    pre.add_argument("--config")
    known, _ = pre.parse_known_args(argv)
    if not known.config:
        return
    try:
        data = json.loads(Path(known.config).read_text())
    except (OSError, json.JSONDecodeError) as e:
        ap.error(f"cannot read config {known.config}: {e}")
    if not isinstance(data, dict):
        ap.error("config file must hold a JSON object")
    for p in ap._subparsers_by_name.values():
        dests = {a.dest for a in p._actions}
        p.set_defaults(**{k.replace("-", "_"): v for k, v in data.items() if k.replace("-", "_") in dests})


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    ap = build_parser()
    _apply_config(ap, argv)
    args = ap.parse_args(argv)
    if getattr(args, "workers", None) is None and hasattr(args, "workers"):
        args.workers = kernel.default_workers()
    if hasattr(args, "search_workers") and args.search_workers is None:
        args.search_workers = kernel.default_workers()
    try:
        return args.func(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, KeyError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
