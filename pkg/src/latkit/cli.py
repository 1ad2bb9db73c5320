"""latcli: command line front end.

Exit codes: 0 success, 1 a verification failed, 2 bad input or usage.
"""
import argparse
import hashlib
import json
import sys
from fractions import Fraction

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _jsonable(x):
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else "%d/%d" % (x.numerator, x.denominator)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def _cell(v):
    if isinstance(v, (list, tuple)):
        if len(v) > 12:
            return "[%d items]" % len(v)
        return " ".join(str(_cell(x)) for x in v)
    if isinstance(v, dict):
        return "{%d keys}" % len(v)
    return str(v)


def _table(rows, columns):
    widths = [max(len(c), *(len(_cell(r.get(c))) for r in rows)) if rows else len(c) for c in columns]
    lines = ["  ".join(c.ljust(w) for c, w in zip(columns, widths))]
    lines.append("  ".join("-" * w for w in widths))
    for r in rows:
        lines.append("  ".join(_cell(r.get(c)).ljust(w) for c, w in zip(columns, widths)))
    return "\n".join(lines)


def _pairs(d, prefix=""):
    rows = []
    for k, v in d.items():
        if isinstance(v, dict) and len(v) <= 12 and all(not isinstance(x, (dict, list)) or len(x) <= 12 for x in v.values()):
            rows += _pairs(v, prefix + k + ".")
        else:
            rows.append({"key": prefix + k, "value": v})
    return rows


def dumps(x, level=0):
    """JSON with lists of scalars kept on one line."""
    pad = "  " * (level + 1)
    if isinstance(x, dict):
        if not x:
            return "{}"
        items = ["%s%s: %s" % (pad, json.dumps(k), dumps(v, level + 1)) for k, v in x.items()]
        return "{\n" + ",\n".join(items) + "\n" + "  " * level + "}"
    if isinstance(x, list) and any(isinstance(v, (dict, list)) for v in x):
        items = [pad + dumps(v, level + 1) for v in x]
        return "[\n" + ",\n".join(items) + "\n" + "  " * level + "]"
    return json.dumps(x)


def emit(data, pretty, columns=None, rows_key=None):
    data = _jsonable(data)
    if not pretty:
        print(dumps(data))
        return
    if rows_key and columns:
        print(_table(data[rows_key], columns))
        rest = {k: v for k, v in data.items() if k != rows_key}
        if rest:
            print()
            print(_table(_pairs(rest), ["key", "value"]))
    else:
        print(_table(_pairs(data), ["key", "value"]))


def _read_json(path):
    try:
        with open(path, "rb") as fh:
            raw = fh.read()
    except OSError as exc:
        raise UsageError("cannot read %s: %s" % (path, exc.strerror))
    try:
        return json.loads(raw), hashlib.sha256(raw).hexdigest()
    except ValueError as exc:
        raise UsageError("%s is not valid JSON: %s" % (path, exc))


def _load_lattice(obj, what):
    from .lattice import Lattice
    try:
        return Lattice.from_json(obj)
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise UsageError("bad lattice in %s: %s" % (what, exc))


# subcommands

CASE_COLUMNS = ["name", "pass", "gram_match", "smith_computed", "rootless",
                "product_order_computed", "rank_computed", "F_label", "reference_note"]


def cmd_verify(args):
    from . import verify
    if args.all == bool(args.case):
        raise UsageError("give exactly one of --all or --case NAME")
    if args.case:
        if args.case not in verify.CASE_TABLE:
            raise UsageError("unknown case %r; choose from %s" % (args.case, ", ".join(verify.ALL_CASES)))
        res = verify.verify_case(args.case).to_json()
        res.pop("seconds", None)
        emit(res, args.pretty)
        return EXIT_OK if res["pass"] else EXIT_FAIL
    ok, summary = verify.verify_all(slow=args.slow)
    if args.pretty:
        for c in summary["cases"]:
            c["smith_computed"] = verify.format_smith(c["smith_computed"])
    emit(summary, args.pretty, CASE_COLUMNS, "cases")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_classify(args):
    from .verify import classify_pair
    data, digest = _read_json(args.pair)
    if not isinstance(data, dict) or "M" not in data or "N" not in data:
        raise UsageError("pair file needs keys 'M' and 'N'")
    M = _load_lattice(data["M"], "M")
    N = _load_lattice(data["N"], "N")
    if not M.same_space(N):
        raise UsageError("M and N live in different quadratic spaces")
    rep = classify_pair(M, N, data.get("name"))
    out = rep.to_json()
    out["input_sha256"] = {args.pair: digest}
    emit(out, args.pretty)
    return EXIT_OK


def cmd_snf(args):
    from . import exactmat as em
    data, digest = _read_json(args.file)
    L = _load_lattice(data, args.file)
    if not L.is_integral():
        raise UsageError("Gram matrix is not integral")
    G = L.int_gram()
    S = em.snf(G) if G else None
    out = {
        "rank": L.rank,
        "det": L.determinant(),
        "divisors": S.divisors if S else [],
        "U": S.U if S else [],
        "V": S.V if S else [],
        "input_sha256": {args.file: digest},
    }
    emit(out, args.pretty)
    return EXIT_OK


def cmd_shortvec(args):
    from .shortvec import vectors_of_norm
    data, digest = _read_json(args.file)
    L = _load_lattice(data, args.file)
    try:
        n = Fraction(args.norm)
    except (ValueError, ZeroDivisionError):
        raise UsageError("bad norm %r" % args.norm)
    if n < 0:
        raise UsageError("norm must be nonnegative")
    if L.rank == 0:
        raise UsageError("lattice has rank 0")
    sl = vectors_of_norm(L, n)
    vecs = [list(v) for v in sl.vectors]
    out = {"norm": n, "count": len(vecs), "vectors": vecs}
    if args.ambient:
        out["ambient"] = [L.to_ambient(v) for v in vecs]
    out["input_sha256"] = {args.file: digest}
    emit(out, args.pretty)
    return EXIT_OK


def cmd_atlas(args):
    from .atlas import atlas, NAMES
    try:
        nl = atlas(args.name)
    except (KeyError, ValueError) as exc:
        raise UsageError("%s (known: %s)" % (exc.args[0], ", ".join(NAMES)))
    emit(nl.to_json(), args.pretty)
    return EXIT_OK


def cmd_case(args):
    from . import leech as lc
    from .atlas import dih4_15
    if args.name == "dih4_15":
        M, N, _ = dih4_15()
    elif args.name in lc.CASES:
        M, N = lc.case_data(args.name)
    else:
        raise UsageError("unknown case %r" % args.name)
    pair = {"name": args.name, "M": M.to_json(), "N": N.to_json()}
    text = dumps(_jsonable(pair))
    if args.emit:
        try:
            with open(args.emit, "w") as fh:
                fh.write(text + "\n")
        except OSError as exc:
            raise UsageError("cannot write %s: %s" % (args.emit, exc.strerror))
        digest = hashlib.sha256((text + "\n").encode()).hexdigest()
        emit({"case": args.name, "written": args.emit, "sha256": digest}, args.pretty)
    else:
        print(text)
    return EXIT_OK


def cmd_leech(args):
    from . import leech as lc
    if not args.octads:
        ctx = lc.leech()
        L = ctx.lattice
        out = {"rank": L.rank, "det": L.determinant(), "even": L.is_even(),
               "golay_weights": ctx.golay.weight_distribution()}
        emit(out, args.pretty)
        return EXIT_OK
    octs = lc.golay().octads()
    # points are reported 1..24, column by column down the 4x6 array
    fixed = {"O1": lc.OCTAD_1, "O2": lc.OCTAD_2, "O3": lc.OCTAD_3, "O4": lc.OCTAD_4}
    out = {
        "count": len(octs),
        "fixed": {k: sorted(i + 1 for i in v) for k, v in fixed.items()},
        "octads": [[i + 1 for i in o] for o in octs],
    }
    if args.pretty:
        print("%d octads (points 1..24, column-major on the 4x6 array)" % len(octs))
        for k, v in out["fixed"].items():
            print("%s: %s" % (k, " ".join(map(str, v))))
        for o in out["octads"]:
            print(" ".join("%2d" % i for i in o))
    else:
        emit(out, False)
    return EXIT_OK


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="human-readable table instead of JSON")
    p = argparse.ArgumentParser(prog="latcli", description="Exact lattice toolkit", parents=[common])
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", parents=[common], help="run the verification harness")
    v.add_argument("--all", action="store_true")
    v.add_argument("--slow", action="store_true", help="include the long checks")
    v.add_argument("--case", metavar="NAME")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("classify", parents=[common], help="dihedral report of a pair M, N")
    c.add_argument("--pair", required=True, metavar="PAIR_JSON")
    c.set_defaults(func=cmd_classify)

    s = sub.add_parser("snf", parents=[common], help="Smith form of a lattice's Gram matrix")
    s.add_argument("--file", required=True, metavar="LATTICE_JSON")
    s.set_defaults(func=cmd_snf)

    sv = sub.add_parser("shortvec", parents=[common], help="all vectors of one norm")
    sv.add_argument("--file", required=True, metavar="LATTICE_JSON")
    sv.add_argument("--norm", required=True)
    sv.add_argument("--ambient", action="store_true", help="also print ambient coordinates")
    sv.set_defaults(func=cmd_shortvec)

    a = sub.add_parser("atlas", parents=[common], help="a named lattice and its certificate")
    a.add_argument("name")
    a.set_defaults(func=cmd_atlas)

    k = sub.add_parser("case", parents=[common], help="the explicit pair of a case")
    k.add_argument("name")
    k.add_argument("--emit", metavar="FILE")
    k.set_defaults(func=cmd_case)

    le = sub.add_parser("leech", parents=[common], help="Leech lattice and Golay octads")
    le.add_argument("--octads", action="store_true")
    le.set_defaults(func=cmd_leech)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print("latcli: error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
