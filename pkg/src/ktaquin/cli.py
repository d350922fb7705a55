"""Command-line surface: coefficients with cross-checks, expansions, verification suites.

Exit codes: 0 success, 1 usage or precondition error, 2 cross-check or cached-value
disagreement, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from .shapes import (
    AmbientRectangle,
    DirectSumFrame,
    ShapeFitError,
    SkewShape,
    format_partition,
    parse_partition,
)
from .tableaux import (
    IncreasingTableau,
    TableauError,
    enumerate_augmented,
    enumerate_increasing,
    enumerate_set_valued,
)
from .jdt import InternalInvariantError, krect
from .coefficients import (
    CrossCheckError,
    compute_with_checks,
    expand_coproduct,
    expand_product,
)
from .equivalence import nonrect_counterexample
from .formats import (
    CacheConflictError,
    CacheRecord,
    ParseError,
    cache_append,
    cache_load,
    format_tableau,
    parse_tableau,
    tableau_to_json_dict,
)
from .products import diamond, hecke_insert, odot
from . import suites

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DISAGREEMENT = 2
EXIT_INTERNAL = 3

CACHE_ENV = "KTAQUIN_CACHE"


class UsageError(ValueError):
    pass


def _frame(text: str) -> DirectSumFrame:
    try:
        k1, n1, k2, n2 = (int(x) for x in text.split(","))
        return DirectSumFrame(k1, n1, k2, n2)
    except (ValueError, ShapeFitError) as exc:
        raise UsageError(f"bad frame {text!r}: expected k1,n1,k2,n2") from exc


def _ambient(text: str) -> AmbientRectangle:
    try:
        k, n = (int(x) for x in text.split(","))
        return AmbientRectangle(k, n)
    except (ValueError, ShapeFitError) as exc:
        raise UsageError(f"bad ambient {text!r}: expected k,n") from exc


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _cache_path(args) -> str | None:
    return args.cache or os.environ.get(CACHE_ENV)


def cmd_coeff(args) -> int:
    from .coefficients import (
        CoefficientRecord,
        coeff_C,
        coeff_D,
        coeff_E,
        coeff_F,
        coeff_c_classical,
    )

    lam, mu, nu = (parse_partition(args.lam), parse_partition(args.mu), parse_partition(args.nu))
    frame = _frame(args.frame) if args.frame else None
    if args.check:
        record = compute_with_checks(args.kind, lam, mu, nu, frame)
    else:
        plain = {"C": coeff_C, "D": coeff_D, "E": coeff_E, "F": coeff_F, "c": coeff_c_classical}
        record = CoefficientRecord(args.kind, lam, mu, nu, plain[args.kind](lam, mu, nu), "jdt", ())
    checks_text = " ".join(f"{name}:{'ok' if ok else 'DISAGREE'}" for name, ok in record.checks)
    payload = {
        "kind": record.kind,
        "lambda": list(record.lam),
        "mu": list(record.mu),
        "nu": list(record.nu),
        "value": record.value,
        "checks": [[name, ok] for name, ok in record.checks],
    }
    _emit(args, payload, f"{record.kind}{format_partition(record.lam)},{format_partition(record.mu)}"
          f"->{format_partition(record.nu)} = {record.value}" + (f"  [{checks_text}]" if checks_text else ""))
    path = _cache_path(args)
    if path:
        cache_append(path, CacheRecord.now(record))
        cache_load(path)  # re-validate the whole file, conflicts are hard errors
    if not record.agreed:
        return EXIT_DISAGREEMENT
    return EXIT_OK


def _product_cell(item) -> tuple:
    from .coefficients import coeff_C, coeff_E

    lam, mu, nu, basis = item
    fn = coeff_C if basis == "structure-sheaf" else coeff_E
    return nu, fn(lam, mu, nu)


def _coproduct_cell(item) -> int:
    from .coefficients import coeff_D

    lam, mu, nu = item
    return coeff_D(lam, mu, nu)


def cmd_expand(args) -> int:
    if args.op == "product":
        if not args.ambient:
            raise UsageError("product expansion needs --ambient k,n")
        lam, mu = parse_partition(args.lam), parse_partition(args.mu)
        ambient = _ambient(args.ambient)
        if args.workers > 1:
            from .shapes import partitions_in_rectangle

            keys = [(lam, mu, nu, args.basis) for nu in partitions_in_rectangle(ambient.rows, ambient.cols)]
            with ProcessPoolExecutor(max_workers=args.workers) as pool:
                table = {nu: v for nu, v in pool.map(_product_cell, keys) if v}
        else:
            table = expand_product(lam, mu, ambient, args.basis)
        payload = {format_partition(nu): v for nu, v in sorted(table.items())}
        lines = [f"{format_partition(nu)}: {v}" for nu, v in sorted(table.items())]
        _emit(args, payload, "\n".join(lines) if lines else "(zero)")
    elif args.op == "coproduct":
        if not args.frame:
            raise UsageError("coproduct expansion needs --frame k1,n1,k2,n2")
        nu = parse_partition(args.nu)
        frame = _frame(args.frame)
        if args.workers > 1:
            from .shapes import partitions_in_rectangle

            keys = [
                (lam, mu, nu)
                for lam in partitions_in_rectangle(frame.k1, frame.n1 - frame.k1)
                for mu in partitions_in_rectangle(frame.k2, frame.n2 - frame.k2)
            ]
            with ProcessPoolExecutor(max_workers=args.workers) as pool:
                values = pool.map(_coproduct_cell, keys)
            table = {(lam, mu): v for (lam, mu, _), v in zip(keys, values) if v}
        else:
            table = expand_coproduct(nu, frame)
        payload = {
            f"{format_partition(lam)}|{format_partition(mu)}": v
            for (lam, mu), v in sorted(table.items())
        }
        lines = [
            f"{format_partition(lam)} (x) {format_partition(mu)}: {v}"
            for (lam, mu), v in sorted(table.items())
        ]
        _emit(args, payload, "\n".join(lines) if lines else "(zero)")
    else:
        raise UsageError(f"unknown expansion {args.op!r}")
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.suite == "all":
        names = list(suites.SUITES)
    elif args.suite in suites.SUITES:
        names = [args.suite]
    else:
        raise UsageError(f"unknown suite {args.suite!r}; options: {', '.join(suites.SUITES)}, all")
    ok = True
    results = []
    for name in names:
        fn = suites.SUITES[name]
        kwargs = {}
        if args.seed is not None and name in ("reversibility", "infusion-involution", "random-equivalence"):
            kwargs["seed"] = args.seed
        result = fn(**kwargs)
        results.append(result)
        print(result.render())
        ok = ok and result.ok
    if args.json:
        print(json.dumps([
            {"name": r.name, "ok": r.ok, "summary": r.summary, "seed": r.seed} for r in results
        ], sort_keys=True))
    return EXIT_OK if ok else EXIT_DISAGREEMENT


def cmd_enumerate(args) -> int:
    outer = parse_partition(args.outer)
    inner = parse_partition(args.inner) if args.inner else ()
    shape = SkewShape(outer, inner)
    alphabet = range(1, args.max_entry + 1)
    if args.kind == "increasing":
        stream = enumerate_increasing(shape, alphabet, args.surjective)
    elif args.kind == "augmented":
        stream = enumerate_augmented(shape, alphabet)
    elif args.kind == "set-valued":
        if not args.content:
            raise UsageError("set-valued enumeration needs --content a,b,c")
        content = tuple(int(x) for x in args.content.split(","))
        stream = enumerate_set_valued(outer, content)
    else:
        raise UsageError(f"unknown kind {args.kind!r}")
    count = 0
    blocks = []
    for t in stream:
        count += 1
        if count <= args.limit:
            blocks.append(format_tableau(t))
    if args.json:
        print(json.dumps({"count": count}))
    else:
        print(f"{count} tableaux")
        print("\n\n".join(blocks))
    return EXIT_OK


def cmd_counterexample(args) -> int:
    lam = parse_partition(args.lam)
    c = nonrect_counterexample(lam)
    payload = {
        "nu": list(c.nu),
        "tableau": tableau_to_json_dict(c.tableau),
        "order1": tableau_to_json_dict(c.order1),
        "order2": tableau_to_json_dict(c.order2),
        "results": [tableau_to_json_dict(r) for r in c.results],
    }
    text = "\n\n".join(
        [
            f"shape {format_partition(c.nu)} over inner {format_partition(lam)}:",
            format_tableau(c.tableau),
            "order:\n" + format_tableau(c.order1),
            "rectifies to:\n" + format_tableau(c.results[0]),
            "order:\n" + format_tableau(c.order2),
            "rectifies to:\n" + format_tableau(c.results[1]),
        ]
    )
    _emit(args, payload, text)
    return EXIT_OK


def cmd_product(args) -> int:
    left = parse_tableau(args.left)
    if args.op == "insert":
        result = hecke_insert(left, int(args.right))
    else:
        right = parse_tableau(args.right)
        if args.op == "odot":
            result = odot(left, right)
        elif args.op == "diamond":
            result = diamond(left, right)
        else:
            raise UsageError(f"unknown product {args.op!r}")
    _emit(args, tableau_to_json_dict(result), format_tableau(result))
    return EXIT_OK


def cmd_rectify(args) -> int:
    t = parse_tableau(args.tableau)
    if not isinstance(t, IncreasingTableau):
        raise UsageError("rectify expects an increasing tableau")
    order = None
    if args.order:
        order = parse_tableau(args.order)
        if not isinstance(order, IncreasingTableau):
            raise UsageError("the order must be an increasing tableau")
    result = krect(t, order)
    _emit(args, tableau_to_json_dict(result), format_tableau(result))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ktaquin",
        description="K-theoretic Schubert calculus coefficients via jeu de taquin for increasing tableaux",
    )
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coeff", help="one coefficient, optionally with all cross-checks")
    p.add_argument("kind", choices=["C", "D", "E", "F", "c"])
    p.add_argument("--lambda", dest="lam", required=True, help="partition, e.g. [2,1]")
    p.add_argument("--mu", required=True)
    p.add_argument("--nu", required=True)
    p.add_argument("--frame", help="k1,n1,k2,n2 for the direct-sum identity check")
    p.add_argument("--check", action="store_true", help="run every cross-check for the kind")
    p.add_argument("--cache", help="append the record to this JSON-lines cache")
    p.set_defaults(fn=cmd_coeff)

    p = sub.add_parser("expand", help="full product or coproduct tables")
    p.add_argument("--op", choices=["product", "coproduct"], required=True)
    p.add_argument("--lambda", dest="lam", help="left factor (product)")
    p.add_argument("--mu", help="right factor (product)")
    p.add_argument("--nu", help="class to split (coproduct)")
    p.add_argument("--ambient", help="k,n rectangle bound (product)")
    p.add_argument("--frame", help="k1,n1,k2,n2 (coproduct)")
    p.add_argument("--basis", choices=["structure-sheaf", "ideal-sheaf"], default="structure-sheaf")
    p.add_argument("--workers", type=int, default=1, help="parallel workers for batch keys")
    p.set_defaults(fn=cmd_expand)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("suite", help=f"one of: {', '.join(suites.SUITES)}, all")
    p.add_argument("--seed", type=int, help="seed for the randomized suites")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("enumerate", help="stream tableaux of a shape")
    p.add_argument("--outer", required=True)
    p.add_argument("--inner")
    p.add_argument("--kind", choices=["increasing", "augmented", "set-valued"], default="increasing")
    p.add_argument("--max-entry", type=int, default=4)
    p.add_argument("--surjective", action="store_true")
    p.add_argument("--content", help="letter multiplicities for set-valued tableaux")
    p.add_argument("--limit", type=int, default=20, help="print at most this many")
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("counterexample", help="order-dependent rectification over a non-rectangle")
    p.add_argument("--lambda", dest="lam", required=True)
    p.set_defaults(fn=cmd_counterexample)

    p = sub.add_parser("product", help="tableau products")
    p.add_argument("--op", choices=["odot", "diamond", "insert"], required=True)
    p.add_argument("--left", required=True, help="tableau in grid or JSON form")
    p.add_argument("--right", required=True, help="tableau, or a letter for insert")
    p.set_defaults(fn=cmd_product)

    p = sub.add_parser("rectify", help="rectify a skew increasing tableau")
    p.add_argument("--tableau", required=True)
    p.add_argument("--order", help="rectification order (straight tableau of the inner shape)")
    p.set_defaults(fn=cmd_rectify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.fn(args)
    except (UsageError, ParseError, ShapeFitError, TableauError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (CrossCheckError, CacheConflictError) as exc:
        print(f"disagreement: {exc}", file=sys.stderr)
        return EXIT_DISAGREEMENT
    except InternalInvariantError as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
