"""Command-line entry point: ``sylab <command> ...``.

Exit codes: 0 when every report is PASS or VACUOUS, 1 on any FAIL, 2 on any
ERROR, 3 when a group file (or the command line) cannot be parsed.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import catalog, chartab
from . import limits as _limits
from .cache import Cache
from .errors import GroupFileError, HypothesisError, ResourceLimit
from .numtheory import prime_divisors
from .report import CLAIMS, exit_code, report_for, stopwatch, to_json, to_text

DEFAULT_PRIMES = (3, 5, 7, 11, 13)
SCAN_CLAIMS = ("t11", "mckay", "awc", "amk", "lemma21", "lemma23", "lemma33-orbits")

EXIT_PARSE = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


# dispatch ------------------------------------------------------------------------

def _lemma21(G, p, limits):
    from .normal import normal_closure
    from .classes import conjugacy_classes
    from .sylow import lemma_2_1_check
    # H = O^p(G), generated by the p'-elements; then G = PH for every Sylow P
    data = conjugacy_classes(G, limits)
    H = normal_closure(G, [data.reps[i] for i in data.p_regular(p)])
    return lemma_2_1_check(G, H, p, limits)


def _dispatch(claim):
    from . import blocks, structure, sylow
    return {
        "t11": lambda G, p, lim: structure.check_theorem_1_1(G, p, limits=lim),
        "mckay": chartab.mckay_check,
        "awc": blocks.awc_check,
        "amk": blocks.amk_check,
        "lemma21": _lemma21,
        "lemma23": lambda G, p, lim: sylow.lemma_2_3_check(G, p),
        "lemma33-orbits": chartab.sporadic_orbit_check,
        "sylow-parity": lambda G, p, lim: sylow.sylow_parity_check(G, p),
    }[claim]


def run_check(G, p, claim, limits=None):
    """Exactly one report for (G, p, claim); resource and precondition failures become ERROR."""
    if claim not in CLAIMS:
        raise ValueError(f"unknown claim {claim!r}")
    lim = limits or _limits.DEFAULT
    with stopwatch() as sw:
        try:
            return _dispatch(claim)(G, p, lim)
        except ResourceLimit as exc:
            err = f"resource: {exc}"
        except HypothesisError as exc:
            err = f"precondition: {exc}"
    return report_for(claim, G, p, "ERROR", error=err, seconds=sw["seconds"])


def default_primes(G, primes=DEFAULT_PRIMES):
    n = G.order()
    return [p for p in primes if n % p == 0]


# catalog scans --------------------------------------------------------------------

def _scan_entry(args):
    source, primes, claims, limits, cache_dir = args
    if cache_dir:
        chartab.set_cache(Cache(cache_dir))
    try:
        G = catalog.load(source) if isinstance(source, str) and source.endswith(".grp") \
            else catalog.builtin(source)
    except (GroupFileError, KeyError) as exc:
        name = Path(source).stem
        return [_unreadable(name, exc)]
    if cache_dir:
        Cache(cache_dir).attach_chain(G)
    ps = default_primes(G, primes)
    return [run_check(G, p, c, limits) for p in ps for c in claims]


def _unreadable(name, exc):
    from .report import VerificationReport
    return VerificationReport(claim="parse", group=name, group_hash="", prime=None,
                              verdict="ERROR", error=f"unreadable: {exc}", flags=["UNREADABLE"])


def scan_catalog(sources, primes=DEFAULT_PRIMES, claims=SCAN_CLAIMS, limits=None,
                 cache_dir=None, jobs=1):
    """Reports for every (group, prime, claim), in source order."""
    lim = limits or _limits.DEFAULT
    work = [(s, tuple(primes), tuple(claims), lim, cache_dir) for s in sources]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_scan_entry, work))
    else:
        chunks = [_scan_entry(w) for w in work]
    return [r for chunk in chunks for r in chunk]


def catalog_sources(directory=None):
    if directory is None:
        return catalog.builtin_names()
    d = Path(directory)
    if not d.is_dir():
        raise GroupFileError("catalog directory not found", None, str(d))
    return [str(p) for p in sorted(d.glob("*.grp"))]


# commands ---------------------------------------------------------------------------

def _emit(args, payload_text, payload_json):
    if args.format == "json":
        print(json.dumps(payload_json, indent=2))
    else:
        print(payload_text)


def cmd_order(G, args):
    _emit(args, f"{G.name or 'group'}: order {G.order()}, degree {G.degree}",
          {"group": G.name, "degree": G.degree, "order": G.order()})
    return 0


def cmd_sylow(G, args):
    from .sylow import local_data
    ld = local_data(G, args.prime)
    q = ld.summary()
    lines = [f"{G.name or 'group'}, p = {args.prime}"]
    lines += [f"  {k}: {v}" for k, v in q.items()]
    _emit(args, "\n".join(lines), {"group": G.name, "prime": args.prime, **q})
    return 0


def cmd_factors(G, args):
    from .structure import composition_factors
    fs = composition_factors(G, limits=args.limits)
    names = [str(f) for f in fs]
    _emit(args, " ".join(names) if names else "(trivial group)",
          {"group": G.name, "order": G.order(),
           "factors": [f.to_dict() for f in fs]})
    return 0


def _human_table(T):
    data = T.classes
    head = ["", *[f"{o}{_letter(i, data)}" for i, o in enumerate(data.orders)]]
    rows = [head, ["|C|", *map(str, data.centralizer_orders)]]
    for chi in range(len(T)):
        rows.append([f"X{chi + 1}", *[T.format_value(chi, i) for i in range(len(data))]])
    widths = [max(len(r[j]) for r in rows) for j in range(len(head))]
    return "\n".join("  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in rows)


def _letter(i, data):
    o = data.orders[i]
    k = sum(1 for j in range(i) if data.orders[j] == o)
    s = ""
    k += 1
    while k:
        k, r = divmod(k - 1, 26)
        s = chr(ord("A") + r) + s
    return s


def cmd_table(G, args):
    T = chartab.character_table(G, args.limits)
    if args.raw:
        sys.stdout.write(T.to_text())
        return 0
    data = T.classes
    payload = {
        "group": G.name, "order": G.order(), "exponent": T.e, "prime": T.ell,
        "class_orders": data.orders, "class_sizes": data.sizes,
        "degrees": T.degrees,
        "values": [[T.format_value(c, i) for i in range(len(data))] for c in range(len(T))],
    }
    _emit(args, _human_table(T), payload)
    return 0


def _write_reports(reports, args):
    if args.report:
        text = to_json(reports, timing=not args.no_timing) if args.report.endswith(".json") \
            or args.format == "json" else to_text(reports)
        Path(args.report).write_text(text, encoding="utf-8")
    if args.format == "json":
        sys.stdout.write(to_json(reports, timing=not args.no_timing))
    else:
        print(to_text(reports))


def cmd_check(G, args):
    report = run_check(G, args.prime, args.claim, args.limits)
    _write_reports([report], args)
    return exit_code([report])


def cmd_scan(args):
    primes = _int_list(args.primes) if args.primes else DEFAULT_PRIMES
    claims = args.claims.split(",") if args.claims else SCAN_CLAIMS
    for c in claims:
        if c not in CLAIMS:
            print(f"sylab: unknown claim {c!r}", file=sys.stderr)
            return EXIT_PARSE
    sources = catalog_sources(args.catalog)
    cache_dir = None if args.no_cache or not args.cache_dir else args.cache_dir
    reports = scan_catalog(sources, primes, claims, args.limits, cache_dir, args.jobs)
    _write_reports(reports, args)
    return exit_code(reports)


def _int_list(text):
    return [int(x) for x in text.split(",") if x.strip()]


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cache-dir", help="directory for cached chains and tables")
    common.add_argument("--no-cache", action="store_true", help="ignore the cache")
    common.add_argument("--limit-classes", type=int, help="maximum number of conjugacy classes")
    common.add_argument("--limit-order", type=int, help="maximum |G| for character tables")
    common.add_argument("--limit-radical", type=int, help="maximum |P| for radical enumeration")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--report", help="also write the reports to this file")
    common.add_argument("--no-timing", action="store_true",
                        help="omit wall times from JSON reports")
    common.add_argument("-v", "--verbose", action="store_true")

    ap = _Parser(prog="sylab", description="Sylow automizers, character tables and checks "
                                           "on permutation groups.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("order", parents=[common], help="group order")
    p.add_argument("group", help="a .grp file or a built-in name")
    p = sub.add_parser("sylow", parents=[common], help="Sylow subgroup and local data")
    p.add_argument("group")
    p.add_argument("-p", "--prime", type=int, required=True)
    p = sub.add_parser("factors", parents=[common], help="composition factors")
    p.add_argument("group")
    p = sub.add_parser("table", parents=[common], help="character table")
    p.add_argument("group")
    p.add_argument("--raw", action="store_true", help="print the serialized table")
    p = sub.add_parser("check", parents=[common], help="run one claim")
    p.add_argument("group")
    p.add_argument("-p", "--prime", type=int, required=True)
    p.add_argument("--claim", choices=CLAIMS, required=True)
    p = sub.add_parser("scan", parents=[common], help="run claims over a catalog")
    p.add_argument("--catalog", help="directory of .grp files (default: built-in catalog)")
    p.add_argument("--primes", help="comma-separated primes (default 3,5,7,11,13)")
    p.add_argument("--claims", help="comma-separated claims (default: all but sylow-parity)")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    sub.add_parser("catalog", parents=[common], help="list built-in groups")
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    args.limits = _limits.DEFAULT.with_(classes=args.limit_classes,
                                        table_order=args.limit_order,
                                        radical_sylow=args.limit_radical)
    cache = None
    if args.cache_dir and not args.no_cache:
        cache = Cache(args.cache_dir)
    chartab.set_cache(cache)
    try:
        if args.command == "catalog":
            for name in catalog.builtin_names():
                print(name)
            return 0
        if args.command == "scan":
            return cmd_scan(args)
        G = catalog.load(args.group)
        if cache is not None:
            cache.attach_chain(G)
        handler = {"order": cmd_order, "sylow": cmd_sylow, "factors": cmd_factors,
                   "table": cmd_table, "check": cmd_check}[args.command]
        return handler(G, args)
    except GroupFileError as exc:
        print(f"sylab: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except KeyError as exc:
        print(f"sylab: {exc.args[0] if exc.args else exc}", file=sys.stderr)
        return EXIT_PARSE
    except ResourceLimit as exc:
        print(f"sylab: resource limit: {exc}", file=sys.stderr)
        return 2
    finally:
        chartab.set_cache(None)


if __name__ == "__main__":
    sys.exit(main())
