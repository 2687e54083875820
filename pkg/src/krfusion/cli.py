"""Command-line driver.

Examples::

    krfusion dside --type A --rank 1 --nu "(1,1);(1,1)"
    krfusion verify-md --type D --rank 4 --nu "(2,1)" --nu "(1,1);(2,2)"
    krfusion verify-xm --type A --rank 2 --nu "(1,1);(1,1);(2,1)" --figures out/
    krfusion reduced-word --type A --rank 2 --node 1
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from functools import partial

from .cartan import ConfigurationError, root_system
from .demazure_side import UnsortedLevelsError, dside_normalized, dside_raw
from .fermionic import mside
from .groupring import BudgetExceeded, NotACharacterError, classical_character
from .kr_crystal import UnsupportedTypeError, dump_crystal, one_dim_sum
from .nu import parse_nu
from .report import (
    character_to_json,
    decomposition_to_json,
    emit_report,
    exit_code,
    render_figures,
    write_report,
)
from .verify import verify_md, verify_xm
from .weight import format_rational, format_weight, parse_finite
from .weyl import DomainError, longest_element, translation_word
from . import weight as W

log = logging.getLogger("krfusion")

DEFAULT_BUDGET = 2_000_000


def _common(p, nu=True, multi=False):
    p.add_argument("--type", dest="family", required=True, choices=("A", "D", "E"))
    p.add_argument("--rank", type=int, required=True)
    if nu:
        if multi:
            p.add_argument("--nu", action="append", default=[],
                           help='"(r,l);(r,l);..." (repeatable)')
        else:
            p.add_argument("--nu", required=True, help='"(r,l);(r,l);..."')
    p.add_argument("--format", default="json", choices=("json", "csv", "text"))
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                   help="cap on monomials / crystal elements (default %(default)s)")
    p.add_argument("--verbose", "-v", action="store_true")
    p.add_argument("--output", "-o", help="write to a file instead of stdout")


def build_parser():
    parser = argparse.ArgumentParser(prog="krfusion", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dside", help="normalized Demazure side and the constant C")
    _common(p)
    p.add_argument("--raw", action="store_true", help="also emit the unnormalized polynomial")

    p = sub.add_parser("mside", help="fermionic side M(nu, mu, q)")
    _common(p)

    p = sub.add_parser("xside", help="normalized one-dimensional sums (type A)")
    _common(p)
    p.add_argument("--dump-crystal", metavar="PATH",
                   help="write the affine crystal graphs of the factors as an edge list")

    for name, what in (("verify-md", "Demazure side vs fermionic side"),
                       ("verify-xm", "one-dimensional sums vs fermionic side (type A)")):
        p = sub.add_parser(name, help=what)
        _common(p, multi=True)
        p.add_argument("--jobs", type=int, default=1, help="worker processes")
        p.add_argument("--figures", metavar="DIR", help="render PNG summaries into DIR")
        p.add_argument("--no-timings", action="store_true",
                       help="omit wall-clock timings (byte-stable output)")

    p = sub.add_parser("char", help="classical character ch V(mu)")
    _common(p, nu=False)
    p.add_argument("--mu", required=True, help='dominant weight, e.g. "1*w1+1*w2"')

    p = sub.add_parser("reduced-word", help="reduced word and sigma of t_{w_0(varpi_r)}")
    _common(p, nu=False)
    p.add_argument("--node", type=int, required=True)
    return parser


def _emit(args, text):
    if args.output:
        write_report(text, args.output)
    else:
        sys.stdout.write(text)


def _decomp_text(decomp):
    return "".join(f"{W.format_finite(mu)}: {poly!r}\n" for mu, poly in decomp.items())


def _run_verify(args):
    fn = verify_md if args.command == "verify-md" else verify_xm
    nus = [parse_nu(text) for text in args.nu]
    job = partial(fn, args.family, args.rank, budget=args.budget)
    if args.jobs > 1 and len(nus) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(job, nus))
    else:
        reports = [job(nu) for nu in nus]
    _emit(args, emit_report(reports, args.format, timings=not args.no_timings))
    if args.figures:
        for path in render_figures(reports, args.figures):
            log.info("wrote %s", path)
    return exit_code(reports)


def _single(args):
    rs = root_system(args.family, args.rank)
    if args.command == "reduced-word":
        if not 1 <= args.node <= rs.rank:
            raise DomainError(f"node {args.node} is not in I_0 of {rs.name}")
        word, sigma = translation_word(rs, args.node)
        mu = longest_element(rs)(W.fundamental(rs, args.node).classical)
        doc = {"type": rs.family, "rank": rs.rank, "node": args.node,
               "translation": W.format_finite(mu), "word": list(word),
               "sigma": list(sigma.perm), "length": len(word)}
        if args.format == "json":
            return json.dumps(doc, indent=2) + "\n"
        return (f"t_{{{doc['translation']}}} = s_{word} . sigma{tuple(sigma.perm)} "
                f"(length {len(word)})\n")
    if args.command == "char":
        mu = parse_finite(rs, args.mu)
        ch = classical_character(rs, mu)
        if args.format == "json":
            return json.dumps({"mu": W.format_finite(mu), "character": character_to_json(ch)},
                              indent=2) + "\n"
        return "".join(f"{format_weight(k)}: {v}\n" for k, v in ch.sorted_terms())

    nu = parse_nu(args.nu)
    doc = {"type": rs.family, "rank": rs.rank, "nu": args.nu}
    if args.command == "dside":
        decomp, C = dside_normalized(rs, nu, budget=args.budget)
        if args.verbose or args.raw:
            steps = []
            raw = dside_raw(rs, nu, budget=args.budget, trace=steps)
            for k, f in enumerate(steps, start=1):
                log.debug("X_%d has %d monomials", k, len(f))
            if args.raw:
                doc["raw"] = character_to_json(raw)
        doc.update(C=format_rational(C), decomposition=decomposition_to_json(decomp))
    elif args.command == "mside":
        decomp = mside(rs, nu)
        doc["decomposition"] = decomposition_to_json(decomp)
    else:
        decomp = one_dim_sum(args.family, args.rank, nu, budget=args.budget)
        doc["decomposition"] = decomposition_to_json(decomp)
        if args.dump_crystal:
            lines = []
            for r, l in sorted(set(nu)):
                for src, i, dst in dump_crystal(r, l, args.rank):
                    lines.append(f"B{r},{l}\t{src}\t{i}\tlower\t{dst}")
            write_report("\n".join(lines) + "\n", args.dump_crystal)
    if args.format == "json":
        return json.dumps(doc, indent=2) + "\n"
    if args.format == "csv":
        rows = ["mu,q_exponent,coeff"]
        for mu, poly in decomp.items():
            for e, c in poly.items():
                rows.append(f"{W.format_finite(mu)},{format_rational(e)},{c}")
        return "\n".join(rows) + "\n"
    head = f"C = {doc['C']}\n" if "C" in doc else ""
    return head + _decomp_text(decomp)


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        if args.command in ("verify-md", "verify-xm"):
            return _run_verify(args)
        _emit(args, _single(args))
        return 0
    except BudgetExceeded as exc:
        print(f"krfusion: budget exceeded: {exc}", file=sys.stderr)
        return 3
    except (ConfigurationError, DomainError, UnsupportedTypeError, UnsortedLevelsError,
            ValueError) as exc:
        print(f"krfusion: error: {exc}", file=sys.stderr)
        return 2
    except (NotACharacterError, OSError) as exc:
        print(f"krfusion: error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
