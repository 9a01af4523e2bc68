"""Command line entry point: ``genjack {expand,table,matrix,verify}``."""
import argparse
import json
import re
import sys
import time

from . import cache, oracle
from ._version import __version__
from .envelope import KINDS, VARIANTS
from .partitions import format_mp, parse as parse_mp, size
from .ring import Assignment, Specialized, Symbolic
from .symfunc import SchurExpansion

SUITES = ("appendixB", "duality", "cauchy", "symmetry", "degeneration", "hamiltonian",
          "matrix-identities")
EXTRA_SUITES = ("rank-one", "engine")


# ---------------------------------------------------------------- formatting

def _latex_scalar(text: str) -> str:
    text = re.sub(r"([tu])(\d+)", r"\1_{\2}", text)
    text = re.sub(r"\^(\d+)", r"^{\1}", text)
    return text.replace("*", " ")


def _needs_parens(text: str) -> bool:
    """True when a coefficient has a top-level sum or a quotient."""
    depth = 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif depth == 0 and i > 0 and (ch in "+/" or (ch == "-" and text[i - 1] == " ")):
            return True
    return False


def format_expansion(name: str, exp: SchurExpansion, fmt: str = "text") -> str:
    basis = exp.basis
    terms = exp.items()
    if not terms:
        return f"{name} = 0"
    parts = []
    for mu, c in terms:
        coef = c.factored() if hasattr(c, "factored") else str(c)
        if not any(mu):
            parts.append(coef)
            continue
        if fmt == "latex":
            plain = coef
            coef = _latex_scalar(coef).replace("(", "\\left(").replace(")", "\\right)")
            coef = f"\\left({coef}\\right)" if _needs_parens(plain) else coef
            b = "s^{*}" if basis == "s*" else "s"
            parts.append(f"{coef}\\,{b}_{{{format_mp(mu)}}}")
        else:
            coef = f"({coef})" if _needs_parens(coef) else coef
            parts.append(f"{coef}*{basis}_{format_mp(mu)}")
    body = " + ".join(parts).replace("+ -", "- ")
    return f"{name} = {body}"


def jack_name(mp, variant: str, fmt: str = "text") -> str:
    if fmt == "latex":
        head = "J^{*}" if variant == "Jstar" else "J"
        return f"{head}_{{{format_mp(mp)}}}"
    return f"{'J*' if variant == 'Jstar' else 'J'}_{format_mp(mp)}"


# ---------------------------------------------------------------- domains

def make_domain(args, r: int):
    if args.mode == "specialized":
        point = Assignment.random(r, args.seed)
        return Specialized(point)
    return Symbolic(r)


def _emit(text: str, output):
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


# ---------------------------------------------------------------- commands

def cmd_expand(args) -> int:
    mp = parse_mp(args.mp)
    r = len(mp) if args.r is None else args.r
    if len(mp) != r:
        raise SystemExit(f"error: --mp has {len(mp)} components but --r is {r}")
    if size(mp) > args.max_n:
        raise SystemExit(f"error: |mp| = {size(mp)} exceeds the size cap {args.max_n} (raise --max-n)")
    dom = make_domain(args, r)
    kind = "T" if args.variant == "J" else "Tstar"
    mat, path, hit = cache.cached_transition(kind, r, size(mp), dom, args.cache_dir, args.seed,
                                             args.threads)
    exp = SchurExpansion("s" if args.variant == "J" else "s*", r,
                         {mu: c for mu, c in mat.row(mp).items() if c})
    if args.format == "json":
        doc = {"mp": format_mp(mp), "variant": args.variant, "basis": exp.basis,
               "header": cache.header(kind, r, size(mp), dom),
               "coefficients": {format_mp(m): str(c) for m, c in exp.items()}}
        if args.powersums:
            poly = exp.to_powersum(dom)
            doc["powersums"] = {format_mp(m): str(c) for m, c in poly.items()}
        _emit(json.dumps(doc, indent=1), args.output)
        return 0
    lines = []
    if isinstance(dom, Specialized):
        lines.append(f"# assignment {json.dumps(dom.point.to_json())}")
    lines.append(format_expansion(jack_name(mp, args.variant, args.format), exp, args.format))
    if args.powersums:
        poly = exp.to_powersum(dom)
        body = " + ".join(f"({c})*p_{format_mp(m)}" for m, c in poly.items()) or "0"
        lines.append(f"{jack_name(mp, args.variant)} = {body}")
    _emit("\n".join(lines), args.output)
    return 0


def _block(args, kind: str):
    if args.r is None or args.n is None:
        raise SystemExit("error: --r and --n are required")
    dom = make_domain(args, args.r)
    t0 = time.perf_counter()
    mat, path, hit = cache.cached_transition(kind, args.r, args.n, dom, args.cache_dir,
                                             args.seed, args.threads)
    return dom, mat, path, hit, time.perf_counter() - t0


def cmd_matrix(args) -> int:
    dom, mat, path, hit, elapsed = _block(args, args.kind)
    doc = cache.to_document(mat, dom)
    if args.format == "json":
        text = json.dumps(doc, indent=1)
    else:
        lines = [f"# {args.kind} r={args.r} n={args.n} {cache.mode_of(dom)} "
                 f"({len(mat.index)}x{len(mat.index)}, {'cached' if hit else f'{elapsed:.1f}s'})"]
        if isinstance(dom, Specialized):
            lines.append(f"# assignment {json.dumps(dom.point.to_json())}")
        for lam, mu, v in doc["entries"]:
            v = _latex_scalar(v) if args.format == "latex" else v
            lines.append(f"{args.kind}[{lam} ; {mu}] = {v}")
        text = "\n".join(lines)
    _emit(text, args.output)
    print(f"cache: {path}", file=sys.stderr)
    return 0


def cmd_table(args) -> int:
    kind = "T" if args.variant == "J" else "Tstar"
    dom, mat, path, hit, elapsed = _block(args, kind)
    basis = "s" if args.variant == "J" else "s*"
    if args.format == "json":
        doc = {"header": cache.header(kind, args.r, args.n, dom), "variant": args.variant,
               "basis": basis,
               "expansions": {format_mp(l): {format_mp(m): str(c) for m, c in mat.row(l).items() if c}
                              for l in mat.index}}
        text = json.dumps(doc, indent=1)
    else:
        lines = []
        if isinstance(dom, Specialized):
            lines.append(f"# assignment {json.dumps(dom.point.to_json())}")
        for lam in mat.index:
            exp = SchurExpansion(basis, args.r, {m: c for m, c in mat.row(lam).items() if c})
            lines.append(format_expansion(jack_name(lam, args.variant, args.format), exp, args.format))
        text = "\n".join(lines)
    _emit(text, args.output)
    print(f"cache: {path}", file=sys.stderr)
    return 0


def run_suite(name: str, r=None, max_n=None, seed=None) -> list:
    """Reports for one suite; ``r`` and ``max_n`` narrow the default ranges."""

    def ranks(default):
        return [r] if r is not None else list(default)

    def cap(default):
        return default if max_n is None else max_n

    seeds = (1, 2, 3) if seed is None else (seed, seed + 1, seed + 2)
    out = []
    if name == "appendixB":
        out.append(oracle.verify_reference(max_n))
    elif name == "duality":
        for rr in ranks((1, 2)):
            for n in range(cap(3) + 1):
                out.append(oracle.verify_duality(rr, n))
    elif name == "cauchy":
        for rr in ranks((1, 2)):
            out.append(oracle.verify_cauchy(rr, cap(4)))
            out.append(oracle.verify_cauchy_finite(rr, cap(3)))
    elif name == "symmetry":
        for rr in ranks((1, 2, 3)):
            for n in range(cap(3) + 1):
                out.append(oracle.verify_symmetries(rr, n))
    elif name == "degeneration":
        for rr in ranks((1, 2)):
            out.append(oracle.verify_degeneration_all(rr, cap(4)))
    elif name == "hamiltonian":
        for rr in ranks((1, 2, 3)):
            top = cap(4)
            sym_top = min(top, 3) if rr <= 2 else 0
            out.append(oracle.verify_hamiltonian(rr, sym_top))
            if top > sym_top:
                for s in seeds:
                    dom = Specialized.random(rr, seed=s)
                    out.append(oracle.verify_hamiltonian(rr, top, dom=dom))
    elif name == "matrix-identities":
        for rr in ranks((1, 2)):
            for n in range(cap(3) + 1):
                out.append(oracle.verify_matrix_identities(rr, n))
    elif name == "rank-one":
        out.append(oracle.verify_rank_one(cap(5)))
    elif name == "engine":
        for rr in ranks((1, 2)):
            for n in range(cap(4 if rr == 1 else 3) + 1):
                out.append(oracle.verify_engine(rr, n, seeds))
    else:
        raise ValueError(f"unknown suite {name!r}")
    return out


def cmd_verify(args) -> int:
    names = SUITES if args.suite == "all" else (args.suite,)
    reports = []
    for name in names:
        t0 = time.perf_counter()
        reps = run_suite(name, args.r, args.max_n, args.seed)
        merged = oracle.Report(name, {"r": args.r, "max_n": args.max_n})
        for rep in reps:
            merged.merge(rep)
        merged.notes["seconds"] = round(time.perf_counter() - t0, 3)
        reports.append(merged)
    ok = all(rep.ok for rep in reports)
    doc = {"status": "pass" if ok else "fail", "reports": [rep.to_dict() for rep in reports]}
    if args.format == "json":
        _emit(json.dumps(doc, indent=1), args.output)
    else:
        lines = [f"{rep.suite:18s} {rep.status}  ({rep.checked} checks, {rep.notes['seconds']}s)"
                 for rep in reports]
        lines.append(f"overall: {doc['status']}")
        _emit("\n".join(lines), args.output)
    return 0 if ok else 1


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--r", type=int, help="rank (number of colors)")
    common.add_argument("--mode", choices=("symbolic", "specialized"), default="symbolic")
    common.add_argument("--seed", type=int, default=None,
                        help="seed for the random assignment in specialized mode")
    common.add_argument("--format", choices=("text", "json", "latex"), default="text")
    common.add_argument("--cache-dir", default=None, help="defaults to $GJACK_CACHE or ~/.cache/genjack")
    common.add_argument("--threads", type=int, default=1, help="worker processes for block computation")
    common.add_argument("--output", default=None, help="write to this file instead of stdout")

    parser = argparse.ArgumentParser(prog="genjack", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", parents=[common], help="J or J* in the Schur basis")
    p.add_argument("--mp", required=True, help='multipartition, e.g. "[2,1],[],[1]"')
    p.add_argument("--variant", choices=VARIANTS, default="J")
    p.add_argument("--powersums", action="store_true", help="also print the power-sum expansion")
    p.add_argument("--max-n", type=int, default=8, help="size cap")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("table", parents=[common], help="all J (or J*) of degree n")
    p.add_argument("--n", type=int)
    p.add_argument("--variant", choices=VARIANTS, default="J")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("matrix", parents=[common], help="a transition-matrix block")
    p.add_argument("--n", type=int)
    p.add_argument("--kind", choices=KINDS, default="T")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("--suite", choices=SUITES + EXTRA_SUITES + ("all",), default="all")
    p.add_argument("--max-n", type=int, default=None)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.mode == "specialized" and args.seed is None:
        args.seed = 0
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
