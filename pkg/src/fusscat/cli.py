"""Command line front end: ``fusscat <subcommand> ...``.

Exit status: 0 on success, 1 on a domain or validation error, 2 on a usage
error.  Enumeration, sampling and conversion stream newline-delimited JSON.
"""
import argparse
import json
import sys
from fractions import Fraction

from . import codec
from .counting import catalan_nk, check_convolution, count_table, gould_a
from .diagrams import enumerate_diagrams
from .dissections import dissection_to_tree, enumerate_dissections, tree_to_dissection
from .errors import FusscatError, ParseError
from .render import RenderOptions, render_svg
from .sampling import SamplerConfig, sample_diagrams
from .trees import diagram_to_tree, enumerate_trees, tree_to_diagram
from .verify import verify

KINDS = ["diagram", "tree", "dissection"]


class UsageError(Exception):
    pass


def _value(x):
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    return x


def cmd_count(args, out):
    if args.table:
        if args.max_n is None or args.max_k is None:
            raise UsageError("--table needs --max-n and --max-k")
        out.write("n\tk\tcount\n")
        for n, k, c in count_table(args.max_n, args.max_k):
            out.write(f"{n}\t{k}\t{c}\n")
        return 0
    if args.n is None or args.k is None:
        raise UsageError("count needs --n and --k (or --table)")
    out.write(f"{catalan_nk(args.n, args.k)}\n")
    return 0


def cmd_gould(args, out):
    if args.check_convolution:
        if args.c is None:
            raise UsageError("--check-convolution needs --c")
        report = check_convolution(args.n, args.a, args.b, args.c)
        out.write(codec.dumps({"equal": report.equal, "lhs": _value(report.lhs), "rhs": _value(report.rhs)}) + "\n")
        return 0 if report.equal else 1
    out.write(f"{_value(gould_a(args.n, args.a, args.b))}\n")
    return 0


def _tree_line(tree, offset):
    return codec.dumps({"k": tree.k, "offset": offset, "tree": tree.to_nested()})


def cmd_enumerate(args, out):
    if args.as_ == "diagram":
        items = enumerate_diagrams(args.n, args.k)
    elif args.as_ == "tree":
        items = enumerate_trees(args.n, args.k)
    else:
        items = enumerate_dissections(args.n * (args.k - 1) + 2, args.k)
    for i, obj in enumerate(items):
        if args.limit is not None and i >= args.limit:
            break
        out.write(codec.encode(obj) + "\n")
    return 0


def _read_any(data, kind):
    """Parse one convert input record into (object, offset)."""
    offset = 0
    if kind == "tree":
        k = None
        if isinstance(data, dict):
            if "tree" not in data:
                raise ParseError("tree record needs a 'tree' field")
            offset = data.get("offset", 0)
            k = data.get("k")
            data = data["tree"]
        return codec.from_json(data, "tree", k), offset
    if kind == "dissection" and isinstance(data, dict) and "offset" in data:
        data = dict(data)
        offset = data.pop("offset")
    return codec.from_json(data, kind), offset


def convert_one(obj, offset, src, dst):
    """Convert between kinds, carrying the cut offset through trees and dissections."""
    if src == "diagram":
        tree, offset = diagram_to_tree(obj)
    elif src == "tree":
        tree = obj
    else:
        tree = dissection_to_tree(obj)
    if dst == "diagram":
        return (obj if src == "diagram" else tree_to_diagram(tree, tree.k, offset)), offset
    if dst == "tree":
        return tree, offset
    return (obj if src == "dissection" else tree_to_dissection(tree)), offset


def _write_converted(obj, offset, kind, out):
    if kind == "tree":
        out.write(_tree_line(obj, offset) + "\n")
    elif kind == "dissection" and offset:
        out.write(codec.dumps({**codec.to_json(obj), "offset": offset}) + "\n")
    else:
        out.write(codec.encode(obj) + "\n")


def cmd_convert(args, out, stdin):
    for lineno, line in enumerate(stdin, start=1):
        if not line.strip():
            continue
        try:
            data = json.loads(line)
        except json.JSONDecodeError as exc:
            raise ParseError(f"line {lineno}: malformed JSON: {exc}") from None
        obj, offset = _read_any(data, args.from_)
        converted, offset = convert_one(obj, offset, args.from_, args.to)
        _write_converted(converted, offset, args.to, out)
    return 0


def cmd_sample(args, out):
    cfg = SamplerConfig(args.n, args.k, args.seed)
    out.write(codec.dumps(cfg.header()) + "\n")
    for d in sample_diagrams(cfg, args.count):
        out.write(codec.encode(d) + "\n")
    return 0


def cmd_verify(args, out):
    checks = verify(args.n, args.k, max_subsets=args.max_subsets)
    for c in checks:
        out.write(c.line() + "\n")
    failed = [c for c in checks if c.ok is False]
    out.write(f"{'OK' if not failed else 'FAILED'}: {len(checks) - len(failed)}/{len(checks)} checks did not fail\n")
    return 1 if failed else 0


def cmd_render(args, out, stdin):
    text = stdin.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc}") from None
    obj, _ = _read_any(data, args.as_)
    svg = render_svg(obj, RenderOptions(args.width, args.height, args.as_, not args.no_labels))
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(svg)
    out.write(f"wrote {args.out}\n")
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="fusscat", description="(n,k)-Catalan objects: count, enumerate, convert, sample.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", help="C(n,k) = binomial(kn, n-1)/n")
    c.add_argument("--n", type=int)
    c.add_argument("--k", type=int)
    c.add_argument("--table", action="store_true")
    c.add_argument("--max-n", type=int)
    c.add_argument("--max-k", type=int)

    g = sub.add_parser("gould", help="Gould's A_n(a,b) and its convolution")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--a", type=int, required=True)
    g.add_argument("--b", type=int, required=True)
    g.add_argument("--check-convolution", action="store_true")
    g.add_argument("--c", type=int)

    e = sub.add_parser("enumerate", help="stream every object as JSON lines")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--k", type=int, required=True)
    e.add_argument("--as", dest="as_", choices=KINDS, required=True)
    e.add_argument("--limit", type=int)

    v = sub.add_parser("convert", help="convert JSON lines on stdin between kinds")
    v.add_argument("--from", dest="from_", choices=KINDS, required=True)
    v.add_argument("--to", choices=KINDS, required=True)

    s = sub.add_parser("sample", help="uniform random diagrams")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--count", type=int, required=True)
    s.add_argument("--seed", type=int, required=True)

    f = sub.add_parser("verify", help="run the exhaustive checks at one (n,k)")
    f.add_argument("--n", type=int, required=True)
    f.add_argument("--k", type=int, required=True)
    f.add_argument("--max-subsets", type=int, default=10**6)

    r = sub.add_parser("render", help="render one JSON object from stdin as SVG")
    r.add_argument("--as", dest="as_", choices=KINDS, required=True)
    r.add_argument("--out", required=True)
    r.add_argument("--width", type=int, default=480)
    r.add_argument("--height", type=int, default=480)
    r.add_argument("--no-labels", action="store_true")
    return p


def main(argv=None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    handlers = {
        "count": lambda: cmd_count(args, stdout),
        "gould": lambda: cmd_gould(args, stdout),
        "enumerate": lambda: cmd_enumerate(args, stdout),
        "convert": lambda: cmd_convert(args, stdout, stdin),
        "sample": lambda: cmd_sample(args, stdout),
        "verify": lambda: cmd_verify(args, stdout),
        "render": lambda: cmd_render(args, stdout, stdin),
    }
    try:
        return handlers[args.command]()
    except UsageError as exc:
        stderr.write(f"fusscat {args.command}: usage error: {exc}\n")
        return 2
    except (FusscatError, ValueError) as exc:
        stderr.write(f"fusscat {args.command}: error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
