"""Command-line entry point: ``szego bench`` and ``szego eval``.

Exit codes: 0 success, 1 usage error, 2 numerical failure.
"""
import argparse
import json
import re
import sys

from .bench import ExperimentConfig, run_experiment, write_table
from .errors import SzegoError
from .kernel import AnnulusDomain, Method, TruncationSpec, evaluate, zero_location

EXIT_USAGE = 1
EXIT_NUMERIC = 2

_METHOD_CHOICES = [m.value for m in Method]
_COMPLEX_RE = re.compile(r"^[0-9eE+\-.ij]+$")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_complex(text):
    """Parse ``a+bi`` literals such as ``0.7i``, ``-0.5+0.2i`` or ``1``."""
    s = str(text).strip().replace(" ", "")
    if not s or not _COMPLEX_RE.match(s) or "j" in s:
        raise argparse.ArgumentTypeError(f"malformed complex number {text!r}")
    try:
        return complex(s.replace("i", "j"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed complex number {text!r}") from None


def format_complex(z, digits=12):
    z = complex(z)
    re_, im = z.real + 0.0, z.imag + 0.0
    if im == 0:
        return f"{re_:.{digits}g}"
    if re_ == 0:
        return f"{im:.{digits}g}i"
    return f"{re_:.{digits}g}{im:+.{digits}g}i"


def _int_list(text):
    try:
        values = [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    if not values:
        raise argparse.ArgumentTypeError("empty list")
    return values


def build_parser():
    parser = _Parser(prog="szego", description="Szego kernel of an annulus.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    bench = sub.add_parser("bench", help="run the convergence experiment and write error tables")
    bench.add_argument("--config", help="JSON file with the same keys as the flags")
    bench.add_argument("--rho", type=float)
    bench.add_argument("--a", type=parse_complex)
    bench.add_argument("--series-widths", type=_int_list, help="truncations N of the power series")
    bench.add_argument("--alt-widths", type=_int_list, help="truncations N of the alternating series")
    bench.add_argument("--product-depths", type=_int_list)
    bench.add_argument("--nodes", type=_int_list, help="nodes per boundary circle")
    bench.add_argument("--format", choices=["csv", "json"])
    bench.add_argument("--out", help="output file (default: stdout)")
    bench.add_argument("--workers", type=int, default=1)

    ev = sub.add_parser("eval", help="evaluate S(z, a) at one point")
    ev.add_argument("--rho", type=float, required=True)
    ev.add_argument("--a", type=parse_complex, required=True)
    ev.add_argument("--z", type=parse_complex, required=True)
    ev.add_argument("--method", choices=_METHOD_CHOICES, default="product")
    ev.add_argument("--terms", type=int, default=100, help="series half-width N")
    ev.add_argument("--depth", type=int, default=25, help="product depth P")
    return parser


# config-file key -> ExperimentConfig field
_CONFIG_KEYS = {
    "rho": "rho",
    "a": "a",
    "series_widths": "series4_widths",
    "series4_widths": "series4_widths",
    "alt_widths": "series5_widths",
    "series5_widths": "series5_widths",
    "product_depths": "product_depths",
    "nodes": "node_counts",
    "node_counts": "node_counts",
    "format": "output_format",
    "output_format": "output_format",
    "output_path": "output_path",
    "out": "output_path",
}


def load_config(path):
    try:
        with open(path) as fh:
            raw = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from exc
    if not isinstance(raw, dict):
        raise UsageError("config must be a JSON object")
    out = {}
    for key, value in raw.items():
        name = _CONFIG_KEYS.get(key.replace("-", "_"))
        if name is None:
            raise UsageError(f"unknown config key {key!r}")
        if name == "a":
            if isinstance(value, (list, tuple)) and len(value) == 2:
                value = complex(value[0], value[1])
            elif isinstance(value, str):
                try:
                    value = parse_complex(value)
                except argparse.ArgumentTypeError as exc:
                    raise UsageError(str(exc)) from exc
            else:
                value = complex(value)
        out[name] = value
    return out


def _bench(args):
    fields = load_config(args.config) if args.config else {}
    flags = {
        "rho": args.rho, "a": args.a, "series4_widths": args.series_widths,
        "series5_widths": args.alt_widths, "product_depths": args.product_depths,
        "node_counts": args.nodes, "output_format": args.format, "output_path": args.out,
    }
    fields.update({k: v for k, v in flags.items() if v is not None})
    try:
        cfg = ExperimentConfig(**fields)
    except (TypeError, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    table = run_experiment(cfg, workers=args.workers)
    text = write_table(table, cfg.output_format, cfg.output_path)
    if cfg.output_path is None:
        sys.stdout.write(text)


def _eval(args):
    try:
        dom = AnnulusDomain(args.rho, args.a)
        trunc = TruncationSpec(series_half_width=args.terms, product_depth=args.depth)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    method = Method(args.method)
    value = evaluate(dom, args.z, method, trunc)
    print(f"S(z, a) = {format_complex(value)}")
    if method is Method.PRODUCT:
        print(f"zero of S(., a) in the annulus: {format_complex(zero_location(dom), 6)}")


def _join_values(argv):
    # lets "--z -0.7i" through; argparse would read "-0.7i" as an option
    out = []
    it = iter(argv)
    for tok in it:
        if tok in _VALUE_FLAGS:
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


_VALUE_FLAGS = ("--rho", "--a", "--z")


def main(argv=None):
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    args = parser.parse_args(_join_values(argv))
    try:
        if args.command == "bench":
            _bench(args)
        else:
            _eval(args)
    except UsageError as exc:
        print(f"szego: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SzegoError as exc:
        print(f"szego: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    return 0


if __name__ == "__main__":
    sys.exit(main())
