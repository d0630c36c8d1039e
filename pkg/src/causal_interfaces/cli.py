"""Command line front end.

Exit codes: 0 success, 2 invalid table, 3 infeasible solution under
``--strict``, 4 I/O, parse or flag error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import InterfaceError, InvalidTable
from .files import ParseError, read_table, write_text
from .generative import GenerativeSpec, expected_table, sample_counts
from .reporting import (
    DEFAULT_PRECISION,
    build_curve_file,
    build_report,
    render_compare,
    render_report,
)

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_INFEASIBLE = 3
EXIT_PARSE = 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def _probability(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not (0.0 <= v <= 1.0):
        raise argparse.ArgumentTypeError(f"{v} outside [0, 1]")
    return v


def _positive_int(minimum: int):
    def conv(text: str) -> int:
        try:
            v = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
        if v < minimum:
            raise argparse.ArgumentTypeError(f"must be at least {minimum}")
        return v

    return conv


def _seed(text: str) -> int:
    try:
        v = int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if not (0 <= v < 1 << 64):
        raise argparse.ArgumentTypeError("seed must fit in an unsigned 64-bit integer")
    return v


def _add_input_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--counts", action="store_true", help="read bare CSV input as counts, not frequencies")
    p.add_argument("--no-canonicalize", dest="canonical", action="store_false",
                   help="analyze as given; negative-determinant tables get measures only")
    p.add_argument("--sigma1", type=_probability, default=None,
                   help="also solve a custom epistemology with this confusion chance of B=1")
    p.add_argument("--precision", type=_positive_int(1), default=DEFAULT_PRECISION,
                   help="significant digits in output (default %(default)s)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="causal-interfaces", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sub.add_parser("analyze", help="effect measures, curve geometry and all epistemologies")
    a.add_argument("path", help="input file ('-' for stdin)")
    _add_input_flags(a)
    a.add_argument("--format", choices=("text", "json", "csv"), default="text")
    a.add_argument("--strict", action="store_true", help="exit 3 if any epistemology is infeasible")
    a.add_argument("--out", default=None, help="output file (default stdout)")

    c = sub.add_parser("curve", help="curve samples and epistemology markers as CSV")
    c.add_argument("path")
    _add_input_flags(c)
    c.add_argument("--points", type=_positive_int(2), default=101)
    c.add_argument("--out", default=None)

    s = sub.add_parser("simulate", help="exact or Monte Carlo tables from the generative model")
    s.add_argument("--row-weight", type=_probability, default=0.5, help="P(A=1), strictly inside (0, 1)")
    s.add_argument("--eps0", type=_probability, required=True)
    s.add_argument("--eps1", type=_probability, required=True)
    s.add_argument("--sigma1", type=_probability, required=True)
    s.add_argument("--samples", type=_positive_int(1), default=100000)
    s.add_argument("--seed", type=_seed, default=0)
    s.add_argument("--exact", action="store_true", help="emit the expected frequency table")
    s.add_argument("--format", choices=("json", "csv"), default="json")
    s.add_argument("--out", default=None)

    m = sub.add_parser("compare", help="one row per input and epistemology")
    m.add_argument("paths", nargs="+")
    _add_input_flags(m)
    m.add_argument("--format", choices=("text", "json", "csv"), default="text")
    m.add_argument("--strict", action="store_true")
    m.add_argument("--out", default=None)
    return parser


def _error(msg: str) -> None:
    print(f"causal-interfaces: {msg}", file=sys.stderr)


def _load_report(path: str, args):
    inp = read_table(path, counts=args.counts)
    return build_report(
        inp.table,
        source=path,
        input_kind=inp.kind,
        input_values=inp.values,
        canonical=args.canonical,
        sigma1=args.sigma1,
        precision=args.precision,
    )


def _status_of(exc: Exception) -> int:
    if isinstance(exc, (ParseError, OSError)):
        return EXIT_PARSE
    return EXIT_INVALID


def cmd_analyze(args) -> int:
    rep = _load_report(args.path, args)
    if args.strict and rep.infeasible:
        names = ", ".join(s.kind.value for s in rep.infeasible)
        _error(f"{args.path}: infeasible epistemologies under --strict: {names}")
        return EXIT_INFEASIBLE
    write_text(args.out, render_report(rep, args.format))
    return EXIT_OK


def cmd_curve(args) -> int:
    rep = _load_report(args.path, args)
    if rep.geometry is None:
        raise InvalidTable("curve needs a nonnegative determinant; drop --no-canonicalize")
    write_text(args.out, build_curve_file(rep, args.points).to_csv(args.precision))
    return EXIT_OK


def _spec_dict(spec: GenerativeSpec) -> dict:
    return {"row_weight": spec.row_weight, "eps0": spec.eps0, "eps1": spec.eps1, "sigma1": spec.sigma1}


def cmd_simulate(args) -> int:
    try:
        spec = GenerativeSpec(args.row_weight, args.eps0, args.eps1, args.sigma1)
    except InterfaceError as exc:
        _error(str(exc))
        return EXIT_PARSE
    if args.exact:
        m = expected_table(spec).as_lists()
        meta = {"spec": _spec_dict(spec)}
        if args.format == "json":
            text = json.dumps({"frequencies": m, **meta}, indent=2) + "\n"
        else:
            head = "".join(f"# {k}: {v!r}\n" for k, v in meta["spec"].items())
            text = head + "".join(f"{a!r},{b!r}\n" for a, b in m)
    else:
        res = sample_counts(spec, args.samples, args.seed)
        m = res.counts.as_matrix()
        meta = {"samples": res.samples, "seed": res.seed, "generator": res.generator, "spec": _spec_dict(spec)}
        if args.format == "json":
            text = json.dumps({"counts": m, **meta}, indent=2) + "\n"
        else:
            head = [f"# samples: {res.samples}", f"# seed: {res.seed}", f"# generator: {res.generator}"]
            head += [f"# {k}: {v!r}" for k, v in meta["spec"].items()]
            text = "\n".join(head) + "\n" + "".join(f"{a},{b}\n" for a, b in m)
    write_text(args.out, text)
    return EXIT_OK


def cmd_compare(args) -> int:
    reports, worst = [], EXIT_OK
    for path in args.paths:
        try:
            rep = _load_report(path, args)
        except (InterfaceError, OSError) as exc:
            msg = str(exc)
            _error(msg if msg.startswith(path) else f"{path}: {msg}")
            worst = max(worst, _status_of(exc))
            continue
        if args.strict and rep.infeasible:
            _error(f"{path}: infeasible epistemologies under --strict")
            worst = max(worst, EXIT_INFEASIBLE)
        reports.append(rep)
    write_text(args.out, render_compare(reports, args.format, args.precision))
    return worst


COMMANDS = {"analyze": cmd_analyze, "curve": cmd_curve, "simulate": cmd_simulate, "compare": cmd_compare}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (ParseError, OSError) as exc:
        _error(str(exc))
        return EXIT_PARSE
    except InvalidTable as exc:
        _error(f"invalid table: {exc}")
        return EXIT_INVALID
    except InterfaceError as exc:
        _error(str(exc))
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
