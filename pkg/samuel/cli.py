import argparse
import logging
import os
import sys
from typing import Any, Callable, Dict, List, Optional, Tuple

import fs.errors

from samuel.collections.dict import ParamDict
from samuel.collections.fs import FileSystem
from samuel.constants import (
    CONF_C_WINDOW,
    CONF_NCAP,
    CONF_NMAX,
    CONF_SEED,
    CONF_WORKERS,
    SAMUEL_DEFAULT_C_WINDOW,
    SAMUEL_DEFAULT_NCAP,
    SAMUEL_DEFAULT_NMAX,
    SAMUEL_DEFAULT_SEED,
    SAMUEL_DEFAULT_SUPERFICIAL_NMAX,
    SAMUEL_DEFAULT_WORKERS,
    SAMUEL_REPORT_SCHEMA,
)
from samuel.core.field import Field, parse_field
from samuel.exceptions import ParseError, SamuelError, SearchExhaustedError
from samuel.hilbert import fit_coefficients, graded_series, hilbert_samuel_table
from samuel.lab.corpus import BUILTIN, load_corpus, run_corpus, run_instance
from samuel.lab.report import HilbertReport
from samuel.local.definition import RingDefinition, parse_ring_definition
from samuel.local.ring import PresentedLocalRing, QuotientIdeal
from samuel.sequences import (
    is_d_sequence,
    is_regular_sequence,
    superficial_sequence_search,
)
from samuel.utils.json import dumps_canonical
from samuel_version import __version__

_LOG = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_INPUT = 2
EXIT_COMPUTATION = 3

_INPUT_ERRORS = ["ParseError", "ValueError"]

COMMANDS = ["gb", "hilbert", "coeffs", "series", "dseq", "check", "corpus"]


def main(argv: Optional[List[str]] = None) -> int:
    """Entry point of the ``samuel`` command

    :param argv: arguments without the program name, defaults to ``sys.argv``
    :return: exit status, 0 ok, 1 verdict failure, 2 input error,
        3 computation error
    """
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse exits 2 on invalid flags, 0 on --help
        return int(e.code or 0)
    _configure_logging(args.verbose)
    try:
        field = None if args.field is None else parse_field(args.field)
        conf = _to_conf(args)
        status, text = _HANDLERS[args.command](args, conf, field)
    except (ParseError, ValueError, fs.errors.FSError) as e:
        print(f"{type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_INPUT
    except SamuelError as e:
        print(f"{type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_COMPUTATION
    if args.out is not None:
        FileSystem().write_text(_abs(args.out), text)
    else:
        sys.stdout.write(text)
    return status


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("path", help="ring file, or corpus file / 'builtin'")
    common.add_argument("--nmax", type=_positive, default=None, help="table length")
    common.add_argument(
        "--Ncap",
        dest="ncap",
        type=_positive,
        default=SAMUEL_DEFAULT_NCAP,
        help="truncation cap of the length engine",
    )
    common.add_argument("--seed", type=int, default=SAMUEL_DEFAULT_SEED)
    common.add_argument(
        "--cwindow", type=_positive, default=SAMUEL_DEFAULT_C_WINDOW
    )
    common.add_argument(
        "--workers", type=_positive, default=SAMUEL_DEFAULT_WORKERS
    )
    common.add_argument("--field", default=None, help="q or fp:P, overrides files")
    common.add_argument("--ideal", default=None, help="ideal name, default Q")
    common.add_argument("--json", action="store_true", help="print json")
    common.add_argument("--out", default=None, help="write the output to a path")
    common.add_argument("-v", "--verbose", action="count", default=0)
    parser = argparse.ArgumentParser(
        prog="samuel",
        description="Hilbert-Samuel coefficients of parameter ideals",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "gb": "reduced Groebner bases of the relations and of the lifted ideals",
        "hilbert": "the table H(Q, n)",
        "coeffs": "Hilbert coefficients and postulation number",
        "series": "Hilbert series of the associated graded ring",
        "dseq": "regular, d-sequence and superficial checks",
        "check": "run the theorem checks on one ring",
        "corpus": "run the theorem checks on a corpus",
    }
    for name in COMMANDS:
        sub.add_parser(name, parents=[common], help=helps[name])
    return parser


def _positive(value: str) -> int:
    res = int(value)
    if res <= 0:
        raise argparse.ArgumentTypeError(f"{value} is not a positive integer")
    return res


def _configure_logging(verbose: int) -> None:
    level = logging.WARNING
    if verbose == 1:
        level = logging.INFO
    elif verbose > 1:
        level = logging.DEBUG
    logging.basicConfig(
        level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s"
    )


def _to_conf(args: argparse.Namespace) -> ParamDict:
    conf = ParamDict(
        {
            CONF_NCAP: args.ncap,
            CONF_SEED: args.seed,
            CONF_C_WINDOW: args.cwindow,
            CONF_WORKERS: args.workers,
        }
    )
    if args.nmax is not None:
        conf[CONF_NMAX] = args.nmax
    return conf.set_readonly()


def _abs(path: str) -> str:
    return path if "://" in path else os.path.abspath(path)


def _load(args: argparse.Namespace, field: Optional[Field]) -> RingDefinition:
    definition = parse_ring_definition(FileSystem().read_text(_abs(args.path)))
    if definition.name == "":
        definition.name = os.path.splitext(os.path.basename(args.path))[0]
    if field is not None:
        definition.set_field(field)
    return definition


def _ring_and_ideal(
    args: argparse.Namespace, field: Optional[Field]
) -> Tuple[RingDefinition, PresentedLocalRing, QuotientIdeal]:
    definition = _load(args, field)
    ring, ideals = definition.build()
    name = args.ideal or definition.parameter_ideal_name()
    if name not in ideals:
        raise ValueError(f"ideal {name} is not defined, use one of {list(ideals)}")
    return definition, ring, ideals[name]


def _output(args: argparse.Namespace, data: Any, lines: List[str]) -> str:
    if args.json:
        if hasattr(data, "to_json"):
            return data.to_json()
        return dumps_canonical(data)
    return "\n".join(lines) + "\n"


def _gb(args: argparse.Namespace, conf: ParamDict, field: Optional[Field]) -> Any:
    definition = _load(args, field)
    ring, ideals = definition.build()
    if args.ideal is not None:
        if args.ideal not in ideals:
            raise ValueError(f"ideal {args.ideal} is not defined")
        ideals = {args.ideal: ideals[args.ideal]}
    data: Dict[str, Any] = {"schema": SAMUEL_REPORT_SCHEMA, "ring": str(ring)}
    lines = [f"J: {', '.join(str(g) for g in ring.defining_ideal.groebner_basis())}"]
    data["J"] = [str(g) for g in ring.defining_ideal.groebner_basis()]
    for name, ideal in ideals.items():
        basis = [str(g) for g in ideal.lift.groebner_basis()]
        data[name] = basis
        lines.append(f"{name}: {', '.join(basis)}")
    return EXIT_OK, _output(args, data, lines)


def _table(args: argparse.Namespace, conf: ParamDict, field: Optional[Field]) -> Any:
    definition, ring, ideal = _ring_and_ideal(args, field)
    n_max = conf.get_or_none(CONF_NMAX, int) or SAMUEL_DEFAULT_NMAX
    table = hilbert_samuel_table(
        ring,
        ideal,
        n_max,
        conf.get_or_throw(CONF_NCAP, int),
        conf.get_or_throw(CONF_WORKERS, int),
    )
    return ring, ideal, table


def _hilbert(args: argparse.Namespace, conf: ParamDict, field: Optional[Field]) -> Any:
    ring, ideal, table = _table(args, conf, field)
    data = {"schema": SAMUEL_REPORT_SCHEMA, "ring": str(ring), "ideal": str(ideal)}
    data["table"] = list(table.values)
    return EXIT_OK, _output(args, data, [table.to_frame().to_string(index=False)])


def _coeffs(args: argparse.Namespace, conf: ParamDict, field: Optional[Field]) -> Any:
    ring, ideal, table = _table(args, conf, field)
    coeffs = fit_coefficients(table)
    report = HilbertReport(
        ring=str(ring),
        ideal=str(ideal),
        d=coeffs.d,
        table=list(table.values),
        e=list(coeffs.e),
        eta=coeffs.eta,
    )
    return EXIT_OK, _output(args, report, [repr(coeffs)])


def _series(args: argparse.Namespace, conf: ParamDict, field: Optional[Field]) -> Any:
    ring, ideal, table = _table(args, conf, field)
    series = graded_series(table)
    data = dict(schema=SAMUEL_REPORT_SCHEMA, ring=str(ring), ideal=str(ideal))
    data.update(series.to_dict())
    lines = [f"h = {list(series.h_values)}"]
    if series.closed_form is not None:
        lines.append(f"series = {series.closed_form}")
        lines.append(f"e = {series.coefficients()}")
    else:
        lines.append("series = not certified, increase --nmax")
    return EXIT_OK, _output(args, data, lines)


def _dseq(args: argparse.Namespace, conf: ParamDict, field: Optional[Field]) -> Any:
    definition, ring, ideal = _ring_and_ideal(args, field)
    xs = ideal.generators
    regular = is_regular_sequence(ring, xs)
    dseq = is_d_sequence(ring, xs)
    data: Dict[str, Any] = dict(
        schema=SAMUEL_REPORT_SCHEMA,
        ring=str(ring),
        regular=regular.to_dict(),
        d_sequence=dseq.to_dict(),
    )
    lines = [repr(regular), repr(dseq)]
    try:
        found = superficial_sequence_search(
            ring,
            ideal,
            ring.dim,
            seed=conf.get_or_throw(CONF_SEED, int),
            c_window=conf.get_or_throw(CONF_C_WINDOW, int),
            n_max=conf.get_or_none(CONF_NMAX, int) or SAMUEL_DEFAULT_SUPERFICIAL_NMAX,
        )
        data["superficial"] = [str(x) for x in found]
        lines.append("superficial: " + ", ".join(str(x) for x in found))
    except SearchExhaustedError as e:
        data["superficial"] = None
        lines.append(f"superficial: {e}")
    return EXIT_OK, _output(args, data, lines)


def _check(args: argparse.Namespace, conf: ParamDict, field: Optional[Field]) -> Any:
    report = run_instance(_load(args, field), conf)
    status = EXIT_FAILURE if report.has_failure else EXIT_OK
    if report.error is not None:
        status = _error_status([report.error])
    lines = [f"{report.name}: {report.error or ''}"]
    if report.theorem is not None:
        lines = [
            f"{c.verdict.value:9} {c.claim} [{c.hypotheses.value}]"
            for c in report.theorem.claims
        ]
    return status, _output(args, report, lines)


def _corpus(args: argparse.Namespace, conf: ParamDict, field: Optional[Field]) -> Any:
    path = args.path if args.path == BUILTIN else _abs(args.path)
    definitions = load_corpus(path)
    if field is not None:
        for d in definitions:
            d.set_field(field)
    report = run_corpus(definitions, conf)
    status = EXIT_OK
    if report.failures > 0:
        status = EXIT_FAILURE
    elif report.errors > 0:
        status = _error_status([x.error for x in report.instances if x.error])
    frame = report.to_frame()
    lines = [] if len(frame) == 0 else [frame.to_string(index=False)]
    lines.append(", ".join(f"{k}: {v}" for k, v in report.counts.items()))
    return status, _output(args, report, lines)


def _error_status(errors: List[str]) -> int:
    # recorded as "ErrorName: message"
    names = [e.split(":", 1)[0] for e in errors]
    if any(n in _INPUT_ERRORS for n in names):
        return EXIT_INPUT
    return EXIT_COMPUTATION


_HANDLERS: Dict[str, Callable[..., Any]] = {
    "gb": _gb,
    "hilbert": _hilbert,
    "coeffs": _coeffs,
    "series": _series,
    "dseq": _dseq,
    "check": _check,
    "corpus": _corpus,
}


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
