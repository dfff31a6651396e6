"""Command line front end.  Every subcommand is a thin adapter over the library."""

import argparse
import csv
import io
import json
import math
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, List, Optional, Sequence

from . import series
from .errors import ConsistencyError, GiniError, PartitionError
from .gini import e2, gini, gini_nk, lorenz_points
from .kostka import kostka_foulkes, kostka_number
from .partitions import Partition, conjugate, covers, dominates
from .polynomial import IntPolynomial
from .reflection_groups import (
    DihedralCharacter,
    DominantWeight,
    dihedral_graded_multiplicity,
    gl_gini,
    gl_graded_multiplicity,
    sym_gini,
    sym_graded_multiplicity,
)
from .symfunc import kostka_foulkes_via_transition
from .tableaux import Tableau, charge, charge_tableau, enumerate_ssyt, enumerate_standard, parse_word, standard_count

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_INTERNAL = 3

THREADS_ENV = "PARTITION_GINI_THREADS"
_INT64_MAX = 2 ** 63 - 1


class UsageError(Exception):
    pass


@dataclass
class CommandResult:
    status: str
    payload: Any
    elapsed_ms: int
    exit_code: int
    output: str = ""
    diagnostics: str = ""


# -- serialization ----------------------------------------------------------


def to_json_value(value: Any) -> Any:
    """Convert library values into plain JSON; integers past 64 bits become strings."""
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return value if -_INT64_MAX - 1 <= value <= _INT64_MAX else str(value)
    if isinstance(value, float):
        if math.isinf(value):
            return "-inf" if value < 0 else "inf"
        return value
    if isinstance(value, Fraction):
        return {"num": to_json_value(value.numerator), "den": to_json_value(value.denominator)}
    if isinstance(value, IntPolynomial):
        return {"coeffs": [to_json_value(c) for c in value.coeffs]}
    if isinstance(value, Partition):
        return [to_json_value(p) for p in value.parts]
    if isinstance(value, Tableau):
        return value.to_json()
    if isinstance(value, dict):
        return {str(k): to_json_value(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_json_value(v) for v in value]
    raise TypeError(f"cannot serialize {type(value).__name__}")


def dump_json(value: Any) -> str:
    return json.dumps(to_json_value(value), separators=(",", ":"), sort_keys=False)


def dump_csv(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\r\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


class Csv:
    """Marker for commands whose stdout is CSV rather than JSON."""

    def __init__(self, header, rows):
        self.header = list(header)
        self.rows = [list(r) for r in rows]

    def text(self) -> str:
        return dump_csv(self.header, self.rows)


# -- argument helpers -------------------------------------------------------


def _partition(text: str) -> Partition:
    return Partition.parse(text)


def _tableau(text: str) -> Tableau:
    """Rows separated by ``/``; each row as digits (``1112``) or comma-separated numbers."""
    rows = [parse_word(r) for r in text.split("/") if r.strip()]
    if not rows:
        raise PartitionError("empty tableau")
    t = Tableau(rows)
    if not t.is_semistandard():
        raise PartitionError(f"{text!r} is not a semistandard tableau")
    return t


def _threads(args) -> int:
    if args.threads is not None:
        value = args.threads
    else:
        raw = os.environ.get(THREADS_ENV, "1")
        try:
            value = int(raw)
        except ValueError:
            raise UsageError(f"{THREADS_ENV} must be an integer, got {raw!r}") from None
    if value < 1:
        raise UsageError("thread count must be positive")
    return value


def _parallel_map(args, fn: Callable, items: List) -> List:
    """Order-preserving map; the result never depends on the thread count."""
    workers = _threads(args)
    if workers == 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


# -- commands ---------------------------------------------------------------


def cmd_gini(args):
    return {"gini": gini(args.partition)}


def cmd_gini_nk(args):
    return {"gini_nk": gini_nk(args.partition, args.n, args.k)}


def cmd_e2(args):
    return {"e2": e2(args.partition)}


def cmd_conjugate(args):
    return {"conjugate": conjugate(args.partition)}


def cmd_dominates(args):
    return {"dominates": dominates(args.lam, args.mu)}


def cmd_covers(args):
    return {"covers": covers(args.lam, args.mu)}


def cmd_lorenz(args):
    lam = args.partition
    k = args.k
    n = args.n if args.n is not None else lam.n // k
    sample = lorenz_points(lam, n, k)
    return Csv(["x", "equality_y", "lorenz_y"], sample.rows())


def cmd_kostka(args):
    return {"kostka": kostka_number(args.shape, args.weight)}


def cmd_kostka_foulkes(args):
    poly = kostka_foulkes(args.shape, args.weight)
    if args.oracle:
        other = kostka_foulkes_via_transition(args.shape, args.weight)
        if other != poly:
            raise ConsistencyError(f"charge gives {poly}, transition matrix gives {other}")
        return {"coeffs": poly.coeffs, "oracle_agrees": True}
    return poly


def cmd_charge(args):
    if (args.word is None) == (args.tableau is None):
        raise UsageError("give exactly one of --word or --tableau")
    if args.word is not None:
        return {"charge": charge(parse_word(args.word))}
    return {"charge": charge_tableau(_tableau(args.tableau))}


def cmd_ssyt(args):
    tableaux = enumerate_ssyt(args.shape, args.weight)
    return {"count": len(tableaux), "tableaux": tableaux}


def cmd_standard_count(args):
    out = {"standard_count": standard_count(args.shape)}
    if args.check:
        out["enumerated"] = len(enumerate_standard(args.shape))
    return out


def cmd_genfun(args):
    ns = list(range(1, args.n + 1))
    polys = _parallel_map(args, series.genfun_coefficient, ns)
    return {str(n): p.coeffs for n, p in zip(ns, polys)}


def cmd_level_set(args):
    out = {"n": args.n, "max_level_set": series.max_level_set_size(args.n)}
    if args.n >= 2:
        out["antichain_bound"] = series.antichain_lower_bound(args.n)
    return out


def cmd_expected_value(args):
    if args.trend:
        return series.trend_report(args.n)
    if args.table:
        ns = list(range(args.step, args.n + 1, args.step))
        if not ns:
            raise UsageError("--n must be at least --step for a table")
        values = _parallel_map(args, series.expected_value_normalized, ns)
        rows = [(n, f"{v.numerator}/{v.denominator}", str(series.to_decimal(v))) for n, v in zip(ns, values)]
        return Csv(["n", "exact", "decimal"], rows)
    value = series.expected_value_normalized(args.n)
    return {
        "n": args.n,
        "expected_value": value,
        "decimal": str(series.to_decimal(value)),
        "mean_gini": series.expected_value(args.n),
    }


def cmd_dihedral(args):
    chi = DihedralCharacter(args.char, args.n, args.j)
    poly = dihedral_graded_multiplicity(args.n, chi)
    return {"poly": poly, "gini": poly.degree}


def cmd_sym_gini(args):
    return {"gini": sym_gini(args.partition), "poly": sym_graded_multiplicity(conjugate(args.partition))}


def cmd_gl_gini(args):
    alpha = DominantWeight.parse(args.alpha)
    out = {"gini": gl_gini(alpha)}
    if sum(alpha.entries) == 0:
        out["poly"] = gl_graded_multiplicity(alpha)
    return out


# -- parser -----------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}\n{self.format_usage()}")

    def exit(self, status=0, message=None):
        if status:
            raise UsageError(message or "")
        if message:
            sys.stderr.write(message)
        raise _HelpExit()


class _HelpExit(Exception):
    pass


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="partition-gini", description="Gini index of integer partitions and graded multiplicities.")
    parser.add_argument("--threads", type=_positive, default=None, help=f"worker threads (default ${THREADS_ENV} or 1)")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True

    def add(name, fn, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=fn)
        return p

    p = add("gini", cmd_gini, "Gini index of a partition")
    p.add_argument("--partition", required=True)
    p = add("gini-nk", cmd_gini_nk, "Gini index of nk units among n people")
    p.add_argument("--partition", required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--k", type=_positive, required=True)
    p = add("e2", cmd_e2, "second elementary symmetric polynomial of the parts")
    p.add_argument("--partition", required=True)
    p = add("conjugate", cmd_conjugate, "conjugate partition")
    p.add_argument("--partition", required=True)
    for name, fn in (("dominates", cmd_dominates), ("covers", cmd_covers)):
        p = add(name, fn, f"does LAM {name} MU")
        p.add_argument("--lam", required=True)
        p.add_argument("--mu", required=True)
    p = add("lorenz", cmd_lorenz, "Lorenz curve breakpoints as CSV")
    p.add_argument("--partition", required=True)
    p.add_argument("--n", type=_positive, help="population (default |partition| / k)")
    p.add_argument("--k", type=_positive, default=1)
    p = add("kostka", cmd_kostka, "Kostka number")
    p.add_argument("--shape", required=True)
    p.add_argument("--weight", required=True)
    p = add("kostka-foulkes", cmd_kostka_foulkes, "Kostka-Foulkes polynomial via charge")
    p.add_argument("--shape", required=True)
    p.add_argument("--weight", required=True)
    p.add_argument("--oracle", action="store_true", help="cross-check with the Hall-Littlewood transition matrix")
    p = add("charge", cmd_charge, "charge of a word or tableau")
    p.add_argument("--word")
    p.add_argument("--tableau", help="rows separated by '/', e.g. 1112/22/3")
    p = add("ssyt", cmd_ssyt, "semistandard tableaux of a shape and weight")
    p.add_argument("--shape", required=True)
    p.add_argument("--weight", required=True)
    p = add("standard-count", cmd_standard_count, "number of standard tableaux by the hook length formula")
    p.add_argument("--shape", required=True)
    p.add_argument("--check", action="store_true", help="also count by enumeration")
    p = add("genfun", cmd_genfun, "generating function coefficients for 1..n")
    p.add_argument("--n", type=_positive, required=True)
    p = add("level-set", cmd_level_set, "largest Gini level set and the antichain bound")
    p.add_argument("--n", type=_positive, required=True)
    p = add("expected-value", cmd_expected_value, "expected normalized Gini index")
    p.add_argument("--n", type=_positive, required=True)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--table", action="store_true", help="CSV for every multiple of --step up to n")
    mode.add_argument("--trend", action="store_true", help="monotonicity report for 2..n")
    p.add_argument("--step", type=_positive, default=5)
    p = add("dihedral", cmd_dihedral, "graded multiplicity for a dihedral irrep")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--char", required=True, choices=["chi1", "chi2", "chi3", "chi4", "rho"])
    p.add_argument("--j", type=int)
    p = add("sym-gini", cmd_sym_gini, "Gini index of a Specht module")
    p.add_argument("--partition", required=True)
    p = add("gl-gini", cmd_gl_gini, "Gini index of a GL_n highest weight module")
    p.add_argument("--alpha", required=True, help="comma-separated weight; write --alpha=-1,1 when it starts with '-'")
    return parser


_PARTITION_ARGS = ("partition", "lam", "mu", "shape", "weight")


def run(argv: Optional[Sequence[str]] = None) -> CommandResult:
    argv = list(sys.argv[1:] if argv is None else argv)
    start = time.perf_counter()

    def done(status, payload, code, output="", diagnostics=""):
        elapsed = int((time.perf_counter() - start) * 1000)
        return CommandResult(status, payload, elapsed, code, output, diagnostics)

    def failure(code_name, message, exit_code):
        payload = {"error": {"code": code_name, "message": message}}
        return done("error", payload, exit_code, dump_json(payload) + "\n", message.rstrip() + "\n")

    try:
        args = build_parser().parse_args(argv)
        for name in _PARTITION_ARGS:
            if isinstance(getattr(args, name, None), str):
                setattr(args, name, _partition(getattr(args, name)))
        _threads(args)
        result = args.func(args)
    except _HelpExit:
        return done("ok", None, EXIT_OK)
    except UsageError as exc:
        return failure("usage", str(exc), EXIT_USAGE)
    except GiniError as exc:
        return failure(exc.code, str(exc), EXIT_DOMAIN)
    except ConsistencyError as exc:
        return failure(exc.code, str(exc), EXIT_INTERNAL)
    if isinstance(result, Csv):
        text = result.text()
        return done("ok", {"header": result.header, "rows": result.rows}, EXIT_OK, text)
    payload = to_json_value(result)
    return done("ok", payload, EXIT_OK, dump_json(payload) + "\n")


def main(argv: Optional[Sequence[str]] = None) -> int:
    result = run(argv)
    if result.output:
        sys.stdout.write(result.output)
    if result.diagnostics:
        sys.stderr.write(result.diagnostics)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
