#!/usr/bin/env python3

"""
The `quasidom` command line: solve, oracle, fuzz, reduce, verify-reduction, bench.

Every command prints a report, one `key: value` line per field in a fixed
order (or one JSON document with `--json`), then a RECAP line on stderr.

Exit codes: 0 ok, 1 property violation, 2 bad input, 3 structure violation,
4 resource cap, 5 domain assumption violated.
"""

import argparse
import hashlib
import json
import logging
import statistics
import sys
import time
import traceback
from pathlib import Path
from typing import Any, Callable, List, Optional

import numpy
from rich.markup import escape

from .dp import GammaEvaluator
from .gamma import iter_keys, key_constraint
from .generators import GenKind, GenSpec, SplitMix64, gen_intervals, generate
from .graph import (
    IntervalGraph,
    format_number,
    is_1j_dominating,
    read_edge_list,
    read_intervals,
)
from .internals import (
    DOMINATED,
    EvalModes,
    Exit,
    InputError,
    QuasidomError,
    qd_context,
    quasidom_version,
    setup_logging,
    value_to_json,
)
from .oracle import MembershipConstraint, gamma_j, gamma_oracle, min_dom, min_dom_bounded
from .reduction import build_gadget, parse_dimacs_cnf, verify_reduction_small, write_gadget
from .sweep import SweepEngine

logger = logging.getLogger(__name__)

REPORT_TEMPLATE = """\
{% for key, value in fields %}
{{ key }}: {{ value }}
{% endfor %}
"""


class RunReport:
    """
    The ordered fields a command reports, plus its exit code.

    Args:
        command: The command name, always the first field.
    """

    def __init__(self, command: str) -> None:
        self.fields = [("command", command)]
        self.return_code = 0

    def add(self, key: str, value: Any) -> "RunReport":
        self.fields.append((key, value))
        return self

    def get(self, key: str) -> Any:
        for name, value in self.fields:
            if name == key:
                return value
        raise KeyError(key)

    def as_dict(self) -> dict:
        return {key: _jsonable(value) for key, value in self.fields}

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2)

    def to_text(self) -> str:
        return qd_context.render(
            REPORT_TEMPLATE, fields=[(key, _text(value)) for key, value in self.fields]
        )


def _jsonable(value: Any) -> Any:
    if isinstance(value, (frozenset, set)):
        return sorted(value)
    if isinstance(value, (list, tuple)):
        return [_jsonable(x) for x in value]
    if isinstance(value, (bool, float, str)) or value is None:
        return value
    return value_to_json(value)


def _text(value: Any) -> str:
    if isinstance(value, (frozenset, set)):
        return " ".join(str(x) for x in sorted(value))
    if isinstance(value, (list, tuple)):
        return " ".join(_text(x) for x in value)
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "-"
    return str(value)


def _digest(path: Path) -> str:
    try:
        return hashlib.sha256(path.read_bytes()).hexdigest()[:16]
    except OSError as e:
        raise InputError(f"unable to read {path}: {e.strerror}")


def _load_graph(args: argparse.Namespace) -> IntervalGraph:
    if args.format == "edges":
        return read_edge_list(args.input)
    return read_intervals(args.input)


def _vertex_list(text: Optional[str]) -> List[int]:
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise InputError(f"expected a comma separated vertex list, got {text!r}")


def _interval_text(g: IntervalGraph) -> List[str]:
    return [f"{format_number(x.left)},{format_number(x.right)}" for x in g.source]


def _elapsed_ms(start: float) -> float:
    return round((time.perf_counter() - start) * 1000, 3)


##########################
#  commands


def cmd_solve(args: argparse.Namespace) -> RunReport:
    """gamma[1,2] of the input graph, optionally with a witness."""
    start = time.perf_counter()
    path = Path(args.input)
    g = _load_graph(args)
    evaluator = GammaEvaluator(g, mode=args.mode)
    value, witness = evaluator.solve()
    cert = is_1j_dominating(g, witness, 2)
    report = RunReport("solve")
    report.add("input", str(path)).add("digest", _digest(path)).add("n", g.n)
    report.add("mode", evaluator.mode).add("gamma12", value)
    if args.witness:
        report.add("witness", witness)
    report.add("witness_valid", cert.valid and len(witness) == value)
    report.add("deviations", len(evaluator.deviations))
    stats = evaluator.memo.stats()
    report.add("memo_entries", stats["entries"]).add("memo_hits", stats["hits"])
    report.add("time_ms", _elapsed_ms(start))
    if not cert.valid:
        report.return_code = 1
    return report


def cmd_oracle(args: argparse.Namespace) -> RunReport:
    """Exact constrained optimum by branch and bound."""
    start = time.perf_counter()
    path = Path(args.input)
    g = _load_graph(args)
    j = None if args.j == "none" else _positive(args.j, "--j")
    c = MembershipConstraint(_vertex_list(args.include), _vertex_list(args.exclude))
    if args.budget is not None:
        result = min_dom_bounded(g, j, args.budget, c)
    else:
        result = min_dom(g, j, c)
    report = RunReport("oracle")
    report.add("input", str(path)).add("digest", _digest(path)).add("n", g.n)
    report.add("j", "none" if j is None else j)
    report.add("value", result.value).add("witness", result.witness)
    report.add("exceeds_budget", result.exceeds_budget)
    report.add("time_ms", _elapsed_ms(start))
    return report


def _positive(text: str, flag: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise InputError(f"{flag} expects a positive integer or 'none', got {text!r}")
    if value < 1:
        raise InputError(f"{flag} expects a positive integer, got {value}")
    return value


def _shrink(intervals: list, failing: Callable[[list], bool]) -> list:
    """Drop the highest numbered interval while the failure persists."""
    while len(intervals) > 1 and failing(intervals[:-1]):
        intervals = intervals[:-1]
    return intervals


class _Fuzzer:
    """
    One differential campaign: the DP against an exact reference.

    Args:
        args: Parsed `fuzz` arguments.
    """

    def __init__(self, args: argparse.Namespace) -> None:
        self.args = args
        self.mode = args.mode
        self.deviations = 0
        self.keys_checked = 0

    def reference(self, g: IntervalGraph) -> Any:
        if self.args.engine == "sweep":
            return SweepEngine(g).value()[0]
        return min_dom(g, 2).value

    def key_reference(self, g: IntervalGraph, sweep: SweepEngine, key) -> Any:
        if self.args.engine == "sweep":
            return sweep.value(*key_constraint(key))[0]
        return gamma_oracle(g, key).value

    def global_failure(self, g: IntervalGraph) -> Optional[dict]:
        evaluator = GammaEvaluator(g, mode=self.mode)
        value, witness = evaluator.solve()
        self.deviations += len(evaluator.deviations)
        expected = self.reference(g)
        if value != expected:
            return {"failure": "value", "dp_value": value, "reference_value": expected}
        cert = is_1j_dominating(g, witness, 2)
        if not cert.valid or len(witness) != value:
            return {"failure": "witness", "dp_value": value, "reference_value": expected}
        if self.args.kind == "unit":
            plain = gamma_j(g, None)
            if plain != value:
                return {"failure": "proper", "dp_value": value, "reference_value": plain}
        return None

    def table_failure(self, g: IntervalGraph) -> Optional[dict]:
        evaluator = GammaEvaluator(g, mode=self.mode)
        sweep = SweepEngine(g)
        for key in iter_keys(g.n):
            got = evaluator.eval(key).value
            if got is DOMINATED:
                continue
            self.keys_checked += 1
            expected = self.key_reference(g, sweep, key)
            if got != expected:
                return {
                    "failure": f"key {key}",
                    "dp_value": got,
                    "reference_value": expected,
                }
        self.deviations += len(evaluator.deviations)
        return None

    def failure(self, intervals: list) -> Optional[dict]:
        g = IntervalGraph.from_intervals(intervals)
        found = self.global_failure(g)
        if found is None and self.args.per_table:
            found = self.table_failure(g)
        return found


def cmd_fuzz(args: argparse.Namespace) -> RunReport:
    """Differential testing of the DP against the oracle (or the sweep engine)."""
    start = time.perf_counter()
    if args.trials < 0 or args.max_n < 1:
        raise InputError("--trials must be >= 0 and --max-n >= 1")
    kind = GenKind.UNIT_INTERVALS if args.kind == "unit" else GenKind.RANDOM_INTERVALS
    fuzzer = _Fuzzer(args)
    master = SplitMix64(args.seed)
    report = RunReport("fuzz")
    report.add("seed", args.seed).add("trials", args.trials).add("max_n", args.max_n)
    report.add("kind", args.kind).add("engine", args.engine).add("mode", args.mode)

    mismatch = None
    strict = None
    collapse_violations = 0
    for trial in range(args.trials):
        spec = GenSpec(kind, 1 + master.below(args.max_n), master.next())
        intervals = generate(spec)
        found = fuzzer.failure(intervals)
        if found is not None:
            logger.warning("trial %d (seed %d) mismatch: %s", trial, spec.seed, found)
            smallest = _shrink(intervals, lambda x: fuzzer.failure(x) is not None)
            g = IntervalGraph.from_intervals(smallest)
            mismatch = dict(fuzzer.failure(smallest), trial=trial, trial_seed=spec.seed)
            mismatch["instance"] = _interval_text(g)
            break
        if args.find_strict or args.collapse:
            g = IntervalGraph.from_intervals(intervals)
            plain = gamma_j(g, None)
            if args.collapse and gamma_j(g, 3) != plain:
                collapse_violations += 1
            if args.find_strict and strict is None and plain < gamma_j(g, 2):
                strict = (spec.seed, _interval_text(g))

    report.add("mismatches", 0 if mismatch is None else 1)
    report.add("keys_checked", fuzzer.keys_checked)
    report.add("deviations", fuzzer.deviations)
    if args.collapse:
        report.add("collapse_violations", collapse_violations)
    if args.find_strict:
        report.add("strict_found", strict is not None)
        if strict is not None:
            report.add("strict_seed", strict[0]).add("strict_instance", strict[1])
    if mismatch is not None:
        for key in ("trial", "trial_seed", "failure", "dp_value", "reference_value", "instance"):
            report.add(key, mismatch[key])
        report.return_code = 1
    elif collapse_violations:
        report.return_code = 1
    report.add("time_ms", _elapsed_ms(start))
    return report


def cmd_reduce(args: argparse.Namespace) -> RunReport:
    """Build the circle gadget of a DIMACS cnf formula and write it out."""
    formula = parse_dimacs_cnf(args.cnf)
    inst = build_gadget(formula)
    diagram_path, labels_path = write_gadget(inst, args.out)
    report = RunReport("reduce")
    report.add("cnf", str(args.cnf)).add("digest", _digest(Path(args.cnf)))
    report.add("m", inst.m).add("t", inst.t).add("k", inst.k).add("chords", len(inst.diagram))
    report.add("out", str(diagram_path)).add("labels", str(labels_path))
    return report


def cmd_verify_reduction(args: argparse.Namespace) -> RunReport:
    """Check the reduction's two directions on one small formula."""
    start = time.perf_counter()
    formula = parse_dimacs_cnf(args.cnf)
    result = verify_reduction_small(formula, cap=args.cap)
    report = RunReport("verify-reduction")
    report.add("cnf", str(args.cnf)).add("digest", _digest(Path(args.cnf)))
    report.add("sat", result.sat).add("k", result.k).add("chords", result.chords)
    report.add("min", result.min_value).add("within_k", result.within_k)
    report.add("below_k", result.below_k)
    decoded = None
    if result.decoded is not None:
        decoded = [int(x) for x in result.decoded.values]
    report.add("decoded", decoded).add("decoded_satisfies", result.decoded_satisfies)
    report.add("anchors_chosen", result.anchors_chosen).add("agree", result.agree)
    report.add("time_ms", _elapsed_ms(start))
    if not result.agree or result.below_k or result.decoded_satisfies is False:
        report.return_code = 1
    return report


def _sizes(text: str) -> List[int]:
    try:
        sizes = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise InputError(f"--sizes expects a comma separated list of integers, got {text!r}")
    if not sizes or any(x < 1 for x in sizes):
        raise InputError("--sizes needs at least one positive size")
    if any(b <= a for a, b in zip(sizes, sizes[1:])):
        raise InputError(f"--sizes must be strictly ascending, got {sizes}")
    return sizes


def cmd_bench(args: argparse.Namespace) -> RunReport:
    """Median solve time per size and the fitted log-log slope."""
    sizes = _sizes(args.sizes)
    if args.repeat < 1:
        raise InputError(f"--repeat must be positive, got {args.repeat}")
    mode = args.mode
    medians = []
    values = []
    for n in sizes:
        intervals = gen_intervals(GenSpec(GenKind.RANDOM_INTERVALS, n, args.seed, {"span": 2 * n}))
        g = IntervalGraph.from_intervals(intervals)
        times = []
        for _ in range(args.repeat):
            start = time.perf_counter()
            GammaEvaluator(g, mode=mode).root_value()
            times.append(time.perf_counter() - start)
        medians.append(statistics.median(times))
        #  solve checks the root and the witness in every mode
        values.append(GammaEvaluator(g, mode=mode).solve().value)
        logger.info("bench n=%d median %.4fs", n, medians[-1])
    report = RunReport("bench")
    report.add("seed", args.seed).add("mode", mode).add("repeat", args.repeat)
    report.add("sizes", sizes).add("gamma12", values)
    report.add("median_ms", [round(x * 1000, 3) for x in medians])
    if len(sizes) > 1:
        slope = numpy.polyfit(numpy.log(sizes), numpy.log(medians), 1)[0]
        report.add("slope", round(float(slope), 3))
    return report


COMMANDS = {
    "solve": cmd_solve,
    "oracle": cmd_oracle,
    "fuzz": cmd_fuzz,
    "reduce": cmd_reduce,
    "verify-reduction": cmd_verify_reduction,
    "bench": cmd_bench,
}


def parse_args(argv: Optional[List[str]] = None) -> argparse.Namespace:
    """
    The main CLI argument parser.

    Global flags may be given before or after the command name.

    Returns:
        The parsed arguments.
    """
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--json",
        action="store_true",
        default=argparse.SUPPRESS,
        help="Print the report as one JSON document.",
    )
    common.add_argument(
        "--debug",
        action="store_true",
        default=argparse.SUPPRESS,
        help="Log debugging information to stderr.",
    )
    common.add_argument(
        "--mode",
        choices=EvalModes,
        default=argparse.SUPPRESS,
        help="Evaluator mode (default QUASIDOM_MODE, else literal; bench: literal).",
    )

    parser = argparse.ArgumentParser(
        prog="quasidom",
        description="Minimum [1,2]-dominating sets of interval graphs, and the circle graph reduction.",
        parents=[common],
    )
    parser.add_argument(
        "--version",
        action="version",
        version=f"quasidom version: {quasidom_version}",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_input(p: argparse.ArgumentParser) -> None:
        p.add_argument("input", type=str, help="Input file.")
        p.add_argument(
            "--format",
            choices=("intervals", "edges"),
            default="intervals",
            help="Input format: 'left right' lines, or a numbered DIMACS-style edge list.",
        )

    p = sub.add_parser("solve", parents=[common], help="Compute gamma[1,2] with the DP.")
    graph_input(p)
    p.add_argument("--witness", action="store_true", help="Also print a minimum set.")

    p = sub.add_parser("oracle", parents=[common], help="Exact search, optionally constrained.")
    graph_input(p)
    p.add_argument("--j", default="2", help="Upper bound j of [1,j], or 'none' (default 2).")
    p.add_argument("--include", help="Comma separated vertices that must be chosen.")
    p.add_argument("--exclude", help="Comma separated vertices that must not be chosen.")
    p.add_argument("--budget", type=int, help="Only look for sets of at most this size.")

    p = sub.add_parser("fuzz", parents=[common], help="Differential test against an exact engine.")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--max-n", type=int, default=12)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--kind", choices=("intervals", "unit"), default="intervals")
    p.add_argument("--engine", choices=("oracle", "sweep"), default="oracle")
    p.add_argument("--per-table", action="store_true", help="Also compare every gamma key.")
    p.add_argument("--find-strict", action="store_true", help="Look for gamma < gamma[1,2].")
    p.add_argument("--collapse", action="store_true", help="Check gamma[1,3] == gamma.")

    p = sub.add_parser("reduce", parents=[common], help="Build the circle gadget of a formula.")
    p.add_argument("--cnf", required=True, help="DIMACS cnf input.")
    p.add_argument("--out", required=True, help="Chord diagram output path.")

    p = sub.add_parser(
        "verify-reduction", parents=[common], help="Check the reduction on a small formula."
    )
    p.add_argument("--cnf", required=True, help="DIMACS cnf input.")
    p.add_argument("--cap", type=int, default=None, help="Vertex cap for the exact search.")

    p = sub.add_parser("bench", parents=[common], help="Time the DP on growing random graphs.")
    p.add_argument("--sizes", default="50,100,200", help="Ascending comma separated sizes.")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--repeat", type=int, default=5)

    args = parser.parse_args(argv)
    args.json = getattr(args, "json", False)
    args.debug = getattr(args, "debug", False)
    mode = getattr(args, "mode", None)
    if mode is None:
        #  bench times the exact recurrences unless told otherwise
        mode = "literal" if args.command == "bench" else qd_context.mode
    args.mode = mode
    return args


def cli(argv: Optional[List[str]] = None) -> None:
    """
    The main entry point for the CLI.
    """
    args = parse_args(argv)
    setup_logging(logging.DEBUG if args.debug else logging.WARNING)

    start = time.perf_counter()
    return_code = 0
    status = "ok"
    try:
        report = COMMANDS[args.command](args)
        output = report.to_json() if args.json else report.to_text()
        qd_context.console.print(output, end="", markup=False, highlight=False, soft_wrap=True)
        return_code = report.return_code
        if return_code:
            raise Exit("property violation", return_code)
    except Exit as e:
        return_code = e.return_code
        status = str(e)
    except QuasidomError as e:
        return_code = e.exit_code
        status = type(e).__name__
        qd_context.err_console.print(f"[bold red]ERROR:[/] {escape(str(e))}", highlight=False)
    except Exception:
        qd_context.err_console.print(traceback.format_exc(), markup=False)
        return_code = 1
        status = "crash"

    recap_msg = "*** RECAP"
    recap_msg = f"[bold red]{recap_msg}[/]" if return_code else f"[green]{recap_msg}[/]"
    qd_context.err_console.print(
        f"{recap_msg}:  command={args.command} status={status} exit={return_code}"
        f" elapsed_ms={_elapsed_ms(start)}",
        markup=True,
        highlight=True,
    )
    sys.exit(return_code)


if __name__ == "__main__":
    cli()
