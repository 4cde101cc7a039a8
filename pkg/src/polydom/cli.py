"""Command-line front end: ``polydom <command> ...``.

Every command prints a report (JSON or ``key: value`` text) on stdout.
Exit status is 0 on success, 1 on input or usage errors and 2 when the
instance is infeasible or a verdict fails.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import sys
import time
from pathlib import Path
from typing import Any, Sequence

from .geom_model import (
    InvalidModelError,
    ParseError,
    UnsupportedOperationError,
    _content_lines,
    _ints,
    parse_model,
    random_polygon_model,
    serialize_model,
)
from .oracles import (
    DEFAULT_SET_CAP,
    CapExceededError,
    is_dominating_set,
    is_paired_dominating_set,
    min_dominating_set_bruteforce,
    min_paired_dominating_set_bruteforce,
    parse_digraph,
    random_digraph,
    serialize_digraph,
)
from .polygon_solver import (
    SolverStats,
    SubproblemTooLargeError,
    solve_min_ds_polygon,
    solve_min_pds_polygon,
)
from .reduction import (
    ReductionError,
    WitnessError,
    build_reduction,
    ham_path_from_pds,
    load_artifact,
    parse_name_table,
    pds_from_ham_path,
    serialize_name_table,
    validate_reduction,
)

SCHEMA_VERSION = "polydom-report/1"
EXIT_OK, EXIT_INPUT, EXIT_FAIL = 0, 1, 2

_INPUT_ERRORS = (
    ParseError,
    InvalidModelError,
    UnsupportedOperationError,
    CapExceededError,
    SubproblemTooLargeError,
    ReductionError,
    OSError,
)


class UsageError(ValueError):
    pass


class Run:
    """Collects one command's report and its input digest."""

    def __init__(self, argv: Sequence[str], seed: int | None) -> None:
        self.start = time.perf_counter()
        self.digest = hashlib.sha256()
        self.fields: dict[str, Any] = {
            "schema": SCHEMA_VERSION,
            "command": list(argv),
            "input_digest": None,
            "solution": None,
            "size": None,
            "feasible": None,
            "duration_s": None,
            "seed": seed,
            "verdicts": {},
        }

    def read(self, path: str) -> str:
        data = Path(path).read_bytes()
        self.digest.update(data)
        self.fields["input_digest"] = self.digest.hexdigest()
        return data.decode()

    def solution(self, ids, feasible: bool = True) -> None:
        if ids is None:
            self.fields.update(solution=None, size=None, feasible=False)
        else:
            ids = sorted(ids)
            self.fields.update(solution=ids, size=len(ids), feasible=feasible)

    def verdict(self, name: str, ok: bool) -> bool:
        self.fields["verdicts"][name] = "pass" if ok else "fail"
        return ok

    def finish(self) -> dict[str, Any]:
        self.fields["duration_s"] = round(time.perf_counter() - self.start, 6)
        return self.fields


def _render(report: dict[str, Any], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2, sort_keys=True) + "\n"
    lines = []
    for key, value in report.items():
        if isinstance(value, dict):
            value = ", ".join(f"{k}={v}" for k, v in value.items()) or "-"
        elif isinstance(value, list):
            value = " ".join(str(v) for v in value)
        lines.append(f"{key}: {value}")
    return "\n".join(lines) + "\n"


def _read_ints(run: Run, path: str) -> list[int]:
    out: list[int] = []
    for lineno, toks in _content_lines(run.read(path)):
        out.extend(_ints(toks, lineno))
    return out


# ---------------------------------------------------------------------------
# commands

def cmd_solve(args: argparse.Namespace, run: Run) -> int:
    model = parse_model(run.read(args.input))
    g = model.graph
    if args.engine == "polygon":
        if model.sides is None:
            raise UsageError("the polygon engine needs a 'poly v1' model")
        stats = SolverStats()
        if args.kind == "ds":
            sol = solve_min_ds_polygon(model, jobs=args.jobs, stats=stats)
        else:
            sol = solve_min_pds_polygon(model, jobs=args.jobs, stats=stats)
        run.fields["candidates"] = stats.candidates
    elif args.kind == "ds":
        sol = min_dominating_set_bruteforce(g, cap=args.oracle_cap)
    else:
        sol = min_paired_dominating_set_bruteforce(g, cap=args.oracle_cap)
    run.fields.update(kind=args.kind, engine=args.engine, chords=model.m)
    run.solution(sol)
    if sol is None:
        return EXIT_FAIL
    check = is_dominating_set if args.kind == "ds" else is_paired_dominating_set
    name = "dominating" if args.kind == "ds" else "paired_dominating"
    return EXIT_OK if run.verdict(name, check(g, sol)) else EXIT_FAIL


def cmd_reduce(args: argparse.Namespace, run: Run) -> int:
    digraph = parse_digraph(run.read(args.input))
    art = build_reduction(digraph)
    names_path = args.names or f"{args.out}.names"
    Path(args.out).write_text(serialize_model(art.model))
    Path(names_path).write_text(serialize_name_table(art))
    report = validate_reduction(art)
    run.fields.update(
        n=digraph.n, m=digraph.m, chords=art.model.m, target=art.target,
        model_file=args.out, names_file=names_path, violations=report.violations,
    )
    return EXIT_OK if run.verdict("structure", report.ok) else EXIT_FAIL


def _load_artifact(args: argparse.Namespace, run: Run):
    digraph = parse_digraph(run.read(args.digraph))
    model = parse_model(run.read(args.model))
    names_path = args.names or f"{args.model}.names"
    names = parse_name_table(run.read(names_path))
    try:
        return load_artifact(digraph, model, names)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_witness(args: argparse.Namespace, run: Run) -> int:
    art = _load_artifact(args, run)
    values = _read_ints(run, args.witness)
    try:
        if args.direction == "to-pds":
            chords = pds_from_ham_path(art, values)
            run.solution(chords)
            ok = is_paired_dominating_set(art.model.graph, chords) and len(chords) == art.target
            run.verdict("paired_dominating", ok)
        else:
            path = ham_path_from_pds(art, values)
            run.fields.update(solution=list(path), size=len(path), feasible=True)
            ok = run.verdict("hamiltonian_path", art.digraph.is_hamiltonian_path(path))
    except WitnessError as exc:
        run.fields.update(feasible=False, reason=str(exc))
        run.verdict("witness", False)
        return EXIT_FAIL
    return EXIT_OK if ok else EXIT_FAIL


def cmd_validate(args: argparse.Namespace, run: Run) -> int:
    if args.digraph:
        art = _load_artifact(args, run)
        report = validate_reduction(art)
        run.fields.update(chords=art.model.m, target=art.target, violations=report.violations)
        return EXIT_OK if run.verdict("structure", report.ok) else EXIT_FAIL
    if args.names:
        raise UsageError("--names needs --digraph")
    model = parse_model(run.read(args.model))
    run.fields.update(chords=model.m, sides=model.k, edges=len(model.graph.edges()))
    run.verdict("model", True)
    return EXIT_OK


def cmd_gen(args: argparse.Namespace, run: Run) -> int:
    seed = 0 if args.seed is None else args.seed
    run.fields["seed"] = seed
    if args.kind == "polygon":
        if args.k is None or args.m is None:
            raise UsageError("gen polygon needs --k and --m")
        if args.k < 3 or args.m < 1:
            raise UsageError("need k >= 3 and m >= 1")
        text = serialize_model(random_polygon_model(args.k, args.m, seed))
    else:
        if args.n is None:
            raise UsageError("gen digraph needs --n")
        if args.n < 1 or not 0.0 <= args.p <= 1.0:
            raise UsageError("need n >= 1 and 0 <= p <= 1")
        text = serialize_digraph(random_digraph(args.n, args.p, seed))
    run.fields["sha256"] = hashlib.sha256(text.encode()).hexdigest()
    if args.out is None:
        # the generated file is the output; no report on stdout
        sys.stdout.write(text)
        return EXIT_OK
    Path(args.out).write_text(text)
    run.fields["output"] = args.out
    return EXIT_OK


BENCH_HEADER = ("k", "m", "candidates", "runtime_s")


def bench_rows(ks: Sequence[int], ms: Sequence[int], seeds: int, base_seed: int, jobs: int = 1) -> list[tuple]:
    """Candidate count and runtime summed over ``seeds`` instances per grid cell."""
    rows = []
    for k in ks:
        for m in ms:
            stats = SolverStats()
            t0 = time.perf_counter()
            for s in range(seeds):
                model = random_polygon_model(k, m, base_seed + s)
                solve_min_pds_polygon(model, jobs=jobs, stats=stats)
            rows.append((k, m, stats.candidates, round(time.perf_counter() - t0, 6)))
    return rows


def cmd_bench(args: argparse.Namespace, run: Run) -> int:
    if any(k < 3 for k in args.k) or any(m < 1 for m in args.m) or args.seeds < 1:
        raise UsageError("need k >= 3, m >= 1 and seeds >= 1")
    seed = 0 if args.seed is None else args.seed
    run.fields["seed"] = seed
    rows = bench_rows(args.k, args.m, args.seeds, seed, args.jobs)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(BENCH_HEADER)
    writer.writerows(rows)
    Path(args.out).write_text(buf.getvalue())
    run.fields.update(output=args.out, rows=len(rows))
    if args.plot:
        _plot(rows, args.plot)
        run.fields["plot"] = args.plot
    return EXIT_OK


def _plot(rows: list[tuple], path: str) -> None:
    try:
        import matplotlib

        matplotlib.use("Agg")
        import matplotlib.pyplot as plt
    except ImportError:
        raise UsageError("--plot needs matplotlib") from None
    fig, ax = plt.subplots(figsize=(5, 3.5))
    for k in sorted({r[0] for r in rows}):
        pts = [(r[1], r[2]) for r in rows if r[0] == k]
        ax.plot([p[0] for p in pts], [p[1] for p in pts], marker="o", label=f"k={k}")
    ax.set_xlabel("chords m")
    ax.set_ylabel("boundary candidates")
    ax.set_yscale("log")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


# ---------------------------------------------------------------------------
# argument parsing

def _global_flags(p: argparse.ArgumentParser, defaults: bool) -> None:
    # subcommands repeat the flags without defaults so they never mask a value given earlier
    def d(value: Any) -> Any:
        return value if defaults else argparse.SUPPRESS

    p.add_argument("--format", choices=("json", "text"), default=d("json"))
    p.add_argument("--seed", type=int, default=d(None))
    p.add_argument("--jobs", type=int, default=d(1))
    p.add_argument("--oracle-cap", type=int, default=d(DEFAULT_SET_CAP))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="polydom", description=__doc__.splitlines()[0])
    _global_flags(parser, defaults=True)
    sub = parser.add_subparsers(dest="command", required=True)
    _add = sub.add_parser

    def add_parser(name: str, **kw: Any) -> argparse.ArgumentParser:
        p = _add(name, **kw)
        _global_flags(p, defaults=False)
        return p

    sub.add_parser = add_parser  # type: ignore[method-assign]

    p = sub.add_parser("solve", help="minimum (paired-)dominating set of a model file")
    p.add_argument("kind", choices=("ds", "pds"))
    p.add_argument("input")
    p.add_argument("--engine", choices=("polygon", "oracle"), default="polygon")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("reduce", help="build the circle model of a digraph")
    p.add_argument("input", help="digraph v1 file")
    p.add_argument("--out", required=True, help="circle v1 model path")
    p.add_argument("--names", help="name table path (default: OUT.names)")
    p.set_defaults(func=cmd_reduce)

    def artifact_args(p: argparse.ArgumentParser, required: bool) -> None:
        p.add_argument("--digraph", required=required)
        p.add_argument("--model", required=required)
        p.add_argument("--names", help="name table path (default: MODEL.names)")

    p = sub.add_parser("witness", help="convert a path to a chord set or back")
    p.add_argument("direction", choices=("to-pds", "to-path"))
    p.add_argument("witness", help="file of whitespace-separated vertices or chord ids")
    artifact_args(p, True)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("validate", help="check a model file or a reduction artifact")
    p.add_argument("--model", required=True)
    p.add_argument("--digraph")
    p.add_argument("--names")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("gen", help="generate a random instance")
    p.add_argument("kind", choices=("polygon", "digraph"))
    p.add_argument("--k", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="candidate counts and runtimes over a seeded grid")
    p.add_argument("--k", type=int, nargs="*", default=[3, 4])
    p.add_argument("--m", type=int, nargs="*", default=[2, 4, 6, 8])
    p.add_argument("--seeds", type=int, default=3)
    p.add_argument("--out", required=True, help="CSV path")
    p.add_argument("--plot", help="optional PNG path")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    if args.jobs < 1:
        print("error: --jobs must be at least 1", file=sys.stderr)
        return EXIT_INPUT
    run = Run(argv, args.seed)
    try:
        code = args.func(args, run)
    except (UsageError, *_INPUT_ERRORS) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.command == "gen" and args.out is None:
        return code
    sys.stdout.write(_render(run.finish(), args.format))
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
