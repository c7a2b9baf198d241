"""Command line entry point: clone, run, mine, analyze, report.

Exit codes are stable: 0 success, 1 not-found or snippet failure, 2 IO,
3 container runtime unavailable, 4 no environment spec, 5 network,
6 phase ordering, 64 usage.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .errors import (
    GatingError,
    MineError,
    SnipharnessError,
    SnippetNotFound,
    StoreError,
    ValidationError,
)
from .harness import (
    DEFAULT_TIMEOUT,
    DockerRuntime,
    FakeRuntime,
    execute_one,
    latest_class_by_id,
    prepare_context,
    run_phase,
)
from .inference import (
    LookupStrategy,
    NaiveStrategy,
    apply_spec,
    bundled_lookup_table,
    infer_spec,
    load_lookup_table,
    prune_to_installed,
)
from .mining import HttpApiClient, MineQuery, ReplayApiClient, mine
from .records import (
    IMPORT_ERROR_FAMILY,
    OUTCOME_SUCCESS,
    PHASE_BASE_IMAGES,
    PHASES,
    EnvironmentSpec,
    parse_timestamp,
)
from .reporting import (
    compute_gain,
    corpus_metrics,
    format_table,
    tabulate,
)
from .stdlib import bundled_manifest
from .store import CorpusStore

EXIT_OK = 0
EXIT_NOT_FOUND = 1
EXIT_IO = 2
EXIT_RUNTIME_UNAVAILABLE = 3
EXIT_NO_SPEC = 4
EXIT_NETWORK = 5
EXIT_PHASE_ORDER = 6
EXIT_USAGE = 64

STORE_ENV = "SNIPHARNESS_STORE"
SHIM_ENV = "SNIPHARNESS_SHIM"


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="snipharness", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_store(p):
        p.add_argument(
            "--store",
            default=None,
            help=f"corpus directory (default: ${STORE_ENV} or ./corpus)",
        )

    clone = sub.add_parser("clone", help="copy a snippet into a directory")
    clone.add_argument("id")
    clone.add_argument("location", nargs="?", default=".")
    clone.add_argument(
        "--remote", action="store_true", help="fetch from the live API on a store miss"
    )
    clone.add_argument("--api-base", default="https://api.github.com")
    add_store(clone)

    run = sub.add_parser("run", help="build and execute one snippet")
    run.add_argument("id")
    run.add_argument("--fake-runtime", metavar="SCENARIO", default=None)
    run.add_argument("--no-infer", action="store_true")
    run.add_argument("--base-image", default="python:2.7.13")
    run.add_argument("--strategy", choices=("naive", "naive-top", "lookup"), default="naive")
    run.add_argument("--lookup-table", default=None)
    run.add_argument("--timeout", type=float, default=DEFAULT_TIMEOUT)
    run.add_argument("--no-network", action="store_true")
    run.add_argument("--shim-file", default=None)
    run.add_argument("--no-shim", action="store_true")
    add_store(run)

    mine_p = sub.add_parser("mine", help="enumerate and store snippets")
    mine_p.add_argument("--since", required=True)
    mine_p.add_argument("--until", required=True)
    mine_p.add_argument("--min-stars", type=int, default=1)
    mine_p.add_argument("--language", default="Python")
    mine_p.add_argument("--max", type=int, default=1000)
    mine_p.add_argument("--page-size", type=int, default=100)
    mine_p.add_argument("--replay", metavar="DIR", default=None)
    mine_p.add_argument("--api-base", default="https://api.github.com")
    add_store(mine_p)

    analyze = sub.add_parser("analyze", help="execute a phase over the corpus")
    analyze.add_argument("--phase", required=True, choices=PHASES)
    analyze.add_argument("--base-image", default=None)
    analyze.add_argument("--strategy", choices=("naive", "naive-top", "lookup"), default="naive")
    analyze.add_argument("--lookup-table", default=None)
    analyze.add_argument("--workers", type=int, default=os.cpu_count() or 1)
    analyze.add_argument("--timeout", type=float, default=DEFAULT_TIMEOUT)
    analyze.add_argument("--fake-runtime", metavar="SCENARIO", default=None)
    analyze.add_argument("--ids", metavar="FILE", default=None, help="id list, one per line")
    analyze.add_argument("--no-network", action="store_true")
    analyze.add_argument("--shim-file", default=None)
    analyze.add_argument("--no-shim", action="store_true")
    add_store(analyze)

    report = sub.add_parser("report", help="tables, gains, and corpus metrics")
    report.add_argument("--phase", default=None)
    report.add_argument("--gain", metavar="FROM:TO", default=None)
    report.add_argument("--metrics", action="store_true")
    report.add_argument("--format", choices=("text", "json"), default="text")
    add_store(report)

    return parser


def _resolve_store(args) -> CorpusStore:
    root = args.store or os.environ.get(STORE_ENV) or "./corpus"
    return CorpusStore(root)


def _resolve_strategy(args):
    if args.strategy == "naive":
        return NaiveStrategy()
    if args.strategy == "naive-top":
        return NaiveStrategy(top_level=True)
    table = (
        load_lookup_table(args.lookup_table)
        if args.lookup_table
        else bundled_lookup_table()
    )
    return LookupStrategy(table)


def _resolve_shim(args) -> Path | None:
    if getattr(args, "no_shim", False):
        return None
    candidate = getattr(args, "shim_file", None) or os.environ.get(SHIM_ENV)
    if candidate and Path(candidate).is_file():
        return Path(candidate)
    return None


def _resolve_runtime(args):
    if args.fake_runtime:
        return FakeRuntime.from_scenario(args.fake_runtime)
    engine = "docker"
    if not DockerRuntime.available(engine):
        print(
            "error: no container runtime available; install and start docker, "
            "or pass --fake-runtime <scenario.json> for a scripted run",
            file=sys.stderr,
        )
        return None
    return DockerRuntime(engine, network=not getattr(args, "no_network", False))


def cmd_clone(args) -> int:
    store = _resolve_store(args)
    try:
        record = store.get_snippet(args.id)
    except SnippetNotFound:
        if not args.remote:
            print(f"error: unknown snippet {args.id!r}", file=sys.stderr)
            return EXIT_NOT_FOUND
        try:
            from .mining import record_from_gist

            gist = HttpApiClient(args.api_base).fetch(args.id)
            record = record_from_gist(gist, gist.get("language", "Python") or "Python")
        except (MineError, ValidationError, KeyError) as exc:
            print(f"error: cannot fetch {args.id!r}: {exc}", file=sys.stderr)
            return EXIT_NOT_FOUND
    except StoreError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    try:
        destination = Path(args.location)
        destination.mkdir(parents=True, exist_ok=True)
        (destination / record.filename).write_text(record.source, encoding="utf-8")
    except OSError as exc:
        print(f"error: cannot write snippet: {exc}", file=sys.stderr)
        return EXIT_IO
    print(destination / record.filename)
    return EXIT_OK


def cmd_run(args) -> int:
    store = _resolve_store(args)
    try:
        record = store.get_snippet(args.id)
    except SnippetNotFound:
        print(f"error: unknown snippet {args.id!r}", file=sys.stderr)
        return EXIT_NOT_FOUND
    except StoreError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO

    runtime = _resolve_runtime(args)
    if runtime is None:
        return EXIT_RUNTIME_UNAVAILABLE

    context = store.record_dir(record.id)
    dockerfile_path = context / "Dockerfile"
    report = None
    if not dockerfile_path.is_file():
        if args.no_infer:
            print(
                f"error: no Dockerfile stored for {args.id!r} and inference disabled",
                file=sys.stderr,
            )
            return EXIT_NO_SPEC
        manifest = bundled_manifest(args.base_image)
        spec = infer_spec(record, manifest, _resolve_strategy(args), args.base_image)
        report = apply_spec(spec, runtime)
        spec = prune_to_installed(spec, report)
        prepare_context(store, record, spec, shim_path=_resolve_shim(args))
    else:
        spec = EnvironmentSpec(base_image=args.base_image, entry_file=record.filename)

    outcome = execute_one(
        record,
        spec,
        runtime,
        args.timeout,
        phase="baseline-v2",
        context_dir=context,
        install_report=report,
    )
    if outcome.stdout_tail:
        sys.stdout.write(outcome.stdout_tail)
        if not outcome.stdout_tail.endswith("\n"):
            sys.stdout.write("\n")
    if outcome.stderr_tail:
        sys.stderr.write(outcome.stderr_tail)
        if not outcome.stderr_tail.endswith("\n"):
            sys.stderr.write("\n")
    print(outcome.outcome_class)
    return EXIT_OK if outcome.outcome_class == OUTCOME_SUCCESS else EXIT_NOT_FOUND


def cmd_mine(args) -> int:
    if args.max < 1:
        raise _UsageError("--max must be positive")
    if args.page_size < 1 or args.page_size > 100:
        raise _UsageError("--page-size must be in 1..100")
    try:
        query = MineQuery(
            window_start=parse_timestamp(args.since),
            window_end=parse_timestamp(args.until),
            max_records=args.max,
            language_tag=args.language,
            min_stars=args.min_stars,
            page_size=args.page_size,
        )
    except ValidationError as exc:
        raise _UsageError(str(exc)) from exc
    store = _resolve_store(args)
    client = ReplayApiClient(args.replay) if args.replay else HttpApiClient(args.api_base)
    try:
        count = mine(query, client, store)
    except MineError as exc:
        if isinstance(exc.__cause__, StoreError):
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_IO
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NETWORK
    print(f"mined {count}")
    return EXIT_OK


def cmd_analyze(args) -> int:
    store = _resolve_store(args)
    if args.ids:
        try:
            ids = [
                line.strip()
                for line in Path(args.ids).read_text(encoding="utf-8").splitlines()
                if line.strip()
            ]
        except OSError as exc:
            print(f"error: cannot read id list: {exc}", file=sys.stderr)
            return EXIT_IO
    else:
        ids = store.list_ids()

    runtime = _resolve_runtime(args)
    if runtime is None:
        return EXIT_RUNTIME_UNAVAILABLE

    base_image = args.base_image or PHASE_BASE_IMAGES[args.phase]
    if args.workers < 1:
        raise _UsageError("--workers must be positive")

    if args.phase.startswith("post-inference"):
        baseline = latest_class_by_id(store.iter_results(), "baseline-v2")
        if not baseline:
            print(
                "error: no baseline-v2 results yet; run "
                "`analyze --phase baseline-v2` first",
                file=sys.stderr,
            )
            return EXIT_PHASE_ORDER
        eligible = []
        for snippet_id in ids:
            cls = baseline.get(snippet_id)
            if cls in IMPORT_ERROR_FAMILY:
                eligible.append(snippet_id)
            else:
                reason = cls if cls is not None else "no baseline result"
                print(f"skipping {snippet_id}: not eligible ({reason})")
        ids = eligible

    try:
        outcomes = run_phase(
            ids,
            args.phase,
            base_image,
            _resolve_strategy(args),
            runtime,
            args.workers,
            store=store,
            timeout=args.timeout,
            shim_path=_resolve_shim(args),
        )
    except GatingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PHASE_ORDER
    print(f"{len(outcomes)} results appended to {store.results_path}")
    return EXIT_OK


def cmd_report(args) -> int:
    store = _resolve_store(args)
    results = list(store.iter_results())
    sections: list[tuple[str, object]] = []

    phases = [args.phase] if args.phase else []
    gain_pair = None
    if args.gain:
        if ":" not in args.gain:
            raise _UsageError("--gain expects FROM:TO")
        gain_pair = tuple(args.gain.split(":", 1))
    default_everything = not args.phase and not args.gain and not args.metrics
    if default_everything:
        phases = [p for p in PHASES if any(r.get("phase") == p for r in results)]

    for phase in phases:
        sections.append(("phase", (phase, tabulate(results, phase))))
    if gain_pair:
        sections.append(("gain", compute_gain(results, *gain_pair)))
    if args.metrics or default_everything:
        sections.append(("metrics", corpus_metrics(store)))

    if args.format == "json":
        payload: dict = {}
        for kind, value in sections:
            if kind == "phase":
                phase, rows = value
                payload.setdefault("phases", {})[phase] = [
                    {
                        "outcome_class": r.outcome_class,
                        "count": r.count,
                        "percent": round(r.percent, 1),
                    }
                    for r in rows
                ]
            elif kind == "gain":
                payload["gain"] = {
                    "from_phase": value.from_phase,
                    "to_phase": value.to_phase,
                    "eligible": value.eligible,
                    "left_import_error_family": value.left_family,
                    "newly_successful": value.newly_successful,
                }
            else:
                payload["metrics"] = {
                    "snippet_count": value.snippet_count,
                    "mean_lines": value.mean_lines,
                    "unique_third_party": value.unique_third_party,
                }
        print(json.dumps(payload, indent=2, sort_keys=True))
        return EXIT_OK

    first = True
    for kind, value in sections:
        if not first:
            print()
        first = False
        if kind == "phase":
            phase, rows = value
            print(f"[{phase}]")
            print(format_table(rows))
        elif kind == "gain":
            print(f"[gain {value.from_phase} -> {value.to_phase}]")
            print(f"eligible (ImportError family): {value.eligible}")
            print(f"left the family:               {value.left_family}")
            print(f"newly successful:              {value.newly_successful}")
        else:
            print("[corpus]")
            print(f"snippets:            {value.snippet_count}")
            print(f"mean lines of code:  {value.mean_lines}")
            print(f"unique third-party:  {value.unique_third_party}")
    return EXIT_OK


_COMMANDS = {
    "clone": cmd_clone,
    "run": cmd_run,
    "mine": cmd_mine,
    "analyze": cmd_analyze,
    "report": cmd_report,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SnipharnessError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
