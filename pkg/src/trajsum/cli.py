"""Command-line toolkit tying ingestion, segmentation and the metrics together.

Subcommands: summarize, baseline, metrics, taxonomy, diversity, entropy-rate,
rank, synth, stats. Exit codes: 0 success, 1 usage error, 2 data error.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import asdict, replace
from functools import partial

from trajsum import diversity as div
from trajsum import entropy, rank, rle, synth, taxonomy
from trajsum.core import dataset_stats
from trajsum.pipeline import (
    SUMMARY_HEADER,
    DataError,
    IngestReport,
    OutputDir,
    ingest,
    parse_delta,
    segment_rows,
    summary_rows,
    write_trajectories_csv,
)
from trajsum.seqscan import (
    SeqScanParams,
    dataset_goodness,
    dataset_summarization_rate,
    summarize_dataset,
)
from trajsum._parallel import parallel_map


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _occurrence_threshold(text: str) -> int:
    value = int(text)
    if value < 2:
        raise ValueError("occurrence threshold must be at least 2")
    return value


def _workers(text: str) -> int:
    value = int(text)
    if value < 1:
        raise ValueError("workers must be at least 1")
    return value


def _int_list(text: str) -> list[int]:
    return [_occurrence_threshold(part) for part in text.split(",") if part]


def _delta_list(text: str) -> list[float]:
    return [parse_delta(part) for part in text.split(",") if part]


def _add_io_args(p: argparse.ArgumentParser, with_params: bool = True) -> None:
    p.add_argument("--input", required=True, help="input trajectory CSV")
    p.add_argument("--output-dir", required=True, help="directory for result files")
    p.add_argument("--workers", type=_workers, default=1,
                   help="worker processes (default 1)")
    p.add_argument("--format", choices=("csv", "json"), default="csv",
                   dest="fmt", help="per-user table format (default csv)")
    p.add_argument("--strict", action="store_true",
                   help="fail on malformed input rows instead of skipping them")
    p.add_argument("--seed", type=int, default=0,
                   help="random seed (only randomized commands use it)")
    if with_params:
        p.add_argument("-N", dest="n_min", type=_occurrence_threshold, default=2,
                       help="minimum occurrences for a dominant location (default 2)")
        p.add_argument("--delta", type=parse_delta, default=16 * 60.0,
                       help="minimum weight, seconds or suffixed 16m/1h/0.0111d "
                            "(default 16m)")


def _build_parser() -> _Parser:
    parser = _Parser(prog="trajsum", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("summarize", help="extract attractive-location summaries")
    _add_io_args(p)
    p.set_defaults(func=cmd_summarize)

    p = sub.add_parser("baseline", help="constrained run-length baseline")
    _add_io_args(p)
    p.set_defaults(func=cmd_baseline)

    p = sub.add_parser("metrics", help="summarization rate/goodness over a grid")
    _add_io_args(p, with_params=False)
    p.add_argument("-N", dest="n_grid", type=_int_list, default=[2],
                   help="comma-separated occurrence thresholds (default 2)")
    p.add_argument("--delta", dest="delta_grid", type=_delta_list,
                   default=[16 * 60.0],
                   help="comma-separated weight thresholds (default 16m)")
    p.set_defaults(func=cmd_metrics)

    p = sub.add_parser("taxonomy", help="classify locations by frequency x attractiveness")
    _add_io_args(p)
    p.set_defaults(func=cmd_taxonomy)

    p = sub.add_parser("diversity", help="diversity profiles and user classes")
    _add_io_args(p)
    p.add_argument("--gvf-threshold", type=float, default=0.7,
                   help="fit threshold for choosing the class count (default 0.7)")
    p.set_defaults(func=cmd_diversity)

    p = sub.add_parser("entropy-rate", help="entropy rate of summary sequences")
    _add_io_args(p)
    p.set_defaults(func=cmd_entropy_rate)

    p = sub.add_parser("rank", help="visit probability by location rank")
    _add_io_args(p)
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("synth", help="generate a synthetic dataset with ground truth")
    p.add_argument("--output-dir", required=True)
    p.add_argument("--users", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--preset", choices=("basic", "heavy-tail"), default="basic")
    p.add_argument("--noise-prob", type=float, default=None,
                   help="override the preset's noise probability")
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("stats", help="dataset summary statistics")
    p.add_argument("--input", required=True)
    p.add_argument("--output-dir", default=None,
                   help="write stats.json here instead of printing")
    p.add_argument("--strict", action="store_true")
    p.set_defaults(func=cmd_stats)

    return parser


def _load(args) -> IngestReport:
    report = ingest(args.input, strict=args.strict)
    if report.n_malformed:
        print(
            f"warning: skipped {report.n_malformed} malformed row(s) "
            f"out of {report.n_rows}",
            file=sys.stderr,
        )
    return report


def _params(args) -> SeqScanParams:
    return SeqScanParams(args.n_min, args.delta)


def _dataset_metrics(dataset, summaries) -> dict:
    try:
        s_rate = dataset_summarization_rate(dataset, summaries)
    except ValueError:
        s_rate = None
    try:
        goodness = dataset_goodness(dataset, summaries)
    except ValueError:
        goodness = None
    return {
        "n_trajectories": len(dataset),
        "n_units": sum(len(s.units) for s in summaries),
        "s_rate": s_rate,
        "goodness": goodness,
    }


def cmd_summarize(args, out: OutputDir) -> int:
    report = _load(args)
    params = _params(args)
    summaries = summarize_dataset(report.trajectories, params, args.workers)
    out.write_table("summary", SUMMARY_HEADER, summary_rows(summaries), args.fmt)
    payload = _dataset_metrics(report.trajectories, summaries)
    payload["params"] = {"n_min": params.n_min, "delta_seconds": params.delta}
    payload["n_malformed_rows"] = report.n_malformed
    out.write_json("summary_stats.json", payload)
    return 0


def _rle_plus_units(params: SeqScanParams, trajectory):
    return trajectory.user_id, rle.rle_plus(trajectory, params)


def cmd_baseline(args, out: OutputDir) -> int:
    report = _load(args)
    params = _params(args)
    per_user = parallel_map(
        partial(_rle_plus_units, params), report.trajectories, args.workers
    )
    out.write_table("baseline", SUMMARY_HEADER, segment_rows(per_user), args.fmt)
    out.write_json(
        "baseline_stats.json",
        {
            "n_trajectories": len(report.trajectories),
            "n_segments": sum(len(segs) for _, segs in per_user),
            "params": {"n_min": params.n_min, "delta_seconds": params.delta},
        },
    )
    return 0


def cmd_metrics(args, out: OutputDir) -> int:
    report = _load(args)
    for n_min in args.n_grid:
        for delta in args.delta_grid:
            params = SeqScanParams(n_min, delta)
            summaries = summarize_dataset(report.trajectories, params, args.workers)
            payload = _dataset_metrics(report.trajectories, summaries)
            payload["params"] = {"n_min": n_min, "delta_seconds": delta}
            out.write_json(f"metrics_N{n_min}_d{delta:g}s.json", payload)
    return 0


def cmd_taxonomy(args, out: OutputDir) -> int:
    report = _load(args)
    summaries = summarize_dataset(report.trajectories, _params(args), args.workers)
    rows = []
    for traj, summary in zip(report.trajectories, summaries):
        part = taxonomy.classify_locations(traj, summary)
        rows.append(
            (
                traj.user_id,
                part.n_native_types,
                len(summary.locations()),
                len(part.significant),
                len(part.transit),
                len(part.sporadic),
                len(part.insignificant),
                taxonomy.matching_degree(traj, summary),
            )
        )
    header = ("user_id", "n_types", "n_attractive", "n_significant",
              "n_transit", "n_sporadic", "n_insignificant", "matching_degree")
    out.write_table("taxonomy", header, rows, args.fmt)
    try:
        shares = taxonomy.class_percentages(report.trajectories, summaries)
        percentages = {k: 100.0 * v for k, v in asdict(shares).items()}
    except ValueError:
        percentages = None
    out.write_json("taxonomy_stats.json", {"mean_percent": percentages})
    return 0


def cmd_diversity(args, out: OutputDir) -> int:
    report = _load(args)
    summaries = summarize_dataset(report.trajectories, _params(args), args.workers)
    rows = []
    for summary in summaries:
        if summary.units:
            profile = div.diversity_profile(summary)
            rows.append((summary.user_id, profile.richness, profile.td_h,
                         profile.td_s))
    out.write_table("diversity", ("user_id", "richness", "td_h", "td_s"),
                    rows, args.fmt)
    classification = {}
    for name, column in (("richness", 1), ("td_h", 2), ("td_s", 3)):
        if not rows:
            classification[name] = None
            continue
        result = div.classify_users([r[column] for r in rows], args.gvf_threshold)
        classification[name] = {
            "k": result.k,
            "gvf": result.gvf,
            "break_values": list(result.break_values),
            "class_ranges": [list(r) for r in result.class_ranges],
            "class_shares": list(result.class_shares),
        }
    out.write_json(
        "diversity_classes.json",
        {
            "gvf_threshold": args.gvf_threshold,
            "n_profiled": len(rows),
            "n_empty_summaries": len(summaries) - len(rows),
            "classification": classification,
        },
    )
    return 0


def cmd_entropy_rate(args, out: OutputDir) -> int:
    report = _load(args)
    summaries = summarize_dataset(report.trajectories, _params(args), args.workers)
    rows = [
        (s.user_id, len(s.units), entropy.summary_entropy_rate(s)) for s in summaries
    ]
    out.write_table("entropy_rate", ("user_id", "n_units", "entropy_rate_bits"),
                    rows, args.fmt)
    values = sorted(r[2] for r in rows)
    n = len(values)
    ecdf = [(v, (i + 1) / n) for i, v in enumerate(values)]
    out.write_csv("entropy_rate_ecdf.csv", ("entropy_rate_bits", "cum_fraction"), ecdf)
    return 0


def cmd_rank(args, out: OutputDir) -> int:
    report = _load(args)
    summaries = summarize_dataset(report.trajectories, _params(args), args.workers)
    try:
        native = rank.rank_distribution_dataset(report.trajectories)
    except ValueError:
        raise DataError("rank distribution needs at least one non-empty trajectory")
    out.write_csv(
        "rank_native.csv",
        ("rank", "probability"),
        [(r + 1, float(p)) for r, p in enumerate(native)],
    )
    try:
        summarized = rank.rank_distribution_dataset(summaries)
    except ValueError:
        summarized = []
    out.write_csv(
        "rank_summary.csv",
        ("rank", "probability"),
        [(r + 1, float(p)) for r, p in enumerate(summarized)],
    )
    return 0


def cmd_synth(args, out: OutputDir) -> int:
    if args.preset == "heavy-tail":
        config = synth.heavy_tail_config(n_users=args.users, seed=args.seed)
    else:
        config = synth.basic_config(n_users=args.users, seed=args.seed)
    if args.noise_prob is not None:
        config = replace(config, noise_prob=args.noise_prob)
    trajectories, ground_truth = synth.generate_dataset(config)
    write_trajectories_csv(out.register("synthetic.csv"), trajectories)
    out.write_json(
        "ground_truth.json",
        {
            user: [
                {"start": d.start, "end": d.end, "location": d.location.label}
                for d in dwells
            ]
            for user, dwells in ground_truth.items()
        },
    )
    return 0


def cmd_stats(args, out: OutputDir | None) -> int:
    report = _load(args)
    stats = asdict(dataset_stats(report.trajectories))
    stats["n_malformed_rows"] = report.n_malformed
    if out is not None:
        out.write_json("stats.json", stats)
    else:
        import json

        print(json.dumps(stats, indent=2, sort_keys=True))
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    out = OutputDir(args.output_dir) if getattr(args, "output_dir", None) else None
    try:
        if args.func is cmd_stats:
            return cmd_stats(args, out)
        assert out is not None
        return args.func(args, out)
    except DataError as exc:
        if out is not None:
            out.cleanup()
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        if out is not None:
            out.cleanup()
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
