"""Command-line front end: score, eval, compare, dump-tuples, validate, convert.

Machine output is always JSON on stdout (or the --out/--report file); prose
goes to stderr only. Exit codes: 0 success, 1 usage error, 2 input
validation error, 3 runtime error. SRLSCORE_LOG sets the log level.
"""

from __future__ import annotations

import argparse
import json
import logging
import math
import os
import sys
from pathlib import Path

from .annotation import AnnotatedDocument, parse_document
from .errors import (ConfigError, DocumentValidationError, ParseError,
                     SrlScoreError, UndefinedCorrelationError)
from .evaluation import (DEFAULT_ITERATIONS, DEFAULT_SEED, STATS,
                         evaluate_dataset, load_rated_samples, permutation_test)
from .scoring import (ScoringConfig, VARIANTS, WEIGHTING_MODES, equal_weights,
                      prepare_database, score_documents, triplet_weights)
from .similarity import make_similarity

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_RUNTIME = 3

_SIMILARITY_ALIASES = {"exact": "exact", "rouge": "unigram_precision",
                       "vector": "vector_cosine"}

_SCORING_DEFAULTS = {
    "similarity": "exact",
    "embeddings": None,
    "weights": None,       # None -> equal weights for the chosen variant
    "weighting": "dynamic",
    "variant": "full",
    "coref": "off",
    "coref_cap": 64,
    "jobs": 1,
}


class _InputFailure(Exception):
    """Input file problem; maps to exit code 2. Message names the file."""


class _Parser(argparse.ArgumentParser):
    """argparse parser that exits 1 (not 2) on usage errors."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _configure_logging() -> None:
    level_name = os.environ.get("SRLSCORE_LOG", "WARNING").upper()
    level = getattr(logging, level_name, None)
    if not isinstance(level, int):
        level = logging.WARNING
    logging.basicConfig(stream=sys.stderr, level=level,
                        format="%(levelname)s %(name)s: %(message)s")


def _load_doc(path: str) -> AnnotatedDocument:
    try:
        raw = Path(path).read_bytes()
    except OSError as e:
        raise _InputFailure(f"{path}: {e.strerror or e}") from e
    try:
        return parse_document(raw)
    except (ParseError, DocumentValidationError) as e:
        raise _InputFailure(f"{path}: {e}") from e


def _read_scores(path: str) -> list[float]:
    """One score per line; blank lines are skipped."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise _InputFailure(f"{path}: {e.strerror or e}") from e
    scores = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        try:
            value = float(line)
        except ValueError as e:
            raise _InputFailure(f"{path}: line {lineno}: not a number: {line!r}") from e
        if not math.isfinite(value):
            raise _InputFailure(f"{path}: line {lineno}: score must be finite")
        scores.append(value)
    return scores


def _emit(payload: dict, out_path: str | None, summary_line: str | None = None) -> None:
    text = json.dumps(payload, indent=2, ensure_ascii=False)
    if out_path:
        Path(out_path).write_text(text + "\n", encoding="utf-8")
    else:
        print(text)
    if summary_line and sys.stderr.isatty():
        print(summary_line, file=sys.stderr)


def _parse_weights(value, parser: _Parser) -> tuple[float, ...]:
    if isinstance(value, str):
        parts = value.split(",")
    elif isinstance(value, (list, tuple)):
        parts = list(value)
    else:
        parser.error(f"--weights must be 7 comma-separated numbers, got {value!r}")
    try:
        weights = tuple(float(p) for p in parts)
    except (TypeError, ValueError):
        parser.error(f"--weights must be 7 comma-separated numbers, got {value!r}")
    if len(weights) != 7:
        parser.error(f"--weights needs exactly 7 values, got {len(weights)}")
    return weights


def _parse_onoff(value, parser: _Parser, flag: str) -> bool:
    if isinstance(value, bool):
        return value
    if value in ("on", "off"):
        return value == "on"
    parser.error(f"{flag} must be 'on' or 'off', got {value!r}")


def _resolve_options(args: argparse.Namespace, parser: _Parser) -> dict:
    """Defaults < config-file values < explicit flags."""
    opts = dict(_SCORING_DEFAULTS)
    config_path = getattr(args, "config", None)
    if config_path:
        try:
            data = json.loads(Path(config_path).read_text(encoding="utf-8"))
        except OSError as e:
            raise _InputFailure(f"{config_path}: {e.strerror or e}") from e
        except json.JSONDecodeError as e:
            raise _InputFailure(f"{config_path}: invalid JSON: {e.msg}") from e
        if not isinstance(data, dict):
            raise _InputFailure(f"{config_path}: config must be a JSON object")
        for key, value in data.items():
            if key not in _SCORING_DEFAULTS:
                parser.error(f"unknown config key {key!r} in {config_path}")
            opts[key] = value
    for key in _SCORING_DEFAULTS:
        value = getattr(args, key, None)
        if value is not None:
            opts[key] = value
    return opts


def _build_scoring_config(opts: dict, parser: _Parser) -> ScoringConfig:
    similarity_name = opts["similarity"]
    if similarity_name not in _SIMILARITY_ALIASES:
        parser.error(f"--similarity must be one of {sorted(_SIMILARITY_ALIASES)}, "
                     f"got {similarity_name!r}")
    kind = _SIMILARITY_ALIASES[similarity_name]
    if kind == "vector_cosine" and not opts["embeddings"]:
        parser.error("--embeddings PATH is required with --similarity vector")

    variant = opts["variant"]
    if variant not in VARIANTS:
        parser.error(f"--variant must be one of {VARIANTS}, got {variant!r}")
    if opts["weights"] is None:
        weights = triplet_weights() if variant in ("triplet", "goodrich") else equal_weights()
    else:
        weights = _parse_weights(opts["weights"], parser)
    weighting = opts["weighting"]
    if weighting not in WEIGHTING_MODES:
        parser.error(f"--weighting must be one of {WEIGHTING_MODES}, got {weighting!r}")

    try:
        similarity = make_similarity(kind, opts["embeddings"])
        return ScoringConfig(
            weights=weights,
            weighting_mode=weighting,
            similarity=similarity,
            variant=variant,
            coref=_parse_onoff(opts["coref"], parser, "--coref"),
            coref_cap=int(opts["coref_cap"]),
        )
    except ConfigError as e:
        parser.error(str(e))


def _jobs(opts_or_value) -> int:
    value = opts_or_value["jobs"] if isinstance(opts_or_value, dict) else opts_or_value
    value = int(value)
    if value < 0:
        raise ConfigError("--jobs must be >= 0")
    if value == 0:
        return os.cpu_count() or 1
    return value


def _add_scoring_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--similarity", choices=sorted(_SIMILARITY_ALIASES),
                     default=None, help="argument similarity function")
    sub.add_argument("--embeddings", default=None, metavar="PATH",
                     help="embedding table (required with --similarity vector)")
    sub.add_argument("--weights", default=None, metavar="W0,...,W6",
                     help="role weights: agent,negation,relation,patient,"
                          "recipient,time,location (must sum to 1)")
    sub.add_argument("--weighting", choices=WEIGHTING_MODES, default=None,
                     help="static weights or dynamic re-normalization")
    sub.add_argument("--variant", choices=VARIANTS, default=None,
                     help="full 7-role scoring, triplet reduction, or "
                          "goodrich-style filtered scoring")
    sub.add_argument("--coref", choices=("on", "off"), default=None,
                     help="expand tuples over coreference surface forms")
    sub.add_argument("--coref-cap", type=int, default=None, dest="coref_cap",
                     metavar="N", help="per-tuple expansion cap")
    sub.add_argument("--config", default=None, metavar="PATH",
                     help="JSON config file; flags take precedence")
    sub.add_argument("--jobs", type=int, default=None, metavar="N",
                     help="worker threads (0 = auto)")


def build_parser() -> _Parser:
    parser = _Parser(prog="srlscore",
                     description="Factual consistency scoring via semantic-role "
                                 "fact tuples, plus an evaluation harness.")
    subs = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_score = subs.add_parser("score", help="score one summary against its source")
    p_score.add_argument("--source", required=True, metavar="FILE",
                         help="annotated source document (interchange JSON)")
    p_score.add_argument("--summary", required=True, metavar="FILE",
                         help="annotated summary document (interchange JSON)")
    _add_scoring_flags(p_score)
    p_score.add_argument("--out", default=None, metavar="FILE",
                         help="write the JSON report here instead of stdout")
    p_score.add_argument("--dump-tuples", action="store_true", dest="dump_tuples",
                         help="include both fact databases in the report")
    p_score.set_defaults(func=cmd_score)

    p_eval = subs.add_parser("eval", help="correlate metric scores with human ratings")
    p_eval.add_argument("--dataset", required=True, metavar="FILE",
                        help="rated samples, JSON-lines")
    p_eval.add_argument("--annotations", default=None, metavar="DIR",
                        help="base directory for relative annotation paths")
    _add_scoring_flags(p_eval)
    p_eval.add_argument("--report", default=None, metavar="FILE",
                        help="write the JSON report here instead of stdout")
    p_eval.add_argument("--scores-out", default=None, metavar="FILE", dest="scores_out",
                        help="write one metric score per line (compare input)")
    p_eval.add_argument("--plot-dir", default=None, metavar="DIR", dest="plot_dir",
                        help="render scatter figure and per-sample CSV here")
    p_eval.set_defaults(func=cmd_eval)

    p_cmp = subs.add_parser("compare",
                            help="paired permutation test between two metrics")
    p_cmp.add_argument("--scores-a", required=True, metavar="FILE", dest="scores_a")
    p_cmp.add_argument("--scores-b", required=True, metavar="FILE", dest="scores_b")
    p_cmp.add_argument("--human", required=True, metavar="FILE")
    p_cmp.add_argument("--stat", choices=STATS, default="pearson")
    p_cmp.add_argument("--iterations", type=int, default=DEFAULT_ITERATIONS, metavar="N")
    p_cmp.add_argument("--seed", type=int, default=DEFAULT_SEED, metavar="N")
    p_cmp.add_argument("--comparisons", type=int, default=1, metavar="K",
                       help="number of planned comparisons (Bonferroni)")
    p_cmp.add_argument("--alpha", type=float, default=0.05)
    p_cmp.add_argument("--exhaustive", action="store_true",
                       help="enumerate all 2^n swap patterns (n <= 20)")
    p_cmp.add_argument("--jobs", type=int, default=1, metavar="N",
                       help="worker threads (0 = auto)")
    p_cmp.add_argument("--out", default=None, metavar="FILE")
    p_cmp.add_argument("--plot-dir", default=None, metavar="DIR", dest="plot_dir",
                       help="render null-distribution figure and CSV here")
    p_cmp.set_defaults(func=cmd_compare)

    p_dump = subs.add_parser("dump-tuples", help="extract and print fact tuples")
    p_dump.add_argument("file", metavar="FILE", help="annotated document")
    _add_scoring_flags(p_dump)
    p_dump.add_argument("--out", default=None, metavar="FILE")
    p_dump.set_defaults(func=cmd_dump_tuples)

    p_val = subs.add_parser("validate", help="validate an interchange-format file")
    p_val.add_argument("file", metavar="FILE")
    p_val.set_defaults(func=cmd_validate)

    p_conv = subs.add_parser("convert",
                             help="map an external JSON/JSONL layout to the "
                                  "rated-sample dataset format")
    p_conv.add_argument("--in", required=True, dest="infile", metavar="FILE")
    p_conv.add_argument("--out", required=True, metavar="FILE")
    p_conv.add_argument("--id-key", default="sample_id", dest="id_key")
    p_conv.add_argument("--source-key", default="source", dest="source_key")
    p_conv.add_argument("--summary-key", default="summary", dest="summary_key")
    p_conv.add_argument("--score-key", default="human_score", dest="score_key")
    p_conv.set_defaults(func=cmd_convert)

    return parser


def cmd_score(args: argparse.Namespace, parser: _Parser) -> int:
    opts = _resolve_options(args, parser)
    cfg = _build_scoring_config(opts, parser)
    jobs = _jobs(opts)
    source_doc = _load_doc(args.source)
    summary_doc = _load_doc(args.summary)
    report = score_documents(source_doc, summary_doc, cfg, jobs=jobs)
    payload = {
        "source_doc_id": source_doc.doc_id,
        "summary_doc_id": summary_doc.doc_id,
        "config": cfg.to_dict(),
    }
    payload.update(report.to_dict())
    if args.dump_tuples:
        payload["source_tuples"] = prepare_database(source_doc, cfg).to_dict()
        payload["summary_tuples"] = prepare_database(summary_doc, cfg).to_dict()
    _emit(payload, args.out, f"overall score: {report.overall:.4f}")
    return EXIT_OK


def cmd_eval(args: argparse.Namespace, parser: _Parser) -> int:
    opts = _resolve_options(args, parser)
    cfg = _build_scoring_config(opts, parser)
    jobs = _jobs(opts)
    try:
        samples = load_rated_samples(args.dataset)
    except OSError as e:
        raise _InputFailure(f"{args.dataset}: {e.strerror or e}") from e
    except ValueError as e:
        raise _InputFailure(str(e)) from e
    try:
        report = evaluate_dataset(samples, cfg, annotations_dir=args.annotations,
                                  jobs=jobs)
    except ValueError as e:
        raise _InputFailure(str(e)) from e
    payload = {"config": cfg.to_dict()}
    payload.update(report.to_dict())
    _emit(payload, args.report,
          f"n={report.n} pearson={report.pearson:.4f} spearman={report.spearman:.4f}")
    if args.scores_out:
        lines = "".join(f"{p.metric_score!r}\n" for p in report.per_sample)
        Path(args.scores_out).write_text(lines, encoding="utf-8")
    if args.plot_dir:
        from . import figures
        plot_dir = Path(args.plot_dir)
        plot_dir.mkdir(parents=True, exist_ok=True)
        figures.write_per_sample_csv(report, plot_dir / "per_sample.csv")
        figures.save_scatter(report, plot_dir / "scores_scatter.png")
    return EXIT_OK


def cmd_compare(args: argparse.Namespace, parser: _Parser) -> int:
    a = _read_scores(args.scores_a)
    b = _read_scores(args.scores_b)
    h = _read_scores(args.human)
    if args.comparisons < 1:
        parser.error("--comparisons must be >= 1")
    if not 0.0 < args.alpha < 1.0:
        parser.error("--alpha must be in (0, 1)")
    try:
        result = permutation_test(
            a, b, h, stat=args.stat, iterations=args.iterations, seed=args.seed,
            exhaustive=args.exhaustive, jobs=_jobs(args.jobs),
            keep_null=bool(args.plot_dir))
    except ValueError as e:
        raise _InputFailure(str(e)) from e
    result.bonferroni_alpha = args.alpha / args.comparisons
    result.significant = result.p_value < result.bonferroni_alpha
    payload = result.to_dict()
    payload["comparisons"] = args.comparisons
    payload["alpha"] = args.alpha
    _emit(payload, args.out,
          f"delta={result.observed_delta:.4f} p={result.p_value:.4f} "
          f"significant={result.significant}")
    if args.plot_dir:
        from . import figures
        plot_dir = Path(args.plot_dir)
        plot_dir.mkdir(parents=True, exist_ok=True)
        figures.write_null_deltas_csv(result, plot_dir / "null_deltas.csv")
        figures.save_null_histogram(result, plot_dir / "null_distribution.png")
    return EXIT_OK


def cmd_dump_tuples(args: argparse.Namespace, parser: _Parser) -> int:
    opts = _resolve_options(args, parser)
    cfg = _build_scoring_config(opts, parser)
    doc = _load_doc(args.file)
    db = prepare_database(doc, cfg)
    payload = db.to_dict()
    payload["variant"] = cfg.variant
    payload["coref"] = cfg.coref
    _emit(payload, args.out, f"{len(db.tuples)} tuples from {doc.doc_id}")
    return EXIT_OK


def cmd_validate(args: argparse.Namespace, parser: _Parser) -> int:
    doc = _load_doc(args.file)
    payload = {
        "valid": True,
        "doc_id": doc.doc_id,
        "sentences": len(doc.sentences),
        "frames": doc.frame_count,
        "coref_clusters": len(doc.coref_clusters),
    }
    _emit(payload, None, f"{args.file}: valid")
    return EXIT_OK


def cmd_convert(args: argparse.Namespace, parser: _Parser) -> int:
    try:
        text = Path(args.infile).read_text(encoding="utf-8")
    except OSError as e:
        raise _InputFailure(f"{args.infile}: {e.strerror or e}") from e
    rows: list[dict] = []
    stripped = text.lstrip()
    if stripped.startswith("["):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise _InputFailure(f"{args.infile}: invalid JSON: {e.msg}") from e
        if not isinstance(data, list):
            raise _InputFailure(f"{args.infile}: expected a JSON array")
        rows = data
    else:
        for lineno, line in enumerate(text.splitlines(), start=1):
            line = line.strip()
            if not line:
                continue
            try:
                rows.append(json.loads(line))
            except json.JSONDecodeError as e:
                raise _InputFailure(
                    f"{args.infile}: line {lineno}: invalid JSON: {e.msg}") from e
    out_lines = []
    for idx, row in enumerate(rows):
        if not isinstance(row, dict):
            raise _InputFailure(f"{args.infile}: record {idx} is not an object")
        try:
            converted = {
                "sample_id": str(row[args.id_key]),
                "source": str(row[args.source_key]),
                "summary": str(row[args.summary_key]),
                "human_score": float(row[args.score_key]),
            }
        except KeyError as e:
            raise _InputFailure(f"{args.infile}: record {idx}: missing key {e}") from e
        except (TypeError, ValueError) as e:
            raise _InputFailure(f"{args.infile}: record {idx}: {e}") from e
        out_lines.append(json.dumps(converted, ensure_ascii=False))
    Path(args.out).write_text("".join(l + "\n" for l in out_lines), encoding="utf-8")
    _emit({"converted": len(out_lines), "out": args.out}, None)
    return EXIT_OK


def main(argv=None) -> int:
    _configure_logging()
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, parser)
    except _InputFailure as e:
        print(f"srlscore: error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except (ParseError, DocumentValidationError) as e:
        print(f"srlscore: error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except ConfigError as e:
        print(f"srlscore: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except UndefinedCorrelationError as e:
        print(f"srlscore: error: {e}", file=sys.stderr)
        return EXIT_RUNTIME
    except SrlScoreError as e:
        print(f"srlscore: error: {e}", file=sys.stderr)
        return EXIT_RUNTIME
    except Exception as e:  # unexpected; keep stdout clean
        logging.getLogger(__name__).debug("unhandled error", exc_info=True)
        print(f"srlscore: unexpected error: {e}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())
