"""Bridge CLI: annotate raw text files into interchange-format JSON.

Exit codes: 0 success, 1 usage error (including empty input text),
2 one or more input files failed, 3 model load failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .annotate import BatchResult, BridgeConfig, annotate_batch
from .coref import RULE_COREF_MODEL
from .errors import ModelLoadError, UsageError
from .srl import RULE_SRL_MODEL

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FAILURES = 2
EXIT_MODEL = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> _Parser:
    parser = _Parser(prog="srl-annotate",
                     description="Annotate raw text into the SRL interchange "
                                 "format consumed by the scoring engine.")
    subs = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    p = subs.add_parser("annotate", help="annotate a text file or a directory "
                                         "of .txt files")
    p.add_argument("--in", required=True, dest="inputs", nargs="+", metavar="PATH",
                   help="input text file(s) or one directory of .txt files")
    p.add_argument("--out", required=True, metavar="DIR",
                   help="output directory for interchange JSON files")
    p.add_argument("--coref", action="store_true",
                   help="run coreference resolution (default model)")
    p.add_argument("--srl-model", default=RULE_SRL_MODEL, dest="srl_model",
                   metavar="ID", help=f"SRL backend (default {RULE_SRL_MODEL})")
    p.add_argument("--coref-model", default=None, dest="coref_model", metavar="ID",
                   help=f"coref backend (implies --coref; default "
                        f"{RULE_COREF_MODEL} when --coref is set)")
    p.set_defaults(func=cmd_annotate)
    return parser


def _collect_inputs(inputs: list[str], parser: _Parser) -> list[Path]:
    if len(inputs) == 1 and Path(inputs[0]).is_dir():
        return sorted(Path(inputs[0]).glob("*.txt"))
    return [Path(p) for p in inputs]


def cmd_annotate(args: argparse.Namespace, parser: _Parser) -> int:
    coref_model = args.coref_model or (RULE_COREF_MODEL if args.coref else None)
    cfg = BridgeConfig(srl_model=args.srl_model, coref_model=coref_model)
    paths = _collect_inputs(args.inputs, parser)
    result: BatchResult = annotate_batch(paths, args.out, cfg)
    print(json.dumps(result.to_dict(), ensure_ascii=False, indent=2))
    if not result.ok:
        for path, err, _ in result.failures:
            print(f"srl-annotate: failed: {path}: {err}", file=sys.stderr)
        if len(paths) == 1 and result.failures[0][2] == "usage":
            return EXIT_USAGE
        return EXIT_FAILURES
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, parser)
    except ModelLoadError as e:
        print(f"srl-annotate: error: {e}", file=sys.stderr)
        return EXIT_MODEL
    except UsageError as e:
        print(f"srl-annotate: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as e:
        print(f"srl-annotate: unexpected error: {e}", file=sys.stderr)
        return EXIT_MODEL


if __name__ == "__main__":
    sys.exit(main())
