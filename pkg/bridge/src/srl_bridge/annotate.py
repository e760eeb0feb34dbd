"""Text to interchange-format documents, single and batch."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .coref import get_coref_resolver
from .errors import UsageError
from .srl import RULE_SRL_MODEL, get_srl_tagger
from .text import split_sentences, tokenize


@dataclass(frozen=True)
class BridgeConfig:
    """Backend selection. Coref clusters are emitted only when a coref
    model is configured."""

    srl_model: str = RULE_SRL_MODEL
    coref_model: str | None = None
    batch_size: int = 1
    device: str = "cpu"


def annotate(raw_text: str, cfg: BridgeConfig = BridgeConfig(),
             doc_id: str = "doc") -> dict:
    """Annotate one text into an interchange-format document dict.

    Raises UsageError for empty input and ModelLoadError (naming the
    model) when a backend cannot be loaded.
    """
    if not raw_text or not raw_text.strip():
        raise UsageError("input text is empty")
    tagger = get_srl_tagger(cfg.srl_model)
    resolver = get_coref_resolver(cfg.coref_model) if cfg.coref_model else None

    sentence_tokens = [tokenize(s) for s in split_sentences(raw_text)]
    sentence_tokens = [t for t in sentence_tokens if t]
    if not sentence_tokens:
        raise UsageError("input text contains no tokens")

    sentences = []
    for tokens in sentence_tokens:
        frames = tagger.tag(tokens)
        sentences.append({
            "tokens": tokens,
            "frames": [
                {
                    "predicate_index": f.predicate_index,
                    "predicate_lemma": f.predicate_lemma,
                    "arguments": [
                        {"label": a.label, "start": a.start, "end": a.end}
                        for a in f.arguments
                    ],
                }
                for f in frames
            ],
        })

    clusters: list[list[list[int]]] = []
    if resolver is not None:
        clusters = [[list(m) for m in cluster]
                    for cluster in resolver.resolve(sentence_tokens)]

    # strictly schema-shaped: model versions travel in the batch manifest,
    # never inside the document
    return {
        "doc_id": doc_id,
        "sentences": sentences,
        "coref_clusters": clusters,
    }


def serialize(doc: dict) -> str:
    return json.dumps(doc, ensure_ascii=False, indent=2) + "\n"


@dataclass
class BatchResult:
    written: list[Path] = field(default_factory=list)
    failures: list[tuple[str, str, str]] = field(default_factory=list)  # path, error, kind

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "written": [str(p) for p in self.written],
            "failures": [{"path": p, "error": e, "kind": k}
                         for p, e, k in self.failures],
            "ok": self.ok,
        }


def annotate_batch(paths: list[str | Path], out_dir: str | Path,
                   cfg: BridgeConfig = BridgeConfig()) -> BatchResult:
    """One interchange file per input file, named <stem>.json.

    Per-file failures are collected, not raised; re-running with the same
    inputs and models overwrites outputs identically. A MANIFEST.json
    sidecar records the model versions the outputs were produced with.
    """
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    result = BatchResult()
    for path in paths:
        path = Path(path)
        try:
            text = path.read_text(encoding="utf-8")
            doc = annotate(text, cfg, doc_id=path.stem)
        except UsageError as e:
            result.failures.append((str(path), str(e), "usage"))
            continue
        except OSError as e:
            result.failures.append((str(path), e.strerror or str(e), "io"))
            continue
        out_path = out_dir / f"{path.stem}.json"
        out_path.write_text(serialize(doc), encoding="utf-8")
        result.written.append(out_path)
    manifest = {
        "srl_model": cfg.srl_model,
        "coref_model": cfg.coref_model,
        "files": sorted(p.name for p in result.written),
    }
    (out_dir / "MANIFEST.json").write_text(
        json.dumps(manifest, ensure_ascii=False, indent=2) + "\n", encoding="utf-8")
    return result
