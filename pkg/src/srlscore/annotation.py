"""Annotated-document data model and interchange-format parsing.

The interchange format is UTF-8 JSON:

    {
      "doc_id": str,
      "sentences": [
        {"tokens": [str, ...],
         "frames": [
           {"predicate_index": int,
            "predicate_lemma": str,
            "arguments": [{"label": str, "start": int, "end": int}, ...]}
         ]}
      ],
      "coref_clusters": [[[sent_idx, start, end], ...], ...]
    }

All spans are token-indexed and end-exclusive. Frame spans are
sentence-local; coref mentions carry an explicit sentence index.
Documents are immutable after parsing and safe to share across threads.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field

from .errors import DocumentValidationError, ParseError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SrlArgument:
    """One labeled argument span of a predicate frame."""

    label: str
    start: int
    end: int


@dataclass(frozen=True)
class SrlFrame:
    """One predicate and its labeled argument spans."""

    predicate_index: int
    predicate_lemma: str
    arguments: tuple[SrlArgument, ...]


@dataclass(frozen=True)
class Sentence:
    tokens: tuple[str, ...]
    frames: tuple[SrlFrame, ...]


@dataclass(frozen=True)
class Mention:
    """A coreference mention: sentence index plus token span."""

    sentence: int
    start: int
    end: int


@dataclass(frozen=True)
class CorefCluster:
    """Mentions referring to the same entity. Always >= 2 distinct mentions."""

    mentions: tuple[Mention, ...]


@dataclass(frozen=True)
class AnnotatedDocument:
    doc_id: str
    sentences: tuple[Sentence, ...]
    coref_clusters: tuple[CorefCluster, ...] = field(default=())

    @property
    def frame_count(self) -> int:
        return sum(len(s.frames) for s in self.sentences)


def mention_surface(doc: AnnotatedDocument, mention: Mention) -> str:
    """Space-joined surface tokens of a mention span (no normalization).

    Raises IndexError on out-of-bounds spans; cannot happen for mentions of
    a validated document.
    """
    tokens = doc.sentences[mention.sentence].tokens
    if not 0 <= mention.start < mention.end <= len(tokens):
        raise IndexError(
            f"mention span [{mention.start}, {mention.end}) out of range "
            f"for sentence {mention.sentence} with {len(tokens)} tokens")
    return " ".join(tokens[mention.start:mention.end])


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise DocumentValidationError(message)


def _parse_frame(raw: object, sent_idx: int, frame_idx: int, n_tokens: int) -> SrlFrame:
    where = f"sentence {sent_idx}, frame {frame_idx}"
    _require(isinstance(raw, dict), f"{where}: frame must be an object")
    pred = raw.get("predicate_index")
    _require(isinstance(pred, int) and not isinstance(pred, bool),
             f"{where}: predicate_index must be an integer")
    _require(0 <= pred < n_tokens,
             f"{where}: predicate_index {pred} out of range for {n_tokens} tokens")
    lemma = raw.get("predicate_lemma")
    _require(isinstance(lemma, str), f"{where}: predicate_lemma must be a string")
    raw_args = raw.get("arguments", [])
    _require(isinstance(raw_args, list), f"{where}: arguments must be a list")
    args = []
    for a_idx, a in enumerate(raw_args):
        aw = f"{where}, argument {a_idx}"
        _require(isinstance(a, dict), f"{aw}: argument must be an object")
        label, start, end = a.get("label"), a.get("start"), a.get("end")
        _require(isinstance(label, str), f"{aw}: label must be a string")
        _require(label != "V",
                 f"{aw}: predicate label 'V' not allowed in arguments "
                 "(the predicate is carried by predicate_index)")
        for name, v in (("start", start), ("end", end)):
            _require(isinstance(v, int) and not isinstance(v, bool),
                     f"{aw}: {name} must be an integer")
        _require(0 <= start < end <= n_tokens,
                 f"{aw}: span [{start}, {end}) out of range for {n_tokens} tokens")
        args.append(SrlArgument(label=label, start=start, end=end))
    return SrlFrame(predicate_index=pred, predicate_lemma=lemma, arguments=tuple(args))


def _parse_cluster(raw: object, cluster_idx: int,
                   sentences: tuple[Sentence, ...]) -> CorefCluster | None:
    """Returns None for clusters that collapse to fewer than 2 distinct mentions."""
    where = f"cluster {cluster_idx}"
    _require(isinstance(raw, list), f"{where}: cluster must be a list of mentions")
    mentions: list[Mention] = []
    seen: set[tuple[int, int, int]] = set()
    for m_idx, m in enumerate(raw):
        mw = f"{where}, mention {m_idx}"
        _require(isinstance(m, list) and len(m) == 3,
                 f"{mw}: mention must be [sentence, start, end]")
        sent, start, end = m
        for name, v in (("sentence", sent), ("start", start), ("end", end)):
            _require(isinstance(v, int) and not isinstance(v, bool),
                     f"{mw}: {name} must be an integer")
        _require(0 <= sent < len(sentences),
                 f"{mw}: sentence index {sent} out of range")
        n_tokens = len(sentences[sent].tokens)
        _require(0 <= start < end <= n_tokens,
                 f"{mw}: span [{start}, {end}) out of range for {n_tokens} tokens")
        key = (sent, start, end)
        if key in seen:
            logger.debug("cluster %d: dropping duplicate mention %s", cluster_idx, key)
            continue
        seen.add(key)
        mentions.append(Mention(sentence=sent, start=start, end=end))
    if len(mentions) < 2:
        logger.debug("dropping singleton coref cluster %d", cluster_idx)
        return None
    return CorefCluster(mentions=tuple(mentions))


def document_from_dict(data: dict) -> AnnotatedDocument:
    """Validate a decoded interchange object and build an AnnotatedDocument."""
    _require(isinstance(data, dict), "top level must be an object")
    doc_id = data.get("doc_id")
    _require(isinstance(doc_id, str), "doc_id must be a string")
    raw_sentences = data.get("sentences")
    _require(isinstance(raw_sentences, list) and len(raw_sentences) > 0,
             "sentences must be a non-empty list")

    sentences = []
    for s_idx, s in enumerate(raw_sentences):
        _require(isinstance(s, dict), f"sentence {s_idx}: must be an object")
        tokens = s.get("tokens")
        _require(isinstance(tokens, list) and len(tokens) > 0,
                 f"sentence {s_idx}: tokens must be a non-empty list")
        _require(all(isinstance(t, str) for t in tokens),
                 f"sentence {s_idx}: tokens must all be strings")
        raw_frames = s.get("frames", [])
        _require(isinstance(raw_frames, list), f"sentence {s_idx}: frames must be a list")
        frames = tuple(_parse_frame(f, s_idx, f_idx, len(tokens))
                       for f_idx, f in enumerate(raw_frames))
        sentences.append(Sentence(tokens=tuple(tokens), frames=frames))
    sentences = tuple(sentences)

    raw_clusters = data.get("coref_clusters", [])
    _require(isinstance(raw_clusters, list), "coref_clusters must be a list")
    clusters = []
    seen_mentions: dict[tuple[int, int, int], int] = {}
    for c_idx, c in enumerate(raw_clusters):
        cluster = _parse_cluster(c, c_idx, sentences)
        if cluster is None:
            continue
        for m in cluster.mentions:
            key = (m.sentence, m.start, m.end)
            if key in seen_mentions:
                raise DocumentValidationError(
                    f"cluster {c_idx}: mention {key} already belongs to "
                    f"cluster {seen_mentions[key]}")
            seen_mentions[key] = c_idx
        clusters.append(cluster)

    return AnnotatedDocument(doc_id=doc_id, sentences=sentences,
                             coref_clusters=tuple(clusters))


def parse_document(raw: bytes | str) -> AnnotatedDocument:
    """Parse interchange-format bytes into a validated AnnotatedDocument.

    Raises ParseError (with byte offset) for malformed input, and
    DocumentValidationError (naming the offending index) for schema
    violations. Singleton coref clusters are dropped, not errored.
    """
    if isinstance(raw, bytes):
        try:
            text = raw.decode("utf-8")
        except UnicodeDecodeError as e:
            raise ParseError(f"input is not valid UTF-8: {e.reason}",
                             byte_offset=e.start) from e
    else:
        text = raw
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        byte_offset = len(text[:e.pos].encode("utf-8"))
        raise ParseError(f"invalid JSON: {e.msg}", byte_offset=byte_offset) from e
    return document_from_dict(data)


def document_to_dict(doc: AnnotatedDocument) -> dict:
    return {
        "doc_id": doc.doc_id,
        "sentences": [
            {
                "tokens": list(s.tokens),
                "frames": [
                    {
                        "predicate_index": f.predicate_index,
                        "predicate_lemma": f.predicate_lemma,
                        "arguments": [
                            {"label": a.label, "start": a.start, "end": a.end}
                            for a in f.arguments
                        ],
                    }
                    for f in s.frames
                ],
            }
            for s in doc.sentences
        ],
        "coref_clusters": [
            [[m.sentence, m.start, m.end] for m in c.mentions]
            for c in doc.coref_clusters
        ],
    }


def serialize_document(doc: AnnotatedDocument) -> str:
    """Canonical interchange-format JSON; parse(serialize(doc)) == doc."""
    return json.dumps(document_to_dict(doc), ensure_ascii=False)
