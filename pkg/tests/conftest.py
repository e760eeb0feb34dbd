from __future__ import annotations

import json
import random
from pathlib import Path

import pytest

from srlscore.annotation import (AnnotatedDocument, Sentence, SrlArgument, SrlFrame,
                                 document_from_dict, parse_document)
from srlscore.facts import FactDatabase, FactTuple, RoleValue
from srlscore.similarity import EmbeddingTable

FIXTURES = Path(__file__).parent / "fixtures"

# Vocabulary matching tests/fixtures/mini_vectors.txt, plus a few
# deliberately out-of-vocabulary words.
NOUNS = ["alice", "bob", "carol", "dave", "book", "letter", "dog", "park", "station"]
VERBS = ["met", "saw", "praised", "thanked", "gave", "sent"]
MODIFIERS = ["yesterday", "today", "berlin", "london"]
OOV = ["zorblat", "qwxy"]
WORDS = NOUNS + VERBS + MODIFIERS + OOV


@pytest.fixture(scope="session")
def mueller_doc() -> AnnotatedDocument:
    return parse_document((FIXTURES / "mueller.json").read_bytes())


@pytest.fixture(scope="session")
def writer_doc() -> AnnotatedDocument:
    return parse_document((FIXTURES / "writer_coref.json").read_bytes())


@pytest.fixture(scope="session")
def embedding_table() -> EmbeddingTable:
    return EmbeddingTable.load(FIXTURES / "mini_vectors.txt")


def load_fixture_dict(name: str) -> dict:
    return json.loads((FIXTURES / name).read_text(encoding="utf-8"))


def random_document(rng: random.Random, doc_id: str = "random-doc",
                    max_sentences: int = 4, ensure_role: bool = False,
                    with_coref: bool = False) -> AnnotatedDocument:
    """A random valid document; with ensure_role, every frame carries ARG0."""
    labels = ["ARG0", "ARG1", "ARG2", "ARGM-TMP", "ARGM-LOC", "ARGM-NEG", "ARGM-DIS"]
    sentences = []
    for _ in range(rng.randint(1, max_sentences)):
        n = rng.randint(4, 9)
        tokens = [rng.choice(WORDS) for _ in range(n)]
        frames = []
        for _ in range(rng.randint(0, 2)):
            pred = rng.randrange(n)
            chosen = [l for l in labels if rng.random() < 0.5]
            if ensure_role and "ARG0" not in chosen:
                chosen.append("ARG0")
            args = []
            for label in chosen:
                start = rng.randrange(n)
                end = rng.randint(start + 1, n)
                args.append(SrlArgument(label=label, start=start, end=end))
            frames.append(SrlFrame(predicate_index=pred,
                                   predicate_lemma=rng.choice(VERBS),
                                   arguments=tuple(args)))
        sentences.append(Sentence(tokens=tuple(tokens), frames=tuple(frames)))
    clusters = []
    if with_coref:
        used: set[tuple[int, int, int]] = set()
        for _ in range(rng.randint(0, 2)):
            target = rng.choice((2, 2, 3))
            mentions = []
            for _ in range(20):  # sampling attempts, not mention count
                sent = rng.randrange(len(sentences))
                n = len(sentences[sent].tokens)
                start = rng.randrange(n)
                end = rng.randint(start + 1, min(n, start + 3))
                span = (sent, start, end)
                if span not in used:
                    used.add(span)
                    mentions.append(list(span))
                if len(mentions) == target:
                    break
            if len(mentions) >= 2:
                clusters.append(mentions)
    return document_from_dict({
        "doc_id": doc_id,
        "sentences": [
            {"tokens": list(s.tokens),
             "frames": [
                 {"predicate_index": f.predicate_index,
                  "predicate_lemma": f.predicate_lemma,
                  "arguments": [{"label": a.label, "start": a.start, "end": a.end}
                                for a in f.arguments]}
                 for f in s.frames]}
            for s in sentences
        ],
        "coref_clusters": clusters,
    })


def random_phrase(rng: random.Random, max_words: int = 3) -> str:
    return " ".join(rng.choice(WORDS) for _ in range(rng.randint(1, max_words)))


def random_fact_tuple(rng: random.Random, presence: float = 0.55,
                      sent: int = 0, pred: int = 0) -> FactTuple:
    def maybe() -> RoleValue | None:
        if rng.random() < presence:
            return RoleValue(text=random_phrase(rng))
        return None

    return FactTuple(
        agent=maybe(),
        negation=maybe(),
        relation=RoleValue(text=rng.choice(VERBS)),
        patient=maybe(),
        recipient=maybe(),
        time=maybe(),
        location=maybe(),
        provenance=(sent, pred),
    )


def random_fact_database(rng: random.Random, max_tuples: int,
                         doc_id: str = "random-db") -> FactDatabase:
    count = rng.randint(0, max_tuples)
    tuples = tuple(random_fact_tuple(rng, sent=i, pred=0) for i in range(count))
    return FactDatabase(doc_id=doc_id, tuples=tuples)


def build_doc(data: dict) -> AnnotatedDocument:
    return document_from_dict(data)
