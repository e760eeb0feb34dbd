from __future__ import annotations

import random

import pytest

from srlscore.annotation import Sentence, SrlArgument, SrlFrame, AnnotatedDocument
from srlscore.facts import (AGENT, LOCATION, NEGATION, PATIENT, RECIPIENT, RELATION,
                            TIME, extract_tuples, map_label, normalize_text,
                            reduce_to_triplet)

from conftest import random_document, random_fact_tuple


@pytest.mark.parametrize("label,expected", [
    ("ARG0", AGENT),
    ("ARG1", PATIENT),
    ("ARG2", RECIPIENT),
    ("ARGM-TMP", TIME),
    ("ARGM-LOC", LOCATION),
    ("ARGM-NEG", NEGATION),
    ("ARGM-DIS", None),
    ("ARG3", None),
    ("ARG4", None),
    ("ARGM-MNR", None),
    ("", None),
])
def test_map_label(label, expected):
    assert map_label(label) == expected


def test_normalize_text():
    assert normalize_text("  Former England   fast Bowler ") == "former england fast bowler"
    assert normalize_text("Chris\tTremlett") == "chris tremlett"
    assert normalize_text("   ") == ""


def test_mueller_extraction_golden(mueller_doc):
    db = extract_tuples(mueller_doc)
    assert len(db.tuples) == 1
    assert db.tuples[0].texts() == (
        "mueller", None, "gave", "a book", "mary", "yesterday", "in berlin")
    assert db.tuples[0].provenance == (0, 1)


def single_sentence_doc(tokens, frames) -> AnnotatedDocument:
    return AnnotatedDocument(
        doc_id="d", sentences=(Sentence(tokens=tuple(tokens), frames=tuple(frames)),))


def test_two_predicates_give_two_tuples():
    tokens = ["Alice", "met", "Bob", "and", "thanked", "Carol"]
    frames = [
        SrlFrame(1, "meet", (SrlArgument("ARG0", 0, 1), SrlArgument("ARG1", 2, 3))),
        SrlFrame(4, "thank", (SrlArgument("ARG0", 0, 1), SrlArgument("ARG1", 5, 6))),
    ]
    db = extract_tuples(single_sentence_doc(tokens, frames))
    assert len(db.tuples) == 2
    assert db.tuples[0].relation.text == "meet"
    assert db.tuples[1].relation.text == "thank"


def test_unmapped_only_frame_gives_relation_only_tuple():
    frames = [SrlFrame(1, "meet", (SrlArgument("ARGM-DIS", 0, 1),))]
    db = extract_tuples(single_sentence_doc(["Alice", "met", "Bob"], frames))
    t = db.tuples[0]
    assert t.relation.text == "meet"
    assert all(t.role(i) is None for i in range(7) if i != RELATION)


def test_empty_lemma_falls_back_to_surface_token():
    frames = [SrlFrame(1, "", ())]
    db = extract_tuples(single_sentence_doc(["Alice", "MET", "Bob"], frames))
    assert db.tuples[0].relation.text == "met"


def test_duplicate_label_keeps_first_span():
    frames = [SrlFrame(1, "meet", (SrlArgument("ARG1", 2, 3),
                                   SrlArgument("ARG1", 0, 1)))]
    db = extract_tuples(single_sentence_doc(["Alice", "met", "Bob"], frames))
    assert db.tuples[0].patient.text == "bob"
    assert db.tuples[0].patient.span == (0, 2, 3)


def test_tuple_count_equals_frame_count_and_relation_present():
    rng = random.Random(99)
    for _ in range(50):
        doc = random_document(rng)
        db = extract_tuples(doc)
        assert len(db.tuples) == doc.frame_count
        assert all(t.relation is not None and t.relation.text for t in db.tuples)


def test_extraction_is_pure():
    rng = random.Random(7)
    doc = random_document(rng)
    assert extract_tuples(doc) == extract_tuples(doc)


def test_reduce_to_triplet():
    rng = random.Random(11)
    t = random_fact_tuple(rng, presence=1.0)
    r = reduce_to_triplet(t)
    assert r.agent == t.agent
    assert r.relation == t.relation
    assert r.patient == t.patient
    assert r.negation is None and r.recipient is None
    assert r.time is None and r.location is None
    assert reduce_to_triplet(r) == r  # idempotent


def test_reduce_to_triplet_keeps_absent_agent_absent():
    rng = random.Random(12)
    t = random_fact_tuple(rng, presence=1.0).with_role(0, None)
    assert reduce_to_triplet(t).agent is None
