from __future__ import annotations

import json
import logging
import random

import pytest

from srlscore.annotation import (Mention, document_from_dict, mention_surface,
                                 parse_document, serialize_document)
from srlscore.errors import DocumentValidationError, ParseError

from conftest import load_fixture_dict, random_document


def minimal_doc(**overrides) -> dict:
    data = {
        "doc_id": "doc",
        "sentences": [
            {"tokens": ["Alice", "met", "Bob"],
             "frames": [{"predicate_index": 1, "predicate_lemma": "meet",
                         "arguments": [{"label": "ARG0", "start": 0, "end": 1},
                                       {"label": "ARG1", "start": 2, "end": 3}]}]}
        ],
        "coref_clusters": [],
    }
    data.update(overrides)
    return data


def test_parse_mueller_fixture(mueller_doc):
    assert mueller_doc.doc_id == "mueller-example"
    assert len(mueller_doc.sentences) == 1
    sentence = mueller_doc.sentences[0]
    assert sentence.tokens[0] == "Mueller"
    assert len(sentence.frames) == 1
    frame = sentence.frames[0]
    assert frame.predicate_index == 1
    assert frame.predicate_lemma == "gave"
    assert [a.label for a in frame.arguments] == [
        "ARG0", "ARG2", "ARG1", "ARGM-TMP", "ARGM-LOC"]


def test_zero_frames_everywhere_is_valid():
    doc = document_from_dict({
        "doc_id": "empty-frames",
        "sentences": [{"tokens": ["Yes", "."], "frames": []},
                      {"tokens": ["No", "."], "frames": []}],
        "coref_clusters": [],
    })
    assert doc.frame_count == 0


def test_span_end_beyond_sentence_is_validation_error():
    data = minimal_doc()
    data["sentences"][0]["frames"][0]["arguments"][1]["end"] = 4
    with pytest.raises(DocumentValidationError, match=r"sentence 0, frame 0"):
        document_from_dict(data)


def test_predicate_index_out_of_range():
    data = minimal_doc()
    data["sentences"][0]["frames"][0]["predicate_index"] = 3
    with pytest.raises(DocumentValidationError, match=r"sentence 0, frame 0"):
        document_from_dict(data)


def test_empty_argument_span_rejected():
    data = minimal_doc()
    data["sentences"][0]["frames"][0]["arguments"][0] = {
        "label": "ARG0", "start": 1, "end": 1}
    with pytest.raises(DocumentValidationError, match=r"argument 0"):
        document_from_dict(data)


def test_verb_label_not_allowed_in_arguments():
    data = minimal_doc()
    data["sentences"][0]["frames"][0]["arguments"].append(
        {"label": "V", "start": 1, "end": 2})
    with pytest.raises(DocumentValidationError, match="'V'"):
        document_from_dict(data)


def test_empty_sentence_list_rejected():
    with pytest.raises(DocumentValidationError, match="non-empty"):
        document_from_dict({"doc_id": "d", "sentences": [], "coref_clusters": []})


def test_empty_token_list_rejected():
    with pytest.raises(DocumentValidationError, match="sentence 0"):
        document_from_dict({"doc_id": "d",
                            "sentences": [{"tokens": [], "frames": []}]})


def test_singleton_cluster_dropped(caplog):
    data = minimal_doc(coref_clusters=[[[0, 0, 1]]])
    with caplog.at_level(logging.DEBUG, logger="srlscore.annotation"):
        doc = document_from_dict(data)
    assert doc.coref_clusters == ()
    assert any("singleton" in r.message for r in caplog.records)


def test_duplicate_mentions_deduped_and_cluster_dropped_if_collapsed():
    data = minimal_doc(coref_clusters=[[[0, 0, 1], [0, 0, 1]]])
    assert document_from_dict(data).coref_clusters == ()
    data = minimal_doc(coref_clusters=[[[0, 0, 1], [0, 0, 1], [0, 2, 3]]])
    doc = document_from_dict(data)
    assert len(doc.coref_clusters) == 1
    assert len(doc.coref_clusters[0].mentions) == 2


def test_mention_in_two_clusters_rejected():
    data = minimal_doc(coref_clusters=[[[0, 0, 1], [0, 2, 3]],
                                       [[0, 0, 1], [0, 1, 2]]])
    with pytest.raises(DocumentValidationError, match="cluster 1"):
        document_from_dict(data)


def test_cluster_mention_out_of_bounds():
    data = minimal_doc(coref_clusters=[[[0, 0, 1], [1, 0, 1]]])
    with pytest.raises(DocumentValidationError, match="cluster 0, mention 1"):
        document_from_dict(data)


def test_parse_error_reports_byte_offset():
    with pytest.raises(ParseError, match=r"byte offset"):
        parse_document(b'{"doc_id": "x", ')
    err = None
    try:
        parse_document(b'\xff\xfe{}')
    except ParseError as e:
        err = e
    assert err is not None and err.byte_offset == 0


def test_json_but_not_object_is_validation_error():
    with pytest.raises(DocumentValidationError):
        parse_document(b'[1, 2, 3]')


def test_round_trip_and_determinism():
    rng = random.Random(1234)
    for i in range(100):
        doc = random_document(rng, with_coref=(i % 2 == 0))
        blob = serialize_document(doc)
        assert parse_document(blob) == doc
        assert parse_document(blob.encode("utf-8")) == doc


def test_mueller_round_trip_matches_fixture_dict(mueller_doc):
    assert json.loads(serialize_document(mueller_doc)) == load_fixture_dict("mueller.json")


def test_mention_surface(writer_doc):
    assert mention_surface(writer_doc, Mention(0, 0, 2)) == "Sara Stewart"
    assert mention_surface(writer_doc, Mention(1, 1, 2)) == "writer"
    assert mention_surface(writer_doc, Mention(1, 0, 5)) == "The writer praised the book"
