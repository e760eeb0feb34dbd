import json
from pathlib import Path

import pytest

from srl_bridge import BridgeConfig, annotate, annotate_batch
from srl_bridge.annotate import serialize
from srl_bridge.coref import RULE_COREF_MODEL
from srl_bridge.errors import ModelLoadError, UsageError

FIXTURES = Path(__file__).parent / "fixtures"


def test_empty_text_is_usage_error():
    with pytest.raises(UsageError, match="empty"):
        annotate("")
    with pytest.raises(UsageError, match="empty"):
        annotate("   \n ")


def test_no_coref_without_coref_model():
    doc = annotate("Sara Stewart wrote the novel. She praised the book.")
    assert doc["coref_clusters"] == []


def test_coref_emitted_with_model():
    doc = annotate("Sara Stewart wrote the novel. She praised the book.",
                   BridgeConfig(coref_model=RULE_COREF_MODEL))
    assert doc["coref_clusters"] == [[[0, 0, 2], [1, 0, 1]]]


def test_unknown_model_fails_loudly():
    with pytest.raises(ModelLoadError):
        annotate("Mueller wrote the book.", BridgeConfig(srl_model="nope-9000"))


def test_doc_is_strictly_schema_shaped():
    doc = annotate("Mueller wrote the book.", doc_id="x")
    assert set(doc) == {"doc_id", "sentences", "coref_clusters"}
    assert doc["doc_id"] == "x"


def test_batch_three_files(tmp_path):
    out = tmp_path / "out"
    paths = [FIXTURES / "s1.txt", FIXTURES / "s2.txt", FIXTURES / "s3.txt"]
    result = annotate_batch(paths, out)
    assert result.ok
    assert [p.name for p in result.written] == ["s1.json", "s2.json", "s3.json"]
    manifest = json.loads((out / "MANIFEST.json").read_text())
    assert manifest["srl_model"] == "rule-en-0.1.0"
    assert manifest["coref_model"] is None
    assert manifest["files"] == ["s1.json", "s2.json", "s3.json"]


def test_batch_collects_per_file_failures(tmp_path):
    out = tmp_path / "out"
    paths = [FIXTURES / "s1.txt", tmp_path / "missing.txt", FIXTURES / "s3.txt"]
    result = annotate_batch(paths, out)
    assert not result.ok
    assert [p.name for p in result.written] == ["s1.json", "s3.json"]
    assert len(result.failures) == 1
    assert result.failures[0][0].endswith("missing.txt")
    assert result.failures[0][2] == "io"


def test_batch_empty_input_list_succeeds(tmp_path):
    result = annotate_batch([], tmp_path / "out")
    assert result.ok
    assert result.written == []


def test_batch_is_idempotent(tmp_path):
    out = tmp_path / "out"
    cfg = BridgeConfig(coref_model=RULE_COREF_MODEL)
    annotate_batch([FIXTURES / "pronoun.txt"], out, cfg)
    first = (out / "pronoun.json").read_bytes()
    annotate_batch([FIXTURES / "pronoun.txt"], out, cfg)
    assert (out / "pronoun.json").read_bytes() == first


def test_serialize_round_trips_via_json():
    doc = annotate("Mueller wrote the book.")
    assert json.loads(serialize(doc)) == doc
