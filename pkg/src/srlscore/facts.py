"""Fact-tuple extraction from SRL frames.

Each predicate frame becomes one seven-role fact tuple:
(agent, negation, relation, patient, recipient, time, location).
PropBank numbered arguments map onto these roles; unmapped labels are
dropped. Role texts are normalized (lowercased, whitespace-collapsed);
absent roles are None. Extraction is pure: one tuple per frame, always.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass

from .annotation import AnnotatedDocument

ROLE_NAMES = ("agent", "negation", "relation", "patient", "recipient", "time", "location")
AGENT, NEGATION, RELATION, PATIENT, RECIPIENT, TIME, LOCATION = range(7)

# PropBank label -> role index. ARG3/ARG4 and all other modifiers fall
# outside the seven-role schema and are dropped.
_LABEL_TO_ROLE = {
    "ARG0": AGENT,
    "ARG1": PATIENT,
    "ARG2": RECIPIENT,
    "ARGM-TMP": TIME,
    "ARGM-LOC": LOCATION,
    "ARGM-NEG": NEGATION,
}


def map_label(propbank_label: str) -> int | None:
    """Map a PropBank label to a role index, or None if unmapped. Total."""
    return _LABEL_TO_ROLE.get(propbank_label)


def normalize_text(text: str) -> str:
    """Lowercase, collapse internal whitespace, strip. No stemming."""
    return " ".join(text.split()).lower()


@dataclass(frozen=True)
class RoleValue:
    """A present role: normalized surface text plus its source span.

    The span is (sentence_index, start, end) in token coordinates and is
    kept for interpretability and coref overlap checks; expanded tuples
    retain the span of the role they were derived from.
    """

    text: str
    span: tuple[int, int, int] | None = None


@dataclass(frozen=True)
class FactTuple:
    """One predicate's assertion. Role order is fixed: agent=0 .. location=6."""

    agent: RoleValue | None
    negation: RoleValue | None
    relation: RoleValue
    patient: RoleValue | None
    recipient: RoleValue | None
    time: RoleValue | None
    location: RoleValue | None
    provenance: tuple[int, int]  # (sentence_index, predicate_index)

    def role(self, index: int) -> RoleValue | None:
        return getattr(self, ROLE_NAMES[index])

    @property
    def roles(self) -> tuple[RoleValue | None, ...]:
        return tuple(getattr(self, name) for name in ROLE_NAMES)

    def texts(self) -> tuple[str | None, ...]:
        """Role texts in fixed order; None for absent roles."""
        return tuple(r.text if r is not None else None for r in self.roles)

    def with_role(self, index: int, value: RoleValue | None) -> "FactTuple":
        return dataclasses.replace(self, **{ROLE_NAMES[index]: value})


@dataclass(frozen=True)
class FactDatabase:
    """All fact tuples extracted from one document."""

    doc_id: str
    tuples: tuple[FactTuple, ...]

    def to_dict(self) -> dict:
        return {
            "doc_id": self.doc_id,
            "count": len(self.tuples),
            "tuples": [list(t.texts()) for t in self.tuples],
        }


def extract_tuples(doc: AnnotatedDocument) -> FactDatabase:
    """One FactTuple per SRL frame.

    The relation is the normalized predicate lemma (surface token when the
    lemma is empty). For duplicate labels within a frame the first span in
    argument order is kept. Argument spans that normalize to an empty
    string are treated as absent.
    """
    tuples = []
    for s_idx, sentence in enumerate(doc.sentences):
        for frame in sentence.frames:
            lemma = frame.predicate_lemma.strip() or sentence.tokens[frame.predicate_index]
            relation = RoleValue(
                text=normalize_text(lemma),
                span=(s_idx, frame.predicate_index, frame.predicate_index + 1),
            )
            roles: dict[int, RoleValue] = {}
            for arg in frame.arguments:
                idx = map_label(arg.label)
                if idx is None or idx in roles:
                    continue
                text = normalize_text(" ".join(sentence.tokens[arg.start:arg.end]))
                if not text:
                    continue
                roles[idx] = RoleValue(text=text, span=(s_idx, arg.start, arg.end))
            tuples.append(FactTuple(
                agent=roles.get(AGENT),
                negation=roles.get(NEGATION),
                relation=relation,
                patient=roles.get(PATIENT),
                recipient=roles.get(RECIPIENT),
                time=roles.get(TIME),
                location=roles.get(LOCATION),
                provenance=(s_idx, frame.predicate_index),
            ))
    return FactDatabase(doc_id=doc.doc_id, tuples=tuple(tuples))


def reduce_to_triplet(t: FactTuple) -> FactTuple:
    """Keep only agent/relation/patient; idempotent."""
    return dataclasses.replace(t, negation=None, recipient=None, time=None, location=None)


def reduce_database(db: FactDatabase) -> FactDatabase:
    return FactDatabase(doc_id=db.doc_id,
                        tuples=tuple(reduce_to_triplet(t) for t in db.tuples))
