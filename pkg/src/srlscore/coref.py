"""Coreference-driven tuple expansion.

Coref clusters become an entity dictionary of synonymous surface forms.
A tuple whose role span contains a mention is expanded into the Cartesian
product of the alternative surface forms across its roles, bounded by a
configurable cap; past the cap only single-role substitutions are emitted.
The original tuple is always part of the expansion.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .annotation import AnnotatedDocument, mention_surface
from .facts import FactDatabase, FactTuple, RoleValue, normalize_text

DEFAULT_EXPANSION_CAP = 64


@dataclass(frozen=True)
class EntityDictionary:
    """Per-cluster surface forms plus a mention span -> cluster index."""

    clusters: tuple[tuple[str, ...], ...]
    mention_index: dict[tuple[int, int, int], int]

    def __bool__(self) -> bool:
        return bool(self.clusters)


def build_entity_dictionary(doc: AnnotatedDocument) -> EntityDictionary:
    """Normalized surface forms per cluster, deduplicated in first-seen order."""
    clusters = []
    mention_index: dict[tuple[int, int, int], int] = {}
    for cluster in doc.coref_clusters:
        cid = len(clusters)
        forms: list[str] = []
        for m in cluster.mentions:
            text = normalize_text(mention_surface(doc, m))
            if text and text not in forms:
                forms.append(text)
            mention_index[(m.sentence, m.start, m.end)] = cid
        clusters.append(tuple(forms))
    return EntityDictionary(clusters=tuple(clusters), mention_index=mention_index)


def _role_alternatives(role: RoleValue | None, edict: EntityDictionary,
                       doc: AnnotatedDocument) -> list[RoleValue | None]:
    """Alternative values for one role; the original is always first.

    A mention counts only when its span is fully contained in the role span
    (same sentence). A strictly-contained mention is substituted in place at
    its token position; a span-equal mention replaces the whole role text.
    """
    if role is None or role.span is None:
        return [role]
    sent, r_start, r_end = role.span
    alternatives: list[RoleValue | None] = [role]
    seen = {role.text}
    norm_tokens = None
    for (m_sent, m_start, m_end), cid in edict.mention_index.items():
        if m_sent != sent or m_start < r_start or m_end > r_end:
            continue
        if norm_tokens is None:
            norm_tokens = [normalize_text(t) for t in doc.sentences[sent].tokens[r_start:r_end]]
        lo, hi = m_start - r_start, m_end - r_start
        for form in edict.clusters[cid]:
            parts = norm_tokens[:lo] + [form] + norm_tokens[hi:]
            text = normalize_text(" ".join(p for p in parts if p))
            if text and text not in seen:
                seen.add(text)
                alternatives.append(RoleValue(text=text, span=role.span))
    return alternatives


def expand_tuples(db: FactDatabase, edict: EntityDictionary, doc: AnnotatedDocument,
                  cap: int = DEFAULT_EXPANSION_CAP) -> FactDatabase:
    """Expand each tuple over the synonymous surface forms of its roles.

    Per tuple the output is the deduplicated Cartesian product of role
    alternatives, or, when the product exceeds `cap`, the original plus all
    single-role substitutions. An empty dictionary is the identity.
    """
    if not edict:
        return db
    out: list[FactTuple] = []
    for t in db.tuples:
        per_role = [_role_alternatives(t.role(i), edict, doc) for i in range(7)]
        total = 1
        for alts in per_role:
            total *= len(alts)
        seen: set[tuple[str | None, ...]] = set()
        if total <= cap:
            for combo in itertools.product(*per_role):
                candidate = FactTuple(*combo, provenance=t.provenance)
                key = candidate.texts()
                if key not in seen:
                    seen.add(key)
                    out.append(candidate)
        else:
            seen.add(t.texts())
            out.append(t)
            for i, alts in enumerate(per_role):
                for alt in alts[1:]:
                    candidate = t.with_role(i, alt)
                    key = candidate.texts()
                    if key not in seen:
                        seen.add(key)
                        out.append(candidate)
    return FactDatabase(doc_id=db.doc_id, tuples=tuple(out))


def expand_document(db: FactDatabase, doc: AnnotatedDocument,
                    cap: int = DEFAULT_EXPANSION_CAP) -> FactDatabase:
    """Convenience: build the entity dictionary from `doc` and expand `db`."""
    return expand_tuples(db, build_entity_dictionary(doc), doc, cap=cap)
