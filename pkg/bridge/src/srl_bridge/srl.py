"""Rule-based SRL tagging for simple declarative English.

Predicates are lexicon verbs; arguments come from noun-phrase chunking
around the verb group, with passive voice (be-auxiliary + past
participle) flipping the subject to ARG1 and "by"-phrases to ARG0.
Each clause of a coordination is tagged independently. The tagger does
not lemmatize: predicate_lemma is the lowercased surface form.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import lexicon
from .errors import ModelLoadError

RULE_SRL_MODEL = "rule-en-0.1.0"


@dataclass(frozen=True)
class Span:
    label: str
    start: int
    end: int


@dataclass(frozen=True)
class Frame:
    predicate_index: int
    predicate_lemma: str
    arguments: tuple[Span, ...]


def _classify(token: str) -> str:
    low = token.lower()
    if not lexicon.is_word(token):
        return "punct"
    if low in lexicon.NEGATION:
        return "neg"
    if low in lexicon.AUXILIARIES:
        return "aux"
    if low in lexicon.VERBS:
        return "verb"
    if low in lexicon.PREPOSITIONS:
        return "prep"
    if low in lexicon.CONJUNCTIONS:
        return "conj"
    if low in lexicon.TIME_WORDS:
        return "time"
    if low in lexicon.DETERMINERS:
        return "det"
    return "other"  # nouns, names, pronouns, adjectives, adverbs


def _chunks(tokens: list[str], classes: list[str], lo: int, hi: int) -> list[tuple[int, int]]:
    """Noun-phrase chunks in [lo, hi): runs of det/other, a determiner
    always opening a new chunk ("Mary | a book")."""
    out: list[tuple[int, int]] = []
    start = None
    for i in range(lo, hi):
        cls = classes[i]
        if cls in ("det", "other"):
            if start is not None and cls == "det":
                out.append((start, i))
                start = i
            elif start is None:
                start = i
        else:
            if start is not None:
                out.append((start, i))
                start = None
    if start is not None:
        out.append((start, hi))
    return out


def _is_temporal_chunk(tokens: list[str], span: tuple[int, int]) -> bool:
    words = [tokens[i].lower() for i in range(span[0], span[1])]
    if all(w in lexicon.TIME_WORDS for w in words):
        return True
    return (len(words) >= 2 and words[0] in lexicon.TIME_MODIFIERS
            and all(w in lexicon.TIME_NOUNS for w in words[1:]))


def _split_temporal_suffix(tokens: list[str], chunk: tuple[int, int]
                           ) -> tuple[tuple[int, int] | None, tuple[int, int] | None]:
    """Split "the novel last year" into ("the novel", "last year")."""
    start, end = chunk
    for k in range(start + 1, end - 1):
        if tokens[k].lower() in lexicon.TIME_MODIFIERS and all(
                tokens[j].lower() in lexicon.TIME_NOUNS for j in range(k + 1, end)):
            return (start, k), (k, end)
    return chunk, None


class RuleSrlTagger:
    """Deterministic lexicon-driven SRL tagger."""

    model_id = RULE_SRL_MODEL

    def tag(self, tokens: list[str]) -> list[Frame]:
        classes = [_classify(t) for t in tokens]
        predicates = [i for i, c in enumerate(classes) if c == "verb"]
        if not predicates:
            return []
        boundaries = self._clause_boundaries(classes, predicates, len(tokens))
        frames = []
        for p in predicates:
            lo, hi = next((l, h) for l, h in boundaries if l <= p < h)
            frames.append(self._tag_predicate(tokens, classes, p, lo, hi))
        return frames

    @staticmethod
    def _clause_boundaries(classes: list[str], predicates: list[int],
                           n: int) -> list[tuple[int, int]]:
        """Split at conjunctions separating two predicates."""
        cuts = [0]
        for a, b in zip(predicates, predicates[1:]):
            for i in range(a + 1, b):
                if classes[i] == "conj":
                    cuts.append(i)
                    break
        cuts.append(n)
        return list(zip(cuts, cuts[1:]))

    def _tag_predicate(self, tokens: list[str], classes: list[str],
                       p: int, lo: int, hi: int) -> Frame:
        args: list[Span] = []

        # verb group: auxiliaries/negation immediately left of the predicate
        group_start = p
        passive = False
        while group_start - 1 >= lo and classes[group_start - 1] in ("aux", "neg"):
            group_start -= 1
            if classes[group_start] == "neg":
                args.append(Span("ARGM-NEG", group_start, group_start + 1))
            elif tokens[group_start].lower() in lexicon.BE_AUX and \
                    tokens[p].lower() in lexicon.PAST_PARTICIPLES:
                passive = True

        subject_label = "ARG1" if passive else "ARG0"
        pre = _chunks(tokens, classes, lo, group_start)
        subject = next((c for c in reversed(pre) if c[1] == group_start), None)
        patient_taken = False
        if subject is not None:
            args.append(Span(subject_label, subject[0], subject[1]))
            patient_taken = passive

        post = self._post_verb_items(tokens, classes, p + 1, hi)
        ditransitive = tokens[p].lower() in lexicon.DITRANSITIVE
        i = 0
        while i < len(post):
            kind, span, prep = post[i]
            if kind == "time":
                args.append(Span("ARGM-TMP", span[0], span[1]))
            elif kind == "pp":
                if prep == "to":
                    args.append(Span("ARG2", span[0], span[1]))
                elif prep == "by" and passive:
                    args.append(Span("ARG0", span[0], span[1]))
                elif prep in lexicon.LOCATION_PREPOSITIONS:
                    # span includes the preposition itself
                    args.append(Span("ARGM-LOC", span[0] - 1, span[1]))
                # other prepositional phrases are not mapped
            elif kind == "np":
                if not patient_taken:
                    nxt = post[i + 1] if i + 1 < len(post) else None
                    if (ditransitive and nxt is not None and nxt[0] == "np"
                            and nxt[1][0] == span[1]):
                        args.append(Span("ARG2", span[0], span[1]))
                        args.append(Span("ARG1", nxt[1][0], nxt[1][1]))
                        patient_taken = True
                        i += 1
                    else:
                        args.append(Span("ARG1", span[0], span[1]))
                        patient_taken = True
            i += 1

        args.sort(key=lambda s: (s.start, s.end))
        return Frame(predicate_index=p, predicate_lemma=tokens[p].lower(),
                     arguments=tuple(args))

    @staticmethod
    def _post_verb_items(tokens: list[str], classes: list[str],
                         lo: int, hi: int) -> list[tuple[str, tuple[int, int], str | None]]:
        """Sequence of (kind, span, prep) items after the verb group,
        where kind is np | pp | time."""
        items: list[tuple[str, tuple[int, int], str | None]] = []
        i = lo
        while i < hi:
            cls = classes[i]
            if cls == "time":
                items.append(("time", (i, i + 1), None))
                i += 1
            elif cls == "prep":
                chunk = _chunks(tokens, classes, i + 1, hi)
                if chunk and chunk[0][0] == i + 1:
                    items.append(("pp", chunk[0], tokens[i].lower()))
                    i = chunk[0][1]
                else:
                    i += 1
            elif cls in ("det", "other"):
                chunk = _chunks(tokens, classes, i, hi)[0]
                head, temporal = _split_temporal_suffix(tokens, chunk)
                if head is not None:
                    kind = "time" if _is_temporal_chunk(tokens, head) else "np"
                    items.append((kind, head, None))
                if temporal is not None:
                    items.append(("time", temporal, None))
                i = chunk[1]
            else:
                i += 1
        return items


def get_srl_tagger(model_id: str) -> RuleSrlTagger:
    """Resolve a model identifier to a tagger backend.

    `allennlp:<archive-or-model>` requires the allennlp runtime; when it
    is not installed the error names the requested model.
    """
    if model_id == RULE_SRL_MODEL:
        return RuleSrlTagger()
    if model_id.startswith("allennlp:"):
        try:
            import allennlp  # noqa: F401
            from allennlp_models import pretrained  # noqa: F401
        except ImportError as e:
            raise ModelLoadError(
                f"cannot load SRL model {model_id!r}: allennlp runtime "
                f"is not installed ({e})") from e
        raise ModelLoadError(
            f"cannot load SRL model {model_id!r}: no archive download "
            "available in this environment")
    raise ModelLoadError(f"unknown SRL model {model_id!r}; "
                         f"available: {RULE_SRL_MODEL!r}, 'allennlp:<model>'")
