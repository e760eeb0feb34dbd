"""Rule-based coreference over name chunks and personal pronouns.

Clusters come from (a) repeated proper-name chunks with identical
lowercased text and (b) personal pronouns linked to the most recent
preceding name chunk. Only clusters with at least two mentions are
emitted. Deterministic; no gender or number agreement is attempted.
"""

from __future__ import annotations

from . import lexicon
from .errors import ModelLoadError

RULE_COREF_MODEL = "rule-coref-0.1.0"

_LINKABLE_PRONOUNS = frozenset({"he", "she", "it", "they", "him", "her", "them"})
_FUNCTION_WORDS = (lexicon.DETERMINERS | lexicon.PRONOUNS | lexicon.AUXILIARIES
                   | lexicon.CONJUNCTIONS | lexicon.PREPOSITIONS)

Mention = tuple[int, int, int]


class RuleCorefResolver:
    """Deterministic name/pronoun linker."""

    model_id = RULE_COREF_MODEL

    def resolve(self, sentences: list[list[str]]) -> list[list[Mention]]:
        name_mentions = self._name_chunks(sentences)
        clusters: dict[str, list[Mention]] = {}
        order: list[str] = []
        for key, mention in name_mentions:
            if key not in clusters:
                clusters[key] = []
                order.append(key)
            clusters[key].append(mention)

        # pronouns attach to the most recent preceding name chunk
        mention_positions = [(m, key) for key, m in name_mentions]
        for s_idx, tokens in enumerate(sentences):
            for t_idx, token in enumerate(tokens):
                if token.lower() not in _LINKABLE_PRONOUNS:
                    continue
                antecedent = None
                for (m_sent, m_start, m_end), key in mention_positions:
                    if (m_sent, m_end) <= (s_idx, t_idx):
                        antecedent = key
                if antecedent is not None:
                    clusters[antecedent].append((s_idx, t_idx, t_idx + 1))

        return [sorted(clusters[key]) for key in order if len(clusters[key]) >= 2]

    @staticmethod
    def _name_chunks(sentences: list[list[str]]) -> list[tuple[str, Mention]]:
        """(lowercased text, mention) for every proper-name chunk."""
        # capitalized surfaces seen mid-sentence; rescues sentence-initial
        # single names like "Mueller gave ..."
        interior: set[str] = set()
        for tokens in sentences:
            for i, token in enumerate(tokens):
                if i > 0 and lexicon.is_capitalized(token) \
                        and token.lower() not in _FUNCTION_WORDS:
                    interior.add(token)

        out: list[tuple[str, Mention]] = []
        for s_idx, tokens in enumerate(sentences):
            i = 0
            while i < len(tokens):
                if lexicon.is_capitalized(tokens[i]) \
                        and tokens[i].lower() not in _FUNCTION_WORDS:
                    j = i
                    while j + 1 < len(tokens) and lexicon.is_capitalized(tokens[j + 1]) \
                            and tokens[j + 1].lower() not in _FUNCTION_WORDS:
                        j += 1
                    keep = (j > i) or (i > 0) or (tokens[i] in interior)
                    if keep:
                        text = " ".join(tokens[i:j + 1]).lower()
                        out.append((text, (s_idx, i, j + 1)))
                    i = j + 1
                else:
                    i += 1
        return out


def get_coref_resolver(model_id: str) -> RuleCorefResolver:
    if model_id == RULE_COREF_MODEL:
        return RuleCorefResolver()
    if model_id.startswith("allennlp:"):
        try:
            import allennlp  # noqa: F401
        except ImportError as e:
            raise ModelLoadError(
                f"cannot load coref model {model_id!r}: allennlp runtime "
                f"is not installed ({e})") from e
        raise ModelLoadError(
            f"cannot load coref model {model_id!r}: no archive download "
            "available in this environment")
    raise ModelLoadError(f"unknown coref model {model_id!r}; "
                         f"available: {RULE_COREF_MODEL!r}, 'allennlp:<model>'")
