"""Sentence splitting and tokenization for the rule backends.

Deliberately simple and deterministic: sentences split after .!? followed
by whitespace; tokens are alphanumeric runs or single punctuation marks.
Abbreviations ("Mr. Smith") will over-split; that is an accepted
limitation of the rule backend, not of the interchange format.
"""

from __future__ import annotations

import re

_SENTENCE_BREAK = re.compile(r"(?<=[.!?])\s+")
_TOKEN = re.compile(r"\w+|[^\w\s]")


def split_sentences(text: str) -> list[str]:
    return [s for s in _SENTENCE_BREAK.split(text.strip()) if s]


def tokenize(sentence: str) -> list[str]:
    return _TOKEN.findall(sentence)
