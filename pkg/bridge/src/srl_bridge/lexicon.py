"""Closed-class word lists driving the rule-based taggers.

Coverage is intentionally lexicon-bound: a token is a predicate only if
its surface form is listed here. Extending the backend means extending
these sets, which keeps behavior fully deterministic and versionable.
"""

BE_AUX = frozenset({"am", "is", "are", "was", "were", "be", "been", "being"})

AUXILIARIES = BE_AUX | frozenset({
    "has", "have", "had", "do", "does", "did",
    "will", "would", "shall", "should", "can", "could", "may", "might", "must",
})

NEGATION = frozenset({"not", "never", "n't"})

VERBS = frozenset({
    "give", "gives", "gave", "given", "giving",
    "write", "writes", "wrote", "written", "writing",
    "read", "reads", "reading",
    "praise", "praises", "praised", "praising",
    "announce", "announces", "announced", "announcing",
    "meet", "meets", "met", "meeting",
    "see", "sees", "saw", "seen",
    "send", "sends", "sent", "sending",
    "tell", "tells", "told", "telling",
    "show", "shows", "showed", "shown", "showing",
    "buy", "buys", "bought", "buying",
    "offer", "offers", "offered", "offering",
    "hand", "hands", "handed", "handing",
    "thank", "thanks", "thanked", "thanking",
    "leave", "leaves", "left", "leaving",
    "return", "returns", "returned", "returning",
    "smile", "smiles", "smiled", "smiling",
    "resign", "resigns", "resigned", "resigning",
    "retire", "retires", "retired", "retiring",
    "kill", "kills", "killed", "killing",
    "visit", "visits", "visited", "visiting",
    "win", "wins", "won", "winning",
    "lose", "loses", "lost", "losing",
})

PAST_PARTICIPLES = frozenset({
    "given", "written", "read", "praised", "announced", "met", "seen", "sent",
    "told", "shown", "bought", "offered", "handed", "thanked", "left",
    "returned", "killed", "visited", "won", "lost",
})

# Verbs that take the double-object construction ("gave Mary a book").
DITRANSITIVE = frozenset({
    "give", "gives", "gave", "given", "giving",
    "send", "sends", "sent", "sending",
    "tell", "tells", "told", "telling",
    "show", "shows", "showed", "shown", "showing",
    "buy", "buys", "bought", "buying",
    "offer", "offers", "offered", "offering",
    "hand", "hands", "handed", "handing",
    "write", "writes", "wrote", "written", "writing",
})

PREPOSITIONS = frozenset({
    "in", "at", "on", "to", "by", "with", "for", "from", "of", "into",
    "near", "under", "over", "after", "before", "during", "behind",
})

LOCATION_PREPOSITIONS = frozenset({"in", "at", "near", "under", "over", "behind"})

TIME_WORDS = frozenset({"yesterday", "today", "tomorrow", "tonight", "now"})

TIME_NOUNS = frozenset({
    "second", "seconds", "minute", "minutes", "hour", "hours", "day", "days",
    "week", "weeks", "month", "months", "year", "years", "morning", "evening",
    "night", "monday", "tuesday", "wednesday", "thursday", "friday",
    "saturday", "sunday",
})

TIME_MODIFIERS = frozenset({"last", "next", "this", "every"})

DETERMINERS = frozenset({
    "a", "an", "the", "this", "that", "these", "those",
    "his", "her", "its", "their", "my", "our", "your",
})

PRONOUNS = frozenset({
    "he", "she", "it", "they", "him", "them", "her",
    "i", "we", "you", "me", "us",
})

CONJUNCTIONS = frozenset({"and", "but", "or"})


def is_word(token: str) -> bool:
    return token[:1].isalnum()


def is_capitalized(token: str) -> bool:
    return token[:1].isupper() and token[:1].isalpha()
