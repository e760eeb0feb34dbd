"""Annotator bridge: raw text in, SRL interchange JSON out.

The bridge is the only component allowed to touch model runtimes; the
scoring engine consumes its output files and never loads models. The
default backends are deterministic rule/lexicon taggers with pinned
version identifiers, so golden files stay stable; heavyweight neural
backends plug in behind the same interface.
"""

from .annotate import BatchResult, BridgeConfig, annotate, annotate_batch
from .errors import BridgeError, ModelLoadError, UsageError
from .srl import RULE_SRL_MODEL, RuleSrlTagger, get_srl_tagger
from .coref import RULE_COREF_MODEL, RuleCorefResolver, get_coref_resolver

__version__ = "0.1.0"

__all__ = [
    "BatchResult", "BridgeConfig", "annotate", "annotate_batch",
    "BridgeError", "ModelLoadError", "UsageError",
    "RULE_SRL_MODEL", "RuleSrlTagger", "get_srl_tagger",
    "RULE_COREF_MODEL", "RuleCorefResolver", "get_coref_resolver",
]
