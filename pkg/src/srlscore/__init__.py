"""Reference-free factual consistency scoring via semantic-role fact tuples."""

from .annotation import (AnnotatedDocument, CorefCluster, Mention, Sentence,
                         SrlArgument, SrlFrame, mention_surface, parse_document,
                         serialize_document)
from .coref import (EntityDictionary, build_entity_dictionary, expand_document,
                    expand_tuples)
from .errors import (ConfigError, DocumentValidationError, ParseError,
                     SrlScoreError, UndefinedCorrelationError)
from .evaluation import (EvalReport, RatedSample, SignificanceResult, bonferroni,
                         evaluate_dataset, load_rated_samples, pearson,
                         permutation_test, spearman)
from .facts import (ROLE_NAMES, FactDatabase, FactTuple, RoleValue, extract_tuples,
                    map_label, normalize_text, reduce_to_triplet)
from .scoring import (ScoreReport, ScoringConfig, TupleScore, equal_weights,
                      prepare_database, score_documents, score_goodrich,
                      score_summary, score_tuple_pair, triplet_weights)
from .similarity import (EmbeddingTable, SimilarityFunction, make_similarity,
                         sim_exact, sim_unigram_precision, sim_vector)

__version__ = "0.1.0"

__all__ = [
    "AnnotatedDocument", "CorefCluster", "Mention", "Sentence", "SrlArgument",
    "SrlFrame", "mention_surface", "parse_document", "serialize_document",
    "EntityDictionary", "build_entity_dictionary", "expand_document", "expand_tuples",
    "ConfigError", "DocumentValidationError", "ParseError", "SrlScoreError",
    "UndefinedCorrelationError",
    "EvalReport", "RatedSample", "SignificanceResult", "bonferroni",
    "evaluate_dataset", "load_rated_samples", "pearson", "permutation_test",
    "spearman",
    "ROLE_NAMES", "FactDatabase", "FactTuple", "RoleValue", "extract_tuples",
    "map_label", "normalize_text", "reduce_to_triplet",
    "ScoreReport", "ScoringConfig", "TupleScore", "equal_weights",
    "prepare_database", "score_documents", "score_goodrich", "score_summary",
    "score_tuple_pair", "triplet_weights",
    "EmbeddingTable", "SimilarityFunction", "make_similarity", "sim_exact",
    "sim_unigram_precision", "sim_vector",
]
