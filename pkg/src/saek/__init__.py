"""saek: intent classification and structured argument extraction for
spoken-style Korean questions and commands, plus corpus tooling."""

from .analyze import Analyzer, Eojeol, NegationProfile, NormalizedUtterance
from .classify import (
    Classification,
    Classifier,
    IntentLabel,
    LABEL_NAMES,
    Negativeness,
    QuestionType,
    negativeness,
    question_type,
)
from .corpus import (
    CorpusEntry,
    CorpusStats,
    EvalReport,
    evaluate,
    fleiss_kappa,
    load,
    stats,
)
from .engine import Engine, OutputRecord
from .extract import Argument, Extractor, Tense
from .lexicon import (
    ArgumentCategory,
    Lexicon,
    WhCategory,
    WhKind,
    default_lexicon,
    load_lexicon,
)

__version__ = "0.1.0"

__all__ = [
    "Analyzer",
    "Argument",
    "ArgumentCategory",
    "Classification",
    "Classifier",
    "CorpusEntry",
    "CorpusStats",
    "Engine",
    "Eojeol",
    "EvalReport",
    "Extractor",
    "IntentLabel",
    "LABEL_NAMES",
    "Lexicon",
    "NegationProfile",
    "Negativeness",
    "NormalizedUtterance",
    "OutputRecord",
    "QuestionType",
    "Tense",
    "WhCategory",
    "WhKind",
    "default_lexicon",
    "evaluate",
    "fleiss_kappa",
    "load",
    "load_lexicon",
    "negativeness",
    "question_type",
    "stats",
    "__version__",
]
