"""thoth: readability-driven RSVP scheduling.

Turns text into a deterministic per-word display schedule: each word's
screen time reflects its familiarity, length and surrounding punctuation,
scaled for the reader's speed and age. Exposed as a library, a CLI
(``thoth``) and an HTTP service; see the README for the wire contracts.
"""

from .errors import (
    EncodingError,
    ExtractionError,
    InsufficientTextError,
    LexiconError,
    ProfileError,
    ThothError,
)
from .familiarity import (
    DALE_CHALL,
    LEXICON_NAMES,
    SPACHE,
    TOP1000,
    FamiliarityLexicon,
    builtin_lexicon,
    difficult_fraction,
    familiar_base,
    is_familiar,
    load_lexicon,
)
from .gradient import GradientConfig, assign_colors, gradient_payload, wrap_lines
from .ingest import (
    Token,
    TokenizedDocument,
    TokenKind,
    count_syllables,
    normalize_word,
    tokenize,
)
from .pdf import MiniPdfExtractor, PdfTextExtractor, extract_pdf_text
from .readability import (
    Metric,
    MetricScore,
    ReadabilityReport,
    analyze,
    analyze_text,
    consensus,
    report_json,
)
from .scheduler import (
    DisplaySchedule,
    ReaderProfile,
    ScheduleEntry,
    age_factor,
    base_duration_ms,
    build_schedule,
    orp_index,
    schedule_json,
    schedule_text,
    word_duration,
)
from .statistics import TextStatistics, compute_statistics
from .store import DocumentStore, StoredDocument, content_id

__version__ = "0.1.0"
