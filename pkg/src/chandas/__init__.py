"""Sanskrit meter identification with fuzzy matching and correction hints."""

from .matcher import (
    EditToken, MatchKind, MatchResult, annotate_suggestion, find_direct_match,
    find_fuzzy_matches, identify_line, transform,
)
from .meter_db import (
    LGPattern, Meter, MeterDefinition, MetricalDatabase, expand_gana,
    load_database, load_definitions,
)
from .sanskrit_text import Scheme, scan_line, syllabify, to_internal, transliterate
from .verse import VerseResult, identify_verse

__version__ = "0.1.0"

__all__ = [
    "EditToken", "LGPattern", "MatchKind", "MatchResult", "Meter", "MeterDefinition",
    "MetricalDatabase", "Scheme", "VerseResult", "annotate_suggestion", "expand_gana",
    "find_direct_match", "find_fuzzy_matches", "identify_line", "identify_verse",
    "load_database", "load_definitions", "scan_line", "syllabify", "to_internal",
    "transform", "transliterate",
]
