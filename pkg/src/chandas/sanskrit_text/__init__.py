"""Transliteration, syllabification and laghu/guru scansion."""

from .scansion import (
    Akshara, LineScansion, Varna, decompose_varna, gana_signature, jati_name,
    mark_weights, matra_count, scan_line, syllabify, vowel_swap_hint,
)
from .schemes import INTERNAL, Scheme, detect_scheme, to_internal, transliterate

__all__ = [
    "Akshara", "INTERNAL", "LineScansion", "Scheme", "Varna", "decompose_varna",
    "detect_scheme", "gana_signature", "jati_name", "mark_weights", "matra_count",
    "scan_line", "syllabify", "to_internal", "transliterate", "vowel_swap_hint",
]
