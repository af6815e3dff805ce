"""
Varna decomposition, syllabification and laghu/guru weighting.

The weighting rules work on phonemes, not on script characters: a syllable
is guru when its vowel is long, or when the vowel is followed by an
anusvara, a visarga or two or more consonants (a single consonant closing
the very last syllable of a line counts too).  Word boundaries are ignored,
a pada is scanned as one continuous stream.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from ..errors import NoVowelFound
from .schemes import (
    INTERNAL, LONG_VOWELS, Scheme, Token, render, tokenize,
)

LAGHU = "L"
GURU = "G"

# gana letter -> triplet; la/ga cover the 1-2 symbol residue
GANAS = {
    "य": "LGG", "म": "GGG", "त": "GGL", "र": "GLG",
    "ज": "LGL", "भ": "GLL", "न": "LLL", "स": "LLG",
}
SINGLES = {"ल": "L", "ग": "G"}
GANA_OF = {v: k for k, v in GANAS.items()}
SINGLE_OF = {v: k for k, v in SINGLES.items()}

# per-pada syllable count -> jati
JATIS = (
    "उक्ता", "अत्युक्ता", "मध्या", "प्रतिष्ठा", "सुप्रतिष्ठा", "गायत्री",
    "उष्णिक्", "अनुष्टुभ्", "बृहती", "पङ्क्ति", "त्रिष्टुभ्", "जगती",
    "अतिजगती", "शक्वरी", "अतिशक्वरी", "अष्टि", "अत्यष्टि", "धृति",
    "अतिधृति", "कृति", "प्रकृति", "आकृति", "विकृति", "संकृति",
    "अभिकृति", "उत्कृति",
)
JATI_OVERFLOW = "26+"

_SWAPS = {"i": "I", "u": "U", "f": "F"}
_SWAPS.update({v: k for k, v in list(_SWAPS.items())})


@dataclass(frozen=True)
class Varna:
    kind: str  # vowel | consonant | anusvara | visarga
    id: str    # phoneme id (SLP1 letter)

    @property
    def length_class(self) -> Optional[str]:
        if self.kind != "vowel":
            return None
        return "long" if self.id in LONG_VOWELS else "short"

    def token(self) -> Token:
        kind = "mark" if self.kind in ("anusvara", "visarga") else self.kind
        return Token(kind, self.id)


@dataclass(frozen=True)
class Akshara:
    """One syllable: onset consonants, a vowel, and trailing marks or coda."""

    varnas: Tuple[Varna, ...]
    onset_size: int
    closed_by: Optional[str] = None  # anusvara | visarga | cluster

    @property
    def vowel(self) -> Varna:
        return self.varnas[self.onset_size]

    @property
    def weight(self) -> str:
        if self.vowel.length_class == "long" or self.closed_by:
            return GURU
        return LAGHU

    @property
    def surface(self) -> str:
        return self.render(INTERNAL)

    def render(self, scheme: Scheme = INTERNAL) -> str:
        return render([v.token() for v in self.varnas], scheme)

    def with_vowel(self, vowel_id: str) -> "Akshara":
        varnas = list(self.varnas)
        varnas[self.onset_size] = Varna("vowel", vowel_id)
        return Akshara(tuple(varnas), self.onset_size, self.closed_by)


@dataclass
class LineScansion:
    raw: str
    syllables: List[Akshara] = field(default_factory=list)
    lg_signature: str = ""
    gana_signature: str = ""
    aksara_count: int = 0
    matra_count: int = 0
    jati: str = ""


_MARK_KIND = {"M": "anusvara", "~": "anusvara", "H": "visarga"}


def decompose_varna(text: str, scheme: Scheme = INTERNAL) -> List[Varna]:
    """Split text into phonemes; the inherent 'a' becomes explicit.

    Avagraha, digits, accents, whitespace and punctuation are dropped.
    Raises InvalidSequence for a vowel sign or virama with no consonant.
    """
    out: List[Varna] = []
    for tok in tokenize(text, scheme, strict=True):
        if tok.kind == "vowel":
            out.append(Varna("vowel", tok.value))
        elif tok.kind == "consonant":
            out.append(Varna("consonant", tok.value))
        elif tok.kind == "mark":
            out.append(Varna(_MARK_KIND[tok.value], tok.value))
    return out


def syllabify(text, scheme: Scheme = INTERNAL) -> List[Akshara]:
    """Group varnas into aksharas; accepts text or a decomposed varna list."""
    varnas = decompose_varna(text, scheme) if isinstance(text, str) else list(text)
    vowel_at = [i for i, v in enumerate(varnas) if v.kind == "vowel"]
    if not vowel_at:
        if any(v.kind == "consonant" for v in varnas):
            raise NoVowelFound(f"no vowel in {text!r}")
        return []

    syllables: List[Akshara] = []
    start = 0
    for n, vi in enumerate(vowel_at):
        nxt = vowel_at[n + 1] if n + 1 < len(vowel_at) else len(varnas)
        end = vi + 1
        while end < nxt and varnas[end].kind in ("anusvara", "visarga"):
            end += 1
        marks = varnas[vi + 1:end]
        between = sum(v.kind == "consonant" for v in varnas[end:nxt])
        last = n + 1 == len(vowel_at)
        if last:
            end = len(varnas)  # any coda stays with the final syllable

        if marks:
            closed = marks[0].kind
        elif between >= 2 or (last and between >= 1):
            closed = "cluster"
        else:
            closed = None
        syllables.append(Akshara(tuple(varnas[start:end]), vi - start, closed))
        start = end
    return syllables


def mark_weights(syllables: Sequence[Akshara]) -> str:
    """lg-signature of the syllables; the final one is not forced to guru."""
    return "".join(s.weight for s in syllables)


def gana_signature(lg: str) -> str:
    triplets = len(lg) - len(lg) % 3
    ganas = [GANA_OF[lg[i:i + 3]] for i in range(0, triplets, 3)]
    ganas.extend(SINGLE_OF[c] for c in lg[triplets:])
    return "".join(ganas)


def matra_count(lg: str) -> int:
    return sum(2 if c == GURU else 1 for c in lg)


def jati_name(aksara_count: int) -> str:
    if 1 <= aksara_count <= len(JATIS):
        return JATIS[aksara_count - 1]
    return JATI_OVERFLOW


def vowel_swap_hint(syllable: Akshara, target_weight: str) -> Optional[str]:
    """Suggest the syllable with i/u/r lengthened (or shortened), if that fixes it."""
    if syllable.closed_by:
        return None
    vowel = syllable.vowel
    swapped = _SWAPS.get(vowel.id)
    if swapped is None:
        return None
    wants_long = target_weight == GURU
    if (vowel.length_class == "long") == wants_long:
        return None
    return syllable.with_vowel(swapped).surface


def scan_line(text: str, scheme: Scheme = INTERNAL) -> LineScansion:
    syllables = syllabify(text, scheme)
    lg = mark_weights(syllables)
    return LineScansion(
        raw=text,
        syllables=syllables,
        lg_signature=lg,
        gana_signature=gana_signature(lg),
        aksara_count=len(syllables),
        matra_count=matra_count(lg),
        jati=jati_name(len(syllables)),
    )
