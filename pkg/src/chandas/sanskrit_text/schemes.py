"""
Transliteration between Devanagari, Telugu, IAST, SLP1 and Harvard-Kyoto.

Every scheme is parsed into a stream of phonemic tokens and rendered back
from it, so any pair of schemes converts through the same intermediate
form.  Phoneme identities are the SLP1 letters (one ASCII character per
phoneme), extended with ``ĕ``/``ŏ`` for the short e/o of Dravidian scripts.
"""

from __future__ import annotations

import re
import unicodedata
import warnings
from enum import Enum
from typing import Dict, Iterable, List, NamedTuple, Optional, Tuple

from ..errors import InvalidSequence, UndetectableScheme, UnmappableCharacter


class Scheme(str, Enum):
    DEVANAGARI = "devanagari"
    IAST = "iast"
    SLP1 = "slp1"
    HK = "hk"
    TELUGU = "telugu"

    @classmethod
    def parse(cls, name: str) -> "Scheme":
        key = name.strip().lower().replace("-", "").replace("_", "")
        aliases = {
            "devanagari": cls.DEVANAGARI, "deva": cls.DEVANAGARI,
            "iast": cls.IAST,
            "slp1": cls.SLP1, "slp": cls.SLP1,
            "hk": cls.HK, "harvardkyoto": cls.HK, "kh": cls.HK,
            "telugu": cls.TELUGU,
        }
        try:
            return aliases[key]
        except KeyError:
            raise ValueError(f"unsupported scheme: {name!r}") from None


INTERNAL = Scheme.DEVANAGARI
BRAHMIC = (Scheme.DEVANAGARI, Scheme.TELUGU)
ROMAN = (Scheme.IAST, Scheme.SLP1, Scheme.HK)

# --- phoneme inventory -------------------------------------------------------

SHORT_VOWELS = ("a", "i", "u", "f", "x", "ĕ", "ŏ")
LONG_VOWELS = ("A", "I", "U", "F", "X", "e", "E", "o", "O")
VOWELS = SHORT_VOWELS + LONG_VOWELS
CONSONANTS = tuple("kKgGNcCjJYwWqQRtTdDnpPbBmyrlvSzshL")
MARKS = ("M", "H", "~")  # anusvara, visarga, candrabindu


class Token(NamedTuple):
    kind: str  # vowel | consonant | mark | avagraha | digit | other
    value: str


# --- Brahmic scripts ---------------------------------------------------------
# Unicode lays out the Indic blocks in parallel, so one table of offsets
# serves both Devanagari (U+0900) and Telugu (U+0C00).

_INDEPENDENT = {
    "a": 0x05, "A": 0x06, "i": 0x07, "I": 0x08, "u": 0x09, "U": 0x0A,
    "f": 0x0B, "F": 0x60, "x": 0x0C, "X": 0x61,
    "ĕ": 0x0E, "e": 0x0F, "E": 0x10, "ŏ": 0x12, "o": 0x13, "O": 0x14,
}
_SIGNS = {
    "A": 0x3E, "i": 0x3F, "I": 0x40, "u": 0x41, "U": 0x42,
    "f": 0x43, "F": 0x44, "x": 0x62, "X": 0x63,
    "ĕ": 0x46, "e": 0x47, "E": 0x48, "ŏ": 0x4A, "o": 0x4B, "O": 0x4C,
}
_CONSONANTS = {
    "k": 0x15, "K": 0x16, "g": 0x17, "G": 0x18, "N": 0x19,
    "c": 0x1A, "C": 0x1B, "j": 0x1C, "J": 0x1D, "Y": 0x1E,
    "w": 0x1F, "W": 0x20, "q": 0x21, "Q": 0x22, "R": 0x23,
    "t": 0x24, "T": 0x25, "d": 0x26, "D": 0x27, "n": 0x28,
    "p": 0x2A, "P": 0x2B, "b": 0x2C, "B": 0x2D, "m": 0x2E,
    "y": 0x2F, "r": 0x30, "l": 0x32, "L": 0x33, "v": 0x35,
    "S": 0x36, "z": 0x37, "s": 0x38, "h": 0x39,
}
_MARKS = {"~": 0x01, "M": 0x02, "H": 0x03}
_VIRAMA = 0x4D
_NUKTA = 0x3C
_AVAGRAHA = 0x3D
_DIGIT_ZERO = 0x66
_OM = 0x50
_ACCENTS = (0x51, 0x52, 0x53, 0x54)
_ZERO_WIDTH = "‌‍"


class _BrahmicTable:
    def __init__(self, base: int):
        self.base = base
        self.independent = {k: chr(base + v) for k, v in _INDEPENDENT.items()}
        self.signs = {k: chr(base + v) for k, v in _SIGNS.items()}
        self.consonants = {k: chr(base + v) for k, v in _CONSONANTS.items()}
        self.marks = {k: chr(base + v) for k, v in _MARKS.items()}
        self.virama = chr(base + _VIRAMA)
        self.nukta = chr(base + _NUKTA)
        self.avagraha = chr(base + _AVAGRAHA)
        self.om = chr(base + _OM)
        self.accents = {chr(base + v) for v in _ACCENTS}
        self.digits = {chr(base + _DIGIT_ZERO + i): str(i) for i in range(10)}
        self.rev_independent = {v: k for k, v in self.independent.items()}
        self.rev_signs = {v: k for k, v in self.signs.items()}
        self.rev_consonants = {v: k for k, v in self.consonants.items()}
        self.rev_marks = {v: k for k, v in self.marks.items()}
        self.rev_digits = {v: k for k, v in self.digits.items()}

    def owns(self, ch: str) -> bool:
        # the dandas are shared by every Indic script
        return self.base <= ord(ch) < self.base + 0x80 and ch not in "।॥"


_TABLES = {
    Scheme.DEVANAGARI: _BrahmicTable(0x0900),
    Scheme.TELUGU: _BrahmicTable(0x0C00),
}

# --- Romanizations -----------------------------------------------------------

_IAST = {
    "a": "a", "A": "ā", "i": "i", "I": "ī", "u": "u", "U": "ū",
    "f": "ṛ", "F": "ṝ", "x": "ḷ", "X": "ḹ",
    "e": "e", "E": "ai", "o": "o", "O": "au", "ĕ": "ĕ", "ŏ": "ŏ",
    "k": "k", "K": "kh", "g": "g", "G": "gh", "N": "ṅ",
    "c": "c", "C": "ch", "j": "j", "J": "jh", "Y": "ñ",
    "w": "ṭ", "W": "ṭh", "q": "ḍ", "Q": "ḍh", "R": "ṇ",
    "t": "t", "T": "th", "d": "d", "D": "dh", "n": "n",
    "p": "p", "P": "ph", "b": "b", "B": "bh", "m": "m",
    "y": "y", "r": "r", "l": "l", "L": "ḻ", "v": "v",
    "S": "ś", "z": "ṣ", "s": "s", "h": "h",
    "M": "ṃ", "H": "ḥ", "~": "m̐",
}
_HK = {
    "a": "a", "A": "A", "i": "i", "I": "I", "u": "u", "U": "U",
    "f": "R", "F": "RR", "x": "lR", "X": "lRR",
    "e": "e", "E": "ai", "o": "o", "O": "au", "ĕ": "ĕ", "ŏ": "ŏ",
    "k": "k", "K": "kh", "g": "g", "G": "gh", "N": "G",
    "c": "c", "C": "ch", "j": "j", "J": "jh", "Y": "J",
    "w": "T", "W": "Th", "q": "D", "Q": "Dh", "R": "N",
    "t": "t", "T": "th", "d": "d", "D": "dh", "n": "n",
    "p": "p", "P": "ph", "b": "b", "B": "bh", "m": "m",
    "y": "y", "r": "r", "l": "l", "L": "L", "v": "v",
    "S": "z", "z": "S", "s": "s", "h": "h",
    "M": "M", "H": "H", "~": "~",
}
_SLP1 = {p: p for p in VOWELS + CONSONANTS + MARKS}

_ROMAN_TABLES = {Scheme.IAST: _IAST, Scheme.HK: _HK, Scheme.SLP1: _SLP1}
# extra spellings accepted on input only
_ROMAN_ALIASES = {
    Scheme.IAST: {"ṁ": "M", "ṟ": "r", "ē": "e", "ō": "o"},
    Scheme.HK: {},
    Scheme.SLP1: {},
}


def _kind(phoneme: str) -> str:
    if phoneme in VOWELS:
        return "vowel"
    if phoneme in MARKS:
        return "mark"
    return "consonant"


class _RomanTable:
    def __init__(self, scheme: Scheme):
        self.forward = _ROMAN_TABLES[scheme]
        lookup: Dict[str, str] = {v: k for k, v in self.forward.items()}
        lookup.update(_ROMAN_ALIASES[scheme])
        self.lookup = lookup
        self.longest = max(len(k) for k in lookup)
        self.fold_case = scheme is Scheme.IAST


_ROMAN = {s: _RomanTable(s) for s in ROMAN}

# --- parsing -----------------------------------------------------------------


def _parse_brahmic(text: str, table: _BrahmicTable, strict: bool,
                   unmapped: List[int]) -> List[Token]:
    tokens: List[Token] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch in table.rev_consonants:
            tokens.append(Token("consonant", table.rev_consonants[ch]))
            i += 1
            if i < n and text[i] == table.nukta:
                i += 1
            if i < n and text[i] in table.rev_signs:
                tokens.append(Token("vowel", table.rev_signs[text[i]]))
                i += 1
            elif i < n and text[i] == table.virama:
                i += 1
            else:
                tokens.append(Token("vowel", "a"))
            continue
        if ch in table.rev_independent:
            tokens.append(Token("vowel", table.rev_independent[ch]))
        elif ch in table.rev_marks:
            tokens.append(Token("mark", table.rev_marks[ch]))
        elif ch == table.avagraha:
            tokens.append(Token("avagraha", "'"))
        elif ch in table.rev_digits:
            tokens.append(Token("digit", table.rev_digits[ch]))
        elif ch == table.om:
            tokens.extend([Token("vowel", "o"), Token("mark", "M")])
        elif ch in table.accents or ch in _ZERO_WIDTH or ch == table.nukta:
            pass
        elif ch in table.rev_signs or ch == table.virama:
            if strict:
                raise InvalidSequence(i)
            unmapped.append(i)
            tokens.append(Token("other", ch))
        else:
            if table.owns(ch):
                unmapped.append(i)
            tokens.append(Token("other", ch))
        i += 1
    return tokens


def _parse_roman(text: str, table: _RomanTable, unmapped: List[int]) -> List[Token]:
    text = unicodedata.normalize("NFC", text)
    probe = text
    if table.fold_case:
        probe = "".join(c.lower() if len(c.lower()) == 1 else c for c in text)
    tokens: List[Token] = []
    i, n = 0, len(text)
    while i < n:
        for size in range(min(table.longest, n - i), 0, -1):
            chunk = probe[i:i + size]
            if chunk in table.lookup:
                phoneme = table.lookup[chunk]
                tokens.append(Token(_kind(phoneme), phoneme))
                i += size
                break
        else:
            ch = text[i]
            if ch.isdigit() and ch.isascii():
                tokens.append(Token("digit", ch))
            elif ch == "'":
                tokens.append(Token("avagraha", "'"))
            else:
                if ch.isalpha():
                    unmapped.append(i)
                tokens.append(Token("other", ch))
            i += 1
    return tokens


def tokenize(text: str, scheme: Scheme, strict: bool = False,
             unmapped: Optional[List[int]] = None) -> List[Token]:
    """Parse ``text`` written in ``scheme`` into phonemic tokens.

    With ``strict`` a dangling vowel sign or virama raises
    :class:`InvalidSequence`; otherwise it is passed through.  Positions of
    letters outside the scheme are appended to ``unmapped`` when given.
    """
    sink = [] if unmapped is None else unmapped
    if scheme in BRAHMIC:
        return _parse_brahmic(text, _TABLES[scheme], strict, sink)
    return _parse_roman(text, _ROMAN[scheme], sink)


# --- rendering ---------------------------------------------------------------


def _render_brahmic(tokens: List[Token], table: _BrahmicTable) -> str:
    out: List[str] = []
    n = len(tokens)
    for i, tok in enumerate(tokens):
        if tok.kind == "consonant":
            out.append(table.consonants[tok.value])
            nxt = tokens[i + 1] if i + 1 < n else None
            if nxt is None or nxt.kind != "vowel":
                out.append(table.virama)
        elif tok.kind == "vowel":
            prev = tokens[i - 1] if i else None
            if prev is not None and prev.kind == "consonant":
                if tok.value != "a":
                    out.append(table.signs[tok.value])
            else:
                out.append(table.independent[tok.value])
        elif tok.kind == "mark":
            out.append(table.marks[tok.value])
        elif tok.kind == "avagraha":
            out.append(table.avagraha)
        elif tok.kind == "digit":
            out.append(table.rev_digits[tok.value])
        else:
            out.append(tok.value)
    return "".join(out)


def _render_roman(tokens: List[Token], table: _RomanTable) -> str:
    out: List[str] = []
    for tok in tokens:
        if tok.kind in ("consonant", "vowel", "mark"):
            out.append(table.forward[tok.value])
        else:
            out.append(tok.value)
    return "".join(out)


def render(tokens: Iterable[Token], scheme: Scheme) -> str:
    tokens = list(tokens)
    if scheme in BRAHMIC:
        return _render_brahmic(tokens, _TABLES[scheme])
    return _render_roman(tokens, _ROMAN[scheme])


def transliterate(text: str, source: Scheme, target: Scheme) -> str:
    """Convert ``text`` from ``source`` to ``target``.

    Characters outside the source inventory are copied verbatim; letters
    among them trigger an :class:`UnmappableCharacter` warning.
    """
    source, target = Scheme(source), Scheme(target)
    if source is target:
        return text
    unmapped: List[int] = []
    out = render(tokenize(text, source, unmapped=unmapped), target)
    for pos in unmapped:
        warnings.warn(UnmappableCharacter(pos, text[pos]), stacklevel=2)
    return out


# --- detection ---------------------------------------------------------------

_IAST_MARKERS = set("āīūṛṝḷḹṅñṭḍṇśṣṃṁḥĀĪŪṚṜḶḸṄÑṬḌṆŚṢṂṀḤ")
_SLP1_ONLY = set("KCPBQWYfFxXqwEO")
_HK_DIGRAPH = re.compile(r"[kgcjTDtdpb]h|RR|lR|ai|au")


def _coverage(text: str, scheme: Scheme) -> float:
    letters = [i for i, c in enumerate(text) if c.isalpha()]
    if not letters:
        return 0.0
    unmapped: List[int] = []
    tokenize(text, scheme, unmapped=unmapped)
    return 1.0 - len(unmapped) / len(letters)


def detect_scheme(text: str) -> Scheme:
    """Guess the scheme ``text`` is written in."""
    text = unicodedata.normalize("NFC", text)
    if any(_TABLES[Scheme.DEVANAGARI].owns(c) for c in text):
        return Scheme.DEVANAGARI
    if any(_TABLES[Scheme.TELUGU].owns(c) for c in text):
        return Scheme.TELUGU
    letters = [c for c in text if c.isalpha()]
    if not letters:
        raise UndetectableScheme("no letters in input")

    if any(c in _IAST_MARKERS for c in letters):
        guess = Scheme.IAST
    else:
        slp1 = sum(c in _SLP1_ONLY for c in letters)
        hk = len(_HK_DIGRAPH.findall(text))
        if not slp1 and not any(c.isupper() for c in letters):
            guess = Scheme.IAST
        elif slp1 > hk:
            guess = Scheme.SLP1
        else:
            guess = Scheme.HK
    if _coverage(text, guess) < 0.5:
        raise UndetectableScheme(f"text does not look like {guess.value}")
    return guess


def to_internal(text: str, scheme: Optional[Scheme] = None) -> Tuple[str, Scheme]:
    """Transliterate ``text`` to Devanagari, detecting the scheme if needed."""
    scheme = detect_scheme(text) if scheme is None else Scheme(scheme)
    return transliterate(text, scheme, INTERNAL), scheme
