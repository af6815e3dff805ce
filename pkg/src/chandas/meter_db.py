"""
Metrical database: meter definitions and the lookup structures built from them.

Definitions live in a UTF-8 TSV file with the columns

    vrtta  pada  gana  lakshana  aksara  matra  yati

A blank ``pada`` marks a samavrtta (all four padas alike).  A meter given
for padas 1 and 2 only is an ardhasamavrtta (3 repeats 1, 4 repeats 2);
one given for all of 1-4 is a vishamavrtta.  ``-`` in the lakshana is a
free position (either laghu or guru).  An optional ``#scheme: <name>``
line selects the transliteration scheme of names and gana columns.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from types import MappingProxyType
from typing import (
    Dict, Iterable, List, Mapping, NamedTuple, Optional, Sequence, Tuple, Union,
)

from .errors import InconsistentRow, MalformedRow, UnknownGanaLetter
from .sanskrit_text.scansion import GANAS, SINGLES, matra_count
from .sanskrit_text.schemes import INTERNAL, Scheme, transliterate

ANY = "-"
COLUMNS = ("vrtta", "pada", "gana", "lakshana", "aksara", "matra", "yati")
DEFAULT_DB = "meters.tsv"

ALL_PADAS = ""


def pada_label(first: int, last: Optional[int] = None) -> str:
    if last is None or last == first:
        return f"Pāda {first}"
    return f"Pāda {first}–{last}"


@dataclass(frozen=True)
class LGPattern:
    symbols: str

    def __post_init__(self):
        if not self.symbols:
            raise ValueError("empty lg pattern")
        if set(self.symbols) - {"L", "G", ANY}:
            raise ValueError(f"invalid lg pattern {self.symbols!r}")

    @property
    def is_exact(self) -> bool:
        return ANY not in self.symbols

    def matches(self, signature: str) -> bool:
        return len(signature) == len(self.symbols) and all(
            p == ANY or p == s for p, s in zip(self.symbols, signature)
        )

    def __len__(self) -> int:
        return len(self.symbols)

    def __str__(self) -> str:
        return self.symbols


@dataclass(frozen=True)
class MeterDefinition:
    name: str
    pada_index: Optional[int]
    pattern: LGPattern
    gana: Optional[str] = None
    aksara_count: Optional[int] = None
    matra_count: Optional[int] = None
    yati: Optional[Tuple[int, ...]] = None


@dataclass(frozen=True)
class Meter:
    """All definition rows of one meter, with the pattern of each of the 4 padas."""

    name: str
    kind: str  # sama | ardhasama | vishama
    padas: Tuple[LGPattern, LGPattern, LGPattern, LGPattern]
    definitions: Tuple[MeterDefinition, ...]

    @property
    def is_exact(self) -> bool:
        return all(p.is_exact for p in self.padas)

    def pattern_for(self, position: int) -> LGPattern:
        """Pattern of pada ``position`` (1-based, taken modulo 4)."""
        return self.padas[(position - 1) % 4]

    def label_for(self, position: int) -> str:
        if self.kind == "sama":
            return ALL_PADAS
        return pada_label((position - 1) % 4 + 1)


class Entry(NamedTuple):
    name: str
    label: str


class SignatureEntry(NamedTuple):
    signature: str
    name: str
    label: str


class PatternEntry(NamedTuple):
    pattern: LGPattern
    name: str
    label: str


@dataclass(frozen=True)
class MetricalDatabase:
    single: Mapping[str, Tuple[Entry, ...]] = field(default_factory=dict)
    multiple: Mapping[str, Tuple[Entry, ...]] = field(default_factory=dict)
    wildcard: Tuple[PatternEntry, ...] = ()
    all_exact: Tuple[SignatureEntry, ...] = ()
    meters: Mapping[str, Meter] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.meters)


# --- gana ------------------------------------------------------------------

_LATIN_GANA = re.compile(r"(bha|ya|ma|ta|ra|ja|na|sa|la|ga)", re.IGNORECASE)
_LATIN_TO_DEVA = {
    "ya": "य", "ma": "म", "ta": "त", "ra": "र", "ja": "ज",
    "bha": "भ", "na": "न", "sa": "स", "la": "ल", "ga": "ग",
}


def _gana_letters(gana: str) -> List[Tuple[int, str]]:
    letters = []
    i = 0
    while i < len(gana):
        ch = gana[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isascii() and ch.isalpha():
            m = _LATIN_GANA.match(gana, i)
            if not m:
                raise UnknownGanaLetter(i, ch)
            letters.append((i, _LATIN_TO_DEVA[m.group(1).lower()]))
            i = m.end()
            continue
        letters.append((i, ch))
        i += 1
    return letters


def expand_gana(gana: str) -> LGPattern:
    """Expand a gana formula such as ``यययय`` or ``yayayaya`` to its lg pattern."""
    parts = []
    for pos, letter in _gana_letters(gana):
        if letter in GANAS:
            parts.append(GANAS[letter])
        elif letter in SINGLES:
            parts.append(SINGLES[letter])
        else:
            raise UnknownGanaLetter(pos, letter)
    return LGPattern("".join(parts))


# --- loading -----------------------------------------------------------------

_LAKSHANA_DEVA = {"ल": "L", "ग": "G", ANY: ANY}


def _parse_lakshana(raw: str, scheme: Scheme, line: int) -> LGPattern:
    text = "".join(raw.split())
    if not text:
        raise MalformedRow(line, "missing lakshana")
    if set(text) <= {"L", "G", ANY}:
        return LGPattern(text)
    if scheme is not INTERNAL:
        text = transliterate(text, scheme, INTERNAL)
    try:
        return LGPattern("".join(_LAKSHANA_DEVA[c] for c in text))
    except KeyError as exc:
        raise MalformedRow(line, f"invalid lakshana character {exc.args[0]!r}") from None


def _parse_int(raw: str, column: str, line: int) -> Optional[int]:
    raw = raw.strip()
    if not raw:
        return None
    try:
        value = int(raw)
    except ValueError:
        raise MalformedRow(line, f"{column} is not an integer: {raw!r}") from None
    if value <= 0:
        raise MalformedRow(line, f"{column} must be positive")
    return value


def _parse_row(row: Mapping[str, str], scheme: Scheme, line: int) -> MeterDefinition:
    get = lambda key: (row.get(key) or "").strip()
    name = get("vrtta")
    if not name:
        raise MalformedRow(line, "missing vrtta")
    if "lakshana" not in row:
        raise MalformedRow(line, "missing lakshana column")
    if scheme is not INTERNAL:
        name = transliterate(name, scheme, INTERNAL)

    pattern = _parse_lakshana(get("lakshana"), scheme, line)
    pada = _parse_int(get("pada"), "pada", line)
    if pada is not None and pada > 4:
        raise MalformedRow(line, f"pada index {pada} out of range")

    gana = get("gana") or None
    if gana and scheme is not INTERNAL and not set(gana) <= {"L", "G", ANY}:
        gana = transliterate(gana, scheme, INTERNAL)
    if gana and pattern.is_exact:
        try:
            expanded = expand_gana(gana)
        except UnknownGanaLetter as exc:
            raise MalformedRow(line, str(exc)) from None
        if expanded != pattern:
            raise InconsistentRow(line, f"gana {gana} expands to {expanded}, not {pattern}")

    aksara = _parse_int(get("aksara"), "aksara", line)
    if aksara is not None and aksara != len(pattern):
        raise InconsistentRow(line, f"aksara {aksara} but lakshana has {len(pattern)}")
    matra = _parse_int(get("matra"), "matra", line)
    if matra is not None and pattern.is_exact and matra != matra_count(pattern.symbols):
        raise InconsistentRow(
            line, f"matra {matra} but lakshana has {matra_count(pattern.symbols)}")

    yati = None
    if get("yati"):
        parts = [p for p in re.split(r"[,\s]+", get("yati")) if p]
        yati = tuple(_parse_int(p, "yati", line) for p in parts)
        if sum(yati) > len(pattern):
            raise InconsistentRow(line, f"yati {yati} exceeds pada length {len(pattern)}")

    return MeterDefinition(name, pada, pattern, gana, aksara, matra, yati)


def _build_meter(name: str, rows: List[Tuple[int, MeterDefinition]]) -> Meter:
    indices = [d.pada_index for _, d in rows]
    first_line = rows[0][0]
    if indices == [None]:
        p = rows[0][1].pattern
        return Meter(name, "sama", (p, p, p, p), tuple(d for _, d in rows))
    if None in indices:
        raise MalformedRow(first_line, f"{name}: blank pada mixed with indexed rows")
    if len(set(indices)) != len(indices):
        raise MalformedRow(first_line, f"{name}: duplicate pada index")
    by_index = {d.pada_index: d.pattern for _, d in rows}
    if set(by_index) == {1, 2}:
        padas = (by_index[1], by_index[2], by_index[1], by_index[2])
        kind = "ardhasama"
    elif set(by_index) == {1, 2, 3, 4}:
        padas = tuple(by_index[i] for i in (1, 2, 3, 4))
        kind = "vishama"
    else:
        raise MalformedRow(first_line, f"{name}: pada set {sorted(by_index)} is incomplete")
    return Meter(name, kind, padas, tuple(d for _, d in rows))


def _pada_entries(meter: Meter) -> List[Tuple[str, str]]:
    """(pattern text, label) for each distinct pada of the meter."""
    if meter.kind == "sama":
        return [(meter.padas[0].symbols, ALL_PADAS)]
    count = 2 if meter.kind == "ardhasama" else 4
    return [(meter.padas[i].symbols, pada_label(i + 1)) for i in range(count)]


def _range_entries(meter: Meter) -> List[Tuple[str, str]]:
    """(concatenated pattern, label) for each half-verse written as one line."""
    pats = [p.symbols for p in meter.padas]
    first_half = (pats[0] + pats[1], pada_label(1, 2))
    if meter.kind == "vishama":
        return [first_half, (pats[2] + pats[3], pada_label(3, 4))]
    return [first_half]


def load_definitions(rows: Iterable[Mapping[str, str]],
                     scheme: Scheme = INTERNAL,
                     line_numbers: Optional[Sequence[int]] = None) -> MetricalDatabase:
    """Validate definition records and build the lookup structures."""
    scheme = Scheme(scheme)
    grouped: Dict[str, List[Tuple[int, MeterDefinition]]] = {}
    for n, row in enumerate(rows):
        line = line_numbers[n] if line_numbers is not None else n + 1
        definition = _parse_row(row, scheme, line)
        grouped.setdefault(definition.name, []).append((line, definition))

    meters = {name: _build_meter(name, defs) for name, defs in grouped.items()}

    single: Dict[str, List[Entry]] = {}
    multiple: Dict[str, List[Entry]] = {}
    wildcard: List[PatternEntry] = []
    all_exact: List[SignatureEntry] = []
    seen = set()

    def add(table, key, name, label):
        if (id(table), key, name) in seen:
            return
        seen.add((id(table), key, name))
        if ANY in key:
            wildcard.append(PatternEntry(LGPattern(key), name, label))
            return
        table.setdefault(key, []).append(Entry(name, label))
        all_exact.append(SignatureEntry(key, name, label))

    for meter in meters.values():
        for key, label in _pada_entries(meter):
            add(single, key, meter.name, label)
    # a concatenation that is itself some meter's pada is left to that meter
    for meter in meters.values():
        for key, label in _range_entries(meter):
            if key not in single:
                add(multiple, key, meter.name, label)

    return MetricalDatabase(
        single=MappingProxyType({k: tuple(v) for k, v in single.items()}),
        multiple=MappingProxyType({k: tuple(v) for k, v in multiple.items()}),
        wildcard=tuple(wildcard),
        all_exact=tuple(all_exact),
        meters=MappingProxyType(meters),
    )


def read_definitions(path: Union[str, Path]):
    """Read a definition TSV; returns (rows, line_numbers, scheme)."""
    scheme = INTERNAL
    rows: List[Dict[str, str]] = []
    lines: List[int] = []
    header: Optional[List[str]] = None
    with open(path, encoding="utf-8") as f:
        for number, raw in enumerate(f, start=1):
            line = raw.rstrip("\r\n")
            stripped = line.strip()
            if not stripped:
                continue
            if stripped.startswith("#"):
                m = re.match(r"#\s*scheme\s*:\s*(\S+)", stripped, re.IGNORECASE)
                if m:
                    scheme = Scheme.parse(m.group(1))
                continue
            cells = [c.strip() for c in line.split("\t")]
            if header is None:
                header = [c.lower() for c in cells]
                missing = {"vrtta", "pada", "lakshana"} - set(header)
                if missing:
                    raise MalformedRow(number, f"header lacks {sorted(missing)}")
                continue
            if len(cells) > len(header):
                raise MalformedRow(number, f"{len(cells)} cells for {len(header)} columns")
            rows.append(dict(zip(header, cells)))
            lines.append(number)
    return rows, lines, scheme


def default_db_path() -> Path:
    return Path(str(resources.files("chandas") / "data" / DEFAULT_DB))


def load_database(path: Union[str, Path, None] = None) -> MetricalDatabase:
    rows, lines, scheme = read_definitions(path or default_db_path())
    return load_definitions(rows, scheme, lines)


def query_exact(db: MetricalDatabase, signature: str,
                which: str = "single") -> List[Entry]:
    table = db.single if which == "single" else db.multiple
    return list(table.get(signature, ()))


def query_wildcard(db: MetricalDatabase, signature: str) -> List[Entry]:
    return [Entry(e.name, e.label) for e in db.wildcard if e.pattern.matches(signature)]
