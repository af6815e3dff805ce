"""
Text in, report out: scheme detection, line splitting, scansion and
identification, shared by direct text entry and file input.
"""

from __future__ import annotations

import os
import re
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Union

from ..errors import ChandasError, ConfigError, FileUnreadable
from ..matcher import DEFAULT_K, MatchKind, MatchResult, identify_line
from ..meter_db import MetricalDatabase, default_db_path, load_database
from ..sanskrit_text.scansion import LineScansion, scan_line
from ..sanskrit_text.schemes import INTERNAL, Scheme, to_internal
from ..verse import VERSE_SIZE, group_verses, identify_verse

MODES = ("line", "verse")
FORMATS = ("table", "compact", "detailed")
DB_ENV = "CHANDAS_DB"

# newline in any convention, danda, double danda, and a full stop that is
# not part of a number
_LINE_BREAK = re.compile(r"\r\n|\r|\n|[।॥|]+|(?<!\d)\.|\.(?!\d)")


@dataclass(frozen=True)
class RunConfig:
    mode: str = "line"
    input_scheme: Optional[Scheme] = None    # None: detect
    output_scheme: Optional[Scheme] = None   # None: match the input
    k: int = DEFAULT_K
    db_path: Optional[Path] = None           # None: shipped database
    output_format: str = "table"

    def __post_init__(self):
        if self.mode not in MODES:
            raise ConfigError(f"mode must be one of {MODES}, not {self.mode!r}")
        if self.output_format not in FORMATS:
            raise ConfigError(f"format must be one of {FORMATS}, not {self.output_format!r}")
        if not isinstance(self.k, int) or self.k < 1:
            raise ConfigError(f"k must be a positive integer, not {self.k!r}")
        if self.db_path is not None and not Path(self.db_path).is_file():
            raise ConfigError(f"database not found: {self.db_path}")

    @classmethod
    def from_env(cls, **kwargs) -> "RunConfig":
        """Like the constructor, with CHANDAS_DB taking precedence over db_path."""
        env = os.environ.get(DB_ENV)
        if env:
            kwargs["db_path"] = Path(env)
        return cls(**kwargs)

    def resolved_db_path(self) -> Path:
        return Path(self.db_path) if self.db_path else default_db_path()


@dataclass
class CorpusStats:
    total_lines: int = 0
    exact_count: int = 0
    fuzzy_count: int = 0
    unknown_count: int = 0
    meter_histogram: Dict[str, int] = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "total_lines": self.total_lines,
            "exact_count": self.exact_count,
            "fuzzy_count": self.fuzzy_count,
            "unknown_count": self.unknown_count,
            "meter_histogram": dict(self.meter_histogram),
        }


@dataclass
class LineReport:
    number: int
    raw: str
    text: str                       # internal (Devanagari) form
    scansion: Optional[LineScansion]
    matches: List[MatchResult] = field(default_factory=list)
    status: str = "unknown"         # exact | fuzzy | unknown
    error: Optional[str] = None

    @property
    def best(self) -> Optional[MatchResult]:
        return self.matches[0] if self.matches else None


@dataclass
class VerseReport:
    line_numbers: List[int]
    verse_meter: Optional[str]
    cumulative_cost: int
    per_line_costs: List[int]


@dataclass
class Report:
    config: RunConfig
    scheme: Scheme
    output_scheme: Scheme
    lines: List[LineReport] = field(default_factory=list)
    verses: List[VerseReport] = field(default_factory=list)
    stats: CorpusStats = field(default_factory=CorpusStats)


def split_lines(text: str) -> List[str]:
    """Split on line ends and danda marks; blank pieces are dropped."""
    return [p.strip() for p in _LINE_BREAK.split(text) if p and p.strip()]


def unknown_threshold(lg: str) -> float:
    return max(3, 0.25 * len(lg))


def classify(matches: List[MatchResult], lg: str) -> str:
    if not matches:
        return "unknown"
    best = matches[0]
    if best.kind is not MatchKind.FUZZY:
        return "exact"
    return "fuzzy" if best.cost <= unknown_threshold(lg) else "unknown"


def corpus_stats(lines: List[LineReport]) -> CorpusStats:
    statuses = Counter(ln.status for ln in lines)
    histogram = Counter(ln.best.meter for ln in lines
                        if ln.status != "unknown" and ln.best is not None)
    return CorpusStats(
        total_lines=len(lines),
        exact_count=statuses["exact"],
        fuzzy_count=statuses["fuzzy"],
        unknown_count=statuses["unknown"],
        meter_histogram=dict(sorted(histogram.items(), key=lambda kv: (-kv[1], kv[0]))),
    )


_DB_CACHE: Dict[str, MetricalDatabase] = {}


def load_config_db(config: RunConfig) -> MetricalDatabase:
    path = config.resolved_db_path()
    key = str(path.resolve())
    if key not in _DB_CACHE:
        _DB_CACHE[key] = load_database(path)
    return _DB_CACHE[key]


def _scan(number: int, raw: str, text: str) -> Optional[LineReport]:
    try:
        scansion = scan_line(text, INTERNAL)
    except ChandasError as exc:
        return LineReport(number, raw, text, None, error=str(exc))
    if not scansion.syllables:
        return None  # no letters at all: punctuation, digits
    return LineReport(number, raw, text, scansion)


def process_text(config: RunConfig, text: str,
                 db: Optional[MetricalDatabase] = None) -> Report:
    if db is None:
        db = load_config_db(config)
    report = Report(config, Scheme.DEVANAGARI, Scheme.DEVANAGARI)
    raw_lines = split_lines(text)
    if raw_lines:
        internal, scheme = to_internal("\n".join(raw_lines), config.input_scheme)
        report.scheme = scheme
        pairs = zip(raw_lines, internal.split("\n"))
    else:
        report.scheme = config.input_scheme or INTERNAL
        pairs = iter(())
    report.output_scheme = config.output_scheme or report.scheme

    for raw, line in pairs:
        entry = _scan(len(report.lines) + 1, raw, line)
        if entry is not None:
            report.lines.append(entry)

    scanned = [ln for ln in report.lines if ln.scansion is not None]
    if config.mode == "verse":
        for group in group_verses(scanned, VERSE_SIZE):
            result = identify_verse(db, [ln.scansion for ln in group], config.k)
            for ln, (_, matches) in zip(group, result.lines):
                ln.matches = matches
            report.verses.append(VerseReport(
                [ln.number for ln in group], result.verse_meter,
                result.cumulative_cost, list(result.per_line_costs)))
    else:
        for ln in scanned:
            ln.matches = identify_line(db, ln.scansion.lg_signature, config.k,
                                       ln.scansion.syllables)

    for ln in scanned:
        ln.status = classify(ln.matches, ln.scansion.lg_signature)
    report.stats = corpus_stats(report.lines)
    return report


def read_text(path: Union[str, Path]) -> str:
    try:
        with open(path, encoding="utf-8", newline="") as f:
            return f.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise FileUnreadable(f"cannot read {path}: {exc}") from exc


def process_file(config: RunConfig, path: Union[str, Path],
                 db: Optional[MetricalDatabase] = None) -> Report:
    """Same pipeline as process_text, over the contents of a UTF-8 file."""
    return process_text(config, read_text(path), db)
