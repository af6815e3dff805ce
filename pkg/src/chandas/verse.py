"""
Verse mode: pick the one meter that is cheapest over all lines together.

Line i is scored against pada ((i - 1) mod 4) + 1 of every meter in the
database.  A two-line verse is also read as two half-verses (padas 1-2 and
3-4 run together), and the cheaper reading is kept.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from .errors import EmptySignature, EmptyVerse
from .matcher import (
    DEFAULT_K, MatchKind, MatchResult, annotate_suggestion, identify_line,
    pattern_distance, similarity, transform,
)
from .meter_db import Meter, MetricalDatabase, pada_label
from .sanskrit_text.scansion import GURU, LAGHU, LineScansion

VERSE_SIZE = 4

LineInput = Union[str, LineScansion]


@dataclass
class VerseResult:
    lines: List[Tuple[Optional[LineScansion], List[MatchResult]]] = field(default_factory=list)
    verse_meter: Optional[str] = None
    cumulative_cost: int = 0
    per_line_costs: List[int] = field(default_factory=list)


@dataclass(frozen=True)
class _Reading:
    """A meter's fit to the verse: one target pattern and label per line."""

    meter: Meter
    targets: Tuple[str, ...]
    labels: Tuple[str, ...]
    costs: Tuple[int, ...]
    adjusted: Tuple[bool, ...]

    @property
    def total(self) -> int:
        return sum(self.costs)

    def sort_key(self):
        # at equal cost a literal fit beats one that needed the padanta retry
        return (self.total, sum(self.adjusted), not self.meter.is_exact, self.meter.name)


def _line_cost(lg: str, target: str) -> Tuple[int, bool]:
    """Edit cost of a line against a target; a padanta laghu counts as a match."""
    cost = pattern_distance(lg, target)
    if cost and lg.endswith(LAGHU) and pattern_distance(lg[:-1] + GURU, target) == 0:
        return 0, True
    return cost, False


def _read(meter: Meter, lgs: Sequence[str], targets: Sequence[str],
          labels: Sequence[str]) -> _Reading:
    scored = [_line_cost(lg, t) for lg, t in zip(lgs, targets)]
    return _Reading(meter, tuple(targets), tuple(labels),
                    tuple(c for c, _ in scored), tuple(a for _, a in scored))


def _readings(meter: Meter, lgs: Sequence[str]) -> Iterable[_Reading]:
    positions = range(1, len(lgs) + 1)
    yield _read(meter, lgs,
                [meter.pattern_for(i).symbols for i in positions],
                [meter.label_for(i) for i in positions])
    if len(lgs) == 2:
        p = [pat.symbols for pat in meter.padas]
        yield _read(meter, lgs, [p[0] + p[1], p[2] + p[3]],
                    [pada_label(1, 2), pada_label(3, 4)])


def rank_meters(db: MetricalDatabase, lgs: Sequence[str]) -> List[_Reading]:
    """Best reading of every meter, cheapest first."""
    best = []
    for meter in db.meters.values():
        best.append(min(_readings(meter, lgs), key=_Reading.sort_key))
    best.sort(key=_Reading.sort_key)
    return best


def _verse_match(reading: _Reading, n: int, lg: str, syllables) -> MatchResult:
    target = reading.targets[n]
    label = reading.labels[n]
    name = reading.meter.name
    if reading.costs[n] == 0:
        if reading.adjusted[n]:
            kind = MatchKind.PADANTA_ADJUSTED
        elif "-" in target:
            kind = MatchKind.WILDCARD
        elif len(target) == len(reading.meter.padas[n % 4]):
            kind = MatchKind.EXACT_SINGLE
        else:
            kind = MatchKind.EXACT_MULTIPLE
        return MatchResult(name, label, kind, target=target)
    cost, ops = transform(lg, target)
    source = syllables if syllables is not None else lg
    return MatchResult(name, label, MatchKind.FUZZY, cost,
                       similarity(cost, len(target)),
                       annotate_suggestion(source, ops), target)


def identify_verse(db: MetricalDatabase, lines: Sequence[LineInput],
                   k: int = DEFAULT_K) -> VerseResult:
    """Identify the meter of one verse by minimum cumulative edit cost.

    ``lines`` are lg-signatures or scanned lines.  Each line keeps its own
    line-mode results, with the verse meter moved (or added) to the front.
    """
    if not lines:
        raise EmptyVerse("verse has no lines")
    scans = [ln if isinstance(ln, LineScansion) else None for ln in lines]
    lgs = [ln.lg_signature if isinstance(ln, LineScansion) else ln for ln in lines]
    if any(not lg for lg in lgs):
        raise EmptySignature("verse contains a line with an empty lg-signature")

    per_line = [identify_line(db, lg, k, scan.syllables if scan else None)
                for lg, scan in zip(lgs, scans)]
    ranking = rank_meters(db, lgs)
    if not ranking:
        return VerseResult(list(zip(scans, per_line)))

    best = ranking[0]
    out_lines = []
    for n, (lg, scan, results) in enumerate(zip(lgs, scans, per_line)):
        mine = [r for r in results if r.meter == best.meter.name
                and r.pada_label == best.labels[n] and r.cost == best.costs[n]]
        head = mine[0] if mine else _verse_match(
            best, n, lg, scan.syllables if scan else None)
        rest = [r for r in results if r.meter != best.meter.name]
        out_lines.append((scan, ([head] + rest)[:max(k, len(results))]))

    return VerseResult(out_lines, best.meter.name, best.total, list(best.costs))


def group_verses(items: Sequence, size: int = VERSE_SIZE) -> List[List]:
    """Consecutive groups of ``size`` lines; a short trailing group is kept."""
    return [list(items[i:i + size]) for i in range(0, len(items), size)]
