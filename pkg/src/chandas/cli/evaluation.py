"""
Synthetic error-injection evaluation.

Verses are built from the pada patterns of randomly chosen meters, a fixed
number of random single-symbol edits is applied, and the verse is run
through verse-mode identification.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import List, Optional

from ..matcher import identify_line
from ..meter_db import Meter, MetricalDatabase
from ..sanskrit_text.scansion import GURU, LAGHU
from ..verse import identify_verse
from .pipeline import RunConfig, load_config_db

SYMBOLS = (LAGHU, GURU)


@dataclass(frozen=True)
class EvalReport:
    trials: int
    edits: int
    k: int
    seed: int
    verse_accuracy: float
    topk_rate: float

    def as_dict(self) -> dict:
        return {
            "trials": self.trials, "edits": self.edits, "k": self.k, "seed": self.seed,
            "verse_accuracy": self.verse_accuracy, "topk_rate": self.topk_rate,
        }


def apply_random_edit(lg: str, rng: random.Random) -> str:
    """One random insert, delete or replace; a single symbol is never deleted."""
    ops = ["insert", "replace"] + (["delete"] if len(lg) > 1 else [])
    op = rng.choice(ops)
    if op == "insert":
        i = rng.randrange(len(lg) + 1)
        return lg[:i] + rng.choice(SYMBOLS) + lg[i:]
    i = rng.randrange(len(lg))
    if op == "delete":
        return lg[:i] + lg[i + 1:]
    flipped = GURU if lg[i] == LAGHU else LAGHU
    return lg[:i] + flipped + lg[i + 1:]


def synthesize_verse(meter: Meter, edits: int, rng: random.Random) -> List[str]:
    padas = [p.symbols for p in meter.padas]
    for _ in range(edits):
        n = rng.randrange(len(padas))
        padas[n] = apply_random_edit(padas[n], rng)
    return padas


def _same_meter(db: MetricalDatabase, a: Optional[str], b: str) -> bool:
    """Equal names, or two meters with identical pada patterns."""
    if a == b:
        return True
    if a is None or a not in db.meters:
        return False
    return db.meters[a].padas == db.meters[b].padas


def run_error_injection_eval(config: RunConfig, trials: int, edits: int,
                             seed: int = 0,
                             db: Optional[MetricalDatabase] = None) -> EvalReport:
    """Verse accuracy and per-line top-k rate on synthetic corrupted verses.

    Only meters without free positions are sampled, since a wildcard
    pattern has no single canonical verse to start from.  The top-k rate
    counts lines (four per trial) whose line-mode results name the source.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if edits < 0:
        raise ValueError("edits must be non-negative")
    if db is None:
        db = load_config_db(config)
    rng = random.Random(seed)
    pool = sorted(name for name, m in db.meters.items() if m.is_exact)

    verse_hits = line_hits = line_total = 0
    for _ in range(trials):
        name = rng.choice(pool)
        lines = synthesize_verse(db.meters[name], edits, rng)
        result = identify_verse(db, lines, config.k)
        verse_hits += _same_meter(db, result.verse_meter, name)
        for lg in lines:
            found = identify_line(db, lg, config.k)
            line_hits += any(_same_meter(db, m.meter, name) for m in found)
            line_total += 1

    return EvalReport(trials, edits, config.k, seed,
                      verse_hits / trials, line_hits / line_total)
