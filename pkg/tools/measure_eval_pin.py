#!/usr/bin/env python3
"""
Measure the error-injection pins with the test oracles (brute-force DP).

The synthetic verses are drawn exactly as the harness draws them; the
identification itself is done by tests/oracles.py, not by the package.
"""

import random
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "tests"))

from oracles import dp_distance, oracle_top_k, oracle_verse_meter  # noqa: E402

from chandas.cli.evaluation import synthesize_verse  # noqa: E402
from chandas.meter_db import load_database  # noqa: E402


def _table_hits(lg, table):
    """Literal hits in one table, else the padanta retry (final L read as G)."""
    hits = {name for sig, name in table if sig == lg}
    if not hits and lg.endswith("L"):
        hits = {name for sig, name in table if sig == lg[:-1] + "G"}
    return hits


def oracle_line_names(db, lg, k):
    single, wild = [], []
    for meter in db.meters.values():
        for pada in meter.padas:
            (wild if "-" in pada.symbols else single).append((pada.symbols, meter.name))
        # a wildcard meter's half-verse written as one line
        first_half = meter.padas[0].symbols + meter.padas[1].symbols
        if "-" in first_half:
            wild.append((first_half, meter.name))
    halves = [(e.signature, e.name) for e in db.all_exact if "–" in e.label]
    names = _table_hits(lg, single) | _table_hits(lg, halves)
    names |= {name for p, name in wild if dp_distance(lg, p) == 0}
    if names:
        return names
    return {name for name, _, _ in oracle_top_k(lg, db.all_exact, k)}


def main(trials=500, edits=1, seed=0, k=10):
    db = load_database()
    rng = random.Random(seed)
    pool = sorted(n for n, m in db.meters.items() if m.is_exact)
    same = lambda a, b: a == b or db.meters[a].padas == db.meters[b].padas
    verse_hits = line_hits = 0
    for _ in range(trials):
        name = rng.choice(pool)
        lines = synthesize_verse(db.meters[name], edits, rng)
        best, _ = oracle_verse_meter(db.meters, lines)
        verse_hits += same(best, name)
        for lg in lines:
            line_hits += any(same(n, name) for n in oracle_line_names(db, lg, k))
    print(f"verse accuracy {verse_hits / trials:.4f}")
    print(f"top-{k} rate {line_hits / (4 * trials):.4f}")


if __name__ == "__main__":
    main()
