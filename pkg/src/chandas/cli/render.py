"""Report renderers: scansion table, compact listing and detailed JSON."""

from __future__ import annotations

import json
from typing import List, Optional

from ..matcher import MatchKind, MatchResult, render_suggestion
from ..sanskrit_text.scansion import GANA_OF, GURU, SINGLE_OF, gana_signature
from ..sanskrit_text.schemes import INTERNAL, ROMAN, Scheme, transliterate
from .pipeline import LineReport, Report


def _surface(text: str, scheme: Scheme) -> str:
    return text if scheme is INTERNAL else transliterate(text, INTERNAL, scheme)


def _weight_mark(symbol: str, scheme: Scheme) -> str:
    if scheme in ROMAN:
        return symbol
    return _surface("ग" if symbol == GURU else "ल", scheme)


def _syllables(line: LineReport, scheme: Scheme) -> List[str]:
    return [s.render(scheme) for s in line.scansion.syllables]


def _suggestion(match: MatchResult, scheme: Scheme) -> Optional[List[str]]:
    if match.suggestion is None:
        return None
    return render_suggestion(match.suggestion, None if scheme is INTERNAL else scheme)


# --- detailed ------------------------------------------------------------------

def _match_dict(match: MatchResult, scheme: Scheme) -> dict:
    out = {
        "meter": match.meter,
        "pada_label": match.pada_label,
        "kind": match.kind.value,
        "cost": match.cost,
        "similarity": match.similarity,
    }
    if match.kind is MatchKind.FUZZY:
        out["suggestion"] = _suggestion(match, scheme)
    return out


def _line_dict(line: LineReport, report: Report) -> dict:
    scheme = report.output_scheme
    out = {
        "line": line.number,
        "raw": line.raw,
        "scheme": report.scheme.value,
        "status": line.status,
        "matches": [_match_dict(m, scheme) for m in line.matches],
    }
    if line.scansion is None:
        out["error"] = line.error
        return out
    sc = line.scansion
    out.update({
        "syllables": _syllables(line, scheme),
        "lg": sc.lg_signature,
        "gana": sc.gana_signature,
        "aksharas": sc.aksara_count,
        "matras": sc.matra_count,
        "jati": sc.jati,
    })
    return out


def report_dict(report: Report) -> dict:
    return {
        "mode": report.config.mode,
        "scheme": report.scheme.value,
        "output_scheme": report.output_scheme.value,
        "lines": [_line_dict(ln, report) for ln in report.lines],
        "verses": [
            {
                "lines": v.line_numbers,
                "verse_meter": v.verse_meter,
                "cumulative_cost": v.cumulative_cost,
                "per_line_costs": v.per_line_costs,
            }
            for v in report.verses
        ],
        "stats": report.stats.as_dict(),
    }


def dumps_canonical(data) -> str:
    return json.dumps(data, ensure_ascii=False, sort_keys=True, indent=2) + "\n"


def emit_detailed(report: Report) -> str:
    return dumps_canonical(report_dict(report))


# --- compact -------------------------------------------------------------------

def _percent(value: float) -> str:
    return f"{value * 100:.1f}%"


def _meter_title(match: MatchResult, scheme: Scheme) -> str:
    name = _surface(match.meter, scheme)
    if match.pada_label:
        name += f" ({match.pada_label})"
    return name


def emit_compact(report: Report) -> str:
    out = []
    for line in report.lines:
        best = line.best
        if best is None or line.status == "unknown":
            out.append(f"{line.number} - (unknown)")
            continue
        out.append(f"{line.number} {_meter_title(best, report.output_scheme)} "
                   f"({best.cost} edits) {_percent(best.similarity)}")
    return "\n".join(out) + ("\n" if out else "")


# --- table ---------------------------------------------------------------------

def _gana_cells(lg: str, scheme: Scheme) -> List[str]:
    """One cell per syllable; each gana letter sits under its group's first syllable."""
    cells = [""] * len(lg)
    triplets = len(lg) - len(lg) % 3
    for i in range(0, triplets, 3):
        cells[i] = _surface(GANA_OF[lg[i:i + 3]], scheme)
    for i in range(triplets, len(lg)):
        cells[i] = _surface(SINGLE_OF[lg[i]], scheme)
    return cells


def _chanda_cell(line: LineReport, scheme: Scheme) -> str:
    best = line.best
    if best is None or line.status == "unknown":
        return "-"
    title = _meter_title(best, scheme)
    if best.kind is MatchKind.FUZZY:
        return f"{title} ({best.cost} edit{'s' if best.cost != 1 else ''})"
    return title


def _line_table(line: LineReport, report: Report) -> List[str]:
    scheme = report.output_scheme
    out = [f"{line.number}. {line.raw}"]
    if line.scansion is None:
        out.append(f"  error: {line.error}")
        return out
    sc = line.scansion
    rows = [
        ("Akṣarāṇi", _syllables(line, scheme)),
        ("Laghu-Guru", [_weight_mark(c, scheme) for c in sc.lg_signature]),
        ("Gaṇa", _gana_cells(sc.lg_signature, scheme)),
    ]
    widths = [max(len(r[1][i]) for r in rows) for i in range(len(sc.lg_signature))]
    for title, cells in rows:
        padded = "  ".join(c.ljust(w) for c, w in zip(cells, widths))
        out.append(f"  {title:<11} {padded.rstrip()}")
    out.append(f"  {'Counts':<11} {sc.aksara_count} akṣaras, {sc.matra_count} mātrās")
    out.append(f"  {'Jāti':<11} {_surface(sc.jati, scheme)}")
    out.append(f"  {'Chanda':<11} {_chanda_cell(line, scheme)}")

    fuzzy = [m for m in line.matches if m.kind is MatchKind.FUZZY]
    if fuzzy:
        out.append("  Fuzzy matches:")
        for n, m in enumerate(fuzzy, 1):
            gana = gana_signature(m.target) if "-" not in m.target else m.target
            out.append(f"    {n:>2}  {_meter_title(m, scheme)}  "
                       f"{_surface(gana, scheme)}  {m.cost}  {_percent(m.similarity)}")
            out.append(f"        {' '.join(_suggestion(m, scheme))}")
    return out


def _stats_table(report: Report) -> List[str]:
    st = report.stats
    out = [
        "Statistics",
        f"  lines: {st.total_lines}  exact: {st.exact_count}  "
        f"fuzzy: {st.fuzzy_count}  unknown: {st.unknown_count}",
    ]
    for name, count in st.meter_histogram.items():
        out.append(f"  {_surface(name, report.output_scheme)}: {count}")
    return out


def emit_table(report: Report) -> str:
    out: List[str] = []
    verse_of = {n: v for v in report.verses for n in v.line_numbers}
    shown = set()
    for line in report.lines:
        verse = verse_of.get(line.number)
        if verse is not None and id(verse) not in shown:
            shown.add(id(verse))
            name = _surface(verse.verse_meter, report.output_scheme) if verse.verse_meter else "-"
            out.append(f"Verse (lines {verse.line_numbers[0]}-{verse.line_numbers[-1]}): "
                       f"{name}, cumulative cost {verse.cumulative_cost}")
        out.extend(_line_table(line, report))
        out.append("")
    out.extend(_stats_table(report))
    return "\n".join(out) + "\n"


RENDERERS = {"table": emit_table, "compact": emit_compact, "detailed": emit_detailed}


def render_report(report: Report) -> str:
    return RENDERERS[report.config.output_format](report)
