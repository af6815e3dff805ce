"""
Meter identification for a single lg-signature.

Direct lookup runs first (the single-pada table, then the consecutive-pada
table, then wildcard patterns).  Only when all three miss does the fuzzy
stage rank every exact signature of the database by Levenshtein distance.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple, Union

from .errors import EmptySignature, OpsOutOfRange
from .meter_db import ANY, Entry, MetricalDatabase, query_exact, query_wildcard
from .sanskrit_text.scansion import GURU, LAGHU, Akshara, vowel_swap_hint

__all__ = [
    "MatchKind", "EditOp", "EditToken", "MatchResult", "DEFAULT_K",
    "find_direct_match", "transform", "edit_distance", "pattern_distance",
    "find_fuzzy_matches", "annotate_suggestion", "render_suggestion",
    "identify_line", "similarity", "vowel_swap_hint",
]

DEFAULT_K = 10


class MatchKind(str, Enum):
    EXACT_SINGLE = "ExactSingle"
    EXACT_MULTIPLE = "ExactMultiple"
    WILDCARD = "Wildcard"
    PADANTA_ADJUSTED = "PadantaAdjusted"
    FUZZY = "Fuzzy"

    @property
    def is_direct(self) -> bool:
        return self is not MatchKind.FUZZY


class EditOp(NamedTuple):
    """One step of an edit script, indexed on the source signature.

    ``insert`` ops insert before ``source_index``; ``target_weight`` is the
    symbol the target has at ``target_index`` (absent for deletes).
    """

    kind: str  # insert | delete | replace
    source_index: int
    target_index: int
    target_weight: Optional[str] = None


@dataclass(frozen=True)
class EditToken:
    kind: str  # Keep | Insert | Delete | Replace
    syllable: Optional[Akshara] = None
    target_weight: Optional[str] = None
    hint: Optional[str] = None
    source_weight: Optional[str] = None

    def render(self, scheme=None) -> str:
        if self.syllable is not None:
            text = self.syllable.render(scheme) if scheme else self.syllable.surface
        else:
            text = self.source_weight or ""
        if self.kind == "Keep":
            return text
        if self.kind == "Insert":
            return f"i({self.target_weight})"
        if self.kind == "Delete":
            return f"d({text})"
        hint = ""
        if self.hint is not None:
            hint = "{" + (_render_hint(self.hint, scheme) if scheme else self.hint) + "}"
        return f"r({text})[{self.target_weight}]{hint}"


@dataclass(frozen=True)
class MatchResult:
    meter: str
    pada_label: str
    kind: MatchKind
    cost: int = 0
    similarity: float = 1.0
    suggestion: Optional[Tuple[EditToken, ...]] = None
    target: str = ""


def _render_hint(hint: str, scheme) -> str:
    from .sanskrit_text.schemes import INTERNAL, transliterate
    return transliterate(hint, INTERNAL, scheme)


def similarity(cost: int, target_length: int) -> float:
    """1 - cost / len(target), floored at 0 for very distant targets."""
    if target_length <= 0:
        return 0.0
    return max(0.0, 1.0 - cost / target_length)


# --- direct matching ---------------------------------------------------------

def _lookup(db: MetricalDatabase, lg: str, which: str, kind: MatchKind) -> List[MatchResult]:
    return [MatchResult(e.name, e.label, kind, target=lg)
            for e in query_exact(db, lg, which)]


def _direct_in(db: MetricalDatabase, lg: str, which: str, kind: MatchKind) -> List[MatchResult]:
    found = _lookup(db, lg, which, kind)
    if not found and lg.endswith(LAGHU):
        found = _lookup(db, lg[:-1] + GURU, which, MatchKind.PADANTA_ADJUSTED)
    return found


def find_direct_match(db: MetricalDatabase, lg: str) -> List[MatchResult]:
    """Exact lookup in both tables (each with the padanta retry), then wildcards."""
    out = _direct_in(db, lg, "single", MatchKind.EXACT_SINGLE)
    out += _direct_in(db, lg, "multiple", MatchKind.EXACT_MULTIPLE)
    out += [MatchResult(e.name, e.label, MatchKind.WILDCARD, target=lg)
            for e in query_wildcard(db, lg)]
    return out


# --- edit distance -----------------------------------------------------------

@lru_cache(maxsize=4096)
def _peq(pattern: str) -> Dict[str, int]:
    peq = {LAGHU: 0, GURU: 0}
    for i, c in enumerate(pattern):
        peq[c] = peq.get(c, 0) | (1 << i)
    return peq


def edit_distance(a: str, b: str) -> int:
    """Unit-cost Levenshtein distance (bit-parallel, one machine word per 64 symbols)."""
    m = len(b)
    if not m:
        return len(a)
    if not a:
        return m
    peq = _peq(b)
    full = (1 << m) - 1
    high = 1 << (m - 1)
    pv, mv, score = full, 0, m
    for c in a:
        eq = peq.get(c, 0)
        xv = eq | mv
        xh = (((eq & pv) + pv) ^ pv) | eq
        ph = mv | (~(xh | pv) & full)
        mh = pv & xh
        if ph & high:
            score += 1
        elif mh & high:
            score -= 1
        ph = ((ph << 1) | 1) & full
        mh = (mh << 1) & full
        pv = mh | (~(xv | ph) & full)
        mv = ph & xv
    return score


def _suffix_table(a: str, b: str) -> List[List[int]]:
    """D[i][j] = distance between a[i:] and b[j:]; ANY in b matches anything."""
    n, m = len(a), len(b)
    d = [[0] * (m + 1) for _ in range(n + 1)]
    for i in range(n + 1):
        d[i][m] = n - i
    for j in range(m + 1):
        d[n][j] = m - j
    for i in range(n - 1, -1, -1):
        row, below = d[i], d[i + 1]
        ai = a[i]
        for j in range(m - 1, -1, -1):
            sub = below[j + 1] + (0 if b[j] == ai or b[j] == ANY else 1)
            row[j] = min(sub, below[j] + 1, row[j + 1] + 1)
    return d


def pattern_distance(a: str, pattern: str) -> int:
    """Levenshtein distance to a pattern whose ANY positions match either symbol."""
    if ANY not in pattern:
        return edit_distance(a, pattern)
    return _suffix_table(a, pattern)[0][0]


def transform(seq1: str, seq2: str) -> Tuple[int, List[EditOp]]:
    """Cost and one minimal edit script turning seq1 into seq2.

    Among minimal scripts, matches are taken as early as possible, so
    edits land at the latest position that still gives the minimum cost;
    a replace is preferred over a delete, and a delete over an insert.
    """
    d = _suffix_table(seq1, seq2)
    n, m = len(seq1), len(seq2)
    ops: List[EditOp] = []
    i = j = 0
    while i < n or j < m:
        here = d[i][j]
        if i < n and j < m:
            same = seq2[j] == seq1[i] or seq2[j] == ANY
            if same and here == d[i + 1][j + 1]:
                i, j = i + 1, j + 1
                continue
            if not same and here == d[i + 1][j + 1] + 1:
                ops.append(EditOp("replace", i, j, seq2[j]))
                i, j = i + 1, j + 1
                continue
        if i < n and here == d[i + 1][j] + 1:
            ops.append(EditOp("delete", i, j))
            i += 1
            continue
        ops.append(EditOp("insert", i, j, seq2[j]))
        j += 1
    return d[0][0], ops


# --- suggestions ---------------------------------------------------------------

def annotate_suggestion(syllables: Union[Sequence[Akshara], str],
                        ops: Sequence[EditOp]) -> Tuple[EditToken, ...]:
    """Turn an edit script into Keep/Insert/Delete/Replace tokens.

    ``syllables`` may be the scanned aksharas or, when only the signature
    is known, the lg string itself.
    """
    n = len(syllables)
    by_index: Dict[int, List[EditOp]] = {}
    for op in ops:
        limit = n if op.kind == "insert" else n - 1
        if not 0 <= op.source_index <= limit:
            raise OpsOutOfRange(f"{op.kind} at {op.source_index} for {n} syllables")
        by_index.setdefault(op.source_index, []).append(op)

    def parts(i):
        s = syllables[i]
        if isinstance(s, Akshara):
            return s, s.weight
        return None, s

    tokens: List[EditToken] = []
    for i in range(n + 1):
        edits = by_index.get(i, [])
        for op in edits:
            if op.kind == "insert":
                tokens.append(EditToken("Insert", target_weight=op.target_weight))
        if i == n:
            break
        syl, weight = parts(i)
        change = next((op for op in edits if op.kind != "insert"), None)
        if change is None:
            tokens.append(EditToken("Keep", syl, source_weight=weight))
        elif change.kind == "delete":
            tokens.append(EditToken("Delete", syl, source_weight=weight))
        else:
            hint = vowel_swap_hint(syl, change.target_weight) if syl is not None else None
            tokens.append(EditToken("Replace", syl, change.target_weight, hint, weight))
    return tuple(tokens)


def render_suggestion(tokens: Sequence[EditToken], scheme=None) -> List[str]:
    return [t.render(scheme) for t in tokens]


# --- fuzzy matching ------------------------------------------------------------

_INDEX_CACHE: Dict[int, tuple] = {}


def _fuzzy_index(db: MetricalDatabase):
    """(signatures grouped by length, entries per signature), cached per database."""
    cached = _INDEX_CACHE.get(id(db))
    if cached is not None and cached[0] is db:
        return cached[1], cached[2]
    by_length: Dict[int, set] = {}
    entries: Dict[str, List[Entry]] = {}
    for entry in db.all_exact:
        by_length.setdefault(len(entry.signature), set()).add(entry.signature)
        entries.setdefault(entry.signature, []).append(Entry(entry.name, entry.label))
    grouped = {n: tuple(sorted(sigs)) for n, sigs in by_length.items()}
    frozen = {k: tuple(v) for k, v in entries.items()}
    if len(_INDEX_CACHE) > 16:
        _INDEX_CACHE.clear()
    _INDEX_CACHE[id(db)] = (db, grouped, frozen)
    return grouped, frozen


def _sort_key(cost: int, target: str, name: str, label: str):
    return (cost, -len(target), name, label)


def find_fuzzy_matches(db: MetricalDatabase, lg: str, k: int = DEFAULT_K,
                       syllables: Optional[Sequence[Akshara]] = None) -> List[MatchResult]:
    """Top-k entries of the database by edit distance to ``lg``.

    Order: cost, then similarity (longer target first), then meter name,
    then pada label.  Lengths are visited nearest-first, and the scan stops
    once the length difference alone exceeds the current k-th best cost.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    by_length, entries = _fuzzy_index(db)
    n = len(lg)
    scored: List[Tuple[tuple, str, Entry, int]] = []
    kth = None
    for length in sorted(by_length, key=lambda L: (abs(L - n), L)):
        if kth is not None and abs(length - n) > kth:
            break
        for sig in by_length[length]:
            cost = edit_distance(lg, sig)
            if kth is not None and cost > kth:
                continue
            for entry in entries[sig]:
                scored.append((_sort_key(cost, sig, entry.name, entry.label), sig, entry, cost))
        if len(scored) >= k:
            scored.sort(key=lambda t: t[0])
            del scored[k:]
            kth = scored[-1][3]

    scored.sort(key=lambda t: t[0])
    source = syllables if syllables is not None else lg
    results = []
    for _, sig, entry, cost in scored[:k]:
        _, ops = transform(lg, sig)
        results.append(MatchResult(
            entry.name, entry.label, MatchKind.FUZZY, cost,
            similarity(cost, len(sig)), annotate_suggestion(source, ops), sig,
        ))
    return results


def identify_line(db: MetricalDatabase, lg: str, k: int = DEFAULT_K,
                  syllables: Optional[Sequence[Akshara]] = None) -> List[MatchResult]:
    """Direct matches if any, else the top-k fuzzy matches."""
    if not lg:
        raise EmptySignature("empty lg-signature")
    direct = find_direct_match(db, lg)
    if direct:
        return direct
    return find_fuzzy_matches(db, lg, k, syllables)
