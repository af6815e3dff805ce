import random

import pytest
from hypothesis import given, settings, strategies as st

from chandas.errors import EmptySignature, OpsOutOfRange
from chandas.matcher import (
    EditOp, MatchKind, annotate_suggestion, edit_distance, find_direct_match,
    find_fuzzy_matches, identify_line, pattern_distance, render_suggestion, transform,
)
from chandas.sanskrit_text.scansion import scan_line
from conftest import FIGURE4, SHALINI
from oracles import dp_distance, oracle_top_k

signatures = st.text(alphabet="LG", max_size=30)


def apply_script(a, ops):
    """Rebuild the target from the source and an edit script."""
    at = {}
    for op in ops:
        at.setdefault(op.source_index, []).append(op)
    out = []
    for i in range(len(a) + 1):
        here = at.get(i, [])
        out += [op.target_weight for op in here if op.kind == "insert"]
        if i == len(a):
            break
        change = [op for op in here if op.kind != "insert"]
        if not change:
            out.append(a[i])
        elif change[0].kind == "replace":
            out.append(change[0].target_weight)
    return "".join(out)


@settings(max_examples=1000)
@given(signatures, signatures)
def test_distance_matches_dp(a, b):
    assert edit_distance(a, b) == dp_distance(a, b)
    cost, ops = transform(a, b)
    assert cost == dp_distance(a, b) == len(ops)


@settings(max_examples=500)
@given(signatures, signatures)
def test_script_is_sound(a, b):
    _, ops = transform(a, b)
    assert apply_script(a, ops) == b


@settings(max_examples=300)
@given(signatures, st.text(alphabet="LG-", min_size=1, max_size=12))
def test_wildcard_distance(a, pattern):
    assert pattern_distance(a, pattern) == dp_distance(a, pattern)


def test_transform_examples():
    assert transform("LGGLGGLGGLLG", "LGGLGGLGGLGG")[0] == 1
    assert transform("LG", "LG") == (0, [])


def test_praharshini_cost(db):
    target = db.meters["प्रहर्षिणी"].padas[0].symbols
    assert transform("GGGGLLLGGLGG", target)[0] == 2


def test_direct_examples(db):
    hit, = find_direct_match(db, "GGGGGLGGLGG")
    assert (hit.meter, hit.kind) == ("शालिनी", MatchKind.EXACT_SINGLE)
    hit, = find_direct_match(db, "GGGGGLGGLGL")
    assert (hit.meter, hit.kind) == ("शालिनी", MatchKind.PADANTA_ADJUSTED)
    assert find_direct_match(db, "LLLLLLLLLLL") == []


def test_padanta_only_after_final_laghu(db):
    rng = random.Random(3)
    for _ in range(2000):
        lg = "".join(rng.choice("LG") for _ in range(rng.randint(1, 20)))
        for m in find_direct_match(db, lg):
            if m.kind is MatchKind.PADANTA_ADJUSTED:
                assert lg.endswith("L")


def test_direct_gates_fuzzy(db):
    for sig in db.single:
        if "-" not in sig:
            assert all(m.kind.is_direct for m in identify_line(db, sig, 10))


def test_empty_signature(db):
    with pytest.raises(EmptySignature):
        identify_line(db, "", 10)


def test_figure4_top5(db):
    sc = scan_line(FIGURE4[0])
    top = identify_line(db, sc.lg_signature, 10, sc.syllables)
    got = [(m.meter, m.pada_label, m.cost, round(m.similarity * 100, 1)) for m in top[:5]]
    assert got == [
        ("भुजङ्गप्रयात", "", 1, 91.7),
        ("स्रग्विणी", "", 2, 83.3),
        ("विध्वङ्कमाला", "", 2, 81.8),
        ("हंसमाला", "Pāda 1–2", 3, 78.6),
        ("इन्द्रवंशा", "", 3, 75.0),
    ]
    kinds = [t.kind for t in top[0].suggestion]
    assert kinds == ["Keep"] * 10 + ["Replace", "Keep"]
    replace = top[0].suggestion[10]
    assert (replace.syllable.surface, replace.target_weight, replace.hint) == ("भु", "G", "भू")
    assert render_suggestion(top[0].suggestion)[10] == "r(भु)[G]{भू}"


def test_figure6_vatormi_delete(db):
    sc = scan_line(SHALINI[0])
    top = identify_line(db, sc.lg_signature, 10, sc.syllables)
    assert (top[0].meter, top[0].cost, round(top[0].similarity * 100, 1)) == ("वातोर्मी", 1, 90.9)
    edits = [(i, t) for i, t in enumerate(top[0].suggestion) if t.kind != "Keep"]
    assert len(edits) == 1
    index, token = edits[0]
    assert (index, token.kind, token.syllable.surface) == (6, "Delete", "पि")
    assert (top[1].meter, top[1].cost, round(top[1].similarity * 100, 1)) == ("प्रहर्षिणी", 2, 84.6)


def test_annotate_without_ops():
    sc = scan_line("भारत")
    assert [t.kind for t in annotate_suggestion(sc.syllables, [])] == ["Keep"] * 3


def test_annotate_out_of_range():
    sc = scan_line("भारत")
    with pytest.raises(OpsOutOfRange):
        annotate_suggestion(sc.syllables, [EditOp("delete", 3, 0)])


def test_annotate_insert_marker():
    tokens = annotate_suggestion("LG", [EditOp("insert", 2, 2, "G")])
    assert render_suggestion(tokens) == ["L", "G", "i(G)"]


def test_result_invariants(db):
    rng = random.Random(5)
    for _ in range(100):
        lg = "".join(rng.choice("LG") for _ in range(rng.randint(5, 25)))
        results = find_fuzzy_matches(db, lg, 10)
        keys = [(m.cost, -len(m.target), m.meter, m.pada_label) for m in results]
        assert keys == sorted(keys)
        for m in results:
            assert m.cost == sum(t.kind != "Keep" for t in m.suggestion)
            assert m.similarity == pytest.approx(max(0.0, 1 - m.cost / len(m.target)))
            assert (m.similarity == 1) == (m.cost == 0)


def test_fuzzy_agrees_with_oracle(db):
    rng = random.Random(11)
    for _ in range(100):
        lg = "".join(rng.choice("LG") for _ in range(12))
        got = [(m.meter, m.pada_label, m.cost) for m in find_fuzzy_matches(db, lg, 10)]
        assert got == oracle_top_k(lg, db.all_exact, 10)


def test_exact_signature_ranks_first_in_fuzzy(db):
    top = find_fuzzy_matches(db, "LGGLGGLGGLGG", 3)
    assert (top[0].meter, top[0].cost) == ("भुजङ्गप्रयात", 0)
