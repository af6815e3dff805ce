import json

import pytest

from chandas.cli import (
    RunConfig, emit_compact, emit_detailed, process_file, process_text,
    run_error_injection_eval, split_lines,
)
from chandas.cli.evaluation import apply_random_edit
from chandas.cli.main import main
from chandas.errors import ConfigError, FileUnreadable
from conftest import FIGURE4, MARATHI, SHALINI, TELUGU


def synth(lg):
    """A Devanagari line that scans to ``lg``."""
    return "".join("का" if c == "G" else "क" for c in lg)


def test_split_lines():
    assert split_lines("a।b॥c") == ["a", "b", "c"]
    assert split_lines("\n".join(FIGURE4)) == [l.rstrip("।॥") for l in FIGURE4]
    assert split_lines("") == []
    assert split_lines("x\r\ny\rz\n\n।।w") == ["x", "y", "z", "w"]
    assert split_lines("a 3.5 b. c") == ["a 3.5 b", "c"]


def test_figure4_verse_report():
    report = process_text(RunConfig(mode="verse"), "\n".join(FIGURE4))
    first = report.lines[0]
    assert first.best.meter == "भुजङ्गप्रयात" and first.best.cost == 1
    assert report.verses[0].verse_meter == "भुजङ्गप्रयात"


def test_figure4_table_chanda_cell():
    from chandas.cli import emit_table
    text = emit_table(process_text(RunConfig(mode="verse"), "\n".join(FIGURE4)))
    assert "भुजङ्गप्रयात (1 edit)" in text


def test_marathi_line():
    line = process_text(RunConfig(), MARATHI).lines[0]
    sc = line.scansion
    assert (sc.aksara_count, sc.matra_count, sc.jati) == (17, 24, "अत्यष्टि")
    assert line.best.meter == "पृथ्वी"


def test_telugu_output():
    from chandas.sanskrit_text.schemes import Scheme
    report = process_text(RunConfig(output_scheme=Scheme.TELUGU), TELUGU)
    data = json.loads(emit_detailed(report))
    line = data["lines"][0]
    assert (line["aksharas"], line["matras"], line["jati"]) == (20, 30, "कृति")
    assert line["syllables"][:3] == ["సి", "రి", "కిం"]
    assert line["matches"][0]["meter"] == "मत्तेभविक्रीडित"


def test_stats_exact_file(tmp_path, db):
    pattern = db.meters["मन्दाक्रान्ता"].padas[0].symbols
    path = tmp_path / "m.txt"
    path.write_text("\n".join([synth(pattern)] * 100), encoding="utf-8")
    st = process_file(RunConfig(), path).stats
    assert (st.total_lines, st.exact_count, st.fuzzy_count, st.unknown_count) == (100, 100, 0, 0)
    assert st.meter_histogram == {"मन्दाक्रान्ता": 100}


def test_stats_one_corrupted(tmp_path, db):
    pattern = db.meters["मन्दाक्रान्ता"].padas[0].symbols
    bad = pattern[:5] + ("L" if pattern[5] == "G" else "G") + pattern[6:]
    lines = [synth(pattern)] * 99 + [synth(bad)]
    path = tmp_path / "m.txt"
    path.write_text("\n".join(lines), encoding="utf-8")
    st = process_file(RunConfig(), path).stats
    assert (st.exact_count, st.fuzzy_count) == (99, 1)
    assert sum(st.meter_histogram.values()) == 100


def test_empty_file(tmp_path):
    path = tmp_path / "e.txt"
    path.write_text("", encoding="utf-8")
    st = process_file(RunConfig(), path).stats
    assert (st.total_lines, st.exact_count, st.fuzzy_count, st.unknown_count) == (0, 0, 0, 0)


def test_unreadable_file(tmp_path):
    with pytest.raises(FileUnreadable):
        process_file(RunConfig(), tmp_path / "missing.txt")


def test_unknown_threshold():
    # LGGGGGLLL is 4 edits from every shipped signature; the cutoff is 3
    report = process_text(RunConfig(), synth("LGGGGGLLL"))
    assert report.lines[0].status == "unknown"
    assert report.stats.unknown_count == 1


def test_bad_config(tmp_path):
    with pytest.raises(ConfigError):
        RunConfig(k=0)
    with pytest.raises(ConfigError):
        RunConfig(mode="stanza")
    with pytest.raises(ConfigError):
        RunConfig(db_path=tmp_path / "none.tsv")


def test_compact_format():
    text = emit_compact(process_text(RunConfig(), SHALINI[0]))
    assert text == "1 वातोर्मी (1 edits) 90.9%\n"


def test_detailed_fields():
    data = json.loads(emit_detailed(process_text(RunConfig(mode="verse"), "\n".join(SHALINI))))
    line = data["lines"][1]
    for key in ("raw", "scheme", "syllables", "lg", "gana", "aksharas", "matras", "jati", "matches"):
        assert key in line
    assert "suggestion" not in line["matches"][0]
    assert data["verses"][0]["verse_meter"] == "शालिनी"
    assert data["verses"][0]["cumulative_cost"] == 2
    assert set(data["stats"]) >= {"total_lines", "exact_count", "fuzzy_count",
                                  "unknown_count", "meter_histogram"}


def test_output_scheme_changes_only_surface():
    from chandas.sanskrit_text.schemes import Scheme
    text = "\n".join(SHALINI)
    a = json.loads(emit_detailed(process_text(RunConfig(mode="verse"), text)))
    b = json.loads(emit_detailed(process_text(
        RunConfig(mode="verse", output_scheme=Scheme.IAST), text)))
    strip = lambda d: [
        {k: v for k, v in ln.items() if k != "syllables"}
        | {"matches": [{k: v for k, v in m.items() if k != "suggestion"} for m in ln["matches"]]}
        for ln in d["lines"]
    ]
    assert strip(a) == strip(b)
    assert a["verses"] == b["verses"] and a["stats"] == b["stats"]
    assert b["lines"][0]["syllables"][:2] == ["mā", "tā"]


def test_eval_exact_verses():
    report = run_error_injection_eval(RunConfig(), trials=50, edits=0)
    assert report.verse_accuracy == 1.0 and report.topk_rate == 1.0


def test_random_edit_changes_length_by_at_most_one():
    import random
    rng = random.Random(0)
    for _ in range(200):
        lg = "".join(rng.choice("LG") for _ in range(rng.randint(1, 10)))
        edited = apply_random_edit(lg, rng)
        assert abs(len(edited) - len(lg)) <= 1 and edited


def test_main_identify(capsys):
    assert main(["identify", "--format", "compact", SHALINI[1]]) == 0
    assert capsys.readouterr().out == "1 शालिनी (0 edits) 100.0%\n"


def test_main_out_file(tmp_path):
    out = tmp_path / "r.json"
    assert main(["identify", "--format", "detailed", "--out", str(out), SHALINI[1]]) == 0
    assert json.loads(out.read_text(encoding="utf-8"))["lines"][0]["lg"] == "GGGGGLGGLGG"


def test_main_exit_codes(tmp_path, capsys):
    assert main(["file", str(tmp_path / "missing.txt")]) == 1
    assert main(["identify", "--db", str(tmp_path / "none.tsv"), "x"]) == 2
    assert main(["identify", "123 ?!"]) == 2
    capsys.readouterr()


def test_env_db_overrides(tmp_path, monkeypatch, capsys):
    path = tmp_path / "one.tsv"
    path.write_text("vrtta\tpada\tlakshana\nकल्पित\t\tGGGGGLGGLGG\n", encoding="utf-8")
    monkeypatch.setenv("CHANDAS_DB", str(path))
    assert main(["identify", "--format", "compact", SHALINI[1]]) == 0
    assert "कल्पित" in capsys.readouterr().out


def test_main_eval(capsys):
    assert main(["eval", "--trials", "5", "--edits", "0", "--format", "detailed"]) == 0
    assert json.loads(capsys.readouterr().out)["verse_accuracy"] == 1.0
