import json
from fractions import Fraction

from betapack import parse_graph6, satisfies_alpha_domination, satisfies_packing
from betapack.cli import main
from betapack.survey import run_survey, survey_records

# verdict counts at 1/2 over all 31 connected graphs on 1..5 vertices,
# frozen from the naive oracle (networkx decode + full enumeration)
GOLDEN_COUNTS = {"less": 3, "equal": 18, "greater": 10}


def corpus_lines(data_dir):
    return (data_dir / "connected_le5.g6").read_text().splitlines()


def test_golden_counts(data_dir):
    entries, summary = survey_records(
        [l for l in corpus_lines(data_dir) if not l.startswith("#")], [Fraction(1, 2)]
    )
    assert summary.records == 31 and summary.skipped == 0
    assert summary.counts == GOLDEN_COUNTS
    assert summary.max_pack_minus_gamma["diff"] == 2
    assert summary.max_gamma_minus_pack["diff"] == 1


def test_jsonl_records_verify(data_dir, tmp_path):
    out = tmp_path / "s.jsonl"
    run_survey(corpus_lines(data_dir), ["1/3", "1/2"], out)
    lines = out.read_text().splitlines()
    assert len(lines) == 62
    for line in lines:
        rec = json.loads(line)
        assert list(rec) == ["id", "n", "m", "value", "gamma", "pack", "verdict", "gamma_witness", "pack_witness"]
        G = parse_graph6(rec["id"])
        value = Fraction(rec["value"])
        assert satisfies_packing(G, rec["pack_witness"], value)
        assert satisfies_alpha_domination(G, rec["gamma_witness"], value)
        assert len(rec["pack_witness"]) == rec["pack"] and len(rec["gamma_witness"]) == rec["gamma"]
    # input order x value order
    assert [json.loads(l)["value"] for l in lines[:4]] == ["1/3", "1/2", "1/3", "1/2"]


def test_empty_stream(tmp_path):
    out = tmp_path / "s.jsonl"
    summary = run_survey([], ["1/2"], out)
    assert summary.records == 0 and summary.skipped == 0
    assert out.read_text() == ""


def test_single_k2(tmp_path):
    out = tmp_path / "s.jsonl"
    run_survey(["A_"], ["1/2"], out)
    rec = json.loads(out.read_text())
    # any singleton leaves the other vertex at ratio 1
    assert rec["pack"] == 0 and rec["gamma"] == 1 and rec["verdict"] == "less"


def test_malformed_line_recorded_and_skipped(tmp_path):
    out = tmp_path / "s.jsonl"
    summary = run_survey(["A_", "A", "Bw"], ["1/2"], out)
    lines = [json.loads(l) for l in out.read_text().splitlines()]
    assert summary.skipped == 1 and summary.records == 2
    assert lines[1]["id"] == "A" and "error" in lines[1]


def test_parallel_matches_sequential(data_dir, tmp_path):
    a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    run_survey(corpus_lines(data_dir), ["1/2", "1"], a, jobs=1)
    run_survey(corpus_lines(data_dir), ["1/2", "1"], b, jobs=3)
    assert a.read_bytes() == b.read_bytes()


def test_cli_survey(capsys, data_dir, tmp_path):
    out = tmp_path / "s.jsonl"
    code = main(["survey", "--input", str(data_dir / "connected_le5.g6"), "--values", "1/2",
                 "--output", str(out), "--format", "json"])
    payload = json.loads(capsys.readouterr().out)
    assert code == 0
    assert payload["counts"] == GOLDEN_COUNTS
    code = main(["survey", "--input", str(data_dir / "connected_le5.g6"), "--values", "1/2"])
    text = capsys.readouterr().out
    assert code == 0 and "verdict greater" in text
