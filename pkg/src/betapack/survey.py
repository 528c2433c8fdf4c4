"""Corpus survey: gamma_alpha vs beta-pack over a stream of graph6 lines.

Records come out in input order times value order regardless of how many
worker processes are used, so reruns are byte-identical.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .domination import VERDICTS, compare_parameters
from .errors import BetaPackError, InvariantViolation
from .graph import parse_graph6
from .rational import check_unit_ratio, format_ratio

__all__ = ["SurveyRecord", "SurveySummary", "survey_records", "run_survey", "read_graph6_lines"]


@dataclass(frozen=True)
class SurveyRecord:
    graph_id: str
    n: int
    m: int
    value: Fraction
    gamma_alpha: int
    beta_pack: int
    verdict: str
    gamma_witness: frozenset[int]
    pack_witness: frozenset[int]

    def __post_init__(self):
        expected = "less" if self.beta_pack < self.gamma_alpha else (
            "greater" if self.beta_pack > self.gamma_alpha else "equal")
        if self.verdict != expected:
            raise InvariantViolation(f"verdict {self.verdict!r} inconsistent for {self.graph_id}")

    def to_dict(self) -> dict:
        return {
            "id": self.graph_id,
            "n": self.n,
            "m": self.m,
            "value": format_ratio(self.value),
            "gamma": self.gamma_alpha,
            "pack": self.beta_pack,
            "verdict": self.verdict,
            "gamma_witness": sorted(self.gamma_witness),
            "pack_witness": sorted(self.pack_witness),
        }


@dataclass
class SurveySummary:
    records: int = 0
    skipped: int = 0
    counts: dict = field(default_factory=lambda: {v: 0 for v in VERDICTS})
    max_pack_minus_gamma: dict | None = None
    max_gamma_minus_pack: dict | None = None

    def add(self, rec: SurveyRecord) -> None:
        self.records += 1
        self.counts[rec.verdict] += 1
        diff = rec.beta_pack - rec.gamma_alpha
        ref = {"id": rec.graph_id, "value": format_ratio(rec.value), "diff": diff}
        if self.max_pack_minus_gamma is None or diff > self.max_pack_minus_gamma["diff"]:
            self.max_pack_minus_gamma = ref
        neg = dict(ref, diff=-diff)
        if self.max_gamma_minus_pack is None or -diff > self.max_gamma_minus_pack["diff"]:
            self.max_gamma_minus_pack = neg

    def to_dict(self) -> dict:
        return {
            "records": self.records,
            "skipped": self.skipped,
            "counts": dict(self.counts),
            "max_pack_minus_gamma": self.max_pack_minus_gamma,
            "max_gamma_minus_pack": self.max_gamma_minus_pack,
        }


def read_graph6_lines(stream: Iterable[str]) -> list[str]:
    out = []
    for raw in stream:
        line = raw.strip()
        if line and not line.startswith("#"):
            out.append(line)
    return out


def _survey_one(args) -> list:
    line, values, method, cap = args
    try:
        G = parse_graph6(line)
        out = []
        for value in values:
            cmp = compare_parameters(G, value, method=method, cap=cap)
            out.append(SurveyRecord(
                graph_id=line, n=G.n, m=G.m, value=cmp.value,
                gamma_alpha=cmp.gamma, beta_pack=cmp.pack, verdict=cmp.verdict,
                gamma_witness=cmp.gamma_witness, pack_witness=cmp.pack_witness,
            ))
        return out
    except InvariantViolation:
        raise
    except BetaPackError as exc:
        return [{"id": line, "error": str(exc)}]


def survey_records(
    lines: Sequence[str],
    values: Sequence,
    method: str = "branch_and_bound",
    cap: int | None = None,
    jobs: int = 1,
) -> tuple[list, SurveySummary]:
    """Records (and error entries, as dicts) in deterministic order, plus the summary."""
    values = [check_unit_ratio(v, "value") for v in values]
    tasks = [(line, values, method, cap) for line in lines]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_survey_one, tasks, chunksize=8))
    else:
        chunks = [_survey_one(t) for t in tasks]
    summary = SurveySummary()
    entries: list = []
    for chunk in chunks:
        for item in chunk:
            if isinstance(item, dict):
                summary.skipped += 1
            else:
                summary.add(item)
            entries.append(item)
    return entries, summary


def run_survey(
    stream: Iterable[str],
    values: Sequence,
    output_path=None,
    method: str = "branch_and_bound",
    cap: int | None = None,
    jobs: int = 1,
) -> SurveySummary:
    """Survey a graph6 stream and write JSON Lines to ``output_path`` if given."""
    entries, summary = survey_records(read_graph6_lines(stream), values, method, cap, jobs)
    if output_path is not None:
        with open(output_path, "w", encoding="utf-8", newline="\n") as fh:
            for item in entries:
                payload = item if isinstance(item, dict) else item.to_dict()
                fh.write(json.dumps(payload) + "\n")
    return summary
