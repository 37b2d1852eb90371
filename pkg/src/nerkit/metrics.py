"""Span micro precision/recall/F1, per-type breakdowns, row averages.

Matching is exact and per sentence: a predicted chunk scores a true
positive iff a gold chunk with the same (type, start, end) exists in the
same sentence. 0/0 ratios are defined as 0, so all-O predictions stay
well-defined.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Mapping, NamedTuple, Sequence

from .chunking import erase_types, extract_chunks
from .corpus import TagLike
from .errors import ConfigError, EmptyInput, LengthMismatch

TYPE_AWARE = "type-aware"
TYPE_IGNORED = "type-ignored"
MODES = (TYPE_AWARE, TYPE_IGNORED)


@dataclass(frozen=True)
class EvalCounts:
    tp: int = 0
    fp: int = 0
    fn: int = 0

    def __add__(self, other: "EvalCounts") -> "EvalCounts":
        return EvalCounts(self.tp + other.tp, self.fp + other.fp, self.fn + other.fn)


class Scores(NamedTuple):
    precision: float
    recall: float
    f1: float


class TypeScores(NamedTuple):
    precision: float
    recall: float
    f1: float
    support: int


@dataclass(frozen=True)
class EvalReport:
    mode: str
    micro: Scores
    per_type: Mapping[str, TypeScores]
    counts: EvalCounts


def _prf(tp: int, fp: int, fn: int) -> Scores:
    precision = tp / (tp + fp) if tp + fp else 0.0
    recall = tp / (tp + fn) if tp + fn else 0.0
    f1 = 2 * precision * recall / (precision + recall) if precision + recall else 0.0
    return Scores(precision, recall, f1)


def score(
    gold: Sequence[Sequence[TagLike]],
    pred: Sequence[Sequence[TagLike]],
    mode: str = TYPE_AWARE,
) -> EvalReport:
    """Micro-average span matching over sentence pairs.

    In type-ignored mode both sides pass through :func:`erase_types`
    first, so only boundaries have to agree.
    """
    if mode not in MODES:
        raise ConfigError(f"mode must be one of {MODES}, got {mode!r}")
    if len(gold) != len(pred):
        raise LengthMismatch(min(len(gold), len(pred)))

    tp: dict[str, int] = {}
    fp: dict[str, int] = {}
    fn: dict[str, int] = {}
    support: dict[str, int] = {}

    def tally(counter: dict[str, int], entity_type: str):
        counter[entity_type] = counter.get(entity_type, 0) + 1

    for index, (g, p) in enumerate(zip(gold, pred)):
        if len(g) != len(p):
            raise LengthMismatch(index)
        if mode == TYPE_IGNORED:
            g, p = erase_types(g), erase_types(p)
        gold_chunks = set(extract_chunks(g))
        pred_chunks = set(extract_chunks(p))
        for chunk in gold_chunks:
            tally(support, chunk.entity_type)
        for chunk in gold_chunks & pred_chunks:
            tally(tp, chunk.entity_type)
        for chunk in pred_chunks - gold_chunks:
            tally(fp, chunk.entity_type)
        for chunk in gold_chunks - pred_chunks:
            tally(fn, chunk.entity_type)

    per_type = {
        t: TypeScores(*_prf(tp.get(t, 0), fp.get(t, 0), fn.get(t, 0)), support.get(t, 0))
        for t in sorted(set(tp) | set(fp) | set(fn) | set(support))
    }
    counts = EvalCounts(sum(tp.values()), sum(fp.values()), sum(fn.values()))
    return EvalReport(
        mode=mode,
        micro=_prf(counts.tp, counts.fp, counts.fn),
        per_type=per_type,
        counts=counts,
    )


def row_average(scores: Sequence[float]) -> float:
    """Arithmetic mean of a table row, the in-domain entry included."""
    if not scores:
        raise EmptyInput("row_average needs at least one score")
    return sum(scores) / len(scores)


def report_to_json(report: EvalReport) -> str:
    doc = {
        "mode": report.mode,
        "micro": {
            "precision": report.micro.precision,
            "recall": report.micro.recall,
            "f1": report.micro.f1,
        },
        "per_type": {
            t: {"precision": s.precision, "recall": s.recall, "f1": s.f1, "support": s.support}
            for t, s in report.per_type.items()
        },
        "counts": {"tp": report.counts.tp, "fp": report.counts.fp, "fn": report.counts.fn},
    }
    return json.dumps(doc, ensure_ascii=False)


def report_to_tsv(report: EvalReport) -> str:
    """Tab-separated report: one row per entity type plus a micro row."""
    lines = ["type\tprecision\trecall\tf1\tsupport"]
    for t, s in report.per_type.items():
        lines.append(f"{t}\t{s.precision:.4f}\t{s.recall:.4f}\t{s.f1:.4f}\t{s.support}")
    m = report.micro
    total_support = sum(s.support for s in report.per_type.values())
    lines.append(f"micro\t{m.precision:.4f}\t{m.recall:.4f}\t{m.f1:.4f}\t{total_support}")
    return "\n".join(lines) + "\n"
