"""Cross-domain / cross-lingual experiment matrices.

One model is trained per row (plus an optional "all" row trained on the
concatenated train splits) and evaluated on every test split. Rows may be
computed in parallel; assembly is an ordered reduction, so output bytes do
not depend on the level of parallelism.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, replace
from typing import Sequence

from .corpus import Dataset, load_dataset
from .errors import ConfigError, MissingSplit
from .metrics import MODES, row_average, score
from .tagger import TaggerModel, TrainConfig, decode_tags, train

ALL_ROW = "all"


@dataclass(frozen=True)
class MatrixSpec:
    dataset_dirs: tuple[str, ...]
    mode: str = "type-aware"
    lowercase: bool = False
    include_all_row: bool = True
    train_config: TrainConfig = TrainConfig()

    def __post_init__(self):
        object.__setattr__(self, "dataset_dirs", tuple(str(d) for d in self.dataset_dirs))
        if not self.dataset_dirs:
            raise ConfigError("matrix needs at least one dataset directory")
        if self.mode not in MODES:
            raise ConfigError(f"mode must be one of {MODES}, got {self.mode!r}")


@dataclass(frozen=True)
class CrossDomainMatrix:
    """F1 percentages for train rows x test columns, plus per-row means."""

    rows: tuple[str, ...]
    cols: tuple[str, ...]
    cells: tuple[tuple[float, ...], ...]
    avg: tuple[float, ...]


@dataclass(frozen=True)
class MatrixRun:
    matrix: CrossDomainMatrix
    manifest: dict


def _effective_config(spec: MatrixSpec) -> TrainConfig:
    # spec.lowercase wins over whatever the train config carries
    return replace(spec.train_config, lowercase=spec.lowercase)


def _evaluate(model: TaggerModel, dataset: Dataset, mode: str) -> float:
    test = dataset.splits["test"]
    gold = [s.tags for s in test]
    pred = [decode_tags(s.tokens, model) for s in test]
    return score(gold, pred, mode).micro.f1 * 100.0


def _annotate(exc: Exception, context: str) -> None:
    if hasattr(exc, "add_note"):  # 3.11+
        exc.add_note(context)


def _run_row(row: str, train_sets: Sequence[Dataset], datasets: Sequence[Dataset],
             spec: MatrixSpec) -> tuple[list[float], list[dict]]:
    config = _effective_config(spec)
    t0 = time.perf_counter()
    try:
        model = train(list(train_sets), config)
    except Exception as exc:
        _annotate(exc, f"while training matrix row {row!r}")
        raise
    train_s = time.perf_counter() - t0
    cells: list[float] = []
    timings: list[dict] = []
    for dataset in datasets:
        t1 = time.perf_counter()
        try:
            cells.append(_evaluate(model, dataset, spec.mode))
        except Exception as exc:
            _annotate(exc, f"while evaluating matrix cell ({row}, {dataset.name})")
            raise
        timings.append(
            {
                "row": row,
                "col": dataset.name,
                "train_seconds": round(train_s, 6),
                "eval_seconds": round(time.perf_counter() - t1, 6),
            }
        )
    return cells, timings


def run_matrix_full(spec: MatrixSpec, jobs: int = 1) -> MatrixRun:
    """Run the experiment matrix and collect a run manifest
    (spec, seed, per-cell timings) alongside the matrix itself."""
    datasets = [load_dataset(d) for d in spec.dataset_dirs]
    names = [d.name for d in datasets]
    if len(set(names)) != len(names):
        raise ConfigError(f"dataset names must be unique, got {names}")
    for dataset in datasets:
        if "test" not in dataset.splits:
            raise MissingSplit(f"dataset {dataset.name!r} has no test split")
        if "train" not in dataset.splits:
            raise MissingSplit(f"dataset {dataset.name!r} has no train split")

    rows = list(names) + ([ALL_ROW] if spec.include_all_row else [])
    row_inputs: list[Sequence[Dataset]] = [[d] for d in datasets]
    if spec.include_all_row:
        row_inputs.append(datasets)

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            futures = [
                pool.submit(_run_row, row, inputs, datasets, spec)
                for row, inputs in zip(rows, row_inputs)
            ]
            results = [f.result() for f in futures]
    else:
        results = [
            _run_row(row, inputs, datasets, spec) for row, inputs in zip(rows, row_inputs)
        ]

    cells = tuple(tuple(cell_row) for cell_row, _ in results)
    timings = [t for _, row_timings in results for t in row_timings]
    matrix = CrossDomainMatrix(
        rows=tuple(rows),
        cols=tuple(names),
        cells=cells,
        avg=tuple(row_average(list(row)) for row in cells),
    )
    manifest = {
        "spec": {
            "dataset_dirs": list(spec.dataset_dirs),
            "mode": spec.mode,
            "lowercase": spec.lowercase,
            "include_all_row": spec.include_all_row,
            "train_config": asdict(_effective_config(spec)),
        },
        "seed": spec.train_config.seed,
        "jobs": jobs,
        "cell_timings": timings,
    }
    return MatrixRun(matrix=matrix, manifest=manifest)


def run_matrix(spec: MatrixSpec, jobs: int = 1) -> CrossDomainMatrix:
    return run_matrix_full(spec, jobs=jobs).matrix


def render_table(matrix: CrossDomainMatrix, format: str = "markdown") -> str:
    """Render as markdown, TSV (both at one decimal place), or JSON
    (full precision; round-trips through :func:`matrix_from_json`)."""
    if format == "json":
        return (
            json.dumps(
                {
                    "rows": list(matrix.rows),
                    "cols": list(matrix.cols),
                    "cells": [list(row) for row in matrix.cells],
                    "avg": list(matrix.avg),
                },
                ensure_ascii=False,
            )
            + "\n"
        )
    header = ["train\\test", *matrix.cols, "avg"]
    body = [
        [row, *(f"{v:.1f}" for v in cells), f"{avg:.1f}"]
        for row, cells, avg in zip(matrix.rows, matrix.cells, matrix.avg)
    ]
    if format == "tsv":
        return "\n".join("\t".join(line) for line in [header, *body]) + "\n"
    if format == "markdown":
        lines = [
            "| " + " | ".join(header) + " |",
            "|" + "|".join("---" for _ in header) + "|",
        ]
        lines += ["| " + " | ".join(line) + " |" for line in body]
        return "\n".join(lines) + "\n"
    raise ConfigError(f"unknown table format {format!r}")


def matrix_from_json(text: str) -> CrossDomainMatrix:
    doc = json.loads(text)
    return CrossDomainMatrix(
        rows=tuple(doc["rows"]),
        cols=tuple(doc["cols"]),
        cells=tuple(tuple(row) for row in doc["cells"]),
        avg=tuple(doc["avg"]),
    )
