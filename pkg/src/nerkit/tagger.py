"""Deterministic trainable sequence tagger.

An averaged perceptron over sparse surface features with constrained
Viterbi decoding. Training is a pure function of (data, config, seed):
same inputs, byte-identical model files. The transition constraints are
hard, so decoder output is always strict IOB2.
"""

from __future__ import annotations

import hashlib
import json
import os
import random
from dataclasses import asdict, dataclass
from datetime import datetime, timezone
from pathlib import Path
from typing import Mapping, Sequence

import numpy as np

from ._kernel import viterbi_path
from .chunking import extract_chunks
from .corpus import OUTSIDE, Dataset, Tag, concat_datasets, lowercase_dataset
from .errors import (
    ConfigError,
    CorruptModel,
    EmptySentence,
    EmptyTrainingData,
    ModelLabelMismatch,
    VersionMismatch,
)

MODEL_FORMAT_VERSION = 1
FEATURE_TEMPLATE = "v1"
SENT_START = "<s>"
SENT_END = "</s>"


@dataclass(frozen=True)
class TrainConfig:
    epochs: int = 10
    seed: int = 42
    lowercase: bool = False
    feature_template: str = FEATURE_TEMPLATE


@dataclass
class TaggerModel:
    """Label inventory, averaged sparse weights, and the training config.

    ``labels`` is ordered by the label-lookup rule (O first, the rest
    lexicographic), so a label's list index is its id. ``weights`` maps a
    feature key to a float64 vector over label ids.
    """

    labels: list[str]
    weights: dict[str, np.ndarray]
    config: TrainConfig
    meta: dict

    def __eq__(self, other) -> bool:
        if not isinstance(other, TaggerModel):
            return NotImplemented
        return (
            self.labels == other.labels
            and self.config == other.config
            and self.meta == other.meta
            and self.weights.keys() == other.weights.keys()
            and all(np.array_equal(self.weights[f], other.weights[f]) for f in self.weights)
        )


def word_shape(word: str) -> str:
    """Character-class sketch: uppercase X, lowercase x, digit d, anything
    else kept. Letter runs collapse to one symbol; digit runs and other
    characters keep their length ("B-52s" -> "X-ddx", "EU" -> "X")."""
    out: list[str] = []
    for ch in word:
        if ch.isupper():
            cls = "X"
        elif ch.islower():
            cls = "x"
        elif ch.isdigit():
            cls = "d"
        else:
            cls = ch
        if cls in ("X", "x") and out and out[-1] == cls:
            continue
        out.append(cls)
    return "".join(out)


def featurize(tokens: Sequence[str], i: int) -> list[str]:
    """Feature keys for one position: bias, current/prev/next word (surface
    and lowercased, with sentence-boundary sentinels), word shape, and
    prefixes/suffixes of length 1-3 of the current word. Order-stable."""
    if not 0 <= i < len(tokens):
        raise IndexError(f"position {i} out of range for {len(tokens)} tokens")
    word = tokens[i]
    low = word.lower()
    prev = tokens[i - 1] if i > 0 else SENT_START
    nxt = tokens[i + 1] if i + 1 < len(tokens) else SENT_END
    feats = ["bias", f"w0={word}", f"low0={low}", f"shape0={word_shape(word)}"]
    for k in (1, 2, 3):
        if len(low) >= k:
            feats.append(f"pre{k}_0={low[:k]}")
    for k in (1, 2, 3):
        if len(low) >= k:
            feats.append(f"suf{k}_0={low[-k:]}")
    feats.append(f"w-1={prev}")
    feats.append(f"low-1={prev.lower()}")
    feats.append(f"w+1={nxt}")
    feats.append(f"low+1={nxt.lower()}")
    return feats


def transition_tables(labels: Sequence[str]) -> tuple[np.ndarray, np.ndarray]:
    """Hard constraint masks enforcing strict IOB2 output: no initial I-X,
    and I-X only directly after B-X or I-X."""
    parsed = [Tag.parse(lab) for lab in labels]
    n = len(parsed)
    start_ok = np.ones(n, dtype=np.uint8)
    trans_ok = np.ones((n, n), dtype=np.uint8)
    for y, tag in enumerate(parsed):
        if tag.prefix != "I":
            continue
        start_ok[y] = 0
        for p, prev in enumerate(parsed):
            if prev.prefix == OUTSIDE or prev.entity_type != tag.entity_type:
                trans_ok[p, y] = 0
    return start_ok, trans_ok


def emission_scores(
    tokens: Sequence[str], weights: Mapping[str, np.ndarray], n_labels: int
) -> np.ndarray:
    scores = np.zeros((len(tokens), n_labels), dtype=np.float64)
    for i in range(len(tokens)):
        row = scores[i]
        for feat in featurize(tokens, i):
            vec = weights.get(feat)
            if vec is not None:
                row += vec
    return scores


def viterbi_decode(tokens: Sequence[str], model: TaggerModel) -> list[Tag]:
    """Best label sequence under the model's feature scores and transition
    constraints. Ties break toward the smaller label id, so an all-zero
    model emits all O."""
    if not tokens:
        raise EmptySentence("cannot decode an empty sentence")
    if not model.labels:
        raise ModelLabelMismatch("model has no labels")
    scores = emission_scores(tokens, model.weights, len(model.labels))
    start_ok, trans_ok = transition_tables(model.labels)
    ids = viterbi_path(scores, start_ok, trans_ok)
    return [Tag.parse(model.labels[y]) for y in ids]


def decode_tags(tokens: Sequence[str], model: TaggerModel) -> list[Tag]:
    """Decode with the model's own lowercasing convention applied, the path
    every evaluation takes so train and test transforms always match."""
    if model.config.lowercase:
        tokens = [t.lower() for t in tokens]
    return viterbi_decode(tokens, model)


@dataclass(frozen=True)
class ScoredSpan:
    entity_type: str
    start: int
    end: int
    score: float


@dataclass(frozen=True)
class Prediction:
    tags: list[Tag]
    spans: list[ScoredSpan]


def predict(tokens: Sequence[str], model: TaggerModel) -> Prediction:
    """Tag raw tokens and return spans with confidence scores.

    A span's score is the mean over its positions of the softmax-normalized
    per-position score of the chosen label, always within [0, 1].
    """
    if not tokens:
        raise EmptySentence("cannot predict on an empty token list")
    if not model.labels:
        raise ModelLabelMismatch("model has no labels")
    decoded = [t.lower() for t in tokens] if model.config.lowercase else list(tokens)
    scores = emission_scores(decoded, model.weights, len(model.labels))
    start_ok, trans_ok = transition_tables(model.labels)
    ids = viterbi_path(scores, start_ok, trans_ok)
    tags = [Tag.parse(model.labels[y]) for y in ids]

    shifted = scores - scores.max(axis=1, keepdims=True)
    probs = np.exp(shifted)
    probs /= probs.sum(axis=1, keepdims=True)
    confidence = probs[np.arange(len(tokens)), ids]

    spans = [
        ScoredSpan(c.entity_type, c.start, c.end, float(confidence[c.start : c.end].mean()))
        for c in extract_chunks(tags)
    ]
    return Prediction(tags=tags, spans=spans)


def _created_at() -> str | None:
    # Wall-clock stamps would break byte-identical retraining, so the stamp
    # only appears when the caller pins one via SOURCE_DATE_EPOCH.
    epoch = os.environ.get("SOURCE_DATE_EPOCH")
    if epoch:
        return datetime.fromtimestamp(int(epoch), tz=timezone.utc).isoformat()
    return None


def train(datasets: Sequence[Dataset], config: TrainConfig = TrainConfig()) -> TaggerModel:
    """Averaged-perceptron training over the concatenated train splits.

    Each epoch shuffles the sentences with a seeded Fisher-Yates pass,
    decodes with the current weights, and applies +1/-1 updates on the
    features of every mispredicted position. Final weights are the mean of
    the per-sentence weight snapshots.
    """
    if config.epochs < 1:
        raise ConfigError(f"epochs must be >= 1, got {config.epochs}")
    merged = concat_datasets(list(datasets), name="+".join(d.name for d in datasets))
    if config.lowercase:
        merged = lowercase_dataset(merged)
    sentences = merged.splits.get("train", ())
    if not sentences:
        raise EmptyTrainingData("no training sentences after concatenation")

    labels = list(merged.labels)
    label_id = {lab: i for i, lab in enumerate(labels)}
    n_labels = len(labels)
    start_ok, trans_ok = transition_tables(labels)

    features = [[featurize(s.tokens, i) for i in range(len(s))] for s in sentences]
    gold = [[label_id[str(t)] for t in s.tags] for s in sentences]

    weights: dict[str, np.ndarray] = {}
    accum: dict[str, np.ndarray] = {}

    def bump(feat: str, label: int, delta: float, step: int):
        vec = weights.get(feat)
        if vec is None:
            vec = weights[feat] = np.zeros(n_labels)
            accum[feat] = np.zeros(n_labels)
        vec[label] += delta
        accum[feat][label] += delta * (step - 1)

    rng = random.Random(config.seed)
    order = list(range(len(sentences)))
    step = 0
    for _ in range(config.epochs):
        rng.shuffle(order)
        for si in order:
            step += 1
            feats = features[si]
            scores = np.zeros((len(feats), n_labels))
            for i, keys in enumerate(feats):
                row = scores[i]
                for feat in keys:
                    vec = weights.get(feat)
                    if vec is not None:
                        row += vec
            pred = viterbi_path(scores, start_ok, trans_ok)
            for i, want in enumerate(gold[si]):
                got = int(pred[i])
                if got != want:
                    for feat in feats[i]:
                        bump(feat, want, +1.0, step)
                        bump(feat, got, -1.0, step)

    averaged = {feat: weights[feat] - accum[feat] / step for feat in weights}
    meta = {
        "trained_on": [d.name for d in datasets],
        "created_at": _created_at(),
    }
    return TaggerModel(labels=labels, weights=averaged, config=config, meta=meta)


def _canonical_bytes(doc: dict) -> bytes:
    return json.dumps(doc, sort_keys=True, separators=(",", ":"), ensure_ascii=False).encode(
        "utf-8"
    )


def save_model(model: TaggerModel, path) -> None:
    """Write a self-describing, versioned, checksummed JSON document.

    Keys are emitted sorted and floats in full round-trip precision, so
    identical models always produce identical bytes.
    """
    doc = {
        "format_version": MODEL_FORMAT_VERSION,
        "labels": list(model.labels),
        "weights": {feat: vec.tolist() for feat, vec in model.weights.items()},
        "config": asdict(model.config),
        "meta": model.meta,
    }
    doc["checksum"] = hashlib.sha256(_canonical_bytes(doc)).hexdigest()
    Path(path).write_text(
        json.dumps(doc, sort_keys=True, separators=(",", ":"), ensure_ascii=False) + "\n",
        encoding="utf-8",
    )


def load_model(path) -> TaggerModel:
    """Inverse of :func:`save_model`; load(save(m)) == m."""
    raw = Path(path).read_text(encoding="utf-8")
    try:
        doc = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise CorruptModel(f"{path}: not a valid model file ({exc})") from None
    if not isinstance(doc, dict):
        raise CorruptModel(f"{path}: not a valid model file")
    version = doc.get("format_version")
    if version != MODEL_FORMAT_VERSION:
        raise VersionMismatch(version)
    stated = doc.pop("checksum", None)
    if stated != hashlib.sha256(_canonical_bytes(doc)).hexdigest():
        raise CorruptModel(f"{path}: checksum mismatch")
    missing = {"labels", "weights", "config", "meta"} - doc.keys()
    if missing:
        raise CorruptModel(f"{path}: missing fields {sorted(missing)}")
    labels = list(doc["labels"])
    weights = {f: np.asarray(v, dtype=np.float64) for f, v in doc["weights"].items()}
    if any(vec.shape != (len(labels),) for vec in weights.values()):
        raise CorruptModel(f"{path}: weight vector length differs from label count")
    return TaggerModel(
        labels=labels,
        weights=weights,
        config=TrainConfig(**doc["config"]),
        meta=doc["meta"],
    )
