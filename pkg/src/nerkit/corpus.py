"""Unified IOB corpus handling.

All corpora live in one plain-text format: one token per line, the token
first and its tag last, blank lines between sentences. A dataset is a
directory holding up to three split files (train.txt, valid.txt, test.txt).
Values constructed here are immutable and safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Mapping, Sequence, Union

from .errors import BadTag, CorpusError, EmptyInput, MalformedLine, MissingSplit

OUTSIDE = "O"
SPLIT_NAMES = ("train", "valid", "test")
_DOCSTART = "-DOCSTART-"


@dataclass(frozen=True)
class Tag:
    """One IOB tag: ``O`` or ``B-<type>``/``I-<type>``."""

    prefix: str
    entity_type: str | None = None

    def __post_init__(self):
        if self.prefix == OUTSIDE:
            if self.entity_type is not None:
                raise ValueError("O tag cannot carry an entity type")
        elif self.prefix in ("B", "I"):
            t = self.entity_type
            if not t or any(ch.isspace() for ch in t):
                raise ValueError(f"bad entity type {t!r} for prefix {self.prefix}")
        else:
            raise ValueError(f"bad tag prefix {self.prefix!r}")

    @classmethod
    def parse(cls, text: str) -> "Tag":
        if text == OUTSIDE:
            return cls(OUTSIDE)
        prefix, sep, entity_type = text.partition("-")
        if not sep:
            raise ValueError(f"bad tag {text!r}")
        return cls(prefix, entity_type)

    def __str__(self) -> str:
        if self.prefix == OUTSIDE:
            return OUTSIDE
        return f"{self.prefix}-{self.entity_type}"


TagLike = Union[Tag, str]


def as_tag(value: TagLike) -> Tag:
    """Coerce a tag string to a :class:`Tag`; Tag instances pass through."""
    if isinstance(value, Tag):
        return value
    return Tag.parse(value)


@dataclass(frozen=True)
class Sentence:
    """Parallel token/tag lists; the atomic unit of corpora and predictions.

    Tokens may not be empty or contain whitespace of any kind, which keeps
    the line format bijective (serialize then parse is the identity).
    """

    tokens: tuple[str, ...]
    tags: tuple[Tag, ...]

    def __init__(self, tokens: Iterable[str], tags: Iterable[TagLike]):
        object.__setattr__(self, "tokens", tuple(tokens))
        object.__setattr__(self, "tags", tuple(as_tag(t) for t in tags))
        if len(self.tokens) != len(self.tags) or not self.tokens:
            raise ValueError(
                f"need equal, non-zero token/tag counts "
                f"(got {len(self.tokens)}/{len(self.tags)})"
            )
        for tok in self.tokens:
            if not tok or any(ch.isspace() for ch in tok):
                raise ValueError(f"bad token {tok!r}")

    def __len__(self) -> int:
        return len(self.tokens)


@dataclass(frozen=True)
class Dataset:
    """Named splits of sentences plus an ordered label inventory."""

    name: str
    splits: Mapping[str, tuple[Sentence, ...]]
    labels: tuple[str, ...]

    def __post_init__(self):
        for split in self.splits:
            if split not in SPLIT_NAMES:
                raise ValueError(f"unknown split {split!r}")
        if not any(self.splits.values()):
            raise ValueError("dataset needs at least one non-empty split")
        if not self.labels or self.labels[0] != OUTSIDE:
            raise ValueError(f"labels must start with {OUTSIDE!r}")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("duplicate labels")
        known = set(self.labels)
        for split, sentences in self.splits.items():
            for sent in sentences:
                for tag in sent.tags:
                    if str(tag) not in known:
                        raise ValueError(f"tag {tag} in split {split!r} missing from labels")

    @classmethod
    def from_splits(cls, name: str, splits: Mapping[str, Sequence[Sentence]]) -> "Dataset":
        """Build a dataset, deriving labels from the observed tags."""
        observed = {
            str(tag)
            for sentences in splits.values()
            for sent in sentences
            for tag in sent.tags
        }
        labels = (OUTSIDE, *sorted(observed - {OUTSIDE}))
        frozen = {split: tuple(sentences) for split, sentences in splits.items()}
        return cls(name=name, splits=frozen, labels=labels)


@dataclass(frozen=True)
class DatasetStats:
    """Sentence counts per present split and the distinct entity-type count."""

    sentences: Mapping[str, int]
    entity_types: int


def label_lookup(labels: Iterable[str]) -> dict[str, int]:
    """Map label strings to contiguous ids: ``O`` is 0, the rest follow
    lexicographic order. A pure function of the label set, so shuffled
    input yields the identical mapping."""
    rest = sorted(set(labels) - {OUTSIDE})
    lookup = {OUTSIDE: 0}
    for i, lab in enumerate(rest, start=1):
        lookup[lab] = i
    return lookup


def parse_conll(text: str) -> list[Sentence]:
    """Parse unified-format text into sentences.

    Blank lines delimit sentences; lines starting with ``-DOCSTART-`` are
    skipped; on lines with more than two fields the middle ones are ignored.
    Raises :class:`MalformedLine` or :class:`BadTag` with 1-based line numbers.
    """
    sentences: list[Sentence] = []
    tokens: list[str] = []
    tags: list[Tag] = []

    def flush():
        if tokens:
            sentences.append(Sentence(tokens, tags))
            tokens.clear()
            tags.clear()

    for line_no, raw in enumerate(text.split("\n"), start=1):
        line = raw.rstrip("\r")
        if not line.strip():
            flush()
            continue
        fields = line.split()
        if fields[0] == _DOCSTART:
            continue
        if len(fields) < 2:
            raise MalformedLine(line_no)
        try:
            tag = Tag.parse(fields[-1])
        except ValueError:
            raise BadTag(line_no, fields[-1]) from None
        tokens.append(fields[0])
        tags.append(tag)
    flush()
    return sentences


def serialize_conll(sentences: Sequence[Sentence]) -> str:
    """Inverse of :func:`parse_conll`: one ``token tag`` line per token,
    single blank line between sentences, trailing newline (or "" for [])."""
    blocks = [
        "\n".join(f"{tok} {tag}" for tok, tag in zip(sent.tokens, sent.tags))
        for sent in sentences
    ]
    if not blocks:
        return ""
    return "\n\n".join(blocks) + "\n"


def load_dataset(dir_path) -> Dataset:
    """Load a dataset directory containing train.txt and/or test.txt
    (valid.txt optional); the dataset is named after the directory."""
    path = Path(dir_path)
    splits: dict[str, list[Sentence]] = {}
    for split in SPLIT_NAMES:
        file = path / f"{split}.txt"
        if not file.exists():
            continue
        try:
            splits[split] = parse_conll(file.read_text(encoding="utf-8"))
        except CorpusError as exc:
            exc.filename = str(file)
            raise
    if "train" not in splits and "test" not in splits:
        raise MissingSplit(f"{path}: found neither train.txt nor test.txt")
    if not any(splits.values()):
        raise MissingSplit(f"{path}: all split files are empty")
    name = path.name or path.resolve().name
    return Dataset.from_splits(name, splits)


def concat_datasets(datasets: Sequence[Dataset], name: str) -> Dataset:
    """Concatenate datasets split-wise, in input order; the label inventory
    is the union. This is the "all" setting of the experiment matrix."""
    if not datasets:
        raise EmptyInput("concat_datasets needs at least one dataset")
    splits: dict[str, list[Sentence]] = {}
    for split in SPLIT_NAMES:
        combined = [s for d in datasets if split in d.splits for s in d.splits[split]]
        if any(split in d.splits for d in datasets):
            splits[split] = combined
    return Dataset.from_splits(name, splits)


def lowercase_dataset(dataset: Dataset) -> Dataset:
    """Map every token to its Unicode lowercase; tags are untouched."""
    splits = {
        split: tuple(Sentence((t.lower() for t in s.tokens), s.tags) for s in sentences)
        for split, sentences in dataset.splits.items()
    }
    return Dataset(name=dataset.name, splits=splits, labels=dataset.labels)


def dataset_stats(dataset: Dataset) -> DatasetStats:
    """Sentence counts for the splits that exist, plus the number of
    distinct entity types (tag prefixes collapsed)."""
    counts = {split: len(sentences) for split, sentences in dataset.splits.items()}
    types = {Tag.parse(lab).entity_type for lab in dataset.labels if lab != OUTSIDE}
    return DatasetStats(sentences=counts, entity_types=len(types))
