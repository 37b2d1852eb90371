"""Tag sequences to entity spans.

Extraction is lenient (conlleval-style): a dangling ``I-X`` with no live
chunk of type X opens a new chunk instead of being rejected. Spans are
half-open token intervals, non-overlapping, sorted by start.
"""

from __future__ import annotations

from typing import NamedTuple, Sequence

from .corpus import OUTSIDE, Tag, TagLike, as_tag

TYPE_IGNORED_PLACEHOLDER = "ENT"


class EntitySpan(NamedTuple):
    entity_type: str
    start: int
    end: int  # exclusive


def extract_chunks(tags: Sequence[TagLike]) -> list[EntitySpan]:
    """Extract entity spans from a tag sequence.

    A chunk starts at i when tags[i] is B-X, or when tags[i] is I-X and no
    chunk of type X is live (start of sequence, after O, or after a
    different type). It continues through consecutive I-X tags.
    """
    chunks: list[EntitySpan] = []
    cur_type: str | None = None
    cur_start = 0
    for i, raw in enumerate(tags):
        tag = as_tag(raw)
        starts_new = tag.prefix == "B" or (
            tag.prefix == "I" and tag.entity_type != cur_type
        )
        if (tag.prefix == OUTSIDE or starts_new) and cur_type is not None:
            chunks.append(EntitySpan(cur_type, cur_start, i))
            cur_type = None
        if starts_new:
            cur_type = tag.entity_type
            cur_start = i
    if cur_type is not None:
        chunks.append(EntitySpan(cur_type, cur_start, len(tags)))
    return chunks


def normalize_iob2(tags: Sequence[TagLike]) -> list[Tag]:
    """Rewrite a tag sequence so every chunk starts with B and continues
    with I, leaving the extracted chunks identical. Idempotent."""
    out = [Tag(OUTSIDE)] * len(tags)
    for span in extract_chunks(tags):
        out[span.start] = Tag("B", span.entity_type)
        for i in range(span.start + 1, span.end):
            out[i] = Tag("I", span.entity_type)
    return out


def erase_types(tags: Sequence[TagLike]) -> list[Tag]:
    """Normalize to IOB2, then collapse every entity type to one
    placeholder. Chunk boundaries are preserved exactly, which reduces
    evaluation to pure span detection."""
    return [
        tag if tag.prefix == OUTSIDE else Tag(tag.prefix, TYPE_IGNORED_PLACEHOLDER)
        for tag in normalize_iob2(tags)
    ]
