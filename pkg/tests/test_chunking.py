import pytest
from hypothesis import given
from hypothesis import strategies as st

from nerkit.chunking import EntitySpan, erase_types, extract_chunks, normalize_iob2
from nerkit.corpus import Tag, as_tag


def oracle_chunks(tags):
    """Brute-force reference: evaluate the chunk-start predicate at every
    position, then extend each start through consecutive same-type I tags.
    Intentionally a different algorithm from the single-pass extractor."""
    tags = [as_tag(t) for t in tags]

    def starts(i):
        tag = tags[i]
        if tag.prefix == "B":
            return True
        if tag.prefix != "I":
            return False
        if i == 0:
            return True
        prev = tags[i - 1]
        return prev.prefix == "O" or prev.entity_type != tag.entity_type

    spans = []
    for i in range(len(tags)):
        if not starts(i):
            continue
        j = i + 1
        while j < len(tags) and tags[j].prefix == "I" and tags[j].entity_type == tags[i].entity_type:
            j += 1
        spans.append(EntitySpan(tags[i].entity_type, i, j))
    return spans


class TestExtractChunks:
    def test_example_block_tags(self):
        tags = ["B-ORG", "O", "B-MISC", "O", "O", "O", "B-MISC", "O", "O"]
        assert extract_chunks(tags) == [
            EntitySpan("ORG", 0, 1),
            EntitySpan("MISC", 2, 3),
            EntitySpan("MISC", 6, 7),
        ]

    def test_all_outside(self):
        assert extract_chunks(["O", "O", "O"]) == []

    def test_empty(self):
        assert extract_chunks([]) == []

    def test_dangling_inside_opens_chunk(self):
        assert extract_chunks(["I-PER", "I-PER", "O", "I-PER"]) == [
            EntitySpan("PER", 0, 2),
            EntitySpan("PER", 3, 4),
        ]

    def test_type_change_opens_chunk(self):
        assert extract_chunks(["B-PER", "I-ORG"]) == [
            EntitySpan("PER", 0, 1),
            EntitySpan("ORG", 1, 2),
        ]

    def test_adjacent_b_tags(self):
        assert extract_chunks(["B-PER", "B-PER"]) == [
            EntitySpan("PER", 0, 1),
            EntitySpan("PER", 1, 2),
        ]

    def test_chunk_to_end_of_sentence(self):
        assert extract_chunks(["O", "B-LOC", "I-LOC"]) == [EntitySpan("LOC", 1, 3)]


tags_strategy = st.lists(
    st.sampled_from(["O", "B-A", "I-A", "B-B", "I-B"]), max_size=10
)


@given(tags_strategy)
def test_matches_oracle(tags):
    assert extract_chunks(tags) == oracle_chunks(tags)


@given(tags_strategy)
def test_spans_sorted_disjoint_in_bounds(tags):
    spans = extract_chunks(tags)
    for span in spans:
        assert 0 <= span.start < span.end <= len(tags)
    for a, b in zip(spans, spans[1:]):
        assert a.end <= b.start


class TestNormalizeIob2:
    def test_already_normalized(self):
        tags = [Tag.parse("B-PER"), Tag.parse("I-PER")]
        assert normalize_iob2(tags) == tags

    def test_dangling_inside_becomes_begin(self):
        assert [str(t) for t in normalize_iob2(["I-PER", "I-PER"])] == ["B-PER", "I-PER"]

    def test_type_change_becomes_two_begins(self):
        assert [str(t) for t in normalize_iob2(["I-PER", "I-ORG"])] == ["B-PER", "B-ORG"]

    @given(tags_strategy)
    def test_idempotent_and_chunk_invariant(self, tags):
        once = normalize_iob2(tags)
        assert normalize_iob2(once) == once
        assert extract_chunks(once) == extract_chunks(tags)

    @given(tags_strategy)
    def test_output_is_strict_iob2(self, tags):
        out = normalize_iob2(tags)
        for i, tag in enumerate(out):
            if tag.prefix != "I":
                continue
            prev = out[i - 1] if i else None
            assert prev is not None
            assert prev.prefix in ("B", "I") and prev.entity_type == tag.entity_type


class TestEraseTypes:
    def test_direct_relabel(self):
        assert [str(t) for t in erase_types(["B-PER", "I-PER", "O"])] == [
            "B-ENT", "I-ENT", "O",
        ]

    def test_adjacent_chunks_stay_separate(self):
        assert [str(t) for t in erase_types(["B-PER", "B-ORG"])] == ["B-ENT", "B-ENT"]

    def test_normalizes_before_relabeling(self):
        assert [str(t) for t in erase_types(["I-PER", "I-ORG"])] == ["B-ENT", "B-ENT"]

    @given(tags_strategy)
    def test_boundaries_preserved(self, tags):
        original = sorted((s.start, s.end) for s in extract_chunks(tags))
        erased = sorted((s.start, s.end) for s in extract_chunks(erase_types(tags)))
        assert erased == original
