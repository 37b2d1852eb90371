import pytest
from hypothesis import given
from hypothesis import strategies as st

from nerkit.corpus import (
    Dataset,
    Sentence,
    Tag,
    concat_datasets,
    dataset_stats,
    label_lookup,
    load_dataset,
    lowercase_dataset,
    parse_conll,
    serialize_conll,
)
from nerkit.errors import BadTag, EmptyInput, MalformedLine, MissingSplit

EXAMPLE_BLOCK = (
    "EU B-ORG\n"
    "rejects O\n"
    "German B-MISC\n"
    "call O\n"
    "to O\n"
    "boycott O\n"
    "British B-MISC\n"
    "lamb O\n"
    ". O\n"
)


class TestTag:
    def test_parse_outside(self):
        assert Tag.parse("O") == Tag("O")

    def test_parse_typed(self):
        tag = Tag.parse("B-ORG")
        assert (tag.prefix, tag.entity_type) == ("B", "ORG")

    def test_type_may_contain_dash(self):
        assert Tag.parse("B-creative-work").entity_type == "creative-work"

    @pytest.mark.parametrize("bad", ["", "B", "B-", "X-ORG", "O-ORG", "B- ", "I-a b"])
    def test_rejects_bad_grammar(self, bad):
        with pytest.raises(ValueError):
            Tag.parse(bad)

    @given(
        st.sampled_from(["O", "B-PER", "I-PER", "B-LOC", "I-creative-work", "B-人名"])
    )
    def test_round_trip(self, text):
        assert str(Tag.parse(text)) == text


class TestParse:
    def test_example_block(self):
        sentences = parse_conll(EXAMPLE_BLOCK)
        assert len(sentences) == 1
        sent = sentences[0]
        assert len(sent) == 9
        assert sent.tokens[0] == "EU"
        assert sent.tags[2] == Tag("B", "MISC")

    def test_empty_input(self):
        assert parse_conll("") == []

    def test_docstart_and_blank_runs(self):
        sentences = parse_conll("-DOCSTART- O\n\nA B-X\n\n\nB O\n")
        assert [s.tokens for s in sentences] == [("A",), ("B",)]

    def test_trailing_blank_lines(self):
        assert len(parse_conll("a O\n\n\n\n")) == 1

    def test_middle_fields_ignored(self):
        sent = parse_conll("EU NNP I-NP B-ORG\n")[0]
        assert sent.tokens == ("EU",) and str(sent.tags[0]) == "B-ORG"

    def test_carriage_returns_tolerated(self):
        sentences = parse_conll("a O\r\n\r\nb B-X\r\n")
        assert len(sentences) == 2

    def test_malformed_line_number(self):
        with pytest.raises(MalformedLine) as err:
            parse_conll("a O\nbroken\n")
        assert err.value.line_no == 2

    def test_bad_tag_reports_line_and_text(self):
        with pytest.raises(BadTag) as err:
            parse_conll("a O\n\nb Q-X\n")
        assert (err.value.line_no, err.value.text) == (3, "Q-X")


class TestSerialize:
    def test_empty(self):
        assert serialize_conll([]) == ""

    def test_single_line(self):
        assert serialize_conll([Sentence(["a"], ["O"])]) == "a O\n"

    def test_example_block_round_trip(self):
        sentences = parse_conll(EXAMPLE_BLOCK)
        text = serialize_conll(sentences)
        assert text == EXAMPLE_BLOCK
        assert text.endswith(". O\n")


token_strategy = st.text(
    alphabet="abzEU019.,!?$€ß日本-京λ", min_size=1, max_size=8
).filter(lambda t: t != "-DOCSTART-")

tag_strategy = st.sampled_from(["O", "B-PER", "I-PER", "B-LOC", "I-LOC"])


@st.composite
def sentence_strategy(draw):
    n = draw(st.integers(min_value=1, max_value=6))
    tokens = [draw(token_strategy) for _ in range(n)]
    tags = [draw(tag_strategy) for _ in range(n)]
    return Sentence(tokens, tags)


@given(st.lists(sentence_strategy(), max_size=5))
def test_serialize_parse_round_trip(sentences):
    assert parse_conll(serialize_conll(sentences)) == sentences


def _dataset(name, **splits):
    prepared = {
        split: [Sentence(tokens, tags) for tokens, tags in sentences]
        for split, sentences in splits.items()
    }
    return Dataset.from_splits(name, prepared)


class TestLoadDataset:
    def test_fixture_labels(self, tmp_path):
        d = tmp_path / "demo"
        d.mkdir()
        (d / "train.txt").write_text("ana B-PER\nmarta I-PER\n\nx O\n", encoding="utf-8")
        dataset = load_dataset(d)
        assert dataset.name == "demo"
        assert dataset.labels == ("O", "B-PER", "I-PER")
        assert len(dataset.splits["train"]) == 2

    def test_missing_split(self, tmp_path):
        with pytest.raises(MissingSplit):
            load_dataset(tmp_path)

    def test_test_only_dataset(self, tmp_path):
        (tmp_path / "test.txt").write_text("a O\n", encoding="utf-8")
        dataset = load_dataset(tmp_path)
        assert set(dataset.splits) == {"test"}

    def test_all_empty_files(self, tmp_path):
        (tmp_path / "train.txt").write_text("", encoding="utf-8")
        with pytest.raises(MissingSplit):
            load_dataset(tmp_path)

    def test_parse_error_names_file(self, tmp_path):
        (tmp_path / "train.txt").write_text("broken\n", encoding="utf-8")
        with pytest.raises(MalformedLine) as err:
            load_dataset(tmp_path)
        assert "train.txt" in str(err.value)

    def test_shipped_fixture(self, fixtures_dir):
        dataset = load_dataset(fixtures_dir / "synth-news")
        assert set(dataset.splits) == {"train", "valid", "test"}
        assert len(dataset.splits["train"]) == 50


class TestConcat:
    def test_singleton_identity(self):
        d = _dataset("a", train=[(["x"], ["B-A"])])
        merged = concat_datasets([d], "renamed")
        assert merged.splits == d.splits
        assert merged.labels == d.labels
        assert merged.name == "renamed"

    def test_label_union_order(self):
        d1 = _dataset("a", train=[(["x", "y"], ["B-A", "I-A"])])
        d2 = _dataset("b", train=[(["x", "y"], ["B-B", "I-B"])])
        merged = concat_datasets([d1, d2], "ab")
        assert merged.labels == ("O", "B-A", "B-B", "I-A", "I-B")

    def test_preserves_order(self):
        d1 = _dataset("a", train=[(["a1"], ["O"]), (["a2"], ["O"]), (["a3"], ["O"])])
        d2 = _dataset("b", train=[(["b1"], ["O"]), (["b2"], ["O"]), (["b3"], ["O"])])
        merged = concat_datasets([d1, d2], "ab")
        assert [s.tokens[0] for s in merged.splits["train"]] == [
            "a1", "a2", "a3", "b1", "b2", "b3",
        ]

    def test_associative_up_to_name(self):
        a = _dataset("a", train=[(["a"], ["B-A"])], test=[(["a"], ["O"])])
        b = _dataset("b", train=[(["b"], ["B-B"])])
        c = _dataset("c", valid=[(["c"], ["B-C"])])
        left = concat_datasets([concat_datasets([a, b], "_"), c], "_")
        right = concat_datasets([a, concat_datasets([b, c], "_")], "_")
        assert left.splits == right.splits
        assert left.labels == right.labels

    def test_empty_input(self):
        with pytest.raises(EmptyInput):
            concat_datasets([], "nothing")


class TestLowercase:
    def test_tokens_lowercased(self):
        d = _dataset("a", train=[(["EU", "rejects"], ["B-ORG", "O"])])
        lowered = lowercase_dataset(d)
        assert lowered.splits["train"][0].tokens == ("eu", "rejects")
        assert lowered.splits["train"][0].tags == d.splits["train"][0].tags

    def test_idempotent(self):
        d = _dataset("a", train=[(["Florence.", "Änder"], ["B-LOC", "O"])])
        once = lowercase_dataset(d)
        assert lowercase_dataset(once) == once

    def test_counts_preserved(self, fixtures_dir):
        d = load_dataset(fixtures_dir / "conll-mini")
        lowered = lowercase_dataset(d)
        assert {k: len(v) for k, v in lowered.splits.items()} == {
            k: len(v) for k, v in d.splits.items()
        }
        assert lowered.labels == d.labels


class TestStats:
    def test_entity_types_collapse_prefixes(self):
        d = _dataset("a", train=[(["x", "y"], ["B-PER", "I-PER"])])
        assert dataset_stats(d).entity_types == 1

    def test_absent_split_not_reported(self):
        d = _dataset(
            "a",
            train=[(["x"], ["O"]), (["y"], ["O"]), (["z"], ["O"])],
            test=[(["w"], ["O"])],
        )
        assert dict(dataset_stats(d).sentences) == {"train": 3, "test": 1}

    def test_block_count_matches_stats(self, fixtures_dir):
        raw = (fixtures_dir / "synth-bio" / "train.txt").read_text(encoding="utf-8")
        blocks = [b for b in raw.split("\n\n") if b.strip()]
        d = load_dataset(fixtures_dir / "synth-bio")
        assert dataset_stats(d).sentences["train"] == len(blocks)


class TestLabelLookup:
    def test_outside_is_zero_then_lexicographic(self):
        lookup = label_lookup(["I-PER", "O", "B-PER", "B-LOC"])
        assert lookup == {"O": 0, "B-LOC": 1, "B-PER": 2, "I-PER": 3}

    @given(st.permutations(["O", "B-PER", "I-PER", "B-LOC", "I-LOC", "B-ORG"]))
    def test_pure_function_of_label_set(self, shuffled):
        canonical = label_lookup(["O", "B-PER", "I-PER", "B-LOC", "I-LOC", "B-ORG"])
        assert label_lookup(shuffled) == canonical
