#!/usr/bin/env python3
"""Regenerate the synthetic corpora under tests/fixtures/.

Two domains with fully disjoint vocabularies and entity-type sets:
  synth-news  PER/LOC over newsroom-style sentences
  synth-bio   GENE/CHEM over lab-report-style sentences

Disjointness makes cross-domain type-aware F1 exactly zero by
construction, while each domain on its own is memorizable by a word-level
learner. Deterministic: committing the output of this script is the
source of truth, the script only documents how it was made.
"""

from __future__ import annotations

import random
import sys
from pathlib import Path

FIXTURES = Path(__file__).resolve().parent.parent / "tests" / "fixtures"

NEWS_FIRST = ["alice", "bruno", "carmen", "dmitri", "elena", "farid", "greta", "hugo"]
NEWS_LAST = ["abbott", "barnes", "cruz", "duran", "ekberg", "fontana"]
NEWS_LOC = ["paris", "oslo", "lima", "quito", "riga", "sofia", "tunis", "zagreb"]
NEWS_LOC2 = [("san", "marino"), ("port", "louis")]  # two-token locations

BIO_GENE = ["brca1", "tp53", "egfr", "kras", "myc", "notch1", "wnt5a", "cdk9"]
BIO_CHEM = ["aspirin", "cisplatin", "ethanol", "glucose", "nicotine", "taxol"]
BIO_CHEM2 = [("sodium", "nitrate"), ("zinc", "oxide")]  # two-token chemicals


def news_sentence(rng: random.Random, i: int) -> list[tuple[str, str]]:
    per = NEWS_FIRST[i % len(NEWS_FIRST)]
    last = NEWS_LAST[i % len(NEWS_LAST)]
    loc = NEWS_LOC[i % len(NEWS_LOC)]
    loc_b = NEWS_LOC[(i + 3) % len(NEWS_LOC)]
    loc2 = NEWS_LOC2[i % len(NEWS_LOC2)]
    templates = [
        [(per, "B-PER"), ("visited", "O"), (loc, "B-LOC"), ("yesterday", "O"), (".", "O")],
        [
            (per, "B-PER"),
            (last, "I-PER"),
            ("met", "O"),
            ("reporters", "O"),
            ("near", "O"),
            (loc, "B-LOC"),
            (".", "O"),
        ],
        [
            ("the", "O"),
            ("mayor", "O"),
            ("of", "O"),
            (loc, "B-LOC"),
            ("praised", "O"),
            (per, "B-PER"),
            (".", "O"),
        ],
        [
            (per, "B-PER"),
            ("returned", "O"),
            ("from", "O"),
            (loc, "B-LOC"),
            ("and", "O"),
            ("flew", "O"),
            ("home", "O"),
            ("via", "O"),
            (loc_b, "B-LOC"),
            (".", "O"),
        ],
        [
            ("delegates", "O"),
            ("saw", "O"),
            (per, "B-PER"),
            (last, "I-PER"),
            ("during", "O"),
            ("talks", "O"),
            ("held", "O"),
            ("at", "O"),
            (loc2[0], "B-LOC"),
            (loc2[1], "I-LOC"),
            (".", "O"),
        ],
    ]
    return templates[rng.randrange(len(templates))]


def bio_sentence(rng: random.Random, i: int) -> list[tuple[str, str]]:
    gene = BIO_GENE[i % len(BIO_GENE)]
    gene_b = BIO_GENE[(i + 5) % len(BIO_GENE)]
    chem = BIO_CHEM[i % len(BIO_CHEM)]
    chem2 = BIO_CHEM2[i % len(BIO_CHEM2)]
    templates = [
        [
            (gene, "B-GENE"),
            ("regulates", "O"),
            (gene_b, "B-GENE"),
            ("within", "O"),
            ("cultured", "O"),
            ("tissue", "O"),
            (";", "O"),
        ],
        [
            (chem, "B-CHEM"),
            ("suppresses", "O"),
            (gene, "B-GENE"),
            ("transcription", "O"),
            (";", "O"),
        ],
        [
            ("exposure", "O"),
            ("toward", "O"),
            (chem, "B-CHEM"),
            ("elevated", "O"),
            (gene, "B-GENE"),
            ("signaling", "O"),
            (";", "O"),
        ],
        [
            ("assays", "O"),
            ("showed", "O"),
            ("that", "O"),
            (chem2[0], "B-CHEM"),
            (chem2[1], "I-CHEM"),
            ("binds", "O"),
            (gene, "B-GENE"),
            (";", "O"),
        ],
        [
            (gene, "B-GENE"),
            ("activity", "O"),
            ("dropped", "O"),
            ("after", "O"),
            ("repeated", "O"),
            (chem, "B-CHEM"),
            ("doses", "O"),
            (";", "O"),
        ],
    ]
    return templates[rng.randrange(len(templates))]


def write_split(path: Path, sentences: list[list[tuple[str, str]]]) -> None:
    blocks = ["\n".join(f"{tok} {tag}" for tok, tag in sent) for sent in sentences]
    path.write_text("\n\n".join(blocks) + "\n", encoding="utf-8")


def make_domain(name: str, make, seed: int, n_train=50, n_valid=10, n_test=20) -> set[str]:
    rng = random.Random(seed)
    out = FIXTURES / name
    out.mkdir(parents=True, exist_ok=True)
    train = [make(rng, i) for i in range(n_train)]
    valid = [make(rng, i) for i in range(n_valid)]
    test = [make(rng, i) for i in range(n_test)]
    train_vocab = {tok for sent in train for tok, _ in sent}
    held_vocab = {tok for sent in valid + test for tok, _ in sent}
    missing = held_vocab - train_vocab
    if missing:
        sys.exit(f"{name}: held-out tokens unseen in train: {sorted(missing)}")
    write_split(out / "train.txt", train)
    write_split(out / "valid.txt", valid)
    write_split(out / "test.txt", test)
    return train_vocab | held_vocab


CONLL_MINI_TRAIN = """\
peter B-PER
blackburn I-PER
spoke O
in O
brussels B-LOC
. O

the O
commission B-ORG
rejected O
a O
german B-MISC
proposal O
. O

werner B-PER
zwingmann I-PER
told O
reporters O
in O
london B-LOC
. O

the O
european B-ORG
union I-ORG
will O
meet O
in O
brussels B-LOC
. O
"""

CONLL_MINI_TEST = """\
peter B-PER
blackburn I-PER
visited O
london B-LOC
. O

the O
commission B-ORG
will O
meet O
in O
brussels B-LOC
. O
"""


def main() -> None:
    news_vocab = make_domain("synth-news", news_sentence, seed=20240117)
    bio_vocab = make_domain("synth-bio", bio_sentence, seed=20240118)
    shared = news_vocab & bio_vocab
    if shared:
        sys.exit(f"domains share vocabulary: {sorted(shared)}")

    mini = FIXTURES / "conll-mini"
    mini.mkdir(parents=True, exist_ok=True)
    (mini / "train.txt").write_text(CONLL_MINI_TRAIN, encoding="utf-8")
    (mini / "test.txt").write_text(CONLL_MINI_TEST, encoding="utf-8")
    print(f"fixtures written under {FIXTURES}")


if __name__ == "__main__":
    main()
