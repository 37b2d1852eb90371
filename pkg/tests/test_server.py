import random
from pathlib import Path

import numpy as np
import pytest
from fastapi.testclient import TestClient

from nerkit.corpus import load_dataset
from nerkit.server import Token, create_app, tokenize
from nerkit.tagger import TaggerModel, TrainConfig, train


class TestTokenize:
    def test_sentence_with_final_period(self):
        tokens = tokenize("Dante was born in Florence.")
        assert [t.text for t in tokens] == ["Dante", "was", "born", "in", "Florence", "."]

    def test_empty(self):
        assert tokenize("") == []

    def test_wrapping_punctuation(self):
        assert tokenize("(EU)") == [
            Token("(", 0, 1),
            Token("EU", 1, 3),
            Token(")", 3, 4),
        ]

    def test_pure_punctuation_chunk(self):
        assert [t.text for t in tokenize("...")] == [".", ".", "."]

    def test_internal_punctuation_kept(self):
        assert [t.text for t in tokenize("B-52s don't")] == ["B-52s", "don't"]

    def test_offsets_reconstruct_input(self):
        rng = random.Random(3)
        alphabet = "ab XY 09 .,()!?  é日 \t\n\"'"
        for _ in range(200):
            text = "".join(rng.choice(alphabet) for _ in range(rng.randint(0, 40)))
            for tok in tokenize(text):
                assert text[tok.start_char : tok.end_char] == tok.text


@pytest.fixture(scope="module")
def news_model(fixtures_dir):
    return train([load_dataset(fixtures_dir / "synth-news")], TrainConfig(epochs=5))


@pytest.fixture(scope="module")
def client(news_model, fixtures_dir):
    bio_model = train([load_dataset(fixtures_dir / "synth-bio")], TrainConfig(epochs=5))
    app = create_app({"news": news_model, "bio": bio_model})
    return TestClient(app)


class TestEndpoints:
    def test_health(self, client):
        response = client.get("/health")
        assert response.status_code == 200
        assert response.json() == {"status": "ok"}

    def test_models_lists_names_and_labels(self, client):
        doc = client.get("/models").json()
        assert [m["name"] for m in doc] == ["news", "bio"]
        assert doc[0]["labels"][0] == "O"
        assert "B-PER" in doc[0]["labels"]

    def test_predict_schema(self, client):
        response = client.post("/predict", json={"text": "alice visited paris ."})
        assert response.status_code == 200
        doc = response.json()
        assert set(doc) == {"tokens", "spans", "model", "elapsed_ms"}
        assert doc["model"] == "news"
        assert [t["text"] for t in doc["tokens"]] == ["alice", "visited", "paris", "."]
        assert {s["type"] for s in doc["spans"]} == {"PER", "LOC"}
        for span in doc["spans"]:
            assert set(span) == {"type", "start_token", "end_token", "text", "score"}
            assert 0.0 <= span["score"] <= 1.0

    def test_named_model_selected(self, client):
        doc = client.post(
            "/predict", json={"text": "cisplatin suppresses brca1 ;", "model": "bio"}
        ).json()
        assert doc["model"] == "bio"
        assert {s["type"] for s in doc["spans"]} == {"CHEM", "GENE"}

    def test_unknown_model_404(self, client):
        assert client.post("/predict", json={"text": "x", "model": "nope"}).status_code == 404

    def test_empty_text_400(self, client):
        assert client.post("/predict", json={"text": "   "}).status_code == 400

    def test_oversize_text_400(self, client):
        assert client.post("/predict", json={"text": "x" * 10_001}).status_code == 400

    def test_repeat_requests_identical(self, client):
        body = {"text": "bruno abbott met reporters near oslo ."}
        first = client.post("/predict", json=body).json()
        second = client.post("/predict", json=body).json()
        assert first["spans"] == second["spans"]
        assert first["tokens"] == second["tokens"]

    def test_span_text_matches_offsets(self, client):
        text = "greta visited san marino yesterday ."
        doc = client.post("/predict", json={"text": text}).json()
        for span in doc["spans"]:
            start = doc["tokens"][span["start_token"]]["start_char"]
            end = doc["tokens"][span["end_token"] - 1]["end_char"]
            assert text[start:end] == span["text"]

    def test_token_offsets_index_original_text(self, client):
        text = "alice (alice) visited paris, oslo and tunis!"
        doc = client.post("/predict", json={"text": text}).json()
        for tok in doc["tokens"]:
            assert text[tok["start_char"] : tok["end_char"]] == tok["text"]


class TestStaticBundle:
    def test_root_serves_demo_when_static_set(self, news_model):
        dist = Path(__file__).parent.parent / "frontend" / "dist"
        if not (dist / "index.html").exists():
            pytest.skip("frontend bundle not built")
        app = create_app({"news": news_model}, static_dir=dist)
        client = TestClient(app)
        response = client.get("/")
        assert response.status_code == 200
        assert "<!doctype html>" in response.text.lower()
        # API routes still win over the static mount
        assert client.get("/health").json() == {"status": "ok"}

    def test_requires_at_least_one_model(self):
        with pytest.raises(ValueError):
            create_app({})
