"""Stub embedder contract and the per-text vector oracle."""

import subprocess
import sys

import numpy as np
import pytest

from pubineq.providers import StubEmbedder, get_provider, stub_vector


class TestStubEmbedder:
    def test_identical_texts_identical_vectors(self):
        vectors = StubEmbedder().embed(["hello world", "hello world"])
        assert np.array_equal(vectors[0], vectors[1])

    def test_token_multiset_invariance(self):
        embedder = StubEmbedder()
        a, b = embedder.embed(["robot helps child", "child helps robot"])
        assert np.array_equal(a, b)

    def test_multiplicity_matters(self):
        embedder = StubEmbedder()
        a, b = embedder.embed(["go go stop", "go stop"])
        assert not np.array_equal(a, b)

    def test_unit_norm(self):
        vectors = StubEmbedder(dim=48).embed(["one", "two words here", ""])
        norms = np.linalg.norm(vectors, axis=1)
        assert np.allclose(norms, 1.0, atol=1e-6)

    def test_default_dim_384(self):
        assert StubEmbedder().embed(["x"]).shape == (1, 384)

    def test_seed_changes_vectors(self):
        a = StubEmbedder(seed=1).embed(["robot"])[0]
        b = StubEmbedder(seed=2).embed(["robot"])[0]
        assert not np.array_equal(a, b)

    def test_case_and_punctuation_folded(self):
        embedder = StubEmbedder()
        a, b = embedder.embed(["Robot, helps. Child!", "robot helps child"])
        assert np.array_equal(a, b)

    def test_cache_does_not_change_values(self):
        embedder = StubEmbedder(dim=32)
        warm = embedder.embed(["alpha beta", "alpha beta gamma"])
        cold = np.stack(
            [
                stub_vector("alpha beta", 32),
                stub_vector("alpha beta gamma", 32),
            ]
        )
        assert np.array_equal(warm, cold)

    def test_reproducible_across_processes(self):
        code = (
            "import numpy as np\n"
            "from pubineq.providers import stub_vector\n"
            "print(repr(stub_vector('robot child', 8).tolist()))\n"
        )
        out1 = subprocess.run(
            [sys.executable, "-c", code], capture_output=True, text=True, check=True
        ).stdout
        out2 = subprocess.run(
            [sys.executable, "-c", code], capture_output=True, text=True, check=True
        ).stdout
        assert out1 == out2
        assert np.allclose(eval(out1), stub_vector("robot child", 8).tolist())


class TestGetProvider:
    def test_stub(self):
        provider = get_provider("stub", dim=16, seed=3)
        assert provider.model == "stub"
        assert provider.dim == 16

    def test_url(self):
        provider = get_provider("http://localhost:9999")
        assert provider.url == "http://localhost:9999"

    def test_garbage_rejected(self):
        with pytest.raises(ValueError):
            get_provider("ftp://nope")
