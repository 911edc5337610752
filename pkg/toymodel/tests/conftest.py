import json
import pathlib
import shutil
import subprocess

import pytest

from toymodel import ModelConfig, TrainConfig, VocabFile, load_records, train

INSTANCES = pathlib.Path(__file__).parent / "data" / "instances"
PREP_FLAGS = ["--replace-names", "--strip-docstrings"]


@pytest.fixture(scope="session")
def toy_data(tmp_path_factory):
    """Build the 8-record toy set strictly through the astseq CLI."""
    tmp = tmp_path_factory.mktemp("toydata")
    inst_dir = tmp / "instances"
    sol_dir = tmp / "solutions"
    inst_dir.mkdir()
    sol_dir.mkdir()
    for path in sorted(INSTANCES.glob("*.json")):
        shutil.copy(path, inst_dir / path.name)
        solution = json.loads(path.read_text())["solution"]
        (sol_dir / (path.stem + ".py")).write_text(solution)

    vocab_path = tmp / "vocab.tsv"
    records_path = tmp / "records.jsonl"
    subprocess.run(
        ["astseq", "vocab", "build", "--dir", str(sol_dir), "--out", str(vocab_path), *PREP_FLAGS],
        check=True,
        capture_output=True,
    )
    subprocess.run(
        [
            "astseq", "prep",
            "--dir", str(inst_dir),
            "--vocab", str(vocab_path),
            "--out", str(records_path),
            "--p1", "0.0", "--p2", "0.0",
            "--seed", "1",
            *PREP_FLAGS,
        ],
        check=True,
        capture_output=True,
    )
    return tmp


@pytest.fixture(scope="session")
def vocab(toy_data):
    return VocabFile.load(toy_data / "vocab.tsv")


@pytest.fixture(scope="session")
def records(toy_data):
    recs = load_records(toy_data / "records.jsonl")
    assert len(recs) == 8
    return recs


@pytest.fixture(scope="session")
def model_config(vocab, records):
    return ModelConfig(
        vocab_size=vocab.n_ids,
        embed_dim=128,
        max_target_len=max(len(r.target) for r in records) + 8,
    )


@pytest.fixture(scope="session")
def overfit_run(records, vocab, model_config, toy_data):
    """The memorization training run shared by the slow tests."""
    log_path = toy_data / "metrics.log"
    model, losses = train(
        records,
        vocab,
        model_config,
        TrainConfig(steps=2000, lr=3e-4, seed=0, loss_stop=0.02, log_every=25),
        log_path=log_path,
    )
    return model, losses, log_path
