"""Exporter acceptance: round-trip into the classification CLI and a full
real-encoder pipeline on a 3-class sentiment sample.

The classification toolkit is exercised strictly through its installed
command line and file formats (never imported), keeping the exporter a
pure bridge.
"""

import json
import shutil
import subprocess

import numpy as np
import pytest

from embexport import emb1
from embexport.cli import main as export_main

LABELTUNE = shutil.which("labeltune")

pytestmark = pytest.mark.skipif(
    LABELTUNE is None, reason="classification CLI not installed"
)


def run_labeltune(*argv):
    return subprocess.run(
        [LABELTUNE, *argv], capture_output=True, text=True, check=False
    )


def report(name, ok, detail=""):
    suffix = f" ({detail})" if detail else ""
    print(f"{'PASS' if ok else 'FAIL'} {name}{suffix}")
    assert ok, f"{name}{suffix}"


@pytest.fixture(scope="module")
def exported(tmp_path_factory, model_dir, sentiment_files):
    root = tmp_path_factory.mktemp("exported")
    paths = {
        "train_emb": str(root / "train.emb"),
        "test_emb": str(root / "test.emb"),
        "labels_emb": str(root / "labels.emb"),
        "root": str(root),
    }
    assert export_main(["texts", "--input", sentiment_files["train"], "--model", model_dir,
                        "--out", paths["train_emb"]]) == 0
    assert export_main(["texts", "--input", sentiment_files["test"], "--model", model_dir,
                        "--out", paths["test_emb"]]) == 0
    assert export_main(["labels", "--input", sentiment_files["labels"], "--model", model_dir,
                        "--out", paths["labels_emb"]]) == 0
    return paths


def test_round_trip_parses_in_primary_cli(exported, sentiment_files, model_dir):
    count, dim = emb1.read(exported["test_emb"])[0].shape
    preds_path = f"{exported['root']}/preds.json"
    proc = run_labeltune(
        "zeroshot", "--inputs", exported["test_emb"], "--labels", sentiment_files["labels"],
        "--label-embeddings", exported["labels_emb"], "--out", preds_path,
    )
    doc = json.loads(open(preds_path).read()) if proc.returncode == 0 else {}
    predictions = doc.get("predictions", [])
    with open(sentiment_files["test"], encoding="utf-8") as f:
        test_texts = [line.split("\t")[0] for line in f if line.strip()]
    order_ok = [p["id"] for p in predictions] == test_texts
    report(
        "exporter-round-trip",
        proc.returncode == 0 and len(predictions) == count == 30 and dim == 8 and order_ok,
        f"exit={proc.returncode}, rows={len(predictions)}, dim={dim}, order={order_ok}",
    )


def test_reexport_byte_identical(exported, sentiment_files, model_dir):
    again = f"{exported['root']}/train_again.emb"
    assert export_main(["texts", "--input", sentiment_files["train"], "--model", model_dir,
                        "--out", again]) == 0
    same = (
        open(exported["train_emb"], "rb").read() == open(again, "rb").read()
        and open(exported["train_emb"] + ".ids", "rb").read() == open(again + ".ids", "rb").read()
    )
    report("exporter-reexport-identical", same)


def test_full_pipeline_beats_random_baseline(exported, sentiment_files):
    root = exported["root"]
    tuned_dir = f"{root}/tuned"
    proc_tune = run_labeltune(
        "tune", "--train", sentiment_files["train"], "--train-embeddings",
        exported["train_emb"], "--labels", sentiment_files["labels"],
        "--label-embeddings", exported["labels_emb"], "--seed", "0", "--out", tuned_dir,
    )
    assert proc_tune.returncode == 0, proc_tune.stderr

    preds_path = f"{root}/tuned_preds.json"
    proc_pred = run_labeltune(
        "zeroshot", "--inputs", exported["test_emb"], "--tuned", tuned_dir,
        "--out", preds_path,
    )
    assert proc_pred.returncode == 0, proc_pred.stderr

    report_path = f"{root}/report.json"
    proc_eval = run_labeltune(
        "evaluate", "--test", sentiment_files["test"], "--labels", sentiment_files["labels"],
        "--pred", preds_path, "--out", report_path,
    )
    assert proc_eval.returncode == 0, proc_eval.stderr

    doc = json.load(open(report_path))
    score = doc["models"][0]["macro_f1_mean"]
    random_baseline = 1.0 / 3.0
    report(
        "exporter-full-pipeline",
        score > random_baseline,
        f"macro_f1={score:.3f} vs random {random_baseline:.3f}",
    )
