# Copyright 2026 The GUTEK Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import hashlib
import html.parser
import json
import os
import re
import shlex
import subprocess

import jsonschema
import pytest

from conftest import ROOT


def run(gutek, *args, stdin=None):
    env = dict(os.environ)
    env.pop("GUTEK_CACHE_DIR", None)
    return subprocess.run([gutek, *map(str, args)], input=stdin, capture_output=True,
                          text=True, env=env, timeout=300)


def schema(name):
    with open(ROOT / "schemas" / f"{name}.schema.json") as f:
        return json.load(f)


def validate(doc, name):
    jsonschema.validate(doc, schema(name), cls=jsonschema.Draft202012Validator)


def check_error(proc, code, error_code):
    assert proc.returncode == code, proc.stderr
    err = json.loads(proc.stderr.strip().splitlines()[-1])
    validate(err, "error")
    assert err["error"]["code"] == error_code


MODEL = "builtin:" + str(ROOT / "data" / "review_model.json")
SAMPLE = ROOT / "data" / "sample_review.txt"


def test_schemas_are_valid():
    for path in (ROOT / "schemas").glob("*.schema.json"):
        with open(path) as f:
            jsonschema.Draft202012Validator.check_schema(json.load(f))


def test_explain_json_validates(gutek):
    proc = run(gutek, "explain", "--model", MODEL, "--text", SAMPLE, "--output", "json")
    assert proc.returncode == 0, proc.stderr
    doc = json.loads(proc.stdout)
    validate(doc, "explanation")
    assert doc["granularity"] == "sentence"
    assert len(doc["units"]) == 4
    text = SAMPLE.read_text()
    for unit in doc["units"]:
        assert text[unit["char_start"]:unit["char_end"]] == unit["text"]


def test_explain_sample_signs(gutek):
    doc = json.loads(run(gutek, "explain", "--model", MODEL, "--text", SAMPLE).stdout)
    assert doc["target_label"] == "pos"
    scores = [u["score"] for u in doc["units"]]
    assert scores[1] < 0 < scores[2]


class SpanCounter(html.parser.HTMLParser):
    def __init__(self):
        super().__init__()
        self.units = 0
        self.urls = []

    def handle_starttag(self, tag, attrs):
        attrs = dict(attrs)
        if tag == "span" and attrs.get("class") == "unit":
            self.units += 1
        for key in ("src", "href"):
            if key in attrs:
                self.urls.append(attrs[key])
        if tag in ("script", "link", "img", "iframe"):
            self.urls.append(tag)


def test_explain_html_golden(gutek, tmp_path):
    out = tmp_path / "sample.html"
    proc = run(gutek, "explain", "--model", MODEL, "--text", SAMPLE, "--output", "html",
               "--out", out)
    assert proc.returncode == 0, proc.stderr
    page = out.read_text()
    golden = ROOT / "tests" / "data" / "sample_review_golden.html"
    if os.environ.get("GUTEK_UPDATE_GOLDEN"):
        golden.write_text(page)
    assert page == golden.read_text()
    parser = SpanCounter()
    parser.feed(page)
    assert parser.units == 4
    assert parser.urls == []
    assert not re.search(r"https?://|url\(", page)


def test_budget_one_is_flag_error(gutek):
    proc = run(gutek, "explain", "--model", MODEL, "--text", SAMPLE, "--budget", "1")
    check_error(proc, 2, "InvalidArgument")
    assert proc.stdout == ""


def test_unknown_segmenter_is_flag_error(gutek):
    proc = run(gutek, "explain", "--model", MODEL, "--text", SAMPLE, "--granularity", "clause")
    check_error(proc, 2, "UnknownSegmenter")


def test_unknown_option_exits_two(gutek):
    proc = run(gutek, "explain", "--model", MODEL, "--no-such-flag")
    assert proc.returncode == 2


def test_missing_builtin_model_is_model_error(gutek, tmp_path):
    proc = run(gutek, "explain", "--model", "builtin:" + str(tmp_path / "nope.json"),
               "--text", SAMPLE)
    check_error(proc, 3, "ModelUnavailable")


def test_dead_subprocess_is_model_error(gutek):
    proc = run(gutek, "explain", "--model", "subprocess:false", "--text", SAMPLE)
    assert proc.returncode == 3, proc.stderr
    validate(json.loads(proc.stderr.strip().splitlines()[-1]), "error")


def test_subprocess_model_explains(gutek, stub_adapter):
    model = "subprocess:" + shlex.quote(stub_adapter)
    first = run(gutek, "explain", "--model", model, "--text", SAMPLE, "--budget", "16")
    assert first.returncode == 0, first.stderr
    doc = json.loads(first.stdout)
    validate(doc, "explanation")
    assert doc["model_id"] == "stub-v1"
    assert doc["n_samples"] == 16
    second = run(gutek, "explain", "--model", model, "--text", SAMPLE, "--budget", "16")
    assert second.stdout == first.stdout


def test_stdin_input(gutek):
    proc = run(gutek, "explain", "--model", MODEL, stdin=SAMPLE.read_text())
    assert proc.returncode == 0, proc.stderr
    assert len(json.loads(proc.stdout)["units"]) == 4


def test_lime_word_aggregated(gutek):
    proc = run(gutek, "explain", "--model", MODEL, "--text", SAMPLE, "--method", "lime-word",
               "--budget", "50", "--aggregate", "max")
    assert proc.returncode == 0, proc.stderr
    doc = json.loads(proc.stdout)
    validate(doc, "explanation")
    assert doc["method"] == "lime-word"
    assert len(doc["units"]) == 4


def test_eval_report_validates(gutek, synth_dir, tmp_path):
    model = "builtin:" + str(synth_dir / "model.json")
    for interp in ("gutek", "lime-word-sum", "lime-word-max"):
        out = tmp_path / f"{interp}.json"
        proc = run(gutek, "eval", "--model", model, "--task", synth_dir / "fidelity.jsonl",
                   "--interpreter", interp, "--report", out, "--jobs", "2")
        assert proc.returncode == 0, proc.stderr
        doc = json.loads(out.read_text())
        validate(doc, "fidelity_report")
        assert doc["report"]["n_examples"] == 20
    gutek_report = json.loads((tmp_path / "gutek.json").read_text())["report"]
    assert gutek_report["mean_iou"] >= 90


def test_insertion_report_validates(gutek, synth_dir):
    proc = run(gutek, "insertion", "--model", "builtin:" + str(synth_dir / "model.json"),
               "--pos", synth_dir / "pos.jsonl", "--neg", synth_dir / "neg.jsonl",
               "--budget", "32", "--max-cases", "4")
    assert proc.returncode == 0, proc.stderr
    doc = json.loads(proc.stdout)
    validate(doc, "insertion_report")
    assert 0 < doc["n_cases"] <= 4


def test_neighborhood_validates(gutek):
    proc = run(gutek, "diagnose", "neighborhood", "--units", "137.7", "--budget", "20")
    assert proc.returncode == 0, proc.stderr
    doc = json.loads(proc.stdout)
    validate(doc, "neighborhood")
    assert doc["log10_size"] == pytest.approx(137.7 * 0.30102999566398120, rel=1e-12)


def test_segstats_on_review_prose(gutek):
    proc = run(gutek, "diagnose", "segstats", "--texts", ROOT / "data" / "reviews.jsonl")
    assert proc.returncode == 0, proc.stderr
    doc = json.loads(proc.stdout)
    validate(doc, "segstats")
    assert doc["n_texts"] == 40
    assert 11.0 <= doc["words_per_segment"]["mean"] <= 33.0


def test_wasserstein_and_ood_validate(gutek, tmp_path, synth_dir):
    rows = [{"id": f"v{i}", "vector": [i * 0.1, 1.0 - i * 0.05]} for i in range(12)]
    a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    a.write_text("".join(json.dumps(r) + "\n" for r in rows[:6]))
    b.write_text("".join(json.dumps(r) + "\n" for r in rows[6:11]))
    proc = run(gutek, "diagnose", "wasserstein", "--a", a, "--b", b)
    assert proc.returncode == 0, proc.stderr
    doc = json.loads(proc.stdout)
    validate(doc, "wasserstein")
    assert (doc["n_a"], doc["n_b"], doc["n_matched"]) == (6, 5, 5)

    proc = run(gutek, "diagnose", "ood", "--model", "builtin:" + str(synth_dir / "model.json"),
               "--texts", synth_dir / "pos.jsonl", "--trees", "20")
    assert proc.returncode == 0, proc.stderr
    validate(json.loads(proc.stdout), "ood_report")


def test_malformed_jsonl_is_parse_error(gutek, tmp_path):
    bad = tmp_path / "bad.jsonl"
    bad.write_text('{"text": "fine"}\nnot json\n')
    proc = run(gutek, "diagnose", "segstats", "--texts", bad)
    assert proc.returncode == 1
    err = json.loads(proc.stderr.strip().splitlines()[-1])
    validate(err, "error")
    assert "bad.jsonl:2" in err["error"]["message"]


def test_outputs_are_deterministic(gutek, tmp_path):
    digests = []
    for _ in range(2):
        proc = run(gutek, "explain", "--model", MODEL, "--text", SAMPLE, "--method", "lime-word",
                   "--budget", "40", "--seed", "5")
        assert proc.returncode == 0, proc.stderr
        digests.append(hashlib.sha256(proc.stdout.encode()).hexdigest())
    assert digests[0] == digests[1]
