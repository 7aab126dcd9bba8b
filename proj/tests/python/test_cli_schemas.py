# Copyright 2026 The eqhp Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Validates the CLI's JSON output against the shipped schemas."""

import json
import os
import pathlib
import subprocess

import jsonschema
import pytest

ROOT = pathlib.Path(__file__).resolve().parents[2]
CLI = os.environ.get("EQHP_CLI", str(ROOT / "build" / "tools" / "eqhp"))
SCHEMAS = pathlib.Path(os.environ.get("EQHP_SCHEMA_DIR", ROOT / "schemas"))


def load_schema(name):
    with open(SCHEMAS / f"{name}.schema.json") as f:
        schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(schema)
    return schema


def run(*args):
    proc = subprocess.run([CLI, "--format", "json", *args],
                          capture_output=True, text=True)
    return proc.returncode, json.loads(proc.stdout)


CASES = [
    ("reps", ["reps", "1"]),
    ("reps", ["reps", "6"]),
    ("cells", ["cells", "3", "4"]),
    ("cells", ["cells", "5", "6", "interleaved"]),
    ("cells", ["cells", "2", "0"]),
    ("additive", ["additive", "2", "7"]),
    ("additive", ["additive", "15", "5"]),
    ("point", ["point", "0", "0"]),
    ("point", ["point", "-2", "6"]),
    ("point", ["point", "1", "3", "--p", "3"]),
    ("group", ["group", "2", "6"]),
    ("group", ["group", "-1", "4", "--cutoff", "5"]),
    ("fixed-points", ["fixed-points", "4", "3"]),
    ("fixed-points", ["fixed-points", "3", "--rep", "1,2"]),
    ("ring", ["ring", "c^2"]),
    ("ring", ["ring", "0"]),
    ("ring", ["ring", "--", "e^4*c + 3*x^2*CC", "eval-all"]),
    ("ring", ["ring", "--", "CC", "eval-sun"]),
    ("ring", ["ring", "--level", "3", "--", "x^2*CC", "eval-fixed1"]),
    ("ring", ["ring", "--", "check-relation"]),
    ("ring", ["ring", "--rhs", "e^4*c + 2*x^2*CC", "--", "check-relation"]),
    ("ring", ["ring", "--", "nu", "4"]),
    ("ring", ["ring", "--", "basis", "4", "8"]),
    ("ring", ["ring", "--", "probe", "2", "8"]),
]


@pytest.mark.parametrize("schema_name,args", CASES,
                         ids=[" ".join(a) for _, a in CASES])
def test_ok_output_matches_schema(schema_name, args):
    code, doc = run(*args)
    assert code == 0, doc
    jsonschema.validate(doc, load_schema("envelope"))
    assert doc["status"] == "ok"
    assert doc["command"] == args[0]
    jsonschema.validate(doc["result"], load_schema(schema_name))


@pytest.mark.parametrize("args,code", [
    (["reps", "0"], 1),
    (["reps", "1000"], 1),
    (["ring", "c*c*"], 1),
    (["ring", "e + x"], 1),
    (["cells", "3", "2", "bogus"], 2),
    (["nonsense"], 2),
    (["fixed-points", "3"], 2),
    (["additive", "4", "5"], 1),
])
def test_error_output_matches_envelope(args, code):
    rc, doc = run(*args)
    assert rc == code
    jsonschema.validate(doc, load_schema("envelope"))
    assert doc["status"] == "error"
    assert doc["error"]["message"]
