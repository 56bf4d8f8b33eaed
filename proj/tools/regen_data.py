#!/usr/bin/env python3
# Copyright 2026 The ucgen Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Rebuilds the replay transcripts under data/.

Each task's canned responses are served in order by the mock backend and the
run is recorded, so the stored prompt hashes always match the current prompt
templates. Run after changing a template or the child-language description:

    tools/regen_data.py --ucgen build/tools/ucgen
"""

import argparse
import json
import pathlib
import subprocess
import sys
import tempfile

ROOT = pathlib.Path(__file__).resolve().parent.parent
DATA = ROOT / "data"


def traffic_light_responses():
    d = DATA / "traffic_light"
    # The first reply continues the primed fence and then explains itself.
    r1 = (d / "response1.py").read_text() + (
        "```\n\nThis class keeps the light in one of four states and uses count "
        "as a timer for the 60 second intervals.\n")
    r2 = ("Here is the code with the holes filled in:\n\n```python\n" +
          (d / "response2.py").read_text() + "```\n")
    return (d / "task.txt").read_text(), [r1, r2]


def record(ucgen, task_text, responses, out_path):
    with tempfile.TemporaryDirectory() as tmp:
        tmp = pathlib.Path(tmp)
        task = tmp / "task.txt"
        task.write_text(task_text)
        draft = tmp / "draft.jsonl"
        draft.write_text("".join(json.dumps({"response": r}) + "\n" for r in responses))
        rec = tmp / "rec.jsonl"
        proc = subprocess.run(
            [ucgen, "run", "--backend", "mock", "--transcript", str(draft),
             "--task", str(task), "--record", str(rec), "-o", str(tmp / "out.ucl")],
            capture_output=True, text=True)
        if proc.returncode != 0:
            sys.exit(f"{out_path}: pipeline failed\n{proc.stderr}")
        lines = rec.read_text().splitlines()
        if len(lines) != len(responses):
            sys.exit(f"{out_path}: used {len(lines)} of {len(responses)} responses")
        # Wall times are not part of the replayed data.
        entries = [json.loads(l) for l in lines]
        for e in entries:
            e["ms"] = 0
            e["backend"] = "recorded"
        out_path.write_text("".join(json.dumps(e) + "\n" for e in entries))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--ucgen", required=True)
    args = ap.parse_args()

    task, responses = traffic_light_responses()
    record(args.ucgen, task, responses, DATA / "traffic_light" / "transcript.jsonl")

    bench = DATA / "bench"
    bench.mkdir(exist_ok=True)
    for old in bench.glob("*"):
        old.unlink()
    (bench / "traffic_light.txt").write_text(task)
    record(args.ucgen, task, responses, bench / "traffic_light.jsonl")
    for src in sorted((DATA / "suite_src").iterdir()):
        task = (src / "task.txt").read_text()
        responses = [p.read_text() for p in sorted(src.glob("r*.txt"))]
        (bench / f"{src.name}.txt").write_text(task)
        record(args.ucgen, task, responses, bench / f"{src.name}.jsonl")
    print(f"wrote {len(list(bench.glob('*.jsonl')))} transcripts to {bench}")


if __name__ == "__main__":
    main()
