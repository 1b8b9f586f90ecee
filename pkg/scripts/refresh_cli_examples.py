"""Regenerate the golden CLI outputs under tests/data/cli.

Prints a unified diff for every output that changed; review before committing.
"""

import difflib
import json
from pathlib import Path

from realcyclic.cli import dispatch

DATA = Path(__file__).resolve().parent.parent / "tests" / "data" / "cli"


def main():
    cases = json.loads((DATA / "cases.json").read_text())
    for name, case in cases.items():
        argv = [name] + case.get("args", [])
        if "input" in case:
            argv.append(str(DATA / case["input"]))
        code, text = dispatch(argv)
        if code != case["exit"]:
            print(f"{name}: exit {code}, documented {case['exit']}")
        out = DATA / f"{name}.out"
        old = out.read_text() if out.exists() else ""
        new = text + "\n"
        if old != new:
            print("".join(difflib.unified_diff(old.splitlines(True), new.splitlines(True), str(out), "new")))
            out.write_text(new)


if __name__ == "__main__":
    main()
