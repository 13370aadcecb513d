#!/usr/bin/env python3
"""Runs a command and checks its exit code, output pattern and JSON schema."""
import argparse
import json
import re
import subprocess
import sys


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--exit", type=int, default=0, dest="want_exit")
    ap.add_argument("--match", action="append", default=[], help="regex that stdout must contain")
    ap.add_argument("--schema", help="JSON schema for stdout")
    ap.add_argument("--lines", action="store_true", help="stdout is JSON lines")
    ap.add_argument("--repeat", action="store_true", help="run twice and require identical stdout")
    ap.add_argument("cmd", nargs=argparse.REMAINDER)
    a = ap.parse_args()
    cmd = a.cmd[1:] if a.cmd and a.cmd[0] == "--" else a.cmd

    r = subprocess.run(cmd, capture_output=True, text=True)
    out = r.stdout
    if r.returncode != a.want_exit:
        sys.exit(f"exit {r.returncode}, wanted {a.want_exit}\nstdout:\n{out}\nstderr:\n{r.stderr}")
    for pat in a.match:
        if not re.search(pat, out):
            sys.exit(f"pattern {pat!r} not found in:\n{out}")
    if a.schema:
        import jsonschema

        with open(a.schema) as f:
            schema = json.load(f)
        docs = [json.loads(l) for l in out.splitlines() if l.strip()] if a.lines else [json.loads(out)]
        for d in docs:
            jsonschema.validate(d, schema)
    if a.repeat:
        again = subprocess.run(cmd, capture_output=True, text=True).stdout
        if again != out:
            sys.exit("output differs between runs")
    print(f"ok: {' '.join(cmd)}")


if __name__ == "__main__":
    main()
