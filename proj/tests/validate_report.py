"""Run the CLI, validate its JSON reports against the schema and check
that everything outside the header is identical across two runs."""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema


def run(cli, args, out):
    proc = subprocess.run([cli, *args, "--json", str(out)], capture_output=True, text=True)
    if proc.returncode not in (0, 1):
        sys.exit(f"{args}: exit {proc.returncode}\n{proc.stderr}")
    return json.loads(out.read_text()), proc.returncode


def main():
    cli, schema_path = sys.argv[1], sys.argv[2]
    schema = json.loads(Path(schema_path).read_text())
    jsonschema.Draft202012Validator.check_schema(schema)
    with tempfile.TemporaryDirectory() as tmp:
        tmp = Path(tmp)
        for name, args in {
            "verify": ["verify"],
            "building": ["building", "--radius", "2"],
            "empty": ["verify", "--filter", "nothing"],
        }.items():
            first, code = run(cli, args, tmp / f"{name}1.json")
            second, _ = run(cli, args, tmp / f"{name}2.json")
            jsonschema.validate(first, schema)
            if code != (1 if first["summary"]["fail"] else 0):
                sys.exit(f"{name}: exit {code} does not match {first['summary']['fail']} failures")
            first.pop("header")
            second.pop("header")
            if first != second:
                sys.exit(f"{name}: reports differ outside the header")
            print(f"{name}: valid, {first['summary']}")


if __name__ == "__main__":
    main()
