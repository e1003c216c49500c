"""Runs CLI subcommands with --json and validates the output against the shipped schemas."""

import json
import pathlib
import subprocess
import sys

import jsonschema
from referencing import Registry, Resource

CASES = [
    ("kl", ["kl", "--family", "A", "--n", "4", "--x", "1234", "--w", "3412", "--json"], 0),
    ("kl", ["kl", "--family", "B", "--n", "3", "--w", "[-3,2,1]", "--json"], 0),
    ("kl", ["kl", "--family", "A", "--n", "4", "--all", "--json"], 0),
    ("rsk", ["rsk", "438721a965cb", "--json"], 0),
    ("cells", ["cells", "--family", "A", "--n", "4", "--kind", "left", "--json"], 0),
    ("cells", ["cells", "--family", "B", "--n", "2", "--kind", "two-sided", "--json"], 0),
    ("wgraph", ["wgraph", "--family", "B", "--n", "2", "--cell", "[-1,2]", "--json"], 0),
    ("posbasis", ["posbasis", "--family", "B", "--n", "2", "--cell", "[-1,2]", "--json"], 0),
    ("posbasis", ["posbasis", "--family", "A", "--n", "4", "--partition", "3,1", "--json"], 0),
    ("posbasis_report", ["posbasis", "--family", "A", "--n", "4", "--report", "--json"], 0),
    ("slice", ["slice", "--n", "4", "--x", "2143", "--y", "4231", "--essential", "--json"], 0),
    ("slice", ["slice", "--n", "4", "--x", "4231", "--y", "2143", "--json"], 0),
    ("ks_verify", ["ks", "verify", "--target", "gl8", "--samples", "3", "--reduction-samples", "20", "--json"], 0),
    ("ks_verify", ["ks", "verify", "--target", "gl12", "--samples", "2", "--method", "kernel",
                   "--reduction-samples", "20", "--json"], 0),
    ("ks_sample", ["ks", "sample", "--seed", "3", "--json"], 0),
    ("repro", ["repro", "all", "--only", "gl12", "--samples", "2", "--json"], 0),
    ("repro", ["repro", "all", "--only", "s4", "--json"], 1),
]


def main() -> int:
    cli, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
    schemas = {p.name: json.loads(p.read_text()) for p in schema_dir.glob("*.schema.json")}
    registry = Registry().with_resources((name, Resource.from_contents(s)) for name, s in schemas.items())
    failures = 0
    for name, args, code in CASES:
        proc = subprocess.run([cli, *args], capture_output=True, text=True)
        label = " ".join(args)
        if proc.returncode != code:
            print(f"FAIL {label}: exit {proc.returncode}, wanted {code}\n{proc.stderr}")
            failures += 1
            continue
        try:
            doc = json.loads(proc.stdout)
            jsonschema.Draft202012Validator(schemas[f"{name}.schema.json"], registry=registry).validate(doc)
        except (json.JSONDecodeError, jsonschema.ValidationError) as e:
            print(f"FAIL {label}: {e}")
            failures += 1
            continue
        print(f"ok   {label}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
