"""Run the CLI and validate its JSON output against the shipped schemas."""
import json
import pathlib
import subprocess
import sys

import jsonschema

cli, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
runs = [
    ("table.schema.json", ["table", "--model", "stu", "--pmax", "2", "--amax", "3", "--format", "json"]),
    ("table.schema.json", ["table", "--model", "sp6", "--pmax", "1", "--amax", "2", "--format", "json", "--no-timestamp"]),
    ("table.schema.json", ["table", "--model", "su6", "--pmax", "2", "--amax", "2", "--budget", "10", "--format", "json"]),
    ("plethysm.schema.json", ["plethysm", "--model", "stu", "--partition", "4,4", "--format", "json"]),
    ("plethysm.schema.json", ["plethysm", "--model", "e7", "--partition", "3", "--format", "json", "--no-timestamp"]),
]
for name, args in runs:
    schema = json.loads((schema_dir / name).read_text())
    out = subprocess.run([cli, *args], check=True, capture_output=True, text=True).stdout
    jsonschema.validate(json.loads(out), schema)
    print("valid:", " ".join(args))
