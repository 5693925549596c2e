"""Validates qseries JSON reports against docs/report.schema.json."""

import json
import sys

import jsonschema


def main() -> int:
    schema_path, *reports = sys.argv[1:]
    with open(schema_path) as fh:
        schema = json.load(fh)
    for path in reports:
        with open(path) as fh:
            jsonschema.validate(json.load(fh), schema)
        print(f"{path}: valid")
    return 0


if __name__ == "__main__":
    sys.exit(main())
