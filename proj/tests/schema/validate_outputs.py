#!/usr/bin/env python3
"""Run the ehf binary over scripted scenarios and validate every JSON output
against the published schemas. Also checks that the schemas reject a few
malformed documents, so a permissive schema cannot pass silently."""

import json
import pathlib
import subprocess
import sys

import jsonschema
from referencing import Registry, Resource

EXTENDED_NEAR_PRISM = """13 17
0 1
0 2
1 2
3 4
3 5
4 5
6 7
0 8
8 6
6 9
9 3
1 10
10 7
7 11
11 4
2 12
12 5
"""

PYRAMID_222 = "7 9\n0 1\n1 2\n0 3\n3 4\n0 5\n5 6\n2 4\n4 6\n2 6\n"
SHORT_PYRAMID = "6 8\n0 1\n0 2\n1 2\n3 2\n3 4\n4 0\n3 5\n5 1\n"
C5_PENDANT = "6 6\n0 1\n1 2\n2 3\n3 4\n4 0\n0 5\n"
K33 = "6 9\n0 3\n0 4\n0 5\n1 3\n1 4\n1 5\n2 3\n2 4\n2 5\n"
THETA = "5 6\n0 1\n0 2\n0 3\n1 4\n2 4\n3 4\n"
PRISM = "6 9\n0 1\n1 2\n2 0\n3 4\n4 5\n5 3\n0 3\n1 4\n2 5\n"
WHEEL5 = "6 10\n0 1\n1 2\n2 3\n3 4\n4 0\n5 0\n5 1\n5 2\n5 3\n5 4\n"
EVEN_WHEEL = "7 10\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n6 0\n6 1\n6 3\n6 4\n"
TREE_STRIP = "9 13\n0 4\n0 6\n0 7\n1 5\n1 6\n1 8\n2 5\n2 7\n3 4\n3 8\n4 6\n5 6\n7 8\n"

# (schema, args, stdin, accepted exit statuses)
SCENARIOS = [
    ("graph", ["convert", "-"], "Dhc", {0}),
    ("graph", ["convert", "-", "--to", "json"], K33, {0}),
    ("certificate", ["detect", "odd-hole", "-"], "Dhc", {0}),
    ("certificate", ["detect", "even-hole", "-"], "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n", {0}),
    ("certificate", ["detect", "hole", "-"], K33, {0}),
    ("certificate", ["detect", "theta", "-"], THETA, {0}),
    ("certificate", ["detect", "pyramid", "-"], PYRAMID_222, {0}),
    ("certificate", ["detect", "pyramid", "-", "--apex", "0"], PYRAMID_222, {0}),
    ("certificate", ["detect", "near-prism", "-"], PRISM, {0}),
    ("certificate", ["detect", "wheel", "-"], WHEEL5, {0}),
    ("certificate", ["detect", "even-wheel", "-"], EVEN_WHEEL, {0}),
    ("certificate", ["detect", "extended-near-prism", "-"], EXTENDED_NEAR_PRISM, {0}),
    ("certificate", ["detect", "extended-near-prism", "-", "--cross-edge", "6,7"], EXTENDED_NEAR_PRISM, {0}),
    ("bisimplicial", ["bisimplicial", "-"], "Dhc", {0}),
    ("bisimplicial", ["bisimplicial", "-", "--clique", "0,1"], "Dhc", {0}),
    ("bisimplicial", ["bisimplicial", "-", "--clique", "0"], K33, {0}),
    ("bisimplicial", ["bisimplicial", "-", "--clique", "", "--trust-even-hole-free"], K33, {2}),
    ("splendid", ["splendid", "0", "-"], "Dhc", {0}),
    ("splendid", ["splendid", "3", "-"], SHORT_PYRAMID, {0}),
    ("splendid", ["splendid", "0", "-"], C5_PENDANT, {0}),
    ("splendid", ["splendid", "2", "-"], "3 2\n0 1\n1 2\n", {0}),
    ("system", ["decompose", "pyramid-strip", "-", "--apex", "0"], PYRAMID_222, {0}),
    ("system", ["decompose", "pyramid-strip", "-", "--apex", "0"], "Dhc", {0}),
    ("system", ["decompose", "tree-strip", "-", "--edge", "7,8"], TREE_STRIP, {0}),
    ("system", ["decompose", "tree-strip", "-", "--edge", "0,1"], PYRAMID_222, {0}),
    ("report", ["verify", "SUBGRAPHS", "--n", "5"], "", {0}),
    ("report", ["verify", "MAIN", "--n", "5"], "", {0}),
    ("report", ["verify", "HT_EHF", "--n", "8"], "", {0}),
    ("report", ["verify", "GETLOCAL", "--count", "200"], "", {0}),
    ("report", ["verify", "PYRSTRIP", "--count", "100", "--probe"], "", {0}),
    ("report", ["verify", "STRIPTOBIP", "--count", "100"], "", {0}),
    ("report", ["verify", "TREESTRUCT", "--count", "50"], "", {0}),
]

MALFORMED = [
    ("graph", {"edges": []}),
    ("graph", {"n": 3, "edges": [[0, 1, 2]]}),
    ("certificate", {"kind": "hole", "span": [0, 1, 2]}),
    ("certificate", {"kind": "octopus", "span": []}),
    ("certificate", {"kind": "pyramid", "apex": 0, "base": [1, 2], "paths": [], "short": False, "span": []}),
    ("bisimplicial", {"clique": [0], "m": [], "outcome": "maybe", "witness": None, "reason": ""}),
    ("splendid", {"vertex": 0, "splendid": True, "failed_clause": "NeighbourTrapped", "witness": None}),
    ("system", {"kind": "pyramid-strip", "maximality": "unknown", "nodes": 1, "budget_hit": False, "system": None}),
    ("report", {"suite": "SUBGRAPHS"}),
]


def load_registry(schema_dir):
    resources = []
    schemas = {}
    for path in sorted(schema_dir.glob("*.schema.json")):
        doc = json.loads(path.read_text())
        jsonschema.Draft202012Validator.check_schema(doc)
        resources.append((doc["$id"], Resource.from_contents(doc)))
        schemas[path.name.removesuffix(".schema.json")] = doc
    return schemas, Registry().with_resources(resources)


def main():
    ehf, schema_dir = pathlib.Path(sys.argv[1]), pathlib.Path(sys.argv[2])
    schemas, registry = load_registry(schema_dir)
    validators = {name: jsonschema.Draft202012Validator(doc, registry=registry) for name, doc in schemas.items()}
    failures = 0

    for schema, args, stdin, statuses in SCENARIOS:
        proc = subprocess.run([str(ehf), *args], input=stdin, capture_output=True, text=True)
        label = " ".join(args)
        if proc.returncode not in statuses:
            print(f"FAIL {label}: exit {proc.returncode}, stderr {proc.stderr.strip()!r}")
            failures += 1
            continue
        try:
            doc = json.loads(proc.stdout)
        except json.JSONDecodeError as e:
            print(f"FAIL {label}: not JSON ({e}): {proc.stdout[:200]!r}")
            failures += 1
            continue
        errors = list(validators[schema].iter_errors(doc))
        if errors:
            print(f"FAIL {label} against {schema}: {errors[0].message}")
            failures += 1
        else:
            print(f"ok   {label} ({schema})")

    for schema, doc in MALFORMED:
        if validators[schema].is_valid(doc):
            print(f"FAIL {schema} schema accepted {json.dumps(doc)}")
            failures += 1
        else:
            print(f"ok   {schema} schema rejects {json.dumps(doc)[:60]}")

    print(f"{failures} failure(s)")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
