"""Run each eqlines subcommand and validate its JSON output against schemas/."""
import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema
from referencing import Registry, Resource

binary = sys.argv[1]
schema_dir = pathlib.Path(sys.argv[2])

schemas = {p.name: json.loads(p.read_text()) for p in schema_dir.glob("*.schema.json")}
registry = Registry().with_resources((name, Resource.from_contents(s)) for name, s in schemas.items())


def run(args, expect=0):
    proc = subprocess.run([binary, *args], capture_output=True, text=True)
    if proc.returncode != expect:
        sys.exit(f"{' '.join(args)}: exit {proc.returncode}, wanted {expect}\n{proc.stderr}")
    return proc.stdout


failures = 0


def check(schema, args, expect=0):
    global failures
    doc = json.loads(run(args, expect))
    cls = jsonschema.validators.validator_for(schemas[schema])
    errors = list(cls(schemas[schema], registry=registry).iter_errors(doc))
    for e in errors:
        print(f"FAIL {schema} {' '.join(args)}: {e.message}")
    failures += bool(errors)
    if not errors:
        print(f"ok   {schema:22} {' '.join(args)}")
    return doc


with tempfile.TemporaryDirectory() as tmp:
    t = pathlib.Path(tmp)
    fam, cay, rnd = str(t / "fam.csv"), str(t / "cay.json"), str(t / "rnd.json")
    check("korder.schema.json", ["korder", "--alpha", "1/5", "--nmax", "6"])
    check("korder.schema.json", ["korder", "--lambda-minpoly=-2,0,1", "--lo", "1", "--hi", "2", "--nmax", "6"])
    check("korder.schema.json", ["korder", "--alpha", "1/11", "--nmax", "4"], expect=3)
    check("construct.schema.json", ["construct", "--alpha", "1/5", "--d", "12", "--out", fam])
    check("construct.schema.json", ["construct", "--alpha", "1/3", "--d", "4"])
    check("verify.schema.json", ["verify", "--family", fam, "--alpha", "1/5"])
    check("nalpha.schema.json", ["nalpha", "--alpha", "1/3", "--d", "15"])
    check("nalpha.schema.json", ["nalpha", "--lambda", "1/2", "--d", "15"])
    check("gerzon.schema.json", ["gerzon", "--d", "3"])
    check("switch.schema.json", ["switch", "--family", fam])
    check("graph.schema.json", ["cayley-aff", "--p", "5"])
    run(["cayley-aff", "--p", "5", "--out", cay])
    check("measure.schema.json", ["measure", "--graph", cay])
    check("multbound.schema.json", ["multbound", "--graph", cay, "--lambda", "second", "--r", "2", "--s", "1"])
    check("graph.schema.json", ["random-graph", "--n", "15", "--seed", "3"])
    run(["random-graph", "--n", "15", "--seed", "3", "--out", rnd])
    check("net.schema.json", ["net", "--graph", rnd, "--r", "2"])
    check("spectrum.schema.json", ["spectrum", "--graph", rnd, "--json"])
    check("switch.schema.json", ["switch", "--graph", rnd, "--alpha", "1/5"])
    for name, s in schemas.items():
        jsonschema.validators.validator_for(s).check_schema(s)

sys.exit(1 if failures else 0)
