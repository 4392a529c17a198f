"""Runs the phasekit CLI end to end and validates every JSON artifact against /schemas.

Usage: cli_schema_check.py <phasekit binary> <schemas dir>
"""
import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema
from referencing import Registry, Resource

BIN = sys.argv[1]
SCHEMAS = pathlib.Path(sys.argv[2])

registry = Registry()
schemas = {}
for path in sorted(SCHEMAS.glob("*.schema.json")):
    doc = json.loads(path.read_text())
    schemas[path.name.removesuffix(".schema.json")] = doc
    registry = registry.with_resource(doc["$id"], Resource.from_contents(doc))

failures = []


def check(cond, what):
    if not cond:
        failures.append(what)
        print("FAIL:", what)


def run(*args, code=0, cwd=None):
    p = subprocess.run([BIN, *args], capture_output=True, text=True, cwd=cwd)
    check(p.returncode == code, f"{' '.join(args)}: exit {p.returncode}, want {code}; stderr={p.stderr.strip()}")
    return p


def validate(doc, name, what):
    try:
        jsonschema.Draft202012Validator(schemas[name], registry=registry).validate(doc)
    except jsonschema.ValidationError as e:
        check(False, f"{what}: schema {name}: {e.message}")


def run_json(name, *args):
    p = run(*args)
    if p.returncode != 0:
        return None
    doc = json.loads(p.stdout)
    validate(doc, name, " ".join(args))
    again = run(*args)
    check(again.stdout == p.stdout, f"{' '.join(args)}: output not byte-identical across runs")
    return doc


def close(a, b, tol):
    return all(abs(x - y) <= tol * max(abs(y), 1e-300) for x, y in zip(a, b)) and len(a) == len(b)


with tempfile.TemporaryDirectory() as tmp:
    tmp = pathlib.Path(tmp)

    # worked example: two M9 solutions, one of them (1,2,3,4,5)
    inv = run_json("invert", "invert", "--model", "M9", "--moments", "-15,27,-10,-5,60")
    if inv:
        rates = [s["rates"] for s in inv["solutions"]]
        check(len(rates) == 2, "worked example: two solutions")
        check(any(close(r, [1, 2, 3, 4, 5], 1e-9) for r in rates), "worked example: contains (1,2,3,4,5)")

    # direct, then invert on its output
    direct_path = tmp / "direct.json"
    run("direct", "--model", "M9", "--rates", "1,2,3,4,5", "--out", str(direct_path),
        "--survival-csv", str(tmp / "surv.csv"))
    direct = json.loads(direct_path.read_text())
    validate(direct, "direct", "direct")
    check((tmp / "surv.csv").read_text().startswith("t,S,f\n"), "direct: survival CSV header")
    validate(json.loads((tmp / "surv.csv.manifest.json").read_text()), "manifest", "survival sidecar")
    rt = run_json("invert", "invert", "--model", "M9", "--input", str(direct_path))
    if rt:
        check(any(close(s["rates"], [1, 2, 3, 4, 5], 1e-9) for s in rt["solutions"]), "direct->invert round trip")
        check(str(direct_path) in rt["manifest"]["input_checksums"], "invert: input checksum recorded")

    # forced full-branch search and the M3 family
    th = run_json("invert", "invert", "--model", "M9", "--moments", "-15,27,-10,-5,60", "--thomas")
    if th:
        check(th["method"] == "thomas" and len(th["diagnostics"]) > 0, "--thomas uses the decomposition")
    m3 = json.loads(run("direct", "--model", "M3", "--rates", "1,2,3,4,5").stdout)
    flat = m3["moments"]["L"] + m3["moments"]["S"]
    fam = run_json("invert", "invert", "--model", "M3", "--moments", ",".join(repr(x) for x in flat),
                   "--k3-grid", "0.5,3,7")
    if fam:
        check(len(fam["solutions"]) == 3, "M3 family evaluated on the k3 grid")
        check(any(close(s["rates"], [1, 2, 3, 4, 5], 1e-8) for s in fam["solutions"]), "M3 family contains truth")

    # chain inversion from (lambda, A)
    ch = json.loads(run("direct", "--model", "chain:4", "--rates", "1,2,3,4,5,6,7").stdout)
    chi = run_json("invert", "invert", "--model", "chain:4", "--lambda", ",".join(map(repr, ch["lambda"])),
                   "--A", ",".join(map(repr, ch["A"])))
    if chi:
        check(close(chi["solutions"][0]["rates"], [1, 2, 3, 4, 5, 6, 7], 1e-8), "chain round trip")

    # exit codes
    run("invert", "--model", "M3", "--moments", "-15,27,-10,-5,60", code=3)
    run("invert", "--model", "M9", "--moments", "1,2,3", code=2)
    run("direct", "--model", "M7", "--rates", "1,2,3,4,5", code=2)
    run("direct", "--model", "M9", "--rates", "1,2,x,4,5", code=2)
    run("bogus", code=2)

    run_json("validate", "validate", "--model", "M8", "--rates", "1,2,3,4,5")
    run_json("variants", "variants", "--lambda", "-0.5,-2,-9", "--A", "0.3,0.3,0.4")
    var = run_json("variants", "variants", "--moments", "-15,27,-10,-5,60",
                   "--markers-csv", str(tmp / "markers.csv"))
    if var:
        check(var["n_valid"] >= 2, "variants of the worked example")
        check((tmp / "markers.csv").read_text().startswith("entry,model,"), "marker table")

    # simulate -> fit, deterministic
    trace = tmp / "trace.csv"
    run("simulate", "--model", "M9", "--rates", "1,2,3,4,5", "--n", "20000", "--seed", "5", "--out", str(trace))
    first = trace.read_bytes()
    run("simulate", "--model", "M9", "--rates", "1,2,3,4,5", "--n", "20000", "--seed", "5", "--out", str(trace),
        "--threads", "3")
    check(trace.read_bytes() == first, "simulate: identical across thread counts")
    sidecar = json.loads((tmp / "trace.csv.manifest.json").read_text())
    validate(sidecar, "manifest", "trace sidecar")
    check(sidecar["seeds"].get("simulation") == 5, "simulate: seed in manifest")
    check("wall_time_s" not in sidecar, "manifest: no wall time unless asked")
    fit = run_json("fit", "fit", "--trace", str(trace), "--components", "3")
    if fit:
        check(fit["n_events"] == 20000, "fit: event count")
    timed = json.loads(run("validate", "--model", "M9", "--rates", "1,2,3,4,5", "--record-time").stdout)
    check("wall_time_s" in timed["manifest"], "--record-time adds wall time")

    # too little data for the fit
    small = tmp / "small.csv"
    run("simulate", "--model", "M9", "--rates", "1,2,3,4,5", "--n", "10", "--out", str(small))
    run("fit", "--trace", str(small), code=2)
    run("pipeline", "--model", "M9", "--rates", "1,2,3,4,5", "--n", "10", code=2)

    # experiment with a config file and histogram CSV
    cfg = tmp / "cfg.json"
    cfg.write_text(json.dumps({"n_samples": 2000, "seed": 3, "bins": 10}))
    validate(json.loads(cfg.read_text()), "experiment_config", "config file")
    exp = run_json("experiment", "experiment", "--config", str(cfg), "--histogram-csv", str(tmp / "hist.csv"))
    if exp:
        check(exp["n_samples"] == 2000 and exp["config"]["seed"] == 3, "experiment: config honoured")
        check((tmp / "hist.csv").read_text().startswith("marker,bin_lo,bin_hi,count\n"), "histogram CSV header")

    # pipeline with a solvable and a non-solvable provenance
    pipe = run_json("pipeline", "pipeline", "--model", "M9", "--rates", "0.05,2,5,10,20", "--n", "100000",
                    "--seed", "9")
    if pipe:
        check(pipe["ground_truth"]["within_15_percent"], "pipeline: truth recovered")
    pm3 = run_json("pipeline", "pipeline", "--model", "M3", "--rates", "0.05,2,5,10,20", "--n", "50000")
    if pm3:
        check(pm3["ground_truth"]["solvable"] is False, "pipeline: M3 marked non-solvable")
        fam = pm3["ground_truth"].get("family", [])
        check(len(fam) >= 3, "pipeline: M3 family listed")
        check(any(close(f["rates"], [0.05, 2, 5, 10, 20], 1e-8) for f in fam), "pipeline: family contains truth")

print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
