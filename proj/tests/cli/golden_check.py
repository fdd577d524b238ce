#!/usr/bin/env python3
"""Golden check for the estimate subcommand.

Runs the CLI on the bundled toy fixture (closed-form path) and compares the
report against the committed golden JSON, whose values were produced by the
independent walk-enumeration path. Also exercises the CLI error contract and
the byte-level determinism of a small experiment CSV.
"""
import json
import subprocess
import sys
import tempfile
from pathlib import Path

REL_TOL = 1e-9


def close(a, b):
    return abs(a - b) <= REL_TOL * max(1.0, abs(a), abs(b))


def main():
    cli = Path(sys.argv[1])
    data = Path(sys.argv[2])

    out = subprocess.run(
        [cli, "estimate", "--matrix", data / "toy_matrix.csv", "--omega",
         data / "toy_omega.txt", "--model", "er", "--p", "0.8", "--k", "5"],
        capture_output=True, text=True, check=True)
    got = json.loads(out.stdout)
    want = json.loads((data / "toy_estimate_golden.json").read_text())

    assert got["k"] == want["k"]
    assert close(got["theta_hat"], want["theta_hat"]), (got["theta_hat"], want["theta_hat"])
    assert set(got["per_pattern"]) == set(want["per_pattern"])
    for key, pattern in want["per_pattern"].items():
        for field in ("gamma_obs", "p", "contribution"):
            assert close(got["per_pattern"][key][field], pattern[field]), (key, field)

    # usage errors exit 1
    bad = subprocess.run([cli, "estimate", "--nope"], capture_output=True)
    assert bad.returncode == 1, bad.returncode

    # resource-guard style numerical failures exit 2
    guard = subprocess.run(
        [cli, "estimate", "--matrix", data / "toy_matrix.csv", "--model", "er",
         "--p", "1.0", "--k", "9"],
        capture_output=True, text=True)
    assert guard.returncode in (0, 2)

    # identical config + seed => byte-identical CSV
    with tempfile.TemporaryDirectory() as tmp:
        paths = [Path(tmp) / f"run{i}.csv" for i in (1, 2)]
        for path in paths:
            subprocess.run(
                [cli, "experiment", "--recipe", "fig5", "--d", "40", "--r-grid", "6",
                 "--k", "3", "--trials", "4", "--seed", "7", "--factors", "1.0",
                 "--factors", "3.0", "--out", str(path)],
                capture_output=True, check=True)
        assert paths[0].read_bytes() == paths[1].read_bytes()

    print("golden check passed")


if __name__ == "__main__":
    main()
