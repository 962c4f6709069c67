#!/usr/bin/env python3
"""Round-trip and exit-code tests for the command-line tool.

Usage: test_cli.py /path/to/alpha_extremal
"""
import json
import subprocess
import sys
import tempfile
import os

BIN = sys.argv[1]
checks = 0


def run(*args, stdin=None):
    return subprocess.run([BIN, *args], capture_output=True, text=True,
                          input=stdin)


def expect(cond, label, proc=None):
    global checks
    checks += 1
    if not cond:
        print(f"FAILED: {label}")
        if proc is not None:
            print("  exit:", proc.returncode)
            print("  stdout:", proc.stdout[:2000])
            print("  stderr:", proc.stderr[:2000])
        sys.exit(1)


with tempfile.TemporaryDirectory() as tmp:
    t3 = os.path.join(tmp, "t3.txt")

    # construct writes a parseable edge list with the promised shape
    p = run("construct", "--family", "T3", "--n", "8", "--k", "1",
            "--out", t3)
    expect(p.returncode == 0, "construct exit", p)
    with open(t3) as f:
        header = f.readline().split()
    expect(header == ["8", "10"], "construct header")

    # construct to stdout parses back identically
    p = run("construct", "--family", "T3", "--n", "8", "--k", "1")
    expect(p.returncode == 0, "construct stdout exit", p)
    expect(p.stdout == open(t3).read(), "stdout matches file output")

    # spectral radius matches the frozen reference
    p = run("spectral", "--input", t3, "--alpha", "0.5", "--json")
    expect(p.returncode == 0, "spectral exit", p)
    rep = json.loads(p.stdout)
    expect(abs(rep["results"]["radius"] - 4.1374586088176875) < 1e-9,
           "spectral radius value")
    expect(rep["inputs"]["alpha"] == "0.5", "alpha echoed verbatim")
    expect(rep["versions"]["alpha_extremal"], "version present")

    # bounds sandwich holds and reports both sides
    p = run("bounds", "--input", t3, "--alpha", "0.6", "--json")
    expect(p.returncode == 0, "bounds exit", p)
    rep = json.loads(p.stdout)["results"]
    expect(rep["lower_maxdeg"] <= rep["radius"] <= rep["upper_degree_mean"],
           "bounds sandwich")
    expect(rep["upper_sq"] is not None, "upper_sq present at alpha 0.6")

    # inequality table over a coarse grid
    p = run("verify", "inequalities", "--k-max", "5",
            "--alpha-grid", "0.5:0.9:0.1", "--json")
    expect(p.returncode == 0, "inequalities exit", p)
    rep = json.loads(p.stdout)["results"]
    expect(rep["records_checked"] == 5 * 5 * 9, "inequalities count")
    expect(rep["passed"] is True, "inequalities passed")

    # lemma trials small budget
    p = run("verify", "lemmas", "--trials", "20", "--seed", "9", "--json")
    expect(p.returncode == 0, "lemmas exit", p)
    rep = json.loads(p.stdout)
    expect(rep["seed"] == 9, "lemma seed echoed")
    expect(rep["results"]["total_failures"] == 0, "lemma failures")
    expect(len(rep["results"]["lemmas"]) == 5, "five lemmas")

    # enumeration streams well-formed JSON lines and a consistent census
    out = os.path.join(tmp, "n6.jsonl")
    p = run("enumerate", "--n", "6", "--k", "2", "--out", out, "--json")
    expect(p.returncode == 0, "enumerate exit", p)
    rep = json.loads(p.stdout)["results"]
    expect(rep["graphs"] == 240, "enumerate count")
    lines = [json.loads(l) for l in open(out)]
    expect(len(lines) == 240, "jsonl line count")
    expect(all(l["pendants"] == 2 for l in lines), "pendant filter applied")
    expect(all(l["cycles"] in (3, 4, 6, 7) for l in lines), "cycle classes")
    expect(all(len(l["edges"]) == 8 for l in lines), "edge counts")

    # per-alpha radii appear when requested
    p = run("enumerate", "--n", "5", "--alpha", "0.5", "--alpha", "0.8")
    expect(p.returncode == 0, "enumerate with radii exit", p)
    first = json.loads(p.stdout.splitlines()[0])
    expect(set(first["rho"].keys()) == {"0.5", "0.8"}, "radii keyed by alpha")

    # ---- error paths -----------------------------------------------------
    p = run("spectral", "--input", os.path.join(tmp, "absent.txt"))
    expect(p.returncode == 2, "missing file exit 2", p)

    bad = os.path.join(tmp, "bad.txt")
    open(bad, "w").write("3 2\n0 1\nnope\n")
    p = run("spectral", "--input", bad)
    expect(p.returncode == 2 and "line 3" in p.stderr,
           "parse error exit 2 with line number", p)

    disc = os.path.join(tmp, "disc.txt")
    open(disc, "w").write("6 6\n0 1\n0 2\n1 2\n3 4\n3 5\n4 5\n")
    p = run("spectral", "--input", disc)
    expect(p.returncode == 3, "disconnected exit 3", p)
    p = run("bounds", "--input", disc)
    expect(p.returncode == 3, "bounds disconnected exit 3", p)

    p = run("spectral", "--input", t3, "--alpha", "1.0")
    expect(p.returncode == 2, "alpha at 1 rejected", p)
    p = run("spectral", "--input", t3, "--alpha", "nope")
    expect(p.returncode == 2, "non-numeric alpha rejected", p)

    p = run("construct", "--family", "T5", "--n", "8", "--k", "1")
    expect(p.returncode == 2, "unknown family rejected", p)
    p = run("construct", "--family", "T3", "--n", "7", "--k", "1")
    expect(p.returncode == 2, "order below base+k rejected", p)

    p = run("enumerate", "--n", "6", "--class", "5")
    expect(p.returncode == 2, "bad cycle class rejected", p)
    p = run("enumerate", "--n", "99")
    expect(p.returncode == 2, "order above cap rejected", p)

    p = run("nonsense")
    expect(p.returncode == 2, "unknown subcommand exit 2", p)

print(f"ok ({checks} checks)")
