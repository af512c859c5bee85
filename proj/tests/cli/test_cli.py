#!/usr/bin/env python3
"""CLI integration checks: exit codes, JSON shape, determinism."""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

BIN = sys.argv[1] if len(sys.argv) > 1 else "zetaforms"
FAILURES = []


def run(*args, expect=0):
    proc = subprocess.run([BIN, *args], capture_output=True, text=True, timeout=300)
    if proc.returncode != expect:
        FAILURES.append(f"{args}: exit {proc.returncode} != {expect}\n{proc.stderr[-400:]}")
    return proc


def check(cond, what):
    if not cond:
        FAILURES.append(what)


def main():
    # forms: pass and exact coefficients in the JSON
    out = run("forms", "--a", "3", "--b", "1", "--r", "1", "--n", "1")
    rep = json.loads(out.stdout)
    check(rep["pass"] is True, "forms pass flag")
    check(rep["family"]["ltilde"]["1"] == {"num": "577", "den": "8"}, "forms ltilde")
    check(rep["family"]["ell"]["3"]["num"] == "-60", "forms ell")

    run("forms", "--a", "9", "--b", "1", "--r", "1", "--n", "4")

    # invalid parameters exit with code 2
    run("forms", "--a", "3", "--b", "3", "--r", "1", "--n", "1", expect=2)
    run("zeta", "--s", "1", expect=2)

    # zeta digits
    out = run("zeta", "--s", "3", "--prec-bits", "128")
    rep = json.loads(out.stdout)
    check(rep["value"]["value"].startswith("1.2020569031595942"), "zeta(3) digits")

    # cot-matrix determinism: byte-identical output across runs
    a = run("cot-matrix", "--b", "5").stdout
    b = run("cot-matrix", "--b", "5").stdout
    check(a == b, "cot-matrix determinism")
    basis = json.loads(a)["basis"]
    check(basis["c"][0][0] == {"num": "1", "den": "16"}, "cot-matrix c entry")

    # saddle report: mu1 line carries the 20-digit constant
    out = run("saddle", "--a", "149", "--b", "1", "--r", "11", "--prec-bits", "192")
    rep = json.loads(out.stdout)
    check(rep["mu1"]["value"].startswith("2.3000098741335222328"), "saddle mu1 digits")

    out = run("saddle", "--a", "45", "--b", "5", "--r", "2", "--prec-bits", "128")
    rep = json.loads(out.stdout)
    check(rep["asymptotics"]["exceptional_candidate"] is False, "saddle exceptional flag")

    # bounds
    out = run("bounds", "--a", "9", "--b", "1", "--grid", "16", "--prec-bits", "128")
    rep = json.loads(out.stdout)
    check(abs(float(rep["at_r_1"]["dim_bound"]["value"]) - 0.394) < 0.01, "bounds at r=1")
    check(len(rep["table"]) == 17, "bounds table rows")

    # CSV emissions
    out = run("bounds", "--a", "9", "--b", "1", "--grid", "8", "--prec-bits", "96", "--csv")
    check(out.stdout.startswith("r,log_alpha,log_q,ratio,dim_bound"), "bounds csv header")
    check(out.stdout.count("\n") == 10, "bounds csv rows")
    out = run("forms", "--a", "3", "--b", "1", "--r", "1", "--n", "1",
              "--growth", "1", "--growth", "2", "--csv", "--prec-bits", "96")
    check(out.stdout.startswith("n,coeff_root"), "growth csv header")

    # planners: margin line positive
    out = run("plan", "th145", "--d", "1")
    check("margin:" in out.stderr, "plan margin line")
    rep = json.loads(out.stdout)
    check(rep["pass"] is True, "plan th145 pass")

    out = run("plan", "th70", "--eps", "1/20", "--big-a", "20^240", "--d", "1")
    rep = json.loads(out.stdout)
    check(float(rep["report"]["margin"]["value"]) > 0.24, "plan th70 margin")
    check(rep["report"]["margin"]["provenance"] == "computed", "margin provenance")

    out = run("plan", "cor82", "--eps", "1/20")
    rep = json.loads(out.stdout)
    check(float(rep["report"]["margin"]["value"]) > 0.4, "plan cor82 margin")

    # extract with the shipped fixture file
    fixture = Path(__file__).resolve().parent.parent / "fixtures" / "spread_second_main_d2.json"
    out = run("extract", "--file", str(fixture))
    rep = json.loads(out.stdout)
    check(rep["certified"] is True, "fixture extraction certified")
    check(len(rep["result"]["indices"]) == 3, "fixture extraction size")

    # --out writes the report to a file
    with tempfile.TemporaryDirectory() as td:
        path = Path(td) / "report.json"
        run("cot-matrix", "--b", "3", "--out", str(path))
        rep = json.loads(path.read_text())
        check(rep["schema"] == "zetaforms-report/1", "schema id")

    # a fast verify subset
    out = run("verify", "--only", "1", "--only", "11")
    check("PASS  C01" in out.stdout, "verify scoreboard line")

    if FAILURES:
        print("CLI test failures:")
        for f in FAILURES:
            print(" -", f)
        return 1
    print("cli integration: all checks passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
