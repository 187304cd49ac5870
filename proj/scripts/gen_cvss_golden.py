#!/usr/bin/env python3
"""Generate golden CVSS v3.1 score fixtures.

Ports the reference scoring algorithm (cvsscalc31) independently of the C++
implementation so the two can be compared file-to-file. Outputs land in
tests/data/.
"""

import csv
import itertools
import math
import os
import random

AV = {"N": 0.85, "A": 0.62, "L": 0.55, "P": 0.2}
AC = {"L": 0.77, "H": 0.44}
PR_U = {"N": 0.85, "L": 0.62, "H": 0.27}
PR_C = {"N": 0.85, "L": 0.68, "H": 0.5}
UI = {"N": 0.85, "R": 0.62}
CIA = {"N": 0.0, "L": 0.22, "H": 0.56}
E = {"X": 1.0, "U": 0.91, "P": 0.94, "F": 0.97, "H": 1.0}
RL = {"X": 1.0, "O": 0.95, "T": 0.96, "W": 0.97, "U": 1.0}
RC = {"X": 1.0, "U": 0.92, "R": 0.96, "C": 1.0}
REQ = {"X": 1.0, "L": 0.5, "M": 1.0, "H": 1.5}


def roundup(x):
    i = math.floor(x * 100000 + 0.5)
    if i % 10000 == 0:
        return i / 100000.0
    return (math.floor(i / 10000) + 1) / 10.0


def severity(score):
    if score <= 0.0:
        return "NONE"
    if score <= 3.9:
        return "LOW"
    if score <= 6.9:
        return "MEDIUM"
    if score <= 8.9:
        return "HIGH"
    return "CRITICAL"


def base_score(m):
    iss = 1.0 - (1.0 - CIA[m["C"]]) * (1.0 - CIA[m["I"]]) * (1.0 - CIA[m["A"]])
    if m["S"] == "U":
        impact = 6.42 * iss
    else:
        impact = 7.52 * (iss - 0.029) - 3.25 * (iss - 0.02) ** 15
    pr = (PR_U if m["S"] == "U" else PR_C)[m["PR"]]
    expl = 8.22 * AV[m["AV"]] * AC[m["AC"]] * pr * UI[m["UI"]]
    if impact <= 0:
        return 0.0
    if m["S"] == "U":
        return roundup(min(impact + expl, 10.0))
    return roundup(min(1.08 * (impact + expl), 10.0))


def temporal_score(m):
    b = base_score(m)
    e = E[m.get("E", "X")]
    rl = RL[m.get("RL", "X")]
    rc = RC[m.get("RC", "X")]
    return roundup(b * e * rl * rc)


def environmental_score(m):
    def mod(name):
        v = m.get("M" + name, "X")
        return m[name] if v == "X" else v

    ms = mod("S")
    mc, mi, ma = CIA[mod("C")], CIA[mod("I")], CIA[mod("A")]
    cr = REQ[m.get("CR", "X")]
    ir = REQ[m.get("IR", "X")]
    ar = REQ[m.get("AR", "X")]
    miss = min(1.0 - (1.0 - cr * mc) * (1.0 - ir * mi) * (1.0 - ar * ma), 0.915)
    if ms == "U":
        mimpact = 6.42 * miss
    else:
        mimpact = 7.52 * (miss - 0.029) - 3.25 * (miss * 0.9731 - 0.02) ** 13
    mpr = (PR_U if ms == "U" else PR_C)[mod("PR")]
    mexpl = 8.22 * AV[mod("AV")] * AC[mod("AC")] * mpr * UI[mod("UI")]
    e = E[m.get("E", "X")]
    rl = RL[m.get("RL", "X")]
    rc = RC[m.get("RC", "X")]
    if mimpact <= 0:
        return 0.0
    if ms == "U":
        return roundup(roundup(min(mimpact + mexpl, 10.0)) * e * rl * rc)
    return roundup(roundup(min(1.08 * (mimpact + mexpl), 10.0)) * e * rl * rc)


BASE_ORDER = ["AV", "AC", "PR", "UI", "S", "C", "I", "A"]
FULL_ORDER = BASE_ORDER + ["E", "RL", "RC", "CR", "IR", "AR",
                           "MAV", "MAC", "MPR", "MUI", "MS", "MC", "MI", "MA"]


def vector(m):
    parts = ["CVSS:3.1"]
    for k in FULL_ORDER:
        v = m.get(k, "X")
        if k in BASE_ORDER or v != "X":
            parts.append(f"{k}:{v}")
    return "/".join(parts)


def fmt(x):
    return f"{x:.1f}"


def main():
    out_dir = os.path.join(os.path.dirname(__file__), "..", "tests", "data")
    os.makedirs(out_dir, exist_ok=True)

    with open(os.path.join(out_dir, "cvss_base_enumeration.csv"), "w", newline="") as f:
        w = csv.writer(f)
        w.writerow(["vector", "base_score", "severity"])
        for av, ac, pr, ui, s, c, i, a in itertools.product(
                "NALP", "LH", "NLH", "NR", "UC", "NLH", "NLH", "NLH"):
            m = dict(zip(BASE_ORDER, [av, ac, pr, ui, s, c, i, a]))
            b = base_score(m)
            w.writerow([vector(m), fmt(b), severity(b)])

    rows = []
    for base in (dict(zip(BASE_ORDER, list("NLNNUHHH"))),
                 dict(zip(BASE_ORDER, list("NHLRCHLL")))):
        for e, rl, rc in itertools.product("XUPFH", "XOTWU", "XURC"):
            m = dict(base)
            m.update({"E": e, "RL": rl, "RC": rc})
            rows.append(m)

    rng = random.Random(20230402)
    for _ in range(80):
        m = {
            "AV": rng.choice("NALP"), "AC": rng.choice("LH"),
            "PR": rng.choice("NLH"), "UI": rng.choice("NR"),
            "S": rng.choice("UC"),
            "C": rng.choice("NLH"), "I": rng.choice("NLH"), "A": rng.choice("NLH"),
            "E": rng.choice("XUPFH"), "RL": rng.choice("XOTWU"), "RC": rng.choice("XURC"),
            "CR": rng.choice("XLMH"), "IR": rng.choice("XLMH"), "AR": rng.choice("XLMH"),
            "MAV": rng.choice("XNALP"), "MAC": rng.choice("XLH"),
            "MPR": rng.choice("XNLH"), "MUI": rng.choice("XNR"),
            "MS": rng.choice("XUC"),
            "MC": rng.choice("XNLH"), "MI": rng.choice("XNLH"), "MA": rng.choice("XNLH"),
        }
        rows.append(m)

    with open(os.path.join(out_dir, "cvss_golden_full.csv"), "w", newline="") as f:
        w = csv.writer(f)
        w.writerow(["vector", "base_score", "temporal_score", "environmental_score",
                    "base_severity", "temporal_severity", "environmental_severity"])
        for m in rows:
            b, t, e = base_score(m), temporal_score(m), environmental_score(m)
            w.writerow([vector(m), fmt(b), fmt(t), fmt(e),
                        severity(b), severity(t), severity(e)])

    print(f"wrote {2592} enumeration rows and {len(rows)} full rows")


if __name__ == "__main__":
    main()
