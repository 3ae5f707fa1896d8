#!/usr/bin/env python3
#
# Copyright 2026 The ldp-audit Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#
"""Checks a full-grid sweep CSV.

Every run row must satisfy eps_emp <= min(epsilon, eps_opt). GRR must have
the largest k-averaged estimate at every epsilon (ties within TIE_SLACK
count), and BLH the smallest among pure protocols at epsilon >= 2.
"""

import collections
import csv
import math
import sys

PROTOCOLS = ["grr", "ss", "sue", "oue", "blh", "olh", "she", "the"]
TIE_SLACK = 0.05


def main(path):
    with open(path, newline="") as f:
        rows = list(csv.DictReader(line for line in f if not line.startswith("#")))
    failures = []
    means = collections.defaultdict(list)
    runs = 0
    for row in rows:
        eps = float(row["epsilon"])
        if row["run"] == "summary":
            means[(row["protocol"], eps)].append(float(row["eps_emp"]))
            continue
        runs += 1
        est = float(row["eps_emp"])
        if math.isnan(est):
            continue
        bound = min(eps, float(row["eps_opt"]))
        if est > bound:
            failures.append(
                f"{row['protocol']} eps={eps} k={row['k']} run={row['run']}: "
                f"eps_emp={est:.4f} > {bound:.4f}")

    avg = {key: sum(v) / len(v) for key, v in means.items()}
    for eps in sorted({e for _, e in avg}):
        grr = avg[("grr", eps)]
        for p in PROTOCOLS[1:]:
            if avg[(p, eps)] > grr + TIE_SLACK:
                failures.append(f"eps={eps}: {p} {avg[(p, eps)]:.4f} above grr {grr:.4f}")
        if eps >= 2:
            blh = avg[("blh", eps)]
            for p in PROTOCOLS:
                if p != "blh" and avg[(p, eps)] <= blh:
                    failures.append(f"eps={eps}: {p} {avg[(p, eps)]:.4f} not above blh {blh:.4f}")

    print(f"{runs} run rows, {len(means)} (protocol, epsilon) groups")
    for line in failures:
        print("FAIL", line)
    print("PASS" if not failures else f"{len(failures)} violations")
    return 0 if not failures else 1


if __name__ == "__main__":
    if len(sys.argv) != 2:
        sys.exit("usage: check_full_grid.py SWEEP.csv")
    sys.exit(main(sys.argv[1]))
