"""Smoke test for the `cycavg` extension module.

Build it first (see README), then run:  python python/smoke_test.py
"""

import math
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "target", "python"))

import cycavg


def close(a, b, tol=1e-9):
    return abs(a - b) <= tol * max(abs(a), abs(b), 1.0)


def main():
    assert cycavg.power_sum(4, 1.0, 2.0, 3) == 980.0
    for n in (3, 5, 8, 13):
        for m in range(1, n):
            for alpha in (0.0, 0.3, 2.0):
                closed = cycavg.power_sum(n, 1.7, 0.9, m)
                brute = cycavg.power_sum_vertices(n, 1.7, 0.9, m, alpha)
                assert close(closed, brute), (n, m, alpha, closed, brute)

    assert cycavg.power_sum_exact(4, "1/4", "9/4", 2) == "59/2"

    closed, brute = cycavg.solid_power_sum("dodecahedron", 1.0, (0.3, -0.2, 0.5), 5)
    assert close(closed, brute)

    assert cycavg.locus(6, 1.0, 1, 30.0).startswith("circle")
    assert cycavg.locus(6, 1.0, 1, 6.0) == "centroid"

    r2, l2 = cycavg.recover(5.0, 5.0 * 5.0 + 2 * 4.0 * 1.0)
    assert close(r2, 4.0) and close(l2, 1.0)

    assert cycavg.rational24().rstrip().endswith("no rational-distance point exists")

    ok, report = cycavg.run_verify("rational", 7)
    assert ok, report

    try:
        cycavg.power_sum(2, 1.0, 1.0, 1)
    except ValueError:
        pass
    else:
        raise AssertionError("n = 2 accepted")

    print("python smoke test: ok (sin(pi/24) = %.12f)" % math.sin(math.pi / 24))


if __name__ == "__main__":
    main()
