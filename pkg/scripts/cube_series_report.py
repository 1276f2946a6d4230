#!/usr/bin/env python3
"""Tabulate cube face counts, skeleton betti numbers, and the main series.

Usage: cube_series_report.py [max_n]
"""

import sys

from ripstone.cubeseries import expand, face_count, skeleton_betti_top, verify_cube_vr2


def main() -> int:
    max_n = int(sys.argv[1]) if len(sys.argv) > 1 else 10
    main_series = expand("main", None, max_n).coefficients
    print("n    f(n,3)    e(n,2)    e(n,3)    main coeff")
    for n in range(max_n + 1):
        e2 = skeleton_betti_top(n, 2) if n >= 2 else "-"
        e3 = skeleton_betti_top(n, 3) if n >= 3 else "-"
        print(f"{n:<3} {face_count(n, 3):>7} {e2!s:>9} {e3!s:>9} {main_series[n]:>13}")
    ok = True
    for n in range(2, 6):
        report = verify_cube_vr2(n)
        ok = ok and report.passed
        print()
        print(report.render_table())
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
