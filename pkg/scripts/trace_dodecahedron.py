#!/usr/bin/env python3
"""Trace the dodecahedron's ten tetrahedra through matching, collapse, and flow.

Usage: trace_dodecahedron.py [seed] [max_attempts]
"""

import sys

from ripstone.pipelines import trace_dodecahedron


def main() -> int:
    seed = int(sys.argv[1]) if len(sys.argv) > 1 else 1
    max_attempts = int(sys.argv[2]) if len(sys.argv) > 2 else 1000
    report = trace_dodecahedron(seed=seed, max_attempts=max_attempts)
    print(report.render_table())
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
