#!/usr/bin/env python3
"""Run the full betti-table verification and print the row-by-row report."""

import sys

from ripstone.pipelines import verify_main_theorem


def main() -> int:
    report = verify_main_theorem()
    print(report.render_table())
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
