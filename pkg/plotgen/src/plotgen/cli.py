"""Command line: plotgen --curve FILE --style fig1|fig2 --out FILE.

Exit codes: 0 success, 1 usage error, 2 malformed or unreadable curve.
"""

from __future__ import annotations

import argparse
import sys

from .render import MalformedCurve, PlotSpec, render


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def main(argv=None) -> int:
    parser = _Parser(prog="plotgen", description=__doc__)
    parser.add_argument("--curve", required=True, help="input curve CSV")
    parser.add_argument("--style", choices=["fig1", "fig2"], required=True)
    parser.add_argument("--out", required=True, help="output image (.svg or .png)")
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    try:
        render(PlotSpec(csv_path=args.curve, style=args.style, output_path=args.out))
    except MalformedCurve as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    return 0


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
