"""CLI wrapper: plotkit --kind heatmap --input data.csv --output fig.png"""

import argparse
import sys

from .render import IncompleteGrid, PlotSpec, SchemaMismatch, render


def build_parser():
    parser = argparse.ArgumentParser(prog="plotkit")
    parser.add_argument("--input", required=True, help="schema-versioned CSV")
    parser.add_argument("--kind", choices=("heatmap", "line"), required=True)
    parser.add_argument("--output", required=True, help="PNG path")
    parser.add_argument("--x-label", default="")
    parser.add_argument("--y-label", default="")
    parser.add_argument("--title", default="")
    return parser


def run(argv):
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    spec = PlotSpec(
        input_path=args.input,
        kind=args.kind,
        output_path=args.output,
        x_label=args.x_label,
        y_label=args.y_label,
        title=args.title,
    )
    try:
        render(spec)
    except (SchemaMismatch, IncompleteGrid, OSError, ValueError) as exc:
        print("plotkit: %s" % exc, file=sys.stderr)
        return 2
    return 0


def main():
    raise SystemExit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
