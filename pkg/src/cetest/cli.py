"""Command line interface: ``cetest simulate`` and ``cetest test``."""
import argparse
import os
import sys

import numpy as np

from .copula import EstimatorConfig
from .experiments import DEFAULT_SEEDS, DESIGNS, run_simulation, write_table
from .permutation import permutation_pvalue
from .plotting import emit_plot
from .twosample import STATISTICS, KernelConfig, get_statistic

EXIT_OK, EXIT_USAGE, EXIT_DATA = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser():
    parser = _Parser(prog="cetest", description="Copula-entropy two-sample tests and simulations.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sim = sub.add_parser("simulate", help="run the simulation designs and write CSV + SVG")
    sim.add_argument("--sim", choices=["1", "2", "3", "all"], required=True)
    sim.add_argument("--seeds", type=int, nargs="+", default=list(DEFAULT_SEEDS), metavar="SEED")
    sim.add_argument("--out", required=True, help="output directory (created if missing)")
    sim.add_argument("--n", type=int, default=500, help="sample size (default 500)")
    sim.add_argument("--k", type=int, default=3, help="neighbor order (default 3)")
    sim.add_argument("--delta", type=float, default=1.0, help="Gaussian kernel scale (default 1)")

    test = sub.add_parser("test", help="test two samples stored in text files")
    test.add_argument("--x1", required=True, help="first sample, one row per observation")
    test.add_argument("--x2", required=True, help="second sample, one row per observation")
    test.add_argument("--stat", choices=STATISTICS, required=True)
    test.add_argument("--permutations", type=int, default=99, metavar="B", help="0 disables the p-value")
    test.add_argument("--seed", type=int, default=0, help="permutation and tie-breaking seed")
    test.add_argument("--k", type=int, default=3)
    test.add_argument("--delta", type=float, default=1.0)
    test.add_argument("--mmd-variant", choices=["biased", "unbiased"], default="biased")
    return parser


def load_matrix(path):
    """Read a numeric matrix separated by commas and/or whitespace.

    Blank lines and lines starting with ``#`` are skipped; a non-numeric
    first line is taken as a header.
    """
    rows = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            text = line.strip()
            if not text or text.startswith("#"):
                continue
            fields = text.replace(",", " ").split()
            try:
                rows.append([float(f) for f in fields])
            except ValueError:
                if not rows:
                    continue
                raise ValueError(f"{path}:{lineno}: non-numeric value in {text!r}") from None
            if len(rows[-1]) != len(rows[0]):
                raise ValueError(f"{path}:{lineno}: expected {len(rows[0])} columns, got {len(rows[-1])}")
    if not rows:
        raise ValueError(f"{path}: no data rows")
    return np.array(rows)


def _simulate(args):
    os.makedirs(args.out, exist_ok=True)
    sims = sorted(DESIGNS) if args.sim == "all" else [int(args.sim)]
    config = EstimatorConfig(k=args.k)
    kernel = KernelConfig(delta=args.delta)
    for sim in sims:
        table = run_simulation(sim, args.seeds, config, kernel, n=args.n)
        csv_path = os.path.join(args.out, f"sim{sim}.csv")
        svg_path = os.path.join(args.out, f"sim{sim}.svg")
        write_table(table, csv_path)
        emit_plot(table, sim, svg_path)
        print(f"wrote {csv_path} and {svg_path}")


def _test(args):
    x1, x2 = load_matrix(args.x1), load_matrix(args.x2)
    stat = get_statistic(
        args.stat,
        config=EstimatorConfig(k=args.k, seed=args.seed),
        kernel=KernelConfig(delta=args.delta, variant=args.mmd_variant),
    )
    if args.permutations < 0:
        raise ValueError("--permutations must be non-negative")
    print(f"statistic: {args.stat}")
    if args.permutations == 0:
        print(f"value: {float(stat(x1, x2))!r}")
        return
    result = permutation_pvalue(stat, x1, x2, args.permutations, args.seed)
    print(f"value: {result.statistic!r}")
    print(f"p_value: {result.p_value!r}")
    print(f"permutations: {args.permutations}")


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        if args.command == "simulate":
            _simulate(args)
        else:
            _test(args)
    except (ValueError, OSError) as exc:
        print(f"cetest: error: {exc}", file=sys.stderr)
        return EXIT_DATA
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
