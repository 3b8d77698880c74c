"""Command line: ``bench`` runs a benchmark sweep, ``verify`` runs the bound checks."""

import argparse
import sys

from .bench import ALGORITHMS, BenchConfig, render, run
from .generators import Sequence
from .riselect import RiselectConfig
from .sampling import ConfigurationError, Family, Rng, SampleStrategy
from .verification import check_lemma_bounds, check_tail_grid

EXIT_FAILED_CHECK = 1
EXIT_USAGE = 2


def _strategy(args):
    return SampleStrategy(
        family=Family[args.strategy.upper()],
        alpha=args.alpha,
        beta=args.beta,
        theta=args.theta,
        eps_l=args.eps_l,
        eps_s=args.eps_s,
        eps=args.eps,
    )


def _add_strategy_flags(p):
    p.add_argument("--strategy", default="fr", choices=[f.name.lower() for f in Family])
    p.add_argument("--alpha", type=float, default=0.5)
    p.add_argument("--beta", type=float, default=0.25)
    p.add_argument("--theta", type=float, default=1.0)
    p.add_argument("--eps-l", type=float, default=1.0)
    p.add_argument("--eps-s", type=float, default=None, help="default (2 + eps)/3")
    p.add_argument("--eps", type=float, default=0.25)


def build_parser():
    parser = argparse.ArgumentParser(prog="quintselect", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    b = sub.add_parser("bench", help="run selections on generated inputs and summarize the counters")
    b.add_argument("--algorithm", default="select", choices=ALGORITHMS)
    b.add_argument("--sequence", default="random", choices=[s.value for s in Sequence])
    b.add_argument("--n", type=int, action="append", help="input size; repeat for several sizes")
    b.add_argument("--k", type=int, default=None, help="1-based rank (default: lower median)")
    b.add_argument("--trials", type=int, default=20)
    b.add_argument("--seed", type=int, default=0)
    _add_strategy_flags(b)
    b.add_argument("--ncut", type=int, default=600)
    b.add_argument("--format", default="table", choices=("table", "csv"))
    b.add_argument("--out", default=None, help="write the report to this file")

    v = sub.add_parser("verify", help="check the sampling tail bounds")
    vsub = v.add_subparsers(dest="check", required=True)
    vsub.add_parser("tail-grid", help="exact hypergeometric tails against exp(-2g^2/s)")
    lem = vsub.add_parser("lemma", help="first-pass comparison and shrink bounds")
    lem.add_argument("--n", type=int, default=10_000)
    lem.add_argument("--k", type=int, default=None, help="1-based rank (default: lower median)")
    lem.add_argument("--trials", type=int, default=1000)
    lem.add_argument("--seed", type=int, default=0)
    lem.add_argument("--clamp", action="store_true", help="use a single pivot near the ends")
    _add_strategy_flags(lem)
    return parser


def _bench(args, out):
    config = BenchConfig(
        algorithm=args.algorithm,
        sequence=args.sequence,
        n_list=tuple(args.n or [1_000_000]),
        k=args.k,
        trials=args.trials,
        seed=args.seed,
        strategy=_strategy(args),
        n_cut=args.ncut,
        riselect=RiselectConfig(),
    )
    text = render(run(config), args.format)
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        out.write(text)
    return 0


def _verify(args, out):
    if args.check == "tail-grid":
        points = check_tail_grid()
        bad = [p for p in points if not p.holds]
        out.write(f"grid points: {len(points)}  violations: {len(bad)}\n")
        for p in bad:
            out.write(f"  violated at {p.query}: tail={float(p.tail):.6g}\n")
        return EXIT_FAILED_CHECK if bad else 0
    n = args.n
    k = args.k if args.k is not None else (n + 1) // 2
    if not 1 <= k <= n:
        raise ConfigurationError(f"k={k} outside 1..{n}")
    rep = check_lemma_bounds(n, k - 1, _strategy(args), args.trials, Rng(args.seed), args.clamp)
    out.write(
        f"n={rep.n} k={k} trials={rep.trials} s={rep.s} g={rep.g:.4f}\n"
        f"frac_c_ok={rep.frac_c_ok:.4f} frac_shrink_ok={rep.frac_shrink_ok:.4f} "
        f"frac_joint={rep.frac_joint:.4f} bound={rep.bound:.4f}\n"
    )
    ok = min(rep.frac_c_ok, rep.frac_shrink_ok) >= rep.bound
    return 0 if ok else EXIT_FAILED_CHECK


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "bench":
            return _bench(args, out)
        return _verify(args, out)
    except ValueError as exc:
        print(f"quintselect: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
