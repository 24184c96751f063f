"""Command-line front end: constructions, verification suite, gap sweeps.

Every command is deterministic for a fixed seed (numpy PCG64 generator);
re-running with the same flags reproduces byte-identical CSV output.  Exit
codes: 0 success, 1 a verified assertion failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import gaps, identities, matrices, symbols
from ._util import fmt17
from .determinants import det_lu, det_matching, pfaffian
from .spectra import spectral_norm


def _out_stream(path):
    return open(path, "w", newline="\n") if path else sys.stdout


def _build_named_matrix(args):
    kind = args.kind
    if kind == "T":
        return matrices.hilbert_toeplitz(args.R)
    if kind == "H":
        return matrices.hilbert_hankel(args.R)
    if kind == "prolate":
        return matrices.prolate_matrix(args.R, args.w)
    if kind == "cosine":
        return matrices.toeplitz_from_symbol(symbols.SymbolSeries.cosine(), args.R)
    rng = np.random.default_rng(args.seed)
    x = identities.random_nodes(args.R, rng)
    if kind == "A":
        return matrices.cauchy_matrix(x)
    c = identities.random_weights(args.R, rng)
    return matrices.weighted_cauchy_matrix(x, c)


def cmd_gen(args) -> int:
    M = _build_named_matrix(args)
    if args.out:
        matrices.write_matrix_csv(M, args.out)
    else:
        matrices.write_matrix_csv(M, sys.stdout)
    return 0


def cmd_norm(args) -> int:
    M = _build_named_matrix(args)
    print(fmt17(spectral_norm(M)))
    return 0


def cmd_det(args) -> int:
    if args.T is not None:
        B = matrices.hilbert_toeplitz(args.T)
    else:
        rng = np.random.default_rng(args.seed)
        x = identities.random_nodes(args.R, rng)
        c = identities.random_weights(args.R, rng)
        B = matrices.weighted_cauchy_matrix(x, c)
    matching = det_matching(B)
    lu = det_lu(B)
    print(f"matching={fmt17(matching)}")
    print(f"lu={fmt17(lu)}")
    if B.shape[0] % 2 == 0:
        print(f"pfaffian_sq={fmt17(pfaffian(B) ** 2)}")
    return 0


def cmd_verify(args) -> int:
    reports = identities.run_suite(seeds=args.seeds, max_R=args.max_R)
    target = args.out if args.out else sys.stdout
    identities.write_reports_csv(reports, target)
    failed = [r for r in reports if r.applicable and not r.probe and not r.passed]
    if failed:
        for r in failed:
            print(f"FAILED {r.name}: residual={fmt17(r.max_residual)} "
                  f"tol*scale={fmt17(r.tolerance * r.scale)} {r.details}",
                  file=sys.stderr)
        return 1
    return 0


def cmd_sweep_gap(args) -> int:
    rows = gaps.sweep_figure1(R_max=args.R_max, dense=args.dense, threads=args.threads)
    gaps.write_figure1_csv(rows, args.out if args.out else sys.stdout)
    return 0


def cmd_eigvec_profile(args) -> int:
    report, offsets, amp = gaps.figure2_profile(args.S)
    gaps.write_figure2_csv(offsets, amp, args.out if args.out else sys.stdout)
    print(f"conjecture_holds={report.details['conjecture_holds']} "
          f"monotone_decay_from_center={report.details['monotone_decay_from_center']} "
          f"center_maximal={report.details['center_maximal']}", file=sys.stderr)
    return 0


def cmd_witness(args) -> int:
    certs = gaps.sweep_witness(args.R)
    gaps.write_witness_csv(certs, args.out if args.out else sys.stdout)
    bad = [c for c in certs
           if c.epsilon > c.epsilon_bound
           or c.rayleigh > c.norm_t + 1e-9
           or np.pi - c.rayleigh > c.gap_bound + 1e-9]
    if bad:
        for c in bad:
            print(f"FAILED witness certificate at R={c.params.R}", file=sys.stderr)
        return 1
    return 0


def cmd_prolate_gap(args) -> int:
    R_list = range(args.R_min, args.R_max + 1)
    rows, slope = symbols.prolate_gap(args.w, R_list)
    symbols.write_prolate_csv(rows, args.out if args.out else sys.stdout)
    if slope is not None:
        print(f"fit_slope={fmt17(slope)}", file=sys.stderr)
    return 0


def cmd_hankel_gap(args) -> int:
    rows = gaps.sweep_hankel(R_max=args.R_max, threads=args.threads)
    gaps.write_hankel_csv(rows, args.out if args.out else sys.stdout)
    return 0


def cmd_gs_rate(args) -> int:
    rows, _ = symbols.gs_rate_check(symbols.SymbolSeries.cosine(), args.R)
    symbols.write_gs_rate_csv(rows, args.out if args.out else sys.stdout)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hilbmat",
        description="Weighted Hilbert matrices: constructions, identity "
                    "verification, and spectral-gap experiments.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_matrix_flags(p):
        p.add_argument("--kind", choices=["T", "H", "prolate", "cosine", "A", "B"],
                       default="T")
        p.add_argument("--R", type=int, default=10)
        p.add_argument("--w", type=float, default=0.25)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--out", default=None)

    p = sub.add_parser("gen", help="emit a matrix as CSV")
    add_matrix_flags(p)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("norm", help="print a spectral norm")
    add_matrix_flags(p)
    p.set_defaults(func=cmd_norm)

    p = sub.add_parser("det", help="determinant by matching, LU and Pfaffian")
    p.add_argument("--T", type=int, default=None,
                   help="use the skew Hilbert matrix of this size")
    p.add_argument("--R", type=int, default=6)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_det)

    p = sub.add_parser("verify", help="run the identity suite, CSV of reports")
    p.add_argument("--seeds", type=int, default=100)
    p.add_argument("--max-R", dest="max_R", type=int, default=50)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep-gap", help="gap sweep for the skew Hilbert matrix")
    p.add_argument("--R-max", dest="R_max", type=int, default=10000)
    p.add_argument("--dense", action="store_true",
                   help="every R instead of the adaptive grid")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_sweep_gap)

    p = sub.add_parser("eigvec-profile", help="top eigenvector amplitude profile")
    p.add_argument("--S", type=int, default=1000)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_eigvec_profile)

    p = sub.add_parser("witness", help="upper-bound witness certificates")
    p.add_argument("--R", type=int, nargs="+", default=[100, 1000])
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("prolate-gap", help="prolate matrix gap decay table")
    p.add_argument("--w", type=float, default=0.25)
    p.add_argument("--R-min", dest="R_min", type=int, default=2)
    p.add_argument("--R-max", dest="R_max", type=int, default=40)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_prolate_gap)

    p = sub.add_parser("hankel-gap", help="Hankel Hilbert matrix gap table")
    p.add_argument("--R-max", dest="R_max", type=int, default=500)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_hankel_gap)

    p = sub.add_parser("gs-rate", help="smooth-symbol norm convergence table")
    p.add_argument("--R", type=int, nargs="+", default=[10, 50, 100, 200])
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_gs_rate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


def entrypoint():
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
