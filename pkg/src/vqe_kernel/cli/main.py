# vqe_kernel/cli/main.py
"""
vqe-kernel command line
──────────────────────────────────────────────
    vqe-kernel lorenz  --rho 28 --beta 8/3 --point all
    vqe-kernel eigs    --matrix m.json --format json
    vqe-kernel svd     --matrix m.json
    vqe-kernel heatmap --rho 28 --point trivial --out fig.csv --engine exact

Exit codes: 0 ok · 2 incomplete spectrum · 64 usage · 65 bad input ·
70 internal/convergence · 74 I/O.
──────────────────────────────────────────────
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import IO, Optional, Sequence

from pydantic import ValidationError

from vqe_kernel import __version__
from vqe_kernel.cli.commands import cmd_eigs, cmd_heatmap, cmd_lorenz, cmd_svd, heatmap_matrix
from vqe_kernel.cli.matrix_file import parse_matrix_file
from vqe_kernel.cli.options import RunConfig, parse_beta
from vqe_kernel.cli.report import dump_json
from vqe_kernel.errors import KernelError, UsageError, envelope_for, exit_code_for
from vqe_kernel.log import configure_logging, get_logger
from vqe_kernel.lorenz import LorenzParams

log = get_logger("cli")


class KernelArgumentParser(argparse.ArgumentParser):
    """argparse that raises UsageError instead of exiting with status 2."""

    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


def _common_flags() -> argparse.ArgumentParser:
    common = KernelArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="Base RNG seed (default: 0).")
    common.add_argument("--format", choices=("table", "json"), default="table", help="Report format.")
    common.add_argument("--inner-lr", dest="inner_lr", type=float, help="Inner learning rate (default: 0.1).")
    common.add_argument("--outer-lr", dest="outer_lr", type=float, help="Outer learning rate (default: 0.05).")
    common.add_argument("--restarts", type=int, help="Random inner restarts (default: 3).")
    common.add_argument("--accept-tol", dest="accept_tol", type=float,
                        help="Absolute acceptance threshold (default: 1e-8·max(1,‖M‖_F²)).")
    common.add_argument("--dedup-radius", dest="dedup_radius", type=float,
                        help="Absolute dedup radius (default: 1e-3·max(1,‖M‖_F)).")
    common.add_argument("--pad-d", dest="pad_d", type=float, help="Diagonal value on padded rows.")
    common.add_argument("--max-dim", dest="max_dim", type=int, default=8, help="Capacity ceiling n (default: 8).")
    common.add_argument("-v", "--verbose", action="count", default=0, help="Log progress to stderr (-vv for debug).")
    return common


def _lorenz_flags(parser: argparse.ArgumentParser, points: Sequence[str], default_point: str) -> None:
    parser.add_argument("--sigma", type=float, default=10.0, help="Prandtl number (default: 10).")
    parser.add_argument("--rho", type=float, default=28.0, help="Rayleigh number (default: 28).")
    parser.add_argument("--beta", type=parse_beta, default=8.0 / 3.0, help="Decimal or p/q (default: 8/3).")
    parser.add_argument("--point", choices=points, default=default_point, help="Equilibrium to analyse.")


def build_parser() -> KernelArgumentParser:
    parser = KernelArgumentParser(prog="vqe-kernel", description="Variational eigenvalues of non-Hermitian matrices.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)
    common = _common_flags()

    lorenz = subparsers.add_parser("lorenz", parents=[common], help="Spectra and stability of Lorenz equilibria.")
    _lorenz_flags(lorenz, ("trivial", "plus", "minus", "all"), "all")
    lorenz.set_defaults(func=_run_lorenz)

    eigs = subparsers.add_parser("eigs", parents=[common], help="Eigenvalues of a square matrix file.")
    eigs.add_argument("--matrix", type=Path, required=True, help='JSON file {"rows": [[[re, im], ...], ...]}.')
    eigs.set_defaults(func=_run_eigs)

    svd = subparsers.add_parser("svd", parents=[common], help="Singular values of a matrix file.")
    svd.add_argument("--matrix", type=Path, required=True, help='JSON file {"rows": [[[re, im], ...], ...]}.')
    svd.set_defaults(func=_run_svd)

    heatmap = subparsers.add_parser("heatmap", parents=[common], help="Write the ε-plane surface as CSV.")
    heatmap.add_argument("--matrix", type=Path, help="Matrix file; takes precedence over the Lorenz flags.")
    _lorenz_flags(heatmap, ("trivial", "plus", "minus"), "trivial")
    heatmap.add_argument("--engine", choices=("vqe", "exact"), help="Default: exact above 400 cells, vqe otherwise.")
    heatmap.add_argument("--out", type=Path, default=Path("heatmap.csv"), help="CSV destination (default: heatmap.csv).")
    for flag in ("re-min", "re-max", "im-min", "im-max"):
        heatmap.add_argument(f"--{flag}", dest=flag.replace("-", "_"), type=float,
                             help="Window bound (default: search box widened by 10%%).")
    heatmap.add_argument("--re-count", dest="re_count", type=int, help="Columns along Re ε (default: 81).")
    heatmap.add_argument("--im-count", dest="im_count", type=int, help="Rows along Im ε (default: 25).")
    heatmap.set_defaults(func=_run_heatmap)
    return parser


def _params(args) -> LorenzParams:
    return LorenzParams(sigma=args.sigma, rho=args.rho, beta=args.beta)


def _run_lorenz(args, run: RunConfig, out: IO[str]) -> int:
    return cmd_lorenz(_params(args), args.point, run, out)


def _run_eigs(args, run: RunConfig, out: IO[str]) -> int:
    return cmd_eigs(parse_matrix_file(args.matrix), run, out)


def _run_svd(args, run: RunConfig, out: IO[str]) -> int:
    return cmd_svd(parse_matrix_file(args.matrix), run, out)


def _run_heatmap(args, run: RunConfig, out: IO[str]) -> int:
    matrix = parse_matrix_file(args.matrix) if args.matrix is not None else None
    m = heatmap_matrix(matrix, _params(args), args.point)
    window = (args.re_min, args.re_max, args.im_min, args.im_max)
    return cmd_heatmap(m, window, (args.re_count, args.im_count), args.out, run, out)


def _report_error(exc: BaseException, fmt: str, out: IO[str], err: IO[str]) -> int:
    envelope = envelope_for(exc)
    if not isinstance(exc, (KernelError, ValidationError, OSError)):
        log.exception(f"💥 [cli] {type(exc).__name__}: {exc}")
    if fmt == "json":
        out.write(dump_json(envelope) + "\n")
    else:
        body = envelope["error"]
        err.write(f"❌ [cli] {body['code']}: {body['message']}\n")
    return exit_code_for(exc)


def main(argv: Optional[Sequence[str]] = None, out: IO[str] = None, err: IO[str] = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    fmt = "table"
    try:
        args = build_parser().parse_args(argv)
        fmt = args.format
        run = RunConfig.from_args(args)
        configure_logging(run.verbose)
        return args.func(args, run, out)
    except Exception as exc:
        return _report_error(exc, fmt, out, err)


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
