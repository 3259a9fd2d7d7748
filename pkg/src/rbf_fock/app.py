# Standard library:
from __future__ import annotations
from pathlib import Path
from typing import Sequence
import argparse
import logging

# Local:
from . import commands
from .config import OUTPUT_FORMATS, load_settings
from .core.common import Convention
from .errors import RbfFockError
from .logs import setup_logging
from .suites import SUITES


logger = logging.getLogger(__name__)

# argparse dests that map one-to-one onto Settings fields
SETTING_DESTS = ("gammas", "truncation", "quad_1d", "quad_2d", "convention", "seed", "tolerance", "suites", "output_format", "out")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_ERROR = 2


def _common_flags() -> argparse.ArgumentParser:

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--gamma", type=float, action="append", dest="gammas", metavar="GAMMA",
                        help="kernel width; repeat for several widths (default 1)")
    common.add_argument("--trunc", type=int, dest="truncation", metavar="N", help="number of basis functions (default 32)")
    common.add_argument("--quad", type=int, dest="quad_1d", metavar="N", help="1-D Gauss-Hermite order (default 64)")
    common.add_argument("--quad-2d", type=int, dest="quad_2d", metavar="N", help="per-axis order of the plane rule (default 48)")
    common.add_argument("--convention", choices=[*(c.value for c in Convention), "unnormalized"],
                        help="kernel prefactor convention; unnormalized is an alias of paper")
    common.add_argument("--seed", type=int)
    common.add_argument("--tolerance", type=float, help="override every per-case tolerance")
    common.add_argument("--format", choices=OUTPUT_FORMATS, dest="output_format")
    common.add_argument("--out", type=Path, help="write output here instead of stdout")
    common.add_argument("--config", type=Path, help="TOML file with a [rbf_fock] table")
    common.add_argument("-v", "--verbose", action="count", default=0, help="-v info, -vv debug")
    return common


def build_parser() -> argparse.ArgumentParser:

    common = _common_flags()
    parser = argparse.ArgumentParser(
        prog = "rbf-fock",
        description = "Gaussian RBF and Fock space numerics, with a verification runner.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", parents=[common], help="run the verification suites")
    verify.add_argument("--suite", action="append", dest="suites", choices=list(SUITES), help="repeatable; default all")
    verify.set_defaults(handler=commands.cmd_verify)

    kernel = sub.add_parser("kernel", parents=[common], help="evaluate kernels on a point file")
    kernel.add_argument("kind", choices=commands.KERNEL_KINDS)
    kernel.add_argument("points", type=Path, help="CSV point file")
    kernel.add_argument("--terms", type=int, default=40, help="Mercer terms for kind=mercer")
    kernel.add_argument("--gram", action="store_true", help="Gram matrix over a re,im point list")
    kernel.set_defaults(handler=commands.cmd_kernel)

    transform = sub.add_parser("transform", parents=[common], help="apply a transform to a signal file")
    transform.add_argument("direction", choices=("forward", "inverse", "fourier"))
    transform.add_argument("signal", type=Path, help="CSV with an x,re,im or n,re,im header")
    transform.add_argument("--route", help="computation route of the transform (default coefficient)")
    transform.add_argument("--grid", nargs=3, metavar=("LO", "HI", "COUNT"), help="emit L^2 output as samples on this grid")
    transform.add_argument("--l2", action="store_true", help="fourier: read coefficients as Hermite coefficients")
    transform.set_defaults(handler=commands.cmd_transform)

    basis = sub.add_parser("basis", parents=[common], help="tabulate basis functions on the real line")
    basis.add_argument("kind", choices=("hermite", "rbf"))
    basis.add_argument("--n", type=int, default=8, help="highest index")
    basis.add_argument("--grid", nargs=3, metavar=("LO", "HI", "COUNT"))
    basis.set_defaults(handler=commands.cmd_basis)

    mercer = sub.add_parser("mercer", parents=[common], help="Mercer partial-sum error against N")
    mercer.add_argument("--z", type=complex, default=0j)
    mercer.add_argument("--w", type=complex, default=0j)
    mercer.add_argument("--max-terms", type=int, default=40)
    mercer.set_defaults(handler=commands.cmd_mercer)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    """
    Entry point of the `rbf-fock` script.

    Returns 0 when the command succeeds (for verify: every case passes), 1 when
    verification cases fail and 2 on bad input or configuration.
    """
    args = build_parser().parse_args(argv)
    setup_logging(args.verbose)

    try:
        overrides = {dest: getattr(args, dest, None) for dest in SETTING_DESTS}
        settings = load_settings(args.config, overrides)
        logger.debug("settings: %s", settings)
        return args.handler(args, settings)
    except RbfFockError as e:
        logger.error("%s", e)
        return EXIT_ERROR
    except OSError as e:
        logger.error("%s: %s", getattr(e, "filename", None) or "I/O error", e.strerror or e)
        return EXIT_ERROR
