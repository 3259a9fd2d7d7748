# Standard library:
from __future__ import annotations
from argparse import Namespace
from contextlib import contextmanager
from pathlib import Path
from typing import IO, Iterator
import logging
import sys

# Third party:
import numpy as np

# Local:
from .config import Settings
from .core import (
    Basis,
    HoloFun,
    L2Sig,
    TransformContext,
    alpha_of,
    fock_kernel,
    fourier_l2,
    fourier_rbf,
    gram,
    hermite_fit,
    hermite_functions,
    mercer_partial,
    rbf_bargmann,
    rbf_bargmann_inverse,
    rbf_kernel,
    rbf_sb_kernel,
    sb_kernel,
)
from .core.common import tail_mass
from .core.spaces import fock_basis_table
from .csv_io import PointFile, SignalFile, read_path, read_points, read_signal, write_coefficients, write_rows, write_samples
from .errors import ConfigError, CsvFormatError
from .logs import stderr_console
from .report import dumps, render_summary, report_rows
from .suites import run_all


logger = logging.getLogger(__name__)

PAIR_KINDS = ("rbf", "fock", "mercer")
MIXED_KINDS = ("sb", "rbf-sb")
KERNEL_KINDS = PAIR_KINDS + MIXED_KINDS


@contextmanager
def output_stream(path: Path | None) -> Iterator[IO[str]]:
    """The --out file, or stdout."""
    if path is None:
        yield sys.stdout
        return
    with open(path, "w", newline="", encoding="utf-8") as f:
        yield f
    logger.info("wrote %s", path)


def _single_gamma(settings: Settings, command: str) -> float:

    if len(settings.gammas) != 1:
        raise ConfigError(f"{command} takes a single --gamma, got {list(settings.gammas)}")
    return settings.gammas[0]


def _context(settings: Settings, gamma: float) -> TransformContext:
    return TransformContext(
        gamma = gamma,
        convention = settings.convention,
        truncation = settings.truncation,
        quad_1d = settings.quad_1d,
        quad_2d = settings.quad_2d,
    )


def _grid(args: Namespace) -> np.ndarray | None:

    if getattr(args, "grid", None) is None:
        return None
    lo, hi, count = args.grid
    return np.linspace(float(lo), float(hi), int(count))


def _diagnostics(gamma: float, warnings: tuple[str, ...], tail: float) -> list[str]:
    return [f"gamma={gamma!r}", f"tail_mass={tail!r}", *(f"warning: {w}" for w in warnings)]


##############
# ~ verify ~ #
##############


def cmd_verify(args: Namespace, settings: Settings) -> int:
    """Run the verification suites; exit code 0 iff every case passes."""
    report = run_all(settings)
    with output_stream(settings.out) as out:
        if settings.output_format == "json":
            out.write(dumps(report))
        else:
            totals = f"{report.total - report.failed}/{report.total} cases passed"
            write_rows(out, ("suite", "id", "identity", "residual", "tolerance", "pass"), report_rows(report), [totals])
    render_summary(report, stderr_console)
    return 0 if report.passed else 1


##############
# ~ kernel ~ #
##############


def _kernel_rows(kind: str, gamma: float, points: PointFile, settings: Settings, terms: int) -> list[list[float]]:

    alpha = alpha_of(gamma)
    rows = []
    if kind in PAIR_KINDS:
        if points.w is None:
            raise CsvFormatError(1, f"kernel {kind} needs a z_re,z_im,w_re,w_im point file")
        for z, w in zip(points.z, points.w):
            match kind:
                case "rbf":
                    value = rbf_kernel(gamma, z, w)
                case "fock":
                    value = fock_kernel(alpha, z, w)
                case _:
                    value = mercer_partial(gamma, z, w, terms)
            rows.append([gamma, z.real, z.imag, w.real, w.imag, value.real, value.imag])
        return rows

    if points.x is None:
        raise CsvFormatError(1, f"kernel {kind} needs a z_re,z_im,x point file")
    for z, x in zip(points.z, points.x):
        if kind == "sb":
            value = sb_kernel(alpha, z, x, settings.convention)
        else:
            value = rbf_sb_kernel(gamma, z, x, settings.convention)
        rows.append([gamma, z.real, z.imag, x, value.real, value.imag])
    return rows


def cmd_kernel(args: Namespace, settings: Settings) -> int:
    """
    Kernel values for every row of a point file, one CSV row per evaluation and width.

    With --gram the file is a list of points (re,im) and the output is the Gram matrix,
    followed by its smallest eigenvalue as a diagnostic line.
    """
    points = read_path(args.points, read_points)

    with output_stream(settings.out) as out:
        if args.gram:
            for gamma in settings.gammas:
                result = gram(gamma, points.z, args.terms if args.kind == "mercer" else None)
                rows = (
                    [gamma, i, j, result.matrix[i, j].real, result.matrix[i, j].imag]
                    for i in range(result.matrix.shape[0]) for j in range(result.matrix.shape[1])
                )
                diagnostics = [f"gamma={gamma!r} min_eigenvalue={result.min_eigenvalue!r} rank={result.rank}"]
                write_rows(out, ("gamma", "i", "j", "re", "im"), rows, diagnostics)
            return 0

        header = (
            ("gamma", "z_re", "z_im", "w_re", "w_im", "re", "im")
            if args.kind in PAIR_KINDS
            else ("gamma", "z_re", "z_im", "x", "re", "im")
        )
        rows = [row for gamma in settings.gammas for row in _kernel_rows(args.kind, gamma, points, settings, args.terms)]
        write_rows(out, header, rows, [f"kind={args.kind}", f"convention={settings.convention.value}"])
    return 0


#################
# ~ transform ~ #
#################


def _as_l2(signal: SignalFile, alpha: float, size: int) -> L2Sig:

    if signal.kind == "samples":
        return hermite_fit(signal.abscissa, signal.values, alpha, size)
    return L2Sig(alpha=alpha, coeffs=signal.values)


def _write_l2(out: IO[str], sig: L2Sig, grid: np.ndarray | None, diagnostics: list[str]) -> None:

    if grid is None:
        write_coefficients(out, sig.coeffs, diagnostics)
    else:
        write_samples(out, grid, sig.evaluate(grid), diagnostics)


def cmd_transform(args: Namespace, settings: Settings) -> int:
    """
    forward: L^2 signal (samples or Hermite coefficients) -> rbf-onb coefficients.
    inverse: rbf-onb coefficients -> Hermite coefficients, or samples with --grid.
    fourier: rbf-onb coefficients through S, or an L^2 signal through F_alpha.
    """
    gamma = _single_gamma(settings, "transform")
    ctx = _context(settings, gamma)
    signal = read_path(args.signal, read_signal)
    grid = _grid(args)

    with output_stream(settings.out) as out:
        match args.direction:
            case "forward":
                result = rbf_bargmann(_as_l2(signal, ctx.alpha, ctx.truncation), ctx, args.route or "coefficient")
                write_coefficients(out, result.coeffs, _diagnostics(gamma, result.warnings, tail_mass(result.coeffs)))

            case "inverse":
                if signal.kind != "coefficients":
                    raise CsvFormatError(1, "inverse needs an n,re,im coefficient file")
                f = HoloFun(gamma, Basis.RBF, signal.values)
                sig = rbf_bargmann_inverse(f, ctx, args.route or "coefficient")
                _write_l2(out, sig, grid, _diagnostics(gamma, sig.warnings, sig.tail_mass))

            case "fourier":
                if signal.kind == "coefficients" and not args.l2:
                    f = fourier_rbf(HoloFun(gamma, Basis.RBF, signal.values), args.route or "coefficient")
                    write_coefficients(out, f.coeffs, _diagnostics(gamma, f.warnings, tail_mass(f.coeffs)))
                else:
                    sig = fourier_l2(_as_l2(signal, ctx.alpha, ctx.truncation))
                    _write_l2(out, sig, grid, _diagnostics(gamma, sig.warnings, sig.tail_mass))
    return 0


#############
# ~ basis ~ #
#############


def cmd_basis(args: Namespace, settings: Settings) -> int:
    """psi_0 .. psi_n (hermite) or e_0 .. e_n restricted to the real line (rbf), one column each."""
    gamma = _single_gamma(settings, "basis")
    alpha = alpha_of(gamma)
    grid = _grid(args)
    if grid is None:
        grid = np.linspace(-4.0, 4.0, 201)
    count = args.n + 1

    if args.kind == "hermite":
        table = hermite_functions(count, alpha, grid)
        names = [f"psi_{k}" for k in range(count)]
    else:
        table = (fock_basis_table(count, alpha, grid) * np.exp(-(grid ** 2) / gamma ** 2)).real
        names = [f"e_{k}" for k in range(count)]

    with output_stream(settings.out) as out:
        rows = ([x, *table[:, i]] for i, x in enumerate(grid))
        write_rows(out, ("x", *names), rows, [f"gamma={gamma!r}", f"alpha={alpha!r}"])
    return 0


##############
# ~ mercer ~ #
##############


def cmd_mercer(args: Namespace, settings: Settings) -> int:
    """Partial Mercer sums against the closed-form kernel, for N = 1 .. --max-terms."""
    z, w = complex(args.z), complex(args.w)
    rows = []
    for gamma in settings.gammas:
        exact = complex(rbf_kernel(gamma, z, w))
        for n in range(1, args.max_terms + 1):
            partial = mercer_partial(gamma, z, w, n)
            rows.append([gamma, n, partial.real, partial.imag, abs(partial - exact)])

    with output_stream(settings.out) as out:
        write_rows(out, ("gamma", "terms", "re", "im", "abs_error"), rows, [f"z={z!r} w={w!r}"])
    return 0
