"""Command-line front end.

Exit codes: 0 ok, 1 usage, 2 dimension/cap, 3 singular system,
4 I/O or parse failure, 5 verification failure.
"""

from __future__ import annotations

import argparse
import sys
import time

import numpy as np

from . import mtx
from .equations import AxbEquation, SylvesterEquation, solve_axb, solve_sylvester
from .errors import (
    DimensionError,
    ParseError,
    SingularSystemError,
    VerificationError,
)
from .kron import MixedRadix, kron_many, unvec_row, vec_row
from .tpm import (
    DEFAULT_MAX_N,
    Permutation,
    TpmSpec,
    apply_tpm,
    build_tpm_explicit,
    build_tpm_implicit,
    permute_kron_product,
)

EXIT_OK, EXIT_USAGE, EXIT_DIMENSION, EXIT_SINGULAR, EXIT_IO, EXIT_VERIFY = range(6)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _int_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _spec(args) -> TpmSpec:
    if args.sigma is None or args.dims is None:
        raise UsageError("--sigma and --dims are required")
    if len(args.sigma) != len(args.dims):
        raise UsageError(f"--sigma has {len(args.sigma)} entries but --dims has {len(args.dims)}")
    try:
        sigma = Permutation(args.sigma)
    except DimensionError as exc:
        raise UsageError(str(exc)) from None
    return TpmSpec(sigma, MixedRadix(args.dims))


def _emit(args, text: str) -> None:
    if args.out is None:
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(text)


def cmd_tpm(args) -> int:
    u = build_tpm_explicit(_spec(args), max_n=args.max_n)
    if args.format == "coo":
        _emit(args, mtx.format_tpm_coo(u))
    else:
        _emit(args, mtx.format_matrix(u.toarray()))
    return EXIT_OK


def cmd_kron(args) -> int:
    ms = [mtx.read_matrix(path) for path in args.files]
    _emit(args, mtx.format_matrix(kron_many(ms)))
    return EXIT_OK


def cmd_permute(args) -> int:
    if args.sigma is None:
        raise UsageError("--sigma is required")
    try:
        sigma = Permutation(args.sigma)
    except DimensionError as exc:
        raise UsageError(str(exc)) from None
    if len(sigma) != len(args.files):
        raise UsageError(f"--sigma has {len(sigma)} entries but {len(args.files)} files were given")
    ms = [mtx.read_matrix(path) for path in args.files]
    direct = kron_many([ms[i] for i in sigma.zero_based])
    if args.verify:
        conjugated = permute_kron_product(sigma, ms)
        if not np.array_equal(conjugated, direct):
            raise VerificationError("U (A_1 x ... x A_k) V^T differs from the permuted product")
        print("verified: U (A_1 x ... x A_k) V^T equals the permuted product", file=sys.stderr)
    _emit(args, mtx.format_matrix(direct))
    return EXIT_OK


def _read_abc(args):
    return (mtx.read_matrix(p) for p in (args.a, args.b, args.c))


def cmd_solve_axb(args) -> int:
    if args.via not in (1, 2):
        raise UsageError("solve-axb accepts --via 1 or 2")
    eq = AxbEquation(*_read_abc(args))
    x = solve_axb(eq, via=args.via)
    print(f"residual_inf {mtx.format_number(np.max(np.abs(eq.residual(x))))}", file=sys.stderr)
    _emit(args, mtx.format_matrix(x))
    return EXIT_OK


def cmd_solve_sylvester(args) -> int:
    if args.via not in (3, 4):
        raise UsageError("solve-sylvester accepts --via 3 or 4")
    eq = SylvesterEquation(*_read_abc(args))
    x = solve_sylvester(eq, via=args.via)
    print(f"residual_inf {mtx.format_number(np.max(np.abs(eq.residual(x))))}", file=sys.stderr)
    _emit(args, mtx.format_matrix(x))
    return EXIT_OK


def cmd_vec(args) -> int:
    _emit(args, mtx.format_matrix(vec_row(mtx.read_matrix(args.file))))
    return EXIT_OK


def cmd_unvec(args) -> int:
    v = mtx.read_matrix(args.file)
    _emit(args, mtx.format_matrix(unvec_row(v, args.rows, args.cols)))
    return EXIT_OK


def cmd_bench(args) -> int:
    """Time implicit index-map application against explicit COO multiplication.

    The deterministic summary goes to the output; timings go to stderr.
    """
    if args.trials < 1:
        raise UsageError("--trials must be at least 1")
    spec = _spec(args)

    t0 = time.perf_counter()
    implicit = build_tpm_implicit(spec)
    t1 = time.perf_counter()
    explicit = build_tpm_explicit(spec, max_n=args.max_n)
    t2 = time.perf_counter()

    rng = np.random.default_rng(args.seed)
    t_implicit = t_explicit = 0.0
    checksum = 0
    for _ in range(args.trials):
        v = rng.integers(-9, 10, size=spec.n).astype(float)
        s0 = time.perf_counter()
        a = apply_tpm(implicit, v)
        s1 = time.perf_counter()
        b = explicit.matvec(v)
        s2 = time.perf_counter()
        if not np.array_equal(a, b):
            raise VerificationError("implicit and explicit TPM application disagree")
        t_implicit += s1 - s0
        t_explicit += s2 - s1
        checksum += int(np.dot(np.arange(1, spec.n + 1), a))

    summary = [
        f"sigma {spec.sigma}",
        f"dims {','.join(map(str, spec.dims.dims))}",
        f"N {spec.n}",
        f"trials {args.trials}",
        f"seed {args.seed}",
        "outputs identical",
        f"checksum {checksum}",
    ]
    _emit(args, "\n".join(summary) + "\n")

    print(f"{'path':<10}{'N':>10}{'build_s':>14}{'mean_apply_s':>16}", file=sys.stderr)
    print(f"{'implicit':<10}{spec.n:>10}{t1 - t0:>14.6e}{t_implicit / args.trials:>16.6e}", file=sys.stderr)
    print(f"{'explicit':<10}{spec.n:>10}{t2 - t1:>14.6e}{t_explicit / args.trials:>16.6e}", file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tensorperm", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def command(name, func, help):
        p = sub.add_parser(name, help=help)
        p.set_defaults(func=func)
        p.add_argument("--out", metavar="PATH", help="output file (default: stdout)")
        return p

    def tpm_flags(p):
        p.add_argument("--sigma", type=_int_list, help="1-based image list sigma(1),...,sigma(k)")
        p.add_argument("--dims", type=_int_list, help="factor dimensions n1,...,nk")
        p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N, help="materialization cap on N")

    p = command("tpm", cmd_tpm, "write an explicit tensor permutation matrix")
    tpm_flags(p)
    p.add_argument("--format", choices=("dense", "coo"), default="dense")

    p = command("kron", cmd_kron, "Kronecker product of matrix files, in order")
    p.add_argument("files", nargs="+")

    p = command("permute", cmd_permute, "permuted Kronecker product A_sigma(1) x ... x A_sigma(k)")
    p.add_argument("files", nargs="+")
    p.add_argument("--sigma", type=_int_list)
    p.add_argument("--verify", action="store_true", help="cross-check via U (A_1 x ... x A_k) V^T")

    for name, func, routes, default in (
        ("solve-axb", cmd_solve_axb, "1|2", 1),
        ("solve-sylvester", cmd_solve_sylvester, "3|4", 3),
    ):
        p = command(name, func, f"solve {'A X B' if default == 1 else 'A X + X B'} = C")
        p.add_argument("a")
        p.add_argument("b")
        p.add_argument("c")
        p.add_argument("--via", type=int, default=default, help=f"route {routes}")

    p = command("vec", cmd_vec, "row-major vectorization of a matrix file")
    p.add_argument("file")

    p = command("unvec", cmd_unvec, "fold a column vector file back into a matrix")
    p.add_argument("file")
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--cols", type=int, required=True)

    p = command("bench", cmd_bench, "implicit vs explicit TPM application timings")
    tpm_flags(p)
    p.add_argument("--trials", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("a command is required")
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SingularSystemError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SINGULAR
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except DimensionError as exc:
        print(f"dimension error: {exc}", file=sys.stderr)
        return EXIT_DIMENSION


if __name__ == "__main__":
    sys.exit(main())
