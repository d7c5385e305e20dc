"""Command line: ``pascalmod (compute|verify) <target> [options]``.

Exit codes: 0 on success (conjecture failures included), 1 when a
theorem-backed check fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from contextlib import nullcontext
from typing import Iterable, Iterator, List, Optional

from .autosimilar import AutosimilarSpec, materialize
from .checks import TARGETS, Bounds, run_task, tasks_for
from .domains import GF, ZZ
from .errors import PascalModError
from .exactmat import ExactMatrix, charpoly, det_exact
from .numtheory import is_prime, prime_power_base
from .pascal import pascal_reduced, pascal_symmetric, shifted_pascal, triangular
from .reports import CheckReport
from .spectra import gamma

COMPUTE_TARGETS = ("charpoly", "det", "gamma", "matrix")
VERIFY_TARGETS = tuple(TARGETS) + ("all",)
FAMILIES = ("pascal", "reduced2", "reduced3", "T", "L", "Ltilde", "shifted", "autosimilar")
# targets whose --primes list names prime powers q rather than primes
Q_LIST_TARGETS = ("conj8", "remark-selfdual", "remark-shifted")


class UsageError(Exception):
    pass


def _int_list(text: str) -> List[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {v}")
    return v


def _positive(text: str) -> int:
    v = _nonneg(text)
    if v == 0:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pascalmod", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("json", "csv", "plain"), default="json")
        p.add_argument("--out", metavar="PATH", help="write here instead of standard output")

    c = sub.add_parser("compute", help="construct an object and print it")
    c.add_argument("target", choices=COMPUTE_TARGETS)
    c.add_argument("--family", choices=FAMILIES, default="pascal")
    c.add_argument("--n", type=_nonneg)
    c.add_argument("--mod", type=_positive, metavar="P", help="work over F_P instead of the integers")
    c.add_argument("--k", type=_nonneg, default=0, help="shift for --family shifted")
    c.add_argument("--base", type=_positive, help="base of an autosimilar seed")
    c.add_argument("--seed", help="comma-separated row-major seed entries, rationals as a/b")
    common(c)

    v = sub.add_parser("verify", help="run checks and stream one report per instance")
    v.add_argument("target", choices=VERIFY_TARGETS)
    v.add_argument("--max-n", type=_nonneg)
    v.add_argument("--max-q", type=_nonneg)
    v.add_argument("--max-k", type=_nonneg)
    v.add_argument("--primes", type=_int_list)
    v.add_argument("--jobs", type=_positive, default=1)
    common(v)
    return parser


# -- compute -------------------------------------------------------------------


def _family_matrix(args) -> ExactMatrix:
    n = args.n
    if n is None:
        raise UsageError("--n is required")
    dom = ZZ
    if args.mod is not None:
        if not is_prime(args.mod):
            raise UsageError(f"--mod must be prime, got {args.mod}")
        dom = GF(args.mod)
    fam = args.family
    if fam == "pascal":
        return pascal_symmetric(n, dom)
    if fam in ("reduced2", "reduced3"):
        M = pascal_reduced(n, int(fam[-1]))
        return M if dom == ZZ else M.reduce(dom.p)
    if fam in ("T", "L", "Ltilde"):
        return triangular(fam, n, dom)
    if fam == "shifted":
        return shifted_pascal(n, args.k, dom)
    if args.base is None or args.seed is None:
        raise UsageError("--family autosimilar needs --base and --seed")
    spec = AutosimilarSpec.from_entries(args.base, [x.strip() for x in args.seed.split(",")])
    M = materialize(spec, n)
    if dom != ZZ:
        M = M.to_domain(dom)
    return M


def compute(args) -> dict:
    """Return ``{"json": obj, "csv": rows, "plain": text}`` for the requested object."""
    if args.target == "gamma":
        if args.n is None:
            raise UsageError("--n is required")
        if args.n < 1:
            raise UsageError("--n must be >= 1 for gamma")
        g = gamma(args.n)
        obj = {"gamma": g.gamma, "gamma2": g.gamma2}
        return {"json": obj, "csv": [["gamma", "gamma2"], [g.gamma, g.gamma2]],
                "plain": f"gamma={g.gamma} gamma2={g.gamma2}"}
    M = _family_matrix(args)
    if args.target == "matrix":
        rows = [[str(x) for x in r] for r in M.tolist()]
        return {"json": M.to_json(), "csv": rows, "plain": "\n".join(" ".join(r) for r in rows)}
    if args.target == "det":
        d = str(det_exact(M))
        return {"json": d, "csv": [["det"], [d]], "plain": d}
    f = charpoly(M)
    if f.domain not in (ZZ,) and not f.domain.is_prime_field:
        raise UsageError("rational characteristic polynomials are not serialized")
    coeffs = f.to_json()
    return {"json": coeffs, "csv": [["degree", "coefficient"]] + [[i, c] for i, c in enumerate(coeffs)],
            "plain": repr(f)}


# -- verify --------------------------------------------------------------------


def _validate_primes(target: str, primes: Optional[List[int]]):
    if not primes:
        return
    for x in primes:
        if target in Q_LIST_TARGETS:
            try:
                prime_power_base(x)
            except PascalModError:
                raise UsageError(f"--primes entries must be prime powers for {target}, got {x}")
        elif not is_prime(x):
            raise UsageError(f"--primes entries must be prime, got {x}")


def iter_reports(target: str, bounds: Bounds, jobs: int = 1) -> Iterator[CheckReport]:
    """Reports in parameter order, whatever the number of worker processes."""
    tasks = tasks_for(target, bounds)
    if jobs <= 1 or len(tasks) <= 1:
        for t in tasks:
            yield from run_task(t)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for batch in pool.map(run_task, tasks, chunksize=max(1, len(tasks) // (8 * jobs))):
            yield from batch


def _scalar_params(params: dict) -> str:
    return ";".join(f"{k}={v}" for k, v in params.items() if isinstance(v, (int, str, bool)))


def write_reports(reports: Iterable[CheckReport], fmt: str, stream) -> bool:
    """Stream reports; returns True when some theorem-backed check failed."""
    theorem_failed = False
    writer = None
    if fmt == "csv":
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(["check", "verdict", "kind", "params"])
    for r in reports:
        if r.failed and r.kind == "theorem":
            theorem_failed = True
        if fmt == "json":
            stream.write(r.dumps() + "\n")
        elif fmt == "csv":
            writer.writerow([r.check, r.verdict, r.kind, _scalar_params(r.params)])
        else:
            line = f"{r.verdict.upper():<15}{r.check:<18}{_scalar_params(r.params)}"
            if r.failed:
                line += f"  witness={json.dumps(r.witness)}"
            stream.write(line + "\n")
        stream.flush()
    return theorem_failed


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out_ctx = open(args.out, "w", newline="") if args.out else nullcontext(sys.stdout)
    try:
        if args.command == "compute":
            result = compute(args)
            with out_ctx as stream:
                if args.format == "json":
                    stream.write(json.dumps(result["json"]) + "\n")
                elif args.format == "csv":
                    csv.writer(stream, lineterminator="\n").writerows(result["csv"])
                else:
                    stream.write(result["plain"] + "\n")
            return 0
        _validate_primes(args.target, args.primes)
        bounds = Bounds(args.max_n, args.max_q, args.max_k, args.primes)
        with out_ctx as stream:
            failed = write_reports(iter_reports(args.target, bounds, args.jobs), args.format, stream)
        return 1 if failed else 0
    except (UsageError, PascalModError) as exc:
        parser.print_usage(sys.stderr)
        print(f"pascalmod: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
