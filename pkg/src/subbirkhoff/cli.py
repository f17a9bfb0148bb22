"""Command-line interface.

Exit status: 0 on success, 1 when the input fails validation or a check
fails, 2 on usage errors (bad arguments, unreadable files).
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from subbirkhoff.completion import minimal_completion, verify_completion_structure
from subbirkhoff.decompose import completion_bound, decompose_substochastic, verify_combination
from subbirkhoff.experiments import SWEEP_COLUMNS, random_substochastic, sweep
from subbirkhoff.formats import (
    DocumentError,
    clamp,
    parse_decomposition_file,
    parse_matrix_file,
    write_decomposition_file,
    write_matrix_file,
)
from subbirkhoff.matrices import SubstochasticError, format_rational, rational_from_text, validate_substochastic
from subbirkhoff.oracle import BudgetExceeded, OracleBudget, minimal_decomposition

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _read(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load(args):
    m = parse_matrix_file(_read(args.matrix))
    if args.clamp:
        m = clamp(m)
    return validate_substochastic(m)


def _emit(args, data: bytes) -> None:
    if getattr(args, "output", None):
        Path(args.output).write_bytes(data)
    else:
        sys.stdout.write(data.decode())


def cmd_subdefect(args) -> int:
    b = _load(args)
    print(f"sigma={format_rational(b.sigma)} sub_defect={b.sub_defect}")
    return EXIT_OK


def cmd_complete(args) -> int:
    b = _load(args)
    _emit(args, write_matrix_file(minimal_completion(b).full))
    return EXIT_OK


def cmd_structure(args) -> int:
    b = _load(args)
    blocks = minimal_completion(b)
    rep = verify_completion_structure(blocks)
    print(f"n={b.n} k={blocks.k} sigma_X={format_rational(rep.sigma_X)} "
          f"sigma_Y={format_rational(rep.sigma_Y)}")
    print(f"nnz_D={rep.nnz_D} nnz_X={rep.nnz_X} nnz_Y={rep.nnz_Y} nnz_Z={rep.nnz_Z} "
          f"nnz_full={rep.nnz_full}")
    print(f"doubly_stochastic={'ok' if rep.doubly_stochastic else 'FAIL'}")
    for group, clauses in (("lemma31", rep.lemma31), ("lemma32", rep.lemma32)):
        for name, good in clauses.items():
            print(f"{group}.{name}={'ok' if good else 'FAIL'}")
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_decompose(args) -> int:
    b = _load(args)
    rep = decompose_substochastic(b, reduce=not args.no_reduce)
    _emit(args, write_decomposition_file(rep, keep_completion=args.keep_completion))
    print(f"terms={rep.term_count} bound={rep.bound} greedy={rep.greedy_count_before_reduction} "
          f"reduced={rep.reduced_count} face_dim={rep.face_dim}", file=sys.stderr)
    return EXIT_OK


def cmd_bound(args) -> int:
    b = _load(args)
    nnz, t, bnd = completion_bound(b, minimal_completion(b))
    print(f"nnz={nnz} t={t} bound={bnd}")
    return EXIT_OK


def cmd_verify(args) -> int:
    b = _load(args)
    try:
        combo = parse_decomposition_file(_read(args.decomposition))
    except DocumentError as exc:
        print(f"FAIL: {exc}")
        return EXIT_FAIL
    result = verify_combination(b.inner, combo)
    print("ok" if result else f"FAIL: {result.reason}")
    return EXIT_OK if result else EXIT_FAIL


def cmd_oracle(args) -> int:
    b = _load(args)
    budget = OracleBudget(max_side=args.max_side, max_terms=args.max_terms,
                          max_subsets=args.max_subsets)
    best = minimal_decomposition(b, budget)
    rep = decompose_substochastic(b)
    print(f"minimal_terms={len(best)} pipeline_terms={rep.term_count} bound={rep.bound}")
    if args.output:
        Path(args.output).write_bytes(write_decomposition_file(best))
    return EXIT_OK


def cmd_random(args) -> int:
    b = random_substochastic(args.n, rational_from_text(args.density), args.seed)
    _emit(args, write_matrix_file(b.inner))
    return EXIT_OK


def _int_list(text: str) -> list[int]:
    out = []
    for part in text.split(","):
        if "-" in part:
            lo, hi = part.split("-")
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    return out


def cmd_sweep(args) -> int:
    sizes = _int_list(args.sizes)
    densities = [rational_from_text(d) for d in args.densities.split(",")]
    seeds = range(args.start, args.start + args.count)
    rows = sweep(seeds, sizes, densities, jobs=args.jobs)
    print(",".join(SWEEP_COLUMNS))
    for row in rows:
        print(row.csv())
    bad = [r for r in rows if not r.ok]
    for r in bad:
        print(f"seed {r.seed}: {', '.join(r.failures)}", file=sys.stderr)
    return EXIT_FAIL if bad else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="subbirkhoff",
        description="Exact subpermutation decompositions of doubly substochastic matrices.")
    sub = parser.add_subparsers(dest="command", required=True)

    ingest = argparse.ArgumentParser(add_help=False)
    ingest.add_argument("matrix", help="matrix document (JSON or plain grid); '-' for stdin")
    ingest.add_argument("--clamp", action="store_true",
                        help="divide by the largest line sum if it exceeds 1")

    out = argparse.ArgumentParser(add_help=False)
    out.add_argument("-o", "--output", help="write the document here instead of stdout")

    sub.add_parser("subdefect", parents=[ingest], help="total and sub-defect").set_defaults(func=cmd_subdefect)
    sub.add_parser("complete", parents=[ingest, out], help="minimal completion").set_defaults(func=cmd_complete)
    sub.add_parser("structure", parents=[ingest], help="block-structure report of the completion") \
        .set_defaults(func=cmd_structure)

    p = sub.add_parser("decompose", parents=[ingest, out], help="subpermutation decomposition")
    p.add_argument("--no-reduce", action="store_true", help="skip the dependency-elimination pass")
    p.add_argument("--keep-completion", action="store_true",
                   help="also include the permutation decomposition of the completion")
    p.set_defaults(func=cmd_decompose)

    sub.add_parser("bound", parents=[ingest], help="nnz + t term bound").set_defaults(func=cmd_bound)

    p = sub.add_parser("verify", parents=[ingest], help="check a decomposition document")
    p.add_argument("decomposition")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", parents=[ingest], help="brute-force minimal term count")
    p.add_argument("--max-terms", type=int, default=8)
    p.add_argument("--max-side", type=int, default=4)
    p.add_argument("--max-subsets", type=int, default=2_000_000)
    p.add_argument("-o", "--output", help="write the minimal decomposition here")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("random", parents=[out], help="seeded random substochastic matrix")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--density", default="1/2")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_random)

    p = sub.add_parser("sweep", help="batch property report, one CSV row per seed")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--start", type=int, default=0)
    p.add_argument("--sizes", default="2-8")
    p.add_argument("--densities", default="1/4,1/2,3/4")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SubstochasticError, DocumentError, BudgetExceeded, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
