"""Random instances and the batch property sweep."""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from subbirkhoff.completion import verify_completion_structure
from subbirkhoff.decompose import decompose_substochastic, verify_combination
from subbirkhoff.matrices import Matrix, SubstochasticMatrix, as_rational, format_rational, validate_substochastic

SWEEP_COLUMNS = ("seed", "n", "sigma", "sub_defect", "nnz", "t", "face_dim",
                 "greedy_count", "reduced_count", "bound", "ok")


def random_substochastic(n: int, density, seed: int, scale: int = 10) -> SubstochasticMatrix:
    """Seeded random doubly substochastic matrix.

    Each cell is kept with probability ``density`` and given a value in
    ``{1/scale, ..., 1}``; rows then columns whose sum exceeds 1 are divided
    by that sum.
    """
    if n < 1:
        raise ValueError("side must be positive")
    density = as_rational(density)
    if not 0 <= density <= 1:
        raise ValueError(f"density {density} outside [0, 1]")
    rng = random.Random(seed)
    grid = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if rng.randrange(density.denominator) < density.numerator:
                grid[i][j] = Fraction(rng.randint(1, scale), scale)
    for row in grid:
        s = sum(row)
        if s > 1:
            row[:] = [x / s for x in row]
    for j in range(n):
        s = sum(grid[i][j] for i in range(n))
        if s > 1:
            for i in range(n):
                grid[i][j] /= s
    return validate_substochastic(Matrix(grid, n_cols=n))


@dataclass(frozen=True)
class SweepRow:
    seed: int
    n: int
    sigma: Fraction
    sub_defect: int
    nnz: int
    t: int
    face_dim: int
    greedy_count: int
    reduced_count: int
    bound: int
    term_count: int
    failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.failures

    def csv(self) -> str:
        vals = [self.seed, self.n, format_rational(self.sigma), self.sub_defect, self.nnz, self.t,
                self.face_dim, self.greedy_count, self.reduced_count, self.bound, int(self.ok)]
        return ",".join(str(v) for v in vals)


def check_instance(b: SubstochasticMatrix, seed: int = -1) -> SweepRow:
    """Run the pipeline on ``b`` and record every property that fails."""
    rep = decompose_substochastic(b)
    failures = []
    if not verify_combination(b.inner, rep.combination):
        failures.append("reconstruction")
    if rep.term_count > rep.bound:
        failures.append("term_bound")
    if rep.reduced_count > rep.face_dim + 1:
        failures.append("face_bound")
    if rep.face_dim + 1 > rep.bound:
        failures.append("chained_bound")
    if rep.greedy_count_before_reduction > rep.completion.full_nnz - rep.completion.side + 1:
        failures.append("greedy_bound")
    failures += verify_completion_structure(rep.completion).failures()
    return SweepRow(seed, b.n, b.sigma, b.sub_defect, rep.nnz, rep.t, rep.face_dim,
                    rep.greedy_count_before_reduction, rep.reduced_count, rep.bound,
                    rep.term_count, tuple(failures))


def sweep_instance(seed: int, sizes: Sequence[int], densities: Sequence) -> SweepRow:
    """Instance for ``seed``: side and density drawn from the seed, then checked."""
    rng = random.Random(seed)
    n = rng.choice(list(sizes))
    density = rng.choice(list(densities))
    return check_instance(random_substochastic(n, density, seed), seed)


def _sweep_job(args) -> SweepRow:
    return sweep_instance(*args)


def sweep(seeds: Sequence[int], sizes: Sequence[int], densities: Sequence,
          jobs: int = 1) -> list[SweepRow]:
    """Rows in seed order regardless of ``jobs``."""
    work = [(s, tuple(sizes), tuple(as_rational(d) for d in densities)) for s in seeds]
    if jobs <= 1:
        return [_sweep_job(w) for w in work]
    from concurrent.futures import ProcessPoolExecutor
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_sweep_job, work, chunksize=8))
