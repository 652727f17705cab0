"""Randomized search for extremal C(L) and Question-1 ratio statistics."""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .arrangement import build_sphere, quotient_projective
from .errors import HeadlineFindingError
from .generate import random_arrangement
from .geometry import GreatCircleLine, LineSet, check_general_position
from .zones import line_zone_complexity, min_vertex_complexity

STRATEGY_RANDOM = "random"
STRATEGY_HILLCLIMB = "hillclimb"


@dataclass
class SearchRecord:
    seed: int
    n: int
    C_L: int
    f_vector: dict
    line_ratios: list               # C(l)/(n-1) per line, as floats
    best_so_far: bool
    runtime: float


@dataclass
class SearchSummary:
    n: int
    trials: int
    max_C_L: int
    best_seed: int | None
    best_lines: list = field(default_factory=list)   # kernel coefficient triples


def _analyze(line_set):
    proj = quotient_projective(build_sphere(line_set))
    c_l = min_vertex_complexity(proj)
    if c_l > 5:
        raise HeadlineFindingError(
            f"C(L) = {c_l} > 5 observed; this contradicts the proven bound"
        )
    return proj, c_l


def _perturbed(line_set, rng):
    """One exact local move: bump one coefficient of one line by +-1."""
    lines = list(line_set.lines)
    idx = rng.randrange(len(lines))
    coeffs = list(lines[idx].coeffs)
    pos = rng.randrange(3)
    coeffs[pos] = coeffs[pos] + rng.choice((-1, 1))
    if all(c == 0 for c in coeffs):
        return None
    lines[idx] = GreatCircleLine.of(*coeffs)
    candidate = LineSet.of(lines)
    if not check_general_position(candidate).ok:
        return None
    return candidate


def search_max_CL(n, trials, seed=0, strategy=STRATEGY_RANDOM, bound=50,
                  climb_steps=20):
    """Run the trials and return (records, summary)."""
    if n < 4:
        raise ValueError("search needs n >= 4")
    if strategy not in (STRATEGY_RANDOM, STRATEGY_HILLCLIMB):
        raise ValueError(f"unknown strategy {strategy!r}")

    records = []
    best = -1
    best_seed = None
    best_lines = []
    import random as _random

    for t in range(trials):
        trial_seed = seed + t
        t0 = time.perf_counter()
        line_set = random_arrangement(n, bound, trial_seed)
        proj, c_l = _analyze(line_set)
        if strategy == STRATEGY_HILLCLIMB:
            rng = _random.Random(trial_seed ^ 0x5EED)
            for _ in range(climb_steps):
                candidate = _perturbed(line_set, rng)
                if candidate is None:
                    continue
                cand_proj, cand_cl = _analyze(candidate)
                if cand_cl >= c_l:
                    line_set, proj, c_l = candidate, cand_proj, cand_cl
        ratios = [line_zone_complexity(proj, li) / (n - 1) for li in range(n)]
        rec = SearchRecord(
            seed=trial_seed,
            n=n,
            C_L=c_l,
            f_vector=dict(sorted(proj.face_sizes().items())),
            line_ratios=ratios,
            best_so_far=c_l > best,
            runtime=time.perf_counter() - t0,
        )
        if c_l > best:
            best, best_seed = c_l, trial_seed
            best_lines = [line.coeffs for line in line_set.lines]
        records.append(rec)
    summary = SearchSummary(n, trials, best, best_seed, best_lines)
    return records, summary


@dataclass
class RatioStats:
    n: int
    trials: int
    mean: float
    max: float
    histogram: dict                 # rounded ratio -> count
    per_line_bound_ok: bool         # C(l)/(n-1) <= 5.5 - 1/(n-1) everywhere


def question1_stats(n, trials, seed=0, bound=50):
    """Distribution of (1/n) * sum_l C(l)/(n-1) over random arrangements."""
    if n < 4:
        raise ValueError("stats need n >= 4")
    ratios = []
    bound_ok = True
    for t in range(trials):
        line_set = random_arrangement(n, bound, seed + t)
        proj = quotient_projective(build_sphere(line_set))
        total = Fraction(0)
        for li in range(n):
            c_l = line_zone_complexity(proj, li)
            # zone theorem with its -1 constant: C(l) <= 5.5(n-1) - 1
            if 2 * c_l > 11 * (n - 1) - 2:
                bound_ok = False
            total += Fraction(c_l, n - 1)
        ratios.append(total / n)
    hist = Counter(round(float(r), 2) for r in ratios)
    return RatioStats(
        n,
        trials,
        mean=float(sum(ratios, Fraction(0)) / len(ratios)),
        max=float(max(ratios)),
        histogram=dict(sorted(hist.items())),
        per_line_bound_ok=bound_ok,
    )
