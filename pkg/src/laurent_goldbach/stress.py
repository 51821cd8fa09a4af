"""Seeded random testing of the decomposition pipeline."""
from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field

from .decompose import decompose, verify_result
from .errors import LaurentGoldbachError
from .laurent import LaurentPoly
from .notation import format_poly
from .oracle import OracleBounds, SemiringMode, is_irreducible_oracle


@dataclass(frozen=True)
class StressConfig:
    trials: int = 1000
    seed: int = 42
    max_terms: int = 8
    coeff_max: int = 6
    exp_min: int = -8
    exp_max: int = 8
    value_max: int = 40
    oracle_cap: int = 24


@dataclass
class StressReport:
    config: StressConfig
    failures: list[tuple[str, str]] = field(default_factory=list)
    branches: Counter = field(default_factory=Counter)
    oracle_checked: int = 0

    @property
    def trials(self) -> int:
        return self.config.trials

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "seed": self.config.seed,
            "trials": self.trials,
            "failures": [{"input": p, "reason": r} for p, r in self.failures],
            "branches": dict(sorted(self.branches.items())),
            "oracle_checked": self.oracle_checked,
        }


def trial_rng(seed: int, index: int) -> random.Random:
    # Keyed per trial, so any trial can be replayed on its own.
    return random.Random(f"{seed}:{index}")


def random_poly(rng: random.Random, config: StressConfig) -> LaurentPoly:
    """Random f with at least two terms and 3 < f(1) <= value_max."""
    exps = range(config.exp_min, config.exp_max + 1)
    top = min(config.max_terms, len(exps))
    if top < 2 or config.value_max < 4:
        raise ValueError("configuration admits no polynomial with two terms and f(1) > 3")
    while True:
        n = rng.randint(2, top)
        ks = rng.sample(exps, n)
        f = LaurentPoly.from_terms((k, rng.randint(1, config.coeff_max)) for k in ks)
        if 3 < f.evaluate_at_one() <= config.value_max:
            return f


def run_trial(f: LaurentPoly, config: StressConfig, bounds: OracleBounds):
    """Returns ``(branch, oracle_used)``; raises on any failure."""
    result = decompose(f)
    if not verify_result(f, result):
        raise AssertionError("certificates or sum failed to re-verify")
    used = False
    if f.evaluate_at_one() <= config.oracle_cap:
        for part in result.parts:
            if not is_irreducible_oracle(part, SemiringMode.LAURENT, bounds):
                raise AssertionError(f"oracle finds {format_poly(part)} reducible")
        used = True
    return result.trace.branch, used


def run_stress(config: StressConfig) -> StressReport:
    report = StressReport(config)
    bounds = OracleBounds(config.oracle_cap, config.exp_max - config.exp_min)
    for i in range(config.trials):
        f = random_poly(trial_rng(config.seed, i), config)
        try:
            branch, used = run_trial(f, config, bounds)
        except (LaurentGoldbachError, AssertionError) as e:
            report.failures.append((format_poly(f), f"{type(e).__name__}: {e}"))
            continue
        report.branches[branch] += 1
        report.oracle_checked += used
    return report
