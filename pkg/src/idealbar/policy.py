"""Verification policy: exhaustive sweeps at desk scale, seeded sampling above.

A sweep runs a predicate over the cartesian product of finite element
lists.  When the product has at most `exhaustive_bound` tuples the sweep
walks it in lexicographic order, so the reported witness of a failure is
the lexicographically least violating tuple.  Above the bound it draws
`sample_count` uniform tuples from a seeded generator; the seed is echoed
in the result so runs are reproducible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product

EXHAUSTIVE_BOUND = 1_000_000
SAMPLE_COUNT = 10_000

AUTO = "auto"
EXHAUSTIVE = "exhaustive"
SAMPLE = "sample"


@dataclass(frozen=True)
class Policy:
    mode: str = AUTO
    seed: int = 0
    sample_count: int = SAMPLE_COUNT
    exhaustive_bound: int = EXHAUSTIVE_BOUND

    def use_exhaustive(self, total: int) -> bool:
        if self.mode == EXHAUSTIVE:
            return True
        if self.mode == SAMPLE:
            return total <= self.sample_count
        return total <= self.exhaustive_bound


@dataclass
class SweepResult:
    ok: bool
    witness: tuple | None
    mode: str
    checked: int
    seed: int | None = None

    def meta(self) -> dict:
        m = {"mode": self.mode, "checked": self.checked}
        if self.seed is not None:
            m["seed"] = self.seed
        return m


def sweep(spaces, pred, policy: Policy | None = None) -> SweepResult:
    """Run pred over the product of spaces; pred returns True when the
    tuple satisfies the property being checked."""
    policy = policy or Policy()
    spaces = [list(s) for s in spaces]
    total = 1
    for s in spaces:
        total *= len(s)
    if total == 0:
        return SweepResult(True, None, "exhaustive", 0)
    if policy.use_exhaustive(total):
        for tup in product(*spaces):
            if not pred(*tup):
                return SweepResult(False, tup, "exhaustive", total)
        return SweepResult(True, None, "exhaustive", total)
    rng = random.Random(policy.seed)
    draws = policy.sample_count
    for _ in range(draws):
        tup = tuple(s[rng.randrange(len(s))] for s in spaces)
        if not pred(*tup):
            return SweepResult(False, tup, "sampled", draws, policy.seed)
    return SweepResult(True, None, "sampled", draws, policy.seed)
