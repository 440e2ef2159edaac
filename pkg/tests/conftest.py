"""Shared corpus and precomputed run records for the test suite.

The expensive pieces (exhaustive catalogs, full algorithm runs under
both oracle policies) are computed once per session and shared by the
acceptance tests.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import pytest

from autarky import (
    AdversarialOracle,
    AlgorithmResult,
    InternalOracle,
    VarMap,
    algo_a0,
    algo_a01,
    algo_a1,
    algo_abs,
    enumerate_autarkies,
    extend_quasi_maximal,
    mixed,
    random_3cnf,
    units,
    units_pairs,
)


def family_corpus():
    """All family instances with n <= 8 (one seed for the random family)."""
    out = []
    for n in range(0, 9):
        out.append((f"units-pairs({n})", units_pairs(n)))
        out.append((f"units({n})", units(n)))
        out.append((f"mixed({n})", mixed(n)))
    for n in range(3, 9):
        out.append((f"random-3cnf({n},0)", random_3cnf(n, 0)))
    return out


def random_corpus(count: int = 500):
    """Seeded random 3-CNF instances with 3 <= n <= 10."""
    out = []
    for seed in range(count):
        n = random.Random(seed).randrange(3, 11)
        out.append((f"random-3cnf({n},{seed})", random_3cnf(n, seed)))
    return out


@pytest.fixture(scope="session")
def corpus():
    return family_corpus() + random_corpus()


@pytest.fixture(scope="session")
def catalogs(corpus):
    return [enumerate_autarkies(f) for _, f in corpus]


class RecordingOracle:
    """Wraps an oracle and keeps every (instance, answer) pair."""

    def __init__(self, inner):
        self.inner = inner
        self.answers = []

    def solve_full(self, f):
        ans = self.inner.solve_full(f)
        self.answers.append((f, ans))
        return ans


@dataclass
class RunRecord:
    policy: str
    algorithm: str
    result: AlgorithmResult
    maximal: object  # the autarky, extended to maximal for a0
    answers: list


ALGORITHM_FNS = {
    "a0": lambda f, o, vm: algo_a0(f, o),
    "a1": algo_a1,
    "abs": algo_abs,
    "a01": algo_a01,
}


def run_all(f, policy: str, seed: int = 0):
    vm = VarMap.for_formula(f)
    records = []
    for name, fn in ALGORITHM_FNS.items():
        if policy == "adversarial":
            oracle = RecordingOracle(AdversarialOracle(vm, seed=seed))
        else:
            oracle = RecordingOracle(InternalOracle(seed))
        result = fn(f, oracle, vm)
        phi = result.autarky
        if name == "a0":
            phi = extend_quasi_maximal(phi, f)
        records.append(RunRecord(policy, name, result, phi, oracle.answers))
    return records


@pytest.fixture(scope="session")
def corpus_runs(corpus):
    """Every corpus instance run by all four algorithms, both policies."""
    out = []
    for _, f in corpus:
        out.append(run_all(f, "internal") + run_all(f, "adversarial"))
    return out
