import pytest

from autarky import (
    AdversarialOracle,
    Clause,
    ClauseSet,
    SizeExceededError,
    VarMap,
    algo_a0,
    encode_at_least,
    is_autarky,
    project,
    translate,
    units,
    units_pairs,
)


def test_raw_unsat_returns_minimum_variable_mus():
    f = units_pairs(3).union(ClauseSet([[1, 2, 3]]))
    vm = VarMap.for_formula(f)
    ans = AdversarialOracle(vm).solve_full(f)
    assert not ans.is_sat
    assert ans.used_vars == frozenset({1})
    assert ans.core == ClauseSet([[1], [-1]])


def test_raw_sat_returns_lex_least_model():
    f = ClauseSet([[1, 2]])
    vm = VarMap.for_formula(f)
    ans = AdversarialOracle(vm).solve_full(f)
    assert ans.is_sat
    assert ans.assignment.to_literals() == (-1, 2)


def test_translated_sat_returns_minimum_autarky():
    f = units(4)
    vm = VarMap.for_formula(f)
    t = translate(f, f.vars, vm).clauses
    steering = ClauseSet([Clause([1, 2, 3, 4])])
    ans = AdversarialOracle(vm).solve_full(t.union(steering))
    assert ans.is_sat
    phi = project(ans.assignment, vm)
    assert len(phi) == 1  # one variable is enough to hit the steering clause
    assert is_autarky(phi, f)


def test_translated_sat_respects_cardinality():
    f = units(4)
    vm = VarMap.for_formula(f)
    t = translate(f, f.vars, vm).clauses
    card = encode_at_least(sorted(f.vars), 3, vm, vm.cardinality_base)
    ans = AdversarialOracle(vm).solve_full(t.union(card))
    assert ans.is_sat
    phi = project(ans.assignment, vm)
    assert len(phi) == 3  # minimum size satisfying the bound
    assert is_autarky(phi, f)


def test_deterministic():
    f = units(5)
    vm = VarMap.for_formula(f)
    t = translate(f, f.vars, vm).clauses
    steering = ClauseSet([Clause(sorted(f.vars))])
    a = AdversarialOracle(vm).solve_full(t.union(steering))
    b = AdversarialOracle(vm).solve_full(t.union(steering))
    assert a.assignment == b.assignment


def test_size_limit():
    f = units(9)
    vm = VarMap.for_formula(f)
    with pytest.raises(SizeExceededError):
        AdversarialOracle(vm, limit=8).solve_full(f)


def test_a0_worst_case_one_pair_per_call():
    f = units_pairs(5)
    vm = VarMap.for_formula(f)
    res = algo_a0(f, AdversarialOracle(vm))
    assert res.stats.total == 5
    assert all(r.kind == "UNSAT" for r in res.stats.calls)


def test_large_shrunk_core_is_still_a_mus():
    # 14 variables: beyond the exhaustive window, exercises the fallback
    f = units_pairs(14)
    vm = VarMap.for_formula(f)
    ans = AdversarialOracle(vm, limit=20).solve_full(f)
    assert not ans.is_sat
    assert len(ans.used_vars) == 1  # any MUS here is a single contradictory pair
