import pytest

from autarky import (
    Clause,
    ClauseSet,
    InternalOracle,
    SteeringRangeError,
    VarMap,
    algo_a0,
    algo_a01,
    algo_a1,
    algo_abs,
    apply,
    enumerate_autarkies,
    extend_quasi_maximal,
    is_autarky,
    mixed,
    scheme_s01,
    sqrt_partition,
    units,
    units_pairs,
)


def test_empty_formula_zero_calls():
    f = ClauseSet()
    for fn in (algo_a0, algo_a1, algo_abs, algo_a01):
        res = fn(f, InternalOracle())
        assert res.stats.total == 0
        assert len(res.autarky) == 0


def test_a0_returns_quasi_maximal():
    f = mixed(6)
    cat = enumerate_autarkies(f)
    res = algo_a0(f, InternalOracle())
    assert apply(res.autarky, f) == cat.lean_kernel
    ext = extend_quasi_maximal(res.autarky, f)
    assert ext.vars == cat.largest_var_set


def test_all_algorithms_agree_with_enumeration():
    instances = [units_pairs(5), units(5), mixed(6), ClauseSet([[1, 2], [-1, 2], [-2], [3]])]
    for f in instances:
        cat = enumerate_autarkies(f)
        vm = VarMap.for_formula(f)
        for fn in (algo_a1, algo_abs, algo_a01):
            res = fn(f, InternalOracle(), vm)
            assert res.autarky.vars == cat.largest_var_set
            assert apply(res.autarky, f) == cat.lean_kernel


def test_sqrt_partition_shape():
    blocks = sqrt_partition(range(1, 10))
    assert blocks == ClauseSet([[1, 2, 3], [4, 5, 6], [7, 8, 9]])
    blocks = sqrt_partition(range(1, 8))
    assert all(len(b) <= 3 for b in blocks) and len(blocks) <= 3
    assert sqrt_partition([]) == ClauseSet()


def test_scheme_steering_validation():
    f = units(4)
    vm = VarMap.for_formula(f)
    with pytest.raises(SteeringRangeError):
        scheme_s01(f, ClauseSet([Clause([-1])]), InternalOracle(), vm)
    with pytest.raises(SteeringRangeError):
        scheme_s01(f, ClauseSet([Clause([9])]), InternalOracle(), vm)


def test_scheme_partial_steering_gives_partial_autarky():
    f = mixed(8)  # lean on 1..4, autark on 5..8
    vm = VarMap.for_formula(f)
    res = scheme_s01(f, ClauseSet([Clause([5, 6])]), InternalOracle(), vm)
    assert is_autarky(res.autarky, f)
    assert {5, 6} <= res.autarky.vars


def test_scheme_unit_steering():
    f = mixed(5)
    cat = enumerate_autarkies(f)
    vm = VarMap.for_formula(f)
    steering = ClauseSet([Clause([v]) for v in sorted(f.vars)])
    res = scheme_s01(f, steering, InternalOracle(), vm)
    assert res.autarky.vars == cat.largest_var_set


def test_stats_record_kinds():
    f = units_pairs(3)
    res = algo_a0(f, InternalOracle())
    assert res.stats.total == res.stats.sat_calls + res.stats.unsat_calls
    assert res.stats.unsat_calls >= 1
    assert res.stats.max_instance_vars <= f.n


def test_debug_mode_flags_partially_covered_clauses():
    # {1,3} straddles the cut: refuting {3},{-3} removes variable 3, and
    # restriction leaves the residual positive unit t(1) that a fresh
    # translation does not contain, so the strict re-translation check
    # must fire (the computed autarky is nonetheless correct)
    from autarky import SchemeInvariantError, scheme_s01

    f = ClauseSet([[1, 3], [2], [3], [-3], [4], [-4]])
    vm = VarMap.for_formula(f)
    steering = ClauseSet([Clause([1, 2]), Clause([3, 4])])
    with pytest.raises(SchemeInvariantError):
        scheme_s01(f, steering, InternalOracle(), vm, debug=True)
    res = scheme_s01(f, steering, InternalOracle(), vm)
    cat = enumerate_autarkies(f)
    assert res.autarky.vars == cat.largest_var_set


def test_debug_mode_clean_on_disjoint_units():
    # every clause is a unit, so no refutation can partially cover one
    f = units_pairs(6)
    vm = VarMap.for_formula(f)
    res = algo_a01(f, InternalOracle(), vm, debug=True)
    assert res.autarky.vars == frozenset()
