import itertools

import pytest

from autarky import (
    Clause,
    ClauseSet,
    PartialAssignment,
    Solver,
    VarMap,
    encode_at_least,
    is_autarky,
    lift_partial,
    lift_total,
    project,
    satisfies,
    saturate,
    translate,
    units_pairs,
)


def test_varmap_ranges():
    vm = VarMap(3)
    assert vm.cardinality_base == 10
    assert [vm.t(v) for v in (1, 2, 3)] == [4, 6, 8]
    assert [vm.t(-v) for v in (1, 2, 3)] == [5, 7, 9]
    assert all(vm.is_primary(v) for v in (1, 2, 3))
    assert all(vm.is_aux(v) for v in range(4, 10))
    assert vm.is_cardinality(10)
    for lit in (1, -1, 2, -2, 3, -3):
        assert vm.t_inv(vm.t(lit)) == lit
    with pytest.raises(ValueError):
        vm.t(4)
    with pytest.raises(ValueError):
        vm.t_inv(3)


def test_class_of_and_saturate():
    vm = VarMap(3)
    assert vm.class_of(2) == (2, 6, 7)
    assert vm.class_of(6) == (2, 6, 7)
    assert saturate({1, 7}, vm) == frozenset({1, 4, 5, 2, 6, 7})
    with pytest.raises(ValueError):
        saturate({10}, vm)


def test_translate_units_pairs_gives_negative_aux_units():
    f = units_pairs(2)
    vm = VarMap.for_formula(f)
    t = translate(f, f.vars, vm)
    # the autarky clauses of unit clauses are the negated aux units
    for lit in (1, -1, 2, -2):
        assert Clause([-vm.t(lit)]) in t.clauses
    assert not t.collision
    assert t.clauses.n == 3 * f.n
    assert t.clauses.c == f.ell + 4 * f.n


def test_translate_window_subset():
    f = ClauseSet([[1, 2, 3]])
    vm = VarMap.for_formula(f)
    t = translate(f, {1, 2}, vm)
    # literal 3 is outside the window and vanishes from autarky clauses
    assert Clause([-vm.t(-1), vm.t(2)]) in t.clauses
    assert 3 not in t.clauses.vars
    assert t.window == frozenset({1, 2})


def test_translate_rejects_non_primary():
    vm = VarMap(2)
    with pytest.raises(ValueError):
        translate(ClauseSet([[1, 7]]), {1}, vm)


def test_lift_total_and_partial_and_project_round_trip():
    vm = VarMap(3)
    window = frozenset({1, 2, 3})
    phi = PartialAssignment({1: 1, 3: 0})
    tot = lift_total(phi, window, vm)
    assert tot.vars == frozenset(range(1, 10))
    assert tot[1] == 1 and tot[vm.t(1)] == 1 and tot[vm.t(-1)] == 0
    assert tot[2] == 0 and tot[vm.t(2)] == 0 and tot[vm.t(-2)] == 0
    assert project(tot, vm) == phi
    part = lift_partial(phi, vm)
    assert part.vars == saturate({1, 3}, vm)
    assert project(part, vm) == phi


def test_project_requires_saturated_domain():
    vm = VarMap(2)
    with pytest.raises(ValueError):
        project(PartialAssignment({1: 1}), vm)


def test_project_ignores_cardinality_ids():
    vm = VarMap(1)
    psi = PartialAssignment({1: 1, vm.t(1): 1, vm.t(-1): 0, vm.cardinality_base: 1})
    assert project(psi, vm) == PartialAssignment({1: 1})


def test_models_of_translation_are_exactly_the_autarkies():
    f = ClauseSet([[1, 2], [-1, 2], [-2]])
    vm = VarMap.for_formula(f)
    t = translate(f, f.vars, vm).clauses
    found = set()
    for bits in itertools.product((0, 1), repeat=t.n):
        model = PartialAssignment(dict(zip(sorted(t.vars), bits)))
        if satisfies(model, t):
            found.add(project(model, vm))
    assert all(is_autarky(phi, f) for phi in found)
    # every autarky of f appears among the projections
    for bits in itertools.product((None, 0, 1), repeat=f.n):
        phi = PartialAssignment({v: b for v, b in zip(sorted(f.vars), bits) if b is not None})
        if is_autarky(phi, f):
            assert phi in found


def test_encode_at_least_validation():
    vm = VarMap(2)
    with pytest.raises(ValueError):
        encode_at_least([1, 2], 3, vm, vm.cardinality_base)
    with pytest.raises(ValueError):
        encode_at_least([1, 2], 1, vm, 3)  # fresh base inside the aux range
    assert encode_at_least([1, 2], 0, vm, vm.cardinality_base) == ClauseSet()


def test_encode_at_least_small_semantics():
    vm = VarMap(3)
    for bound in (1, 2, 3):
        card = encode_at_least([1, 2, 3], bound, vm, vm.cardinality_base)
        for bits in itertools.product((0, 1), repeat=3):
            units = ClauseSet([Clause([v if b else -v]) for v, b in zip((1, 2, 3), bits)])
            ok = Solver(0).solve(card.union(units)).is_sat
            assert ok == (sum(bits) >= bound), (bound, bits)
