"""Comodules, symmetric powers, invariants, Molien series, and the trace map."""

import numpy as np
import pytest

from knopf import action as act
from knopf import exactalg as xa
from knopf import gscheme as gs
from knopf.catalog import standard_module
from knopf.errors import InputError, UnsupportedCaseError
from knopf.exactalg import FieldSpec

Q = FieldSpec.rationals()
F5 = FieldSpec.prime(5)

MINUS_ID = [[[1, 0], [0, 1]], [[-1, 0], [0, -1]]]
REFLECTION = [[[1, 0], [0, 1]], [[1, 0], [0, -1]]]


def _mu3a5():
    return gs.mu_semidirect_alpha_scheme(F5, 3)


def test_comodule_axioms_and_witness():
    g = _mu3a5()
    w = standard_module(g, 3, 5)
    assert w.verify().ok

    bad = w.coaction.copy()
    bad[0, 0, 0] += 1
    broken = act.Comodule.__new__(act.Comodule)
    broken.scheme, broken.coaction = g, g.field.reduce(bad)
    broken.dim, broken.labels = 2, ["w1", "w2"]
    rep = broken.verify()
    assert not rep.ok
    assert rep.failures[0].witness is not None


def test_dual_and_sums_and_tensors():
    g = _mu3a5()
    w = standard_module(g, 3, 5)
    wd = act.dual_comodule(w)
    assert wd.verify().ok
    v = act.direct_sum(w, wd)
    assert v.dim == 4 and v.verify().ok
    t = act.tensor(w, w)
    assert t.dim == 4 and t.verify().ok
    assert wd.labels == ["w1*", "w2*"]


def test_det_characters():
    g = _mu3a5()
    w = standard_module(g, 3, 5)
    t = g.field.zeros(g.order)
    t[1 * 5 + 0] = 1
    assert g.grouplike_equal(act.det_character(w), t)
    v = act.direct_sum(w, act.dual_comodule(w))
    assert g.grouplike_equal(act.det_character(v), g.unit_grouplike())


def test_constant_group_round_trip_and_labels():
    ring = act.constant_group_action(Q, MINUS_ID, var_labels=["x", "y"])
    assert ring.n == 2
    assert ring.variables.labels == ["x", "y"]
    assert ring.module.verify().ok
    assert ring.constant_matrices is not None


def test_constant_group_requires_closure():
    # missing inverse/identity data is rejected rather than silently fixed
    with pytest.raises(InputError):
        act.constant_group_action(Q, [[[0, 1], [1, 0]]][:1] + [[[2, 0], [0, 2]]])


def test_symmetric_power_dimensions():
    ring = act.constant_group_action(Q, MINUS_ID)
    for d in range(6):
        assert ring.tower.coaction(d).shape[0] == d + 1
    g = _mu3a5()
    v = act.direct_sum(standard_module(g, 3, 5),
                       act.dual_comodule(standard_module(g, 3, 5)))
    ring4 = act.GradedInvariantRing(v)
    assert ring4.tower.coaction(4).shape[0] == 35  # C(4+3, 3)


def test_minus_id_hilbert_matches_molien():
    ring = act.constant_group_action(Q, MINUS_ID)
    dims = ring.hilbert_function(6)
    assert dims == [1, 0, 3, 0, 5, 0, 7]
    series = act.molien_series(MINUS_ID, Q)
    assert [int(c) for c in series.series_coeffs(7)] == dims


def test_molien_series_closed_form():
    from knopf.ratfunc import Poly, RatFunc

    series = act.molien_series(MINUS_ID, Q)
    assert series == RatFunc(Poly([1, 0, 1]), Poly([1, 0, -1]).pow(2))
    assert series.degree_difference() == -2


def test_molien_refuses_positive_characteristic():
    with pytest.raises(UnsupportedCaseError):
        act.molien_series(MINUS_ID, FieldSpec.prime(3))


def test_reflection_hilbert():
    ring = act.constant_group_action(Q, REFLECTION)
    assert ring.hilbert_function(5) == [1, 1, 2, 2, 3, 3]


def test_reflection_twisted_invariants_are_odd_in_y():
    ring = act.constant_group_action(Q, REFLECTION, var_labels=["x", "y"])
    sign = Q.asarray([1, -1])
    dims = [ring.invariant_dim(d, twist=sign) for d in range(4)]
    assert dims == [0, 1, 1, 2]
    basis = ring.invariant_basis(1, twist=sign)
    # the unique degree-1 semi-invariant is y
    assert len(basis) == 1
    assert basis[0][0] == 0 and basis[0][1] != 0


def test_pseudo_reflection_detection_and_smallness():
    f = Q
    mats = [f.asarray(m) for m in REFLECTION]
    assert act.pseudo_reflections(f, mats) == [1]
    assert not act.is_small_constant(f, mats)
    small = [f.asarray(m) for m in MINUS_ID]
    assert act.pseudo_reflections(f, small) == []
    assert act.is_small_constant(f, small)


def test_diagonalizable_weights_match_kernel_route():
    diag = act.DiagonalizableAction([1, 2], 3)
    f7 = FieldSpec.prime(7)
    ring = diag.to_kernel_route(f7)
    assert diag.hilbert_function(8) == ring.hilbert_function(8)


def test_diagonalizable_twisted_hilbert_brute_force():
    diag = act.DiagonalizableAction([1, 2], 3)
    for k in range(3):
        got = diag.twisted_hilbert(6, k)
        want = []
        for e in range(7):
            count = sum(
                1
                for a in range(e + 1)
                if (a * 1 + (e - a) * 2 + k) % 3 == 0
            )
            want.append(count)
        assert got == want, k


def test_diagonalizable_det_weight():
    assert act.DiagonalizableAction([1, 2], 3).det_module_weight() == 0
    assert act.DiagonalizableAction([1, 1], 3).det_module_weight() == 1


def test_trace_minus_id_doubles_even_degrees():
    ring = act.constant_group_action(Q, MINUS_ID)
    assert xa.arrays_equal(ring.trace_matrix(2), 2 * Q.eye(3))
    assert xa.is_zero(ring.trace_matrix(1))
    assert xa.arrays_equal(ring.integral_functional(), Q.asarray([1, 1]))


def test_trace_alpha5_sends_x4_to_y4():
    g = gs.alpha_scheme(F5)
    w = g.field.zeros((2, 2, 5))
    w[0, 0, 0] = 1          # w1 -> w1 (x) 1
    w[0, 1, 1] = 1          # w2 -> w1 (x) a + w2 (x) 1
    w[1, 1, 0] = 1
    mod = act.Comodule(g, w, labels=["w1", "w2"])
    assert mod.verify().ok
    ring = act.GradedInvariantRing(mod, var_labels=["x", "y"])
    assert list(ring.integral_functional()) == [0, 0, 0, 0, 1]
    t4 = ring.trace_matrix(4)
    # monomial order x^4, x^3 y, ..., y^4; only Tr(x^4) = y^4 survives
    expect = g.field.zeros((5, 5))
    expect[4, 0] = 1
    assert xa.arrays_equal(t4, expect)
    assert list(ring.trace_map(4, [1, 0, 0, 0, 0])) == [0, 0, 0, 0, 1]


def test_trace_report_minus_id():
    ring = act.constant_group_action(Q, MINUS_ID, label="<-I>")
    rep = act.trace_equivariance_check(ring, 6)
    assert rep.ok
    assert rep.unimodular
    for res in rep.degrees:
        assert res.image_in_invariants
        assert res.equivariance == "pass"
        assert res.reynolds == "pass"


def test_hilbert_dispatcher():
    diag = act.DiagonalizableAction([1, 2], 3)
    ring = act.constant_group_action(Q, MINUS_ID)
    assert act.hilbert_function(diag, 5) == diag.hilbert_function(5)
    assert act.hilbert_function(ring, 5) == ring.hilbert_function(5)
