"""Group schemes and the Knop character via its two routes."""

import pytest

from knopf import exactalg as xa
from knopf import gscheme as gs
from knopf.catalog import dihedral_table, u_l_hopf
from knopf.errors import InputError
from knopf.exactalg import FieldSpec
from knopf.gscheme import FiniteGroupScheme

Q = FieldSpec.rationals()
F2 = FieldSpec.prime(2)
F3 = FieldSpec.prime(3)
F5 = FieldSpec.prime(5)


def test_constructor_rejects_noncommutative_coordinate_ring():
    from knopf.hopf import group_algebra

    with pytest.raises(InputError):
        FiniteGroupScheme(group_algebra(Q, dihedral_table(3)))


def test_constant_scheme_of_s3():
    g = gs.constant_scheme(Q, dihedral_table(3), label="S3")
    assert g.order == 6
    assert g.verify().ok
    assert g.knop_trivial()


def test_mu_and_alpha_axioms():
    assert gs.mu_scheme(Q, 4).verify().ok
    assert gs.mu_scheme(F3, 3).verify().ok          # infinitesimal at p = 3
    assert gs.alpha_scheme(F5).verify().ok


def test_grouplike_utilities():
    g = gs.mu_scheme(Q, 3)
    one = g.unit_grouplike()
    assert g.format_grouplike(one) == "1"
    t = g.field.zeros(3)
    t[1] = 1
    assert g.format_grouplike(t) == "t"
    tinv = g.grouplike_inverse(t)
    assert g.grouplike_equal(g.grouplike_product(t, tinv), one)


def test_is_grouplike():
    mu = gs.mu_scheme(Q, 3)
    assert mu.is_grouplike(mu.unit_grouplike())
    t = mu.field.zeros(3)
    t[1] = 1
    assert mu.is_grouplike(t)
    alpha = gs.alpha_scheme(F5)
    one_plus_a = alpha.field.zeros(5)
    one_plus_a[0] = 1
    one_plus_a[1] = 1
    # Delta(1+a) = 1(x)1 + a(x)1 + 1(x)a != (1+a)(x)(1+a)
    assert not alpha.is_grouplike(one_plus_a)


def test_knop_routes_mu3_alpha5_frozen():
    g = gs.mu_semidirect_alpha_scheme(F5, 3)
    adj = g.knop_character_adjoint_route()
    mod = g.knop_character_modular_route()
    assert g.format_grouplike(adj) == "t"
    assert g.format_grouplike(mod) == "t^2"
    # the two routes are inverse grouplikes of each other
    assert g.grouplike_equal(mod, g.grouplike_inverse(adj))
    assert g.knop_routes_agree()
    assert not g.knop_trivial()
    assert g.grouplike_equal(g.knop_character(), adj)


def test_knop_routes_inverse_relation_on_spread():
    schemes = [
        gs.constant_scheme(Q, dihedral_table(4)),
        gs.mu_scheme(F3, 3),
        gs.alpha_scheme(F2),
        gs.mu_semidirect_alpha_scheme(F5, 3),
        gs.scheme_of_hopf_dual(u_l_hopf(3)),
    ]
    for g in schemes:
        adj = g.knop_character_adjoint_route()
        mod = g.knop_character_modular_route()
        assert g.grouplike_equal(mod, g.grouplike_inverse(adj)), g.label
        assert g.knop_routes_agree(), g.label


def test_spec_ul_dual_knop_nontrivial():
    for p in (2, 3, 5):
        g = gs.scheme_of_hopf_dual(u_l_hopf(p))
        assert not g.knop_trivial(), p


def test_knop_triviality_constant_groups():
    for table in (dihedral_table(3), dihedral_table(4)):
        g = gs.constant_scheme(Q, table)
        assert xa.arrays_equal(g.knop_character(), g.unit_grouplike())


def test_knop_triviality_abelian_schemes():
    cases = [
        gs.mu_scheme(Q, 5),
        gs.mu_scheme(F3, 3),
        gs.alpha_scheme(F2),
        gs.alpha_scheme(F5),
        gs.direct_product(gs.mu_scheme(F2, 2), gs.alpha_scheme(F2)),
    ]
    for g in cases:
        assert xa.arrays_equal(g.knop_character(), g.unit_grouplike()), g.label


def test_knop_triviality_mu_semidirect_constant():
    # linearly reductive identity component mu_ell, etale part C2
    g = gs.mu_semidirect_c2_scheme(Q, 3)
    assert g.verify().ok
    assert xa.arrays_equal(g.knop_character(), g.unit_grouplike())
    assert g.knop_routes_agree()


def test_knop_trivial_iff_dual_unimodular():
    spread = [
        gs.constant_scheme(Q, dihedral_table(3)),
        gs.mu_scheme(F3, 3),
        gs.alpha_scheme(F5),
        gs.mu_semidirect_alpha_scheme(F5, 3),
        gs.scheme_of_hopf_dual(u_l_hopf(2)),
    ]
    for g in spread:
        assert g.knop_trivial() == g.dual_algebra.is_unimodular(), g.label


def test_mu_semidirect_alpha_triviality_margin():
    # ell | 2(p-1) forces lambda trivial: ell = 3, p = 7 has 2*6 = 12 = 3*4;
    # the constructor warns that this sits outside the nontrivial range
    with pytest.warns(UserWarning):
        g = gs.mu_semidirect_alpha_scheme(FieldSpec.prime(7), 3)
    assert g.knop_trivial()


def test_adjoint_coaction_counit_law():
    g = gs.mu_semidirect_alpha_scheme(F5, 3)
    c = g.adjoint_coaction()
    eps = xa.tensordot(g.field, c, g.gamma.counit, ([2], [0]))
    assert xa.arrays_equal(eps, g.field.eye(g.order))
