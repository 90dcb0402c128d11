import pytest
from hypothesis import given, settings

from taftgwa.hopfact import (CHECK_NAMES, Action, EtaSpec, InvalidSpec, OmegaSpec, TaftAlgebra,
                             UnverifiedSpec, apply_g, apply_x, eta_alphas, is_inner_faithful,
                             omega_alpha21_forced, order_of_eta, verify_module_algebra)
from taftgwa.qpoly import TPoly, gamma_derivative, gamma_number
from taftgwa.scalars import field

from grid import elements, setup, tpolys


def plane():
    A, T = setup(3, {1: 1}, 3, 3)
    return A, T, EtaSpec(T.lam, A.field.one, TPoly.monomial(A.field, 2))


def sweedler():
    F = field(2)
    A, T = setup(2, {2: 1}, 2, 2)
    m1 = F.from_rational(-1)
    return A, T, OmegaSpec(m1, F.one, TPoly.const(F, 1), 1)


# a few verified eta specs with nonzero alpha's, used by the operator identities
def verified_specs():
    out = []
    A, T, s = plane()
    out.append((A, T, s))
    out.append((A, T, EtaSpec(s.gamma, A.q, s.phi)))
    A, T = setup(4, {2: 1}, 4, 4)
    F = A.field
    # d = 2, gamma = lambda, mu with (mu q^-1)^4 = 1
    out.append((A, T, EtaSpec(T.lam, F.one, TPoly(F, {2: 1}))))
    A, T = setup(3, {3: 1, 0: 1}, 3, 3)
    F = A.field
    out.append((A, T, EtaSpec(T.lam, F.one, TPoly(F, {2: 2}))))
    for A, T, s in out:
        assert verify_module_algebra(A, T, s).ok
    return out


SPECS = verified_specs()


def spec_id(item):
    A, T, s = item
    return f"q{A.q_order}-D{A.D}-n{T.n}-d{s.phi.degree}-mu{s.mu.root_order()}"


def test_taft_validation():
    F = field(6)
    with pytest.raises(InvalidSpec):
        TaftAlgebra(3, 1, F.one)
    with pytest.raises(InvalidSpec):
        TaftAlgebra(4, 3, F.root_of_unity(3))
    with pytest.raises(InvalidSpec):
        TaftAlgebra(6, 3, F.root_of_unity(6))
    assert TaftAlgebra(6, 3, F.root_of_unity(3)).is_taft is False


def test_plane_passes_everything():
    A, T, s = plane()
    rep = verify_module_algebra(A, T, s)
    assert sorted(c.name for c in rep.checks) == sorted(CHECK_NAMES)
    assert all(c.passed for c in rep.checks)
    cert = is_inner_faithful(A, T, s, rep)
    assert cert.inner_faithful and cert.g_order == 3
    assert cert.witness == "x(t) = t^2"


def test_report_serializes_one_entry_per_check():
    A, T, s = plane()
    d = verify_module_algebra(A, T, s).to_dict()
    assert [c["name"] for c in d["checks"]] == list(CHECK_NAMES)


def test_gamma_one_fails_skew_commutation():
    A, T, s = plane()
    rep = verify_module_algebra(A, T, EtaSpec(A.field.one, s.mu, s.phi))
    assert not rep.ok
    assert not rep["skew_commutation_t"].passed


def test_mu_out_of_class_breaks_nilpotency():
    # mu = -1 makes mu q^(1-d) a primitive sixth root of unity
    A, T, s = plane()
    mu = A.field.from_rational(-1)
    assert (mu * A.q_power(-1)) ** 3 != 1
    rep = verify_module_algebra(A, T, EtaSpec(s.gamma, mu, s.phi))
    assert not rep["x_nilpotent_v"].passed


def test_inner_faithful_negatives():
    A, T, s = plane()
    zero = EtaSpec(s.gamma, s.mu, TPoly.zero(A.field))
    cert = is_inner_faithful(A, T, zero)
    assert not cert.inner_faithful
    # g of order 3 inside T_6(lambda, 3)
    A6, T6 = setup(3, {1: 1}, 6, 3)
    spec = EtaSpec(T6.lam, A6.field.one, TPoly.monomial(A6.field, 2))
    rep = verify_module_algebra(A6, T6, spec)
    assert rep.ok
    cert = is_inner_faithful(A6, T6, spec, rep)
    assert not cert.inner_faithful and cert.g_order == 3


def test_inner_faithful_requires_verification():
    A, T, s = plane()
    with pytest.raises(UnverifiedSpec):
        is_inner_faithful(A, T, EtaSpec(A.field.one, s.mu, s.phi))


def test_order_of_eta():
    F = field(30)
    z3, z5 = F.root_of_unity(3), F.root_of_unity(5)
    assert order_of_eta(z3, z3) == 3
    assert order_of_eta(z3, z5) == 15
    assert order_of_eta(F.one, F.one) == 1
    with pytest.raises(InvalidSpec):
        order_of_eta(F.from_rational(2), F.one)


def test_apply_g_examples():
    A, T, s = plane()
    g, mu = s.gamma, A.field.root_of_unity(3, 2)
    spec = EtaSpec(g, mu, s.phi)
    assert apply_g(A, spec, A.monomial(2, 0)) == A.monomial(2, 0, g**2)
    assert apply_g(A, spec, A.v()) == A.v() * mu
    assert apply_g(A, spec, A.u()) == A.u() * (mu.inverse() * g**A.D)
    Aw, _, sw = sweedler()
    assert apply_g(Aw, sw, Aw.u()) == Aw.v()
    assert apply_g(Aw, sw, Aw.v()) == Aw.u()
    assert apply_g(Aw, sw, Aw.t()) == Aw.t()


@pytest.mark.parametrize("item", SPECS, ids=spec_id)
def test_apply_x_examples(item):
    A, T, s = item
    gamma, phi = s.gamma, A.poly(s.phi)
    assert apply_x(A, s, A.monomial(2, 0)) == phi * A.monomial(1, 0) * (1 + gamma)
    f = TPoly(A.field, {0: 3, 1: -1, 4: 2, 5: 1})
    assert apply_x(A, s, A.poly(f)) == A.poly(s.phi * gamma_derivative(f, gamma))
    _, a22 = eta_alphas(A, s.gamma, s.mu, s.phi)
    omega = s.mu * A.q_power(1 - s.phi.degree)
    for k in range(1, 6):
        assert apply_x(A, s, A.monomial(0, -k)) == A.poly(a22) * A.monomial(0, -k) * gamma_number(k, omega)


@pytest.mark.parametrize("item", SPECS, ids=spec_id)
def test_skew_leibniz(item):
    A, T, s = item
    act = Action(A, s)

    @settings(max_examples=30, deadline=None)
    @given(elements(A, 2, 3), elements(A, 2, 3))
    def check(a, b):
        assert act.x(a * b) == act.g(a) * act.x(b) + act.x(a) * b
        assert act.g(a * b) == act.g(a) * act.g(b)
    check()


@pytest.mark.parametrize("item", SPECS, ids=spec_id)
def test_gx_equals_lambda_xg_on_monomials(item):
    A, T, s = item
    act = Action(A, s)
    for k in range(-4, 5):
        for a in range(6):
            w = A.monomial(a, k)
            assert act.g(act.x(w)) == act.x(act.g(w)) * T.lam


@pytest.mark.parametrize("item", SPECS, ids=spec_id)
def test_x_nilpotent_spot_check(item):
    A, T, s = item
    act = Action(A, s)
    for k in range(-3, 4):
        for a in range(3 * s.phi.degree + 1):
            assert act.x_power(A.monomial(a, k), T.m).is_zero()


@pytest.mark.parametrize("item", SPECS, ids=spec_id)
def test_eta_is_graded(item):
    A, T, s = item
    act = Action(A, s)
    for k in range(-3, 4):
        w = A.monomial(2, k)
        assert set(act.g(w).components) <= {k}
        assert set(act.x(w).components) <= {k}


def test_u_image_independent_of_support_choice():
    # when ell != 0, gamma^ell = 1 makes gamma^i the same for every i in supp h
    A, T = setup(3, {4: 1, 1: 1}, 3, 3)
    assert A.ell == 3
    for j in range(6):
        gamma = A.field.zeta(j)
        if gamma ** A.ell != 1:
            continue
        mu = A.field.root_of_unity(3)
        gu = apply_g(A, EtaSpec(gamma, mu, TPoly.zero(A.field)), A.u())
        for i0 in A.h.support():
            assert gu == A.u() * (mu.inverse() * gamma**i0)


def test_invalid_specs():
    A, T, s = plane()
    with pytest.raises(InvalidSpec):
        Action(A, EtaSpec(A.field.zero, s.mu, s.phi))
    with pytest.raises(InvalidSpec):
        Action(A, EtaSpec(field(12).one, s.mu, s.phi))
    with pytest.raises(InvalidSpec):
        Action(A, OmegaSpec(A.field.from_rational(-1), s.mu, s.phi, 1))


def test_sweedler_omega_passes():
    A, T, s = sweedler()
    rep = verify_module_algebra(A, T, s)
    assert rep.ok
    assert rep["weakly_graded"].passed and not rep["graded"].passed
    assert rep["inner_faithful"].passed
    assert rep.diagnostics["alpha21_forced"] == "both"


def test_omega_weakly_graded_on_generators():
    A, T, s = sweedler()
    act = Action(A, s)
    for w in (A.u(), A.v()):
        for img in (act.g(w), act.x(w)):
            assert set(img.components) <= {1, -1}
    for k in range(4):
        for w in (A.monomial(1, k), A.monomial(1, -k)):
            assert set(act.g(w).components) <= {k, -k}


def test_omega_x_leaves_grade_two_block():
    # x(u^2) = g(u)x(u) + x(u)u = v(u + v) + (u + v)u = 2h + u^2 + v^2
    A, T, s = sweedler()
    act = Action(A, s)
    expect = A.poly(A.h) * 2 + A.monomial(0, 2) + A.monomial(0, -2)
    assert act.x(A.monomial(0, 2)) == expect


def test_omega_sign_validated():
    A, T, s = sweedler()
    with pytest.raises(InvalidSpec):
        Action(A, OmegaSpec(s.gamma, s.mu, TPoly.monomial(A.field, 1), 1))
    Action(A, OmegaSpec(s.gamma, s.mu, TPoly.monomial(A.field, 1), -1))


@pytest.mark.parametrize("h", [{1: 1}, {3: 1}, {3: 1, 1: 1}])
@pytest.mark.parametrize("n", [2, 4])
def test_omega_odd_degree_has_no_action(h, n):
    A, T = setup(2, h, n, 2)
    F = A.field
    m1 = F.from_rational(-1)
    for a11, sign in ((TPoly.const(F, 1), 1), (TPoly.monomial(F, 1), -1)):
        for mu in F.roots_of_unity():
            for rule in ("theorem", "relations"):
                rep = verify_module_algebra(A, T, OmegaSpec(m1, mu, a11, sign, rule))
                assert not rep.ok
            # the relations alone pin down the second closed form
            assert omega_alpha21_forced(A, OmegaSpec(m1, mu, a11, sign), T.lam) == "relations"


@pytest.mark.parametrize("item", SPECS[:2], ids=spec_id)
def test_random_phi_verifier_agrees_with_direct_identities(item):
    # whatever phi is, a passing report implies the identities on monomials
    A, T, s = item

    @settings(max_examples=25, deadline=None)
    @given(tpolys(A.field, max_deg=4, bound=2))
    def check(phi):
        spec = EtaSpec(s.gamma, s.mu, phi)
        rep = verify_module_algebra(A, T, spec)
        if not rep.ok:
            return
        act = Action(A, spec)
        for k in (-2, -1, 0, 1, 2):
            w = A.monomial(1, k)
            assert act.g(act.x(w)) == act.x(act.g(w)) * T.lam
            assert act.x_power(w, T.m).is_zero()
    check()
