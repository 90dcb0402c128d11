"""Constructive classification of graded Taft actions.

Existence tests, family enumeration for eta-type actions, quantum thickening
of a cyclic group of automorphisms, actions on k[t] alone, and the
Omega-twisted actions available when q = -1.

A family fixes (gamma, mu) and a set of exponent slots for x(t) (or for
alpha11 in the Omega case); any choice of coefficients that keeps the leading
slot nonzero gives an action.  Tests concretize with all coefficients 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from math import gcd
from typing import Mapping

from .gwa import GwaAlgebra
from .hopfact import EtaSpec, InvalidSpec, OmegaSpec, TaftAlgebra, order_of_eta
from .qpoly import TPoly, gamma_number, support_class, twist
from .scalars import CycloNum, format_scalar, lcm


class UnsupportedParameters(ValueError):
    pass


@dataclass(frozen=True)
class KtSpec:
    """g(t) = gamma t and x(t) = phi on k[t] alone."""

    gamma: CycloNum
    phi: TPoly

    kind = "kt"


@dataclass(frozen=True)
class ActionFamily:
    kind: str                 # "eta", "omega" or "kt"
    n: int
    m: int
    lam: CycloNum
    gamma: CycloNum
    mu: CycloNum | None
    degree: int               # deg phi (eta, kt) or the largest alpha11 slot (omega)
    support: tuple[int, ...]  # exponent slots, increasing
    provenance: str
    inner_faithful: bool
    sign: int | None = None   # omega only: sigma(alpha11) = sign * alpha11

    @property
    def free_coefficients(self) -> tuple[int, ...]:
        return self.support

    @property
    def leading(self) -> int | None:
        """Slot that must be nonzero; None for omega families (any nonzero alpha11)."""
        return None if self.kind == "omega" else self.degree

    def taft(self) -> TaftAlgebra:
        return TaftAlgebra(self.n, self.m, self.lam)

    def polynomial(self, coeffs: Mapping[int, object] | None = None) -> TPoly:
        fld = self.gamma.field
        if coeffs is None:
            coeffs = {e: 1 for e in self.support}
        extra = set(coeffs) - set(self.support)
        if extra:
            raise InvalidSpec(f"exponents {sorted(extra)} are not slots of this family")
        p = TPoly(fld, dict(coeffs))
        if self.leading is not None and not p.coeff(self.leading):
            raise InvalidSpec(f"leading slot t^{self.leading} must be nonzero")
        if p.is_zero():
            raise InvalidSpec("the polynomial of a family must be nonzero")
        return p

    def concretize(self, coeffs: Mapping[int, object] | None = None):
        p = self.polynomial(coeffs)
        if self.kind == "eta":
            return EtaSpec(self.gamma, self.mu, p)
        if self.kind == "omega":
            return OmegaSpec(self.gamma, self.mu, p, self.sign)
        return KtSpec(self.gamma, p)

    def to_dict(self) -> dict:
        out = {
            "kind": self.kind,
            "n": self.n,
            "m": self.m,
            "lambda": format_scalar(self.lam),
            "gamma": format_scalar(self.gamma),
            "degree": self.degree,
            "support": list(self.support),
            "provenance": self.provenance,
            "inner_faithful": self.inner_faithful,
        }
        if self.mu is not None:
            out["mu"] = format_scalar(self.mu)
        if self.sign is not None:
            out["sign"] = self.sign
        return out


@dataclass
class ExistenceCertificate:
    verdict: bool
    witness_k: int | None = None
    failed_condition: str | None = None
    detail: str = ""

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "witness_k": self.witness_k,
            "failed_condition": self.failed_condition,
            "detail": self.detail,
        }


class FamilyList(list):
    """A list of ActionFamily carrying the existence certificate it was built under."""

    def __init__(self, items=(), certificate: ExistenceCertificate | None = None):
        super().__init__(items)
        self.certificate = certificate


def _roots_of_order_dividing(fld, k: int) -> list[tuple[int, CycloNum]]:
    """(index, root) pairs with root^k = 1, index = exponent of zeta_N."""
    return [(j, r) for j, r in enumerate(fld.roots_of_unity()) if (r**k) == 1]


def _existence_conditions(A: GwaAlgebra, T: TaftAlgebra) -> ExistenceCertificate:
    m, n = T.m, T.n
    if support_class(A.h, m) is None:
        return ExistenceCertificate(False, failed_condition="1",
                                    detail=f"supp(h) = {A.h.support()} meets several classes mod {m}")
    for k in range(1, lcm(m, A.q_order) + 1):
        if gcd(k, m) != 1:
            continue
        if lcm(m, A.q_order // gcd(A.q_order, k)) == n:
            return ExistenceCertificate(True, witness_k=k,
                                        detail=f"gcd({k}, {m}) = 1 and lcm({m}, ord(q^{k})) = {n}")
    return ExistenceCertificate(False, failed_condition="2",
                                detail=f"no k coprime to {m} has lcm({m}, ord(q^k)) = {n}")


def existence(A: GwaAlgebra, T: TaftAlgebra) -> ExistenceCertificate:
    """Decide whether an inner-faithful weakly graded T-action on A exists (q^2 != 1)."""
    if A.q * A.q == 1:
        raise UnsupportedParameters(
            "existence needs q^2 != 1; for q = -1 use omega_actions or enumerate_eta_actions")
    return _existence_conditions(A, T)


def eta_support(A: GwaAlgebra, m: int, d: int, gamma: CycloNum, mu: CycloNum) -> tuple[int, ...]:
    """Exponent slots for x(t) of degree d compatible with the closed forms of x(u), x(v).

    Positive slots must agree with d modulo lcm(m, ord q); the constant slot is
    allowed only when the coefficients of x(u) and x(v) at t^-1 vanish, i.e.
    mu q = 1 and gamma^D = 1 (and d is 0 modulo lcm(m, ord q)).
    """
    step = lcm(m, A.q_order)
    slots = [i for i in range(1, d + 1) if (d - i) % step == 0]
    if d % step == 0 and mu * A.q == 1 and gamma**A.D == 1:
        slots.insert(0, 0)
    return tuple(slots)


def _inverse_mod(a: int, m: int) -> int:
    return pow(a % m, -1, m)


def enumerate_eta_actions(A: GwaAlgebra, T: TaftAlgebra, d_max: int = 6) -> FamilyList:
    """All eta-type inner-faithful families with deg x(t) <= d_max."""
    cert = _existence_conditions(A, T)
    if A.q * A.q == 1:
        cert.detail += " (q^2 = 1: conditions checked directly, Omega-type actions not included)"
    out = FamilyList(certificate=cert)
    if support_class(A.h, T.m) is None:
        return out
    fld = A.field
    m, n = T.m, T.n
    mus = [(j, mu) for j, mu in _roots_of_order_dividing(fld, n) if lcm(m, mu.root_order()) == n]
    for d in range(0, d_max + 1):
        if gcd(d - 1, m) != 1:
            continue
        gamma = T.lam ** _inverse_mod(d - 1, m)
        if A.ell and gamma**A.ell != 1:
            continue
        for _, mu in mus:
            if (mu * A.q_power(1 - d)) ** m != 1:
                continue
            slots = eta_support(A, m, d, gamma, mu)
            if d not in slots:
                continue
            out.append(ActionFamily("eta", n, m, T.lam, gamma, mu, d, slots,
                                    "eta classification", inner_faithful=True))
    return out


@dataclass
class ThickeningResult:
    verdict: bool
    witness_k: int | None
    m: int
    families: list[ActionFamily] = dc_field(default_factory=list)
    detail: str = ""

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "witness_k": self.witness_k,
            "m": self.m,
            "detail": self.detail,
            "families": [f.to_dict() for f in self.families],
        }


def thicken(A: GwaAlgebra, gamma: CycloNum, mu: CycloNum, n: int, d_max: int = 6) -> ThickeningResult:
    """Can the cyclic group <eta_(gamma, mu)> of order n be thickened to a Taft action?"""
    if A.q * A.q == 1:
        raise UnsupportedParameters("thickening needs q^2 != 1")
    if gamma.field is not A.field or mu.field is not A.field:
        raise InvalidSpec("gamma and mu must live in the field of the algebra")
    if A.ell and gamma**A.ell != 1:
        raise InvalidSpec(f"eta_(gamma, mu) is not an automorphism: gamma^{A.ell} != 1")
    order = order_of_eta(gamma, mu)
    if order != n:
        raise InvalidSpec(f"eta_(gamma, mu) has order {order}, not n = {n}")
    m = gamma.root_order()
    if m <= 1:
        raise InvalidSpec("gamma = 1 admits no inner-faithful thickening")
    step = lcm(m, A.q_order)
    witness = None
    for k in range(1, step + 1):
        if gcd(k, m) == 1 and (mu * A.q_power(k)) ** m == 1:
            witness = k
            break
    res = ThickeningResult(witness is not None, witness, m)
    if witness is None:
        res.detail = f"(mu q^k)^{m} != 1 for every k coprime to {m}"
        return res
    res.detail = f"(mu q^{witness})^{m} = 1"
    # families use d = k + 1 with mu q^(-k) an m-th root of unity
    for k in range(1, d_max):
        if gcd(k, m) != 1 or (mu * A.q_power(-k)) ** m != 1:
            continue
        d = k + 1
        slots = eta_support(A, m, d, gamma, mu)
        lam = gamma**k
        res.families.append(ActionFamily("eta", n, m, lam, gamma, mu, d, slots,
                                         "quantum thickening", inner_faithful=True))
    return res


# -- actions on k[t] ----------------------------------------------------------


def kt_actions(T: TaftAlgebra, gamma: CycloNum, d_max: int = 6) -> list[ActionFamily]:
    """Families of T-module algebra structures on k[t] with g(t) = gamma t."""
    if gamma.is_zero() or gamma == 1:
        raise InvalidSpec("gamma must differ from 0 and 1 (gamma = 1 forces x(t) = 0)")
    m = T.m
    if gamma.root_order() != m:
        return []
    out = []
    for d in range(0, d_max + 1):
        if gcd(d - 1, m) != 1 or gamma ** (d - 1) != T.lam:
            continue
        slots = tuple(range(d % m, d + 1, m))
        out.append(ActionFamily("kt", T.n, m, T.lam, gamma, None, d, slots,
                                "k[t] classification", inner_faithful=(m == T.n)))
    return out


@dataclass
class KtReport:
    g_order: bool
    skew_commutation: bool
    x_nilpotent: bool
    eq_product_vanishes: bool
    eq_product_matches: bool | None
    inner_faithful: bool
    detail: dict = dc_field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.g_order and self.skew_commutation and self.x_nilpotent

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "g_order": self.g_order,
            "skew_commutation": self.skew_commutation,
            "x_nilpotent": self.x_nilpotent,
            "product_has_zero_factor": self.eq_product_vanishes,
            "monomial_formula_matches": self.eq_product_matches,
            "inner_faithful": self.inner_faithful,
            "detail": {k: str(v) for k, v in self.detail.items()},
        }


def _kt_x(gamma: CycloNum, phi: TPoly, f: TPoly) -> TPoly:
    """x(f) for g(t) = gamma t, x(t) = phi, built by x(t^a) = gamma t x(t^(a-1)) + phi t^(a-1)."""
    fld = phi.field
    out = TPoly.zero(fld)
    if f.is_zero():
        return out
    powers = [TPoly.zero(fld)]
    for a in range(1, f.degree + 1):
        powers.append(powers[-1].shift_up(1) * gamma + phi.shift_up(a - 1))
    for a, c in f.terms.items():
        out = out + powers[a] * c
    return out


def kt_product(gamma: CycloNum, m: int, d: int) -> CycloNum:
    """prod_{i=0}^{m-1} [1 + i(d-1)]_gamma."""
    p = gamma.field.one
    for i in range(m):
        p = p * gamma_number(1 + i * (d - 1), gamma)
    return p


def verify_kt(T: TaftAlgebra, gamma: CycloNum, phi: TPoly) -> KtReport:
    if gamma.is_zero() or gamma == 1:
        raise InvalidSpec("gamma must differ from 0 and 1")
    fld = gamma.field
    t = TPoly.monomial(fld, 1)
    g_ok = gamma**T.n == 1
    skew = twist(phi, gamma) - phi * (T.lam * gamma)
    iterates = [t]
    for _ in range(T.m):
        iterates.append(_kt_x(gamma, phi, iterates[-1]))
    nil = iterates[-1]
    d = phi.degree if phi else 0
    prod = kt_product(gamma, T.m, d) if phi else fld.zero
    factors = [gamma_number(1 + i * (d - 1), gamma) for i in range(T.m)]
    vanishes = any(f.is_zero() for f in factors)
    matches = None
    if phi and len(phi.terms) == 1:
        # phi = c t^d gives x^j(t) = c^j prod_{i<j} [1 + i(d-1)]_gamma t^(1 + j(d-1))
        c = phi.leading()
        matches = True
        for j in range(1, T.m + 1):
            coef = c**j
            for i in range(j):
                coef = coef * gamma_number(1 + i * (d - 1), gamma)
            # a zero coefficient appears before the exponent can go negative
            expect = TPoly.monomial(fld, 1 + j * (d - 1), coef) if coef else TPoly.zero(fld)
            if iterates[j] != expect:
                matches = False
                break
    return KtReport(
        g_order=g_ok,
        skew_commutation=skew.is_zero(),
        x_nilpotent=nil.is_zero(),
        eq_product_vanishes=vanishes,
        eq_product_matches=matches,
        inner_faithful=bool(phi) and gamma.root_order() == T.n and T.m == T.n,
        detail={"x^m(t)": nil, "product": prod, "skew_residual": skew},
    )


# -- Omega-twisted actions (q = -1) -------------------------------------------


def omega_actions(A: GwaAlgebra, T: TaftAlgebra, deg_max: int = 6) -> list[ActionFamily]:
    """Families with g = Omega o eta_(-1, mu) and x(t) = 0.

    Needs lambda = -1, h(-t) = (-1)^D h(t) and D even; for odd D the relations
    and x^2 = 0 cannot hold together.  g always has order 2 here, so n = 2.
    """
    if A.q != -1:
        raise UnsupportedParameters("Omega-type actions need q = -1")
    fld = A.field
    minus_one = fld.from_rational(-1)
    if T.lam != minus_one or A.D % 2:
        return []
    if A.sigma(A.h) != A.h * (minus_one**A.D):
        return []
    if T.n != 2:
        return []
    out = []
    for _, mu in _roots_of_order_dividing(fld, lcm(2, fld.N)):
        for sign, start in ((1, 0), (-1, 1)):
            slots = tuple(range(start, deg_max + 1, 2))
            if not slots:
                continue
            out.append(ActionFamily("omega", T.n, T.m, T.lam, minus_one, mu, slots[-1], slots,
                                    "Omega classification", inner_faithful=True, sign=sign))
    return out
