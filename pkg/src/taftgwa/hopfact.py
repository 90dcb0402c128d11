"""Generalized Taft algebra actions on a quantum GWA, and their verification.

g acts by an automorphism (eta-type, or for q = -1 the Omega-twisted type);
x acts by the g-skew derivation X(ab) = g(a) X(b) + X(a) b determined by its
values on t, u, v.  Both are extended to normal forms from the generators.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Union

from .gwa import GwaAlgebra, GwaElement
from .qpoly import TPoly, shift_trunc, twist
from .scalars import CycloNum, lcm


class InvalidSpec(ValueError):
    pass


class UnverifiedSpec(ValueError):
    pass


@dataclass(frozen=True)
class TaftAlgebra:
    """T_n(lambda, m) = k<g, x | g^n - 1, x^m, gx - lambda xg>."""

    n: int
    m: int
    lam: CycloNum

    def __post_init__(self):
        if self.m <= 1:
            raise InvalidSpec(f"m must exceed 1, got m={self.m}")
        if self.n % self.m:
            raise InvalidSpec(f"m={self.m} must divide n={self.n}")
        if self.lam.root_order() != self.m:
            raise InvalidSpec(f"lambda = {self.lam} is not a primitive {self.m}-th root of unity")

    @property
    def field(self):
        return self.lam.field

    @property
    def is_taft(self) -> bool:
        return self.m == self.n


@dataclass(frozen=True)
class EtaSpec:
    """g = eta_(gamma, mu), x(t) = phi; x(u), x(v) follow from the closed forms."""

    gamma: CycloNum
    mu: CycloNum
    phi: TPoly

    kind = "eta"


@dataclass(frozen=True)
class OmegaSpec:
    """g = Omega o eta_(gamma, mu) (q = -1 only), x(t) = 0, x(u) = alpha11 u + ...

    ``alpha21_rule`` selects the closed form used for the v-coefficient of x(u):
    "theorem" gives mu^-1 sigma^-1(alpha11); "relations" gives
    mu^-1 gamma^D sigma^-1(alpha11), the form the defining relations force.
    """

    gamma: CycloNum
    mu: CycloNum
    alpha11: TPoly
    sign: int
    alpha21_rule: str = "theorem"

    kind = "omega"


ActionSpec = Union[EtaSpec, OmegaSpec]


def eta_alphas(A: GwaAlgebra, gamma: CycloNum, mu: CycloNum, phi: TPoly) -> tuple[TPoly, TPoly]:
    """(alpha11, alpha22) with x(u) = alpha11 u and x(v) = alpha22 v.

    alpha11 = (1 - mu^-1 gamma^D q^(d-1)) / (1 - gamma) phi^(1)
    alpha22 = (1 - mu q^(1-d)) / (1 - gamma) phi^(1)
    Both vanish when phi = 0 or gamma = 1 (the formulas have no meaning there).
    """
    zero = TPoly.zero(A.field)
    if phi.is_zero() or gamma == 1:
        return zero, zero
    d = phi.degree
    lead = shift_trunc(phi, 1)
    a11 = (1 - mu.inverse() * gamma**A.D * A.q_power(d - 1)) / (1 - gamma)
    a22 = (1 - mu * A.q_power(1 - d)) / (1 - gamma)
    return lead * a11, lead * a22


def omega_alphas(A: GwaAlgebra, spec: OmegaSpec) -> dict[str, TPoly]:
    a11 = spec.alpha11
    mu_inv = spec.mu.inverse()
    if spec.alpha21_rule == "theorem":
        a21 = A.sigma(a11, -1) * mu_inv
    elif spec.alpha21_rule == "relations":
        a21 = A.sigma(a11, -1) * (mu_inv * spec.gamma**A.D)
    else:
        raise InvalidSpec(f"unknown alpha21 rule {spec.alpha21_rule!r}")
    return {
        "alpha11": a11,
        "alpha22": -a11,
        "alpha12": -(A.sigma(a11, 1) * spec.mu),
        "alpha21": a21,
    }


def validate_spec(A: GwaAlgebra, spec: ActionSpec) -> None:
    """Structural checks only; algebraic failures are left to the verifier."""
    for name in ("gamma", "mu"):
        c = getattr(spec, name)
        if c.field is not A.field:
            raise InvalidSpec(f"{name} lives in {c.field}, expected {A.field}")
        if c.is_zero():
            raise InvalidSpec(f"{name} must be nonzero")
    if isinstance(spec, EtaSpec):
        if spec.phi.field is not A.field:
            raise InvalidSpec("phi lives in a different field")
    elif isinstance(spec, OmegaSpec):
        if A.q != -1:
            raise InvalidSpec("Omega-type actions exist only for q = -1")
        if spec.sign not in (1, -1):
            raise InvalidSpec(f"sign must be +1 or -1, got {spec.sign}")
        if A.sigma(spec.alpha11) != spec.alpha11 * spec.sign:
            raise InvalidSpec(f"sigma(alpha11) != {spec.sign:+d} * alpha11")
    else:
        raise InvalidSpec(f"unknown action spec {spec!r}")


class Action:
    """The g- and x-operators of a spec on A, with per-generator caches."""

    def __init__(self, A: GwaAlgebra, spec: ActionSpec):
        validate_spec(A, spec)
        self.A = A
        self.spec = spec
        fld = A.field
        u, v = A.u(), A.v()
        gamma, mu = spec.gamma, spec.mu
        if isinstance(spec, EtaSpec):
            self.g_t = gamma
            self.g_u = u * (mu.inverse() * gamma**A.D)
            self.g_v = v * mu
            self.alpha11, self.alpha22 = eta_alphas(A, gamma, mu, spec.phi)
            self.x_t = A.poly(spec.phi)
            self.x_u = A.poly(self.alpha11) * u
            self.x_v = A.poly(self.alpha22) * v
            self.alphas = {"alpha11": self.alpha11, "alpha22": self.alpha22}
        else:
            self.g_t = -gamma
            self.g_u = v * (mu.inverse() * gamma**A.D)
            self.g_v = u * mu
            al = omega_alphas(A, spec)
            self.alphas = al
            self.alpha11, self.alpha22 = al["alpha11"], al["alpha22"]
            self.x_t = A.zero()
            self.x_u = A.poly(al["alpha11"]) * u + A.poly(al["alpha21"]) * v
            self.x_v = A.poly(al["alpha12"]) * u + A.poly(al["alpha22"]) * v
        self._g_tt = A.monomial(1, 0, self.g_t)
        self._x_tpow: list[GwaElement] = [A.zero()]
        self._g_w: dict[int, GwaElement] = {0: A.one()}
        self._x_w: dict[int, GwaElement] = {0: A.zero()}
        self.field = fld

    def image_of(self, name: str) -> tuple[GwaElement, GwaElement]:
        """(g(s), x(s)) for a generator name."""
        if name == "t":
            return self._g_tt, self.x_t
        if name == "u":
            return self.g_u, self.x_u
        if name == "v":
            return self.g_v, self.x_v
        raise KeyError(name)

    def _g_word(self, k: int) -> GwaElement:
        hit = self._g_w.get(k)
        if hit is None:
            step = self.g_u if k > 0 else self.g_v
            prev = self._g_word(k - 1 if k > 0 else k + 1)
            hit = step * prev
            self._g_w[k] = hit
        return hit

    def _x_word(self, k: int) -> GwaElement:
        # X(s s^(j-1)) = g(s) X(s^(j-1)) + X(s) s^(j-1)
        hit = self._x_w.get(k)
        if hit is None:
            if k > 0:
                g_s, x_s, prev_k = self.g_u, self.x_u, k - 1
            else:
                g_s, x_s, prev_k = self.g_v, self.x_v, k + 1
            hit = g_s * self._x_word(prev_k) + x_s * self.A.monomial(0, prev_k)
            self._x_w[k] = hit
        return hit

    def _x_tpower(self, a: int) -> GwaElement:
        while len(self._x_tpow) <= a:
            j = len(self._x_tpow)
            prev = self._x_tpow[j - 1]
            self._x_tpow.append(self._g_tt * prev + self.x_t * self.A.monomial(j - 1, 0))
        return self._x_tpow[a]

    def g(self, e: GwaElement) -> GwaElement:
        A = self.A
        out = A.zero()
        for k, f in e.components.items():
            out = out + A.poly(twist(f, self.g_t)) * self._g_word(k)
        return out

    def x_poly(self, f: TPoly) -> GwaElement:
        out = self.A.zero()
        for a, c in f.terms.items():
            if a:
                out = out + self._x_tpower(a) * c
        return out

    def x(self, e: GwaElement) -> GwaElement:
        A = self.A
        out = A.zero()
        for k, f in e.components.items():
            # X(f w_k) = g(f) X(w_k) + X(f) w_k
            if k:
                out = out + A.poly(twist(f, self.g_t)) * self._x_word(k)
            xf = self.x_poly(f)
            if xf:
                out = out + xf * A.monomial(0, k)
        return out

    def x_power(self, e: GwaElement, j: int) -> GwaElement:
        for _ in range(j):
            if e.is_zero():
                break
            e = self.x(e)
        return e

    def g_power(self, e: GwaElement, j: int) -> GwaElement:
        for _ in range(j):
            e = self.g(e)
        return e

    def g_order(self, bound: int | None = None) -> int | None:
        """Order of g as an operator, found by iterating on t, u, v."""
        gens = list(self.A.generators().values())
        if bound is None:
            bound = 4 * lcm(2, self.field.N)
        cur = gens
        for j in range(1, bound + 1):
            cur = [self.g(c) for c in cur]
            if cur == gens:
                return j
        return None


def apply_g(A: GwaAlgebra, spec: ActionSpec, e: GwaElement) -> GwaElement:
    return Action(A, spec).g(e)


def apply_x(A: GwaAlgebra, spec: ActionSpec, e: GwaElement) -> GwaElement:
    return Action(A, spec).x(e)


def order_of_eta(gamma: CycloNum, mu: CycloNum) -> int:
    og, om = gamma.root_order(), mu.root_order()
    if og is None or om is None:
        raise InvalidSpec("eta_(gamma, mu) has finite order only for roots of unity gamma, mu")
    return lcm(og, om)


# -- verification -------------------------------------------------------------

CHECK_NAMES = (
    "g_order",
    "g_respects_relations",
    "relation_vuh",
    "relation_uvh",
    "relation_ut",
    "relation_vt",
    "skew_commutation_t",
    "skew_commutation_u",
    "skew_commutation_v",
    "x_nilpotent_t",
    "x_nilpotent_u",
    "x_nilpotent_v",
    "weakly_graded",
    "graded",
    "inner_faithful",
)

# flags that describe the action rather than decide whether it is one
INFORMATIONAL = frozenset({"graded", "inner_faithful"})


@dataclass
class Check:
    name: str
    passed: bool
    witness: str | None = None
    detail: str | None = None

    def to_dict(self) -> dict:
        out = {"name": self.name, "passed": self.passed}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.detail is not None:
            out["detail"] = self.detail
        return out


@dataclass
class VerificationReport:
    checks: list[Check]
    diagnostics: dict[str, str] = dc_field(default_factory=dict)

    def __post_init__(self):
        names = [c.name for c in self.checks]
        if sorted(names) != sorted(CHECK_NAMES):
            raise AssertionError(f"incomplete verification report: {names}")

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    @property
    def ok(self) -> bool:
        """True iff the data define a module-algebra structure."""
        return all(c.passed for c in self.checks if c.name not in INFORMATIONAL)

    def failed(self) -> list[str]:
        return [c.name for c in self.checks if not c.passed and c.name not in INFORMATIONAL]

    def to_dict(self) -> dict:
        out = {
            "module_algebra": self.ok,
            "checks": [c.to_dict() for c in self.checks],
        }
        if self.diagnostics:
            out["diagnostics"] = dict(self.diagnostics)
        return out


def _zero_check(name: str, residuals: list[tuple[str, GwaElement]]) -> Check:
    for label, r in residuals:
        if r:
            return Check(name, False, witness=f"{label} = {r}")
    return Check(name, True)


def _x_pair(act: Action, a: str, b: str) -> GwaElement:
    """X(ab) = g(a) X(b) + X(a) b evaluated on the word ab of generators."""
    gens = act.A.generators()
    g_a, x_a = act.image_of(a)
    _, x_b = act.image_of(b)
    return g_a * x_b + x_a * gens[b]


def _relation_residuals(act: Action) -> dict[str, GwaElement]:
    A = act.A
    h, sh = A.poly(A.h), A.poly(A.sigma(A.h))
    q_inv = A.q.inverse()
    return {
        "relation_vuh": _x_pair(act, "v", "u") - act.x(h),
        "relation_uvh": _x_pair(act, "u", "v") - act.x(sh),
        "relation_ut": _x_pair(act, "u", "t") - _x_pair(act, "t", "u") * A.q,
        "relation_vt": _x_pair(act, "v", "t") - _x_pair(act, "t", "v") * q_inv,
    }


def _in_grades(e: GwaElement, allowed: set[int]) -> bool:
    return set(e.components) <= allowed


def verify_module_algebra(A: GwaAlgebra, T: TaftAlgebra, spec: ActionSpec) -> VerificationReport:
    act = Action(A, spec)
    gens = A.generators()
    checks: list[Check] = []

    order = act.g_order()
    if order is not None and T.n % order == 0:
        checks.append(Check("g_order", True, detail=f"order {order} divides n={T.n}"))
    else:
        checks.append(Check("g_order", False, witness=f"order of g is {order}, n={T.n}"))

    g_t, g_u, g_v = act.image_of("t")[0], act.g_u, act.g_v
    q_inv = A.q.inverse()
    checks.append(_zero_check("g_respects_relations", [
        ("g(u)g(t) - q g(t)g(u)", g_u * g_t - g_t * g_u * A.q),
        ("g(v)g(t) - q^-1 g(t)g(v)", g_v * g_t - g_t * g_v * q_inv),
        ("g(v)g(u) - g(h)", g_v * g_u - act.g(A.poly(A.h))),
        ("g(u)g(v) - g(sigma(h))", g_u * g_v - act.g(A.poly(A.sigma(A.h)))),
    ]))

    for name, r in _relation_residuals(act).items():
        checks.append(_zero_check(name, [(name, r)]))

    for s, e in gens.items():
        r = act.g(act.x(e)) - act.x(act.g(e)) * T.lam
        checks.append(_zero_check(f"skew_commutation_{s}", [(f"(gx - lambda xg)({s})", r)]))

    for s, e in gens.items():
        r = act.x_power(e, T.m)
        checks.append(_zero_check(f"x_nilpotent_{s}", [(f"x^{T.m}({s})", r)]))

    weak = []
    strict = []
    for s, e in gens.items():
        g_s, x_s = act.image_of(s)
        if s == "t":
            allowed_weak = allowed_strict = {0}
        else:
            allowed_weak = {-1, 1}
            allowed_strict = {1} if s == "u" else {-1}
        for label, img in ((f"g({s})", g_s), (f"x({s})", x_s)):
            if not _in_grades(img, allowed_weak):
                weak.append(f"{label} = {img}")
            if not _in_grades(img, allowed_strict):
                strict.append(f"{label} = {img}")
    checks.append(Check("weakly_graded", not weak, witness=weak[0] if weak else None))
    checks.append(Check("graded", not strict, witness=strict[0] if strict else None))

    nonzero = [s for s in gens if act.image_of(s)[1]]
    if order != T.n:
        checks.append(Check("inner_faithful", False, witness=f"g has order {order}, n={T.n}"))
    elif not nonzero:
        checks.append(Check("inner_faithful", False, witness="x acts as zero on t, u, v"))
    else:
        checks.append(Check("inner_faithful", True,
                            detail=f"x({nonzero[0]}) = {act.image_of(nonzero[0])[1]}; ord(g) = {order}"))

    report = VerificationReport(checks)
    if isinstance(spec, OmegaSpec):
        report.diagnostics["alpha21_forced"] = omega_alpha21_forced(A, spec, T.lam)
    return report


def omega_alpha21_forced(A: GwaAlgebra, spec: OmegaSpec, lam: CycloNum) -> str:
    """Which alpha21 closed form(s) make the relation and commutation identities hold."""
    ok = []
    for rule in ("theorem", "relations"):
        trial = OmegaSpec(spec.gamma, spec.mu, spec.alpha11, spec.sign, rule)
        act = Action(A, trial)
        res = _relation_residuals(act)
        for e in (A.u(), A.v()):
            res[str(e)] = act.g(act.x(e)) - act.x(act.g(e)) * lam
        if all(r.is_zero() for r in res.values()):
            ok.append(rule)
    if len(ok) == 2:
        return "both"
    return ok[0] if ok else "neither"


@dataclass
class InnerFaithfulness:
    inner_faithful: bool
    g_order: int | None
    witness: str | None

    def to_dict(self) -> dict:
        return {"inner_faithful": self.inner_faithful, "g_order": self.g_order, "witness": self.witness}


def is_inner_faithful(A: GwaAlgebra, T: TaftAlgebra, spec: ActionSpec,
                      report: VerificationReport | None = None) -> InnerFaithfulness:
    report = report or verify_module_algebra(A, T, spec)
    if not report.ok:
        raise UnverifiedSpec(f"spec fails verification: {', '.join(report.failed())}")
    act = Action(A, spec)
    order = act.g_order()
    if order != T.n:
        return InnerFaithfulness(False, order, f"g has order {order} but n = {T.n}")
    for s, e in A.generators().items():
        img = act.x(e)
        if img:
            return InnerFaithfulness(True, order, f"x({s}) = {img}")
    return InnerFaithfulness(False, order, "x acts as zero on t, u, v")
