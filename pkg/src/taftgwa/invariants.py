"""Fixed rings of Taft actions.

For an eta-type Taft action the fixed ring is commutative, generated by
T = t^n, V = t^a v^k and U = t^b u^k with UV = H(T).  Presentations are
checked against an independent computation of the fixed subspace of each
graded piece by exact linear algebra, inside a finite grade/degree box.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .gwa import GwaAlgebra, GwaElement
from .hopfact import (Action, Check, EtaSpec, InvalidSpec, OmegaSpec, TaftAlgebra,
                      UnverifiedSpec, verify_module_algebra)
from .linalg import nullspace, rank
from .qpoly import TPoly, format_tpoly


class FixedRingError(RuntimeError):
    """Internal inconsistency while building a presentation."""


@dataclass
class FixedRingPresentation:
    k: int
    a: int
    b: int
    gen_T: GwaElement
    gen_U: GwaElement
    gen_V: GwaElement
    H: TPoly          # polynomial in the variable T = t^n
    n: int
    branch: str       # "x_nonzero" or "x_zero_on_uv"

    def H_of_T(self) -> GwaElement:
        """H with T replaced by t^n, as an element of A."""
        return self.gen_T.algebra.poly(self.H.inflate(self.n))

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "a": self.a,
            "b": self.b,
            "branch": self.branch,
            "T": str(self.gen_T),
            "U": str(self.gen_U),
            "V": str(self.gen_V),
            "H": format_tpoly(self.H, var="T"),
        }


@dataclass
class GradedFixedBasis:
    grade: int
    t_bound: int
    basis: list[GwaElement]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def to_dict(self) -> dict:
        return {"grade": self.grade, "t_bound": self.t_bound, "basis": [str(e) for e in self.basis]}


def _first_exponent(pred, limit: int, what: str) -> int:
    for e in range(limit):
        if pred(e):
            return e
    raise FixedRingError(f"no exponent below {limit} satisfies {what}")


def _check_fixed_ring_preconditions(A: GwaAlgebra, T: TaftAlgebra, spec) -> Action:
    if not isinstance(spec, EtaSpec):
        raise InvalidSpec("fixed_ring handles eta-type actions; use omega_fixed_check for Omega")
    if not T.is_taft:
        raise InvalidSpec(f"fixed_ring needs a Taft algebra (m = n), got m={T.m}, n={T.n}")
    if spec.gamma == 1:
        raise InvalidSpec("fixed_ring needs gamma != 1")
    report = verify_module_algebra(A, T, spec)
    if not report.ok:
        raise UnverifiedSpec(f"spec fails verification: {', '.join(report.failed())}")
    if not report["inner_faithful"].passed:
        raise UnverifiedSpec(f"action is not inner-faithful: {report['inner_faithful'].witness}")
    return Action(A, spec)


def fixed_ring(A: GwaAlgebra, T: TaftAlgebra, spec: EtaSpec) -> FixedRingPresentation:
    act = _check_fixed_ring_preconditions(A, T, spec)
    gamma, mu = spec.gamma, spec.mu
    N = A.field.N
    if act.alpha11 or act.alpha22:
        branch = "x_nonzero"
        k = A.q_order
        a = _first_exponent(lambda e: gamma**e * mu**k == 1, N, "gamma^a mu^k = 1")
        b = _first_exponent(lambda e: gamma ** (e + k * A.D) * mu ** (-k) == 1, N,
                            "gamma^(b + kD) mu^-k = 1")
    else:
        branch = "x_zero_on_uv"
        k = mu.root_order()
        a = b = 0
    gen_T = A.monomial(T.n, 0)
    gen_V = A.monomial(a, -k)
    gen_U = A.monomial(b, k)
    uv = gen_U * gen_V
    if set(uv.components) != {0}:
        raise FixedRingError(f"U*V = {uv} is not a polynomial in t")
    try:
        H = uv.component(0).deflate(T.n)
    except ValueError as exc:
        raise FixedRingError(f"U*V = {uv} is not a polynomial in t^{T.n}: {exc}") from None
    return FixedRingPresentation(k, a, b, gen_T, gen_U, gen_V, H, T.n, branch)


# -- graded fixed subspaces ---------------------------------------------------


def _coords(e: GwaElement) -> dict[tuple[int, int], object]:
    return {(k, a): c for k, a, c in e.terms()}


def graded_fixed_space(A: GwaAlgebra, T: TaftAlgebra, spec, grade: int, t_bound: int) -> GradedFixedBasis:
    """Basis of the fixed elements f(t) w_grade with deg f <= t_bound.

    For Omega-type actions g swaps the grades j and -j, so the unknowns range
    over both A_j and A_-j (grade |j| is reported).
    """
    act = Action(A, spec)
    fld = A.field
    grades = [grade]
    if isinstance(spec, OmegaSpec) and grade:
        grades = [-abs(grade), abs(grade)]
    cols = [A.monomial(e, j) for j in grades for e in range(t_bound + 1)]
    images = []
    for w in cols:
        img_g = _coords(act.g(w) - w)
        img_x = _coords(act.x(w))
        img = {("g",) + key: c for key, c in img_g.items()}
        img.update({("x",) + key: c for key, c in img_x.items()})
        images.append(img)
    keys = sorted({key for img in images for key in img})
    rows = [[img.get(key, fld.zero) for img in images] for key in keys]
    basis = []
    for vec in nullspace(rows, len(cols), fld):
        e = A.zero()
        for c, w in zip(vec, cols):
            if c:
                e = e + w * c
        basis.append(e)
    return GradedFixedBasis(abs(grade) if len(grades) == 2 else grade, t_bound, basis)


def _span_dimension(elements: list[GwaElement]) -> int:
    if not elements:
        return 0
    fld = elements[0].field
    keys = sorted({key for e in elements for key in _coords(e)})
    rows = [[_coords(e).get(key, fld.zero) for key in keys] for e in elements]
    return rank(rows, fld)


def presentation_monomials(pres: FixedRingPresentation, grade: int, t_bound: int) -> list[GwaElement]:
    """Normal forms of U^i V^j T^l in the given grade whose t-degree is at most t_bound."""
    if grade % pres.k:
        return []
    s = grade // pres.k
    out = []
    j = max(0, -s)
    while True:
        i = j + s
        base = (pres.gen_U ** i) * (pres.gen_V ** j)
        if base.t_degree() is None or base.t_degree() > t_bound:
            break
        l = 0
        while True:
            mono = base * (pres.gen_T ** l)
            if mono.t_degree() > t_bound:
                break
            out.append(mono)
            l += 1
        j += 1
    return out


@dataclass
class PresentationReport:
    checks: list[Check]
    spanning: list[dict] = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {"ok": self.ok, "checks": [c.to_dict() for c in self.checks], "spanning": self.spanning}


PRESENTATION_CHECKS = ("generators_fixed", "commutative", "relation_uv_h", "sigma_periodicity", "spanning")


def verify_presentation(A: GwaAlgebra, T: TaftAlgebra, spec: EtaSpec, pres: FixedRingPresentation,
                        grade_bound: int = 6, t_bound: int = 6) -> PresentationReport:
    act = Action(A, spec)
    gens = {"T": pres.gen_T, "U": pres.gen_U, "V": pres.gen_V}
    checks = []

    bad = None
    for name, e in gens.items():
        if act.g(e) != e:
            bad = f"g({name}) - {name} = {act.g(e) - e}"
            break
        if act.x(e):
            bad = f"x({name}) = {act.x(e)}"
            break
    checks.append(Check("generators_fixed", bad is None, witness=bad))

    U, V, Tt = pres.gen_U, pres.gen_V, pres.gen_T
    bad = None
    for label, r in (("UV - VU", U * V - V * U), ("UT - TU", U * Tt - Tt * U), ("VT - TV", V * Tt - Tt * V)):
        if r:
            bad = f"{label} = {r}"
            break
    checks.append(Check("commutative", bad is None, witness=bad))

    r = U * V - pres.H_of_T()
    checks.append(Check("relation_uv_h", not r, witness=None if not r else f"UV - H(T) = {r}"))

    bad = None
    for i in range(pres.k + 1):
        lhs, rhs = A.sigma(A.h, -i), A.sigma(A.h, pres.k - i)
        if lhs != rhs:
            bad = f"i={i}: sigma^-{i}(h) = {lhs}, sigma^{pres.k - i}(h) = {rhs}"
            break
    checks.append(Check("sigma_periodicity", bad is None, witness=bad))

    rows = []
    bad = None
    for j in range(-grade_bound, grade_bound + 1):
        fixed = graded_fixed_space(A, T, spec, j, t_bound).dimension
        spanned = _span_dimension(presentation_monomials(pres, j, t_bound))
        rows.append({"grade": j, "fixed_dim": fixed, "presentation_dim": spanned})
        if fixed != spanned and bad is None:
            bad = f"grade {j}: fixed subspace has dimension {fixed}, presentation spans {spanned}"
    checks.append(Check("spanning", bad is None, witness=bad,
                        detail=f"grades |j| <= {grade_bound}, t-degree <= {t_bound}"))
    return PresentationReport(checks, rows)


# -- Omega case ---------------------------------------------------------------


def omega_fixed_check(A: GwaAlgebra, spec: OmegaSpec) -> PresentationReport:
    """W = mu u + v and T = t are fixed and satisfy WT + TW = 0."""
    if A.q != -1:
        raise InvalidSpec("omega_fixed_check needs q = -1")
    if not isinstance(spec, OmegaSpec):
        raise InvalidSpec("omega_fixed_check needs an Omega-type spec")
    if A.D % 2:
        raise InvalidSpec("omega_fixed_check needs deg h even")
    if spec.sign != 1:
        raise InvalidSpec("omega_fixed_check needs sigma(alpha11) = alpha11")
    fld = A.field
    minus_one = fld.from_rational(-1)
    report = verify_module_algebra(A, TaftAlgebra(2, 2, minus_one), spec)
    if not report.ok:
        raise UnverifiedSpec(f"spec fails verification: {', '.join(report.failed())}")
    act = Action(A, spec)
    W = A.u() * spec.mu + A.v()
    Tt = A.t()
    checks = []
    for name, e in (("W", W), ("T", Tt)):
        img = act.x(e)
        checks.append(Check(f"x_annihilates_{name}", not img, witness=None if not img else f"x({name}) = {img}"))
        r = act.g(e) - e
        checks.append(Check(f"g_fixes_{name}", not r, witness=None if not r else f"g({name}) - {name} = {r}"))
    skew = W * Tt + Tt * W
    checks.append(Check("skew_relation", not skew, witness=None if not skew else f"WT + TW = {skew}"))
    return PresentationReport(checks)
