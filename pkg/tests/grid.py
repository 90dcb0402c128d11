"""Shared builders and hypothesis strategies for the test suite."""

from hypothesis import strategies as st

from taftgwa.gwa import GwaAlgebra
from taftgwa.hopfact import TaftAlgebra
from taftgwa.qpoly import TPoly
from taftgwa.scalars import euler_phi, field, lcm

Q_ORDERS = (2, 3, 4, 6)
NM_PAIRS = ((2, 2), (4, 2), (3, 3), (6, 3))
# h set of the sweep, as {exponent: coefficient}
H_SET = ({1: 1}, {1: 1, 0: -1}, {2: 1}, {3: 1}, {6: 1, 3: 1}, {4: 1, 2: 1})


def setup(q_order, h_terms, n=None, m=None, lam_power=1):
    """(A, T) over Q(zeta_N), N = lcm(n, ord q, 2); T is None without n."""
    N = lcm(n or 1, q_order, 2)
    F = field(N)
    A = GwaAlgebra(F.root_of_unity(q_order), TPoly(F, h_terms))
    T = None
    if n is not None:
        T = TaftAlgebra(n, m, F.root_of_unity(m, lam_power))
    return A, T


def sweep_grid():
    for qo in Q_ORDERS:
        for n, m in NM_PAIRS:
            for h in H_SET:
                A, T = setup(qo, h, n, m)
                yield qo, n, m, h, A, T


def scalars(fld, bound=3):
    return st.lists(st.integers(-bound, bound), min_size=euler_phi(fld.N),
                    max_size=euler_phi(fld.N)).map(fld.from_coeffs)


def nonzero_scalars(fld, bound=3):
    return scalars(fld, bound).filter(bool)


def tpolys(fld, max_deg=5, bound=3):
    return st.dictionaries(st.integers(0, max_deg), scalars(fld, bound), max_size=4).map(
        lambda d: TPoly(fld, d))


def elements(A, max_grade=2, max_deg=3):
    comps = st.dictionaries(st.integers(-max_grade, max_grade), tpolys(A.field, max_deg), max_size=3)
    return comps.map(A.element)


def word(max_len=8):
    return st.text(alphabet="tuv", max_size=max_len)


def enumerated_patterns(A, T, d_max):
    """(gamma, mu, support) for every all-ones sub-pattern of an emitted family."""
    from itertools import combinations

    from taftgwa.classify import enumerate_eta_actions

    out = set()
    for f in enumerate_eta_actions(A, T, d_max):
        rest = [s for s in f.support if s != f.degree]
        for r in range(len(rest) + 1):
            for c in combinations(rest, r):
                out.add((f.gamma, f.mu, frozenset(c + (f.degree,))))
    return out


def brute_force_patterns(A, T, d_max):
    """(gamma, mu, support) over all roots gamma, mu and nonempty supports in [0, d_max]
    whose all-ones spec verifies and is inner-faithful."""
    from itertools import chain, combinations

    from taftgwa.hopfact import EtaSpec, InvalidSpec, verify_module_algebra

    F = A.field
    roots = F.roots_of_unity()
    found = set()
    subsets = chain.from_iterable(combinations(range(d_max + 1), r) for r in range(1, d_max + 2))
    for S in subsets:
        phi = TPoly(F, {i: 1 for i in S})
        for g in roots:
            for mu in roots:
                try:
                    rep = verify_module_algebra(A, T, EtaSpec(g, mu, phi))
                except InvalidSpec:
                    continue
                if rep.ok and rep["inner_faithful"].passed:
                    found.add((g, mu, frozenset(S)))
    return found
