"""Exact arithmetic in a cyclotomic field Q(zeta_N).

Elements are stored in the power basis 1, z, ..., z^(phi(N)-1) modulo the
N-th cyclotomic polynomial, as integer numerators over one positive common
denominator.  Because Phi_N is monic with integer coefficients, products
reduce without introducing new denominators.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import NamedTuple, Sequence


class ScalarError(ArithmeticError):
    pass


def lcm(*values: int) -> int:
    out = 1
    for v in values:
        out = out * v // gcd(out, v)
    return out


# -- dense polynomials over Q, low degree first ------------------------------

def _trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(num: Sequence, den: Sequence) -> tuple[list, list]:
    num = [Fraction(c) for c in num]
    den = _trim([Fraction(c) for c in den])
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    quot = [Fraction(0)] * max(len(num) - len(den) + 1, 0)
    lead = den[-1]
    for shift in range(len(num) - len(den), -1, -1):
        c = num[shift + len(den) - 1] / lead
        quot[shift] = c
        if c:
            for i, d in enumerate(den):
                num[shift + i] -= c * d
    return _trim(quot), _trim(num[: len(den) - 1])


def _poly_mul(a: Sequence, b: Sequence) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _poly_sub(a: Sequence, b: Sequence) -> list:
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


@lru_cache(maxsize=None)
def cyclotomic_modulus(N: int) -> tuple[int, ...]:
    """Coefficients of Phi_N, constant term first.

    Obtained by dividing x^N - 1 by Phi_d for every proper divisor d of N.
    """
    if N < 1:
        raise ValueError(f"cyclotomic order must be positive, got {N}")
    poly: list = [Fraction(-1)] + [Fraction(0)] * (N - 1) + [Fraction(1)]
    for d in range(1, N):
        if N % d == 0:
            poly, rem = _poly_divmod(poly, cyclotomic_modulus(d))
            if rem:
                raise AssertionError(f"Phi_{d} does not divide x^{N}-1")
    assert all(c.denominator == 1 for c in poly)
    return tuple(int(c) for c in poly)


def euler_phi(N: int) -> int:
    return len(cyclotomic_modulus(N)) - 1


# -- the field ----------------------------------------------------------------

class CyclotomicField:
    """The field Q(zeta_N).  Use :func:`field` to get the shared instance."""

    def __init__(self, N: int):
        self.N = N
        self.modulus = cyclotomic_modulus(N)
        self.degree = len(self.modulus) - 1
        deg = self.degree
        # x^k mod Phi_N for deg <= k <= 2*deg - 2, integer vectors
        self._fold: list[tuple[int, ...]] = []
        cur = [0] * deg
        if deg:
            cur = [-c for c in self.modulus[:deg]]
        for _ in range(max(deg - 1, 0)):
            self._fold.append(tuple(cur))
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                for i in range(deg):
                    cur[i] -= top * self.modulus[i]
        self.zero = CycloNum(self, (0,) * deg, 1)
        self.one = self.from_rational(1)
        self._zeta_powers = [self._power_of_zeta(j) for j in range(N)]

    def __repr__(self) -> str:
        return f"CyclotomicField({self.N})"

    def __reduce__(self):
        return (field, (self.N,))

    def _power_of_zeta(self, j: int) -> CycloNum:
        vec = [0] * (j + 1)
        vec[j] = 1
        return self._from_long(vec, 1)

    def _reduce_long(self, vec: Sequence[int]) -> list[int]:
        deg = self.degree
        out = list(vec[:deg]) + [0] * max(deg - len(vec), 0)
        if len(vec) > deg:
            # x^k for k beyond the fold table: reduce top-down
            if len(vec) > 2 * deg - 1:
                return self._reduce_slow(vec)
            for k in range(deg, len(vec)):
                c = vec[k]
                if c:
                    fold = self._fold[k - deg]
                    for i in range(deg):
                        out[i] += c * fold[i]
        return out

    def _reduce_slow(self, vec: Sequence[int]) -> list[int]:
        vec = list(vec)
        deg = self.degree
        for k in range(len(vec) - 1, deg - 1, -1):
            c = vec[k]
            if c:
                vec[k] = 0
                for i in range(deg):
                    vec[k - deg + i] -= c * self.modulus[i]
        return vec[:deg] + [0] * max(deg - len(vec), 0)

    def _from_long(self, nums: Sequence[int], den: int) -> CycloNum:
        return CycloNum._make(self, self._reduce_long(nums), den)

    def from_rational(self, value) -> CycloNum:
        value = Fraction(value)
        nums = [0] * self.degree
        nums[0] = value.numerator
        return CycloNum._make(self, nums, value.denominator)

    def from_coeffs(self, coeffs: Sequence) -> CycloNum:
        """Element with the given power-basis coefficients (reduced if long)."""
        fracs = [Fraction(c) for c in coeffs]
        den = lcm(*(f.denominator for f in fracs)) if fracs else 1
        return self._from_long([int(f * den) for f in fracs], den)

    def zeta(self, j: int = 1) -> CycloNum:
        """zeta_N ** j."""
        return self._zeta_powers[j % self.N]

    def root_of_unity(self, order: int, power: int = 1) -> CycloNum:
        """zeta_order ** power; order must divide N."""
        if order < 1 or self.N % order:
            raise ScalarError(f"Q(zeta_{self.N}) has no primitive {order}-th root of unity")
        return self.zeta(power * (self.N // order))

    def roots_of_unity(self) -> list[CycloNum]:
        """All roots of unity in the field, 1 first.

        For even N these are the powers of zeta_N; for odd N also their negatives.
        """
        out = [self.zeta(j) for j in range(self.N)]
        if self.N % 2:
            out += [-r for r in out]
        return out

    def coerce(self, value) -> CycloNum:
        if isinstance(value, CycloNum):
            if value.field is not self:
                raise ScalarError(f"cannot mix {value.field} and {self}")
            return value
        if isinstance(value, (int, Fraction)):
            return self.from_rational(value)
        raise TypeError(f"cannot coerce {type(value).__name__} into {self}")


@lru_cache(maxsize=None)
def field(N: int) -> CyclotomicField:
    return CyclotomicField(N)


def ambient_order(n: int, q_order: int) -> int:
    """The session modulus lcm(n, ord(q), 2)."""
    return lcm(n, q_order, 2)


class CycloNum:
    __slots__ = ("field", "nums", "den", "_hash")

    def __init__(self, fld: CyclotomicField, nums: Sequence[int], den: int):
        self.field = fld
        self.nums = tuple(nums)
        self.den = den
        self._hash = None

    @classmethod
    def _make(cls, fld: CyclotomicField, nums: list[int], den: int) -> CycloNum:
        if den < 0:
            nums = [-c for c in nums]
            den = -den
        g = den
        for c in nums:
            if c:
                g = gcd(g, c)
                if g == 1:
                    break
        if g != 1:
            nums = [c // g for c in nums]
            den //= g
        if not any(nums):
            den = 1
        return cls(fld, nums, den)

    # -- inspection --

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self.den) for c in self.nums)

    def is_zero(self) -> bool:
        return not any(self.nums)

    def __bool__(self) -> bool:
        return any(self.nums)

    def is_rational(self) -> bool:
        return not any(self.nums[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ScalarError(f"{self} is not rational")
        return Fraction(self.nums[0], self.den) if self.nums else Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, CycloNum):
            return self.field is other.field and self.den == other.den and self.nums == other.nums
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.as_rational() == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(self.as_rational())
            else:
                self._hash = hash((self.field.N, self.nums, self.den))
        return self._hash

    def __repr__(self) -> str:
        return f"CycloNum(N={self.field.N}, {format_scalar(self)!r})"

    def __str__(self) -> str:
        return format_scalar(self)

    # -- arithmetic --

    def _coerce(self, other) -> CycloNum | None:
        if isinstance(other, CycloNum):
            if other.field is not self.field:
                raise ScalarError(f"cannot mix {self.field} and {other.field}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_rational(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return CycloNum._make(self.field, [a + b for a, b in zip(self.nums, o.nums)], self.den)
        return CycloNum._make(
            self.field,
            [a * o.den + b * self.den for a, b in zip(self.nums, o.nums)],
            self.den * o.den,
        )

    __radd__ = __add__

    def __neg__(self) -> CycloNum:
        return CycloNum(self.field, tuple(-c for c in self.nums), self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            return CycloNum._make(self.field, [c * other for c in self.nums], self.den)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.nums, o.nums
        if not any(a[1:]):
            return CycloNum._make(self.field, [a[0] * c for c in b], self.den * o.den)
        if not any(b[1:]):
            return CycloNum._make(self.field, [b[0] * c for c in a], self.den * o.den)
        prod = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return CycloNum._make(self.field, self.field._reduce_long(prod), self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> CycloNum:
        """Inverse via the extended Euclidean algorithm against Phi_N."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in cyclotomic field")
        if self.is_rational():
            return self.field.from_rational(1 / self.as_rational())
        r0, r1 = list(self.field.modulus), _trim(list(self.coeffs))
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            quot, rem = _poly_divmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _poly_sub(s0, _poly_mul(quot, s1))
        # r1 is a nonzero constant because Phi_N is irreducible
        c = r1[0]
        return self.field.from_coeffs([x / c for x in s1])

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("division by zero in cyclotomic field")
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int) -> CycloNum:
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        out = self.field.one
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def root_order(self) -> int | None:
        """Multiplicative order if this is a root of unity, else None."""
        if self.is_zero():
            return None
        bound = lcm(2, self.field.N)
        one = self.field.one
        p = self
        for j in range(1, bound + 1):
            if p == one:
                return j
            p = p * self
        return None


def root_order(a: CycloNum) -> int | None:
    return a.root_order()


class RootOfUnity(NamedTuple):
    """The element zeta_N ** exp of a fixed field."""

    field: CyclotomicField
    exp: int

    @property
    def value(self) -> CycloNum:
        return self.field.zeta(self.exp)

    @property
    def order(self) -> int:
        return self.field.N // gcd(self.field.N, self.exp % self.field.N)


def format_scalar(a: CycloNum) -> str:
    """Canonical literal, increasing powers of z, e.g. ``3 - z + 1/2*z^2``."""
    parts: list[tuple[int, str]] = []
    for power, c in enumerate(a.nums):
        if not c:
            continue
        coef = Fraction(c, a.den)
        sign = -1 if coef < 0 else 1
        mag = abs(coef)
        zpart = "" if power == 0 else ("z" if power == 1 else f"z^{power}")
        if not zpart:
            body = str(mag)
        elif mag == 1:
            body = zpart
        else:
            body = f"{mag}*{zpart}"
        parts.append((sign, body))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] < 0 else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += (" - " if sign < 0 else " + ") + body
    return out
