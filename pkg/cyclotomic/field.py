"""
Exact arithmetic in the cyclotomic field Q(zeta_L), modelled as Q[x]/Phi_L(x).

Every scalar the engine touches (q, p, lambda, the imaginary unit, the 1/n in the
z-coproduct) lives here. No floating point is used anywhere.
"""
from __future__ import annotations

import logging
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import List, Sequence, Tuple, Union

from utils.errors import ParameterOutOfRange

logger = logging.getLogger(__name__)

Rational = Union[int, Fraction]


def _trim(poly: List[Fraction]) -> List[Fraction]:
    while poly and not poly[-1]:
        poly.pop()
    return poly


def _poly_mul(a: Sequence[Fraction], b: Sequence[Fraction]) -> List[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            if bj:
                out[i + j] += ai * bj
    return out


def _poly_sub(a: Sequence[Fraction], b: Sequence[Fraction]) -> List[Fraction]:
    size = max(len(a), len(b))
    out = [Fraction(0)] * size
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] -= c
    return _trim(out)


def _poly_divmod(num: Sequence[Rational], den: Sequence[Rational]) -> Tuple[List[Fraction], List[Fraction]]:
    """Long division of coefficient lists stored lowest degree first."""
    rem = _trim([Fraction(c) for c in num])
    den = _trim([Fraction(c) for c in den])
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    lead = den[-1]
    quot = [Fraction(0)] * max(len(rem) - len(den) + 1, 1)
    while len(rem) >= len(den) and rem:
        shift = len(rem) - len(den)
        factor = rem[-1] / lead
        quot[shift] = factor
        for j, c in enumerate(den):
            rem[shift + j] -= factor * c
        _trim(rem)
    return _trim(quot), rem


@lru_cache(maxsize=None)
def cyclotomic_polynomial(L: int) -> Tuple[int, ...]:
    """Integer coefficients of Phi_L, lowest degree first, by dividing x^L - 1 by every Phi_d, d | L, d < L."""
    if L < 1:
        raise ParameterOutOfRange(f"conductor {L} must be positive")
    poly: List[Fraction] = [Fraction(-1)] + [Fraction(0)] * (L - 1) + [Fraction(1)]
    for d in range(1, L):
        if L % d == 0:
            poly, rem = _poly_divmod(poly, cyclotomic_polynomial(d))
            if rem:
                raise ArithmeticError(f"Phi_{d} does not divide x^{L} - 1 exactly")
    return tuple(int(c) for c in poly)


def field_degree(L: int) -> int:
    return len(cyclotomic_polynomial(L)) - 1


def _reduce(poly: Sequence[Rational], L: int) -> Tuple[Fraction, ...]:
    phi = cyclotomic_polynomial(L)
    deg = len(phi) - 1
    work = [Fraction(c) for c in poly]
    for k in range(len(work) - 1, deg - 1, -1):
        c = work[k]
        if not c:
            continue
        work[k] = Fraction(0)
        base = k - deg
        for j in range(deg):
            if phi[j]:
                work[base + j] -= c * phi[j]
    work = work[:deg]
    if len(work) < deg:
        work.extend([Fraction(0)] * (deg - len(work)))
    return tuple(work)


class CycNum:
    """
    Immutable element of Q(zeta_L).

    The coefficient tuple has exactly deg Phi_L entries and is the canonical residue,
    so two numbers of the same conductor are equal iff their coefficients agree.
    Mixed conductors are lifted to the lcm before any operation.
    """
    __slots__ = ("_conductor", "_coeffs")

    def __init__(self, conductor: int, coeffs: Sequence[Rational]):
        if conductor < 1:
            raise ParameterOutOfRange(f"conductor {conductor} must be positive")
        self._conductor = conductor
        deg = field_degree(conductor)
        if len(coeffs) == deg and all(isinstance(c, Fraction) for c in coeffs):
            self._coeffs = tuple(coeffs)
        else:
            self._coeffs = _reduce(coeffs, conductor)

    @property
    def conductor(self) -> int:
        return self._conductor

    @property
    def coeffs(self) -> Tuple[Fraction, ...]:
        return self._coeffs

    @classmethod
    def from_rational(cls, L: int, value: Rational) -> CycNum:
        deg = field_degree(L)
        return cls(L, (Fraction(value),) + (Fraction(0),) * (deg - 1))

    @classmethod
    def zero(cls, L: int) -> CycNum:
        return cls.from_rational(L, 0)

    @classmethod
    def one(cls, L: int) -> CycNum:
        return cls.from_rational(L, 1)

    @classmethod
    def root_of_unity(cls, L: int, k: int) -> CycNum:
        k %= L
        poly = [Fraction(0)] * (k + 1)
        poly[k] = Fraction(1)
        return cls(L, poly)

    def lift(self, L: int) -> CycNum:
        """Re-express this number in Q(zeta_L); L must be a multiple of the current conductor."""
        if L == self._conductor:
            return self
        if L % self._conductor:
            raise ParameterOutOfRange(f"cannot lift conductor {self._conductor} to {L}")
        step = L // self._conductor
        poly = [Fraction(0)] * ((len(self._coeffs) - 1) * step + 1)
        for k, c in enumerate(self._coeffs):
            poly[k * step] = c
        return CycNum(L, poly)

    def _align(self, other: Union[Rational, CycNum]) -> Tuple[CycNum, CycNum]:
        if isinstance(other, CycNum):
            if other._conductor == self._conductor:
                return self, other
            common = lcm(self._conductor, other._conductor)
            return self.lift(common), other.lift(common)
        if isinstance(other, (int, Fraction)):
            return self, CycNum.from_rational(self._conductor, other)
        raise TypeError(f"cannot combine CycNum with {type(other).__name__}")

    def is_zero(self) -> bool:
        return not any(self._coeffs)

    def __bool__(self) -> bool:
        return any(self._coeffs)

    def is_rational(self) -> bool:
        return not any(self._coeffs[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self._coeffs[0]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self._coeffs[0] == other
        if isinstance(other, CycNum):
            a, b = self._align(other)
            return a._coeffs == b._coeffs
        return NotImplemented

    __hash__ = None

    def __neg__(self) -> CycNum:
        return CycNum(self._conductor, tuple(-c for c in self._coeffs))

    def __add__(self, other: Union[Rational, CycNum]) -> CycNum:
        try:
            a, b = self._align(other)
        except TypeError:
            return NotImplemented
        return CycNum(a._conductor, tuple(x + y for x, y in zip(a._coeffs, b._coeffs)))

    __radd__ = __add__

    def __sub__(self, other: Union[Rational, CycNum]) -> CycNum:
        try:
            a, b = self._align(other)
        except TypeError:
            return NotImplemented
        return CycNum(a._conductor, tuple(x - y for x, y in zip(a._coeffs, b._coeffs)))

    def __rsub__(self, other: Union[Rational, CycNum]) -> CycNum:
        return (-self) + other

    def __mul__(self, other: Union[Rational, CycNum]) -> CycNum:
        if isinstance(other, (int, Fraction)):
            return CycNum(self._conductor, tuple(c * other for c in self._coeffs))
        try:
            a, b = self._align(other)
        except TypeError:
            return NotImplemented
        if b.is_rational():
            s = b._coeffs[0]
            return CycNum(a._conductor, tuple(c * s for c in a._coeffs))
        if a.is_rational():
            s = a._coeffs[0]
            return CycNum(a._conductor, tuple(c * s for c in b._coeffs))
        return CycNum(a._conductor, _poly_mul(a._coeffs, b._coeffs))

    __rmul__ = __mul__

    def inverse(self) -> CycNum:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        if self.is_rational():
            return CycNum.from_rational(self._conductor, 1 / self._coeffs[0])
        # extended Euclid: s_i * a == r_i (mod Phi)
        r0 = [Fraction(c) for c in cyclotomic_polynomial(self._conductor)]
        r1 = _trim(list(self._coeffs))
        s0: List[Fraction] = []
        s1: List[Fraction] = [Fraction(1)]
        while r1:
            quot, rem = _poly_divmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _poly_sub(s0, _poly_mul(quot, s1))
        unit = r0[0]
        return CycNum(self._conductor, [c / unit for c in s0])

    def __truediv__(self, other: Union[Rational, CycNum]) -> CycNum:
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division by zero")
            return self * (Fraction(1) / Fraction(other))
        if isinstance(other, CycNum):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other: Rational) -> CycNum:
        return self.inverse() * other

    def __pow__(self, exponent: int) -> CycNum:
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = CycNum.one(self._conductor)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def to_json(self) -> dict:
        return {"conductor": self._conductor, "coefficients": [str(c) for c in self._coeffs]}

    def __repr__(self) -> str:
        terms = []
        for k, c in enumerate(self._coeffs):
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                power = "z" if k == 1 else f"z^{k}"
                terms.append(power if c == 1 else f"{c}*{power}")
        body = " + ".join(terms) if terms else "0"
        return f"CycNum({self._conductor}: {body})"


def root_of_unity(L: int, k: int) -> CycNum:
    """zeta_L^k reduced modulo Phi_L."""
    if L < 1:
        raise ParameterOutOfRange(f"conductor {L} must be positive")
    return CycNum.root_of_unity(L, k)


def lift_to_common_conductor(a: CycNum, b: CycNum) -> Tuple[CycNum, CycNum]:
    common = lcm(a.conductor, b.conductor)
    return a.lift(common), b.lift(common)


def as_cyc(value: Union[Rational, CycNum], L: int) -> CycNum:
    """Coerce an int, Fraction or CycNum into conductor L (lifting when needed)."""
    if isinstance(value, CycNum):
        if value.conductor == L:
            return value
        return value.lift(L)
    return CycNum.from_rational(L, value)
