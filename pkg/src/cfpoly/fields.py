"""Small finite fields: prime fields F_p and GF(2^t) for t <= 4.

Elements are plain ints 0..q-1 inside the hot loops; :class:`FieldElement`
wraps them with operators for interactive use and tests. In GF(2^t) the int
is a polynomial over F_2 in bit order (bit i = coefficient of x^i).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import InvalidArgumentError

# x^2+x+1, x^3+x+1, x^4+x+1
IRREDUCIBLE_GF2 = {2: 0b111, 3: 0b1011, 4: 0b10011}


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def _gf2_mul(a: int, b: int, t: int, poly: int) -> int:
    out = 0
    while b:
        if b & 1:
            out ^= a
        b >>= 1
        a <<= 1
        if a >> t & 1:
            a ^= poly
    return out


class FiniteField:
    """Table-driven arithmetic on {0, ..., q-1}."""

    def __init__(self, q: int):
        self.q = q
        if is_prime(q):
            self.p, self.t = q, 1
            self.add_table = [[(a + b) % q for b in range(q)] for a in range(q)]
            self.mul_table = [[(a * b) % q for b in range(q)] for a in range(q)]
        else:
            t = q.bit_length() - 1
            if q != 1 << t or t not in IRREDUCIBLE_GF2:
                raise InvalidArgumentError(f"unsupported field order q={q}")
            self.p, self.t = 2, t
            poly = IRREDUCIBLE_GF2[t]
            self.add_table = [[a ^ b for b in range(q)] for a in range(q)]
            self.mul_table = [[_gf2_mul(a, b, t, poly) for b in range(q)] for a in range(q)]
        self.neg_table = [self.add_table[a].index(0) for a in range(q)]
        self.inv_table = [0] + [self.mul_table[a].index(1) for a in range(1, q)]

    def __repr__(self):
        return f"FiniteField({self.q})"

    def __eq__(self, other):
        return isinstance(other, FiniteField) and other.q == self.q

    def __hash__(self):
        return hash(("FiniteField", self.q))

    @property
    def elements(self) -> range:
        return range(self.q)

    def add(self, a: int, b: int) -> int:
        return self.add_table[a][b]

    def sub(self, a: int, b: int) -> int:
        return self.add_table[a][self.neg_table[b]]

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def neg(self, a: int) -> int:
        return self.neg_table[a]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.inv_table[a]

    def __call__(self, value: int) -> "FieldElement":
        return FieldElement(self, value % self.q if self.t == 1 else value)


@lru_cache(maxsize=None)
def field(q: int) -> FiniteField:
    return FiniteField(q)


@dataclass(frozen=True)
class FieldElement:
    F: FiniteField
    value: int

    def __post_init__(self):
        if not 0 <= self.value < self.F.q:
            raise InvalidArgumentError(f"{self.value} is not an element of GF({self.F.q})")

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.F != self.F:
                raise InvalidArgumentError("elements of different fields")
            return other.value
        return self.F(other).value

    def __add__(self, other):
        return FieldElement(self.F, self.F.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.F, self.F.sub(self.value, self._other(other)))

    def __mul__(self, other):
        return FieldElement(self.F, self.F.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(self.F, self.F.neg(self.value))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.F, self.F.inv(self.value))

    def __truediv__(self, other):
        return self * FieldElement(self.F, self._other(other)).inverse()

    def __int__(self):
        return self.value
