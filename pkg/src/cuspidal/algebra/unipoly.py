"""Dense univariate polynomials over Q."""

from fractions import Fraction

from ..errors import DomainError, NotDivisible
from . import _dense
from .rational import format_rat, parse_rat, rat


class UniPoly:
    """Immutable dense polynomial; ``coeffs[k]`` multiplies ``T**k``.

    The coefficient tuple never ends in a zero, so the zero polynomial is the
    empty tuple and structural equality is polynomial equality.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        object.__setattr__(self, "coeffs", tuple(_dense.trim(rat(c) for c in coeffs)))

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    @classmethod
    def constant(cls, c):
        return cls([c])

    @classmethod
    def monomial(cls, k, c=1):
        return cls([0] * k + [c])

    @classmethod
    def linear(cls, c0, c1):
        return cls([c0, c1])

    @classmethod
    def from_taylor(cls, b, c):
        """Rebuild ``sum b[k] * (T - c)**k``."""
        out = cls()
        shift = cls([-rat(c), 1])
        power = cls([1])
        for bk in b:
            out = out + power * bk
            power = power * shift
        return out

    # -- basic structure ---------------------------------------------------

    @property
    def degree(self):
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __getitem__(self, k):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == UniPoly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(("UniPoly", self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return UniPoly([other])
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return UniPoly(_dense.add(self.coeffs, other.coeffs))

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return UniPoly(_dense.sub(self.coeffs, other.coeffs))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return UniPoly(_dense.scale(self.coeffs, Fraction(other)))
        if not isinstance(other, UniPoly):
            return NotImplemented
        return UniPoly(_dense.convolve(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative int")
        result = UniPoly([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __divmod__(self, other):
        if not isinstance(other, UniPoly):
            other = UniPoly([other])
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lead = other.coeffs[-1]
        quot = [Fraction(0)] * max(0, len(rem) - dq)
        for k in range(len(rem) - 1 - dq, -1, -1):
            c = rem[k + dq] / lead
            quot[k] = c
            if c:
                for j, oc in enumerate(other.coeffs):
                    rem[k + j] -= c * oc
        return UniPoly(quot), UniPoly(rem[:dq] if dq > 0 else [])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    # -- evaluation and calculus -------------------------------------------

    def __call__(self, x):
        acc = Fraction(0) if not isinstance(x, UniPoly) else UniPoly()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self, order=1):
        coeffs = list(self.coeffs)
        for _ in range(order):
            coeffs = [k * c for k, c in enumerate(coeffs)][1:]
        return UniPoly(coeffs)

    def compose(self, inner):
        """``self(inner(T))`` for a polynomial ``inner``."""
        return self(inner)

    def reversed(self, n=None):
        """``T**n * self(1/T)``; ``n`` defaults to the degree."""
        if n is None:
            n = self.degree
        if n < self.degree:
            raise ValueError("reversal length below the degree")
        padded = list(self.coeffs) + [Fraction(0)] * (n + 1 - len(self.coeffs))
        return UniPoly(reversed(padded))

    # -- serialization -----------------------------------------------------

    def to_json(self):
        return [format_rat(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data):
        return cls(parse_rat(s) if isinstance(s, str) else s for s in data)

    def __repr__(self):
        return f"UniPoly({self.to_json()!r})"

    def __str__(self):
        return format_poly(self)


def format_poly(p, var="T"):
    if p.is_zero():
        return "0"
    parts = []
    for k, c in enumerate(p.coeffs):
        if not c:
            continue
        mag = abs(c)
        if k == 0:
            body = format_rat(mag)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if mag == 1 else f"{format_rat(mag)}*{mono}"
        parts.append(("-" if c < 0 else "+", body))
    sign, body = parts[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


# -- module-level operations ------------------------------------------------

def poly_arith(op, p, q):
    """``op`` is one of ``"add"``, ``"sub"``, ``"mul"``."""
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise DomainError(f"unknown polynomial operation {op!r}")


def exact_divide(p, q):
    """Quotient ``u`` with ``p == u * q``; raises NotDivisible otherwise."""
    quot, rem = divmod(p, q)
    if not rem.is_zero():
        raise NotDivisible(rem)
    return quot


def taylor_shift(p, c):
    """Coefficients ``b`` with ``p(T) = sum b[k] (T - c)**k``.

    Repeated synthetic division by ``T - c``; ``b[k] = p^(k)(c) / k!``.
    """
    c = rat(c)
    work = list(p.coeffs)
    if not work:
        return [Fraction(0)]
    out = []
    while work:
        # Horner pass: quotient in work[1:], remainder in work[0]
        for i in range(len(work) - 2, -1, -1):
            work[i] += c * work[i + 1]
        out.append(work[0])
        work = work[1:]
    return out


def compose_square(p):
    """``p(T**2)``."""
    coeffs = []
    for c in p.coeffs:
        coeffs.extend([c, Fraction(0)])
    return UniPoly(coeffs)


T = UniPoly([0, 1])
