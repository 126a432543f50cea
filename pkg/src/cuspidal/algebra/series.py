"""Truncated power series over Q.

A :class:`PowSeries` of precision ``N`` knows the coefficients of
``t**0 .. t**(N-1)`` and nothing beyond.  Binary operations keep the smaller
precision; reading an unknown coefficient raises PrecisionExhausted instead
of silently returning zero.
"""

from fractions import Fraction

from ..errors import DomainError, PrecisionExhausted, ZeroConstantTerm
from . import _dense
from .rational import common_denominator, format_rat, rat
from .unipoly import UniPoly


class PowSeries:
    __slots__ = ("coeffs", "precision")

    def __init__(self, coeffs, precision=None):
        coeffs = [rat(c) for c in coeffs]
        if precision is None:
            precision = len(coeffs)
        if precision < 1:
            raise DomainError("series precision must be at least 1")
        if len(coeffs) > precision:
            coeffs = coeffs[:precision]
        coeffs += [Fraction(0)] * (precision - len(coeffs))
        object.__setattr__(self, "coeffs", tuple(coeffs))
        object.__setattr__(self, "precision", precision)

    def __setattr__(self, name, value):
        raise AttributeError("PowSeries is immutable")

    @classmethod
    def from_poly(cls, p, precision):
        return cls(p.coeffs[:precision], precision)

    @classmethod
    def from_rational_function(cls, num, den, precision):
        """Expansion of ``num/den`` at 0; ``den(0)`` must be nonzero."""
        return cls.from_poly(num, precision) * series_reciprocal(
            cls.from_poly(den, precision), precision)

    def __getitem__(self, k):
        if k < 0:
            raise IndexError(k)
        if k >= self.precision:
            raise PrecisionExhausted(
                f"coefficient of t^{k} requested from a series known mod t^{self.precision}")
        return self.coeffs[k]

    def __eq__(self, other):
        if not isinstance(other, PowSeries):
            return NotImplemented
        return self.precision == other.precision and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("PowSeries", self.precision, self.coeffs))

    def order(self):
        """Index of the first nonzero coefficient, or None if zero mod t^N."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return None

    def truncate(self, n):
        if n > self.precision:
            raise PrecisionExhausted(f"cannot extend precision {self.precision} to {n}")
        return PowSeries(self.coeffs[:n], n)

    def to_poly(self):
        return UniPoly(self.coeffs)

    # -- arithmetic --------------------------------------------------------

    def _other(self, other):
        if isinstance(other, PowSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return PowSeries([other], self.precision)
        if isinstance(other, UniPoly):
            return PowSeries.from_poly(other, self.precision)
        return None

    def __add__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        n = min(self.precision, other.precision)
        return PowSeries(_dense.add(self.coeffs[:n], other.coeffs[:n]), n)

    __radd__ = __add__

    def __neg__(self):
        return PowSeries([-c for c in self.coeffs], self.precision)

    def __sub__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        n = min(self.precision, other.precision)
        return PowSeries(_dense.sub(self.coeffs[:n], other.coeffs[:n]), n)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return PowSeries(_dense.scale(self.coeffs, Fraction(other)), self.precision)
        other = self._other(other)
        if other is None:
            return NotImplemented
        n = min(self.precision, other.precision)
        return PowSeries(_dense.convolve(self.coeffs[:n], other.coeffs[:n], limit=n), n)

    __rmul__ = __mul__

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a non-negative int")
        result = PowSeries([1], self.precision)
        for _ in range(e):
            result = result * self
        return result

    def shift_down(self, k):
        """Divide by ``t**k``; the first ``k`` coefficients must vanish."""
        if k > self.precision:
            raise PrecisionExhausted(f"cannot divide a series mod t^{self.precision} by t^{k}")
        if any(self.coeffs[:k]):
            raise DomainError(f"series is not divisible by t^{k}")
        if k == self.precision:
            raise PrecisionExhausted("no coefficients left after division")
        return PowSeries(self.coeffs[k:], self.precision - k)

    def shift_up(self, k):
        """Multiply by ``t**k``; precision grows by ``k``."""
        return PowSeries([Fraction(0)] * k + list(self.coeffs), self.precision + k)

    def __truediv__(self, other):
        """Quotient of series; the divisor's order is stripped off the dividend.

        ``a / b`` with ``ord b = k`` needs ``a`` divisible by ``t**k``.
        """
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("series division by zero scalar")
            return self * (1 / Fraction(other))
        other = self._other(other)
        if other is None:
            return NotImplemented
        k = other.order()
        if k is None:
            raise PrecisionExhausted("divisor vanishes to its full precision")
        num = self.shift_down(k)
        den = other.shift_down(k)
        n = min(num.precision, den.precision)
        return num.truncate(n) * series_reciprocal(den.truncate(n), n)

    # -- presentation ------------------------------------------------------

    def to_json(self):
        return {"coefficients": [format_rat(c) for c in self.coeffs],
                "precision": self.precision}

    def __repr__(self):
        return f"PowSeries({[format_rat(c) for c in self.coeffs]!r}, precision={self.precision})"

    def __str__(self):
        body = str(UniPoly(self.coeffs)).replace("T", "t")
        return f"{body} + O(t^{self.precision})"


def series_reciprocal(s, n=None):
    """``r`` with ``s * r == 1 mod t**n``.

    Plain recurrence ``r_k = -(sum_{j>=1} s_j r_{k-j}) / s_0``; the series
    used here stay short enough that Newton iteration buys nothing.
    """
    if n is None:
        n = s.precision
    if n > s.precision:
        raise PrecisionExhausted(
            f"reciprocal mod t^{n} needs a series known to t^{n}, have t^{s.precision}")
    s0 = s.coeffs[0]
    if not s0:
        raise ZeroConstantTerm("series has zero constant term")
    inv0 = 1 / s0
    den = common_denominator(s.coeffs[:n])
    ints = [int(c * den) for c in s.coeffs[:n]]
    r = [inv0]
    for k in range(1, n):
        acc = Fraction(0)
        for j in range(1, k + 1):
            if ints[j]:
                acc += ints[j] * r[k - j]
        r.append(-acc / den * inv0)
    return PowSeries(r, n)

