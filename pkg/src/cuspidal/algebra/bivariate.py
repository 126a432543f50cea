"""Sparse affine polynomials in X, Y and dense binary forms in s, t."""

from fractions import Fraction

from ..errors import DomainError, NotDivisible
from . import _dense
from .rational import format_rat, parse_rat, rat
from .unipoly import UniPoly


class BiPoly:
    """Sparse polynomial ``sum c[i, j] X**i Y**j`` with no zero entries."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for (i, j), c in dict(terms or {}).items():
            if i < 0 or j < 0:
                raise DomainError("negative exponent in BiPoly")
            c = rat(c)
            if c:
                clean[(int(i), int(j))] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("BiPoly is immutable")

    @classmethod
    def constant(cls, c):
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, i, j, c=1):
        return cls({(i, j): c})

    @classmethod
    def from_homogenized(cls, p, degree, shift=(0, 0)):
        """``Y**(degree - k) X**k`` weighting of a univariate ``p(T)``.

        ``BiPoly.from_homogenized(f, n)`` is ``Y**n f(X/Y)``.
        """
        if p.degree > degree:
            raise DomainError("polynomial degree exceeds the homogenization degree")
        di, dj = shift
        return cls({(k + di, degree - k + dj): c for k, c in enumerate(p.coeffs)})

    # -- structure ---------------------------------------------------------

    def is_zero(self):
        return not self.terms

    @property
    def total_degree(self):
        if not self.terms:
            return -1
        return max(i + j for i, j in self.terms)

    def coefficient(self, i, j):
        return self.terms.get((i, j), Fraction(0))

    def is_homogeneous(self):
        return len({i + j for i, j in self.terms}) <= 1

    def __eq__(self, other):
        if isinstance(other, BiPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == BiPoly.constant(other)
        return NotImplemented

    def __hash__(self):
        return hash(("BiPoly", frozenset(self.terms.items())))

    def __iter__(self):
        """Terms in (total degree, X-degree) order."""
        for key in sorted(self.terms, key=lambda ij: (ij[0] + ij[1], ij[0])):
            yield key, self.terms[key]

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return BiPoly.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return BiPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return BiPoly({k: c * other for k, c in self.terms.items()})
        if not isinstance(other, BiPoly):
            return NotImplemented
        out = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + c1 * c2
        return BiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative int")
        result = BiPoly.constant(1)
        for _ in range(n):
            result = result * self
        return result

    def divide_by_x_minus_y(self, times=1):
        """Exact quotient by ``(X - Y)**times``.

        Synthetic division in X over Q[Y] at the root ``X = Y``; any
        remainder raises NotDivisible.
        """
        p = self
        for _ in range(times):
            p = p._divide_x_minus_y_once()
        return p

    def _divide_x_minus_y_once(self):
        if self.is_zero():
            return self
        # rows[i] = coefficient of X**i, a dict j -> c
        top = max(i for i, _ in self.terms)
        rows = [dict() for _ in range(top + 1)]
        for (i, j), c in self.terms.items():
            rows[i][j] = c
        quot = {}
        carry = {}
        for i in range(top, 0, -1):
            # b_{i-1} = a_i + Y * b_i
            b = dict(rows[i])
            for j, c in carry.items():
                b[j + 1] = b.get(j + 1, 0) + c
            b = {j: c for j, c in b.items() if c}
            for j, c in b.items():
                quot[(i - 1, j)] = c
            carry = b
        rem = dict(rows[0])
        for j, c in carry.items():
            rem[j + 1] = rem.get(j + 1, 0) + c
        rem = BiPoly({(0, j): c for j, c in rem.items()})
        if not rem.is_zero():
            raise NotDivisible(rem)
        return BiPoly(quot)

    def __call__(self, x, y):
        acc = Fraction(0)
        for (i, j), c in self.terms.items():
            acc += c * x ** i * y ** j
        return acc

    def swap(self):
        """``p(Y, X)``."""
        return BiPoly({(j, i): c for (i, j), c in self.terms.items()})

    def homogeneous_part(self, degree):
        return BiPoly({k: c for k, c in self.terms.items() if sum(k) == degree})

    # -- serialization -----------------------------------------------------

    def to_json(self):
        return [{"i": i, "j": j, "c": format_rat(c)} for (i, j), c in self]

    @classmethod
    def from_json(cls, data):
        return cls({(int(e["i"]), int(e["j"])): parse_rat(str(e["c"])) for e in data})

    def __repr__(self):
        return f"BiPoly({self.to_json()!r})"

    def __str__(self):
        if self.is_zero():
            return "0"
        out = []
        for (i, j), c in self:
            mono = "*".join(m for m in (_pw("X", i), _pw("Y", j)) if m)
            mag = abs(c)
            if not mono:
                body = format_rat(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{format_rat(mag)}*{mono}"
            out.append(("-" if c < 0 else "+", body))
        text = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sign, body in out[1:]:
            text += f" {sign} {body}"
        return text


def _pw(var, k):
    if k == 0:
        return ""
    return var if k == 1 else f"{var}^{k}"


X = BiPoly.monomial(1, 0)
Y = BiPoly.monomial(0, 1)


class BinForm:
    """Binary form of fixed degree; ``coeffs[i]`` multiplies ``s**i t**(d-i)``.

    The zero form keeps its degree, so the coefficient list always has
    ``degree + 1`` entries.
    """

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree, coeffs):
        coeffs = [rat(c) for c in coeffs]
        if degree < 0:
            raise DomainError("form degree must be non-negative")
        if len(coeffs) > degree + 1:
            if any(coeffs[degree + 1:]):
                raise DomainError("too many coefficients for the form degree")
            coeffs = coeffs[:degree + 1]
        coeffs += [Fraction(0)] * (degree + 1 - len(coeffs))
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("BinForm is immutable")

    @classmethod
    def homogenize(cls, p, degree):
        """Form of the given degree with ``F(s, 1) = p(s)``."""
        if p.degree > degree:
            raise DomainError("polynomial degree exceeds the form degree")
        return cls(degree, p.coeffs)

    @classmethod
    def s(cls):
        return cls(1, [0, 1])

    @classmethod
    def t(cls):
        return cls(1, [1, 0])

    @classmethod
    def constant(cls, c):
        return cls(0, [c])

    def dehomogenize(self):
        """``F(s, 1)`` as a UniPoly in s."""
        return UniPoly(self.coeffs)

    def is_zero(self):
        return not any(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, BinForm):
            return NotImplemented
        return self.degree == other.degree and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("BinForm", self.degree, self.coeffs))

    def __add__(self, other):
        if not isinstance(other, BinForm):
            return NotImplemented
        if other.degree != self.degree:
            raise DomainError("cannot add forms of different degrees")
        return BinForm(self.degree, _dense.add(self.coeffs, other.coeffs))

    def __neg__(self):
        return BinForm(self.degree, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return BinForm(self.degree, _dense.scale(self.coeffs, Fraction(other)))
        if not isinstance(other, BinForm):
            return NotImplemented
        return BinForm(self.degree + other.degree, _dense.convolve(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative int")
        result = BinForm(0, [1])
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __call__(self, s, t):
        acc = Fraction(0)
        for i, c in enumerate(self.coeffs):
            if c:
                acc += c * Fraction(s) ** i * Fraction(t) ** (self.degree - i)
        return acc

    def to_json(self):
        return [format_rat(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data):
        return cls(len(data) - 1, [parse_rat(str(c)) for c in data])

    def __repr__(self):
        return f"BinForm({self.degree}, {self.to_json()!r})"


def homogenize_affine(p, degree):
    """Terms ``c X^i Y^j`` of ``p`` as ``c x^i y^j z^(degree-i-j)``.

    Returned as ``{(i, j, k): c}``.
    """
    if p.total_degree > degree:
        raise DomainError("affine degree exceeds the homogenization degree")
    return {(i, j, degree - i - j): c for (i, j), c in p.terms.items()}


def pullback(p, degree, P, Q, R):
    """Substitute ``(x : y : z) = (P : Q : R)`` into the homogenized ``p``.

    The affine chart is ``X = x/z, Y = y/z``.  Returns a form of degree
    ``degree * P.degree``; it vanishes identically iff the parametrized curve
    lies on ``p = 0``.
    """
    if not (P.degree == Q.degree == R.degree):
        raise DomainError("parametrizing forms must share a degree")
    terms = homogenize_affine(p, degree)
    e = P.degree
    powers = {}

    def power(name, form, k):
        key = (name, k)
        if key not in powers:
            powers[key] = form ** k
        return powers[key]

    # group by the z-exponent so each group costs one multiplication by R^k
    by_k = {}
    for (i, j, k), c in terms.items():
        by_k.setdefault(k, []).append((i, j, c))
    total = BinForm(degree * e, [])
    for k, group in sorted(by_k.items()):
        inner = BinForm((degree - k) * e, [])
        for i, j, c in group:
            inner = inner + power("P", P, i) * power("Q", Q, j) * c
        total = total + inner * power("R", R, k)
    return total
