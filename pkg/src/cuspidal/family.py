"""The tricuspidal curves of degree d with cusps (d-2), (2_a), (2_b).

For ``d >= 4`` and ``a >= b >= 1`` with ``a + b = d - 2`` the curve is

    (P : Q : R) = (s^2 (s-t)^(d-2) : t^2 (s-t)^(d-2) : s^2 t^2 q(s, t))

where ``q`` homogenizes ``q~(T) = (f(T^2) + T^(2a-1)) / (1+T)^(d-2)`` and
``f`` is the degree ``d-3`` Taylor polynomial of ``T^(a - 1/2)`` at 1.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial, gcd

from .algebra import X, Y, BiPoly, BinForm, PowSeries, UniPoly, compose_square, pullback
from .branches import BranchGerm, resolve_sequence
from .errors import (
    CertificationFailed,
    DegreeTooSmall,
    DivisibilityFailed,
    InvalidParameters,
    NotDivisible,
)
from .multiplicity import MultiplicitySequence, canonicalize, compact_sequence


@dataclass(frozen=True, order=True)
class FamilyParams:
    d: int
    a: int
    b: int = None

    def __post_init__(self):
        d, a, b = self.d, self.a, self.b
        if b is None:
            b = d - 2 - a
            object.__setattr__(self, "b", b)
        if d < 4:
            raise DegreeTooSmall(f"degree must be at least 4, got {d}")
        if a + b != d - 2:
            raise InvalidParameters(f"a + b must equal d - 2 = {d - 2}, got a={a}, b={b}")
        if not a >= b >= 1:
            raise InvalidParameters(f"need a >= b >= 1, got a={a}, b={b}")

    def __str__(self):
        return f"C({self.d},{self.a})"


def enumerate_degree(d):
    """All parameter pairs of degree ``d``, by ascending ``a``."""
    if d < 4:
        raise DegreeTooSmall(f"degree must be at least 4, got {d}")
    return [FamilyParams(d, a) for a in range((d - 1) // 2, d - 2)]


# -- construction -----------------------------------------------------------

def taylor_coefficients(params):
    """``[a_0, ..., a_{d-3}]``: falling factorials of ``a_1 = a - 1/2``."""
    a1 = Fraction(2 * params.a - 1, 2)
    out = [Fraction(1)]
    for k in range(1, params.d - 2):
        out.append(out[-1] * (a1 - (k - 1)))
    return out


def build_f(params):
    coeffs = taylor_coefficients(params)
    return UniPoly.from_taylor([ak / factorial(k) for k, ak in enumerate(coeffs)], 1)


def build_F(params):
    """``F(T) = f(T^2) + T^(2a-1)``."""
    return compose_square(build_f(params)) + UniPoly.monomial(2 * params.a - 1)


def build_qtilde(params):
    """``q~ = F / (1+T)^(d-2)``, with the side conditions checked."""
    d = params.d
    F = build_F(params)
    # F^{(j)}(-1) = 0 for j <= d-3, checked directly on derivatives
    for j in range(d - 2):
        if F.derivative(j)(-1):
            raise DivisibilityFailed(f"F^({j})(-1) != 0 for {params}")
    q, rem = divmod(F, UniPoly([1, 1]) ** (d - 2))
    if not rem.is_zero():
        raise DivisibilityFailed(f"(1+T)^{d - 2} does not divide F for {params}: remainder {rem}")
    if q.degree != d - 4:
        raise DivisibilityFailed(f"q~ has degree {q.degree}, expected {d - 4}")
    if not q[0] or not q[d - 4] or not q(1):
        raise DivisibilityFailed(f"q~ violates c_0, c_(d-4), q~(1) != 0 for {params}")
    return q


def parametrization(params, qtilde=None):
    """The three degree-``d`` forms ``(P, Q, R)``."""
    d = params.d
    q = qtilde if qtilde is not None else build_qtilde(params)
    s, t = BinForm.s(), BinForm.t()
    s_minus_t = s - t
    base = s_minus_t ** (d - 2)
    P = s * s * base
    Q = t * t * base
    R = s * s * t * t * BinForm.homogenize(q, d - 4)
    return P, Q, R


def f_hat(params, f=None):
    """``Y^(d-3) f(X/Y)``."""
    f = f if f is not None else build_f(params)
    return BiPoly.from_homogenized(f, params.d - 3)


def implicit_equation(params):
    """``p = (X^(2a+1) Y^(2b+1) - ((X-Y)^(d-2) - XY fhat)^2) / (X-Y)^(d-2)``."""
    d, a, b = params.d, params.a, params.b
    fh = f_hat(params)
    inner = (X - Y) ** (d - 2) - X * Y * fh
    numerator = BiPoly.monomial(2 * a + 1, 2 * b + 1) - inner * inner
    try:
        return numerator.divide_by_x_minus_y(d - 2)
    except NotDivisible as exc:
        raise DivisibilityFailed(f"(X-Y)^{d - 2} does not divide the numerator for {params}") from exc


def grouped_equation(params):
    """``(remainder, group)`` with ``p = remainder - (X-Y)^(d-2) + XY * group``.

    ``group = 2 fhat`` and ``remainder = (X^(2a+1) Y^(2b+1) - X^2 Y^2 fhat^2)
    / (X-Y)^(d-2)``, a route to ``p`` that divides a different numerator.
    """
    d, a, b = params.d, params.a, params.b
    fh = f_hat(params)
    psi = BiPoly.monomial(2 * a + 1, 2 * b + 1) - BiPoly.monomial(2, 2) * fh * fh
    try:
        remainder = psi.divide_by_x_minus_y(d - 2)
    except NotDivisible as exc:
        raise DivisibilityFailed(f"(X-Y)^{d - 2} does not divide psi for {params}") from exc
    return remainder, fh * 2


def expand_grouped(params, remainder, group):
    return remainder - (X - Y) ** (params.d - 2) + X * Y * group


# -- cusp charts --------------------------------------------------------------

def _rational_germ(xnum, xden, ynum, yden):
    def build(n):
        return BranchGerm(PowSeries.from_rational_function(xnum, xden, n),
                          PowSeries.from_rational_function(ynum, yden, n), refine=build)
    return build


def chart_germs(params, qtilde=None, precision=None):
    """Germs at ``h(1:1)``, ``h(0:1)`` and ``h(1:0)``, keyed by those labels."""
    d = params.d
    q = qtilde if qtilde is not None else build_qtilde(params)
    n = precision if precision is not None else default_precision(d)
    one_plus_u = UniPoly([1, 1])
    q_shift = q.compose(one_plus_u)
    u_pow = UniPoly.monomial(d - 2)
    # (1:1): s = 1 + u, t = 1, affine chart z = 1
    at_11 = _rational_germ(u_pow, q_shift, u_pow, one_plus_u ** 2 * q_shift)
    # (0:1): xi = s/t, chart y = 1
    xi2 = UniPoly.monomial(2)
    at_01 = _rational_germ(xi2, UniPoly([1]), xi2 * q, UniPoly([-1, 1]) ** (d - 2))
    # (1:0): tau = t/s, chart x = 1; q-breve has the coefficients reversed
    q_breve = q.reversed(d - 4)
    at_10 = _rational_germ(xi2, UniPoly([1]), xi2 * q_breve, UniPoly([1, -1]) ** (d - 2))
    return {"(1:1)": at_11(n), "(0:1)": at_01(n), "(1:0)": at_10(n)}


def default_precision(d):
    return (d - 1) * (d - 2) + 2


def single_puiseux_pair(seq):
    """``(beta, m)`` for a one-pair cusp, else None.

    ``beta = mu / (m - 1) + 1`` from ``mu = (m-1)(beta-1)``; accepted only if
    the branch ``(t^m, t^beta)`` resolves back to ``seq``.
    """
    m = seq.multiplicity
    if m < 2:
        return None
    mu = sum(x * (x - 1) for x in seq.entries)
    if mu % (m - 1):
        return None
    beta = mu // (m - 1) + 1
    if gcd(beta, m) != 1:
        return None
    probe = BranchGerm.from_polys(UniPoly.monomial(m), UniPoly.monomial(beta), beta + m + 2)
    if resolve_sequence(probe) != seq:
        return None
    return beta, m


# -- certification ------------------------------------------------------------

@dataclass(frozen=True)
class Cusp:
    parameter: tuple
    point: tuple
    sequence: MultiplicitySequence
    expected: MultiplicitySequence
    puiseux_pair: tuple = None

    def to_json(self):
        return {"parameter": list(self.parameter), "point": list(self.point),
                "sequence": list(self.sequence.entries),
                "compact": self.sequence.compact_notation(),
                "expected": self.expected.compact_notation(),
                "puiseux_pair": list(self.puiseux_pair) if self.puiseux_pair else None}


CHECKS = ("divisibility", "nondegenerate", "pullback", "cusp_11", "cusp_01", "cusp_10", "genus")


@dataclass(frozen=True)
class CuspidalCurve:
    params: FamilyParams
    f: UniPoly
    q_tilde: UniPoly
    P: BinForm
    Q: BinForm
    R: BinForm
    affine_equation: BiPoly
    cusps: tuple
    certified: dict = field(default_factory=dict)

    @property
    def ok(self):
        return all(self.certified.get(c) for c in CHECKS)

    @property
    def cusp_sequences(self):
        return [c.sequence for c in self.cusps]

    def to_json(self):
        p = self.params
        return {
            "d": p.d, "a": p.a, "b": p.b,
            "f": self.f.to_json(),
            "q_tilde": self.q_tilde.to_json(),
            "P": self.P.to_json(), "Q": self.Q.to_json(), "R": self.R.to_json(),
            "affine_equation": self.affine_equation.to_json(),
            "cusps": [c.to_json() for c in self.cusps],
            "certified": {k: bool(self.certified.get(k, False)) for k in CHECKS},
        }

    @classmethod
    def from_json(cls, data):
        params = FamilyParams(data["d"], data["a"], data["b"])
        cusps = tuple(
            Cusp(tuple(c["parameter"]), tuple(c["point"]),
                 MultiplicitySequence(tuple(c["sequence"])), canonicalize(c["expected"]),
                 tuple(c["puiseux_pair"]) if c["puiseux_pair"] else None)
            for c in data["cusps"])
        return cls(params, UniPoly.from_json(data["f"]), UniPoly.from_json(data["q_tilde"]),
                   BinForm.from_json(data["P"]), BinForm.from_json(data["Q"]),
                   BinForm.from_json(data["R"]), BiPoly.from_json(data["affine_equation"]),
                   cusps, dict(data["certified"]))


def construct(params):
    """Assemble the curve without running the certification checks."""
    f = build_f(params)
    q = build_qtilde(params)
    P, Q, R = parametrization(params, q)
    p = implicit_equation(params)
    d, a, b = params.d, params.a, params.b
    cusps = (
        Cusp((1, 1), (0, 0, 1), compact_sequence(d - 2), compact_sequence(d - 2)),
        Cusp((0, 1), (0, 1, 0), compact_sequence(2, a), compact_sequence(2, a)),
        Cusp((1, 0), (1, 0, 0), compact_sequence(2, b), compact_sequence(2, b)),
    )
    return CuspidalCurve(params, f, q, P, Q, R, p, cusps, {})


def _projective_image(P, Q, R, s, t):
    vals = [F(s, t) for F in (P, Q, R)]
    for v in reversed(vals):
        if v:
            return tuple(x / v for x in vals)
    return tuple(vals)


def certify(params, strict=True):
    """Construct the curve and run every check in order.

    With ``strict`` the first failing check raises CertificationFailed;
    otherwise the flags record the failure.
    """
    d, a, b = params.d, params.a, params.b
    flags = {}

    def record(name, ok, detail=""):
        flags[name] = bool(ok)
        if not ok and strict:
            raise CertificationFailed(name, f"{params}: {detail}")

    try:
        q = build_qtilde(params)
        record("divisibility", True)
    except DivisibilityFailed as exc:
        record("divisibility", False, str(exc))
        raise
    f = build_f(params)
    P, Q, R = parametrization(params, q)
    record("nondegenerate",
           _projective_image(P, Q, R, 1, 1) == (0, 0, 1)
           and _projective_image(P, Q, R, 0, 1) == (0, 1, 0)
           and _projective_image(P, Q, R, 1, 0) == (1, 0, 0),
           "base points or wrong cusp positions")

    p = implicit_equation(params)
    if p.total_degree != d:
        record("pullback", False, f"equation has degree {p.total_degree}")
    else:
        record("pullback", pullback(p, d, P, Q, R).is_zero(), "parametrization does not satisfy p")

    germs = chart_germs(params, q)
    expected = {"(1:1)": compact_sequence(d - 2), "(0:1)": compact_sequence(2, a),
                "(1:0)": compact_sequence(2, b)}
    points = {"(1:1)": (0, 0, 1), "(0:1)": (0, 1, 0), "(1:0)": (1, 0, 0)}
    params_of = {"(1:1)": (1, 1), "(0:1)": (0, 1), "(1:0)": (1, 0)}
    flag_of = {"(1:1)": "cusp_11", "(0:1)": "cusp_01", "(1:0)": "cusp_10"}
    cusps = []
    for key in ("(1:1)", "(0:1)", "(1:0)"):
        seq = resolve_sequence(germs[key])
        record(flag_of[key], seq == expected[key], f"cusp at {key} resolved to {seq}")
        cusps.append(Cusp(params_of[key], points[key], seq, expected[key], single_puiseux_pair(seq)))

    record("genus", comb(d - 2, 2) + a + b == comb(d - 1, 2), "genus identity")
    return CuspidalCurve(params, f, q, P, Q, R, p, tuple(cusps), flags)


__all__ = [
    "FamilyParams", "CuspidalCurve", "Cusp", "CHECKS",
    "enumerate_degree", "taylor_coefficients", "build_f", "build_F", "build_qtilde",
    "parametrization", "f_hat", "implicit_equation", "grouped_equation", "expand_grouped",
    "chart_germs", "default_precision", "single_puiseux_pair", "construct", "certify",
]
