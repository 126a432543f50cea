"""Multiplicity sequences of parametrized branches by blowing up.

A branch ``t -> (x(t), y(t))`` is blown up in the chart of the coordinate of
smaller order: with ``ord x <= ord y`` the proper transform is
``(x, y/x - c)``, ``c`` the constant term of ``y/x``.  The multiplicity at
each step is ``min(ord x, ord y)``.
"""

import os
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from .algebra import PowSeries, UniPoly, parse_rat
from .errors import (
    DomainError,
    ExpressionSyntaxError,
    NonvanishingAtZero,
    PrecisionExhausted,
)
from .multiplicity import MultiplicitySequence, canonicalize

DEFAULT_MAX_PRECISION = 4096


def max_precision():
    """Retry cap, overridable through ``CUSPIDAL_MAX_PRECISION``."""
    raw = os.environ.get("CUSPIDAL_MAX_PRECISION")
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            raise DomainError(f"CUSPIDAL_MAX_PRECISION must be an integer, got {raw!r}") from None
    return DEFAULT_MAX_PRECISION


@dataclass(frozen=True)
class BranchGerm:
    """Parametrized germ through the origin.

    ``refine``, when set, rebuilds the same germ at a larger precision; the
    resolver uses it to retry after PrecisionExhausted.
    """

    x: PowSeries
    y: PowSeries
    refine: Optional[Callable[[int], "BranchGerm"]] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if self.x.coeffs[0] or self.y.coeffs[0]:
            raise NonvanishingAtZero("germ does not pass through the origin")
        if self.x.order() is None and self.y.order() is None:
            raise PrecisionExhausted("both coordinates vanish to the known precision")

    @property
    def precision(self):
        return min(self.x.precision, self.y.precision)

    @classmethod
    def from_polys(cls, x, y, precision):
        """Germ of polynomial coordinates; refinement is exact."""
        def build(n):
            return cls(PowSeries.from_poly(x, n), PowSeries.from_poly(y, n), refine=build)
        return build(precision)

    def at_precision(self, n):
        if self.refine is None:
            raise PrecisionExhausted("germ cannot be refined beyond its precision")
        return self.refine(n)


def order_of(s):
    """Order of a series; None stands for 'zero to the known precision'."""
    return s.order()


def _orders(g):
    ox, oy = g.x.order(), g.y.order()
    if ox is None and oy is None:
        raise PrecisionExhausted("both coordinates vanish to the known precision")
    return ox, oy


def blowup_step(g):
    """One blow-up; returns ``(multiplicity, proper transform)``.

    Ties ``ord x == ord y`` stay in the x-chart; swap only when
    ``ord y < ord x``.
    """
    mult, nxt, _, _ = _blowup(g)
    return mult, nxt


def _blowup(g):
    ox, oy = _orders(g)
    swapped = False
    x, y = g.x, g.y
    if ox is None or (oy is not None and oy < ox):
        x, y, ox, oy = y, x, oy, ox
        swapped = True
    if oy is None:
        # y vanishes to its known precision: can't tell whether ord y >= ord x
        if y.precision <= ox:
            raise PrecisionExhausted("second coordinate known only below the first's order")
    ratio = y / x
    c = ratio[0]
    nxt = BranchGerm(x.truncate(min(x.precision, ratio.precision + ox)), ratio - c)
    return ox, nxt, swapped, c


@dataclass(frozen=True)
class BlowupStep:
    """State after blowing up ``P_{i-1}``: ``E_i`` is the new curve.

    ``intersections[j]`` is ``E_j^{(i-j)} . C_i`` for ``j = 1..i``; ``weights``
    and ``edges`` describe the exceptional configuration on ``V_i``.
    """

    index: int
    multiplicity: int
    intersections: dict
    weights: dict
    edges: frozenset
    through_center: tuple
    curve_smooth: bool


@dataclass(frozen=True)
class ResolutionTrace:
    steps: tuple
    final_germ: BranchGerm

    @property
    def multiplicities(self):
        return tuple(s.multiplicity for s in self.steps)


def iter_blowups(g):
    """Blow up indefinitely, yielding ``(BlowupStep, proper transform)``.

    In the chart after each blow-up, at most two exceptional curves pass
    through the origin and they are the coordinate axes.  An axis ``{x=0}``
    meets the branch with multiplicity ``ord x``; curves off the origin meet
    it not at all.
    """
    weights = {}
    edges = set()
    xlab = ylab = None
    i = 0
    while True:
        i += 1
        mult, g, swapped, c = _blowup(g)
        if swapped:
            xlab, ylab = ylab, xlab
        through = tuple(lab for lab in (xlab, ylab) if lab is not None)
        weights[i] = -1
        for lab in through:
            weights[lab] -= 1
            edges.add(frozenset((lab, i)))
        if len(through) == 2:
            edges.discard(frozenset(through))
        # new chart x' = x, y' = y/x - c: {x'=0} is the new curve and the old
        # {y=0} still passes through the origin only when c == 0
        xlab, ylab = i, (ylab if c == 0 else None)
        ox, oy = g.x.order(), g.y.order()
        inter = {j: (ox if j == xlab else oy if j == ylab else 0) for j in weights}
        if any(v is None for v in inter.values()):
            raise PrecisionExhausted("intersection with an exceptional curve exceeds the precision")
        curve_mult = min(o for o in (ox, oy) if o is not None)
        step = BlowupStep(
            index=i, multiplicity=mult, intersections=inter, weights=dict(weights),
            edges=frozenset(edges),
            through_center=tuple(lab for lab in (xlab, ylab) if lab is not None),
            curve_smooth=curve_mult == 1)
        yield step, g


def trace_blowups(g, steps):
    """The first ``steps`` blow-ups of :func:`iter_blowups`."""
    out = []
    final = g
    if steps:
        for step, final in iter_blowups(g):
            out.append(step)
            if len(out) == steps:
                break
    return ResolutionTrace(tuple(out), final)


def _resolve_once(g):
    mults = []
    while True:
        ox, oy = _orders(g)
        m = min(o for o in (ox, oy) if o is not None)
        if m == 1:
            break
        mult, g = blowup_step(g)
        mults.append(mult)
    if not mults:
        return MultiplicitySequence((1,))
    return canonicalize(mults)


def resolve_sequence(g, max_n=None):
    """Multiplicity sequence of the branch, padded with the trailing ones.

    On PrecisionExhausted the germ is refined to twice its precision, up to
    ``max_n`` (default from ``CUSPIDAL_MAX_PRECISION``).
    """
    cap = max_n if max_n is not None else max_precision()
    while True:
        try:
            return _resolve_once(g)
        except PrecisionExhausted:
            n = g.precision * 2
            if g.refine is None or g.precision >= cap:
                raise
            g = g.at_precision(min(n, cap))


def snc_resolution(g, max_steps=10_000):
    """Blow up until the total transform is simple normal crossing.

    Independent of the padding rule: stops once the branch is smooth and
    meets exactly one exceptional curve, transversally, at the centre.
    Returns the recorded multiplicities with the final 1 appended.
    """
    ox, oy = _orders(g)
    if min(o for o in (ox, oy) if o is not None) == 1:
        return MultiplicitySequence((1,))
    mults = []
    for step, _ in iter_blowups(g):
        mults.append(step.multiplicity)
        if step.curve_smooth and len(step.through_center) == 1 and \
                step.intersections[step.through_center[0]] == 1:
            return MultiplicitySequence(tuple(mults) + (1,))
        if len(mults) >= max_steps:
            break
    raise PrecisionExhausted("resolution did not terminate")


def detect_even_cusp(g, expected_r):
    """Whether a germ ``(t**2, y(t))`` has sequence ``(2_r)``.

    Even coefficients of ``y`` are removed by ``y -> y - p(x)`` first; then
    the test is ``c_1 = c_3 = ... = c_{2r-1} = 0`` and ``c_{2r+1} != 0``.
    """
    if g.x.order() != 2 or any(g.x.coeffs[3:]) or g.x.coeffs[2] != 1:
        raise DomainError("detect_even_cusp expects x = t^2")
    need = 2 * expected_r + 2
    if g.y.precision < need:
        if g.refine is None:
            raise PrecisionExhausted(f"need y known mod t^{need}")
        g = g.at_precision(need)
    y = g.y
    # with x = t^2 exactly, y - p(x) clears any chosen even coefficient
    normalized = [c if k % 2 else Fraction(0) for k, c in enumerate(y.coeffs[:need])]
    if any(normalized[k] for k in range(1, 2 * expected_r, 2)):
        return False
    return normalized[2 * expected_r + 1] != 0


# -- expression parsing -----------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<op>[-+*^])|(?P<var>t)|(?P<bad>\S))")


def _tokenize(text):
    tokens = []
    pos = 0
    while True:
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        kind = m.lastgroup
        at = m.start(kind)
        if kind == "bad":
            raise ExpressionSyntaxError(text, at, f"unexpected character {m.group(kind)!r}")
        tokens.append((kind, m.group(kind), at))
        pos = m.end()
    if text[pos:].strip():
        raise ExpressionSyntaxError(text, pos, "unexpected trailing input")
    tokens.append(("end", "", len(text)))
    return tokens


def parse_series_expr(text):
    """Parse ``term (('+'|'-') term)*`` with ``term := [rat '*'] 't' ['^' int]``.

    A bare rational parses as a constant term so that callers can reject it
    with a precise error.  Returns a UniPoly.
    """
    text = text.replace("\u2212", "-")
    tokens = _tokenize(text)
    pos = 0
    coeffs = {}

    def take(kind, value=None):
        nonlocal pos
        k, v, _ = tokens[pos]
        if k == kind and (value is None or v == value):
            pos += 1
            return v
        return None

    def fail(reason):
        raise ExpressionSyntaxError(text, tokens[pos][2], reason)

    sign = -1 if take("op", "-") else 1
    if sign == 1:
        take("op", "+")
    while True:
        coef = Fraction(1)
        exp = 1
        num = take("num")
        if num is not None:
            coef = parse_rat(num)
            if take("op", "*") is None:
                exp = 0
        if exp:
            if take("var") is None:
                fail("expected 't'")
            if take("op", "^") is not None:
                at = pos
                power = take("num")
                if power is None or "/" in power:
                    pos = at
                    fail("expected an integer exponent")
                exp = int(power)
        coeffs[exp] = coeffs.get(exp, 0) + sign * coef
        if take("end") is not None:
            break
        if take("op", "+") is not None:
            sign = 1
        elif take("op", "-") is not None:
            sign = -1
        else:
            fail("expected '+' or '-'")
    top = max(coeffs)
    return UniPoly([coeffs.get(k, 0) for k in range(top + 1)])


def parse_branch(expr_x, expr_y, n):
    """Germ from two expressions in ``t``, known mod ``t**n``."""
    x = parse_series_expr(expr_x)
    y = parse_series_expr(expr_y)
    for name, p in (("x", x), ("y", y)):
        if p[0]:
            raise NonvanishingAtZero(f"{name}(0) = {p[0]} is not zero")
    return BranchGerm.from_polys(x, y, n)
