"""Dense coefficient-list kernels shared by UniPoly, PowSeries and BinForm."""

from fractions import Fraction

from .rational import common_denominator


def trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return coeffs


def add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return out


def sub(a, b):
    out = list(a) + [Fraction(0)] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] -= c
    return out


def convolve(a, b, limit=None):
    """Product of two coefficient lists, optionally truncated to ``limit`` terms.

    Denominators are cleared first so the inner loop runs on Python ints;
    Fraction arithmetic in the quadratic loop is an order of magnitude slower.
    """
    if not a or not b:
        return []
    n = len(a) + len(b) - 1
    if limit is not None:
        n = min(n, limit)
    da = common_denominator(a)
    db = common_denominator(b)
    ia = [int(c * da) for c in a]
    ib = [int(c * db) for c in b]
    out = [0] * n
    for i, x in enumerate(ia):
        if not x or i >= n:
            continue
        top = min(len(ib), n - i)
        for j in range(top):
            y = ib[j]
            if y:
                out[i + j] += x * y
    den = da * db
    return [Fraction(c, den) for c in out]


def scale(a, c):
    return [c * x for x in a]
