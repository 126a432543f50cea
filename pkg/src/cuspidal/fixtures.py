"""Published affine equations for 4 <= d <= 7, transcribed term by term.

Each entry keeps the printed layout

    p = (leading terms) - (X - Y)^(d-2) + X*Y*(bracket terms)

with monomials written as ``(coefficient, i, j)`` for ``c X^i Y^j``.

The source prints the quartic's heading as "d=4 and a=1 (Steiner's quartic)"
but labels the polynomial ``p_{4,3}``; it is keyed here by (d, a) = (4, 1).
"""

from fractions import Fraction as F

from .algebra import X, Y, BiPoly

_PRINTED = {
    (4, 1): {
        "leading": [(F(-1, 4), 2, 2)],
        "bracket": [(F(1), 0, 1), (F(1), 1, 0)],
        "printed_label": "p_{4,3}",
    },
    (5, 2): {
        "leading": [(F(1, 64), 2, 3), (F(-9, 64), 3, 2)],
        "bracket": [(F(3, 2), 1, 1), (F(-1, 4), 0, 2), (F(3, 4), 2, 0)],
    },
    (6, 2): {
        "leading": [(F(7, 128), 3, 3), (F(-1, 256), 4, 2), (F(-1, 256), 2, 4)],
        "bracket": [(F(9, 8), 1, 2), (F(-1, 8), 0, 3), (F(9, 8), 2, 1), (F(-1, 8), 3, 0)],
    },
    (6, 3): {
        "leading": [(F(3, 128), 3, 3), (F(-25, 256), 4, 2), (F(-1, 256), 2, 4)],
        "bracket": [(F(1, 8), 0, 3), (F(-5, 8), 1, 2), (F(15, 8), 2, 1), (F(5, 8), 3, 0)],
    },
    (7, 3): {
        "leading": [(F(475, 16384), 4, 3), (F(-25, 16384), 5, 2),
                    (F(-75, 16384), 3, 4), (F(9, 16384), 2, 5)],
        "bracket": [(F(3, 64), 0, 4), (F(-5, 16), 1, 3), (F(45, 32), 2, 2),
                    (F(15, 16), 3, 1), (F(-5, 64), 4, 0)],
    },
    (7, 4): {
        "leading": [(F(459, 16384), 4, 3), (F(-1225, 16384), 5, 2),
                    (F(-155, 16384), 3, 4), (F(25, 16384), 2, 5)],
        "bracket": [(F(7, 16), 1, 3), (F(-5, 64), 0, 4), (F(-35, 32), 2, 2),
                    (F(35, 16), 3, 1), (F(35, 64), 4, 0)],
    },
}


def _poly(terms):
    return BiPoly({(i, j): c for c, i, j in terms})


def printed_parts(d, a):
    """``(leading, bracket)`` as BiPolys for the printed (d, a)."""
    entry = _PRINTED[(d, a)]
    return _poly(entry["leading"]), _poly(entry["bracket"])


def golden_fixtures():
    """Expanded equations keyed by ``(d, a)``."""
    out = {}
    for (d, a) in _PRINTED:
        leading, bracket = printed_parts(d, a)
        out[(d, a)] = leading - (X - Y) ** (d - 2) + X * Y * bracket
    return out


FIXTURE_KEYS = tuple(_PRINTED)
