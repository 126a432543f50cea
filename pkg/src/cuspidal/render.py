"""Text, JSON, LaTeX and DOT emitters."""

import json
from fractions import Fraction

from .algebra import BiPoly, UniPoly
from .algebra.unipoly import format_poly
from .errors import UnsupportedFormat
from .family import CuspidalCurve, grouped_equation
from .invariants import InvariantReport
from .multiplicity import MultiplicitySequence
from .topology import DualGraph, GroupPresentation

FORMATS = ("text", "json", "latex", "dot")


def to_json_text(data):
    """Deterministic JSON: keys keep their construction order."""
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def _payload(obj):
    return obj.to_json() if hasattr(obj, "to_json") else obj


def render(obj, fmt="text"):
    if fmt not in FORMATS:
        raise UnsupportedFormat(f"unknown format {fmt!r}; choose from {', '.join(FORMATS)}")
    if fmt == "json":
        return to_json_text(_payload(obj))
    if fmt == "dot":
        if not isinstance(obj, DualGraph):
            raise UnsupportedFormat("dot output is only available for dual graphs")
        return obj.to_dot()
    if fmt == "latex":
        if not isinstance(obj, CuspidalCurve):
            raise UnsupportedFormat("latex output is only available for curve records")
        return latex_document(obj)
    return render_text(obj)


# -- text ---------------------------------------------------------------------

def render_text(obj):
    if isinstance(obj, (UniPoly, BiPoly)):
        return str(obj) + "\n"
    if isinstance(obj, MultiplicitySequence):
        return str(obj) + "\n"
    if isinstance(obj, CuspidalCurve):
        return curve_text(obj)
    if isinstance(obj, InvariantReport):
        return report_text(obj)
    if isinstance(obj, DualGraph):
        return graph_text(obj)
    if isinstance(obj, GroupPresentation):
        return presentation_text(obj)
    if isinstance(obj, dict):
        return "".join(f"{k}: {_scalar(v)}\n" for k, v in obj.items())
    return f"{obj}\n"


def _scalar(v):
    if isinstance(v, bool) or v is None:
        return json.dumps(v)
    if isinstance(v, (list, tuple)):
        return ", ".join(_scalar(x) for x in v)
    if isinstance(v, dict):
        return "{" + ", ".join(f"{k}={_scalar(x)}" for k, x in v.items()) + "}"
    return str(v)


def curve_text(c):
    p = c.params
    lines = [
        f"curve {p}  (b = {p.b})",
        f"f(T)       = {format_poly(c.f)}",
        f"q~(T)      = {format_poly(c.q_tilde)}",
        f"P(s,t)     = {_form_text(c.P)}",
        f"Q(s,t)     = {_form_text(c.Q)}",
        f"R(s,t)     = {_form_text(c.R)}",
        f"p(X,Y)     = {c.affine_equation}",
        "cusps:",
    ]
    for cusp in c.cusps:
        pair = f"  puiseux {tuple(cusp.puiseux_pair)}" if cusp.puiseux_pair else ""
        lines.append(f"  ({cusp.parameter[0]}:{cusp.parameter[1]}) -> "
                     f"({cusp.point[0]}:{cusp.point[1]}:{cusp.point[2]})  {cusp.sequence}{pair}")
    if c.certified:
        lines.append("certified:")
        lines.extend(f"  {k:<14}{'ok' if v else 'FAILED'}" for k, v in c.certified.items())
    return "\n".join(lines) + "\n"


def _form_text(form):
    terms = []
    for i, c in enumerate(form.coeffs):
        if c:
            mono = "*".join(x for x in (_pw("s", i), _pw("t", form.degree - i)) if x)
            terms.append((c, mono))
    if not terms:
        return "0"
    out = ""
    for k, (c, mono) in enumerate(terms):
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        body = mono if mag == 1 and mono else (f"{_rat(mag)}*{mono}" if mono else _rat(mag))
        out += (("-" if sign == "-" else "") if k == 0 else f" {sign} ") + body
    return out


def _pw(v, k):
    return "" if k == 0 else (v if k == 1 else f"{v}^{k}")


def _rat(q):
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def report_text(r):
    d = r.data
    lines = [f"degree {d.d}, {d.s} cusp(s)"]
    for seq, part, esq in zip(d.cusps, r.per_cusp, r.e_p_sq):
        lines.append(f"  {seq}: eta={part.eta} omega={part.omega} "
                     f"eta+omega-1={part.contribution} E_P^2={esq}")
    u = r.unobstructed
    lines += [
        f"K(K+D)            = {r.chi}",
        f"C~^2              = {r.c_tilde_sq}",
        f"K.C~              = {r.k_dot_c}",
        f"D^2               = {r.d_sq}",
        f"genus identity    : {'holds' if r.genus_ok else 'fails'}",
        f"rigidity identity : {_yesno(r.rigidity_identity_ok)}",
        f"sum_(j<=r) m < 3d : {u.truncated_sum} < {u.three_d} {_yesno(u.cond_4_2)}",
        f"K.C~ < sum m_r    : {u.k_dot_c} < {u.last_singular_sum} {_yesno(u.cond_4_1b)}",
        f"note              : {r.kappa_bound_note}",
    ]
    return "\n".join(lines) + "\n"


def _yesno(v):
    return "n/a" if v is None else ("yes" if v else "no")


def graph_text(g):
    lines = [f"nodes ({len(g.nodes)}):"]
    lines += [f"  {n.id:<8}{n.label:<6}{n.weight:>4}" for n in g.nodes]
    lines.append(f"edges ({len(g.edges)}):")
    lines += [f"  {u} -- {v}" for u, v in g.edges]
    if g.curve_arrow is not None:
        lines.append(f"curve meets {g.curve_arrow}")
    return "\n".join(lines) + "\n"


def presentation_text(pr):
    m = pr.meta
    finite = {True: "finite", False: "infinite", None: "not recorded"}[m.get("finite")]
    return (f"{m.get('name', 'G')} = {pr.format()}\n"
            f"n = {m.get('n')}, {'abelian' if m.get('abelian') else 'non-abelian'}, {finite}\n")


# -- LaTeX --------------------------------------------------------------------

def latex_rat(q, leading=False):
    q = Fraction(q)
    sign = "-" if q < 0 else ("" if leading else "+")
    q = abs(q)
    body = str(q.numerator) if q.denominator == 1 else rf"\frac{{{q.numerator}}}{{{q.denominator}}}"
    return sign, body


def latex_poly(p):
    """Terms in the poly's own order; coefficient 1 is suppressed."""
    if p.is_zero():
        return "0"
    out = []
    for k, ((i, j), c) in enumerate(p):
        sign, body = latex_rat(c, leading=(k == 0))
        mono = "".join(x for x in (_tex_pw("X", i), _tex_pw("Y", j)) if x)
        if mono and body == "1":
            body = ""
        elif mono:
            body += r"\,"
        out.append(f"{sign if k == 0 else ' ' + sign + ' '}{body}{mono}")
    return "".join(out)


def _tex_pw(v, k):
    return "" if k == 0 else (v if k == 1 else f"{v}^{{{k}}}")


def latex_equation(curve):
    """``p = (remainder) - (X - Y)^{d-2} + XY(bracket)``."""
    params = curve.params
    remainder, bracket = grouped_equation(params)
    power = params.d - 2
    middle = "(X-Y)" if power == 1 else f"(X-Y)^{{{power}}}"
    return (rf"p_{{{params.d},{params.a}}} = {latex_poly(remainder)} - {middle}"
            rf" + XY\left({latex_poly(bracket)}\right)")


def latex_document(curve):
    p = curve.params
    return "\n".join([
        r"\documentclass{article}",
        r"\usepackage{amsmath}",
        r"\begin{document}",
        rf"\noindent $d={p.d}$, $a={p.a}$, $b={p.b}$:",
        r"\[",
        latex_equation(curve),
        r"\]",
        r"\end{document}",
        "",
    ])


# -- delimited tables ---------------------------------------------------------

def tsv(rows, header):
    lines = ["\t".join(header)]
    for row in rows:
        lines.append("\t".join(_cell(row[h]) for h in header))
    return "\n".join(lines) + "\n"


def _cell(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)
