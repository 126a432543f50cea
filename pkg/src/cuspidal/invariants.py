"""Deformation and intersection numerics of a cuspidal plane curve.

Everything is computed from the degree and the cusps' multiplicity
sequences.  Two summation conventions are in use:

* full sums run over every entry of the canonical sequence, trailing ones
  and the final 1 included (self-intersection, ``K.C~``);
* truncated sums stop at ``r``, the index of the last entry ``>= 2``
  (the unobstructedness tests).
"""

from dataclasses import dataclass, field
from math import comb

from .errors import DegenerateProjection, DomainError, InvariantViolation, TooFewCusps
from .multiplicity import MultiplicitySequence, canonicalize, invariants_of

RIGIDITY_CUSP_BOUND = 10


@dataclass(frozen=True)
class CurveSingularityData:
    d: int
    cusps: tuple

    def __post_init__(self):
        cusps = tuple(canonicalize(c) for c in self.cusps)
        object.__setattr__(self, "cusps", cusps)
        if self.d < 3:
            raise DomainError(f"degree must be at least 3, got {self.d}")
        for c in cusps:
            if not c.is_cusp():
                raise DomainError(f"{c} is not singular (m_0 < 2)")

    @property
    def s(self):
        return len(self.cusps)

    @classmethod
    def of(cls, d, *cusps):
        return cls(d, tuple(cusps))

    def to_json(self):
        return {"d": self.d, "cusps": [list(c.entries) for c in self.cusps]}


@dataclass(frozen=True)
class CuspContribution:
    eta: int
    omega: int

    @property
    def contribution(self):
        return self.eta + self.omega - 1

    def to_json(self):
        return {"eta": self.eta, "omega": self.omega, "contribution": self.contribution}


def chi_theta(data):
    """``K(K+D) = -3(d-3) + sum (eta_P + omega_P - 1)`` with its breakdown."""
    parts = []
    for seq in data.cusps:
        inv = invariants_of(seq)
        parts.append(CuspContribution(inv.eta, inv.omega))
    chi = -3 * (data.d - 3) + sum(p.contribution for p in parts)
    return chi, parts


def chi_theta_stepwise(data):
    """The same number accumulated one blow-up at a time.

    Starting from ``K(K+C) = -3(d-3)`` on the plane, the blow-up at a point
    of multiplicity ``m`` adds ``(m - 1) + (delta - 1)`` where ``delta`` is 0
    for the first blow-up over a cusp, 2 for an inner and 1 for an outer one.
    """
    total = -3 * (data.d - 3)
    for seq in data.cusps:
        e = seq.entries
        kinds = blowup_kinds(seq)
        for i, kind in enumerate(kinds):
            delta = {"first": 0, "outer": 1, "inner": 2}[kind]
            total += (e[i] - 1) + (delta - 1)
    return total


def blowup_kinds(seq):
    """Classify blow-ups ``sigma_1 .. sigma_k`` as first/inner/outer.

    ``sigma_{i+1}`` is inner when its centre lies on ``E_i`` and on an
    earlier exceptional curve, which happens iff some ``E_j`` (``j < i``)
    still meets ``C_i`` there; the exceptional intersection formula gives
    that count.
    """
    e = seq.entries
    k = len(e) - 1
    kinds = []
    for step in range(1, k + 1):
        if step == 1:
            kinds.append("first")
            continue
        i = step - 1
        inner = any(_meets(e, j, i - j) for j in range(1, i))
        kinds.append("inner" if inner else "outer")
    return kinds


def _meets(e, j, offset):
    """Whether ``E_j^{(offset)}`` meets ``C_{j+offset}``."""
    if offset == 0:
        return e[j - 1] > 0
    return e[j - 1] - sum(e[j:j + offset]) > 0


@dataclass(frozen=True)
class CurveNumerics:
    c_tilde_sq: int
    k_dot_c: int
    d_sq: int
    e_p_sq: tuple

    def to_json(self):
        return {"c_tilde_sq": self.c_tilde_sq, "k_dot_c": self.k_dot_c,
                "d_sq": self.d_sq, "e_p_sq": list(self.e_p_sq)}


def full_sum(data):
    return sum(sum(seq.entries) for seq in data.cusps)


def truncated_sum(data):
    """``sum_sigma sum_{j <= r_sigma} m_{sigma j}``: entries ``>= 2`` only."""
    return sum(sum(seq.singular_part) for seq in data.cusps)


def last_singular_sum(data):
    """``sum_sigma m_{sigma r_sigma}``."""
    return sum(seq.last_singular for seq in data.cusps)


def curve_numerics(data, rational=None):
    """``C~^2``, ``K.C~``, ``D^2`` and the ``E_P^2`` on the minimal resolution.

    ``C~^2 = 3d + s - 2 - sum m_ij`` and ``K.C~ = -3d - s + sum m_ij`` use
    full sums.  ``D^2 = C~^2 + 2s + sum E_P^2`` with ``E_P^2 = -omega_P - 1``.
    When the data is rational (``rational`` defaults to the genus test) the
    adjunction ``K.C~ + C~^2 = -2`` and the direct ``d^2 - sum m^2`` route
    are checked as well.
    """
    d, s = data.d, data.s
    total = full_sum(data)
    c_sq = 3 * d + s - 2 - total
    k_c = -3 * d - s + total
    omegas = [invariants_of(seq).omega for seq in data.cusps]
    e_p_sq = tuple(-w - 1 for w in omegas)
    d_sq = c_sq + 2 * s + sum(e_p_sq)
    if d_sq != c_sq - sum(w - 1 for w in omegas):
        raise InvariantViolation("D^2 expansions disagree")
    if rational is None:
        rational = genus_identity_check(data)
    if rational:
        if k_c + c_sq != -2:
            raise InvariantViolation(f"K.C~ + C~^2 = {k_c + c_sq}, expected -2")
        if c_sq != self_intersection_direct(data):
            raise InvariantViolation("C~^2 differs from d^2 - sum m^2")
        if k_c != canonical_degree_recursive(data):
            raise InvariantViolation("K.C~ differs from the blow-up recursion")
    return CurveNumerics(c_sq, k_c, d_sq, e_p_sq)


def self_intersection_direct(data):
    """``d^2 - sum m_i^2`` over the centres actually blown up."""
    return data.d ** 2 - sum(m * m for seq in data.cusps for m in seq.entries[:-1])


def canonical_degree_recursive(data):
    """``K.C`` from ``-3d`` on the plane, adding ``m`` per blow-up of a
    point of multiplicity ``m``."""
    kc = -3 * data.d
    for seq in data.cusps:
        for m in seq.entries[:-1]:
            kc += m
    return kc


def genus_identity_check(data):
    """``(d-1)(d-2) = sum mu_P``: the curve is rational."""
    return (data.d - 1) * (data.d - 2) == sum(invariants_of(s).milnor for s in data.cusps)


@dataclass(frozen=True)
class ProjectionBound:
    lhs: int
    rhs: int

    @property
    def holds(self):
        return self.lhs <= self.rhs

    def to_json(self):
        return {"lhs": self.lhs, "rhs": self.rhs, "holds": self.holds}


def projection_bound(d, from_cusp, others):
    """Branching count of the projection from a cusp of multiplicity ``m``.

    ``lhs = sum_others (m_j - 1) + (m_{P,1} - 1)`` against
    ``rhs = 2(d - m - 1)``.
    """
    from_cusp = canonicalize(from_cusp)
    others = [canonicalize(o) for o in others]
    m = from_cusp.multiplicity
    if m >= d:
        raise DegenerateProjection(f"projection from a point of multiplicity {m} >= d = {d}")
    m1 = from_cusp.entries[1] if len(from_cusp) > 1 else 1
    lhs = sum(o.multiplicity - 1 for o in others) + (m1 - 1)
    return ProjectionBound(lhs, 2 * (d - m - 1))


@dataclass(frozen=True)
class UnobstructedCheck:
    truncated_sum: int
    three_d: int
    k_dot_c: int
    last_singular_sum: int

    @property
    def cond_4_2(self):
        return self.truncated_sum < self.three_d

    @property
    def cond_4_1b(self):
        return self.k_dot_c < self.last_singular_sum

    def to_json(self):
        return {"cond_4_2": self.cond_4_2, "cond_4_1b": self.cond_4_1b,
                "truncated_sum": self.truncated_sum, "three_d": self.three_d,
                "k_dot_c": self.k_dot_c, "last_singular_sum": self.last_singular_sum}


def unobstructed_check(data):
    """Two sufficient conditions for ``h^2 = 0``.

    ``cond_4_2``: the truncated sum is below ``3d``.
    ``cond_4_1b``: ``K.C~`` is below ``sum_sigma m_{sigma r_sigma}``.
    """
    k_c = -3 * data.d - data.s + full_sum(data)
    return UnobstructedCheck(truncated_sum(data), 3 * data.d, k_c, last_singular_sum(data))


@dataclass(frozen=True)
class RigidityReport:
    contribution_sum: int
    target: int
    kappa: int
    note: str

    @property
    def identity_holds(self):
        return self.contribution_sum == self.target

    @property
    def kappa_below_bound(self):
        return self.kappa < RIGIDITY_CUSP_BOUND

    def to_json(self):
        return {"contribution_sum": self.contribution_sum, "target": self.target,
                "identity_holds": self.identity_holds, "kappa": self.kappa,
                "kappa_below_bound": self.kappa_below_bound, "note": self.note}


def rigidity_report(data):
    """Whether ``sum (eta + omega - 1) = 3(d-3)``, plus the cusp-count remark.

    Needs at least three cusps (the complement is then of log general type).
    """
    if data.s < 3:
        raise TooFewCusps(f"{data.s} cusp(s): the rigidity statements need at least 3")
    _, parts = chi_theta(data)
    total = sum(p.contribution for p in parts)
    kappa = data.s
    if kappa < RIGIDITY_CUSP_BOUND:
        note = f"kappa = {kappa} < {RIGIDITY_CUSP_BOUND}: compatible with projective rigidity"
    else:
        note = (f"kappa = {kappa} >= {RIGIDITY_CUSP_BOUND}: not projectively rigid if realizable")
    return RigidityReport(total, 3 * (data.d - 3), kappa, note)


@dataclass(frozen=True)
class InvariantReport:
    data: CurveSingularityData
    chi: int
    per_cusp: tuple
    numerics: CurveNumerics
    genus_ok: bool
    rigidity: RigidityReport = None
    unobstructed: UnobstructedCheck = None
    notes: tuple = field(default_factory=tuple)

    @property
    def c_tilde_sq(self):
        return self.numerics.c_tilde_sq

    @property
    def k_dot_c(self):
        return self.numerics.k_dot_c

    @property
    def d_sq(self):
        return self.numerics.d_sq

    @property
    def e_p_sq(self):
        return self.numerics.e_p_sq

    @property
    def rigidity_identity_ok(self):
        return self.rigidity.identity_holds if self.rigidity else None

    @property
    def unobstructed_hint(self):
        return bool(self.unobstructed.cond_4_2 or self.unobstructed.cond_4_1b)

    @property
    def kappa_bound_note(self):
        return self.rigidity.note if self.rigidity else "; ".join(self.notes)

    def to_json(self):
        return {
            "d": self.data.d,
            "cusps": [list(c.entries) for c in self.data.cusps],
            "chi": self.chi,
            "per_cusp": [p.to_json() for p in self.per_cusp],
            "c_tilde_sq": self.c_tilde_sq,
            "k_dot_c": self.k_dot_c,
            "d_sq": self.d_sq,
            "e_p_sq": list(self.e_p_sq),
            "genus_ok": self.genus_ok,
            "rigidity_identity_ok": self.rigidity_identity_ok,
            "unobstructed_hint": self.unobstructed_hint,
            "unobstructed": self.unobstructed.to_json(),
            "kappa_bound_note": self.kappa_bound_note,
        }


def invariant_report(data):
    chi, parts = chi_theta(data)
    if chi != chi_theta_stepwise(data):
        raise InvariantViolation("closed-form and stepwise K(K+D) disagree")
    genus_ok = genus_identity_check(data)
    numerics = curve_numerics(data, rational=genus_ok)
    notes = []
    try:
        rigidity = rigidity_report(data)
    except TooFewCusps as exc:
        rigidity = None
        notes.append(str(exc))
    return InvariantReport(data, chi, tuple(parts), numerics, genus_ok, rigidity,
                           unobstructed_check(data), tuple(notes))


def family_data(params):
    """Singularity data ``[(d-2), (2_a), (2_b)]`` of the family member."""
    from .multiplicity import compact_sequence

    return CurveSingularityData(params.d, (compact_sequence(params.d - 2),
                                           compact_sequence(2, params.a),
                                           compact_sequence(2, params.b)))


def genus_binomial_identity(d, a, b):
    return comb(d - 2, 2) + a + b == comb(d - 1, 2)
