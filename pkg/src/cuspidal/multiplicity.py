"""Multiplicity sequences of plane-curve cusps.

A sequence is stored in full: ``(m_0, ..., m_n)`` with ``m_n = 1`` and the
trailing run of ones that the minimal embedded resolution produces.  The
compact notation ``(m_a)`` stands for ``a`` copies of ``m`` followed by
``m + 1`` ones; ``(m)`` is ``(m_1)``.
"""

import re
from dataclasses import dataclass
from math import ceil

from .errors import (
    EmptyInput,
    IndexOutOfRange,
    InvalidNotation,
    InvalidSequence,
    PaddingAmbiguous,
)


@dataclass(frozen=True)
class Violation:
    """A failed condition; ``condition`` is one of ``"positive"``,
    ``"non-increasing"``, ``"ends-in-one"``, ``"(i)"`` or ``"(ii)"``."""

    condition: str
    index: int
    message: str

    def __str__(self):
        return f"condition {self.condition} at index {self.index}: {self.message}"


@dataclass(frozen=True)
class ValidityReport:
    entries: tuple
    violations: tuple = ()

    @property
    def ok(self):
        return not self.violations

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class SequenceInvariants:
    milnor: int
    delta: int
    eta: int
    omega: int
    rho: int
    k: int

    def to_json(self):
        return {"milnor": self.milnor, "delta": self.delta, "eta": self.eta,
                "omega": self.omega, "rho": self.rho, "k": self.k}


def validate_sequence(entries):
    entries = tuple(entries)
    if not entries:
        raise EmptyInput("empty multiplicity sequence")
    violations = []
    for idx, m in enumerate(entries):
        if not isinstance(m, int) or m < 1:
            violations.append(Violation("positive", idx, f"entry {m!r} is not a positive integer"))
    if violations:
        return ValidityReport(entries, tuple(violations))

    n = len(entries) - 1
    for idx in range(1, n + 1):
        if entries[idx] > entries[idx - 1]:
            violations.append(Violation(
                "non-increasing", idx, f"m_{idx} = {entries[idx]} exceeds m_{idx - 1} = {entries[idx - 1]}"))
    if entries[-1] != 1:
        violations.append(Violation("ends-in-one", n, f"last entry is {entries[-1]}, not 1"))

    for idx in range(1, n + 1):
        if not _proximity_ok(entries, idx):
            violations.append(Violation(
                "(i)", idx,
                f"m_{idx - 1} = {entries[idx - 1]} is not m_{idx} + ... + m_{{{idx}+k}} "
                f"over a block of equal entries"))

    r = _trailing_ones(entries)
    if r < len(entries):
        lead = entries[n - r]
        if lead > 1 and lead != r - 1:
            violations.append(Violation(
                "(ii)", n - r,
                f"trailing run of {r} ones follows m_{n - r} = {lead}; "
                f"it must have length m + 1 = {lead + 1}"))
    return ValidityReport(entries, tuple(violations))


def _proximity_ok(entries, i):
    """Some ``k >= 0`` has ``m_{i-1} = m_i + ... + m_{i+k}`` with
    ``m_i = ... = m_{i+k-1}``."""
    target = entries[i - 1]
    total = 0
    for j in range(i, len(entries)):
        if j > i and entries[j - 1] != entries[i]:
            return False
        total += entries[j]
        if total == target:
            return True
        if total > target:
            return False
    return False


def _trailing_ones(entries):
    r = 0
    for m in reversed(entries):
        if m != 1:
            break
        r += 1
    return r


@dataclass(frozen=True, order=True)
class MultiplicitySequence:
    entries: tuple

    def __post_init__(self):
        report = validate_sequence(self.entries)
        if not report.ok:
            raise InvalidSequence(self.entries, report.violations)
        object.__setattr__(self, "entries", tuple(self.entries))

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    @property
    def k(self):
        """Number of blow-ups over the point."""
        return len(self.entries) - 1

    @property
    def multiplicity(self):
        return self.entries[0]

    def is_cusp(self):
        return self.entries[0] >= 2

    @property
    def singular_part(self):
        """Entries ``>= 2``, i.e. ``m_0 .. m_r``."""
        return tuple(m for m in self.entries if m >= 2)

    @property
    def r_index(self):
        """Index of the last entry ``>= 2``; None for a smooth germ."""
        part = self.singular_part
        return len(part) - 1 if part else None

    @property
    def last_singular(self):
        part = self.singular_part
        return part[-1] if part else None

    def compact(self):
        """``(m, a)`` when the sequence is ``(m_a)``, else None."""
        m = self.entries[0]
        if m < 2:
            return None
        a = len(self.singular_part)
        if self.entries == (m,) * a + (1,) * (m + 1):
            return m, a
        return None

    def compact_notation(self):
        c = self.compact()
        if c is None:
            return None
        m, a = c
        return f"({m})" if a == 1 else f"({m}_{a})"

    def format(self):
        return "(" + ",".join(str(m) for m in self.entries) + ")"

    def __str__(self):
        compact = self.compact_notation()
        full = self.format()
        return f"{compact} = {full}" if compact else full

    def to_json(self):
        return {"entries": list(self.entries), "compact": self.compact_notation(),
                "invariants": invariants_of(self).to_json()}

    @classmethod
    def from_json(cls, data):
        return cls(tuple(int(m) for m in data["entries"]))


SMOOTH = MultiplicitySequence((1,))


def compact_sequence(m, a=1):
    """The sequence ``(m_a)``."""
    if m < 2 or a < 1:
        raise InvalidNotation(f"(m_a) needs m >= 2 and a >= 1, got m={m}, a={a}")
    return MultiplicitySequence((m,) * a + (1,) * (m + 1))


_COMPACT = re.compile(r"^\(\s*(\d+)\s*(?:_\s*(\d+)\s*)?\)$")
_RAW = re.compile(r"^\(?\s*\d+(\s*,\s*\d+)*\s*\)?$")


def canonicalize(spec):
    """Full canonical sequence from compact notation or a raw list.

    A raw list that does not end in 1 is padded with ``last + 1`` ones.
    """
    if isinstance(spec, MultiplicitySequence):
        return spec
    if isinstance(spec, str):
        text = spec.strip()
        if not text:
            raise EmptyInput("empty sequence notation")
        match = _COMPACT.match(text)
        if match:
            m = int(match.group(1))
            a = int(match.group(2)) if match.group(2) else 1
            if m == 1 and match.group(2) is None:
                return SMOOTH
            return compact_sequence(m, a)
        if not _RAW.match(text):
            raise InvalidNotation(f"cannot parse multiplicity sequence {spec!r}")
        entries = [int(x) for x in text.strip("() ").split(",")]
    else:
        entries = list(spec)
        if any(not isinstance(m, int) or isinstance(m, bool) for m in entries):
            raise InvalidNotation("raw sequence entries must be integers")
    if not entries:
        raise EmptyInput("empty multiplicity sequence")
    if entries[-1] != 1:
        entries = entries + [1] * (entries[-1] + 1)
        return MultiplicitySequence(tuple(entries))
    report = validate_sequence(entries)
    if not report.ok:
        if any(v.condition == "(ii)" for v in report.violations):
            raise PaddingAmbiguous(
                f"{tuple(entries)} already ends in ones but the run has the wrong length")
        raise InvalidSequence(entries, report.violations)
    return MultiplicitySequence(tuple(entries))


def invariants_of(seq):
    e = seq.entries
    k = len(e) - 1
    milnor = sum(m * (m - 1) for m in e)
    eta = sum(m - 1 for m in e)
    omega = sum(ceil(e[i - 1] / e[i]) - 1 for i in range(1, k + 1))
    rho = max(k - 1 - omega, 0)
    return SequenceInvariants(milnor=milnor, delta=milnor // 2, eta=eta,
                              omega=omega, rho=rho, k=k)


def contact_orders(seq, cap=64):
    """Intersection numbers realizable by a smooth germ through the point.

    ``k = m_0 + ... + m_s`` with ``m_0 = ... = m_{s-1}``, the sequence being
    continued by ones.  For a smooth germ every ``k >= 1`` qualifies; the
    result is then cut at ``cap``.
    """
    e = list(seq.entries)

    def m(i):
        return e[i] if i < len(e) else 1

    out = set()
    total = 0
    s = 0
    while True:
        total += m(s)
        if total > cap and m(0) == 1:
            break
        out.add(total)
        # extending to s + 1 requires m_s == m_0
        if m(s) != m(0):
            break
        s += 1
    return out


def exceptional_intersection(seq, i, k):
    """Intersection of the k-th proper transform of ``E_i`` with ``C_{i+k}``."""
    e = seq.entries
    if i < 1 or k < 0 or i + k > len(e):
        raise IndexOutOfRange(f"need 1 <= i and i + k <= {len(e)}, got i={i}, k={k}")
    if k == 0:
        return e[i - 1]
    return max(0, e[i - 1] - sum(e[i:i + k]))


def enumerate_valid(max_delta):
    """Every cusp sequence with ``delta <= max_delta``, by singular prefix."""
    if max_delta < 1:
        raise IndexOutOfRange("max_delta must be at least 1")
    found = []

    def extend(prefix, budget):
        if prefix:
            entries = tuple(prefix) + (1,) * (prefix[-1] + 1)
            if validate_sequence(entries).ok:
                found.append(MultiplicitySequence(entries))
        top = prefix[-1] if prefix else None
        m = 2
        while m * (m - 1) // 2 <= budget and (top is None or m <= top):
            extend(prefix + [m], budget - m * (m - 1) // 2)
            m += 1

    extend([], max_delta)
    found.sort(key=lambda s: (invariants_of(s).delta, s.entries))
    yield from found
