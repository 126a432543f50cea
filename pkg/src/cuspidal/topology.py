"""Weighted dual graphs of the resolutions and the complement's pi_1."""

from dataclasses import dataclass, field
from math import gcd

from .errors import UnsupportedFamily
from .family import FamilyParams
from .multiplicity import canonicalize, compact_sequence


@dataclass(frozen=True)
class Node:
    id: str
    label: str
    weight: int

    def to_json(self):
        return {"id": self.id, "label": self.label, "weight": self.weight}


@dataclass(frozen=True)
class DualGraph:
    """Nodes carry self-intersections; ``curve_arrow`` is the node the
    proper transform of the curve meets."""

    nodes: tuple
    edges: tuple
    curve_arrow: str
    title: str = ""

    def node(self, nid):
        for n in self.nodes:
            if n.id == nid:
                return n
        raise KeyError(nid)

    def neighbours(self, nid):
        out = []
        for u, v in self.edges:
            if u == nid:
                out.append(v)
            elif v == nid:
                out.append(u)
        return out

    def is_connected(self):
        if not self.nodes:
            return True
        seen = {self.nodes[0].id}
        stack = [self.nodes[0].id]
        while stack:
            for w in self.neighbours(stack.pop()):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.nodes)

    def reduced_square(self, ids=None):
        """Self-intersection of the sum of the given curves (default all):
        ``sum w + 2 * #edges`` among them."""
        ids = set(n.id for n in self.nodes) if ids is None else set(ids)
        w = sum(n.weight for n in self.nodes if n.id in ids)
        e = sum(1 for u, v in self.edges if u in ids and v in ids)
        return w + 2 * e

    def to_json(self):
        return {"nodes": [n.to_json() for n in self.nodes],
                "edges": [list(e) for e in self.edges],
                "curve_arrow": self.curve_arrow}

    @classmethod
    def from_json(cls, data):
        return cls(tuple(Node(n["id"], n["label"], n["weight"]) for n in data["nodes"]),
                   tuple(tuple(e) for e in data["edges"]), data["curve_arrow"])

    def to_dot(self, name="G"):
        """DOT text; exceptional curves are labelled ``E_i (w)``, cusp
        pieces of a total transform become clusters."""
        lines = [f"graph {name} {{"]
        clusters = {}
        for n in self.nodes:
            clusters.setdefault(n.id.split(".")[0] if "." in n.id else None, []).append(n)
        for key, members in clusters.items():
            indent = "  "
            if key is not None:
                lines.append(f'  subgraph "cluster_{key}" {{')
                lines.append(f'    label="{key}";')
                indent = "    "
            for n in members:
                lines.append(indent + _dot_node(n))
            if key is not None:
                lines.append("  }")
        for u, v in self.edges:
            lines.append(f'  "{u}" -- "{v}";')
        if self.curve_arrow is not None:
            lines.append('  "C" [label="C~", shape=plaintext];')
            lines.append(f'  "{self.curve_arrow}" -- "C" [dir=forward];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _dot_node(n):
    if n.label == "C~":
        return f'"{n.id}" [label="C~", xlabel="{n.weight}"];'
    return f'"{n.id}" [label="{n.label} ({n.weight})"];'


def _cusp_graph(weights, edges, arrow, prefix=""):
    nodes = tuple(Node(f"{prefix}E{i}", f"E_{i}", w) for i, w in sorted(weights.items()))
    edges = tuple(sorted((f"{prefix}E{u}", f"{prefix}E{v}") for u, v in edges))
    return DualGraph(nodes, edges, f"{prefix}E{arrow}")


def cusp_dual_graph(seq, prefix=""):
    """Resolution graph of ``(m)`` (``m >= 3``) or ``(2_a)``.

    ``(m)``: ``E_1`` of weight ``-(m+1)`` and a chain ``E_2 .. E_m`` of
    ``-2``-curves, both meeting the ``-1``-curve ``E_{m+1}``.
    ``(2_a)``: a chain ``E_1 .. E_{a-1}`` of ``-2``-curves, then ``E_a``
    of weight ``-3``; ``E_a`` and ``E_{a+1}`` (``-2``) meet ``E_{a+2}``.
    The curve meets the last curve in both cases.
    """
    seq = canonicalize(seq)
    c = seq.compact()
    if c is None or (c[1] > 1 and c[0] != 2):
        raise UnsupportedFamily(f"no dual graph template for {seq.format()}")
    m, a = c
    if m == 2:
        last = a + 2
        weights = {i: -2 for i in range(1, a)}
        weights.update({a: -3, a + 1: -2, last: -1})
        edges = [(i, i + 1) for i in range(1, a)] + [(a, last), (a + 1, last)]
    else:
        last = m + 1
        weights = {1: -(m + 1), last: -1}
        weights.update({i: -2 for i in range(2, last)})
        edges = [(1, last)] + [(i, i + 1) for i in range(2, last)]
    return _cusp_graph(weights, edges, last, prefix)


def graph_from_trace(step, prefix=""):
    """Dual graph recorded by the blow-up simulation after its last step."""
    return _cusp_graph(step.weights, [tuple(sorted(e)) for e in step.edges],
                       step.through_center[0], prefix)


def curve_dual_graph(params):
    """Total transform of the family member: ``C~`` of weight ``-(d-2)``
    joined to the arrow node of each cusp graph."""
    if not isinstance(params, FamilyParams):
        params = FamilyParams(*params)
    d, a, b = params.d, params.a, params.b
    nodes = [Node("C", "C~", -(d - 2))]
    edges = []
    boxes = (("P0", compact_sequence(d - 2)), ("Pa", compact_sequence(2, a)),
             ("Pb", compact_sequence(2, b)))
    for tag, seq in boxes:
        g = cusp_dual_graph(seq, prefix=tag + ".")
        nodes.extend(g.nodes)
        edges.extend(g.edges)
        edges.append(("C", g.curve_arrow))
    return DualGraph(tuple(nodes), tuple(edges), None, title=str(params))


def cusp_subgraphs(graph):
    """Split a total-transform graph into its cusp pieces by id prefix."""
    groups = {}
    for n in graph.nodes:
        if "." in n.id:
            groups.setdefault(n.id.split(".")[0], []).append(n.id)
    return groups


@dataclass(frozen=True)
class GroupPresentation:
    """Words are strings over ``u, v``; ``U, V`` are the inverses."""

    generators: tuple
    relators: tuple
    meta: dict = field(default_factory=dict)

    def to_json(self):
        return {"generators": list(self.generators), "relators": list(self.relators),
                "meta": dict(self.meta)}

    def format(self):
        rels = ", ".join(format_word(r) for r in self.relators)
        return f"< {', '.join(self.generators)} | {rels} >"


def free_reduce(word):
    out = []
    for ch in word:
        if out and out[-1] != ch and out[-1].lower() == ch.lower():
            out.pop()
        else:
            out.append(ch)
    return "".join(out)


def invert(word):
    return "".join(ch.swapcase() for ch in reversed(word))


def format_word(word):
    """``uvUU`` -> ``u v u^-2``."""
    parts = []
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        base, n = word[i].lower(), j - i
        if word[i].isupper():
            n = -n
        parts.append(base if n == 1 else f"{base}^{n}")
        i = j
    return " ".join(parts) if parts else "1"


FINITE_NONABELIAN = {(4, 1), (7, 1)}


def pi1_presentation(params):
    """``G_{d,n} = <u, v | u (vu)^n = (vu)^n v, (vu)^(d-1) = v^(d-2)>`` with
    ``2n + 1 = gcd(2a+1, 2b+1)``.

    ``meta["finite"]`` is looked up, not computed: True for the two finite
    non-abelian cases, False for the other non-abelian ones, None when
    the group is abelian.
    """
    if not isinstance(params, FamilyParams):
        params = FamilyParams(*params)
    d = params.d
    n = (gcd(2 * params.a + 1, 2 * params.b + 1) - 1) // 2
    vu = "vu" * n
    r1 = free_reduce("u" + vu + "V" + invert(vu))
    r2 = free_reduce("vu" * (d - 1) + "V" * (d - 2))
    abelian = n == 0
    finite = None if abelian else (d, n) in FINITE_NONABELIAN
    return GroupPresentation(("u", "v"), (r1, r2),
                             {"d": d, "n": n, "abelian": abelian, "finite": finite,
                              "name": f"G_{{{d},{n}}}"})

