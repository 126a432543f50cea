"""Figures for the report paths of the CLI (Agg backend, files only)."""

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import networkx as nx  # noqa: E402

STYLE = {
    "font.size": 9,
    "axes.labelsize": 9,
    "legend.fontsize": 8,
    "axes.spines.top": False,
    "axes.spines.right": False,
    "figure.dpi": 120,
}


def sweep_figure(rows, path):
    """Intersection numbers of every swept curve against the degree.

    ``rows`` are the sweep table rows; the three series should be the lines
    ``-(d-2)``, ``d-4`` and ``6-2d``.
    """
    with plt.rc_context(STYLE):
        fig, (ax, bx) = plt.subplots(1, 2, figsize=(8, 3.2))
        ds = [r["d"] for r in rows]
        for key, label, marker in (("c_tilde_sq", "C~^2", "o"), ("k_dot_c", "K.C~", "s"),
                                   ("d_sq", "D^2", "^")):
            ax.plot(ds, [r[key] for r in rows], marker, label=label, alpha=0.8)
        ax.axhline(0, color="0.6", lw=0.6)
        ax.set_xlabel("degree d")
        ax.set_ylabel("intersection number")
        ax.legend(frameon=False)

        counts = {}
        seconds = {}
        for r in rows:
            counts[r["d"]] = counts.get(r["d"], 0) + 1
            seconds[r["d"]] = seconds.get(r["d"], 0.0) + r.get("seconds", 0.0)
        xs = sorted(counts)
        bx.bar(xs, [counts[d] for d in xs], color="0.75", label="curves")
        bx.set_xlabel("degree d")
        bx.set_ylabel("number of (a, b)")
        tx = bx.twinx()
        tx.plot(xs, [seconds[d] for d in xs], "k.-", label="certify time")
        tx.set_ylabel("seconds")
        fig.tight_layout()
        fig.savefig(path)
        plt.close(fig)
    return path


def graph_figure(graph, path):
    """Draw a weighted dual graph; node text is ``label`` over ``weight``."""
    g = nx.Graph()
    for n in graph.nodes:
        g.add_node(n.id, label=n.label, weight=n.weight)
    g.add_edges_from(graph.edges)
    if graph.curve_arrow is not None:
        g.add_node("C~", label="C~", weight=None)
        g.add_edge(graph.curve_arrow, "C~")
    pos = nx.kamada_kawai_layout(g) if len(g) > 2 else nx.spring_layout(g, seed=0)
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(5, 4))
        nx.draw_networkx_edges(g, pos, ax=ax, edge_color="0.4")
        exc = [v for v in g if g.nodes[v]["weight"] is not None and v != "C"]
        colors = ["#d62728" if g.nodes[v]["weight"] == -1 else "#9ecae1" for v in exc]
        nx.draw_networkx_nodes(g, pos, nodelist=exc, node_color=colors, node_size=260, ax=ax)
        curve = [v for v in g if v not in exc]
        nx.draw_networkx_nodes(g, pos, nodelist=curve, node_color="#fdae6b",
                               node_shape="s", node_size=300, ax=ax)
        labels = {v: (g.nodes[v]["label"] if g.nodes[v]["weight"] is None
                      else f"{g.nodes[v]['label']}\n{g.nodes[v]['weight']}") for v in g}
        nx.draw_networkx_labels(g, pos, labels, font_size=7, ax=ax)
        if graph.title:
            ax.set_title(graph.title)
        ax.set_axis_off()
        fig.tight_layout()
        fig.savefig(path)
        plt.close(fig)
    return path
