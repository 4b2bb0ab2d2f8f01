"""Special colorings of configuration complexes.

A coloring assigns to every oriented hyperplane a signed color from a color
graph, here always the disjointness graph of the underlying graph's edges:
colors are edge keys, two colors are adjacent when the edges share no vertex,
and each color comes in a positive and a negative version.

The canonical coloring sends the hyperplane dual to a graph edge, oriented
along that edge's declared orientation, to the positive color of the same
edge.  `verify_axioms` checks the four defining axioms exhaustively and
reports the first violation with a witness, so deliberately broken
assignments can be diagnosed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import GraphError
from .complexes import hyperplanes, edge_hyperplane_map


def color_inverse(color):
    key, sign = color
    return (key, -sign)


class ColorGraph:
    """The disjointness graph on a graph's edges, with signed colors.

    Vertices are edge keys; adjacency is vertex-disjointness.  Signed colors
    (key, +1) and (key, -1) inherit adjacency from their underlying keys.
    """

    def __init__(self, graph):
        self.graph = graph
        self.colors = graph.edge_keys

    def adjacent(self, k1, k2):
        return not (set(k1) & set(k2))

    def signed_adjacent(self, c1, c2):
        return self.adjacent(c1[0], c2[0])

    def signed_colors(self):
        out = []
        for k in self.colors:
            out.append((k, 1))
            out.append((k, -1))
        return tuple(out)

    def to_dot(self):
        lines = ['graph "disjointness" {']
        for k in self.colors:
            lines.append(f'  "{self.graph.id_for(*k)}";')
        for i, k1 in enumerate(self.colors):
            for k2 in self.colors[i + 1:]:
                if self.adjacent(k1, k2):
                    lines.append(f'  "{self.graph.id_for(*k1)}" -- '
                                 f'"{self.graph.id_for(*k2)}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class SpecialColoring:
    """An assignment of signed colors to oriented hyperplanes.

    `assignment` maps (hyperplane_index, sign) to a signed color; hyperplane
    indices refer to `hyperplanes`, which is the tuple computed from the
    complex.  `target` is the color graph.
    """

    complex: object
    hyperplane_list: tuple
    target: ColorGraph
    assignment: dict

    def color_of(self, hp_index, sign):
        return self.assignment[(hp_index, sign)]

    def table(self):
        """Rows (hyperplane name, sign, edge id of the color, color sign)."""
        rows = []
        for (i, sign), (key, csign) in sorted(self.assignment.items()):
            hp = self.hyperplane_list[i]
            rows.append((hp.name(), sign,
                         self.target.graph.id_for(*key), csign))
        return rows


def canonical_coloring(c):
    """The canonical special coloring of a configuration complex.

    Each hyperplane, oriented along the declared orientation of its label
    edge, receives the positive color of the same label.
    """
    hps = hyperplanes(c)
    target = ColorGraph(c.graph)
    assignment = {}
    for i, hp in enumerate(hps):
        assignment[(i, 1)] = (hp.label, 1)
        assignment[(i, -1)] = (hp.label, -1)
    return SpecialColoring(c, hps, target, assignment)


def _edge_direction_from(c, edge, config):
    """+1 if traversing `edge` away from `config` follows the declared
    orientation of its label, else -1."""
    (u, v), residual = edge
    o, t = c.graph.orientation(c.graph.id_for(u, v))
    if o in config and o not in residual:
        return 1
    return -1


def verify_axioms(coloring, c=None):
    """Exhaustively check the four special-coloring axioms.

    Axioms: (1) opposite orientations get inverse colors; (2) transverse
    hyperplanes get adjacent colors; (3) at every configuration the colors
    of the incident oriented hyperplanes are pairwise distinct; (4) whenever
    two hyperplanes at a configuration have adjacent colors, the two edges
    span a square there.  Returns (True, None) or (False, (axiom, witness))
    for the first violated axiom in this order.
    """
    if c is None:
        c = coloring.complex
    hps = coloring.hyperplane_list
    emap = edge_hyperplane_map(hps)
    target = coloring.target
    assignment = coloring.assignment

    for i in range(len(hps)):
        plus = assignment[(i, 1)]
        minus = assignment[(i, -1)]
        if minus != color_inverse(plus):
            return False, (1, {"hyperplane": hps[i].name(),
                               "plus": plus, "minus": minus})

    for square in c.cubes.get(2, ()):
        (e, f), residual = square
        he = emap[(e, tuple(sorted(residual + (f[0],))))]
        hf = emap[(f, tuple(sorted(residual + (e[0],))))]
        for se in (1, -1):
            for sf in (1, -1):
                ce = assignment[(he, se)]
                cf = assignment[(hf, sf)]
                if not target.signed_adjacent(ce, cf):
                    return False, (2, {"square": square,
                                       "hyperplanes": (hps[he].name(),
                                                       hps[hf].name()),
                                       "colors": (ce, cf)})

    for config in c.vertices:
        seen = {}
        for edge in c.incident_edges(config):
            hp = emap[edge]
            away = _edge_direction_from(c, edge, config)
            for sign in (away, -away):
                color = assignment[(hp, sign)]
                if color in seen and seen[color] != (hp, sign):
                    return False, (3, {"config": config, "color": color,
                                       "first": seen[color],
                                       "second": (hp, sign)})
                seen[color] = (hp, sign)

    for config in c.vertices:
        inc = c.incident_edges(config)
        for a in range(len(inc)):
            for b in range(a + 1, len(inc)):
                e1, e2 = inc[a], inc[b]
                h1, h2 = emap[e1], emap[e2]
                c1 = assignment[(h1, _edge_direction_from(c, e1, config))]
                c2 = assignment[(h2, _edge_direction_from(c, e2, config))]
                if target.signed_adjacent(c1, c2):
                    keys = tuple(sorted((e1[0], e2[0])))
                    occupied = set(keys[0]) | set(keys[1])
                    residual = tuple(x for x in config if x not in occupied)
                    if not c.has_cube(2, (keys, residual)):
                        return False, (4, {"config": config,
                                           "edges": (e1, e2),
                                           "colors": (c1, c2)})
    return True, None


def coloring_table_dict(coloring):
    """The coloring table as plain data for serialization."""
    rows = []
    for name, sign, edge_id, csign in coloring.table():
        rows.append({
            "hyperplane": name,
            "orientation": "+" if sign > 0 else "-",
            "color": edge_id + ("" if csign > 0 else "'"),
        })
    return {"colors": [coloring.target.graph.id_for(*k)
                       for k in coloring.target.colors],
            "assignment": rows}
