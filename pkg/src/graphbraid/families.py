"""Built-in graph families.

Vertices are numbered strings; edge ids are `u-v` pairs except where a
family fixes its own letters (the 3-arm star uses edges a, b, c so that the
standard sample words read naturally).
"""

from __future__ import annotations

import re

from .graphs import Graph, GraphError


def _edge_id(u, v):
    return f"{u}-{v}" if u <= v else f"{v}-{u}"


def _from_pairs(pairs, name, vertices=()):
    edges = {}
    for u, v in pairs:
        u, v = str(u), str(v)
        edges[_edge_id(u, v)] = (u, v) if u <= v else (v, u)
    return Graph(edges, vertices=[str(v) for v in vertices], name=name)


def complete(m):
    """The complete graph on m vertices 0..m-1."""
    if m < 1:
        raise GraphError("complete(m) needs m >= 1")
    return _from_pairs(
        [(i, j) for i in range(m) for j in range(i + 1, m)],
        f"K{m}", vertices=range(m))


def complete_bipartite(p, q):
    """The complete bipartite graph with sides L0..L{p-1} and R0..R{q-1}."""
    if p < 1 or q < 1:
        raise GraphError("complete_bipartite(p, q) needs p, q >= 1")
    return _from_pairs(
        [(f"L{i}", f"R{j}") for i in range(p) for j in range(q)],
        f"K{p},{q}")


def path_graph(k):
    """A path on k vertices (a segment of length k-1)."""
    if k < 1:
        raise GraphError("path_graph(k) needs k >= 1")
    return _from_pairs([(i, i + 1) for i in range(k - 1)],
                       f"P{k}", vertices=range(k))


def cycle_graph(k):
    """A cycle on k vertices."""
    if k < 3:
        raise GraphError("cycle_graph(k) needs k >= 3")
    return _from_pairs([(i, (i + 1) % k) for i in range(k)], f"C{k}")


def star(arms, arm_length=1):
    """A star: one junction w with `arms` arms of the given length.

    Arm vertices are named x0, x1, ... at depth 1, then x0.2, x0.3, ... going
    outward.
    """
    if arms < 1:
        raise GraphError("star(arms) needs arms >= 1")
    pairs = []
    for a in range(arms):
        prev = "w"
        for d in range(1, arm_length + 1):
            cur = f"x{a}" if d == 1 else f"x{a}.{d}"
            pairs.append((prev, cur))
            prev = cur
    return _from_pairs(pairs, f"star{arms}")


def star3():
    """The 3-arm star with unit arms, edges named a, b, c.

    Vertices: junction w, leaves x, y, z.  Edges are oriented leaf-to-junction:
    a: z->w, b: x->w, c: y->w, so that the junction commutator c a' b c' a b'
    is legal from the configuration {x, y}.
    """
    return Graph({"a": ("z", "w"), "b": ("x", "w"), "c": ("y", "w")},
                 name="star3")


def rose(petals, arms=0, petal_length=3, arm_length=1):
    """A rose: `petals` cycles and `arms` arms glued at one junction w."""
    if petals < 0 or arms < 0 or petals + arms < 1:
        raise GraphError("rose needs at least one petal or arm")
    if petal_length < 3:
        raise GraphError("petal_length must be at least 3")
    pairs = []
    for p in range(petals):
        chain = ["w"] + [f"p{p}.{i}" for i in range(1, petal_length)] + ["w"]
        pairs.extend((chain[i], chain[i + 1]) for i in range(len(chain) - 1))
    for a in range(arms):
        prev = "w"
        for d in range(1, arm_length + 1):
            cur = f"a{a}.{d}"
            pairs.append((prev, cur))
            prev = cur
    return _from_pairs(pairs, f"rose{petals}+{arms}")


def sun(cycle_length, arms=1, arm_length=1):
    """A sun: a cycle with pendant arms attached at distinct cycle vertices."""
    if cycle_length < 3:
        raise GraphError("sun needs cycle_length >= 3")
    if arms > cycle_length:
        raise GraphError("at most one arm per cycle vertex")
    pairs = [(f"c{i}", f"c{(i + 1) % cycle_length}")
             for i in range(cycle_length)]
    for a in range(arms):
        prev = f"c{a}"
        for d in range(1, arm_length + 1):
            cur = f"r{a}.{d}"
            pairs.append((prev, cur))
            prev = cur
    return _from_pairs(pairs, f"sun{cycle_length}+{arms}")


def pulsar(connectors, connector_length=2, arms_u=0, arms_w=0, arm_length=1):
    """A pulsar: parallel connector paths between hubs u and w, plus arms.

    `connectors` internally disjoint u-w paths of the given length, `arms_u`
    and `arms_w` pendant arms at the hubs.  pulsar(3) is the theta graph.
    """
    if connectors < 1:
        raise GraphError("pulsar needs at least one connector")
    if connector_length < 1:
        raise GraphError("connector_length must be at least 1")
    if connectors > 1 and connector_length < 2:
        raise GraphError("parallel connectors need length >= 2")
    pairs = []
    for c in range(connectors):
        chain = (["u"] + [f"m{c}.{i}" for i in range(1, connector_length)]
                 + ["w"])
        pairs.extend((chain[i], chain[i + 1]) for i in range(len(chain) - 1))
    for a in range(arms_u):
        prev = "u"
        for d in range(1, arm_length + 1):
            cur = f"s{a}.{d}"
            pairs.append((prev, cur))
            prev = cur
    for a in range(arms_w):
        prev = "w"
        for d in range(1, arm_length + 1):
            cur = f"t{a}.{d}"
            pairs.append((prev, cur))
            prev = cur
    return _from_pairs(pairs, f"pulsar{connectors}")


def theta():
    """The theta graph: two junctions joined by three length-2 paths."""
    return pulsar(3).renamed("theta")


def two_triangle_wedge():
    """Two triangles sharing a single vertex o, with lettered oriented edges.

    Triangle 1: o-1-2 with a: o->1, b: 1->2, c: 2->o.
    Triangle 2: o-3-4 with d: o->3, e: 3->4, f: 4->o.
    """
    return Graph({
        "a": ("o", "1"), "b": ("1", "2"), "c": ("2", "o"),
        "d": ("o", "3"), "e": ("3", "4"), "f": ("4", "o"),
    }, name="wedge2tri")


def star4():
    """The 4-arm star with unit arms, edges a..d oriented leaf-to-junction."""
    return Graph({"a": ("1", "w"), "b": ("2", "w"), "c": ("3", "w"),
                  "d": ("4", "w")}, name="star4")


def tripod():
    """The 6-vertex tripod: a length-4 segment with a unit arm at its middle.

    Vertices -2, -1, 0, 1, 2 along the segment and p above 0.  Oriented edges:
    a: -2->-1, b: -1->0, c: 1->0, d: 2->1, e: p->0.
    """
    return Graph({
        "a": ("-2", "-1"), "b": ("-1", "0"), "c": ("1", "0"),
        "d": ("2", "1"), "e": ("p", "0"),
    }, name="tripod")


def triangle_bouquets_with_segment(segment_length=2):
    """Two bouquets of two triangles, their junctions joined by a segment.

    Bouquet 1 wedges triangles (u, a1, a2) and (u, b1, b2) at u; bouquet 2
    wedges (v, c1, c2) and (v, d1, d2) at v; a path of the given length
    connects u to v.
    """
    pairs = [("u", "a1"), ("a1", "a2"), ("a2", "u"),
             ("u", "b1"), ("b1", "b2"), ("b2", "u"),
             ("v", "c1"), ("c1", "c2"), ("c2", "v"),
             ("v", "d1"), ("d1", "d2"), ("d2", "v")]
    prev = "u"
    for d in range(1, segment_length):
        cur = f"s{d}"
        pairs.append((prev, cur))
        prev = cur
    pairs.append((prev, "v"))
    return _from_pairs(pairs, "bouquets+segment")


_FAMILY_BUILDERS = {
    "complete": complete,
    "complete_bipartite": complete_bipartite,
    "path": path_graph,
    "cycle": cycle_graph,
    "star": star,
    "star3": star3,
    "star4": star4,
    "rose": rose,
    "sun": sun,
    "pulsar": pulsar,
    "theta": theta,
    "tripod": tripod,
    "two_triangle_wedge": two_triangle_wedge,
    "triangle_bouquets_with_segment": triangle_bouquets_with_segment,
}


def family_names():
    return tuple(sorted(_FAMILY_BUILDERS))


def build_family(spec):
    """Build a graph from a family spec string.

    Accepts `@name(arg, ...)` forms such as ``@complete(5)`` or
    ``@rose(2, 1)`` and compact aliases: ``K5``, ``K3,3``, ``P4`` (path on 4
    vertices), ``C6`` (6-cycle), ``star3``, ``star4``, ``theta``, ``tripod``.
    """
    spec = spec.strip()
    if spec.startswith("@"):
        m = re.fullmatch(r"@(\w+)\(([^)]*)\)", spec)
        if m is None:
            m = re.fullmatch(r"@(\w+)", spec)
            if m is None:
                raise GraphError(f"bad family spec {spec!r}")
            name, args = m.group(1), []
        else:
            name = m.group(1)
            args = [a.strip() for a in m.group(2).split(",") if a.strip()]
        if name not in _FAMILY_BUILDERS:
            raise GraphError(f"unknown family {name!r}; "
                             f"known: {', '.join(family_names())}")
        try:
            return _FAMILY_BUILDERS[name](*[int(a) for a in args])
        except TypeError as exc:
            raise GraphError(f"bad arguments for family {name!r}: {exc}")
    m = re.fullmatch(r"K(\d+),(\d+)", spec)
    if m:
        return complete_bipartite(int(m.group(1)), int(m.group(2)))
    m = re.fullmatch(r"K(\d+)", spec)
    if m:
        return complete(int(m.group(1)))
    m = re.fullmatch(r"P(\d+)", spec)
    if m:
        return path_graph(int(m.group(1)))
    m = re.fullmatch(r"C(\d+)", spec)
    if m:
        return cycle_graph(int(m.group(1)))
    m = re.fullmatch(r"star(\d+)", spec)
    if m:
        arms = int(m.group(1))
        if arms == 3:
            return star3()
        if arms == 4:
            return star4()
        return star(arms)
    if spec in _FAMILY_BUILDERS:
        return _FAMILY_BUILDERS[spec]()
    raise GraphError(f"unrecognized graph spec {spec!r}")
