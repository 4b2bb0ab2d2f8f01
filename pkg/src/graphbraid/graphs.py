"""Finite simple graphs with named, oriented edges.

Vertices are strings.  Every edge carries a string identifier and a declared
orientation (origin, terminus); word syntax elsewhere refers to edges by
identifier, so identifiers must be unique.  Graphs are immutable once built.

Raw input may contain loops and parallel edges; ``load_and_normalize`` turns
such input into a simple graph of the same topological type (loops become
triangles, parallel families get subdivided) and records where the fresh
vertices came from.
"""

from __future__ import annotations

import itertools
import re
from collections import deque
from dataclasses import dataclass, field


class GraphError(ValueError):
    """Malformed graph input or violated precondition."""


def ekey(u, v):
    """Canonical unordered key for the edge {u, v}."""
    return (u, v) if u <= v else (v, u)


class Graph:
    """A finite simple graph with named oriented edges.

    `edges` maps edge id -> (origin, terminus).  Isolated vertices may be
    supplied through `vertices`.  Loops and parallel edges are rejected here;
    use ``load_and_normalize`` for raw input that may contain them.
    """

    __slots__ = ("name", "_orient", "_vertices", "_key_to_id", "_adj",
                 "provenance", "_hash")

    def __init__(self, edges, vertices=(), name="", provenance=None):
        orient = {}
        key_to_id = {}
        vs = set(vertices)
        for eid, (u, v) in dict(edges).items():
            eid, u, v = str(eid), str(u), str(v)
            if u == v:
                raise GraphError(f"edge {eid!r} is a loop at {u!r}")
            k = ekey(u, v)
            if k in key_to_id:
                raise GraphError(
                    f"edges {key_to_id[k]!r} and {eid!r} are parallel")
            orient[eid] = (u, v)
            key_to_id[k] = eid
            vs.add(u)
            vs.add(v)
        adj = {v: set() for v in vs}
        for (u, v) in orient.values():
            adj[u].add(v)
            adj[v].add(u)
        self.name = name
        self._orient = orient
        self._vertices = tuple(sorted(vs))
        self._key_to_id = key_to_id
        self._adj = {v: tuple(sorted(ns)) for v, ns in adj.items()}
        self.provenance = dict(provenance or {})
        self._hash = None

    # -- basic queries ----------------------------------------------------

    @property
    def vertices(self):
        return self._vertices

    @property
    def edge_ids(self):
        return tuple(sorted(self._orient))

    @property
    def edge_keys(self):
        return tuple(sorted(self._key_to_id))

    def orientation(self, eid):
        """Declared (origin, terminus) of the edge with this id."""
        return self._orient[eid]

    def edge_key(self, eid):
        u, v = self._orient[eid]
        return ekey(u, v)

    def id_for(self, u, v):
        return self._key_to_id[ekey(u, v)]

    def has_vertex(self, v):
        return v in self._adj

    def has_edge(self, u, v):
        return ekey(u, v) in self._key_to_id

    def neighbors(self, v):
        return self._adj[v]

    def degree(self, v):
        return len(self._adj[v])

    def num_vertices(self):
        return len(self._vertices)

    def num_edges(self):
        return len(self._orient)

    def essential_vertices(self):
        """Vertices of degree at least three, sorted."""
        return tuple(v for v in self._vertices if self.degree(v) >= 3)

    def leaves(self):
        return tuple(v for v in self._vertices if self.degree(v) == 1)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (self._vertices == other._vertices
                and self._orient == other._orient)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._vertices,
                               tuple(sorted(self._orient.items()))))
        return self._hash

    def __repr__(self):
        return (f"Graph({self.name or 'unnamed'!r}: "
                f"{self.num_vertices()}V {self.num_edges()}E)")

    # -- connectivity and metrics -----------------------------------------

    def components(self):
        """Connected components as a list of frozensets, sorted by least vertex."""
        seen = set()
        comps = []
        for start in self._vertices:
            if start in seen:
                continue
            comp = {start}
            queue = deque([start])
            while queue:
                x = queue.popleft()
                for y in self._adj[x]:
                    if y not in comp:
                        comp.add(y)
                        queue.append(y)
            seen |= comp
            comps.append(frozenset(comp))
        return comps

    def is_connected(self):
        return len(self.components()) <= 1

    def betti1(self):
        """First Betti number: E - V + (number of components)."""
        return self.num_edges() - self.num_vertices() + len(self.components())

    def distances_from(self, source):
        dist = {source: 0}
        queue = deque([source])
        while queue:
            x = queue.popleft()
            for y in self._adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        return dist

    def distance(self, u, v):
        """Graph distance, or None if u and v are in different components."""
        return self.distances_from(u).get(v)

    def girth(self):
        """Length of a shortest cycle, or None if acyclic."""
        best = None
        for root in self._vertices:
            dist = {root: 0}
            parent = {root: None}
            queue = deque([root])
            while queue:
                x = queue.popleft()
                for y in self._adj[x]:
                    if y not in dist:
                        dist[y] = dist[x] + 1
                        parent[y] = x
                        queue.append(y)
                    elif parent[x] != y:
                        cand = dist[x] + dist[y] + 1
                        if best is None or cand < best:
                            best = cand
        return best

    # -- derived graphs ----------------------------------------------------

    def induced(self, vertex_set, name=""):
        """Induced subgraph on `vertex_set`, keeping edge ids and orientations."""
        vs = set(vertex_set)
        missing = vs - set(self._vertices)
        if missing:
            raise GraphError(f"unknown vertices {sorted(missing)}")
        edges = {eid: (u, v) for eid, (u, v) in self._orient.items()
                 if u in vs and v in vs}
        return Graph(edges, vertices=vs, name=name or self.name)

    def without_vertices(self, vertex_set, name=""):
        vs = set(self._vertices) - set(vertex_set)
        return self.induced(vs, name=name)

    def subdivide(self, k, name=""):
        """Uniform subdivision: every edge becomes a path with k new midpoints.

        Midpoints of edge `eid` are named ``{eid}.1`` .. ``{eid}.k`` along the
        declared orientation, and the pieces are edges ``{eid}:1`` .. ``{eid}:k+1``.
        """
        if k <= 0:
            return self
        edges = {}
        for eid in self.edge_ids:
            o, t = self._orient[eid]
            chain = [o] + [f"{eid}.{i}" for i in range(1, k + 1)] + [t]
            for i in range(len(chain) - 1):
                edges[f"{eid}:{i + 1}"] = (chain[i], chain[i + 1])
        return Graph(edges, vertices=self._vertices,
                     name=name or (self.name and f"{self.name}/sub{k}"))

    def renamed(self, name):
        return Graph(self._orient, vertices=self._vertices, name=name,
                     provenance=self.provenance)


# -- subgraphs -------------------------------------------------------------

@dataclass(frozen=True)
class Subgraph:
    """A subgraph of a parent graph: a vertex set plus a subset of its edges.

    `edges` holds canonical unordered edge keys of the parent.
    """

    parent: Graph
    vertices: frozenset
    edges: frozenset = field(default_factory=frozenset)

    @classmethod
    def induced_on(cls, parent, vertex_set):
        vs = frozenset(vertex_set)
        es = frozenset(k for k in parent.edge_keys
                       if k[0] in vs and k[1] in vs)
        return cls(parent, vs, es)

    @classmethod
    def from_edges(cls, parent, edge_keys):
        es = frozenset(edge_keys)
        vs = frozenset(v for k in es for v in k)
        return cls(parent, vs, es)

    def __post_init__(self):
        for k in self.edges:
            if k not in self.parent._key_to_id:
                raise GraphError(f"edge {k} is not in the parent graph")
            if k[0] not in self.vertices or k[1] not in self.vertices:
                raise GraphError(f"edge {k} has an endpoint outside the subgraph")
        for v in self.vertices:
            if not self.parent.has_vertex(v):
                raise GraphError(f"vertex {v!r} is not in the parent graph")

    def union(self, other):
        return Subgraph(self.parent, self.vertices | other.vertices,
                        self.edges | other.edges)

    def intersection(self, other):
        return Subgraph(self.parent, self.vertices & other.vertices,
                        self.edges & other.edges)

    def contains(self, other):
        return (other.vertices <= self.vertices
                and other.edges <= self.edges)

    def is_whole_parent(self):
        return (self.vertices == set(self.parent.vertices)
                and len(self.edges) == self.parent.num_edges())

    def as_graph(self, name=""):
        """Materialize as a standalone Graph, keeping parent ids/orientations."""
        edges = {}
        for k in self.edges:
            eid = self.parent._key_to_id[k]
            edges[eid] = self.parent.orientation(eid)
        return Graph(edges, vertices=self.vertices, name=name)

    def sorted_vertices(self):
        return tuple(sorted(self.vertices))


# -- raw input and normalization -------------------------------------------

@dataclass
class RawGraph:
    """Unvalidated graph description: may contain loops and parallel edges."""
    name: str = ""
    vertices: list = field(default_factory=list)
    edges: list = field(default_factory=list)  # (eid, u, v)


def load_and_normalize(raw):
    """Build a simple Graph from raw input of the same topological type.

    Every loop is replaced by a length-3 cycle through two fresh vertices,
    and every member of a parallel family is subdivided once (a double edge
    becomes a 4-cycle).  Fresh vertices record their origin in
    ``graph.provenance``.  An edge endpoint that was never declared as a
    vertex is a malformed-input error.
    """
    declared = {str(v) for v in raw.vertices}
    provenance = {}
    seen_ids = set()
    for eid, u, v in raw.edges:
        eid = str(eid)
        if eid in seen_ids:
            raise GraphError(f"duplicate edge id {eid!r}")
        seen_ids.add(eid)
        for x in (str(u), str(v)):
            if x not in declared:
                raise GraphError(
                    f"edge {eid!r} has dangling endpoint {x!r}")

    multiplicity = {}
    for eid, u, v in raw.edges:
        u, v = str(u), str(v)
        if u != v:
            multiplicity[ekey(u, v)] = multiplicity.get(ekey(u, v), 0) + 1

    edges = {}
    for eid, u, v in raw.edges:
        eid, u, v = str(eid), str(u), str(v)
        if u == v:
            a, b = f"{eid}.1", f"{eid}.2"
            provenance[a] = f"loop {eid} at {u}"
            provenance[b] = f"loop {eid} at {u}"
            edges[f"{eid}:1"] = (u, a)
            edges[f"{eid}:2"] = (a, b)
            edges[f"{eid}:3"] = (b, u)
        elif multiplicity[ekey(u, v)] > 1:
            m = f"{eid}.1"
            provenance[m] = f"parallel edge {eid} between {u} and {v}"
            edges[f"{eid}:1"] = (u, m)
            edges[f"{eid}:2"] = (m, v)
        else:
            edges[eid] = (u, v)
    return Graph(edges, vertices=declared, name=raw.name,
                 provenance=provenance)


# -- text format ------------------------------------------------------------

def parse_graph_text(text):
    """Parse the plain-text graph format into a RawGraph.

    Lines: ``graph <name>``, ``v <id>``, ``e <id> <u> <v>``; ``#`` starts a
    comment.  Vertices must be declared before use by edges is not required,
    but every edge endpoint must be declared somewhere in the file.
    """
    raw = RawGraph()
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        kind = parts[0]
        if kind == "graph":
            if len(parts) != 2:
                raise GraphError(f"line {lineno}: expected 'graph <name>'")
            raw.name = parts[1]
        elif kind == "v":
            if len(parts) != 2:
                raise GraphError(f"line {lineno}: expected 'v <id>'")
            raw.vertices.append(parts[1])
        elif kind == "e":
            if len(parts) != 4:
                raise GraphError(f"line {lineno}: expected 'e <id> <u> <v>'")
            raw.edges.append((parts[1], parts[2], parts[3]))
        else:
            raise GraphError(f"line {lineno}: unknown directive {kind!r}")
    return raw


def load_graph_text(text):
    """Parse and normalize the plain-text graph format."""
    return load_and_normalize(parse_graph_text(text))


def graph_to_text(g):
    lines = []
    if g.name:
        lines.append(f"graph {g.name}")
    for v in g.vertices:
        lines.append(f"v {v}")
    for eid in g.edge_ids:
        o, t = g.orientation(eid)
        lines.append(f"e {eid} {o} {t}")
    return "\n".join(lines) + "\n"


# -- DOT format -------------------------------------------------------------

def graph_to_dot(g, highlight_essential=True):
    """Render as an undirected DOT graph; essential vertices are filled."""
    essential = set(g.essential_vertices()) if highlight_essential else set()
    lines = [f'graph "{g.name or "G"}" {{']
    for v in g.vertices:
        attrs = ' [style=filled, fillcolor=lightgray]' if v in essential else ""
        lines.append(f'  "{v}"{attrs};')
    for eid in g.edge_ids:
        o, t = g.orientation(eid)
        lines.append(f'  "{o}" -- "{t}" [label="{eid}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


_DOT_EDGE = re.compile(r'^\s*"?([\w.:|-]+)"?\s*(--|->)\s*"?([\w.:|-]+)"?\s*(\[[^\]]*\])?\s*;?\s*$')
_DOT_NODE = re.compile(r'^\s*"?([\w.:|-]+)"?\s*(\[[^\]]*\])?\s*;?\s*$')


def parse_dot(text):
    """Parse a minimal undirected DOT file into a RawGraph.

    Accepts `graph NAME { ... }` bodies with node statements and `a -- b`
    edge statements.  Directed edges are rejected.
    """
    m = re.search(r'\bgraph\s+"?([\w.:|-]*)"?\s*\{(.*)\}', text, re.S)
    if m is None:
        if re.search(r'\bdigraph\b', text):
            raise GraphError("directed DOT graphs are not supported")
        raise GraphError("not a DOT graph")
    raw = RawGraph(name=m.group(1))
    body = m.group(2)
    seen = set()
    counter = itertools.count()
    for stmt in body.split("\n"):
        stmt = stmt.strip()
        if not stmt or stmt.startswith("//") or stmt.startswith("#"):
            continue
        em = _DOT_EDGE.match(stmt)
        if em:
            if em.group(2) == "->":
                raise GraphError("directed DOT edges are not supported")
            u, v = em.group(1), em.group(3)
            for x in (u, v):
                if x not in seen:
                    seen.add(x)
                    raw.vertices.append(x)
            label = None
            if em.group(4):
                lm = re.search(r'label\s*=\s*"?([\w.:|-]+)"?', em.group(4))
                if lm:
                    label = lm.group(1)
            raw.edges.append((label or f"e{next(counter)}", u, v))
            continue
        nm = _DOT_NODE.match(stmt)
        if nm and nm.group(1) not in ("node", "edge", "graph"):
            if nm.group(1) not in seen:
                seen.add(nm.group(1))
                raw.vertices.append(nm.group(1))
    return raw


def load_dot(text):
    return load_and_normalize(parse_dot(text))


# -- cycles ------------------------------------------------------------------

def chordless_cycles(g):
    """All chordless (induced) cycles, as canonical vertex tuples.

    Each cycle is reported once, rooted at its least vertex with the smaller
    of its two neighbours on the cycle second.
    """
    adjset = {v: set(g.neighbors(v)) for v in g.vertices}
    out = []

    def extend(path, path_set):
        last = path[-1]
        root = path[0]
        for y in g.neighbors(last):
            if y <= root or y in path_set:
                continue
            seen = adjset[y] & path_set
            if seen == {last, root}:
                # closes a cycle and sees nothing else on the path: chordless
                if path[1] < y:
                    out.append(tuple(path) + (y,))
            elif seen == {last}:
                extend(path + [y], path_set | {y})

    for root in g.vertices:
        for second in g.neighbors(root):
            if second <= root:
                continue
            extend([root, second], {root, second})
    return sorted(out, key=lambda c: (len(c), c))


def all_cycles_exist_disjoint(g):
    """Whether the graph has two vertex-disjoint cycles of any kind.

    Brute-force over vertex subsets; intended for small graphs and for
    cross-checking `disjoint_cycle_pairs`.
    """
    vs = g.vertices
    for r in range(3, len(vs) - 2):
        for sub in itertools.combinations(vs, r):
            sub = set(sub)
            a = g.induced(sub)
            if a.betti1() == 0:
                continue
            b = g.induced(set(vs) - sub)
            if b.betti1() >= 1:
                return True
    return False


def disjoint_cycle_pairs(g):
    """Vertex-disjoint pairs of chordless cycles, lexicographically sorted."""
    cycles = chordless_cycles(g)
    pairs = []
    for i, c in enumerate(cycles):
        cset = set(c)
        for d in cycles[i + 1:]:
            if cset.isdisjoint(d):
                pairs.append((c, d))
    return pairs


def essential_cycle_violations(g):
    """Essential vertices vertex-disjoint from some chordless cycle.

    Returns (vertex, cycle) pairs; nonempty exactly when some vertex of degree
    at least three avoids an induced cycle entirely.
    """
    out = []
    for v in g.essential_vertices():
        for c in chordless_cycles(g):
            if v not in c:
                out.append((v, c))
                break
    return out


# -- subdivision sufficiency --------------------------------------------------

def abrams_sufficient(g, n):
    """Check the classical subdivision conditions for n particles.

    Conditions: at least n vertices; distinct essential vertices at distance
    at least n-1; every homotopically nontrivial closed path of length at
    least n+1 (equivalently, girth at least n+1).  Returns (ok, violations)
    where each violation is a tagged tuple.
    """
    violations = []
    if g.num_vertices() < n:
        violations.append(("vertex-count", g.num_vertices(), n))
    ess = g.essential_vertices()
    for i, u in enumerate(ess):
        dist = g.distances_from(u)
        for v in ess[i + 1:]:
            d = dist.get(v)
            if d is not None and d < n - 1:
                violations.append(("essential-distance", u, v, d))
    for c in chordless_cycles(g):
        if len(c) < n + 1:
            violations.append(("short-cycle", c))
    return (not violations), violations


def _arm_length_ok(g, n):
    """Distance from every essential vertex to every leaf is at least n-1.

    The classical conditions alone are not sufficient for trees with a single
    essential vertex: a 3-arm star with unit arms has only four 3-particle
    configurations and its configuration complex degenerates to a tree, while
    three particles on the same star topologically form a free group of rank
    three.  Requiring long arms restores enough room.
    """
    for u in g.essential_vertices():
        dist = g.distances_from(u)
        for leaf in g.leaves():
            d = dist.get(leaf)
            if d is not None and d < n - 1:
                return False
    return True


def subdivide_for(g, n):
    """Uniformly subdivide until the subdivision conditions hold.

    Tries k = 0, 1, 2, ... midpoints per edge and returns the first uniform
    subdivision on which `abrams_sufficient` holds (plus an essential-to-leaf
    distance clause protecting single-junction trees).  The result is not a
    minimal subdivision, only a sufficient uniform one.
    """
    if g.num_edges() == 0:
        if g.num_vertices() < n:
            raise GraphError(
                f"graph has {g.num_vertices()} vertices; cannot host {n} particles")
        return g
    k = 0
    while True:
        cand = g.subdivide(k)
        if abrams_sufficient(cand, n)[0] and _arm_length_ok(cand, n):
            return cand
        k += 1


# -- shape recognition --------------------------------------------------------

SHAPE_LABELS = ("segment", "cycle", "star3", "rose", "sun", "pulsar",
                "tree", "other")


def _is_path_graph(g):
    if g.num_vertices() == 0 or not g.is_connected():
        return False
    degs = sorted(g.degree(v) for v in g.vertices)
    if g.num_vertices() == 1:
        return True
    return degs[-1] <= 2 and degs[0] == 1 and degs[1] == 1


def _is_cycle_graph(g):
    return (g.num_vertices() >= 3 and g.is_connected()
            and all(g.degree(v) == 2 for v in g.vertices))


def _pulsar_decomposition(g):
    """Whether the graph is built from connectors between at most two hubs
    plus arms at those hubs, with at least one cycle present."""
    if not g.is_connected() or g.betti1() < 1:
        return False
    ess = g.essential_vertices()
    if len(ess) > 2:
        return False
    if len(ess) == 0:
        return _is_cycle_graph(g)
    hubs = set(ess)
    rest = set(g.vertices) - hubs
    if rest:
        interior = g.induced(rest)
        for comp in interior.components():
            piece = interior.induced(comp)
            if not _is_path_graph(piece):
                return False
            # attachments from this piece to the hubs
            attach = []
            for x in sorted(comp):
                for h in sorted(hubs):
                    if g.has_edge(x, h):
                        attach.append((x, h))
            tips = ([v for v in comp if piece.degree(v) <= 1]
                    if len(comp) > 1 else list(comp))
            if any(x not in tips for x, _ in attach):
                return False
            if len(attach) > 2:
                return False
            if len(attach) == 2 and len(ess) == 2:
                # with two hubs every two-ended piece must be a connector;
                # a piece returning to the same hub would be a stray petal
                if attach[0][1] == attach[1][1]:
                    return False
    return True


def recognize_shape(g):
    """All applicable shape labels for the graph, as a sorted tuple.

    Labels: segment (path), cycle, star3 (tree with a single degree-3
    junction), rose (at most one junction), sun (betti one with every
    junction on the unique induced cycle), pulsar (connector/arm
    decomposition over at most two junctions, with a cycle), tree (connected
    acyclic), and other (when nothing else applies).
    """
    labels = []
    if g.num_vertices() == 0:
        return ("other",)
    connected = g.is_connected()
    b1 = g.betti1()
    ess = g.essential_vertices()
    if connected:
        if _is_path_graph(g):
            labels.append("segment")
        if _is_cycle_graph(g):
            labels.append("cycle")
        if b1 == 0 and len(ess) == 1 and g.degree(ess[0]) == 3:
            labels.append("star3")
        if len(ess) <= 1:
            labels.append("rose")
        if b1 == 1:
            cycles = chordless_cycles(g)
            cyc = set(cycles[0]) if cycles else set()
            if all(v in cyc for v in ess):
                labels.append("sun")
        if _pulsar_decomposition(g):
            labels.append("pulsar")
        if b1 == 0:
            labels.append("tree")
    if not labels:
        labels.append("other")
    return tuple(sorted(labels))
