"""Discrete configuration cube complexes of graphs.

The n-particle configuration complex of a graph has a vertex for each
n-element vertex subset (a configuration), an edge for each move of one
particle along a graph edge whose both endpoints are otherwise unoccupied,
and a k-cube for each set of k pairwise vertex-disjoint graph edges moving
simultaneously.  Cells are canonically ordered, so rebuilding a complex is
deterministic.

Cell encodings:
  configuration  tuple of vertex names, sorted
  edge           (edge_key, residual)   residual = the n-1 resting particles
  k-cube         (edge_keys, residual)  edge_keys sorted, k >= 2
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass

from .graphs import Graph, GraphError


class CubeComplex:
    """An explicitly enumerated configuration cube complex."""

    __slots__ = ("graph", "n", "vertices", "edges", "cubes", "max_dim",
                 "capped", "_vertex_set", "_edge_set", "_cube_sets",
                 "_incidence")

    def __init__(self, graph, n, vertices, edges, cubes, max_dim, capped):
        self.graph = graph
        self.n = n
        self.vertices = vertices      # tuple of configs
        self.edges = edges            # tuple of (ekey, residual)
        self.cubes = cubes            # dict k -> tuple of (ekeys, residual)
        self.max_dim = max_dim
        self.capped = capped
        self._vertex_set = frozenset(vertices)
        self._edge_set = frozenset(edges)
        self._cube_sets = {k: frozenset(v) for k, v in cubes.items()}
        self._incidence = None

    # -- cells -------------------------------------------------------------

    def counts(self):
        """Number of cells per dimension, as a dict."""
        out = {0: len(self.vertices), 1: len(self.edges)}
        for k in sorted(self.cubes):
            out[k] = len(self.cubes[k])
        return out

    def dimension(self):
        ks = [k for k, v in self.counts().items() if v]
        return max(ks) if ks else -1

    def has_vertex(self, config):
        return config in self._vertex_set

    def has_edge(self, edge):
        return edge in self._edge_set

    def has_cube(self, k, cube):
        return cube in self._cube_sets.get(k, frozenset())

    def edge_endpoints(self, edge):
        """The two configurations joined by an edge, lesser first."""
        (u, v), residual = edge
        a = tuple(sorted(residual + (u,)))
        b = tuple(sorted(residual + (v,)))
        return (a, b) if a <= b else (b, a)

    def incident_edges(self, config):
        if self._incidence is None:
            inc = {}
            for e in self.edges:
                a, b = self.edge_endpoints(e)
                inc.setdefault(a, []).append(e)
                inc.setdefault(b, []).append(e)
            self._incidence = {c: tuple(es) for c, es in inc.items()}
        return self._incidence.get(config, ())

    def square_corners(self, square):
        """The four corner configurations of a 2-cube, in cyclic order."""
        (e, f), residual = square
        (eu, ev), (fu, fv) = e, f
        mk = lambda *xs: tuple(sorted(residual + xs))
        return (mk(eu, fu), mk(ev, fu), mk(ev, fv), mk(eu, fv))

    def cube_faces(self, cube):
        """The 2k facets of a k-cube, as (k-1)-dimensional cells."""
        keys, residual = cube
        faces = []
        for i, (u, v) in enumerate(keys):
            rest = keys[:i] + keys[i + 1:]
            for x in (u, v):
                res = tuple(sorted(residual + (x,)))
                if len(rest) == 1:
                    faces.append((rest[0], res))
                else:
                    faces.append((rest, res))
        return faces

    # -- connectivity --------------------------------------------------------

    def components(self):
        """Connected components of the 1-skeleton, as frozensets of configs."""
        neigh = {}
        for e in self.edges:
            a, b = self.edge_endpoints(e)
            neigh.setdefault(a, []).append(b)
            neigh.setdefault(b, []).append(a)
        seen = set()
        comps = []
        for start in self.vertices:
            if start in seen:
                continue
            comp = {start}
            queue = deque([start])
            while queue:
                x = queue.popleft()
                for y in neigh.get(x, ()):
                    if y not in comp:
                        comp.add(y)
                        queue.append(y)
            seen |= comp
            comps.append(frozenset(comp))
        comps.sort(key=lambda c: min(c))
        return comps

    def component_of(self, config):
        for comp in self.components():
            if config in comp:
                return comp
        raise GraphError(f"configuration {config} is not in the complex")

    def euler_characteristic(self):
        """Alternating cell-count sum; refuses when a dimension cap was hit."""
        if self.capped:
            raise GraphError(
                "dimension cap active: Euler characteristic unavailable")
        total = len(self.vertices) - len(self.edges)
        for k, cells in self.cubes.items():
            total += len(cells) * (-1) ** k
        return total

    def restricted_to(self, component):
        """The subcomplex spanned by a set of configurations."""
        comp = frozenset(component)
        vs = tuple(c for c in self.vertices if c in comp)
        es = tuple(e for e in self.edges
                   if self.edge_endpoints(e)[0] in comp)
        cubes = {}
        for k, cells in self.cubes.items():
            kept = []
            for cube in cells:
                keys, residual = cube
                corner = tuple(sorted(residual + tuple(k0[0] for k0 in keys)))
                if corner in comp:
                    kept.append(cube)
            cubes[k] = tuple(kept)
        return CubeComplex(self.graph, self.n, vs, es, cubes,
                           self.max_dim, self.capped)


def build_uc(g, n, max_dim=None):
    """Build the n-particle configuration complex of a graph.

    Cells are enumerated in lexicographic order.  `max_dim` caps the cube
    dimension; the complex then reports itself as capped and refuses Euler
    characteristics.  A graph with fewer than n vertices cannot host n
    particles and raises.
    """
    if n < 1:
        raise GraphError("particle count must be at least 1")
    if g.num_vertices() < n:
        raise GraphError(
            f"graph has {g.num_vertices()} vertices; cannot host {n} particles")
    vs = g.vertices
    vertices = tuple(itertools.combinations(vs, n))

    edges = []
    ekeys = g.edge_keys
    for (u, v) in ekeys:
        rest = [w for w in vs if w != u and w != v]
        for residual in itertools.combinations(rest, n - 1):
            edges.append(((u, v), residual))
    edges.sort()

    top = min(n, max_dim) if max_dim is not None else n
    capped = max_dim is not None and max_dim < n
    cubes = {}
    for k in range(2, top + 1):
        found = []

        def grow(start, chosen, used):
            if len(chosen) == k:
                rest = [w for w in vs if w not in used]
                for residual in itertools.combinations(rest, n - k):
                    found.append((tuple(chosen), residual))
                return
            for i in range(start, len(ekeys)):
                (u, v) = ekeys[i]
                if u in used or v in used:
                    continue
                grow(i + 1, chosen + [ekeys[i]], used | {u, v})

        grow(0, [], set())
        if not found:
            break
        found.sort()
        cubes[k] = tuple(found)
    return CubeComplex(g, n, vertices, tuple(edges), cubes,
                       max_dim if max_dim is not None else n, capped)


def verify_npc(c):
    """Self-check of the nonpositive-curvature conditions.

    Verifies that cube boundaries are present, that no two edges at a
    configuration share a label (simplicial links), and that every set of
    pairwise label-disjoint edges at a configuration spans a cube (flag
    links).  Returns (True, None) or (False, witness); for a missing square
    the witness carries the empty 4-cycle of configurations.
    """
    # boundary closure
    for k in sorted(c.cubes):
        for cube in c.cubes[k]:
            for face in c.cube_faces(cube):
                ok = c.has_edge(face) if k == 2 else c.has_cube(k - 1, face)
                if not ok:
                    return False, {"kind": "missing-face", "cube": cube,
                                   "face": face}
    for config in c.vertices:
        inc = c.incident_edges(config)
        labels = [e[0] for e in inc]
        if len(set(labels)) != len(labels):
            return False, {"kind": "repeated-label", "at": config}
        # flag condition, from squares upward
        top = min(c.n, c.max_dim)
        for size in range(2, top + 1):
            for combo in itertools.combinations(range(len(inc)), size):
                keys = [inc[i][0] for i in combo]
                occupied = set()
                disjoint = True
                for (u, v) in keys:
                    if u in occupied or v in occupied:
                        disjoint = False
                        break
                    occupied.update((u, v))
                if not disjoint:
                    continue
                residual = tuple(x for x in config if x not in occupied)
                keys = tuple(sorted(keys))
                if size == 2:
                    square = (keys, residual)
                    if not c.has_cube(2, square):
                        return False, {
                            "kind": "missing-square", "at": config,
                            "edges": keys,
                            "empty-4-cycle": CubeComplex.square_corners(
                                c, square)}
                else:
                    if not c.has_cube(size, (keys, residual)):
                        return False, {"kind": "missing-cube", "at": config,
                                       "edges": keys}
    return True, None


# -- hyperplanes --------------------------------------------------------------

@dataclass(frozen=True)
class Hyperplane:
    """A parallelism class of edges dual to one graph edge.

    `label` is the graph edge, `component` indexes the connected component
    of the (n-1)-particle complex of the graph with the label's closed edge
    removed, and `members` lists the complex edges in the class.
    """

    label: tuple
    component: int
    members: tuple

    def name(self):
        return f"{self.label[0]}~{self.label[1]}#{self.component}"


def hyperplanes(c, component=None):
    """Group the complex's edges into hyperplanes.

    Two edges with the same label belong to one hyperplane exactly when
    their residual configurations are connected in the configuration
    complex of the graph minus the closed label edge.  Optionally restricts
    to the edges inside one component of the complex (a set of configs).
    """
    g = c.graph
    out = []
    by_label = {}
    for e in c.edges:
        by_label.setdefault(e[0], []).append(e)
    for label in sorted(by_label):
        members = by_label[label]
        residuals = sorted({res for (_, res) in members})
        index = {r: i for i, r in enumerate(residuals)}
        parent = list(range(len(residuals)))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        def union(i, j):
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[max(ri, rj)] = min(ri, rj)

        lu, lv = label
        moves = [(x, y) for (x, y) in g.edge_keys
                 if x != lu and x != lv and y != lu and y != lv]
        for r in residuals:
            rset = set(r)
            for (x, y) in moves:
                for a, b in ((x, y), (y, x)):
                    if a in rset and b not in rset:
                        r2 = tuple(sorted((rset - {a}) | {b}))
                        union(index[r], index[r2])
        groups = {}
        for r in residuals:
            groups.setdefault(find(index[r]), []).append(r)
        for comp_i, root in enumerate(sorted(groups, key=lambda i: residuals[i])):
            mem = tuple(sorted((label, r) for r in groups[root]))
            out.append(Hyperplane(label, comp_i, mem))
    if component is not None:
        comp = frozenset(component)
        filtered = []
        for hp in out:
            mem = tuple(e for e in hp.members
                        if c.edge_endpoints(e)[0] in comp)
            if mem:
                filtered.append(Hyperplane(hp.label, hp.component, mem))
        out = filtered
    return tuple(out)


def edge_hyperplane_map(hps):
    """Map each complex edge to the index of its hyperplane."""
    mapping = {}
    for i, hp in enumerate(hps):
        for e in hp.members:
            mapping[e] = i
    return mapping


def crossing_graph(c, component=None):
    """The crossing graph of the hyperplanes.

    Hyperplanes become vertices H0, H1, ...; two are adjacent when some
    square has one dual edge in each.  Returns (graph, hyperplanes).
    """
    hps = hyperplanes(c, component=component)
    emap = edge_hyperplane_map(hps)
    comp = frozenset(component) if component is not None else None
    pairs = set()
    for square in c.cubes.get(2, ()):
        (e, f), residual = square
        if comp is not None:
            corner = tuple(sorted(residual + (e[0], f[0])))
            if corner not in comp:
                continue
        he = emap[(e, tuple(sorted(residual + (f[0],))))]
        hf = emap[(f, tuple(sorted(residual + (e[0],))))]
        pairs.add((min(he, hf), max(he, hf)))
    edges = {}
    for i, (a, b) in enumerate(sorted(pairs)):
        edges[f"x{i}"] = (f"H{a}", f"H{b}")
    names = [f"H{i}" for i in range(len(hps))]
    return Graph(edges, vertices=names, name="crossing"), hps


# -- exports ------------------------------------------------------------------

def config_name(config):
    return "{" + ",".join(config) + "}"


def complex_to_dot(c, name="UC"):
    """DOT rendering of the 1-skeleton."""
    lines = [f'graph "{name}" {{']
    for config in c.vertices:
        lines.append(f'  "{config_name(config)}";')
    for e in c.edges:
        a, b = c.edge_endpoints(e)
        label = c.graph.id_for(*e[0])
        lines.append(f'  "{config_name(a)}" -- "{config_name(b)}" '
                     f'[label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def summary_dict(c):
    """Counts, components, and hyperplane table as plain data."""
    hps = hyperplanes(c)
    data = {
        "graph": c.graph.name,
        "n": c.n,
        "cells": {str(k): v for k, v in sorted(c.counts().items())},
        "capped": c.capped,
        "components": len(c.components()),
        "hyperplanes": [
            {"label": list(hp.label), "component": hp.component,
             "size": len(hp.members)}
            for hp in hps
        ],
    }
    if not c.capped:
        data["euler_characteristic"] = c.euler_characteristic()
    return data
