"""Peripheral-subgraph criterion for relative hyperbolicity of two-particle groups.

A collection of subgraphs is checked against three combinatorial conditions:
every vertex-disjoint pair of simple cycles must lie inside one member,
pairwise member intersections must be disjoint unions of segments, and no
reduced path between member vertices may leave the member while avoiding one
of its cycles.  A passing proper collection certifies relative hyperbolicity
of the two-particle group; a failing one certifies nothing, so failures are
reported as "criterion inapplicable", never as a negative verdict.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graphs import GraphError, Subgraph, ekey


# -- simple cycles ---------------------------------------------------------------

def simple_cycles(g):
    """All simple cycles, one canonical representative each.

    A cycle is listed starting at its least vertex, with its second vertex
    smaller than its last (killing rotations and reflections).  Backtracking
    enumeration; exponential in general, fine at desk scale.
    """
    out = []
    for s in sorted(g.vertices):
        path = [s]
        used = {s}

        def dfs():
            u = path[-1]
            for w in sorted(g.neighbors(u)):
                if w == s:
                    if len(path) >= 3 and path[1] < path[-1]:
                        out.append(tuple(path))
                elif w > s and w not in used:
                    used.add(w)
                    path.append(w)
                    dfs()
                    path.pop()
                    used.discard(w)

        dfs()
    out.sort(key=lambda c: (len(c), c))
    return out


def _cycle_edges(cycle):
    m = len(cycle)
    return frozenset(ekey(cycle[i], cycle[(i + 1) % m]) for i in range(m))


# -- collections ----------------------------------------------------------------

@dataclass(frozen=True)
class PeripheralCollection:
    """A duplicate-free list of candidate peripheral subgraphs."""
    graph: object
    members: tuple

    @classmethod
    def of(cls, g, members):
        seen = set()
        out = []
        for m in members:
            if not isinstance(m, Subgraph):
                raise GraphError("collection members must be subgraphs")
            if m.parent is not g:
                if set(m.vertices) - set(g.vertices) or \
                        set(m.edges) - set(g.edge_keys):
                    raise GraphError(
                        f"member {sorted(m.vertices)} is not a subgraph "
                        f"of {g.name or 'the graph'}")
                m = Subgraph(g, m.vertices, m.edges)
            key = (m.vertices, m.edges)
            if key not in seen:
                seen.add(key)
                out.append(m)
        return cls(g, tuple(out))

    def __len__(self):
        return len(self.members)

    def to_dict(self):
        return {"members": [
            {"vertices": m.sorted_vertices(), "edges": sorted(map(list, m.edges))}
            for m in self.members]}


@dataclass
class ConditionReport:
    """Outcome of one condition: ok is True, False, or None (budget ran out)."""
    ok: object
    detail: str
    violations: list = field(default_factory=list)
    flags: list = field(default_factory=list)

    def to_dict(self):
        out = {"ok": self.ok, "detail": self.detail}
        if self.violations:
            out["violations"] = self.violations
        if self.flags:
            out["flags"] = self.flags
        return out


@dataclass
class CollectionVerdict:
    """Aggregated three-condition verdict over a peripheral collection."""
    applies: object               # True / False / None (inconclusive)
    proper: bool
    degenerate: bool
    conditions: list
    summary: str

    def to_dict(self):
        return {"applies": self.applies, "proper": self.proper,
                "degenerate": self.degenerate, "summary": self.summary,
                "conditions": [c.to_dict() for c in self.conditions]}


def _component_split(g, banned):
    """Components of the graph minus a banned vertex set, as vertex sets."""
    alive = set(g.vertices) - set(banned)
    comps = []
    while alive:
        start = min(alive)
        stack = [start]
        comp = {start}
        alive.discard(start)
        while stack:
            u = stack.pop()
            for w in g.neighbors(u):
                if w in alive:
                    alive.discard(w)
                    comp.add(w)
                    stack.append(w)
        comps.append(comp)
    return comps


def _segment_union_check(g, inter):
    """Classify a member intersection: (ok, flags) per condition two.

    The intersection must be a disjoint union of segments: no cycles and no
    vertex meeting three of its edges.  Isolated vertices count as degenerate
    segments but are flagged for the report.
    """
    deg = {v: 0 for v in inter.vertices}
    for (u, w) in inter.edges:
        deg[u] += 1
        deg[w] += 1
    if any(d > 2 for d in deg.values()):
        return False, []
    # cycle detection among intersection edges via union-find
    parent = {v: v for v in inter.vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for (u, w) in inter.edges:
        ru, rw = find(u), find(w)
        if ru == rw:
            return False, []
        parent[ru] = rw
    isolated = sorted(v for v, d in deg.items() if d == 0)
    flags = []
    if isolated:
        flags.append(f"single-vertex segments allowed: {isolated}")
    return True, flags


def _violating_route(g, lam_vertices, lam_edges, banned, budget):
    """Search for a route breaking condition three, avoiding `banned`.

    Looks for a simple path between two distinct member vertices, or a
    simple cycle through one, that uses at least one non-member edge and no
    banned vertex.  Any reduced path violating the condition yields such a
    simple route among its edges.  Returns (route, budget_left) with route
    None when none exists, or (None, -1) when the budget ran out.
    """
    banned = set(banned)
    comps = _component_split(g, banned)
    for comp in comps:
        lam_here = sorted(v for v in comp if v in lam_vertices)
        if not lam_here:
            continue
        if all(ekey(u, w) in lam_edges
               for u in comp for w in g.neighbors(u)
               if w in comp and u < w):
            continue
        for start in lam_here:
            path = [start]
            on_path = {start}

            def dfs(used_outside):
                nonlocal budget
                u = path[-1]
                for w in sorted(g.neighbors(u)):
                    if w in banned:
                        continue
                    budget -= 1
                    if budget < 0:
                        return "budget"
                    outside = used_outside or (ekey(u, w) not in lam_edges)
                    if w == start:
                        if len(path) >= 3 and outside:
                            return list(path) + [start]
                        continue
                    if w in on_path:
                        continue
                    if w in lam_vertices and outside:
                        return list(path) + [w]
                    on_path.add(w)
                    path.append(w)
                    hit = dfs(outside)
                    path.pop()
                    on_path.discard(w)
                    if hit is not None:
                        return hit
                return None

            hit = dfs(False)
            if hit == "budget":
                return None, -1
            if hit is not None:
                return hit, budget
    return None, budget


def check_collection(g, collection, budget=500_000):
    """Verify the three peripheral conditions for a collection.

    Returns a CollectionVerdict; `applies` is True when all three conditions
    hold, False when one fails, and None when the route search exhausted its
    budget before deciding.
    """
    if not isinstance(collection, PeripheralCollection):
        collection = PeripheralCollection.of(g, collection)
    elif collection.graph is not g:
        collection = PeripheralCollection.of(g, collection.members)
    members = collection.members
    proper = all(not m.is_whole_parent() for m in members)
    degenerate = not proper
    cycles = simple_cycles(g)
    cycle_edges = [_cycle_edges(c) for c in cycles]

    # condition one: disjoint simple-cycle pairs are covered by members
    cond1 = ConditionReport(True, "every vertex-disjoint pair of simple "
                                  "cycles lies inside some member")
    pair_count = 0
    for i in range(len(cycles)):
        vi = set(cycles[i])
        for j in range(i + 1, len(cycles)):
            if vi & set(cycles[j]):
                continue
            pair_count += 1
            needed_v = vi | set(cycles[j])
            needed_e = cycle_edges[i] | cycle_edges[j]
            if not any(needed_v <= set(m.vertices)
                       and needed_e <= set(m.edges) for m in members):
                cond1.ok = False
                cond1.violations.append(
                    {"cycles": [list(cycles[i]), list(cycles[j])]})
                if len(cond1.violations) >= 5:
                    break
        if len(cond1.violations) >= 5:
            break
    cond1.detail += f" ({pair_count} disjoint pairs among "\
                    f"{len(cycles)} simple cycles)"

    # condition two: pairwise intersections are disjoint unions of segments
    cond2 = ConditionReport(True, "pairwise member intersections are "
                                  "disjoint unions of segments")
    for i in range(len(members)):
        for j in range(i + 1, len(members)):
            inter = members[i].intersection(members[j])
            if not inter.vertices:
                continue
            ok, flags = _segment_union_check(g, inter)
            cond2.flags.extend(
                f"members {i},{j}: {f}" for f in flags)
            if not ok:
                cond2.ok = False
                cond2.violations.append(
                    {"members": [i, j],
                     "intersection_vertices": inter.sorted_vertices()})

    # condition three: no stray route around a member cycle
    cond3 = ConditionReport(True, "no reduced path between member vertices "
                                  "avoiding one of its cycles leaves the member")
    left = budget
    for mi, m in enumerate(members):
        medges = set(m.edges)
        mverts = set(m.vertices)
        for c, ce in zip(cycles, cycle_edges):
            if not (ce <= medges):
                continue
            route, left = _violating_route(g, mverts, medges, set(c), left)
            if left < 0:
                cond3.ok = None
                cond3.detail = ("route search budget exhausted; "
                                "condition three undecided")
                break
            if route is not None:
                cond3.ok = False
                cond3.violations.append(
                    {"member": mi, "cycle": list(c), "route": route})
        if cond3.ok is not True:
            break

    conditions = [cond1, cond2, cond3]
    if any(c.ok is False for c in conditions):
        applies = False
        summary = ("criterion inapplicable: a condition fails; this does "
                   "not decide relative hyperbolicity either way")
    elif any(c.ok is None for c in conditions):
        applies = None
        summary = "inconclusive: search budget exhausted"
    else:
        applies = True
        if degenerate:
            summary = ("conditions hold but a member is the whole graph; "
                       "the peripheral structure is degenerate")
        else:
            summary = ("conditions hold for a proper collection: the "
                       "two-particle group is hyperbolic relative to the "
                       "members' subgroups")
    return CollectionVerdict(applies, proper, degenerate, conditions, summary)


def pair_seed_collection(g):
    """The seed collection: unions of all vertex-disjoint simple-cycle pairs."""
    cycles = simple_cycles(g)
    members = []
    for i in range(len(cycles)):
        vi = set(cycles[i])
        for j in range(i + 1, len(cycles)):
            if vi & set(cycles[j]):
                continue
            members.append(Subgraph(
                g,
                frozenset(vi | set(cycles[j])),
                frozenset(_cycle_edges(cycles[i]) | _cycle_edges(cycles[j]))))
    return PeripheralCollection.of(g, members)


def _intersection_violates(g, v1, e1, v2, e2):
    """Raw-set condition-two test: True when the intersection is not a
    disjoint union of segments (single vertices allowed)."""
    ie = e1 & e2
    if len(ie) < 2:
        return False
    deg = {}
    for (u, w) in ie:
        deg[u] = deg.get(u, 0) + 1
        deg[w] = deg.get(w, 0) + 1
    if any(d > 2 for d in deg.values()):
        return True
    parent = {v: v for v in deg}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for (u, w) in ie:
        ru, rw = find(u), find(w)
        if ru == rw:
            return True
        parent[ru] = rw
    return False


def generate_collection(g, budget=500_000, max_rounds=30):
    """Saturate toward a passing collection; may degenerate to the whole graph.

    Seeds with every union of a vertex-disjoint simple-cycle pair, then
    repeatedly merges member groups whose pairwise intersections are not
    disjoint unions of segments and absorbs routes violating condition
    three, until the three conditions hold.  Returns (collection, status)
    with status "proper" or "degenerate".
    """
    collection = pair_seed_collection(g)
    if not collection.members:
        return collection, "proper"
    # raw (vertices, edges) pairs; Subgraph objects are rebuilt at the end
    members = sorted({(m.vertices, m.edges) for m in collection.members})
    cycles = simple_cycles(g)
    cycle_edges = [_cycle_edges(c) for c in cycles]

    for _ in range(max_rounds):
        changed = False
        # one union-find sweep merging all condition-two violating pairs
        while True:
            idx = list(range(len(members)))

            def find(i):
                while idx[i] != i:
                    idx[i] = idx[idx[i]]
                    i = idx[i]
                return i

            any_merge = False
            for i in range(len(members)):
                vi, ei = members[i]
                for j in range(i + 1, len(members)):
                    if find(i) == find(j):
                        continue
                    vj, ej = members[j]
                    if _intersection_violates(g, vi, ei, vj, ej):
                        idx[find(i)] = find(j)
                        any_merge = True
            if not any_merge:
                break
            changed = True
            groups = {}
            for i, (v, e) in enumerate(members):
                root = find(i)
                gv, ge = groups.get(root, (frozenset(), frozenset()))
                groups[root] = (gv | v, ge | e)
            members = sorted(set(groups.values()))
        # absorb condition-three routes
        grown = True
        while grown:
            grown = False
            for i, (mverts, medges) in enumerate(members):
                for c, ce in zip(cycles, cycle_edges):
                    if not (ce <= medges):
                        continue
                    route, left = _violating_route(
                        g, mverts, medges, set(c), budget)
                    if left < 0:
                        route = None
                    if route is not None:
                        extra_v = frozenset(route)
                        extra_e = frozenset(
                            ekey(route[k], route[k + 1])
                            for k in range(len(route) - 1))
                        members[i] = (mverts | extra_v, medges | extra_e)
                        members = sorted(set(members))
                        grown = changed = True
                        break
                if grown:
                    break
        if not changed:
            break
    collection = PeripheralCollection.of(
        g, [Subgraph(g, v, e) for v, e in members])
    status = "degenerate" if any(m.is_whole_parent()
                                 for m in collection.members) else "proper"
    return collection, status


def triangle_pair_collection(g):
    """Unions of vertex-disjoint induced-triangle pairs (complete graphs)."""
    from itertools import combinations
    tris = [c for c in simple_cycles(g) if len(c) == 3]
    members = []
    for t1, t2 in combinations(tris, 2):
        if set(t1) & set(t2):
            continue
        members.append(Subgraph(
            g, frozenset(t1) | frozenset(t2),
            frozenset(_cycle_edges(t1) | _cycle_edges(t2))))
    return PeripheralCollection.of(g, members)
