"""Independent brute-force checks on configuration complexes.

Everything here works directly with the cell structure: fundamental-group
presentations read off a spanning tree, greedy presentation trivialization,
exact integer Smith-form homology, closed-surface recognition, growth of
balls in the motion groupoid, and a bounded rewriting probe for word
triviality.  None of it consults the structural classification theory, so
it can serve as an oracle for it.

Large complexes are first shrunk by elementary collapses of the 2-skeleton
(removing an edge lying in exactly one square together with that square, or
a vertex lying in exactly one edge), which preserves the fundamental group
and first homology.
"""

from __future__ import annotations

import heapq
import itertools
from collections import deque
from dataclasses import dataclass, field
from math import gcd

from .graphs import GraphError, subdivide_for
from .complexes import build_uc
from .words import (Diagram, commute, letter_inverse, letter_move,
                    oriented_letter)


# -- 2-skeletons and collapsing -------------------------------------------------

@dataclass
class Skeleton2:
    """A 2-complex: configurations, edges, squares, with boundary maps."""
    vertices: list
    edges: list                  # edge cells
    squares: list                # square cells
    endpoints: dict              # edge -> (config, config)
    boundary: dict               # square -> tuple of 4 (edge, direction) steps
    corners: dict = field(default_factory=dict)  # square -> 4 configs


def two_skeleton(c, component=None):
    """Extract the 2-skeleton of a complex, optionally of one component."""
    comp = frozenset(component) if component is not None else None
    vertices = [v for v in c.vertices if comp is None or v in comp]
    edges = []
    endpoints = {}
    for e in c.edges:
        a, b = c.edge_endpoints(e)
        if comp is not None and a not in comp:
            continue
        edges.append(e)
        endpoints[e] = (a, b)
    squares = []
    boundary = {}
    corners = {}
    for sq in c.cubes.get(2, ()):
        cs = c.square_corners(sq)
        if comp is not None and cs[0] not in comp:
            continue
        (e, f), residual = sq
        steps = []
        ring = [
            ((e, tuple(sorted(residual + (f[0],)))), cs[0], cs[1]),
            ((f, tuple(sorted(residual + (e[1],)))), cs[1], cs[2]),
            ((e, tuple(sorted(residual + (f[1],)))), cs[2], cs[3]),
            ((f, tuple(sorted(residual + (e[0],)))), cs[3], cs[0]),
        ]
        for cell, frm, to in ring:
            lo, hi = endpoints[cell] if cell in endpoints else c.edge_endpoints(cell)
            steps.append((cell, 1 if (frm, to) == (lo, hi) else -1))
        squares.append(sq)
        boundary[sq] = tuple(steps)
        corners[sq] = cs
    return Skeleton2(vertices, edges, squares, endpoints, boundary, corners)


def collapse(sk):
    """Elementary collapses until none remain; returns a new Skeleton2.

    Removes free edge/square pairs (edge in exactly one square), then free
    vertex/edge pairs, repeating until stable.  The result is homotopy
    equivalent to the input.
    """
    live_sq = set(sk.squares)
    live_e = set(sk.edges)
    live_v = set(sk.vertices)
    sq_of_edge = {}
    for sq in sk.squares:
        for cell, _ in sk.boundary[sq]:
            sq_of_edge.setdefault(cell, set()).add(sq)
    e_of_vertex = {}
    for e in sk.edges:
        a, b = sk.endpoints[e]
        e_of_vertex.setdefault(a, set()).add(e)
        e_of_vertex.setdefault(b, set()).add(e)

    edge_queue = deque(e for e in sk.edges
                       if len(sq_of_edge.get(e, ())) == 1)
    while True:
        progress = False
        while edge_queue:
            e = edge_queue.popleft()
            if e not in live_e:
                continue
            sqs = sq_of_edge.get(e)
            if not sqs or len(sqs) != 1:
                continue
            (sq,) = sqs
            live_e.discard(e)
            live_sq.discard(sq)
            progress = True
            for cell, _ in sk.boundary[sq]:
                if cell == e:
                    continue
                s = sq_of_edge.get(cell)
                if s is not None:
                    s.discard(sq)
                    if len(s) == 1 and cell in live_e:
                        edge_queue.append(cell)
            a, b = sk.endpoints[e]
            for x in (a, b):
                e_of_vertex[x].discard(e)
        vertex_queue = deque(v for v in live_v
                             if len(e_of_vertex.get(v, ())) == 1)
        while vertex_queue:
            v = vertex_queue.popleft()
            if v not in live_v:
                continue
            es = e_of_vertex.get(v)
            if not es or len(es) != 1:
                continue
            (e,) = es
            if sq_of_edge.get(e):
                continue  # edge still carries a square; not free
            live_v.discard(v)
            live_e.discard(e)
            progress = True
            a, b = sk.endpoints[e]
            for x in (a, b):
                s = e_of_vertex.get(x)
                if s is not None:
                    s.discard(e)
                    if len(s) == 1 and x in live_v:
                        vertex_queue.append(x)
        if not progress:
            break
        edge_queue = deque(e for e in live_e
                           if len(sq_of_edge.get(e, ())) == 1)
    return Skeleton2(
        [v for v in sk.vertices if v in live_v],
        [e for e in sk.edges if e in live_e],
        [sq for sq in sk.squares if sq in live_sq],
        {e: sk.endpoints[e] for e in live_e},
        {sq: sk.boundary[sq] for sq in live_sq},
        {sq: sk.corners[sq] for sq in live_sq},
    )


# -- fundamental group presentations ---------------------------------------------

@dataclass(frozen=True)
class Presentation:
    """A finite presentation: generator names and relator words.

    Each relator is a tuple of (generator index, sign) pairs.
    """
    generators: tuple
    relators: tuple
    basepoint: tuple = ()

    def counts(self):
        return (len(self.generators), len(self.relators))


def default_basepoint(c):
    """Lexicographically least configuration in the largest component."""
    comps = c.components()
    if not comps:
        raise GraphError("empty complex has no basepoint")
    comps.sort(key=lambda comp: (-len(comp), min(comp)))
    return min(comps[0])


def _spanning_tree(sk, basepoint):
    """BFS spanning tree; returns (tree edge set, order of discovery)."""
    adj = {}
    for e in sk.edges:
        a, b = sk.endpoints[e]
        adj.setdefault(a, []).append((b, e))
        adj.setdefault(b, []).append((a, e))
    for v in adj:
        adj[v].sort()
    tree = set()
    seen = {basepoint}
    queue = deque([basepoint])
    while queue:
        x = queue.popleft()
        for y, e in adj.get(x, ()):
            if y not in seen:
                seen.add(y)
                tree.add(e)
                queue.append(y)
    return tree, seen


def pi1_presentation(c, basepoint=None, component=None, collapse_first=False):
    """Present the fundamental group of the basepoint's component.

    Generators are the co-tree edges of a breadth-first spanning tree
    (lexicographic tie-break); each square contributes the relator read
    around its boundary.  Pass ``collapse_first=True`` to present the
    collapsed homotopy-equivalent complex instead (smaller, same group).
    """
    if basepoint is None:
        basepoint = default_basepoint(c)
    if component is None:
        component = c.component_of(basepoint)
    sk = two_skeleton(c, component)
    if collapse_first:
        sk = collapse(sk)
        if basepoint not in set(sk.vertices):
            basepoint = min(sk.vertices) if sk.vertices else basepoint
    tree, reached = _spanning_tree(sk, basepoint)
    gens = [e for e in sk.edges if e not in tree]
    gen_index = {e: i for i, e in enumerate(gens)}
    relators = []
    for sq in sk.squares:
        word = []
        for cell, direction in sk.boundary[sq]:
            if cell in tree:
                continue
            word.append((gen_index[cell], direction))
        reduced = []
        for t in word:
            if reduced and reduced[-1] == (t[0], -t[1]):
                reduced.pop()
            else:
                reduced.append(t)
        relators.append(tuple(reduced))
    names = tuple(f"g{i}" for i in range(len(gens)))
    return Presentation(names, tuple(relators), basepoint)


# -- Tietze trivialization ---------------------------------------------------------

def _cyclic_reduce_relator(word):
    word = list(word)
    out = []
    for t in word:
        if out and out[-1] == (t[0], -t[1]):
            out.pop()
        else:
            out.append(t)
    while len(out) >= 2 and out[0] == (out[-1][0], -out[-1][1]):
        out = out[1:-1]
        reduced = []
        for t in out:
            if reduced and reduced[-1] == (t[0], -t[1]):
                reduced.pop()
            else:
                reduced.append(t)
        out = reduced
    return tuple(out)


def tietze_trivialize(pres, budget=2_000_000):
    """Greedily eliminate generators that occur exactly once in a relator.

    Returns (verdict, detail): verdict is True when the presentation reduces
    to the empty one (the group is trivial, and this is a certificate),
    False otherwise; detail reports 'trivialized', 'free-rank-k' (no
    relators survive but generators do: the group is free and nontrivial),
    or 'stuck' with the surviving presentation size.  `budget` bounds the
    total letters processed; exceeding it reports ('budget', sizes).
    """
    relators = [
        _cyclic_reduce_relator(r) for r in pres.relators]
    relators = [r for r in relators if r]
    alive = set(range(len(pres.generators)))
    spent = 0
    while True:
        if not relators:
            if not alive:
                return True, "trivialized"
            return False, f"free-rank-{len(alive)}"
        best = None
        for ri, r in enumerate(relators):
            counts = {}
            for gen, _ in r:
                counts[gen] = counts.get(gen, 0) + 1
            for pos, (gen, sign) in enumerate(r):
                if counts[gen] == 1:
                    cand = (len(r), gen, ri, pos)
                    if best is None or cand < best:
                        best = cand
                    break
        if best is None:
            sizes = (len(alive), len(relators),
                     sum(len(r) for r in relators))
            return False, f"stuck-{sizes[0]}g-{sizes[1]}r"
        _, gen, ri, pos = best
        r = relators.pop(ri)
        sign = r[pos][1]
        rest = r[pos + 1:] + r[:pos]      # r = x^sign * rest (cyclically)
        # x^sign = rest^{-1}
        repl = tuple((gn, -sg) for gn, sg in reversed(rest))
        if sign < 0:
            repl = tuple((gn, -sg) for gn, sg in reversed(repl))
        alive.discard(gen)
        new_relators = []
        for w in relators:
            if all(gn != gen for gn, _ in w):
                new_relators.append(w)
                continue
            out = []
            for gn, sg in w:
                if gn != gen:
                    out.append((gn, sg))
                elif sg > 0:
                    out.extend(repl)
                else:
                    out.extend((g2, -s2) for g2, s2 in reversed(repl))
            spent += len(out)
            if spent > budget:
                return None, "budget"
            w2 = _cyclic_reduce_relator(out)
            if w2:
                new_relators.append(w2)
        relators = new_relators


# -- integer Smith form -------------------------------------------------------------

def _dense_snf_invariants(matrix):
    """Diagonal invariants of a small dense integer matrix (textbook Smith form)."""
    m = [row[:] for row in matrix]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    invariants = []
    top = 0
    while top < rows and top < cols:
        # find a nonzero pivot of least absolute value
        pr = pc = None
        bestval = None
        for i in range(top, rows):
            for j in range(top, cols):
                v = abs(m[i][j])
                if v and (bestval is None or v < bestval):
                    bestval, pr, pc = v, i, j
        if pr is None:
            break
        m[top], m[pr] = m[pr], m[top]
        for row in m:
            row[top], row[pc] = row[pc], row[top]
        while True:
            # clear column
            again = False
            for i in range(top + 1, rows):
                if m[i][top]:
                    q = m[i][top] // m[top][top]
                    for j in range(top, cols):
                        m[i][j] -= q * m[top][j]
                    if m[i][top]:
                        m[top], m[i] = m[i], m[top]
                        again = True
            if again:
                continue
            for j in range(top + 1, cols):
                if m[top][j]:
                    q = m[top][j] // m[top][top]
                    for i in range(top, rows):
                        m[i][j] -= q * m[i][top]
                    if m[top][j]:
                        for i in range(top, rows):
                            m[i][top], m[i][j] = m[i][j], m[i][top]
                        again = True
            if not again:
                break
        invariants.append(abs(m[top][top]))
        top += 1
    # enforce the divisibility chain
    invariants = [v for v in invariants if v]
    changed = True
    while changed:
        changed = False
        for i in range(len(invariants)):
            for j in range(i + 1, len(invariants)):
                a, b = invariants[i], invariants[j]
                if b % a:
                    g = gcd(a, b)
                    invariants[i], invariants[j] = g, a * b // g
                    changed = True
    return sorted(invariants)


def snf_invariants(columns, tag_rows=None):
    """Rank and nonunit invariant factors of a sparse integer matrix.

    `columns` is a list of {row: value} dicts.  Unit pivots are eliminated
    sparsely first; whatever remains is finished densely.
    """
    col_data = [dict(col) for col in columns if col]
    row_to_cols = {}
    for ci, col in enumerate(col_data):
        for r in col:
            row_to_cols.setdefault(r, set()).add(ci)
    live = set(range(len(col_data)))
    rank = 0
    # lazy min-fill heap of unit-entry pivot candidates (fill, column, row)
    heap = []

    def fill_of(ci, r):
        return (len(col_data[ci]) - 1) * (len(row_to_cols[r]) - 1)

    def push_candidates(ci):
        for r, v in col_data[ci].items():
            if v in (1, -1):
                heapq.heappush(heap, (fill_of(ci, r), ci, r))

    for ci in live:
        push_candidates(ci)
    while heap:
        fill, ci, r = heapq.heappop(heap)
        if ci not in live or col_data[ci].get(r) not in (1, -1):
            continue
        cur = fill_of(ci, r)
        if cur > fill:
            heapq.heappush(heap, (cur, ci, r))
            continue
        pcol = col_data[ci]
        pval = pcol[r]
        live.discard(ci)
        rank += 1
        others = [cj for cj in row_to_cols[r] if cj in live]
        for cj in others:
            factor = col_data[cj][r] * pval  # pval is +-1
            # col_j -= factor * col_i  zeroes row r of col_j
            target = col_data[cj]
            for rr, vv in pcol.items():
                nv = target.get(rr, 0) - factor * vv
                if nv:
                    target[rr] = nv
                    row_to_cols.setdefault(rr, set()).add(cj)
                else:
                    if rr in target:
                        del target[rr]
                        row_to_cols[rr].discard(cj)
            push_candidates(cj)
        for rr in pcol:
            row_to_cols[rr].discard(ci)
    live_cols = [col_data[ci] for ci in sorted(live) if col_data[ci]]
    if not live_cols:
        return rank, ()
    rows_left = sorted({r for col in live_cols for r in col})
    rindex = {r: i for i, r in enumerate(rows_left)}
    dense = [[0] * len(live_cols) for _ in rows_left]
    for j, col in enumerate(live_cols):
        for r, v in col.items():
            dense[rindex[r]][j] = v
    inv = _dense_snf_invariants(dense)
    rank += len(inv)
    return rank, tuple(v for v in inv if v > 1)


def rank_gf2(columns):
    """Rank over GF(2) of a sparse 0/1 column matrix, via bitmask elimination."""
    pivots = {}
    rank = 0
    for col in columns:
        mask = 0
        for r, v in col.items():
            if v % 2:
                mask |= (1 << r)
        while mask:
            low = mask & -mask
            if low in pivots:
                mask ^= pivots[low]
            else:
                pivots[low] = mask
                rank += 1
                break
    return rank


# -- homology -----------------------------------------------------------------------

@dataclass(frozen=True)
class HomologySummary:
    betti0: int
    betti1: int
    torsion: tuple
    betti2: object  # int when the complex is honestly 2-dimensional, else None
    euler: object


def _boundary2_columns(sk, edge_index):
    cols = []
    for sq in sk.squares:
        col = {}
        for cell, direction in sk.boundary[sq]:
            r = edge_index[cell]
            col[r] = col.get(r, 0) + direction
        cols.append({r: v for r, v in col.items() if v})
    return cols


def homology(c, component=None, use_collapse=True):
    """Integral homology below dimension two, by exact Smith normal form.

    Reports betti0, betti1, the torsion invariants of first homology, and --
    when the complex is genuinely at most 2-dimensional and uncapped --
    betti2 and the Euler characteristic.  Collapsing first is a homotopy
    equivalence, so it never changes the answer.
    """
    sk = two_skeleton(c, component)
    comps = (c.restricted_to(component).components() if component is not None
             else c.components())
    b0 = len(comps)
    if use_collapse:
        cut = collapse(sk)
    else:
        cut = sk
    edge_index = {e: i for i, e in enumerate(cut.edges)}
    cols = _boundary2_columns(cut, edge_index)
    rank2, torsion = snf_invariants(cols)
    b1 = len(cut.edges) - len(cut.vertices) + b0 - rank2
    full_dim = c.dimension()
    b2 = None
    euler = None
    if not c.capped and full_dim <= 2:
        # collapsing preserves homotopy type, hence betti2 as well
        b2 = len(cut.squares) - rank2
        euler = c.euler_characteristic()
    return HomologySummary(b0, b1, tuple(torsion), b2, euler)


def betti1_gf2(c, component=None, use_collapse=True):
    """First Betti number mod 2 (cheap nontriviality certificate)."""
    sk = two_skeleton(c, component)
    if use_collapse:
        sk = collapse(sk)
    comp_count = _skeleton_components(sk)
    edge_index = {e: i for i, e in enumerate(sk.edges)}
    cols = _boundary2_columns(sk, edge_index)
    r2 = rank_gf2(cols)
    return len(sk.edges) - len(sk.vertices) + comp_count - r2


def _skeleton_components(sk):
    parent = {v: v for v in sk.vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for e in sk.edges:
        a, b = sk.endpoints[e]
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    return len({find(v) for v in sk.vertices})


# -- triviality oracle ----------------------------------------------------------------

def component_simply_connected(c, basepoint):
    """Decide whether the basepoint's component is simply connected.

    The verdict is 'trivializable presentation and vanishing first homology':
    the collapsed component either disappears entirely (certifying
    triviality), or its presentation trivializes, or first homology is
    nonzero (certifying nontriviality).
    """
    component = c.component_of(basepoint)
    pres = pi1_presentation(c, basepoint, component, collapse_first=True)
    if not pres.generators:
        return True
    h = homology(c, component)
    if h.betti1 > 0 or h.torsion:
        # nonzero first homology certifies a nontrivial group outright, and
        # skipping the reduction search here cannot change the answer: a
        # trivializable presentation would force vanishing first homology
        return False
    verdict, _ = tietze_trivialize(pres)
    if verdict is True:
        return True
    # trivializable-and-acyclic is the defining criterion; a stuck greedy
    # reduction with vanishing homology stays a (conservative) "no"
    return False


def group_trivial(g, n, base):
    """Oracle for triviality of the motion group at a base configuration.

    Subdivides enough for the complex to carry the topology, then decides
    simple connectivity of the base configuration's component.
    """
    gg = subdivide_for(g, n)
    c = build_uc(gg, n, max_dim=2)
    base = tuple(sorted(base))
    return component_simply_connected(c, base)


# -- surfaces ----------------------------------------------------------------------

def surface_check(c, component=None):
    """Recognize closed surfaces among 2-dimensional complexes.

    Checks that every edge lies in exactly two squares and every vertex link
    is a single cycle; if so, settles orientability by propagating square
    orientations across shared edges.
    """
    sk = two_skeleton(c, component)
    out = {"closed_surface": False, "orientable": None, "reason": None}
    if not sk.squares:
        out["reason"] = "no 2-cells"
        return out
    sq_of_edge = {}
    for sq in sk.squares:
        for cell, _ in sk.boundary[sq]:
            sq_of_edge.setdefault(cell, []).append(sq)
    for e in sk.edges:
        if len(sq_of_edge.get(e, ())) != 2:
            out["reason"] = (f"edge in {len(sq_of_edge.get(e, ()))} squares")
            return out
    # vertex links must be single cycles
    link_arcs = {}
    for sq in sk.squares:
        cs = sk.corners[sq]
        ring = [sk.boundary[sq][i][0] for i in range(4)]
        # at each corner the two boundary edges meeting there form an arc
        at = {cs[0]: (ring[3], ring[0]), cs[1]: (ring[0], ring[1]),
              cs[2]: (ring[1], ring[2]), cs[3]: (ring[2], ring[3])}
        for v, (e1, e2) in at.items():
            link_arcs.setdefault(v, []).append((e1, e2))
    for v in sk.vertices:
        arcs = link_arcs.get(v, [])
        nodes = set()
        for e1, e2 in arcs:
            nodes.add(e1)
            nodes.add(e2)
        deg = {x: 0 for x in nodes}
        for e1, e2 in arcs:
            deg[e1] += 1
            deg[e2] += 1
        if not nodes or any(d != 2 for d in deg.values()) \
                or len(arcs) != len(nodes):
            out["reason"] = f"link at {v} is not a single cycle"
            return out
        # connectivity of the link
        adj = {}
        for e1, e2 in arcs:
            adj.setdefault(e1, []).append(e2)
            adj.setdefault(e2, []).append(e1)
        start = next(iter(nodes))
        seen = {start}
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        if seen != nodes:
            out["reason"] = f"link at {v} is disconnected"
            return out
    out["closed_surface"] = True
    # orientability: 2-color squares so neighbors traverse shared edges oppositely
    spin = {}
    orientable = True
    for start in sk.squares:
        if start in spin:
            continue
        spin[start] = 0
        queue = deque([start])
        while queue and orientable:
            sq = queue.popleft()
            dirs = {cell: d for cell, d in sk.boundary[sq]}
            for cell in dirs:
                for other in sq_of_edge[cell]:
                    if other == sq:
                        continue
                    odirs = {c2: d2 for c2, d2 in sk.boundary[other]}
                    same = dirs[cell] == odirs[cell]
                    want = spin[sq] ^ (1 if same else 0)
                    if other not in spin:
                        spin[other] = want
                        queue.append(other)
                    elif spin[other] != want:
                        orientable = False
                        break
                if not orientable:
                    break
    out["orientable"] = orientable
    out["reason"] = "closed surface"
    euler = len(sk.vertices) - len(sk.edges) + len(sk.squares)
    out["euler"] = euler
    if orientable:
        out["orientable_genus"] = (2 - euler) // 2
    else:
        out["crosscap_number"] = 2 - euler
        out["h1_rank"] = 1 - euler
        out["genus_note"] = (
            f"two genus conventions disagree for this surface: the crosscap "
            f"count is 2 - euler = {2 - euler}, while labels based on the "
            f"rank of the first homology group give 1 - euler = {1 - euler}; "
            f"both are reported and neither is chosen")
    return out


# -- growth ------------------------------------------------------------------------

def legal_letters_at(g, config):
    """All single moves legal from a configuration, in canonical order."""
    occupied = set(config)
    out = []
    for u in config:
        for w in g.neighbors(u):
            if w not in occupied:
                out.append(oriented_letter(g, u, w))
    return sorted(set(out))


def ball_growth(g, n, base, radius, budget=200_000):
    """Sizes of balls around the identity in the motion groupoid at `base`.

    Breadth-first search over canonical forms: states are diagrams based at
    `base`, neighbors append one legal letter.  Returns (sizes, complete)
    where sizes[r] counts diagrams of groupoid norm at most r; `complete`
    is False when the state budget was exhausted (counts then are partial).
    """
    base = tuple(sorted(base))
    start = Diagram.identity(g, base)
    dist = {start.letters: 0}
    frontier = [start]
    sizes = [1]
    complete = True
    for r in range(1, radius + 1):
        new_frontier = []
        for d in frontier:
            for letter in legal_letters_at(g, d.terminus):
                nd = d.concat(Diagram.make(g, d.terminus, (letter,)))
                if nd.letters not in dist:
                    dist[nd.letters] = r
                    new_frontier.append(nd)
                    if len(dist) > budget:
                        complete = False
                        break
            if not complete:
                break
        sizes.append(sizes[-1] + len(new_frontier))
        frontier = new_frontier
        if not complete:
            break
    return sizes, complete


# -- bounded word-triviality probe ----------------------------------------------------

def rewrite_trivial(g, base, letters, budget=500_000):
    """Decide triviality of a legal word by blind rewriting.

    Search over words reachable by cancelling adjacent inverse letters and
    swapping adjacent letters with disjoint edges.  Lengths never grow, so
    for trivial words of modest length the empty word is always found; the
    search is exact for words whose letter count is small.  Returns True,
    False, or None when the budget ran out.
    """
    start = tuple(letters)
    seen = {start}
    queue = deque([start])
    steps = 0
    while queue:
        w = queue.popleft()
        if not w:
            return True
        steps += 1
        if steps > budget:
            return None
        for i in range(len(w) - 1):
            a, b = w[i], w[i + 1]
            if b == letter_inverse(a):
                nw = w[:i] + w[i + 2:]
                if nw not in seen:
                    seen.add(nw)
                    queue.append(nw)
            if commute(a, b):
                nw = w[:i] + (b, a) + w[i + 2:]
                if nw not in seen:
                    seen.add(nw)
                    queue.append(nw)
    return False


# -- full-dimensional counts ---------------------------------------------------------

def cube_counts(g, n):
    """Cell counts of the n-particle complex by dimension, combinatorially.

    A k-cube is a k-edge matching of the graph together with n - k resting
    particles off its endpoints, so the count is (#k-matchings) * C(V-2k, n-k).
    Unlike build_uc this needs no cell enumeration, so it reaches complexes
    whose top dimension makes explicit construction wasteful.
    """
    from math import comb
    nv = g.num_vertices()
    ek = g.edge_keys
    msizes = {0: 1}

    def grow(start, used, size):
        for i in range(start, len(ek)):
            u, v = ek[i]
            if u in used or v in used:
                continue
            msizes[size + 1] = msizes.get(size + 1, 0) + 1
            if size + 1 < n:
                grow(i + 1, used | {u, v}, size + 1)

    if n >= 1:
        grow(0, set(), 0)
    out = []
    for k in range(n + 1):
        cnt = msizes.get(k, 0) * comb(max(nv - 2 * k, 0), n - k)
        out.append(cnt)
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def euler_characteristic_full(g, n):
    """Euler characteristic of the full n-particle complex."""
    return sum((-1) ** k * c for k, c in enumerate(cube_counts(g, n)))


# -- presentation-level probes -------------------------------------------------------

def word_in_presentation(c, base, letters, component=None):
    """Express a legal word over the generators of pi1_presentation(c, base).

    Replays the word as an edge path in the complex and records the co-tree
    edges it crosses (the spanning tree is rebuilt deterministically, so
    indices agree with pi1_presentation for the same basepoint).  Returns
    the freely reduced generator word and the final configuration; the word
    represents a group element only when it closes up at the base.
    """
    g = c.graph
    base = tuple(sorted(base))
    if component is None:
        component = c.component_of(base)
    sk = two_skeleton(c, component)
    tree, _ = _spanning_tree(sk, base)
    gen_index = {}
    for e in sk.edges:
        if e not in tree:
            gen_index[e] = len(gen_index)
    config = base
    word = []
    for letter in letters:
        frm, to = letter_move(g, letter)
        rest = tuple(sorted(set(config) - {frm}))
        cell = (letter[0], rest)
        if cell not in sk.endpoints:
            raise GraphError(f"illegal step {letter!r} from {config!r}")
        nxt = tuple(sorted(rest + (to,)))
        if cell in gen_index:
            lo, hi = sk.endpoints[cell]
            sign = 1 if (config, nxt) == (lo, hi) else -1
            if word and word[-1] == (gen_index[cell], -sign):
                word.pop()
            else:
                word.append((gen_index[cell], sign))
        config = nxt
    return tuple(word), config


def vankampen_trivial(pres, word, max_area=4, budget=100_000):
    """Bounded search for the word as a product of conjugated relators.

    Breadth-first over freely reduced words, inserting one cyclic rotation
    of a relator (or its inverse) per step.  Returns True when the empty
    word is reached within `max_area` insertions, False when the
    presentation has no relators and the word is nonempty (free group,
    exact), and None when the bounded search is exhausted.
    """
    def reduce_word(w):
        out = []
        for t in w:
            if out and out[-1] == (t[0], -t[1]):
                out.pop()
            else:
                out.append(t)
        return tuple(out)

    word = reduce_word(word)
    if not word:
        return True
    rotations = set()
    for r in pres.relators:
        r = reduce_word(r)
        if not r:
            continue
        inv = tuple((i, -s) for i, s in reversed(r))
        for base_rel in (r, inv):
            for k in range(len(base_rel)):
                rotations.add(base_rel[k:] + base_rel[:k])
    if not rotations:
        return False
    rotations = sorted(rotations)
    seen = {word: 0}
    queue = deque([(word, 0)])
    steps = 0
    while queue:
        w, area = queue.popleft()
        if area == max_area:
            continue
        for pos in range(len(w) + 1):
            for rot in rotations:
                steps += 1
                if steps > budget:
                    return None
                nw = reduce_word(w[:pos] + rot + w[pos:])
                if not nw:
                    return True
                if len(nw) > len(word) + 2 * len(rot):
                    continue
                prev = seen.get(nw)
                if prev is None or prev > area + 1:
                    seen[nw] = area + 1
                    queue.append((nw, area + 1))
    return None
