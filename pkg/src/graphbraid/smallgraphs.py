"""Exhaustive catalogs of small graphs up to isomorphism.

Connected graphs are generated by vertex augmentation: every connected graph
on k+1 vertices arises from a connected graph on k vertices by adding back a
non-cut vertex, so attaching a new vertex to every nonempty subset of every
k-vertex graph and deduplicating canonical forms is complete.  Canonical
forms are the minimum packed adjacency bitstring over all vertex orders
compatible with iterated neighborhood-color refinement.
"""

from __future__ import annotations

from functools import lru_cache

from .graphs import Graph

# connected graphs on 1..8 vertices, up to isomorphism
CONNECTED_COUNTS = (1, 1, 2, 6, 21, 112, 853, 11117)


def _refine_colors(adj, n):
    """Iterated neighbor-color refinement; returns stable color classes.

    Colors are canonical integers (assigned by sorted signature), so two
    isomorphic graphs get identical class structures.
    """
    colors = [bin(adj[i]).count("1") for i in range(n)]
    while True:
        sigs = []
        for i in range(n):
            neigh = sorted(colors[j] for j in range(n) if adj[i] >> j & 1)
            sigs.append((colors[i], tuple(neigh)))
        order = {s: c for c, s in enumerate(sorted(set(sigs)))}
        new = [order[s] for s in sigs]
        if new == colors:
            return colors
        colors = new


def _pack(adj, order):
    """Upper-triangle bits of the reordered adjacency matrix, as one int."""
    bits = 0
    pos = 0
    n = len(order)
    for a in range(n):
        ia = order[a]
        row = adj[ia]
        for b in range(a + 1, n):
            if row >> order[b] & 1:
                bits |= 1 << pos
            pos += 1
    return bits


def canonical_form(adj, n):
    """Canonical packed adjacency of a graph given as row bitmasks.

    Minimum of the packed form over all vertex orders listing the refinement
    classes in canonical class order; isomorphic graphs agree because any
    isomorphism preserves refinement colors.
    """
    colors = _refine_colors(adj, n)
    classes = {}
    for i, c in enumerate(colors):
        classes.setdefault(c, []).append(i)
    slots = [classes[c] for c in sorted(classes)]
    best = None
    order = []

    def assign(si):
        nonlocal best
        if si == len(slots):
            packed = _pack(adj, order)
            if best is None or packed < best:
                best = packed
            return
        group = slots[si]
        remaining = [v for v in group if v not in order]

        def perms(prefix, rest):
            nonlocal best
            if not rest:
                order.extend(prefix)
                assign(si + 1)
                del order[len(order) - len(prefix):]
                return
            for k in range(len(rest)):
                perms(prefix + [rest[k]], rest[:k] + rest[k + 1:])

        perms([], remaining)

    assign(0)
    return best


def _unpack(packed, n):
    adj = [0] * n
    pos = 0
    for a in range(n):
        for b in range(a + 1, n):
            if packed >> pos & 1:
                adj[a] |= 1 << b
                adj[b] |= 1 << a
            pos += 1
    return adj


@lru_cache(maxsize=None)
def connected_masks(n):
    """Canonical packed forms of all connected n-vertex graphs."""
    if n == 1:
        return (0,)
    out = set()
    for packed in connected_masks(n - 1):
        adj = _unpack(packed, n - 1)
        for attach in range(1, 1 << (n - 1)):
            grown = [row | ((attach >> i & 1) << (n - 1))
                     for i, row in enumerate(adj)]
            grown.append(attach)
            out.add(canonical_form(grown, n))
    return tuple(sorted(out))


def connected_graphs(n):
    """All connected n-vertex graphs up to isomorphism, as Graph objects."""
    out = []
    for idx, packed in enumerate(connected_masks(n)):
        adj = _unpack(packed, n)
        edges = {}
        for a in range(n):
            for b in range(a + 1, n):
                if adj[a] >> b & 1:
                    edges[f"{a}-{b}"] = (str(a), str(b))
        out.append(Graph(edges, vertices=[str(v) for v in range(n)],
                         name=f"g{n}.{idx}"))
    return out


def connected_graphs_upto(max_vertices):
    """All connected graphs with at most `max_vertices` vertices."""
    out = []
    for n in range(1, max_vertices + 1):
        out.extend(connected_graphs(n))
    return out
