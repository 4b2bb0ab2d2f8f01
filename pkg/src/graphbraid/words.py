"""Legal words and diagrams over a graph's edges.

A letter moves one particle across a graph edge: `(edge_key, +1)` moves it
from the edge's declared origin to its terminus, `(edge_key, -1)` the other
way.  A word is legal from a base configuration when every step starts on an
occupied vertex and lands on an unoccupied one.

Two legal words from the same base describe the same motion exactly when one
can be carried to the other by cancelling/inserting inverse pairs and by
swapping adjacent letters whose edges share no vertex.  The canonical form
used here first removes every cancellable pair (cancellation is allowed
across blocks of commuting letters) and then takes the lexicographically
least representative among commutation-equivalent orderings, so equality of
diagrams is equality of base and canonical letters.

In word text, an edge id stands for its positive letter and a trailing
apostrophe for the inverse: ``c a' b c' a b'``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import GraphError, Subgraph, ekey


class LegalityError(GraphError):
    """A word step that starts on an empty vertex or lands on a full one."""

    def __init__(self, position, clause, letter, config):
        self.position = position
        self.clause = clause
        self.letter = letter
        self.config = config
        super().__init__(
            f"letter {position}: {clause} (letter {letter}, at {config})")


# -- letters ------------------------------------------------------------------

def letter_inverse(letter):
    key, sign = letter
    return (key, -sign)


def letter_move(g, letter):
    """(from, to) vertices of a letter under the declared orientation."""
    key, sign = letter
    o, t = g.orientation(g.id_for(*key))
    return (o, t) if sign > 0 else (t, o)


def oriented_letter(g, frm, to):
    """The letter moving a particle from `frm` to `to` along their edge."""
    eid = g.id_for(frm, to)
    o, t = g.orientation(eid)
    return (ekey(frm, to), 1 if (o, t) == (frm, to) else -1)


def commute(l1, l2):
    """Letters commute exactly when their edges share no vertex."""
    return not (set(l1[0]) & set(l2[0]))


def letter_sort_key(letter):
    key, sign = letter
    return (key, 0 if sign > 0 else 1)


def parse_word(g, text):
    """Parse word text (edge ids, apostrophe for inverse) into letters."""
    letters = []
    for token in text.split():
        sign = 1
        if token.endswith("'"):
            sign = -1
            token = token[:-1]
        try:
            o, t = g.orientation(token)
        except KeyError:
            raise GraphError(f"unknown edge id {token!r} in word")
        letters.append((ekey(o, t), sign))
    return tuple(letters)


def word_to_text(g, letters):
    parts = []
    for key, sign in letters:
        parts.append(g.id_for(*key) + ("" if sign > 0 else "'"))
    return " ".join(parts)


# -- legality -----------------------------------------------------------------

def check_config(g, config, n=None):
    config = tuple(sorted(str(v) for v in config))
    if len(set(config)) != len(config):
        raise GraphError(f"configuration {config} repeats a vertex")
    for v in config:
        if not g.has_vertex(v):
            raise GraphError(f"configuration vertex {v!r} is not in the graph")
    if n is not None and len(config) != n:
        raise GraphError(f"expected {n} particles, got {len(config)}")
    return config


def apply_letter(g, config, letter):
    frm, to = letter_move(g, letter)
    return tuple(sorted((set(config) - {frm}) | {to}))


def check_legal(g, base, letters):
    """Verify a word is legal from `base`; return the terminus configuration.

    Raises LegalityError citing the 1-based position and the violated
    clause: 'origin-empty' when the moving particle is absent,
    'terminus-occupied' when the landing vertex is taken.
    """
    config = set(check_config(g, base))
    for i, letter in enumerate(letters, 1):
        frm, to = letter_move(g, letter)
        if frm not in config:
            raise LegalityError(i, "origin-empty", letter, tuple(sorted(config)))
        if to in config:
            raise LegalityError(i, "terminus-occupied", letter,
                                tuple(sorted(config)))
        config.remove(frm)
        config.add(to)
    return tuple(sorted(config))


def is_legal(g, base, letters):
    try:
        check_legal(g, base, letters)
        return True
    except GraphError:
        return False


# -- canonical form -----------------------------------------------------------

def trace_reduce(letters):
    """Remove every cancellable inverse pair.

    A pair x ... x^{-1} cancels when everything between commutes with x;
    the survivors form a reduced word in the partially commutative sense.
    """
    out = []
    for x in letters:
        xinv = letter_inverse(x)
        i = len(out) - 1
        while i >= 0:
            if out[i] == xinv:
                del out[i]
                break
            if not commute(out[i], x):
                out.append(x)
                break
            i -= 1
        else:
            out.append(x)
    return tuple(out)


def lex_least(letters):
    """Lexicographically least reordering among commutation-equivalent words.

    Greedy: repeatedly emit the least letter that can be moved to the front,
    i.e. one preceded only by letters its edge is disjoint from.
    """
    remaining = list(letters)
    out = []
    while remaining:
        best = None
        for p, x in enumerate(remaining):
            if all(commute(remaining[k], x) for k in range(p)):
                if best is None or letter_sort_key(x) < letter_sort_key(
                        remaining[best]):
                    best = p
        out.append(remaining.pop(best))
    return tuple(out)


def normal_form(letters):
    """Canonical representative of a word up to cancellation and commutation."""
    return lex_least(trace_reduce(letters))


# -- diagrams -------------------------------------------------------------------

@dataclass(frozen=True)
class Diagram:
    """A particle motion: base configuration plus canonical letters.

    Always construct through `Diagram.make`, which checks legality and
    normalizes; two diagrams are equal exactly when graph, base, and
    canonical letters coincide.
    """

    graph: object
    base: tuple
    letters: tuple
    terminus: tuple

    @classmethod
    def make(cls, g, base, letters):
        base = check_config(g, base)
        terminus = check_legal(g, base, letters)
        nf = normal_form(tuple(letters))
        # rewriting never changes the endpoint configuration
        assert check_legal(g, base, nf) == terminus
        return cls(g, base, nf, terminus)

    @classmethod
    def identity(cls, g, base):
        return cls.make(g, base, ())

    @classmethod
    def from_text(cls, g, base, text):
        return cls.make(g, base, parse_word(g, text))

    def __len__(self):
        return len(self.letters)

    @property
    def is_identity(self):
        return not self.letters

    @property
    def is_spherical(self):
        return self.base == self.terminus

    def concat(self, other):
        if other.graph != self.graph:
            raise GraphError("diagrams live over different graphs")
        if other.base != self.terminus:
            raise GraphError(
                f"cannot compose: terminus {self.terminus} != base {other.base}")
        return Diagram.make(self.graph, self.base,
                            self.letters + other.letters)

    def __mul__(self, other):
        return self.concat(other)

    def inverse(self):
        inv = tuple(letter_inverse(x) for x in reversed(self.letters))
        return Diagram.make(self.graph, self.terminus, inv)

    def power(self, k):
        if k < 0:
            return self.inverse().power(-k)
        out = Diagram.identity(self.graph, self.base)
        for _ in range(k):
            out = out.concat(self)
        return out

    def text(self):
        return word_to_text(self.graph, self.letters)

    def __repr__(self):
        word = self.text() or "1"
        return f"Diagram({','.join(self.base)} | {word})"


def raag_image(d):
    """The diagram's letters as signed color tokens (its right-angled image)."""
    return tuple(d.graph.id_for(*key) + ("" if sign > 0 else "'")
                 for key, sign in d.letters)


# -- cyclic reduction and factorization ----------------------------------------

def cyclic_reduce(d):
    """Split a spherical diagram as conjugator * core * conjugator^{-1}.

    Repeatedly strips a letter that can move to the front whose inverse can
    move to the end.  Returns (conjugator, core), both diagrams; the core is
    cyclically reduced and based at the conjugator's terminus.
    """
    if not d.is_spherical:
        raise GraphError("cyclic reduction needs a spherical diagram")
    g = d.graph
    letters = list(d.letters)
    conj = []
    base = d.base
    changed = True
    while changed:
        changed = False
        L = len(letters)
        for p in range(L):
            x = letters[p]
            if not all(commute(letters[k], x) for k in range(p)):
                continue
            xinv = letter_inverse(x)
            for q in range(L - 1, p, -1):
                if letters[q] == xinv and all(
                        commute(letters[k], x) for k in range(q + 1, L)):
                    del letters[q]
                    del letters[p]
                    conj.append(x)
                    base = apply_letter(g, base, x)
                    changed = True
                    break
            if changed:
                break
    conjugator = Diagram.make(g, d.base, conj)
    core = Diagram.make(g, conjugator.terminus, letters)
    return conjugator, core


def support_and_particles(d):
    """Support subgraph and participating particles of a spherical diagram.

    The support is the union of the core's letters' edges (after cyclic
    reduction); the particles are the core's base vertices lying on the
    support.
    """
    _, core = cyclic_reduce(d)
    keys = frozenset(l[0] for l in core.letters)
    supp = Subgraph.from_edges(d.graph, keys)
    part = frozenset(v for v in core.base if v in supp.vertices)
    return supp, part


@dataclass(frozen=True)
class FactorSplit:
    """A spherical diagram split into commuting factors with disjoint supports."""
    conjugator: Diagram
    factors: tuple


def split_factors(d):
    """Factor a spherical diagram by connectivity of its core's support.

    Letters whose edges lie in the same connected piece of the support form
    one factor; factors pairwise commute and multiply back to the core.
    """
    conj, core = cyclic_reduce(d)
    keys = sorted({l[0] for l in core.letters})
    parent = {k: k for k in keys}

    def find(k):
        while parent[k] != k:
            parent[k] = parent[parent[k]]
            k = parent[k]
        return k

    for i, k1 in enumerate(keys):
        for k2 in keys[i + 1:]:
            if set(k1) & set(k2):
                r1, r2 = find(k1), find(k2)
                if r1 != r2:
                    parent[max(r1, r2)] = min(r1, r2)
    classes = {}
    for k in keys:
        classes.setdefault(find(k), []).append(k)
    factors = []
    for root in sorted(classes):
        cls = set(classes[root])
        sub = [l for l in core.letters if l[0] in cls]
        factors.append(Diagram.make(d.graph, core.base, sub))
    return FactorSplit(conjugator=conj, factors=tuple(factors))


def has_cyclic_centralizer_witness(d):
    """Sufficient condition for the centralizer of a diagram to be cyclic.

    After cyclic reduction, checks that the support is connected and that
    every particle of the base configuration participates.  One-sided: a
    False answer decides nothing.  The trivial diagram has no
    cyclic-centralizer certificate and raises.
    """
    if not d.is_spherical:
        raise GraphError("centralizer witness needs a spherical diagram")
    if d.is_identity:
        raise GraphError("the trivial diagram admits no centralizer witness")
    supp, part = support_and_particles(d)
    sub = supp.as_graph()
    connected = sub.is_connected()
    full = len(part) == len(d.base)
    return (connected and full), {
        "support_vertices": supp.sorted_vertices(),
        "support_edges": tuple(sorted(supp.edges)),
        "support_connected": connected,
        "participating": tuple(sorted(part)),
        "total_particles": len(d.base),
    }


# -- word templates --------------------------------------------------------------

def star_word(g, hub, a1, a2, a3):
    """The standard junction commutator at a degree-3 corner.

    With unit arms x1, x2, x3 at the hub and edges e_i from x_i toward the
    hub, the word e3 e1' e2 e3' e1 e2' is legal from any configuration
    containing {x2, x3} and leaving the hub and x1 free, and is nontrivial.
    """
    e1 = oriented_letter(g, a1, hub)
    e2 = oriented_letter(g, a2, hub)
    e3 = oriented_letter(g, a3, hub)
    return (e3, letter_inverse(e1), e2, letter_inverse(e3),
            e1, letter_inverse(e2))


def cycle_rotation_word(g, cycle, k):
    """Rotate k particles sitting on the first k vertices once around a cycle.

    `cycle` lists the cycle's vertices in order; the word advances the block
    of particles one step at a time until each is back where it started.
    Length k * len(cycle).
    """
    m = len(cycle)
    if not (1 <= k < m):
        raise GraphError("need 1 <= k < cycle length")
    letters = []
    # particles occupy cycle[pos], ..., cycle[pos+k-1]; advance the front
    # particle first, then the rest close up
    for shift in range(m):
        front = (shift + k - 1) % m
        letters.append(oriented_letter(g, cycle[front], cycle[(front + 1) % m]))
        for back in range(k - 2, -1, -1):
            a = (shift + back) % m
            letters.append(oriented_letter(g, cycle[a], cycle[(a + 1) % m]))
    return tuple(letters)
