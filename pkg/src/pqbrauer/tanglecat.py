"""The diagram category engine: tangle words, normal forms, composition.

A tangle word is a sequence of elementary slices stacked bottom to top on a
source object m:

* ``("P", i)`` - positive crossing at columns i, i+1 (the strand entering at
  column i passes over),
* ``("N", i)`` - negative crossing (the strand entering at column i+1 passes
  over),
* ``("U", i)`` - cup creating two new adjacent points at columns i, i+1,
* ``("A", i)`` - cap annihilating the points at columns i, i+1.

Cups and caps are odd; exchanging the heights of two disjoint odd slices
costs a sign.  Every morphism is stored as a linear combination of canonical
basis diagrams, one per connector (a perfect matching on the boundary points
ordered ``1 < 2 < ... < m < top_s < ... < top_1``).  The canonical diagram of
a connector is the reduced totally descending representative drawn in the
triangular shape: bottom caps (ordered by larger endpoint, each reached by
dragging its right leg left over everything in between), then the positive
braid lift of the through-strand permutation, then top cups (ordered by
ord-smaller base first, each dragged right under everything in between).
Whenever two strands cross, the strand with the smaller base point is on
top; this pins every basis diagram up to the odd-height convention above.

``reduce_word`` rewrites an arbitrary word into the basis: non-descending
crossings are resolved by the skein relation, closed loops kill a term,
kinks untwist against a fixed factor table, double crossings cancel, and
redundant turn pairs straighten with the snake signs.  The surviving drawing
is matched against the canonical diagram of its connector, with the sign
given by the parity of the odd-slice height order relative to the canonical
creation order.
"""

from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple

from .coeff import Laurent, ZERO, ONE, Q, QINV, DELTA

Slice = tuple  # (kind, pos), kind in {"P","N","U","A"}, pos 1-indexed


class MalformedWordError(ValueError):
    """The slice sequence does not chain widths correctly."""


class EngineError(RuntimeError):
    """Internal rewriting invariant failed; indicates a bug, not bad input."""


class Connector(NamedTuple):
    """A perfect matching of the m bottom and s top boundary points.

    Points are indexed 1..m+s in the boundary order: bottom points left to
    right, then top points right to left (so the rightmost top point is
    m+1).  Pairs are stored (i, j) with i < j, sorted by first entry.
    """

    m: int
    s: int
    pairs: tuple

    def top_ord(self, x: int) -> int:
        """Boundary index of the top point at physical position x (1 = leftmost)."""
        return self.m + self.s + 1 - x

    def top_phys(self, o: int) -> int:
        return self.m + self.s + 1 - o

    def is_bottom(self, o: int) -> bool:
        return o <= self.m

    def caps(self) -> list:
        return [p for p in self.pairs if p[1] <= self.m]

    def cups(self) -> list:
        return [p for p in self.pairs if p[0] > self.m]

    def throughs(self) -> list:
        return [p for p in self.pairs if p[0] <= self.m < p[1]]

    def crossing_number(self) -> int:
        n = 0
        for a in range(len(self.pairs)):
            for b in range(a + 1, len(self.pairs)):
                if interleave(self.pairs[a], self.pairs[b]):
                    n += 1
        return n

    def cap_count(self) -> int:
        return len(self.caps())

    def to_json(self) -> list:
        return [list(p) for p in self.pairs]


def interleave(p, q) -> bool:
    a, b = p
    c, d = q
    return (a < c < b < d) or (c < a < d < b)


def make_connector(m: int, s: int, pairs) -> Connector:
    norm = tuple(sorted(tuple(sorted(p)) for p in pairs))
    seen = [x for p in norm for x in p]
    if sorted(seen) != list(range(1, m + s + 1)):
        raise ValueError("pairs are not a perfect matching of 1..%d" % (m + s))
    return Connector(m, s, norm)


def identity_connector(m: int) -> Connector:
    return Connector(m, m, tuple((i, 2 * m + 1 - i) for i in range(1, m + 1)))


@lru_cache(maxsize=None)
def all_connectors(m: int, s: int) -> tuple:
    """All (m+s-1)!! connectors, in lexicographic order of their pair tuples."""
    n = m + s
    if n % 2:
        return ()
    out = []

    def rec(unused, pairs):
        if not unused:
            out.append(Connector(m, s, tuple(pairs)))
            return
        first = unused[0]
        for k in range(1, len(unused)):
            rec(unused[1:k] + unused[k + 1:], pairs + [(first, unused[k])])

    rec(tuple(range(1, n + 1)), [])
    out.sort(key=lambda c: c.pairs)
    return tuple(out)


def hom_basis(m: int, s: int) -> tuple:
    """Basis connectors of the morphism space from m to s."""
    return all_connectors(m, s)


# ---------------------------------------------------------------------------
# canonical words

def canonical_arcs(conn: Connector) -> list:
    """Horizontal arcs in canonical creation order: caps first, then cups.

    Caps are created by ascending larger endpoint; cups by ascending base
    point (their ord-smaller endpoint), i.e. rightmost right leg first.
    """
    caps = sorted(conn.caps(), key=lambda p: p[1])
    cups = sorted(conn.cups(), key=lambda p: p[0])
    return caps + cups


@lru_cache(maxsize=None)
def canonical_word(conn: Connector) -> tuple:
    """The slice word of the canonical basis diagram for the connector."""
    m, s = conn.m, conn.s
    word = []

    # phase A: caps, each right leg dragged left over everything in between
    boundary = list(range(1, m + 1))
    for (i, j) in sorted(conn.caps(), key=lambda p: p[1]):
        a, b = boundary.index(i), boundary.index(j)
        for k in range(b, a + 1, -1):
            word.append(("N", k))
            boundary[k - 1], boundary[k] = boundary[k], boundary[k - 1]
        word.append(("A", a + 1))
        del boundary[a:a + 2]

    # phase B: positive braid sorting through strands by top position
    target = {}
    for (i, j) in conn.throughs():
        target[i] = conn.top_phys(j)
    changed = True
    while changed:
        changed = False
        for k in range(len(boundary) - 1):
            if target[boundary[k]] > target[boundary[k + 1]]:
                word.append(("P", k + 1))
                boundary[k], boundary[k + 1] = boundary[k + 1], boundary[k]
                changed = True

    # phase C: cups by ascending base, right leg dragged right underneath
    cols = [target[p] for p in boundary]
    for (o1, o2) in sorted(conn.cups(), key=lambda p: p[0]):
        u, v = sorted((conn.top_phys(o1), conn.top_phys(o2)))
        p = sum(1 for c in cols if c < u)
        word.append(("U", p + 1))
        cols[p:p] = [u, v]
        t = p + 1
        while t + 1 < len(cols) and cols[t + 1] < v:
            word.append(("N", t + 1))
            cols[t], cols[t + 1] = cols[t + 1], cols[t]
            t += 1
    if cols != sorted(cols):
        raise EngineError("canonical cup layer failed to sort columns")
    return tuple(word)


def word_target(m: int, word) -> int:
    """The top object of the word, validating every slice on the way."""
    w = m
    for kind, pos in word:
        if kind in ("P", "N"):
            if not 1 <= pos <= w - 1:
                raise MalformedWordError("crossing at %d on width %d" % (pos, w))
        elif kind == "U":
            if not 1 <= pos <= w + 1:
                raise MalformedWordError("cup at %d on width %d" % (pos, w))
            w += 2
        elif kind == "A":
            if not 1 <= pos <= w - 1:
                raise MalformedWordError("cap at %d on width %d" % (pos, w))
            w -= 2
        else:
            raise MalformedWordError("unknown slice kind %r" % (kind,))
    return w


# ---------------------------------------------------------------------------
# tracing: strands, crossings, turns

class _Event:
    __slots__ = ("kind", "height", "ctype", "ports")

    def __init__(self, kind, height, ctype=None):
        self.kind = kind          # "x", "min", "max"
        self.height = height      # slice index in the word
        self.ctype = ctype        # "P"/"N" for crossings
        self.ports = {}           # port name -> segment id


class Trace:
    """Strand-level reading of a slice word."""

    def __init__(self, m: int, word):
        self.m = m
        self.word = tuple(word)
        self.s = word_target(m, self.word)
        self._simulate()
        self._walk()

    # -- simulation ----------------------------------------------------

    def _simulate(self):
        self.seg_lower = {}
        self.seg_upper = {}
        self.events = []
        nxt = 0

        def new_seg(lower):
            nonlocal nxt
            sid = nxt
            nxt += 1
            self.seg_lower[sid] = lower
            return sid

        boundary = [new_seg(("bot", i)) for i in range(1, self.m + 1)]
        self.boundaries = [list(boundary)]
        for h, (kind, pos) in enumerate(self.word):
            if kind in ("P", "N"):
                ev = _Event("x", h, kind)
                a, b = boundary[pos - 1], boundary[pos]
                self.seg_upper[a] = (ev, "bl")
                self.seg_upper[b] = (ev, "br")
                c, d = new_seg((ev, "tl")), new_seg((ev, "tr"))
                ev.ports.update(bl=a, br=b, tl=c, tr=d)
                boundary[pos - 1], boundary[pos] = c, d
            elif kind == "U":
                ev = _Event("min", h)
                c, d = new_seg((ev, "L")), new_seg((ev, "R"))
                ev.ports.update(L=c, R=d)
                boundary[pos - 1:pos - 1] = [c, d]
            else:
                ev = _Event("max", h)
                a, b = boundary[pos - 1], boundary[pos]
                self.seg_upper[a] = (ev, "L")
                self.seg_upper[b] = (ev, "R")
                ev.ports.update(L=a, R=b)
                del boundary[pos - 1:pos + 1]
            self.events.append(ev)
            self.boundaries.append(list(boundary))
        for x, sid in enumerate(boundary, start=1):
            self.seg_upper[sid] = ("top", x)

    # -- strand walking -------------------------------------------------

    def _other_end(self, seg, coming_from):
        """Continue through the event at the far end of seg.

        Returns (passage, next_seg) where passage is None at a boundary
        endpoint and (event, port_in, port_out) otherwise.
        """
        att = self.seg_upper[seg] if coming_from == "lower" else self.seg_lower[seg]
        if att[0] in ("bot", "top"):
            return att, None, None
        ev, port = att
        if ev.kind == "x":
            mate = {"bl": "tr", "tr": "bl", "br": "tl", "tl": "br"}[port]
        else:
            mate = {"L": "R", "R": "L"}[port]
        return None, (ev, port, mate), ev.ports[mate]

    def _walk(self):
        ends = {}
        for sid, att in self.seg_lower.items():
            if att[0] == "bot":
                ends[("bot", att[1])] = (sid, "lower")
        for sid, att in self.seg_upper.items():
            if att[0] == "top":
                ends[("top", att[1])] = (sid, "upper")

        def ord_index(endpoint):
            kind, v = endpoint
            return v if kind == "bot" else self.m + self.s + 1 - v

        visited = set()
        self.strands = []      # list of dicts
        self.loops = []
        pairs = []

        def traverse(seg, entering_via):
            """Walk from seg (entered at its `entering_via` end) to a boundary point."""
            path = []
            while True:
                visited.add(seg)
                going = "lower" if entering_via == "lower" else "upper"
                # we entered the segment at `entering_via`; we exit at the other end
                exit_end = "upper" if entering_via == "lower" else "lower"
                att, passage, nxt = self._other_end(seg, "lower" if exit_end == "upper" else "upper")
                path.append((seg, exit_end))
                if passage is None:
                    return path, att
                path.append(passage)
                ev, _, mate = passage
                seg = nxt
                entering_via = "lower" if self.seg_lower[seg] == (ev, mate) else "upper"

        for endpoint in sorted(ends, key=ord_index):
            seg, end = ends[endpoint]
            if seg in visited:
                continue
            path, other = traverse(seg, end)
            base, far = endpoint, other
            self.strands.append({
                "base": ord_index(base),
                "ends": (base, other),
                "path": path,
            })
            pairs.append(tuple(sorted((ord_index(base), ord_index(other)))))

        for sid in self.seg_lower:
            if sid not in visited:
                # closed component: walk it once around
                path = []
                seg, entering = sid, "lower"
                start = sid
                while True:
                    visited.add(seg)
                    exit_end = "upper" if entering == "lower" else "lower"
                    _, passage, nxt = self._other_end(seg, "lower" if exit_end == "upper" else "upper")
                    path.append((seg, exit_end))
                    if passage is None:
                        raise EngineError("open end in a closed component")
                    path.append(passage)
                    ev, _, mate = passage
                    seg = nxt
                    entering = "lower" if self.seg_lower[seg] == (ev, mate) else "upper"
                    if seg == start:
                        break
                self.loops.append(path)

        self.connector = None
        if not self.loops:
            self.connector = make_connector(self.m, self.s, pairs)
        self._index_passages()

    def _index_passages(self):
        """Timestamps for crossing passages, turn lists, per-strand event lists."""
        self.crossing_passes = {}   # event -> list of (timestamp, strand_idx, step, port_in)
        self.turns = []             # per strand: list of (step, event, port_in, port_out)
        t = 0
        all_paths = [(k, st["path"]) for k, st in enumerate(self.strands)]
        all_paths += [(len(self.strands) + k, p) for k, p in enumerate(self.loops)]
        self.n_open = len(self.strands)
        self.path_of = dict(all_paths)
        self.strand_events = {}
        for idx, path in all_paths:
            evs = []
            for step, item in enumerate(path):
                if len(item) == 3:
                    ev, pin, pout = item
                    if ev.kind == "x":
                        self.crossing_passes.setdefault(id(ev), []).append(
                            (t, idx, step, pin, ev))
                    evs.append((step, ev, pin, pout))
                    t += 1
            self.strand_events[idx] = evs
            if idx < self.n_open:
                self.turns.append([e for e in evs if e[1].kind != "x"])
        # loops' turn lists
        self.loop_turns = [
            [e for e in self.strand_events[self.n_open + k] if e[1].kind != "x"]
            for k in range(len(self.loops))
        ]

    # -- queries ---------------------------------------------------------

    def bad_crossings(self):
        """Slice heights of crossings not first met as an over-crossing."""
        out = []
        for passes in self.crossing_passes.values():
            passes = sorted(passes)
            ev = passes[0][4]
            over_ports = ("bl", "tr") if ev.ctype == "P" else ("br", "tl")
            if passes[0][3] not in over_ports:
                out.append(ev.height)
        return sorted(out)

    def strand_of_event_passes(self, ev):
        return sorted(self.crossing_passes[id(ev)])


# ---------------------------------------------------------------------------
# kink factor and slide tables
#
# Keys describe the local geometry at a self-crossing whose monogon is clean.
# They were pinned against the matrix evaluation of the category's action on
# V_q^{otimes k} and are re-derived in the test-suite.

# (crossing type, turns inside monogon) -> factor
# one-turn kinks: crossing sits directly on an arc's two legs
KINK1_FACTORS = {
    ("P", "min"): Q,        # crossing above a cup, on its legs
    ("N", "min"): QINV,
    ("P", "max"): -QINV,    # cap directly above a crossing
    ("N", "max"): -Q,
}

# two-turn S-curls, keyed by (ctype, side of the strand w.r.t. the curl):
# "left": the through strand enters at the left column of the crossing
KINK2_FACTORS = {
    ("P", "left"): -Q,
    ("N", "left"): QINV,
    ("P", "right"): Q,
    ("N", "right"): -QINV,
}

# slide of a crossing across an adjacent turn: [turn, crossing] patterns
# ("U", dx, ctype) with the crossing at pos+dx relative to the cup at pos:
# rewrites to (new dx, new ctype); the cup moves to the other side.
CUP_SLIDE = {
    (1, "P"): (-1, "N"),
    (1, "N"): (-1, "P"),
    (-1, "P"): (1, "N"),
    (-1, "N"): (1, "P"),
}
CAP_SLIDE = {
    (1, "P"): (-1, "N"),
    (1, "N"): (-1, "P"),
    (-1, "P"): (1, "N"),
    (-1, "N"): (1, "P"),
}
