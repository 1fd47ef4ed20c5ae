"""Flat tangles, crossingless matchings, and closed curve diagrams.

A crossingless matching of 2n points is a non-crossing perfect matching of
range(2n).  A flat tangle from 2m bottom points to 2n top points is a planar
perfect matching on the boundary points ('b', i) and ('t', j) of the strip,
plus a count of free circles created by composition.  Closed diagrams (a cup
matching below, a tangle, a cap matching above) live on named points
(diagram_id, 'B'|'T', i); their circles are the connected components of the
arc graph, ordered by minimal point.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


@lru_cache(maxsize=None)
def matchings(n):
    """All non-crossing perfect matchings of range(2n), as sorted pair tuples."""
    if n == 0:
        return ((),)
    out = []
    points = list(range(2 * n))
    for k in range(n):
        j = 2 * k + 1
        inside = matchings_of(points[1:j])
        outside = matchings_of(points[j + 1 :])
        for mi in inside:
            for mo in outside:
                out.append(tuple(sorted(((0, j),) + mi + mo)))
    return tuple(out)


def matchings_of(points):
    """Non-crossing matchings of an ordered even-length point list."""
    if not points:
        return ((),)
    out = []
    first = points[0]
    for k in range(1, len(points), 2):
        pair = (first, points[k])
        inside = matchings_of(points[1:k])
        outside = matchings_of(points[k + 1 :])
        for mi in inside:
            for mo in outside:
                out.append((pair,) + mi + mo)
    return tuple(out)


@dataclass(frozen=True)
class FlatTangle:
    """Planar matching between 2m bottom and 2n top boundary points."""

    m: int
    n: int
    pairs: tuple  # pairs of points ('b', i) / ('t', j), sorted
    free: int = 0

    @staticmethod
    def identity(n):
        return FlatTangle(n, n, tuple((("b", i), ("t", i)) for i in range(2 * n)))

    @staticmethod
    def from_cup(matching, n):
        """The tangle in B_0^n given by a crossingless matching (all arcs at top)."""
        return FlatTangle(0, n, tuple((("t", i), ("t", j)) for i, j in matching))

    def is_planar(self):
        order = [("b", i) for i in range(2 * self.m)] + [
            ("t", j) for j in reversed(range(2 * self.n))
        ]
        pos = {p: k for k, p in enumerate(order)}
        arcs = [tuple(sorted((pos[p], pos[q]))) for p, q in self.pairs]
        for (a1, b1) in arcs:
            for (a2, b2) in arcs:
                if a1 < a2 < b1 < b2:
                    return False
        return True

    def compose(self, other):
        """other . self: stack ``other`` (n -> p) on top of ``self`` (m -> n)."""
        assert self.n == other.m, "boundary mismatch"
        nxt = {}
        for p, q in self.pairs:
            nxt[("lo", p)] = ("lo", q)
            nxt[("lo", q)] = ("lo", p)
        for p, q in other.pairs:
            nxt[("hi", p)] = ("hi", q)
            nxt[("hi", q)] = ("hi", p)
        # interface: top of self meets bottom of other
        link = {}
        for i in range(2 * self.n):
            link[("lo", ("t", i))] = ("hi", ("b", i))
            link[("hi", ("b", i))] = ("lo", ("t", i))

        def external(tagged):
            side, (row, i) = tagged
            if side == "lo" and row == "b":
                return ("b", i)
            if side == "hi" and row == "t":
                return ("t", i)
            return None

        pairs = set()
        starts = [("lo", ("b", i)) for i in range(2 * self.m)] + [
            ("hi", ("t", j)) for j in range(2 * other.n)
        ]
        visited = set()
        for start in starts:
            if start in visited:
                continue
            visited.add(start)
            cur = nxt[start]
            while external(cur) is None:
                visited.add(cur)
                cur = link[cur]
                visited.add(cur)
                cur = nxt[cur]
            visited.add(cur)
            pairs.add(tuple(sorted((external(start), external(cur)))))
        # components that never reach the boundary are free circles
        loops = 0
        for i in range(2 * self.n):
            start = ("lo", ("t", i))
            if start in visited:
                continue
            cur = start
            while cur not in visited:
                visited.add(cur)
                step = link[cur]
                visited.add(step)
                cur = nxt[step]
            loops += 1
        return FlatTangle(
            self.m, other.n, tuple(sorted(pairs)), self.free + other.free + loops
        )


def enumerate_tangles(m, n):
    """All of B_m^n (no free circles)."""
    order = [("b", i) for i in range(2 * m)] + [("t", j) for j in reversed(range(2 * n))]
    out = []
    for match in matchings_of(tuple(order)):
        pairs = tuple(sorted(tuple(sorted(p)) for p in match))
        out.append(FlatTangle(m, n, pairs))
    return out


def reflect_matching(matching):
    """Reflection about the horizontal line: the same pair set, reattached on
    the other side of the strip.  Combinatorially the identity."""
    return matching


# -- closed diagrams ----------------------------------------------------------


def point_key(p):
    """Total order on diagram points (and synthetic free-circle ids)."""
    if p[0] == "free":
        return (1, p)
    d, row, i = p
    return (0, (d, 0 if row == "B" else 1, i))


def closed_diagram_arcs(diagram_id, cup, tangle, cap):
    """Arcs of the closed diagram cup below, tangle, cap above.

    ``cup`` matches the 2m bottom points, ``cap`` the 2n top points.  Returns
    (arcs, free_ids).
    """
    d = diagram_id

    def pt(p):
        row, i = p
        return (d, "B", i) if row == "b" else (d, "T", i)

    arcs = [frozenset((pt(p), pt(q))) for p, q in tangle.pairs]
    arcs += [frozenset(((d, "B", i), (d, "B", j))) for i, j in cup]
    arcs += [frozenset(((d, "T", i), (d, "T", j))) for i, j in cap]
    free = [("free", d, k) for k in range(tangle.free)]
    return arcs, free


def circles_of(arcs, free_ids=()):
    """Connected components, sorted by minimal point; free ids appended sorted."""
    parent = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for arc in arcs:
        for p in arc:
            parent.setdefault(p, p)
        a, b = tuple(arc) if len(arc) == 2 else (next(iter(arc)), next(iter(arc)))
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    comps = {}
    for p in parent:
        comps.setdefault(find(p), set()).add(p)
    circles = sorted(
        (frozenset(c) for c in comps.values()), key=lambda c: min(point_key(p) for p in c)
    )
    circles += [frozenset((fid,)) for fid in sorted(free_ids)]
    return circles
