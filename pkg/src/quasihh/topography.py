"""Topographies on partitioned loops and the tensor-over-enveloping witness.

A topography on an n-partitioned loop is a basepoint rotation together with a
full binary bracketing of the resulting composable word.  Vertices of the
space T(n) are pairs (rotation, tree); there are n * Catalan(n-1) of them,
the n-th central binomial coefficient.  Edges are single re-bracketings
(alpha moves) and root-block swaps (epsilon moves, which advance the
basepoint past the first block); 2-cells come from the cocycle pentagons,
the alpha-epsilon hexagons, and distant-commutativity squares.

Trees are nested tuples; a leaf is the string "L".  Words are in diagram
order (first morphism first).
"""

from __future__ import annotations

from math import comb

from .ring import ONE

LEAF = "L"


def all_trees(n):
    """All full binary tree shapes with n leaves."""
    if n == 1:
        return [LEAF]
    out = []
    for k in range(1, n):
        for left in all_trees(k):
            for right in all_trees(n - k):
                out.append((left, right))
    return out


def tree_size(t):
    if t == LEAF:
        return 1
    return tree_size(t[0]) + tree_size(t[1])


def _subtree_at(t, path):
    for step in path:
        t = t[step]
    return t


def _replace_at(t, path, new):
    if not path:
        return new
    if path[0] == 0:
        return (_replace_at(t[0], path[1:], new), t[1])
    return (t[0], _replace_at(t[1], path[1:], new))


def _rotations(t, path=(), offset=0):
    """All right-rotations ((A,B),C) -> (A,(B,C)) in t, with leaf offsets.

    Yields (path, (offA, sizeA), (offB, sizeB), (offC, sizeC), rotated_tree).
    """
    if t == LEAF:
        return
    left, right = t
    if left != LEAF:
        a, b = left
        sa, sb, sc = tree_size(a), tree_size(b), tree_size(right)
        yield (
            path,
            (offset, sa),
            (offset + sa, sb),
            (offset + sa + sb, sc),
            (a, (b, right)),
        )
    yield from _rotations(left, path + (0,), offset)
    yield from _rotations(right, path + (1,), offset + tree_size(left))


def enumerate_topographies(n):
    """Vertices of T(n): (rotation, tree) pairs."""
    if not 2 <= n <= 5:
        raise ValueError("supported range is 2 <= n <= 5")
    return [(r, t) for r in range(n) for t in all_trees(n)]


def _alpha_moves(vertex):
    """Directed alpha edges out of a vertex, as (target, ranges) with ranges
    the (offset, size) triples of the rotated subtrees (forward direction)."""
    r, t = vertex
    out = []
    for path, ra, rb, rc, rotated_sub in _rotations(t):
        target = (r, _replace_at(t, path, rotated_sub))
        out.append((target, (ra, rb, rc)))
    return out


def _eps_move(vertex, n):
    """The root swap (B1,B2) -> (B2,B1), advancing the basepoint past B1."""
    r, t = vertex
    b1, b2 = t
    s1 = tree_size(b1)
    return ((r + s1) % n, (b2, b1)), ((0, s1), (s1, n - s1))


def edges(n):
    """Undirected edge list of T(n); each edge once, as a vertex pair."""
    seen = set()
    out = []
    for v in enumerate_topographies(n):
        for w, _ in _alpha_moves(v):
            key = frozenset((v, w))
            if key not in seen:
                seen.add(key)
                out.append((v, w))
        w, _ = _eps_move(v, n)
        key = frozenset((v, w))
        if key not in seen:
            seen.add(key)
            out.append((v, w))
    return out


def faces(n):
    """2-cells of T(n) as closed vertex cycles (last step returns to first)."""
    if n == 2:
        return []
    if n == 3:
        return [_hexagon(3, 0, (1, 1, 1))]
    if n == 4:
        out = []
        # cocycle pentagons: one per rotation
        t0 = ((LEAF, LEAF), (LEAF, LEAF))
        for r in range(4):
            a = (r, (((LEAF, LEAF), LEAF), LEAF))
            b = (r, ((LEAF, (LEAF, LEAF)), LEAF))
            c = (r, (LEAF, ((LEAF, LEAF), LEAF)))
            d = (r, (LEAF, (LEAF, (LEAF, LEAF))))
            e = (r, t0)
            out.append([a, b, c, d, e])
        # distant-commutativity squares: one per rotation
        for r in range(4):
            big = ((LEAF, LEAF), LEAF)
            big2 = (LEAF, (LEAF, LEAF))
            out.append(
                [(r, (LEAF, big)), (r, (LEAF, big2)), ((r + 1) % 4, (big2, LEAF)), ((r + 1) % 4, (big, LEAF))]
            )
        # alpha-epsilon hexagons: one per cyclically adjacent pair
        for i in range(4):
            out.append(_hexagon(4, i, (2, 1, 1)))
        return out
    raise ValueError("faces implemented for n <= 4")


def _hexagon(n, start, block_sizes):
    """The alpha-epsilon hexagon on three blocks starting at leaf ``start``."""
    blocks = []
    pos = start
    for s in block_sizes:
        blocks.append((pos % n, s))
        pos += s

    def block_tree(size):
        t = LEAF
        for _ in range(size - 1):
            t = (t, LEAF)
        return t

    def vertex(rho, shape):
        b = blocks[rho:] + blocks[:rho]
        r = b[0][0]
        t1, t2, t3 = (block_tree(b[i][1]) for i in range(3))
        if shape == 0:  # ((B1 B2) B3)
            return (r, ((t1, t2), t3))
        return (r, (t1, (t2, t3)))  # (B1 (B2 B3))

    cycle = []
    for rho in range(3):
        cycle.append(vertex(rho, 0))
        cycle.append(vertex(rho, 1))
    return cycle


def topography_complex(n):
    """(vertices, edges, faces) of T(n)."""
    v = enumerate_topographies(n)
    return v, edges(n), faces(n)


class LoopEvaluator:
    """Evaluates T(n) edge values for a fixed cyclically composable loop.

    ``morphs`` lists the loop in diagram order; rotation r reads the word
    starting at morphs[r].
    """

    def __init__(self, cat, morphs):
        self.cat = cat
        self.morphs = list(morphs)
        self.n = len(morphs)
        if not cat.is_loop(self.morphs):
            raise ValueError("morphisms do not form a loop")

    def _comp(self, r, offset, size):
        word = [self.morphs[(r + k) % self.n] for k in range(self.n)]
        return self.cat.comp_path(word[offset : offset + size])

    def edge_value(self, v, w, _backward=False):
        """Unit of R attached to traversing the edge v -> w."""
        for target, (ra, rb, rc) in _alpha_moves(v):
            if target == w:
                r = v[0]
                return self.cat.alpha(
                    self._comp(r, *ra), self._comp(r, *rb), self._comp(r, *rc)
                )
        target, (r1, r2) = _eps_move(v, self.n)
        if target == w:
            r = v[0]
            return self.cat.epsilon(self._comp(r, *r1), self._comp(r, *r2))
        if _backward:
            raise ValueError("vertices %r and %r are not adjacent" % (v, w))
        # backward traversal: inverse of the forward value from w
        return self.edge_value(w, v, _backward=True).inverse()

    def path_value(self, vertices):
        out = ONE
        for v, w in zip(vertices, vertices[1:]):
            out = out * self.edge_value(v, w)
        return out

    def face_value(self, cycle):
        return self.path_value(list(cycle) + [cycle[0]])


def theta(cat, m_deg, a_deg, aop_deg, n_deg):
    """The value transporting (m . (a o a')) (x) n onto m (x) ((a o a') . n)
    along the canonical 4-edge path in T(4).

    The four degrees must close into the loop  m, a, n, a'  read cyclically.
    """
    loop = [m_deg, a_deg, n_deg, aop_deg]
    ev = LoopEvaluator(cat, loop)
    return ev.path_value(theta_path())


def theta_path():
    """Canonical path between the two distinguished vertices of T(4).

    Source: rotation at a' with tree (a' (m a)) n; target: rotation at m with
    tree m ((a n) a').  The edge sequence is alpha, eps, alpha, alpha.
    """
    v0 = (3, ((LEAF, (LEAF, LEAF)), LEAF))
    v1 = (3, (LEAF, ((LEAF, LEAF), LEAF)))
    v2 = (0, (((LEAF, LEAF), LEAF), LEAF))
    v3 = (0, ((LEAF, (LEAF, LEAF)), LEAF))
    v4 = (0, (LEAF, ((LEAF, LEAF), LEAF)))
    return [v0, v1, v2, v3, v4]


def all_simple_paths(n, source, target):
    """All simple paths source -> target in the 1-skeleton of T(n)."""
    adjacency = {}
    for v, w in edges(n):
        adjacency.setdefault(v, []).append(w)
        adjacency.setdefault(w, []).append(v)
    paths = []
    stack = [(source, [source])]
    while stack:
        v, path = stack.pop()
        if v == target:
            paths.append(path)
            continue
        for w in adjacency[v]:
            if w not in path:
                stack.append((w, path + [w]))
    return paths


def central_binomial(n):
    return comb(2 * (n - 1), n - 1)
