"""Chronological cobordisms as ordered handle sequences, and their
linearization: the TQFT that sends a configuration of k circles to V^(x)k
with V = R<v+, v-> and evaluates handles by the rules

    merge:  v+ v+ -> v+, v+ v- -> v-, v- v+ -> XZ v-, v- v- -> 0
    split:  v+ -> v- (x) v+  +  YZ v+ (x) v-,  v- -> v- (x) v-
    birth:  1 -> v+
    death:  v+ -> 0, v- -> 1

with reversed-framing handles multiplied by X (merge), Y (split), Y (death).
Tensor factors are kept in an explicit order; exchanging the heights of two
handles with disjoint support costs the pairing lam of their Z^2-degrees,
which is realized here by charging lam(deg(handle), deg(prefix)) when a
handle is applied past earlier factors, and by the twisted flip
tau(x (x) y) = lam(deg x, deg y) y (x) x for reordering circles.

Degrees: deg(v+) = (1,0), deg(v-) = (0,-1); deg(W) = (#births - #merges,
#deaths - #splits).

The two ladybug evaluations fix the type-Y theory; the type-X variant would
swap the split/merge framing units (LADYBUG_TYPE below), and is not exercised.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .planar import circles_of, closed_diagram_arcs, point_key
from .ring import ONE, RingElem, ZERO, lam, unit_ratio

LADYBUG_TYPE = "Y"

DEG_PLUS = (1, 0)
DEG_MINUS = (0, -1)
DEG_MERGE = (-1, 0)
DEG_SPLIT = (0, -1)
DEG_BIRTH = (1, 0)
DEG_DEATH = (0, 1)

X_UNIT = RingElem.monomial(1, 0, 0)
Y_UNIT = RingElem.monomial(0, 1, 0)
XY_UNIT = RingElem.monomial(1, 1, 0)
YZ_UNIT = RingElem.monomial(0, 1, 1)
XZ_UNIT = RingElem.monomial(1, 0, 1)


def label_deg(label):
    return DEG_PLUS if label == "+" else DEG_MINUS


def _deg_sum(labels):
    a = b = 0
    for v in labels:
        d = label_deg(v)
        a += d[0]
        b += d[1]
    return (a, b)


@dataclass(frozen=True)
class Saddle:
    """Replace two arcs by two new arcs; a merge or a split of circles.

    ``annular`` marks saddles that wrap around the annulus when closing a
    trace; transporting the upward framing around the annulus twists the
    merge direction, so annular merges pick up an extra X (validated by the
    exhaustive looper checks).
    """

    remove: tuple  # two arcs (frozensets)
    add: tuple  # two arcs
    flipped: bool = False
    annular: bool = False
    kind: str = "saddle"


@dataclass(frozen=True)
class Birth:
    circle_id: tuple
    position: int | None = None
    kind: str = "birth"


@dataclass(frozen=True)
class Death:
    point: tuple  # any point (or free id) on the dying circle
    flipped: bool = False
    kind: str = "death"


@dataclass(frozen=True)
class Permute:
    """Reorder the configuration to put the circles containing the given
    points first, in the given order (remaining circles keep relative order)."""

    leading_points: tuple
    kind: str = "permute"


@dataclass
class ChronCob:
    """An ordered handle decomposition acting on a closed curve configuration.

    ``arcs``: the source diagram's arc list; ``free``: synthetic ids of free
    circles; ``handles``: the chronology.  ``source_order`` may fix a
    non-canonical initial configuration order (a list of point sets).
    """

    arcs: list
    free: tuple = ()
    handles: list = field(default_factory=list)
    source_order: list | None = None

    def source_circles(self):
        if self.source_order is not None:
            return list(self.source_order)
        return circles_of(self.arcs, self.free)

    def degree(self):
        a = b = 0
        for h, _is_merge in self._classified():
            if h.kind == "birth":
                a += 1
            elif h.kind == "death":
                b += 1
            elif h.kind == "saddle":
                if _is_merge:
                    a -= 1
                else:
                    b -= 1
        return (a, b)

    def counts(self):
        births = deaths = merges = splits = 0
        for h, is_merge in self._classified():
            if h.kind == "birth":
                births += 1
            elif h.kind == "death":
                deaths += 1
            elif h.kind == "saddle":
                if is_merge:
                    merges += 1
                else:
                    splits += 1
        return births, merges, splits, deaths

    def _classified(self):
        """Pairs (handle, is_merge) with merge/split resolved on the fly."""
        arcs = list(self.arcs)
        out = []
        for h in self.handles:
            if h.kind == "saddle":
                comp = circles_of(arcs)
                where = {}
                for idx, c in enumerate(comp):
                    for p in c:
                        where[p] = idx
                p1 = next(iter(h.remove[0]))
                p2 = next(iter(h.remove[1]))
                out.append((h, where[p1] != where[p2]))
                arcs = _apply_surgery(arcs, h)
            elif h.kind == "death" and h.point[0] != "free":
                dead = next(c for c in circles_of(arcs) if h.point in c)
                arcs = [a for a in arcs if not (a & dead)]
                out.append((h, None))
            else:
                out.append((h, None))
        return out

    def target_circles(self):
        arcs = list(self.arcs)
        free = list(self.free)
        for h in self.handles:
            if h.kind == "saddle":
                arcs = _apply_surgery(arcs, h)
            elif h.kind == "birth":
                free.append(h.circle_id)
            elif h.kind == "death":
                if h.point[0] == "free":
                    free.remove(h.point)
                else:
                    comp = next(c for c in circles_of(arcs) if h.point in c)
                    arcs = [a for a in arcs if not (a & comp)]
        return circles_of(arcs, free)


def _apply_surgery(arcs, saddle):
    out = list(arcs)
    for arc in saddle.remove:
        out.remove(arc)
    out.extend(saddle.add)
    return out


def _swap_adjacent(state, i):
    """tau at positions (i, i+1): x (x) y -> lam(deg x, deg y) y (x) x."""
    new = {}
    for labels, coeff in state.items():
        moved = labels[:i] + (labels[i + 1], labels[i]) + labels[i + 2 :]
        c = coeff * lam(label_deg(labels[i]), label_deg(labels[i + 1]))
        _accumulate(new, moved, c)
    return new


def _accumulate(state, labels, coeff):
    if not coeff:
        return
    s = state.get(labels, ZERO) + coeff
    if s:
        state[labels] = s
    elif labels in state:
        del state[labels]


def _prefix_cost(handle_deg, labels, upto):
    """Koszul cost of applying a local handle past the factors before it."""
    return lam(handle_deg, _deg_sum(labels[:upto]))


class _Execution:
    """Runs a ChronCob on a linear combination of labelings."""

    def __init__(self, cob):
        self.cob = cob
        self.config = cob.source_circles()
        self.arcs = list(cob.arcs)

    def run(self, state):
        for h in self.cob.handles:
            if h.kind == "saddle":
                state = self._saddle(h, state)
            elif h.kind == "birth":
                state = self._birth(h, state)
            elif h.kind == "death":
                state = self._death(h, state)
            elif h.kind == "permute":
                state = self._permute(h, state)
        state = self._sort_canonical(state)
        return state

    def _find(self, point):
        for idx, c in enumerate(self.config):
            if point in c:
                return idx
        raise ValueError("point %r not in configuration" % (point,))

    def _saddle(self, h, state):
        p1 = next(iter(h.remove[0]))
        p2 = next(iter(h.remove[1]))
        i, j = self._find(p1), self._find(p2)
        new_arcs = _apply_surgery(self.arcs, h)
        if i == j:
            state = self._split(h, state, i, new_arcs)
        else:
            state = self._merge(h, state, min(i, j), max(i, j), new_arcs)
        self.arcs = new_arcs
        return state

    def _merge(self, h, state, i, j, new_arcs):
        # bring position j next to i, then apply the local rule
        for k in range(j, i + 1, -1):
            state = _swap_adjacent(state, k - 1)
        cfg = self.config
        circ_j = cfg.pop(j)
        cfg.insert(i + 1, circ_j)
        merged = cfg[i] | cfg[i + 1]
        out = {}
        for labels, coeff in state.items():
            coeff = coeff * _prefix_cost(DEG_MERGE, labels, i)
            a, b = labels[i], labels[i + 1]
            if a == "+" and b == "+":
                val, lab = ONE, "+"
            elif a == "+" and b == "-":
                val, lab = ONE, "-"
            elif a == "-" and b == "+":
                val, lab = XZ_UNIT, "-"
            else:
                continue
            if h.flipped:
                val = val * X_UNIT
            if h.annular:
                val = val * X_UNIT
            _accumulate(out, labels[:i] + (lab,) + labels[i + 2 :], coeff * val)
        cfg[i : i + 2] = [merged]
        return out

    def _split(self, h, state, i, new_arcs):
        old = self.config[i]
        comps = circles_of([a for a in new_arcs if a & old])
        children = [c for c in comps if c & old]
        assert len(children) == 2, "a saddle on one circle must split it in two"
        children.sort(key=lambda c: min(point_key(p) for p in c))
        first, second = children
        out = {}
        for labels, coeff in state.items():
            coeff = coeff * _prefix_cost(DEG_SPLIT, labels, i)
            rest = (labels[:i], labels[i + 1 :])
            flip = Y_UNIT if h.flipped else ONE
            if labels[i] == "+":
                _accumulate(out, rest[0] + ("-", "+") + rest[1], coeff * flip)
                _accumulate(out, rest[0] + ("+", "-") + rest[1], coeff * flip * YZ_UNIT)
            else:
                _accumulate(out, rest[0] + ("-", "-") + rest[1], coeff * flip)
        self.config[i : i + 1] = [first, second]
        return out

    def _birth(self, h, state):
        pos = len(self.config) if h.position is None else h.position
        out = {}
        for labels, coeff in state.items():
            coeff = coeff * _prefix_cost(DEG_BIRTH, labels, pos)
            _accumulate(out, labels[:pos] + ("+",) + labels[pos:], coeff)
        self.config.insert(pos, frozenset((h.circle_id,)))
        return out

    def _death(self, h, state):
        i = self._find(h.point)
        dead = self.config[i]
        out = {}
        for labels, coeff in state.items():
            coeff = coeff * _prefix_cost(DEG_DEATH, labels, i)
            if labels[i] == "-":
                if h.flipped:
                    coeff = coeff * Y_UNIT
                _accumulate(out, labels[:i] + labels[i + 1 :], coeff)
        self.config.pop(i)
        self.arcs = [a for a in self.arcs if not (a & dead)]
        return out

    def _permute(self, h, state):
        target = []
        for p in h.leading_points:
            target.append(self._find(p))
        rest = [k for k in range(len(self.config)) if k not in target]
        desired = target + rest
        # selection sort by adjacent swaps
        order = list(range(len(self.config)))
        for slot in range(len(desired)):
            cur = order.index(desired[slot])
            while cur > slot:
                state = _swap_adjacent(state, cur - 1)
                order[cur - 1], order[cur] = order[cur], order[cur - 1]
                self.config[cur - 1], self.config[cur] = (
                    self.config[cur],
                    self.config[cur - 1],
                )
                cur -= 1
        return state

    def _sort_canonical(self, state):
        keys = [min(point_key(p) for p in c) for c in self.config]
        n = len(keys)
        for end in range(n, 1, -1):
            for k in range(end - 1):
                if keys[k] > keys[k + 1]:
                    state = _swap_adjacent(state, k)
                    keys[k], keys[k + 1] = keys[k + 1], keys[k]
                    self.config[k], self.config[k + 1] = (
                        self.config[k + 1],
                        self.config[k],
                    )
        return state


def tqft_apply(cob, state):
    """Push a linear combination {labels tuple: RingElem} through the cobordism.

    Labels are aligned with ``cob.source_circles()``; the result is aligned
    with the canonically ordered target configuration.
    """
    return _Execution(cob).run(dict(state))


def tqft_matrix(cob):
    """Columns of F(cob): {source labeling: {target labeling: coeff}}."""
    src = cob.source_circles()
    out = {}
    for labels in _all_labelings(len(src)):
        out[labels] = tqft_apply(cob, {labels: ONE})
    return out


def _all_labelings(k):
    if k == 0:
        return [()]
    rest = _all_labelings(k - 1)
    return [lab + (s,) for lab in rest for s in ("+", "-")]


def iota(cob_from, cob_to):
    """The unit u with F(cob_to) = u * F(cob_from).

    u is read off an entry that is a unit monomial and then verified against
    every entry (entries that are sums of monomials are checked by
    multiplication).  Raises ValueError when no unit-monomial entry exists or
    any entry disagrees: the two handle sequences are then not
    chronology-related, which indicates a modeling bug.
    """
    m_from = tqft_matrix(cob_from)
    m_to = tqft_matrix(cob_to)
    entries = []
    for labels, col_from in m_from.items():
        col_to = m_to.get(labels, {})
        if set(col_from) != set(col_to):
            raise ValueError("iota: zero patterns differ at input %r" % (labels,))
        for tgt, val in col_from.items():
            entries.append((labels, tgt, val, col_to[tgt]))
    if not entries:
        raise ValueError("iota: both matrices are zero; ratio undetermined")
    candidates = []
    for labels, tgt, val, val_to in entries:
        u = unit_ratio(val_to, val)
        if u is not None:
            candidates = [u]
            break
    if not candidates:
        # no unit-monomial entry anywhere: the ratio, if it exists, sends
        # each term of the first entry to a term of its counterpart
        _, _, val, val_to = entries[0]
        for (k1, c1) in val.terms.items():
            for (k2, c2) in val_to.terms.items():
                if abs(c1) == abs(c2):
                    u = RingElem.monomial(
                        (k2[0] - k1[0]) & 1, (k2[1] - k1[1]) & 1, k2[2] - k1[2], c2 // c1
                    )
                    if u not in candidates:
                        candidates.append(u)
    for unit in candidates:
        if all(val_to == unit * val for _, _, val, val_to in entries):
            return unit
    raise ValueError("iota: entry ratios admit no common unit (modeling bug)")


def _all_consistent_units(cob_from, cob_to):
    """All units u with F(cob_to) = u * F(cob_from) (possibly several when
    every entry is invariant under multiplication by some unit)."""
    m_from = tqft_matrix(cob_from)
    m_to = tqft_matrix(cob_to)
    entries = []
    for labels, col_from in m_from.items():
        col_to = m_to.get(labels, {})
        if set(col_from) != set(col_to):
            return []
        for tgt, val in col_from.items():
            entries.append((val, col_to[tgt]))
    if not entries:
        return None  # undetermined
    val, val_to = entries[0]
    candidates = []
    for (k1, c1) in val.terms.items():
        for (k2, c2) in val_to.terms.items():
            if abs(c1) == abs(c2):
                u = RingElem.monomial(
                    (k2[0] - k1[0]) & 1, (k2[1] - k1[1]) & 1, k2[2] - k1[2], c2 // c1
                )
                if u not in candidates:
                    candidates.append(u)
    return [u for u in candidates if all(vt == u * v for v, vt in entries)]


def _is_interleaved_pair(arcs, h1, h2):
    """True when both saddles' feet lie on one circle with interleaved
    attachment arcs (the ladybug configuration)."""
    feet = list(h1.remove) + list(h2.remove)
    comps = circles_of(arcs)
    holders = []
    for arc in feet:
        p = next(iter(arc))
        holders.append(next(i for i, c in enumerate(comps) if p in c))
    if len(set(holders)) != 1:
        return False
    circle = comps[holders[0]]
    # walk the circle's arcs in cyclic order
    incident = {}
    circle_arcs = [a for a in arcs if a & circle]
    for k, arc in enumerate(circle_arcs):
        for p in arc:
            incident.setdefault(p, []).append(k)
    start = next(iter(circle))
    prev_arc = incident[start][0]
    order = [prev_arc]
    point = next(q for q in circle_arcs[prev_arc] if q != start)
    cur = point
    while True:
        nxt = next(k for k in incident[cur] if k != order[-1])
        if nxt == incident[start][0]:
            break
        order.append(nxt)
        cur = next(q for q in circle_arcs[nxt] if q != cur)
        if len(order) > len(circle_arcs):
            break
    marks = []
    for k in order:
        if circle_arcs[k] in h1.remove:
            marks.append("A")
        elif circle_arcs[k] in h2.remove:
            marks.append("B")
    pattern = "".join(marks)
    return pattern in ("ABAB", "BABA")


def iota_reorder(arcs, free, handles_from, handles_to, source_order=None):
    """The unit relating two chronologies with the same handle multiset:
    F(handles_to) = u * F(handles_from).

    The reordering is decomposed into adjacent transpositions; each
    transposition's unit is extracted from the two-handle segment evaluated
    on the full intermediate configuration, which determines it even when
    the end-to-end matrices are invariant under extra units.
    """
    seq = list(handles_from)
    target = list(handles_to)
    if sorted(map(repr, seq)) != sorted(map(repr, target)):
        raise ValueError("iota_reorder: handle multisets differ")
    unit = ONE
    for pos in range(len(target)):
        idx = next(
            k for k in range(pos, len(seq)) if repr(seq[k]) == repr(target[pos])
        )
        while idx > pos:
            # swap seq[idx-1], seq[idx]
            mid_arcs = list(arcs)
            for h in seq[: idx - 1]:
                mid_arcs = _apply_surgery(mid_arcs, h)
            before = ChronCob(mid_arcs, free, [seq[idx - 1], seq[idx]])
            after = ChronCob(mid_arcs, free, [seq[idx], seq[idx - 1]])
            us = _all_consistent_units(before, after)
            if not us:
                raise ValueError("iota_reorder: transposition has no unit ratio")
            if len(us) == 1:
                unit = unit * us[0]
            elif set(us) == {ONE, XY_UNIT} and _is_interleaved_pair(
                mid_arcs, seq[idx - 1], seq[idx]
            ):
                # the ladybug: both saddles are chords of one circle with
                # interleaved feet; the matrices cannot see the exchange, and
                # the type-Y convention assigns it the unit XY
                unit = unit * XY_UNIT
            else:
                raise ValueError(
                    "iota_reorder: ambiguous transposition ratio %r" % (us,)
                )
            seq[idx - 1], seq[idx] = seq[idx], seq[idx - 1]
            idx -= 1
    return unit


# -- canonical cobordisms ------------------------------------------------------


def _interface_saddles(lower_id, upper_id, matching):
    """Saddles contracting the cap of ``lower_id`` against the cup of
    ``upper_id`` along ``matching``, ordered right to left, upward framing."""
    out = []
    for i, j in sorted(matching):
        out.append(
            Saddle(
                remove=(
                    frozenset(((lower_id, "T", i), (lower_id, "T", j))),
                    frozenset(((upper_id, "B", i), (upper_id, "B", j))),
                ),
                add=(
                    frozenset(((lower_id, "T", i), (upper_id, "B", i))),
                    frozenset(((lower_id, "T", j), (upper_id, "B", j))),
                ),
            )
        )
    return out


def stacked_arcs(diagrams):
    """Arc lists for closed diagrams [(id, cup, tangle, cap), ...]."""
    arcs = []
    free = []
    for d, cup, tangle, cap in diagrams:
        a, f = closed_diagram_arcs(d, cup, tangle, cap)
        arcs += a
        free += f
    return arcs, tuple(free)


def canonical_cobordism(a, b, c, t, s):
    """The minimal saddle cobordism contracting the middle closure ``b``
    between the closed diagrams (a, t, b-bar) and (b, s, c-bar)."""
    arcs, free = stacked_arcs([(1, a, t, b), (2, b, s, c)])
    return ChronCob(arcs, free, _interface_saddles(1, 2, b))


def s_degree(a, b, c, t, s):
    return canonical_cobordism(a, b, c, t, s).degree()


def annular_contraction(a, t, diagram_id=1):
    """Saddles closing the diagram (a, t, a-bar) into the annular closure of t."""
    out = []
    for i, j in sorted(a):
        out.append(
            Saddle(
                remove=(
                    frozenset(((diagram_id, "T", i), (diagram_id, "T", j))),
                    frozenset(((diagram_id, "B", i), (diagram_id, "B", j))),
                ),
                add=(
                    frozenset(((diagram_id, "T", i), (diagram_id, "B", i))),
                    frozenset(((diagram_id, "T", j), (diagram_id, "B", j))),
                ),
                annular=True,
            )
        )
    return out


def annular_saddles_between(top_id, bottom_id, matching):
    """Saddles contracting the cap of ``top_id`` against the cup of
    ``bottom_id`` around the annulus."""
    out = []
    for i, j in sorted(matching):
        out.append(
            Saddle(
                remove=(
                    frozenset(((top_id, "T", i), (top_id, "T", j))),
                    frozenset(((bottom_id, "B", i), (bottom_id, "B", j))),
                ),
                add=(
                    frozenset(((top_id, "T", i), (bottom_id, "B", i))),
                    frozenset(((top_id, "T", j), (bottom_id, "B", j))),
                ),
                annular=True,
            )
        )
    return out


def annular_closure_degree(a, t):
    """Z^2-degree of the contraction of (a, t, a-bar) onto the closure of t."""
    arcs, free = stacked_arcs([(1, a, t, a)])
    return ChronCob(arcs, free, annular_contraction(a, t)).degree()
