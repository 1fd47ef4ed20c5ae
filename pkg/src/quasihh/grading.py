"""Grading categories as data: objects, morphisms, composition, and the
coherence witnesses alpha (associator, a 3-cochain valued in units of R) and
epsilon (the 2-loop witness, "looper").

Conventions.  Morphism lists are always written in diagram order: a path
``[f, g, h]`` means f first, then g, then h, and its composite is h . g . f.
``alpha(f, g, h)`` takes the path in diagram order, matching the associator
value on (x y) z -> x (y z) for elements with degrees |x| = f, |y| = g,
|z| = h.  ``epsilon(f, g)`` is defined on 2-loops, f first.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .ring import ONE, RingElem


@dataclass(frozen=True)
class Mor:
    """A morphism with category-instance-specific payload."""

    src: Any
    dst: Any
    data: Any

    def __repr__(self):
        return "Mor(%r->%r, %r)" % (self.src, self.dst, self.data)


class GradingCategory:
    """Behavioral interface; instances are finite and table-backed."""

    def objects(self):
        raise NotImplementedError

    def identity(self, obj):
        raise NotImplementedError

    def compose(self, g, f):
        """g . f for composable f, g (f first)."""
        raise NotImplementedError

    def alpha(self, f1, f2, f3):
        raise NotImplementedError

    def epsilon(self, f, g):
        raise NotImplementedError

    # -- derived helpers ----------------------------------------------

    def comp_path(self, path):
        """Composite of a diagram-order path (nonempty list of morphisms)."""
        out = path[0]
        for f in path[1:]:
            out = self.compose(f, out)
        return out

    def is_composable(self, path):
        return all(path[i].dst == path[i + 1].src for i in range(len(path) - 1))

    def is_loop(self, path):
        return self.is_composable(path) and path[-1].dst == path[0].src

    def left_unitor(self, f):
        """L(Id_X, f) = alpha(Id_X, Id_X, f)^-1 for f: X -> Y (typical unitor)."""
        i = self.identity(f.src)
        return self.alpha(i, i, f).inverse()

    def right_unitor(self, f):
        """R(f, Id_Y) = alpha(f, Id_Y, Id_Y)."""
        i = self.identity(f.dst)
        return self.alpha(f, i, i)

    def zeta(self, f):
        """alpha(Id_X, Id_X, f) * alpha(f, Id_Y, Id_Y) = L^-1 * R."""
        return self.left_unitor(f).inverse() * self.right_unitor(f)


def typical_unitors(cat, f):
    return cat.left_unitor(f), cat.right_unitor(f)


def zeta(cat, f):
    return cat.zeta(f)


def check_cocycle(cat, path4):
    """d(alpha) = 1 on a composable path [f1, f2, f3, f4] (diagram order)."""
    f1, f2, f3, f4 = path4
    if not cat.is_composable(path4):
        raise ValueError("path is not composable")
    value = (
        cat.alpha(f1, f2, f3)
        * cat.alpha(f1, f2, cat.compose(f4, f3)).inverse()
        * cat.alpha(f1, cat.compose(f3, f2), f4)
        * cat.alpha(cat.compose(f2, f1), f3, f4).inverse()
        * cat.alpha(f2, f3, f4)
    )
    return value == ONE


def check_looper(cat, loop3):
    """The alpha-epsilon hexagon on a 3-loop [f, g, h], plus antisymmetry of
    epsilon on the three constituent 2-loops."""
    f, g, h = loop3
    if not cat.is_loop(loop3):
        raise ValueError("path is not a loop")
    hg = cat.compose(h, g)
    fh = cat.compose(f, h)
    gf = cat.compose(g, f)
    hexagon = (
        cat.alpha(f, g, h)
        * cat.epsilon(f, hg)
        * cat.alpha(g, h, f)
        * cat.epsilon(g, fh)
        * cat.alpha(h, f, g)
        * cat.epsilon(h, gf)
    )
    if hexagon != ONE:
        return False
    for a, b in ((f, hg), (g, fh), (h, gf)):
        if cat.epsilon(a, b) * cat.epsilon(b, a) != ONE:
            return False
    return True


class TrivialCategory(GradingCategory):
    """One-object category on a group, alpha = epsilon = 1.

    ``mul`` composes group elements, ``unit`` is the neutral element.  With the
    integers (default) this grades by Z; payloads are the group elements.
    """

    def __init__(self, elements=None, mul=None, unit=0):
        self._elements = elements
        self._mul = mul or (lambda a, b: a + b)
        self._unit = unit

    def objects(self):
        return ("*",)

    def identity(self, obj):
        return Mor("*", "*", self._unit)

    def mor(self, g):
        return Mor("*", "*", g)

    def compose(self, g, f):
        return Mor("*", "*", self._mul(g.data, f.data))

    def alpha(self, f1, f2, f3):
        return ONE

    def epsilon(self, f, g):
        return ONE

    def morphisms(self):
        if self._elements is None:
            raise ValueError("infinite trivial category; no morphism list")
        return [self.mor(g) for g in self._elements]


class OppositeCategory(GradingCategory):
    """Arrows reversed; alpha_op(f3^op, f2^op, f1^op) = alpha(f1, f2, f3)^-1.

    epsilon on 2-loops is inverted alongside, which the looper checks confirm.
    """

    def __init__(self, cat):
        self.base = cat

    def op(self, f):
        if isinstance(f.data, tuple) and len(f.data) == 2 and f.data[0] == "op":
            return f.data[1]
        return Mor(f.dst, f.src, ("op", f))

    def unop(self, f):
        assert f.data[0] == "op"
        return f.data[1]

    def objects(self):
        return self.base.objects()

    def identity(self, obj):
        return self.op(self.base.identity(obj))

    def compose(self, g, f):
        return self.op(self.base.compose(self.unop(f), self.unop(g)))

    def alpha(self, f1, f2, f3):
        return self.base.alpha(self.unop(f3), self.unop(f2), self.unop(f1)).inverse()

    def epsilon(self, f, g):
        return self.base.epsilon(self.unop(f), self.unop(g)).inverse()


class ProductCategory(GradingCategory):
    """(alpha x beta)((f1,g1),(f2,g2),(f3,g3)) = alpha(f1,f2,f3) beta(g1,g2,g3)."""

    def __init__(self, cat1, cat2):
        self.cat1 = cat1
        self.cat2 = cat2

    def pair(self, f, g):
        return Mor((f.src, g.src), (f.dst, g.dst), (f, g))

    def objects(self):
        return [(x, y) for x in self.cat1.objects() for y in self.cat2.objects()]

    def identity(self, obj):
        return self.pair(self.cat1.identity(obj[0]), self.cat2.identity(obj[1]))

    def compose(self, g, f):
        return self.pair(
            self.cat1.compose(g.data[0], f.data[0]),
            self.cat2.compose(g.data[1], f.data[1]),
        )

    def alpha(self, f1, f2, f3):
        return self.cat1.alpha(f1.data[0], f2.data[0], f3.data[0]) * self.cat2.alpha(
            f1.data[1], f2.data[1], f3.data[1]
        )

    def epsilon(self, f, g):
        return self.cat1.epsilon(f.data[0], g.data[0]) * self.cat2.epsilon(
            f.data[1], g.data[1]
        )


def opposite_category(cat):
    if isinstance(cat, OppositeCategory):
        return cat.base
    return OppositeCategory(cat)


def product_category(cat1, cat2):
    return ProductCategory(cat1, cat2)


def trivial_category(elements=None, mul=None, unit=0):
    return TrivialCategory(elements, mul, unit)
