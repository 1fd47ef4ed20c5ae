"""Exact arithmetic in the coefficient ring R = Z[X, Y, Z^{+-1}] / (X^2 = Y^2 = 1).

Elements are stored as finitely-supported maps from monomials (xe, ye, ze) to
nonzero integer coefficients, with xe, ye in {0, 1} (the relations X^2 = Y^2 = 1
are applied eagerly) and ze any integer.  The even specialization sends
X, Y, Z -> 1; the odd one sends X, Z -> 1 and Y -> -1.

The bilinear pairing ``lam`` on Z^2-degrees,

    lam((a,b), (c,d)) = X^(ac) Y^(bd) Z^(ad - bc),

is the commutation unit for exchanging the heights of two cobordism handles
with disjoint support.
"""

from __future__ import annotations


class RingElem:
    """An element of R in canonical monomial-expansion form.

    Immutable.  ``terms`` maps (xe, ye, ze) -> nonzero int with xe, ye in {0,1}.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for (xe, ye, ze), c in terms.items():
                if c == 0:
                    continue
                key = (xe & 1, ye & 1, ze)
                c = clean.get(key, 0) + c
                if c:
                    clean[key] = c
                else:
                    del clean[key]
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("RingElem is immutable")

    # -- constructors -------------------------------------------------

    @staticmethod
    def from_int(n):
        return RingElem({(0, 0, 0): n} if n else {})

    @staticmethod
    def monomial(xe, ye, ze, coeff=1):
        return RingElem({(xe, ye, ze): coeff})

    # -- ring structure -----------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        terms = dict(self.terms)
        for k, c in other.terms.items():
            s = terms.get(k, 0) + c
            if s:
                terms[k] = s
            else:
                del terms[k]
        return RingElem(terms)

    __radd__ = __add__

    def __neg__(self):
        return RingElem({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        terms = {}
        for (x1, y1, z1), c1 in self.terms.items():
            for (x2, y2, z2), c2 in other.terms.items():
                key = ((x1 + x2) & 1, (y1 + y2) & 1, z1 + z2)
                s = terms.get(key, 0) + c1 * c2
                if s:
                    terms[key] = s
                else:
                    del terms[key]
        return RingElem(terms)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = ONE
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = RingElem.from_int(other)
        return isinstance(other, RingElem) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    # -- units ----------------------------------------------------------

    def is_unit(self):
        """True iff a single term with coefficient +-1 (the trivial units)."""
        if len(self.terms) != 1:
            return False
        return abs(next(iter(self.terms.values()))) == 1

    def inverse(self):
        if not self.is_unit():
            raise ValueError("not a unit of R: %r" % (self,))
        ((xe, ye, ze), c), = self.terms.items()
        return RingElem({(xe, ye, -ze): c})

    # -- specialization ---------------------------------------------------

    def specialize(self, x, y, z):
        """Ring homomorphism R -> Z determined by X -> x, Y -> y, Z -> z (all +-1)."""
        assert x in (1, -1) and y in (1, -1) and z in (1, -1)
        total = 0
        for (xe, ye, ze), c in self.terms.items():
            total += c * (x ** xe) * (y ** ye) * (z ** (ze & 1))
        return total

    # -- serialization ----------------------------------------------------

    def to_terms(self):
        """JSON form: list of [xe, ye, ze, coeff] quadruples in term order."""
        return [[xe, ye, ze, c] for (xe, ye, ze), c in sorted(self.terms.items())]

    @staticmethod
    def from_terms(quads):
        return RingElem({(xe, ye, ze): c for xe, ye, ze, c in quads})

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for (xe, ye, ze), c in sorted(self.terms.items()):
            mono = ("X" if xe else "") + ("Y" if ye else "")
            if ze:
                mono += "Z" if ze == 1 else "Z^%d" % ze
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append("%d%s" % (c, mono))
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out


def _coerce(v):
    if isinstance(v, RingElem):
        return v
    if isinstance(v, int):
        return RingElem.from_int(v)
    raise TypeError("cannot coerce %r into R" % (v,))


ZERO = RingElem({})
ONE = RingElem.from_int(1)
X = RingElem.monomial(1, 0, 0)
Y = RingElem.monomial(0, 1, 0)
Z = RingElem.monomial(0, 0, 1)
Zinv = RingElem.monomial(0, 0, -1)

SPECIALIZATIONS = {
    "even": (1, 1, 1),
    "odd": (1, -1, 1),
}


def lam(d1, d2):
    """The pairing lam((a,b),(c,d)) = X^(ac) Y^(bd) Z^(ad-bc), bilinear, lam(x,y)^-1 = lam(y,x)."""
    a, b = d1
    c, d = d2
    return RingElem.monomial((a * c) & 1, (b * d) & 1, a * d - b * c)


def is_unit(elem):
    return elem.is_unit()


def unit_ratio(num, den):
    """The unit u with num = u * den, when den is a unit monomial; None otherwise.

    Absence (None) covers den = 0, den not a unit, and num/den not a unit.
    """
    if not isinstance(den, RingElem) or not den.is_unit():
        return None
    u = num * den.inverse()
    return u if u.is_unit() else None


def specialize(elem, x, y, z):
    return elem.specialize(x, y, z)


def add_degrees(d1, d2):
    return (d1[0] + d2[0], d1[1] + d2[1])
