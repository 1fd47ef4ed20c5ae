"""Graded modules, algebras, and bimodules over R, with axiom checkers,
opposites, the bimodule <-> left enveloping-module correspondence, and
twisted tensor products (including the tensor over the enveloping algebra,
whose identification unit is the topography witness theta).

Elements are finitely-supported dicts {basis label: RingElem}.  Structure
tables are sparse: products and actions on non-composable degrees are zero
and never stored.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .ring import ONE, RingElem, ZERO
from .topography import theta


@dataclass(frozen=True)
class BasisElt:
    label: Any
    degree: Any  # a Mor of the attached category
    homdeg: int = 0


def add_elems(u, v):
    out = dict(u)
    for k, c in v.items():
        s = out.get(k, ZERO) + c
        if s:
            out[k] = s
        elif k in out:
            del out[k]
    return out


def scale_elem(c, u):
    if not c:
        return {}
    return {k: c * v for k, v in u.items()}


class GradedModule:
    def __init__(self, cat, basis):
        self.cat = cat
        self.basis = list(basis)
        self.by_label = {b.label: b for b in self.basis}
        assert len(self.by_label) == len(self.basis), "duplicate basis labels"

    def degree(self, label):
        return self.by_label[label].degree


class GradedAlgebra:
    """A finite free R-module with a sparse multiplication table and one unit
    idempotent per object of the grading category."""

    def __init__(self, cat, module, mu, units):
        self.cat = cat
        self.module = module
        self.mu_table = {k: dict(v) for k, v in mu.items() if v}
        self.units = dict(units)

    @property
    def basis(self):
        return self.module.basis

    def degree(self, label):
        return self.module.degree(label)

    def mu(self, x, y):
        """Bilinear extension of the multiplication table."""
        out = {}
        for lx, cx in x.items():
            for ly, cy in y.items():
                prod = self.mu_table.get((lx, ly))
                if prod:
                    out = add_elems(out, scale_elem(cx * cy, prod))
        return out

    def mu_basis(self, lx, ly):
        return dict(self.mu_table.get((lx, ly), {}))

    def unit_elem(self, obj):
        return {self.units[obj]: ONE}

    def one(self):
        out = {}
        for lab in self.units.values():
            out[lab] = ONE
        return out


class GradedBimodule:
    """A (left_alg, right_alg)-bimodule with sparse action tables."""

    def __init__(self, cat, left_alg, right_alg, module, rho_l, rho_r):
        self.cat = cat
        self.left_alg = left_alg
        self.right_alg = right_alg
        self.module = module
        self.rho_l_table = {k: dict(v) for k, v in rho_l.items() if v}
        self.rho_r_table = {k: dict(v) for k, v in rho_r.items() if v}

    @property
    def basis(self):
        return self.module.basis

    def degree(self, label):
        return self.module.degree(label)

    def rho_l(self, a, m):
        out = {}
        for la, ca in a.items():
            for lm, cm in m.items():
                img = self.rho_l_table.get((la, lm))
                if img:
                    out = add_elems(out, scale_elem(ca * cm, img))
        return out

    def rho_r(self, m, b):
        out = {}
        for lm, cm in m.items():
            for lb, cb in b.items():
                img = self.rho_r_table.get((lm, lb))
                if img:
                    out = add_elems(out, scale_elem(cm * cb, img))
        return out


def regular_bimodule(alg):
    """The algebra as a bimodule over itself, both actions the product."""
    labels = [b.label for b in alg.basis]
    rho_l = {}
    rho_r = {}
    for (lx, ly), prod in alg.mu_table.items():
        rho_l[(lx, ly)] = dict(prod)
        rho_r[(lx, ly)] = dict(prod)
    return GradedBimodule(alg.cat, alg, alg, alg.module, rho_l, rho_r)


# -- axiom checkers ------------------------------------------------------------


def _elem_matches_degree(module, elem, expected):
    return all(module.degree(lab) == expected for lab in elem)


def check_algebra(alg):
    """All violated instances of the grading, quasi-associativity, and unit
    axioms; an empty report means the algebra passes."""
    cat = alg.cat
    report = []
    labels = [b.label for b in alg.basis]
    # grading of products, and vanishing on non-composable degrees
    for lx in labels:
        dx = alg.degree(lx)
        for ly in labels:
            dy = alg.degree(ly)
            prod = alg.mu_basis(lx, ly)
            if dx.dst != dy.src:
                if prod:
                    report.append(("grading", lx, ly, "nonzero on non-composable degrees"))
                continue
            want = cat.compose(dy, dx)
            if prod and not _elem_matches_degree(alg.module, prod, want):
                report.append(("grading", lx, ly, "product not in degree", want))
    # quasi-associativity
    for lx in labels:
        dx = alg.degree(lx)
        for ly in labels:
            dy = alg.degree(ly)
            if dx.dst != dy.src:
                continue
            for lz in labels:
                dz = alg.degree(lz)
                if dy.dst != dz.src:
                    continue
                lhs = alg.mu(alg.mu_basis(lx, ly), {lz: ONE})
                rhs = scale_elem(
                    cat.alpha(dx, dy, dz), alg.mu({lx: ONE}, alg.mu_basis(ly, lz))
                )
                if lhs != rhs:
                    report.append(("assoc", lx, ly, lz, lhs, rhs))
    # units
    for lx in labels:
        dx = alg.degree(lx)
        left = alg.mu(alg.unit_elem(dx.src), {lx: ONE})
        want_l = scale_elem(cat.left_unitor(dx), {lx: ONE})
        if left != want_l:
            report.append(("unit-left", lx, left, want_l))
        right = alg.mu({lx: ONE}, alg.unit_elem(dx.dst))
        want_r = scale_elem(cat.right_unitor(dx), {lx: ONE})
        if right != want_r:
            report.append(("unit-right", lx, right, want_r))
    return report


def plain_associativity_failures(alg):
    """Basis triples where mu(mu(x,y),z) != mu(x,mu(y,z)) on the nose."""
    out = []
    labels = [b.label for b in alg.basis]
    for lx in labels:
        for ly in labels:
            if alg.degree(lx).dst != alg.degree(ly).src:
                continue
            for lz in labels:
                if alg.degree(ly).dst != alg.degree(lz).src:
                    continue
                lhs = alg.mu(alg.mu_basis(lx, ly), {lz: ONE})
                rhs = alg.mu({lx: ONE}, alg.mu_basis(ly, lz))
                if lhs != rhs:
                    out.append((lx, ly, lz))
    return out


def check_bimodule(bim):
    cat = bim.cat
    report = []
    A = bim.left_alg
    B = bim.right_alg
    a_labels = [b.label for b in A.basis]
    b_labels = [b.label for b in B.basis]
    m_labels = [b.label for b in bim.basis]

    def dA(l):
        return A.degree(l)

    def dM(l):
        return bim.degree(l)

    def dB(l):
        return B.degree(l)

    # grading of the actions
    for la in a_labels:
        for lm in m_labels:
            img = bim.rho_l_table.get((la, lm))
            if dA(la).dst != dM(lm).src:
                if img:
                    report.append(("grading-L", la, lm))
                continue
            want = cat.compose(dM(lm), dA(la))
            if img and not _elem_matches_degree(bim.module, img, want):
                report.append(("grading-L", la, lm, want))
    for lm in m_labels:
        for lb in b_labels:
            img = bim.rho_r_table.get((lm, lb))
            if dM(lm).dst != dB(lb).src:
                if img:
                    report.append(("grading-R", lm, lb))
                continue
            want = cat.compose(dB(lb), dM(lm))
            if img and not _elem_matches_degree(bim.module, img, want):
                report.append(("grading-R", lm, lb, want))
    # (B.I)
    for la in a_labels:
        for la2 in a_labels:
            if dA(la).dst != dA(la2).src:
                continue
            for lm in m_labels:
                if dA(la2).dst != dM(lm).src:
                    continue
                lhs = bim.rho_l(A.mu_basis(la, la2), {lm: ONE})
                rhs = scale_elem(
                    cat.alpha(dA(la), dA(la2), dM(lm)),
                    bim.rho_l({la: ONE}, bim.rho_l({la2: ONE}, {lm: ONE})),
                )
                if lhs != rhs:
                    report.append(("B.I", la, la2, lm))
    # (B.II)
    for lm in m_labels:
        for lb in b_labels:
            if dM(lm).dst != dB(lb).src:
                continue
            for lb2 in b_labels:
                if dB(lb).dst != dB(lb2).src:
                    continue
                lhs = bim.rho_r(bim.rho_r({lm: ONE}, {lb: ONE}), {lb2: ONE})
                rhs = scale_elem(
                    cat.alpha(dM(lm), dB(lb), dB(lb2)),
                    bim.rho_r({lm: ONE}, B.mu_basis(lb, lb2)),
                )
                if lhs != rhs:
                    report.append(("B.II", lm, lb, lb2))
    # (B.III)
    for la in a_labels:
        for lm in m_labels:
            if dA(la).dst != dM(lm).src:
                continue
            for lb in b_labels:
                if dM(lm).dst != dB(lb).src:
                    continue
                lhs = bim.rho_r(bim.rho_l({la: ONE}, {lm: ONE}), {lb: ONE})
                rhs = scale_elem(
                    cat.alpha(dA(la), dM(lm), dB(lb)),
                    bim.rho_l({la: ONE}, bim.rho_r({lm: ONE}, {lb: ONE})),
                )
                if lhs != rhs:
                    report.append(("B.III", la, lm, lb))
    # (B.IV)
    for lm in m_labels:
        d = dM(lm)
        left = bim.rho_l(A.unit_elem(d.src), {lm: ONE})
        if left != scale_elem(cat.left_unitor(d), {lm: ONE}):
            report.append(("B.IV-left", lm))
        right = bim.rho_r({lm: ONE}, B.unit_elem(d.dst))
        if right != scale_elem(cat.right_unitor(d), {lm: ONE}):
            report.append(("B.IV-right", lm))
    return report


# -- opposites -----------------------------------------------------------------


def opposite_algebra(alg, opcat):
    """The same module graded by the opposite category, with reversed product."""
    basis = [BasisElt(b.label, opcat.op(b.degree), b.homdeg) for b in alg.basis]
    module = GradedModule(opcat, basis)
    mu = {}
    for (lx, ly), prod in alg.mu_table.items():
        mu[(ly, lx)] = dict(prod)
    return GradedAlgebra(opcat, module, mu, dict(alg.units))


# -- bimodule <-> left enveloping module ----------------------------------------


def delta_unit(cat, da1, da2, dm, db1, db2):
    """The re-association unit for the left action of A (x) B-op."""
    m_a2_a1 = cat.comp_path([da1, da2, dm])
    return (
        cat.alpha(da1, da2, dm)
        * cat.alpha(m_a2_a1, db2, db1).inverse()
        * cat.alpha(da1, cat.compose(dm, da2), db2)
    )


def to_left_env(bim):
    """Action table ((a, b), m) -> rho_r(rho_l(a, m), b) of the left module
    over A (x) B-op."""
    out = {}
    A, B = bim.left_alg, bim.right_alg
    for la in (x.label for x in A.basis):
        for lm in (x.label for x in bim.basis):
            if A.degree(la).dst != bim.degree(lm).src:
                continue
            inner = bim.rho_l({la: ONE}, {lm: ONE})
            for lb in (x.label for x in B.basis):
                if bim.degree(lm).dst != B.degree(lb).src:
                    continue
                img = bim.rho_r(inner, {lb: ONE})
                if img:
                    out[((la, lb), lm)] = img
    return out


def from_left_env(cat, A, B, module, env_action):
    """Recover the bimodule actions from a left enveloping action, assuming
    typical unitors."""
    rho_l = {}
    rho_r = {}
    m_labels = [b.label for b in module.basis]
    for la in (x.label for x in A.basis):
        da = A.degree(la)
        for lm in m_labels:
            dm = module.degree(lm)
            if da.dst != dm.src:
                continue
            one_y = B.units[dm.dst]
            img = env_action.get(((la, one_y), lm))
            if img:
                coeff = cat.right_unitor(cat.compose(dm, da)).inverse()
                rho_l[(la, lm)] = scale_elem(coeff, img)
    for lm in m_labels:
        dm = module.degree(lm)
        one_x = A.units[dm.src]
        for lb in (x.label for x in B.basis):
            if dm.dst != B.degree(lb).src:
                continue
            img = env_action.get(((one_x, lb), lm))
            if img:
                coeff = cat.left_unitor(dm).inverse()
                rho_r[(lm, lb)] = scale_elem(coeff, img)
    return GradedBimodule(cat, A, B, module, rho_l, rho_r)


# -- tensor products -----------------------------------------------------------


@dataclass
class Presentation:
    """A presented module: free generators with degrees, and relation vectors."""

    generators: list  # (label, degree_key)
    relations: list  # dicts {generator label: RingElem}

    def generator_labels(self):
        return [g[0] for g in self.generators]


def tensor_over_algebra(M, B, N):
    """Presentation of M (x)_B N: generators are degree-composable pure
    tensors; relations identify the two B-actions up to the associator."""
    cat = M.cat
    gens = []
    for bm in M.basis:
        for bn in N.basis:
            if bm.degree.dst == bn.degree.src:
                deg = cat.compose(bn.degree, bm.degree)
                gens.append(((bm.label, bn.label), deg))
    gen_set = {g[0] for g in gens}
    relations = []
    for bm in M.basis:
        for bb in B.basis:
            if bm.degree.dst != bb.degree.src:
                continue
            for bn in N.basis:
                if bb.degree.dst != bn.degree.src:
                    continue
                rel = {}
                left = M.rho_r({bm.label: ONE}, {bb.label: ONE})
                for lab, c in left.items():
                    key = (lab, bn.label)
                    assert key in gen_set
                    rel[key] = rel.get(key, ZERO) + c
                coeff = cat.alpha(bm.degree, bb.degree, bn.degree)
                right = N.rho_l({bb.label: ONE}, {bn.label: ONE})
                for lab, c in right.items():
                    key = (bm.label, lab)
                    assert key in gen_set
                    rel[key] = rel.get(key, ZERO) - coeff * c
                rel = {k: v for k, v in rel.items() if v}
                if rel:
                    relations.append(rel)
    return Presentation(gens, relations)


def tensor_over_env(M, A, N, trace_of=None):
    """Presentation of M (x)_{A (x) A-op} N.

    Only pure tensors whose degrees close into a loop contribute; generators
    are graded by the trace class of the loop composite.  The defining
    relation identifies the right enveloping action on M with the left one on
    N up to the path-independent unit theta.
    """
    cat = M.cat
    trace_of = trace_of or (lambda mor: None)
    gens = []
    for bm in M.basis:
        for bn in N.basis:
            if bm.degree.dst == bn.degree.src and bn.degree.dst == bm.degree.src:
                loop = cat.compose(bn.degree, bm.degree)
                gens.append(((bm.label, bn.label), trace_of(loop)))
    gen_set = {g[0] for g in gens}
    relations = []
    for bm in M.basis:
        dm = bm.degree
        for ba in A.basis:
            da = ba.degree
            if dm.dst != da.src:
                continue
            for bap in A.basis:
                dap = bap.degree
                if dap.dst != dm.src:
                    continue
                for bn in N.basis:
                    dn = bn.degree
                    if da.dst != dn.src or dn.dst != dap.src:
                        continue
                    # rho_R^e(m, a (x) a') = rho_l(a', rho_r(m, a))
                    lhs_elem = M.rho_l({bap.label: ONE}, M.rho_r({bm.label: ONE}, {ba.label: ONE}))
                    # rho_L^e(a (x) a', n) = rho_r(rho_l(a, n), a')
                    rhs_elem = N.rho_r(N.rho_l({ba.label: ONE}, {bn.label: ONE}), {bap.label: ONE})
                    if not lhs_elem and not rhs_elem:
                        continue
                    unit = theta(cat, dm, da, dap, dn)
                    rel = {}
                    for lab, c in lhs_elem.items():
                        key = (lab, bn.label)
                        assert key in gen_set
                        rel[key] = rel.get(key, ZERO) + c
                    for lab, c in rhs_elem.items():
                        key = (bm.label, lab)
                        assert key in gen_set
                        rel[key] = rel.get(key, ZERO) - unit * c
                    rel = {k: v for k, v in rel.items() if v}
                    if rel:
                        relations.append(rel)
    return Presentation(gens, relations)


def swap_tensor_env(M, N):
    """The isomorphism M (x)_{A-env} N -> N (x)_{A-env} M on generators:
    (m, n) -> epsilon(|m|, |n|) (n, m)."""
    cat = M.cat
    mapping = {}
    for bm in M.basis:
        for bn in N.basis:
            if bm.degree.dst == bn.degree.src and bn.degree.dst == bm.degree.src:
                mapping[(bm.label, bn.label)] = (
                    (bn.label, bm.label),
                    cat.epsilon(bm.degree, bn.degree),
                )
    return mapping


def map_relation(mapping, rel):
    out = {}
    for key, c in rel.items():
        tgt, unit = mapping[key]
        s = out.get(tgt, ZERO) + unit * c
        if s:
            out[tgt] = s
        elif tgt in out:
            del out[tgt]
    return out
