"""Chain complexes over R and their integer specializations.

A ``ComplexR`` stores, per homological degree, a labeled free R-module basis
together with a grading key per basis element (a trace class, a quantum
degree, ...) and sparse RingElem differentials.  Differentials must preserve
the grading key, so specialization to Z splits the complex into independent
integer blocks whose homology is computed by Smith normal form.
"""

from __future__ import annotations

from .homology import HomologyTable, homology_of_pair
from .ring import RingElem


class ComplexR:
    """Bigraded complex of free R-modules.

    ``step`` is -1 for chain complexes (d: C_n -> C_{n-1}) and +1 for cochain
    complexes.  ``diff[n]`` maps ``(row, col) -> RingElem`` where ``col``
    indexes the basis of degree ``n`` and ``row`` the basis of ``n + step``.
    """

    def __init__(self, step=-1):
        assert step in (-1, 1)
        self.step = step
        self.basis = {}
        self.grading = {}
        self.diff = {}

    def set_group(self, n, labels, gradings=None):
        self.basis[n] = list(labels)
        self.grading[n] = list(gradings) if gradings is not None else [None] * len(labels)

    def set_diff(self, n, entries):
        self.diff[n] = {k: v for k, v in entries.items() if v}

    def dim(self, n):
        return len(self.basis.get(n, []))

    def degrees(self):
        return sorted(self.basis)

    def check_diff_graded(self):
        """Every differential entry must connect equal grading keys."""
        bad = []
        for n, mat in self.diff.items():
            src = self.grading.get(n, [])
            dst = self.grading.get(n + self.step, [])
            for (r, c), v in mat.items():
                if v and src[c] != dst[r]:
                    bad.append((n, r, c, src[c], dst[r]))
        return bad

    def d_square(self, n):
        """Sparse entries of d_{n+step} . d_n (empty dict iff zero)."""
        first = self.diff.get(n, {})
        second = self.diff.get(n + self.step, {})
        # compose: (second . first)[r2, c] = sum_k second[r2, k] * first[k, c]
        second_by_col = {}
        for (r2, k), v2 in second.items():
            second_by_col.setdefault(k, []).append((r2, v2))
        out = {}
        for (k, c), v1 in first.items():
            for r2, v2 in second_by_col.get(k, ()):
                key = (r2, c)
                s = out.get(key, RingElem({})) + v2 * v1
                if s:
                    out[key] = s
                elif key in out:
                    del out[key]
        return out

    def is_complex(self):
        return all(not self.d_square(n) for n in self.degrees())

    def specialize(self, x, y, z):
        cz = ComplexZ(step=self.step)
        for n in self.degrees():
            keys = self.grading[n]
            for i, g in enumerate(keys):
                cz.dims[(n, g)] = cz.dims.get((n, g), 0) + 1
                cz.index.setdefault((n, g), []).append(i)
        for n, mat in self.diff.items():
            src_keys = self.grading.get(n, [])
            dst_keys = self.grading.get(n + self.step, [])
            src_pos = {}
            for g, idxs in ((g, cz.index[(n, g)]) for g in set(src_keys)):
                for local, i in enumerate(idxs):
                    src_pos[i] = local
            dst_pos = {}
            for g in set(dst_keys):
                for local, i in enumerate(cz.index.get((n + self.step, g), [])):
                    dst_pos[i] = local
            for (r, c), v in mat.items():
                val = v.specialize(x, y, z)
                if not val:
                    continue
                g = src_keys[c]
                block = cz.matrix(n, g, self)
                block[dst_pos[r]][src_pos[c]] += val
        return cz


class ComplexZ:
    """Integer specialization, stored blockwise by (degree, grading key)."""

    def __init__(self, step=-1):
        self.step = step
        self.dims = {}
        self.index = {}
        self.mats = {}

    def matrix(self, n, g, parent=None):
        key = (n, g)
        if key not in self.mats:
            rows = self.dims.get((n + self.step, g), 0)
            cols = self.dims.get(key, 0)
            self.mats[key] = [[0] * cols for _ in range(rows)]
        return self.mats[key]

    def d_of(self, n, g):
        key = (n, g)
        if key in self.mats:
            return self.mats[key]
        rows = self.dims.get((n + self.step, g), 0)
        cols = self.dims.get(key, 0)
        return [[0] * cols for _ in range(rows)]

    def is_complex(self):
        from .homology import mat_mul

        for (n, g) in self.dims:
            a = self.d_of(n, g)
            b = self.d_of(n + self.step, g)
            if a and b and any(any(row) for row in mat_mul(b, a)):
                return False
        return True

    def homology(self, degrees=None):
        """Homology per (degree, grading) block.

        ``degrees``: restrict reporting to these homological degrees (so that
        truncated complexes do not report spurious groups at the cut).
        """
        table = HomologyTable()
        for (n, g), dim in sorted(self.dims.items(), key=lambda kv: (kv[0][0], str(kv[0][1]))):
            if degrees is not None and n not in degrees:
                continue
            d_out = self.d_of(n, g)
            d_in = self.d_of(n - self.step, g)
            betti, torsion = homology_of_pair(d_in, d_out, dim)
            table.set(n, g, betti, torsion)
        return table

    def graded_euler_characteristic(self, hom_of=None, q_of=None):
        """Laurent polynomial sum (-1)^h q^j dim as a dict j -> coefficient.

        By default a block key is interpreted as the q-grading and the degree
        as h; pass extractors to override.
        """
        poly = {}
        for (n, g), dim in self.dims.items():
            h = hom_of(n, g) if hom_of else n
            q = q_of(n, g) if q_of else g
            poly[q] = poly.get(q, 0) + (-1) ** h * dim
        return {q: c for q, c in poly.items() if c}
