"""Lie algebras from torsion/curvature pairs (the transvection
construction) and the Bianchi identities that govern them.

A curvature operator is a symmetric matrix over the lexicographic e_ij
basis of Lambda^2; it acts on 2-forms and doubles as the 4-tensor
R(X, Y, Z, V).  Given admissible data (h, T, R) the bracket

    [A + X, B + Y] = ([A, B]_h - R(X, Y)) + (A Y - B X - T(X, Y))

on h + V satisfies the Jacobi identity exactly when both Bianchi
identities hold.
"""

from dataclasses import dataclass, field

import numpy as np

from .config import DEFAULT_TOLS
from .exterior import Multivector, all_index_tuples, interior
from .skew import two_form_to_endo, endo_to_two_form, act_on_form
from .torsion import sigma_T


class CurvatureOperator:
    def __init__(self, dim, matrix, tols=DEFAULT_TOLS):
        self.dim = dim
        self.pairs = all_index_tuples(dim, 2)
        self.matrix = np.asarray(matrix, dtype=float)
        if self.matrix.shape != (len(self.pairs), len(self.pairs)):
            raise ValueError("curvature matrix has wrong shape")
        self.tols = tols

    @classmethod
    def zero(cls, dim, tols=DEFAULT_TOLS):
        m = dim * (dim - 1) // 2
        return cls(dim, np.zeros((m, m)), tols)

    @classmethod
    def from_products(cls, dim, terms, tols=DEFAULT_TOLS):
        """Sum of c * (w (.) eta) terms, with w (.) eta the symmetrized
        product (w (x) eta + eta (x) w)/2 of 2-forms."""
        out = cls.zero(dim, tols)
        for c, w, eta in terms:
            vw = out._vec(w)
            ve = out._vec(eta)
            out.matrix += 0.5 * c * (np.outer(vw, ve) + np.outer(ve, vw))
        return out

    def _vec(self, w):
        v = np.zeros(len(self.pairs))
        for p, idx in enumerate(self.pairs):
            v[p] = w.terms.get(idx, 0.0)
        return v

    def _unvec(self, v):
        return Multivector(self.dim,
                           {idx: v[p] for p, idx in enumerate(self.pairs)},
                           self.tols)

    def apply(self, w):
        """R applied to a 2-form, returning a 2-form."""
        return self._unvec(self.matrix.T @ self._vec(w))

    def apply_vectors(self, X, Y):
        """R(X, Y) = R(X ^ Y) as a 2-form, for coefficient vectors."""
        w = endo_to_two_form(np.outer(np.asarray(Y), np.asarray(X))
                             - np.outer(np.asarray(X), np.asarray(Y)),
                             self.tols)
        return self.apply(w)

    def tensor_entry(self, i, j, k, l):
        """R(e_i, e_j, e_k, e_l), 1-based, with the pair antisymmetries."""
        si = sj = 1
        if i == j or k == l:
            return 0.0
        if i > j:
            i, j, si = j, i, -1
        if k > l:
            k, l, sj = l, k, -1
        pi = self.pairs.index((i, j))
        pj = self.pairs.index((k, l))
        return si * sj * self.matrix[pi, pj]

    def symmetry_residual(self):
        return float(np.max(np.abs(self.matrix - self.matrix.T)))

    def ricci(self):
        """Ric(X, Y) = sum_i R(X, e_i, e_i, Y) as an (n, n) array."""
        n = self.dim
        ric = np.zeros((n, n))
        for x in range(1, n + 1):
            for y in range(1, n + 1):
                s = 0.0
                for i in range(1, n + 1):
                    s += self.tensor_entry(x, i, i, y)
                ric[x - 1, y - 1] = s
        return ric


def bianchi1_residual(T, R):
    """Max residual of the cyclic identity
    S_{XYZ} R(X,Y,Z,V) = sigma_T(X,Y,Z,V) over the frame."""
    n = T.dim
    sig = sigma_T(T)
    worst = 0.0
    for (i, j, k) in all_index_tuples(n, 3):
        for l in range(1, n + 1):
            lhs = (R.tensor_entry(i, j, k, l) + R.tensor_entry(j, k, i, l)
                   + R.tensor_entry(k, i, j, l))
            rhs = sig.coeff(i, j, k, l)
            worst = max(worst, abs(lhs - rhs))
    return worst


def bianchi2_residual(T, R):
    """Max residual of S_{XYZ} R(T(X,Y), Z) = 0 (values are 2-forms)."""
    n = T.dim
    worst = 0.0
    for (i, j, k) in all_index_tuples(n, 3):
        acc = Multivector(n, {}, T.tols)
        for (a, b, c) in ((i, j, k), (j, k, i), (k, i, j)):
            tv = torsion_map(T, a, b)        # T(e_a, e_b) as a vector
            ec = np.zeros(n)
            ec[c - 1] = 1.0
            acc = acc + R.apply_vectors(tv, ec)
        worst = max(worst, acc.max_abs())
    return worst


def torsion_map(T, a, b):
    """T(e_a, e_b) as a coefficient vector (indices 1-based)."""
    return interior(b, interior(a, T)).to_vector()


@dataclass
class LieAlgebraData:
    """A real Lie algebra given by structure constants c[i, j, k]
    ([x_i, x_j] = sum_k c[i,j,k] x_k) with basis labels."""
    labels: list
    c: np.ndarray
    tols: object = DEFAULT_TOLS

    @property
    def dim(self):
        return len(self.labels)

    def bracket(self, x, y):
        return np.einsum("i,j,ijk->k", x, y, self.c)

    def ad(self, x):
        return np.einsum("i,ijk->kj", x, self.c)

    def jacobi_residual(self):
        n = self.dim
        worst = 0.0
        for i in range(n):
            for j in range(i + 1, n):
                bij = self.c[i, j]
                for k in range(j + 1, n):
                    v = (self.bracket(self.c[j, k], _e(n, i))
                         + self.bracket(self.c[k, i], _e(n, j))
                         + self.bracket(bij, _e(n, k)))
                    # [[x_j,x_k], x_i] + [[x_k,x_i], x_j] + [[x_i,x_j], x_k]
                    worst = max(worst, float(np.max(np.abs(v))))
        return worst

    def skew_residual(self):
        return float(np.max(np.abs(self.c + np.swapaxes(self.c, 0, 1))))

    def to_json_dict(self):
        brackets = []
        n = self.dim
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(n):
                    v = self.c[i, j, k]
                    if abs(v) > self.tols.eps_coeff:
                        brackets.append({"i": i, "j": j, "k": k, "c": float(v)})
        return {"labels": list(self.labels), "brackets": brackets}

    @classmethod
    def from_json_dict(cls, d, tols=DEFAULT_TOLS):
        labels = list(d["labels"])
        n = len(labels)
        c = np.zeros((n, n, n))
        for b in d["brackets"]:
            i, j, k, v = int(b["i"]), int(b["j"]), int(b["k"]), float(b["c"])
            c[i, j, k] += v
            c[j, i, k] -= v
        return cls(labels, c, tols)


def _e(n, i):
    v = np.zeros(n)
    v[i] = 1.0
    return v


@dataclass
class NomizuData:
    """Admissible data (h, T, R) on V = R^n: h a list of 2-forms spanning
    a subalgebra of so(n), T an h-invariant 3-form, R a symmetric
    curvature operator with image in the span of h."""
    dim_V: int
    h: list
    T: Multivector
    R: CurvatureOperator
    tols: object = DEFAULT_TOLS

    def __post_init__(self):
        self.h_endos = [two_form_to_endo(w) for w in self.h]
        self._h_vecs = (np.stack([self.R._vec(w) for w in self.h], axis=1)
                        if self.h else np.zeros((len(self.R.pairs), 0)))

    def h_coords(self, w):
        """Coordinates of a 2-form in the h basis, with the residual of
        the projection."""
        v = self.R._vec(w)
        if self._h_vecs.shape[1] == 0:
            return np.zeros(0), float(np.max(np.abs(v), initial=0.0))
        sol, *_ = np.linalg.lstsq(self._h_vecs, v, rcond=None)
        res = float(np.max(np.abs(self._h_vecs @ sol - v), initial=0.0))
        return sol, res

    def validate(self):
        """Residuals of the admissibility conditions."""
        out = {}
        worst = 0.0
        for i, A in enumerate(self.h_endos):
            for B in self.h_endos[i + 1:]:
                br = endo_to_two_form(A @ B - B @ A, self.tols)
                _, res = self.h_coords(br)
                worst = max(worst, res)
        out["h_subalgebra"] = worst
        out["T_invariant"] = max(
            (act_on_form(A, self.T).max_abs() for A in self.h_endos),
            default=0.0)
        worst = 0.0
        for idx in self.R.pairs:
            w = Multivector(self.dim_V, {idx: 1.0}, self.tols)
            _, res = self.h_coords(self.R.apply(w))
            worst = max(worst, res)
        out["R_image_in_h"] = worst
        worst = 0.0
        for A in self.h_endos:
            for idx in self.R.pairs:
                w = Multivector(self.dim_V, {idx: 1.0}, self.tols)
                lhs = self.R.apply(act_on_form(A, w))
                rhs = act_on_form(A, self.R.apply(w))
                worst = max(worst, (lhs - rhs).max_abs())
        out["R_equivariant"] = worst
        out["R_symmetric"] = self.R.symmetry_residual()
        return out

    def build_lie_algebra(self):
        """Structure constants of h + V under the transvection bracket."""
        p, n = len(self.h), self.dim_V
        N = p + n
        c = np.zeros((N, N, N))
        for a, A in enumerate(self.h_endos):
            for b in range(a + 1, p):
                B = self.h_endos[b]
                br = endo_to_two_form(A @ B - B @ A, self.tols)
                coords, _ = self.h_coords(br)
                c[a, b, :p] = coords
                c[b, a, :p] = -coords
            for i in range(n):
                c[a, p + i, p:] = A[:, i]
                c[p + i, a, p:] = -A[:, i]
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                w = Multivector(n, {(i, j): 1.0}, self.tols)
                coords, _ = self.h_coords(self.R.apply(w))
                c[p + i - 1, p + j - 1, :p] = -coords
                c[p + j - 1, p + i - 1, :p] = coords
                tv = torsion_map(self.T, i, j)
                c[p + i - 1, p + j - 1, p:] -= tv
                c[p + j - 1, p + i - 1, p:] += tv
        labels = ["h%d" % (a + 1) for a in range(p)] + \
                 ["e%d" % (i + 1) for i in range(n)]
        return LieAlgebraData(labels, c, self.tols)

    def to_json_dict(self):
        return {
            "dim_V": self.dim_V,
            "h": [w.to_json_dict() for w in self.h],
            "T": self.T.to_json_dict(),
            "R": {"basis": "lex-eij",
                  "matrix": [[float(x) for x in row] for row in self.R.matrix]},
        }

    @classmethod
    def from_json_dict(cls, d, tols=DEFAULT_TOLS):
        n = int(d["dim_V"])
        h = [Multivector.from_json_dict(w, tols) for w in d["h"]]
        T = Multivector.from_json_dict(d["T"], tols)
        if d["R"].get("basis", "lex-eij") != "lex-eij":
            raise ValueError("unsupported curvature basis %r" % d["R"]["basis"])
        R = CurvatureOperator(n, d["R"]["matrix"], tols)
        return cls(n, h, T, R, tols)


def transversal_subalgebra(algebra, vectors, tols=DEFAULT_TOLS):
    """Check that the span of the given vectors is closed under the
    bracket of `algebra` and return the induced LieAlgebraData.

    vectors: list of coefficient arrays in the ambient basis.  Raises
    ValueError when the span is not closed.
    """
    V = np.stack([np.asarray(v, dtype=float) for v in vectors], axis=1)
    k = V.shape[1]
    c = np.zeros((k, k, k))
    worst = 0.0
    for i in range(k):
        for j in range(i + 1, k):
            b = algebra.bracket(V[:, i], V[:, j])
            sol, *_ = np.linalg.lstsq(V, b, rcond=None)
            res = float(np.max(np.abs(V @ sol - b), initial=0.0))
            worst = max(worst, res)
            c[i, j] = sol
            c[j, i] = -sol
    scale = max(1.0, float(np.max(np.abs(algebra.c))))
    if worst > 1e3 * tols.eps_rank * scale:
        raise ValueError("span is not closed under the bracket "
                         "(residual %.3g)" % worst)
    labels = ["v%d" % (i + 1) for i in range(k)]
    return LieAlgebraData(labels, c, tols)
