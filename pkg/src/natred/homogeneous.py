"""Invariant connection calculus on reductive homogeneous models.

A model is a Lie algebra g with a splitting g = h + m, a metric on m,
the isotropy action of h on m, and optionally a connection map
Lambda: m -> so(m).  Torsion, curvature, Ricci tensors and the algebraic
exterior differential of invariant forms are all evaluated at the origin
from structure constants.

The m basis is expected to be orthonormal for the given metric whenever
form-valued outputs (torsion 3-form, curvature operator) are requested;
vector-level quantities work for any positive metric.
"""

from dataclasses import dataclass, field
import itertools

import numpy as np

from .config import DEFAULT_TOLS
from .exterior import Multivector, all_index_tuples, interior
from .skew import act_on_form, endo_to_two_form
from .nomizu import CurvatureOperator, LieAlgebraData


@dataclass
class HomogeneousModel:
    algebra: LieAlgebraData
    h_idx: list
    m_idx: list
    metric: np.ndarray = None
    lam: list = None          # Lambda(X_i) for each m basis vector, or None
    isotropy: list = None     # action of each h basis vector on m
    tols: object = DEFAULT_TOLS

    def __post_init__(self):
        self.n = len(self.m_idx)
        if self.metric is None:
            self.metric = np.eye(self.n)
        self.metric = np.asarray(self.metric, dtype=float)
        if self.isotropy is None:
            self.isotropy = [self._bracket_action(a) for a in self.h_idx]
        self.isotropy = [np.asarray(A, dtype=float) for A in self.isotropy]
        if self.lam is not None:
            self.lam = [np.asarray(L, dtype=float) for L in self.lam]

    # -- bracket projections ----------------------------------------------

    def _full_bracket(self, i, j):
        N = self.algebra.dim
        x = np.zeros(N); x[self.m_idx[i]] = 1.0
        y = np.zeros(N); y[self.m_idx[j]] = 1.0
        return self.algebra.bracket(x, y)

    def bracket_m(self, i, j):
        return self._full_bracket(i, j)[self.m_idx]

    def bracket_h(self, i, j):
        return self._full_bracket(i, j)[self.h_idx]

    def _bracket_action(self, a):
        """ad(h_a) restricted to m, from the structure constants."""
        N = self.algebra.dim
        x = np.zeros(N); x[a] = 1.0
        ad = self.algebra.ad(x)
        return ad[np.ix_(self.m_idx, self.m_idx)]

    def reductive_residual(self):
        """How far [h, m] sticks out of m."""
        N = self.algebra.dim
        rest = [k for k in range(N) if k not in self.m_idx]
        worst = 0.0
        for a in self.h_idx:
            x = np.zeros(N); x[a] = 1.0
            ad = self.algebra.ad(x)
            block = ad[np.ix_([r for r in rest], self.m_idx)]
            worst = max(worst, float(np.max(np.abs(block), initial=0.0)))
        return worst

    def naturally_reductive_residual(self):
        """Max violation of <[X,Y]_m, Z> + <Y, [X,Z]_m> = 0."""
        G = self.metric
        worst = 0.0
        for x in range(self.n):
            for y in range(self.n):
                for z in range(self.n):
                    v = (self.bracket_m(x, y) @ G[:, z]
                         + self.bracket_m(x, z) @ G[:, y])
                    worst = max(worst, abs(float(v)))
        return worst

    # -- connections -------------------------------------------------------

    def levi_civita(self):
        """Lambda^g(X)Y = [X,Y]_m/2 + U(X,Y)/2 with
        g(U(X,Y), Z) = g([Z,X]_m, Y) + g([Z,Y]_m, X)."""
        G = self.metric
        Ginv = np.linalg.inv(G)
        out = []
        for i in range(self.n):
            L = np.zeros((self.n, self.n))
            for j in range(self.n):
                u = np.zeros(self.n)
                for k in range(self.n):
                    u[k] = (self.bracket_m(k, i) @ G @ _unit(self.n, j)
                            + self.bracket_m(k, j) @ G @ _unit(self.n, i))
                L[:, j] = 0.5 * self.bracket_m(i, j) + 0.5 * (Ginv @ u)
            out.append(L)
        return out

    def lam_of(self, v, lam=None):
        lam = self.lam if lam is None else lam
        return sum(v[i] * lam[i] for i in range(self.n))

    def iso_of(self, w):
        if not self.h_idx:
            return np.zeros((self.n, self.n))
        return sum(w[a] * self.isotropy[a] for a in range(len(self.h_idx)))

    # -- torsion and curvature --------------------------------------------

    def torsion_form(self, lam=None):
        """The torsion T(X,Y) = Lambda(X)Y - Lambda(Y)X - [X,Y]_m,
        lowered to a 3-form.  Returns (form, skewness_residual)."""
        lam = self._lam(lam)
        G = self.metric
        tens = np.zeros((self.n,) * 3)
        for i in range(self.n):
            for j in range(self.n):
                v = lam[i][:, j] - lam[j][:, i] - self.bracket_m(i, j)
                tens[i, j] = G @ v
        skew = _skew_residual3(tens)
        terms = {(i + 1, j + 1, k + 1): tens[i, j, k]
                 for i, j, k in itertools.combinations(range(self.n), 3)}
        return Multivector(self.n, terms, self.tols), skew

    def curvature_operator(self, lam=None):
        """R(X,Y) = [Lambda(X), Lambda(Y)] - Lambda([X,Y]_m)
        - iso([X,Y]_h), packed as a symmetric operator on 2-forms.
        Returns (CurvatureOperator, symmetry_residual)."""
        lam = self._lam(lam)
        pairs = all_index_tuples(self.n, 2)
        M = np.zeros((len(pairs), len(pairs)))
        for p, (i, j) in enumerate(pairs):
            K = (lam[i - 1] @ lam[j - 1] - lam[j - 1] @ lam[i - 1]
                 - self.lam_of(self.bracket_m(i - 1, j - 1), lam)
                 - self.iso_of(self.bracket_h(i - 1, j - 1)))
            w = endo_to_two_form(K, self.tols)
            for q, idx in enumerate(pairs):
                M[p, q] = w.terms.get(idx, 0.0)
        R = CurvatureOperator(self.n, 0.5 * (M + M.T), self.tols)
        return R, float(np.max(np.abs(M - M.T)))

    def _lam(self, lam):
        if lam is None:
            lam = self.lam
        if lam is None:
            raise ValueError("model carries no connection map")
        return lam

    def ricci(self, lam=None):
        R, _ = self.curvature_operator(lam)
        return R.ricci()

    def ricci_riemannian(self):
        return self.ricci(self.levi_civita())

    def einstein_check(self, ric=None):
        """Return (is_einstein, factor, residual) for Ric = factor * g."""
        if ric is None:
            ric = self.ricci_riemannian()
        factor = float(np.trace(np.linalg.inv(self.metric) @ ric) / self.n)
        res = float(np.max(np.abs(ric - factor * self.metric)))
        return res <= 1e3 * self.tols.eps_rank * max(1.0, abs(factor)), factor, res

    # -- parallelism -------------------------------------------------------

    def parallel_form_residual(self, a, lam=None):
        """A form is parallel when every Lambda(X) annihilates it and it
        is invariant under the isotropy action."""
        lam = self._lam(lam)
        worst = 0.0
        for L in lam:
            worst = max(worst, act_on_form(L, a).max_abs())
        for A in self.isotropy:
            worst = max(worst, act_on_form(A, a).max_abs())
        return worst

    def parallel_curvature_residual(self, R=None, lam=None):
        """Curvature is parallel when its matrix commutes with the
        induced action on 2-forms of Lambda(X) and of the isotropy."""
        lam = self._lam(lam)
        if R is None:
            R, _ = self.curvature_operator(lam)
        pairs = all_index_tuples(self.n, 2)
        worst = 0.0
        for A in list(lam) + list(self.isotropy):
            L = np.zeros((len(pairs), len(pairs)))
            for q, idx in enumerate(pairs):
                img = act_on_form(A, Multivector(self.n, {idx: 1.0}, self.tols))
                for p, jdx in enumerate(pairs):
                    L[p, q] = img.terms.get(jdx, 0.0)
            worst = max(worst, float(np.max(np.abs(L.T @ R.matrix
                                                   + R.matrix @ L))))
        return worst

    # -- exterior differential --------------------------------------------

    def invariant_d(self, a):
        """Algebraic exterior differential of an invariant form:
        (d a)(X_0..X_k) = sum_{p<q} (-1)^{p+q}
        a([X_p, X_q]_m, ..., no X_p, no X_q)."""
        ks = a.grades()
        if len(ks) != 1:
            if not ks:
                return Multivector(self.n, {}, self.tols)
            raise ValueError("homogeneous form required")
        k = ks[0]
        out = {}
        for J in all_index_tuples(self.n, k + 1):
            val = 0.0
            for p in range(k + 1):
                for q in range(p + 1, k + 1):
                    br = self.bracket_m(J[p] - 1, J[q] - 1)
                    rest = tuple(J[r] for r in range(k + 1) if r not in (p, q))
                    w = interior(br, a)
                    val += ((-1.0) ** (p + q)) * w.coeff(*rest)
            out[J] = val
        return Multivector(self.n, out, self.tols)

    # -- serialization -----------------------------------------------------

    def to_json_dict(self):
        d = {
            "algebra": self.algebra.to_json_dict(),
            "h": [int(i) for i in self.h_idx],
            "m": [int(i) for i in self.m_idx],
            "metric": [[float(x) for x in row] for row in self.metric],
            "isotropy": [[[float(x) for x in row] for row in A]
                         for A in self.isotropy],
        }
        if self.lam is not None:
            d["lambda"] = [[[float(x) for x in row] for row in L]
                           for L in self.lam]
        return d

    @classmethod
    def from_json_dict(cls, d, tols=DEFAULT_TOLS):
        algebra = LieAlgebraData.from_json_dict(d["algebra"], tols)
        lam = d.get("lambda")
        if lam is not None:
            lam = [np.asarray(L, dtype=float) for L in lam]
        iso = d.get("isotropy")
        if iso is not None:
            iso = [np.asarray(A, dtype=float) for A in iso]
        return cls(algebra, list(d["h"]), list(d["m"]),
                   metric=np.asarray(d["metric"], dtype=float),
                   lam=lam, isotropy=iso, tols=tols)


def characteristic_connection(model, T):
    """Connection map of the metric connection whose torsion is the given
    3-form: Lambda(X) = Lambda^g(X) + T(X, ., .)/2."""
    from .nomizu import torsion_map
    n = model.n
    lg = model.levi_civita()
    out = []
    for i in range(n):
        D = np.zeros((n, n))
        for j in range(n):
            D[:, j] = torsion_map(T, i + 1, j + 1)
        out.append(lg[i] + 0.5 * D)
    return out


# -- functional wrappers ---------------------------------------------------

def naturally_reductive_check(model):
    """(is_reductive, is_naturally_reductive, residuals)."""
    r1 = model.reductive_residual()
    r2 = model.naturally_reductive_residual()
    eps = 1e3 * model.tols.eps_rank
    return r1 <= eps, r2 <= eps, {"reductive": r1, "naturally_reductive": r2}


def levi_civita_map(model):
    return model.levi_civita()


def invariant_torsion(model, lam=None):
    return model.torsion_form(lam)


def invariant_curvature(model, lam=None):
    return model.curvature_operator(lam)


def ricci(model, lam=None):
    return model.ricci(lam)


def ricci_riemannian(model):
    return model.ricci_riemannian()


def einstein_check(model, ric=None):
    return model.einstein_check(ric)


def parallelism_check(model, form=None, lam=None):
    """Residuals for parallel torsion/curvature (and an optional extra
    form) under the model connection."""
    T, _ = model.torsion_form(lam)
    R, _ = model.curvature_operator(lam)
    out = {
        "torsion": model.parallel_form_residual(T, lam),
        "curvature": model.parallel_curvature_residual(R, lam),
    }
    if form is not None:
        out["form"] = model.parallel_form_residual(form, lam)
    return out


def invariant_d(model, a):
    return model.invariant_d(a)


def _unit(n, i):
    v = np.zeros(n)
    v[i] = 1.0
    return v


def _skew_residual3(t):
    worst = 0.0
    for perm, sign in (((0, 2, 1), -1), ((1, 0, 2), -1), ((2, 1, 0), -1)):
        worst = max(worst, float(np.max(np.abs(np.transpose(t, perm) - sign * t))))
    return worst
