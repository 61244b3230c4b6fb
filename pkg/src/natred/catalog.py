"""Catalog of the explicit torsion/curvature families in dimensions 3-6.

Each builder validates its parameters, constructs the admissible data
(h, T, R) and/or the homogeneous model, and attaches the closed-form
expected values used by the golden tests and the CLI.  Constraint
equations between the parameters are enforced by computing the dependent
parameter, never by trusting the caller.

Registry keys: dim3, d5b1, d5b2, d6b, d2, stiefel, berger, heisenberg,
s3s3, sl2c, rank4.
"""

from dataclasses import dataclass, field

import numpy as np

from .config import DEFAULT_TOLS
from .exterior import Multivector, wedge
from .homogeneous import HomogeneousModel, characteristic_connection
from .nomizu import (CurvatureOperator, LieAlgebraData, NomizuData,
                     transversal_subalgebra)


class ConstraintError(ValueError):
    """A parameter constraint is violated; `equation` names it."""

    def __init__(self, equation, message=None):
        super().__init__(message or "constraint violated: %s" % equation)
        self.equation = equation


@dataclass
class CatalogEntry:
    name: str
    params: dict
    model: HomogeneousModel = None
    nomizu: NomizuData = None
    T: Multivector = None           # torsion in the orthonormal m frame
    R: CurvatureOperator = None
    transversal: LieAlgebraData = None
    expected: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)

    def to_json_dict(self):
        d = {"name": self.name,
             "params": {k: _jsonable(v) for k, v in self.params.items()},
             "expected": {k: _jsonable(v) for k, v in self.expected.items()},
             "notes": list(self.notes)}
        if self.model is not None:
            d["model"] = self.model.to_json_dict()
        if self.nomizu is not None:
            d["nomizu"] = self.nomizu.to_json_dict()
        if self.T is not None:
            d["T"] = self.T.to_json_dict()
        if self.R is not None:
            d["R"] = {"basis": "lex-eij",
                      "matrix": [[float(x) for x in row]
                                 for row in self.R.matrix]}
        if self.transversal is not None:
            d["transversal"] = self.transversal.to_json_dict()
        return d


def _jsonable(v):
    if isinstance(v, Multivector):
        return v.to_json_dict()
    if isinstance(v, np.ndarray):
        return v.tolist()
    if isinstance(v, (np.floating, np.integer)):
        return float(v)
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return v


def _mv(dim, terms, tols=DEFAULT_TOLS):
    return Multivector(dim, dict(terms), tols)


def _E(n, i, j):
    """Endomorphism of e_ij: e_i -> e_j, e_j -> -e_i (1-based)."""
    A = np.zeros((n, n))
    A[j - 1, i - 1] = 1.0
    A[i - 1, j - 1] = -1.0
    return A


def _zeros_lam(n):
    return [np.zeros((n, n)) for _ in range(n)]


def _model_from_nomizu(nd):
    """Homogeneous model with the canonical connection (Lambda = 0);
    its torsion and curvature reproduce the admissible data."""
    algebra = nd.build_lie_algebra()
    p, n = len(nd.h), nd.dim_V
    return HomogeneousModel(algebra, list(range(p)), list(range(p, p + n)),
                            metric=np.eye(n), lam=_zeros_lam(n), tols=nd.tols)


def _branch3(kappa, eps=1e-9):
    """Name of the 3-dim algebra [x,y]=z, [z,x]=kappa*y, [z,y]=-kappa*x."""
    if kappa > eps:
        return "su(2)"
    if kappa < -eps:
        return "sl(2,R)"
    return "heis3"


# -- matrix Lie algebra helpers --------------------------------------------

def _embed_tuple(x):
    """Flatten a tuple of complex matrices into one real vector."""
    parts = []
    for m in x:
        m = np.asarray(m)
        parts.append(np.real(m).reshape(-1))
        parts.append(np.imag(m).reshape(-1))
    return np.concatenate(parts)


def _tuple_bracket(x, y):
    return tuple(a @ b - b @ a for a, b in zip(x, y))


def _structure_from_elements(labels, elems, tols=DEFAULT_TOLS):
    """Structure constants of a basis of matrix tuples, via least squares
    in a faithful linear embedding."""
    vecs = [_embed_tuple(x) for x in elems]
    M = np.stack(vecs, axis=1)
    n = len(elems)
    c = np.zeros((n, n, n))
    scale = max(1.0, float(np.max(np.abs(M))))
    for i in range(n):
        for j in range(i + 1, n):
            b = _embed_tuple(_tuple_bracket(elems[i], elems[j]))
            sol, *_ = np.linalg.lstsq(M, b, rcond=None)
            res = float(np.max(np.abs(M @ sol - b), initial=0.0))
            if res > 1e4 * tols.eps_rank * scale:
                raise ValueError("elements do not close into a Lie algebra "
                                 "(residual %.3g)" % res)
            c[i, j] = sol
            c[j, i] = -sol
    return LieAlgebraData(labels, c, tols)


# su(2) generators used by the product-group families
_Y1 = np.array([[1j, 0], [0, -1j]])
_Y3 = np.array([[0, -1], [1, 0]], dtype=complex)
_Y5 = np.array([[0, 1j], [1j, 0]])
_Y_ODD = [_Y1, _Y3, _Y5]


# -- dimension 3 -----------------------------------------------------------

def dim3_model(lam=1.0, alpha=1.0, tols=DEFAULT_TOLS):
    """T = lam*e123, R = alpha*(e12 x e12) on R^3 with h = span(e12)."""
    lam, alpha = float(lam), float(alpha)
    h = [_mv(3, {(1, 2): 1.0}, tols)]
    T = _mv(3, {(1, 2, 3): lam}, tols)
    R = CurvatureOperator.from_products(3, [(alpha, h[0], h[0])], tols)
    nd = NomizuData(3, h, T, R, tols)
    model = _model_from_nomizu(nd)
    # transversal group algebra: e1, e2 and -alpha*Omega - lam*e3
    alg = model.algebra
    g1 = transversal_subalgebra(alg, [
        _unitvec(4, 1), _unitvec(4, 2),
        np.array([-alpha, 0.0, 0.0, -lam]),
    ], tols)
    kappa = lam ** 2 - alpha
    entry = CatalogEntry(
        name="dim3", params={"lambda": lam, "alpha": alpha},
        model=model, nomizu=nd, T=T, R=R, transversal=g1,
        expected={
            "transversal_algebra": _branch3(kappa),
            "kappa": kappa,
            "ricci": np.diag([-alpha, -alpha, 0.0]),
        })
    return entry


def _unitvec(n, i):
    v = np.zeros(n)
    v[i] = 1.0
    return v


# -- dimension 5, case B.1 -------------------------------------------------

def dim5_B1_model(rho=1.0, lam=2.0, a=0.5, c=0.5, tols=DEFAULT_TOLS):
    """T = -(rho*e125 + lam*e345) with distinct nonzero coefficients;
    the mixed curvature coefficient b is forced to 2*lam*rho."""
    rho, lam, a, c = float(rho), float(lam), float(a), float(c)
    if abs(rho * lam) <= 1e-12:
        raise ConstraintError("rho*lambda != 0")
    if abs(rho - lam) <= 1e-12:
        raise ConstraintError("rho != lambda")
    b = 2.0 * lam * rho
    w1 = _mv(5, {(1, 2): 1.0}, tols)
    w2 = _mv(5, {(3, 4): 1.0}, tols)
    T = _mv(5, {(1, 2, 5): -rho, (3, 4, 5): -lam}, tols)
    R = CurvatureOperator.from_products(
        5, [(a, w1, w1), (b, w1, w2), (c, w2, w2)], tols)
    nd = NomizuData(5, [w1, w2], T, R, tols)
    model = _model_from_nomizu(nd)
    alg = model.algebra
    # transversal algebra spanned by e1..e4 and the two modified rotations
    om1 = np.array([-a, -lam * rho, 0, 0, 0, 0, rho])
    om2 = np.array([-lam * rho, -c, 0, 0, 0, 0, lam])
    vecs = [_unitvec(7, k) for k in (2, 3, 4, 5)]
    if abs(a - rho ** 2) <= 1e-12 and abs(c - lam ** 2) <= 1e-12:
        g1 = transversal_subalgebra(alg, vecs + [om1], tols)
        ideals = ["heis5"]
    else:
        g1 = transversal_subalgebra(alg, vecs + [om1, om2], tols)
        ideals = [_branch3(rho ** 2 - a), _branch3(lam ** 2 - c)]
    entry = CatalogEntry(
        name="d5b1",
        params={"rho": rho, "lambda": lam, "a": a, "b": b, "c": c},
        model=model, nomizu=nd, T=T, R=R, transversal=g1,
        expected={
            "ricci": np.diag([-a, -a, -c, -c, 0.0]),
            "ideals": ideals,
            "ricci_flat": abs(a) <= 1e-12 and abs(c) <= 1e-12,
        },
        notes=["two Heisenberg ideals cannot occur together: that would "
               "force a = rho^2 and c = lambda^2, the 5-dim Heisenberg "
               "branch handled separately"])
    return entry


# -- dimension 5, case B.2 -------------------------------------------------

def dim5_B2_model(rho=1.0, a=0.25, tols=DEFAULT_TOLS):
    """Equal-coefficient case: T = -rho*(e125 + e345), curvature built on
    u(2) with b forced to 3a + rho^2."""
    rho, a = float(rho), float(a)
    if abs(rho) <= 1e-12:
        raise ConstraintError("rho != 0")
    b = 3.0 * a + rho ** 2
    s1 = _mv(5, {(1, 3): 1.0, (2, 4): 1.0}, tols)
    s2 = _mv(5, {(1, 4): 1.0, (2, 3): -1.0}, tols)
    s3 = _mv(5, {(1, 2): 1.0, (3, 4): -1.0}, tols)
    om = _mv(5, {(1, 2): 1.0, (3, 4): 1.0}, tols)
    T = _mv(5, {(1, 2, 5): -rho, (3, 4, 5): -rho}, tols)
    R = CurvatureOperator.from_products(
        5, [(a, s1, s1), (a, s2, s2), (a, s3, s3), (b, om, om)], tols)
    nd = NomizuData(5, [s1, s2, s3, om], T, R, tols)
    model = _model_from_nomizu(nd)
    entry = CatalogEntry(
        name="d5b2", params={"rho": rho, "a": a, "b": b},
        model=model, nomizu=nd, T=T, R=R,
        expected={
            "b_minus_3a": rho ** 2,
        })
    return entry


# -- dimension 6, case B ---------------------------------------------------

def dim6_caseB_model(alpha=1.0, beta=0.5, a=0.5, c=0.25, tols=DEFAULT_TOLS):
    """T = alpha*(e12+e34)^e5 + beta*(e12-e34)^e6 with the curvature on
    the abelian so(2)+so(2); b is forced to a - alpha^2 + beta^2."""
    alpha, beta, a, c = float(alpha), float(beta), float(a), float(c)
    if abs(alpha) <= 1e-12 or abs(beta) <= 1e-12:
        raise ConstraintError("alpha*beta != 0")
    b = a - alpha ** 2 + beta ** 2
    w1 = _mv(6, {(1, 2): alpha, (3, 4): alpha}, tols)
    w2 = _mv(6, {(1, 2): beta, (3, 4): -beta}, tols)
    e5 = _mv(6, {(5,): 1.0}, tols)
    e6 = _mv(6, {(6,): 1.0}, tols)
    T = wedge(w1, e5) + wedge(w2, e6)
    R = CurvatureOperator.from_products(
        6, [(a / alpha ** 2, w1, w1),
            (2.0 * c / (alpha * beta), w1, w2),
            (b / beta ** 2, w2, w2)], tols)
    nd = NomizuData(6, [w1, w2], T, R, tols)
    model = _model_from_nomizu(nd)
    alg = model.algebra
    om1 = np.concatenate([[-(a + c) / alpha, -(b + c) / beta],
                          [0, 0, 0, 0], [-alpha, -beta]])
    om2 = np.concatenate([[-(a - c) / alpha, -(c - b) / beta],
                          [0, 0, 0, 0], [-alpha, beta]])
    vecs = [_unitvec(8, k) for k in (2, 3, 4, 5)]
    g1 = transversal_subalgebra(alg, vecs + [om1, om2], tols)
    kap1 = alpha ** 2 + beta ** 2 - (a + b + 2 * c)
    kap2 = alpha ** 2 + beta ** 2 - (a + b - 2 * c)
    entry = CatalogEntry(
        name="d6b",
        params={"alpha": alpha, "beta": beta, "a": a, "b": b, "c": c},
        model=model, nomizu=nd, T=T, R=R, transversal=g1,
        expected={
            "sigma": _mv(6, {(1, 2, 3, 4): alpha ** 2 - beta ** 2}, tols),
            "ideals": [_branch3(kap1), _branch3(kap2)],
        })
    return entry


# -- dimension 6, case D.2 -------------------------------------------------

def dim6_D2_model(alpha=-1.0, alpha_prime=0.0, beta=1.0, tols=DEFAULT_TOLS):
    """so(3)-invariant torsion T = alpha*e135 + alpha'*e246
    + beta*(e245+e236+e146); the curvature is the projection onto the
    invariant so(3), scaled by beta*(alpha-beta)."""
    al, ap, be = float(alpha), float(alpha_prime), float(beta)
    h1 = _mv(6, {(3, 5): -2.0, (4, 6): -2.0}, tols)
    h3 = _mv(6, {(1, 5): 2.0, (2, 6): 2.0}, tols)
    h5 = _mv(6, {(1, 3): -2.0, (2, 4): -2.0}, tols)
    T = _mv(6, {(1, 3, 5): al, (2, 4, 6): ap,
                (2, 4, 5): be, (2, 3, 6): be, (1, 4, 6): be}, tols)
    f1 = _mv(6, {(3, 5): 1.0, (4, 6): 1.0}, tols)
    f3 = _mv(6, {(1, 5): 1.0, (2, 6): 1.0}, tols)
    f5 = _mv(6, {(1, 3): 1.0, (2, 4): 1.0}, tols)
    k = be * (al - be)
    R = CurvatureOperator.from_products(
        6, [(k, f1, f1), (k, f3, f3), (k, f5, f5)], tols)
    nd = NomizuData(6, [h1, h3, h5], T, R, tols)
    model = _model_from_nomizu(nd)
    alg = model.algebra
    half = (be - al) / 2.0
    om = [np.zeros(9) for _ in range(3)]
    for p, ei in enumerate((3, 5, 7)):     # ambient slots of e1, e3, e5
        om[p][p] = half
        om[p][ei] = 1.0
    g1 = transversal_subalgebra(
        alg, [om[0], om[1], om[2],
              _unitvec(9, 4), _unitvec(9, 6), _unitvec(9, 8)], tols)
    disc = 4.0 * be * (al - 2.0 * be) - ap ** 2
    if abs(al - 2.0 * be) <= 1e-12:
        name = ("nilpotent(0,0,0,12,13,23)" if abs(ap) <= 1e-12
                else "R^3+su(2)")
    elif abs(disc) <= 1e-9:
        name = "R^3x|su(2)"
    elif disc < 0:
        name = "su(2)+su(2)"
    else:
        name = "sl(2,C)"
    entry = CatalogEntry(
        name="d2",
        params={"alpha": al, "alpha_prime": ap, "beta": be},
        model=model, nomizu=nd, T=T, R=R, transversal=g1,
        expected={
            "sigma": _mv(6, {(1, 2, 5, 6): be * (be - al),
                             (1, 2, 3, 4): be * (be - al),
                             (3, 4, 5, 6): be * (be - al)}, tols),
            "ricci": -2.0 * k * np.eye(6),
            "group": name,
            "killing_det": -64.0 * (al - 2 * be) ** 6 * disc ** 3,
            "nearly_kaehler": abs(ap) <= 1e-12 and abs(al + be) <= 1e-12,
            "pure_w3": abs(ap) <= 1e-12 and abs(al - 3 * be) <= 1e-12,
            "riemann_einstein": abs(ap) <= 1e-12
                                and abs(abs(al) - abs(be)) <= 1e-12,
        })
    return entry


# -- Stiefel-type 5-manifolds ----------------------------------------------

def stiefel_model(r=1.0, a=4.0 / 3.0, b=4.0 / 3.0, tols=DEFAULT_TOLS):
    """Homogeneous metrics on a quotient of SO(3)xSO(3), with the mixing
    parameter r and two scale parameters a, b."""
    r, a, b = float(r), float(a), float(b)
    if a <= 0 or b <= 0:
        raise ConstraintError("a > 0, b > 0")
    w = r ** 2 + 1.0
    sw = np.sqrt(w)
    E12 = np.zeros((3, 3)); E12[1, 0], E12[0, 1] = 1.0, -1.0
    E13 = np.zeros((3, 3)); E13[2, 0], E13[0, 2] = 1.0, -1.0
    E23 = np.zeros((3, 3)); E23[2, 1], E23[1, 2] = 1.0, -1.0
    Z = np.zeros((3, 3))
    elems = [
        (E12, r * E12),                      # h
        (np.sqrt(a) * E13, Z),               # u1
        (np.sqrt(a) * E23, Z),               # u2
        (Z, np.sqrt(b) * E13),               # v1
        (Z, np.sqrt(b) * E23),               # v2
        (-r * E12 / sw, E12 / sw),           # xi
    ]
    alg = _structure_from_elements(
        ["h", "u1", "u2", "v1", "v2", "xi"], elems, tols)
    model = HomogeneousModel(alg, [0], [1, 2, 3, 4, 5],
                             metric=np.eye(5), tols=tols)
    lam_t = r * a / sw
    rho_t = -b / sw
    T = _mv(5, {(1, 2, 5): lam_t, (3, 4, 5): rho_t}, tols)
    model.lam = characteristic_connection(model, T)
    w12 = _mv(5, {(1, 2): 1.0}, tols)
    w34 = _mv(5, {(3, 4): 1.0}, tols)
    R = CurvatureOperator.from_products(
        5, [((a * (a - 1) * r ** 2 - a) / w, w12, w12),
            ((b * (b - 1) - b * r ** 2) / w, w34, w34),
            (-2.0 * a * b * r / w, w12, w34)], tols)
    ein1 = a - b * (2.0 - 3.0 * b / (2.0 * w))
    ein2 = r ** 2 * b * (2.0 - 3.0 * b / (2.0 * w)) ** 2 - (2.0 * w - 2.0 * b)
    entry = CatalogEntry(
        name="stiefel", params={"r": r, "a": a, "b": b},
        model=model, T=T, R=R,
        expected={
            "ricci_g": np.diag([a - a ** 2 * r ** 2 / (2 * w),
                                a - a ** 2 * r ** 2 / (2 * w),
                                b - b ** 2 / (2 * w),
                                b - b ** 2 / (2 * w),
                                (a ** 2 * r ** 2 + b ** 2) / (2 * w)]),
            "lambda_param": lam_t,
            "rho_param": rho_t,
            "einstein_system": (ein1, ein2),
            "einstein": abs(ein1) <= 1e-9 and abs(ein2) <= 1e-9,
            "lambda_xi": (r * (a - 1.0) / sw) * _E(5, 1, 2)
                         + ((1.0 - b) / sw) * _E(5, 3, 4),
        },
        notes=["r rational picks out the compact quotients; irrational r "
               "still defines the local geometry (advisory only)",
               "the naturally reductive structure literally uses the "
               "two-dimensional isotropy; this model keeps the "
               "one-dimensional description with its connection map"])
    return entry


# -- Berger-type 5-sphere --------------------------------------------------

def berger_model(gamma=0.5, tols=DEFAULT_TOLS):
    """Squashed metrics on the 5-sphere as a quotient of SU(3), scaled by
    gamma > 0 in the fibre direction."""
    gamma = float(gamma)
    if gamma <= 0:
        raise ConstraintError("gamma > 0")

    def blk(Y):
        M = np.zeros((3, 3), dtype=complex)
        M[1:, 1:] = Y
        return M

    def mvec(v):
        M = np.zeros((3, 3), dtype=complex)
        M[0, 1:] = -np.conj(v)
        M[1:, 0] = v
        return M

    eta = np.diag([-2j, 1j, 1j]) / np.sqrt(3.0)
    elems = [
        (blk(_Y1),), (blk(_Y3),), (blk(_Y5),),
        (mvec(np.array([1, 0], dtype=complex)),),
        (mvec(np.array([1j, 0])),),
        (mvec(np.array([0, 1], dtype=complex)),),
        (mvec(np.array([0, 1j])),),
        (-np.sqrt(gamma) * eta,),
    ]
    alg = _structure_from_elements(
        ["h1", "h2", "h3", "e1", "e2", "e3", "e4", "e5"], elems, tols)
    model = HomogeneousModel(alg, [0, 1, 2], [3, 4, 5, 6, 7],
                             metric=np.eye(5), tols=tols)
    rho = np.sqrt(3.0 / gamma)
    T = _mv(5, {(1, 2, 5): rho, (3, 4, 5): rho}, tols)
    model.lam = characteristic_connection(model, T)
    om = _mv(5, {(1, 2): 1.0, (3, 4): 1.0}, tols)
    s1 = _mv(5, {(1, 3): 1.0, (2, 4): 1.0}, tols)
    s2 = _mv(5, {(1, 4): 1.0, (2, 3): -1.0}, tols)
    s3 = _mv(5, {(1, 2): 1.0, (3, 4): -1.0}, tols)
    b = 3.0 / gamma - 3.0
    R = CurvatureOperator.from_products(
        5, [(b, om, om), (-1.0, s1, s1), (-1.0, s2, s2), (-1.0, s3, s3)],
        tols)
    entry = CatalogEntry(
        name="berger", params={"gamma": gamma},
        model=model, T=T, R=R,
        expected={
            "a": -1.0, "b": b, "rho_sq": 3.0 / gamma,
            "ricci_flat": abs(gamma - 0.5) <= 1e-12,
            "riemann_einstein": abs(gamma - 0.75) <= 1e-12,
        },
        notes=["the doubled plus sign in the published torsion display is "
               "read as a single wedge term",
               "the fibre generator is scaled to unit length for the "
               "squashed metric before brackets are extracted"])
    return entry


# -- Heisenberg groups -----------------------------------------------------

def heisenberg_model(lambdas=(2.0, 2.0), tols=DEFAULT_TOLS):
    """Left-invariant structures on the Heisenberg group of dimension
    2n+1 with [u_i, v_i] = lambdas[i] * xi."""
    lambdas = [float(x) for x in lambdas]
    n = len(lambdas)
    if n == 0:
        raise ConstraintError("len(lambdas) >= 1")
    dim = 2 * n + 1
    c = np.zeros((dim, dim, dim))
    for i, li in enumerate(lambdas):
        c[2 * i, 2 * i + 1, dim - 1] = li
        c[2 * i + 1, 2 * i, dim - 1] = -li
    labels = []
    for i in range(n):
        labels += ["u%d" % (i + 1), "v%d" % (i + 1)]
    labels.append("xi")
    alg = LieAlgebraData(labels, c, tols)
    model = HomogeneousModel(alg, [], list(range(dim)),
                             metric=np.eye(dim), tols=tols)
    T = _mv(dim, {(2 * i + 1, 2 * i + 2, dim): -li
                  for i, li in enumerate(lambdas)}, tols)
    model.lam = characteristic_connection(model, T)
    d_eta = _mv(dim, {(2 * i + 1, 2 * i + 2): -li
                      for i, li in enumerate(lambdas)}, tols)
    R = CurvatureOperator.from_products(dim, [(1.0, d_eta, d_eta)], tols)
    lmax, lmin = max(lambdas), min(lambdas)
    equal = lmax - lmin <= 1e-9 * max(1.0, abs(lmax))
    entry = CatalogEntry(
        name="heisenberg", params={"lambdas": lambdas},
        model=model, T=T, R=R,
        expected={
            "alpha_sasaki": equal and abs(lmax) > 1e-12,
            "sasaki": equal and abs(lmax - 2.0) <= 1e-9,
            "sigma_generator": equal,
        },
        notes=["curvature is the square of the contact differential: the "
               "sum over eigenvalue pairs counts mixed terms twice, which "
               "the Bianchi identity forces"])
    return entry


# -- S^3 x S^3 -------------------------------------------------------------

def s3s3_coefficients(a, b, c, d, lam):
    """The nine closed-form bracket coefficients of the two-parameter
    frame on the product of two 3-spheres."""
    Delta = (a - 1) * (d - 1) - (b - 1) * (c - 1)
    f = 2.0 / Delta
    return {
        "Delta": Delta,
        "mu": -f * ((a ** 2 - 1) * (d - 1) - (b ** 2 - 1) * (c - 1)),
        "nu": -f * (b - 1) * (a - 1) * (b - a),
        "gamma": -f * (a * (d - b ** 2) + a ** 2 * (b - d)
                       + (b ** 2 - b) * c),
        "delta": -f * (c * (a * (d - 1) - b * d + 1) + (b - 1) * d),
        "sigma": f * ((a - 1) * (1 - b * d) + (a * c - 1) * (b - 1)),
        "tau": f * (a * c * (d - b) + c * b * (1 - d) + a * d * (b - 1)),
        "xi": -f * (c - 1) * (d - 1) * (c - d),
        "eta": -f * ((d ** 2 - 1) * (a - 1) - (c ** 2 - 1) * (b - 1)),
        "theta": -f * (d ** 2 * (c - a) + c ** 2 * (b - d)
                       + (d * a - c * b)),
    }


def s3s3_model(a=2.0, c=1.5, d=3.0, lam=1.0, b=1.0, tols=DEFAULT_TOLS):
    """Naturally reductive structures on the product of two 3-spheres,
    presented on three su(2) factors with diagonal isotropy."""
    a, b, c, d, lam = float(a), float(b), float(c), float(d), float(lam)
    if abs(lam) <= 1e-12:
        raise ConstraintError("lambda != 0")
    Delta = (a - 1) * (d - 1) - (b - 1) * (c - 1)
    if abs(Delta) <= 1e-12:
        raise ConstraintError("Delta != 0",
                              "(a-1)(d-1) - (b-1)(c-1) must not vanish")
    elems = [(Y, Y, Y) for Y in _Y_ODD]
    for Y in _Y_ODD:
        elems.append((Y, a * Y, b * Y))
        elems.append((lam * Y, lam * c * Y, lam * d * Y))
    alg = _structure_from_elements(
        ["h1", "h3", "h5", "e1", "e2", "e3", "e4", "e5", "e6"], elems, tols)
    co = s3s3_coefficients(a, b, c, d, lam)
    model = HomogeneousModel(alg, [0, 1, 2], [3, 4, 5, 6, 7, 8],
                             metric=np.eye(6), tols=tols)
    nl = co["nu"] / lam
    lx = lam ** 2 * co["xi"]
    T = _mv(6, {(1, 3, 5): -2 * lx + 2 * co["sigma"] - co["mu"],
                (2, 4, 6): -2 * nl + lam * (2 * co["delta"] - co["eta"]),
                (1, 4, 6): -lx, (2, 3, 6): -lx, (2, 4, 5): -lx,
                (1, 3, 6): -nl, (1, 4, 5): -nl, (2, 3, 5): -nl}, tols)
    model.lam = characteristic_connection(model, T)
    Sigma = (nl ** 2 + lx ** 2 - lx * (2 * co["sigma"] - co["mu"])
             - co["nu"] * (2 * co["delta"] - co["eta"]))
    f1 = _mv(6, {(3, 5): 1.0, (4, 6): 1.0}, tols)
    f3 = _mv(6, {(1, 5): 1.0, (2, 6): 1.0}, tols)
    f5 = _mv(6, {(1, 3): 1.0, (2, 4): 1.0}, tols)
    R = CurvatureOperator.from_products(
        6, [(Sigma, f1, f1), (Sigma, f3, f3), (Sigma, f5, f5)], tols)
    nk = (abs(b - 1.0) <= 1e-12 and abs(2 * c - d - 1) <= 1e-9
          and abs(lam - 2 * abs(a - 1) / (np.sqrt(3) * abs(d - 1))) <= 1e-9)
    ein = (abs(b - 1.0) <= 1e-12 and abs(2 * c - d - 1) <= 1e-9
           and abs(lam - 2 * abs(a - 1) / abs(d - 1)) <= 1e-9)
    entry = CatalogEntry(
        name="s3s3",
        params={"a": a, "b": b, "c": c, "d": d, "lambda": lam},
        model=model, T=T, R=R,
        expected={
            "Sigma": Sigma,
            "sigma": _mv(6, {(1, 2, 3, 4): -Sigma, (1, 2, 5, 6): -Sigma,
                             (3, 4, 5, 6): -Sigma}, tols),
            "flat": abs(Sigma) <= 1e-9,
            "nearly_kaehler": nk,
            "riemann_einstein": ein,
            "coefficients": co,
        },
        notes=["the repeated middle term in the published curvature sum is "
               "read as the third rotation generator",
               "pure type W3 does not occur in this family",
               "the connection map is recomputed from the torsion; the "
               "published display uses the opposite sign on the middle "
               "rotation generator relative to this frame"])
    return entry


# -- SL(2, C) --------------------------------------------------------------

def sl2c_model(alpha=0.0, lam=1.0, tols=DEFAULT_TOLS):
    """Left-invariant structures on the complex special linear group as a
    real 6-manifold, with isotropy a diagonal su(2)."""
    alpha, lam = float(alpha), float(lam)
    if lam <= 0:
        raise ConstraintError("lambda > 0")
    if abs(alpha - 1.0) <= 1e-12:
        raise ConstraintError("alpha != 1")
    Z = np.zeros((2, 2), dtype=complex)
    elems = [(Y, Y) for Y in _Y_ODD]
    for Y in _Y_ODD:
        elems.append((lam * alpha * Y, lam * Y))
        elems.append((1j * Y, Z))
    alg = _structure_from_elements(
        ["h1", "h3", "h5", "x1", "x2", "x3", "x4", "x5", "x6"], elems, tols)
    u = lam * (1.0 - alpha)
    model = HomogeneousModel(alg, [0, 1, 2], [3, 4, 5, 6, 7, 8],
                             metric=np.eye(6), tols=tols)
    T = _mv(6, {(1, 3, 5): 2 * u + 4.0 / u,
                (1, 4, 6): 2.0 / u, (2, 3, 6): 2.0 / u,
                (2, 4, 5): 2.0 / u}, tols)
    model.lam = characteristic_connection(model, T)
    k = 4.0 * (1.0 + 1.0 / u ** 2)
    g1 = _mv(6, {(1, 3): 1.0, (2, 4): 1.0}, tols)
    g2 = _mv(6, {(1, 5): 1.0, (2, 6): 1.0}, tols)
    g3 = _mv(6, {(3, 5): 1.0, (4, 6): 1.0}, tols)
    R = CurvatureOperator.from_products(
        6, [(k, g1, g1), (k, g2, g2), (k, g3, g3)], tols)
    nij = 2.0 * (u - 1.0 / u)
    entry = CatalogEntry(
        name="sl2c", params={"alpha": alpha, "lambda": lam},
        model=model, T=T, R=R,
        expected={
            "nijenhuis": _mv(6, {(1, 3, 5): nij, (1, 4, 6): -nij,
                                 (2, 3, 6): -nij, (2, 4, 5): -nij}, tols),
            "pure_w3": abs(abs(u) - 1.0) <= 1e-9,
            "lambda_coef": lam * alpha - 1.0 / u,
        })
    return entry


# -- the rank-4 dual example -----------------------------------------------

_RANK4_DEFAULTS = {"a": 1.0, "b": 1.0, "c": 1.0, "d": 1.0, "f": -1.0,
                   "h": 1.0, "s": 0.5, "t": 1.0, "u": 1.0, "v": -1.0,
                   "w": 1.0, "x": -2.0}


def rank4_example_form(tols=DEFAULT_TOLS, **params):
    """12-parameter family of 3-forms whose sigma dual has rank 4 exactly
    when cd - bf + ah + uv - tw + sx = 0 (with generic parameters)."""
    p = dict(_RANK4_DEFAULTS)
    for k, v in params.items():
        if k not in p:
            raise ConstraintError("unknown parameter %r" % k)
        p[k] = float(v)
    T = _mv(6, {
        (1, 2, 5): p["a"], (1, 3, 5): p["b"], (1, 4, 5): p["c"],
        (2, 3, 5): p["d"], (2, 4, 5): p["f"], (3, 4, 5): p["h"],
        (1, 2, 6): p["s"], (1, 3, 6): p["t"], (1, 4, 6): p["u"],
        (2, 3, 6): p["v"], (2, 4, 6): p["w"], (3, 4, 6): p["x"],
    }, tols)
    res = (p["c"] * p["d"] - p["b"] * p["f"] + p["a"] * p["h"]
           + p["u"] * p["v"] - p["t"] * p["w"] + p["s"] * p["x"])
    entry = CatalogEntry(
        name="rank4", params=p, T=T,
        expected={
            "kernel_constraint": res,
            "dual_sigma_rank": 4 if abs(res) <= 1e-9 else None,
        },
        notes=["not a model: this family cannot arise from parallel skew "
               "torsion, which is the point of the example"])
    return entry


# -- registry --------------------------------------------------------------

REGISTRY = {
    "dim3": (dim3_model, {"lambda": "lam", "alpha": "alpha"}),
    "d5b1": (dim5_B1_model, {"rho": "rho", "lambda": "lam",
                             "a": "a", "c": "c"}),
    "d5b2": (dim5_B2_model, {"rho": "rho", "a": "a"}),
    "d6b": (dim6_caseB_model, {"alpha": "alpha", "beta": "beta",
                               "a": "a", "c": "c"}),
    "d2": (dim6_D2_model, {"alpha": "alpha", "alpha_prime": "alpha_prime",
                           "beta": "beta"}),
    "stiefel": (stiefel_model, {"r": "r", "a": "a", "b": "b"}),
    "berger": (berger_model, {"gamma": "gamma"}),
    "heisenberg": (heisenberg_model, {"lambdas": "lambdas"}),
    "s3s3": (s3s3_model, {"a": "a", "b": "b", "c": "c", "d": "d",
                          "lambda": "lam"}),
    "sl2c": (sl2c_model, {"alpha": "alpha", "lambda": "lam"}),
    "rank4": (rank4_example_form,
              {k: k for k in sorted(_RANK4_DEFAULTS)}),
}


def build(name, tols=DEFAULT_TOLS, **params):
    """Build a catalog entry by registry key, mapping the public
    parameter names onto the builder signature."""
    if name not in REGISTRY:
        raise KeyError("unknown catalog entry %r" % name)
    fn, pmap = REGISTRY[name]
    kwargs = {}
    for k, v in params.items():
        if k not in pmap:
            raise ConstraintError("unknown parameter %r for %r" % (k, name))
        kwargs[pmap[k]] = v
    return fn(tols=tols, **kwargs)


def names():
    return sorted(REGISTRY)


def defaults(name):
    """Public parameter names -> default values for a registry entry."""
    import inspect
    if name not in REGISTRY:
        raise KeyError("unknown catalog entry %r" % name)
    fn, pmap = REGISTRY[name]
    sig = inspect.signature(fn)
    out = {}
    for public, kwarg in pmap.items():
        if kwarg in sig.parameters:
            d = sig.parameters[kwarg].default
        else:
            d = _RANK4_DEFAULTS[kwarg]
        out[public] = list(d) if isinstance(d, tuple) else d
    return out


def default_entries(tols=DEFAULT_TOLS):
    """One entry per family at its default parameters."""
    return [build(name, tols=tols) for name in names()]
