"""Analysis of 3-forms: the sigma invariant, dimension-by-dimension case
routing, and the induced contact (dim 5) / almost Hermitian (dim 6)
structures.

Case labels:
  D3             any 3-form in dim 3 (a multiple of the volume form)
  D4             any 3-form in dim 4
  D5_A           dim 5 with sigma_T = 0
  D5_B1 / D5_B2  dim 5, sigma_T != 0, distinct / equal skew eigenvalues
                 of *T
  D6_A           dim 6 with sigma_T = 0
  D6_B           rank(*sigma_T) = 2
  D6_C_rank4     rank(*sigma_T) = 4
  D6_D           rank(*sigma_T) = 6
"""

from dataclasses import dataclass, field

import numpy as np

from .config import DEFAULT_TOLS
from .exterior import Multivector, interior, wedge, hodge, inner
from .skew import (two_form_to_endo, endo_to_two_form, skew_normal_form,
                   act_on_form)


def sigma_T(T):
    """sigma_T = (1/2) sum_i (e_i -| T) ^ (e_i -| T)."""
    out = Multivector(T.dim, {})
    for i in range(1, T.dim + 1):
        xi = interior(i, T)
        out = out + wedge(xi, xi)
    return 0.5 * out


def torsion_kernel(T, tols=DEFAULT_TOLS):
    """Orthonormal basis of {X : X -| T = 0}."""
    n = T.dim
    cols = []
    for i in range(1, n + 1):
        w = interior(i, T)
        cols.append(two_form_to_endo(w).reshape(-1))
    M = np.stack(cols, axis=1)
    u, s, vt = np.linalg.svd(M)
    scale = max(1.0, s[0] if len(s) else 1.0)
    return [vt[k] for k in range(n)
            if k >= len(s) or s[k] <= tols.eps_rank * scale]


@dataclass
class ClassificationReport:
    dim: int
    case_label: str
    sigma: Multivector
    sigma_norm: float
    dual_sigma_rank: int        # rank of *sigma_T as a 2-form (dims 5, 6)
    spectrum: list              # skew spectrum used for the routing
    kernel_dim: int
    parameters: dict
    frame: np.ndarray           # adapted frame used for the invariants
    notes: list = field(default_factory=list)

    def to_json_dict(self):
        return {
            "dim": self.dim,
            "case_label": self.case_label,
            "sigma_norm": self.sigma_norm,
            "dual_sigma_rank": self.dual_sigma_rank,
            "spectrum": [float(s) for s in self.spectrum],
            "kernel_dim": self.kernel_dim,
            "parameters": {k: float(v) for k, v in self.parameters.items()},
            "frame": [[float(x) for x in row] for row in self.frame],
            "notes": list(self.notes),
        }


def classify(T, tols=DEFAULT_TOLS):
    """Route a 3-form to its structure case.  All decisions are made
    from frame-independent data (norms, ranks, skew spectra)."""
    n = T.dim
    if not (T.is_homogeneous(3) or T.is_zero()):
        raise ValueError("classify expects a 3-form")
    if not 3 <= n <= 6:
        raise ValueError("classification covers dimensions 3 to 6")
    sig = sigma_T(T)
    sig_norm = sig.norm()
    kernel_dim = len(torsion_kernel(T, tols))
    notes = []
    params = {}
    spectrum = []
    rank = 0
    frame = np.eye(n)

    if n == 3:
        label = "D3"
        params["lambda"] = T.coeff(1, 2, 3)
    elif n == 4:
        label = "D4"
        # sigma_T vanishes identically and *T sits in the kernel of T
        params["kernel_dim"] = kernel_dim
        if not T.is_zero():
            params["torsion_norm"] = T.norm()
    elif n == 5:
        dual = hodge(T)          # a 2-form
        nf = skew_normal_form(dual, tols)
        spectrum = nf.spectrum
        rank_dual_sigma = 0
        if sig_norm > tols.eps_coeff:
            rank_dual_sigma = 1  # *sigma_T is a 1-form here; record rank 1
        if sig_norm <= tols.eps_coeff:
            label = "D5_A"
        else:
            frame = nf.frame
            rho, lam = nf.spectrum[0], nf.spectrum[1]
            params["rho"] = rho
            params["lambda"] = lam
            scale = max(1.0, rho)
            label = "D5_B2" if abs(rho - lam) <= 1e3 * tols.eps_rank * scale \
                else "D5_B1"
        rank = rank_dual_sigma
    else:
        dual = hodge(sig)        # *sigma_T, a 2-form in dim 6
        nf = skew_normal_form(dual, tols)
        rank = nf.rank
        spectrum = nf.spectrum
        frame = nf.frame
        if sig_norm <= tols.eps_coeff or rank == 0:
            label = "D6_A"
        elif rank == 2:
            label = "D6_B"
            params["rho"] = nf.spectrum[0]
        elif rank == 4:
            label = "D6_C_rank4"
            notes.append("rank-4 dual sigma cannot come from parallel "
                         "skew torsion; the label describes the raw "
                         "algebraic type only")
        else:
            label = "D6_D"
            s = nf.spectrum
            if max(s) - min(s) <= 1e3 * tols.eps_rank * max(1.0, max(s)):
                notes.append("equal skew eigenvalues: almost Hermitian "
                             "structure available")
    return ClassificationReport(dim=n, case_label=label, sigma=sig,
                                sigma_norm=sig_norm, dual_sigma_rank=rank,
                                spectrum=list(spectrum),
                                kernel_dim=kernel_dim, parameters=params,
                                frame=frame, notes=notes)


# -- dimension 5: metric almost contact structure --------------------------

@dataclass
class ContactData:
    xi: np.ndarray              # Reeb vector
    eta: Multivector            # dual 1-form
    d_eta: Multivector          # 2-form xi -| T
    F: Multivector              # fundamental 2-form
    phi: np.ndarray             # structure endomorphism
    rho: float
    lam: float
    quasi_sasaki: bool
    alpha_sasaki: bool
    sasaki: bool
    frame: np.ndarray
    residuals: dict


def contact_structure_dim5(T, tols=DEFAULT_TOLS):
    """Metric almost contact structure of a dim-5 torsion form with
    sigma_T != 0.

    The Reeb direction is *sigma_T normalized; in an adapted frame the
    torsion reads -(rho e125 + lam e345) with rho, lam >= 0, and
    F = -(e12 + e34), phi = e12 + e34.  The structure is quasi-Sasakian
    by construction, alpha-Sasakian when rho = lam, Sasakian when both
    equal 2.
    """
    if T.dim != 5:
        raise ValueError("contact structure requires dimension 5")
    sig = sigma_T(T)
    sn = sig.norm()
    if sn <= tols.eps_coeff:
        raise ValueError("sigma_T vanishes: no preferred Reeb direction")
    xi = hodge(sig).to_vector() / sn
    eta = Multivector.from_vector(xi, tols)
    d_eta = interior(xi, T)
    nf = skew_normal_form(d_eta, tols)
    if nf.rank != 4:
        raise ValueError("xi -| T is degenerate beyond the Reeb direction")
    # columns: two eigenplanes, then the kernel line (up to sign, xi)
    f = nf.frame.copy()
    if np.dot(f[:, 4], xi) < 0:
        f[:, 4] = -f[:, 4]
    # orient each eigenplane so the d_eta coefficients come out negative
    for k in (0, 2):
        pair = endo_to_two_form(np.outer(f[:, k + 1], f[:, k])
                                - np.outer(f[:, k], f[:, k + 1]), tols)
        if inner(d_eta, pair) > 0:
            f[:, k + 1] = -f[:, k + 1]
    def pair_form(k):
        return endo_to_two_form(np.outer(f[:, k + 1], f[:, k])
                                - np.outer(f[:, k], f[:, k + 1]), tols)
    F = (-1.0) * (pair_form(0) + pair_form(2))
    phi = two_form_to_endo((-1.0) * F)
    rho, lam = nf.spectrum
    scale = max(1.0, rho)
    eq = abs(rho - lam) <= 1e3 * tols.eps_rank * scale
    residuals = {
        "phi_square": float(np.max(np.abs(phi @ phi + np.eye(5)
                                          - np.outer(xi, xi)))),
        "eta_wedge_deta": (T - wedge(eta, d_eta)).max_abs(),
        "phi_metric": float(np.max(np.abs(phi.T @ phi - np.eye(5)
                                          + np.outer(xi, xi)))),
    }
    return ContactData(xi=xi, eta=eta, d_eta=d_eta, F=F, phi=phi,
                       rho=rho, lam=lam,
                       quasi_sasaki=True,
                       alpha_sasaki=eq,
                       sasaki=eq and abs(rho - 2.0) <= 1e3 * tols.eps_rank,
                       frame=f, residuals=residuals)


# -- dimension 6: almost Hermitian structure -------------------------------

@dataclass
class HermitianData:
    J: np.ndarray
    Omega: Multivector
    frame: np.ndarray
    lee_form: np.ndarray
    w1_part: Multivector
    w3_part: Multivector
    w1_norm: float
    w3_norm: float
    pure_w1: bool
    pure_w3: bool
    residuals: dict


def _lee_contraction(T, J):
    """1-form theta(Z) = (1/2) sum_i T(e_i, J e_i, Z); its vanishing is
    the no-W4-component criterion."""
    n = T.dim
    theta = np.zeros(n)
    for i in range(1, n + 1):
        Jei = J[:, i - 1]
        w = interior(Jei, T)       # T(J e_i, . , .)
        v = interior(i, w)          # T(J e_i, e_i, .) -- note the order
        theta -= 0.5 * v.to_vector()
    return theta


# generators of the 2-dimensional W1 module in the adapted frame
_W1A = [((1, 3, 5), -1.0), ((2, 4, 5), 1.0), ((2, 3, 6), 1.0), ((1, 4, 6), 1.0)]
_W1B = [((2, 4, 6), -1.0), ((1, 3, 6), 1.0), ((1, 4, 5), 1.0), ((2, 3, 5), 1.0)]


def hermitian_from_sigma(T, tols=DEFAULT_TOLS):
    """Almost Hermitian structure of a dim-6 torsion of class D6_D with
    equal skew eigenvalues: J is *sigma_T normalized.

    The torsion is split into its W1 (nearly Kaehler) and W3 (balanced)
    parts in the frame adapting J to the standard form; the Lee
    contraction reports the W4 component.
    """
    if T.dim != 6:
        raise ValueError("requires dimension 6")
    sig = sigma_T(T)
    dual = hodge(sig)
    nf = skew_normal_form(dual, tols)
    if nf.rank != 6:
        raise ValueError("* sigma_T is degenerate: no almost complex "
                         "structure from this torsion")
    s = nf.spectrum
    if max(s) - min(s) > 1e3 * tols.eps_rank * max(1.0, max(s)):
        raise ValueError("unequal skew eigenvalues of * sigma_T")
    mean = float(np.mean(s))
    J = two_form_to_endo(dual) / mean
    frame = nf.frame
    # express T in the adapted frame: T_ad(e_i, ...) = T(f_i, ...)
    from .exterior import rotate
    T_ad = rotate(T, frame.T)
    w1a = Multivector(6, dict(_W1A), tols)
    w1b = Multivector(6, dict(_W1B), tols)
    c_a = inner(T_ad, w1a) / inner(w1a, w1a)
    c_b = inner(T_ad, w1b) / inner(w1b, w1b)
    w1_ad = c_a * w1a + c_b * w1b
    w3_ad = T_ad - w1_ad
    w1 = rotate(w1_ad, frame)
    w3 = rotate(w3_ad, frame)
    theta = _lee_contraction(T, J)
    w1n, w3n = w1.norm(), w3.norm()
    total = max(1.0, T.norm())
    residuals = {
        "J_square": float(np.max(np.abs(J @ J + np.eye(6)))),
        "lee_form": float(np.max(np.abs(theta))),
        "split": (T - w1 - w3).max_abs(),
    }
    return HermitianData(J=J, Omega=endo_to_two_form(J, tols), frame=frame,
                         lee_form=theta, w1_part=w1, w3_part=w3,
                         w1_norm=w1n, w3_norm=w3n,
                         pure_w1=w3n <= 1e3 * tols.eps_rank * total,
                         pure_w3=w1n <= 1e3 * tols.eps_rank * total,
                         residuals=residuals)
