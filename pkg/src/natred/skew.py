"""so(n) machinery: 2-form/endomorphism dictionary, the derivation
action on forms, Lie closures, stabilizers and invariant subspaces.

Skew endomorphisms are plain (n, n) numpy arrays.  The identification
with 2-forms sends e_i ^ e_j to E_ij (e_i -> e_j, e_j -> -e_i), and the
inner product <A, B> = -tr(AB)/2 makes the two dictionaries isometric.
"""

from dataclasses import dataclass, field

import numpy as np
import scipy.linalg

from .config import DEFAULT_TOLS
from .exterior import Multivector, all_index_tuples


def two_form_to_endo(w):
    """Skew matrix A with A e_i = sum_j w(e_i, e_j) e_j."""
    if not w.is_homogeneous(2) and not w.is_zero():
        raise ValueError("not a 2-form")
    A = np.zeros((w.dim, w.dim))
    for (i, j), c in w.terms.items():
        A[j - 1, i - 1] = c
        A[i - 1, j - 1] = -c
    return A


def endo_to_two_form(A, tols=DEFAULT_TOLS):
    A = np.asarray(A, dtype=float)
    n = A.shape[0]
    terms = {(i + 1, j + 1): A[j, i] for i in range(n) for j in range(i + 1, n)}
    return Multivector(n, terms, tols)


def so_inner(A, B):
    """<A, B> = -tr(AB)/2; E_ij are orthonormal in this inner product."""
    return -0.5 * float(np.trace(A @ B))


def so_basis(dim):
    """E_ij for i < j, in the lexicographic order of all_index_tuples."""
    out = []
    for (i, j) in all_index_tuples(dim, 2):
        A = np.zeros((dim, dim))
        A[j - 1, i - 1] = 1.0
        A[i - 1, j - 1] = -1.0
        out.append(A)
    return out


def act_on_form(A, a):
    """Derivation action of A in so(n) on a form:
    (A.a)(X_1,...,X_k) = -sum_i a(X_1,..., A X_i, ..., X_k)."""
    A = np.asarray(A, dtype=float)
    raw = []
    for idx, c in a.terms.items():
        for p, i in enumerate(idx):
            col = A[:, i - 1]
            for j in np.nonzero(col)[0]:
                raw.append((idx[:p] + (int(j) + 1,) + idx[p + 1:], c * col[j]))
    return Multivector.from_unsorted(a.dim, raw, a.tols)


# -- spans of skew matrices ------------------------------------------------

def _orthonormal_span(mats, dim, tols):
    """Orthonormal basis (Frobenius) of the span of a list of matrices."""
    if not mats:
        return []
    M = np.stack([m.reshape(-1) for m in mats])
    # rank-revealing via SVD
    u, s, vt = np.linalg.svd(M, full_matrices=False)
    keep = s > tols.eps_rank * max(1.0, s[0] if len(s) else 1.0)
    return [vt[i].reshape(dim, dim) for i in range(len(s)) if keep[i]]


def lie_closure(generators, tols=DEFAULT_TOLS, max_dim=None):
    """Close a list of skew matrices under the commutator bracket.

    Returns an orthonormal basis of the generated Lie subalgebra.
    """
    generators = [np.asarray(g, dtype=float) for g in generators if
                  np.max(np.abs(g)) > tols.eps_coeff]
    if not generators:
        return []
    dim = generators[0].shape[0]
    if max_dim is None:
        max_dim = dim * (dim - 1) // 2
    basis = _orthonormal_span(generators, dim, tols)
    while True:
        new = []
        for i in range(len(basis)):
            for j in range(i + 1, len(basis)):
                new.append(basis[i] @ basis[j] - basis[j] @ basis[i])
        bigger = _orthonormal_span(basis + new, dim, tols)
        if len(bigger) == len(basis) or len(bigger) >= max_dim:
            return bigger
        basis = bigger


def g_T(T, tols=DEFAULT_TOLS):
    """Lie algebra generated by the contractions e_i -| T."""
    from .exterior import interior
    gens = [two_form_to_endo(interior(i, T)) for i in range(1, T.dim + 1)]
    return lie_closure(gens, tols)


def isotropy_algebra(T, tols=DEFAULT_TOLS):
    """Stabilizer iso(T) = {A in so(n) : A.T = 0} via a null space."""
    n = T.dim
    k = max(T.grades(), default=3)
    slots = all_index_tuples(n, k)
    pos = {idx: p for p, idx in enumerate(slots)}
    cols = []
    for E in so_basis(n):
        img = act_on_form(E, T)
        v = np.zeros(len(slots))
        for idx, c in img.terms.items():
            v[pos[idx]] = c
        cols.append(v)
    M = np.stack(cols, axis=1)
    u, s, vt = np.linalg.svd(M)
    scale = max(1.0, s[0] if len(s) else 1.0)
    ncols = M.shape[1]
    null = [vt[i] for i in range(ncols)
            if i >= len(s) or s[i] <= tols.eps_rank * scale]
    basis = so_basis(n)
    out = []
    for v in null:
        A = np.zeros((n, n))
        for c, E in zip(v, basis):
            A += c * E
        out.append(A / np.sqrt(so_inner(A, A)))
    return out


# -- normal form of a single skew endomorphism -----------------------------

@dataclass
class NormalForm:
    """Skew eigenvalue data of a 2-form / skew endomorphism.

    In the frame given by the columns of `frame`, the 2-form reads
    sum_k spectrum[k] * f_{2k-1} ^ f_{2k}, spectrum sorted descending,
    kernel directions last.
    """
    spectrum: list
    rank: int
    frame: np.ndarray


def skew_normal_form(w, tols=DEFAULT_TOLS):
    """Block-diagonalize a 2-form (or skew matrix) over an orthonormal
    frame.  Eigenvalue magnitudes are reported as a nonnegative spectrum."""
    if isinstance(w, Multivector):
        A = two_form_to_endo(w)
    else:
        A = np.asarray(w, dtype=float)
    n = A.shape[0]
    S, Q = scipy.linalg.schur(A, output="real")
    scale = max(1.0, float(np.max(np.abs(A))) if A.size else 1.0)
    blocks = []      # (rho, col_a, col_b) with endo f_a -> rho f_b
    kernel_cols = []
    i = 0
    while i < n:
        if i + 1 < n and abs(S[i + 1, i]) > tols.eps_rank * scale:
            rho = S[i + 1, i]
            if rho > 0:
                blocks.append((rho, i, i + 1))
            else:
                blocks.append((-rho, i + 1, i))
            i += 2
        else:
            kernel_cols.append(i)
            i += 1
    blocks.sort(key=lambda b: -b[0])
    order = []
    for rho, a, b in blocks:
        order.extend([a, b])
    order.extend(kernel_cols)
    frame = Q[:, order]
    spectrum = [b[0] for b in blocks]
    return NormalForm(spectrum=spectrum, rank=2 * len(blocks), frame=frame)


# -- invariant subspace decomposition --------------------------------------

def _commutant_symmetric_basis(generators, n, tols):
    """Basis of symmetric matrices commuting with all generators."""
    tri = [(i, j) for i in range(n) for j in range(i, n)]
    cols = []
    for (i, j) in tri:
        S = np.zeros((n, n))
        S[i, j] = S[j, i] = 1.0
        rows = [(A @ S - S @ A).reshape(-1) for A in generators]
        cols.append(np.concatenate(rows))
    M = np.stack(cols, axis=1)
    u, s, vt = np.linalg.svd(M)
    scale = max(1.0, s[0] if len(s) else 1.0)
    null = [vt[k] for k in range(M.shape[1])
            if k >= len(s) or s[k] <= tols.eps_rank * scale]
    out = []
    for v in null:
        S = np.zeros((n, n))
        for c, (i, j) in zip(v, tri):
            S[i, j] += c
            S[j, i] += c if i != j else 0.0
        out.append(0.5 * (S + S.T))
    return out


def invariant_subspaces(generators, dim, seed=0, tols=DEFAULT_TOLS, _depth=0):
    """Decompose R^dim into minimal invariant subspaces of a set of skew
    matrices, via eigenspaces of a random symmetric commutant element.

    With no generators the decomposition degenerates to coordinate axes.
    Returns a list of orthonormal (dim, k) bases, deterministic for a
    fixed seed.
    """
    generators = [np.asarray(g, dtype=float) for g in generators
                  if np.max(np.abs(g)) > tols.eps_coeff]
    if not generators:
        return [np.eye(dim)[:, [i]] for i in range(dim)]
    rng = np.random.default_rng(seed)
    sym = _commutant_symmetric_basis(generators, dim, tols)
    coeffs = rng.standard_normal(len(sym))
    S = sum(c * B for c, B in zip(coeffs, sym))
    vals, vecs = np.linalg.eigh(S)
    scale = max(1.0, float(np.max(np.abs(vals))))
    groups = []
    start = 0
    for i in range(1, dim + 1):
        if i == dim or vals[i] - vals[i - 1] > 1e3 * tols.eps_rank * scale:
            groups.append(vecs[:, start:i])
            start = i
    if len(groups) == 1 or _depth >= 3:
        return _sorted_subspaces(groups)
    out = []
    for B in groups:
        if B.shape[1] == 1:
            out.append(B)
            continue
        restricted = [B.T @ A @ B for A in generators]
        for sub in invariant_subspaces(restricted, B.shape[1],
                                       seed=seed + 1, tols=tols,
                                       _depth=_depth + 1):
            out.append(B @ sub)
    return _sorted_subspaces(out)


def _sorted_subspaces(subspaces):
    def key(B):
        lead = int(np.argmax(np.max(np.abs(B), axis=1) > 1e-8))
        return (lead, B.shape[1])
    return sorted(subspaces, key=key)
