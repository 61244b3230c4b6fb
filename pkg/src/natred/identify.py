"""Identification of small Lie algebras (dim <= 9) by isomorphism
invariants: Killing signature, derived and lower central series, center.

The named list covers exactly the algebras the low-dimensional
classification branches produce; anything else comes back "unknown".
"""

from dataclasses import dataclass

import numpy as np

from .config import DEFAULT_TOLS
from .nomizu import LieAlgebraData


def killing_form(L):
    """beta(x, y) = tr(ad x ad y) over the basis."""
    n = L.dim
    ads = [L.ad(_e(n, i)) for i in range(n)]
    B = np.zeros((n, n))
    for i in range(n):
        for j in range(i, n):
            B[i, j] = B[j, i] = float(np.trace(ads[i] @ ads[j]))
    return B


def _e(n, i):
    v = np.zeros(n)
    v[i] = 1.0
    return v


def _span_dim(vectors, tols):
    if not vectors:
        return 0, np.zeros((0, 0))
    M = np.stack(vectors)
    s = np.linalg.svd(M, compute_uv=False)
    scale = max(1.0, s[0] if len(s) else 1.0)
    r = int(np.sum(s > tols.eps_rank * scale))
    return r, M


def _product_span(L, A_basis, B_basis, tols):
    """Orthonormal basis of span{[a, b]}."""
    vecs = [L.bracket(a, b) for a in A_basis for b in B_basis]
    if not vecs:
        return []
    M = np.stack(vecs)
    u, s, vt = np.linalg.svd(M, full_matrices=False)
    scale = max(1.0, s[0] if len(s) else 1.0)
    return [vt[i] for i in range(len(s)) if s[i] > tols.eps_rank * scale]


@dataclass
class Fingerprint:
    dim: int
    killing_signature: tuple   # (pos, neg, zero)
    derived_dims: list
    lower_central_dims: list
    center_dim: int
    is_nilpotent: bool
    is_solvable: bool
    is_semisimple: bool

    def to_json_dict(self):
        return {
            "dim": self.dim,
            "killing_signature": list(self.killing_signature),
            "derived_dims": self.derived_dims,
            "lower_central_dims": self.lower_central_dims,
            "center_dim": self.center_dim,
            "is_nilpotent": self.is_nilpotent,
            "is_solvable": self.is_solvable,
            "is_semisimple": self.is_semisimple,
        }


def fingerprint(L, tols=DEFAULT_TOLS):
    n = L.dim
    B = killing_form(L)
    vals = np.linalg.eigvalsh(B)
    scale = max(1.0, float(np.max(np.abs(vals))) if n else 1.0)
    pos = int(np.sum(vals > tols.eps_rank * scale))
    neg = int(np.sum(vals < -tols.eps_rank * scale))
    zero = n - pos - neg

    full = [_e(n, i) for i in range(n)]
    derived_dims = []
    cur = full
    for _ in range(n + 1):
        cur = _product_span(L, cur, cur, tols)
        derived_dims.append(len(cur))
        if not cur or (len(derived_dims) > 1
                       and derived_dims[-1] == derived_dims[-2]):
            break
    lower_dims = []
    cur = full
    for _ in range(n + 1):
        cur = _product_span(L, full, cur, tols)
        lower_dims.append(len(cur))
        if not cur or (len(lower_dims) > 1 and lower_dims[-1] == lower_dims[-2]):
            break
    # center = common kernel of all ad maps
    ads = np.concatenate([L.ad(v) for v in full], axis=0)
    s = np.linalg.svd(ads, compute_uv=False)
    sc = max(1.0, s[0] if len(s) else 1.0)
    center_dim = n - int(np.sum(s > tols.eps_rank * sc))
    return Fingerprint(
        dim=n,
        killing_signature=(pos, neg, zero),
        derived_dims=derived_dims,
        lower_central_dims=lower_dims,
        center_dim=center_dim,
        is_nilpotent=lower_dims[-1] == 0,
        is_solvable=derived_dims[-1] == 0,
        is_semisimple=zero == 0,
    )


def identify(L, tols=DEFAULT_TOLS):
    """Name the algebra, or return 'unknown'."""
    fp = fingerprint(L, tols)
    n, (pos, neg, zero) = fp.dim, fp.killing_signature
    der1 = fp.derived_dims[0] if fp.derived_dims else 0
    if der1 == 0:
        return "R^%d" % n
    if fp.is_semisimple:
        if n == 3:
            if neg == 3:
                return "su(2)"
            if (pos, neg) == (2, 1):
                return "sl(2,R)"
        if n == 6:
            if neg == 6:
                return "su(2)+su(2)"
            if (pos, neg) == (3, 3):
                return "sl(2,C)"
        if n == 8 and neg == 8:
            return "su(3)"
        return "unknown"
    if fp.is_nilpotent:
        if n == 3 and fp.center_dim == 1 and der1 == 1:
            return "heis3"
        if n == 5 and fp.center_dim == 1 and der1 == 1:
            return "heis5"
        if (n == 6 and fp.center_dim == 3
                and fp.lower_central_dims[:2] == [3, 0]):
            return "nilpotent(0,0,0,12,13,23)"
        return "unknown"
    if n == 4 and fp.center_dim == 1 and der1 == 3 and neg == 3:
        return "u(2)"
    if n == 6 and der1 == 3 and fp.center_dim == 3 and neg == 3:
        return "R^3+su(2)"
    if n == 6 and der1 == 6 and fp.center_dim == 0 and neg == 3 and zero == 3:
        return "R^3x|su(2)"
    return "unknown"


def ideal_decomposition(L, tols=DEFAULT_TOLS):
    """Split into ideals found by the commuting-block structure of the
    given basis: basis indices are grouped when a structure constant
    ties them together, and each group's span is verified to be an
    ideal.  Basis-aligned decompositions (the ones the classification
    tables produce) are found; a decomposition hidden behind a basis
    change is not searched for.
    """
    n = L.dim
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(i, j):
        parent[find(i)] = find(j)

    eps = tols.eps_coeff
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if abs(L.c[i, j, k]) > eps:
                    union(i, j)
                    union(i, k)
    groups = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    out = []
    for idx in sorted(groups.values()):
        sub = L.c[np.ix_(idx, idx, idx)]
        # verify the block is an ideal: brackets with everything stay inside
        outside = [k for k in range(n) if k not in idx]
        leak = float(np.max(np.abs(L.c[np.ix_(idx, range(n))][:, :, outside]),
                            initial=0.0))
        if leak > eps:
            # not actually decomposable along the basis; give up
            return [L]
        out.append(LieAlgebraData([L.labels[i] for i in idx], sub, L.tols))
    return out
