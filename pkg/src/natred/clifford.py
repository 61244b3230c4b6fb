"""Real Clifford algebra of R^n with e_i * e_i = -1.

Elements are dense length-2^n coefficient arrays indexed by bitmask
(bit i-1 set means e_i is present in the monomial).  For n <= 8 this is
at most 256 slots, so nothing clever is needed.
"""

import numpy as np

from .config import DEFAULT_TOLS
from .exterior import Multivector, all_index_tuples


def _popcount_above(mask, j):
    """Number of set bits in mask strictly above bit j."""
    return int(bin(mask >> (j + 1)).count("1"))


def monomial_product(a_mask, b_mask):
    """Product of basis monomials: returns (result_mask, sign).

    Moving each generator of b into sorted position past the generators
    of a costs one sign per transposition; each repeated generator
    contracts with e_i^2 = -1.
    """
    sign = 1
    m = b_mask
    while m:
        j = (m & -m).bit_length() - 1
        if _popcount_above(a_mask, j) % 2:
            sign = -sign
        m &= m - 1
    common = a_mask & b_mask
    if bin(common).count("1") % 2:
        sign = -sign
    return a_mask ^ b_mask, sign


class CliffordElement:
    def __init__(self, dim, coeffs=None, tols=DEFAULT_TOLS):
        if not 1 <= dim <= 8:
            raise ValueError("dimension must be between 1 and 8")
        self.dim = dim
        self.tols = tols
        if coeffs is None:
            self.coeffs = np.zeros(1 << dim)
        else:
            self.coeffs = np.asarray(coeffs, dtype=float).copy()
            if self.coeffs.shape != (1 << dim,):
                raise ValueError("coefficient array has wrong length")

    @classmethod
    def scalar(cls, dim, value):
        out = cls(dim)
        out.coeffs[0] = value
        return out

    @classmethod
    def from_multivector(cls, a):
        """Embed a form through the basis monomial identification
        e_{i1} ^ ... ^ e_{ik} -> e_{i1} ... e_{ik} (indices increasing)."""
        out = cls(a.dim, tols=a.tols)
        for idx, c in a.terms.items():
            mask = 0
            for i in idx:
                mask |= 1 << (i - 1)
            out.coeffs[mask] += c
        return out

    def grade_part(self, k):
        """Grade-k component as a Multivector."""
        terms = {}
        for mask in range(1 << self.dim):
            if bin(mask).count("1") == k and self.coeffs[mask] != 0.0:
                idx = tuple(i + 1 for i in range(self.dim) if mask >> i & 1)
                terms[idx] = self.coeffs[mask]
        return Multivector(self.dim, terms, self.tols)

    def to_multivector(self):
        out = Multivector(self.dim, {})
        for k in range(self.dim + 1):
            out = out + self.grade_part(k)
        return out

    def scalar_part(self):
        return float(self.coeffs[0])

    def nonscalar_max(self):
        return float(np.max(np.abs(self.coeffs[1:]))) if self.dim else 0.0

    def is_scalar(self, eps=None):
        eps = self.tols.eps_coeff if eps is None else eps
        return self.nonscalar_max() <= eps

    def __add__(self, other):
        self._check(other)
        return CliffordElement(self.dim, self.coeffs + other.coeffs, self.tols)

    def __sub__(self, other):
        self._check(other)
        return CliffordElement(self.dim, self.coeffs - other.coeffs, self.tols)

    def __mul__(self, s):
        return CliffordElement(self.dim, self.coeffs * s, self.tols)

    __rmul__ = __mul__

    def _check(self, other):
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")

    def __repr__(self):
        return "CliffordElement(%d, %s)" % (self.dim, self.to_multivector())


def cl_mul(a, b):
    """Clifford product."""
    a._check(b)
    out = CliffordElement(a.dim, tols=a.tols)
    nz_a = np.nonzero(a.coeffs)[0]
    nz_b = np.nonzero(b.coeffs)[0]
    for ma in nz_a:
        ca = a.coeffs[ma]
        for mb in nz_b:
            mask, sign = monomial_product(int(ma), int(mb))
            out.coeffs[mask] += sign * ca * b.coeffs[mb]
    return out


def cl_square(a):
    return cl_mul(a, a)


def curvature_tensor(R_matrix, dim):
    """Expand a symmetric matrix over the lexicographic e_ij basis into
    the full 4-index array R[i,j,k,l] (0-based), antisymmetric in (i,j)
    and in (k,l)."""
    pairs = all_index_tuples(dim, 2)
    R_matrix = np.asarray(R_matrix, dtype=float)
    if R_matrix.shape != (len(pairs), len(pairs)):
        raise ValueError("curvature matrix has wrong shape for dim %d" % dim)
    R = np.zeros((dim, dim, dim, dim))
    for a, (i, j) in enumerate(pairs):
        for b, (k, l) in enumerate(pairs):
            v = R_matrix[a, b]
            R[i - 1, j - 1, k - 1, l - 1] = v
            R[j - 1, i - 1, k - 1, l - 1] = -v
            R[i - 1, j - 1, l - 1, k - 1] = -v
            R[j - 1, i - 1, l - 1, k - 1] = v
    return R


def embed_curvature(R_matrix, dim, tols=DEFAULT_TOLS):
    """(1/4) sum_{ijkl} R_{ijkl} e_i e_j e_k e_l as a Clifford element."""
    R = curvature_tensor(R_matrix, dim)
    gens = []
    for i in range(dim):
        g = CliffordElement(dim, tols=tols)
        g.coeffs[1 << i] = 1.0
        gens.append(g)
    out = CliffordElement(dim, tols=tols)
    for i in range(dim):
        for j in range(dim):
            if i == j:
                continue
            left = cl_mul(gens[i], gens[j])
            for k in range(dim):
                for l in range(dim):
                    v = R[i, j, k, l]
                    if v != 0.0:
                        out = out + (0.25 * v) * cl_mul(left, cl_mul(gens[k], gens[l]))
    return out


def torsion_square_identity_residual(T, sigma):
    """Residual of T^2 = -2 sigma_T + |T|^2 in the Clifford algebra."""
    cT = CliffordElement.from_multivector(T)
    lhs = cl_square(cT)
    rhs = CliffordElement.from_multivector((-2.0) * sigma)
    rhs.coeffs[0] += inner_norm_sq(T)
    return float(np.max(np.abs(lhs.coeffs - rhs.coeffs)))


def inner_norm_sq(a):
    return float(sum(c * c for c in a.terms.values()))


def bianchi_clifford_element(T, R_matrix):
    """The element T^2 + R whose scalarness encodes the first Bianchi
    identity."""
    cT = CliffordElement.from_multivector(T)
    return cl_square(cT) + embed_curvature(R_matrix, T.dim, T.tols)


def bianchi_clifford_check(T, R_matrix, eps=None):
    """Return (is_scalar, residual_max, element)."""
    elem = bianchi_clifford_element(T, R_matrix)
    eps = T.tols.eps_coeff if eps is None else eps
    return elem.is_scalar(eps), elem.nonscalar_max(), elem
