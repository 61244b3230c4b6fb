"""Sparse exterior algebra over R^n with an orthonormal frame.

Multivectors are stored as {index-tuple: coefficient} with strictly
increasing 1-based index tuples.  The metric is the standard one and the
Hodge star uses the orientation e_1 ^ ... ^ e_n.  Supported dimensions
are 3 <= n <= 8, which keeps everything comfortably dense-free.
"""

import itertools
import json

import numpy as np

from .config import DEFAULT_TOLS


def sort_with_sign(indices):
    """Sort an index tuple, returning (sorted_tuple, sign).

    sign is 0 when an index repeats, otherwise the sign of the sorting
    permutation.
    """
    idx = list(indices)
    if len(set(idx)) != len(idx):
        return tuple(sorted(idx)), 0
    sign = 1
    # insertion sort, counting transpositions
    for i in range(1, len(idx)):
        j = i
        while j > 0 and idx[j - 1] > idx[j]:
            idx[j - 1], idx[j] = idx[j], idx[j - 1]
            sign = -sign
            j -= 1
    return tuple(idx), sign


class Multivector:
    """A (possibly mixed-grade) element of Lambda(R^n)."""

    def __init__(self, dim, terms=None, tols=DEFAULT_TOLS):
        if not 1 <= dim <= 8:
            raise ValueError("dimension must be between 1 and 8")
        self.dim = dim
        self.tols = tols
        clean = {}
        for idx, c in (terms or {}).items():
            idx = tuple(idx)
            if any(not 1 <= i <= dim for i in idx):
                raise ValueError("index out of range for dim %d: %s" % (dim, idx))
            if list(idx) != sorted(idx) or len(set(idx)) != len(idx):
                raise ValueError("indices must be strictly increasing: %s" % (idx,))
            if abs(c) > tols.eps_coeff:
                clean[idx] = float(c)
        self.terms = clean

    @classmethod
    def from_unsorted(cls, dim, raw_terms, tols=DEFAULT_TOLS):
        """Build from terms whose indices may be unsorted or repeated."""
        acc = {}
        for idx, c in raw_terms:
            key, sign = sort_with_sign(idx)
            if sign == 0:
                continue
            acc[key] = acc.get(key, 0.0) + sign * c
        return cls(dim, acc, tols)

    @classmethod
    def basis(cls, dim, *indices):
        """The basis monomial e_{i1} ^ ... ^ e_{ik} (indices 1-based)."""
        return cls.from_unsorted(dim, [(tuple(indices), 1.0)])

    @classmethod
    def scalar(cls, dim, value):
        return cls(dim, {(): value})

    # -- basic structure -------------------------------------------------

    def grades(self):
        return sorted({len(i) for i in self.terms})

    def grade_part(self, k):
        return Multivector(self.dim,
                           {i: c for i, c in self.terms.items() if len(i) == k},
                           self.tols)

    def is_homogeneous(self, k=None):
        gs = self.grades()
        if k is None:
            return len(gs) <= 1
        return gs in ([], [k])

    def is_zero(self):
        return not self.terms

    def coeff(self, *indices):
        key, sign = sort_with_sign(indices)
        return sign * self.terms.get(key, 0.0)

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        acc = dict(self.terms)
        for i, c in other.terms.items():
            acc[i] = acc.get(i, 0.0) + c
        return Multivector(self.dim, acc, self.tols)

    def __sub__(self, other):
        return self + (-1.0) * other

    def __neg__(self):
        return (-1.0) * self

    def __mul__(self, s):
        return Multivector(self.dim, {i: c * s for i, c in self.terms.items()},
                           self.tols)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Multivector) or self.dim != other.dim:
            return NotImplemented
        return (self - other).is_zero()

    def __repr__(self):
        if not self.terms:
            return "Multivector(%d, 0)" % self.dim
        parts = []
        for idx in sorted(self.terms, key=lambda i: (len(i), i)):
            name = "e" + "".join(str(j) for j in idx) if idx else "1"
            parts.append("%+g*%s" % (self.terms[idx], name))
        return "Multivector(%d, %s)" % (self.dim, " ".join(parts))

    # -- numerics --------------------------------------------------------

    def norm(self):
        return float(np.sqrt(sum(c * c for c in self.terms.values())))

    def max_abs(self):
        return max((abs(c) for c in self.terms.values()), default=0.0)

    def to_vector(self):
        """Coefficients of a grade-1 element as a length-dim array."""
        if not self.is_homogeneous(1):
            raise ValueError("not a 1-vector")
        v = np.zeros(self.dim)
        for (i,), c in self.terms.items():
            v[i - 1] = c
        return v

    @classmethod
    def from_vector(cls, v, tols=DEFAULT_TOLS):
        v = np.asarray(v, dtype=float)
        return cls(len(v), {(i + 1,): v[i] for i in range(len(v))}, tols)

    # -- serialization ---------------------------------------------------

    def to_json_dict(self):
        return {
            "dim": self.dim,
            "terms": [{"idx": list(i), "c": c}
                      for i, c in sorted(self.terms.items())],
        }

    @classmethod
    def from_json_dict(cls, d, tols=DEFAULT_TOLS):
        terms = {}
        for t in d["terms"]:
            idx = tuple(t["idx"])
            if list(idx) != sorted(set(idx)):
                raise ValueError("indices must be strictly increasing: %s" % (idx,))
            terms[idx] = terms.get(idx, 0.0) + float(t["c"])
        return cls(int(d["dim"]), terms, tols)

    def to_json(self):
        return json.dumps(self.to_json_dict(), sort_keys=True)


# -- operations ----------------------------------------------------------

def wedge(a, b):
    """Exterior product a ^ b."""
    if a.dim != b.dim:
        raise ValueError("dimension mismatch")
    raw = []
    for i, c in a.terms.items():
        for j, d in b.terms.items():
            raw.append((i + j, c * d))
    return Multivector.from_unsorted(a.dim, raw, a.tols)


def interior(x, a):
    """Interior product x -| a, contraction in the first slot.

    x may be a 1-d numpy array, a basis index (int, 1-based), or a
    grade-1 Multivector.
    """
    if isinstance(x, Multivector):
        x = x.to_vector()
    elif isinstance(x, (int, np.integer)):
        v = np.zeros(a.dim)
        v[x - 1] = 1.0
        x = v
    x = np.asarray(x, dtype=float)
    raw = []
    for idx, c in a.terms.items():
        for p, i in enumerate(idx):
            xi = x[i - 1]
            if xi != 0.0:
                rest = idx[:p] + idx[p + 1:]
                raw.append((rest, ((-1.0) ** p) * xi * c))
    return Multivector.from_unsorted(a.dim, raw, a.tols)


def hodge(a):
    """Hodge star for the orientation e_1 ^ ... ^ e_n."""
    n = a.dim
    full = tuple(range(1, n + 1))
    raw = []
    for idx, c in a.terms.items():
        comp = tuple(i for i in full if i not in idx)
        _, sign = sort_with_sign(idx + comp)
        raw.append((comp, sign * c))
    return Multivector.from_unsorted(n, raw, a.tols)


def inner(a, b):
    """Inner product induced by the orthonormal frame (basis monomials
    are orthonormal)."""
    if a.dim != b.dim:
        raise ValueError("dimension mismatch")
    return float(sum(c * b.terms.get(i, 0.0) for i, c in a.terms.items()))


def rotate(a, Q):
    """Apply the frame substitution e_i -> sum_j Q[j-1, i-1] e_j to a.

    For orthogonal Q this realizes an orthonormal change of frame; it
    commutes with wedge and preserves the inner product.
    """
    Q = np.asarray(Q, dtype=float)
    if Q.shape != (a.dim, a.dim):
        raise ValueError("frame matrix has wrong shape")
    out = Multivector(a.dim, {})
    for idx, c in a.terms.items():
        piece = Multivector.scalar(a.dim, c)
        for i in idx:
            piece = wedge(piece, Multivector.from_vector(Q[:, i - 1], a.tols))
        out = out + piece
    return out


def all_index_tuples(dim, k):
    """Strictly increasing k-tuples from 1..dim, in lexicographic order."""
    return list(itertools.combinations(range(1, dim + 1), k))


def random_form(dim, k, rng, scale=1.0):
    """A random grade-k form with independent N(0, scale) coefficients."""
    terms = {idx: scale * rng.standard_normal()
             for idx in all_index_tuples(dim, k)}
    return Multivector(dim, terms)
