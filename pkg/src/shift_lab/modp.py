"""Prime-field scaffolding: the default modulus, primality validation,
seeded random matrices, and the public echelon wrapper.

The default modulus 2^61 - 1 is large enough that a random matrix or
linear form is generic with overwhelming probability (Schwartz-Zippel:
failure odds scale with degree/p), yet small enough that the compiled
kernel can multiply residues inside unsigned 128-bit integers.  An
exact Fraction-based echelon is provided for audit runs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import InvalidParameters, SingularMatrix
from .kernels import echelon

DEFAULT_PRIME = (1 << 61) - 1

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_probable_prime(n: int) -> bool:
    """Miller-Rabin; the fixed bases are deterministic below 3.3e24."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class PrimeField:
    """A prime modulus, validated once at construction."""

    p: int = DEFAULT_PRIME

    def __post_init__(self):
        if not is_probable_prime(self.p):
            raise InvalidParameters(f"{self.p} is not prime")

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return pow(a, self.p - 2, self.p)


def derive_seeds(master: int, count: int) -> list:
    """Deterministic per-trial seeds from one master seed."""
    rng = random.Random(master)
    return [rng.randrange(1 << 63) for _ in range(count)]


def random_matrix(n: int, rng: random.Random, p: int) -> list:
    """n x n matrix of uniform residues, as a list of rows of ints."""
    return [[rng.randrange(p) for _ in range(n)] for _ in range(n)]


def matrix_rank(mat, p: int) -> int:
    arr = np.array([[x % p for x in row] for row in mat], dtype=np.uint64)
    return len(echelon(arr, p))


def random_invertible(n: int, seed: int, p: int = DEFAULT_PRIME) -> list:
    """Seeded uniform invertible matrix over F_p; resamples on singularity.

    The same (n, seed, p) always returns the same matrix.
    """
    if n == 0:
        return []
    rng = random.Random(seed)
    for _ in range(64):
        mat = random_matrix(n, rng, p)
        if matrix_rank(mat, p) == n:
            return mat
    raise SingularMatrix(f"no invertible {n}x{n} matrix after 64 draws")


def elementary_matrix(n: int, i: int, j: int) -> list:
    """Identity except column j also feeds row i: x_j maps to x_i + x_j."""
    if not (1 <= i < j <= n):
        raise InvalidParameters("need 1 <= i < j <= n")
    mat = [[1 if r == c else 0 for c in range(n)] for r in range(n)]
    mat[i - 1][j - 1] = 1
    return mat


def echelonize(rows, p: int = DEFAULT_PRIME, column_order=None):
    """Public echelon utility.

    rows: matrix as nested ints (any residues; reduced mod p here).
    column_order: optional permutation of column indices; elimination
    scans columns in that order.  Returns (pivot columns in the original
    labels, rank, reduced matrix with the original column layout).
    """
    arr = np.array([[int(x) % p for x in row] for row in rows], dtype=np.uint64)
    if arr.ndim != 2:
        raise InvalidParameters("expected a 2-d matrix")
    if column_order is not None:
        order = list(column_order)
        if sorted(order) != list(range(arr.shape[1])):
            raise InvalidParameters("column_order must permute all columns")
        work = np.ascontiguousarray(arr[:, order])
        piv = echelon(work, p)
        pivots = [order[c] for c in piv]
        inverse = np.argsort(order)
        reduced = work[:, inverse]
    else:
        work = np.ascontiguousarray(arr)
        pivots = echelon(work, p)
        reduced = work
    return pivots, len(pivots), reduced


# -- exact-rational audit mode -------------------------------------------


def echelon_exact(data) -> list:
    """RREF over the rationals, in place on nested lists of Fractions.

    Returns pivot column indices; mirrors kernels.echelon exactly.
    """
    rows = len(data)
    cols = len(data[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        k = next((i for i in range(r, rows) if data[i][c]), None)
        if k is None:
            continue
        if k != r:
            data[r], data[k] = data[k], data[r]
        inv = Fraction(1, 1) / data[r][c]
        if inv != 1:
            data[r] = [x * inv for x in data[r]]
        for i in range(rows):
            if i != r and data[i][c]:
                f = data[i][c]
                row_r = data[r]
                data[i] = [a - f * b for a, b in zip(data[i], row_r)]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return pivots


def reduce_rows_exact(rref, pivots, vec) -> list:
    """Reduce one vector (list of Fractions) against an exact RREF."""
    v = list(vec)
    for t, c in enumerate(pivots):
        if v[c]:
            f = v[c]
            row = rref[t]
            v = [a - f * b for a, b in zip(v, row)]
    return v
