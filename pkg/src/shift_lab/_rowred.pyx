# cython: boundscheck=False, wraparound=False, cdivision=True
"""Dense row reduction over a prime field with a 64-bit modulus.

Products of two residues can reach ~122 bits for the default modulus
2^61 - 1, so the inner loop multiplies in unsigned __int128.  Matrices
are C-contiguous uint64 arrays with entries already reduced mod p.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()

ctypedef unsigned long long u64

cdef extern from *:
    ctypedef unsigned long long u128 "unsigned __int128"


cdef inline u64 mulmod(u64 a, u64 b, u64 p) nogil:
    return <u64>((<u128>a * <u128>b) % <u128>p)


cdef inline u64 powmod(u64 a, u64 e, u64 p) nogil:
    cdef u64 acc = 1
    cdef u64 base = a % p
    while e:
        if e & 1:
            acc = mulmod(acc, base, p)
        base = mulmod(base, base, p)
        e >>= 1
    return acc


def echelon(cnp.ndarray[cnp.uint64_t, ndim=2] A, u64 p):
    """Reduce A to reduced row echelon form in place, scanning columns
    left to right.  Returns the list of pivot column indices.
    """
    cdef Py_ssize_t rows = A.shape[0]
    cdef Py_ssize_t cols = A.shape[1]
    cdef Py_ssize_t r = 0, c, i, j, k
    cdef u64 inv, f, tmp
    pivots = []
    if rows == 0 or cols == 0:
        return pivots
    for c in range(cols):
        k = -1
        for i in range(r, rows):
            if A[i, c] != 0:
                k = i
                break
        if k < 0:
            continue
        if k != r:
            for j in range(c, cols):
                tmp = A[r, j]
                A[r, j] = A[k, j]
                A[k, j] = tmp
        inv = powmod(A[r, c], p - 2, p)
        if inv != 1:
            for j in range(c, cols):
                if A[r, j]:
                    A[r, j] = mulmod(A[r, j], inv, p)
        with nogil:
            for i in range(rows):
                if i == r:
                    continue
                f = A[i, c]
                if f:
                    for j in range(c, cols):
                        if A[r, j]:
                            A[i, j] = (A[i, j] + p - mulmod(f, A[r, j], p)) % p
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return pivots


def reduce_rows(cnp.ndarray[cnp.uint64_t, ndim=2] R,
                pivots,
                cnp.ndarray[cnp.uint64_t, ndim=2] V,
                u64 p):
    """Reduce each row of V against the RREF matrix R in place.

    R must be a reduced row echelon matrix whose t-th row has its pivot
    at column pivots[t].  After the call every row of V has zeros in all
    pivot columns; what is left lives on the non-pivot columns.
    """
    cdef Py_ssize_t nr = V.shape[0]
    cdef Py_ssize_t cols = V.shape[1]
    cdef Py_ssize_t npv = len(pivots)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] piv = np.asarray(pivots, dtype=np.int64)
    cdef Py_ssize_t v, t, j, c
    cdef u64 f
    if R.shape[1] != cols:
        raise ValueError("column count mismatch")
    with nogil:
        for v in range(nr):
            for t in range(npv):
                c = piv[t]
                f = V[v, c]
                if f:
                    for j in range(c, cols):
                        if R[t, j]:
                            V[v, j] = (V[v, j] + p - mulmod(f, R[t, j], p)) % p
    return V
