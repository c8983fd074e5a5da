"""Pure-Python fallback for the row-reduction kernel.

Same interface and same results as the compiled module, an order of
magnitude or two slower.  Arithmetic uses Python ints, which are exact
at any width, so no 128-bit tricks are needed here.
"""

import numpy as np


def echelon(A, p):
    """Reduced row echelon form of A in place; returns pivot columns."""
    rows, cols = A.shape
    p = int(p)
    pivots = []
    if rows == 0 or cols == 0:
        return pivots
    data = [[int(x) for x in row] for row in A]
    r = 0
    for c in range(cols):
        k = -1
        for i in range(r, rows):
            if data[i][c]:
                k = i
                break
        if k < 0:
            continue
        if k != r:
            data[r], data[k] = data[k], data[r]
        inv = pow(data[r][c], p - 2, p)
        if inv != 1:
            row_r = data[r]
            for j in range(c, cols):
                if row_r[j]:
                    row_r[j] = row_r[j] * inv % p
        row_r = data[r]
        for i in range(rows):
            if i == r:
                continue
            f = data[i][c]
            if f:
                row_i = data[i]
                for j in range(c, cols):
                    if row_r[j]:
                        row_i[j] = (row_i[j] - f * row_r[j]) % p
        pivots.append(c)
        r += 1
        if r == rows:
            break
    A[...] = np.array(data, dtype=np.uint64)
    return pivots


def reduce_rows(R, pivots, V, p):
    """Reduce each row of V against the RREF matrix R in place."""
    p = int(p)
    if R.shape[1] != V.shape[1]:
        raise ValueError("column count mismatch")
    rdata = [[int(x) for x in row] for row in R]
    for v in range(V.shape[0]):
        row = [int(x) for x in V[v]]
        for t, c in enumerate(pivots):
            f = row[c]
            if f:
                rrow = rdata[t]
                for j in range(c, len(row)):
                    if rrow[j]:
                        row[j] = (row[j] - f * rrow[j]) % p
        V[v] = np.array(row, dtype=np.uint64)
    return V
