"""Numba kernels for the exponential-cost inner loops.

Both kernels take the matrix transposed (``at[j, k]`` is entry ``[k, j]`` of
the original) so that the column additions of the Gray-code walk touch
contiguous memory.  They release the GIL, which lets ensemble drivers run
trials on a thread pool.
"""

import numpy as np
from numba import njit


@njit(cache=True, nogil=True)
def ryser_range(at, lo, hi):
    """Signed row-sum products over the subset indices ``[lo, hi)``.

    Subset ``i`` is the Gray code ``g(i) = i ^ (i >> 1)``; consecutive
    subsets differ by one column, so each step updates the running row
    sums in O(n).  The first subset of the block is rebuilt from scratch
    (O(n^2)), which is what makes disjoint blocks independent work units.

    Returns ``sum_i (-1)^{|g(i)|} prod_k rowsum_k(g(i))``; the caller
    applies the global (-1)^n of Ryser's formula.
    """
    n = at.shape[0]
    row = np.zeros(n, dtype=np.complex128)
    g = lo ^ (lo >> 1)
    bits = 0
    for j in range(n):
        if (g >> j) & 1:
            bits += 1
            for k in range(n):
                row[k] += at[j, k]
    prod = 1.0 + 0.0j
    for k in range(n):
        prod *= row[k]
    total = -prod if (bits & 1) else prod
    for i in range(lo + 1, hi):
        j = 0
        while not (i >> j) & 1:
            j += 1
        gi = i ^ (i >> 1)
        if (gi >> j) & 1:
            bits += 1
            for k in range(n):
                row[k] += at[j, k]
        else:
            bits -= 1
            for k in range(n):
                row[k] -= at[j, k]
        prod = 1.0 + 0.0j
        for k in range(n):
            prod *= row[k]
        if bits & 1:
            total -= prod
        else:
            total += prod
    return total


@njit(cache=True, nogil=True)
def iex_correction(at, coefs):
    """Weighted diagonal-product x sub-permanent sums of the
    inclusion-exclusion identity.

    For every complement size ``c`` in ``range(len(coefs))`` this
    enumerates the ``c``-subsets of ``{0..n-1}`` in lexicographic order,
    multiplies the diagonal product over the remaining indices by the
    permanent of the principal submatrix on the subset, and accumulates
    ``coefs[c]`` times the total.  ``coefs`` carries sign and binomial
    weight, prepared by the caller.
    """
    n = at.shape[0]
    # c = 0: full diagonal product times the empty permanent (= 1)
    dp = 1.0 + 0.0j
    for k in range(n):
        dp *= at[k, k]
    acc = coefs[0] * dp
    for c in range(1, coefs.shape[0]):
        idx = np.empty(c, dtype=np.int64)
        for a in range(c):
            idx[a] = a
        tmp = np.empty((c, c), dtype=np.complex128)
        inset = np.zeros(n, dtype=np.bool_)
        fs = 0.0 + 0.0j
        while True:
            for a in range(n):
                inset[a] = False
            for a in range(c):
                inset[idx[a]] = True
            dp = 1.0 + 0.0j
            for a in range(n):
                if not inset[a]:
                    dp *= at[a, a]
            for a in range(c):
                for b in range(c):
                    tmp[a, b] = at[idx[a], idx[b]]
            sub = ryser_range(tmp, 1, 1 << c)
            if c & 1:
                sub = -sub
            fs += dp * sub
            i = c - 1
            while i >= 0 and idx[i] == i + n - c:
                i -= 1
            if i < 0:
                break
            idx[i] += 1
            for a in range(i + 1, c):
                idx[a] = idx[a - 1] + 1
        acc += coefs[c] * fs
    return acc
