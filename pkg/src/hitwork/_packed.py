"""Numba kernels for bit-packed GF(2) echelon computation.

Rows live in a word-packed arena E of shape (ncols, nwords): bit j of a
row sits at word j >> 6, bit j & 63.  row_of_piv maps a pivot column to
its arena slot (-1 when free) and start_word[slot] is the first possibly
nonzero word of that row, so XOR chains skip the zero prefix.

All kernels follow one deterministic rule: reduce at the lowest set
column, first arrival claims the pivot.  The pure-Python code in
echelon.py implements the same rule, so results are bit-identical.
"""

import numpy as np
from numba import njit


@njit(cache=True, inline="always")
def _bit_index(word):
    b = 0
    t = word
    if t & np.uint64(0xFFFFFFFF) == np.uint64(0):
        b += 32
        t >>= np.uint64(32)
    if t & np.uint64(0xFFFF) == np.uint64(0):
        b += 16
        t >>= np.uint64(16)
    if t & np.uint64(0xFF) == np.uint64(0):
        b += 8
        t >>= np.uint64(8)
    if t & np.uint64(0xF) == np.uint64(0):
        b += 4
        t >>= np.uint64(4)
    if t & np.uint64(0x3) == np.uint64(0):
        b += 2
        t >>= np.uint64(2)
    if t & np.uint64(0x1) == np.uint64(0):
        b += 1
    return b


@njit(cache=True)
def insert_batch(E, row_of_piv, start_word, rank, batch):
    """Insert packed rows into the echelon; returns the new rank."""
    nwords = E.shape[1]
    for ri in range(batch.shape[0]):
        v = batch[ri].copy()
        w = 0
        while True:
            while w < nwords and v[w] == np.uint64(0):
                w += 1
            if w == nwords:
                break
            j = (w << 6) + _bit_index(v[w])
            r = row_of_piv[j]
            if r < 0:
                for q in range(w, nwords):
                    E[rank, q] = v[q]
                start_word[rank] = w
                row_of_piv[j] = rank
                rank += 1
                break
            for q in range(w, nwords):
                v[q] ^= E[r, q]
    return rank


@njit(cache=True)
def back_eliminate(E, row_of_piv, rank, pivots_desc):
    """Clear every pivot column from the other rows (full RREF pass)."""
    nwords = E.shape[1]
    for pi in range(pivots_desc.shape[0]):
        j = pivots_desc[pi]
        r = row_of_piv[j]
        wj = j >> 6
        mask = np.uint64(1) << np.uint64(j & 63)
        for slot in range(rank):
            if slot != r and E[slot, wj] & mask:
                for q in range(wj, nwords):
                    E[slot, q] ^= E[r, q]


@njit(cache=True)
def unit_scan(E, row_of_piv, start_word, rank, CLS, classes, rep_cols):
    """Insert every unit vector in column order, tracking quotient classes.

    For column m the pair (v, c) keeps the invariant
        v + sum of reps selected by c  ==  e_m   modulo the initial span,
    so when v dies c is the class of column m, and when v survives m is
    adopted as the next representative.  Returns the representative count.
    """
    ncols = E.shape[0]
    nwords = E.shape[1]
    cls_words = CLS.shape[1]
    v = np.zeros(nwords, dtype=np.uint64)
    c = np.zeros(cls_words, dtype=np.uint64)
    nreps = 0
    for m in range(ncols):
        for q in range(nwords):
            v[q] = np.uint64(0)
        for q in range(cls_words):
            c[q] = np.uint64(0)
        v[m >> 6] = np.uint64(1) << np.uint64(m & 63)
        w = m >> 6
        while True:
            while w < nwords and v[w] == np.uint64(0):
                w += 1
            if w == nwords:
                for q in range(cls_words):
                    classes[m, q] = c[q]
                break
            j = (w << 6) + _bit_index(v[w])
            r = row_of_piv[j]
            if r < 0:
                slot = rank + nreps
                for q in range(w, nwords):
                    E[slot, q] = v[q]
                start_word[slot] = w
                c[nreps >> 6] ^= np.uint64(1) << np.uint64(nreps & 63)
                for q in range(cls_words):
                    CLS[slot, q] = c[q]
                classes[m, nreps >> 6] = np.uint64(1) << np.uint64(nreps & 63)
                row_of_piv[j] = slot
                rep_cols[nreps] = m
                nreps += 1
                break
            for q in range(w, nwords):
                v[q] ^= E[r, q]
            for q in range(cls_words):
                c[q] ^= CLS[r, q]
    return nreps
