"""Incremental GF(2) echelon builds shared by the quotient machinery.

Two interchangeable engines compute the same canonical results: a plain
big-int engine, and word-packed numba kernels (see _packed) used for
large ambient dimensions when numba is importable.  Both reduce at the
lowest set column with first arrival winning the pivot, and both finish
with a full back-elimination, so the reduced basis rows, the adopted
representative columns and the per-column class vectors agree bit for
bit.
"""

from __future__ import annotations

from typing import Iterable, List, Sequence, Tuple

_PACKED_MIN_COLS = 256

try:
    import numpy as _np

    from . import _packed as _pk

    HAVE_PACKED = True
except Exception:  # pragma: no cover - numba-less environments
    HAVE_PACKED = False

FORCE_PYTHON = False


class ScanResult:
    """Outcome of a full span + unit-vector scan over one coordinate space.

    rows/pivots hold the canonical RREF basis of the input span; rep_cols
    are the columns adopted as quotient representatives (ascending); and
    classes[m] is the class of column m written over the representatives,
    bit r standing for rep_cols[r].
    """

    __slots__ = ("ncols", "rank", "rows", "pivots", "rep_cols", "classes")

    def __init__(self, ncols, rank, rows, pivots, rep_cols, classes):
        self.ncols = ncols
        self.rank = rank
        self.rows = rows
        self.pivots = pivots
        self.rep_cols = rep_cols
        self.classes = classes


def _use_packed(ncols: int) -> bool:
    return HAVE_PACKED and not FORCE_PYTHON and ncols >= _PACKED_MIN_COLS


def _rows_to_int(row) -> int:
    """A row is either a packed int or an iterable of column indices."""
    if isinstance(row, int):
        return row
    v = 0
    for j in row:
        v ^= 1 << j
    return v


# -- big-int engine ---------------------------------------------------------


def _insert_py(ech: dict, v: int):
    while v:
        j = (v & -v).bit_length() - 1
        row = ech.get(j)
        if row is None:
            ech[j] = v
            return j
        v ^= row
    return None


def _back_eliminate_py(ech: dict) -> None:
    pivots = sorted(ech)
    for j in reversed(pivots):
        rj = ech[j]
        for j2 in pivots:
            if j2 >= j:
                break
            if (ech[j2] >> j) & 1:
                ech[j2] ^= rj


def _span_py(ncols: int, sparse_rows) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    ech: dict = {}
    for idxs in sparse_rows:
        _insert_py(ech, _rows_to_int(idxs))
    _back_eliminate_py(ech)
    pivots = tuple(sorted(ech))
    return tuple(ech[j] for j in pivots), pivots


def _scan_py(ncols: int, sparse_rows) -> ScanResult:
    ech: dict = {}
    for idxs in sparse_rows:
        _insert_py(ech, _rows_to_int(idxs))
    _back_eliminate_py(ech)
    hit_pivots = tuple(sorted(ech))
    hit_rows = tuple(ech[j] for j in hit_pivots)
    rank = len(hit_pivots)

    cls_of_pivot = {j: 0 for j in hit_pivots}
    classes: List[int] = [0] * ncols
    rep_cols: List[int] = []
    for m in range(ncols):
        v = 1 << m
        c = 0
        while v:
            j = (v & -v).bit_length() - 1
            row = ech.get(j)
            if row is None:
                r = len(rep_cols)
                c ^= 1 << r
                ech[j] = v
                cls_of_pivot[j] = c
                classes[m] = 1 << r
                rep_cols.append(m)
                break
            v ^= row
            c ^= cls_of_pivot[j]
        else:
            classes[m] = c
    return ScanResult(ncols, rank, hit_rows, hit_pivots,
                      tuple(rep_cols), tuple(classes))


# -- packed engine ----------------------------------------------------------


def _pack_batch(batch: Sequence, nwords: int):
    arr = _np.zeros((len(batch), nwords), dtype=_np.uint64)
    one = _np.uint64(1)
    nbytes = nwords * 8
    for i, row in enumerate(batch):
        if isinstance(row, int):
            arr[i] = _np.frombuffer(row.to_bytes(nbytes, "little"),
                                    dtype=_np.uint64)
        else:
            packed = arr[i]
            for j in row:
                packed[j >> 6] ^= one << _np.uint64(j & 63)
    return arr


def _words_to_int(words) -> int:
    return int.from_bytes(words.tobytes(), "little")


def _span_packed(ncols: int, sparse_rows, batch_size: int = 4096):
    nwords = (ncols + 63) // 64
    E = _np.zeros((ncols, nwords), dtype=_np.uint64)
    row_of_piv = _np.full(ncols, -1, dtype=_np.int64)
    start_word = _np.zeros(ncols, dtype=_np.int64)
    rank = 0
    batch: list = []
    for idxs in sparse_rows:
        batch.append(idxs)
        if len(batch) >= batch_size:
            rank = _pk.insert_batch(E, row_of_piv, start_word, rank,
                                    _pack_batch(batch, nwords))
            batch.clear()
    if batch:
        rank = _pk.insert_batch(E, row_of_piv, start_word, rank,
                                _pack_batch(batch, nwords))
        batch.clear()
    pivots = _np.flatnonzero(row_of_piv >= 0).astype(_np.int64)
    _pk.back_eliminate(E, row_of_piv, rank, pivots[::-1].copy())
    return E, row_of_piv, start_word, rank, pivots


def _span_packed_public(ncols, sparse_rows):
    E, row_of_piv, _, rank, pivots = _span_packed(ncols, sparse_rows)
    rows = tuple(_words_to_int(E[row_of_piv[j]]) for j in pivots)
    return rows, tuple(int(j) for j in pivots)


def _scan_packed(ncols: int, sparse_rows) -> ScanResult:
    E, row_of_piv, start_word, rank, pivots = _span_packed(ncols, sparse_rows)
    hit_rows = tuple(_words_to_int(E[row_of_piv[j]]) for j in pivots)
    hit_pivots = tuple(int(j) for j in pivots)

    nreps_max = ncols - rank
    cls_words = max(1, (nreps_max + 63) // 64)
    CLS = _np.zeros((ncols, cls_words), dtype=_np.uint64)
    classes_arr = _np.zeros((ncols, cls_words), dtype=_np.uint64)
    rep_cols_arr = _np.zeros(max(1, nreps_max), dtype=_np.int64)
    nreps = _pk.unit_scan(E, row_of_piv, start_word, rank,
                          CLS, classes_arr, rep_cols_arr)
    if nreps != nreps_max:
        raise AssertionError("unit scan did not close the ambient space")
    classes = tuple(_words_to_int(classes_arr[m]) for m in range(ncols))
    rep_cols = tuple(int(c) for c in rep_cols_arr[:nreps])
    return ScanResult(ncols, rank, hit_rows, hit_pivots, rep_cols, classes)


# -- public entry points ----------------------------------------------------


def span_echelon(ncols: int, sparse_rows) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """Canonical RREF (rows, pivots) of the span of sparse index rows."""
    if _use_packed(ncols):
        return _span_packed_public(ncols, sparse_rows)
    return _span_py(ncols, sparse_rows)


def quotient_scan(ncols: int, sparse_rows) -> ScanResult:
    """Span RREF plus the canonical unit-vector scan of the quotient."""
    if _use_packed(ncols):
        return _scan_packed(ncols, sparse_rows)
    return _scan_py(ncols, sparse_rows)
