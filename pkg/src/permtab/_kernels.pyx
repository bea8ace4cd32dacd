# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot loops in ``_pykernels``."""

from libc.stdlib cimport malloc, free


cdef long long _place(int b, int start, int n, int nblocks, int* perm, int* values,
                      int* lengths, int* offsets, int* tail, int* chosen) nogil:
    cdef long long total = 0
    cdef int s, t, q, q2, x, vq, off, length, ok
    if b == nblocks:
        return 1
    off = offsets[b]
    length = lengths[b]
    for s in range(start, n - tail[b] + 1):
        ok = 1
        for t in range(length):
            q = off + t
            x = perm[s + t]
            vq = values[q]
            for q2 in range(q):
                if (x > chosen[q2]) != (vq > values[q2]):
                    ok = 0
                    break
            if not ok:
                break
            chosen[q] = x
        if ok:
            total += _place(b + 1, s + length, n, nblocks, perm, values,
                            lengths, offsets, tail, chosen)
    return total


def count_vincular(perm, values, block_lengths):
    cdef int n = len(perm)
    cdef int k = len(values)
    cdef int nblocks = len(block_lengths)
    cdef int i, b
    cdef long long result
    if k > n:
        return 0
    cdef int* buf = <int*> malloc((n + 2 * k + 3 * nblocks + 1) * sizeof(int))
    if buf == NULL:
        raise MemoryError()
    cdef int* cperm = buf
    cdef int* cvalues = buf + n
    cdef int* chosen = buf + n + k
    cdef int* lengths = buf + n + 2 * k
    cdef int* offsets = lengths + nblocks
    cdef int* tail = offsets + nblocks
    try:
        for i in range(n):
            cperm[i] = perm[i]
        for i in range(k):
            cvalues[i] = values[i]
            chosen[i] = 0
        for b in range(nblocks):
            lengths[b] = block_lengths[b]
        offsets[0] = 0
        for b in range(1, nblocks):
            offsets[b] = offsets[b - 1] + lengths[b - 1]
        tail[nblocks] = 0
        for b in range(nblocks - 1, -1, -1):
            tail[b] = tail[b + 1] + lengths[b]
        with nogil:
            result = _place(0, 0, n, nblocks, cperm, cvalues, lengths, offsets, tail, chosen)
        return result
    finally:
        free(buf)


cdef struct FillState:
    int ncells
    int* cell_col
    int* cell_row
    int* last
    unsigned long long* masks


cdef void _fill(FillState* st, int idx, unsigned long long left_ones, int col_one, list out):
    cdef int c, r
    if idx == st.ncells:
        out.append(tuple([st.masks[i] for i in range(st.cell_row[st.ncells])]))
        return
    c = st.cell_col[idx]
    r = st.cell_row[idx]
    if r == 0:
        col_one = 0
    if not (col_one and (left_ones >> r) & 1) and not (st.last[idx] and not col_one):
        _fill(st, idx + 1, left_ones, col_one, out)
    st.masks[r] |= (<unsigned long long> 1) << c
    _fill(st, idx + 1, left_ones | ((<unsigned long long> 1) << r), 1, out)
    st.masks[r] &= ~((<unsigned long long> 1) << c)


def shape_fillings(row_lengths):
    cdef int rows = len(row_lengths)
    cdef int cols = row_lengths[0] if rows else 0
    cdef int c, r, h, idx
    cdef FillState st
    if rows > 64 or cols > 64:
        raise ValueError("shapes wider or taller than 64 are not supported")
    heights = [sum(1 for x in row_lengths if x > c) for c in range(cols)]
    st.ncells = sum(heights)
    # cell_row[ncells] stores the row count for the output tuple
    st.cell_col = <int*> malloc((st.ncells + 1) * sizeof(int))
    st.cell_row = <int*> malloc((st.ncells + 1) * sizeof(int))
    st.last = <int*> malloc((st.ncells + 1) * sizeof(int))
    st.masks = <unsigned long long*> malloc((rows + 1) * sizeof(unsigned long long))
    if st.cell_col == NULL or st.cell_row == NULL or st.last == NULL or st.masks == NULL:
        free(st.cell_col); free(st.cell_row); free(st.last); free(st.masks)
        raise MemoryError()
    out = []
    try:
        idx = 0
        for c in range(cols):
            h = heights[c]
            for r in range(h):
                st.cell_col[idx] = c
                st.cell_row[idx] = r
                st.last[idx] = 1 if r == h - 1 else 0
                idx += 1
        st.cell_row[st.ncells] = rows
        for r in range(rows):
            st.masks[r] = 0
        _fill(&st, 0, 0, 0, out)
        return out
    finally:
        free(st.cell_col)
        free(st.cell_row)
        free(st.last)
        free(st.masks)
