# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
"""Integer row-reduction kernels (compiled backend).

Same algorithms and bit-identical output as ``hada._elim``: a
content-division fast path with a growth guard, falling back to
one-step fraction-free (Bareiss) elimination.  Entries are
arbitrary-precision Python ints, so compilation removes interpreter
and indexing overhead while the bignum arithmetic stays in CPython.
"""

from math import gcd

BACKEND_NAME = "cython"


cdef list _primitive_rows(rows):
    cdef list out = []
    cdef list row
    for source in rows:
        row = list(source)
        g = 0
        for x in row:
            if x:
                g = gcd(g, x)
                if g == 1:
                    break
        if g > 1:
            row = [x // g for x in row]
        out.append(row)
    return out


cdef void _reduce_row(list row, Py_ssize_t ncols):
    cdef Py_ssize_t j
    g = 0
    for j in range(ncols):
        x = row[j]
        if x:
            g = gcd(g, x)
            if g == 1:
                return
    if g > 1:
        for j in range(ncols):
            row[j] = row[j] // g


cdef long _growth_limit(list m, Py_ssize_t ncols):
    cdef long maxbits = 1, b
    cdef list row
    for row in m:
        for x in row:
            if x:
                b = x.bit_length()
                if b > maxbits:
                    maxbits = b
    cdef long steps = min(len(m), ncols)
    cdef long colbits = (<object>ncols).bit_length()
    return 2 * steps * (maxbits + colbits + 2) + 64


cdef bint _row_within(list row, Py_ssize_t ncols, long limit):
    cdef Py_ssize_t j
    for j in range(ncols):
        x = row[j]
        if x and x.bit_length() > limit:
            return False
    return True


cdef Py_ssize_t _rank_gcd(list m, Py_ssize_t ncols, long limit):
    cdef Py_ssize_t nrows = len(m)
    cdef Py_ssize_t r = 0, c, i, j, piv
    cdef list row_r, row_i
    for c in range(ncols):
        piv = -1
        for i in range(r, nrows):
            if (<list>m[i])[c]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        row_r = <list>m[r]
        p = row_r[c]
        for i in range(r + 1, nrows):
            row_i = <list>m[i]
            q = row_i[c]
            if q:
                for j in range(c, ncols):
                    row_i[j] = row_i[j] * p - q * row_r[j]
                _reduce_row(row_i, ncols)
                if not _row_within(row_i, ncols, limit):
                    return -1
        r += 1
        if r == nrows:
            break
    return r


cdef Py_ssize_t _rank_bareiss_impl(list m, Py_ssize_t ncols):
    cdef Py_ssize_t nrows = len(m)
    cdef Py_ssize_t r = 0, c, i, j, piv
    cdef list row_r, row_i
    prev = 1
    for c in range(ncols):
        piv = -1
        for i in range(r, nrows):
            if (<list>m[i])[c]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        row_r = <list>m[r]
        p = row_r[c]
        for i in range(r + 1, nrows):
            row_i = <list>m[i]
            q = row_i[c]
            if q:
                for j in range(c, ncols):
                    row_i[j] = (row_i[j] * p - q * row_r[j]) // prev
            elif p != prev:
                # zero-multiplier rows still need the generation
                # scaling or later divisions stop being exact
                for j in range(c, ncols):
                    row_i[j] = row_i[j] * p // prev
        prev = p
        r += 1
        if r == nrows:
            break
    return r


def rank(rows, ncols):
    """Rank of an integer matrix, by fraction-free elimination."""
    cdef Py_ssize_t nc = ncols
    cdef list m = _primitive_rows(rows)
    cdef Py_ssize_t result = _rank_gcd(
        [list(row) for row in m], nc, _growth_limit(m, nc)
    )
    if result >= 0:
        return result
    return _rank_bareiss_impl(m, nc)


cdef tuple _rref_gcd(list m, Py_ssize_t ncols, long limit):
    cdef Py_ssize_t nrows = len(m)
    cdef list pivots = []
    cdef Py_ssize_t r = 0, c, i, j, piv
    cdef list row_r, row_i
    for c in range(ncols):
        piv = -1
        for i in range(r, nrows):
            if (<list>m[i])[c]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        row_r = <list>m[r]
        if row_r[c] < 0:
            for j in range(ncols):
                row_r[j] = -row_r[j]
        p = row_r[c]
        for i in range(nrows):
            if i == r:
                continue
            row_i = <list>m[i]
            q = row_i[c]
            if q:
                if p == 1:
                    for j in range(ncols):
                        row_i[j] = row_i[j] - q * row_r[j]
                else:
                    for j in range(ncols):
                        row_i[j] = row_i[j] * p - q * row_r[j]
                _reduce_row(row_i, ncols)
                if not _row_within(row_i, ncols, limit):
                    return None
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return r, pivots, m


cdef tuple _rref_bareiss_impl(list m, Py_ssize_t ncols):
    cdef Py_ssize_t nrows = len(m)
    cdef list pivots = []
    cdef Py_ssize_t r = 0, c, i, j, piv
    cdef list row_r, row_i
    prev = 1
    for c in range(ncols):
        piv = -1
        for i in range(r, nrows):
            if (<list>m[i])[c]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        row_r = <list>m[r]
        p = row_r[c]
        for i in range(nrows):
            if i == r:
                continue
            row_i = <list>m[i]
            q = row_i[c]
            if q:
                for j in range(ncols):
                    row_i[j] = (row_i[j] * p - q * row_r[j]) // prev
            elif p != prev:
                for j in range(ncols):
                    row_i[j] = row_i[j] * p // prev
        prev = p
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return r, pivots, m


cdef list _canonical_rows(list m, list pivots, Py_ssize_t r, Py_ssize_t ncols):
    cdef list reduced = []
    cdef list row
    cdef Py_ssize_t i
    for i in range(r):
        row = <list>m[i]
        g = 0
        for x in row:
            if x:
                g = gcd(g, x)
                if g == 1:
                    break
        if g > 1:
            row = [x // g for x in row]
        if row[<Py_ssize_t>pivots[i]] < 0:
            row = [-x for x in row]
        reduced.append(tuple(row))
    return reduced


def rref(rows, ncols):
    """Primitive-integer reduced row echelon form; see the pure
    backend for the full contract."""
    cdef Py_ssize_t nc = ncols
    cdef list m = _primitive_rows(rows)
    attempt = _rref_gcd([list(row) for row in m], nc, _growth_limit(m, nc))
    if attempt is None:
        attempt = _rref_bareiss_impl(m, nc)
    r, pivots, work = attempt
    return r, pivots, _canonical_rows(work, pivots, r, nc)


def nullspace(rows, ncols):
    """Primitive integer basis of the right kernel; see the pure
    backend for the ordering and sign conventions."""
    cdef Py_ssize_t nc = ncols
    rk, pivots, red = rref(rows, nc)
    cdef set pivot_set = set(pivots)
    cdef list basis = []
    cdef Py_ssize_t i, f
    cdef Py_ssize_t nred = len(red)
    lcm_piv = 1
    for i in range(nred):
        p = red[i][pivots[i]]
        lcm_piv = lcm_piv * p // gcd(lcm_piv, p)
    cdef list v
    for f in range(nc):
        if f in pivot_set:
            continue
        v = [0] * nc
        v[f] = lcm_piv
        for i in range(nred):
            entry = red[i][f]
            if entry:
                v[pivots[i]] = -entry * (lcm_piv // red[i][pivots[i]])
        g = 0
        for x in v:
            if x:
                g = gcd(g, x)
        if g > 1:
            v = [x // g for x in v]
        basis.append(tuple(v))
    return basis


def det(rows):
    """Determinant of a square integer matrix (Bareiss elimination)."""
    cdef list m = [list(row) for row in rows]
    cdef Py_ssize_t n = len(m)
    if n == 0:
        return 1
    cdef int sign = 1
    cdef Py_ssize_t i, j, k, piv
    cdef list row_i, row_k
    prev = 1
    for k in range(n - 1):
        if (<list>m[k])[k] == 0:
            piv = -1
            for i in range(k + 1, n):
                if (<list>m[i])[k]:
                    piv = i
                    break
            if piv < 0:
                return 0
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        row_k = <list>m[k]
        pk = row_k[k]
        for i in range(k + 1, n):
            row_i = <list>m[i]
            mik = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pk - mik * row_k[j]) // prev
            row_i[k] = 0
        prev = pk
    return sign * (<list>m[n - 1])[n - 1]
