"""Integer row-reduction kernels (pure Python backend).

Every matrix here is a dense list of rows of Python ints; arbitrary
precision comes for free.  Two elimination strategies are combined:

* the primary path eliminates fraction-free and divides every updated
  row by its content.  On the structured matrices this package
  produces (monomial evaluations, coordinatewise products) the content
  is enormous and entries stay small, but on adversarial dense input
  the growth can be exponential, so the path aborts once an entry
  outgrows a bound derived from the Bareiss minor estimate;
* the fallback is one-step fraction-free (Bareiss) elimination, whose
  entries are minors of the input and hence polynomially sized.

Both paths normalize identically, so results do not depend on the path
taken: the reduced form is the unique primitive-integer RREF with
positive pivots.  The compiled twin (``hada._speedups``) implements
the same functions with bit-identical output and is swapped in
transparently by ``hada.linalg``.
"""

from math import gcd

BACKEND_NAME = "python"


def _primitive_rows(rows):
    out = []
    for row in rows:
        row = list(row)
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


def _reduce_row(row, ncols):
    g = 0
    for j in range(ncols):
        x = row[j]
        if x:
            g = gcd(g, x)
            if g == 1:
                return
    if g > 1:
        for j in range(ncols):
            row[j] //= g


def _growth_limit(m, ncols):
    """Bit size beyond which the content-division path gives up.

    Bareiss intermediates are minors, so their Hadamard bound (with
    slack) separates harmless growth from the exponential regime.
    """
    maxbits = 1
    for row in m:
        for x in row:
            if x:
                b = x.bit_length()
                if b > maxbits:
                    maxbits = b
    steps = min(len(m), ncols)
    return 2 * steps * (maxbits + ncols.bit_length() + 2) + 64


def _row_within(row, ncols, limit):
    for j in range(ncols):
        x = row[j]
        if x and x.bit_length() > limit:
            return False
    return True


def _rank_gcd(m, ncols, limit):
    nrows = len(m)
    r = 0
    for c in range(ncols):
        piv = -1
        for i in range(r, nrows):
            if m[i][c]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        row_r = m[r]
        p = row_r[c]
        for i in range(r + 1, nrows):
            row_i = m[i]
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


def _rank_bareiss(m, ncols):
    nrows = len(m)
    r = 0
    prev = 1
    for c in range(ncols):
        piv = -1
        for i in range(r, nrows):
            if m[i][c]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        row_r = m[r]
        p = row_r[c]
        for i in range(r + 1, nrows):
            row_i = m[i]
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
    m = _primitive_rows(rows)
    result = _rank_gcd([list(r) for r in m], ncols, _growth_limit(m, ncols))
    if result >= 0:
        return result
    return _rank_bareiss(m, ncols)


def _rref_gcd(m, ncols, limit):
    nrows = len(m)
    pivots = []
    r = 0
    for c in range(ncols):
        piv = -1
        for i in range(r, nrows):
            if m[i][c]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        row_r = m[r]
        if row_r[c] < 0:
            for j in range(ncols):
                row_r[j] = -row_r[j]
        p = row_r[c]
        for i in range(nrows):
            if i == r:
                continue
            row_i = m[i]
            q = row_i[c]
            if q:
                if p == 1:
                    for j in range(ncols):
                        row_i[j] -= q * row_r[j]
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


def _rref_bareiss(m, ncols):
    nrows = len(m)
    pivots = []
    r = 0
    prev = 1
    for c in range(ncols):
        piv = -1
        for i in range(r, nrows):
            if m[i][c]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        row_r = m[r]
        p = row_r[c]
        for i in range(nrows):
            if i == r:
                continue
            row_i = m[i]
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


def _canonical_rows(m, pivots, r, ncols):
    reduced = []
    for i in range(r):
        row = m[i]
        g = 0
        for x in row:
            if x:
                g = gcd(g, x)
                if g == 1:
                    break
        if g > 1:
            row = [x // g for x in row]
        if row[pivots[i]] < 0:
            row = [-x for x in row]
        reduced.append(tuple(row))
    return reduced


def rref(rows, ncols):
    """Primitive-integer reduced row echelon form.

    Returns ``(rank, pivots, reduced)`` where ``reduced`` holds the
    nonzero rows as tuples: primitive, positive pivot entry, zeros
    above and below every pivot.
    """
    m = _primitive_rows(rows)
    attempt = _rref_gcd([list(r) for r in m], ncols, _growth_limit(m, ncols))
    if attempt is None:
        attempt = _rref_bareiss(m, ncols)
    r, pivots, work = attempt
    return r, pivots, _canonical_rows(work, pivots, r, ncols)


def nullspace(rows, ncols):
    """Primitive integer basis of the right kernel.

    One basis vector per free column, ordered by free column index;
    the free-column entry of each vector is positive.  An empty matrix
    yields the standard basis.
    """
    rk, pivots, red = rref(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    lcm_piv = 1
    for i in range(rk):
        p = red[i][pivots[i]]
        lcm_piv = lcm_piv * p // gcd(lcm_piv, p)
    for f in range(ncols):
        if f in pivot_set:
            continue
        v = [0] * ncols
        v[f] = lcm_piv
        for i in range(rk):
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
    m = [list(r) for r in rows]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            piv = -1
            for i in range(k + 1, n):
                if m[i][k]:
                    piv = i
                    break
            if piv < 0:
                return 0
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        pk = m[k][k]
        for i in range(k + 1, n):
            row_i = m[i]
            mik = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pk - mik * m[k][j]) // prev
            row_i[k] = 0
        prev = pk
    return sign * m[n - 1][n - 1]
