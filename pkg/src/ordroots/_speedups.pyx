# cython: language_level=3
"""Compiled normal-form kernels.

Line-for-line port of ``_pykernels``: the same Euclidean min-pivot
Hermite and Smith reductions over Python ints (kept as objects, so
arbitrary precision is preserved), with C loop counters.  Output must be
bit-identical to the pure-Python twin.
"""


def xgcd(a, b):
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q = a // b
        a, b = b, a - q * b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


cdef void _submul(list dst, list src, object q, Py_ssize_t start):
    cdef Py_ssize_t i, n = len(dst)
    cdef object s
    for i in range(start, n):
        s = src[i]
        if s:
            dst[i] = dst[i] - q * s


def hnf_cols(cols, Py_ssize_t nrows):
    cdef Py_ssize_t ncols = len(cols)
    cdef list m = [list(cc) for cc in cols]
    cdef list u = [[0] * ncols for _ in range(ncols)]
    cdef Py_ssize_t j, r, c, piv, i
    cdef object a, v, q, p, best, av
    cdef bint placed, clear
    cdef list col
    for j in range(ncols):
        u[j][j] = 1
    c = 0
    for r in range(nrows):
        if c == ncols:
            break
        placed = False
        while True:
            piv = -1
            best = 0
            for j in range(c, ncols):
                v = (<list>m[j])[r]
                if v:
                    av = -v if v < 0 else v
                    if piv < 0 or av < best:
                        piv = j
                        best = av
            if piv < 0:
                break
            if piv != c:
                m[c], m[piv] = m[piv], m[c]
                u[c], u[piv] = u[piv], u[c]
            a = (<list>m[c])[r]
            clear = True
            for j in range(c + 1, ncols):
                v = (<list>m[j])[r]
                if v:
                    q = v // a
                    if q:
                        _submul(<list>m[j], <list>m[c], q, r)
                        _submul(<list>u[j], <list>u[c], q, 0)
                    if (<list>m[j])[r]:
                        clear = False
            if clear:
                placed = True
                break
        if not placed:
            continue
        if (<list>m[c])[r] < 0:
            col = <list>m[c]
            for i in range(r, nrows):
                col[i] = -col[i]
            col = <list>u[c]
            for i in range(ncols):
                col[i] = -col[i]
        p = (<list>m[c])[r]
        for j in range(c):
            v = (<list>m[j])[r]
            if v:
                q = v // p
                if q:
                    _submul(<list>m[j], <list>m[c], q, r)
                    _submul(<list>u[j], <list>u[c], q, 0)
        c += 1
    return m, u


cdef void _snf_clear_at(list m, list u, list v, Py_ssize_t t,
                        Py_ssize_t nrows, Py_ssize_t ncols):
    cdef Py_ssize_t i, j, pj, pi
    cdef object a, val, q, s, best, av
    cdef bint clear
    cdef list col
    while True:
        pj = -1
        pi = -1
        best = 0
        for j in range(t, ncols):
            val = (<list>m[j])[t]
            if val:
                av = -val if val < 0 else val
                if pj < 0 or av < best:
                    pj = j
                    pi = t
                    best = av
        for i in range(t + 1, nrows):
            val = (<list>m[t])[i]
            if val:
                av = -val if val < 0 else val
                if pj < 0 or av < best:
                    pj = t
                    pi = i
                    best = av
        if pj < 0:
            return
        if pj != t:
            m[t], m[pj] = m[pj], m[t]
            v[t], v[pj] = v[pj], v[t]
        elif pi != t:
            for j in range(ncols):
                col = <list>m[j]
                col[t], col[pi] = col[pi], col[t]
            for j in range(nrows):
                col = <list>u[j]
                col[t], col[pi] = col[pi], col[t]
        a = (<list>m[t])[t]
        clear = True
        for j in range(t + 1, ncols):
            val = (<list>m[j])[t]
            if val:
                q = val // a
                if q:
                    _submul(<list>m[j], <list>m[t], q, t)
                    _submul(<list>v[j], <list>v[t], q, 0)
                if (<list>m[j])[t]:
                    clear = False
        for i in range(t + 1, nrows):
            val = (<list>m[t])[i]
            if val:
                q = val // a
                if q:
                    for j in range(t, ncols):
                        col = <list>m[j]
                        s = col[t]
                        if s:
                            col[i] = col[i] - q * s
                    for j in range(nrows):
                        col = <list>u[j]
                        s = col[t]
                        if s:
                            col[i] = col[i] - q * s
                if (<list>m[t])[i]:
                    clear = False
        if clear:
            return


def snf_cols(cols, Py_ssize_t nrows):
    cdef Py_ssize_t ncols = len(cols)
    cdef list m = [list(cc) for cc in cols]
    cdef list u = [[0] * nrows for _ in range(nrows)]
    cdef list v = [[0] * ncols for _ in range(ncols)]
    cdef Py_ssize_t j, i, t, j2, i2, rank, guard, r2
    cdef object a, b
    cdef bint changed, found
    cdef list col
    for j in range(nrows):
        u[j][j] = 1
    for j in range(ncols):
        v[j][j] = 1
    rank = 0
    for t in range(min(nrows, ncols)):
        found = False
        j = t
        i = t
        for j in range(t, ncols):
            for i in range(t, nrows):
                if (<list>m[j])[i] != 0:
                    found = True
                    break
            if found:
                break
        if not found:
            break
        if j != t:
            m[t], m[j] = m[j], m[t]
            v[t], v[j] = v[j], v[t]
        if i != t:
            for j2 in range(ncols):
                col = <list>m[j2]
                col[t], col[i] = col[i], col[t]
            for j2 in range(nrows):
                col = <list>u[j2]
                col[t], col[i] = col[i], col[t]
        _snf_clear_at(m, u, v, t, nrows, ncols)
        if (<list>m[t])[t] < 0:
            col = <list>m[t]
            for i2 in range(nrows):
                col[i2] = -col[i2]
            col = <list>v[t]
            for i2 in range(ncols):
                col[i2] = -col[i2]
        rank = t + 1
    guard = rank * rank + 10
    changed = True
    while changed:
        changed = False
        guard -= 1
        if guard < 0:
            raise AssertionError("smith divisibility repair failed to converge")
        for i in range(rank - 1):
            a = (<list>m[i])[i]
            b = (<list>m[i + 1])[i + 1]
            if b % a != 0:
                _submul(<list>m[i], <list>m[i + 1], -1, 0)
                _submul(<list>v[i], <list>v[i + 1], -1, 0)
                _snf_clear_at(m, u, v, i, nrows, ncols)
                if (<list>m[i])[i] < 0:
                    col = <list>m[i]
                    for r2 in range(nrows):
                        col[r2] = -col[r2]
                    col = <list>v[i]
                    for r2 in range(ncols):
                        col[r2] = -col[r2]
                if (<list>m[i + 1])[i + 1] < 0:
                    col = <list>m[i + 1]
                    for r2 in range(nrows):
                        col[r2] = -col[r2]
                    col = <list>v[i + 1]
                    for r2 in range(ncols):
                        col[r2] = -col[r2]
                changed = True
    return m, u, v
