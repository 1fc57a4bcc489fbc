# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the pure-Python kernels.

Signatures, results, and output order match ``_pure.py`` exactly; a
differential test keeps the two backends in lock step.  Permutations are
handled as uint16 image buffers, which caps the supported degree at 65535
(far beyond desk scale).
"""
from cpython.bytes cimport PyBytes_AS_STRING, PyBytes_FromStringAndSize
from libc.stdlib cimport free, malloc

ctypedef unsigned short u16

BACKEND = "cython"

_MAX_DEGREE = 65535


cdef bytes _tuple_to_bytes(seq, Py_ssize_t n, u16 *scratch):
    cdef Py_ssize_t i = 0
    for v in seq:
        scratch[i] = <u16> v
        i += 1
    if i != n:
        raise ValueError("image sequence has wrong length")
    return PyBytes_FromStringAndSize(<char *> scratch, n * sizeof(u16))


cdef tuple _bytes_to_tuple(bytes data, Py_ssize_t n):
    cdef const u16 *p = <const u16 *> PyBytes_AS_STRING(data)
    cdef Py_ssize_t i
    return tuple([p[i] for i in range(n)])


def closure_elements(int degree, generators, long cap):
    """Breadth-first closure of ``generators`` under composition.

    Matches ``_pure.closure_elements``: identity first, each element
    extended by ``e * g`` (apply g first) with generators in given order;
    returns None when the closure would exceed ``cap``.
    """
    if degree > _MAX_DEGREE:
        raise ValueError(f"degree {degree} exceeds the uint16 kernel limit")
    cdef Py_ssize_t n = degree
    cdef Py_ssize_t qi = 0, gi, i, ngens
    cdef u16 *scratch = <u16 *> malloc((n if n else 1) * sizeof(u16))
    cdef const u16 *ep
    cdef const u16 *gp
    cdef bytes ident, e, g, w
    cdef list gen_bytes, queue
    cdef set seen
    if scratch == NULL:
        raise MemoryError()
    try:
        gen_bytes = [_tuple_to_bytes(gen, n, scratch) for gen in generators]
        ngens = len(gen_bytes)
        for i in range(n):
            scratch[i] = <u16> i
        ident = PyBytes_FromStringAndSize(<char *> scratch, n * sizeof(u16))
        seen = {ident}
        queue = [ident]
        while qi < len(queue):
            e = <bytes> queue[qi]
            qi += 1
            ep = <const u16 *> PyBytes_AS_STRING(e)
            for gi in range(ngens):
                g = <bytes> gen_bytes[gi]
                gp = <const u16 *> PyBytes_AS_STRING(g)
                for i in range(n):
                    scratch[i] = ep[gp[i]]
                w = PyBytes_FromStringAndSize(<char *> scratch, n * sizeof(u16))
                if w not in seen:
                    if len(seen) >= cap:
                        return None
                    seen.add(w)
                    queue.append(w)
        return [_bytes_to_tuple(e, n) for e in queue]
    finally:
        free(scratch)


def a1_violations(rows, limit=-1):
    """Triples (x, y, z) violating left self-distributivity; see the pure
    twin for the exact contract."""
    cdef Py_ssize_t n = len(rows)
    cdef Py_ssize_t x, y, z, t
    cdef long lim = limit
    cdef u16 *flat = <u16 *> malloc((n * n if n else 1) * sizeof(u16))
    cdef const u16 *rx
    cdef const u16 *ry
    cdef const u16 *rt
    cdef Py_ssize_t i
    cdef list out = []
    if flat == NULL:
        raise MemoryError()
    if n > _MAX_DEGREE:
        free(flat)
        raise ValueError(f"table size {n} exceeds the uint16 kernel limit")
    try:
        i = 0
        for row in rows:
            for v in row:
                flat[i] = <u16> v
                i += 1
        if i != n * n:
            raise ValueError("table is not square")
        for x in range(n):
            rx = flat + x * n
            for y in range(n):
                ry = flat + y * n
                rt = flat + (<Py_ssize_t> rx[y]) * n
                for z in range(n):
                    if rx[ry[z]] != rt[rx[z]]:
                        out.append((x, y, z))
                        if 0 <= lim <= len(out):
                            return out
        return out
    finally:
        free(flat)


def conjugation_table(elements, int degree):
    """Conjugation operation table of a closed permutation set; see the
    pure twin for the exact contract."""
    if degree > _MAX_DEGREE:
        raise ValueError(f"degree {degree} exceeds the uint16 kernel limit")
    cdef Py_ssize_t n = len(elements)
    cdef Py_ssize_t d = degree
    cdef Py_ssize_t x, y, i
    cdef u16 *scratch = <u16 *> malloc((d if d else 1) * sizeof(u16))
    cdef u16 *inv = <u16 *> malloc((d if d else 1) * sizeof(u16))
    cdef const u16 *exp
    cdef const u16 *eyp
    cdef bytes ex, ey, w
    cdef list elems, table, row
    cdef dict index
    if scratch == NULL or inv == NULL:
        free(scratch)
        free(inv)
        raise MemoryError()
    try:
        elems = [_tuple_to_bytes(e, d, scratch) for e in elements]
        index = {e: i for i, e in enumerate(elems)}
        table = []
        for x in range(n):
            ex = <bytes> elems[x]
            exp = <const u16 *> PyBytes_AS_STRING(ex)
            for i in range(d):
                inv[exp[i]] = <u16> i
            row = []
            for y in range(n):
                ey = <bytes> elems[y]
                eyp = <const u16 *> PyBytes_AS_STRING(ey)
                for i in range(d):
                    scratch[i] = exp[eyp[inv[i]]]
                w = PyBytes_FromStringAndSize(<char *> scratch, d * sizeof(u16))
                found = index.get(w)
                if found is None:
                    return None
                row.append(found)
            table.append(row)
        return table
    finally:
        free(scratch)
        free(inv)
