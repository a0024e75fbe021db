# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled table kernels: associativity scan, subgroup closure, pair closure
with fiber extraction, forced extension of generator images, and the full
homomorphism check.  Mirrors twistcomm._kernels.pure."""

from libc.stdlib cimport calloc, free, malloc

BACKEND_NAME = "c"


def first_nonassociative(const int[:, ::1] mul):
    cdef Py_ssize_t n = mul.shape[0]
    cdef Py_ssize_t a, b, c
    cdef int ab
    cdef Py_ssize_t wa = -1, wb = -1, wc = -1
    with nogil:
        for a in range(n):
            for b in range(n):
                ab = mul[a, b]
                for c in range(n):
                    if mul[ab, c] != mul[a, mul[b, c]]:
                        wa = a; wb = b; wc = c
                        break
                if wa >= 0:
                    break
            if wa >= 0:
                break
    if wa >= 0:
        return (int(wa), int(wb), int(wc))
    return None


def closure(const int[:, ::1] mul, const int[::1] seed):
    cdef Py_ssize_t n = mul.shape[0]
    cdef Py_ssize_t ngen = seed.shape[0]
    cdef char *member = <char *> calloc(n, 1)
    cdef int *queue = <int *> malloc(n * sizeof(int))
    if member == NULL or queue == NULL:
        free(member); free(queue)
        raise MemoryError()
    cdef Py_ssize_t head = 0, tail = 0, i
    cdef int a, b
    with nogil:
        member[0] = 1
        queue[tail] = 0
        tail += 1
        while head < tail:
            a = queue[head]
            head += 1
            for i in range(ngen):
                b = mul[a, seed[i]]
                if not member[b]:
                    member[b] = 1
                    queue[tail] = b
                    tail += 1
    out = [i for i in range(n) if member[i]]
    free(member)
    free(queue)
    return out


def product_closure_fiber(const int[:, ::1] mul_a, const int[:, ::1] mul_y,
                          const int[::1] gens_a, const int[::1] gens_y):
    cdef Py_ssize_t na = mul_a.shape[0]
    cdef Py_ssize_t ny = mul_y.shape[0]
    cdef Py_ssize_t ngen = gens_a.shape[0]
    cdef Py_ssize_t total = na * ny
    cdef char *seen = <char *> calloc(total, 1)
    cdef long *queue = <long *> malloc(total * sizeof(long))
    if seen == NULL or queue == NULL:
        free(seen); free(queue)
        raise MemoryError()
    cdef Py_ssize_t head = 0, tail = 0, i
    cdef long st, nxt
    cdef int a, y
    with nogil:
        seen[0] = 1
        queue[tail] = 0
        tail += 1
        while head < tail:
            st = queue[head]
            head += 1
            a = <int> (st / ny)
            y = <int> (st % ny)
            for i in range(ngen):
                nxt = (<long> mul_a[a, gens_a[i]]) * ny + mul_y[y, gens_y[i]]
                if not seen[nxt]:
                    seen[nxt] = 1
                    queue[tail] = nxt
                    tail += 1
    fiber = [i for i in range(ny) if seen[i]]
    size = int(tail)
    free(seen)
    free(queue)
    return fiber, size


def forced_extension(const int[:, ::1] mul_src, const int[:, ::1] mul_dst,
                     const int[::1] gens, const int[::1] imgs):
    cdef Py_ssize_t n = mul_src.shape[0]
    cdef Py_ssize_t ngen = gens.shape[0]
    cdef int *phi = <int *> malloc(n * sizeof(int))
    cdef int *queue = <int *> malloc(n * sizeof(int))
    if phi == NULL or queue == NULL:
        free(phi); free(queue)
        raise MemoryError()
    cdef Py_ssize_t head = 0, tail = 0, i
    cdef int a, a2, y2, status = 0
    with nogil:
        for i in range(n):
            phi[i] = -1
        phi[0] = 0
        queue[tail] = 0
        tail += 1
        while head < tail:
            a = queue[head]
            head += 1
            for i in range(ngen):
                a2 = mul_src[a, gens[i]]
                y2 = mul_dst[phi[a], imgs[i]]
                if phi[a2] < 0:
                    phi[a2] = y2
                    queue[tail] = a2
                    tail += 1
                elif phi[a2] != y2:
                    status = 1
                    break
            if status:
                break
        if status == 0 and tail < n:
            status = 2
    out = [phi[i] for i in range(n)]
    free(phi)
    free(queue)
    return int(status), out


def hom_violation(const int[:, ::1] mul_src, const int[:, ::1] mul_dst,
                  const int[::1] phi):
    cdef Py_ssize_t n = mul_src.shape[0]
    cdef Py_ssize_t a, b
    cdef Py_ssize_t wa = -1, wb = -1
    with nogil:
        for a in range(n):
            for b in range(n):
                if phi[mul_src[a, b]] != mul_dst[phi[a], phi[b]]:
                    wa = a; wb = b
                    break
            if wa >= 0:
                break
    if wa >= 0:
        return (int(wa), int(wb))
    return None
