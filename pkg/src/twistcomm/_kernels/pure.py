"""Pure-Python fallback for the hot table kernels.

Same signatures and return conventions as the compiled module
``twistcomm._kernels._core``; used when the extension is unavailable or when
``TWISTCOMM_BACKEND=python`` is set.  The quadratic scans lean on numpy; the
worklist loops are plain Python since their cost is proportional to the size
of the generated set, not the ambient group.
"""

from __future__ import annotations

import numpy as np

BACKEND_NAME = "python"


def first_nonassociative(mul: np.ndarray):
    """First triple (a,b,c) with (a*b)*c != a*(b*c), or None."""
    n = mul.shape[0]
    for a in range(n):
        left = mul[mul[a], :]  # [b,c] -> mul[mul[a,b], c]
        right = mul[a, mul]  # [b,c] -> mul[a, mul[b,c]]
        if not np.array_equal(left, right):
            b, c = np.argwhere(left != right)[0]
            return (a, int(b), int(c))
    return None


def closure(mul: np.ndarray, seed) -> list[int]:
    """Sorted element list of the subgroup generated by ``seed``."""
    n = mul.shape[0]
    member = bytearray(n)
    member[0] = 1
    queue = [0]
    gens = [int(g) for g in seed]
    head = 0
    while head < len(queue):
        row = mul[queue[head]]
        head += 1
        for g in gens:
            b = int(row[g])
            if not member[b]:
                member[b] = 1
                queue.append(b)
    return [i for i in range(n) if member[i]]


def product_closure_fiber(
    mul_a: np.ndarray, mul_y: np.ndarray, gens_a, gens_y
) -> tuple[list[int], int]:
    """Close {(a_i, y_i)} inside A x Y; return (sorted fiber over 0_A, |closure|).

    States are packed a*|Y| + y; the product group is never materialised.
    """
    ny = mul_y.shape[0]
    pairs = list(zip([int(a) for a in gens_a], [int(y) for y in gens_y]))
    seen = {0}
    queue = [0]
    head = 0
    while head < len(queue):
        st = queue[head]
        head += 1
        a, y = divmod(st, ny)
        row_a = mul_a[a]
        row_y = mul_y[y]
        for ga, gy in pairs:
            nxt = int(row_a[ga]) * ny + int(row_y[gy])
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    fiber = sorted(st for st in seen if st < ny)
    return fiber, len(seen)


def forced_extension(
    mul_src: np.ndarray, mul_dst: np.ndarray, gens, imgs
) -> tuple[int, list[int]]:
    """Propagate phi(0)=0 along phi(a*g) := phi(a)*img(g).

    Returns (status, phi): status 0 = total map, 1 = conflict, 2 = the
    generators do not reach every element (phi has -1 holes).
    """
    n = mul_src.shape[0]
    phi = [-1] * n
    phi[0] = 0
    queue = [0]
    head = 0
    edges = list(zip([int(g) for g in gens], [int(h) for h in imgs]))
    while head < len(queue):
        a = queue[head]
        head += 1
        pa = phi[a]
        row_src = mul_src[a]
        row_dst = mul_dst[pa]
        for g, h in edges:
            a2 = int(row_src[g])
            y2 = int(row_dst[h])
            if phi[a2] < 0:
                phi[a2] = y2
                queue.append(a2)
            elif phi[a2] != y2:
                return 1, phi
    if len(queue) < n:
        return 2, phi
    return 0, phi


def hom_violation(mul_src: np.ndarray, mul_dst: np.ndarray, phi: np.ndarray):
    """First pair (a,b) with phi(a*b) != phi(a)*phi(b), or None."""
    lhs = phi[mul_src]
    rhs = mul_dst[phi[:, None], phi[None, :]]
    if np.array_equal(lhs, rhs):
        return None
    a, b = np.argwhere(lhs != rhs)[0]
    return (int(a), int(b))
