"""Backend parity: the compiled kernels and the pure-Python fallback must
return identical results on identical inputs."""

import numpy as np
import pytest

from twistcomm._kernels import pure
from twistcomm.groups import builtin_group, generating_sequence

try:
    from twistcomm._kernels import _core
except ImportError:
    _core = None

BACKENDS = [pure] if _core is None else [pure, _core]

GROUPS = [
    builtin_group("cyclic", 1),
    builtin_group("cyclic", 6),
    builtin_group("klein4"),
    builtin_group("symmetric", 3),
    builtin_group("quaternion8"),
    builtin_group("dihedral", 6),
]


@pytest.mark.parametrize("backend", BACKENDS, ids=lambda b: b.BACKEND_NAME)
def test_first_nonassociative_accepts_all_groups(backend):
    for g in GROUPS:
        assert backend.first_nonassociative(g.mul) is None


@pytest.mark.parametrize("backend", BACKENDS, ids=lambda b: b.BACKEND_NAME)
def test_first_nonassociative_finds_corruption(backend):
    g = builtin_group("cyclic", 5)
    bad = np.array(g.mul)
    bad[2, 3] = 2  # was 0
    witness = backend.first_nonassociative(bad)
    assert witness is not None
    a, b, c = witness
    assert bad[bad[a, b], c] != bad[a, bad[b, c]]


def _pairs_of_backends():
    if _core is None:
        pytest.skip("compiled backend unavailable")
    return pure, _core


def test_closure_parity():
    py, cc = _pairs_of_backends()
    for g in GROUPS:
        for seed in ([], [g.order - 1], list(generating_sequence(g))):
            arr = np.asarray(seed, dtype=np.int32)
            assert py.closure(g.mul, arr) == cc.closure(g.mul, arr)


def test_product_closure_parity():
    py, cc = _pairs_of_backends()
    s3 = builtin_group("symmetric", 3)
    q8 = builtin_group("quaternion8")
    ga = np.asarray([1, 3], dtype=np.int32)
    gy = np.asarray([1, 5], dtype=np.int32)
    assert py.product_closure_fiber(s3.mul, q8.mul, ga, gy) == cc.product_closure_fiber(
        s3.mul, q8.mul, ga, gy
    )


def test_forced_extension_and_hom_check_parity():
    py, cc = _pairs_of_backends()
    s3 = builtin_group("symmetric", 3)
    z2 = builtin_group("cyclic", 2)
    gens = np.asarray(generating_sequence(s3), dtype=np.int32)
    for imgs in [(0, 0), (1, 0), (1, 1), (0, 1)]:
        arr = np.asarray(imgs, dtype=np.int32)
        st_py, phi_py = py.forced_extension(s3.mul, z2.mul, gens, arr)
        st_cc, phi_cc = cc.forced_extension(s3.mul, z2.mul, gens, arr)
        assert (st_py, phi_py) == (st_cc, phi_cc)
        if st_py == 0:
            phi = np.asarray(phi_py, dtype=np.int32)
            assert py.hom_violation(s3.mul, z2.mul, phi) == cc.hom_violation(
                s3.mul, z2.mul, phi
            )
