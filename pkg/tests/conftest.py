import numpy as np
import pytest

from structbe import (
    S0,
    S1,
    S2,
    S3,
    SaddleSystem,
    StructuredGenerator,
    build_circulant,
    build_sym_toeplitz,
    build_toeplitz,
)


def sparse_normal(rng, size, zero_density=0.35):
    v = rng.standard_normal(size)
    v[rng.random(size) < zero_density] = 0.0
    if np.all(v == 0):
        v[0] = 1.0
    return v


def random_block(rng, kind, m, n, zero_density=0.35):
    if kind == "dense":
        return sparse_normal(rng, (m, n), zero_density)
    if kind == "circulant":
        return build_circulant(sparse_normal(rng, n, zero_density))
    if kind == "toeplitz":
        gen = sparse_normal(rng, m + n - 1, zero_density)
        return build_toeplitz(StructuredGenerator("toeplitz", m, n, gen))
    if kind == "symToeplitz":
        return build_sym_toeplitz(sparse_normal(rng, n, zero_density))
    raise ValueError(kind)


_BLOCK_KINDS = {
    S0: ("dense", "dense", "dense"),
    S1: ("circulant", "circulant", "circulant"),
    S2: ("toeplitz", "toeplitz", "toeplitz"),
    S3: ("dense", "symToeplitz", "dense"),
}


def random_system(rng, structure_class, n, m=None):
    """Saddle system whose blocks satisfy the given class's structure."""
    if structure_class in (S1, S3) or m is None:
        m = n
    ka, kb, kc = _BLOCK_KINDS[structure_class]
    return SaddleSystem(
        A=random_block(rng, ka, n, n),
        B=random_block(rng, kb, m, n),
        C=random_block(rng, kc, m, m),
        f=rng.standard_normal(n),
        g=rng.standard_normal(m),
    )


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
