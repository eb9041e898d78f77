import numpy as np
import pytest

from ffdist import make_field, make_point_set

PRIMES_TO_31 = (3, 5, 7, 11, 13, 17, 19, 23, 29, 31)


@pytest.fixture(scope="session")
def contexts():
    """One FieldContext per small prime, shared across the whole run."""
    return {q: make_field(q) for q in PRIMES_TO_31 + (101,)}


def random_set(q, s, size, seed):
    """Uniform duplicate-free set; plain helper for tests."""
    rng = np.random.default_rng(seed)
    flat = rng.choice(q ** s, size=size, replace=False)
    pts = np.stack(np.unravel_index(flat, (q,) * s), axis=1)
    return make_point_set(q, s, pts)
