import numpy as np
import pytest

from orthoseries import (Field, HilbertCollection, MeasureSpace,
                         SystemKind, SystemSpec, generate)


def rng(seed):
    return np.random.Generator(np.random.PCG64(seed))


@pytest.fixture
def std3():
    """Standard basis on 3 atoms, counting measure."""
    return generate(SystemSpec(SystemKind.STANDARD_BASIS, 3))


def random_space(gen, max_atoms=6, max_dim=3, complex_field=False):
    """A random conforming (space, fibers) pair for property tests."""
    m = int(gen.integers(1, max_atoms + 1))
    weights = gen.random(m) * 2.0
    weights[int(gen.integers(0, m))] += 0.5  # keep at least one positive
    dims = gen.integers(1, max_dim + 1, size=m)
    field = Field.COMPLEX if complex_field else Field.REAL
    return MeasureSpace(weights=weights), HilbertCollection(dims=dims, field=field)


def random_element(gen, fibers):
    flat = gen.standard_normal(fibers.total_dim)
    if fibers.field is Field.COMPLEX:
        flat = flat + 1j * gen.standard_normal(fibers.total_dim)
    from orthoseries import DirectIntegralElement
    return DirectIntegralElement(values=flat.astype(fibers.field.dtype),
                                 offsets=fibers.offsets)
