import math

import numpy as np
import pytest

from orthoseries import (DirectIntegralElement, Field, HilbertCollection,
                         MeasureSpace, StructuralError, SystemKind,
                         SystemSpec, generate, gram_matrix, inner_product,
                         norm, validate_ons)

from conftest import random_element, random_space, rng


def oracle_inner(weights, f_blocks, g_blocks):
    """Independent inner product: plain per-atom loops, fsum at the end."""
    parts = []
    for w, fb, gb in zip(weights, f_blocks, g_blocks):
        parts.append(w * sum(x * np.conj(y) for x, y in zip(fb, gb)))
    return sum(parts)


def element(blocks, field=Field.REAL):
    return DirectIntegralElement.from_blocks(blocks, field=field)


def pair(weights, dims, field=Field.REAL):
    return (MeasureSpace(weights=np.asarray(weights, dtype=float)),
            HilbertCollection(dims=np.asarray(dims, dtype=np.int64), field=field))


class TestInnerProduct:
    def test_zero_element(self):
        space, fibers = pair([1.0, 1.0], [1, 1])
        z = DirectIntegralElement.zero(fibers)
        assert inner_product(z, z, space, fibers) == 0.0

    def test_disjoint_supports(self):
        space, fibers = pair([1.0, 1.0], [1, 1])
        f = element([[3.0], [0.0]])
        g = element([[0.0], [4.0]])
        assert inner_product(f, g, space, fibers) == 0.0

    def test_weighted_mixed_dims(self):
        # by hand: 2*(1*1) + 0.5*(2*0 + 0*2) = 2
        space, fibers = pair([2.0, 0.5], [1, 2])
        f = element([[1.0], [2.0, 0.0]])
        g = element([[1.0], [0.0, 2.0]])
        assert inner_product(f, g, space, fibers) == 2.0

    def test_matches_oracle_on_random_pairs(self):
        gen = rng(101)
        for trial in range(200):
            space, fibers = random_space(gen, complex_field=bool(trial % 2))
            f = random_element(gen, fibers)
            g = random_element(gen, fibers)
            got = inner_product(f, g, space, fibers)
            want = oracle_inner(space.weights, f.blocks, g.blocks)
            assert got == pytest.approx(want, rel=1e-12, abs=1e-14)

    def test_conjugate_symmetry(self):
        gen = rng(7)
        for _ in range(50):
            space, fibers = random_space(gen, complex_field=True)
            f = random_element(gen, fibers)
            g = random_element(gen, fibers)
            assert inner_product(f, g, space, fibers) == pytest.approx(
                np.conj(inner_product(g, f, space, fibers)), rel=1e-13, abs=1e-15)

    def test_self_inner_product_real_nonnegative(self):
        gen = rng(8)
        for _ in range(50):
            space, fibers = random_space(gen, complex_field=True)
            f = random_element(gen, fibers)
            val = inner_product(f, f, space, fibers)
            assert val.imag == 0.0
            assert val.real >= 0.0

    def test_shape_mismatch_names_atom(self):
        space, fibers = pair([1.0, 1.0], [1, 2])
        f = element([[1.0], [1.0]])  # atom 1 has length 1, needs 2
        with pytest.raises(StructuralError, match="atom 1"):
            inner_product(f, f, space, fibers)

    def test_cauchy_schwarz(self):
        gen = rng(55)
        for trial in range(300):
            space, fibers = random_space(gen, complex_field=bool(trial % 3 == 0))
            f = random_element(gen, fibers)
            g = random_element(gen, fibers)
            lhs = abs(inner_product(f, g, space, fibers))
            rhs = norm(f, space, fibers) * norm(g, space, fibers)
            assert lhs <= rhs * (1 + 1e-12) + 1e-300


class TestNorm:
    def test_zero(self):
        space, fibers = pair([1.0], [2])
        assert norm(DirectIntegralElement.zero(fibers), space, fibers) == 0.0

    def test_three_four_five(self):
        space, fibers = pair([1.0, 1.0], [1, 1])
        assert norm(element([[3.0], [4.0]]), space, fibers) == 5.0

    def test_weighted(self):
        space, fibers = pair([4.0], [1])
        assert norm(element([[1.0]]), space, fibers) == 2.0

    def test_zero_weight_atoms_are_ignored(self):
        # mass sits only on atom 0; a nonzero block on the null atom is invisible
        space, fibers = pair([1.0, 0.0], [1, 1])
        f = element([[3.0], [7.0]])
        assert norm(f, space, fibers) == 3.0
        zero_on_support = element([[0.0], [9.0]])
        assert norm(zero_on_support, space, fibers) == 0.0


class TestGram:
    def test_standard_basis_identity(self, std3):
        space, fibers, system = std3
        rep = gram_matrix(system, space, fibers)
        assert np.array_equal(rep.gram, np.eye(3))
        assert rep.riesz_lower == pytest.approx(1.0, abs=1e-12)
        assert rep.riesz_upper == pytest.approx(1.0, abs=1e-12)

    def test_scaled_single_vector(self):
        space, fibers = pair([1.0], [1])
        rep = gram_matrix([element([[2.0]])], space, fibers)
        assert rep.gram[0][0] == 4.0
        assert rep.riesz_lower == pytest.approx(4.0, abs=1e-12)
        assert rep.riesz_upper == pytest.approx(4.0, abs=1e-12)

    def test_two_by_two_hand_eigenvalues(self):
        # gram [[1, c], [c, 1]] has eigenvalues 1 -+ c with c = 1/sqrt(2)
        space, fibers = pair([1.0, 1.0], [1, 1])
        c = 1.0 / math.sqrt(2.0)
        phi1 = element([[1.0], [0.0]])
        phi2 = element([[c], [c]])
        rep = gram_matrix([phi1, phi2], space, fibers)
        assert rep.gram[0][1] == pytest.approx(c, rel=1e-15)
        assert rep.riesz_lower == pytest.approx(1.0 - c, rel=1e-12)
        assert rep.riesz_upper == pytest.approx(1.0 + c, rel=1e-12)

    def test_empty_system_rejected(self):
        space, fibers = pair([1.0], [1])
        with pytest.raises(StructuralError):
            gram_matrix([], space, fibers)

    def test_large_system_iterative_bounds(self):
        # above the dense-eigendecomposition limit the Lanczos path runs
        spec = SystemSpec(SystemKind.STANDARD_BASIS, 600)
        space, fibers, system = generate(spec)
        rep = gram_matrix(system, space, fibers)
        assert rep.riesz_lower == pytest.approx(1.0, abs=1e-9)
        assert rep.riesz_upper == pytest.approx(1.0, abs=1e-9)


class TestValidateOns:
    def test_exact_basis(self, std3):
        space, fibers, system = std3
        ok, rep = validate_ons(system, space, fibers, tol=1e-12)
        assert ok
        assert rep.max_offdiag_abs == 0.0

    def test_oblique_pair_fails(self):
        space, fibers = pair([1.0, 1.0], [1, 1])
        c = 1.0 / math.sqrt(2.0)
        ok, rep = validate_ons([element([[1.0], [0.0]]), element([[c], [c]])],
                               space, fibers, tol=1e-12)
        assert not ok
        assert rep.max_offdiag_abs == pytest.approx(c, rel=1e-15)

    def test_random_qr_system(self):
        space, fibers, system = generate(
            SystemSpec(SystemKind.RANDOM_QR, 8, resolution=16, fiber_dim=2, seed=42))
        ok, _ = validate_ons(system, space, fibers, tol=1e-10)
        assert ok

    def test_bad_tolerance(self, std3):
        space, fibers, system = std3
        with pytest.raises(ValueError):
            validate_ons(system, space, fibers, tol=0.0)


class TestParseval:
    def test_on_validated_systems(self):
        gen = rng(13)
        for trial in range(40):
            spec = SystemSpec(SystemKind.RANDOM_QR, int(gen.integers(1, 20)),
                              resolution=8, fiber_dim=4, seed=trial,
                              field=Field.COMPLEX if trial % 2 else Field.REAL)
            space, fibers, system = generate(spec)
            b = gen.standard_normal(len(system))
            if fibers.field is Field.COMPLEX:
                b = b + 1j * gen.standard_normal(len(system))
            combo = b.astype(system.values.dtype) @ system.values
            el = DirectIntegralElement(values=combo, offsets=fibers.offsets)
            lhs = norm(el, space, fibers) ** 2
            rhs = float(np.sum(np.abs(b) ** 2))
            assert lhs == pytest.approx(rhs, rel=1e-10)


class TestRieszBoundsOfValidatedSystems:
    def test_within_1e9_of_one(self):
        # spectrum bounds of any validated system sit at 1 to within 1e-9
        # (absolute, on the unit-diagonal Gram)
        for trial in range(10):
            spec = SystemSpec(SystemKind.RANDOM_QR, 12, resolution=6,
                              fiber_dim=3, seed=trial)
            space, fibers, system = generate(spec)
            ok, rep = validate_ons(system, space, fibers, tol=1e-10)
            assert ok
            assert abs(rep.riesz_lower - 1.0) <= 1e-9
            assert abs(rep.riesz_upper - 1.0) <= 1e-9


class TestInvariantsOfTypes:
    def test_weights_must_be_nonnegative(self):
        with pytest.raises(StructuralError):
            MeasureSpace(weights=np.array([1.0, -0.5]))

    def test_some_mass_required(self):
        with pytest.raises(StructuralError):
            MeasureSpace(weights=np.zeros(3))

    def test_dims_positive(self):
        with pytest.raises(StructuralError, match="atom 1"):
            HilbertCollection(dims=np.array([1, 0]))

    def test_complex_element_in_real_collection(self):
        space, fibers = pair([1.0], [1])
        f = element([[1.0 + 1j]], field=Field.COMPLEX)
        with pytest.raises(StructuralError):
            f.conform(space, fibers)

    def test_arrays_are_readonly(self, std3):
        space, fibers, system = std3
        with pytest.raises(ValueError):
            system.values[0, 0] = 5.0
        with pytest.raises(ValueError):
            space.weights[0] = 2.0

    def test_blocks_roundtrip(self):
        f = element([[1.0], [2.0, 3.0]])
        assert [list(b) for b in f.blocks] == [[1.0], [2.0, 3.0]]
        assert f.n_atoms == 2
