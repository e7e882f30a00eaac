"""Product algebra tests: grids, projectors, trace extraction."""

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from fiberalg.algebra import AlgebraElement, Signature, idempotent_pair, multiply
from fiberalg.tensor import (
    ComponentBasis,
    TensorElement,
    TensorProjector,
    basis_pair,
    diagonal,
    diagonal_projector,
    extract,
    lift_projectors,
    mixed_projector,
    square_embed,
    tensor_identity,
    tensor_multiply,
    tensor_product,
    trace_pairing,
)

C2 = Signature((1,))
D2 = Signature((1, 1))
E2 = Signature((-1,))

coeff = st.floats(-10, 10, allow_nan=False, allow_infinity=False).map(
    lambda v: 0.0 if abs(v) < 1e-100 else v
)


class TestEmbed:
    def test_outer_grid(self):
        x = AlgebraElement(C2, [2.0, 1.0])
        np.testing.assert_array_equal(square_embed(x).grid, [[4.0, 2.0], [2.0, 1.0]])

    def test_two_slot_product_grid(self):
        a = AlgebraElement(C2, [1.0, 2.0])
        b = AlgebraElement(C2, [3.0, 4.0])
        np.testing.assert_array_equal(tensor_product(a, b).grid, [[3.0, 4.0], [6.0, 8.0]])

    def test_ravel_is_row_major(self):
        t = tensor_product(AlgebraElement(C2, [1.0, 2.0]), AlgebraElement(C2, [3.0, 4.0]))
        np.testing.assert_array_equal(t.ravel(), [3.0, 4.0, 6.0, 8.0])

    def test_identity_embeds_to_identity(self):
        one = AlgebraElement.basis(C2, 0)
        assert square_embed(one) == tensor_identity(C2)

    @given(st.lists(coeff, min_size=2, max_size=2))
    def test_swap_symmetry(self, values):
        t = square_embed(AlgebraElement(C2, values))
        assert t == t.transpose()

    @given(st.lists(coeff, min_size=2, max_size=2), coeff)
    def test_scaling_is_quadratic(self, values, alpha):
        x = AlgebraElement(C2, values)
        left = square_embed(alpha * x)
        right = alpha * (alpha * square_embed(x))
        np.testing.assert_allclose(left.grid, right.grid, atol=1e-10)


class TestTensorMultiply:
    def test_diagonal_times_slot(self):
        # (e (x) e)(1 (x) e) = e (x) 1 when e squares to +1
        assert tensor_multiply(diagonal(C2, 1), basis_pair(C2, 0, 1)) == basis_pair(C2, 1, 0)

    def test_identity(self):
        t = square_embed(AlgebraElement(C2, [2.0, 1.0]))
        assert tensor_multiply(tensor_identity(C2), t) == t

    def test_homomorphism_worked_pair(self):
        x = AlgebraElement(C2, [2.0, 1.0])
        u = AlgebraElement(C2, [1.25, 0.75])
        left = tensor_multiply(square_embed(x), square_embed(u))
        right = square_embed(multiply(x, u))
        np.testing.assert_allclose(left.grid, right.grid, atol=1e-12)

    def test_homomorphism_sweep(self):
        rng = np.random.default_rng(2024)
        worst = 0.0
        for _ in range(10000):
            x = AlgebraElement(D2, rng.uniform(-10, 10, 4))
            u = AlgebraElement(D2, rng.uniform(-10, 10, 4))
            left = tensor_multiply(square_embed(x), square_embed(u))
            right = square_embed(multiply(x, u))
            scale = max(1.0, float(np.max(np.abs(right.grid))))
            worst = max(worst, float(np.max(np.abs(left.grid - right.grid))) / scale)
        assert worst <= 1e-12

    def test_slotwise_signs(self):
        # (e1 (x) e1)(e1 (x) 1) = e1^2 (x) e1 = -(1 (x) e1) when e1^2 = -1
        got = tensor_multiply(diagonal(E2, 1), basis_pair(E2, 1, 0))
        assert got == -1 * basis_pair(E2, 0, 1)

    def test_signature_mismatch(self):
        with pytest.raises(ValueError, match="signature mismatch"):
            tensor_multiply(tensor_identity(C2), tensor_identity(E2))

    def test_exact_grid_multiply(self):
        half = Fraction(1, 2)
        grid = np.array(
            [[half, Fraction(0)], [Fraction(0), half]], dtype=object
        )
        t = TensorElement(C2, grid)
        square = tensor_multiply(t, t)
        assert square.exact
        assert square.grid[0][0] == Fraction(1, 2)


class TestExtract:
    def test_embedded_coefficient(self):
        t = square_embed(AlgebraElement(C2, [2.0, 1.0]))
        assert extract(t, 0, 1) == 2.0
        assert extract(t, 1, 1) == 1.0

    def test_identity_coefficient(self):
        assert extract(tensor_identity(C2), 0, 0) == 1.0

    def test_range_check(self):
        with pytest.raises(ValueError, match="out of range"):
            extract(tensor_identity(C2), 2, 0)


class TestProjectors:
    def test_diagonal_projector_idempotent(self):
        for sig in (C2, D2, E2):
            for sign in (+1, -1):
                p = diagonal_projector(sig, 1, sign)
                assert tensor_multiply(p.element, p.element) == p.element

    def test_diagonal_pair_completeness(self):
        plus = diagonal_projector(D2, 1, +1, exact=True)
        minus = diagonal_projector(D2, 1, -1, exact=True)
        assert plus.element + minus.element == tensor_identity(D2, exact=True)
        product = tensor_multiply(plus.element, minus.element)
        assert not np.any(product.grid != 0)

    def test_lifted_pair_idempotent(self):
        plus2, minus2 = idempotent_pair(0b10, D2)
        for p, q in ((plus2, plus2), (plus2, minus2), (minus2, minus2)):
            lifted = lift_projectors(p, q)
            assert isinstance(lifted, TensorProjector)

    def test_embed_splits_through_lifted_projectors(self):
        # (x (x) x)(p (x) p) = (xp) (x) (xp)
        x = AlgebraElement(D2, [2.0, 1.0, 1.0, 0.5])
        plus2, _ = idempotent_pair(0b10, D2)
        left = tensor_multiply(square_embed(x), lift_projectors(plus2, plus2).element)
        right = square_embed(multiply(x, plus2.element))
        np.testing.assert_allclose(left.grid, right.grid, atol=1e-13)

    def test_sector_family_resolves_identity(self):
        plus2, minus2 = idempotent_pair(0b10, D2, exact=True)
        sectors = [
            lift_projectors(plus2, plus2).element,
            mixed_projector(plus2, minus2).element,
            lift_projectors(minus2, minus2).element,
        ]
        total = sectors[0] + sectors[1] + sectors[2]
        assert total == tensor_identity(D2, exact=True)
        for i in range(3):
            for j in range(i + 1, 3):
                product = tensor_multiply(sectors[i], sectors[j])
                assert not np.any(product.grid != 0)

    def test_mixed_projector_is_single_idempotent(self):
        plus2, minus2 = idempotent_pair(0b10, D2)
        q = mixed_projector(plus2, minus2)
        assert tensor_multiply(q.element, q.element) == q.element

    def test_non_idempotent_rejected(self):
        with pytest.raises(ValueError, match="not idempotent"):
            TensorProjector(basis_pair(D2, 0, 1))


class TestTracePairing:
    def test_identity_pairing_reads_scalar_slot(self):
        t = square_embed(AlgebraElement(C2, [2.0, 1.0]))
        assert trace_pairing(tensor_identity(C2), t) == extract(t, 0, 0)

    def test_basis_orthogonality(self):
        for sig in (C2, E2):
            for s in range(sig.dim):
                for t in range(sig.dim):
                    left = basis_pair(sig, s, s)
                    right = basis_pair(sig, t, t)
                    value = trace_pairing(left, right)
                    if s == t:
                        assert value in (1.0, -1.0)
                    else:
                        assert value == 0.0


class TestComponentBasis:
    def test_rejects_non_orthogonal_family(self):
        family = (tensor_identity(D2), diagonal_projector(D2, 1, +1).element)
        with pytest.raises(ValueError, match="not trace-orthogonal"):
            ComponentBasis(D2, ("a", "b"), family)

    def test_rejects_null_tensor(self):
        zero = TensorElement(D2, np.zeros((4, 4)))
        with pytest.raises(ValueError, match="null tensor"):
            ComponentBasis(D2, ("zero",), (zero,))

    def test_recovers_known_combination(self):
        plus = diagonal_projector(C2, 1, +1).element
        minus = diagonal_projector(C2, 1, -1).element
        family = ComponentBasis(C2, ("plus", "minus"), (plus, minus))
        target = 3.0 * plus + (-2.0) * minus
        comps = family.components(target)
        assert comps == {"plus": 3.0, "minus": -2.0}
        assert family.reconstruction_residual(target) == 0.0

    def test_batch_matches_scalar_path(self):
        plus = diagonal_projector(C2, 1, +1).element
        minus = diagonal_projector(C2, 1, -1).element
        family = ComponentBasis(C2, ("plus", "minus"), (plus, minus))
        rng = np.random.default_rng(5)
        x = rng.uniform(-10, 10, (50, 2))
        flats = np.einsum("ni,nj->nij", x, x).reshape(50, 4)
        batch = family.components_batch(flats)
        for row, values in zip(x, batch):
            single = family.components(square_embed(AlgebraElement(C2, row)))
            np.testing.assert_allclose(values, [single["plus"], single["minus"]], atol=1e-13)
