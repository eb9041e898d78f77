import cmath

import numpy as np
import pytest

from ffdist import (
    GridFunction,
    Spectrum,
    enumerate_sphere,
    forward_transform,
    inverse_transform,
    make_field,
    norm_squared,
    plancherel_gap,
    sphere_counts,
    sphere_spectrum,
)
from ffdist.errors import CapExceeded


def brute_forward(ctx, values):
    """Independent oracle: the literal O(q^(2s)) double sum."""
    q, s = ctx.q, values.ndim
    out = np.zeros_like(values, dtype=np.complex128)
    for xf in range(q ** s):
        x = np.unravel_index(xf, (q,) * s)
        acc = 0.0 + 0.0j
        for mf in range(q ** s):
            m = np.unravel_index(mf, (q,) * s)
            dot = sum(int(a) * int(b) for a, b in zip(m, x)) % q
            acc += cmath.exp(-2j * cmath.pi * dot / q) * values[m]
        out[x] = acc / q ** s
    return out


def random_grid(q, s, seed, complex_valued=True):
    rng = np.random.default_rng(seed)
    vals = rng.standard_normal((q,) * s)
    if complex_valued:
        vals = vals + 1j * rng.standard_normal((q,) * s)
    return GridFunction(q=q, s=s, values=vals.astype(np.complex128))


class TestNormSquared:
    def test_examples(self, contexts):
        assert norm_squared(contexts[5], (1, 2)) == 0
        assert norm_squared(contexts[3], (0, 0)) == 0
        assert norm_squared(contexts[7], (2, 3, 1)) == 0


class TestForwardTransform:
    def test_point_mass_is_flat(self, contexts):
        for q, s in ((3, 2), (5, 1), (7, 2)):
            vals = np.zeros((q,) * s, dtype=np.complex128)
            vals.flat[0] = 1.0
            F = forward_transform(contexts[q], GridFunction(q=q, s=s, values=vals))
            assert np.allclose(F.values, 1.0 / q ** s, atol=1e-12)

    def test_constant_is_point_mass(self, contexts):
        q, s = 5, 2
        F = forward_transform(contexts[q], GridFunction(
            q=q, s=s, values=np.ones((q,) * s, dtype=np.complex128)))
        expected = np.zeros((q,) * s, dtype=np.complex128)
        expected.flat[0] = 1.0
        assert np.allclose(F.values, expected, atol=1e-12)

    def test_sphere_indicator_mass(self, contexts):
        F = sphere_spectrum(contexts[3], 2, 1, "direct")
        assert F.values[0, 0] == pytest.approx(4 / 9, abs=1e-12)

    @pytest.mark.parametrize("q,s", [(3, 1), (3, 2), (5, 1), (5, 2), (7, 1), (7, 2)])
    def test_matches_literal_double_sum(self, contexts, q, s):
        f = random_grid(q, s, seed=q * 10 + s)
        got = forward_transform(contexts[q], f).values
        want = brute_forward(contexts[q], f.values)
        assert np.max(np.abs(got - want)) <= 1e-10

    def test_rejects_spectrum_input(self, contexts):
        F = forward_transform(contexts[3], random_grid(3, 2, 0))
        with pytest.raises(TypeError):
            forward_transform(contexts[3], F)

    def test_grid_cap(self, contexts):
        f = random_grid(7, 2, 0)
        with pytest.raises(CapExceeded):
            forward_transform(contexts[7], f, grid_cap=10)


class TestInverseTransform:
    @pytest.mark.parametrize("q", (3, 5, 7, 13))
    @pytest.mark.parametrize("s", (1, 2, 3))
    def test_round_trip(self, contexts, q, s):
        f = random_grid(q, s, seed=q + 100 * s)
        back = inverse_transform(contexts[q], forward_transform(contexts[q], f))
        assert np.max(np.abs(back.values - f.values)) <= 1e-9

    def test_round_trip_binary_grid(self, contexts):
        rng = np.random.default_rng(7)
        vals = (rng.random((5, 5)) < 0.5).astype(np.complex128)
        f = GridFunction(q=5, s=2, values=vals)
        back = inverse_transform(contexts[5], forward_transform(contexts[5], f))
        assert np.max(np.abs(back.values - vals)) <= 1e-9

    def test_point_mass_spectrum_gives_constant(self, contexts):
        vals = np.zeros((3, 3), dtype=np.complex128)
        vals[0, 0] = 1.0
        g = inverse_transform(contexts[3], Spectrum(q=3, s=2, values=vals))
        assert np.allclose(g.values, 1.0, atol=1e-12)

    def test_rejects_grid_input(self, contexts):
        with pytest.raises(TypeError):
            inverse_transform(contexts[3], random_grid(3, 2, 0))


class TestPlancherel:
    def test_single_point(self, contexts):
        vals = np.zeros((5, 5), dtype=np.complex128)
        vals[2, 3] = 1.0
        assert plancherel_gap(contexts[5], GridFunction(q=5, s=2, values=vals)) <= 1e-12

    def test_zero_grid(self, contexts):
        f = GridFunction(q=3, s=2, values=np.zeros((3, 3), dtype=np.complex128))
        assert plancherel_gap(contexts[3], f) == 0.0

    @pytest.mark.parametrize("q,s", [(7, 2), (13, 2), (5, 3)])
    def test_random_relative(self, contexts, q, s):
        f = random_grid(q, s, seed=3 * q + s)
        energy = float(np.sum(np.abs(f.values) ** 2)) / q ** s
        assert plancherel_gap(contexts[q], f) <= 1e-9 * max(1.0, energy)


class TestSpheres:
    def test_counts_q3_s2(self, contexts):
        assert sphere_counts(contexts[3], 2).tolist() == [1, 4, 4]

    def test_counts_q5_s2(self, contexts):
        assert sphere_counts(contexts[5], 2).tolist() == [9, 4, 4, 4, 4]

    def test_counts_q3_s1(self, contexts):
        assert sphere_counts(contexts[3], 1).tolist() == [1, 2, 0]

    @pytest.mark.parametrize("q", (3, 5, 7, 13))
    @pytest.mark.parametrize("s", (1, 2, 3))
    def test_partition(self, contexts, q, s):
        assert int(sphere_counts(contexts[q], s).sum()) == q ** s

    def test_enumerate_origin_only(self, contexts):
        sph = enumerate_sphere(contexts[3], 2, 0)
        assert sph.count == 1
        assert sph.points.tolist() == [[0, 0]]

    def test_enumerate_unit_sphere_q3(self, contexts):
        sph = enumerate_sphere(contexts[3], 2, 1)
        assert sph.count == 4
        assert {tuple(p) for p in sph.points.tolist()} == {
            (0, 1), (0, 2), (1, 0), (2, 0)}

    def test_enumerate_isotropic_q5(self, contexts):
        assert enumerate_sphere(contexts[5], 2, 0).count == 9

    @pytest.mark.parametrize("q", (3, 5, 7, 13))
    @pytest.mark.parametrize("s", (1, 2, 3))
    def test_members_satisfy_norm(self, contexts, q, s):
        ctx = contexts[q]
        for r in (0, 1, q - 1):
            sph = enumerate_sphere(ctx, s, r)
            for p in sph.points:
                assert norm_squared(ctx, p) == r % q


class TestSphereSpectrum:
    @pytest.mark.parametrize("q,s", [(3, 2), (5, 2), (7, 2), (13, 2),
                                     (3, 3), (5, 3), (7, 3), (13, 3)])
    def test_modes_agree(self, contexts, q, s):
        ctx = contexts[q]
        for r in range(q):
            d = sphere_spectrum(ctx, s, r, "direct").values
            c = sphere_spectrum(ctx, s, r, "closed_form").values
            assert np.max(np.abs(d - c)) <= 1e-9

    @pytest.mark.parametrize("q", (3, 5, 7, 13))
    @pytest.mark.parametrize("s", (2, 3))
    def test_origin_value_is_density(self, contexts, q, s):
        counts = sphere_counts(contexts[q], s)
        for r in range(q):
            for mode in ("direct", "closed_form"):
                F = sphere_spectrum(contexts[q], s, r, mode)
                assert abs(F.values.flat[0] - counts[r] / q ** s) <= 1e-12

    def test_q7_r3_example(self, contexts):
        d = sphere_spectrum(contexts[7], 2, 3, "direct").values
        c = sphere_spectrum(contexts[7], 2, 3, "closed_form").values
        assert np.max(np.abs(d - c)) <= 1e-9

    def test_unknown_mode(self, contexts):
        with pytest.raises(ValueError):
            sphere_spectrum(contexts[3], 2, 1, "fancy")


class TestDeterminism:
    def test_repeated_transform_bit_identical(self, contexts):
        f = random_grid(13, 2, seed=99)
        a = forward_transform(contexts[13], f).values
        b = forward_transform(contexts[13], f).values
        assert a.tobytes() == b.tobytes()

    def test_fresh_context_bit_identical(self):
        f = random_grid(13, 2, seed=99)
        a = forward_transform(make_field(13), f).values
        b = forward_transform(make_field(13), f).values
        assert a.tobytes() == b.tobytes()
