import numpy as np
import pytest

from qmultigraph.algebra import BlockAlgebra
from qmultigraph.channel import (
    adjoint_map,
    classical_channel,
    is_trace_preserving,
    kraus_sectors,
    kraus_space,
    make_channel,
    mix_kraus,
    output_block_component,
)
from qmultigraph.errors import ArgumentError
from qmultigraph.tensor import hs_inner
from qmultigraph.testing import (
    amplitude_damping,
    generator,
    random_complex,
    random_isometry,
    random_isometry_channel,
    transpose_map,
)


class TestIsTracePreserving:
    def test__is_trace_preserving__random_isometry_channel(self):
        # given
        rng = generator(0)
        phi = random_isometry_channel(rng, BlockAlgebra.of(2, 1), BlockAlgebra.of(1, 1))

        # then
        assert is_trace_preserving(phi)

    def test__is_trace_preserving__of_unit_images(self):
        # then
        assert is_trace_preserving(transpose_map(2))

    def test__is_trace_preserving__scaled_map(self):
        # given
        m2 = BlockAlgebra.full(2)
        phi = make_channel(m2, m2, [(0, 0.5 * np.eye(2))])

        # then
        assert not is_trace_preserving(phi)


class TestAdjointMap:
    def test__adjoint_map__defining_identity(self):
        # given
        rng = generator(1)
        phi = amplitude_damping(0.3)
        x = random_complex(rng, 2, 2)
        y = random_complex(rng, 2, 2)

        # then
        assert hs_inner(adjoint_map(phi)(y), x) == pytest.approx(hs_inner(y, phi(x)))

    def test__adjoint_map__is_unital_for_channels(self):
        # then
        assert np.allclose(adjoint_map(amplitude_damping(0.3))(np.eye(2)), np.eye(2))


class TestKrausSpace:
    def test__kraus_space__dimension(self):
        # then
        assert kraus_space(amplitude_damping(0.5)).dim == 2
        assert kraus_space(classical_channel([[1.0, 0.5], [0.0, 0.5]])).dim == 3


class TestOutputBlockComponent:
    def test__output_block_component__sums_to_the_map(self):
        # given
        phi = classical_channel([[1.0, 0.5], [0.0, 0.5]])
        x = np.diag([0.25, 0.75])

        # when
        parts = [output_block_component(phi, b) for b in range(2)]

        # then
        assert [p.num_kraus for p in parts] == [2, 1]
        assert np.allclose(parts[0](x) + parts[1](x), phi(x))

    def test__output_block_component__unknown_block(self):
        # then
        with pytest.raises(ArgumentError):
            output_block_component(amplitude_damping(0.5), 1)


class TestMixKraus:
    def test__mix_kraus__keeps_the_map(self):
        # given
        rng = generator(2)
        phi = amplitude_damping(0.4)
        u = random_isometry(rng, 3, 2)

        # when
        mixed = mix_kraus(phi, {(0, 0): u})

        # then
        assert mixed.unit_images.distance(phi.unit_images) < 1e-10

    def test__mix_kraus__keeps_sectors(self):
        # given
        phi = classical_channel([[1.0, 0.5], [0.0, 0.5]])

        # when
        mixed = mix_kraus(phi, {(1, 0): np.array([[1.0]])})

        # then
        assert set(kraus_sectors(mixed)) == set(kraus_sectors(phi))

    def test__mix_kraus__rejects_non_isometry(self):
        # then
        with pytest.raises(ArgumentError):
            mix_kraus(amplitude_damping(0.4), {(0, 0): np.ones((2, 2))})

    def test__mix_kraus__rejects_wrong_column_count(self):
        # then
        with pytest.raises(ArgumentError):
            mix_kraus(amplitude_damping(0.4), {(0, 0): np.eye(3)})
