import numpy as np
import pytest

from qmultigraph.channel import is_trace_preserving
from qmultigraph.decomposable import NotDecomposable, try_decompose
from qmultigraph.multirelation import verify_multirelation
from qmultigraph.testing import (
    bimodule_violation,
    entangled_relation,
    generator,
    random_block_algebra,
    random_isometry,
    random_isometry_channel,
    random_stochastic,
)


class TestRandomFixtures:
    def test__generator__is_reproducible(self):
        # then
        assert np.array_equal(generator(4, 1, 2).random(3), generator(4, 1, 2).random(3))

    def test__random_isometry__orthonormal_columns(self):
        # when
        v = random_isometry(generator(0), 4, 2)

        # then
        assert np.allclose(v.conj().T @ v, np.eye(2))

    def test__random_isometry__too_few_rows(self):
        with pytest.raises(ValueError):
            random_isometry(generator(0), 1, 2)

    @pytest.mark.parametrize("stream", range(10))
    def test__random_block_algebra__bounds(self, stream):
        # when
        algebra = random_block_algebra(generator(0, stream), max_dim=4, min_blocks=2)

        # then
        assert algebra.num_blocks >= 2
        assert algebra.total_dim <= 4

    def test__random_isometry_channel__trace_preserving(self):
        # given
        rng = generator(1)
        in_alg = random_block_algebra(rng, 3)
        out_alg = random_block_algebra(rng, 3)

        # then
        assert is_trace_preserving(random_isometry_channel(rng, in_alg, out_alg))

    def test__random_stochastic__columns_sum_to_one(self):
        # when
        p = random_stochastic(generator(2), 3, 5, zero_fraction=0.9)

        # then
        assert np.allclose(p.sum(axis=0), 1)
        assert (p >= 0).all()

    def test__entangled_relation__not_decomposable(self):
        # then
        assert isinstance(try_decompose(entangled_relation()), NotDecomposable)

    def test__bimodule_violation__fails_bimodule_axiom(self):
        # when
        report = verify_multirelation(*bimodule_violation())

        # then
        assert not report.valid
        assert report.failed_axiom == "bimodule"
