import numpy as np

from qmultigraph.algebra import BlockAlgebra
from qmultigraph.decomposable import (
    Decomposition,
    NotDecomposable,
    adjacency_composition_check,
    block_component,
    component_indicators,
    is_symmetric_decomposition,
    sigma_embed,
    transitivity_check,
    try_decompose,
)
from qmultigraph.multirelation import is_symmetric, make_multirelation
from qmultigraph.tensor import OperatorSubspace
from qmultigraph.testing import (
    entangled_relation,
    generator,
    random_algebra_pair,
    random_asymmetric_decomposable_relation,
    random_decomposable_relation,
)


def directed_edge():
    edge = np.zeros((2, 2))
    edge[0, 1] = 1
    return make_multirelation(BlockAlgebra.full(2), BlockAlgebra.full(1), [edge])


class TestTryDecompose:
    def test__try_decompose__entangled_relation(self):
        # when
        result = try_decompose(entangled_relation())

        # then
        assert isinstance(result, NotDecomposable)
        assert (result.block, result.dim_v, result.dim_v1, result.dim_v2) == (0, 1, 2, 2)

    def test__try_decompose__random_decomposable_relations(self):
        # given
        rng = generator(0)

        for _ in range(5):
            m_alg, n_alg = random_algebra_pair(rng, 3)
            v = random_decomposable_relation(rng, m_alg, n_alg)

            # when
            d = try_decompose(v)

            # then
            assert isinstance(d, Decomposition)
            assert d.reconstructed().equals(v.subspace)
            assert is_symmetric_decomposition(d)
            assert is_symmetric(v)
            assert transitivity_check(v)
            assert component_indicators(d).factorization_distance < 1e-8
            assert adjacency_composition_check(d)

    def test__try_decompose__non_symmetric_relation(self):
        # when
        d = try_decompose(directed_edge())

        # then
        assert isinstance(d, Decomposition)
        assert [(b.dim_v, b.v1.dim, b.v2.dim) for b in d.per_block] == [(1, 1, 1)]
        assert not is_symmetric_decomposition(d)

    def test__try_decompose__zero_relation(self):
        # given
        m_alg = BlockAlgebra.of(2, 1)
        n_alg = BlockAlgebra.of(1, 1)
        v = make_multirelation(m_alg, n_alg, OperatorSubspace.zero(6))

        # when
        d = try_decompose(v)

        # then
        assert isinstance(d, Decomposition)
        assert [b.dim_v for b in d.per_block] == [0, 0]
        assert d.reconstructed().dim == 0
        assert is_symmetric_decomposition(d)

    def test__block_component__splits_by_output_block(self):
        # given
        rng = generator(1)
        n_alg = BlockAlgebra.of(1, 2)
        v = random_decomposable_relation(rng, BlockAlgebra.full(2), n_alg)

        # when
        parts = [block_component(v, b) for b in range(n_alg.num_blocks)]

        # then
        assert sum(p.dim for p in parts) == v.dim
        assert parts[0].sum(parts[1]).equals(v.subspace)


class TestSymmetry:
    def test__is_symmetric_decomposition__of_directed_edge(self):
        # given
        v = directed_edge()

        # when
        d = try_decompose(v)

        # then
        assert not is_symmetric_decomposition(d)
        assert not is_symmetric(v)

    def test__is_symmetric_decomposition__of_two_distinct_factors(self):
        # given
        m2 = BlockAlgebra.full(2)
        w1 = OperatorSubspace.from_spanning([np.array([[1, 0], [0, 0]])])
        w2 = OperatorSubspace.from_spanning([np.array([[0, 1], [0, 0]])])
        v = make_multirelation(m2, m2, sigma_embed(w1.adjoint(), w2))

        # when
        d = try_decompose(v)

        # then
        assert isinstance(d, Decomposition)
        assert d.reconstructed().equals(v.subspace)
        assert not d.per_block[0].is_symmetric()
        assert not is_symmetric(v)

    def test__is_symmetric_decomposition__agrees_with_relation_symmetry(self):
        # given
        rng = generator(4)
        asymmetric = 0

        for _ in range(10):
            m_alg, n_alg = random_algebra_pair(rng, 3)
            v = random_asymmetric_decomposable_relation(rng, m_alg, n_alg)

            # when
            d = try_decompose(v)

            # then
            assert isinstance(d, Decomposition)
            assert d.reconstructed().equals(v.subspace)
            assert is_symmetric_decomposition(d) == is_symmetric(v)
            asymmetric += not is_symmetric(v)

        assert asymmetric > 0
