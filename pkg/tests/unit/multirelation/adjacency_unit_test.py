import numpy as np
import pytest

from qmultigraph.algebra import AlgebraMap, BlockAlgebra
from qmultigraph.channel import is_cp
from qmultigraph.confusability import confusability_multigraph
from qmultigraph.multirelation import (
    ClassicalMultiRelation,
    adjacency_multi,
    adjacency_trace_distance,
    adjacency_trace_relation,
    adjacency_underlying,
    adjacency_weighted,
    contract,
    from_classical,
    schur_defect,
    schur_idempotent_check,
)
from qmultigraph.testing import (
    counting_channel,
    generator,
    random_algebra_pair,
    random_multirelation,
)


class TestContract:
    def test__contract__of_identity_indicator(self):
        # given
        x = np.array([[1, 2], [3, 4]])

        # when
        result = contract(np.eye(4), x)

        # then
        assert np.allclose(result, np.trace(x) * np.eye(2))


class TestAdjacency:
    def test__adjacency_weighted__counts_parallel_edges(self):
        # given
        v = confusability_multigraph(counting_channel()).as_multirelation()

        # when
        weighted = adjacency_weighted(v)

        # then
        assert np.allclose(weighted.matrix.T, [[1, 1], [1, 2]])

    def test__adjacency_weighted__orientation_of_directed_edges(self):
        # given
        r = ClassicalMultiRelation.of(2, 2, [(0, 1, 0), (0, 1, 1), (0, 0, 0)])

        # when
        weighted = adjacency_weighted(from_classical(r))

        # then
        assert np.allclose(weighted.matrix, [[1, 0], [2, 0]])
        assert np.allclose(weighted.matrix.T, r.edge_counts())
        assert np.allclose(weighted(np.diag([1, 0])), np.diag([1, 2]))
        assert np.allclose(weighted(np.diag([0, 1])), 0)

    def test__adjacency_underlying__is_schur_idempotent(self):
        # given
        v = confusability_multigraph(counting_channel()).as_multirelation()

        # when
        underlying = adjacency_underlying(v)

        # then
        assert np.allclose(underlying.matrix.T, [[1, 1], [1, 1]])
        assert schur_idempotent_check(underlying)

    def test__adjacency_weighted__is_not_schur_idempotent_with_parallel_edges(self):
        # given
        v = from_classical(ClassicalMultiRelation.of(1, 2, [(0, 0, 0), (0, 0, 1)]))

        # when
        weighted = adjacency_weighted(v)

        # then
        assert schur_defect(weighted) == pytest.approx(2)
        assert not schur_idempotent_check(weighted)

    def test__adjacency__of_random_relations(self):
        # given
        rng = generator(0)

        for _ in range(3):
            m_alg, n_alg = random_algebra_pair(rng, 2)
            v = random_multirelation(rng, m_alg, n_alg)

            # when
            multi = adjacency_multi(v)
            weighted = adjacency_weighted(v)
            underlying = adjacency_underlying(v)

            # then
            assert is_cp(multi)
            assert is_cp(weighted)
            assert is_cp(underlying)
            assert schur_idempotent_check(multi)
            assert schur_idempotent_check(underlying)
            assert adjacency_trace_relation(v)

    def test__adjacency_trace_distance__classical_relation(self):
        # given
        r = ClassicalMultiRelation.of(2, 2, [(0, 1, 0), (1, 0, 0), (1, 1, 1)])

        # then
        assert adjacency_trace_distance(from_classical(r)) < 1e-12

    def test__schur_defect__of_identity(self):
        # then
        assert schur_defect(AlgebraMap.identity(BlockAlgebra.full(2))) > 0
