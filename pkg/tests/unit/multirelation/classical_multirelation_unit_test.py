import numpy as np
import pytest

from qmultigraph.algebra import BlockAlgebra
from qmultigraph.errors import ArgumentError, UnsupportedCaseError
from qmultigraph.multirelation import (
    ClassicalMultiRelation,
    from_classical,
    make_multirelation,
    to_classical,
    verify_multirelation,
)
from qmultigraph.testing import entangled_relation, generator, random_classical_relation


class TestClassicalMultiRelation:
    def test__init__with_vertex_out_of_range(self):
        # then
        with pytest.raises(ArgumentError):
            ClassicalMultiRelation.of(2, 1, [(0, 2, 0)])

    def test__init__with_label_out_of_range(self):
        # then
        with pytest.raises(ArgumentError):
            ClassicalMultiRelation.of(2, 1, [(0, 1, 1)])

    def test__edge_counts__parallel_edges(self):
        # given
        r = ClassicalMultiRelation.of(2, 2, [(1, 1, 0), (1, 1, 1), (0, 1, 0)])

        # then
        assert np.array_equal(r.edge_counts(), [[0, 1], [0, 2]])
        assert len(r) == 3


class TestFromClassical:
    def test__from_classical__is_valid(self):
        # given
        r = ClassicalMultiRelation.of(2, 2, [(0, 1, 0), (1, 0, 1), (1, 1, 1)])

        # when
        v = from_classical(r)

        # then
        assert v.dim == 3
        assert verify_multirelation(v.m_alg, v.n_alg, v.subspace).valid

    def test__to_classical__inverts_from_classical(self):
        # given
        rng = generator(0)

        for _ in range(10):
            r = random_classical_relation(rng)

            # when
            back = to_classical(from_classical(r))

            # then
            assert back == r

    def test__from_classical__inverts_to_classical(self):
        # given
        diag = BlockAlgebra.diagonal(2)
        units = np.eye(16).reshape(16, 4, 4)
        v = make_multirelation(diag, diag, [units[0], 3 * units[5], units[13]])

        # when
        back = from_classical(to_classical(v))

        # then
        assert back.subspace.equals(v.subspace)

    def test__to_classical__of_empty_relation(self):
        # when
        r = to_classical(from_classical(ClassicalMultiRelation.of(2, 3, [])))

        # then
        assert r.triples == frozenset()
        assert (r.x_size, r.y_size) == (2, 3)

    def test__to_classical__needs_diagonal_algebras(self):
        # then
        with pytest.raises(UnsupportedCaseError):
            to_classical(entangled_relation())
