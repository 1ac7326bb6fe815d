import numpy as np
import pytest

from qmultigraph.decomposable import sigma, sigma_by_reordering, sigma_embed, unsigma
from qmultigraph.errors import ArgumentError
from qmultigraph.tensor import OperatorSubspace
from qmultigraph.testing import generator, random_complex


class TestSigma:
    def test__sigma__entries(self):
        # given
        rng = generator(0)
        t1 = random_complex(rng, 2, 3)
        t2 = random_complex(rng, 3, 2)

        # when
        flipped = sigma(t1, t2).reshape(2, 3, 2, 3)

        # then
        assert flipped[1, 2, 0, 1] == pytest.approx(t1[1, 2] * t2[1, 0])

    def test__sigma__agrees_with_leg_reordering(self):
        # given
        rng = generator(1)
        t1 = random_complex(rng, 3, 2)
        t2 = random_complex(rng, 2, 3)

        # then
        assert np.allclose(sigma(t1, t2), sigma_by_reordering(t1, t2))

    def test__sigma__of_rank_one_pairs(self):
        # given
        xi, eta = np.array([1, 2j]), np.array([1j, 0, 3])
        xi2, eta2 = np.array([0, 1]), np.array([2, 1, 1j])
        t1 = np.outer(xi, eta)
        t2 = np.outer(eta2, xi2)

        # when
        flipped = sigma(t1, t2)

        # then
        assert np.allclose(flipped, np.kron(np.outer(xi, xi2), np.outer(eta, eta2)))

    def test__sigma__with_incompatible_shapes(self):
        # then
        with pytest.raises(ArgumentError):
            sigma(np.ones((2, 3)), np.ones((2, 3)))

    def test__unsigma__inverts_sigma(self):
        # given
        rng = generator(2)
        t1 = random_complex(rng, 2, 3)
        t2 = random_complex(rng, 3, 2)

        # when
        r = unsigma(sigma(t1, t2), 2, 3)

        # then
        assert np.allclose(r, np.outer(t1.reshape(-1), t2.reshape(-1)))

    def test__sigma_embed__dimension_is_product(self):
        # given
        rng = generator(3)
        v1 = OperatorSubspace.from_spanning(random_complex(rng, 2, 2, 2))
        v2 = OperatorSubspace.from_spanning(random_complex(rng, 3, 2, 2))

        # then
        assert sigma_embed(v1, v2).dim == 6

    def test__sigma_embed__with_incompatible_shapes(self):
        # then
        with pytest.raises(ArgumentError):
            sigma_embed(OperatorSubspace.full(2, 3), OperatorSubspace.full(2, 3))
