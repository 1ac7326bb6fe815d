"""
Seeded fixture families shared by the built-in suites.
"""

from qmultigraph.confusability import confusability_multigraph
from qmultigraph.selftest.selftest_fixture_decorator import selftest_fixture
from qmultigraph.testing import (
    generator,
    random_algebra_pair,
    random_asymmetric_decomposable_relation,
    random_classical_relation,
    random_decomposable_relation,
    random_isometry_channel,
    random_multirelation,
)

#: Number of random channels, and how many of them have several blocks on both sides
NUM_CHANNELS = 50
NUM_MULTI_BLOCK_CHANNELS = 10

NUM_CLASSICAL_RELATIONS = 100
NUM_VALID_RELATIONS = 30
NUM_DECOMPOSABLE_RELATIONS = 20
NUM_CHANNEL_MULTIGRAPHS = 10
NUM_ASYMMETRIC_RELATIONS = 20

#: Largest total dimension of an algebra in the channel fixtures
CHANNEL_MAX_DIM = 4

#: Largest total dimension of an algebra in the relation fixtures
RELATION_MAX_DIM = 3


@selftest_fixture
def random_channels(seed: int):
    """
    Trace-preserving channels between random algebras; the first ones have at least
    two blocks on each side.
    """
    channels = []
    for n in range(NUM_CHANNELS):
        rng = generator(seed, 1, n)
        min_blocks = 2 if n < NUM_MULTI_BLOCK_CHANNELS else 1
        in_alg, out_alg = random_algebra_pair(rng, CHANNEL_MAX_DIM, min_blocks)
        channels.append(random_isometry_channel(rng, in_alg, out_alg))
    return channels


@selftest_fixture
def classical_relations(seed: int):
    return [
        random_classical_relation(generator(seed, 2, n))
        for n in range(NUM_CLASSICAL_RELATIONS)
    ]


@selftest_fixture
def valid_relations(seed: int):
    relations = []
    for n in range(NUM_VALID_RELATIONS):
        rng = generator(seed, 3, n)
        m_alg, n_alg = random_algebra_pair(rng, RELATION_MAX_DIM)
        relations.append(random_multirelation(rng, m_alg, n_alg))
    return relations


@selftest_fixture
def decomposable_relations(seed: int):
    relations = []
    for n in range(NUM_DECOMPOSABLE_RELATIONS):
        rng = generator(seed, 4, n)
        m_alg, n_alg = random_algebra_pair(rng, RELATION_MAX_DIM)
        relations.append(random_decomposable_relation(rng, m_alg, n_alg))
    return relations


@selftest_fixture
def channel_multigraphs(seed: int):
    relations = []
    for n in range(NUM_CHANNEL_MULTIGRAPHS):
        rng = generator(seed, 5, n)
        in_alg, out_alg = random_algebra_pair(rng, RELATION_MAX_DIM)
        phi = random_isometry_channel(rng, in_alg, out_alg)
        relations.append(confusability_multigraph(phi).as_multirelation())
    return relations


@selftest_fixture
def asymmetric_decomposable_relations(seed: int):
    relations = []
    for n in range(NUM_ASYMMETRIC_RELATIONS):
        rng = generator(seed, 6, n)
        m_alg, n_alg = random_algebra_pair(rng, RELATION_MAX_DIM)
        relations.append(random_asymmetric_decomposable_relation(rng, m_alg, n_alg))
    return relations
