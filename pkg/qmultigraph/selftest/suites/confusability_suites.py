import numpy as np

from qmultigraph.channel import classical_channel, kraus_sectors, kraus_space, mix_kraus
from qmultigraph.confusability import (
    block_components,
    classical_confusability_multigraph,
    confusability_graph,
    confusability_multigraph,
    count_edges,
    multigraph_expected_dim,
)
from qmultigraph.multirelation import to_classical, verify_multirelation
from qmultigraph.selftest.selftest_suite_decorator import selftest_suite
from qmultigraph.selftest.suite_context import SuiteContext
from qmultigraph.selftest.suites.fixtures import NUM_MULTI_BLOCK_CHANNELS
from qmultigraph.tensor import OperatorSubspace
from qmultigraph.testing import random_isometry, random_kraus_channel, random_stochastic
from qmultigraph.tolerances import current_tolerances

#: Channels and environment re-parameterizations per channel for Kraus independence
NUM_MIXED_CHANNELS = 20
NUM_ISOMETRIES = 3

#: Channels checked against the dimension law, with Kraus ranks cycling through 1..3
NUM_DIMENSION_CHANNELS = 20
MAX_KRAUS_RANK = 3

NUM_CLASSICAL_CHANNELS = 20


@selftest_suite(group="confusability", order=3)
def counting_identity(context: SuiteContext):
    """
    Tracing out the output leg of the multigraph gives the confusability graph, and
    the multigraph is a multi-relation over the input and output algebras. It is
    also the direct sum of the multigraphs of the output-block components.
    """
    tolerance = current_tolerances().subspace_equality
    multi_block = 0
    for n, phi in enumerate(context.fixture("random_channels")):
        multigraph = confusability_multigraph(phi)
        distance = count_edges(multigraph).distance(confusability_graph(phi).subspace)
        context.check(distance < tolerance, "counting", channel=n, distance=distance)
        report = verify_multirelation(phi.in_alg, phi.out_alg, multigraph.subspace)
        context.check(
            report.valid, "multigraph axioms", channel=n, axiom=report.failed_axiom
        )
        parts = [c.subspace.basis for c in block_components(phi)]
        total = OperatorSubspace.from_spanning(
            np.concatenate(parts), multigraph.subspace.shape
        )
        distance = total.distance(multigraph.subspace)
        context.check(
            distance < tolerance, "block decomposition", channel=n, distance=distance
        )
        if phi.in_alg.num_blocks > 1 and phi.out_alg.num_blocks > 1:
            multi_block += 1
    context.check(
        multi_block >= NUM_MULTI_BLOCK_CHANNELS,
        "multi-block coverage",
        count=multi_block,
    )


@selftest_suite(group="confusability", order=4)
def kraus_independence(context: SuiteContext):
    """
    Mixing the Kraus operators of every sector by a random isometry changes neither
    the Kraus space nor the multigraph.
    """
    tolerance = current_tolerances().subspace_equality
    channels = context.fixture("random_channels")[:NUM_MIXED_CHANNELS]
    for n, phi in enumerate(channels):
        reference = confusability_multigraph(phi).subspace
        for t in range(NUM_ISOMETRIES):
            rng = context.rng(20, n, t)
            isometries = {}
            for key, family in kraus_sectors(phi).items():
                rows = len(family) + int(rng.integers(2))
                isometries[key] = random_isometry(rng, rows, len(family))
            mixed = mix_kraus(phi, isometries)
            distance = confusability_multigraph(mixed).subspace.distance(reference)
            context.check(
                distance < tolerance,
                "multigraph independence",
                channel=n,
                isometry=t,
                distance=distance,
            )
            context.check(
                kraus_space(mixed).equals(kraus_space(phi)),
                "kraus space independence",
                channel=n,
                isometry=t,
            )


@selftest_suite(group="confusability", order=5)
def dimension_law(context: SuiteContext):
    """
    A map between full matrix algebras with a Kraus space of dimension ``r`` has a
    multigraph of dimension ``r²``.
    """
    for n in range(NUM_DIMENSION_CHANNELS):
        rng = context.rng(30, n)
        rank = 1 + n % MAX_KRAUS_RANK
        n_in, n_out = 1, 1
        while n_in * n_out < rank:
            n_in, n_out = (int(d) for d in rng.integers(1, 4, size=2))
        phi = random_kraus_channel(rng, n_in, n_out, rank)
        dim = confusability_multigraph(phi).dim
        context.check(
            dim == rank**2 and multigraph_expected_dim(phi) == rank**2,
            "dimension law",
            channel=n,
            rank=rank,
            dim=dim,
        )


@selftest_suite(group="confusability", order=6)
def classical_multigraphs(context: SuiteContext):
    """
    The multigraph of a classical channel has exactly the edges
    ``p(y|x1) p(y|x2) != 0``.
    """
    for n in range(NUM_CLASSICAL_CHANNELS):
        rng = context.rng(40, n)
        outputs, inputs = (int(d) for d in rng.integers(1, 5, size=2))
        p = random_stochastic(rng, outputs, inputs)
        expected = {
            (x1, x2, y)
            for y in range(outputs)
            for x1 in range(inputs)
            for x2 in range(inputs)
            if p[y, x1] * p[y, x2] != 0
        }
        quantum = confusability_multigraph(classical_channel(p)).as_multirelation()
        found = set(to_classical(quantum).triples)
        context.check(
            found == expected
            and set(classical_confusability_multigraph(p).triples) == expected,
            "classical edges",
            index=n,
            p=np.asarray(p).tolist(),
            missing=sorted(expected - found),
            extra=sorted(found - expected),
        )
