"""
Seeded fixtures for tests and the self-test campaign, and a utility resetting the
suite registry between tests.
"""

from qmultigraph.testing.random_fixtures import (
    COUNTING_P,
    MAX_DIM,
    amplitude_damping,
    bimodule_violation,
    counting_channel,
    entangled_relation,
    generator,
    identity_channel,
    random_algebra_pair,
    random_asymmetric_decomposable_relation,
    random_block_algebra,
    random_classical_relation,
    random_complex,
    random_decomposable_relation,
    random_isometry,
    random_isometry_channel,
    random_kraus_channel,
    random_kraus_family,
    random_multirelation,
    random_stochastic,
    random_unitary_channel,
    transpose_map,
)
from qmultigraph.testing.reset_suite_registry_util import reset_suite_registry

__all__ = [
    "COUNTING_P",
    "MAX_DIM",
    "amplitude_damping",
    "bimodule_violation",
    "counting_channel",
    "entangled_relation",
    "generator",
    "identity_channel",
    "random_algebra_pair",
    "random_asymmetric_decomposable_relation",
    "random_block_algebra",
    "random_classical_relation",
    "random_complex",
    "random_decomposable_relation",
    "random_isometry",
    "random_isometry_channel",
    "random_kraus_channel",
    "random_kraus_family",
    "random_multirelation",
    "random_stochastic",
    "random_unitary_channel",
    "reset_suite_registry",
    "transpose_map",
]
