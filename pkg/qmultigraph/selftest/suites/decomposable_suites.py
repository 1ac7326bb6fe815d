from qmultigraph.channel import is_cp
from qmultigraph.decomposable import (
    Decomposition,
    adjacency_composition_distance,
    component_indicators,
    is_symmetric_decomposition,
    roundtrip_verify,
    synthesize_channel,
    transitivity_check,
    try_decompose,
)
from qmultigraph.multirelation import is_symmetric
from qmultigraph.selftest.selftest_suite_decorator import selftest_suite
from qmultigraph.selftest.suite_context import SuiteContext
from qmultigraph.tolerances import current_tolerances


@selftest_suite(group="decomposable", order=10)
def decomposable_properties(context: SuiteContext):
    """
    Symmetric decomposable relations: the decomposition reproduces ``V``, symmetry
    agrees with ``V1 = V2*``, ``V² ⊆ V``, the indicators factor through the flip and
    the weighted adjacency is the composition of the component adjacencies. Relations
    built from two independent factors decompose too, and are symmetric exactly when
    their decomposition is.
    """
    reconstruction = current_tolerances().reconstruction
    for n, v in enumerate(context.fixture("decomposable_relations")):
        d = try_decompose(v)
        context.check(isinstance(d, Decomposition), "decomposable", relation=n)
        context.check(
            d.reconstructed().equals(v.subspace), "reconstruction", relation=n
        )
        context.check(
            is_symmetric(v) and is_symmetric_decomposition(d),
            "symmetry",
            relation=n,
        )
        context.check(transitivity_check(v), "transitivity", relation=n)
        distance = component_indicators(d).factorization_distance
        context.check(
            distance <= reconstruction,
            "indicator factorization",
            relation=n,
            distance=distance,
        )
        distance = adjacency_composition_distance(d)
        context.check(
            distance <= reconstruction,
            "adjacency composition",
            relation=n,
            distance=distance,
        )
    asymmetric = 0
    for n, v in enumerate(context.fixture("asymmetric_decomposable_relations")):
        d = try_decompose(v)
        context.check(
            isinstance(d, Decomposition), "two-factor decomposable", relation=n
        )
        symmetric = is_symmetric_decomposition(d)
        context.check(symmetric == is_symmetric(v), "two-factor symmetry", relation=n)
        asymmetric += not symmetric
    context.check(asymmetric > 0, "asymmetric coverage", count=asymmetric)


@selftest_suite(group="decomposable", order=11)
def synthesis_roundtrip(context: SuiteContext):
    """
    The map synthesized from a symmetric decomposable relation is CP and its
    multigraph is the relation. Families are built only once the suite reaches them.
    """
    tolerance = current_tolerances().subspace_equality
    families = (
        ("decomposable", context.fixture("decomposable_relations", lazy=True)),
        ("channel multigraph", context.fixture("channel_multigraphs", lazy=True)),
    )
    for family, relations in families:
        for n, v in enumerate(relations):
            report = roundtrip_verify(v)
            context.check(
                report.passed and report.projector_distance < tolerance,
                "roundtrip",
                family=family,
                relation=n,
                distance=report.projector_distance,
            )
            context.check(
                is_cp(synthesize_channel(v)),
                "synthesized map is cp",
                family=family,
                relation=n,
            )
