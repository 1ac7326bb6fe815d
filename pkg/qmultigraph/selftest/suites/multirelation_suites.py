import numpy as np

from qmultigraph.channel import is_cp
from qmultigraph.confusability import confusability_multigraph
from qmultigraph.multirelation import (
    adjacency_multi,
    adjacency_trace_distance,
    adjacency_underlying,
    adjacency_weighted,
    commutant_superoperators,
    compute_indicators,
    from_classical,
    schur_idempotent_check,
    to_classical,
    verify_multirelation,
)
from qmultigraph.selftest.selftest_suite_decorator import selftest_suite
from qmultigraph.selftest.suite_context import SuiteContext
from qmultigraph.tensor import min_eigenvalue
from qmultigraph.testing import counting_channel
from qmultigraph.tolerances import current_tolerances

#: Largest accepted ``||P² - P||_F`` for the multi-edge indicator
IDEMPOTENCE_TOLERANCE = 1e-10

#: Largest accepted negative eigenvalue of the weighted edge indicator
POSITIVITY_TOLERANCE = 1e-9


@selftest_suite(group="multirelation", order=7)
def classical_bijection(context: SuiteContext):
    """
    Classical multigraphs and multi-relations over diagonal algebras correspond
    exactly.
    """
    for n, r in enumerate(context.fixture("classical_relations")):
        v = from_classical(r)
        report = verify_multirelation(v.m_alg, v.n_alg, v.subspace)
        context.check(report.valid, "axiom closure", relation=n)
        back = to_classical(v)
        context.check(
            back == r,
            "classical roundtrip",
            relation=n,
            expected=list(r.sorted_triples()),
            found=list(back.sorted_triples()),
        )
        again = from_classical(back)
        context.check(
            again.subspace.distance(v.subspace) == 0.0,
            "quantum roundtrip",
            relation=n,
        )


@selftest_suite(group="multirelation", order=8)
def indicator_properties(context: SuiteContext):
    """
    ``P_V`` is an orthogonal projector commuting with the commutant, and ``S_V`` is
    positive with range the underlying graph.
    """
    for n, v in enumerate(context.fixture("valid_relations")):
        indicators = compute_indicators(v)
        p = indicators.p_v
        defect = float(np.linalg.norm(p @ p - p))
        context.check(
            defect < IDEMPOTENCE_TOLERANCE
            and np.allclose(p, np.conj(p).T, atol=IDEMPOTENCE_TOLERANCE),
            "orthogonal projector",
            relation=n,
            defect=defect,
        )
        worst = max(
            (float(np.linalg.norm(s @ p - p @ s)) for s in commutant_superoperators(v)),
            default=0.0,
        )
        context.check(
            worst <= current_tolerances().axiom,
            "commutant commutation",
            relation=n,
            defect=worst,
        )
        smallest = min_eigenvalue(indicators.s_v) if v.dim else 0.0
        context.check(
            smallest >= -POSITIVITY_TOLERANCE,
            "weighted indicator positivity",
            relation=n,
            min_eigenvalue=smallest,
        )


@selftest_suite(group="multirelation", order=9)
def adjacency_properties(context: SuiteContext):
    """
    The three adjacency operators are CP, the multi and underlying ones are Schur
    idempotent, and tracing out ``L²(N)`` takes the multi-adjacency to the weighted
    one.
    """
    reconstruction = current_tolerances().reconstruction
    for n, v in enumerate(context.fixture("valid_relations")):
        multi = adjacency_multi(v)
        underlying = adjacency_underlying(v)
        for name, adjacency in (
            ("multi", multi),
            ("weighted", adjacency_weighted(v)),
            ("underlying", underlying),
        ):
            context.check(is_cp(adjacency), "adjacency is cp", relation=n, which=name)
        for name, adjacency in (("multi", multi), ("underlying", underlying)):
            context.check(
                schur_idempotent_check(adjacency),
                "schur idempotent",
                relation=n,
                which=name,
            )
        distance = adjacency_trace_distance(v)
        context.check(
            distance <= reconstruction, "trace relation", relation=n, distance=distance
        )
    counting = confusability_multigraph(counting_channel()).as_multirelation()
    weights = adjacency_weighted(counting).matrix.T
    expected = to_classical(counting).edge_counts()
    context.check(
        np.allclose(weights, expected, atol=reconstruction),
        "classical edge counts",
        weights=np.real(weights).tolist(),
        expected=expected.tolist(),
    )
