"""
Command implementations. Each command reads its input, computes a report and returns
the output text together with the exit code.
"""

from pathlib import Path
from typing import Callable, Dict, Tuple

from qmultigraph.algebra import AlgebraMap
from qmultigraph.channel import (
    ChannelMap,
    channel_from_choi,
    check_cp,
    choi,
    is_cp,
    is_trace_preserving,
)
from qmultigraph.cli.run_config import RunConfig
from qmultigraph.confusability import (
    classical_confusability_multigraph,
    confusability_graph,
    confusability_multigraph,
    count_edges,
)
from qmultigraph.decomposable import (
    NotDecomposable,
    is_symmetric_decomposition,
    roundtrip_verify,
    synthesize_channel,
    try_decompose,
)
from qmultigraph.errors import ArgumentError, PreconditionError, SchemaError
from qmultigraph.multirelation import (
    QuantumMultiRelation,
    VerificationReport,
    adjacency_multi,
    adjacency_trace_distance,
    adjacency_underlying,
    adjacency_weighted,
    compute_indicators,
    is_symmetric,
    is_transitive,
    schur_idempotent_check,
    to_classical,
    verify_multirelation,
)
from qmultigraph.selftest import run_selftest
from qmultigraph.serialization import (
    Document,
    classical_multigraph_to_dot,
    dump_channel,
    dump_report,
    dump_subspace,
    encode_matrix,
    is_classical_document,
    load_channel,
    load_classical,
    load_relation,
    parse_document,
)
from qmultigraph.tensor import OperatorSubspace, hermitian_eig
from qmultigraph.tolerances import current_tolerances

#: Exit codes
EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_INPUT_ERROR = 2

Output = Tuple[str, int]


def read_input(config: RunConfig) -> Document:
    if config.input_path is None:
        raise ArgumentError(f"Command '{config.command}' needs --input.")
    path = Path(config.input_path)
    return parse_document(path.read_text(encoding="utf-8"), str(path))


def _json(report: Document, code: int = EXIT_OK) -> Output:
    return dump_report(report), code


def _require_json(config: RunConfig):
    if config.output_format != "json":
        raise ArgumentError(
            f"Command '{config.command}' only writes json, not {config.output_format}."
        )


def cmd_check_cp(config: RunConfig) -> Output:
    _require_json(config)
    phi = load_channel(read_input(config))
    report = check_cp(phi)
    return _json(
        {
            "cp": report.cp,
            "trace_preserving": is_trace_preserving(phi),
            "min_choi_eig": report.min_eigenvalue,
            "star_preserving": report.star_preserving,
        }
    )


def _kraus_form(phi) -> ChannelMap:
    if isinstance(phi, AlgebraMap):
        return channel_from_choi(choi(phi))
    return phi


def cmd_multigraph(config: RunConfig) -> Output:
    _require_json(config)
    document = read_input(config)
    phi = _kraus_form(load_channel(document))
    multigraph = confusability_multigraph(phi)
    graph = confusability_graph(phi).subspace
    distance = count_edges(multigraph).distance(graph)
    report = {
        **dump_subspace(multigraph.subspace),
        "ambient": list(multigraph.legs.dims),
        "confusability_graph_dim": graph.dim,
        "counting_distance": distance,
        "counting_matches_single_edged": distance < graph.equality_tolerance,
    }
    if is_classical_document(document):
        relation = to_classical(multigraph.as_multirelation())
        report["classical_triples"] = [list(t) for t in relation.sorted_triples()]
    return _json(report)


def cmd_classical(config: RunConfig) -> Output:
    document = read_input(config)
    if not is_classical_document(document):
        raise SchemaError("p", "missing field")
    relation = classical_confusability_multigraph(load_classical(document))
    if config.output_format == "dot":
        return classical_multigraph_to_dot(relation), EXIT_OK
    return _json(
        {
            "inputs": relation.x_size,
            "outputs": relation.y_size,
            "triples": [list(t) for t in relation.sorted_triples()],
            "edge_counts": relation.edge_counts().tolist(),
        }
    )


def _verification(report: VerificationReport) -> Document:
    return {
        "valid": report.valid,
        "failed_axiom": report.failed_axiom,
        "dim": report.dim,
        "residual": report.residual,
    }


def _read_relation(config: RunConfig) -> Tuple[VerificationReport, QuantumMultiRelation]:
    m_alg, n_alg, basis = load_relation(read_input(config))
    report = verify_multirelation(m_alg, n_alg, basis)
    relation = None
    if report.valid:
        size = m_alg.total_dim * n_alg.total_dim
        relation = QuantumMultiRelation(
            m_alg, n_alg, OperatorSubspace.from_spanning(basis, (size, size))
        )
    return report, relation


def _relation_check(report: VerificationReport, v: QuantumMultiRelation) -> Document:
    return _verification(report)


def _relation_indicator(report: VerificationReport, v: QuantumMultiRelation) -> Document:
    indicators = compute_indicators(v)
    spectrum = hermitian_eig(indicators.s_v)[0]
    return {
        **_verification(report),
        "underlying_dim": indicators.underlying.dim,
        "p_v_rank": v.dim,
        "s_v_spectrum": [float(x) for x in spectrum],
        "s_v_min_eig": float(spectrum.min(initial=0.0)),
    }


def _adjacency_entry(adjacency: AlgebraMap, schur: bool) -> Document:
    entry = {"matrix": encode_matrix(adjacency.matrix), "cp": is_cp(adjacency)}
    if schur:
        entry["schur_idempotent"] = schur_idempotent_check(adjacency)
    return entry


def _relation_adjacency(report: VerificationReport, v: QuantumMultiRelation) -> Document:
    distance = adjacency_trace_distance(v)
    return {
        **_verification(report),
        "multi": _adjacency_entry(adjacency_multi(v), True),
        "weighted": _adjacency_entry(adjacency_weighted(v), False),
        "underlying": _adjacency_entry(adjacency_underlying(v), True),
        "trace_distance": distance,
        "trace_relation": distance <= current_tolerances().reconstruction,
    }


RELATION_SUBCOMMANDS: Dict[str, Callable] = {
    "check": _relation_check,
    "indicator": _relation_indicator,
    "adjacency": _relation_adjacency,
}


def cmd_relation(config: RunConfig) -> Output:
    """
    Axiom failures are reported with ``valid`` false and exit code 0.
    """
    _require_json(config)
    report, v = _read_relation(config)
    if v is None:
        return _json(_verification(report))
    return _json(RELATION_SUBCOMMANDS[config.subcommand or "check"](report, v))


def _roundtrip(v: QuantumMultiRelation) -> Document:
    try:
        roundtrip = roundtrip_verify(v)
    except PreconditionError as e:
        return {"pass": False, "reason": str(e)}
    return {
        "pass": roundtrip.passed,
        "projector_distance": roundtrip.projector_distance,
        "dim_multigraph": roundtrip.dim_multigraph,
        "num_kraus": roundtrip.num_kraus,
    }


def cmd_decompose(config: RunConfig) -> Output:
    """
    Decomposition report of a relation; a symmetric decomposable relation is also
    synthesized and round-tripped. A failed decomposition names the first block whose
    part is smaller than the product of its marginals.
    """
    _require_json(config)
    report, v = _read_relation(config)
    if v is None:
        return _json(_verification(report))
    decomposition = try_decompose(v)
    if isinstance(decomposition, NotDecomposable):
        return _json(
            {
                **_verification(report),
                "decomposable": False,
                "symmetric": is_symmetric(v),
                "transitive": is_transitive(v),
                "failed_block": {
                    "block": decomposition.block,
                    "dim_v": decomposition.dim_v,
                    "dim_v1": decomposition.dim_v1,
                    "dim_v2": decomposition.dim_v2,
                },
            }
        )
    per_block = [
        {
            "block": b.block,
            "dim_v": b.dim_v,
            "dim_v1": b.v1.dim,
            "dim_v2": b.v2.dim,
            "symmetric": b.is_symmetric(),
        }
        for b in decomposition.per_block
    ]
    document = {
        **_verification(report),
        "decomposable": True,
        "symmetric": is_symmetric_decomposition(decomposition),
        "transitive": is_transitive(v),
        "per_block": per_block,
    }
    if document["symmetric"]:
        document["roundtrip"] = _roundtrip(v)
    return _json(document)


def cmd_synthesize(config: RunConfig) -> Output:
    _require_json(config)
    report, v = _read_relation(config)
    if v is None:
        return _json({**_verification(report), "synthesized": False})
    try:
        phi = synthesize_channel(v)
    except PreconditionError as e:
        return _json(
            {**_verification(report), "synthesized": False, "reason": str(e)}
        )
    return _json(
        {
            **_verification(report),
            "synthesized": True,
            "channel": dump_channel(phi),
            "cp": is_cp(phi),
            "trace_preserving": is_trace_preserving(phi),
        }
    )


def cmd_roundtrip(config: RunConfig) -> Output:
    _require_json(config)
    report, v = _read_relation(config)
    if v is None:
        return _json({**_verification(report), "passed": False})
    try:
        roundtrip = roundtrip_verify(v)
    except PreconditionError as e:
        return _json({**_verification(report), "passed": False, "reason": str(e)})
    return _json(
        {
            **_verification(report),
            "passed": roundtrip.passed,
            "projector_distance": roundtrip.projector_distance,
            "dim_v": roundtrip.dim_v,
            "dim_multigraph": roundtrip.dim_multigraph,
            "num_kraus": roundtrip.num_kraus,
        }
    )


def cmd_selftest(config: RunConfig) -> Output:
    """
    Exit code 0 when every suite passes and 1 otherwise; the first counterexample is
    part of the report.
    """
    _require_json(config)
    report = run_selftest(config.seed, config.groups)
    document = report.to_document()
    document["tolerances"] = config.tolerance_overrides()
    return _json(document, EXIT_OK if report.passed else EXIT_FAILURE)


COMMANDS: Dict[str, Callable[[RunConfig], Output]] = {
    "check-cp": cmd_check_cp,
    "multigraph": cmd_multigraph,
    "classical": cmd_classical,
    "relation": cmd_relation,
    "decompose": cmd_decompose,
    "synthesize": cmd_synthesize,
    "roundtrip": cmd_roundtrip,
    "selftest": cmd_selftest,
}

