import json

import numpy as np
import pytest

from qmultigraph.cli import main
from qmultigraph.confusability import confusability_multigraph
from qmultigraph.serialization import dump_channel, dump_relation
from qmultigraph.testing import (
    COUNTING_P,
    amplitude_damping,
    bimodule_violation,
    entangled_relation,
    identity_channel,
)


@pytest.fixture
def write(tmp_path):
    def write_document(document, name="input.json"):
        path = tmp_path / name
        text = document if isinstance(document, str) else json.dumps(document)
        path.write_text(text, encoding="utf-8")
        return str(path)

    return write_document


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    return code, json.loads(out)


def relation_document(v):
    return dump_relation(v.m_alg, v.n_alg, v.subspace)


TRANSPOSE_DOCUMENT = {
    "input_blocks": [2],
    "output_blocks": [2],
    "unit_images": [
        {
            "block": 0,
            "i": i,
            "j": j,
            "matrix": np.eye(2)[:, [j]].dot(np.eye(2)[[i], :]).tolist(),
        }
        for i in range(2)
        for j in range(2)
    ],
}


class TestCheckCp:
    def test__check_cp__identity_channel(self, capsys, write):
        # given
        path = write(dump_channel(identity_channel(2)))

        # when
        code, report = run_json(capsys, "check-cp", "--input", path)

        # then
        assert code == 0
        assert report["cp"] is True
        assert report["trace_preserving"] is True
        assert report["min_choi_eig"] == pytest.approx(0, abs=1e-12)

    def test__check_cp__transpose(self, capsys, write):
        # given
        path = write(TRANSPOSE_DOCUMENT)

        # when
        code, report = run_json(capsys, "check-cp", "--input", path)

        # then
        assert code == 0
        assert report["cp"] is False
        assert report["trace_preserving"] is True
        assert report["min_choi_eig"] == pytest.approx(-1)

    def test__check_cp__substochastic_classical(self, capsys, write):
        # given
        path = write({"inputs": 1, "outputs": 2, "p": [[0.25], [0.25]]})

        # when
        code, report = run_json(capsys, "check-cp", "--input", path)

        # then
        assert code == 0
        assert report["cp"] is True
        assert report["trace_preserving"] is False


class TestMultigraph:
    def test__multigraph__amplitude_damping(self, capsys, write):
        # given
        path = write(dump_channel(amplitude_damping(0.5)))

        # when
        code, report = run_json(capsys, "multigraph", "--input", path)

        # then
        assert code == 0
        assert report["dim"] == 4
        assert report["ambient"] == [2, 2]
        assert report["confusability_graph_dim"] == 4
        assert report["counting_matches_single_edged"] is True
        assert "classical_triples" not in report

    def test__multigraph__classical_document(self, capsys, write):
        # given
        path = write({"inputs": 2, "outputs": 2, "p": [list(r) for r in COUNTING_P]})

        # when
        code, report = run_json(capsys, "multigraph", "--input", path)

        # then
        assert code == 0
        assert len(report["classical_triples"]) == 5

    def test__multigraph__transpose_given_by_unit_images(self, capsys, write):
        # given
        path = write(TRANSPOSE_DOCUMENT)

        # when
        code, _, err = run(capsys, "multigraph", "--input", path)

        # then
        assert code == 2
        assert json.loads(err.splitlines()[-1])["error"] == "NotCompletelyPositiveError"


class TestClassical:
    def test__classical__dot(self, capsys, write):
        # given
        path = write({"inputs": 2, "outputs": 2, "p": [list(r) for r in COUNTING_P]})

        # when
        code, out, _ = run(capsys, "classical", "--input", path, "--format", "dot")

        # then
        assert code == 0
        assert out.startswith("digraph multigraph {\n")
        assert out.count("->") == 5

    def test__classical__uniform_channel(self, capsys, write):
        # given
        path = write({"inputs": 2, "outputs": 2, "p": [[0.5, 0.5], [0.5, 0.5]]})

        # when
        code, report = run_json(capsys, "classical", "--input", path)

        # then
        assert code == 0
        assert len(report["triples"]) == 8
        assert report["edge_counts"] == [[2, 2], [2, 2]]

    def test__classical__quantum_document(self, capsys, write):
        # given
        path = write(dump_channel(identity_channel(2)))

        # when
        code, _, err = run(capsys, "classical", "--input", path)

        # then
        assert code == 2
        assert json.loads(err.splitlines()[-1])["error"] == "SchemaError"


class TestRelation:
    def test__relation__check_bimodule_violation(self, capsys, write):
        # given
        m_alg, n_alg, spanning = bimodule_violation()
        path = write(
            {
                "m_blocks": list(m_alg.block_dims),
                "n_blocks": list(n_alg.block_dims),
                "basis": [g.real.tolist() for g in spanning],
            }
        )

        # when
        code, report = run_json(capsys, "relation", "check", "--input", path)

        # then
        assert code == 0
        assert report["valid"] is False
        assert report["failed_axiom"] == "bimodule"

    def test__relation__zero_relation(self, capsys, write):
        # given
        path = write({"m_blocks": [2], "n_blocks": [1, 1], "basis": []})

        # when
        code, report = run_json(capsys, "relation", "check", "--input", path)

        # then
        assert code == 0
        assert report == {"valid": True, "failed_axiom": None, "dim": 0, "residual": 0.0}

    def test__relation__indicator(self, capsys, write):
        # given
        v = confusability_multigraph(amplitude_damping(0.5)).as_multirelation()
        path = write(relation_document(v))

        # when
        code, report = run_json(capsys, "relation", "indicator", "--input", path)

        # then
        assert code == 0
        assert report["p_v_rank"] == 4
        assert report["s_v_min_eig"] >= -1e-9

    def test__relation__adjacency(self, capsys, write):
        # given
        v = confusability_multigraph(amplitude_damping(0.5)).as_multirelation()
        path = write(relation_document(v))

        # when
        code, report = run_json(capsys, "relation", "adjacency", "--input", path)

        # then
        assert code == 0
        assert report["trace_relation"] is True
        assert report["multi"]["cp"] is True
        assert "schur_idempotent" not in report["weighted"]

    def test__relation__unknown_subcommand(self, capsys, write):
        # given
        path = write({"m_blocks": [1], "n_blocks": [1], "basis": []})

        # then
        with pytest.raises(SystemExit) as e:
            main(["relation", "spectrum", "--input", path])
        assert e.value.code == 2


class TestDecompose:
    def test__decompose__entangled_relation(self, capsys, write):
        # given
        path = write(relation_document(entangled_relation()))

        # when
        code, report = run_json(capsys, "decompose", "--input", path)

        # then
        assert code == 0
        assert report["decomposable"] is False
        assert report["failed_block"] == {
            "block": 0,
            "dim_v": 1,
            "dim_v1": 2,
            "dim_v2": 2,
        }

    def test__decompose__channel_multigraph(self, capsys, write):
        # given
        v = confusability_multigraph(amplitude_damping(0.5)).as_multirelation()
        path = write(relation_document(v))

        # when
        code, report = run_json(capsys, "decompose", "--input", path)

        # then
        assert code == 0
        assert report["decomposable"] is True
        assert report["symmetric"] is True
        assert report["per_block"][0]["dim_v1"] == 2
        assert report["roundtrip"]["pass"] is True

    def test__decompose__zero_relation(self, capsys, write):
        # given
        path = write({"m_blocks": [1], "n_blocks": [1], "basis": []})

        # when
        code, report = run_json(capsys, "decompose", "--input", path)

        # then
        assert code == 0
        assert report["decomposable"] is True
        assert report["roundtrip"]["num_kraus"] == 0


class TestSynthesize:
    def test__synthesize__channel_multigraph(self, capsys, write):
        # given
        v = confusability_multigraph(amplitude_damping(0.3)).as_multirelation()
        path = write(relation_document(v))

        # when
        code, report = run_json(capsys, "synthesize", "--input", path)

        # then
        assert code == 0
        assert report["synthesized"] is True
        assert report["cp"] is True

    def test__synthesize__entangled_relation(self, capsys, write):
        # given
        path = write(relation_document(entangled_relation()))

        # when
        code, report = run_json(capsys, "synthesize", "--input", path)

        # then
        assert code == 0
        assert report["synthesized"] is False
        assert "not decomposable" in report["reason"]

    def test__roundtrip__channel_multigraph(self, capsys, write):
        # given
        v = confusability_multigraph(amplitude_damping(0.3)).as_multirelation()
        path = write(relation_document(v))

        # when
        code, report = run_json(capsys, "roundtrip", "--input", path)

        # then
        assert code == 0
        assert report["passed"] is True
        assert report["dim_v"] == report["dim_multigraph"] == 4


class TestSelftest:
    def test__selftest__channel_group(self, capsys):
        # when
        code, report = run_json(capsys, "selftest", "--seed", "0", "--group", "channel")

        # then
        assert code == 0
        assert report["passed"] is True
        assert report["tolerances"] == {}

    def test__selftest__is_byte_identical(self, capsys):
        # when
        _, first, _ = run(capsys, "selftest", "--group", "confusability")
        _, second, _ = run(capsys, "selftest", "--group", "confusability")

        # then
        assert first == second

    def test__selftest__impossible_psd_tolerance(self, capsys):
        # when
        code, report = run_json(
            capsys, "selftest", "--group", "channel", "--tol", "tol_psd=1e-30"
        )

        # then
        assert code == 1
        assert report["counterexample"]["suite"] == "cp_characterization"
        assert report["tolerances"] == {"psd": 1e-30}


class TestErrors:
    def test__main__invalid_json(self, capsys, write):
        # given
        path = write("{")

        # when
        code, out, err = run(capsys, "check-cp", "--input", path)

        # then
        assert code == 2
        assert out == ""
        assert json.loads(err.splitlines()[-1])["error"] == "SchemaError"

    def test__main__missing_input(self, capsys):
        # when
        code, _, err = run(capsys, "check-cp")

        # then
        assert code == 2
        assert json.loads(err.splitlines()[-1])["error"] == "ArgumentError"

    def test__main__missing_file(self, capsys, tmp_path):
        # when
        code, _, _ = run(capsys, "check-cp", "--input", str(tmp_path / "none.json"))

        # then
        assert code == 2

    def test__main__dot_for_quantum_command(self, capsys, write):
        # given
        path = write(dump_channel(identity_channel(2)))

        # when
        code, out, _ = run(capsys, "multigraph", "--input", path, "--format", "dot")

        # then
        assert code == 2
        assert out == ""

    def test__main__writes_output_file(self, capsys, write, tmp_path):
        # given
        path = write(dump_channel(identity_channel(2)))
        output = tmp_path / "report.json"

        # when
        code, out, _ = run(capsys, "check-cp", "--input", path, "--output", str(output))

        # then
        assert code == 0
        assert out == ""
        assert json.loads(output.read_text())["cp"] is True
