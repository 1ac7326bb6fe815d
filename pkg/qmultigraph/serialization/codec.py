"""
JSON encoding of matrices, channels, multi-relations and reports.

Complex numbers are written as ``[re, im]`` pairs. Floats are written with Python's
shortest round-trip representation, so every value reads back bit for bit. Documents
are emitted with sorted keys, which makes identical inputs produce identical bytes.
"""

import json
import math
from numbers import Real
from typing import Any, Dict, List, Tuple, Union

import numpy as np

from qmultigraph.algebra import AlgebraMap, BlockAlgebra
from qmultigraph.channel import ChannelMap, classical_channel, make_channel
from qmultigraph.errors import (
    ArgumentError,
    ChannelValidationError,
    DimensionError,
    SchemaError,
)
from qmultigraph.tensor import OperatorSubspace

Document = Dict[str, Any]


def encode_complex(z: complex) -> List[float]:
    z = complex(z)
    return [float(z.real), float(z.imag)]


def encode_matrix(matrix: np.ndarray) -> List[List[List[float]]]:
    matrix = np.asarray(matrix, dtype=complex)
    return [[encode_complex(z) for z in row] for row in matrix]


def _decode_entry(value: Any, path: str) -> complex:
    if isinstance(value, bool):
        raise SchemaError(path, "booleans are not numbers")
    if isinstance(value, Real):
        number = complex(float(value), 0.0)
    elif (
        isinstance(value, list)
        and len(value) == 2
        and all(isinstance(v, Real) and not isinstance(v, bool) for v in value)
    ):
        number = complex(float(value[0]), float(value[1]))
    else:
        raise SchemaError(path, "expected a number or a [re, im] pair")
    if not (math.isfinite(number.real) and math.isfinite(number.imag)):
        raise SchemaError(path, "entries must be finite")
    return number


def decode_matrix(value: Any, path: str = "matrix") -> np.ndarray:
    """
    Reads a matrix given as a list of rows whose entries are real numbers or
    ``[re, im]`` pairs.

    Raises :class:`SchemaError <qmultigraph.errors.SchemaError>` for ragged rows,
    empty matrices and non-numeric or non-finite entries.
    """
    if not isinstance(value, list) or not value:
        raise SchemaError(path, "expected a non-empty list of rows")
    rows = []
    for r, row in enumerate(value):
        if not isinstance(row, list) or not row:
            raise SchemaError(f"{path}[{r}]", "expected a non-empty row")
        rows.append([_decode_entry(v, f"{path}[{r}][{c}]") for c, v in enumerate(row)])
    if len({len(row) for row in rows}) != 1:
        raise SchemaError(path, "rows have different lengths")
    return np.array(rows, dtype=complex)


def _field(document: Document, name: str, path: str = "") -> Any:
    if not isinstance(document, dict):
        raise SchemaError(path or "$", "expected an object")
    if name not in document:
        raise SchemaError(f"{path}{name}", "missing field")
    return document[name]


def _integer(value: Any, path: str, minimum: int = 0) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < minimum:
        raise SchemaError(path, f"expected an integer >= {minimum}")
    return value


def decode_blocks(value: Any, path: str) -> BlockAlgebra:
    if not isinstance(value, list) or not value:
        raise SchemaError(path, "expected a non-empty list of block dimensions")
    dims = [_integer(d, f"{path}[{n}]", minimum=1) for n, d in enumerate(value)]
    return BlockAlgebra(tuple(dims))


def encode_blocks(alg: BlockAlgebra) -> List[int]:
    return list(alg.block_dims)


def is_classical_document(document: Document) -> bool:
    return isinstance(document, dict) and "p" in document


def load_classical(document: Document) -> np.ndarray:
    """
    Reads ``{"inputs": |X|, "outputs": |Y|, "p": [[...]]}`` with ``p[y][x] = p(y|x)``
    into a real ``|Y| x |X|`` array.
    """
    inputs = _integer(_field(document, "inputs"), "inputs", minimum=1)
    outputs = _integer(_field(document, "outputs"), "outputs", minimum=1)
    p = decode_matrix(_field(document, "p"), "p")
    if p.shape != (outputs, inputs):
        raise SchemaError("p", f"expected shape {(outputs, inputs)}, got {p.shape}")
    if np.any(p.imag != 0):
        raise SchemaError("p", "transition probabilities must be real")
    if np.any(p.real < 0):
        raise SchemaError("p", "transition probabilities must be non-negative")
    return p.real.copy()


def load_channel(
    document: Document, *, allow_substochastic: bool = True
) -> Union[ChannelMap, AlgebraMap]:
    """
    Reads a map from one of three documents:

    - the Kraus schema ``{"input_blocks", "output_blocks", "kraus": [{"out_block",
      "matrix"}]}``, matrices block-local or embedded;
    - the classical schema ``{"inputs", "outputs", "p"}``;
    - the unit-image schema ``{"input_blocks", "output_blocks", "unit_images":
      [{"block", "i", "j", "matrix"}]}`` for maps known only through the images of
      the matrix units, returned as an
      :class:`AlgebraMap <qmultigraph.algebra.AlgebraMap>`.

    Raises :class:`SchemaError <qmultigraph.errors.SchemaError>` for any malformed
    document, including Kraus operators that are not in block form.

    :param document: parsed JSON document.
    :param allow_substochastic: (optional) accept classical matrices whose columns sum
            to less than one. Defaults to True.
    """
    if is_classical_document(document):
        try:
            return classical_channel(
                load_classical(document), allow_substochastic=allow_substochastic
            )
        except ChannelValidationError as e:
            raise SchemaError("p", str(e))
    in_alg = decode_blocks(_field(document, "input_blocks"), "input_blocks")
    out_alg = decode_blocks(_field(document, "output_blocks"), "output_blocks")
    if "unit_images" in document:
        return _load_unit_images(document["unit_images"], in_alg, out_alg)
    entries = _field(document, "kraus")
    if not isinstance(entries, list):
        raise SchemaError("kraus", "expected a list")
    kraus = []
    for n, entry in enumerate(entries):
        path = f"kraus[{n}]."
        out_block = _integer(_field(entry, "out_block", path), f"{path}out_block")
        matrix = decode_matrix(_field(entry, "matrix", path), f"{path}matrix")
        kraus.append((out_block, matrix))
    try:
        return make_channel(in_alg, out_alg, kraus)
    except ChannelValidationError as e:
        raise SchemaError(f"kraus[{e.kraus_index}]", e.reason)


def _load_unit_images(
    entries: Any, in_alg: BlockAlgebra, out_alg: BlockAlgebra
) -> AlgebraMap:
    if not isinstance(entries, list):
        raise SchemaError("unit_images", "expected a list")
    images = {}
    for n, entry in enumerate(entries):
        path = f"unit_images[{n}]."
        key = tuple(
            _integer(_field(entry, name, path), f"{path}{name}")
            for name in ("block", "i", "j")
        )
        matrix = decode_matrix(_field(entry, "matrix", path), f"{path}matrix")
        if key in images:
            raise SchemaError(f"{path}block", f"unit {key} given twice")
        images[key] = matrix
    try:
        return AlgebraMap(in_alg, out_alg, images)
    except (ArgumentError, DimensionError) as e:
        raise SchemaError("unit_images", str(e))


def load_relation(
    document: Document,
) -> Tuple[BlockAlgebra, BlockAlgebra, List[np.ndarray]]:
    """
    Reads ``{"m_blocks", "n_blocks", "basis": [matrix, ...]}`` with matrices on
    ``H ⊗ K``. The basis is returned unverified.
    """
    m_alg = decode_blocks(_field(document, "m_blocks"), "m_blocks")
    n_alg = decode_blocks(_field(document, "n_blocks"), "n_blocks")
    entries = _field(document, "basis")
    if not isinstance(entries, list):
        raise SchemaError("basis", "expected a list of matrices")
    size = m_alg.total_dim * n_alg.total_dim
    basis = []
    for n, entry in enumerate(entries):
        matrix = decode_matrix(entry, f"basis[{n}]")
        if matrix.shape != (size, size):
            raise SchemaError(
                f"basis[{n}]", f"expected shape {(size, size)}, got {matrix.shape}"
            )
        basis.append(matrix)
    return m_alg, n_alg, basis


def dump_channel(phi: ChannelMap) -> Document:
    """
    Kraus-schema document of a map, with embedded Kraus matrices.
    """
    return {
        "input_blocks": encode_blocks(phi.in_alg),
        "output_blocks": encode_blocks(phi.out_alg),
        "kraus": [
            {"out_block": k.out_block, "matrix": encode_matrix(k.matrix)}
            for k in phi.kraus
        ],
    }


def dump_relation(
    m_alg: BlockAlgebra, n_alg: BlockAlgebra, subspace: OperatorSubspace
) -> Document:
    return {
        "m_blocks": encode_blocks(m_alg),
        "n_blocks": encode_blocks(n_alg),
        "basis": [encode_matrix(g) for g in subspace.basis],
    }


def dump_subspace(subspace: OperatorSubspace) -> Document:
    return {
        "shape": list(subspace.shape),
        "dim": subspace.dim,
        "basis": [encode_matrix(g) for g in subspace.basis],
    }


def dump_report(report: Document) -> str:
    """
    Deterministic JSON text of a report: sorted keys, two-space indentation and a
    trailing newline.
    """
    return json.dumps(_plain(report), sort_keys=True, indent=2) + "\n"


def parse_document(text: str, source: str = "$") -> Document:
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemaError(source, f"invalid JSON: {e.msg} at line {e.lineno}")
    if not isinstance(document, dict):
        raise SchemaError(source, "expected a JSON object")
    return document


def _plain(value: Any) -> Any:
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, np.ndarray):
        return _plain(value.tolist())
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return float(value)
    if isinstance(value, (complex, np.complexfloating)):
        return encode_complex(value)
    return value
