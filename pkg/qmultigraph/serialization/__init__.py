"""
Reading and writing channels, multi-relations and reports as JSON, and classical
multigraphs as Graphviz DOT.
"""

from qmultigraph.serialization.codec import (
    Document,
    decode_blocks,
    decode_matrix,
    dump_channel,
    dump_relation,
    dump_report,
    dump_subspace,
    encode_blocks,
    encode_complex,
    encode_matrix,
    is_classical_document,
    load_channel,
    load_classical,
    load_relation,
    parse_document,
)
from qmultigraph.serialization.dot import classical_multigraph_to_dot

__all__ = [
    "Document",
    "classical_multigraph_to_dot",
    "decode_blocks",
    "decode_matrix",
    "dump_channel",
    "dump_relation",
    "dump_report",
    "dump_subspace",
    "encode_blocks",
    "encode_complex",
    "encode_matrix",
    "is_classical_document",
    "load_channel",
    "load_classical",
    "load_relation",
    "parse_document",
]
