from typing import List

from qmultigraph.multirelation import ClassicalMultiRelation

#: Name of the emitted graph
GRAPH_NAME = "multigraph"


def classical_multigraph_to_dot(r: ClassicalMultiRelation) -> str:
    """
    Graphviz rendering of a classical multigraph: nodes ``x1 .. xn`` and one directed
    edge ``x1 -> x2`` labelled ``y=<label>`` per triple, loops included. Vertices and
    labels are printed 1-based and edges are emitted in lexicographic order of
    ``(x1, x2, y)``.

    Usage::

      >>> from qmultigraph.multirelation import ClassicalMultiRelation
      >>> from qmultigraph.serialization import classical_multigraph_to_dot
      >>> loop = ClassicalMultiRelation.of(1, 1, [(0, 0, 0)])
      >>> print(classical_multigraph_to_dot(loop))
      digraph multigraph {
        x1;
        x1 -> x1 [label="y=1"];
      }
      <BLANKLINE>
    """
    lines: List[str] = [f"digraph {GRAPH_NAME} {{"]
    lines.extend(f"  x{x + 1};" for x in range(r.x_size))
    lines.extend(
        f'  x{x1 + 1} -> x{x2 + 1} [label="y={y + 1}"];'
        for x1, x2, y in r.sorted_triples()
    )
    lines.append("}")
    return "\n".join(lines) + "\n"
