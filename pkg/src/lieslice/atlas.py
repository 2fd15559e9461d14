"""Atlas export: decomposition classes with their certified closure edges.

Nodes are the enumerated class labels with dimensions; an edge D -> E means
D lies in the closure of E and is certified by the induced-orbit criterion
applied at a canonical representative of D (the natural-slice enumeration
lists exactly the classes whose closure contains D).  Edges across
different semisimple-type contexts that the criterion cannot see are
omitted, so the export is labeled a certified subset of the closure order.
"""

from __future__ import annotations

from .lie_core import LieAlgebraSpec
from .decomp_classes import (
    ClassLabel,
    class_dimension,
    class_representative,
    enumerate_classes,
)
from .slices import natural_slice
from .serialization import emit_label

ORDER_NOTE = "partial order (certified subset)"


def _merge_entry(algebra: LieAlgebraSpec, entry) -> ClassLabel:
    pairs = []
    for label in entry:
        pairs.extend(label.pairs)
    return ClassLabel(algebra, tuple(pairs))


def atlas(algebra: LieAlgebraSpec, bound=6):
    """Nodes and certified edges for the class poset of the algebra."""
    if algebra.n > bound:
        raise ValueError(f"n = {algebra.n} exceeds the atlas bound {bound}")
    labels = enumerate_classes(algebra)
    index = {label: i for i, label in enumerate(labels)}
    nodes = [
        {"label": emit_label(label), "dimension": class_dimension(label)}
        for label in labels
    ]
    edges = set()
    for label in labels:
        rep = class_representative(label)
        desc = natural_slice(rep)
        for entry in desc.entries:
            bigger = _merge_entry(algebra, entry)
            if bigger != label:
                edges.add((index[label], index[bigger]))
    return {
        "algebra": {"family": algebra.family, "n": algebra.n},
        "order": ORDER_NOTE,
        "nodes": nodes,
        "edges": sorted(edges),
    }


def _node_name(node):
    pairs = node["label"]["pairs"]
    return "|".join(f"{p['size']}:{'.'.join(map(str, p['partition']))}" for p in pairs)


def atlas_dot(doc) -> str:
    """Graphviz DOT rendering of an atlas document (edges point up-closure)."""
    lines = [
        "digraph decomposition_classes {",
        f'  label="{doc["algebra"]["family"]}{doc["algebra"]["n"]} classes, {ORDER_NOTE}";',
        "  rankdir=BT;",
    ]
    for i, node in enumerate(doc["nodes"]):
        lines.append(
            f'  n{i} [label="{_node_name(node)}\\ndim {node["dimension"]}"];'
        )
    for a, b in doc["edges"]:
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines)


def is_acyclic(doc) -> bool:
    """Certified edges must form a DAG (they refine a partial order)."""
    adjacency = {}
    for a, b in doc["edges"]:
        adjacency.setdefault(a, []).append(b)
    seen = {}

    def visit(v):
        state = seen.get(v, 0)
        if state == 1:
            return False
        if state == 2:
            return True
        seen[v] = 1
        for w in adjacency.get(v, []):
            if not visit(w):
                return False
        seen[v] = 2
        return True

    return all(visit(v) for v in range(len(doc["nodes"])))
