"""Hasse diagrams of subspace collections, rendered as Graphviz DOT.

Edges are the transitive reduction of strict containment.  Rendering is
a pure function of the inputs: member order, edge order and attribute
order are all fixed, so identical inputs give byte-identical DOT.

Node styling encodes the three truth values: true propositions are
filled black boxes, false ones filled black circles, gaps hollow
circles.  A nontrivial subspace shared by two or more lattices gets a
thick grey border.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .contexts import Structure
from .subspaces import Subspace
from .valuation import TruthValue, ValuationReport

WHOLE_STRUCTURE_SCOPE = "all"


class UnknownScopeError(ValueError):
    """The scope names no context of the structure."""


class MissingValuationError(ValueError):
    """The report has no value for a member in scope."""


@dataclass(frozen=True)
class HasseNode:
    node_id: str
    subspace: Subspace
    label: str
    truth: TruthValue
    shared: bool
    memberships: tuple[str, ...]


@dataclass(frozen=True)
class HasseGraph:
    nodes: tuple[HasseNode, ...]
    edges: tuple[tuple[int, int], ...]


def transitive_reduction(members: Sequence[Subspace]) -> list[tuple[int, int]]:
    """Covering pairs (i, j) with members[i] strictly below members[j].

    An edge survives only if no third member sits strictly between its
    endpoints.
    """
    count = len(members)
    below = [
        [
            i != j and members[i].dim < members[j].dim and members[i].is_subspace_of(members[j])
            for j in range(count)
        ]
        for i in range(count)
    ]
    edges = []
    for i in range(count):
        for j in range(count):
            if below[i][j] and not any(below[i][k] and below[k][j] for k in range(count)):
                edges.append((i, j))
    edges.sort()
    return edges


def _membership_labels(structure: Structure, member: Subspace) -> list[str]:
    return [
        f"{lat.name}:{lat.label(member)}" for lat in structure.lattices if lat.has_member(member)
    ]


def _shared_set(structure: Structure) -> set[Subspace]:
    seen: dict[Subspace, int] = {}
    for lat in structure.lattices:
        for member in lat.members:
            seen[member] = seen.get(member, 0) + 1
    return {
        m
        for m, hits in seen.items()
        if hits >= 2 and not m.is_zero() and not m.is_full()
    }


def build_graph(structure: Structure, report: ValuationReport, scope: str) -> HasseGraph:
    """Assemble the node and edge lists for one lattice or the whole structure."""
    shared = _shared_set(structure)
    if scope == WHOLE_STRUCTURE_SCOPE:
        distinct: dict[Subspace, None] = {}
        for lat in structure.lattices:
            for member in lat.members:
                distinct.setdefault(member)
        members = sorted(distinct, key=lambda m: m.sort_key())
    else:
        lattice = structure.find_lattice(scope)
        if lattice is None:
            raise UnknownScopeError(
                f"scope {scope!r} names no context; use a context name or {WHOLE_STRUCTURE_SCOPE!r}"
            )
        members = list(lattice.members)
    nodes = []
    for member in members:
        try:
            truth = report.values[member]
        except KeyError:
            raise MissingValuationError(
                "the valuation report has no entry for a member in scope; "
                "it was produced for a different structure"
            ) from None
        memberships = _membership_labels(structure, member)
        if scope == WHOLE_STRUCTURE_SCOPE:
            node_id = memberships[0].replace(":", ".")
            label = memberships[0].split(":", 1)[1]
        else:
            label = structure.find_lattice(scope).label(member)
            node_id = f"{scope}.{label}"
        nodes.append(
            HasseNode(
                node_id=node_id,
                subspace=member,
                label=label,
                truth=truth,
                shared=member in shared,
                memberships=tuple(memberships),
            )
        )
    return HasseGraph(tuple(nodes), tuple(transitive_reduction(members)))


_TRUTH_STYLE = {
    TruthValue.TRUE: "shape=box style=filled fillcolor=black fontcolor=white",
    TruthValue.FALSE: "shape=circle style=filled fillcolor=black fontcolor=white",
    TruthValue.GAP: "shape=circle style=solid",
}


def render_dot(graph: HasseGraph, name: str, cluster: str | None = None,
               annotate_memberships: bool = False) -> str:
    """Serialize a graph to DOT with stable ordering and attributes."""
    lines = [f'digraph "{name}" {{', "  rankdir=BT;"]
    indent = "  "
    if cluster is not None:
        lines.append(f'  subgraph "cluster_{cluster}" {{')
        lines.append(f'    label="{cluster}";')
        indent = "    "
    for node in graph.nodes:
        attrs = [f'label="{node.label}"']
        if annotate_memberships:
            attrs.append(f'tooltip="{" ".join(node.memberships)}"')
        attrs.append(_TRUTH_STYLE[node.truth])
        if node.shared:
            attrs.append("color=grey penwidth=3")
        lines.append(f'{indent}"{node.node_id}" [{" ".join(attrs)}];')
    if cluster is not None:
        lines.append("  }")
    for i, j in graph.edges:
        lines.append(f'  "{graph.nodes[i].node_id}" -> "{graph.nodes[j].node_id}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def emit_dot(structure: Structure, report: ValuationReport, scope: str) -> str:
    """DOT rendering of one context's lattice or of the merged structure.

    Per-context scope wraps the nodes in a labelled cluster; the whole
    structure scope merges shared subspaces into single nodes and
    annotates each node with its per-lattice names in a tooltip.
    """
    graph = build_graph(structure, report, scope)
    if scope == WHOLE_STRUCTURE_SCOPE:
        return render_dot(graph, "structure", annotate_memberships=True)
    return render_dot(graph, scope, cluster=scope)
