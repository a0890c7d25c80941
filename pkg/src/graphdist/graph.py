"""Undirected simple graphs: construction, edge-list I/O, and summary stats.

Vertices live at dense indices ``0..n-1``; external string labels are kept
alongside so files can use arbitrary node names. Neighborhoods are *open*:
``adjacency[i]`` never contains ``i`` itself.
"""

from __future__ import annotations

import warnings
from collections import deque
from dataclasses import dataclass
from typing import IO, Iterable, Mapping, Sequence


class EdgeListParseError(ValueError):
    """An edge-list source could not be parsed into a graph."""

    def __init__(self, message: str, line_number: int | None = None):
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
        self.line_number = line_number


class SelfLoopWarning(UserWarning):
    """Self-loop lines were present in parsed input and were dropped."""


@dataclass(frozen=True)
class Graph:
    """Immutable undirected simple graph.

    adjacency: one frozenset of neighbor indices per vertex (open
        neighborhood, symmetric, no self-loops).
    labels: external name of each vertex, unique, aligned with indices.
    """

    adjacency: tuple[frozenset[int], ...]
    labels: tuple[str, ...]

    def __post_init__(self):
        if len(self.adjacency) != len(self.labels):
            raise ValueError("adjacency and labels must have the same length")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("labels must be unique")

    @classmethod
    def from_edges(cls, labels: Sequence[str], edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph from index pairs; duplicates collapse, self-loops are rejected."""
        n = len(labels)
        neighbor_sets: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for {n} vertices")
            if u == v:
                raise ValueError(f"self-loop at vertex {u} not allowed")
            neighbor_sets[u].add(v)
            neighbor_sets[v].add(u)
        return cls(tuple(frozenset(s) for s in neighbor_sets), tuple(labels))

    @property
    def node_count(self) -> int:
        return len(self.adjacency)

    @property
    def edge_count(self) -> int:
        return sum(len(s) for s in self.adjacency) // 2

    def neighbors(self, i: int) -> frozenset[int]:
        return self.adjacency[i]

    def degree(self, i: int) -> int:
        return len(self.adjacency[i])

    def validate(self) -> None:
        """Check structural invariants; raises ValueError on the first violation."""
        n = self.node_count
        for i, nbrs in enumerate(self.adjacency):
            if i in nbrs:
                raise ValueError(f"self-loop at vertex {i}")
            for j in nbrs:
                if not 0 <= j < n:
                    raise ValueError(f"neighbor {j} of vertex {i} out of range")
                if i not in self.adjacency[j]:
                    raise ValueError(f"asymmetric edge ({i}, {j})")


@dataclass(frozen=True)
class GraphSummary:
    """One summary row: sizes, density, degree stats, component count."""

    num_vertices: int
    num_edges: int
    density: float
    min_degree: int
    mean_degree: float
    max_degree: int
    num_components: int

    def to_dict(self) -> dict:
        return {
            "num_vertices": self.num_vertices,
            "num_edges": self.num_edges,
            "density": self.density,
            "min_degree": self.min_degree,
            "mean_degree": self.mean_degree,
            "max_degree": self.max_degree,
            "num_components": self.num_components,
        }


def parse_edge_list(source: str | IO[str]) -> Graph:
    """Parse edge-list text into a Graph.

    Format: one edge per line as two whitespace-separated tokens; ``#`` starts
    a comment line; blank lines are skipped; LF and CRLF both accepted. Every
    token seen becomes a node (first-seen order fixes the index). Duplicate
    edges collapse; self-loop lines are dropped and reported once through a
    SelfLoopWarning. Lines that are neither blank, comment, nor two tokens
    raise EdgeListParseError with the offending line number.
    """
    text = source if isinstance(source, str) else source.read()
    index: dict[str, int] = {}
    neighbor_sets: list[set[int]] = []
    self_loops = 0
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise EdgeListParseError(
                f"expected 2 whitespace-separated tokens, got {len(tokens)}: {raw!r}",
                line_number,
            )
        pair = []
        for token in tokens:
            if token not in index:
                index[token] = len(index)
                neighbor_sets.append(set())
            pair.append(index[token])
        u, v = pair
        if u == v:
            self_loops += 1
            continue
        neighbor_sets[u].add(v)
        neighbor_sets[v].add(u)
    if not index:
        raise EdgeListParseError("no nodes: input contains no edge lines")
    if self_loops:
        warnings.warn(
            f"dropped {self_loops} self-loop line(s)", SelfLoopWarning, stacklevel=2
        )
    return Graph(tuple(frozenset(s) for s in neighbor_sets), tuple(index))


def serialize_edge_list(graph: Graph, metadata: Mapping[str, str] | None = None) -> str:
    """Render a graph back to edge-list text, deterministically.

    Each edge is written once with its two labels in lexicographic order, and
    lines themselves are sorted, so equal graphs always serialize to equal
    bytes. Optional metadata is emitted first as ``# key: value`` comment
    lines. Isolated vertices have no representation in this format and are
    not round-tripped.
    """
    lines: list[str] = []
    if metadata:
        lines.extend(f"# {key}: {value}" for key, value in metadata.items())
    pairs: list[tuple[str, str]] = []
    for i, nbrs in enumerate(graph.adjacency):
        for j in nbrs:
            if i < j:
                a, b = graph.labels[i], graph.labels[j]
                pairs.append((a, b) if a <= b else (b, a))
    pairs.sort()
    lines.extend(f"{a} {b}" for a, b in pairs)
    return "\n".join(lines) + "\n" if lines else ""


def degree_sequence(graph: Graph) -> list[int]:
    """Vertex degrees in index order."""
    return [len(s) for s in graph.adjacency]


def summarize(graph: Graph) -> GraphSummary:
    """Compute the summary row for a graph (empty graph -> all zeros)."""
    n = graph.node_count
    degrees = degree_sequence(graph)
    num_edges = sum(degrees) // 2
    if n <= 1:
        density = 0.0
    else:
        density = 2.0 * num_edges / (n * (n - 1))
    return GraphSummary(
        num_vertices=n,
        num_edges=num_edges,
        density=density,
        min_degree=min(degrees) if degrees else 0,
        mean_degree=sum(degrees) / n if n else 0.0,
        max_degree=max(degrees) if degrees else 0,
        num_components=_component_count(graph),
    )


def _component_count(graph: Graph) -> int:
    n = graph.node_count
    seen = bytearray(n)
    count = 0
    for start in range(n):
        if seen[start]:
            continue
        count += 1
        seen[start] = 1
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in graph.adjacency[u]:
                if not seen[v]:
                    seen[v] = 1
                    queue.append(v)
    return count
