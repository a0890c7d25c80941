"""All-pairs Jaccard distances between vertex neighborhoods.

The distance between vertices i and j is 1 - |a_i & a_j| / |a_i | a_j| over
their open neighborhoods, with the convention that two vertices with empty
neighborhoods are at distance 0. A graph's distance sample collects this
value for every unordered vertex pair, sorted ascending.

Two execution paths produce bit-identical values:

* dense (edge density >= the threshold): common-neighbor counts come from a
  blocked matmul of the 0/1 adjacency matrix in float32 — dot products are
  exact integers far below 2**24 — and blocks run on a thread pool (numpy
  releases the GIL). Each block writes a disjoint slice of the output, so
  worker count never changes the result.
* sparse: scipy.sparse A @ A.T enumerates only pairs with at least one common
  neighbor; every remaining pair is at distance 1 except isolated-isolated
  pairs, which are at 0.

The final division happens in float64 in both paths, matching pure-Python
arithmetic exactly.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp

from .graph import Graph

DENSITY_THRESHOLD = 0.01
_BLOCK_ROWS = 256


@dataclass(frozen=True, eq=False)
class DistanceSample:
    """Ascending multiset of pairwise neighborhood distances for one graph.

    values: float64 array, sorted ascending, in [0, 1].
    pair_count: number of unordered vertex pairs, |V| * (|V| - 1) / 2.
    source_id: free-form tag naming the originating graph.
    """

    values: np.ndarray
    pair_count: int
    source_id: str = ""

    def __post_init__(self):
        values = np.asarray(self.values, dtype=np.float64)
        object.__setattr__(self, "values", values)
        if values.ndim != 1:
            raise ValueError("values must be one-dimensional")
        if len(values) != self.pair_count:
            raise ValueError(
                f"expected {self.pair_count} values, got {len(values)}"
            )
        if len(values):
            if np.any(np.diff(values) < 0):
                raise ValueError("values must be sorted ascending")
            if values[0] < 0.0 or values[-1] > 1.0:
                raise ValueError("values must lie in [0, 1]")


def jaccard_distance(graph: Graph, i: int, j: int) -> float:
    """Distance between the open neighborhoods of two distinct vertices."""
    n = graph.node_count
    if not (0 <= i < n and 0 <= j < n):
        raise ValueError(f"vertex indices ({i}, {j}) out of range for {n} vertices")
    if i == j:
        raise ValueError("distance requires two distinct vertices")
    a, b = graph.adjacency[i], graph.adjacency[j]
    union = len(a | b)
    if union == 0:
        return 0.0
    return 1.0 - len(a & b) / union


def all_pairs_distances(
    graph: Graph,
    *,
    threads: int | None = None,
    density_threshold: float = DENSITY_THRESHOLD,
    source_id: str = "",
) -> DistanceSample:
    """Distance sample over every unordered vertex pair of a graph.

    threads: worker count for the dense path (default: all CPUs). The sample
    is identical for any worker count.
    density_threshold: edge density at or above which the dense matmul path
    is used instead of the sparse one.
    """
    n = graph.node_count
    if n < 2:
        raise ValueError("all-pairs distances need at least 2 vertices")
    degrees = np.array([len(s) for s in graph.adjacency], dtype=np.int64)
    if _edge_density(n, degrees) >= density_threshold:
        values = _dense_values(graph, degrees, threads)
    else:
        values = _sparse_values(graph, degrees)
    values.sort()
    return DistanceSample(values, n * (n - 1) // 2, source_id)


def distance_histogram(
    sample: DistanceSample, bins: int
) -> tuple[np.ndarray, np.ndarray]:
    """Equal-width histogram of a sample over [0, 1].

    Returns (edges, counts) with len(edges) == bins + 1. Bins are
    half-open [lo, hi) except the last, which includes 1.0, and the counts
    always sum to the sample's pair count.
    """
    edges = _bin_edges(bins)
    counts, _ = np.histogram(sample.values, bins=edges)
    return edges, counts


def all_pairs_histogram(
    graph: Graph,
    bins: int,
    *,
    threads: int | None = None,
    density_threshold: float = DENSITY_THRESHOLD,
) -> tuple[np.ndarray, np.ndarray]:
    """Histogram of all pairwise distances without keeping the full sample.

    Counts equal distance_histogram(all_pairs_distances(graph), bins) exactly,
    but the dense path folds each row block straight into bin counts, so peak
    memory stays flat in the pair count. Reconstructing per-pair values from
    the counts (e.g. at bin right edges) shifts any downstream statistic by at
    most one bin width.
    """
    edges = _bin_edges(bins)
    n = graph.node_count
    if n < 2:
        raise ValueError("all-pairs distances need at least 2 vertices")
    degrees = np.array([len(s) for s in graph.adjacency], dtype=np.int64)
    if _edge_density(n, degrees) < density_threshold:
        values = _sparse_values(graph, degrees)
        counts, _ = np.histogram(values, bins=edges)
        return edges, counts

    matrix = _adjacency_matrix(graph)
    deg = degrees.astype(np.float64)

    def block_counts(block: tuple[int, int]) -> np.ndarray:
        zeta = _dense_block_zeta(matrix, deg, *block)
        counts, _ = np.histogram(zeta, bins=edges)
        return counts

    per_block = _run_blocks(block_counts, n, threads)
    return edges, np.sum(per_block, axis=0)


def _bin_edges(bins: int) -> np.ndarray:
    if bins < 1:
        raise ValueError(f"bins must be >= 1, got {bins}")
    return np.arange(bins + 1, dtype=np.float64) / bins


def _edge_density(n: int, degrees: np.ndarray) -> float:
    return float(degrees.sum()) / (n * (n - 1))


def _adjacency_matrix(graph: Graph) -> np.ndarray:
    # float32 keeps the matmul fast; counts stay exact integers (< 2**24).
    n = graph.node_count
    matrix = np.zeros((n, n), dtype=np.float32)
    for i, nbrs in enumerate(graph.adjacency):
        if nbrs:
            matrix[i, np.fromiter(nbrs, dtype=np.int64, count=len(nbrs))] = 1.0
    return matrix


def _dense_block_zeta(
    matrix: np.ndarray, deg: np.ndarray, row_start: int, row_stop: int
) -> np.ndarray:
    """Distances for all pairs (i, j) with row_start <= i < row_stop < j... n.

    Returns them concatenated row by row (j ascending within a row).
    """
    n = matrix.shape[0]
    inter_block = (matrix[row_start:row_stop] @ matrix.T).astype(np.float64)
    pieces = []
    for i in range(row_start, row_stop):
        inter = inter_block[i - row_start, i + 1 :]
        union = deg[i] + deg[i + 1 :] - inter
        # Start from ratio 1 so empty/empty pairs (union 0) end at distance 0.
        ratio = np.ones_like(inter)
        np.divide(inter, union, out=ratio, where=union > 0.0)
        pieces.append(np.subtract(1.0, ratio, out=ratio))
    return np.concatenate(pieces) if pieces else np.empty(0, dtype=np.float64)


def _run_blocks(task, n: int, threads: int | None) -> list:
    blocks = [
        (start, min(start + _BLOCK_ROWS, n - 1))
        for start in range(0, n - 1, _BLOCK_ROWS)
    ]
    workers = _worker_count(threads)
    if workers == 1 or len(blocks) == 1:
        return [task(block) for block in blocks]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(task, blocks))


def _worker_count(threads: int | None) -> int:
    if threads is None:
        return os.cpu_count() or 1
    if threads < 1:
        raise ValueError(f"threads must be >= 1, got {threads}")
    return threads


def _dense_values(graph: Graph, degrees: np.ndarray, threads: int | None) -> np.ndarray:
    n = graph.node_count
    matrix = _adjacency_matrix(graph)
    deg = degrees.astype(np.float64)
    out = np.empty(n * (n - 1) // 2, dtype=np.float64)
    # Row i owns the output run [offsets[i], offsets[i + 1]).
    offsets = np.concatenate(([0], np.cumsum(np.arange(n - 1, 0, -1))))

    def fill_block(block: tuple[int, int]) -> None:
        row_start, row_stop = block
        zeta = _dense_block_zeta(matrix, deg, row_start, row_stop)
        out[offsets[row_start] : offsets[row_stop]] = zeta

    _run_blocks(fill_block, n, threads)
    return out


def _sparse_values(graph: Graph, degrees: np.ndarray) -> np.ndarray:
    n = graph.node_count
    pair_count = n * (n - 1) // 2
    total = int(degrees.sum())
    indptr = np.concatenate(([0], np.cumsum(degrees)))
    indices = np.empty(total, dtype=np.int64)
    for i, nbrs in enumerate(graph.adjacency):
        if nbrs:
            indices[indptr[i] : indptr[i + 1]] = np.fromiter(
                nbrs, dtype=np.int64, count=len(nbrs)
            )
    adjacency = sp.csr_matrix(
        (np.ones(total, dtype=np.float64), indices, indptr), shape=(n, n)
    )
    overlap = sp.triu(adjacency @ adjacency.T, k=1).tocoo()
    deg = degrees.astype(np.float64)
    inter = overlap.data
    union = deg[overlap.row] + deg[overlap.col] - inter
    zeta = 1.0 - inter / union  # union >= inter >= 1 for every stored pair

    isolated = int(np.count_nonzero(degrees == 0))
    zero_pairs = isolated * (isolated - 1) // 2
    # Pairs with no common neighbor sit at distance 1 unless both vertices
    # are isolated (distance 0). Positions are arbitrary: the caller sorts.
    out = np.ones(pair_count, dtype=np.float64)
    out[: len(zeta)] = zeta
    out[len(zeta) : len(zeta) + zero_pairs] = 0.0
    return out
