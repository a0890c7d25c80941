"""Seeded random-graph generators with deterministic, reproducible output.

All randomness flows through a numpy PCG64 stream seeded from the parameter
object, and vertex pairs are always visited in lexicographic (i < j) order,
so equal parameters regenerate the identical graph on every run.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .graph import Graph

RNG_NAME = "numpy-pcg64"
GENERATOR_VERSION = "1"

_MAX_SEED = 2**64


@dataclass(frozen=True)
class ErSpec:
    """Independent-edge random graph: n vertices, each pair joined with prob p."""

    n: int
    p: float
    seed: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"n must be >= 0, got {self.n}")
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"p must be in [0, 1], got {self.p}")
        if not 0 <= self.seed < _MAX_SEED:
            raise ValueError(f"seed must be an unsigned 64-bit integer, got {self.seed}")

    def metadata(self) -> dict[str, str]:
        return {
            "generator": f"er v{GENERATOR_VERSION}",
            "rng": RNG_NAME,
            "nodes": str(self.n),
            "prob": repr(self.p),
            "seed": str(self.seed),
        }


@dataclass(frozen=True)
class SbmSpec:
    """Block-structured random graph.

    Block sizes are drawn uniformly from [size_min, size_max] until they cover
    total_n, with the last block truncated to make the sizes sum exactly.
    Within-block pairs are joined with prob p_in, cross-block pairs with p_out.
    """

    total_n: int
    size_min: int
    size_max: int
    p_in: float
    p_out: float
    seed: int

    def __post_init__(self):
        if not 1 <= self.size_min <= self.size_max <= self.total_n:
            raise ValueError(
                "need 1 <= size_min <= size_max <= total_n, got "
                f"({self.size_min}, {self.size_max}, {self.total_n})"
            )
        for name in ("p_in", "p_out"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise ValueError(f"{name} must be in [0, 1], got {value}")
        if not 0 <= self.seed < _MAX_SEED:
            raise ValueError(f"seed must be an unsigned 64-bit integer, got {self.seed}")

    def metadata(self) -> dict[str, str]:
        return {
            "generator": f"sbm v{GENERATOR_VERSION}",
            "rng": RNG_NAME,
            "nodes": str(self.total_n),
            "size_min": str(self.size_min),
            "size_max": str(self.size_max),
            "p_in": repr(self.p_in),
            "p_out": repr(self.p_out),
            "seed": str(self.seed),
        }


def _integer_labels(n: int) -> tuple[str, ...]:
    return tuple(str(i) for i in range(n))


def _graph_from_pair_mask(n: int, rows, cols, keep) -> Graph:
    neighbor_sets: list[set[int]] = [set() for _ in range(n)]
    for u, v in zip(rows[keep].tolist(), cols[keep].tolist()):
        neighbor_sets[u].add(v)
        neighbor_sets[v].add(u)
    return Graph(tuple(frozenset(s) for s in neighbor_sets), _integer_labels(n))


def generate_er(spec: ErSpec) -> Graph:
    """Generate the independent-edge graph for a spec. Deterministic in the seed."""
    rng = np.random.default_rng(spec.seed)
    n = spec.n
    if n < 2:
        return Graph(tuple(frozenset() for _ in range(n)), _integer_labels(n))
    rows, cols = np.triu_indices(n, k=1)
    keep = rng.random(rows.shape[0]) < spec.p
    return _graph_from_pair_mask(n, rows, cols, keep)


def generate_sbm(spec: SbmSpec) -> Graph:
    """Generate a block-structured graph. Vertices are ordered block by block."""
    rng = np.random.default_rng(spec.seed)
    sizes: list[int] = []
    total = 0
    while total < spec.total_n:
        size = int(rng.integers(spec.size_min, spec.size_max + 1))
        sizes.append(size)
        total += size
    if total > spec.total_n:
        sizes[-1] -= total - spec.total_n
    n = spec.total_n
    if n < 2:
        return Graph(tuple(frozenset() for _ in range(n)), _integer_labels(n))
    blocks = np.repeat(np.arange(len(sizes)), sizes)
    rows, cols = np.triu_indices(n, k=1)
    pair_prob = np.where(blocks[rows] == blocks[cols], spec.p_in, spec.p_out)
    keep = rng.random(rows.shape[0]) < pair_prob
    return _graph_from_pair_mask(n, rows, cols, keep)


def plant_components(specs: Sequence[ErSpec]) -> Graph:
    """Disjoint union of independently generated graphs, one per spec.

    Each component draws from its own seed. Vertices are relabeled with global
    sequential integers so labels stay unique across components.
    """
    if not specs:
        raise ValueError("at least one component spec is required")
    adjacency: list[frozenset[int]] = []
    offset = 0
    for spec in specs:
        component = generate_er(spec)
        adjacency.extend(
            frozenset(v + offset for v in nbrs) for nbrs in component.adjacency
        )
        offset += component.node_count
    return Graph(tuple(adjacency), _integer_labels(offset))


def components_metadata(specs: Sequence[ErSpec]) -> dict[str, str]:
    """Comment metadata for a disjoint-union graph."""
    return {
        "generator": f"er-components v{GENERATOR_VERSION}",
        "rng": RNG_NAME,
        "nodes": ",".join(str(s.n) for s in specs),
        "prob": ",".join(repr(s.p) for s in specs),
        "seed": ",".join(str(s.seed) for s in specs),
    }
