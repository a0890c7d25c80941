"""Random graph generators: determinism, degenerate cases, calibration."""

import math

import pytest

from graphdist import (
    ErSpec,
    SbmSpec,
    generate_er,
    generate_sbm,
    plant_components,
    serialize_edge_list,
    summarize,
)


def _component_sizes(graph):
    seen = [False] * graph.node_count
    sizes = []
    for start in range(graph.node_count):
        if seen[start]:
            continue
        stack, size = [start], 0
        seen[start] = True
        while stack:
            u = stack.pop()
            size += 1
            for v in graph.adjacency[u]:
                if not seen[v]:
                    seen[v] = True
                    stack.append(v)
        sizes.append(size)
    return sorted(sizes)


# ------------------------------------------------------------------------ ER


def test_er_same_seed_same_bytes():
    spec = ErSpec(60, 0.3, seed=42)
    assert serialize_edge_list(generate_er(spec)) == serialize_edge_list(
        generate_er(spec)
    )


def test_er_different_seeds_differ():
    a = generate_er(ErSpec(60, 0.3, seed=1))
    b = generate_er(ErSpec(60, 0.3, seed=2))
    assert serialize_edge_list(a) != serialize_edge_list(b)


def test_er_prob_zero_is_edgeless():
    g = generate_er(ErSpec(5, 0.0, seed=9))
    assert g.edge_count == 0
    assert g.node_count == 5


def test_er_prob_one_is_complete():
    g = generate_er(ErSpec(5, 1.0, seed=9))
    assert g.edge_count == 10
    assert all(len(nbrs) == 4 for nbrs in g.adjacency)


def test_er_integer_string_labels():
    g = generate_er(ErSpec(12, 0.5, seed=0))
    assert g.labels == tuple(str(i) for i in range(12))


def test_er_tiny_node_counts():
    assert generate_er(ErSpec(0, 0.5, seed=1)).node_count == 0
    assert generate_er(ErSpec(1, 0.5, seed=1)).edge_count == 0


def test_er_edge_count_within_three_sigma():
    n, p = 300, 0.25
    pairs = n * (n - 1) // 2
    sigma = math.sqrt(pairs * p * (1 - p))
    g = generate_er(ErSpec(n, p, seed=5))
    assert abs(g.edge_count - pairs * p) < 3 * sigma


def test_er_per_pair_frequency_calibrated():
    """Each pair's empirical edge frequency over many seeds approaches p."""
    n, p, runs = 8, 0.3, 400
    counts = [[0] * n for _ in range(n)]
    for seed in range(runs):
        g = generate_er(ErSpec(n, p, seed=seed))
        for i, nbrs in enumerate(g.adjacency):
            for j in nbrs:
                if i < j:
                    counts[i][j] += 1
    sigma = math.sqrt(p * (1 - p) / runs)
    freqs = [counts[i][j] / runs for i in range(n) for j in range(i + 1, n)]
    # 4 sigma per pair keeps the joint pass probability high; the pooled
    # mean gets the tight 3 sigma check
    assert all(abs(f - p) < 4 * sigma for f in freqs)
    pooled = sum(freqs) / len(freqs)
    assert abs(pooled - p) < 3 * sigma / math.sqrt(len(freqs))


def test_er_spec_validation():
    with pytest.raises(ValueError):
        ErSpec(-1, 0.5, seed=0)
    with pytest.raises(ValueError):
        ErSpec(5, 1.5, seed=0)
    with pytest.raises(ValueError):
        ErSpec(5, 0.5, seed=-1)
    with pytest.raises(ValueError):
        ErSpec(5, 0.5, seed=2**64)


# ----------------------------------------------------------------------- SBM


def test_sbm_same_seed_same_bytes():
    spec = SbmSpec(40, 5, 10, 0.9, 0.1, seed=3)
    assert serialize_edge_list(generate_sbm(spec)) == serialize_edge_list(
        generate_sbm(spec)
    )


def test_sbm_sizes_cover_exactly():
    g = generate_sbm(SbmSpec(53, 7, 12, 0.5, 0.05, seed=1))
    assert g.node_count == 53


def test_sbm_block_truncation():
    """Fixed size 4 blocks over 10 vertices must truncate to [4, 4, 2]."""
    g = generate_sbm(SbmSpec(10, 4, 4, 1.0, 0.0, seed=0))
    assert _component_sizes(g) == [2, 4, 4]


def test_sbm_two_triangles():
    g = generate_sbm(SbmSpec(6, 3, 3, 1.0, 0.0, seed=11))
    assert _component_sizes(g) == [3, 3]
    assert g.edge_count == 6
    assert all(len(nbrs) == 2 for nbrs in g.adjacency)


def test_sbm_matches_er_when_probabilities_equal():
    """With p_in == p_out the block structure is irrelevant: calibrate like ER."""
    n, p = 200, 0.2
    pairs = n * (n - 1) // 2
    sigma = math.sqrt(pairs * p * (1 - p))
    g = generate_sbm(SbmSpec(n, 10, 20, p, p, seed=21))
    assert abs(g.edge_count - pairs * p) < 3 * sigma


def test_sbm_mean_degree_tracks_block_mix():
    """Mean degree must sit near p_in * (b - 1) + p_out * (n - b) for the
    size-biased mean block size b."""
    spec = SbmSpec(2495, 37, 62, 0.7, 0.1, seed=2)
    g = generate_sbm(spec)
    mean_size = (37 + 62) / 2
    var_size = ((62 - 37 + 1) ** 2 - 1) / 12
    biased = mean_size + var_size / mean_size  # block size seen by a vertex
    expected = spec.p_in * (biased - 1) + spec.p_out * (spec.total_n - biased)
    mean_degree = summarize(g).mean_degree
    assert abs(mean_degree - expected) < 2.0


def test_sbm_spec_validation():
    with pytest.raises(ValueError):
        SbmSpec(10, 0, 5, 0.5, 0.5, seed=0)  # size_min < 1
    with pytest.raises(ValueError):
        SbmSpec(10, 6, 5, 0.5, 0.5, seed=0)  # min > max
    with pytest.raises(ValueError):
        SbmSpec(10, 5, 11, 0.5, 0.5, seed=0)  # max > total
    with pytest.raises(ValueError):
        SbmSpec(10, 2, 5, 1.5, 0.5, seed=0)
    with pytest.raises(ValueError):
        SbmSpec(10, 2, 5, 0.5, -0.1, seed=0)


# ---------------------------------------------------------------- components


def test_plant_components_disjoint_union():
    g = plant_components([ErSpec(3, 1.0, seed=1), ErSpec(2, 1.0, seed=2)])
    assert g.node_count == 5
    assert _component_sizes(g) == [2, 3]
    assert summarize(g).num_components == 2
    assert g.labels == ("0", "1", "2", "3", "4")


def test_plant_components_isolated_vertices():
    g = plant_components([ErSpec(5, 0.0, seed=1)])
    assert summarize(g).num_components == 5


def test_plant_components_deterministic():
    specs = [ErSpec(30, 0.4, seed=4), ErSpec(10, 0.4, seed=5)]
    assert serialize_edge_list(plant_components(specs)) == serialize_edge_list(
        plant_components(specs)
    )


def test_plant_components_requires_a_spec():
    with pytest.raises(ValueError):
        plant_components([])


def test_plant_components_matches_standalone_graphs():
    """Each component must be exactly the graph its own spec generates."""
    specs = [ErSpec(12, 0.5, seed=8), ErSpec(7, 0.5, seed=9)]
    combined = plant_components(specs)
    first = generate_er(specs[0])
    second = generate_er(specs[1])
    for i, nbrs in enumerate(first.adjacency):
        assert combined.adjacency[i] == nbrs
    for i, nbrs in enumerate(second.adjacency):
        assert combined.adjacency[12 + i] == frozenset(v + 12 for v in nbrs)
