"""Small graphs shared by the test modules (0-based node ids)."""
import itertools

import numpy as np

from sampling.graphs import Graph, Partition


def path_graph(n=3):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def triangle():
    return Graph(3, [(0, 1), (0, 2), (1, 2)])


def cycle_graph(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves=4):
    """Center 0, leaves 1..leaves."""
    return Graph(leaves + 1, [(0, leaf) for leaf in range(1, leaves + 1)])


def dumbbell(clique=3):
    """Two cliques ``0..k-1`` and ``k..2k-1`` joined by the bridge ``(k-1, k)``."""
    left = list(itertools.combinations(range(clique), 2))
    right = list(itertools.combinations(range(clique, 2 * clique), 2))
    graph = Graph(2 * clique, left + right + [(clique - 1, clique)])
    return graph, Partition.from_sizes([clique, clique])


def random_connected_graph(rng, node_count, extra_prob=0.2):
    """Random spanning tree plus independent extra edges."""
    order = rng.permutation(node_count)
    edges = set()
    for position in range(1, node_count):
        parent = order[rng.integers(position)]
        child = order[position]
        edges.add((min(parent, child), max(parent, child)))
    for i, j in itertools.combinations(range(node_count), 2):
        if (i, j) not in edges and rng.random() < extra_prob:
            edges.add((i, j))
    return Graph(node_count, sorted(edges))


def random_partition(rng, node_count, max_clusters=4):
    count = int(rng.integers(1, min(max_clusters, node_count) + 1))
    labels = np.concatenate([np.arange(count), rng.integers(count, size=node_count - count)])
    return Partition.from_labels(rng.permutation(labels))
