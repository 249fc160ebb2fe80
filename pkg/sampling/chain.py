"""Two-cluster random walk model.

A random walk on a two-block SBM graph is summarized by a Markov chain over
the clusters, with transition probabilities from the expected number of
intra- and inter-cluster edges per node. Its equilibrium distribution gives
the long-run share of walk time spent in each cluster.
"""
import logging
from dataclasses import dataclass

import numpy as np

from .exceptions import DomainError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TwoClusterModel:
    n1: int
    n2: int
    p: float
    q: float

    def __post_init__(self):
        if self.n1 < 1 or self.n2 < 1:
            raise DomainError("cluster sizes must be at least 1")
        if not 0.0 <= self.q <= self.p <= 1.0:
            raise DomainError("probabilities must satisfy 0 <= q <= p <= 1")


@dataclass(frozen=True, eq=False)
class ChainSummary:
    transition: np.ndarray
    equilibrium: tuple

    @property
    def ratio(self):
        """How many times more walk time the second cluster receives."""
        v1, v2 = self.equilibrium
        return v2 / v1 if v1 > 0 else float("inf")


def transition_matrix(model):
    leave_first = model.q * model.n2 + model.p * (model.n1 - 1)
    leave_second = model.q * model.n1 + model.p * (model.n2 - 1)
    if leave_first <= 0 or leave_second <= 0:
        raise DomainError(f"expected degree is zero in one cluster of {model}")
    p12 = model.q * model.n2 / leave_first
    p21 = model.q * model.n1 / leave_second
    return np.array([[1.0 - p12, p12], [p21, 1.0 - p21]])


def equilibrium(transition):
    transition = np.asarray(transition, dtype=np.float64)
    if transition.shape != (2, 2):
        raise DomainError(f"expected a 2x2 transition matrix, got shape {transition.shape}")
    p12, p21 = transition[0, 1], transition[1, 0]
    if p12 + p21 <= 0:
        raise DomainError("both clusters are absorbing; the equilibrium is not unique")
    v1 = p21 / (p12 + p21)
    return float(v1), float(1.0 - v1)


def summarize(model):
    transition = transition_matrix(model)
    return ChainSummary(transition, equilibrium(transition))


def _walk_clusters(graph, partition, walk_steps, rng):
    labels = partition.cluster_of
    current = int(rng.integers(graph.node_count))
    visited = np.empty(walk_steps, dtype=np.intp)
    for step in range(walk_steps):
        neighbors = graph.adjacency[current]
        current = neighbors[rng.integers(len(neighbors))] if neighbors else current
        visited[step] = labels[current]
    return visited


def _check_partition(graph, partition, walk_steps, trials):
    if partition is None or len(partition) == 0:
        raise DomainError("occupancy needs a non-empty partition")
    if partition.node_count != graph.node_count:
        raise DomainError("partition does not cover the graph")
    if walk_steps < 1 or trials < 1:
        raise DomainError("walk_steps and trials must be positive")


def empirical_occupancy(graph, partition, walk_steps, trials, rng):
    """Fraction of walk steps spent in each cluster, averaged over trials."""
    _check_partition(graph, partition, walk_steps, trials)
    shares = np.zeros(len(partition))
    for _ in range(trials):
        visited = _walk_clusters(graph, partition, walk_steps, rng)
        shares += np.bincount(visited, minlength=len(partition)) / walk_steps
    return shares / trials


def walk_endpoint_frequencies(graph, partition, walk_steps, trials, rng):
    """How often a walk of ``walk_steps`` steps ends in each cluster."""
    _check_partition(graph, partition, walk_steps, trials)
    ends = [_walk_clusters(graph, partition, walk_steps, rng)[-1] for _ in range(trials)]
    return np.bincount(ends, minlength=len(partition)) / trials
