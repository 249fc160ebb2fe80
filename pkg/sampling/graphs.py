"""Graph container, stochastic block model draws and hop neighbourhoods."""
import logging
from dataclasses import dataclass
from functools import cached_property

import networkx as nx
import numpy as np
from scipy import sparse
from scipy.sparse import csgraph

from .exceptions import DomainError, GenerationError

logger = logging.getLogger(__name__)


class Graph:
    """Undirected simple connected graph on the nodes ``0 .. node_count - 1``.

    The graph is immutable once built. All-pairs hop distances are computed
    lazily by :meth:`distances` and reused by :meth:`distance` and
    :meth:`ring`; without the cache both fall back to a BFS from the source.
    """

    def __init__(self, node_count, edges):
        node_count = int(node_count)
        if node_count < 1:
            raise DomainError(f"node_count must be positive, got {node_count}")

        graph = nx.Graph()
        graph.add_nodes_from(range(node_count))
        for i, j in edges:
            i, j = int(i), int(j)
            if not (0 <= i < node_count and 0 <= j < node_count):
                raise DomainError(f"edge ({i}, {j}) references a node outside 0..{node_count - 1}")
            if i == j:
                raise DomainError(f"self-loop on node {i}")
            if graph.has_edge(i, j):
                raise DomainError(f"duplicate edge ({i}, {j})")
            graph.add_edge(i, j)

        if not nx.is_connected(graph):
            raise DomainError("graph is not connected")

        self._graph = graph
        self.node_count = node_count
        self.adjacency = tuple(tuple(sorted(graph.adj[i])) for i in range(node_count))
        self._distances = None

    def __repr__(self):
        return f"Graph(node_count={self.node_count}, edge_count={self.edge_count})"

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.node_count == other.node_count and self.edges == other.edges

    __hash__ = None

    @property
    def edge_count(self):
        return self._graph.number_of_edges()

    @cached_property
    def edges(self):
        return frozenset(self.incidence_rows())

    def neighbors(self, i):
        self._check_node(i)
        return self.adjacency[i]

    def degree(self, i):
        return len(self.neighbors(i))

    @cached_property
    def max_degree(self):
        return max((len(adj) for adj in self.adjacency), default=0)

    def incidence_rows(self):
        """Edges as ``(low, high)`` pairs in lexicographic order."""
        return [(i, j) for i in range(self.node_count) for j in self.adjacency[i] if i < j]

    @cached_property
    def edge_array(self):
        rows = self.incidence_rows()
        if not rows:
            return np.empty((0, 2), dtype=np.intp)
        return np.asarray(rows, dtype=np.intp)

    @cached_property
    def difference_operator(self):
        """Sparse ``D`` with ``(D x)[e] = x[high] - x[low]`` for edge row ``e``."""
        edges = self.edge_array
        count = len(edges)
        rows = np.repeat(np.arange(count), 2)
        cols = edges.ravel()
        data = np.tile([-1.0, 1.0], count)
        return sparse.csr_matrix((data, (rows, cols)), shape=(count, self.node_count))

    def to_networkx(self):
        return self._graph.copy()

    def distances(self):
        """All-pairs hop distance matrix, computed once."""
        if self._distances is None:
            adjacency = nx.to_scipy_sparse_array(self._graph, nodelist=range(self.node_count), format="csr")
            hops = csgraph.shortest_path(adjacency, method="D", directed=False, unweighted=True)
            self._distances = hops.astype(np.intp)
            self._distances.setflags(write=False)
        return self._distances

    @property
    def has_distance_cache(self):
        return self._distances is not None

    def distance(self, i, j):
        self._check_node(i)
        self._check_node(j)
        if self._distances is not None:
            return int(self._distances[i, j])
        return nx.shortest_path_length(self._graph, i, j)

    def ring(self, i, r):
        """Nodes at hop distance exactly ``r`` from ``i``, sorted ascending."""
        self._check_node(i)
        if r < 1:
            raise DomainError(f"ring radius must be at least 1, got {r}")
        if self._distances is not None:
            return np.flatnonzero(self._distances[i] == r)
        lengths = nx.single_source_shortest_path_length(self._graph, i, cutoff=r)
        return np.array(sorted(node for node, hops in lengths.items() if hops == r), dtype=np.intp)

    def _check_node(self, i):
        if not (0 <= i < self.node_count):
            raise DomainError(f"node id {i} outside 0..{self.node_count - 1}")


@dataclass(frozen=True)
class Partition:
    """Disjoint clusters covering the nodes ``0 .. N - 1``."""

    clusters: tuple

    def __post_init__(self):
        clusters = tuple(tuple(sorted(int(node) for node in cluster)) for cluster in self.clusters)
        if not clusters:
            raise DomainError("partition needs at least one cluster")
        if any(not cluster for cluster in clusters):
            raise DomainError("partition contains an empty cluster")
        nodes = [node for cluster in clusters for node in cluster]
        if len(set(nodes)) != len(nodes):
            raise DomainError("partition clusters overlap")
        if sorted(nodes) != list(range(len(nodes))):
            raise DomainError("partition must cover the nodes 0..N-1")
        object.__setattr__(self, "clusters", clusters)

    def __len__(self):
        return len(self.clusters)

    @property
    def node_count(self):
        return sum(len(cluster) for cluster in self.clusters)

    @property
    def sizes(self):
        return [len(cluster) for cluster in self.clusters]

    @cached_property
    def cluster_of(self):
        labels = np.empty(self.node_count, dtype=np.intp)
        for index, cluster in enumerate(self.clusters):
            labels[list(cluster)] = index
        labels.setflags(write=False)
        return labels

    @classmethod
    def from_sizes(cls, sizes):
        """Consecutive node blocks, the layout produced by :func:`sbm_generate`."""
        bounds = np.cumsum([0, *sizes])
        return cls(tuple(tuple(range(bounds[k], bounds[k + 1])) for k in range(len(sizes))))

    @classmethod
    def from_labels(cls, labels):
        labels = [int(label) for label in labels]
        count = max(labels, default=-1) + 1
        clusters = [[] for _ in range(count)]
        for node, label in enumerate(labels):
            if label < 0:
                raise DomainError(f"negative cluster index {label} for node {node}")
            clusters[label].append(node)
        return cls(tuple(tuple(cluster) for cluster in clusters))


@dataclass(frozen=True)
class SbmConfig:
    cluster_count: int = 10
    size_success_prob: float = 0.08
    intra_prob: float = 0.7
    inter_prob: float = 0.01
    max_regen_attempts: int = 20
    repair: bool = True

    def __post_init__(self):
        if self.cluster_count < 1:
            raise DomainError("cluster_count must be at least 1")
        if not 0.0 < self.size_success_prob <= 1.0:
            raise DomainError("size_success_prob must lie in (0, 1]")
        if not 0.0 <= self.inter_prob <= self.intra_prob <= 1.0:
            raise DomainError("probabilities must satisfy 0 <= inter_prob <= intra_prob <= 1")
        if self.max_regen_attempts < 1:
            raise DomainError("max_regen_attempts must be at least 1")


def sbm_generate(cfg, cluster_sizes=None, rng=None):
    """Draw a connected stochastic block model graph and its planted partition.

    Cluster sizes are drawn i.i.d. from the geometric distribution on
    ``{1, 2, ...}`` unless given. Disconnected draws are regenerated up to
    ``cfg.max_regen_attempts`` times; after that the last draw is repaired
    by joining its components with the fewest possible extra edges.
    """
    rng = np.random.default_rng() if rng is None else rng
    if cluster_sizes is None:
        sizes = [int(size) for size in rng.geometric(cfg.size_success_prob, size=cfg.cluster_count)]
    else:
        sizes = [int(size) for size in cluster_sizes]
        if not sizes or min(sizes) < 1:
            raise DomainError(f"cluster sizes must be positive, got {sizes}")

    probs = np.full((len(sizes), len(sizes)), cfg.inter_prob)
    np.fill_diagonal(probs, cfg.intra_prob)

    for attempt in range(1, cfg.max_regen_attempts + 1):
        drawn = nx.stochastic_block_model(sizes, probs.tolist(), seed=int(rng.integers(2**32)), sparse=True)
        if nx.is_connected(drawn):
            break
        logger.debug("SBM draw %d/%d disconnected, regenerating", attempt, cfg.max_regen_attempts)
    else:
        if not cfg.repair:
            raise GenerationError(
                f"SBM draw with sizes {sizes} still disconnected after {cfg.max_regen_attempts} attempts"
            )
        added = _repair_connectivity(drawn, rng)
        logger.warning("SBM draw repaired with %d bridging edge(s): %s", len(added), added)

    partition = Partition.from_sizes(sizes)
    return Graph(partition.node_count, drawn.edges()), partition


def _repair_connectivity(graph, rng):
    """Join components with uniform bridges between reached and unreached nodes."""
    component_of = {}
    for index, component in enumerate(nx.connected_components(graph)):
        component_of.update(dict.fromkeys(component, index))
    nodes = sorted(component_of)
    reached = [node for node in nodes if component_of[node] == component_of[nodes[0]]]
    remaining = [node for node in nodes if component_of[node] != component_of[nodes[0]]]
    added = []
    while remaining:
        u = reached[rng.integers(len(reached))]
        v = remaining[rng.integers(len(remaining))]
        graph.add_edge(u, v)
        added.append((min(u, v), max(u, v)))
        joined = [node for node in remaining if component_of[node] == component_of[v]]
        reached.extend(joined)
        remaining = [node for node in remaining if component_of[node] != component_of[v]]
    return added
