import itertools

import networkx as nx
import numpy as np
from django.test import SimpleTestCase

from sampling.exceptions import DomainError, GenerationError
from sampling.graphs import Graph, Partition, SbmConfig, _repair_connectivity, sbm_generate

from .fixtures import dumbbell, path_graph, random_connected_graph, star_graph, triangle


class GraphConstructionTests(SimpleTestCase):
    def test_adjacency_matches_edges(self):
        graph = Graph(4, [(2, 0), (0, 1), (3, 2)])
        self.assertEqual(graph.adjacency, ((1, 2), (0,), (0, 3), (2,)))
        self.assertEqual(sum(len(adj) for adj in graph.adjacency), 2 * graph.edge_count)

    def test_rejects_self_loop(self):
        with self.assertRaises(DomainError):
            Graph(2, [(0, 1), (1, 1)])

    def test_rejects_duplicate_edge_in_either_orientation(self):
        with self.assertRaises(DomainError):
            Graph(2, [(0, 1), (1, 0)])

    def test_rejects_disconnected_graph(self):
        with self.assertRaises(DomainError):
            Graph(4, [(0, 1), (2, 3)])

    def test_rejects_unknown_node(self):
        with self.assertRaises(DomainError):
            Graph(2, [(0, 2)])

    def test_single_node_graph(self):
        graph = Graph(1, [])
        self.assertEqual(graph.edge_count, 0)
        self.assertEqual(graph.distance(0, 0), 0)


class DistanceTests(SimpleTestCase):
    def test_examples(self):
        self.assertEqual(path_graph().distance(0, 2), 2)
        self.assertEqual(triangle().distance(0, 1), 1)
        for i in range(3):
            self.assertEqual(path_graph().distance(i, i), 0)

    def test_invalid_node(self):
        with self.assertRaises(DomainError):
            path_graph().distance(0, 3)

    def test_metric_on_small_graphs(self):
        rng = np.random.default_rng(7)
        for _ in range(20):
            n = int(rng.integers(2, 13))
            graph = random_connected_graph(rng, n)
            hops = [[graph.distance(i, j) for j in range(n)] for i in range(n)]
            for i, j in itertools.product(range(n), repeat=2):
                self.assertEqual(hops[i][j], hops[j][i])
                self.assertEqual(hops[i][j] == 0, i == j)
                for k in range(n):
                    self.assertLessEqual(hops[i][j], hops[i][k] + hops[k][j])
            np.testing.assert_array_equal(graph.distances(), np.array(hops))


class RingTests(SimpleTestCase):
    def test_examples(self):
        self.assertEqual(set(path_graph().ring(0, 2)), {2})
        self.assertEqual(set(star_graph().ring(1, 2)), {2, 3, 4})
        self.assertEqual(len(path_graph().ring(0, 3)), 0)

    def test_radius_must_be_positive(self):
        with self.assertRaises(DomainError):
            path_graph().ring(0, 0)

    def test_first_ring_is_neighbourhood(self):
        rng = np.random.default_rng(11)
        for cached in (False, True):
            graph = random_connected_graph(rng, 15)
            if cached:
                graph.distances()
            for i in range(graph.node_count):
                self.assertEqual(tuple(graph.ring(i, 1)), graph.adjacency[i])

    def test_rings_partition_the_other_nodes(self):
        rng = np.random.default_rng(3)
        graph = random_connected_graph(rng, 12, extra_prob=0.1)
        for i in range(graph.node_count):
            rings = [set(graph.ring(i, r)) for r in range(1, graph.node_count)]
            covered = set().union(*rings)
            self.assertEqual(covered, set(range(graph.node_count)) - {i})
            self.assertEqual(sum(len(ring) for ring in rings), graph.node_count - 1)

    def test_cached_and_bfs_rings_agree(self):
        rng = np.random.default_rng(5)
        graph = random_connected_graph(rng, 20, extra_prob=0.05)
        bfs = [[tuple(graph.ring(i, r)) for r in range(1, 6)] for i in range(graph.node_count)]
        graph.distances()
        self.assertTrue(graph.has_distance_cache)
        cached = [[tuple(graph.ring(i, r)) for r in range(1, 6)] for i in range(graph.node_count)]
        self.assertEqual(bfs, cached)


class IncidenceRowsTests(SimpleTestCase):
    def test_lexicographic_order(self):
        self.assertEqual(triangle().incidence_rows(), [(0, 1), (0, 2), (1, 2)])
        self.assertEqual(path_graph().incidence_rows(), [(0, 1), (1, 2)])

    def test_stable_across_calls(self):
        graph, _ = dumbbell()
        self.assertEqual(graph.incidence_rows(), graph.incidence_rows())

    def test_difference_operator_orientation(self):
        graph, _ = dumbbell()
        x = np.arange(graph.node_count, dtype=float) ** 2
        expected = [x[j] - x[i] for i, j in graph.incidence_rows()]
        np.testing.assert_allclose(graph.difference_operator @ x, expected)


class PartitionTests(SimpleTestCase):
    def test_from_sizes(self):
        partition = Partition.from_sizes([2, 3])
        self.assertEqual(partition.clusters, ((0, 1), (2, 3, 4)))
        np.testing.assert_array_equal(partition.cluster_of, [0, 0, 1, 1, 1])

    def test_from_labels(self):
        partition = Partition.from_labels([1, 0, 1])
        self.assertEqual(partition.clusters, ((1,), (0, 2)))

    def test_invalid_partitions(self):
        with self.assertRaises(DomainError):
            Partition(((0, 1), (1, 2)))
        with self.assertRaises(DomainError):
            Partition(((0,), ()))
        with self.assertRaises(DomainError):
            Partition(((0, 2),))
        with self.assertRaises(DomainError):
            Partition.from_labels([0, 2])


class SbmGenerateTests(SimpleTestCase):
    def test_config_invariants(self):
        with self.assertRaises(DomainError):
            SbmConfig(intra_prob=0.1, inter_prob=0.2)
        with self.assertRaises(DomainError):
            SbmConfig(cluster_count=0)
        with self.assertRaises(DomainError):
            SbmConfig(size_success_prob=0.0)

    def test_two_triangles_repaired_with_one_bridge(self):
        cfg = SbmConfig(cluster_count=2, intra_prob=1.0, inter_prob=0.0)
        graph, partition = sbm_generate(cfg, [3, 3], np.random.default_rng(0))
        labels = partition.cluster_of
        inter = [(i, j) for i, j in graph.incidence_rows() if labels[i] != labels[j]]
        self.assertEqual(graph.edge_count, 7)
        self.assertEqual(len(inter), 1)

    def test_single_clique(self):
        cfg = SbmConfig(cluster_count=1, intra_prob=1.0, inter_prob=0.0)
        graph, partition = sbm_generate(cfg, [4], np.random.default_rng(0))
        self.assertEqual(graph.edge_count, 6)
        self.assertEqual(len(partition), 1)

    def test_disconnected_without_repair(self):
        cfg = SbmConfig(cluster_count=2, intra_prob=1.0, inter_prob=0.0, max_regen_attempts=2, repair=False)
        with self.assertRaises(GenerationError):
            sbm_generate(cfg, [3, 3], np.random.default_rng(0))

    def test_sizes_drawn_from_geometric(self):
        cfg = SbmConfig()
        graph, partition = sbm_generate(cfg, rng=np.random.default_rng(42))
        self.assertEqual(len(partition), 10)
        self.assertTrue(all(size >= 1 for size in partition.sizes))
        self.assertEqual(graph.node_count, sum(partition.sizes))

    def test_seed_reproducible(self):
        cfg = SbmConfig()
        first, _ = sbm_generate(cfg, rng=np.random.default_rng(123))
        second, _ = sbm_generate(cfg, rng=np.random.default_rng(123))
        self.assertEqual(first.edges, second.edges)

    def test_edge_densities(self):
        cfg = SbmConfig(cluster_count=2, intra_prob=0.7, inter_prob=0.01)
        intra = inter = 0
        seeds = 200
        for seed in range(seeds):
            graph, partition = sbm_generate(cfg, [50, 50], np.random.default_rng(seed))
            labels = partition.cluster_of
            edges = graph.edge_array
            same = labels[edges[:, 0]] == labels[edges[:, 1]]
            intra += int(same.sum())
            inter += int((~same).sum())
        self.assertAlmostEqual(intra / (seeds * 2 * 1225), 0.7, delta=0.02)
        self.assertAlmostEqual(inter / (seeds * 2500), 0.01, delta=0.005)


class RepairConnectivityTests(SimpleTestCase):
    def test_one_bridge_per_extra_component(self):
        graph = nx.Graph()
        graph.add_nodes_from(range(10))
        graph.add_edges_from([(0, 1), (1, 2), (3, 4), (4, 5), (6, 7), (7, 8)])
        before = {node: index for index, comp in enumerate(nx.connected_components(graph)) for node in comp}
        added = _repair_connectivity(graph, np.random.default_rng(0))
        self.assertTrue(nx.is_connected(graph))
        self.assertEqual(len(added), 3)
        for u, v in added:
            self.assertNotEqual(before[u], before[v])

    def test_bridges_uniform_over_node_pairs(self):
        rng = np.random.default_rng(1)
        counts = {}
        draws = 6000
        for _ in range(draws):
            graph = nx.Graph([(0, 1), (2, 3), (3, 4)])
            (edge,) = _repair_connectivity(graph, rng)
            counts[edge] = counts.get(edge, 0) + 1
        self.assertEqual(set(counts), {(u, v) for u in (0, 1) for v in (2, 3, 4)})
        for count in counts.values():
            self.assertAlmostEqual(count / draws, 1 / 6, delta=0.03)

    def test_three_cliques_need_two_bridges(self):
        cfg = SbmConfig(cluster_count=3, intra_prob=1.0, inter_prob=0.0, max_regen_attempts=1)
        graph, _ = sbm_generate(cfg, [3, 3, 3], np.random.default_rng(2))
        self.assertEqual(graph.edge_count, 3 * 3 + 2)
