import numpy as np
from django.test import SimpleTestCase

from sampling.exceptions import DomainError
from sampling.graph_signals import (
    ClusteredSignalSpec,
    ladder_coefficients,
    mse,
    nmse,
    realize,
    to_db,
    total_variation,
)
from sampling.graphs import Partition

from .fixtures import dumbbell, path_graph, random_connected_graph, random_partition


class RealizeTests(SimpleTestCase):
    def test_two_clusters(self):
        spec = ClusteredSignalSpec(Partition(((0, 1), (2, 3))), (0.0, 1.0))
        np.testing.assert_array_equal(realize(spec), [0.0, 0.0, 1.0, 1.0])

    def test_single_cluster_is_constant(self):
        spec = ClusteredSignalSpec(Partition.from_sizes([5]), (2.5,))
        np.testing.assert_array_equal(realize(spec), np.full(5, 2.5))

    def test_ladder_coefficients(self):
        partition = Partition.from_sizes([3] * 10)
        signal = realize(ClusteredSignalSpec(partition, ladder_coefficients(10)))
        self.assertEqual(sorted(set(signal)), [float(l) for l in range(1, 11)])
        for label, cluster in enumerate(partition.clusters, start=1):
            self.assertTrue(np.all(signal[list(cluster)] == label))

    def test_coefficient_count_must_match(self):
        with self.assertRaises(DomainError):
            realize(ClusteredSignalSpec(Partition.from_sizes([2, 2]), (1.0,)))


class TotalVariationTests(SimpleTestCase):
    def test_examples(self):
        self.assertEqual(total_variation(path_graph(), [3.0, 3.0, 3.0]), 0.0)
        self.assertEqual(total_variation(path_graph(), [0.0, 2.0, 5.0]), 5.0)
        graph, partition = dumbbell()
        step = realize(ClusteredSignalSpec(partition, (0.0, 1.0)))
        self.assertEqual(total_variation(graph, step), 1.0)

    def test_length_mismatch(self):
        with self.assertRaises(DomainError):
            total_variation(path_graph(), [1.0, 2.0])

    def test_seminorm_properties(self):
        rng = np.random.default_rng(0)
        graph = random_connected_graph(rng, 15)
        for _ in range(50):
            x, y = rng.normal(size=(2, 15))
            c = rng.normal()
            self.assertAlmostEqual(total_variation(graph, c * x), abs(c) * total_variation(graph, x))
            self.assertLessEqual(
                total_variation(graph, x + y),
                total_variation(graph, x) + total_variation(graph, y) + 1e-12,
            )
            self.assertAlmostEqual(total_variation(graph, x + c), total_variation(graph, x))

    def test_clustered_signal_counts_boundary_edges(self):
        rng = np.random.default_rng(1)
        for _ in range(30):
            n = int(rng.integers(2, 13))
            graph = random_connected_graph(rng, n)
            partition = random_partition(rng, n)
            coefficients = rng.normal(size=len(partition))
            signal = realize(ClusteredSignalSpec(partition, coefficients))
            labels = partition.cluster_of
            expected = sum(
                abs(coefficients[labels[i]] - coefficients[labels[j]])
                for i, j in graph.incidence_rows()
                if labels[i] != labels[j]
            )
            self.assertAlmostEqual(total_variation(graph, signal), expected)


class ErrorMetricTests(SimpleTestCase):
    def test_mse(self):
        self.assertEqual(mse([1.0, 2.0], [1.0, 2.0]), 0.0)
        self.assertEqual(mse([0.0, 0.0], [1.0, 1.0]), 1.0)
        with self.assertRaises(DomainError):
            mse([1.0], [1.0, 2.0])

    def test_nmse(self):
        self.assertEqual(nmse([1.0, 1.0], [0.0, 0.0]), 1.0)
        self.assertEqual(nmse([2.0, 0.0], [1.0, 0.0]), 0.25)
        with self.assertRaises(DomainError):
            nmse([0.0, 0.0], [1.0, 0.0])

    def test_nmse_is_scale_invariant(self):
        rng = np.random.default_rng(2)
        x, y = rng.normal(size=(2, 20))
        self.assertAlmostEqual(nmse(3.0 * x, 3.0 * y), nmse(x, y))


class DecibelTests(SimpleTestCase):
    def test_values(self):
        self.assertEqual(to_db(1.0), (0.0, False))
        self.assertAlmostEqual(to_db(0.1).value, -10.0)
        self.assertAlmostEqual(to_db(0.01).value, -20.0)
        self.assertFalse(to_db(0.01).clamped)

    def test_zero_is_clamped(self):
        self.assertEqual(to_db(0.0), (-120.0, True))
        self.assertEqual(to_db(0.0, floor=-80.0), (-80.0, True))

    def test_tiny_ratio_is_clamped(self):
        self.assertEqual(to_db(1e-15), (-120.0, True))
        self.assertEqual(to_db(1e-15, floor=-200.0).clamped, False)
