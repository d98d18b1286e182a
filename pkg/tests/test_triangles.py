"""Tests for dynamic triangle counting and the two-path table."""
import random
import unittest

import networkx as nx

from models.errors import FeatureDisabledError, InternalInconsistencyError
from models.gradual import CoreEvent, CoreEventKind
from services.engine import GraphStatsEngine
from services.generators import random_operation_stream
from services.oracle import colored_brute, triangles_brute, weighted_brute
from services.triangles import PathTable
from tests.helpers import TraceDriver, build_engine, build_simple

K4 = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]


class TestTriangleCounter(unittest.TestCase):
    def test_triangle(self):
        engine = build_engine([(0, 1), (1, 2)])
        self.assertEqual(engine.triangles.count_for_edge(2, 0).count, 1)
        engine.add_edge(2, 0)
        self.assertEqual(engine.triangles.triangle_count(), 1)

    def test_empty_graph_counts_nothing(self):
        engine = build_engine([], n=3)
        self.assertEqual(engine.triangles.count_for_edge(0, 1).count, 0)
        self.assertEqual(engine.triangles.cell_count(), 0)

    def test_k4_and_removal(self):
        engine = build_engine(K4)
        self.assertEqual(engine.triangles.triangle_count(), 4)
        engine.remove_edge(2, 3)
        self.assertEqual(engine.triangles.triangle_count(), 2)

    def test_weighted_triangle(self):
        engine = build_engine([(0, 1, 0.5), (1, 2, 0.5), (0, 2, 1.0)], weighted=True)
        self.assertAlmostEqual(engine.triangles.total_weight(), 0.25, places=12)

    def test_unit_weights_equal_count(self):
        engine = build_engine(K4 + [(3, 4), (2, 4)], weighted=True)
        self.assertEqual(engine.triangles.total_weight(), float(engine.triangles.triangle_count()))

    def test_teardown_returns_weights_to_zero(self):
        rng = random.Random(7)
        edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]
        engine = GraphStatsEngine(weighted=True, colors=2)
        for v in range(4):
            engine.add_vertex(v, v % 2)
        for _ in range(200):
            for u, v in edges:
                engine.add_edge(u, v, rng.random())
            self.assertEqual(engine.triangles.triangle_count(), 2)
            for u, v in rng.sample(edges, len(edges)):
                engine.remove_edge(u, v)
            self.assertEqual(engine.triangles.total_weight(), 0.0)
            self.assertEqual(engine.triangles.weighted_color_census(), {})
            self.assertEqual(engine.triangles.color_census(), {})

    def test_colored_triangle(self):
        engine = GraphStatsEngine(colors=2)
        for v, c in ((0, 0), (1, 0), (2, 1)):
            engine.add_vertex(v, c)
        for u, v in ((0, 1), (1, 2), (2, 0)):
            engine.add_edge(u, v)
        self.assertEqual(engine.triangles.color_census(), {(0, 0, 1): 1})

    def test_single_color_degenerates_to_count(self):
        engine = build_engine(K4, colors=1)
        self.assertEqual(engine.triangles.color_census(), {(0, 0, 0): 4})

    def test_disabled_features(self):
        engine = build_engine(K4)
        with self.assertRaises(FeatureDisabledError):
            engine.triangles.total_weight()
        with self.assertRaises(FeatureDisabledError):
            engine.triangles.color_census()
        with self.assertRaises(FeatureDisabledError):
            engine.triangles.weighted_color_census()

    def test_hub_entering_core_removes_spoke_pairs(self):
        engine = build_engine([(0, 1), (0, 2), (0, 3), (0, 4)])
        tri = engine.triangles
        self.assertTrue(engine.graph.in_core(0))
        self.assertEqual(tri.cell_count(), 0)
        tri.on_core_event(CoreEvent(0, CoreEventKind.LEAVE))
        self.assertEqual(tri.cell_count(), 6)
        tri.on_core_event(CoreEvent(0, CoreEventKind.ENTER))
        self.assertEqual(tri.cell_count(), 0)

    def test_isolated_core_change_touches_nothing(self):
        engine = build_engine([], n=2)
        engine.triangles.on_core_event(CoreEvent(0, CoreEventKind.LEAVE))
        engine.triangles.on_core_event(CoreEvent(0, CoreEventKind.ENTER))
        self.assertEqual(engine.triangles.cell_count(), 0)

    def test_path_table_cells_keyed_on_count(self):
        table = PathTable(weighted=True)
        table.add_path(1, 2, 0.0, None)
        table.add_path(2, 1, 0.0, None)
        self.assertEqual(table.get(1, 2).count, 2)
        self.assertEqual(table.get(1, 2).weight_sum, 0.0)
        table.remove_path(1, 2, 0.0, None)
        self.assertIsNotNone(table.get(2, 1))
        table.remove_path(1, 2, 0.0, None)
        self.assertIsNone(table.get(1, 2))
        with self.assertRaises(InternalInconsistencyError):
            table.remove_path(1, 2, 0.0, None)

    def test_insert_then_delete_restores_table_when_core_unchanged(self):
        engine = build_engine([(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)])
        core = engine.graph.partition.core_set()
        table = engine.triangles.table_fingerprint()
        engine.add_edge(1, 4)
        engine.remove_edge(1, 4)
        if engine.graph.partition.core_set() == core:
            self.assertEqual(engine.triangles.table_fingerprint(), table)
        self.assertEqual(engine.triangles.triangle_count(), 0)

    def test_gnp_instances_match_brute_force(self):
        for seed in range(5):
            with self.subTest(seed=seed):
                rng = random.Random(seed)
                g = nx.gnp_random_graph(12, 0.4, seed=seed)
                colors = {v: rng.randrange(3) for v in g.nodes()}
                engine = GraphStatsEngine(weighted=True, colors=3, census=False)
                simple = build_simple([], n=12)
                for v in range(12):
                    engine.add_vertex(v, colors[v])
                    simple.add_vertex(v, colors[v])
                for u, v in g.edges():
                    w = rng.random()
                    engine.add_edge(u, v, w)
                    simple.add_edge(u, v, w)
                tri = engine.triangles
                self.assertEqual(tri.triangle_count(), triangles_brute(simple))
                self.assertAlmostEqual(tri.total_weight(), weighted_brute(simple), delta=1e-9)
                self.assertEqual(tri.color_census(), colored_brute(simple))

    def test_random_traces_weighted_and_colored(self):
        for seed in range(8):
            with self.subTest(seed=seed):
                driver = TraceDriver(weighted=True, colors=3, census=False)
                for op in random_operation_stream(10, 150, seed=seed, weighted=True, colors=3):
                    driver.apply(op)
                    driver.check_partition(self)
                    driver.check_triangles(self)
                    driver.check_path_table(self)


if __name__ == "__main__":
    unittest.main()
