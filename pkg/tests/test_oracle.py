"""Cross-checks between the brute-force reference functions."""
import random
import unittest
from math import comb
from unittest.mock import patch

import networkx as nx

from models.errors import SizeLimitError
from services.generators import split_graph
from services.oracle import (
    SimpleGraph,
    c4_brute,
    census_brute,
    endpoint_paths_brute,
    gradual_replay,
    h_index_brute,
    noninduced_brute,
    oracle_statistics,
    p2_brute,
    p3_brute,
    p4_brute,
    path_square_identity,
    paw_brute,
    q_brute,
    stars_brute,
    triangles_brute,
)
from tests.helpers import build_simple


def from_nx(graph):
    return build_simple(list(graph.edges()), n=graph.number_of_nodes())


class TestOracle(unittest.TestCase):
    def test_h_index(self):
        self.assertEqual(h_index_brute(SimpleGraph()), 0)
        self.assertEqual(h_index_brute(from_nx(nx.complete_graph(5))), 4)
        self.assertEqual(h_index_brute(from_nx(split_graph(4, 14))), 4)

    def test_k4(self):
        g = from_nx(nx.complete_graph(4))
        self.assertEqual(triangles_brute(g), 4)
        self.assertEqual(census_brute(g), (0, 0, 0, 4))
        self.assertEqual(noninduced_brute(g), (4, 12, 12, 4))
        self.assertEqual(p3_brute(g), 12)

    def test_path_on_three(self):
        g = build_simple([(0, 1), (1, 2)])
        self.assertEqual(census_brute(g), (0, 0, 1, 0))
        self.assertEqual(p2_brute(g), 1)

    def test_four_cycle(self):
        g = from_nx(nx.cycle_graph(4))
        self.assertEqual(p3_brute(g), 4)
        self.assertEqual(c4_brute(g), 1)
        self.assertEqual(q_brute(g), 4)

    def test_claw_square_identity(self):
        g = build_simple([(0, 1), (0, 2), (0, 3)])
        lhs, rhs = path_square_identity(g)
        # Each leaf ends two paths: 3 * 2**2.
        self.assertEqual(lhs, 12)
        self.assertEqual(lhs, rhs)

    def test_paw(self):
        g = build_simple([(0, 1), (1, 2), (2, 0), (2, 3)])
        self.assertEqual(paw_brute(g), 1)
        self.assertEqual(endpoint_paths_brute(g, 3), 2)

    def test_p4_on_path(self):
        g = from_nx(nx.path_graph(5))
        self.assertEqual(p4_brute(g), 1)

    def test_internal_identities_on_random_graphs(self):
        for seed in range(15):
            with self.subTest(seed=seed):
                g = from_nx(nx.gnp_random_graph(9, 0.45, seed=seed))
                n = len(g.colors)
                census = census_brute(g)
                self.assertEqual(sum(census), comb(n, 3))
                self.assertEqual(q_brute(g), p3_brute(g) + 3 * triangles_brute(g))
                self.assertEqual(stars_brute(g, 2), p2_brute(g))
                lhs, rhs = path_square_identity(g)
                self.assertEqual(lhs, rhs)

    def test_size_limit(self):
        g = from_nx(nx.empty_graph(25))
        with self.assertRaises(SizeLimitError):
            triangles_brute(g)
        self.assertEqual(triangles_brute(g, limit=30), 0)
        with patch.dict("os.environ", {"HSTAT_ORACLE_MAX_VERTICES": "30"}):
            self.assertEqual(triangles_brute(g), 0)

    def test_q_edge_limit(self):
        g = from_nx(nx.complete_graph(17))
        with self.assertRaises(SizeLimitError):
            q_brute(g)

    def test_gradual_replay_rules(self):
        steps = [
            ({"x": 1}, {"x"}),
            ({"x": 2}, {"x"}),
            ({"x": 1}, {"x"}),
            ({"x": 0}, set()),
        ]
        self.assertEqual(gradual_replay(steps), [set(), {"x"}, {"x"}, set()])

    def test_statistics_keys(self):
        rng = random.Random(1)
        g = from_nx(nx.complete_graph(4))
        for e in g.weights:
            g.weights[e] = rng.random()
        for v in g.colors:
            g.colors[v] = v % 2
        stats = oracle_statistics(g, k_star=3, weighted=True, colors=2)
        self.assertEqual(stats["c3"], 4)
        self.assertIn("s3", stats)
        self.assertNotIn("s4", stats)
        self.assertEqual(stats["color_census"], {"0,0,1": 2, "0,1,1": 2})
        self.assertIn("total_weight", stats)

    def test_weight_without_triangles_is_float(self):
        stats = oracle_statistics(build_simple([(0, 1), (1, 2)]), weighted=True, census=False)
        self.assertIsInstance(stats["total_weight"], float)
        self.assertEqual(stats["total_weight"], 0.0)


if __name__ == "__main__":
    unittest.main()
