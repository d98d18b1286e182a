"""Shared trace driver: applies operations to the engine and to a brute-force
mirror, then checks every maintained statistic against the mirror."""
import math
from collections import Counter
from itertools import combinations
from math import comb

from services.engine import GraphStatsEngine
from services.ingest import OpKind
from services.oracle import (
    SimpleGraph,
    census_brute,
    colored_brute,
    endpoint_paths_brute,
    h_index_brute,
    is_h_partition,
    noninduced_brute,
    p2_brute,
    p3_brute,
    stars_brute,
    triangles_brute,
    weighted_brute,
    weighted_colored_brute,
)


def build_engine(edges, n=None, **kwargs):
    """Engine holding vertices ``0..n-1`` (or the edge endpoints) and ``edges``."""
    engine = GraphStatsEngine(**kwargs)
    vertices = range(n) if n is not None else sorted({x for e in edges for x in e[:2]})
    for v in vertices:
        engine.add_vertex(v)
    for e in edges:
        engine.add_edge(*e)
    return engine


def build_simple(edges, n=None):
    g = SimpleGraph()
    vertices = range(n) if n is not None else sorted({x for e in edges for x in e[:2]})
    for v in vertices:
        g.add_vertex(v)
    for e in edges:
        g.add_edge(*e)
    return g


class TraceDriver:
    def __init__(self, weighted=False, colors=0, census=True, k_star=4):
        self.engine = GraphStatsEngine(weighted=weighted, colors=colors, census=census, k_star=k_star)
        self.mirror = SimpleGraph()
        self.weighted = weighted
        self.colors = colors
        self.k_star = k_star

    def apply(self, op):
        engine, mirror = self.engine, self.mirror
        ids = [int(x) for x in op.ids]
        if op.kind is OpKind.ADD_VERTEX:
            engine.add_vertex(ids[0], op.color)
            mirror.add_vertex(ids[0], engine.graph.color(ids[0]))
        elif op.kind is OpKind.REMOVE_VERTEX:
            engine.remove_vertex(ids[0])
            mirror.remove_vertex(ids[0])
        elif op.kind is OpKind.ADD_EDGE:
            engine.add_edge(ids[0], ids[1], op.weight)
            mirror.add_edge(ids[0], ids[1], op.weight if op.weight is not None else 1.0)
        elif op.kind is OpKind.REMOVE_EDGE:
            engine.remove_edge(ids[0], ids[1])
            mirror.remove_edge(ids[0], ids[1])

    # ------------------------------------------------------------------ checks

    def check_partition(self, test):
        partition = self.engine.graph.partition
        g = self.mirror
        values = {v: g.degree(v) for v in g.vertices}
        high = partition.high_set()
        core = partition.core_set()
        h = partition.h()
        test.assertEqual(h, h_index_brute(g))
        test.assertTrue(is_h_partition(values, high))
        test.assertLessEqual(core, high)
        # Every high member at or above twice h has been promoted.
        for x in high - core:
            test.assertLess(values[x], 2 * h)
        test.assertEqual(partition.waiting_set(), high - core)

    def check_triangles(self, test):
        tri = self.engine.triangles
        g = self.mirror
        test.assertEqual(tri.triangle_count(), triangles_brute(g))
        if self.weighted:
            expected = weighted_brute(g)
            test.assertTrue(math.isclose(tri.total_weight(), expected, rel_tol=1e-9, abs_tol=1e-9),
                            f"{tri.total_weight()} != {expected}")
        if self.colors:
            census = tri.color_census()
            test.assertEqual(census, colored_brute(g))
            test.assertEqual(sum(census.values()), tri.triangle_count())
            if self.weighted:
                expected = weighted_colored_brute(g)
                actual = tri.weighted_color_census()
                test.assertEqual(set(actual), set(expected))
                for key, value in expected.items():
                    test.assertTrue(math.isclose(actual[key], value, rel_tol=1e-9, abs_tol=1e-9))

    def expected_table(self):
        graph = self.engine.graph
        counts = Counter()
        color_counts = Counter()
        for w in graph.vertices():
            if graph.in_core(w):
                continue
            for a, b in combinations(sorted(graph.adjacency(w)), 2):
                counts[(a, b)] += 1
                if self.colors:
                    color_counts[(a, b, graph.color(w))] += 1
        return counts, color_counts

    def check_path_table(self, test):
        tri = self.engine.triangles
        counts, color_counts = self.expected_table()
        actual = {key: cell.count for key, cell in tri.table.entries.items()}
        test.assertEqual(actual, dict(counts))
        if self.colors:
            for key, cell in tri.table.entries.items():
                for c, n in enumerate(cell.colors):
                    test.assertEqual(n, color_counts.get((key[0], key[1], c), 0))
        test.assertLessEqual(tri.cell_count(), tri.space_bound())

    def check_census(self, test):
        census = self.engine.census
        if census is None:
            return
        g = self.mirror
        n, m = len(g.colors), len(g.weights)
        c3 = triangles_brute(g)
        induced = census.induced_census()
        test.assertEqual(tuple(induced), census_brute(g))
        test.assertEqual(tuple(census.noninduced_counts()), noninduced_brute(g))
        test.assertEqual(census.p2, p2_brute(g))
        for i in range(1, self.k_star + 1):
            test.assertEqual(census.star_count(i), stars_brute(g, i))
        test.assertEqual(census.path3_count(), p3_brute(g))
        partition = self.engine.graph.partition
        test.assertEqual(set(census.endpoint_paths), partition.core_set())
        for v, stored in census.endpoint_paths.items():
            test.assertEqual(stored, endpoint_paths_brute(g, v))

        g0, g1, g2, g3 = induced
        test.assertEqual(g0 + g1 + g2 + g3, comb(n, 3))
        test.assertEqual(g2 + 3 * g3, census.p2)
        test.assertEqual(g1 + 2 * g2 + 3 * g3, m * (n - 2) if n >= 2 else 0)
        test.assertEqual(census.q, census.path3_count() + 3 * c3)

    def check_all(self, test):
        self.check_partition(test)
        self.check_triangles(test)
        self.check_path_table(test)
        self.check_census(test)
