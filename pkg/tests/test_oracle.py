import asyncio
import itertools
import types
import unittest
from unittest import mock
from nichehyper.digraph import Digraph, is_acyclic, niche_hypergraph
from nichehyper.exceptions import BudgetExceeded
from nichehyper.hypergraph import Hypergraph, hypernova
from nichehyper.oracle import LowerBound, NotRealizableUpTo, SearchBudget
from nichehyper.oracle import dag_count, enumeration_audit, fresh_vertices
from nichehyper.oracle import iter_dags, niche_number_upto, realizes
from nichehyper.oracle import realizes_async
from nichehyper.oracle.search import _Search, _run_partition


def H(*edges):
    return Hypergraph.from_edges([e.split() for e in edges])


def two_triple_labelings(names='abcde'):
    seen = set()
    for shared in names:
        rest = [v for v in names if v != shared]
        for pair in itertools.combinations(rest, 2):
            other = tuple(v for v in rest if v not in pair)
            key = frozenset((pair, other))
            if key in seen:
                continue
            seen.add(key)
            yield Hypergraph.from_edges([{shared, *pair}, {shared, *other}])


class TestEnumeration(unittest.TestCase):

    def test_counts(self):
        self.assertEqual(len(list(iter_dags('abc'))), 25)
        self.assertEqual(len(list(iter_dags('abcd'))), 543)
        self.assertEqual(dag_count(3), 25)
        self.assertEqual(dag_count(4), 543)

    def test_distinct(self):
        dags = list(iter_dags('abcd'))
        self.assertEqual(len({d.arcs for d in dags}), len(dags))
        self.assertTrue(all(is_acyclic(d) for d in dags))

    def test_audit(self):
        for n in (3, 4):
            audit = enumeration_audit(n)
            pairs = n * (n - 1) // 2
            self.assertEqual(
                audit.visited, len(list(itertools.permutations(range(n))))
                * 2 ** pairs)
            self.assertEqual(audit.orientations, 3 ** pairs)
            self.assertEqual(audit.acyclic_orientations, dag_count(n))
            self.assertTrue(audit.consistent)


class TestRealizes(unittest.TestCase):

    def test_two_triples(self):
        labelings = list(two_triple_labelings())
        self.assertEqual(len(labelings), 15)
        for h in labelings:
            with self.subTest(h=h):
                self.assertEqual(niche_number_upto(h, 0), 0)
                result = realizes(h, 0)
                self.assertTrue(result.realizable)
                d = result.digraph
                self.assertTrue(is_acyclic(d))
                self.assertEqual(niche_hypergraph(d).hypergraph, h)

    def test_six_vertices(self):
        h = H('a b u', 'u c d e')
        self.assertEqual(niche_number_upto(h, 0), 0)

    def test_single_triple(self):
        h = H('a b c')
        result = realizes(h, 0)
        self.assertFalse(result.realizable)
        self.assertEqual(result.outcome, NotRealizableUpTo(0))
        result = realizes(h, 1)
        self.assertTrue(result.realizable)
        self.assertEqual(result.digraph.in_neighbors('z1'), {'a', 'b', 'c'})
        self.assertEqual(niche_number_upto(h, 2), 1)

    def test_star(self):
        h = hypernova(3, 2)
        self.assertFalse(realizes(h, 0).realizable)
        self.assertFalse(realizes(h, 1).realizable)
        bound = niche_number_upto(h, 1)
        self.assertEqual(bound, LowerBound(2))
        self.assertEqual(str(bound), 'LowerBound(2)')

    def test_monotone(self):
        h = H('a b c')
        d = realizes(h, 1).digraph
        bigger = Digraph(d.vertices | {'z2'}, d.arcs)
        nh = niche_hypergraph(bigger).hypergraph
        self.assertEqual(nh.edges, h.edges)
        self.assertEqual(nh.vertices, h.vertices | {'z1', 'z2'})
        self.assertTrue(realizes(h, 2).realizable)

    def test_vertex_budget(self):
        with self.assertRaises(BudgetExceeded):
            realizes(H('a b u', 'u c d'), 0, SearchBudget(max_vertices=4))

    def test_dag_budget(self):
        # a witness needs at least one counted placement per vertex
        with self.assertRaises(BudgetExceeded) as cm:
            realizes(hypernova(3, 2), 1, SearchBudget(max_dags=3))
        self.assertGreater(cm.exception.dags_examined, 3)

    def test_dag_budget_counts_partial(self):
        result = realizes(hypernova(3, 2), 1)
        self.assertFalse(result.realizable)
        self.assertGreater(result.dags_examined, 0)
        with self.assertRaises(BudgetExceeded):
            realizes(hypernova(3, 2), 1,
                     SearchBudget(max_dags=result.dags_examined - 1))
        again = realizes(
            hypernova(3, 2), 1, SearchBudget(max_dags=result.dags_examined))
        self.assertEqual(again.outcome, NotRealizableUpTo(1))

    def test_time_budget(self):
        with mock.patch.object(_Search, 'CHECK_CLOCK_EVERY', 1):
            with self.assertRaises(BudgetExceeded):
                realizes(hypernova(3, 2), 1, SearchBudget(time_limit=0))

    def test_stopped_partition(self):
        h = H('a b u', 'u c d')
        edges = tuple(frozenset(
            sorted(h.vertices).index(v) for v in e) for e in h.sorted_edges())
        found = types.SimpleNamespace(value=0)
        with mock.patch.object(_Search, 'CHECK_CLOCK_EVERY', 1):
            outcome = _run_partition(5, edges, (0, 1), None, None, 1, found)
        self.assertIsNone(outcome.witness)
        self.assertFalse(outcome.budget_hit)
        running = _run_partition(5, edges, (0, 1), None, None, 0, found)
        self.assertFalse(running.budget_hit)

    def test_fresh_names(self):
        h = H('z1 a b')
        self.assertEqual(fresh_vertices(h, 2), ['z2', 'z3'])

    async def async_test_workers(self):
        h = H('a b u', 'u c d')
        one = await realizes_async(h, 0, SearchBudget(worker_count=1))
        two = await realizes_async(h, 0, SearchBudget(worker_count=2))
        self.assertEqual(one.digraph, two.digraph)

    def test_workers(self):
        asyncio.run(self.async_test_workers())


if __name__ == '__main__':
    unittest.main()
