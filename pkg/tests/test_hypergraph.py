import unittest
from nichehyper.exceptions import BadSpec
from nichehyper.exceptions import BadVertexId
from nichehyper.exceptions import HypergraphError
from nichehyper.exceptions import LoopEdge
from nichehyper.exceptions import NonSimple
from nichehyper.exceptions import NotInT
from nichehyper.exceptions import NoTrunk
from nichehyper.exceptions import UnknownEdge
from nichehyper.exceptions import UnknownVertex
from nichehyper.hypergraph import Branch, Criterion, FamilySpec, Hypergraph
from nichehyper.hypergraph import branch_decomposition, check_host_tree
from nichehyper.hypergraph import classify_t, flower, generate, host_tree
from nichehyper.hypergraph import hypernova, hyperpath, is_uniform
from nichehyper.hypergraph import line_graph, random_t, remove_branch
from nichehyper.hypergraph import transpose_vertices, validate


def H(*edges, isolated=()):
    return Hypergraph.from_edges([e.split() for e in edges], isolated)


class TestValidate(unittest.TestCase):

    def test_two_triples(self):
        report = validate(H('a b u', 'u c d'))
        self.assertEqual(report.degree['u'], 2)
        self.assertEqual(report.max_degree, 2)
        self.assertEqual(report.rank, 3)
        self.assertEqual(report.anti_rank, 3)
        self.assertTrue(report.is_linear)
        self.assertTrue(report.is_connected)
        self.assertEqual(len(report.twigs), 2)
        self.assertFalse(report.trunks)
        self.assertEqual(report.buds, {'a', 'b', 'c', 'd'})

    def test_loop_edge(self):
        with self.assertRaises(LoopEdge):
            validate(Hypergraph({'a', 'b'}, [{'a'}, {'a', 'b'}]))

    def test_non_simple(self):
        with self.assertRaises(NonSimple) as cm:
            validate(H('a b', 'a b c'))
        self.assertEqual(cm.exception.edge, {'a', 'b'})
        self.assertEqual(cm.exception.superedge, {'a', 'b', 'c'})

    def test_unknown_vertex(self):
        with self.assertRaises(UnknownVertex) as cm:
            validate(Hypergraph({'a', 'b'}, [{'a', 'b', 'c'}]))
        self.assertEqual(cm.exception.vertex, 'c')
        self.assertIsInstance(cm.exception, LookupError)

    def test_bad_vertex_id(self):
        with self.assertRaises(BadVertexId):
            validate(Hypergraph({'a b', 'c'}, [{'a b', 'c'}]))
        self.assertTrue(issubclass(BadVertexId, HypergraphError))

    def test_isolated(self):
        report = validate(H('a b c', isolated=['z']))
        self.assertEqual(report.isolated, {'z'})
        self.assertFalse(report.is_connected)

    def test_trunks(self):
        report = validate(hyperpath(4, 3))
        self.assertEqual(len(report.trunks), 2)
        self.assertEqual(len(report.twigs), 2)
        self.assertEqual(report.to_dict()['edges'], 4)

    def test_transpose(self):
        h = transpose_vertices(H('a b u', 'u c d'), 'a', 'c')
        self.assertEqual(h, H('c b u', 'u a d'))


class TestClassify(unittest.TestCase):

    def test_in_t(self):
        self.assertTrue(classify_t(hyperpath(3, 3)).in_t)
        self.assertEqual(classify_t(hyperpath(3, 3)).verdict, 'IN_T')

    def test_single_edge(self):
        m = classify_t(H('a b c'))
        self.assertFalse(m.in_t)
        self.assertIs(m.criterion, Criterion.EDGE_COUNT)

    def test_anti_rank(self):
        m = classify_t(H('a b u', 'u c'))
        self.assertIs(m.criterion, Criterion.ANTI_RANK)

    def test_nova(self):
        m = classify_t(hypernova(3, 3))
        self.assertIs(m.criterion, Criterion.MAX_DEGREE)
        self.assertEqual(m.reason, 'Δ=3 at x')

    def test_flower_degree(self):
        m = classify_t(flower(6, 6))
        self.assertEqual(m.verdict, 'NOT_IN_T')
        self.assertEqual(m.reason, 'Δ=6 at v1_1')

    def test_not_linear(self):
        m = classify_t(H('a b c', 'a b d'))
        self.assertIs(m.criterion, Criterion.LINEAR)

    def test_hypercycle(self):
        m = classify_t(H('a b x', 'x c y', 'y d z', 'z e a'))
        self.assertIs(m.criterion, Criterion.HYPERTREE)

    def test_disconnected(self):
        m = classify_t(H('a b c', 'd e f'))
        self.assertIs(m.criterion, Criterion.CONNECTED)

    def test_isolated(self):
        m = classify_t(H('a b u', 'u c d', isolated=['z']))
        self.assertIs(m.criterion, Criterion.ISOLATED)
        self.assertEqual(m.witness, 'z')


class TestGenerate(unittest.TestCase):

    def test_hyperpath(self):
        h = hyperpath(4, 3)
        self.assertEqual(len(h.vertices), 9)
        self.assertTrue(is_uniform(h))

    def test_hypernova(self):
        h = hypernova(3, 2)
        self.assertEqual(len(h.edges), 3)
        self.assertEqual(validate(h).degree['x'], 3)

    def test_flower_shape(self):
        h = flower(6, 6)
        self.assertEqual(len(h.vertices), 5 * 5 + (5 * 5 + 1) + 5)
        report = validate(h)
        self.assertEqual(report.max_degree, 6)
        self.assertEqual(report.degree['v1_1'], 6)
        self.assertTrue(report.is_linear)
        self.assertTrue(is_uniform(h))

    def test_bad_spec(self):
        with self.assertRaises(BadSpec):
            generate(FamilySpec.flower(7, 3))
        with self.assertRaises(BadSpec):
            generate(FamilySpec.random_t(1))
        with self.assertRaises(BadSpec):
            generate(FamilySpec.hyperpath(0, 3))

    def test_random_in_t(self):
        for seed in range(50):
            h = random_t(2 + seed % 11, (3, 6), seed)
            self.assertTrue(classify_t(h).in_t, seed)
            self.assertTrue(check_host_tree(h, host_tree(h)), seed)

    def test_random_shape(self):
        for seed in range(100):
            h = random_t(2 + seed % 15, (3, 6), seed)
            report = validate(h)
            for e in h.edges:
                self.assertNotEqual(
                    e in report.twigs, e in report.trunks, (seed, e))
            self.assertEqual(set(report.twigs) | set(report.trunks), h.edges)
            self.assertTrue(
                all(report.degree[v] in (1, 2) for v in h.vertices), seed)

    def test_random_deterministic(self):
        self.assertEqual(random_t(7, (3, 6), 3), random_t(7, (3, 6), 3))

    def test_host_tree_rejects(self):
        h = hyperpath(3, 3)
        tree = host_tree(h)
        tree.remove_edge(*next(iter(tree.edges)))
        self.assertFalse(check_host_tree(h, tree))

    def test_line_graph(self):
        g = line_graph(hyperpath(4, 3))
        self.assertEqual(g.number_of_nodes(), 4)
        self.assertEqual(g.number_of_edges(), 3)


class TestBranches(unittest.TestCase):

    def test_base(self):
        bd = branch_decomposition(hyperpath(3, 3))
        self.assertTrue(bd.is_base)
        self.assertEqual(len(bd.removable.twigs), 2)

    def test_removable(self):
        h = hyperpath(4, 3)
        bd = branch_decomposition(h)
        self.assertFalse(bd.is_base)
        self.assertEqual(bd.removable.trunk, {'p2', 'p3', 'p4'})
        self.assertEqual(bd.removable.attachment, 'p4')
        rest = remove_branch(h, bd.removable)
        self.assertEqual(rest, H('p4 p5 p6', 'p6 p7 p8'))

    def test_remove_random(self):
        for seed in range(100):
            h = random_t(2 + seed % 15, (3, 6), seed)
            if len(validate(h).trunks) < 2:
                continue
            bd = branch_decomposition(h)
            rest = remove_branch(h, bd.removable)
            self.assertEqual(
                len(rest.edges), len(h.edges) - len(bd.removable.edges))
            self.assertGreaterEqual(len(rest.edges), 2, seed)
            self.assertTrue(validate(rest).is_connected, seed)
            self.assertTrue(classify_t(rest).in_t, seed)
            self.assertIn(bd.removable.attachment, rest.vertices)

    def test_two_twigs(self):
        with self.assertRaises(NoTrunk):
            branch_decomposition(H('a b u', 'u c d'))

    def test_not_in_t(self):
        with self.assertRaises(NotInT):
            branch_decomposition(hypernova(3, 3))

    def test_remove_unknown(self):
        h = hyperpath(3, 3)
        branch = Branch(frozenset({'x', 'y', 'z'}), ())
        with self.assertRaises(UnknownEdge):
            remove_branch(h, branch)

    def test_remove_keeps_isolated(self):
        h = H('a b u', 'u c d', 'd e f', isolated=['z'])
        branch = Branch(frozenset({'a', 'b', 'u'}), ())
        self.assertIn('z', remove_branch(h, branch).vertices)


if __name__ == '__main__':
    unittest.main()
