import itertools
import unittest
from hypothesis import given, settings
from hypothesis import strategies as st
from nichehyper.digraph import Digraph, Side, ViolationKind
from nichehyper.digraph import check_cycle, check_order, is_acyclic
from nichehyper.digraph import is_good_digraph, niche_hypergraph, reverse
from nichehyper.digraph import swap_neighborhoods, union
from nichehyper.exceptions import SameVertex
from nichehyper.exceptions import SelfArc
from nichehyper.exceptions import SharedVertexMismatch
from nichehyper.exceptions import TwoCycle
from nichehyper.exceptions import UnknownVertex
from nichehyper.hypergraph import Hypergraph, transpose_vertices


@st.composite
def digraphs(draw, max_vertices=8):
    n = draw(st.integers(min_value=1, max_value=max_vertices))
    names = [f'v{i}' for i in range(n)]
    arcs = []
    for a, b in itertools.combinations(names, 2):
        c = draw(st.integers(min_value=0, max_value=2))
        if c == 1:
            arcs.append((a, b))
        elif c == 2:
            arcs.append((b, a))
    return Digraph(names, arcs)


def D(*arcs, vertices=()):
    return Digraph.from_arcs([a.split() for a in arcs], vertices)


class TestDigraph(unittest.TestCase):

    def test_self_arc(self):
        with self.assertRaises(SelfArc):
            D('a a')

    def test_two_cycle(self):
        with self.assertRaises(TwoCycle):
            D('a b', 'b a')

    def test_unknown_vertex(self):
        with self.assertRaises(UnknownVertex):
            Digraph({'a'}, [('a', 'b')])

    def test_neighbors(self):
        d = D('a c', 'b c', 'c d')
        self.assertEqual(d.in_neighbors('c'), {'a', 'b'})
        self.assertEqual(d.out_neighbors('c'), {'d'})
        self.assertEqual(d.in_neighbors('a'), set())


class TestAcyclicity(unittest.TestCase):

    def test_order(self):
        verdict = is_acyclic(D('b a', 'c a'))
        self.assertTrue(verdict)
        self.assertEqual(verdict.order, ('b', 'c', 'a'))

    def test_cycle(self):
        verdict = is_acyclic(D('b c', 'c d', 'd b', 'a b'))
        self.assertFalse(verdict)
        self.assertEqual(verdict.cycle, ('b', 'c', 'd', 'b'))

    def test_shortest_cycle(self):
        d = D('a b', 'b c', 'c d', 'd a', 'e f', 'f g', 'g e')
        self.assertEqual(is_acyclic(d).cycle, ('e', 'f', 'g', 'e'))

    def test_empty(self):
        self.assertTrue(is_acyclic(Digraph((), ())))

    @settings(max_examples=300, deadline=None)
    @given(digraphs())
    def test_certificates(self, d):
        verdict = is_acyclic(d)
        if verdict:
            self.assertTrue(check_order(d, verdict.order))
        else:
            self.assertTrue(check_cycle(d, verdict.cycle))


class TestAlgebra(unittest.TestCase):

    @settings(max_examples=1000, deadline=None)
    @given(digraphs())
    def test_reverse_involution(self, d):
        self.assertEqual(reverse(reverse(d)), d)

    @settings(max_examples=1000, deadline=None)
    @given(digraphs())
    def test_nh_reverse_invariant(self, d):
        self.assertEqual(
            niche_hypergraph(reverse(d)).hypergraph,
            niche_hypergraph(d).hypergraph)
        self.assertEqual(bool(is_acyclic(reverse(d))), bool(is_acyclic(d)))

    @settings(max_examples=1000, deadline=None)
    @given(digraphs(), st.data())
    def test_swap_transposes_nh(self, d, data):
        if len(d.vertices) < 2:
            return
        u, x = data.draw(st.lists(
            st.sampled_from(sorted(d.vertices)),
            min_size=2, max_size=2, unique=True))
        swapped = swap_neighborhoods(d, u, x)
        self.assertEqual(bool(is_acyclic(swapped)), bool(is_acyclic(d)))
        self.assertEqual(
            niche_hypergraph(swapped).hypergraph,
            transpose_vertices(niche_hypergraph(d).hypergraph, u, x))
        self.assertEqual(swapped.in_neighbors(u) - {x}, d.in_neighbors(x) - {u})

    @settings(max_examples=500, deadline=None)
    @given(digraphs(), st.data())
    def test_swap_involution(self, d, data):
        pairs = [
            (u, x) for u, x in itertools.combinations(sorted(d.vertices), 2)
            if (u, x) not in d.arcs and (x, u) not in d.arcs]
        if not pairs:
            return
        u, x = data.draw(st.sampled_from(pairs))
        swapped = swap_neighborhoods(d, u, x)
        self.assertEqual(swap_neighborhoods(swapped, u, x), d)
        self.assertEqual(swapped.in_neighbors(u), d.in_neighbors(x))
        self.assertEqual(swapped.out_neighbors(x), d.out_neighbors(u))

    @settings(max_examples=500, deadline=None)
    @given(digraphs(), st.data())
    def test_union_laws(self, d, data):
        parts = [
            Digraph(d.vertices, data.draw(st.sets(
                st.sampled_from(sorted(d.arcs))))) if d.arcs
            else Digraph(d.vertices, ())
            for _ in range(3)]
        a, b, c = parts
        self.assertEqual(union(a, b), union(b, a))
        self.assertEqual(union(union(a, b), c), union(a, union(b, c)))
        self.assertEqual(union(a, b).arcs, a.arcs | b.arcs)

    def test_swap_example(self):
        d = D('u x', 'x w')
        self.assertEqual(swap_neighborhoods(d, 'u', 'x'), D('x u', 'u w'))

    def test_swap_errors(self):
        d = D('u x')
        with self.assertRaises(SameVertex):
            swap_neighborhoods(d, 'u', 'u')
        with self.assertRaises(UnknownVertex):
            swap_neighborhoods(d, 'u', 'y')

    def test_union(self):
        d = union(D('a u'), D('u b'), shared={'u'})
        self.assertEqual(d, D('a u', 'u b'))

    def test_union_two_cycle(self):
        with self.assertRaises(TwoCycle):
            union(D('a b'), D('b a'))

    def test_union_shared(self):
        with self.assertRaises(SharedVertexMismatch):
            union(D('a u'), D('u b', 'a b'), shared={'u'})


class TestNiche(unittest.TestCase):

    def test_niche_hypergraph(self):
        d = D('a c', 'b c', 'u c', 'a u', 'a d')
        result = niche_hypergraph(d)
        self.assertTrue(result.simple)
        self.assertEqual(
            result.hypergraph.edges,
            {frozenset('abu'), frozenset('cud')})
        self.assertEqual(result.witness[frozenset('abu')], ('c', Side.IN))

    def test_not_simple(self):
        d = D('a c', 'b c', 'a d', 'b d', 'x d')
        with self.assertLogs(level='WARNING'):
            result = niche_hypergraph(d)
        self.assertFalse(result.simple)

    def test_good(self):
        h = Hypergraph.from_edges([['a', 'b', 'u'], ['u', 'c', 'd']])
        d = D('a c', 'b c', 'u c', 'a u', 'a d')
        self.assertTrue(is_good_digraph(d, h))

    def test_spurious(self):
        h = Hypergraph.from_edges([['a', 'b', 'u'], ['u', 'c', 'd']])
        d = D('a c', 'b c', 'u c', 'a u', 'a d', 'b d')
        report = is_good_digraph(d, h)
        self.assertFalse(report)
        self.assertIn(ViolationKind.SPURIOUS_EDGE, report.kinds())
        spurious = [
            v.detail['edge'] for v in report.violations
            if v.kind is ViolationKind.SPURIOUS_EDGE]
        # N-(d) = {a, b} and N+(b) = {c, d}
        self.assertEqual(spurious, [['a', 'b'], ['c', 'd']])

    def test_cyclic_and_vertex_set(self):
        h = Hypergraph.from_edges([['a', 'b', 'c']])
        d = D('a b', 'b c', 'c a', vertices=['z'])
        kinds = is_good_digraph(d, h).kinds()
        self.assertIn(ViolationKind.CYCLIC, kinds)
        self.assertIn(ViolationKind.VERTEX_SET, kinds)
        self.assertIn(ViolationKind.MISSING_EDGE, kinds)

    def test_both_sided_buds(self):
        h = Hypergraph.from_edges([['a', 'b', 'u'], ['u', 'c', 'd']])
        d = D('a c', 'b c', 'u c', 'a u', 'a d', 'x a', 'y b')
        report = is_good_digraph(d, h)
        self.assertIn(ViolationKind.BOTH_SIDED_BUDS, report.kinds())


if __name__ == '__main__':
    unittest.main()
