"""
Test cases for finite automata, prefix automata and DOT export
"""

from fractions import Fraction

from django.test import SimpleTestCase
from hypothesis import given, settings as hypothesis_settings
from hypothesis import strategies as st

from eventlog.formats import parse_log

from .dfa import (STOP, Dfa, Nfa, are_equivalent, determinize, dfa_from_traces, empty_dfa,
                  enumerate_language, is_subset, is_universal, minimize, product, project, trim,
                  universal_dfa)
from .dot import dfa_to_dot, nfa_to_dot, prefix_to_dot
from .prefix import PrefixAutomaton, build_prefix_automaton

traces = st.lists(st.lists(st.sampled_from('abc'), max_size=4).map(tuple), max_size=6)


class DeterminizeTest(SimpleTestCase):
    """Test the subset construction"""

    def test_epsilon_closure(self):
        nfa = Nfa(
            states=frozenset({0, 1, 2}),
            alphabet=frozenset({'a'}),
            edges=frozenset({(0, None, 1), (1, 'a', 2)}),
            initial=frozenset({0}),
            accepting=frozenset({2}),
        )
        dfa = determinize(nfa)
        self.assertTrue(dfa.accepts(['a']))
        self.assertFalse(dfa.accepts([]))

    def test_nondeterministic_choice(self):
        nfa = Nfa(
            states=frozenset({0, 1, 2}),
            alphabet=frozenset({'a', 'b'}),
            edges=frozenset({(0, 'a', 1), (0, 'a', 2), (1, 'b', 1)}),
            initial=frozenset({0}),
            accepting=frozenset({1, 2}),
        )
        dfa = determinize(nfa)
        self.assertTrue(dfa.accepts(['a']))
        self.assertTrue(dfa.accepts(['a', 'b', 'b']))
        self.assertFalse(dfa.accepts(['b']))

    def test_undeclared_state(self):
        with self.assertRaises(ValueError):
            Nfa(frozenset({0}), frozenset({'a'}), frozenset({(0, 'a', 1)}), frozenset({0}), frozenset())

    def test_two_successors_rejected(self):
        with self.assertRaises(ValueError):
            Dfa(2, frozenset({'a'}), ((0, 'a', 0), (0, 'a', 1)), 0, frozenset({1}))


class MinimizeTest(SimpleTestCase):
    """Test minimization and language comparisons"""

    def test_equivalent_shapes(self):
        # (a|b)* as one state and as two mirrored states
        one = universal_dfa({'a', 'b'})
        two = Dfa(2, frozenset('ab'), ((0, 'a', 1), (0, 'b', 0), (1, 'a', 0), (1, 'b', 1)), 0,
                  frozenset({0, 1}))
        self.assertEqual(minimize(two).num_states, 1)
        self.assertTrue(are_equivalent(one, two))

    def test_trim_drops_dead_states(self):
        dfa = Dfa(3, frozenset('ab'), ((0, 'a', 1), (0, 'b', 2)), 0, frozenset({1}))
        trimmed = trim(dfa)
        self.assertEqual(trimmed.num_states, 2)
        self.assertEqual(trimmed.outgoing(trimmed.initial), {'a': 1})

    def test_empty_language(self):
        dfa = Dfa(2, frozenset('a'), ((0, 'a', 1),), 0, frozenset())
        self.assertTrue(dfa.is_empty())
        self.assertEqual(minimize(dfa).signature(), empty_dfa({'a'}).signature())

    def test_options_include_stop(self):
        dfa = dfa_from_traces([('a',), ('a', 'b')])
        after_a = dfa.run(['a'])
        self.assertEqual(dfa.options(after_a), frozenset({'b', STOP}))
        self.assertEqual(dfa.options(dfa.initial), frozenset({'a'}))

    @hypothesis_settings(max_examples=50, deadline=None)
    @given(words=traces)
    def test_minimize_is_canonical(self, words):
        dfa = dfa_from_traces(words)
        self.assertEqual(minimize(dfa), dfa)
        self.assertEqual(dfa_from_traces(list(reversed(words))), dfa)
        for word in words:
            self.assertTrue(dfa.accepts(word))


class InclusionTest(SimpleTestCase):
    """Test inclusion, universality and the product"""

    def test_subset_with_witness(self):
        small = dfa_from_traces([('a', 'b')])
        large = dfa_from_traces([('a', 'b'), ('a', 'c')])
        self.assertTrue(is_subset(small, large))
        result = is_subset(large, small)
        self.assertFalse(result)
        self.assertEqual(result.witness, ('a', 'c'))

    def test_universal(self):
        self.assertTrue(is_universal(universal_dfa('abc'), 'abc'))
        self.assertFalse(is_universal(universal_dfa('ab'), 'abc'))
        self.assertFalse(is_universal(dfa_from_traces([(), ('a',)]), 'a'))

    def test_product(self):
        left = dfa_from_traces([('a', 'b'), ('a', 'c')])
        right = dfa_from_traces([('a', 'b'), ('b',)])
        both = product(left, right)
        self.assertEqual(enumerate_language(both, 3), [('a', 'b')])
        self.assertEqual(len(both.origins), both.num_states)
        self.assertEqual(both.origin(both.initial), (left.initial, right.initial))

    @hypothesis_settings(max_examples=60, deadline=None)
    @given(first=traces, second=traces)
    def test_product_language_is_intersection(self, first, second):
        left, right = dfa_from_traces(first), dfa_from_traces(second)
        both = product(left, right)
        for word in enumerate_language(universal_dfa('abc'), 4):
            self.assertEqual(both.accepts(word), left.accepts(word) and right.accepts(word))

    def test_project(self):
        projected = project(dfa_from_traces([('a', 'b', 'c')]), {'a', 'c'})
        self.assertTrue(projected.accepts(['a', 'c']))
        self.assertFalse(projected.accepts(['a', 'b', 'c']))

    def test_enumerate_language(self):
        words = enumerate_language(universal_dfa('ab'), 2)
        self.assertEqual(words, [(), ('a',), ('b',), ('a', 'a'), ('a', 'b'), ('b', 'a'), ('b', 'b')])

    @hypothesis_settings(max_examples=80, deadline=None)
    @given(first=traces, second=traces)
    def test_inclusion_matches_sets(self, first, second):
        result = is_subset(dfa_from_traces(first), dfa_from_traces(second))
        self.assertEqual(bool(result), set(first) <= set(second))
        if not result:
            missing = set(first) - set(second)
            self.assertIn(result.witness, missing)
            self.assertEqual(len(result.witness), min(len(w) for w in missing))

    def test_graph_view(self):
        graph = universal_dfa('ab').graph()
        self.assertEqual(graph.number_of_edges(), 2)


class PrefixAutomatonTest(SimpleTestCase):
    """Test prefix automata"""

    def test_log_weights(self):
        automaton = build_prefix_automaton(parse_log('2x a,c\n1x a,d\n'))
        self.assertEqual(len(automaton), 4)
        self.assertEqual(automaton.root.visits, 3)
        self.assertEqual(automaton[('a',)].observed, frozenset({'c', 'd'}))
        self.assertEqual(automaton.weight(('a', 'c')), 2)
        self.assertEqual(automaton.weight(('a', 'c'), 'events'), 0)
        self.assertEqual(automaton.weight(('a',), 'events'), 3)

    def test_fraction_weights(self):
        automaton = PrefixAutomaton.from_sequences([(('t1',), Fraction(1, 2)), (('t2',), Fraction(1, 2))])
        self.assertEqual(automaton.root.visits, 1)
        self.assertEqual([s.prefix for s in automaton], [(), ('t1',), ('t2',)])
        self.assertIn(('t2',), automaton)


class DotExportTest(SimpleTestCase):
    """Test DOT rendering"""

    def test_dfa_dot(self):
        dot = dfa_to_dot(dfa_from_traces([('a',)]), name='single')
        self.assertTrue(dot.startswith('digraph "single" {'))
        self.assertIn('doublecircle', dot)
        self.assertIn('[label="a"]', dot)

    def test_nfa_dot_epsilon(self):
        nfa = Nfa(frozenset({0, 1}), frozenset(), frozenset({(0, None, 1)}), frozenset({0}), frozenset({1}))
        self.assertIn('[label="ε"]', nfa_to_dot(nfa))

    def test_prefix_dot(self):
        dot = prefix_to_dot(build_prefix_automaton(parse_log('1x a,b\n')))
        self.assertIn('0 -> 1 [label="a"]', dot)
