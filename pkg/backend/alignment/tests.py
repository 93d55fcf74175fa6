"""
Test cases for optimal alignments
"""

from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from unittest.mock import patch

import networkx as nx
from django.test import SimpleTestCase, override_settings
from hypothesis import given, settings as hypothesis_settings
from hypothesis import strategies as st

from corpus.entries import BY_NAME, MODEL
from corpus.loaders import get_log, get_model, list_entries
from petri.dsl import parse_net
from petri.statespace import explore
from precision_core.exceptions import EnumerationOverflowError, NoAlignmentError, UndecidedError

from .alignments import (LOG, SEEDED_RANDOM, SYNC, AlignmentCosts, Move, align_log,
                         all_optimal_alignments, optimal_alignment)

MODEL_NAMES = [n for n in list_entries(include_supplementary=True) if BY_NAME[n].kind == MODEL]


def brute_force_cost(apn, trace):
    """Cheapest path to a goal in the explicitly built product graph"""
    graph = explore(apn)
    product = nx.DiGraph()

    def connect(source, target, weight):
        if not product.has_edge(source, target) or product[source][target]['weight'] > weight:
            product.add_edge(source, target, weight=weight)

    for position in range(len(trace) + 1):
        for state in range(len(graph)):
            product.add_node((state, position))
            if position < len(trace):
                connect((state, position), (state, position + 1), 1)
        for source, transition, target in graph.edges:
            label = apn.net.label(transition)
            connect((source, position), (target, position), 0 if label is None else 1)
            if label is not None and position < len(trace) and trace[position] == label:
                connect((source, position), (target, position + 1), 0)
    lengths = nx.single_source_dijkstra_path_length(product, (graph.initial, 0))
    goals = [lengths[(s, len(trace))] for s in graph.accepting if (s, len(trace)) in lengths]
    return min(goals)


class MoveTest(SimpleTestCase):
    """Test move validation and costs"""

    def test_invalid_moves(self):
        with self.assertRaises(ValueError):
            Move(SYNC, 'a')
        with self.assertRaises(ValueError):
            Move(LOG, 'a', 't')
        with self.assertRaises(ValueError):
            Move('skip', 'a')

    def test_costs(self):
        costs = AlignmentCosts()
        self.assertEqual(costs.of(Move(SYNC, 'a', 'a')), 0)
        self.assertEqual(costs.of(Move(LOG, 'a')), 1)
        self.assertEqual(costs.of(Move('model', None, 'tau')), 0)
        self.assertEqual(costs.of(Move('model', 'a', 'a')), 1)
        with self.assertRaises(ValueError):
            AlignmentCosts(log_move=-1)

    @override_settings(PRECISION_LOG_MOVE_COST=5)
    def test_costs_from_settings(self):
        self.assertEqual(AlignmentCosts.from_settings().log_move, 5)


class OptimalAlignmentTest(SimpleTestCase):
    """Test single optimal alignments"""

    def test_fitting_trace(self):
        alignment = optimal_alignment(get_model('fig4_model'), ['a', 'b', 'a', 'c'])
        self.assertEqual(alignment.cost, 0)
        self.assertTrue(alignment.is_fitting)
        self.assertEqual(alignment.firing_sequence, ('a', 'b', 'a', 'c'))

    def test_tau_moves_are_free(self):
        alignment = optimal_alignment(get_model('fig5a_flower'), ['a', 'b', 'c'])
        self.assertEqual(alignment.cost, 0)
        self.assertEqual(alignment.model_trace, ('a', 'b', 'c'))
        self.assertEqual(alignment.log_projection, ('a', 'b', 'c'))
        self.assertEqual(alignment.firing_sequence, ('a', 'tau_back', 'b', 'tau_back', 'c'))

    def test_missing_end(self):
        alignment = optimal_alignment(get_model('fig4_model'), ['a'])
        self.assertEqual(alignment.cost, Fraction(1))
        # lexicographic tiebreak prefers c over d
        self.assertEqual(alignment.model_trace, ('a', 'c'))
        self.assertFalse(alignment.is_fitting)

    def test_log_move(self):
        alignment = optimal_alignment(get_model('seq_ab'), ['a', 'x', 'b'])
        self.assertEqual(alignment.cost, 1)
        self.assertIn(Move(LOG, 'x'), alignment.moves)

    def test_seeded_random_tiebreak(self):
        model = get_model('fig4_model')
        traces = {optimal_alignment(model, ['a'], tiebreak=SEEDED_RANDOM, seed=s).model_trace for s in range(20)}
        self.assertEqual(traces, {('a', 'c'), ('a', 'd')})

    def test_seed_repeatable(self):
        model = get_model('fig4_model')
        first = optimal_alignment(model, ['a'], tiebreak=SEEDED_RANDOM, seed=7)
        second = optimal_alignment(model, ['a'], tiebreak=SEEDED_RANDOM, seed=7)
        self.assertEqual(first, second)

    def test_unknown_tiebreak(self):
        with self.assertRaises(ValueError):
            optimal_alignment(get_model('seq_ab'), ['a', 'b'], tiebreak='coin')

    def test_no_final_reachable(self):
        stuck = parse_net('place p init=1\nplace q\nplace r\ntrans t label=a\narc p t\narc t q\nfinal r=1\n')
        with self.assertRaises(NoAlignmentError):
            optimal_alignment(stuck, ['a'])

    def test_budget(self):
        with self.assertRaises(UndecidedError):
            optimal_alignment(get_model('fig6_m1'), ['g', 'f', 'e'], budget=5)

    @hypothesis_settings(max_examples=100, deadline=None)
    @given(name=st.sampled_from(MODEL_NAMES), trace=st.lists(st.sampled_from('abcdx'), max_size=4))
    def test_cost_matches_brute_force(self, name, trace):
        model = get_model(name)
        self.assertEqual(optimal_alignment(model, trace).cost, brute_force_cost(model, trace))


class AllOptimalAlignmentsTest(SimpleTestCase):
    """Test enumeration of every optimal alignment"""

    def test_two_repairs(self):
        alignments = all_optimal_alignments(get_model('fig4_model'), ['a'])
        self.assertEqual([a.model_trace for a in alignments], [('a', 'c'), ('a', 'd')])
        self.assertTrue(all(a.cost == 1 for a in alignments))

    def test_duplicate_labels(self):
        alignments = all_optimal_alignments(get_model('dup_label_choice'), ['a', 'b'])
        self.assertEqual([a.firing_sequence for a in alignments], [('a1', 'b1'), ('a2', 'b2')])

    def test_single_alignment(self):
        alignments = all_optimal_alignments(get_model('fig5a_flower'), ['a'])
        self.assertEqual(len(alignments), 1)

    def test_cap(self):
        with self.assertRaises(EnumerationOverflowError):
            all_optimal_alignments(get_model('dup_label_choice'), ['a', 'b'], cap=1)

    def test_optimal_alignment_is_among_them(self):
        model = get_model('dup_label_choice')
        single = optimal_alignment(model, ['a', 'b'])
        self.assertIn(single, all_optimal_alignments(model, ['a', 'b']))


class AlignLogTest(SimpleTestCase):
    """Test aligning a whole log"""

    def test_one_alignment_per_trace(self):
        log = get_log('fig4_log_l2')
        alignments = align_log(get_model('fig4_model'), log)
        self.assertEqual(set(alignments), set(log.traces))
        self.assertTrue(all(a.is_fitting for a in alignments.values()))

    @override_settings(PRECISION_WORKERS=3)
    def test_thread_pool(self):
        log = get_log('fig4_log_l2')
        with patch('alignment.alignments.ThreadPoolExecutor', wraps=ThreadPoolExecutor) as pool:
            alignments = align_log(get_model('fig4_model'), log)
        pool.assert_called_once_with(max_workers=3)
        self.assertEqual(len(alignments), 3)
