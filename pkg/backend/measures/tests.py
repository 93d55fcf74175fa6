"""
Test cases for the precision measures
"""

import json
from fractions import Fraction

from django.core.cache import cache
from django.test import SimpleTestCase
from hypothesis import given, settings as hypothesis_settings
from hypothesis import strategies as st

from alignment.alignments import SEEDED_RANDOM
from automata.dfa import dfa_from_traces
from automata.prefix import PrefixAutomaton
from corpus.loaders import get_log, get_model
from eventlog.logs import EventLog
from petri.dsl import parse_net
from petri.nets import build_net
from precision_core.exceptions import (EnumerationOverflowError, MeasurePreconditionError,
                                       UndecidedError)

from .behavioral import advanced_ba, simple_ba
from .etc import all_align_etc, escaping_edges, etc_precision, one_align_etc
from .greco import count_language, greco_precision
from .negative import activity_rates, negative_confidence, negative_event_precision
from .pcc import pcc_precision, subset_share
from .registry import MEASURES, evaluate, get_measure
from .reports import UNDECIDED, UNDEFINED, PrecisionReport
from .serializers import PrecisionReportSerializer, render_record

STUCK = 'place p init=1\nplace q\nplace r\ntrans t label=a\narc p t\narc t q\nfinal r=1\n'


class PrecisionReportTest(SimpleTestCase):
    """Test report validation and rendering"""

    def test_value_range(self):
        with self.assertRaises(ValueError):
            PrecisionReport('etc', Fraction(3, 2))
        with self.assertRaises(ValueError):
            PrecisionReport('etc', None)
        with self.assertRaises(ValueError):
            PrecisionReport('etc', Fraction(1), status=UNDEFINED)

    def test_text(self):
        report = PrecisionReport('pcc', Fraction(3, 5), {'k': 2}, {'subsets': ['{a,b} share=3/5']})
        self.assertEqual(
            report.to_text(),
            'measure=pcc\nvalue=0.6000\nstatus=defined\nexact=3/5\noption.k=2\n'
            'diagnostic.subsets.0={a,b} share=3/5\n',
        )

    def test_undefined_text(self):
        report = PrecisionReport.undefined('advanced-ba', 'no pairs')
        self.assertIn('value=undefined', report.to_text())
        self.assertIsNone(report.as_float())

    def test_record(self):
        report = PrecisionReport('etc', Fraction(3, 4), {'weighting': 'visits'})
        data = json.loads(render_record(PrecisionReportSerializer(report).data))
        self.assertEqual(data['value'], 0.75)
        self.assertEqual(data['exact'], '3/4')
        self.assertEqual(data['options'], {'weighting': 'visits'})


class GrecoTest(SimpleTestCase):
    """Test soundness precision"""

    def setUp(self):
        cache.clear()

    def test_loop_gives_zero(self):
        for name in ('fig4_model', 'fig5a_flower', 'fig7a_loop', 'fig8_flower', 'fig2_loop_wfnet'):
            with self.subTest(name=name):
                report = greco_precision(get_log('fig4_log_l1'), get_model(name))
                self.assertEqual(report.value, 0)

    def test_full_language_gives_one(self):
        self.assertEqual(greco_precision(get_log('seq_ab_log'), get_model('seq_ab')).value, 1)

    def test_partial_language(self):
        report = greco_precision(get_log('seq_ab_log'), get_model('dup_label_choice'))
        self.assertEqual(report.value, Fraction(1, 2))
        self.assertEqual(report.diagnostics['language_size'], 2)

    def test_empty_language_undefined(self):
        self.assertEqual(greco_precision(get_log('seq_ab_log'), parse_net(STUCK)).status, UNDEFINED)

    def test_trace_cap(self):
        with self.assertRaises(UndecidedError):
            greco_precision(get_log('seq_ab_log'), get_model('dup_label_choice'), trace_cap=1)

    @hypothesis_settings(max_examples=40, deadline=None)
    @given(words=st.sets(st.lists(st.sampled_from('ab'), max_size=3).map(tuple), max_size=8))
    def test_count_language(self, words):
        self.assertEqual(count_language(dfa_from_traces(words), 100), len(words))


class BehavioralAppropriatenessTest(SimpleTestCase):
    """Test simple and advanced behavioral appropriateness"""

    def setUp(self):
        cache.clear()

    def test_simple_sequence(self):
        self.assertEqual(simple_ba(get_log('seq_ab_log'), get_model('seq_ab')).value, 1)

    def test_simple_duplicate_paths(self):
        report = simple_ba(get_log('seq_ab_log'), get_model('dup_label_ab'))
        self.assertEqual(report.value, Fraction(5, 6))

    def test_simple_depends_on_replay_path(self):
        log, model = get_log('seq_ab_log'), get_model('dup_label_choice')
        self.assertEqual(simple_ba(log, model).value, Fraction(7, 8))
        values = {simple_ba(log, model, tiebreak=SEEDED_RANDOM, seed=s).value for s in range(20)}
        self.assertEqual(values, {Fraction(7, 8), Fraction(3, 4)})

    def test_simple_single_visible_transition(self):
        single = build_net({'i': 1, 'o': 0}, {'t': 'a'}, [('i', 't'), ('t', 'o')], [{'o': 1}])
        self.assertEqual(simple_ba(EventLog.from_traces(['a']), single).status, UNDEFINED)

    def test_simple_needs_wf_net(self):
        with self.assertRaises(MeasurePreconditionError):
            simple_ba(get_log('fig8_log_l1'), get_model('fig8_flower'))

    def test_simple_needs_fitting_log(self):
        with self.assertRaises(MeasurePreconditionError):
            simple_ba(EventLog.from_traces(['b']), get_model('seq_ab'))

    def test_advanced_sequence_undefined(self):
        report = advanced_ba(get_log('seq_abc_log'), get_model('seq_abc'))
        self.assertEqual(report.status, UNDEFINED)
        self.assertEqual(report.diagnostics['model_follows'], frozenset())

    def test_advanced_loop_defined(self):
        report = advanced_ba(get_log('fig2_log_b'), get_model('fig2_loop_wfnet'))
        self.assertTrue(report.is_defined)
        self.assertTrue(report.diagnostics['model_follows'])

    def test_advanced_language_equal_nets(self):
        log = get_log('fig7_log')
        self.assertEqual(advanced_ba(log, get_model('fig7b_unrolled')),
                         advanced_ba(log, get_model('fig7b_split')))


class EscapingEdgesTest(SimpleTestCase):
    """Test ETC, one-align ETC and all-align ETC"""

    def setUp(self):
        cache.clear()

    def test_etc_worked_example(self):
        report = etc_precision(get_log('fig4_log_l1'), get_model('fig4_model'))
        self.assertEqual(report.value, Fraction(6, 8))
        self.assertEqual(report.formatted_value, '0.7500')

    def test_etc_events_weighting(self):
        report = etc_precision(get_log('fig4_log_l1'), get_model('fig4_model'), weighting='events')
        self.assertEqual(report.value, Fraction(3, 4))

    def test_etc_unknown_weighting(self):
        with self.assertRaises(ValueError):
            etc_precision(get_log('fig4_log_l1'), get_model('fig4_model'), weighting='edges')

    def test_etc_needs_fitting_log(self):
        with self.assertRaises(MeasurePreconditionError):
            etc_precision(get_log('fig4_log_partial'), get_model('fig4_model'))

    def test_nothing_can_escape(self):
        value, rows = escaping_edges(PrefixAutomaton.from_sequences([]), lambda prefix: frozenset(), 'visits')
        self.assertEqual(value, 1)
        self.assertEqual(rows, [])

    def test_one_align_choice_loop(self):
        model = get_model('fig4_model')
        self.assertEqual(one_align_etc(get_log('fig4_log_l1'), model).value, Fraction(3, 4))
        self.assertEqual(one_align_etc(get_log('fig4_log_l2'), model).value, Fraction(20, 28))
        self.assertEqual(one_align_etc(get_log('fig4_log_l2_printed'), model).formatted_value, '0.7222')

    def test_one_align_flowers(self):
        log = get_log('fig5_log')
        self.assertEqual(one_align_etc(log, get_model('fig5a_flower')).value, Fraction(5, 15))
        self.assertEqual(one_align_etc(log, get_model('fig5b_flower_tau')).value, Fraction(11, 21))
        self.assertEqual(one_align_etc(log, get_model('fig5c_constrained')).value, Fraction(4, 9))

    def test_one_align_tiebreak(self):
        log, model = get_log('fig4_log_partial'), get_model('fig4_model')
        self.assertEqual(one_align_etc(log, model).value, Fraction(1, 2))
        values = {one_align_etc(log, model, tiebreak=SEEDED_RANDOM, seed=s).value for s in range(20)}
        self.assertEqual(values, {Fraction(1, 2), Fraction(3, 4)})

    def test_one_align_reports_alignments(self):
        report = one_align_etc(get_log('fig5_log'), get_model('fig5a_flower'))
        self.assertEqual(len(report.diagnostics['alignments']), 1)
        self.assertIn('tau_back', report.diagnostics['alignments'][0])

    def test_all_align_averages(self):
        report = all_align_etc(get_log('fig4_log_partial'), get_model('fig4_model'))
        self.assertEqual(report.value, Fraction(3, 4))

    def test_all_align_cap(self):
        with self.assertRaises(EnumerationOverflowError):
            all_align_etc(get_log('fig4_log_partial'), get_model('fig4_model'), cap=1)


class NegativeEventTest(SimpleTestCase):
    """Test weighted negative-event precision"""

    def setUp(self):
        cache.clear()

    def test_long_term_dependency(self):
        log = get_log('ltd_log')
        tight = negative_event_precision(log, get_model('ltd_tight'))
        loose = negative_event_precision(log, get_model('ltd_loose'))
        self.assertLess(tight.value, loose.value)
        self.assertAlmostEqual(tight.as_float(), 0.8438, delta=0.001)
        self.assertAlmostEqual(loose.as_float(), 0.8692, delta=0.001)

    def test_deterministic_mode_repeatable(self):
        log, model = get_log('fig6_log_template'), get_model('fig6_m1')
        self.assertEqual(negative_event_precision(log, model), negative_event_precision(log, model))

    def test_sampled_mode_seeded(self):
        log, model = get_log('fig6_log_template'), get_model('fig6_m1')
        first = negative_event_precision(log, model, mode='sampled', seed=3)
        second = negative_event_precision(log, model, mode='sampled', seed=3)
        self.assertEqual(first.value, second.value)
        self.assertEqual(first.options['seed'], 3)

    def test_sampled_mode_varies(self):
        log, model = get_log('fig6_log_template'), get_model('fig6_m1')
        values = {negative_event_precision(log, model, mode='sampled', seed=s).value for s in range(20)}
        self.assertGreater(len(values), 1)

    def test_only_empty_traces_undefined(self):
        log = EventLog.from_counts([((), 2)])
        self.assertEqual(negative_event_precision(log, get_model('fig8_flower')).status, UNDEFINED)

    def test_invalid_options(self):
        log, model = get_log('fig7_log'), get_model('fig7a_loop')
        with self.assertRaises(ValueError):
            negative_event_precision(log, model, max_window=0)
        with self.assertRaises(ValueError):
            negative_event_precision(log, model, mode='exhaustive')

    def test_needs_fitting_log(self):
        with self.assertRaises(MeasurePreconditionError):
            negative_event_precision(get_log('fig4_log_partial'), get_model('fig4_model'))

    def test_extra_final_activity_scores_higher(self):
        log = get_log('fig6_log_template')
        m1 = negative_event_precision(log, get_model('fig6_m1'))
        m2 = negative_event_precision(log, get_model('fig6_m2'))
        self.assertAlmostEqual(m1.as_float(), 0.4918, delta=0.001)
        self.assertAlmostEqual(m2.as_float(), 0.4681, delta=0.001)
        self.assertGreater(m1.value, m2.value)

    def test_flower_on_single_event(self):
        log = EventLog.from_traces([('a',)])
        report = negative_event_precision(log, get_model('fig8_flower'))
        self.assertEqual(report.value, Fraction(2, 3))
        self.assertEqual(report.diagnostics['false_positives'], Fraction(1, 5))

    def test_activity_rates(self):
        rates = activity_rates(EventLog.from_counts([(('a', 'b'), 3), (('a',), 1)]))
        self.assertEqual(rates['a'], Fraction(5, 5))
        self.assertEqual(rates['b'], Fraction(4, 5))
        self.assertEqual(rates['z'], Fraction(1, 5))

    def test_negative_confidence(self):
        self.assertEqual(negative_confidence(Fraction(1, 2), 0), 0)
        self.assertEqual(negative_confidence(Fraction(1, 2), 2), Fraction(3, 4))
        self.assertEqual(negative_confidence(Fraction(1), 1), 1)


class ProjectedConformanceTest(SimpleTestCase):
    """Test PCC precision"""

    def setUp(self):
        cache.clear()

    def test_length_one_loop(self):
        log = get_log('fig7_log')
        self.assertEqual(pcc_precision(log, get_model('fig7a_loop'), k=2).value, Fraction(3, 5))
        self.assertEqual(pcc_precision(log, get_model('fig7b_unrolled'), k=2).value, Fraction(1, 2))

    def test_flower_logs(self):
        model = get_model('fig8_flower')
        self.assertEqual(pcc_precision(get_log('fig8_log_l1'), model, k=3).value, Fraction(5, 16))
        self.assertEqual(pcc_precision(get_log('fig8_log_l2'), model, k=3).value, Fraction(36, 132))

    def test_longer_trace_approaches_quarter(self):
        model = get_model('fig8_flower')
        base = pcc_precision(get_log('fig8_log_l2'), model, k=3).value
        longer_log = get_log('fig8_log_l1').extend(EventLog.from_traces([
            ('a',) + ('b',) * 15,
            ('b',) + ('a',) * 25,
        ]))
        longer = pcc_precision(longer_log, model, k=3).value
        self.assertLess(abs(longer - Fraction(1, 4)), abs(base - Fraction(1, 4)))
        self.assertGreater(longer, Fraction(1, 4))

    def test_subset_size_capped_by_alphabet(self):
        report = pcc_precision(get_log('fig7_log'), get_model('fig7a_loop'), k=5)
        self.assertEqual(report.options['subset_size'], 2)

    def test_invalid_k(self):
        with self.assertRaises(ValueError):
            pcc_precision(get_log('fig7_log'), get_model('fig7a_loop'), k=0)

    def test_subset_share_empty_conjunction(self):
        share, counts = subset_share(dfa_from_traces([('a',)]), dfa_from_traces([('a', 'a')]))
        self.assertEqual(share, 0)
        self.assertEqual(counts['unvisited_options'], counts['offered'])


class RegistryTest(SimpleTestCase):
    """Test the measure registry"""

    def test_all_measures_registered(self):
        self.assertEqual(set(MEASURES), {'greco', 'simple-ba', 'advanced-ba', 'etc', 'one-align-etc',
                                         'all-align-etc', 'negative-event', 'pcc'})

    def test_unknown_measure(self):
        with self.assertRaises(ValueError):
            get_measure('fitness')

    def test_irrelevant_options_ignored(self):
        report = evaluate('etc', get_log('fig4_log_l1'), get_model('fig4_model'), k=3, seed=None)
        self.assertEqual(report.value, Fraction(3, 4))

    def test_overflow_becomes_undecided(self):
        report = evaluate('all-align-etc', get_log('fig4_log_partial'), get_model('fig4_model'), cap=1)
        self.assertEqual(report.status, UNDECIDED)
        self.assertIn('optimal alignments', report.reason)

    def test_deterministic_reports_repeat(self):
        log, model = get_log('fig4_log_l2'), get_model('fig4_model')
        for name in ('etc', 'one-align-etc', 'all-align-etc', 'negative-event', 'pcc', 'greco'):
            with self.subTest(name=name):
                runs = {evaluate(name, log, model).to_text() for _ in range(5)}
                self.assertEqual(len(runs), 1)
