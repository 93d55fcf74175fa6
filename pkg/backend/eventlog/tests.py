"""
Test cases for traces, event logs and the log format
"""

from django.test import SimpleTestCase
from hypothesis import given, settings as hypothesis_settings
from hypothesis import strategies as st

from corpus.loaders import get_log, get_model
from precision_core.exceptions import FormatParseError

from .formats import parse_log, serialize_log
from .logs import (EventLog, Trace, is_activity_name, is_fitting, is_trace_subset, log_dfa, project_log,
                   trace_set, unfitting_traces)


class TraceTest(SimpleTestCase):
    """Test traces"""

    def test_parse(self):
        self.assertEqual(Trace.parse('a, b,c'), Trace.of('a', 'b', 'c'))
        self.assertEqual(Trace.parse('  '), Trace())

    def test_invalid_activity(self):
        with self.assertRaises(ValueError):
            Trace.of('a', '')
        with self.assertRaises(ValueError):
            Trace.of('a,b')
        for name in ('#a', 'a#b', ' a', 'a ', 'a\nb', '\tb'):
            with self.assertRaises(ValueError):
                Trace.of(name)
        self.assertEqual(Trace.of('send invoice').activities, ('send invoice',))

    def test_project(self):
        self.assertEqual(Trace.of('a', 'b', 'a', 'c').project({'a', 'c'}), Trace.of('a', 'a', 'c'))

    def test_str(self):
        self.assertEqual(str(Trace.of('a', 'b')), '⟨a,b⟩')
        self.assertEqual(str(Trace()), '⟨⟩')


class EventLogTest(SimpleTestCase):
    """Test multiset semantics"""

    def test_duplicates_accumulate(self):
        log = EventLog.from_traces(['a,b', 'a,b', 'b'])
        self.assertEqual(log.count('a,b'), 2)
        self.assertEqual(log.size, 3)
        self.assertEqual(len(log.traces), 2)

    def test_example_log(self):
        log = get_log('sec2_example_log')
        self.assertEqual(log.count(('a', 'b', 'c')), 2)
        self.assertEqual(log.count(('b', 'a', 'c')), 3)
        self.assertEqual(log.alphabet, frozenset('abc'))
        self.assertEqual(str(log), '[⟨a,b,c⟩^2, ⟨b,a,c⟩^3]')

    def test_positive_multiplicity(self):
        with self.assertRaises(ValueError):
            EventLog.from_counts({'a': 0})

    def test_empty_log(self):
        log = EventLog()
        self.assertFalse(log)
        self.assertEqual(trace_set(log), frozenset())

    def test_project_merges(self):
        log = EventLog.from_traces(['a,b', 'a,c'])
        projected = project_log(log, {'a'})
        self.assertEqual(projected.count('a'), 2)
        self.assertEqual(len(projected.traces), 1)

    def test_extend(self):
        log = EventLog.from_traces(['a']).extend(EventLog.from_counts([('a', 2), ('b', 1)]))
        self.assertEqual(log.count('a'), 3)
        self.assertIn('b', log)

    def test_trace_subset(self):
        self.assertTrue(is_trace_subset(get_log('fig4_log_l1'), get_log('fig4_log_l2')))
        self.assertFalse(is_trace_subset(get_log('fig4_log_l2'), get_log('fig4_log_l1')))

    def test_fingerprint_ignores_order(self):
        first = EventLog.from_traces(['a', 'b'])
        second = EventLog.from_traces(['b', 'a'])
        self.assertEqual(first.fingerprint(), second.fingerprint())

    def test_log_dfa(self):
        dfa = log_dfa(get_log('fig4_log_l1'), alphabet={'b'})
        self.assertTrue(dfa.accepts(['a', 'c']))
        self.assertFalse(dfa.accepts(['a']))
        self.assertIn('b', dfa.alphabet)


class FittingTest(SimpleTestCase):
    """Test the fitting relation"""

    def test_fitting_logs(self):
        self.assertTrue(is_fitting(get_log('fig4_log_l2'), get_model('fig4_model')))
        self.assertTrue(is_fitting(get_log('fig6_log_template'), get_model('fig6_m2')))
        self.assertTrue(is_fitting(get_log('fig6_log_template'), get_model('fig6_m1')))

    def test_unfitting_trace_reported(self):
        log = get_log('fig4_log_partial')
        self.assertFalse(is_fitting(log, get_model('fig4_model')))
        self.assertEqual(unfitting_traces(log, get_model('fig4_model')), (Trace.of('a'),))

    def test_empty_log_fits(self):
        self.assertTrue(is_fitting(EventLog(), get_model('seq_ab')))


class LogFormatTest(SimpleTestCase):
    """Test the log line format"""

    def test_parse(self):
        log = parse_log('# comment\n2x a,b\n\n1x b\n1x\n1x a,b\n')
        self.assertEqual(log.count('a,b'), 3)
        self.assertEqual(log.count(()), 1)

    def test_serialize_order(self):
        log = EventLog.from_counts([('b', 1), ('a', 1), ('c', 3)])
        self.assertEqual(serialize_log(log), '3x c\n1x a\n1x b\n')

    def test_malformed_line(self):
        with self.assertRaises(FormatParseError) as ctx:
            parse_log('1x a\nthree a,b\n')
        self.assertEqual(ctx.exception.lineno, 2)

    def test_zero_count(self):
        with self.assertRaises(FormatParseError):
            parse_log('0x a\n')

    def test_empty_activity(self):
        with self.assertRaises(FormatParseError) as ctx:
            parse_log('1x a,,b\n')
        self.assertIn('empty activity', str(ctx.exception))

    @hypothesis_settings(max_examples=40, deadline=None)
    @given(counts=st.dictionaries(
        st.lists(st.sampled_from(['a', 'b', 'c', 'send_invoice']), max_size=5).map(tuple),
        st.integers(min_value=1, max_value=9),
        max_size=6,
    ))
    def test_serialized_logs_parse_back(self, counts):
        log = EventLog.from_counts(counts)
        self.assertEqual(parse_log(serialize_log(log)), log)

    @hypothesis_settings(max_examples=80, deadline=None)
    @given(traces=st.lists(
        st.lists(st.one_of(st.text(alphabet='ab #,\t\n', min_size=1, max_size=4),
                           st.text(min_size=1, max_size=4)), max_size=4).map(tuple),
        min_size=1, max_size=4,
    ))
    def test_accepted_names_parse_back(self, traces):
        try:
            log = EventLog.from_traces(traces)
        except ValueError:
            self.assertFalse(all(is_activity_name(name) for trace in traces for name in trace))
            return
        self.assertEqual(parse_log(serialize_log(log)), log)
