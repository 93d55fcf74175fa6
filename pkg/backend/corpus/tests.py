"""
Test cases for the embedded corpus
"""

import tempfile
from pathlib import Path

from django.test import SimpleTestCase

from automata.dfa import are_equivalent, is_subset
from eventlog.formats import parse_log
from eventlog.logs import is_fitting, is_trace_subset
from petri.dsl import parse_net
from petri.language import language_dfa
from precision_core.exceptions import UnknownCorpusEntryError

from .entries import ENTRIES, LOG, MODEL
from .expected import EXPECTED_VALUES, TABLE
from .loaders import (entry, expectations_for, export_corpus, generate_fig6_log, get, get_log,
                      get_model, list_entries)


class CorpusEntryTest(SimpleTestCase):
    """Test corpus lookup"""

    def test_primary_entries(self):
        names = list_entries()
        self.assertEqual(len(names), 18)
        self.assertEqual(names[0], 'fig2_loop_wfnet')
        self.assertNotIn('seq_ab', names)

    def test_supplementary_entries(self):
        self.assertEqual(len(list_entries(include_supplementary=True)), len(ENTRIES))
        self.assertIn('ltd_tight', list_entries(include_supplementary=True))

    def test_names_unique(self):
        names = [e.name for e in ENTRIES]
        self.assertEqual(len(names), len(set(names)))

    def test_every_entry_parses(self):
        for item in ENTRIES:
            with self.subTest(name=item.name):
                loaded = get(item.name)
                if item.kind == MODEL:
                    self.assertEqual(loaded.name, item.name)
                else:
                    self.assertEqual(item.kind, LOG)
                    self.assertTrue(loaded)

    def test_unknown_name(self):
        with self.assertRaises(UnknownCorpusEntryError) as ctx:
            entry('fig9_model')
        self.assertEqual(str(ctx.exception), 'Unknown corpus entry: fig9_model')

    def test_wrong_kind(self):
        with self.assertRaises(UnknownCorpusEntryError):
            get_model('fig4_log_l1')
        with self.assertRaises(UnknownCorpusEntryError):
            get_log('fig4_model')


class CorpusPropertyTest(SimpleTestCase):
    """Test the relations the counterexamples rely on"""

    def test_fitting_pairs(self):
        pairs = [
            ('fig4_log_l1', 'fig4_model'), ('fig4_log_l2', 'fig4_model'), ('fig4_log_l2_printed', 'fig4_model'),
            ('fig5_log', 'fig5c_constrained'), ('fig7_log', 'fig7b_unrolled'), ('fig8_log_l2', 'fig8_flower'),
            ('ltd_log', 'ltd_tight'), ('fig2_log_c', 'fig2_loop_wfnet'),
        ]
        for log, model in pairs:
            with self.subTest(log=log, model=model):
                self.assertTrue(is_fitting(get_log(log), get_model(model)))

    def test_nested_logs(self):
        self.assertTrue(is_trace_subset(get_log('fig4_log_l1'), get_log('fig4_log_l2')))
        self.assertTrue(is_trace_subset(get_log('fig8_log_l1'), get_log('fig8_log_l2')))

    def test_language_inclusions(self):
        self.assertTrue(is_subset(language_dfa(get_model('fig7b_unrolled')), language_dfa(get_model('fig7a_loop'))))
        self.assertTrue(is_subset(language_dfa(get_model('fig5c_constrained')),
                                  language_dfa(get_model('fig5a_flower'))))
        self.assertTrue(is_subset(language_dfa(get_model('ltd_tight')), language_dfa(get_model('ltd_loose'))))
        self.assertTrue(is_subset(language_dfa(get_model('fig6_m2')), language_dfa(get_model('fig6_m1'))))

    def test_language_equalities(self):
        for first, second in (('fig5a_flower', 'fig5b_flower_tau'), ('fig7b_unrolled', 'fig7b_split'),
                              ('seq_ab', 'dup_label_ab')):
            with self.subTest(first=first, second=second):
                self.assertTrue(are_equivalent(language_dfa(get_model(first)), language_dfa(get_model(second))))

    def test_expectations_reference_corpus(self):
        names = set(list_entries(include_supplementary=True))
        for expectation in EXPECTED_VALUES:
            self.assertIn(expectation.model, names)
            self.assertIn(expectation.log, names)
        self.assertEqual(len(expectations_for('fig5_log')), 3)

    def test_table_rows(self):
        self.assertEqual(set(TABLE), {'simple-ba', 'advanced-ba', 'one-align-etc', 'negative-event', 'pcc'})


class Fig6LogTest(SimpleTestCase):
    """Test the seeded fig6 log generator"""

    def test_fits_both_models(self):
        log = generate_fig6_log(seed=1)
        self.assertEqual(log.size, 10)
        self.assertTrue(is_fitting(log, get_model('fig6_m2')))
        self.assertTrue(is_fitting(log, get_model('fig6_m1')))

    def test_reference_log(self):
        log = generate_fig6_log(seed=0)
        self.assertEqual(log.count(('b', 'e', 'd', 'c', 'g')), 2)
        self.assertEqual(log.count(('b', 'e', 'd', 'c', 'd', 'c', 'e', 'c', 'c', 'g')), 1)
        self.assertEqual(len(log.traces), 9)

    def test_seed_repeatable(self):
        self.assertEqual(generate_fig6_log(seed=4), generate_fig6_log(seed=4))

    def test_trace_count(self):
        self.assertEqual(generate_fig6_log(seed=0, n_traces=3).size, 3)
        with self.assertRaises(ValueError):
            generate_fig6_log(seed=0, n_traces=0)


class ExportCorpusTest(SimpleTestCase):
    """Test writing the corpus to files"""

    def test_export_round_trip(self):
        with tempfile.TemporaryDirectory() as directory:
            written = export_corpus(Path(directory) / 'corpus')
            self.assertEqual(len(written), len(ENTRIES))
            net = (Path(directory) / 'corpus' / 'fig4_model.net').read_text(encoding='utf-8')
            self.assertEqual(parse_net(net), get_model('fig4_model'))
            log = (Path(directory) / 'corpus' / 'fig8_log_l2.log').read_text(encoding='utf-8')
            self.assertEqual(parse_log(log), get_log('fig8_log_l2'))

    def test_export_primary_only(self):
        with tempfile.TemporaryDirectory() as directory:
            written = export_corpus(directory, include_supplementary=False)
            self.assertEqual(sorted(p.stem for p in written), sorted(list_entries()))
