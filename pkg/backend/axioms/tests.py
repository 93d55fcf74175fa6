"""
Test cases for flowers, the Welch comparison, axiom checks and the matrix
"""

import json
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from unittest.mock import patch

from django.core.cache import cache
from django.test import SimpleTestCase, override_settings

from automata.dfa import is_universal
from corpus.expected import TABLE
from corpus.loaders import get_log, get_model
from eventlog.logs import EventLog
from measures.reports import PrecisionReport
from measures.serializers import render_record
from petri.language import language_dfa

from .checks import Batch, _compare, check_a1, check_a2, check_a3, check_a4, check_a5
from .flowers import flower_model, wf_flower_model
from .handles import HANDLES, MATRIX_MEASURES, get_handle
from .reports import HYPOTHESIS_NOT_MET, SATISFIED, UNDECIDED, VIOLATED, AxiomReport
from .serializers import AxiomReportSerializer, MatrixRowSerializer
from .statistics import welch
from .suite import (INSTANCES, PROVEN_CELL, UNKNOWN_CELL, VIOLATED_CELL, AxiomInstance,
                    axiom_matrix, matrix_cell, render_matrix, run_instances)


def _batch(values, seeds=None):
    return Batch([PrecisionReport('negative-event', Fraction(v)) for v in values], seeds)


class FlowerTest(SimpleTestCase):
    """Test flower models"""

    def test_flower_is_universal(self):
        flower = flower_model('cab')
        self.assertTrue(is_universal(language_dfa(flower), 'abc'))
        self.assertEqual(str(flower), 'flower{a,b,c}')

    def test_wf_flower(self):
        flower = wf_flower_model(['a', 'b'])
        self.assertTrue(flower.is_wf_shaped())
        self.assertTrue(is_universal(language_dfa(flower), 'ab'))

    def test_empty_alphabet(self):
        with self.assertRaises(ValueError):
            flower_model([])


class WelchTest(SimpleTestCase):
    """Test Welch's t-test"""

    def test_clearly_greater(self):
        result = welch([1.0, 1.1, 0.9, 1.0], [0.0, 0.1, -0.1, 0.0])
        self.assertTrue(result.a_greater)
        self.assertTrue(result.differ)
        self.assertFalse(result.a_less)

    def test_identical_constant_batches(self):
        result = welch([0.5, 0.5, 0.5], [0.5, 0.5, 0.5])
        self.assertEqual(result.t, 0.0)
        self.assertFalse(result.differ)

    def test_constant_but_different(self):
        result = welch([0.6, 0.6], [0.5, 0.5])
        self.assertTrue(result.a_greater)

    def test_overlapping_batches(self):
        result = welch([0.40, 0.50, 0.45, 0.55], [0.42, 0.52, 0.47, 0.50])
        self.assertFalse(result.differ)

    def test_needs_two_samples(self):
        with self.assertRaises(ValueError):
            welch([0.5], [0.4, 0.6])


class AxiomReportTest(SimpleTestCase):
    """Test report validation and rendering"""

    def test_violation_needs_values(self):
        with self.assertRaises(ValueError):
            AxiomReport('A2', 'pcc', VIOLATED)

    def test_unknown_axiom_or_verdict(self):
        with self.assertRaises(ValueError):
            AxiomReport('A6', 'pcc', SATISFIED)
        with self.assertRaises(ValueError):
            AxiomReport('A1', 'pcc', 'proven')

    def test_text(self):
        report = AxiomReport('A5', 'pcc', VIOLATED, {'values': {'lhs': Fraction(36, 132), 'rhs': Fraction(5, 16)}},
                             {'l1_subset_l2': True})
        self.assertEqual(
            report.to_text(),
            'axiom=A5\nmeasure=pcc\nverdict=violated\n'
            'witness.values=lhs:0.2727 rhs:0.3125\nevidence.l1_subset_l2=True\n',
        )

    def test_record(self):
        report = AxiomReport('A4', 'simple-ba', VIOLATED, {'values': {'lhs': Fraction(1), 'rhs': Fraction(5, 6)}})
        data = json.loads(render_record(AxiomReportSerializer(report).data))
        self.assertEqual(data['verdict'], 'violated')
        self.assertEqual(data['witness']['values']['rhs'], {'exact': '5/6', 'value': 0.8333})


class CompareTest(SimpleTestCase):
    """Test how value batches are compared"""

    def setUp(self):
        self.handle = get_handle('negative-event')

    def test_exact_comparison(self):
        report = _compare('A2', self.handle, 'ge', _batch([Fraction(1, 2)]), _batch([Fraction(3, 5)]), {}, {})
        self.assertEqual(report.verdict, VIOLATED)
        self.assertEqual(report.witness['values'], {'lhs': Fraction(1, 2), 'rhs': Fraction(3, 5)})

    def test_strict_comparison_on_ties(self):
        report = _compare('A3', self.handle, 'gt', _batch([Fraction(1, 2)]), _batch([Fraction(1, 2)]), {}, {})
        self.assertEqual(report.verdict, VIOLATED)

    def test_welch_comparison(self):
        lower = _batch(['0.40', '0.41', '0.39', '0.40'], seeds=[0, 1, 2, 3])
        higher = _batch(['0.50', '0.51', '0.49', '0.50'], seeds=[0, 1, 2, 3])
        report = _compare('A2', self.handle, 'ge', lower, higher, {}, {})
        self.assertEqual(report.verdict, VIOLATED)
        self.assertEqual(report.witness['seeds'], [0, 1, 2, 3])
        self.assertIn('critical', report.witness['welch'])
        self.assertEqual(_compare('A2', self.handle, 'ge', higher, lower, {}, {}).verdict, SATISFIED)

    def test_welch_equality(self):
        first = _batch(['0.40', '0.50', '0.45', '0.55'], seeds=[0, 1, 2, 3])
        second = _batch(['0.42', '0.52', '0.47', '0.50'], seeds=[0, 1, 2, 3])
        self.assertEqual(_compare('A4', self.handle, 'eq', first, second, {}, {}).verdict, SATISFIED)


class DeterminismCheckTest(SimpleTestCase):
    """Test A1"""

    def setUp(self):
        cache.clear()

    def test_deterministic_measure(self):
        report = check_a1('etc', get_log('fig4_log_l1'), get_model('fig4_model'))
        self.assertEqual(report.verdict, SATISFIED)
        self.assertEqual(report.witness['values'], {'all runs': Fraction(3, 4)})

    def test_partial_function(self):
        report = check_a1('advanced-ba', get_log('seq_abc_log'), get_model('seq_abc'))
        self.assertEqual(report.verdict, VIOLATED)
        self.assertTrue(report.reason.startswith('partial function'))
        self.assertEqual(report.witness['values'], {'run 0': 'undefined'})

    def test_arbitrary_alignment_choice(self):
        report = check_a1('one-align-etc', get_log('fig4_log_partial'), get_model('fig4_model'),
                          seeds=range(20), options={'tiebreak': 'seeded-random'})
        self.assertEqual(report.verdict, VIOLATED)
        self.assertEqual(set(report.witness['values'].values()), {Fraction(1, 2), Fraction(3, 4)})

    def test_lexicographic_choice_is_stable(self):
        report = check_a1('one-align-etc', get_log('fig4_log_partial'), get_model('fig4_model'))
        self.assertEqual(report.verdict, SATISFIED)

    def test_undecided_run(self):
        report = check_a1('all-align-etc', get_log('fig4_log_partial'), get_model('fig4_model'), options={'cap': 1})
        self.assertEqual(report.verdict, UNDECIDED)

    def test_needs_two_runs(self):
        with self.assertRaises(ValueError):
            check_a1('etc', get_log('fig4_log_l1'), get_model('fig4_model'), runs=1)


class MonotonicityCheckTest(SimpleTestCase):
    """Test A2"""

    def setUp(self):
        cache.clear()

    def test_pcc_length_one_loop(self):
        report = check_a2('pcc', get_log('fig7_log'), get_model('fig7b_unrolled'), get_model('fig7a_loop'),
                          options={'k': 2})
        self.assertEqual(report.verdict, VIOLATED)
        self.assertEqual(report.witness['values'], {'lhs': Fraction(1, 2), 'rhs': Fraction(3, 5)})
        self.assertEqual(report.evidence, {'log_fits_m1': True, 'm1_subset_m2': True})

    def test_one_align_constrained_model(self):
        report = check_a2('one-align-etc', get_log('fig5_log'), get_model('fig5c_constrained'),
                          get_model('fig5b_flower_tau'))
        self.assertEqual(report.verdict, VIOLATED)

    def test_negative_event_long_term_dependency(self):
        report = check_a2('negative-event', get_log('ltd_log'), get_model('ltd_tight'), get_model('ltd_loose'))
        self.assertEqual(report.verdict, VIOLATED)

    def test_same_model_never_violates(self):
        for name in ('etc', 'one-align-etc', 'negative-event', 'pcc', 'greco'):
            with self.subTest(name=name):
                model = get_model('fig4_model')
                report = check_a2(name, get_log('fig4_log_l1'), model, model)
                self.assertEqual(report.verdict, SATISFIED)

    def test_inclusion_not_met(self):
        report = check_a2('one-align-etc', get_log('fig5_log'), get_model('fig5a_flower'),
                          get_model('fig5c_constrained'))
        self.assertEqual(report.verdict, HYPOTHESIS_NOT_MET)
        self.assertIn('counterexample', report.evidence)

    def test_log_must_fit(self):
        model = get_model('fig4_model')
        report = check_a2('pcc', get_log('fig4_log_partial'), model, model)
        self.assertEqual(report.verdict, HYPOTHESIS_NOT_MET)
        self.assertEqual(report.evidence, {'unfitting_trace': '⟨a⟩'})

    def test_measure_precondition(self):
        flower = get_model('fig8_flower')
        report = check_a2('simple-ba', get_log('fig8_log_l1'), flower, flower)
        self.assertEqual(report.verdict, HYPOTHESIS_NOT_MET)
        self.assertTrue(report.reason.startswith('measure precondition'))


class FlowerCheckTest(SimpleTestCase):
    """Test A3"""

    def setUp(self):
        cache.clear()

    def test_advanced_ba_loop(self):
        for log in ('fig2_log_a', 'fig2_log_b', 'fig2_log_c'):
            with self.subTest(log=log):
                report = check_a3('advanced-ba', get_log(log), get_model('fig2_loop_wfnet'))
                self.assertEqual(report.verdict, VIOLATED)
                self.assertEqual(report.witness['values']['lhs'], report.witness['values']['rhs'])
                self.assertTrue(report.evidence['flower_universal'])
                self.assertTrue(report.witness['flower'].startswith('wf-flower'))

    def test_universal_model(self):
        report = check_a3('pcc', get_log('fig8_log_l1'), get_model('fig8_flower'))
        self.assertEqual(report.verdict, HYPOTHESIS_NOT_MET)

    def test_activities_outside_alphabet(self):
        report = check_a3('pcc', get_log('seq_ab_log'), get_model('seq_abc'), alphabet='ab')
        self.assertEqual(report.verdict, HYPOTHESIS_NOT_MET)
        self.assertIn('counterexample', report.evidence)

    def test_pcc_sequence_beats_flower(self):
        report = check_a3('pcc', get_log('seq_ab_log'), get_model('seq_ab'))
        self.assertEqual(report.verdict, SATISFIED)


class LanguageEqualityCheckTest(SimpleTestCase):
    """Test A4"""

    def setUp(self):
        cache.clear()

    def test_simple_ba_duplicate_paths(self):
        report = check_a4('simple-ba', get_log('seq_ab_log'), get_model('seq_ab'), get_model('dup_label_ab'))
        self.assertEqual(report.verdict, VIOLATED)
        self.assertEqual(report.witness['values'], {'lhs': Fraction(1), 'rhs': Fraction(5, 6)})

    def test_one_align_flowers(self):
        report = check_a4('one-align-etc', get_log('fig5_log'), get_model('fig5a_flower'),
                          get_model('fig5b_flower_tau'))
        self.assertEqual(report.verdict, VIOLATED)

    def test_advanced_ba_language_based(self):
        report = check_a4('advanced-ba', get_log('fig7_log'), get_model('fig7b_unrolled'), get_model('fig7b_split'))
        self.assertEqual(report.verdict, SATISFIED)

    def test_different_languages(self):
        report = check_a4('etc', get_log('seq_ab_log'), get_model('seq_ab'), get_model('dup_label_choice'))
        self.assertEqual(report.verdict, HYPOTHESIS_NOT_MET)


class LogGrowthCheckTest(SimpleTestCase):
    """Test A5"""

    def setUp(self):
        cache.clear()

    def test_one_align_repeated_loop(self):
        report = check_a5('one-align-etc', get_log('fig4_log_l1'), get_log('fig4_log_l2'), get_model('fig4_model'))
        self.assertEqual(report.verdict, VIOLATED)
        self.assertEqual(report.witness['values'], {'lhs': Fraction(20, 28), 'rhs': Fraction(3, 4)})

    def test_pcc_long_traces(self):
        report = check_a5('pcc', get_log('fig8_log_l1'), get_log('fig8_log_l2'), get_model('fig8_flower'),
                          options={'k': 3})
        self.assertEqual(report.verdict, VIOLATED)

    def test_logs_not_nested(self):
        report = check_a5('pcc', get_log('fig8_log_l2'), get_log('fig8_log_l1'), get_model('fig8_flower'))
        self.assertEqual(report.verdict, HYPOTHESIS_NOT_MET)
        self.assertIn('missing_trace', report.evidence)

    def test_l2_must_fit(self):
        report = check_a5('etc', EventLog.from_traces(['a,c']), get_log('fig4_log_partial'), get_model('fig4_model'))
        self.assertEqual(report.verdict, HYPOTHESIS_NOT_MET)


class AxiomMatrixTest(SimpleTestCase):
    """Test the measure × axiom matrix"""

    def setUp(self):
        cache.clear()

    def test_handles(self):
        self.assertEqual(set(MATRIX_MEASURES) - set(HANDLES), set())
        self.assertEqual(get_handle('advanced-ba').proven, frozenset({'A4'}))
        with self.assertRaises(ValueError):
            get_handle('fitness')

    def test_instances_cover_table(self):
        covered = {(i.measure, i.axiom) for i in INSTANCES}
        for measure, row in TABLE.items():
            for axiom, cell in row.items():
                if cell == VIOLATED_CELL:
                    self.assertIn((measure, axiom), covered)

    def test_label(self):
        instance = AxiomInstance('pcc', 'A2', ('fig7_log',), ('fig7b_unrolled', 'fig7a_loop'), {'k': 2})
        self.assertEqual(instance.label, 'A2 pcc logs=fig7_log models=fig7b_unrolled,fig7a_loop k=2')

    def test_cell_rules(self):
        violated = AxiomReport('A4', 'advanced-ba', VIOLATED, {'values': {}})
        satisfied = AxiomReport('A4', 'advanced-ba', SATISFIED)
        self.assertEqual(matrix_cell('advanced-ba', 'A4', [satisfied]), PROVEN_CELL)
        self.assertEqual(matrix_cell('advanced-ba', 'A4', [violated, satisfied]), VIOLATED_CELL)
        self.assertEqual(matrix_cell('pcc', 'A4', []), UNKNOWN_CELL)

    def test_matrix_without_instances(self):
        frame, pairs = axiom_matrix(instance_suite=())
        self.assertEqual(pairs, [])
        self.assertEqual(frame.loc['advanced-ba', 'A4'], PROVEN_CELL)
        self.assertEqual(frame.loc['pcc', 'A2'], UNKNOWN_CELL)

    def test_unknown_measure(self):
        with self.assertRaises(ValueError):
            axiom_matrix(measures=['fitness'])

    def test_matrix_matches_table(self):
        frame, pairs = axiom_matrix()
        self.assertEqual(len(pairs), len(INSTANCES))
        for measure in MATRIX_MEASURES:
            for axiom in frame.columns:
                with self.subTest(measure=measure, axiom=axiom):
                    expected = TABLE[measure].get(axiom, UNKNOWN_CELL)
                    self.assertEqual(frame.loc[measure, axiom], expected)

    def test_render(self):
        frame, _ = axiom_matrix(measures=['pcc'], instance_suite=())
        self.assertEqual(render_matrix(frame), '     A1  A2  A3  A4  A5\npcc  ?   ?   ?   ?   ?\n')
        row = MatrixRowSerializer({'measure': 'pcc', **frame.loc['pcc'].to_dict()}).data
        self.assertEqual(row['A3'], UNKNOWN_CELL)

    @override_settings(PRECISION_WORKERS=2)
    def test_thread_pool(self):
        suite = [i for i in INSTANCES if i.measure == 'pcc']
        with patch('axioms.suite.ThreadPoolExecutor', wraps=ThreadPoolExecutor) as pool:
            reports = run_instances(suite)
        pool.assert_called_once_with(max_workers=2)
        self.assertEqual([r.axiom for r in reports], [i.axiom for i in suite])
