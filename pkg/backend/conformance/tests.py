"""
Test cases for the management commands and the reproduction helpers
"""

import json
import tempfile
from io import StringIO
from pathlib import Path
from unittest.mock import patch

import pandas as pd
from django.core.cache import cache
from django.core.management import call_command
from django.core.management.base import CommandError, OutputWrapper
from django.test import SimpleTestCase

from axioms.suite import PROVEN_CELL, UNKNOWN_CELL, VIOLATED_CELL
from corpus.expected import EXPECTED_VALUES, Expectation
from corpus.loaders import get_model
from petri.dsl import serialize_net

from .config import (EXIT_INCONCLUSIVE, EXIT_OK, EXIT_VIOLATED, InputError, RunConfig, load_log,
                     load_model)
from .management.commands.axiom import run_axiom
from .management.commands.measure import run_measure
from .reproduction import (check_expectation, compare_expected, fig6_comparison, matrix_mismatches,
                           render_comparison, reproduce)


def _measure_config(measure, model, log, **options):
    return RunConfig('measure', measure, {'model': model}, {'log': log}, options)


GROWING_NET = 'place p init=1\nplace q\ntrans t label=a\narc p t\narc t p\narc t q\nfinal p=1\n'
STUCK_NET = 'place p init=1\nplace q\nplace r\ntrans t label=a\narc p t\narc t q\nfinal r=1\n'


def _write_inputs(directory):
    paths = []
    for name, text in (('growing.net', GROWING_NET), ('stuck.net', STUCK_NET), ('single.log', '1x a\n')):
        path = Path(directory) / name
        path.write_text(text, encoding='utf-8')
        paths.append(str(path))
    return paths


class RunConfigTest(SimpleTestCase):
    """Test run configurations and input loading"""

    def test_from_options(self):
        parsed = {'measure': 'pcc', 'model': 'corpus:fig7a_loop', 'log': 'corpus:fig7_log', 'k': 2,
                  'seed': None, 'format': 'records'}
        config = RunConfig.from_options('measure', parsed, models=('model',), logs=('log',))
        self.assertEqual(config.options, {'k': 2})
        self.assertEqual(config.models, {'model': 'corpus:fig7a_loop'})
        self.assertEqual(config.as_dict()['output_format'], 'records')

    def test_missing_slot(self):
        config = RunConfig('measure', 'etc', {'model': 'corpus:fig4_model'})
        with self.assertRaises(InputError) as ctx:
            config.require('model', 'log')
        self.assertEqual(str(ctx.exception), 'missing input: --log')

    def test_corpus_reference(self):
        self.assertEqual(load_model('corpus:fig4_model'), get_model('fig4_model'))
        self.assertEqual(load_log('corpus:fig5_log').size, 1)

    def test_unknown_corpus_reference(self):
        with self.assertRaises(InputError):
            load_model('corpus:fig9_model')

    def test_missing_file(self):
        with self.assertRaises(InputError) as ctx:
            load_log('/nonexistent/run.log')
        self.assertIn('no such file', str(ctx.exception))

    def test_files(self):
        with tempfile.TemporaryDirectory() as directory:
            net_path = Path(directory) / 'choice.net'
            net_path.write_text(serialize_net(get_model('fig4_model')), encoding='utf-8')
            self.assertEqual(str(load_model(str(net_path))), 'choice')
            bad_log = Path(directory) / 'bad.log'
            bad_log.write_text('two a,b\n', encoding='utf-8')
            with self.assertRaises(InputError) as ctx:
                load_log(str(bad_log))
            self.assertIn('Line 1', str(ctx.exception))


class MeasureCommandTest(SimpleTestCase):
    """Test the measure command"""

    def setUp(self):
        cache.clear()

    def test_defined_value(self):
        out = StringIO()
        call_command('measure', '--measure', 'etc', '--model', 'corpus:fig4_model',
                     '--log', 'corpus:fig4_log_l1', stdout=out)
        self.assertIn('value=0.7500\n', out.getvalue())
        self.assertIn('option.weighting=visits\n', out.getvalue())

    def test_records(self):
        out = StringIO()
        call_command('measure', '--measure', 'pcc', '--model', 'corpus:fig7a_loop', '--log', 'corpus:fig7_log',
                     '--k', '2', '--format', 'records', stdout=out)
        record = json.loads(out.getvalue())
        self.assertEqual(record['report']['exact'], '3/5')
        self.assertEqual(record['config']['options'], {'k': 2})
        self.assertEqual(record['config']['models'], {'model': 'corpus:fig7a_loop'})

    def test_undefined_exit_status(self):
        out = StringIO()
        with self.assertRaises(SystemExit) as ctx:
            call_command('measure', '--measure', 'advanced-ba', '--model', 'corpus:seq_abc',
                         '--log', 'corpus:seq_abc_log', stdout=out)
        self.assertEqual(ctx.exception.code, EXIT_INCONCLUSIVE)
        self.assertIn('value=undefined', out.getvalue())

    def test_run_measure_status(self):
        out = OutputWrapper(StringIO())
        config = _measure_config('one-align-etc', 'corpus:fig5c_constrained', 'corpus:fig5_log')
        self.assertEqual(run_measure(config, out), EXIT_OK)
        undecided = _measure_config('all-align-etc', 'corpus:fig4_model', 'corpus:fig4_log_partial', cap=1)
        self.assertEqual(run_measure(undecided, out), EXIT_INCONCLUSIVE)

    def test_missing_file(self):
        with self.assertRaises(CommandError) as ctx:
            call_command('measure', '--measure', 'etc', '--model', '/nonexistent/model.net',
                         '--log', 'corpus:fig4_log_l1', stdout=StringIO())
        self.assertEqual(ctx.exception.returncode, 1)

    def test_precondition_is_input_error(self):
        with self.assertRaises(CommandError) as ctx:
            call_command('measure', '--measure', 'etc', '--model', 'corpus:fig4_model',
                         '--log', 'corpus:fig4_log_partial', stdout=StringIO())
        self.assertEqual(ctx.exception.returncode, 1)

    def test_missing_log(self):
        with self.assertRaises(CommandError):
            call_command('measure', '--measure', 'etc', '--model', 'corpus:fig4_model', stdout=StringIO())

    def test_model_errors_are_input_errors(self):
        with tempfile.TemporaryDirectory() as directory:
            growing, stuck, log = _write_inputs(directory)
            with self.assertRaises(CommandError) as ctx:
                call_command('measure', '--measure', 'pcc', '--model', growing, '--log', log, stdout=StringIO())
            self.assertEqual(ctx.exception.returncode, 1)
            self.assertIn('exceeds the bound', str(ctx.exception))
            with self.assertRaises(CommandError) as ctx:
                call_command('measure', '--measure', 'one-align-etc', '--model', stuck, '--log', log,
                             stdout=StringIO())
            self.assertEqual(ctx.exception.returncode, 1)
            self.assertIn('No final marking', str(ctx.exception))


class AxiomCommandTest(SimpleTestCase):
    """Test the axiom command"""

    def setUp(self):
        cache.clear()

    def test_violated(self):
        out = StringIO()
        with self.assertRaises(SystemExit) as ctx:
            call_command('axiom', 'A2', '--measure', 'pcc', '--log', 'corpus:fig7_log',
                         '--model1', 'corpus:fig7b_unrolled', '--model2', 'corpus:fig7a_loop', '--k', '2',
                         stdout=out)
        self.assertEqual(ctx.exception.code, EXIT_VIOLATED)
        self.assertIn('verdict=violated\n', out.getvalue())
        self.assertIn('witness.values=lhs:0.5000 rhs:0.6000', out.getvalue())

    def test_satisfied(self):
        out = StringIO()
        call_command('axiom', 'A4', '--measure', 'advanced-ba', '--log', 'corpus:fig7_log',
                     '--model1', 'corpus:fig7b_unrolled', '--model2', 'corpus:fig7b_split', stdout=out)
        self.assertIn('verdict=satisfied-on-instances', out.getvalue())

    def test_hypothesis_not_met(self):
        with self.assertRaises(SystemExit) as ctx:
            call_command('axiom', 'A3', '--measure', 'pcc', '--log', 'corpus:fig8_log_l1',
                         '--model', 'corpus:fig8_flower', stdout=StringIO())
        self.assertEqual(ctx.exception.code, EXIT_INCONCLUSIVE)

    def test_seeds_option(self):
        out = StringIO()
        with self.assertRaises(SystemExit) as ctx:
            call_command('axiom', 'A1', '--measure', 'one-align-etc', '--log', 'corpus:fig4_log_partial',
                         '--model', 'corpus:fig4_model', '--tiebreak', 'seeded-random',
                         '--seeds', ','.join(str(s) for s in range(20)), stdout=out)
        self.assertEqual(ctx.exception.code, EXIT_VIOLATED)
        self.assertIn('reason=evaluations differ', out.getvalue())

    def test_run_axiom_records(self):
        out = StringIO()
        config = RunConfig('axiom A5', 'one-align-etc', {'model': 'corpus:fig4_model'},
                           {'log1': 'corpus:fig4_log_l1', 'log2': 'corpus:fig4_log_l2'}, output_format='records')
        self.assertEqual(run_axiom('A5', config, OutputWrapper(out)), EXIT_VIOLATED)
        record = json.loads(out.getvalue())
        self.assertEqual(record['report']['witness']['values']['lhs'], {'exact': '5/7', 'value': 0.7143})

    def test_alphabet_option(self):
        with self.assertRaises(SystemExit) as ctx:
            call_command('axiom', 'A3', '--measure', 'pcc', '--log', 'corpus:seq_ab_log',
                         '--model', 'corpus:seq_abc', '--alphabet', 'a,b', stdout=StringIO())
        self.assertEqual(ctx.exception.code, EXIT_INCONCLUSIVE)

    def test_missing_slot(self):
        with self.assertRaises(CommandError) as ctx:
            call_command('axiom', 'A5', '--measure', 'pcc', '--log1', 'corpus:fig8_log_l1',
                         '--model', 'corpus:fig8_flower', stdout=StringIO())
        self.assertEqual(ctx.exception.returncode, 1)
        self.assertIn('--log2', str(ctx.exception))

    def test_model_errors_are_inconclusive(self):
        with tempfile.TemporaryDirectory() as directory:
            growing, stuck, log = _write_inputs(directory)
            out = StringIO()
            with self.assertRaises(SystemExit) as ctx:
                call_command('axiom', 'A1', '--measure', 'pcc', '--model', growing, '--log', log, stdout=out)
            self.assertEqual(ctx.exception.code, EXIT_INCONCLUSIVE)
            self.assertIn('verdict=undecided', out.getvalue())
            out = StringIO()
            with self.assertRaises(SystemExit) as ctx:
                call_command('axiom', 'A1', '--measure', 'one-align-etc', '--model', stuck, '--log', log,
                             stdout=out)
            self.assertEqual(ctx.exception.code, EXIT_INCONCLUSIVE)
            self.assertIn('reason=no alignment', out.getvalue())


class ExportCorpusCommandTest(SimpleTestCase):
    """Test the export_corpus command"""

    def test_export(self):
        out = StringIO()
        with tempfile.TemporaryDirectory() as directory:
            call_command('export_corpus', directory, '--primary-only', stdout=out)
            self.assertTrue((Path(directory) / 'fig4_model.net').is_file())
            self.assertFalse((Path(directory) / 'seq_ab.net').exists())
        self.assertIn('Exported 18 entries', out.getvalue())


class ReproductionTest(SimpleTestCase):
    """Test the reproduction helpers"""

    def setUp(self):
        cache.clear()

    def test_expectation_pass(self):
        row = check_expectation(EXPECTED_VALUES[0])
        self.assertTrue(row['passed'])
        self.assertEqual(row['exact'], '3/4')

    def test_expectation_fail(self):
        row = check_expectation(Expectation('etc', 'fig4_model', 'fig4_log_l1', 0.8))
        self.assertFalse(row['passed'])
        self.assertEqual(row['computed'], '0.7500')

    def test_undefined_fails(self):
        row = check_expectation(Expectation('advanced-ba', 'seq_abc', 'seq_abc_log', 0.5))
        self.assertFalse(row['passed'])
        self.assertEqual(row['computed'], 'undefined')

    def test_binding_values(self):
        frame = compare_expected()
        self.assertEqual(len(frame), len(EXPECTED_VALUES))
        self.assertTrue(frame['passed'].all(), render_comparison(frame))

    def test_matrix_mismatches(self):
        frame = pd.DataFrame(
            [[VIOLATED_CELL, UNKNOWN_CELL, UNKNOWN_CELL, UNKNOWN_CELL, UNKNOWN_CELL]],
            index=pd.Index(['pcc'], name='measure'), columns=['A1', 'A2', 'A3', 'A4', 'A5'],
        )
        self.assertEqual(matrix_mismatches(frame), [
            'pcc/A1: computed ✗, reference unknown',
            'pcc/A2: computed ?, reference ✗',
            'pcc/A5: computed ?, reference ✗',
        ])
        frame.loc['pcc'] = [UNKNOWN_CELL, VIOLATED_CELL, UNKNOWN_CELL, UNKNOWN_CELL, VIOLATED_CELL]
        self.assertEqual(matrix_mismatches(frame), [])

    def test_proven_cell_matches(self):
        frame = pd.DataFrame([[UNKNOWN_CELL, UNKNOWN_CELL, UNKNOWN_CELL, PROVEN_CELL, UNKNOWN_CELL]],
                             index=['advanced-ba'], columns=['A1', 'A2', 'A3', 'A4', 'A5'])
        self.assertEqual(len(matrix_mismatches(frame)), 2)

    def test_fig6_comparison_structure(self):
        result = fig6_comparison(seeds=range(3), n_traces=2)
        self.assertEqual(result['seeds'], [0, 1, 2])
        self.assertEqual(result['log_seed'], 0)
        self.assertEqual(set(result['means']), {'fig6_m1', 'fig6_m2'})
        self.assertEqual(set(result['reference_stdevs']), {'fig6_m1', 'fig6_m2'})
        self.assertIn('t', result['welch'])
        self.assertEqual(result['passed'], result['ordered'] and result['in_band'])

    def test_fig6_ordering_over_twenty_seeds(self):
        result = fig6_comparison(seeds=range(20))
        self.assertAlmostEqual(result['means']['fig6_m1'], 0.5033, delta=0.001)
        self.assertAlmostEqual(result['means']['fig6_m2'], 0.4803, delta=0.001)
        self.assertGreater(result['welch']['t'], result['welch']['critical'])
        self.assertTrue(result['ordered'])
        self.assertTrue(result['in_band'])
        self.assertTrue(result['near_reference'])
        self.assertTrue(result['spread_near_reference'])
        self.assertTrue(result['passed'])

    @patch('conformance.reproduction.fig6_comparison')
    def test_reproduce_fails_on_fig6_order(self, mock_fig6):
        mock_fig6.return_value = {'ordered': False, 'in_band': True, 'passed': False}
        result = reproduce(seeds=range(2))
        self.assertEqual(result['mismatches'], [])
        mock_fig6.assert_called_once_with(range(2))
        self.assertFalse(result['passed'])

    def test_reproduce(self):
        result = reproduce(include_fig6=False)
        self.assertEqual(result['mismatches'], [])
        self.assertIsNone(result['fig6'])
        self.assertTrue(result['passed'])

    @patch('conformance.management.commands.reproduce_paper.reproduce')
    def test_command_failure_exit(self, mock_reproduce):
        mock_reproduce.return_value = {
            'comparison': compare_expected(EXPECTED_VALUES[:1]),
            'matrix': pd.DataFrame([[UNKNOWN_CELL] * 5], index=pd.Index(['pcc'], name='measure'),
                                   columns=['A1', 'A2', 'A3', 'A4', 'A5']),
            'checks': [],
            'mismatches': ['pcc/A2: computed ?, reference ✗'],
            'fig6': None,
            'passed': False,
        }
        out = StringIO()
        with self.assertRaises(SystemExit) as ctx:
            call_command('reproduce_paper', '--skip-fig6', stdout=out)
        self.assertEqual(ctx.exception.code, 1)
        mock_reproduce.assert_called_once_with(include_fig6=False, seeds=None)
        self.assertIn('matrix mismatch: pcc/A2', out.getvalue())
        self.assertIn('reproduction FAILED', out.getvalue())

    @patch('conformance.management.commands.reproduce_paper.reproduce')
    def test_command_records(self, mock_reproduce):
        mock_reproduce.return_value = {
            'comparison': compare_expected(EXPECTED_VALUES[:2]),
            'matrix': pd.DataFrame([[UNKNOWN_CELL] * 5], index=pd.Index(['pcc'], name='measure'),
                                   columns=['A1', 'A2', 'A3', 'A4', 'A5']),
            'checks': [],
            'mismatches': [],
            'fig6': None,
            'passed': True,
        }
        out = StringIO()
        call_command('reproduce_paper', '--format', 'records', stdout=out)
        records = [json.loads(line) for line in out.getvalue().splitlines()]
        self.assertEqual([r['kind'] for r in records], ['value', 'value', 'matrix', 'summary'])
        self.assertTrue(records[-1]['passed'])
