"""
Reproduce every reference value and the axiom matrix from the corpus
"""

import sys

from django.core.management.base import BaseCommand

from axioms.serializers import AxiomReportSerializer, MatrixRowSerializer
from axioms.suite import render_matrix
from conformance.arguments import add_format_option
from conformance.config import RECORDS
from conformance.reproduction import render_comparison, render_fig6, reproduce
from measures.serializers import render_record, to_plain

EXIT_MISMATCH = 1


class Command(BaseCommand):
    help = 'Compare computed values with the reference values and print the axiom matrix'

    def add_arguments(self, parser):
        parser.add_argument('--skip-fig6', action='store_true',
                            help='leave out the sampled fig6 ordering comparison')
        parser.add_argument('--seed-runs', dest='seed_runs', type=int,
                            help='number of seeds for the fig6 comparison')
        add_format_option(parser)

    def handle(self, *args, **options):
        seeds = range(options['seed_runs']) if options.get('seed_runs') else None
        result = reproduce(include_fig6=not options['skip_fig6'], seeds=seeds)
        if options['format'] == RECORDS:
            self._write_records(result)
        else:
            self._write_text(result)
        if not result['passed']:
            sys.exit(EXIT_MISMATCH)

    def _write_text(self, result):
        self.stdout.write(render_comparison(result['comparison']), ending='')
        if result['fig6'] is not None:
            self.stdout.write(render_fig6(result['fig6']), ending='')
        self.stdout.write('')
        self.stdout.write(render_matrix(result['matrix']), ending='')
        for mismatch in result['mismatches']:
            self.stdout.write(f'matrix mismatch: {mismatch}')
        verdict = 'all binding values reproduced' if result['passed'] else 'reproduction FAILED'
        self.stdout.write(verdict)

    def _write_records(self, result):
        for row in result['comparison'].to_dict(orient='records'):
            self.stdout.write(render_record({'kind': 'value', **to_plain(row)}))
        if result['fig6'] is not None:
            self.stdout.write(render_record({'kind': 'fig6', **to_plain(result['fig6'])}))
        for measure, row in result['matrix'].iterrows():
            data = MatrixRowSerializer({'measure': measure, **row.to_dict()}).data
            self.stdout.write(render_record({'kind': 'matrix', **data}))
        for instance, report in result['checks']:
            data = AxiomReportSerializer(report).data
            self.stdout.write(render_record({'kind': 'axiom', 'instance': instance.label, **data}))
        self.stdout.write(render_record({'kind': 'summary', 'passed': result['passed'],
                                         'mismatches': result['mismatches']}))
