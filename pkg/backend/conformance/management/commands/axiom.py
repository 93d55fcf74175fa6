"""
Run one axiom check on named instances
"""

import sys

from django.core.management.base import BaseCommand, CommandError

from axioms import checks
from axioms.handles import HANDLES
from axioms.reports import AXIOMS, SATISFIED, VIOLATED
from axioms.serializers import AxiomReportSerializer
from conformance.arguments import add_format_option, add_measure_options
from conformance.config import (EXIT_INCONCLUSIVE, EXIT_INPUT_ERROR, EXIT_OK, EXIT_VIOLATED, RECORDS,
                                InputError, RunConfig)
from measures.serializers import render_record

SLOTS = {
    'A1': ('log', 'model'),
    'A2': ('log', 'model1', 'model2'),
    'A3': ('log', 'model'),
    'A4': ('log', 'model1', 'model2'),
    'A5': ('log1', 'log2', 'model'),
}


def _int_list(text):
    return [int(part) for part in text.split(',') if part.strip()]


def run_axiom(axiom: str, config: RunConfig, stdout, runs=None, seeds=None, alphabet=None) -> int:
    """Write the report and return 0 satisfied, 3 violated, 2 otherwise"""
    try:
        config.require(*SLOTS[axiom])
        options = config.options
        if axiom == 'A1':
            report = checks.check_a1(config.measure, config.log(), config.model(), runs=runs, seeds=seeds,
                                     options=options)
        elif axiom == 'A2':
            report = checks.check_a2(config.measure, config.log(), config.model('model1'),
                                     config.model('model2'), options=options, seeds=seeds)
        elif axiom == 'A3':
            report = checks.check_a3(config.measure, config.log(), config.model(), alphabet=alphabet,
                                     options=options, seeds=seeds)
        elif axiom == 'A4':
            report = checks.check_a4(config.measure, config.log(), config.model('model1'),
                                     config.model('model2'), options=options, seeds=seeds)
        else:
            report = checks.check_a5(config.measure, config.log('log1'), config.log('log2'), config.model(),
                                     options=options, seeds=seeds)
    except (InputError, ValueError) as exc:
        raise CommandError(str(exc), returncode=EXIT_INPUT_ERROR)

    if config.output_format == RECORDS:
        stdout.write(render_record({'config': config.as_dict(), 'report': AxiomReportSerializer(report).data}))
    else:
        stdout.write(report.to_text(), ending='')
    if report.verdict == SATISFIED:
        return EXIT_OK
    if report.verdict == VIOLATED:
        return EXIT_VIOLATED
    return EXIT_INCONCLUSIVE


class Command(BaseCommand):
    help = 'Check one precision axiom; exit 0 satisfied-on-instances, 3 violated, 2 inconclusive'

    def add_arguments(self, parser):
        parser.add_argument('axiom', choices=AXIOMS)
        parser.add_argument('--measure', required=True, choices=sorted(HANDLES))
        for slot in ('model', 'model1', 'model2'):
            parser.add_argument(f'--{slot}', help='net file or corpus:<name>')
        for slot in ('log', 'log1', 'log2'):
            parser.add_argument(f'--{slot}', help='log file or corpus:<name>')
        parser.add_argument('--alphabet', help='comma-separated flower alphabet for A3')
        parser.add_argument('--runs', type=int, help='repetitions for A1')
        parser.add_argument('--seeds', type=_int_list, help='comma-separated seeds for seeded options')
        add_measure_options(parser)
        add_format_option(parser)

    def handle(self, *args, **options):
        axiom = options['axiom']
        config = RunConfig.from_options(f'axiom {axiom}', options, models=('model', 'model1', 'model2'),
                                        logs=('log', 'log1', 'log2'))
        alphabet = [a.strip() for a in options['alphabet'].split(',')] if options.get('alphabet') else None
        status = run_axiom(axiom, config, self.stdout, options.get('runs'), options.get('seeds'), alphabet)
        if status != EXIT_OK:
            sys.exit(status)
