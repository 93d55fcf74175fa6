"""
Evaluate one precision measure on a model and a log
"""

import sys

from django.core.management.base import BaseCommand, CommandError

from conformance.arguments import add_format_option, add_measure_options
from conformance.config import (EXIT_INCONCLUSIVE, EXIT_INPUT_ERROR, EXIT_OK, RECORDS, InputError,
                                RunConfig)
from measures.registry import MEASURES, evaluate
from measures.serializers import PrecisionReportSerializer, render_record
from precision_core.exceptions import MeasurePreconditionError, NoAlignmentError, UnboundedNetError


def run_measure(config: RunConfig, stdout) -> int:
    """Write the report and return the exit status; input problems raise CommandError"""
    try:
        config.require('model', 'log')
        model, log = config.model(), config.log()
        report = evaluate(config.measure, log, model, **config.options)
    except (InputError, MeasurePreconditionError, NoAlignmentError, UnboundedNetError, ValueError) as exc:
        raise CommandError(str(exc), returncode=EXIT_INPUT_ERROR)
    if config.output_format == RECORDS:
        stdout.write(render_record({'config': config.as_dict(), 'report': PrecisionReportSerializer(report).data}))
    else:
        stdout.write(report.to_text(), ending='')
    return EXIT_OK if report.is_defined else EXIT_INCONCLUSIVE


class Command(BaseCommand):
    help = 'Evaluate a precision measure; exit 0 defined, 2 undefined/undecided, 1 input error'

    def add_arguments(self, parser):
        parser.add_argument('--measure', required=True, choices=sorted(MEASURES))
        parser.add_argument('--model', help='net file or corpus:<name>')
        parser.add_argument('--log', help='log file or corpus:<name>')
        add_measure_options(parser)
        add_format_option(parser)

    def handle(self, *args, **options):
        config = RunConfig.from_options('measure', options, models=('model',), logs=('log',))
        status = run_measure(config, self.stdout)
        if status != EXIT_OK:
            sys.exit(status)
