"""
Write corpus entries as standalone .net and .log files
"""

from django.core.management.base import BaseCommand

from corpus.loaders import export_corpus


class Command(BaseCommand):
    help = 'Export the embedded corpus to a directory'

    def add_arguments(self, parser):
        parser.add_argument('directory')
        parser.add_argument('--primary-only', action='store_true',
                            help='leave out the supplementary witness entries')

    def handle(self, *args, **options):
        written = export_corpus(options['directory'], include_supplementary=not options['primary_only'])
        for path in written:
            self.stdout.write(str(path))
        self.stdout.write(self.style.SUCCESS(f'Exported {len(written)} entries'))
