"""
Argument groups shared by the management commands
"""

from alignment.alignments import TIEBREAKS
from measures.etc import WEIGHTINGS
from measures.negative import MODES

from .config import FORMATS, TEXT


def add_measure_options(parser):
    group = parser.add_argument_group('measure options')
    group.add_argument('--k', type=int, help='PCC projection subset size')
    group.add_argument('--max-window', dest='max_window', type=int, help='negative-event window bound')
    group.add_argument('--seed', type=int, help='seed for sampled or seeded-random options')
    group.add_argument('--weighting', choices=WEIGHTINGS, help='ETC state weighting')
    group.add_argument('--tiebreak', choices=TIEBREAKS, help='alignment tiebreak policy')
    group.add_argument('--mode', choices=MODES, help='negative-event mode')
    group.add_argument('--sample-rate', dest='sample_rate', type=float, help='sampled negative-event rate')
    group.add_argument('--trace-cap', dest='trace_cap', type=int, help='Greco finite-language cap')
    group.add_argument('--state-cap', dest='state_cap', type=int, help='state-space exploration cap')
    group.add_argument('--cap', type=int, help='all-optimal alignment enumeration cap')


def add_format_option(parser):
    parser.add_argument('--format', choices=FORMATS, default=TEXT, help='text or JSON records')
