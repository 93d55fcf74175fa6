"""
Registry of precision measures by command-line name
"""

import logging
from dataclasses import dataclass
from typing import Callable, Dict, Tuple

from eventlog.logs import EventLog
from petri.nets import AcceptingPetriNet
from precision_core.exceptions import (EnumerationOverflowError, ExplorationOverflowError,
                                       UndecidedError)

from . import behavioral, etc, greco, negative, pcc
from .reports import PrecisionReport

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MeasureSpec:
    name: str
    function: Callable[..., PrecisionReport]
    option_names: Tuple[str, ...]
    description: str = ''

    def select(self, options: Dict) -> Dict:
        """Keep the options this measure understands and that are set"""
        return {k: v for k, v in options.items() if k in self.option_names and v is not None}


MEASURES: Dict[str, MeasureSpec] = {
    spec.name: spec for spec in (
        MeasureSpec(greco.NAME, greco.greco_precision, ('trace_cap',),
                    'distinct fitting log traces over model traces'),
        MeasureSpec(behavioral.SIMPLE, behavioral.simple_ba, ('tiebreak', 'seed'),
                    'enabled transitions during replay'),
        MeasureSpec(behavioral.ADVANCED, behavioral.advanced_ba, ('state_cap',),
                    'sometimes-follows and sometimes-precedes relations'),
        MeasureSpec(etc.ETC, etc.etc_precision, ('weighting',),
                    'escaping edges of the log prefix automaton'),
        MeasureSpec(etc.ONE_ALIGN, etc.one_align_etc, ('weighting', 'tiebreak', 'seed'),
                    'escaping edges over one optimal alignment per trace'),
        MeasureSpec(etc.ALL_ALIGN, etc.all_align_etc, ('weighting', 'cap'),
                    'escaping edges over all optimal alignments'),
        MeasureSpec(negative.NAME, negative.negative_event_precision,
                    ('max_window', 'mode', 'seed', 'sample_rate'),
                    'weighted negative events'),
        MeasureSpec(pcc.NAME, pcc.pcc_precision, ('k',),
                    'projected conformance checking'),
    )
}


def get_measure(name: str) -> MeasureSpec:
    try:
        return MEASURES[name]
    except KeyError:
        raise ValueError(f'Unknown measure {name}; choose from {", ".join(sorted(MEASURES))}')


def evaluate(name: str, log: EventLog, apn: AcceptingPetriNet, **options) -> PrecisionReport:
    """
    Run a measure; exhausted budgets become an undecided report instead of
    an exception
    """
    spec = get_measure(name)
    selected = spec.select(options)
    try:
        return spec.function(log, apn, **selected)
    except (UndecidedError, EnumerationOverflowError, ExplorationOverflowError) as exc:
        logger.warning(f"{name} undecided on {apn}: {exc}")
        return PrecisionReport.undecided(name, str(exc), selected)
