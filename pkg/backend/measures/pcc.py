"""
Projected conformance checking precision
"""

import itertools
import logging
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from django.conf import settings

from automata.dfa import Dfa, product, project
from eventlog.logs import EventLog, log_dfa
from petri.language import language_dfa
from petri.nets import AcceptingPetriNet

from .reports import PrecisionReport

logger = logging.getLogger(__name__)

NAME = 'pcc'


def subset_share(model: Dfa, log: Dfa) -> Tuple[Optional[Fraction], Dict[str, int]]:
    """
    Options kept by the conjunction over options offered by the model

    Each conjunction state is compared against its model-state component;
    model states that no conjunction state maps to count fully against.
    Options are outgoing activities plus termination at accepting states.
    """
    conjunction = product(model, log)
    kept = 0
    offered = 0
    visited = set()
    if not conjunction.is_empty():
        for state in conjunction.states:
            model_state = conjunction.origin(state)[0]
            visited.add(model_state)
            kept += len(conjunction.options(state))
            offered += len(model.options(model_state))
    unvisited = sum(len(model.options(s)) for s in model.states if s not in visited)
    offered += unvisited
    counts = {'kept': kept, 'offered': offered, 'unvisited_options': unvisited}
    if offered == 0:
        return None, counts
    return Fraction(kept, offered), counts


def pcc_precision(log: EventLog, apn: AcceptingPetriNet, k: int = None) -> PrecisionReport:
    """
    Mean over all activity subsets of size min(k, |Σ|) of the share of model
    options that survive the conjunction with the log
    """
    k = k if k is not None else settings.PRECISION_PCC_K
    if k < 1:
        raise ValueError('k must be at least 1')
    model = language_dfa(apn)
    alphabet = sorted(apn.activities | log.alphabet)
    size = min(k, len(alphabet))
    options = {'k': k, 'subset_size': size}
    if size == 0:
        return PrecisionReport.undefined(NAME, 'empty activity alphabet', options)

    shares: List[Fraction] = []
    rows: List[str] = []
    for subset in itertools.combinations(alphabet, size):
        projected_model = project(model, subset)
        projected_log = log_dfa(log.project(subset), alphabet=subset)
        share, counts = subset_share(projected_model, projected_log)
        label = '{' + ','.join(subset) + '}'
        if share is None:
            rows.append(f'{label} skipped (model offers no options)')
            continue
        shares.append(share)
        rows.append(f"{label} share={share} kept={counts['kept']} offered={counts['offered']}")

    if not shares:
        return PrecisionReport.undefined(NAME, 'no subset offers any option', options, {'subsets': rows})
    value = sum(shares, Fraction(0)) / len(shares)
    logger.debug(f"{NAME} on {apn} with k={size}: {value} over {len(shares)} subsets")
    return PrecisionReport(NAME, value, options, {'subsets': rows})
