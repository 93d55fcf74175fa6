"""
Soundness precision: share of the model's paths that the log exhibits
"""

import logging
from fractions import Fraction

import networkx as nx
from django.conf import settings

from eventlog.logs import EventLog
from petri.language import language_dfa
from petri.nets import AcceptingPetriNet
from precision_core.exceptions import UndecidedError

from .reports import PrecisionReport

logger = logging.getLogger(__name__)

NAME = 'greco'


def count_language(dfa, trace_cap: int):
    """
    Number of accepted strings of a trimmed DFA, or None when the language
    is infinite. Raises UndecidedError past ``trace_cap`` strings.
    """
    graph = dfa.graph()
    if not nx.is_directed_acyclic_graph(graph):
        return None
    paths = {state: 0 for state in dfa.states}
    paths[dfa.initial] = 1
    for state in nx.topological_sort(graph):
        for _, target in graph.out_edges(state):
            paths[target] += paths[state]
    total = sum(paths[s] for s in dfa.accepting)
    if total > trace_cap:
        raise UndecidedError(f'Model language has {total} traces, more than the cap of {trace_cap}')
    return total


def greco_precision(log: EventLog, apn: AcceptingPetriNet, trace_cap: int = None) -> PrecisionReport:
    trace_cap = trace_cap if trace_cap is not None else settings.PRECISION_TRACE_CAP
    options = {'trace_cap': trace_cap}
    dfa = language_dfa(apn)
    fitting = sum(1 for trace in log.traces if dfa.accepts(trace.activities))
    size = count_language(dfa, trace_cap)
    if size is None:
        logger.debug(f"{apn} allows infinitely many traces")
        return PrecisionReport(NAME, Fraction(0), options, {'fitting_traces': fitting, 'language_size': 'infinite'})
    if size == 0:
        return PrecisionReport.undefined(NAME, 'model language is empty', options)
    return PrecisionReport(
        NAME, Fraction(fitting, size), options,
        {'fitting_traces': fitting, 'language_size': size},
    )
