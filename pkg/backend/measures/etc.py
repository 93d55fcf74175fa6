"""
Escaping-edges precision on the log prefix automaton and on alignment
automata (one-align and all-align)
"""

import logging
from fractions import Fraction
from typing import Callable, FrozenSet, Hashable, List

from django.conf import settings

from alignment.alignments import (LEXICOGRAPHIC, AlignmentCosts, align_log,
                                  all_optimal_alignments)
from automata.prefix import PrefixAutomaton, build_prefix_automaton
from eventlog.logs import EventLog, unfitting_traces
from petri.language import markings_after
from petri.nets import AcceptingPetriNet
from petri.statespace import explore
from precision_core.exceptions import MeasurePreconditionError

from .reports import PrecisionReport

logger = logging.getLogger(__name__)

ETC = 'etc'
ONE_ALIGN = 'one-align-etc'
ALL_ALIGN = 'all-align-etc'
WEIGHTINGS = ('visits', 'events')


def _label(symbol) -> str:
    return '' if symbol is None else str(symbol)


def escaping_edges(automaton: PrefixAutomaton, allowed: Callable[[tuple], FrozenSet[Hashable]],
                   weighting: str):
    """
    Σ w(s)·|allowed(s) ∩ observed(s)| / Σ w(s)·|allowed(s)| with per-state rows

    Returns (value, rows); a zero denominator means no edge can escape and
    yields 1.
    """
    if weighting not in WEIGHTINGS:
        raise ValueError(f'Unknown weighting {weighting}; expected one of {WEIGHTINGS}')
    numerator = Fraction(0)
    denominator = Fraction(0)
    rows: List[str] = []
    for state in automaton:
        permitted = allowed(state.prefix)
        if not permitted:
            continue
        weight = automaton.weight(state.prefix, weighting)
        kept = permitted & state.observed
        numerator += weight * len(kept)
        denominator += weight * len(permitted)
        escaping = sorted(_label(a) for a in permitted - state.observed)
        rows.append(
            f"⟨{','.join(_label(s) for s in state.prefix)}⟩ w={weight} "
            f"allowed={len(permitted)} escaping={{{','.join(escaping)}}}"
        )
    value = numerator / denominator if denominator else Fraction(1)
    return value, rows


def etc_precision(log: EventLog, apn: AcceptingPetriNet, weighting: str = 'visits') -> PrecisionReport:
    """Escaping edges of the log prefix automaton against the model's enabled activities"""
    misfits = unfitting_traces(log, apn)
    if misfits:
        raise MeasurePreconditionError(
            f'{ETC} needs a fitting log; {misfits[0]} is not a trace of {apn} (use {ONE_ALIGN})'
        )
    graph = explore(apn)
    automaton = build_prefix_automaton(log)

    def allowed(prefix):
        return frozenset(
            apn.net.label(t)
            for marking in markings_after(apn, prefix, graph)
            for t in apn.enabled(marking)
            if not apn.net.is_tau(t)
        )

    value, rows = escaping_edges(automaton, allowed, weighting)
    return PrecisionReport(ETC, value, {'weighting': weighting}, {'states': rows})


def _alignment_automaton_value(apn: AcceptingPetriNet, automaton: PrefixAutomaton, weighting: str):
    markings = {(): apn.initial}
    for state in automaton:  # parents come before children
        for transition, child in state.children.items():
            markings[child] = apn.fire(markings[state.prefix], transition)
    return escaping_edges(automaton, lambda prefix: apn.enabled(markings[prefix]), weighting)


def one_align_etc(log: EventLog, apn: AcceptingPetriNet, weighting: str = 'visits',
                  tiebreak: str = LEXICOGRAPHIC, seed: int = None,
                  costs: AlignmentCosts = None) -> PrecisionReport:
    """
    Escaping edges of the automaton built from one optimal alignment per
    trace; states are firing-sequence prefixes, τ firings included
    """
    alignments = align_log(apn, log, costs=costs, tiebreak=tiebreak, seed=seed)
    automaton = PrefixAutomaton.from_sequences(
        (alignments[trace].firing_sequence, count) for trace, count in log.items()
    )
    value, rows = _alignment_automaton_value(apn, automaton, weighting)
    options = {'weighting': weighting, 'tiebreak': tiebreak, 'seed': seed}
    diagnostics = {
        'alignments': [f'{trace}: {alignments[trace]}' for trace in sorted(alignments)],
        'states': rows,
    }
    logger.debug(f"{ONE_ALIGN} on {apn}: {value}")
    return PrecisionReport(ONE_ALIGN, value, options, diagnostics)


def all_align_etc(log: EventLog, apn: AcceptingPetriNet, cap: int = None, weighting: str = 'visits',
                  costs: AlignmentCosts = None) -> PrecisionReport:
    """
    Like one-align ETC, but every optimal alignment of a trace contributes
    an equal share of the trace's multiplicity
    """
    cap = cap if cap is not None else settings.PRECISION_ALIGNMENT_CAP
    weighted = []
    counts = []
    for trace, count in log.items():
        alignments = all_optimal_alignments(apn, trace.activities, costs=costs, cap=cap)
        counts.append(f'{trace}: {len(alignments)}')
        for alignment in alignments:
            weighted.append((alignment.firing_sequence, Fraction(count, len(alignments))))
    automaton = PrefixAutomaton.from_sequences(weighted)
    value, rows = _alignment_automaton_value(apn, automaton, weighting)
    return PrecisionReport(
        ALL_ALIGN, value, {'weighting': weighting, 'cap': cap},
        {'optimal_alignments': counts, 'states': rows},
    )
