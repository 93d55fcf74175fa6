"""
Behavioral appropriateness: simple (enabled transitions during replay) and
advanced (sometimes-follows / sometimes-precedes relations)
"""

import logging
from collections import deque
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, Set, Tuple

from alignment.alignments import LEXICOGRAPHIC, optimal_alignment
from automata.dfa import Dfa
from eventlog.logs import EventLog
from petri.language import language_dfa
from petri.nets import AcceptingPetriNet
from precision_core.exceptions import MeasurePreconditionError

from .reports import PrecisionReport, SometimesRelations

logger = logging.getLogger(__name__)

SIMPLE = 'simple-ba'
ADVANCED = 'advanced-ba'


def _require_wf_shape(apn: AcceptingPetriNet, measure: str):
    if not apn.is_wf_shaped():
        logger.warning(f"{measure} rejected {apn}: not WF-shaped")
        raise MeasurePreconditionError(f'{measure} needs a WF-shaped net; {apn} is not')


def simple_ba(log: EventLog, apn: AcceptingPetriNet, tiebreak: str = LEXICOGRAPHIC,
              seed: int = None) -> PrecisionReport:
    """
    (|T_v| − x̄) / (|T_v| − 1) where x̄ is the mean number of enabled visible
    transitions right before each visible firing of the replay

    The replay path of every trace is picked among its fitting firing
    sequences by the tiebreak policy.
    """
    _require_wf_shape(apn, SIMPLE)
    options = {'tiebreak': tiebreak, 'seed': seed}
    visible = frozenset(apn.net.visible_transitions)
    if len(visible) <= 1:
        return PrecisionReport.undefined(SIMPLE, 'at most one visible transition', options)

    enabled_total = 0
    steps = 0
    for trace, count in log.items():
        alignment = optimal_alignment(apn, trace.activities, tiebreak=tiebreak, seed=seed)
        if not alignment.is_fitting:
            raise MeasurePreconditionError(f'Trace {trace} does not fit {apn}')
        marking = apn.initial
        for transition in alignment.firing_sequence:
            if transition in visible:
                enabled_total += len(apn.enabled(marking) & visible) * count
                steps += count
            marking = apn.fire(marking, transition)

    if steps == 0:
        return PrecisionReport.undefined(SIMPLE, 'no visible replay steps', options)
    mean_enabled = Fraction(enabled_total, steps)
    value = (len(visible) - mean_enabled) / (len(visible) - 1)
    return PrecisionReport(SIMPLE, value, options, {
        'mean_enabled': mean_enabled,
        'replay_steps': steps,
        'visible_transitions': len(visible),
    })


# -- advanced ---------------------------------------------------------------

def _log_relations(log: EventLog, activities: Iterable[str]) -> Tuple[FrozenSet, FrozenSet]:
    """Per-occurrence classification of eventually-follows/precedes in the log"""
    activities = sorted(set(activities))
    follows_yes: Set[Tuple[str, str]] = set()
    follows_no: Set[Tuple[str, str]] = set()
    precedes_yes: Set[Tuple[str, str]] = set()
    precedes_no: Set[Tuple[str, str]] = set()
    for trace in log.traces:
        events = trace.activities
        for index, x in enumerate(events):
            later = set(events[index + 1:])
            earlier = set(events[:index])
            for y in activities:
                (follows_yes if y in later else follows_no).add((x, y))
                # pair (y, x): does y precede this occurrence of x
                (precedes_yes if y in earlier else precedes_no).add((y, x))
    return frozenset(follows_yes & follows_no), frozenset(precedes_yes & precedes_no)


def _forward(adjacency: Dict[int, Set[int]], start: Iterable[int]) -> Set[int]:
    seen = set(start)
    queue = deque(seen)
    while queue:
        state = queue.popleft()
        for target in adjacency.get(state, ()):
            if target not in seen:
                seen.add(target)
                queue.append(target)
    return seen


def _model_relations(dfa: Dfa, activities: Iterable[str]) -> Tuple[FrozenSet, FrozenSet]:
    """
    Sometimes-relations on a trimmed minimal DFA

    x sometimes follows-relates to y when some x-edge leads to a state from
    which a y-edge is reachable and some x-edge leads to a state from which
    acceptance is reachable avoiding y. Precedes is the mirror image on the
    reversed automaton, measured at the sources of y-edges.
    """
    activities = sorted(set(activities))
    forward: Dict[int, Set[int]] = {}
    backward: Dict[int, Set[int]] = {}
    for source, _, target in dfa.delta:
        forward.setdefault(source, set()).add(target)
        backward.setdefault(target, set()).add(source)
    targets = {a: {t for s, b, t in dfa.delta if b == a} for a in activities}
    sources = {a: {s for s, b, t in dfa.delta if b == a} for a in activities}

    def without(activity: str, reverse: bool) -> Dict[int, Set[int]]:
        adjacency: Dict[int, Set[int]] = {}
        for source, label, target in dfa.delta:
            if label == activity:
                continue
            if reverse:
                adjacency.setdefault(target, set()).add(source)
            else:
                adjacency.setdefault(source, set()).add(target)
        return adjacency

    follows = set()
    precedes = set()
    for y in activities:
        # states that can still reach a y-edge / that saw a y-edge already
        reach_y = _forward(backward, sources[y])
        after_y = _forward(forward, targets[y])
        avoid_y = _forward(without(y, reverse=True), dfa.accepting)
        start_avoiding_y = _forward(without(y, reverse=False), [dfa.initial])
        for x in activities:
            if targets[x] & reach_y and targets[x] & avoid_y:
                follows.add((x, y))
            if sources[x] & after_y and sources[x] & start_avoiding_y:
                precedes.add((y, x))
    return frozenset(follows), frozenset(precedes)


def sometimes_relations(log: EventLog, dfa: Dfa) -> SometimesRelations:
    log_follows, log_precedes = _log_relations(log, log.alphabet | dfa.alphabet)
    model_follows, model_precedes = _model_relations(dfa, dfa.alphabet)
    return SometimesRelations(log_follows, log_precedes, model_follows, model_precedes)


def advanced_ba(log: EventLog, apn: AcceptingPetriNet, state_cap: int = None) -> PrecisionReport:
    """
    |S_F^L ∩ S_F^M| / (2|S_F^M|) + |S_P^L ∩ S_P^M| / (2|S_P^M|)

    Model relations come from the minimal language DFA, so language-equal
    nets always receive the same value.
    """
    _require_wf_shape(apn, ADVANCED)
    options = {'state_cap': state_cap}
    dfa = language_dfa(apn, state_cap=state_cap)
    relations = sometimes_relations(log, dfa)
    diagnostics = {
        'log_follows': relations.log_follows,
        'log_precedes': relations.log_precedes,
        'model_follows': relations.model_follows,
        'model_precedes': relations.model_precedes,
    }
    if not relations.model_follows or not relations.model_precedes:
        return PrecisionReport.undefined(
            ADVANCED, 'model has no sometimes-follows or no sometimes-precedes pairs', options, diagnostics,
        )
    value = (
        Fraction(len(relations.log_follows & relations.model_follows), 2 * len(relations.model_follows))
        + Fraction(len(relations.log_precedes & relations.model_precedes), 2 * len(relations.model_precedes))
    )
    return PrecisionReport(ADVANCED, value, options, diagnostics)
