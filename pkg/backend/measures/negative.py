"""
Weighted negative-event precision

At every event position the log's context windows of size 1..K vote on each
model-enabled activity. A window whose matches are followed by the activity
votes positive. Otherwise the activity is a negative event of that window,
with a confidence that grows with the number of matches and with how often
the activity occurs in the log: absence after a few matches says little
about a rare activity.
"""

import logging
from collections import Counter, defaultdict
from fractions import Fraction
from typing import Dict, List, Optional, Set, Tuple

import numpy as np
from django.conf import settings

from eventlog.logs import EventLog, Trace, unfitting_traces
from petri.language import markings_after
from petri.nets import AcceptingPetriNet
from petri.statespace import explore
from precision_core.exceptions import MeasurePreconditionError

from .reports import PrecisionReport

logger = logging.getLogger(__name__)

NAME = 'negative-event'
DETERMINISTIC = 'deterministic'
SAMPLED = 'sampled'
MODES = (DETERMINISTIC, SAMPLED)

START = ()  # window of the trace-start context

Occurrence = Tuple[Trace, int]


class WindowIndex:
    """
    Occurrences of every window of length ≤ ``max_window`` in the log, with
    the activity following each occurrence (None at the trace end)
    """

    def __init__(self, log: EventLog, max_window: int):
        self.matches: Dict[Tuple[str, ...], List[Tuple[Occurrence, Optional[str]]]] = defaultdict(list)
        for trace in sorted(log.traces):
            events = trace.activities
            self.matches[START].append(((trace, 0), events[0] if events else None))
            for end in range(1, len(events) + 1):
                follower = events[end] if end < len(events) else None
                for size in range(1, min(max_window, end) + 1):
                    self.matches[events[end - size:end]].append(((trace, end), follower))

    def followers(self, window: Tuple[str, ...], own: Occurrence,
                  rng: Optional[np.random.Generator], sample_rate: float) -> Tuple[Set[str], int]:
        """Activities seen after the kept matches of ``window`` and the number of kept matches"""
        found = set()
        kept = 0
        for occurrence, follower in self.matches.get(window, ()):
            if occurrence != own and rng is not None and rng.random() >= sample_rate:
                continue
            kept += 1
            if follower is not None:
                found.add(follower)
        return found, kept


def activity_rates(log: EventLog) -> Dict[str, Fraction]:
    """
    Add-one smoothed frequency of each activity relative to the most
    frequent one; activities absent from the log get 1 / (top + 1)
    """
    counts: Counter = Counter()
    for trace, count in log.items():
        for activity in trace:
            counts[activity] += count
    top = max(counts.values(), default=0)
    return defaultdict(lambda: Fraction(1, top + 1),
                       {activity: Fraction(n + 1, top + 1) for activity, n in counts.items()})


def negative_confidence(rate: Fraction, matches: int) -> Fraction:
    """Chance that an activity with relative ``rate`` follows at least one of ``matches`` occurrences"""
    return 1 - (1 - rate) ** matches


def negative_event_precision(log: EventLog, apn: AcceptingPetriNet, max_window: int = None,
                             mode: str = DETERMINISTIC, seed: int = None,
                             sample_rate: float = None) -> PrecisionReport:
    """
    TP / (TP + FP) over all event positions, weighted by trace multiplicity

    Every window of size k carries weight k / max_window. When the enabled
    activity x follows some kept match the window adds its weight to TP;
    otherwise it adds weight × confidence to FP and the rest to TP.
    ``sampled`` mode keeps each other window occurrence with probability
    ``sample_rate``.
    """
    max_window = max_window if max_window is not None else settings.PRECISION_MAX_WINDOW
    sample_rate = sample_rate if sample_rate is not None else settings.PRECISION_SAMPLE_RATE
    if max_window < 1:
        raise ValueError('max_window must be at least 1')
    if mode not in MODES:
        raise ValueError(f'Unknown mode {mode}; expected one of {MODES}')
    misfits = unfitting_traces(log, apn)
    if misfits:
        raise MeasurePreconditionError(f'{NAME} needs a fitting log; {misfits[0]} is not a trace of {apn}')

    options = {'max_window': max_window, 'mode': mode}
    if mode == SAMPLED:
        options.update(seed=seed, sample_rate=sample_rate)
    rng = np.random.default_rng(seed) if mode == SAMPLED else None
    index = WindowIndex(log, max_window)
    rates = activity_rates(log)
    graph = explore(apn)
    true_positives = Fraction(0)
    false_positives = Fraction(0)

    for trace, count in log.items():
        events = trace.activities
        for position in range(len(events)):
            prefix = events[:position]
            enabled = sorted({
                apn.net.label(t)
                for marking in markings_after(apn, prefix, graph)
                for t in apn.enabled(marking)
                if not apn.net.is_tau(t)
            })
            own = (trace, position)
            if position == 0:
                windows = [(1, START)]
            else:
                windows = [(k, prefix[-k:]) for k in range(1, min(max_window, position) + 1)]
            votes = [(Fraction(k, max_window), *index.followers(w, own, rng, sample_rate)) for k, w in windows]
            for activity in enabled:
                for weight, seen, matches in votes:
                    if activity in seen:
                        true_positives += weight * count
                        continue
                    confidence = negative_confidence(rates[activity], matches)
                    false_positives += weight * confidence * count
                    true_positives += weight * (1 - confidence) * count

    diagnostics = {'true_positives': true_positives, 'false_positives': false_positives}
    if true_positives + false_positives == 0:
        return PrecisionReport.undefined(NAME, 'no events to evaluate', options, diagnostics)
    value = true_positives / (true_positives + false_positives)
    logger.debug(f"{NAME} on {apn} ({mode}, seed={seed}): {value}")
    return PrecisionReport(NAME, value, options, diagnostics)
