"""
Corpus access: names, parsed entries, the fig6 log generator and export
"""

import logging
from collections import deque
from pathlib import Path
from typing import Dict, List, Tuple, Union

import numpy as np

from eventlog.formats import parse_log, serialize_log
from eventlog.logs import EventLog, Trace
from petri.dsl import parse_net, serialize_net
from petri.nets import AcceptingPetriNet, Marking
from petri.statespace import explore
from precision_core.exceptions import UnknownCorpusEntryError

from .entries import BY_NAME, ENTRIES, MODEL, CorpusEntry
from .expected import EXPECTED_VALUES, Expectation

logger = logging.getLogger(__name__)

FINISH_BIAS = 0.7


def list_entries(include_supplementary: bool = False) -> Tuple[str, ...]:
    """Entry names in corpus order; witness instances only on request"""
    return tuple(e.name for e in ENTRIES if include_supplementary or not e.supplementary)


def entry(name: str) -> CorpusEntry:
    try:
        return BY_NAME[name]
    except KeyError:
        raise UnknownCorpusEntryError(name)


def get(name: str) -> Union[AcceptingPetriNet, EventLog]:
    """Parsed model or log for ``name``"""
    found = entry(name)
    if found.kind == MODEL:
        return parse_net(found.payload, name=name)
    return parse_log(found.payload)


def get_model(name: str) -> AcceptingPetriNet:
    found = entry(name)
    if found.kind != MODEL:
        raise UnknownCorpusEntryError(f'{name} (not a model)')
    return parse_net(found.payload, name=name)


def get_log(name: str) -> EventLog:
    found = entry(name)
    if found.kind == MODEL:
        raise UnknownCorpusEntryError(f'{name} (not a log)')
    return parse_log(found.payload)


def expectations_for(name: str) -> Tuple[Expectation, ...]:
    return tuple(e for e in EXPECTED_VALUES if name in (e.model, e.log))


def _distances_to_final(apn: AcceptingPetriNet) -> Dict[Marking, int]:
    graph = explore(apn)
    reverse: Dict[int, List[int]] = {i: [] for i in range(len(graph))}
    for source, _, target in graph.edges:
        reverse[target].append(source)
    distance = {state: 0 for state in graph.accepting}
    queue = deque(graph.accepting)
    while queue:
        state = queue.popleft()
        for source in reverse[state]:
            if source not in distance:
                distance[source] = distance[state] + 1
                queue.append(source)
    return {graph.markings[s]: d for s, d in distance.items()}


def generate_fig6_log(seed: int, n_traces: int = 10, finish_bias: float = FINISH_BIAS) -> EventLog:
    """
    Seeded random traces of fig6_m2

    At each step, with probability ``finish_bias`` a transition that moves
    closer to the final marking is fired, otherwise one enabled transition
    is drawn uniformly. A trace ends at the final marking.
    """
    if n_traces < 1:
        raise ValueError('n_traces must be at least 1')
    apn = get_model('fig6_m2')
    distance = _distances_to_final(apn)
    rng = np.random.default_rng(seed)
    traces = []
    for _ in range(n_traces):
        marking = apn.initial
        activities: List[str] = []
        while not apn.is_final(marking):
            enabled = sorted(t for t in apn.enabled(marking) if apn.fire(marking, t) in distance)
            closer = [t for t in enabled if distance[apn.fire(marking, t)] < distance[marking]]
            if closer and rng.random() < finish_bias:
                choices = closer
            else:
                choices = enabled
            transition = choices[int(rng.integers(len(choices)))]
            marking = apn.fire(marking, transition)
            label = apn.net.label(transition)
            if label is not None:
                activities.append(label)
        traces.append(Trace(tuple(activities)))
    logger.debug(f"Generated {n_traces} fig6 traces with seed {seed}")
    return EventLog.from_traces(traces)


def export_corpus(directory, include_supplementary: bool = True) -> List[Path]:
    """Write every entry as ``<name>.net`` or ``<name>.log``"""
    target = Path(directory)
    target.mkdir(parents=True, exist_ok=True)
    written = []
    for name in list_entries(include_supplementary):
        loaded = get(name)
        if isinstance(loaded, AcceptingPetriNet):
            path = target / f'{name}.net'
            path.write_text(serialize_net(loaded), encoding='utf-8')
        else:
            path = target / f'{name}.log'
            path.write_text(serialize_log(loaded), encoding='utf-8')
        written.append(path)
    logger.info(f"Exported {len(written)} corpus entries to {target}")
    return written
