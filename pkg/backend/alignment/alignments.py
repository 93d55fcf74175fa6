"""
Optimal alignments of traces against accepting Petri nets

The search runs over the synchronous product of the trace and the net:
states are (marking, trace position) pairs, moves are synchronous, log-only
or model-only. Alignments are ordered by (cost, number of moves); equal
alignments are separated by the tiebreak policy.
"""

import heapq
import itertools
import logging
from collections import defaultdict
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Iterator, List, Optional, Tuple

import numpy as np
from django.conf import settings

from eventlog.logs import EventLog, Trace
from petri.nets import AcceptingPetriNet, Marking
from precision_core.exceptions import (EnumerationOverflowError, NoAlignmentError,
                                       UndecidedError)

logger = logging.getLogger(__name__)

SYNC = 'sync'
LOG = 'log'
MODEL = 'model'
MOVE_KINDS = (SYNC, MODEL, LOG)

LEXICOGRAPHIC = 'lexicographic'
SEEDED_RANDOM = 'seeded-random'
TIEBREAKS = (LEXICOGRAPHIC, SEEDED_RANDOM)


@dataclass(frozen=True, order=True)
class Move:
    """
    One alignment step. Synchronous moves carry both sides, log moves only
    the activity, model moves only the transition (plus its label when the
    transition is visible).
    """

    kind: str
    activity: Optional[str] = None
    transition: Optional[str] = None

    def __post_init__(self):
        if self.kind not in MOVE_KINDS:
            raise ValueError(f'Unknown move kind {self.kind}')
        if self.kind == SYNC and (self.activity is None or self.transition is None):
            raise ValueError('Synchronous moves need an activity and a transition')
        if self.kind == LOG and (self.activity is None or self.transition is not None):
            raise ValueError('Log moves carry an activity only')
        if self.kind == MODEL and self.transition is None:
            raise ValueError('Model moves need a transition')

    @property
    def key(self) -> Tuple[int, str, str]:
        return (MOVE_KINDS.index(self.kind), self.transition or '', self.activity or '')

    @property
    def is_tau(self) -> bool:
        return self.kind == MODEL and self.activity is None

    def __str__(self):
        if self.kind == SYNC:
            return f'({self.activity},{self.transition})'
        if self.kind == LOG:
            return f'({self.activity},≫)'
        return f'(≫,{self.transition})'


@dataclass(frozen=True)
class AlignmentCosts:
    """Unit-cost scheme by default; synchronous and τ moves are free"""

    log_move: int = 1
    model_move: int = 1
    sync: int = 0
    tau: int = 0

    def __post_init__(self):
        if min(self.log_move, self.model_move, self.sync, self.tau) < 0:
            raise ValueError('Move costs must be non-negative')

    @classmethod
    def from_settings(cls) -> 'AlignmentCosts':
        return cls(log_move=settings.PRECISION_LOG_MOVE_COST, model_move=settings.PRECISION_MODEL_MOVE_COST)

    def of(self, move: Move) -> int:
        if move.kind == SYNC:
            return self.sync
        if move.kind == LOG:
            return self.log_move
        return self.tau if move.is_tau else self.model_move


@dataclass(frozen=True)
class Alignment:
    """Moves relating ``trace`` to a firing sequence ending in a final marking"""

    trace: Tuple[str, ...]
    moves: Tuple[Move, ...]
    cost: Fraction
    final_marking: Marking

    @property
    def firing_sequence(self) -> Tuple[str, ...]:
        return tuple(m.transition for m in self.moves if m.kind != LOG)

    @property
    def log_projection(self) -> Tuple[str, ...]:
        return tuple(m.activity for m in self.moves if m.kind != MODEL)

    @property
    def model_trace(self) -> Tuple[str, ...]:
        """Visible labels of the firing sequence"""
        return tuple(m.activity for m in self.moves if m.kind != LOG and m.activity is not None)

    @property
    def is_fitting(self) -> bool:
        return all(m.kind == SYNC or m.is_tau for m in self.moves)

    def __len__(self):
        return len(self.moves)

    def __str__(self):
        return ' '.join(str(m) for m in self.moves) + f' [cost={self.cost}]'


State = Tuple[Marking, int]


def _successors(apn: AcceptingPetriNet, trace: Tuple[str, ...], state: State,
                costs: AlignmentCosts) -> Iterator[Tuple[Move, int, State]]:
    marking, position = state
    for transition in sorted(apn.enabled(marking)):
        label = apn.net.label(transition)
        successor = apn.fire(marking, transition)
        if label is not None and position < len(trace) and label == trace[position]:
            move = Move(SYNC, label, transition)
            yield move, costs.of(move), (successor, position + 1)
        move = Move(MODEL, label, transition)
        yield move, costs.of(move), (successor, position)
    if position < len(trace):
        move = Move(LOG, trace[position])
        yield move, costs.of(move), (marking, position + 1)


def _tiebreak_key(tiebreak: str, seed: Optional[int]) -> Callable[[Move], object]:
    if tiebreak == LEXICOGRAPHIC:
        return lambda move: move.key
    if tiebreak == SEEDED_RANDOM:
        rng = np.random.default_rng(seed)
        priorities: Dict[Tuple, float] = {}

        def priority(move: Move) -> float:
            if move.key not in priorities:
                priorities[move.key] = float(rng.random())
            return priorities[move.key]

        return priority
    raise ValueError(f'Unknown tiebreak {tiebreak}; expected one of {TIEBREAKS}')


def _is_goal(apn: AcceptingPetriNet, trace: Tuple[str, ...], state: State) -> bool:
    return state[1] == len(trace) and apn.is_final(state[0])


def optimal_alignment(apn: AcceptingPetriNet, trace, costs: AlignmentCosts = None,
                      tiebreak: str = LEXICOGRAPHIC, seed: Optional[int] = None,
                      budget: int = None) -> Alignment:
    """
    Minimum-cost alignment by best-first search

    Among alignments of equal cost the one with fewest moves wins; remaining
    ties go to the smallest move sequence under the tiebreak ordering
    (move keys for ``lexicographic``, per-move priorities drawn from
    ``seed`` for ``seeded-random``).
    """
    trace = tuple(trace)
    costs = costs or AlignmentCosts.from_settings()
    budget = budget if budget is not None else settings.PRECISION_SEARCH_BUDGET
    key_of = _tiebreak_key(tiebreak, seed)
    counter = itertools.count()

    start: State = (apn.initial, 0)
    heap = [(0, 0, (), next(counter), start, ())]
    settled = set()
    while heap:
        cost, length, keys, _, state, moves = heapq.heappop(heap)
        if state in settled:
            continue
        settled.add(state)
        if len(settled) > budget:
            logger.warning(f"Alignment of {trace} on {apn} exceeded {budget} states")
            raise UndecidedError(f'Alignment search budget of {budget} states exhausted')
        if _is_goal(apn, trace, state):
            logger.debug(f"Aligned {trace} on {apn} at cost {cost} after {len(settled)} states")
            return Alignment(trace=trace, moves=moves, cost=Fraction(cost), final_marking=state[0])
        for move, weight, successor in _successors(apn, trace, state, costs):
            if successor in settled:
                continue
            heapq.heappush(heap, (
                cost + weight, length + 1, keys + (key_of(move),), next(counter),
                successor, moves + (move,),
            ))
    raise NoAlignmentError(f'No final marking of {apn} is reachable while aligning {trace}')


def all_optimal_alignments(apn: AcceptingPetriNet, trace, costs: AlignmentCosts = None,
                           cap: int = None, budget: int = None) -> Tuple[Alignment, ...]:
    """
    Every (cost, length)-optimal alignment, sorted by move keys

    Builds the shortest-path DAG of the product with Dijkstra and enumerates
    its source-to-goal paths; more than ``cap`` paths raise
    EnumerationOverflowError.
    """
    trace = tuple(trace)
    costs = costs or AlignmentCosts.from_settings()
    cap = cap if cap is not None else settings.PRECISION_ALIGNMENT_CAP
    budget = budget if budget is not None else settings.PRECISION_SEARCH_BUDGET
    counter = itertools.count()

    start: State = (apn.initial, 0)
    distance: Dict[State, Tuple[int, int]] = {start: (0, 0)}
    predecessors: Dict[State, List[Tuple[State, Move]]] = defaultdict(list)
    heap = [(0, 0, next(counter), start)]
    settled = set()
    goals: List[State] = []
    best: Optional[Tuple[int, int]] = None
    while heap:
        cost, length, _, state = heapq.heappop(heap)
        if state in settled or (cost, length) != distance[state]:
            continue
        if best is not None and (cost, length) > best:
            break
        settled.add(state)
        if len(settled) > budget:
            raise UndecidedError(f'Alignment search budget of {budget} states exhausted')
        if _is_goal(apn, trace, state):
            best = (cost, length)
            goals.append(state)
            continue
        for move, weight, successor in _successors(apn, trace, state, costs):
            if successor in settled:
                continue
            candidate = (cost + weight, length + 1)
            if successor not in distance or candidate < distance[successor]:
                distance[successor] = candidate
                predecessors[successor] = [(state, move)]
                heapq.heappush(heap, (candidate[0], candidate[1], next(counter), successor))
            elif candidate == distance[successor]:
                predecessors[successor].append((state, move))
    if best is None:
        raise NoAlignmentError(f'No final marking of {apn} is reachable while aligning {trace}')

    found: List[Alignment] = []

    def walk(state: State, suffix: Tuple[Move, ...], goal: State):
        if state == start:
            found.append(Alignment(trace=trace, moves=suffix, cost=Fraction(best[0]), final_marking=goal[0]))
            if len(found) > cap:
                raise EnumerationOverflowError(cap)
            return
        for previous, move in predecessors[state]:
            walk(previous, (move,) + suffix, goal)

    for goal in goals:
        walk(goal, (), goal)
    logger.debug(f"Found {len(found)} optimal alignments of {trace} on {apn}")
    return tuple(sorted(found, key=lambda a: [m.key for m in a.moves]))


def align_log(apn: AcceptingPetriNet, log: EventLog, costs: AlignmentCosts = None,
              tiebreak: str = LEXICOGRAPHIC, seed: Optional[int] = None) -> Dict[Trace, Alignment]:
    """One optimal alignment per distinct trace; multiplicities stay on the log"""
    traces = sorted(log.traces)
    workers = settings.PRECISION_WORKERS

    def align(trace: Trace) -> Alignment:
        return optimal_alignment(apn, trace.activities, costs=costs, tiebreak=tiebreak, seed=seed)

    if workers > 1 and len(traces) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            alignments = list(pool.map(align, traces))
    else:
        alignments = [align(trace) for trace in traces]
    return dict(zip(traces, alignments))
