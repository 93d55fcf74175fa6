"""
Bounded breadth-first exploration of the reachable markings of a net
"""

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Tuple

import networkx as nx
from django.conf import settings

from precision_core.exceptions import ExplorationOverflowError

from .nets import AcceptingPetriNet, Marking

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class StateGraph:
    """
    Reachability graph; state ids index ``markings`` in BFS discovery order

    ``bounded`` is False when some marking exceeded the per-place bound, in
    which case that marking was not expanded and ``overflow_place`` names
    the place that overflowed first.
    """

    markings: Tuple[Marking, ...]
    edges: Tuple[Tuple[int, str, int], ...]
    accepting: FrozenSet[int]
    bounded: bool = True
    overflow_place: Optional[str] = None
    initial: int = 0
    _index: Dict[Marking, int] = field(default=None, init=False, repr=False, compare=False)
    _out: Dict[int, List[Tuple[str, int]]] = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, '_index', {m: i for i, m in enumerate(self.markings)})
        out: Dict[int, List[Tuple[str, int]]] = {i: [] for i in range(len(self.markings))}
        for source, transition, target in self.edges:
            out[source].append((transition, target))
        object.__setattr__(self, '_out', out)

    def __len__(self):
        return len(self.markings)

    def index(self, marking: Marking) -> int:
        return self._index[marking]

    def successors(self, state: int) -> List[Tuple[str, int]]:
        return list(self._out[state])

    def graph(self) -> nx.MultiDiGraph:
        graph = nx.MultiDiGraph()
        graph.add_nodes_from(range(len(self.markings)))
        for source, transition, target in self.edges:
            graph.add_edge(source, target, key=transition, transition=transition)
        return graph


def explore(apn: AcceptingPetriNet, bound: int = None, state_cap: int = None) -> StateGraph:
    """
    Breadth-first closure of the reachable markings

    Transitions are tried in sorted order so repeated calls produce identical
    graphs. Raises ExplorationOverflowError once more than ``state_cap``
    markings are discovered.
    """
    bound = bound if bound is not None else settings.PRECISION_PETRI_BOUND
    state_cap = state_cap if state_cap is not None else settings.PRECISION_STATE_CAP
    if bound < 1 or state_cap < 1:
        raise ValueError('bound and state_cap must be at least 1')

    index: Dict[Marking, int] = {apn.initial: 0}
    markings: List[Marking] = [apn.initial]
    edges: List[Tuple[int, str, int]] = []
    overflow_place: Optional[str] = None
    queue = deque([apn.initial])
    transitions = sorted(apn.net.transitions)

    while queue:
        marking = queue.popleft()
        source = index[marking]
        enabled = apn.enabled(marking)
        for transition in transitions:
            if transition not in enabled:
                continue
            successor = apn.fire(marking, transition)
            if successor not in index:
                exceeded = [p for p, c in successor.items if c > bound]
                if exceeded:
                    if overflow_place is None:
                        overflow_place = exceeded[0]
                        logger.warning(f"Place {overflow_place} of {apn} exceeds {bound} tokens")
                    continue
                if len(markings) >= state_cap:
                    logger.warning(f"Exploration of {apn} hit the cap of {state_cap} markings")
                    raise ExplorationOverflowError(state_cap)
                index[successor] = len(markings)
                markings.append(successor)
                queue.append(successor)
            edges.append((source, transition, index[successor]))

    logger.debug(f"Explored {len(markings)} markings and {len(edges)} edges of {apn}")
    return StateGraph(
        markings=tuple(markings),
        edges=tuple(edges),
        accepting=frozenset(i for i, m in enumerate(markings) if apn.is_final(m)),
        bounded=overflow_place is None,
        overflow_place=overflow_place,
    )
