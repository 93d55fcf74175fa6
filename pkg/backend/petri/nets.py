"""
Labeled and accepting Petri nets with their firing rule
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Tuple

import networkx as nx

from precision_core.cache_utils import content_fingerprint
from precision_core.exceptions import InvalidMarkingError, InvalidNetError, NotEnabledError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class Marking:
    """
    Multiset of places, stored as sorted (place, count) pairs with count > 0

    The canonical ordering makes markings hashable, comparable and stable
    across runs.
    """

    items: Tuple[Tuple[str, int], ...] = ()

    @classmethod
    def of(cls, tokens: Mapping[str, int] = None, **kwargs) -> 'Marking':
        counts: Dict[str, int] = dict(tokens or {})
        counts.update(kwargs)
        for place, count in counts.items():
            if count < 0:
                raise InvalidMarkingError(f'Negative token count on {place}')
        return cls(tuple(sorted((p, c) for p, c in counts.items() if c > 0)))

    @classmethod
    def from_places(cls, places: Iterable[str]) -> 'Marking':
        counts: Dict[str, int] = {}
        for place in places:
            counts[place] = counts.get(place, 0) + 1
        return cls.of(counts)

    def count(self, place: str) -> int:
        for p, c in self.items:
            if p == place:
                return c
        return 0

    def as_dict(self) -> Dict[str, int]:
        return dict(self.items)

    def places(self) -> FrozenSet[str]:
        return frozenset(p for p, _ in self.items)

    def total(self) -> int:
        return sum(c for _, c in self.items)

    def __str__(self):
        parts = [p if c == 1 else f'{p}:{c}' for p, c in self.items]
        return '{' + ', '.join(parts) + '}'


@dataclass(frozen=True)
class LabeledPetriNet:
    """
    Net ⟨P, T, F, ℓ⟩; transitions missing from ``labels`` are τ-transitions
    """

    places: FrozenSet[str]
    transitions: FrozenSet[str]
    arcs: FrozenSet[Tuple[str, str]]
    labels: Tuple[Tuple[str, str], ...] = ()
    _preset: Dict[str, Tuple[str, ...]] = field(default=None, init=False, repr=False, compare=False)
    _postset: Dict[str, Tuple[str, ...]] = field(default=None, init=False, repr=False, compare=False)
    _label_of: Dict[str, str] = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, 'places', frozenset(self.places))
        object.__setattr__(self, 'transitions', frozenset(self.transitions))
        object.__setattr__(self, 'arcs', frozenset(self.arcs))
        label_map = dict(self.labels.items() if isinstance(self.labels, Mapping) else self.labels)
        object.__setattr__(self, 'labels', tuple(sorted(label_map.items())))
        self._validate(label_map)
        object.__setattr__(self, '_label_of', label_map)

        preset: Dict[str, List[str]] = {t: [] for t in self.transitions}
        postset: Dict[str, List[str]] = {t: [] for t in self.transitions}
        for source, target in self.arcs:
            if source in self.places:
                preset[target].append(source)
            else:
                postset[source].append(target)
        object.__setattr__(self, '_preset', {t: tuple(sorted(ps)) for t, ps in preset.items()})
        object.__setattr__(self, '_postset', {t: tuple(sorted(ps)) for t, ps in postset.items()})

    def _validate(self, label_map):
        overlap = self.places & self.transitions
        if overlap:
            raise InvalidNetError(f'Identifiers used as place and transition: {sorted(overlap)}')
        for source, target in self.arcs:
            if source in self.places and target in self.transitions:
                continue
            if source in self.transitions and target in self.places:
                continue
            raise InvalidNetError(f'Arc {source} -> {target} must connect a place and a transition')
        unknown = set(label_map) - self.transitions
        if unknown:
            raise InvalidNetError(f'Labels for unknown transitions: {sorted(unknown)}')

    def label(self, transition: str) -> Optional[str]:
        """Activity of ``transition``, or None for τ"""
        return self._label_of.get(transition)

    def label_map(self) -> Dict[str, str]:
        return dict(self.labels)

    def preset(self, transition: str) -> Tuple[str, ...]:
        return self._preset[transition]

    def postset(self, transition: str) -> Tuple[str, ...]:
        return self._postset[transition]

    def is_tau(self, transition: str) -> bool:
        return self.label(transition) is None

    @property
    def visible_transitions(self) -> Tuple[str, ...]:
        return tuple(sorted(t for t, _ in self.labels))

    @property
    def activities(self) -> FrozenSet[str]:
        return frozenset(a for _, a in self.labels)


@dataclass(frozen=True)
class AcceptingPetriNet:
    """Labeled net with an initial marking and a non-empty set of final markings"""

    net: LabeledPetriNet
    initial: Marking
    finals: FrozenSet[Marking]
    name: str = field(default='', compare=False)

    def __post_init__(self):
        object.__setattr__(self, 'finals', frozenset(self.finals))
        if not self.finals:
            raise InvalidNetError('An accepting Petri net needs at least one final marking')
        self.check_marking(self.initial)
        for final in self.finals:
            self.check_marking(final)

    # -- firing rule -----------------------------------------------------

    def check_marking(self, marking: Marking):
        unknown = marking.places() - self.net.places
        if unknown:
            raise InvalidMarkingError(f'Marking {marking} references unknown places {sorted(unknown)}')

    def enabled(self, marking: Marking) -> FrozenSet[str]:
        self.check_marking(marking)
        tokens = marking.as_dict()
        return frozenset(
            t for t in self.net.transitions
            if all(tokens.get(p, 0) >= 1 for p in self.net.preset(t))
        )

    def fire(self, marking: Marking, transition: str) -> Marking:
        if transition not in self.enabled(marking):
            raise NotEnabledError(f'Transition {transition} is not enabled at {marking}')
        tokens = marking.as_dict()
        for place in self.net.preset(transition):
            tokens[place] -= 1
        for place in self.net.postset(transition):
            tokens[place] = tokens.get(place, 0) + 1
        return Marking.of(tokens)

    def is_final(self, marking: Marking) -> bool:
        return marking in self.finals

    # -- structure ---------------------------------------------------------

    @property
    def activities(self) -> FrozenSet[str]:
        return self.net.activities

    def fingerprint(self) -> str:
        from .dsl import serialize_net
        return content_fingerprint(serialize_net(self))

    def flow_graph(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(self.net.places)
        graph.add_nodes_from(self.net.transitions)
        graph.add_edges_from(self.net.arcs)
        return graph

    def is_wf_shaped(self) -> bool:
        """
        Syntactic workflow-net check: one source place, one sink place, and
        every node lies on a path from source to sink
        """
        graph = self.flow_graph()
        sources = [p for p in self.net.places if graph.in_degree(p) == 0]
        sinks = [p for p in self.net.places if graph.out_degree(p) == 0]
        if len(sources) != 1 or len(sinks) != 1:
            return False
        source, sink = sources[0], sinks[0]
        reachable = nx.descendants(graph, source) | {source}
        coreachable = nx.ancestors(graph, sink) | {sink}
        return set(graph.nodes) <= (reachable & coreachable)

    def __str__(self):
        return self.name or f'net:{self.fingerprint()[:8]}'


def enabled(apn: AcceptingPetriNet, marking: Marking) -> FrozenSet[str]:
    """Transitions whose input places all hold a token"""
    return apn.enabled(marking)


def fire(apn: AcceptingPetriNet, marking: Marking, transition: str) -> Marking:
    """m − •t + t•"""
    return apn.fire(marking, transition)


def build_net(places: Mapping[str, int], transitions: Mapping[str, Optional[str]],
              arcs: Iterable[Tuple[str, str]], finals: Iterable[Mapping[str, int]],
              name: str = '') -> AcceptingPetriNet:
    """
    Convenience constructor: ``places`` maps id → initial tokens,
    ``transitions`` maps id → activity (None for τ)
    """
    net = LabeledPetriNet(
        places=frozenset(places),
        transitions=frozenset(transitions),
        arcs=frozenset(arcs),
        labels=tuple((t, a) for t, a in transitions.items() if a is not None),
    )
    return AcceptingPetriNet(
        net=net,
        initial=Marking.of(places),
        finals=frozenset(Marking.of(f) for f in finals),
        name=name,
    )
