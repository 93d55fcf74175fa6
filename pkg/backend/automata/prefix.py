"""
Weighted prefix automata over logs and over aligned firing sequences
"""

from dataclasses import dataclass, field
from typing import Dict, Hashable, Iterable, Iterator, List, Tuple

Prefix = Tuple[Hashable, ...]


@dataclass
class PrefixState:
    """One distinct prefix with its visit weight and end count"""

    prefix: Prefix
    visits: object = 0
    ends: object = 0
    children: Dict[Hashable, Prefix] = field(default_factory=dict)

    @property
    def events(self):
        """Number of events observed leaving this state"""
        return self.visits - self.ends

    @property
    def observed(self) -> frozenset:
        return frozenset(self.children)


class PrefixAutomaton:
    """
    Tree automaton with one state per distinct prefix

    Symbols are activities for logs and transition ids for aligned firing
    sequences. Weights are ints for logs and Fractions when alignments are
    averaged.
    """

    def __init__(self):
        self.states: Dict[Prefix, PrefixState] = {(): PrefixState(())}

    @classmethod
    def from_sequences(cls, weighted: Iterable[Tuple[Iterable[Hashable], object]]) -> 'PrefixAutomaton':
        automaton = cls()
        for sequence, weight in weighted:
            automaton.add(tuple(sequence), weight)
        return automaton

    def add(self, sequence: Prefix, weight):
        state = self.states[()]
        state.visits += weight
        for symbol in sequence:
            child = state.prefix + (symbol,)
            state.children[symbol] = child
            if child not in self.states:
                self.states[child] = PrefixState(child)
            state = self.states[child]
            state.visits += weight
        state.ends += weight

    @property
    def root(self) -> PrefixState:
        return self.states[()]

    def __getitem__(self, prefix) -> PrefixState:
        return self.states[tuple(prefix)]

    def __contains__(self, prefix) -> bool:
        return tuple(prefix) in self.states

    def __iter__(self) -> Iterator[PrefixState]:
        """States in length-lexicographic prefix order"""
        for prefix in sorted(self.states, key=lambda p: (len(p), tuple(map(str, p)))):
            yield self.states[prefix]

    def __len__(self):
        return len(self.states)

    def weight(self, prefix, weighting: str = 'visits'):
        state = self[prefix]
        return state.events if weighting == 'events' else state.visits

    def children(self, prefix) -> List[PrefixState]:
        state = self[prefix]
        return [self.states[c] for _, c in sorted(state.children.items(), key=lambda kv: str(kv[0]))]


def build_prefix_automaton(log) -> PrefixAutomaton:
    """Prefix automaton of an EventLog with visit and event weights"""
    return PrefixAutomaton.from_sequences(
        (trace.activities, count) for trace, count in log.items()
    )
