"""
Finite automata over activities and the constructions the measures need

Dfas are partial: a missing transition rejects. Every construction that
returns a Dfa returns it with canonical BFS numbering, so equal inputs give
byte-identical outputs.
"""

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import (Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence,
                    Set, Tuple)

import networkx as nx

logger = logging.getLogger(__name__)

EPSILON = None
STOP = '■'  # termination option at accepting states


@dataclass(frozen=True)
class Nfa:
    """Automaton with ε-edges (label None) and several initial states"""

    states: FrozenSet[int]
    alphabet: FrozenSet[str]
    edges: FrozenSet[Tuple[int, Optional[str], int]]
    initial: FrozenSet[int]
    accepting: FrozenSet[int]

    def __post_init__(self):
        for source, label, target in self.edges:
            if source not in self.states or target not in self.states:
                raise ValueError(f'Edge {source} -{label}-> {target} uses an undeclared state')
            if label is not EPSILON and label not in self.alphabet:
                raise ValueError(f'Edge label {label} is outside the alphabet')
        if not self.initial <= self.states or not self.accepting <= self.states:
            raise ValueError('Initial and accepting states must be declared states')

    def successors(self) -> Dict[int, List[Tuple[Optional[str], int]]]:
        table: Dict[int, List[Tuple[Optional[str], int]]] = {s: [] for s in self.states}
        for source, label, target in sorted(self.edges, key=_edge_key):
            table[source].append((label, target))
        return table


def _edge_key(edge):
    source, label, target = edge
    return (source, '' if label is None else label, target)


@dataclass(frozen=True)
class Dfa:
    """
    Deterministic automaton with states 0..n-1

    ``origins`` optionally maps each state to the pair of states it was built
    from (conjunction automata keep it for per-model-state aggregation).
    """

    num_states: int
    alphabet: FrozenSet[str]
    delta: Tuple[Tuple[int, str, int], ...]
    initial: int
    accepting: FrozenSet[int]
    origins: Tuple[Tuple[int, int], ...] = field(default=(), compare=False)
    _table: Dict[int, Dict[str, int]] = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, 'alphabet', frozenset(self.alphabet))
        object.__setattr__(self, 'accepting', frozenset(self.accepting))
        object.__setattr__(self, 'delta', tuple(sorted(self.delta)))
        table: Dict[int, Dict[str, int]] = {s: {} for s in range(self.num_states)}
        for source, activity, target in self.delta:
            if source not in table or not 0 <= target < self.num_states:
                raise ValueError(f'Transition {source} -{activity}-> {target} uses an undeclared state')
            if activity in table[source]:
                raise ValueError(f'State {source} has two successors on {activity}')
            table[source][activity] = target
        if not 0 <= self.initial < self.num_states:
            raise ValueError('Initial state must be declared')
        object.__setattr__(self, '_table', table)

    @property
    def states(self) -> range:
        return range(self.num_states)

    def step(self, state: int, activity: str) -> Optional[int]:
        return self._table[state].get(activity)

    def outgoing(self, state: int) -> Dict[str, int]:
        return dict(self._table[state])

    def options(self, state: int) -> FrozenSet[str]:
        """Outgoing activities plus STOP when the state accepts"""
        opts = set(self._table[state])
        if state in self.accepting:
            opts.add(STOP)
        return frozenset(opts)

    def origin(self, state: int) -> Tuple[int, int]:
        return self.origins[state]

    def run(self, sequence: Iterable[str]) -> Optional[int]:
        state: Optional[int] = self.initial
        for activity in sequence:
            state = self.step(state, activity)
            if state is None:
                return None
        return state

    def accepts(self, sequence: Iterable[str]) -> bool:
        state = self.run(sequence)
        return state is not None and state in self.accepting

    def is_empty(self) -> bool:
        return not (self.reachable() & self.accepting)

    def reachable(self) -> Set[int]:
        seen = {self.initial}
        queue = deque([self.initial])
        while queue:
            state = queue.popleft()
            for target in self._table[state].values():
                if target not in seen:
                    seen.add(target)
                    queue.append(target)
        return seen

    def graph(self) -> nx.MultiDiGraph:
        graph = nx.MultiDiGraph()
        graph.add_nodes_from(self.states)
        for source, activity, target in self.delta:
            graph.add_edge(source, target, key=activity, activity=activity)
        return graph

    def signature(self) -> Tuple:
        """Language-identifying key for canonical minimal automata"""
        return (self.num_states, self.delta, self.initial, self.accepting)

    def to_nfa(self) -> Nfa:
        return Nfa(
            states=frozenset(self.states),
            alphabet=self.alphabet,
            edges=frozenset(self.delta),
            initial=frozenset([self.initial]),
            accepting=self.accepting,
        )


def empty_dfa(alphabet: Iterable[str] = ()) -> Dfa:
    return Dfa(num_states=1, alphabet=frozenset(alphabet), delta=(), initial=0, accepting=frozenset())


def _renumber(initial, table: Mapping, accepting: Set, alphabet, origins: Mapping = None) -> Dfa:
    """BFS renumbering from ``initial`` with successors visited in activity order"""
    order = {initial: 0}
    queue = deque([initial])
    while queue:
        state = queue.popleft()
        for activity in sorted(table.get(state, {})):
            target = table[state][activity]
            if target not in order:
                order[target] = len(order)
                queue.append(target)
    delta = tuple(
        (order[s], a, order[t])
        for s in order for a, t in table.get(s, {}).items() if t in order
    )
    return Dfa(
        num_states=len(order),
        alphabet=frozenset(alphabet),
        delta=delta,
        initial=0,
        accepting=frozenset(order[s] for s in accepting if s in order),
        origins=tuple(origins[s] for s, _ in sorted(order.items(), key=lambda kv: kv[1])) if origins else (),
    )


def _epsilon_closure(states: Iterable[int], successors) -> FrozenSet[int]:
    closure = set(states)
    stack = list(closure)
    while stack:
        state = stack.pop()
        for label, target in successors[state]:
            if label is EPSILON and target not in closure:
                closure.add(target)
                stack.append(target)
    return frozenset(closure)


def determinize(nfa: Nfa) -> Dfa:
    """Subset construction with ε-closure; the empty subset is left out"""
    successors = nfa.successors()
    start = _epsilon_closure(nfa.initial, successors)
    table: Dict[FrozenSet[int], Dict[str, FrozenSet[int]]] = {}
    queue = deque([start])
    table[start] = {}
    while queue:
        subset = queue.popleft()
        moves: Dict[str, Set[int]] = {}
        for state in subset:
            for label, target in successors[state]:
                if label is not EPSILON:
                    moves.setdefault(label, set()).add(target)
        for activity in sorted(moves):
            target = _epsilon_closure(moves[activity], successors)
            table[subset][activity] = target
            if target not in table:
                table[target] = {}
                queue.append(target)
    accepting = {subset for subset in table if subset & nfa.accepting}
    logger.debug(f"Determinized {len(nfa.states)} NFA states into {len(table)} DFA states")
    return _renumber(start, table, accepting, nfa.alphabet)


def trim(dfa: Dfa) -> Dfa:
    """Drop states that are unreachable or cannot reach an accepting state"""
    reachable = dfa.reachable()
    reverse: Dict[int, Set[int]] = {s: set() for s in dfa.states}
    for source, _, target in dfa.delta:
        reverse[target].add(source)
    useful = set(s for s in dfa.accepting if s in reachable)
    queue = deque(useful)
    while queue:
        state = queue.popleft()
        for source in reverse[state]:
            if source in reachable and source not in useful:
                useful.add(source)
                queue.append(source)
    if dfa.initial not in useful:
        return empty_dfa(dfa.alphabet)
    table = {
        s: {a: t for a, t in dfa.outgoing(s).items() if t in useful}
        for s in useful
    }
    origins = {s: dfa.origins[s] for s in useful} if dfa.origins else None
    return _renumber(dfa.initial, table, dfa.accepting & useful, dfa.alphabet, origins)


def minimize(dfa: Dfa) -> Dfa:
    """
    Unique minimal partial DFA for the language of ``dfa``

    Trims first, then refines the accepting/non-accepting partition by
    successor-class signatures until stable (missing transitions behave as a
    shared dead class).
    """
    trimmed = trim(dfa)
    if trimmed.is_empty():
        return empty_dfa(dfa.alphabet)
    block = {s: int(s in trimmed.accepting) for s in trimmed.states}
    while True:
        signatures = {
            s: (block[s], tuple(sorted((a, block[t]) for a, t in trimmed.outgoing(s).items())))
            for s in trimmed.states
        }
        numbering: Dict[Tuple, int] = {}
        for s in trimmed.states:
            numbering.setdefault(signatures[s], len(numbering))
        refined = {s: numbering[signatures[s]] for s in trimmed.states}
        if len(numbering) == len(set(block.values())):
            block = refined
            break
        block = refined
    table: Dict[int, Dict[str, int]] = {}
    for source, activity, target in trimmed.delta:
        table.setdefault(block[source], {})[activity] = block[target]
    accepting = {block[s] for s in trimmed.accepting}
    return _renumber(block[trimmed.initial], table, accepting, dfa.alphabet)


def product(a: Dfa, b: Dfa) -> Dfa:
    """
    Conjunction automaton accepting L(a) ∩ L(b), trimmed, with each state's
    (a-state, b-state) origin recorded
    """
    start = (a.initial, b.initial)
    table: Dict[Tuple[int, int], Dict[str, Tuple[int, int]]] = {start: {}}
    queue = deque([start])
    while queue:
        pair = queue.popleft()
        left, right = a.outgoing(pair[0]), b.outgoing(pair[1])
        for activity in sorted(set(left) & set(right)):
            target = (left[activity], right[activity])
            table[pair][activity] = target
            if target not in table:
                table[target] = {}
                queue.append(target)
    accepting = {p for p in table if p[0] in a.accepting and p[1] in b.accepting}
    raw = _renumber(start, table, accepting, a.alphabet | b.alphabet, origins={p: p for p in table})
    return trim(raw)


@dataclass(frozen=True)
class InclusionResult:
    """Outcome of a language inclusion test; falsy when inclusion fails"""

    holds: bool
    witness: Optional[Tuple[str, ...]] = None

    def __bool__(self):
        return self.holds


def is_subset(a: Dfa, b: Dfa) -> InclusionResult:
    """
    L(a) ⊆ L(b), with a shortest witness from L(a) ∖ L(b) when it fails
    """
    start = (a.initial, b.initial)
    parent: Dict[Tuple[int, Optional[int]], Tuple] = {start: None}
    queue = deque([start])
    while queue:
        pair = queue.popleft()
        left, right = pair
        if left in a.accepting and (right is None or right not in b.accepting):
            witness: List[str] = []
            node = pair
            while parent[node] is not None:
                previous, activity = parent[node]
                witness.append(activity)
                node = previous
            return InclusionResult(False, tuple(reversed(witness)))
        for activity, target in sorted(a.outgoing(left).items()):
            other = b.step(right, activity) if right is not None else None
            successor = (target, other)
            if successor not in parent:
                parent[successor] = (pair, activity)
                queue.append(successor)
    return InclusionResult(True)


def are_equivalent(a: Dfa, b: Dfa) -> bool:
    """Language equality via isomorphism of the canonical minimal automata"""
    return minimize(a).signature() == minimize(b).signature()


def is_universal(dfa: Dfa, alphabet: Iterable[str]) -> bool:
    """True iff every string over ``alphabet`` is accepted"""
    alphabet = frozenset(alphabet)
    for state in dfa.reachable():
        if state not in dfa.accepting:
            return False
        if not alphabet <= set(dfa.outgoing(state)):
            return False
    return True


def universal_dfa(alphabet: Iterable[str]) -> Dfa:
    alphabet = frozenset(alphabet)
    return Dfa(
        num_states=1,
        alphabet=alphabet,
        delta=tuple((0, a, 0) for a in sorted(alphabet)),
        initial=0,
        accepting=frozenset([0]),
    )


def project(dfa: Dfa, keep: Iterable[str]) -> Dfa:
    """Relabel activities outside ``keep`` to ε, then determinize and minimize"""
    keep = frozenset(keep)
    edges = frozenset(
        (s, a if a in keep else EPSILON, t) for s, a, t in dfa.delta
    )
    nfa = Nfa(
        states=frozenset(dfa.states),
        alphabet=keep,
        edges=edges,
        initial=frozenset([dfa.initial]),
        accepting=dfa.accepting,
    )
    return minimize(determinize(nfa))


def dfa_from_traces(traces: Iterable[Sequence[str]], alphabet: Iterable[str] = ()) -> Dfa:
    """Minimal DFA accepting exactly the given finite set of traces"""
    table: Dict[Tuple[str, ...], Dict[str, Tuple[str, ...]]] = {(): {}}
    accepting = set()
    symbols = set(alphabet)
    for trace in traces:
        prefix: Tuple[str, ...] = ()
        for activity in trace:
            symbols.add(activity)
            child = prefix + (activity,)
            table[prefix][activity] = child
            table.setdefault(child, {})
            prefix = child
        accepting.add(prefix)
    return minimize(_renumber((), table, accepting, symbols))


def enumerate_language(dfa: Dfa, max_length: int) -> List[Tuple[str, ...]]:
    """All accepted strings up to ``max_length``, in length-lexicographic order"""
    found = []
    frontier: List[Tuple[Tuple[str, ...], int]] = [((), dfa.initial)]
    for _ in range(max_length + 1):
        next_frontier = []
        for word, state in frontier:
            if state in dfa.accepting:
                found.append(word)
            for activity, target in sorted(dfa.outgoing(state).items()):
                next_frontier.append((word + (activity,), target))
        frontier = next_frontier
    return found
