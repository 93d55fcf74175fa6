"""
Language of an accepting Petri net: minimal DFA, membership and prefix replay
"""

import logging
from collections import deque
from typing import FrozenSet, Iterable, Sequence, Set

from django.conf import settings

from automata.dfa import Dfa, Nfa, determinize, minimize
from precision_core.cache_utils import cache_function
from precision_core.exceptions import (ExplorationOverflowError, UnboundedNetError,
                                       UndecidedError)

from .nets import AcceptingPetriNet, Marking
from .statespace import StateGraph, explore

logger = logging.getLogger(__name__)


def reachability_nfa(apn: AcceptingPetriNet, graph: StateGraph) -> Nfa:
    """State graph read as an NFA: τ-edges become ε, labeled edges their activity"""
    return Nfa(
        states=frozenset(range(len(graph))),
        alphabet=apn.activities,
        edges=frozenset((s, apn.net.label(t), d) for s, t, d in graph.edges),
        initial=frozenset([graph.initial]),
        accepting=graph.accepting,
    )


@cache_function(key_prefix='petri')
def _language_dfa(apn: AcceptingPetriNet, bound: int, state_cap: int) -> Dfa:
    graph = explore(apn, bound=bound, state_cap=state_cap)
    if not graph.bounded:
        raise UnboundedNetError(graph.overflow_place, bound)
    dfa = minimize(determinize(reachability_nfa(apn, graph)))
    logger.info(f"Language DFA of {apn}: {len(graph)} markings -> {dfa.num_states} states")
    return dfa


def language_dfa(apn: AcceptingPetriNet, bound: int = None, state_cap: int = None) -> Dfa:
    """
    Minimal DFA of L(apn), memoized per net fingerprint

    Raises UnboundedNetError when some place exceeds ``bound`` tokens.
    """
    bound = bound if bound is not None else settings.PRECISION_PETRI_BOUND
    state_cap = state_cap if state_cap is not None else settings.PRECISION_STATE_CAP
    return _language_dfa(apn, bound, state_cap)


def search_trace(apn: AcceptingPetriNet, sigma: Sequence[str], tau_cap: int = None,
                 budget: int = None) -> bool:
    """
    Firing-sequence search for ``sigma`` without building the state space

    Consecutive τ-firings are limited to ``tau_cap``; if that limit or the
    ``budget`` of settled states cut the search before ``sigma`` was found,
    the answer is unknown and UndecidedError is raised.
    """
    tau_cap = tau_cap if tau_cap is not None else settings.PRECISION_TAU_CAP
    budget = budget if budget is not None else settings.PRECISION_SEARCH_BUDGET
    sigma = tuple(sigma)
    start = (apn.initial, 0, 0)
    seen: Set = {(apn.initial, 0)}
    queue = deque([start])
    truncated = False
    settled = 0
    while queue:
        marking, position, taus = queue.popleft()
        settled += 1
        if settled > budget:
            raise UndecidedError(f'Membership of {sigma} in {apn} undecided after {budget} states')
        if position == len(sigma) and apn.is_final(marking):
            return True
        for transition in sorted(apn.enabled(marking)):
            label = apn.net.label(transition)
            if label is None:
                if taus >= tau_cap:
                    truncated = True
                    continue
                successor = (apn.fire(marking, transition), position, taus + 1)
            elif position < len(sigma) and label == sigma[position]:
                successor = (apn.fire(marking, transition), position + 1, 0)
            else:
                continue
            if successor[:2] not in seen:
                seen.add(successor[:2])
                queue.append(successor)
    if truncated:
        raise UndecidedError(f'Membership of {sigma} in {apn} undecided: τ cap of {tau_cap} reached')
    return False


def is_trace(apn: AcceptingPetriNet, sigma: Sequence[str]) -> bool:
    """σ ∈ L(apn); DFA membership for bounded nets, bounded search otherwise"""
    try:
        dfa = language_dfa(apn)
    except (UnboundedNetError, ExplorationOverflowError) as exc:
        logger.info(f"Falling back to firing-sequence search for {apn}: {exc}")
        return search_trace(apn, sigma)
    return dfa.accepts(sigma)


def _tau_closure(apn: AcceptingPetriNet, graph: StateGraph, states: Iterable[int]) -> Set[int]:
    closure = set(states)
    stack = list(closure)
    while stack:
        state = stack.pop()
        for transition, target in graph.successors(state):
            if apn.net.is_tau(transition) and target not in closure:
                closure.add(target)
                stack.append(target)
    return closure


def markings_after(apn: AcceptingPetriNet, prefix: Sequence[str],
                   graph: StateGraph = None) -> FrozenSet[Marking]:
    """
    Markings reachable by some firing sequence labeled ``prefix``, closed
    under τ-firings; empty when the prefix is not replayable

    Callers replaying many prefixes pass a precomputed ``graph``.
    """
    graph = graph if graph is not None else explore(apn)
    if not graph.bounded:
        raise UnboundedNetError(graph.overflow_place, settings.PRECISION_PETRI_BOUND)
    current = _tau_closure(apn, graph, [graph.initial])
    for activity in prefix:
        step = {
            target
            for state in current
            for transition, target in graph.successors(state)
            if apn.net.label(transition) == activity
        }
        current = _tau_closure(apn, graph, step)
        if not current:
            break
    return frozenset(graph.markings[s] for s in current)
