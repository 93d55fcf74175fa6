"""
DOT rendering of automata for documentation figures
"""

from typing import List

from .dfa import Dfa, Nfa
from .prefix import PrefixAutomaton


def _quote(text) -> str:
    return '"' + str(text).replace('"', '\\"') + '"'


def dfa_to_dot(dfa: Dfa, name: str = 'dfa') -> str:
    lines: List[str] = [f'digraph {_quote(name)} {{', '  rankdir=LR;', '  __start [shape=point];']
    for state in dfa.states:
        shape = 'doublecircle' if state in dfa.accepting else 'circle'
        lines.append(f'  {state} [shape={shape}];')
    lines.append(f'  __start -> {dfa.initial};')
    for source, activity, target in dfa.delta:
        lines.append(f'  {source} -> {target} [label={_quote(activity)}];')
    lines.append('}')
    return '\n'.join(lines) + '\n'


def nfa_to_dot(nfa: Nfa, name: str = 'nfa') -> str:
    lines: List[str] = [f'digraph {_quote(name)} {{', '  rankdir=LR;']
    for state in sorted(nfa.states):
        shape = 'doublecircle' if state in nfa.accepting else 'circle'
        lines.append(f'  {state} [shape={shape}];')
    for index, state in enumerate(sorted(nfa.initial)):
        lines.append(f'  __start{index} [shape=point];')
        lines.append(f'  __start{index} -> {state};')
    for source, label, target in sorted(nfa.edges, key=lambda e: (e[0], e[1] or '', e[2])):
        lines.append(f'  {source} -> {target} [label={_quote(label if label is not None else "ε")}];')
    lines.append('}')
    return '\n'.join(lines) + '\n'


def prefix_to_dot(automaton: PrefixAutomaton, name: str = 'prefix', weighting: str = 'visits') -> str:
    """States are labeled with their weight, edges with the symbol"""
    ids = {state.prefix: index for index, state in enumerate(automaton)}
    lines: List[str] = [f'digraph {_quote(name)} {{', '  rankdir=LR;']
    for state in automaton:
        lines.append(f'  {ids[state.prefix]} [label={_quote(automaton.weight(state.prefix, weighting))}];')
    for state in automaton:
        for symbol, child in sorted(state.children.items(), key=lambda kv: str(kv[0])):
            lines.append(f'  {ids[state.prefix]} -> {ids[child]} [label={_quote(symbol)}];')
    lines.append('}')
    return '\n'.join(lines) + '\n'
