"""
Line-oriented text format for accepting Petri nets

    place <id> [init=<n>]
    trans <id> [label=<activity>]      # no label: τ-transition
    arc <from> <to>
    final <place>=<n>[,<place>=<n>...]  # one line per final marking
"""

import re
from typing import Dict, List, Optional, Tuple

from precision_core.exceptions import FormatParseError, InvalidNetError

from .nets import AcceptingPetriNet, LabeledPetriNet, Marking

IDENTIFIER = re.compile(r'^[A-Za-z0-9_.\-]+$')


class NetParser:
    """
    Parser for the net format; collects declarations first and validates
    references afterwards so that arcs may precede the nodes they connect
    """

    def __init__(self, name: str = ''):
        self.name = name
        self.places: Dict[str, int] = {}
        self.transitions: Dict[str, Optional[str]] = {}
        self.arcs: List[Tuple[str, str, int]] = []
        self.finals: List[Tuple[Dict[str, int], int]] = []
        self.declared_at: Dict[str, int] = {}

    def parse(self, text: str) -> AcceptingPetriNet:
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split('#', 1)[0].strip()
            if not line:
                continue
            keyword, *rest = line.split()
            handler = getattr(self, f'_parse_{keyword}', None)
            if handler is None:
                raise FormatParseError(f'unknown declaration "{keyword}"', lineno)
            handler(rest, lineno)
        return self._build()

    def _identifier(self, token: str, lineno: int) -> str:
        if not IDENTIFIER.match(token):
            raise FormatParseError(f'invalid identifier "{token}"', lineno)
        return token

    def _declare(self, node: str, lineno: int):
        if node in self.declared_at:
            raise FormatParseError(
                f'"{node}" already declared on line {self.declared_at[node]}', lineno
            )
        self.declared_at[node] = lineno

    def _count(self, token: str, lineno: int) -> int:
        if not token.isdigit():
            raise FormatParseError(f'token count "{token}" is not a non-negative integer', lineno)
        return int(token)

    def _parse_place(self, args: List[str], lineno: int):
        if not args or len(args) > 2:
            raise FormatParseError('expected "place <id> [init=<n>]"', lineno)
        place = self._identifier(args[0], lineno)
        tokens = 0
        if len(args) == 2:
            key, _, value = args[1].partition('=')
            if key != 'init':
                raise FormatParseError(f'unexpected attribute "{args[1]}"', lineno)
            tokens = self._count(value, lineno)
        self._declare(place, lineno)
        self.places[place] = tokens

    def _parse_trans(self, args: List[str], lineno: int):
        if not args or len(args) > 2:
            raise FormatParseError('expected "trans <id> [label=<activity>]"', lineno)
        transition = self._identifier(args[0], lineno)
        label = None
        if len(args) == 2:
            key, _, value = args[1].partition('=')
            if key != 'label' or not value:
                raise FormatParseError(f'unexpected attribute "{args[1]}"', lineno)
            label = value
        self._declare(transition, lineno)
        self.transitions[transition] = label

    def _parse_arc(self, args: List[str], lineno: int):
        if len(args) != 2:
            raise FormatParseError('expected "arc <from> <to>"', lineno)
        source, target = (self._identifier(a, lineno) for a in args)
        self.arcs.append((source, target, lineno))

    def _parse_final(self, args: List[str], lineno: int):
        if len(args) > 1:
            raise FormatParseError('expected "final <place>=<n>[,<place>=<n>...]"', lineno)
        marking: Dict[str, int] = {}
        for assignment in (args[0].split(',') if args else []):
            place, sep, value = assignment.partition('=')
            if not sep:
                raise FormatParseError(f'malformed assignment "{assignment}"', lineno)
            marking[self._identifier(place, lineno)] = self._count(value, lineno)
        self.finals.append((marking, lineno))

    def _build(self) -> AcceptingPetriNet:
        last_line = max(self.declared_at.values(), default=0)
        for source, target, lineno in self.arcs:
            for node in (source, target):
                if node not in self.declared_at:
                    raise FormatParseError(f'arc references undeclared node "{node}"', lineno)
            if (source in self.places) == (target in self.places):
                raise FormatParseError(
                    f'arc {source} -> {target} must connect a place and a transition', lineno
                )
        for marking, lineno in self.finals:
            for place in marking:
                if place not in self.places:
                    raise FormatParseError(f'final marking references unknown place "{place}"', lineno)
        if not self.finals:
            raise FormatParseError('no final marking declared', last_line + 1)

        try:
            net = LabeledPetriNet(
                places=frozenset(self.places),
                transitions=frozenset(self.transitions),
                arcs=frozenset((s, t) for s, t, _ in self.arcs),
                labels=tuple((t, a) for t, a in self.transitions.items() if a is not None),
            )
        except InvalidNetError as exc:
            raise FormatParseError(str(exc), last_line) from exc
        return AcceptingPetriNet(
            net=net,
            initial=Marking.of(self.places),
            finals=frozenset(Marking.of(m) for m, _ in self.finals),
            name=self.name,
        )


def parse_net(text: str, name: str = '') -> AcceptingPetriNet:
    """Parse the net format; errors carry the offending line number"""
    return NetParser(name=name).parse(text)


def serialize_net(apn: AcceptingPetriNet) -> str:
    """Canonical text rendering (sorted declarations); parse_net inverts it"""
    initial = apn.initial.as_dict()
    lines = []
    for place in sorted(apn.net.places):
        tokens = initial.get(place, 0)
        lines.append(f'place {place} init={tokens}' if tokens else f'place {place}')
    for transition in sorted(apn.net.transitions):
        label = apn.net.label(transition)
        lines.append(f'trans {transition} label={label}' if label is not None else f'trans {transition}')
    for source, target in sorted(apn.net.arcs):
        lines.append(f'arc {source} {target}')
    for final in sorted(apn.finals):
        if final.items:
            lines.append('final ' + ','.join(f'{p}={c}' for p, c in final.items))
        else:
            lines.append('final')
    return '\n'.join(lines) + '\n'
