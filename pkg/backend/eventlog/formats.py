"""
Line format for event logs

    <count>x <activity>,<activity>,...
    <count>x                            # empty trace
"""

import re
from typing import Dict

from precision_core.exceptions import FormatParseError

from .logs import COMMENT, SEPARATOR, EventLog, Trace

LINE = re.compile(r'^(?P<count>-?\d+)x(?:\s+(?P<trace>.*))?$')


def parse_log(text: str) -> EventLog:
    """Parse the log format; equal traces merge by summing their counts"""
    counts: Dict[Trace, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split(COMMENT, 1)[0].strip()
        if not line:
            continue
        match = LINE.match(line)
        if not match:
            raise FormatParseError(f'expected "<count>x <activity>,..." but got "{line}"', lineno)
        count = int(match.group('count'))
        if count < 1:
            raise FormatParseError(f'count must be positive, got {count}', lineno)
        body = match.group('trace') or ''
        tokens = [token.strip() for token in body.split(SEPARATOR)] if body.strip() else []
        if any(not token for token in tokens):
            raise FormatParseError('empty activity name', lineno)
        trace = Trace(tuple(tokens))
        counts[trace] = counts.get(trace, 0) + count
    return EventLog(tuple(counts.items()))


def serialize_log(log: EventLog) -> str:
    """Descending multiplicity, then traces in lexicographic order"""
    lines = []
    for trace, count in sorted(log.items(), key=lambda item: (-item[1], item[0])):
        lines.append(f'{count}x {SEPARATOR.join(trace)}' if len(trace) else f'{count}x')
    return '\n'.join(lines) + ('\n' if lines else '')
