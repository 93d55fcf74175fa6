"""
Traces and event logs with multiset semantics
"""

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Iterator, Mapping, Tuple, Union

from precision_core.cache_utils import content_fingerprint

logger = logging.getLogger(__name__)

SEPARATOR = ','
COMMENT = '#'


def is_activity_name(name) -> bool:
    """Non-empty trimmed single-line text free of the separator and the comment mark"""
    return (isinstance(name, str) and bool(name) and name == name.strip() and len(name.splitlines()) == 1
            and SEPARATOR not in name and COMMENT not in name)


@dataclass(frozen=True, order=True)
class Trace:
    """Ordered sequence of activity names"""

    activities: Tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'activities', tuple(self.activities))
        for activity in self.activities:
            if not is_activity_name(activity):
                raise ValueError(f'Invalid activity name {activity!r}')

    @classmethod
    def of(cls, *activities: str) -> 'Trace':
        return cls(tuple(activities))

    @classmethod
    def parse(cls, text: str) -> 'Trace':
        """``"a,b,c"`` → ⟨a,b,c⟩; blank text is the empty trace"""
        if not text.strip():
            return cls()
        return cls(tuple(token.strip() for token in text.split(SEPARATOR)))

    def project(self, keep: Iterable[str]) -> 'Trace':
        keep = frozenset(keep)
        return Trace(tuple(a for a in self.activities if a in keep))

    def __iter__(self):
        return iter(self.activities)

    def __len__(self):
        return len(self.activities)

    def __getitem__(self, index):
        return self.activities[index]

    def __str__(self):
        return '⟨' + SEPARATOR.join(self.activities) + '⟩'


TraceLike = Union[Trace, Iterable[str]]


def _as_trace(value: TraceLike) -> Trace:
    if isinstance(value, Trace):
        return value
    if isinstance(value, str):
        return Trace.parse(value)
    return Trace(tuple(value))


@dataclass(frozen=True)
class EventLog:
    """
    Finite multiset of traces; ``entries`` holds (trace, multiplicity) pairs
    sorted by trace, every multiplicity ≥ 1
    """

    entries: Tuple[Tuple[Trace, int], ...] = ()

    def __post_init__(self):
        counts: Dict[Trace, int] = {}
        for trace, count in self.entries:
            if count < 1:
                raise ValueError(f'Multiplicity of {trace} must be positive, got {count}')
            counts[trace] = counts.get(trace, 0) + count
        object.__setattr__(self, 'entries', tuple(sorted(counts.items())))

    @classmethod
    def from_traces(cls, traces: Iterable[TraceLike]) -> 'EventLog':
        """One occurrence per listed trace; repeated traces accumulate"""
        return cls(tuple((_as_trace(t), 1) for t in traces))

    @classmethod
    def from_counts(cls, counts: Union[Mapping[TraceLike, int], Iterable[Tuple[TraceLike, int]]]) -> 'EventLog':
        pairs = counts.items() if isinstance(counts, Mapping) else counts
        return cls(tuple((_as_trace(t), c) for t, c in pairs))

    def items(self) -> Iterator[Tuple[Trace, int]]:
        return iter(self.entries)

    def count(self, trace: TraceLike) -> int:
        return dict(self.entries).get(_as_trace(trace), 0)

    @property
    def traces(self) -> FrozenSet[Trace]:
        return frozenset(t for t, _ in self.entries)

    @property
    def alphabet(self) -> FrozenSet[str]:
        return frozenset(a for t, _ in self.entries for a in t)

    @property
    def size(self) -> int:
        """Total number of traces, counting multiplicity"""
        return sum(c for _, c in self.entries)

    def __len__(self):
        return self.size

    def __contains__(self, trace) -> bool:
        return self.count(trace) > 0

    def __bool__(self):
        return bool(self.entries)

    def project(self, keep: Iterable[str]) -> 'EventLog':
        keep = frozenset(keep)
        return EventLog(tuple((t.project(keep), c) for t, c in self.entries))

    def extend(self, other: 'EventLog') -> 'EventLog':
        """Multiset sum"""
        return EventLog(self.entries + other.entries)

    def fingerprint(self) -> str:
        from .formats import serialize_log
        return content_fingerprint(serialize_log(self))

    def __str__(self):
        parts = [str(t) if c == 1 else f'{t}^{c}' for t, c in self.entries]
        return '[' + ', '.join(parts) + ']'


def trace_set(log: EventLog) -> FrozenSet[Trace]:
    """Support of the multiset"""
    return log.traces


def project_log(log: EventLog, keep: Iterable[str]) -> EventLog:
    """Delete events outside ``keep`` from every trace"""
    return log.project(keep)


def is_fitting(log: EventLog, apn) -> bool:
    """Every distinct trace of the log is a trace of the net"""
    from petri.language import is_trace

    for trace in sorted(log.traces):
        if not is_trace(apn, trace.activities):
            logger.debug(f"Trace {trace} does not fit {apn}")
            return False
    return True


def unfitting_traces(log: EventLog, apn) -> Tuple[Trace, ...]:
    from petri.language import is_trace

    return tuple(t for t in sorted(log.traces) if not is_trace(apn, t.activities))


def is_trace_subset(l1: EventLog, l2: EventLog) -> bool:
    return l1.traces <= l2.traces


def log_dfa(log: EventLog, alphabet: Iterable[str] = ()):
    """Minimal DFA accepting exactly the trace set"""
    from automata.dfa import dfa_from_traces

    return dfa_from_traces((t.activities for t in log.traces), alphabet=set(alphabet) | log.alphabet)
