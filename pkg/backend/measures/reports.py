"""
Measure results
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, FrozenSet, Optional, Tuple

DEFINED = 'defined'
UNDEFINED = 'undefined'
UNDECIDED = 'undecided'

Pair = Tuple[str, str]


def format_value(value) -> str:
    """Four decimals, the reporting precision of every command"""
    if value is None:
        return UNDEFINED
    return f'{float(value):.4f}'


@dataclass(frozen=True)
class SometimesRelations:
    """Activity pairs that sometimes, but not always, follow/precede each other"""

    log_follows: FrozenSet[Pair] = frozenset()
    log_precedes: FrozenSet[Pair] = frozenset()
    model_follows: FrozenSet[Pair] = frozenset()
    model_precedes: FrozenSet[Pair] = frozenset()


@dataclass(frozen=True)
class PrecisionReport:
    """
    Outcome of one measure evaluation

    ``value`` is an exact Fraction in [0, 1] when ``status`` is defined and
    None otherwise; ``reason`` explains undefined and undecided results.
    """

    measure: str
    value: Optional[Fraction]
    options: Dict[str, Any] = field(default_factory=dict)
    diagnostics: Dict[str, Any] = field(default_factory=dict)
    status: str = DEFINED
    reason: str = ''

    def __post_init__(self):
        if self.status == DEFINED:
            if self.value is None:
                raise ValueError('A defined report needs a value')
            if not 0 <= self.value <= 1:
                raise ValueError(f'Precision {self.value} lies outside [0, 1]')
        elif self.value is not None:
            raise ValueError(f'A {self.status} report carries no value')

    @classmethod
    def undefined(cls, measure: str, reason: str, options=None, diagnostics=None) -> 'PrecisionReport':
        return cls(measure, None, dict(options or {}), dict(diagnostics or {}), UNDEFINED, reason)

    @classmethod
    def undecided(cls, measure: str, reason: str, options=None) -> 'PrecisionReport':
        return cls(measure, None, dict(options or {}), {}, UNDECIDED, reason)

    @property
    def is_defined(self) -> bool:
        return self.status == DEFINED

    def as_float(self) -> Optional[float]:
        return float(self.value) if self.value is not None else None

    @property
    def formatted_value(self) -> str:
        return format_value(self.value) if self.is_defined else self.status

    def to_text(self) -> str:
        """key=value lines, stable across runs for equal reports"""
        lines = [f'measure={self.measure}', f'value={self.formatted_value}', f'status={self.status}']
        if self.value is not None:
            lines.append(f'exact={self.value}')
        if self.reason:
            lines.append(f'reason={self.reason}')
        for key in sorted(self.options):
            lines.append(f'option.{key}={self.options[key]}')
        for key in sorted(self.diagnostics):
            value = self.diagnostics[key]
            if isinstance(value, (list, tuple)):
                for index, item in enumerate(value):
                    lines.append(f'diagnostic.{key}.{index}={_render(item)}')
            else:
                lines.append(f'diagnostic.{key}={_render(value)}')
        return '\n'.join(lines) + '\n'


def _render(value) -> str:
    if isinstance(value, Fraction):
        return f'{value} ({float(value):.4f})'
    if isinstance(value, dict):
        return ' '.join(f'{k}:{_render(value[k])}' for k in sorted(value, key=str))
    if isinstance(value, (set, frozenset)):
        return '{' + ','.join(sorted(str(v) for v in value)) + '}'
    if isinstance(value, (list, tuple)):
        return '[' + ','.join(_render(v) for v in value) + ']'
    return str(value)
