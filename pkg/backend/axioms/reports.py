"""
Axiom check outcomes
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict

from measures.reports import format_value

SATISFIED = 'satisfied-on-instances'
VIOLATED = 'violated'
HYPOTHESIS_NOT_MET = 'hypothesis-not-met'
UNDECIDED = 'undecided'
VERDICTS = (SATISFIED, VIOLATED, HYPOTHESIS_NOT_MET, UNDECIDED)

AXIOMS = ('A1', 'A2', 'A3', 'A4', 'A5')


@dataclass(frozen=True)
class AxiomReport:
    """
    Verdict of one axiom on one instance

    ``witness`` names the models, logs, options and seeds that were
    evaluated together with the resulting values; ``evidence`` records how
    the axiom's side conditions were established.
    """

    axiom: str
    measure: str
    verdict: str
    witness: Dict[str, Any] = field(default_factory=dict)
    evidence: Dict[str, Any] = field(default_factory=dict)
    reason: str = ''

    def __post_init__(self):
        if self.axiom not in AXIOMS:
            raise ValueError(f'Unknown axiom {self.axiom}')
        if self.verdict not in VERDICTS:
            raise ValueError(f'Unknown verdict {self.verdict}')
        if self.verdict == VIOLATED and 'values' not in self.witness:
            raise ValueError('A violated verdict needs the witnessing values')

    @property
    def violated(self) -> bool:
        return self.verdict == VIOLATED

    def to_text(self) -> str:
        lines = [f'axiom={self.axiom}', f'measure={self.measure}', f'verdict={self.verdict}']
        if self.reason:
            lines.append(f'reason={self.reason}')
        for key in sorted(self.witness):
            lines.append(f'witness.{key}={_render(self.witness[key])}')
        for key in sorted(self.evidence):
            lines.append(f'evidence.{key}={_render(self.evidence[key])}')
        return '\n'.join(lines) + '\n'


def _render(value) -> str:
    if isinstance(value, dict):
        return ' '.join(f'{k}:{_render(value[k])}' for k in sorted(value, key=str))
    if isinstance(value, (list, tuple)):
        return '[' + ', '.join(_render(v) for v in value) + ']'
    if isinstance(value, Fraction):
        return format_value(value)
    if isinstance(value, float):
        return f'{value:.4f}'
    return str(value)
