"""
Measures as seen by the axiom harness
"""

from dataclasses import dataclass, field
from typing import Callable, Dict, FrozenSet, Iterable, Optional

from eventlog.logs import EventLog
from measures.registry import MEASURES, evaluate
from measures.reports import PrecisionReport
from petri.nets import AcceptingPetriNet

from .flowers import flower_model, wf_flower_model


def _seeded(options: Dict) -> bool:
    return options.get('mode') == 'sampled' or options.get('tiebreak') == 'seeded-random'


@dataclass(frozen=True)
class MeasureHandle:
    """
    A registered measure together with what the harness needs to know about
    it: which axioms are proven for it, whether a given option set makes it
    stochastic, and which flower model it can evaluate
    """

    name: str
    evaluate: Callable[..., PrecisionReport]
    proven: FrozenSet[str] = frozenset()
    is_stochastic: Callable[[Dict], bool] = field(default=lambda options: False, compare=False)
    flower: Callable[[Iterable[str]], AcceptingPetriNet] = field(default=flower_model, compare=False)

    def run(self, log: EventLog, model: AcceptingPetriNet, options: Dict,
            seed: Optional[int] = None) -> PrecisionReport:
        options = dict(options)
        if seed is not None:
            options['seed'] = seed
        return self.evaluate(log, model, **options)


def _registered(name: str, **kwargs) -> MeasureHandle:
    spec = MEASURES[name]
    return MeasureHandle(
        name=name,
        evaluate=lambda log, model, **options: evaluate(spec.name, log, model, **options),
        **kwargs,
    )


HANDLES: Dict[str, MeasureHandle] = {
    handle.name: handle for handle in (
        _registered('greco'),
        _registered('simple-ba', is_stochastic=_seeded, flower=wf_flower_model),
        _registered('advanced-ba', proven=frozenset({'A4'}), flower=wf_flower_model),
        _registered('etc'),
        _registered('one-align-etc', is_stochastic=_seeded),
        _registered('all-align-etc'),
        _registered('negative-event', is_stochastic=_seeded),
        _registered('pcc'),
    )
}

MATRIX_MEASURES = ('simple-ba', 'advanced-ba', 'one-align-etc', 'negative-event', 'pcc')


def get_handle(name: str) -> MeasureHandle:
    try:
        return HANDLES[name]
    except KeyError:
        raise ValueError(f'Unknown measure {name}; choose from {", ".join(sorted(HANDLES))}')
