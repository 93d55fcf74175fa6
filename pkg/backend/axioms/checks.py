"""
The five precision axioms as executable checks on concrete instances

Every check first establishes the axiom's side conditions with the automata
layer, then evaluates the measure. Instance checks can refute an axiom but
never prove it, hence the verdict ``satisfied-on-instances``.
"""

import functools
import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Union

from django.conf import settings

from automata.dfa import are_equivalent, is_subset, is_universal, universal_dfa
from eventlog.logs import EventLog, unfitting_traces
from measures.reports import PrecisionReport
from petri.language import language_dfa
from petri.nets import AcceptingPetriNet
from precision_core.exceptions import (ExplorationOverflowError, MeasurePreconditionError, NoAlignmentError,
                                       UnboundedNetError, UndecidedError)

from .handles import MeasureHandle, get_handle
from .reports import HYPOTHESIS_NOT_MET, SATISFIED, UNDECIDED, VIOLATED, AxiomReport
from .statistics import welch

logger = logging.getLogger(__name__)

Measure = Union[str, MeasureHandle]


class Inconclusive(Exception):
    """Raised inside a check when no verdict beyond ``verdict`` is possible"""

    def __init__(self, verdict: str, reason: str, evidence: Dict = None):
        super().__init__(reason)
        self.verdict = verdict
        self.reason = reason
        self.evidence = evidence or {}


def default_seeds() -> List[int]:
    return list(range(settings.PRECISION_SEED_RUNS))


def _handle(measure: Measure) -> MeasureHandle:
    return measure if isinstance(measure, MeasureHandle) else get_handle(measure)


def guarded(axiom: str):
    """Turn inconclusive outcomes of a check into reports instead of exceptions"""
    def decorator(check):
        @functools.wraps(check)
        def wrapper(measure, *args, **kwargs):
            handle = _handle(measure)
            try:
                report = check(handle, *args, **kwargs)
            except Inconclusive as exc:
                report = AxiomReport(axiom, handle.name, exc.verdict, evidence=exc.evidence, reason=exc.reason)
            except MeasurePreconditionError as exc:
                report = AxiomReport(axiom, handle.name, HYPOTHESIS_NOT_MET, reason=f'measure precondition: {exc}')
            except NoAlignmentError as exc:
                report = AxiomReport(axiom, handle.name, HYPOTHESIS_NOT_MET, reason=f'no alignment: {exc}')
            except (UndecidedError, UnboundedNetError, ExplorationOverflowError) as exc:
                report = AxiomReport(axiom, handle.name, UNDECIDED, reason=str(exc))
            logger.info(f"{axiom} for {handle.name}: {report.verdict}")
            return report
        return wrapper
    return decorator


@dataclass
class Batch:
    """Reports of one (log, model) evaluation; several when seeds vary"""

    reports: List[PrecisionReport]
    seeds: Optional[List[int]]

    @property
    def values(self):
        return [r.value for r in self.reports]

    @property
    def stochastic(self) -> bool:
        return self.seeds is not None

    def summary(self):
        return self.values if self.stochastic else self.values[0]


def run_batch(handle: MeasureHandle, log: EventLog, model: AcceptingPetriNet, options: Dict,
              seeds: Optional[Iterable[int]] = None) -> Batch:
    if handle.is_stochastic(options):
        seeds = list(seeds) if seeds is not None else default_seeds()
        reports = [handle.run(log, model, options, seed) for seed in seeds]
    else:
        seeds = None
        reports = [handle.run(log, model, options)]
    for report in reports:
        if not report.is_defined:
            raise Inconclusive(UNDECIDED, f'{handle.name} is {report.status} on {model}: {report.reason}')
    return Batch(reports, seeds)


def _compare(axiom: str, handle: MeasureHandle, relation: str, lhs: Batch, rhs: Batch,
             witness: Dict, evidence: Dict) -> AxiomReport:
    """
    ``relation`` is the inequality the axiom demands between lhs and rhs:
    ``ge``, ``gt`` or ``eq``. Seed batches are compared with Welch's test
    (``ge``, ``eq``) or by their means (``gt``).
    """
    witness = dict(witness, values={'lhs': lhs.summary(), 'rhs': rhs.summary()})
    if lhs.stochastic:
        witness['seeds'] = lhs.seeds
        statistic = welch([float(v) for v in lhs.values], [float(v) for v in rhs.values])
        witness['welch'] = statistic.as_dict()
        broken = {
            'ge': statistic.a_less,
            'gt': statistic.mean_a <= statistic.mean_b,
            'eq': statistic.differ,
        }[relation]
    else:
        left, right = lhs.values[0], rhs.values[0]
        broken = {'ge': left < right, 'gt': left <= right, 'eq': left != right}[relation]
    verdict = VIOLATED if broken else SATISFIED
    return AxiomReport(axiom, handle.name, verdict, witness, evidence)


@guarded('A1')
def check_a1(measure: Measure, log: EventLog, model: AcceptingPetriNet, runs: int = None,
             seeds: Iterable[int] = None, options: Dict = None) -> AxiomReport:
    """
    Repeated evaluation must give one defined value. Seeded options vary the
    seed per run to expose arbitrary internal choices.
    """
    handle, options = measure, dict(options or {})
    stochastic = handle.is_stochastic(options)
    if seeds is not None:
        seeds = list(seeds)
    elif stochastic:
        seeds = list(range(runs)) if runs else default_seeds()
    runs = len(seeds) if stochastic else (runs or 5)
    if runs < 2:
        raise ValueError('A1 needs at least two runs')

    reports = [handle.run(log, model, options, seeds[i] if stochastic else None) for i in range(runs)]
    witness = {'model': str(model), 'log': str(log), 'options': options}
    if stochastic:
        witness['seeds'] = seeds
    for index, report in enumerate(reports):
        if report.status == 'undecided':
            raise Inconclusive(UNDECIDED, f'run {index} undecided: {report.reason}')
        if not report.is_defined:
            witness['values'] = {f'run {index}': report.status}
            return AxiomReport('A1', handle.name, VIOLATED, witness,
                               reason=f'partial function: {report.reason}')
    first = reports[0]
    for index, report in enumerate(reports[1:], start=1):
        if report.value != first.value:
            labels = (f'seed {seeds[0]}', f'seed {seeds[index]}') if stochastic else ('run 0', f'run {index}')
            witness['values'] = {labels[0]: first.value, labels[1]: report.value}
            return AxiomReport('A1', handle.name, VIOLATED, witness, reason='evaluations differ')
    witness['values'] = {'all runs': first.value}
    return AxiomReport('A1', handle.name, SATISFIED, witness)


@guarded('A2')
def check_a2(measure: Measure, log: EventLog, m1: AcceptingPetriNet, m2: AcceptingPetriNet,
             options: Dict = None, seeds: Iterable[int] = None) -> AxiomReport:
    """L̃ ⊆ L(m1) ⊆ L(m2) implies prec(L, m1) ≥ prec(L, m2)"""
    handle, options = measure, dict(options or {})
    misfits = unfitting_traces(log, m1)
    if misfits:
        raise Inconclusive(HYPOTHESIS_NOT_MET, f'log does not fit {m1}', {'unfitting_trace': str(misfits[0])})
    inclusion = is_subset(language_dfa(m1), language_dfa(m2))
    if not inclusion:
        raise Inconclusive(HYPOTHESIS_NOT_MET, f'L({m1}) is not included in L({m2})',
                           {'counterexample': '⟨' + ','.join(inclusion.witness) + '⟩'})
    evidence = {'log_fits_m1': True, 'm1_subset_m2': True}
    witness = {'m1': str(m1), 'm2': str(m2), 'log': str(log), 'options': options}
    lhs = run_batch(handle, log, m1, options, seeds)
    rhs = run_batch(handle, log, m2, options, seeds)
    return _compare('A2', handle, 'ge', lhs, rhs, witness, evidence)


@guarded('A3')
def check_a3(measure: Measure, log: EventLog, model: AcceptingPetriNet,
             alphabet: Iterable[str] = None, options: Dict = None,
             seeds: Iterable[int] = None) -> AxiomReport:
    """L(model) ⊂ Σ* implies prec(L, model) > prec(L, flower over Σ)"""
    handle, options = measure, dict(options or {})
    alphabet = frozenset(alphabet) if alphabet else model.activities | log.alphabet
    flower = handle.flower(alphabet)
    dfa = language_dfa(model)
    inclusion = is_subset(dfa, universal_dfa(alphabet))
    if not inclusion:
        raise Inconclusive(HYPOTHESIS_NOT_MET, f'L({model}) uses activities outside the alphabet',
                           {'counterexample': '⟨' + ','.join(inclusion.witness) + '⟩'})
    if is_universal(dfa, alphabet):
        raise Inconclusive(HYPOTHESIS_NOT_MET, f'L({model}) is already universal over the alphabet')
    evidence = {
        'model_strict_subset': True,
        'flower_universal': is_universal(language_dfa(flower), alphabet),
    }
    witness = {'model': str(model), 'flower': str(flower), 'log': str(log), 'options': options}
    lhs = run_batch(handle, log, model, options, seeds)
    rhs = run_batch(handle, log, flower, options, seeds)
    return _compare('A3', handle, 'gt', lhs, rhs, witness, evidence)


@guarded('A4')
def check_a4(measure: Measure, log: EventLog, m1: AcceptingPetriNet, m2: AcceptingPetriNet,
             options: Dict = None, seeds: Iterable[int] = None) -> AxiomReport:
    """L(m1) = L(m2) implies prec(L, m1) = prec(L, m2)"""
    handle, options = measure, dict(options or {})
    if not are_equivalent(language_dfa(m1), language_dfa(m2)):
        raise Inconclusive(HYPOTHESIS_NOT_MET, f'L({m1}) differs from L({m2})')
    witness = {'m1': str(m1), 'm2': str(m2), 'log': str(log), 'options': options}
    lhs = run_batch(handle, log, m1, options, seeds)
    rhs = run_batch(handle, log, m2, options, seeds)
    return _compare('A4', handle, 'eq', lhs, rhs, witness, {'languages_equal': True})


@guarded('A5')
def check_a5(measure: Measure, l1: EventLog, l2: EventLog, model: AcceptingPetriNet,
             options: Dict = None, seeds: Iterable[int] = None) -> AxiomReport:
    """L̃1 ⊆ L̃2 ⊆ L(model) implies prec(L2, model) ≥ prec(L1, model)"""
    handle, options = measure, dict(options or {})
    extra = l1.traces - l2.traces
    if extra:
        raise Inconclusive(HYPOTHESIS_NOT_MET, 'trace set of l1 is not included in that of l2',
                           {'missing_trace': str(min(extra))})
    misfits = unfitting_traces(l2, model)
    if misfits:
        raise Inconclusive(HYPOTHESIS_NOT_MET, f'l2 does not fit {model}', {'unfitting_trace': str(misfits[0])})
    witness = {'model': str(model), 'l1': str(l1), 'l2': str(l2), 'options': options}
    lhs = run_batch(handle, l2, model, options, seeds)
    rhs = run_batch(handle, l1, model, options, seeds)
    return _compare('A5', handle, 'ge', lhs, rhs, witness, {'l1_subset_l2': True, 'l2_fits_model': True})
