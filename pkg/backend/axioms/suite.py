"""
Curated axiom instances over the corpus and the measure × axiom matrix
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import pandas as pd
from django.conf import settings

from corpus.loaders import get_log, get_model

from .checks import check_a1, check_a2, check_a3, check_a4, check_a5
from .handles import MATRIX_MEASURES, get_handle
from .reports import AXIOMS, AxiomReport

logger = logging.getLogger(__name__)

VIOLATED_CELL = '✗'
PROVEN_CELL = '✓'
UNKNOWN_CELL = '?'

SEEDED_TIEBREAK = {'tiebreak': 'seeded-random'}
SAMPLED = {'mode': 'sampled'}


@dataclass(frozen=True)
class AxiomInstance:
    """
    One axiom check on named corpus entries

    ``logs`` and ``models`` are the positional corpus arguments of the
    check: (log, model) for A1 and A3, (log, m1, m2) for A2 and A4 and
    (l1, l2, model) for A5.
    """

    measure: str
    axiom: str
    logs: Tuple[str, ...]
    models: Tuple[str, ...]
    options: Dict = field(default_factory=dict, hash=False)
    note: str = ''

    @property
    def label(self) -> str:
        extra = ''.join(f' {k}={v}' for k, v in sorted(self.options.items()))
        return f'{self.axiom} {self.measure} logs={",".join(self.logs)} models={",".join(self.models)}{extra}'

    def run(self) -> AxiomReport:
        logs = [get_log(name) for name in self.logs]
        models = [get_model(name) for name in self.models]
        options = dict(self.options)
        if self.axiom == 'A1':
            return check_a1(self.measure, logs[0], models[0], options=options)
        if self.axiom == 'A2':
            return check_a2(self.measure, logs[0], models[0], models[1], options=options)
        if self.axiom == 'A3':
            return check_a3(self.measure, logs[0], models[0], options=options)
        if self.axiom == 'A4':
            return check_a4(self.measure, logs[0], models[0], models[1], options=options)
        return check_a5(self.measure, logs[0], logs[1], models[0], options=options)


INSTANCES: Tuple[AxiomInstance, ...] = (
    AxiomInstance('simple-ba', 'A1', ('seq_ab_log',), ('dup_label_choice',), SEEDED_TIEBREAK,
                  'the replay picks a1 or a2 and sees one or two enabled transitions'),
    AxiomInstance('simple-ba', 'A4', ('seq_ab_log',), ('seq_ab', 'dup_label_ab')),
    AxiomInstance('advanced-ba', 'A1', ('seq_abc_log',), ('seq_abc',),
                  note='no sometimes relations on a sequence'),
    AxiomInstance('advanced-ba', 'A3', ('fig2_log_a',), ('fig2_loop_wfnet',)),
    AxiomInstance('advanced-ba', 'A3', ('fig2_log_b',), ('fig2_loop_wfnet',)),
    AxiomInstance('advanced-ba', 'A3', ('fig2_log_c',), ('fig2_loop_wfnet',)),
    AxiomInstance('advanced-ba', 'A4', ('fig7_log',), ('fig7b_unrolled', 'fig7b_split')),
    AxiomInstance('one-align-etc', 'A1', ('fig4_log_partial',), ('fig4_model',), SEEDED_TIEBREAK,
                  '⟨a⟩ repairs with c or d at equal cost'),
    AxiomInstance('one-align-etc', 'A2', ('fig5_log',), ('fig5c_constrained', 'fig5b_flower_tau')),
    AxiomInstance('one-align-etc', 'A2', ('fig5_log',), ('fig5c_constrained', 'fig5a_flower')),
    AxiomInstance('one-align-etc', 'A4', ('fig5_log',), ('fig5a_flower', 'fig5b_flower_tau')),
    AxiomInstance('one-align-etc', 'A5', ('fig4_log_l1', 'fig4_log_l2'), ('fig4_model',)),
    AxiomInstance('one-align-etc', 'A5', ('fig4_log_l1', 'fig4_log_l2_printed'), ('fig4_model',)),
    AxiomInstance('negative-event', 'A1', ('fig6_log_template',), ('fig6_m1',), SAMPLED),
    AxiomInstance('negative-event', 'A2', ('ltd_log',), ('ltd_tight', 'ltd_loose')),
    AxiomInstance('negative-event', 'A2', ('fig6_log_template',), ('fig6_m2', 'fig6_m1'), SAMPLED),
    AxiomInstance('pcc', 'A2', ('fig7_log',), ('fig7b_unrolled', 'fig7a_loop'), {'k': 2}),
    AxiomInstance('pcc', 'A4', ('fig5_log',), ('fig5a_flower', 'fig5b_flower_tau'), {'k': 2}),
    AxiomInstance('pcc', 'A5', ('fig8_log_l1', 'fig8_log_l2'), ('fig8_flower',), {'k': 3}),
)


def _run(instance: AxiomInstance) -> AxiomReport:
    logger.debug(f"Checking {instance.label}")
    return instance.run()


def run_instances(instances: Sequence[AxiomInstance]) -> List[AxiomReport]:
    """Reports in instance order; checks run on PRECISION_WORKERS threads"""
    workers = settings.PRECISION_WORKERS
    if workers > 1 and len(instances) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_run, instances))
    return [_run(instance) for instance in instances]


def matrix_cell(measure: str, axiom: str, reports: Iterable[AxiomReport]) -> str:
    relevant = [r for r in reports if r.measure == measure and r.axiom == axiom]
    if any(r.violated for r in relevant):
        return VIOLATED_CELL
    if axiom in get_handle(measure).proven:
        return PROVEN_CELL
    return UNKNOWN_CELL


def axiom_matrix(measures: Optional[Iterable[str]] = None,
                 instance_suite: Optional[Sequence[AxiomInstance]] = None
                 ) -> Tuple[pd.DataFrame, List[Tuple[AxiomInstance, AxiomReport]]]:
    """
    Measures × axioms table of ✗ / ✓ / ? cells together with every
    (instance, report) pair it was derived from

    Instance evidence never turns a cell into ✓; only a proven axiom does.
    """
    measures = tuple(measures) if measures else MATRIX_MEASURES
    for name in measures:
        get_handle(name)
    suite = instance_suite if instance_suite is not None else INSTANCES
    selected = [i for i in suite if i.measure in measures]
    reports = run_instances(selected)
    frame = pd.DataFrame(
        [[matrix_cell(m, a, reports) for a in AXIOMS] for m in measures],
        index=pd.Index(measures, name='measure'),
        columns=list(AXIOMS),
    )
    violations = sum(r.violated for r in reports)
    logger.info(f"Axiom matrix over {len(measures)} measures: {len(reports)} checks, {violations} violated")
    return frame, list(zip(selected, reports))


def render_matrix(frame: pd.DataFrame) -> str:
    """Aligned text table; one row per measure"""
    width = max(len(str(m)) for m in frame.index)
    lines = [' ' * width + '  ' + '  '.join(frame.columns)]
    for measure, row in frame.iterrows():
        cells = '  '.join(f'{row[a]:<2}' for a in frame.columns)
        lines.append(f'{measure:<{width}}  {cells}'.rstrip())
    return '\n'.join(lines) + '\n'
