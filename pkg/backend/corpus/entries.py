"""
Embedded models and logs of the counterexample suite
"""

from dataclasses import dataclass
from typing import Dict, Tuple

MODEL = 'model'
LOG = 'log'


@dataclass(frozen=True)
class CorpusEntry:
    """Named model or log with its text payload"""

    name: str
    kind: str
    payload: str
    provenance: str
    supplementary: bool = False


FIG2_LOOP_WFNET = """\
# choice between a and b, then between c and d, redone through a τ loop
place p0 init=1
place p1
place p2
place p3
place p4
trans a label=a
trans b label=b
trans c label=c
trans d label=d
trans tau_start
trans tau_redo
trans tau_end
arc p0 tau_start
arc tau_start p1
arc p1 a
arc p1 b
arc a p2
arc b p2
arc p2 c
arc p2 d
arc c p3
arc d p3
arc p3 tau_redo
arc tau_redo p1
arc p3 tau_end
arc tau_end p4
final p4=1
"""

FIG4_MODEL = """\
place p1 init=1
place p2
place p3
trans a label=a
trans b label=b
trans c label=c
trans d label=d
arc p1 a
arc a p3
arc p3 b
arc b p1
arc p3 c
arc c p2
arc p3 d
arc d p2
final p2=1
"""

FIG5A_FLOWER = """\
place p1 init=1
place p2
trans a label=a
trans b label=b
trans c label=c
trans tau_skip
trans tau_back
arc p1 a
arc a p2
arc p1 b
arc b p2
arc p1 c
arc c p2
arc p1 tau_skip
arc tau_skip p2
arc p2 tau_back
arc tau_back p1
final p2=1
"""

FIG5B_FLOWER_TAU = """\
# c, b, a in a fixed order, each skippable, repeated through a τ loop
place p1 init=1
place p2
place p3
place p4
trans c label=c
trans tau_c
trans b label=b
trans tau_b
trans a label=a
trans tau_a
trans tau_loop
arc p1 c
arc c p2
arc p1 tau_c
arc tau_c p2
arc p2 b
arc b p3
arc p2 tau_b
arc tau_b p3
arc p3 a
arc a p4
arc p3 tau_a
arc tau_a p4
arc p4 tau_loop
arc tau_loop p1
final p4=1
"""

FIG5C_CONSTRAINED = """\
place p1 init=1
place p2
place p3
trans a label=a
trans b label=b
trans c label=c
trans tau_skip
trans tau_back
arc p1 a
arc a p2
arc p2 b
arc b p3
arc p2 c
arc c p3
arc p2 tau_skip
arc tau_skip p3
arc p3 tau_back
arc tau_back p2
final p3=1
"""

_FIG6_BODY = """\
place p1 init=1
place p2
place p3
place p4
place p5
place p6
place p7
place p8
place p9
place p10
trans a label=a
trans b label=b
trans tau_split
trans c label=c
trans tau_c
trans d label=d
trans tau_d
trans e label=e
trans tau_e
trans tau_join
trans f label=f
trans g label=g
arc p1 a
arc a p2
arc p1 b
arc b p2
arc p2 tau_split
arc tau_split p3
arc tau_split p5
arc tau_split p6
arc p3 d
arc d p4
arc p4 tau_d
arc tau_d p3
arc p5 c
arc c p7
arc p7 tau_c
arc tau_c p5
arc p6 e
arc e p8
arc p8 tau_e
arc tau_e p6
arc p4 tau_join
arc p7 tau_join
arc p8 tau_join
arc tau_join p9
arc p9 f
arc f p10
arc p9 g
arc g p10
final p10=1
"""

FIG6_M1 = _FIG6_BODY

FIG6_M2 = _FIG6_BODY + """\
# long-term dependencies: a decides f, b decides g
place p11
place p12
arc a p11
arc p11 f
arc b p12
arc p12 g
"""

FIG6_LOG_TEMPLATE = """\
1x a,c,d,e,f
1x b,d,c,e,g
1x a,e,c,d,d,f
1x b,c,c,e,d,g
1x a,d,e,c,e,f
1x b,e,d,c,g
1x a,c,e,d,f
1x b,d,d,e,c,g
1x a,e,d,c,c,f
1x b,c,e,d,e,g
"""

FIG7A_LOOP = """\
place p1 init=1
place p2
trans a label=a
trans b label=b
arc p1 a
arc a p1
arc p1 b
arc b p2
final p2=1
"""

FIG7B_UNROLLED = """\
place p1 init=1
place p2
place p3
place p4
trans a1 label=a
trans a2 label=a
trans b1 label=b
trans b2 label=b
trans b3 label=b
arc p1 a1
arc a1 p2
arc p2 a2
arc a2 p3
arc p1 b1
arc b1 p4
arc p2 b2
arc b2 p4
arc p3 b3
arc b3 p4
final p4=1
"""

FIG7B_SPLIT = """\
# same language as fig7b_unrolled; the last b exit is routed through a τ
place p1 init=1
place p2
place p3
place p4
place p5
trans a1 label=a
trans a2 label=a
trans b1 label=b
trans b2 label=b
trans b3 label=b
trans tau_join
arc p1 a1
arc a1 p2
arc p2 a2
arc a2 p3
arc p1 b1
arc b1 p4
arc p2 b2
arc b2 p4
arc p3 b3
arc b3 p5
arc p5 tau_join
arc tau_join p4
final p4=1
"""

FIG8_FLOWER = """\
place p1 init=1
trans a label=a
trans b label=b
trans c label=c
arc p1 a
arc a p1
arc p1 b
arc b p1
arc p1 c
arc c p1
final p1=1
"""

SEQ_AB = """\
place start init=1
place middle
place end
trans a label=a
trans b label=b
arc start a
arc a middle
arc middle b
arc b end
final end=1
"""

SEQ_ABC = """\
place start init=1
place p1
place p2
place end
trans a label=a
trans b label=b
trans c label=c
arc start a
arc a p1
arc p1 b
arc b p2
arc p2 c
arc c end
final end=1
"""

DUP_LABEL_AB = """\
# two parallel a-then-b paths; same language as seq_ab
place start init=1
place p1
place p2
place end
trans a1 label=a
trans a2 label=a
trans b1 label=b
trans b2 label=b
arc start a1
arc a1 p1
arc p1 b1
arc b1 end
arc start a2
arc a2 p2
arc p2 b2
arc b2 end
final end=1
"""

DUP_LABEL_CHOICE = """\
# two a-transitions; only the second path can also finish with c
place start init=1
place p1
place p2
place end
trans a1 label=a
trans a2 label=a
trans b1 label=b
trans b2 label=b
trans c2 label=c
arc start a1
arc a1 p1
arc p1 b1
arc b1 end
arc start a2
arc a2 p2
arc p2 b2
arc b2 end
arc p2 c2
arc c2 end
final end=1
"""

_LTD_COMMON = """\
place p0 init=1
place p1
place p2
place pf
place pz init=1
trans a label=a
trans b label=b
trans e1 label=e
trans e2 label=e
trans c label=c
trans d label=d
trans z label=z
arc p0 a
arc a p1
arc p0 b
arc b p1
arc p1 e1
arc e1 p2
arc p2 e2
arc e2 p2
arc p2 c
arc c pf
arc p2 d
arc d pf
arc pz z
arc z pz
final pf=1,pz=1
"""

LTD_LOOSE = _LTD_COMMON

LTD_TIGHT = _LTD_COMMON + """\
# a enables only c at the end, b only d
place qa
place qb
arc a qa
arc qa c
arc b qb
arc qb d
"""

LTD_LOG = """\
1x a,e,e,e,e,e,c
1x b,e,e,e,e,e,d
"""

FIG4_LOG_L2 = """\
1x a,c
1x a,d
1x a,b,a,b,a,b,a,b,a,c
"""

FIG4_LOG_L2_PRINTED = """\
2x a,c
1x a,d
1x a,b,a,b,a,b,a,b,a,b,a,c
"""

FIG8_LOG_L1 = """\
1x b,a,c
1x a,a,c
"""

FIG8_LOG_L2 = FIG8_LOG_L1 + """\
1x a,b,b,b,b,b,b,b,b,b,b,b,b,b,b,b
1x b,a,a,a,a,a,a,a,a,a,a,a,a,a,a,a
"""


ENTRIES: Tuple[CorpusEntry, ...] = (
    CorpusEntry('fig2_loop_wfnet', MODEL, FIG2_LOOP_WFNET, 'WF-net looping over (a|b)(c|d)'),
    CorpusEntry('fig4_model', MODEL, FIG4_MODEL, 'choice-loop model: a (b a)* (c|d)'),
    CorpusEntry('fig4_log_l1', LOG, '1x a,c\n1x a,d\n', 'L1 for the choice-loop model'),
    CorpusEntry('fig4_log_l2', LOG, FIG4_LOG_L2, 'L2 for the choice-loop model, calibrated to 20/28'),
    CorpusEntry('fig5a_flower', MODEL, FIG5A_FLOWER, 'flower over {a,b,c} with τ skip and τ back'),
    CorpusEntry('fig5b_flower_tau', MODEL, FIG5B_FLOWER_TAU, 'flower over {a,b,c} as skippable sequence'),
    CorpusEntry('fig5c_constrained', MODEL, FIG5C_CONSTRAINED, 'a followed by any sequence over {b,c}'),
    CorpusEntry('fig5_log', LOG, '1x a,b,c\n', 'single trace ⟨a,b,c⟩'),
    CorpusEntry('fig6_m1', MODEL, FIG6_M1, 'a|b, three parallel loops c d e, f|g'),
    CorpusEntry('fig6_m2', MODEL, FIG6_M2, 'fig6_m1 with the a→f and b→g dependencies'),
    CorpusEntry('fig6_log_template', LOG, FIG6_LOG_TEMPLATE, 'ten traces fitting fig6_m2'),
    CorpusEntry('fig7a_loop', MODEL, FIG7A_LOOP, 'length-one loop on a, then b'),
    CorpusEntry('fig7b_unrolled', MODEL, FIG7B_UNROLLED, 'loop on a unrolled twice'),
    CorpusEntry('fig7_log', LOG, '1x a,b\n', 'single trace ⟨a,b⟩'),
    CorpusEntry('fig8_flower', MODEL, FIG8_FLOWER, 'single-place flower over {a,b,c}'),
    CorpusEntry('fig8_log_l1', LOG, FIG8_LOG_L1, 'L1 for the flower'),
    CorpusEntry('fig8_log_l2', LOG, FIG8_LOG_L2, 'L1 plus two long traces'),
    CorpusEntry('sec2_example_log', LOG, '2x a,b,c\n3x b,a,c\n', 'introductory example log'),
    # witness instances
    CorpusEntry('seq_ab', MODEL, SEQ_AB, 'sequence a, b', True),
    CorpusEntry('seq_abc', MODEL, SEQ_ABC, 'sequence a, b, c', True),
    CorpusEntry('dup_label_ab', MODEL, DUP_LABEL_AB, 'seq_ab with duplicated paths', True),
    CorpusEntry('dup_label_choice', MODEL, DUP_LABEL_CHOICE, 'duplicate a with diverging continuations', True),
    CorpusEntry('fig7b_split', MODEL, FIG7B_SPLIT, 'fig7b_unrolled re-encoded with a τ', True),
    CorpusEntry('ltd_tight', MODEL, LTD_TIGHT, 'long-term dependency a→c, b→d with a free z loop', True),
    CorpusEntry('ltd_loose', MODEL, LTD_LOOSE, 'ltd_tight without the dependency', True),
    CorpusEntry('fig4_log_partial', LOG, '1x a,c\n1x a\n', 'non-fitting ⟨a⟩ with two optimal repairs', True),
    CorpusEntry('fig4_log_l2_printed', LOG, FIG4_LOG_L2_PRINTED, 'L2 with the five-iteration trace', True),
    CorpusEntry('seq_ab_log', LOG, '1x a,b\n', 'single trace ⟨a,b⟩', True),
    CorpusEntry('seq_abc_log', LOG, '1x a,b,c\n', 'single trace ⟨a,b,c⟩', True),
    CorpusEntry('fig2_log_a', LOG, '1x a,c\n', 'fits fig2_loop_wfnet', True),
    CorpusEntry('fig2_log_b', LOG, '1x a,c\n1x b,d,a,c\n', 'fits fig2_loop_wfnet', True),
    CorpusEntry('fig2_log_c', LOG, '2x b,c,a,d,b,c\n1x a,d\n', 'fits fig2_loop_wfnet', True),
    CorpusEntry('ltd_log', LOG, LTD_LOG, 'fits ltd_tight and ltd_loose', True),
)

BY_NAME: Dict[str, CorpusEntry] = {entry.name: entry for entry in ENTRIES}
