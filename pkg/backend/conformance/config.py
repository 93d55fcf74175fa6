"""
Run configuration shared by the management commands
"""

import logging
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Dict, Optional

from django.core.exceptions import ValidationError

from corpus.loaders import get_log, get_model
from eventlog.formats import parse_log
from eventlog.logs import EventLog
from petri.dsl import parse_net
from petri.nets import AcceptingPetriNet
from precision_core.exceptions import PrecisionError

logger = logging.getLogger(__name__)

CORPUS_PREFIX = 'corpus:'
TEXT = 'text'
RECORDS = 'records'
FORMATS = (TEXT, RECORDS)

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_INCONCLUSIVE = 2
EXIT_VIOLATED = 3

# measure options accepted on the command line
OPTION_NAMES = ('k', 'max_window', 'seed', 'weighting', 'tiebreak', 'mode', 'sample_rate',
                'trace_cap', 'state_cap', 'cap')


class InputError(Exception):
    """An input reference that cannot be loaded"""


@dataclass
class RunConfig:
    """
    Everything needed to re-run one command

    Model and log slots hold either a file path or ``corpus:<name>``.
    """

    command: str
    measure: Optional[str] = None
    models: Dict[str, str] = field(default_factory=dict)
    logs: Dict[str, str] = field(default_factory=dict)
    options: Dict = field(default_factory=dict)
    output_format: str = TEXT

    @classmethod
    def from_options(cls, command: str, parsed: Dict, models=(), logs=()) -> 'RunConfig':
        """Collect slots and measure options from parsed command arguments"""
        return cls(
            command=command,
            measure=parsed.get('measure'),
            models={slot: parsed[slot] for slot in models if parsed.get(slot)},
            logs={slot: parsed[slot] for slot in logs if parsed.get(slot)},
            options={k: parsed[k] for k in OPTION_NAMES if parsed.get(k) is not None},
            output_format=parsed.get('format') or TEXT,
        )

    def require(self, *slots: str):
        missing = [s for s in slots if s not in self.models and s not in self.logs]
        if missing:
            raise InputError(f'missing input: {", ".join("--" + s for s in missing)}')

    def model(self, slot: str = 'model') -> AcceptingPetriNet:
        return load_model(self.models[slot])

    def log(self, slot: str = 'log') -> EventLog:
        return load_log(self.logs[slot])

    def as_dict(self) -> Dict:
        return asdict(self)


def _read(reference: str) -> str:
    path = Path(reference)
    if not path.is_file():
        raise InputError(f'no such file: {reference}')
    return path.read_text(encoding='utf-8')


def _corpus_name(reference: str) -> Optional[str]:
    if reference.startswith(CORPUS_PREFIX):
        return reference[len(CORPUS_PREFIX):]
    return None


def load_model(reference: str) -> AcceptingPetriNet:
    """Parse a net file or fetch a corpus model"""
    name = _corpus_name(reference)
    try:
        if name is not None:
            return get_model(name)
        return parse_net(_read(reference), name=Path(reference).stem)
    except (ValidationError, PrecisionError) as exc:
        logger.warning(f"Cannot load model {reference}: {exc}")
        raise InputError(f'{reference}: {exc}')


def load_log(reference: str) -> EventLog:
    """Parse a log file or fetch a corpus log"""
    name = _corpus_name(reference)
    try:
        if name is not None:
            return get_log(name)
        return parse_log(_read(reference))
    except (ValidationError, PrecisionError) as exc:
        logger.warning(f"Cannot load log {reference}: {exc}")
        raise InputError(f'{reference}: {exc}')
