"""
Exception hierarchy shared by the conformance apps
"""

from django.core.exceptions import ValidationError
from django.utils.translation import gettext as _


class PrecisionError(Exception):
    """Base class for every toolkit failure that is not a parse error"""


class InvalidMarkingError(PrecisionError):
    """A marking references a place the net does not declare"""


class NotEnabledError(PrecisionError):
    """A transition was fired at a marking that does not enable it"""


class ExplorationOverflowError(PrecisionError):
    """State-space exploration exceeded its state cap"""

    def __init__(self, state_cap: int):
        self.state_cap = state_cap
        super().__init__(f'State space exceeds the cap of {state_cap} markings')


class UnboundedNetError(PrecisionError):
    """A place exceeded the token bound during exploration"""

    def __init__(self, place: str, bound: int):
        self.place = place
        self.bound = bound
        super().__init__(f'Place {place} exceeds the bound of {bound} tokens')


class UndecidedError(PrecisionError):
    """A search budget ran out before an answer was established"""


class NoAlignmentError(PrecisionError):
    """No final marking is reachable, so no alignment exists"""


class EnumerationOverflowError(PrecisionError):
    """More optimal alignments exist than the enumeration cap allows"""

    def __init__(self, cap: int):
        self.cap = cap
        super().__init__(f'More than {cap} optimal alignments')


class MeasurePreconditionError(PrecisionError):
    """The inputs violate a measure's precondition (fitting, WF shape, ...)"""


class UnknownCorpusEntryError(PrecisionError, KeyError):
    """Requested corpus name is not embedded"""

    def __str__(self):
        return f'Unknown corpus entry: {self.args[0]}'


class FormatParseError(ValidationError):
    """
    Parse error for the text formats; the offending line travels in params
    """

    def __init__(self, message, lineno, code='invalid'):
        self.lineno = lineno
        super().__init__(
            _('Line %(lineno)d: %(message)s'),
            code=code,
            params={'lineno': lineno, 'message': message},
        )

    def __str__(self):
        return self.messages[0]


class InvalidNetError(PrecisionError):
    """Net structure breaks an invariant (overlapping ids, dangling arcs, ...)"""
