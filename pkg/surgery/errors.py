"""Error hierarchy shared by every sub-package.

Each error carries the process exit code the CLI maps it to.
"""


class SurgeryError(Exception):
    """Base class for all errors raised by the library"""

    exit_code = 4


class InputError(SurgeryError, ValueError):
    """Malformed or inapplicable input (exit 2)"""

    exit_code = 2


class ComputationInconclusive(SurgeryError):
    """A bounded computation could not reach a verdict (exit 3)"""

    exit_code = 3


class InvariantViolation(SurgeryError, AssertionError):
    """An internal consistency check failed (exit 4)"""

    exit_code = 4


# knot_codec
class MalformedToken(InputError):
    pass


class InconsistentCode(InputError):
    pass


class MalformedTuple(InputError):
    pass


class OrientationInconsistent(InputError):
    pass


class MoveNotApplicable(InputError):
    pass


# group_core / wirtinger_surgery
class UnknownGenerator(InputError):
    pass


class MalformedPresentation(InputError):
    pass


class NegativeParameter(InputError):
    pass


# group_analysis
class SearchTooLarge(ComputationInconclusive):
    pass


# morse_dynamics
class DimensionMismatch(InputError):
    pass


class OutsideDisc(InputError):
    pass


class PointAtPole(InputError):
    pass


class NotOnSphere(InputError):
    pass


class BadAxisSet(InputError):
    pass


class EmptyLevelSet(InputError):
    pass


class InvalidGrid(InputError):
    pass


class InvalidRadius(InputError):
    pass


# cli
class UsageError(InputError):
    pass
