"""Exception types shared across the package.

Two broad categories matter to callers (and map to CLI exit codes):
``ValidationError`` for bad inputs or violated preconditions, and
``ComputeError`` for failures arising during otherwise-valid computation.
"""


class FeatforgeError(Exception):
    """Base class for all package errors."""


class ValidationError(FeatforgeError):
    """Bad input: missing files, malformed rows, violated preconditions."""


class ComputeError(FeatforgeError):
    """Failure while processing valid input."""


# --- signal_io ---

class MissingFile(ValidationError):
    pass


class MalformedRow(ValidationError):
    def __init__(self, row, reason):
        self.row = row
        super().__init__(f"manifest row {row}: {reason}")


class SingleClassDataset(ValidationError):
    pass


class NonNumericSample(ValidationError):
    def __init__(self, line, text=""):
        self.line = line
        super().__init__(f"line {line}: not a finite number: {text!r}")


class EmptySignal(ValidationError):
    pass


class WindowTooLong(ValidationError):
    pass


# --- transforms ---

class SignalTooShort(ValidationError):
    pass


class UnknownWavelet(ValidationError):
    pass


class ZeroEnergy(ComputeError):
    pass


class AllCandidatesFailed(ComputeError):
    pass


class LengthMismatch(ValidationError):
    pass


# --- selection ---

class KTooLarge(ValidationError):
    pass


class MethodMismatch(ValidationError):
    pass


# --- classifier ---

class SingleClass(ValidationError):
    pass


class DegenerateMatrix(ValidationError):
    pass


class WidthMismatch(ValidationError):
    pass


class ProtocolCompositionImpossible(ValidationError):
    pass


# --- pipeline / synth ---

class EmptyReport(ValidationError):
    pass


class InvalidSpec(ValidationError):
    pass
