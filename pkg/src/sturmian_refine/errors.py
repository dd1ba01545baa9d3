"""Exception hierarchy shared by all modules.

The CLI maps these onto exit statuses: :class:`InputError` and its
subclasses to 2, :class:`ResourceCapError` to 3.
"""


class SturmError(Exception):
    """Base class for all library errors."""


class InputError(SturmError, ValueError):
    """Malformed or inconsistent input."""


class AlphaMismatchError(InputError):
    pass


class DuplicateCutError(InputError):
    pass


class TrivialPartitionError(InputError):
    """A theorem operation received a one-set partition."""


class NotSturmianMeasurableError(InputError):
    """Some cutpoint is not in the backward orbit of 0."""


class HypothesisError(InputError):
    """Preconditions of a verification routine do not hold."""


class NotCodedError(InputError):
    """A tower level straddles a boundary of the partition."""


class LanguageError(InputError):
    """A word is not in the language of the model."""


class ResourceCapError(SturmError):
    """A configured size limit would be exceeded."""


class TableTooShallowError(ResourceCapError):
    pass


class VerificationFailure(SturmError):
    """A checked mathematical statement came out false."""
