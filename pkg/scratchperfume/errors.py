"""Exceptions raised while loading, building and aggregating projects.

Missing or unreadable files surface as the built-in ``OSError`` family;
everything that is wrong with the *content* of a project or a results
table derives from :class:`PerfumeError`.
"""


class PerfumeError(Exception):
    """Base class of all errors raised by scratchperfume"""


class FormatError(PerfumeError, ValueError):
    """The input is not a Scratch 3 project (or not a valid results table)."""


class SchemaError(PerfumeError, ValueError):
    """The project parses but violates the sb3 block schema."""


class CycleError(PerfumeError, ValueError):
    """A ``next`` or substack chain revisits a block."""


class DegenerateInputError(PerfumeError, ValueError):
    """A correlation is undefined for the given samples."""


class JoinWarning(UserWarning):
    """A results row and the analysed projects could not be matched."""
