"""Exception hierarchy shared across the package."""


class InqmtError(Exception):
    pass


class ParseError(InqmtError):
    """Syntax error with a character position into the input text."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.message = message
        self.pos = pos


class MixedSortError(InqmtError):
    """A sequent whose two sides belong to different sorts."""


class SizeCapError(InqmtError):
    """A variable context too large for exhaustive enumeration."""


class NotClassicalError(InqmtError):
    """A classical-only operation applied to a formula containing \\/."""


class UnsupportedPatternError(InqmtError):
    """A principal cut whose introduction shape has no reduction figure."""
