class SylabError(Exception):
    """Base class for errors raised by this package."""


class ResourceLimit(SylabError):
    """A configured size bound was exceeded; the computation was not attempted."""


class MembershipError(SylabError, ValueError):
    pass


class HypothesisError(SylabError):
    """Preconditions of a check do not hold for the given input."""


class GroupFileError(SylabError, ValueError):
    def __init__(self, message, line=None, path=None):
        self.line = line
        self.path = path
        where = ""
        if path is not None:
            where += f"{path}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {message}".strip())
