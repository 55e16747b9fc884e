"""Exception hierarchy.

Everything raised for a domain problem derives from :class:`PropHopfError`;
the CLI maps :class:`ParseError` to exit status 2 and the rest to 1.
"""


class PropHopfError(Exception):
    kind = "domain"


class RankError(PropHopfError, ValueError):
    kind = "rank"


class TypeMismatchError(PropHopfError, TypeError):
    kind = "type"


class NonCanonicalError(PropHopfError, ValueError):
    kind = "noncanonical"


class CannotPeelError(PropHopfError, ValueError):
    kind = "peel"


class UnknownSuiteError(PropHopfError, KeyError):
    kind = "suite"

    def __str__(self):
        return str(self.args[0]) if self.args else ""


class ParseError(PropHopfError, ValueError):
    kind = "parse"
