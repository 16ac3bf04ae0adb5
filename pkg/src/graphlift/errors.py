"""Exception hierarchy shared by the graphlift modules."""


class GraphliftError(Exception):
    """Base class for all errors raised by graphlift."""


class InputError(GraphliftError, ValueError):
    """Malformed or inconsistent input. The CLI maps these to exit code 2."""


class ParseError(InputError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)


class EndpointMismatchError(InputError):
    def __init__(self, edge, message):
        self.edge = edge
        super().__init__(f"endpoint mismatch on edge {edge!r}: {message}")


class ShapeError(InputError):
    """A 3-CNF spec does not have the shape the realisation construction needs."""


class ResourceCapError(GraphliftError):
    """A configured size limit would be exceeded. Exit code 3 in the CLI."""


class GammaUndefinedError(GraphliftError):
    """The pair covering is nontrivial, so the transitivity formula does not exist."""


class InadmissibleError(GraphliftError, ValueError):
    pass


class InternalConsistencyError(GraphliftError, AssertionError):
    """A construction produced an object violating a proven invariant."""
