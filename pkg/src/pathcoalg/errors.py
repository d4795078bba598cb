"""Exception hierarchy shared by all modules."""


class PathCoalgError(Exception):
    """Base class for every error raised by the library."""


class UnknownVertex(PathCoalgError, KeyError):
    def __str__(self):
        return f"unknown vertex {self.args[0]!r}"


class UnknownBundle(PathCoalgError, KeyError):
    def __str__(self):
        return f"unknown arrow bundle {self.args[0]!r}"


class InvalidPath(PathCoalgError, ValueError):
    pass


class NotComposable(PathCoalgError, ValueError):
    pass


class NotInShape(PathCoalgError, ValueError):
    pass


class UninstantiatedOmega(PathCoalgError, ValueError):
    """An omega-multiplicity bundle was reached where a finite index set is needed."""


class InfinitePathSet(PathCoalgError, ValueError):
    pass


class TruncationTooSmall(PathCoalgError, ValueError):
    pass


class BeyondTruncation(PathCoalgError, ValueError):
    pass


class ShapeMismatch(PathCoalgError, ValueError):
    pass


class FieldMismatch(PathCoalgError, ValueError):
    pass


class NotAUnit(PathCoalgError, ArithmeticError):
    pass


class NotAComodule(PathCoalgError, ValueError):
    pass


class RepresentationMismatch(PathCoalgError, ValueError):
    pass


class NotHereditary(PathCoalgError, ValueError):
    pass


class MalformedXData(PathCoalgError, ValueError):
    pass
