"""Exception hierarchy shared by every module of the package."""


class HopfError(Exception):
    """Base class for all errors raised by hopfbiprod."""


class CategoryMismatch(HopfError, ValueError):
    pass


class DomainMismatch(HopfError, ValueError):
    pass


class ShapeMismatch(HopfError, ValueError):
    pass


class NegationUnsupported(HopfError, TypeError):
    pass


class IllDefinedMorphism(HopfError, ValueError):
    """An integer matrix does not describe a group homomorphism."""


class NotInvertible(HopfError):
    pass


class PreconditionViolated(HopfError):
    pass


class SearchSpaceTooLarge(HopfError):
    def __init__(self, size, cap):
        super().__init__(f"search space of size {size} exceeds cap {cap}")
        self.size = size
        self.cap = cap


class InvertorNotFound(HopfError):
    """Bounded search exhausted the hom-set without finding an invertor."""

    def __init__(self, obj, bound):
        super().__init__(f"no fusion invertor at {obj} with entry bound {bound}")
        self.obj = obj
        self.bound = bound


class ParseError(HopfError, ValueError):
    def __init__(self, message, *, field=None, line=None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field {field!r}")
        prefix = f"{', '.join(where)}: " if where else ""
        super().__init__(prefix + message)
        self.field = field
        self.line = line


class SemanticError(HopfError, ValueError):
    def __init__(self, message, *, field=None):
        super().__init__(f"field {field!r}: {message}" if field else message)
        self.field = field
