"""
Exception hierarchy for the reducibility engine.

Every error raised by the library derives from HierarchyError so that
management commands and API views can turn it into a usage failure.
"""


class HierarchyError(Exception):
    """Base class for all engine errors"""


class TermTypeError(HierarchyError, TypeError):
    def __init__(self, message, subterm=None):
        super().__init__(message)
        self.subterm = subterm


class UnboundVariable(HierarchyError, KeyError):
    def __init__(self, name):
        super().__init__(name)
        self.name = name

    def __str__(self):
        return f"unbound variable: {self.name}"


class NameClash(HierarchyError):
    pass


class ContextMismatch(HierarchyError):
    pass


class SubstitutionError(HierarchyError):
    pass


class Uninhabited(HierarchyError):
    pass


class ParseError(HierarchyError, ValueError):
    def __init__(self, message, line=None, column=None):
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
        self.line = line
        self.column = column


class BadIndex(HierarchyError, ValueError):
    pass


# Synthesis preconditions

class NotSubcontext(HierarchyError):
    pass


class BadPermutation(HierarchyError):
    pass


class NotLarge(HierarchyError):
    pass


class NotAtomic(HierarchyError):
    pass


class TargetMismatch(HierarchyError):
    pass


class NotDerivative(HierarchyError):
    pass


class SideConditionFails(HierarchyError):
    pass


class NotLE(HierarchyError):
    pass


class NotReducible(HierarchyError):
    pass


class CertificateError(HierarchyError, ValueError):
    pass
