import typing as tp


class DslError(ValueError):
    '''Diagnostic for a malformed SCM description, carrying a 1-based line/column when known.'''
    def __init__(self, message: str, line: tp.Optional[int] = None, column: tp.Optional[int] = None) -> None:
        self.message = message
        self.line = line
        self.column = column
        if line is not None:
            message = '%d:%d: %s' % (line, column or 0, message)
        super().__init__(message)


class DslSyntaxError(DslError):
    def __init__(self, message: str, line=None, column=None, expected: tp.Sequence[str] = ()) -> None:
        self.expected = sorted(set(expected))
        if self.expected:
            message = '%s (expected one of: %s)' % (message, ', '.join(self.expected))
        super().__init__(message, line, column)


class UndeclaredIdentifierError(DslError):
    pass


class CyclicDefinitionError(DslError):
    def __init__(self, cycle: tp.Sequence[str], line=None, column=None) -> None:
        self.cycle = list(cycle)
        super().__init__('cyclic definition among {%s}' % ', '.join(sorted(self.cycle)), line, column)


class ProbabilityError(DslError):
    pass


class DuplicateDeclarationError(DslError):
    pass


class InvalidDeclarationError(DslError):
    pass
