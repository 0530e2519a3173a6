
class C2KitException(Exception):
    pass


class MalformedInputException(C2KitException):

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        location = ''
        if line is not None:
            location = f'line {line}' if column is None else f'line {line}, column {column}'
            location += ': '
        super().__init__(f'{location}{message}')


class LoopEdgeException(MalformedInputException):
    pass


class DuplicateEdgeException(MalformedInputException):
    pass


class IndexOutOfRangeException(MalformedInputException):
    pass


class ArityMismatchException(MalformedInputException):
    pass


class IncompleteEcPogException(C2KitException):
    pass


class MixedOrientationColorException(C2KitException):
    pass


class InconsistentUndirectedColorException(C2KitException):
    pass
