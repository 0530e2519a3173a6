from models.exception import C2KitException


class TooLargeException(C2KitException):
    """Input exceeds the size an exhaustive oracle accepts"""
    pass


class DisconnectedBaseException(C2KitException):
    pass


class DegreeTooSmallException(C2KitException):
    pass
