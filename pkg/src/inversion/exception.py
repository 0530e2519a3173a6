from models.exception import C2KitException


class ParityInfeasibleException(C2KitException):
    pass


class DegreeTooLargeException(C2KitException):
    pass


class CountMismatchException(C2KitException):
    pass


class InfeasibleInvariantException(C2KitException):
    """No graph or ecPOG realizes the given invariant"""
    pass


class NonCanonicalInvariantException(C2KitException):
    """The invariant is realizable, but its classes are not the coarsest equitable partition"""
    pass


class OddOrderException(C2KitException):
    pass


class OddColorDegreeException(C2KitException):
    pass


class DegreeSumMismatchException(C2KitException):
    pass


class OddDegreeInColorException(C2KitException):
    pass
