from models.exception import C2KitException


class SignatureCollisionException(C2KitException):
    """Two stable classes ended up with the same signature; the refinement is broken"""
    pass
