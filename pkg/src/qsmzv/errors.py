"""Exception types shared across the package."""


class QSMZVError(Exception):
    pass


class NotInSubalgebra(QSMZVError):
    """Element is not in the subalgebra generated by the alphabet {H, g_k}."""


class NotInH1(QSMZVError):
    """Classical word starts with x."""


class NotDepthOne(QSMZVError):
    pass


class NonzeroConstantTerm(QSMZVError):
    pass


class NonInvertibleConstant(QSMZVError):
    pass


class BadU(QSMZVError):
    pass


class UnknownIdentity(QSMZVError):
    pass


class ArityMismatch(QSMZVError):
    pass


class NotConvergentInput(QSMZVError):
    pass


class MissingSqrtQ(QSMZVError):
    pass


class NotOdd(QSMZVError):
    pass


class DepthTooLarge(QSMZVError):
    pass


class UnknownSuite(QSMZVError):
    pass


class ParseError(QSMZVError):
    def __init__(self, message, offset):
        super().__init__(f"{message} at offset {offset}")
        self.message = message
        self.offset = offset


class ExprTypeError(QSMZVError, TypeError):
    pass
