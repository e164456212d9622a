class CasimodeError(Exception):
    """Base class for every failure raised by the library"""


class DomainError(CasimodeError, ValueError):
    """Argument outside the domain of an operation (pole, non-positive frequency, ...)"""


class QuadratureError(CasimodeError, ArithmeticError):
    """Integration aborted or did not converge"""

    def __init__(self, message: str, result=None, route=None):
        super().__init__(message)
        self.result = result
        self.route = route


class BracketError(CasimodeError, ArithmeticError):
    """A sign-changing bracket could not be established"""

    def __init__(self, message: str, factor=None, interval=None):
        super().__init__(message)
        self.factor = factor
        self.interval = interval
