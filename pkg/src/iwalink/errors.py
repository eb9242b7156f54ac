"""Exception hierarchy.  Every error carries a stable string ``code`` used by the CLI."""


class IwalinkError(Exception):
    code = "error"


class VariableMismatch(IwalinkError, ValueError):
    code = "variable_mismatch"


class NotDivisible(IwalinkError, ArithmeticError):
    code = "not_divisible"


class ZeroDirection(IwalinkError, ValueError):
    code = "zero_direction"


class InvalidDirection(IwalinkError, ValueError):
    code = "invalid_direction"


class BothZero(IwalinkError, ValueError):
    code = "both_zero"


class ZeroPolynomial(IwalinkError, ValueError):
    code = "zero_polynomial"


class NotPrime(IwalinkError, ValueError):
    code = "not_prime"


class NotAKnotPolynomial(IwalinkError, ValueError):
    code = "not_a_knot_polynomial"


class BaseUnavailable(IwalinkError):
    code = "base_unavailable"


class StabilizationFailure(IwalinkError, RuntimeError):
    code = "stabilization_failure"


class CertificateFailure(IwalinkError, RuntimeError):
    code = "certificate_failure"


class InvalidCertificate(IwalinkError, ValueError):
    code = "invalid_certificate"


class Unsupported(IwalinkError):
    code = "unsupported"


class ZeroParameter(IwalinkError, ValueError):
    code = "zero_parameter"


class PolySyntaxError(IwalinkError, ValueError):
    code = "syntax_error"

    def __init__(self, message, offset):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class ArityError(IwalinkError, ValueError):
    code = "arity_error"
