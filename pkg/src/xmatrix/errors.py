"""Exception hierarchy. Every index carried by an exception is 1-based."""


class XMatrixError(Exception):
    """Base class for all library errors."""


class DimensionError(XMatrixError, ValueError):
    pass


class FieldError(XMatrixError, TypeError):
    """Operands live in different field modes, or the op needs the other one."""


class InvalidScalar(XMatrixError, ValueError):
    pass


class NotXShaped(XMatrixError, ValueError):
    def __init__(self, i, j, value):
        self.position = (i, j)
        self.value = value
        super().__init__(f"nonzero entry {value!r} at ({i}, {j}) is off the X pattern")


class SingularMatrix(XMatrixError, ArithmeticError):
    def __init__(self, message, block=None):
        self.block = block
        super().__init__(message)


class MethodPreconditionViolated(XMatrixError, ValueError):
    def __init__(self, message, index=None):
        self.index = index
        super().__init__(message)


class NotBisymmetric(XMatrixError, ValueError):
    def __init__(self, certificate):
        self.certificate = certificate
        super().__init__(f"matrix is not bi-symmetric: {certificate.describe()}")


class NonConvergence(XMatrixError, ArithmeticError):
    pass


class ConjugatePairingFailure(XMatrixError, ArithmeticError):
    pass


class DivergenceSuspected(XMatrixError, ArithmeticError):
    pass


class ParseError(XMatrixError, ValueError):
    def __init__(self, message, line=None, field=None):
        self.line = line
        self.field = field
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field {field}")
        prefix = f"{', '.join(where)}: " if where else ""
        super().__init__(prefix + message)
