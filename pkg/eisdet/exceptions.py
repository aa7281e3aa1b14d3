"""Contains all the custom defined exceptions that eisdet can throw.
"""

class Error(Exception):
    """Base class for exceptions."""
    def __init__(self, message):
        super(Error, self).__init__(message)
        self.message = message

class VariableError(Error):
    """Exception raised when two series with different variable tags are
    combined or compared.

    Attributes:
        message (str): Explanation of the error.
    """
    pass

class ValuationError(Error):
    """Exception raised when a series has a nonzero coefficient where the
    operation requires a zero (or a zero where it requires a unit).

    Attributes:
        message (str): Explanation of the error.
        index (int): index of the offending coefficient.
    """
    def __init__(self, message, index=None):
        super(ValuationError, self).__init__(message)
        self.index = index

class SquareRootError(Error):
    """Exception raised when a series has no square root of the requested
    shape (odd valuation or non-square leading coefficient).

    Attributes:
        message (str): Explanation of the error.
    """
    pass

class WeightError(Error):
    """Exception raised for invalid weights: Eisenstein subscripts that are
    not even integers >= 4, or non-homogeneous polynomials where a weight is
    required.

    Attributes:
        message (str): Explanation of the error.
    """
    pass

class NotInSpanError(Error):
    """Exception raised when a series is not a modular form of the requested
    weight, i.e. it is not in the span of the monomials E4^a E6^b.

    Attributes:
        message (str): Explanation of the error.
        index (int): first q-power where the best fit disagrees.
    """
    def __init__(self, message, index=None):
        super(NotInSpanError, self).__init__(message)
        self.index = index

class InsufficientOrderError(Error):
    """Exception raised when a truncation order is too small for an exact
    decision.

    Attributes:
        message (str): Explanation of the error.
        minimum (int): smallest order that would have worked.
    """
    def __init__(self, message, minimum=None):
        super(InsufficientOrderError, self).__init__(message)
        self.minimum = minimum

class ZeroDeterminantError(Error):
    """Exception raised when a requested minor is identically zero by
    definition (chi_n^(m) with n < m).

    Attributes:
        message (str): Explanation of the error.
    """
    pass

class RepeatedIndexError(Error):
    """Exception raised when a subscript matrix has repeated rows or columns.

    Attributes:
        message (str): Explanation of the error.
    """
    pass

class UnknownIdentityError(Error):
    """Exception raised when an identity label is not in the catalog.

    Attributes:
        message (str): Explanation of the error.
    """
    pass

class ConfigError(Error):
    """Exception raised for invalid run configuration values.

    Attributes:
        message (str): Explanation of the error.
    """
    pass

class LogicError(Error):
    """Exception raised when internal logic failed, most likely a bug!

    Attributes:
        message (str): Explanation of the error.
    """
    pass
