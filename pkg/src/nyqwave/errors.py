"""Exception types raised across the package."""


class AdmissibilityError(ValueError):
    """Roll-off outside the range an operation is defined for."""


class PoleError(ValueError):
    """Evaluation requested at a non-removable pole."""


class DistributionalLimitError(ValueError):
    """Parameters describe a distribution (Dirac pair) with no sample values."""


class SignalFormatError(ValueError):
    """Malformed signal, table or spectrum file.

    ``line`` is the 1-based line number of the offending row, when known.
    """

    def __init__(self, message, line=None, path=None):
        self.line = line
        self.path = path
        where = ""
        if path is not None:
            where += f"{path}"
        if line is not None:
            where += f":{line}" if where else f"line {line}"
        super().__init__(f"{where}: {message}" if where else message)
