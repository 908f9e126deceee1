"""Exception hierarchy.

Every error carries a short ``code`` so the command line can print a single
machine-parseable line on failure.
"""


class UniqRecallError(ValueError):
    code = "error"

    def __init__(self, message, **details):
        super().__init__(message)
        self.details = details


class DomainError(UniqRecallError):
    code = "domain"


class ConvergenceError(UniqRecallError):
    code = "convergence"


class InvalidSpectrumError(UniqRecallError):
    code = "invalid-spectrum"

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class IngestError(UniqRecallError):
    code = "ingest"


class FitError(UniqRecallError):
    code = "fit"
