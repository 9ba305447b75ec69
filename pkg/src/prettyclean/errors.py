"""Exception types shared across the package."""


class NotCohenMacaulay(Exception):
    """S/I is not Cohen-Macaulay, so no clean filtration of the codimension-2 layer exists."""

    def __init__(self, message="", report=None):
        super().__init__(message or "S/I is not Cohen-Macaulay")
        self.report = report


class NotSequentiallyCM(Exception):
    """S/I is not sequentially Cohen-Macaulay, so it has no pretty clean filtration."""


class SearchExhausted(Exception):
    """No prime filtration was found inside the candidate box."""


class InternalVerificationFailure(AssertionError):
    """A construction produced something that failed its own verification."""


class UnverifiedFiltration(ValueError):
    """An operation needed a verified prime filtration and did not get one."""
