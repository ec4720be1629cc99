"""Exception hierarchy shared by all modules."""


class DomainError(ValueError):
    """Input outside an operation's documented domain."""


class InfeasibleByTheorem(DomainError):
    """The request contradicts a proven bound (degree > 24, K_8, ...)."""

    def __init__(self, message: str, theorem: str):
        super().__init__(f"{message} ({theorem})")
        self.theorem = theorem


class NotAvailableError(DomainError):
    """A catalogue entry that cannot exist."""

    def __init__(self, message: str, theorem: str = ""):
        super().__init__(f"{message} ({theorem})" if theorem else message)
        self.theorem = theorem
