class DomainError(ValueError):
    """An argument outside the mathematical domain of an operation."""


class OutOfTableError(DomainError):
    """A stem or cell beyond the tabulated range was requested."""


class Indeterminate(LookupError):
    """The answer depends on data the tables leave unknown."""
