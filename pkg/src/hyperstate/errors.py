"""Exception types shared across the package."""


class GuardError(RuntimeError):
    """A computation guard was exceeded (dimension, enumeration size, ...).

    Guards bound the resources an operation may claim; exceeding one is not a
    usage error in the ValueError sense, and the CLI maps it to exit code 2.
    """


class SchemaError(ValueError):
    """A persisted results file does not match the expected schema."""
