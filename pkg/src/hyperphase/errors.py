"""Exception types shared across the package."""


class ValidationError(ValueError):
    """Inputs violate a documented precondition or invariant."""


class ParseError(ValidationError):
    """Malformed hypergraph or config text; the message names the line."""


class ConfigError(ValidationError):
    """Unknown key, bad type, or constraint violation in a config."""


class ResourceLimitError(RuntimeError):
    """An operation would exceed the configured memory guardrail."""


class ConvergenceError(ArithmeticError):
    """An iterative numeric procedure failed to converge."""
