"""Exception types shared across the toolkit.

The CLI maps these onto exit codes: ConfigError -> 1, DataError -> 2,
anything else -> 3.
"""


class ThemedriftError(Exception):
    """Base class for all toolkit errors."""


class ConfigError(ThemedriftError):
    """Invalid configuration or command usage."""


class DataError(ThemedriftError):
    """Malformed or unusable input data."""
