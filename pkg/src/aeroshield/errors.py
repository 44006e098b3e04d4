"""Exception types shared across the engine."""


class EngineError(Exception):
    """Base class for every error the engine raises deliberately."""


class DomainError(EngineError, ValueError):
    """An input lies outside the validated domain of an operation."""


class ConfigError(EngineError, ValueError):
    """A configuration value is structurally invalid or a required field is missing."""


class UnknownScenarioError(EngineError, LookupError):
    """A scenario id is not present in the active catalog."""
