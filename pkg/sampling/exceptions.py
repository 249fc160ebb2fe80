class SamplingError(Exception):
    """Base class for every error raised by the sampling library."""


class DomainError(SamplingError, ValueError):
    """An operation was called outside its domain (bad ids, lengths, budgets)."""


class GenerationError(SamplingError):
    """A random graph could not be drawn with the requested properties."""


class ConfigError(SamplingError):
    """Experiment configuration failed validation."""
