"""Exception hierarchy for the verification engine."""


class VerificationError(Exception):
    """Base class for library errors."""


class SignatureMismatchError(VerificationError):
    """Operands belong to different algebra signatures."""


class DegreeOverflowError(VerificationError):
    """A product exceeded the configured degree cap."""


class NonCanonicalMapError(VerificationError):
    """A substitution map does not preserve the canonical commutators."""


class FockError(VerificationError):
    """Invalid truncated Fock space request."""


class JordanFieldError(VerificationError):
    """Real and complex Jordan elements were mixed."""


class PhaseSpaceError(VerificationError):
    """A phase-space sample is outside the domain of a transform."""


class ConfigError(VerificationError):
    """Invalid configuration value."""
