"""Exception types shared across the package."""


class ParseError(ValueError):
    """Raised when an instance, drawing, or coloring file is malformed."""


class EmbeddingError(ValueError):
    """Raised when a drawing fails validation (bad rotation, bad crossing)."""


class SizeRefusal(RuntimeError):
    """Raised when an instance is too large for an exhaustive computation."""
