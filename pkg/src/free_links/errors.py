"""Custom exceptions for free links CLI."""


class FreeLinksError(Exception):
    """Base exception for all free links errors."""

    def __init__(self, message: str, diagram: str | None = None):
        """
        Initialize error with message and optional diagram text.

        Args:
            message: Error message
            diagram: Optional Gauss code of the diagram that caused the error
        """
        self.message = message
        self.diagram = diagram
        if diagram:
            super().__init__(f"{message} (diagram: {diagram})")
        else:
            super().__init__(message)

    def __repr__(self) -> str:
        """Return string representation for debugging."""
        if self.diagram:
            return f"{self.__class__.__name__}(message={self.message!r}, diagram={self.diagram!r})"
        return f"{self.__class__.__name__}(message={self.message!r})"


class DiagramParseError(FreeLinksError):
    """Raised when Gauss-code text does not follow the grammar."""

    pass


class DiagramError(FreeLinksError):
    """Raised when a diagram violates a structural invariant or shape requirement."""

    pass


class MoveError(FreeLinksError):
    """Raised when a move instance does not fit the diagram it is applied to."""

    pass


class ParityError(FreeLinksError):
    """Raised when a parity kind is not defined for a diagram."""

    pass


class BracketError(FreeLinksError):
    """Raised when a bracket or projection is evaluated outside its domain."""

    pass


class CertificateError(FreeLinksError):
    """Raised when a theorem check is requested on a diagram of the wrong shape."""

    pass
