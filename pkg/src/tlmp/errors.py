"""Exception types shared across the package."""

from __future__ import annotations


class ShapeError(ValueError):
    """Dimensions of the operands do not match."""


class ContainmentError(ValueError):
    """A vector expected to lie in a subspace does not; carries the vector."""

    def __init__(self, message: str, vector=None):
        super().__init__(message)
        self.vector = vector


class AxiomError(ValueError):
    """A structure required to satisfy its axioms fails them; carries the report."""

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class FiberError(ValueError):
    """A value expected in the fiber of an extension is not in the image of the injection."""


class CocycleError(ValueError):
    """Input cochain fails a cocycle equation; names the violated equation."""

    def __init__(self, message: str, label: str | None = None):
        super().__init__(message)
        self.label = label


class CompatibilityError(ValueError):
    """Automorphism pair is not structure-compatible with the extension."""


class CertificateError(ValueError):
    """A supplied certificate (e.g. a lifting pair of maps) does not check out."""


class SchemaError(ValueError):
    """A JSON bundle does not match its declared schema."""
