"""Exception types shared across the package."""


class ValidationError(ValueError):
    """Raised when input data violates a documented invariant."""


class AmbiguousClassificationError(ValidationError):
    """Raised when two or more prototypes match an input equally well."""

    def __init__(self, labels):
        self.labels = tuple(labels)
        super().__init__(
            "ambiguous classification: " + ", ".join(self.labels)
        )
