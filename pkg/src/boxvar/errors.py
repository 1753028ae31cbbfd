class DomainError(ValueError):
    """An argument lies outside the domain where an operation is defined."""


class EmitError(OSError):
    """Writing an output file failed."""

    def __init__(self, path, cause):
        self.path = str(path)
        self.cause = cause
        super().__init__(f"cannot write {self.path}: {cause}")
