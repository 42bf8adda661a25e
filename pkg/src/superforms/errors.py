"""Exception hierarchy. Every domain error carries a machine-readable code
and an optional witness object so the CLI can emit structured failures."""


class SuperformsError(Exception):
    code = "error"

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.message = message
        self.witness = witness

    def to_json(self):
        obj = {"code": self.code, "message": self.message}
        if self.witness is not None:
            obj["witness"] = self.witness
        return obj


class DimensionMismatchError(SuperformsError):
    code = "dimension-mismatch"


class NotInvertibleError(SuperformsError):
    code = "not-invertible"


class NonNilpotentError(SuperformsError):
    code = "non-nilpotent"


class ParityError(SuperformsError):
    code = "parity"


class ParameterError(SuperformsError):
    code = "bad-parameter"


class UnsupportedFamilyError(SuperformsError):
    code = "unsupported-family"


class ModelError(SuperformsError):
    """A constructed matrix model failed an internal consistency check."""

    code = "model-inconsistent"


class ChevalleyUnsupportedError(SuperformsError):
    code = "chevalley-unsupported"


class ObstructionError(SuperformsError):
    """Raised when the compact-form recipe is blocked by odd roots with
    nonvanishing self-bracket; the witness lists the offending roots."""

    code = "obstruction"


class DomainError(SuperformsError):
    code = "domain"


class MalformedInputError(SuperformsError):
    code = "malformed-input"
