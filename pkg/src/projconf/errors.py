"""Structured exceptions. Every error carries a stable ``code`` for the CLI."""


class ProjconfError(Exception):
    code = "error"

    def __init__(self, message, **details):
        super().__init__(message)
        self.message = message
        self.details = details

    def to_json(self):
        out = {"error": self.code, "message": self.message}
        if self.details:
            out["details"] = self.details
        return out


class ShapeError(ProjconfError, ValueError):
    code = "shape_mismatch"


class DependentBasisError(ProjconfError, ValueError):
    code = "dependent_basis"


class NotInSpanError(ProjconfError, ValueError):
    code = "not_in_span"


class InvalidPointError(ProjconfError, ValueError):
    code = "invalid_projective_point"


class InvalidRankMatrixError(ProjconfError, ValueError):
    code = "invalid_rank_matrix"


class NotAFaceError(ProjconfError, ValueError):
    code = "not_a_face"


class NotInImageError(ProjconfError, ValueError):
    code = "not_in_image"


class PreconditionError(ProjconfError, ValueError):
    code = "precondition"


class ParameterError(ProjconfError, ValueError):
    code = "bad_parameter"


class ConfigParseError(ProjconfError, ValueError):
    code = "malformed_config"


class DecimalLiteralError(ConfigParseError):
    code = "decimal_literal"
