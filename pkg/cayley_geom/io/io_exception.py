from enum import Enum
from typing import Optional


class Diagnostic(Enum):
    """Machine-readable codes reported by the command line front end."""
    FILE_NOT_FOUND = "FILE_NOT_FOUND"
    INVALID_JSON = "INVALID_JSON"
    SCHEMA_VIOLATION = "SCHEMA_VIOLATION"
    ARROW_MISMATCH = "ARROW_MISMATCH"
    VALIDATION_FAILED = "VALIDATION_FAILED"
    UNKNOWN_ELEMENT = "UNKNOWN_ELEMENT"


class IoException(Exception):
    """Custom exception for unusable input documents; carries a diagnostic code and the file."""
    def __init__(self, message: str, code: Diagnostic = Diagnostic.VALIDATION_FAILED, path: Optional[str] = None):
        super().__init__(message)
        self.code = code
        self.path = path

    def set_path(self, path: str):
        if self.path is None:
            self.path = path

    def __str__(self) -> str:
        if self.path is not None:
            return f"{self.path}: {super().__str__()}"
        else:
            return super().__str__()
