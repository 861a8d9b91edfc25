import json
import logging
from functools import lru_cache
from pathlib import Path
from typing import Any, Dict, Optional, TextIO

from jsonschema import Draft202012Validator
from jsonschema.exceptions import best_match

from .io_exception import Diagnostic, IoException

logger = logging.getLogger(__name__)

SCHEMA_DIRECTORY = Path(__file__).resolve().parents[2] / "schemas"


@lru_cache(maxsize=None)
def load_schema(name: str) -> Dict[str, Any]:
    path = SCHEMA_DIRECTORY / f"{name}.schema.json"
    try:
        with open(path, "r", encoding="utf-8") as f:
            schema = json.load(f)
    except FileNotFoundError:
        raise IoException(f"no schema named '{name}'", Diagnostic.FILE_NOT_FOUND, str(path))
    Draft202012Validator.check_schema(schema)
    return schema


def validate_document(document: Any, name: str, source: Optional[str] = None):
    """Raises SCHEMA_VIOLATION with the most relevant error of the named schema."""
    error = best_match(Draft202012Validator(load_schema(name)).iter_errors(document))
    if error is not None:
        location = "/".join(str(p) for p in error.absolute_path) or "<root>"
        raise IoException(f"{location}: {error.message}", Diagnostic.SCHEMA_VIOLATION, source)


def read_document(path: str, schema: str) -> Any:
    logger.debug("reading %s against schema %s", path, schema)
    try:
        with open(path, "r", encoding="utf-8") as f:
            document = json.load(f)
    except (FileNotFoundError, IsADirectoryError):
        raise IoException("file not found", Diagnostic.FILE_NOT_FOUND, path)
    except OSError as e:
        raise IoException(f"cannot read file: {e.strerror or e}", Diagnostic.FILE_NOT_FOUND, path)
    except UnicodeDecodeError as e:
        raise IoException(f"invalid JSON: not UTF-8 at byte {e.start}", Diagnostic.INVALID_JSON, path)
    except json.JSONDecodeError as e:
        raise IoException(f"invalid JSON at line {e.lineno}: {e.msg}", Diagnostic.INVALID_JSON, path)
    validate_document(document, schema, path)
    return document


def write_document(document: Any, schema: str, out: TextIO):
    """Validates against the published schema, then writes with sorted keys."""
    validate_document(document, schema)
    json.dump(document, out, sort_keys=True, indent=2, ensure_ascii=False)
    print(file=out)
