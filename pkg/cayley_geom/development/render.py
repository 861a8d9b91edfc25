from enum import Enum
from typing import Optional, TextIO, Tuple

from .development import Development
from .development_exception import DevelopmentException
from .formatters import JsonFormatter, SvgFormatter


class RenderFormat(Enum):
    SVG = "svg"
    JSON = "json"

    @classmethod
    def parse_str(cls, name: str) -> 'RenderFormat':
        try:
            return cls(name.strip().lower())
        except ValueError:
            raise DevelopmentException(f"unknown render format '{name}'")


def render(development: Development, fmt: RenderFormat, out: TextIO,
           projection: Optional[Tuple[int, int]] = None):
    if fmt == RenderFormat.JSON:
        formatter = JsonFormatter(development, out)
    else:
        formatter = SvgFormatter(development, out, projection or (0, 1))
    development.traverse(formatter)
    formatter.finalize()


def parse_projection(text: str) -> Tuple[int, int]:
    """Two zero-based tangent axes, "0,1"."""
    try:
        a, b = (int(token) for token in text.split(","))
    except ValueError:
        raise DevelopmentException(f"unknown projection '{text}'")
    return a, b
