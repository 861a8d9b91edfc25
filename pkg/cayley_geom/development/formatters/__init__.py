from .json_formatter import JsonFormatter
from .svg_formatter import SvgFormatter
