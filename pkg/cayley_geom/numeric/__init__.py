from .numeric_exception import NumericException

from .rational import parse_rational, format_scalar, rationalize

from .backend import Backend, FLOAT_TOLERANCE, max_abs, exact_sqrt, common_backend

from .congruence import diagonalize_congruence, signature
