import os
from dataclasses import dataclass, field
from typing import Mapping, Optional, Tuple

import sympy

from cayley_geom.numeric import FLOAT_TOLERANCE, NumericException, parse_rational
from .solver_exception import SolverException

THREADS_VARIABLE = "CAYLEY_GEOM_THREADS"


def default_grid() -> Tuple[sympy.Rational, ...]:
    """Numerators -4..4 over denominators 1 and 2."""
    return tuple(sorted({sympy.Rational(p, q) for p in range(-4, 5) for q in (1, 2)}))


def parse_grid(text: str) -> Optional[Tuple[sympy.Rational, ...]]:
    """"default", "none" (Newton only) or a comma separated list of rationals."""
    text = text.strip().lower()
    if text == "default":
        return default_grid()
    if text == "none":
        return None
    try:
        values = {parse_rational(token) for token in text.split(",") if token.strip()}
    except NumericException as e:
        raise SolverException(f"invalid grid: {e}")
    if not values:
        raise SolverException("grid must not be empty")
    return tuple(sorted(values))


def resolve_threads(requested: Optional[int], environ: Mapping[str, str] = os.environ) -> int:
    """--threads if given, else $CAYLEY_GEOM_THREADS, else 1."""
    if requested is None:
        raw = environ.get(THREADS_VARIABLE)
        if raw is None:
            return 1
        try:
            requested = int(raw)
        except ValueError:
            raise SolverException(f"{THREADS_VARIABLE} must be an integer, got '{raw}'")
    if requested < 1:
        raise SolverException(f"thread count must be positive, got {requested}")
    return requested


@dataclass(frozen=True)
class SolveConfig:
    constant_connection: bool = True
    grid: Optional[Tuple[sympy.Rational, ...]] = field(default_factory=default_grid)
    restarts: int = 8
    seed: int = 0
    threads: int = 1
    tolerance: float = FLOAT_TOLERANCE
    max_denominator: int = 64
    max_connections: int = 1024

    def __post_init__(self):
        if self.restarts < 0:
            raise SolverException(f"restart count must not be negative, got {self.restarts}")
        if self.threads < 1:
            raise SolverException(f"thread count must be positive, got {self.threads}")
        if self.max_denominator < 1:
            raise SolverException(f"denominator bound must be positive, got {self.max_denominator}")
