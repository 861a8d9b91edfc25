from enum import Enum
from typing import Any, Iterable, Optional

import numpy as np
import sympy

from .numeric_exception import NumericException
from .rational import parse_rational

FLOAT_TOLERANCE = 1e-9


class Backend(Enum):
    """Scalar arithmetic used by a computation: exact rationals or float64."""
    EXACT = "exact"
    FLOAT = "float"

    @classmethod
    def parse_str(cls, name: str) -> 'Backend':
        try:
            return cls(name.strip().lower())
        except ValueError:
            raise NumericException(f"unknown backend '{name}'")

    @classmethod
    def of(cls, array: np.ndarray) -> 'Backend':
        return cls.EXACT if np.asarray(array).dtype == object else cls.FLOAT

    def scalar(self, value: Any) -> Any:
        if self is Backend.EXACT:
            if isinstance(value, sympy.Basic) and not value.is_number:
                return value  # symbolic template entry
            return parse_rational(value)
        if isinstance(value, str):
            return float(parse_rational(value))
        return float(value)

    def array(self, values: Any) -> np.ndarray:
        if self is Backend.FLOAT:
            raw = np.asarray(values)
            if raw.dtype == object:
                return np.vectorize(self.scalar, otypes=[float])(raw) if raw.size else raw.astype(float)
            return raw.astype(float)
        raw = np.array(values, dtype=object)
        if raw.size == 0:
            return raw
        return np.vectorize(self.scalar, otypes=[object])(raw)

    def convert(self, array: np.ndarray) -> np.ndarray:
        """Re-expresses an array in this backend (exact arrays become floats, never the reverse)."""
        array = np.asarray(array)
        if self is Backend.FLOAT:
            if array.dtype == object:
                return np.vectorize(float, otypes=[float])(array) if array.size else array.astype(float)
            return array.astype(float)
        if array.dtype != object:
            raise NumericException("float data cannot be converted to the exact backend")
        return array

    def zeros(self, shape: Iterable[int] | int) -> np.ndarray:
        if self is Backend.EXACT:
            return np.full(shape, sympy.Integer(0), dtype=object)
        return np.zeros(shape)

    def ones(self, shape: Iterable[int] | int) -> np.ndarray:
        if self is Backend.EXACT:
            return np.full(shape, sympy.Integer(1), dtype=object)
        return np.ones(shape)

    def eye(self, n: int) -> np.ndarray:
        result = self.zeros((n, n))
        for i in range(n):
            result[i, i] = self.scalar(1)
        return result

    def inv(self, matrix: np.ndarray) -> np.ndarray:
        if self is Backend.EXACT:
            sym = sympy.Matrix(matrix.tolist())
            if sym.det() == 0:
                raise NumericException("singular matrix")
            return np.array(sym.inv().tolist(), dtype=object)
        if abs(np.linalg.det(matrix)) <= FLOAT_TOLERANCE:
            raise NumericException("singular matrix")
        return np.linalg.inv(matrix.astype(float))

    def det(self, matrix: np.ndarray) -> Any:
        if self is Backend.EXACT:
            return sympy.Matrix(matrix.tolist()).det()
        return float(np.linalg.det(matrix.astype(float)))

    def is_zero_scalar(self, value: Any, tolerance: float = FLOAT_TOLERANCE) -> bool:
        if self is Backend.EXACT:
            if isinstance(value, sympy.Basic) and not value.is_number:
                return sympy.expand(value) == 0
            return value == 0
        return abs(float(value)) <= tolerance

    def is_zero(self, array: np.ndarray, tolerance: float = FLOAT_TOLERANCE) -> bool:
        array = np.asarray(array)
        if self is Backend.EXACT and array.dtype == object:
            return all(self.is_zero_scalar(x) for x in array.flat)
        return bool(np.all(np.abs(array.astype(float)) <= tolerance))

    def equal(self, a: np.ndarray, b: np.ndarray, tolerance: float = FLOAT_TOLERANCE) -> bool:
        a, b = np.asarray(a), np.asarray(b)
        if a.shape != b.shape:
            return False
        if a.dtype == object and b.dtype == object:
            return Backend.EXACT.is_zero(a - b)
        return Backend.FLOAT.is_zero(Backend.FLOAT.convert(a) - Backend.FLOAT.convert(b), tolerance)

    def sign(self, value: Any, tolerance: float = FLOAT_TOLERANCE) -> int:
        if self.is_zero_scalar(value, tolerance):
            return 0
        return 1 if value > 0 else -1

    def sqrt(self, value: Any) -> Any:
        if self is Backend.EXACT:
            return sympy.sqrt(value)
        return float(np.sqrt(float(value)))


def max_abs(array: np.ndarray) -> float:
    array = np.asarray(array)
    if array.size == 0:
        return 0.0
    try:
        return float(np.max(np.abs(Backend.FLOAT.convert(array))))
    except TypeError:
        return float("nan")  # symbolic entries


def exact_sqrt(value: Any) -> Optional[sympy.Rational]:
    """The rational square root of a non-negative rational, or None if it is irrational."""
    root = sympy.sqrt(sympy.Rational(value))
    return root if root.is_rational else None


def common_backend(*arrays: np.ndarray) -> Backend:
    """EXACT only if every participating array is exact."""
    if all(Backend.of(a) is Backend.EXACT for a in arrays):
        return Backend.EXACT
    return Backend.FLOAT
