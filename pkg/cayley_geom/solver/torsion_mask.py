from dataclasses import dataclass

from cayley_geom.lattice import LatticeException, PairKind
from .solver_exception import SolverException


@dataclass(frozen=True)
class TorsionMask:
    """Torsion sectors constrained to vanish."""
    biangle_zero: bool = True
    triangle_zero: bool = True
    quadrangle_zero: bool = True

    @classmethod
    def full(cls) -> 'TorsionMask':
        return cls(True, True, True)

    @classmethod
    def none(cls) -> 'TorsionMask':
        return cls(False, False, False)

    @classmethod
    def parse_str(cls, text: str) -> 'TorsionMask':
        """A comma separated list of sectors, e.g. "biangle,triangle"; "all" and "none" are accepted."""
        text = text.strip().lower()
        if text == "all":
            return cls.full()
        if text in ("", "none"):
            return cls.none()
        kinds = set()
        for token in text.split(","):
            try:
                kinds.add(PairKind.parse_str(token))
            except LatticeException:
                raise SolverException(f"unknown torsion sector '{token.strip()}'")
        return cls(PairKind.BIANGLE in kinds, PairKind.TRIANGLE in kinds, PairKind.QUADRANGLE in kinds)

    def masks(self, kind: PairKind) -> bool:
        return {PairKind.BIANGLE: self.biangle_zero,
                PairKind.TRIANGLE: self.triangle_zero,
                PairKind.QUADRANGLE: self.quadrangle_zero}[kind]

    def __str__(self) -> str:
        names = [kind.value for kind in PairKind if self.masks(kind)]
        return ",".join(names) if names else "none"
