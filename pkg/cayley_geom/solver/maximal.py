from cayley_geom.connection import Connection
from cayley_geom.lattice import GroupLattice
from .parameterization import parameterize
from .solver_exception import SolverException
from .torsion_mask import TorsionMask


def maximal_connection(lattice: GroupLattice) -> Connection:
    """On a maximal lattice vanishing torsion fixes every column: the unique torsion-free connection."""
    if not lattice.is_maximal:
        raise SolverException(f"{lattice.group.name} with {lattice.n} arrows is not maximal")
    return parameterize(lattice, TorsionMask.full()).substitute({})
