from .lattice_exception import LatticeException

from .group import Group, CyclicGroup, SymmetricGroup, TorusGroup, TableGroup

from .group_builder import GroupKind, build_group

from .pair_kind import PairKind, PairClass

from .group_lattice import GroupLattice, adjoint, check_bicovariance, classify
