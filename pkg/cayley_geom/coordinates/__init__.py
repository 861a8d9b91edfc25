from .coordinates_exception import CoordinatesException

from .coordinate_system import (CoordinateKind, CoordinateSystem, CoordinateValidity, coordinate_symbols,
                                coordinate_validity, coordinate_system, parse_spacing)
from .z4 import z4_coordinates, z4_identities, z4_partial_derivatives, z4_structure
from .commutation import CommutationReport, commutation_check, structure_constants, expected_structure
from .hypercubic import hypercubic_lattice, hypercubic_calculus, interior_mask, forward_difference_error
from .christoffel import (ChristoffelField, christoffel, christoffel_from_transport, coordinate_curvature,
                          coordinate_ricci, coordinate_curvature_scalar, agrees_with_sector_components)
from .bianchi import BianchiReport, bianchi_hypercubic
from .transform import CoordinateTransform, transform_coordinates
