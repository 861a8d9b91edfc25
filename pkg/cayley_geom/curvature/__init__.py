from .curvature_exception import CurvatureException

from .sector_components import SectorComponents, transport_product
from .torsion import TorsionComponents, torsion, torsion_raw
from .curvature import CurvatureComponents, curvature, curvature_raw, shifted_columns
from .ricci import RicciContractions, ricci, curvature_scalar
from .integrability import IntegrabilityIsometries, integrability_isometries, reconstruct_curvature
from .vector_fields import BasicVectorField, torsion_on_fields, torsion_difference_on_fields, curvature_on_fields
from .frame import EinsteinHilbertDensity, frame_transfer, frame_curvature, einstein_hilbert_density
