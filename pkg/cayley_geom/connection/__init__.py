from .connection_exception import ConnectionException

from .connection import Connection
from .isometry_gauge import IsometryGauge, apply_gauge
from .compatibility import (compatibility_residual, is_compatible, isometry_preservation_check, inverse_transport,
                            contravariant_residual)
from .transport import transport_matrix, backward_transport
from .natural_connection import natural_connection, propagate_metric
from .coframe import (Coframe, orthonormal_factor, build_coframe, frame_connection, frame_isometry_residual,
                      rotation_angles)
