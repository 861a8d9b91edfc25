from .metric_exception import MetricException

from .metric_field import MetricField
from .signature import Signature
from .propagation import propagate
from .metric_checks import (KillingResult, InvarianceClass, validate_metric, killing_check, permutation_matrix,
                            right_invariant_extension, invariance_class, inverse_metric)
