from .calculus_exception import CalculusException

from .scalar_field import ScalarField
from .one_form import OneForm
from .two_form import TwoFormRaw, TwoFormCanonical
from .lc_tensor import TensorBasis, LCTensor2, LeftCovariantTensor, tensor_product

from .pullback import pullback, pullback_array
from .basis_conversion import convert_tensor_basis
from .gauge import gauge_fix, gauge_fix_array, gauge_shift
from .derivatives import ell_derivative, differential, commutator, product_rule_residual
from .forms import cap_product, delta_map, differential_on_1form, differential_on_1form_raw, differential_squared
