from typing import TypeVar, Union

import numpy as np

from cayley_geom.lattice import GroupLattice
from .calculus_exception import CalculusException
from .scalar_field import ScalarField
from .one_form import OneForm
from .two_form import TwoFormRaw, TwoFormCanonical
from .lc_tensor import LCTensor2, LeftCovariantTensor

Pullable = TypeVar("Pullable", ScalarField, OneForm, TwoFormRaw, TwoFormCanonical, LCTensor2, LeftCovariantTensor)


def pullback_array(lattice: GroupLattice, h: int, values: np.ndarray, form_axes: int = None) -> np.ndarray:
    """
    R*_h on a per-site coefficient array values[g, k1, ..., kr].
    Every theta-index is relabelled by ad(h), so new[g, k...] = old[g h, ad(h^-1) k...].
    form_axes defaults to all axes after the site axis.
    """
    if form_axes is None:
        form_axes = values.ndim - 1
    result = values[lattice.group.right_translation(h)]
    if form_axes:
        relabel = lattice.adjoint_permutation(lattice.group.inv(h))
        for axis in range(1, form_axes + 1):
            result = np.take(result, relabel, axis=axis)
    return result


def pullback(lattice: GroupLattice, h: int, obj: Pullable) -> Pullable:
    """R*_h for any element h; on tensors and 2-forms it acts factor-wise."""
    if isinstance(obj, ScalarField):
        return ScalarField(lattice, pullback_array(lattice, h, obj.values))
    if isinstance(obj, OneForm):
        return OneForm(lattice, pullback_array(lattice, h, obj.coefficients))
    if isinstance(obj, (TwoFormRaw, TwoFormCanonical)):
        return type(obj)(lattice, pullback_array(lattice, h, obj.coefficients))
    if isinstance(obj, LCTensor2):
        return LCTensor2(lattice, pullback_array(lattice, h, obj.coefficients), obj.basis)
    if isinstance(obj, LeftCovariantTensor):
        return LeftCovariantTensor(lattice, pullback_array(lattice, h, obj.coefficients))
    raise CalculusException(f"cannot pull back {type(obj).__name__}")
