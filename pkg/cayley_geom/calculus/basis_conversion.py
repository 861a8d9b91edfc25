from cayley_geom.lattice import GroupLattice
from .lc_tensor import LCTensor2, TensorBasis


def convert_tensor_basis(lattice: GroupLattice, t: LCTensor2, target: TensorBasis) -> LCTensor2:
    """
    gamma_{h,h'} = g_{h, ad(h)h'} relates the ⊗_A coefficients gamma to the ⊗_L coefficients g.
    Only the second index is relabelled, so the conversion is exact in both directions.
    """
    if t.basis == target:
        return LCTensor2(lattice, t.coefficients.copy(), target)
    result = t.coefficients.copy()
    for i in range(lattice.n):
        relabel = lattice.ad_permutation(i) if target == TensorBasis.A else lattice.ad_inverse_permutation(i)
        result[:, i, :] = t.coefficients[:, i, relabel]
    return LCTensor2(lattice, result, target)
