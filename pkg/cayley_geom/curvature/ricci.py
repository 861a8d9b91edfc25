from dataclasses import dataclass

import numpy as np

from cayley_geom.calculus import ScalarField
from cayley_geom.lattice import GroupLattice
from cayley_geom.metric import MetricField, inverse_metric
from cayley_geom.numeric import common_backend
from .curvature import CurvatureComponents


@dataclass(frozen=True, eq=False)
class RicciContractions:
    """
    ricci[g, h, h'] = sum_h'' R^h''_{h, h'', h'}, built from canonical components.
    alternative[g, h, h'] = sum_h'' R^h''_{h, h', h''}
    diagnostic[g, h, h'] = sum_h'' R^h''_{h'', h, h'}
    Only ricci enters the curvature scalar.
    """
    ricci: np.ndarray
    alternative: np.ndarray
    diagnostic: np.ndarray


def ricci(lattice: GroupLattice, cc: CurvatureComponents) -> RicciContractions:
    # canonical[g, a, c, h, h']
    r = cc.canonical
    main = np.diagonal(r, axis1=1, axis2=3).sum(axis=-1).transpose(0, 2, 1)
    alternative = np.diagonal(r, axis1=2, axis2=3).sum(axis=-1).transpose(0, 2, 1)
    diagnostic = np.diagonal(r, axis1=3, axis2=4).sum(axis=-1)
    return RicciContractions(main, alternative, diagnostic)


def curvature_scalar(lattice: GroupLattice, m: MetricField, ricci_values: np.ndarray) -> ScalarField:
    """R(g) = sum (g^-1)^{h,h'} Ric_{h,h'}"""
    inverse = inverse_metric(lattice, m)
    backend = common_backend(inverse, ricci_values)
    product = backend.convert(inverse) * backend.convert(ricci_values)
    return ScalarField(lattice, product.sum(axis=(1, 2)))
