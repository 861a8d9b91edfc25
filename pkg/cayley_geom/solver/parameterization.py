import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Mapping, Tuple

import numpy as np
import sympy

from cayley_geom.connection import Connection
from cayley_geom.lattice import GroupLattice, PairKind
from cayley_geom.numeric import Backend
from .torsion_mask import TorsionMask

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Parameterization:
    """
    Symbolic transport matrices template[i, g] (object array of sympy expressions) whose masked
    torsion sectors vanish for every assignment of the free symbols. A constant parameterization
    shares one set of symbols between all sites.
    """
    lattice: GroupLattice
    mask: TorsionMask
    template: np.ndarray
    symbols: Tuple[sympy.Symbol, ...]
    constant: bool

    @property
    def free_count(self) -> int:
        return len(self.symbols)

    def site_symbols(self, g: int) -> Tuple[sympy.Symbol, ...]:
        if self.constant:
            return self.symbols
        present = set().union(*(e.free_symbols for e in self.template[:, g].flat))
        return tuple(s for s in self.symbols if s in present)

    def connection(self) -> Connection:
        """The template itself, for residual evaluation on symbols."""
        return Connection(self.lattice, self.template)

    def substitute(self, values: Mapping[sympy.Symbol, Any], backend: Backend = Backend.EXACT) -> Connection:
        missing = [s for s in self.symbols if s not in values]
        if missing:
            raise KeyError(f"no value for {missing[0]}")
        replacements = {s: sympy.sympify(v) for s, v in values.items()}
        entries = np.vectorize(lambda e: e.xreplace(replacements), otypes=[object])(self.template)
        return Connection(self.lattice, backend.array(entries))


def _unit(n: int, k: int) -> np.ndarray:
    column = np.full(n, sympy.Integer(0), dtype=object)
    column[k] = sympy.Integer(1)
    return column


def _site_template(lattice: GroupLattice, mask: TorsionMask, suffix: str,
                   symbols: List[sympy.Symbol]) -> np.ndarray:
    n = lattice.n
    columns: Dict[Tuple[int, int], np.ndarray] = {}
    for i in range(n):
        for j in range(n):
            pair = lattice.classify_pair(i, j)
            if pair.kind == PairKind.BIANGLE and mask.biangle_zero:
                columns[(i, j)] = -_unit(n, i)
            elif pair.kind == PairKind.TRIANGLE and mask.triangle_zero:
                columns[(i, j)] = _unit(n, pair.apex) - _unit(n, i)
            elif pair.kind == PairKind.QUADRANGLE and mask.quadrangle_zero and pair.chain_position > 0:
                first = lattice.chain(pair.product)[0]
                columns[(i, j)] = columns[first] + _unit(n, first[0]) - _unit(n, i)
            else:
                fresh = [sympy.Symbol(f"v{i}_{r}_{j}{suffix}") for r in range(n)]
                symbols.extend(fresh)
                columns[(i, j)] = np.array(fresh, dtype=object)
    template = np.empty((n, n, n), dtype=object)
    for (i, j), column in columns.items():
        template[i, :, j] = column
    return template


def parameterize(lattice: GroupLattice, mask: TorsionMask, constant: bool = True) -> Parameterization:
    """
    Fixes V_{h1} column h2 to -delta_{h1} on masked biangles and to delta_{h0} - delta_{h1} on masked
    triangles; on masked quadrangle chains every pair is tied to the first one by
    V_{h1,h2} + delta_{h1} = V_{h1^,h2^} + delta_{h1^}. Every other column is free.
    """
    symbols: List[sympy.Symbol] = []
    if constant:
        site = _site_template(lattice, mask, "", symbols)
        template = np.stack([np.stack([site[i]] * lattice.sites) for i in range(lattice.n)])
    else:
        per_site = [_site_template(lattice, mask, f"_s{g}", symbols) for g in range(lattice.sites)]
        template = np.stack([np.stack([per_site[g][i] for g in range(lattice.sites)]) for i in range(lattice.n)])
    logger.debug("parameterized %s with mask %s: %d free parameters", lattice.group.name, mask, len(symbols))
    return Parameterization(lattice, mask, template, tuple(symbols), constant)
