import itertools
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
import sympy
from scipy.optimize import root

from cayley_geom.connection import Connection, compatibility_residual
from cayley_geom.lattice import GroupLattice
from cayley_geom.metric import MetricField, validate_metric
from cayley_geom.numeric import Backend, rationalize
from .parameterization import Parameterization, parameterize
from .solve_config import SolveConfig
from .solve_report import SolveReport, classify_solution
from .solver_exception import SolverException
from .torsion_mask import TorsionMask

logger = logging.getLogger(__name__)

GRID_ROW_LIMIT = 2_000_000
NEWTON_ACCEPT = 1e-6


@dataclass(frozen=True)
class Root:
    """Values of the unknowns, exact rationals when verified exactly."""
    values: Tuple
    exact: bool


class _Inconsistent(Exception):
    pass


def _equations(residual: np.ndarray, exact: bool, tolerance: float) -> List[sympy.Expr]:
    """Distinct non-trivial entries of a stack of symmetric residual matrices."""
    n = residual.shape[-1]
    result, seen = [], set()
    for index in np.ndindex(*residual.shape[:-2]):
        for r in range(n):
            for s in range(r, n):
                equation = sympy.expand(sympy.sympify(residual[index + (r, s)]))
                if not equation.free_symbols:
                    nonzero = equation != 0 if exact else abs(float(equation)) > tolerance
                    if nonzero:
                        raise _Inconsistent()
                    continue
                if equation not in seen:
                    seen.add(equation)
                    result.append(equation)
    return result


def _assignment_order(unknowns: Sequence[sympy.Symbol], equations: Sequence[sympy.Expr]) -> List[sympy.Symbol]:
    """Unknowns ordered so that small equations are closed early."""
    order: List[sympy.Symbol] = []
    remaining = [e.free_symbols for e in equations]
    while remaining:
        assigned = set(order)
        best = min(remaining, key=lambda symbols: len(symbols - assigned))
        order.extend(sorted(best - assigned, key=unknowns.index))
        assigned = set(order)
        remaining = [symbols for symbols in remaining if not symbols <= assigned]
    order.extend(s for s in unknowns if s not in order)
    return order


def _verify(equations: Sequence[sympy.Expr], unknowns: Sequence[sympy.Symbol], values: Sequence,
            exact: bool, tolerance: float) -> bool:
    replacements = dict(zip(unknowns, values))
    if exact:
        return all(e.xreplace(replacements) == 0 for e in equations)
    return all(abs(float(e.xreplace(replacements))) <= tolerance for e in equations)


def grid_search(unknowns: Sequence[sympy.Symbol], equations: Sequence[sympy.Expr], grid: Sequence[sympy.Rational],
                exact: bool = True, tolerance: float = 1e-9) -> List[Root]:
    """
    Every assignment of grid values solving the equations. Unknowns are assigned one at a time and
    partial assignments are pruned as soon as an equation has all of its unknowns fixed.
    """
    unknowns = list(unknowns)
    if not unknowns:
        return [Root((), True)]
    values = np.array([float(v) for v in grid])
    order = _assignment_order(unknowns, equations)
    column = {s: k for k, s in enumerate(order)}
    compiled = []
    for equation in equations:
        arguments = sorted(equation.free_symbols, key=order.index)
        compiled.append((set(arguments), [column[s] for s in arguments],
                         sympy.lambdify(arguments, equation, "numpy")))

    rows = np.zeros((1, 0), dtype=int)
    pending = list(range(len(compiled)))
    for k, symbol in enumerate(order):
        count = len(rows) * len(values)
        if count > GRID_ROW_LIMIT:
            raise SolverException(f"grid search needs {count} partial assignments, use a smaller grid or Newton")
        rows = np.hstack([np.repeat(rows, len(values), axis=0),
                          np.tile(np.arange(len(values)), len(rows))[:, None]])
        assigned = set(order[:k + 1])
        ready = [e for e in pending if compiled[e][0] <= assigned]
        keep = np.ones(len(rows), dtype=bool)
        for e in ready:
            _, columns, function = compiled[e]
            result = function(*[values[rows[:, c]] for c in columns])
            keep &= np.abs(np.broadcast_to(np.asarray(result, dtype=float), (len(rows),))) <= tolerance
        rows = rows[keep]
        pending = [e for e in pending if e not in ready]
        logger.debug("grid: %s assigned, %d of %d partial assignments kept", symbol, len(rows), count)
        if not len(rows):
            return []

    roots = []
    for row in rows:
        candidate = tuple(grid[row[column[s]]] for s in unknowns)
        if _verify(equations, unknowns, candidate, exact, tolerance):
            roots.append(Root(candidate, exact))
    return roots


def newton_search(unknowns: Sequence[sympy.Symbol], equations: Sequence[sympy.Expr], config: SolveConfig,
                  exact: bool = True) -> List[Root]:
    """
    Levenberg-Marquardt from random starts in [-2, 2]; converged points are rounded to rationals
    with bounded denominator and kept exact when the rounding solves the equations exactly.
    """
    unknowns = list(unknowns)
    if not unknowns:
        return [Root((), True)]
    k, m = len(unknowns), len(equations)
    padding = max(0, k - m)
    residual = sympy.lambdify(unknowns, list(equations), "numpy")
    jacobian = sympy.lambdify(unknowns, sympy.Matrix(list(equations)).jacobian(unknowns).tolist(), "numpy")

    def fun(x: np.ndarray) -> np.ndarray:
        return np.concatenate([np.asarray(residual(*x), dtype=float).ravel(), np.zeros(padding)])

    def jac(x: np.ndarray) -> np.ndarray:
        matrix = np.asarray(jacobian(*x), dtype=float).reshape(m, k)
        return np.vstack([matrix, np.zeros((padding, k))])

    def attempt(start: np.ndarray) -> Optional[Root]:
        result = root(fun, start, jac=jac, method="lm")
        if np.max(np.abs(fun(result.x))) > NEWTON_ACCEPT:
            return None
        rounded = tuple(rationalize(x, config.max_denominator) for x in result.x)
        if _verify(equations, unknowns, rounded, exact, config.tolerance):
            return Root(rounded, exact)
        if np.max(np.abs(fun(result.x))) <= config.tolerance:
            return Root(tuple(float(x) for x in result.x), False)
        return None

    starts = np.random.default_rng(config.seed).uniform(-2.0, 2.0, size=(config.restarts, k))
    with ThreadPoolExecutor(max_workers=config.threads) as pool:
        attempts = list(pool.map(attempt, starts))
    logger.debug("newton: %d of %d restarts converged", sum(a is not None for a in attempts), config.restarts)
    return [a for a in attempts if a is not None]


def _deduplicate(roots: Sequence[Root]) -> List[Root]:
    exact = sorted({r.values for r in roots if r.exact})
    result = [Root(v, True) for v in exact]
    for r in sorted((r for r in roots if not r.exact), key=lambda r: r.values):
        point = np.array(r.values, dtype=float)
        if not any(np.allclose(point, np.array(s.values, dtype=float), atol=NEWTON_ACCEPT) for s in result):
            result.append(r)
    return result


def solve_system(unknowns: Sequence[sympy.Symbol], residual: np.ndarray, config: SolveConfig,
                 exact: bool = True) -> List[Root]:
    try:
        equations = _equations(residual, exact, config.tolerance)
    except _Inconsistent:
        return []
    if config.grid is not None:
        roots = grid_search(unknowns, equations, config.grid, exact, config.tolerance)
    else:
        roots = newton_search(unknowns, equations, config, exact)
    return _deduplicate(roots)


def _backend(metric_exact: bool, roots: Sequence[Root]) -> Backend:
    return Backend.EXACT if metric_exact and all(r.exact for r in roots) else Backend.FLOAT


def _site_matrices(p: Parameterization, g: int, unknowns: Sequence[sympy.Symbol], r: Root) -> np.ndarray:
    replacements = {s: sympy.sympify(v) for s, v in zip(unknowns, r.values)}
    return np.vectorize(lambda e: e.xreplace(replacements), otypes=[object])(p.template[:, g])


def solve(lattice: GroupLattice, m: MetricField, mask: TorsionMask, config: SolveConfig = SolveConfig()) -> SolveReport:
    """
    Metric-compatible connections whose masked torsion sectors vanish. No solution is an empty
    report, a metric of non-constant signature is an error.
    """
    if not validate_metric(lattice, m, config.tolerance).is_constant:
        raise SolverException("metric signature is not constant, no compatible connection exists")
    p = parameterize(lattice, mask, config.constant_connection)
    exact = m.backend is Backend.EXACT
    symbolic_metric = m if exact else MetricField(lattice, m.values.astype(object))
    residual = compatibility_residual(lattice, symbolic_metric, p.connection())
    method = "grid" if config.grid is not None else "newton"
    logger.debug("solving %s with mask %s: %d unknowns, %s search", lattice.group.name, mask, p.free_count, method)

    if config.constant_connection:
        roots = solve_system(p.symbols, residual, config, exact)
        solutions = []
        for r in roots:
            c = p.substitute(dict(zip(p.symbols, r.values)), _backend(exact, [r]))
            solutions.append(classify_solution(lattice, m, c, exact and r.exact, config.tolerance))
        return SolveReport(lattice, mask, p.free_count, method, solutions)

    site_roots: Dict[int, List[Root]] = {}
    site_matrices: Dict[int, List[np.ndarray]] = {}
    for g in range(lattice.sites):
        unknowns = p.site_symbols(g)
        site_roots[g] = solve_system(unknowns, residual[:, g], config, exact)
        backend = _backend(exact, site_roots[g])
        site_matrices[g] = [backend.array(_site_matrices(p, g, unknowns, r)) for r in site_roots[g]]
    combinations = int(np.prod([len(v) for v in site_matrices.values()]))
    if combinations > config.max_connections:
        logger.warning("%d site-dependent connections exceed the limit of %d, reporting site solutions only",
                       combinations, config.max_connections)
        return SolveReport(lattice, mask, p.free_count, method, [], site_matrices, truncated=True)

    backend = _backend(exact, [r for roots in site_roots.values() for r in roots])
    solutions = []
    for choice in itertools.product(*(site_matrices[g] for g in range(lattice.sites))):
        matrices = np.stack([backend.convert(x) if backend is Backend.FLOAT else x for x in choice], axis=1)
        c = Connection(lattice, matrices)
        solutions.append(classify_solution(lattice, m, c, backend is Backend.EXACT, config.tolerance))
    return SolveReport(lattice, mask, p.free_count, method, solutions, site_matrices)
