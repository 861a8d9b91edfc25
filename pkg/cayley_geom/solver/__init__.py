from .solver_exception import SolverException

from .torsion_mask import TorsionMask
from .parameterization import Parameterization, parameterize
from .solve_config import SolveConfig, default_grid, parse_grid, resolve_threads, THREADS_VARIABLE
from .solve_report import Solution, SolveReport, classify_solution, determinant_signs
from .solver import Root, grid_search, newton_search, solve_system, solve
from .lc_inequality import QuadrangleInequality, InequalityReport, lc_existence_inequality, quadrangle_closures
from .flat_family import z4_lattice, z4_step, flat_family_functions, flat_family_z4
from .reflection import ReflectionAnalysis, reflection_freedom
from .constant_metrics import ConstantMetricFamily, compatible_constant_metrics
from .maximal import maximal_connection
from .metric_laws import MetricLaw, MetricLawReport, torsion_metric_identities
