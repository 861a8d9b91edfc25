from .io_exception import Diagnostic, IoException

from .documents import SCHEMA_DIRECTORY, load_schema, validate_document, read_document, write_document
from .loaders import parse_element, load_lattice, load_metric, load_connection
from .reports import (array_document, site_map, lattice_summary, metric_document, connection_document, lattice_report,
                      metric_report, compatibility_report, torsion_report, curvature_report, ricci_report,
                      solve_report, coframe_report, z4_report, hypercubic_report)
