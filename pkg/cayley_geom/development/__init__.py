from .development_exception import DevelopmentException

from .nbein import NBein, build_nbein
from .development_visitor import DevelopmentVisitor
from .development import Word, DefectCategory, Node, Edge, Defect, Development, develop
from .development_reader import read_development
from .folding import OrientationFlag, FoldingReport, folding_report
from .render import RenderFormat, render, parse_projection
