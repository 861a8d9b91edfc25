from abc import ABC, abstractmethod
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .development import Node, Edge, Defect


class DevelopmentVisitor(ABC):
    """Abstract base class for visiting the nodes, edges and defects of a development."""
    @abstractmethod
    def visit_node(self, node: 'Node') -> bool:
        """
        Visits a node.
        Return False to stop iteration.
        """
        pass

    @abstractmethod
    def visit_edge(self, edge: 'Edge') -> bool:
        pass

    @abstractmethod
    def visit_defect(self, defect: 'Defect') -> bool:
        pass
