import json
import sys
from typing import Any, Dict, List, TextIO

import numpy as np

from cayley_geom.numeric import format_scalar
from ..development import Development, Node, Edge, Defect
from ..development_visitor import DevelopmentVisitor


def vector_document(vector: np.ndarray) -> List[Any]:
    return [format_scalar(x) for x in vector]


class JsonFormatter(DevelopmentVisitor):
    """Writes a development as a JSON document with exact coordinates where available."""

    def __init__(self, development: Development, out: TextIO = sys.stdout):
        self._development = development
        self._out = out
        self._nodes: List[Dict[str, Any]] = []
        self._edges: List[Dict[str, Any]] = []
        self._defects: List[Dict[str, Any]] = []

    def _word(self, word) -> List[str]:
        return [self._development.lattice.arrow_label(i) for i in word]

    def visit_node(self, node: Node) -> bool:
        self._nodes.append({"word": self._word(node.word),
                            "site": self._development.lattice.site_label(node.site),
                            "pos": vector_document(node.position)})
        return True

    def visit_edge(self, edge: Edge) -> bool:
        self._edges.append({"from": self._word(edge.source),
                            "to": self._word(edge.target),
                            "arrow": self._development.lattice.arrow_label(edge.arrow),
                            "vector": vector_document(edge.vector)})
        return True

    def visit_defect(self, defect: Defect) -> bool:
        lattice = self._development.lattice
        self._defects.append({"type": defect.type,
                              "at": self._word(defect.word),
                              "pair": [lattice.arrow_label(i) for i in defect.pair],
                              "arrow": None if defect.arrow is None else lattice.arrow_label(defect.arrow),
                              "origin": vector_document(defect.origin),
                              "vector": vector_document(defect.vector)})
        return True

    def document(self) -> Dict[str, Any]:
        development = self._development
        lattice = development.lattice
        nbein = development.nbein
        return {"lattice": {"group": lattice.group.name,
                            "arrows": [lattice.arrow_label(i) for i in range(lattice.n)]},
                "base": lattice.site_label(development.base),
                "depth": development.depth,
                "backend": development.backend.value,
                "frame": {"u": [vector_document(nbein.u(i)) for i in range(lattice.n)],
                          "eta": [vector_document(row) for row in nbein.eta]},
                "nodes": self._nodes,
                "edges": self._edges,
                "defects": self._defects}

    def finalize(self):
        json.dump(self.document(), self._out, sort_keys=True, indent=2, ensure_ascii=False)
        print(file=self._out)
