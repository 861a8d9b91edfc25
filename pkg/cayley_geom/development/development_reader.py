from typing import Any, Dict, List, Mapping

import numpy as np

from cayley_geom.lattice import GroupLattice, LatticeException, PairKind
from cayley_geom.numeric import Backend, NumericException
from .development import Defect, DefectCategory, Development, Edge, Node, Word
from .development_exception import DevelopmentException
from .nbein import NBein


def read_development(lattice: GroupLattice, document: Mapping[str, Any]) -> Development:
    """Rebuilds a development from the document written by JsonFormatter."""
    try:
        backend = Backend.parse_str(document["backend"])

        def vector(values: List[Any]) -> np.ndarray:
            return backend.array(values)

        def word(labels: List[str]) -> Word:
            return tuple(lattice.parse_arrow(label) for label in labels)

        base = lattice.group.parse_element(document["base"])
        frame = document["frame"]
        nbein = NBein(base, vector(frame["u"]).T, vector(frame["eta"]))
        nodes: Dict[Word, Node] = {}
        for entry in document["nodes"]:
            w = word(entry["word"])
            nodes[w] = Node(w, lattice.group.parse_element(entry["site"]), vector(entry["pos"]))
        edges = [Edge(word(entry["from"]), lattice.parse_arrow(entry["arrow"]), vector(entry["vector"]))
                 for entry in document["edges"]]
        defects = []
        for entry in document["defects"]:
            kind, category = entry["type"].split("_", 1)
            arrow = None if entry["arrow"] is None else lattice.parse_arrow(entry["arrow"])
            defects.append(Defect(PairKind.parse_str(kind), DefectCategory(category), word(entry["at"]),
                                  tuple(lattice.parse_arrow(label) for label in entry["pair"]), arrow,
                                  vector(entry["origin"]), vector(entry["vector"])))
        return Development(lattice, nbein, int(document["depth"]), nodes, edges, defects)
    except (KeyError, ValueError, TypeError) as e:
        raise DevelopmentException(f"malformed development document: {e!r}")
    except (LatticeException, NumericException) as e:
        raise DevelopmentException(f"malformed development document: {e}")
