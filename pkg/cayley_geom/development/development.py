import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Tuple

import numpy as np

from cayley_geom.connection import Connection, is_compatible
from cayley_geom.lattice import GroupLattice, PairKind
from cayley_geom.metric import MetricField
from cayley_geom.numeric import Backend, common_backend
from .development_exception import DevelopmentException
from .development_visitor import DevelopmentVisitor
from .nbein import NBein, build_nbein

logger = logging.getLogger(__name__)

Word = Tuple[int, ...]


class DefectCategory(Enum):
    GAP = "gap"
    HOLONOMY = "holonomy"


@dataclass(frozen=True, eq=False)
class Node:
    """Image of the site reached by a word of arrow positions."""
    word: Word
    site: int
    position: np.ndarray


@dataclass(frozen=True, eq=False)
class Edge:
    source: Word
    arrow: int
    vector: np.ndarray

    @property
    def target(self) -> Word:
        return self.source + (self.arrow,)


@dataclass(frozen=True, eq=False)
class Defect:
    """
    A figure closing at the node of word, opened by the pair (h1, h2).
    GAP: the tip of w h1 h2 minus the point it should coincide with (w or w h0). For a quadrangle pair
    the tip of w followed by the first pair of its chain minus the tip of w h1 h2.
    HOLONOMY: the same difference taken between the arrow vectors of the given arrow at both points.
    """
    kind: PairKind
    category: DefectCategory
    word: Word
    pair: Tuple[int, int]
    arrow: Optional[int]
    origin: np.ndarray
    vector: np.ndarray

    @property
    def type(self) -> str:
        return f"{self.kind.value}_{self.category.value}"


@dataclass(frozen=True, eq=False)
class Development:
    """Breadth-first development of the words of length <= depth, in lexicographic arrow order."""
    lattice: GroupLattice
    nbein: NBein
    depth: int
    nodes: Dict[Word, Node]
    edges: List[Edge]
    defects: List[Defect]

    @property
    def base(self) -> int:
        return self.nbein.base

    @property
    def backend(self) -> Backend:
        return Backend.of(self.nodes[()].position)

    def node(self, word: Word) -> Node:
        try:
            return self.nodes[tuple(word)]
        except KeyError:
            raise DevelopmentException(f"word {self.word_label(word)} is not developed")

    def position(self, word: Word) -> np.ndarray:
        return self.node(word).position

    def arrow_vector(self, word: Word, arrow: int) -> np.ndarray:
        """V_{w, h}: the developed arrow h attached at the tip of w."""
        return self.position(tuple(word) + (arrow,)) - self.position(word)

    def word_label(self, word: Word) -> str:
        return ".".join(self.lattice.arrow_label(i) for i in word) if word else "e"

    def gaps(self, kind: Optional[PairKind] = None) -> List[Defect]:
        return [d for d in self.defects
                if d.category == DefectCategory.GAP and (kind is None or d.kind == kind)]

    def holonomies(self, kind: Optional[PairKind] = None) -> List[Defect]:
        return [d for d in self.defects
                if d.category == DefectCategory.HOLONOMY and (kind is None or d.kind == kind)]

    def sites(self) -> List[int]:
        return sorted({node.site for node in self.nodes.values()})

    def traverse(self, visitor: DevelopmentVisitor):
        """Visits nodes, then edges, then defects, each in development order."""
        for node in self.nodes.values():
            if not visitor.visit_node(node):
                return
        for edge in self.edges:
            if not visitor.visit_edge(edge):
                return
        for defect in self.defects:
            if not visitor.visit_defect(defect):
                return

    def equals(self, other: 'Development') -> bool:
        if list(self.nodes) != list(other.nodes) or len(self.edges) != len(other.edges) \
                or len(self.defects) != len(other.defects):
            return False
        equal = self.backend.equal
        if not all(equal(self.nodes[w].position, other.nodes[w].position) and
                   self.nodes[w].site == other.nodes[w].site for w in self.nodes):
            return False
        if not all((a.source, a.arrow) == (b.source, b.arrow) and equal(a.vector, b.vector)
                   for a, b in zip(self.edges, other.edges)):
            return False
        return all((a.type, a.word, a.pair, a.arrow) == (b.type, b.word, b.pair, b.arrow) and
                   equal(a.origin, b.origin) and equal(a.vector, b.vector)
                   for a, b in zip(self.defects, other.defects))


def _gap_ends(lattice: GroupLattice, word: Word, i: int, j: int) -> Optional[Tuple[Word, Word]]:
    """
    Words (head, tail) whose tips differ by the gap of w h_i h_j. None for a chain's first pair,
    which is compared against the other members of its chain.
    """
    pair = lattice.classify_pair(i, j)
    tip = word + (i, j)
    if pair.kind == PairKind.BIANGLE:
        return tip, word
    if pair.kind == PairKind.TRIANGLE:
        return tip, word + (pair.apex,)
    first = lattice.chain(pair.product)[0]
    if first == (i, j):
        return None
    return word + first, tip


def develop(lattice: GroupLattice, m: MetricField, c: Connection, base: int, depth: int) -> Development:
    """
    Images of the words of length <= depth in the tangent space at the base site: the tip of w h
    is the tip of w plus u-components of the basis vector l_h transported back along w.
    """
    if depth < 0:
        raise DevelopmentException(f"depth must not be negative, got {depth}")
    if not is_compatible(lattice, m, c):
        logger.warning("connection is not compatible with the metric, the development is not isometric")
    nbein = build_nbein(lattice, m, base)
    backend = common_backend(nbein.vectors, c.matrices)
    matrices = backend.convert(c.matrices)
    n = lattice.n

    frames: Dict[Word, np.ndarray] = {(): backend.convert(nbein.vectors)}
    nodes: Dict[Word, Node] = {(): Node((), base, backend.zeros(n))}
    edges: List[Edge] = []
    level: List[Word] = [()]
    for _ in range(depth):
        following = []
        for word in level:
            node, frame = nodes[word], frames[word]
            for i in range(n):
                target = word + (i,)
                vector = frame[:, i]
                nodes[target] = Node(target, lattice.site_after(node.site, i), node.position + vector)
                frames[target] = frame.dot(matrices[i, node.site])
                edges.append(Edge(word, i, vector))
                following.append(target)
        level = following

    defects: List[Defect] = []
    for word in (w for w in nodes if len(w) <= depth - 2):
        for i in range(n):
            for j in range(n):
                ends = _gap_ends(lattice, word, i, j)
                if ends is None:
                    continue
                head, tail = ends
                kind = lattice.classify_pair(i, j).kind
                origin = nodes[tail].position
                defects.append(Defect(kind, DefectCategory.GAP, word, (i, j), None, origin,
                                      nodes[head].position - origin))
                for k in range(n):
                    defects.append(Defect(kind, DefectCategory.HOLONOMY, word, (i, j), k, nodes[head].position,
                                          frames[head][:, k] - frames[tail][:, k]))
    logger.debug("developed %s from %s to depth %d: %d nodes, %d defects", lattice.group.name,
                 lattice.site_label(base), depth, len(nodes), len(defects))
    return Development(lattice, nbein, depth, nodes, edges, defects)
