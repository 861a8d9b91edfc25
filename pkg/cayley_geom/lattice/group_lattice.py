import logging
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from .group import Group, TorusGroup
from .lattice_exception import LatticeException
from .pair_kind import PairKind, PairClass

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


def adjoint(group: Group, h: int, h_prime: int) -> int:
    """ad(h)h' = h h' h^-1"""
    return group.conjugate(h, h_prime)


def check_bicovariance(group: Group, arrows: Sequence[int]) -> Tuple[bool, List[Tuple[int, int, int]]]:
    """
    Checks closure of the arrow set under ad(h) and ad(h^-1) for every arrow h.
    Violations are reported as (h, h', image) with the image outside the arrow set.
    """
    if not arrows:
        raise LatticeException("arrow set must not be empty")
    if group.identity in arrows:
        raise LatticeException(f"identity element {group.label(group.identity)} must not be an arrow")
    members = set(arrows)
    violations: List[Tuple[int, int, int]] = []
    for h in arrows:
        for h_prime in arrows:
            for image in (adjoint(group, h, h_prime), adjoint(group, group.inv(h), h_prime)):
                if image not in members and (h, h_prime, image) not in violations:
                    violations.append((h, h_prime, image))
    return not violations, violations


class GroupLattice:
    """
    A bicovariant group lattice (G, S). Arrows are addressed by their position in S; every
    per-site array in the package is indexed by the group's element enumeration.
    """

    def __init__(self, group: Group, arrows: Sequence[int]):
        arrows = [int(a) for a in arrows]
        if len(set(arrows)) != len(arrows):
            raise LatticeException("arrow set contains duplicates")
        bicovariant, violations = check_bicovariance(group, arrows)
        if not bicovariant:
            h, h_prime, image = violations[0]
            raise LatticeException(
                f"arrow set is not bicovariant: ad({group.label(h)}) maps {group.label(h_prime)} "
                f"to {group.label(image)}")
        self._group = group
        self._arrows = arrows
        self._position: Dict[int, int] = {a: i for i, a in enumerate(arrows)}
        n = len(arrows)

        self._ad = np.empty((n, n), dtype=int)
        self._ad_inverse = np.empty((n, n), dtype=int)
        for i, h in enumerate(arrows):
            for j, h_prime in enumerate(arrows):
                self._ad[i, j] = self._position[adjoint(group, h, h_prime)]
                self._ad_inverse[i, j] = self._position[adjoint(group, group.inv(h), h_prime)]
        self._shift = np.array([group.right_translation(h) for h in arrows])

        self._classes: Dict[Pair, PairClass] = {}
        self._chains: Dict[int, List[Pair]] = {}
        for i, h1 in enumerate(arrows):
            for j, h2 in enumerate(arrows):
                product = group.mul(h1, h2)
                if product == group.identity:
                    self._classes[(i, j)] = PairClass(PairKind.BIANGLE, product)
                elif product in self._position:
                    self._classes[(i, j)] = PairClass(PairKind.TRIANGLE, product, apex=self._position[product])
                else:
                    chain = self._chains.setdefault(product, [])
                    self._classes[(i, j)] = PairClass(PairKind.QUADRANGLE, product, chain_position=len(chain))
                    chain.append((i, j))
        logger.debug("classified %s with %d arrows: %d biangles, %d triangles, %d chains",
                     group.name, n, len(self.biangles()), len(self.triangles()), len(self._chains))

    @property
    def group(self) -> Group:
        return self._group

    @property
    def arrows(self) -> List[int]:
        return list(self._arrows)

    @property
    def n(self) -> int:
        return len(self._arrows)

    @property
    def sites(self) -> int:
        return self._group.order

    def arrow(self, i: int) -> int:
        return self._arrows[i]

    def position(self, element: int) -> int:
        try:
            return self._position[element]
        except KeyError:
            raise LatticeException(f"{self._group.label(element)} is not an arrow")

    def is_arrow(self, element: int) -> bool:
        return element in self._position

    def parse_arrow(self, token: Any) -> int:
        """Arrow position of an element token."""
        return self.position(self._group.parse_element(token))

    def arrow_label(self, i: int) -> str:
        return self._group.label(self._arrows[i])

    def site_label(self, g: int) -> str:
        return self._group.label(g)

    def ad(self, i: int, j: int) -> int:
        """Position of ad(h_i) h_j."""
        return int(self._ad[i, j])

    def ad_inverse(self, i: int, j: int) -> int:
        """Position of ad(h_i^-1) h_j."""
        return int(self._ad_inverse[i, j])

    def ad_permutation(self, i: int) -> np.ndarray:
        return self._ad[i].copy()

    def ad_inverse_permutation(self, i: int) -> np.ndarray:
        return self._ad_inverse[i].copy()

    def adjoint_permutation(self, h: int) -> np.ndarray:
        """Positions of ad(h) h_j for an arbitrary group element h."""
        images = [adjoint(self._group, h, a) for a in self._arrows]
        missing = [x for x in images if x not in self._position]
        if missing:
            raise LatticeException(
                f"ad({self._group.label(h)}) does not preserve the arrow set: "
                f"{self._group.label(missing[0])} is not an arrow")
        return np.array([self._position[x] for x in images], dtype=int)

    def shift(self, i: int) -> np.ndarray:
        """Index array g -> g h_i."""
        return self._shift[i]

    def site_after(self, g: int, i: int) -> int:
        return int(self._shift[i][g])

    def classify_pair(self, i: int, j: int) -> PairClass:
        return self._classes[(i, j)]

    def cap_class(self, a: int, c: int) -> PairClass:
        """Sector of the cap theta^a ∩ theta^c, decided by the product h_c h_a."""
        return self._classes[(c, a)]

    def biangles(self) -> List[Pair]:
        return [p for p, cls in self._classes.items() if cls.kind == PairKind.BIANGLE]

    def triangles(self) -> List[Pair]:
        return [p for p, cls in self._classes.items() if cls.kind == PairKind.TRIANGLE]

    def quadrangles(self) -> List[Pair]:
        return [p for p, cls in self._classes.items() if cls.kind == PairKind.QUADRANGLE]

    @property
    def chains(self) -> Dict[int, List[Pair]]:
        return {g: list(chain) for g, chain in self._chains.items()}

    def chain(self, g: int) -> List[Pair]:
        if g not in self._chains:
            raise LatticeException(f"{self._group.label(g)} is not a quadrangle product")
        return list(self._chains[g])

    def chain_length(self, g: int) -> int:
        return len(self.chain(g))

    def sector_caps(self, g: int) -> List[Pair]:
        """Caps (a, c) with h_c h_a = g, in chain order."""
        return [(j, i) for (i, j) in self.chain(g)]

    @property
    def is_maximal(self) -> bool:
        return not self._chains

    @property
    def generates(self) -> bool:
        return len(self._group.generated_subgroup(self._arrows)) == self._group.order

    @property
    def is_hypercubic(self) -> bool:
        group = self._group
        if not isinstance(group, TorusGroup) or self.n != group.dimension:
            return False
        return all(self._arrows[mu] == group.unit(mu) for mu in range(group.dimension))

    def triangle_apex(self, i: int, j: int) -> Optional[int]:
        return self._classes[(i, j)].apex


def classify(group: Group, arrows: Sequence[Any]) -> GroupLattice:
    """Builds the lattice from element tokens (indices or labels)."""
    return GroupLattice(group, [group.parse_element(a) for a in arrows])
