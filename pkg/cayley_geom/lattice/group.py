import itertools
import logging
import re
from typing import Any, Dict, Iterable, List, Sequence, Set, Tuple

import numpy as np

from .lattice_exception import LatticeException

logger = logging.getLogger(__name__)


class Group:
    """
    A finite group given by its multiplication table over element indices 0..order-1.
    Subclasses only provide the table and element labels; everything else is derived here.
    """

    def __init__(self, name: str, table: np.ndarray, labels: Sequence[str], check_associativity: bool = False):
        table = np.asarray(table, dtype=int)
        if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
            raise LatticeException("multiplication table must be a non-empty square array")
        order = table.shape[0]
        if table.min() < 0 or table.max() >= order:
            raise LatticeException("multiplication table entries out of range")
        self._name = name
        self._table = table
        self._labels = list(labels)
        self._index: Dict[str, int] = {label: i for i, label in enumerate(self._labels)}
        self._identity = self._find_identity()
        self._inverse = self._find_inverses()
        if check_associativity:
            self._check_associativity()

    def _find_identity(self) -> int:
        row = np.arange(self.order)
        for e in range(self.order):
            if np.array_equal(self._table[e, :], row) and np.array_equal(self._table[:, e], row):
                return e
        raise LatticeException("multiplication table has no identity element")

    def _find_inverses(self) -> np.ndarray:
        inverse = np.full(self.order, -1, dtype=int)
        for a in range(self.order):
            hits = np.nonzero(self._table[a, :] == self._identity)[0]
            if len(hits) != 1 or self._table[hits[0], a] != self._identity:
                raise LatticeException(f"element {self.label(a)} has no two-sided inverse")
            inverse[a] = hits[0]
        return inverse

    def _check_associativity(self) -> None:
        t = self._table
        # (ab)c vs a(bc) for all triples at once
        left = t[t[:, :, None], np.arange(self.order)[None, None, :]]
        right = t[np.arange(self.order)[:, None, None], t[None, :, :]]
        bad = np.argwhere(left != right)
        if len(bad):
            a, b, c = bad[0]
            raise LatticeException(
                f"multiplication table is not associative: ({a}*{b})*{c} != {a}*({b}*{c})")

    @property
    def name(self) -> str:
        return self._name

    @property
    def order(self) -> int:
        return self._table.shape[0]

    @property
    def identity(self) -> int:
        return self._identity

    @property
    def table(self) -> np.ndarray:
        return self._table

    def elements(self) -> range:
        return range(self.order)

    def mul(self, a: int, b: int) -> int:
        return int(self._table[a, b])

    def inv(self, a: int) -> int:
        return int(self._inverse[a])

    def conjugate(self, h: int, x: int) -> int:
        """h x h^-1"""
        return self.mul(self.mul(h, x), self.inv(h))

    def right_translation(self, h: int) -> np.ndarray:
        """Index array mapping every site g to g h."""
        return self._table[:, h].copy()

    @property
    def is_abelian(self) -> bool:
        return bool(np.array_equal(self._table, self._table.T))

    def generated_subgroup(self, generators: Iterable[int]) -> Set[int]:
        generators = list(generators)
        reached = {self._identity}
        frontier = [self._identity]
        while frontier:
            nxt = []
            for g in frontier:
                for h in generators:
                    gh = self.mul(g, h)
                    if gh not in reached:
                        reached.add(gh)
                        nxt.append(gh)
            frontier = nxt
        return reached

    def label(self, a: int) -> str:
        return self._labels[a]

    def parse_element(self, token: Any) -> int:
        """Resolves an element given as index or label."""
        if isinstance(token, bool):
            raise LatticeException(f"unknown element {token!r}")
        if isinstance(token, int):
            if 0 <= token < self.order:
                return token
            raise LatticeException(f"element index {token} out of range for {self.name}")
        key = str(token).strip()
        if key in self._index:
            return self._index[key]
        raise LatticeException(f"unknown element '{token}' in {self.name}")

    def __str__(self) -> str:
        return self._name


class CyclicGroup(Group):
    """Z_n with addition modulo n."""

    def __init__(self, n: int):
        if n < 1:
            raise LatticeException(f"cyclic group order must be positive, got {n}")
        idx = np.arange(n)
        table = (idx[:, None] + idx[None, :]) % n
        super().__init__(f"cyclic:{n}", table, [str(i) for i in range(n)])
        self.n = n

    def parse_element(self, token: Any) -> int:
        if isinstance(token, str) and token.strip().lstrip("-").isdigit():
            token = int(token)
        if isinstance(token, int) and not isinstance(token, bool):
            return token % self.n
        return super().parse_element(token)


def _cycle_label(perm: Tuple[int, ...]) -> str:
    seen: Set[int] = set()
    cycles: List[str] = []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            seen.add(start)
            continue
        cycle = [start]
        seen.add(start)
        nxt = perm[start]
        while nxt != start:
            cycle.append(nxt)
            seen.add(nxt)
            nxt = perm[nxt]
        cycles.append("(" + "".join(str(i + 1) for i in cycle) + ")")
    return "".join(cycles) if cycles else "e"


_CYCLE_PATTERN = re.compile(r"\((\d+)\)")


class SymmetricGroup(Group):
    """
    S_n for n <= 5, elements labelled in cycle notation ("e", "(12)", "(123)", ...).
    Products compose left to right: (s t)(i) = t(s(i)), so (12)(13) = (123).
    """
    MAX_DEGREE = 5

    def __init__(self, n: int):
        if not 1 <= n <= SymmetricGroup.MAX_DEGREE:
            raise LatticeException(f"symmetric group degree must be in 1..{SymmetricGroup.MAX_DEGREE}, got {n}")
        perms = list(itertools.permutations(range(n)))
        perms.sort(key=lambda p: (0 if _cycle_label(p) == "e" else 1, len(_cycle_label(p)), _cycle_label(p)))
        position = {p: i for i, p in enumerate(perms)}
        table = np.empty((len(perms), len(perms)), dtype=int)
        for i, s in enumerate(perms):
            for j, t in enumerate(perms):
                table[i, j] = position[tuple(t[s[k]] for k in range(n))]
        super().__init__(f"symmetric:{n}", table, [_cycle_label(p) for p in perms])
        self.n = n
        self._perms = perms

    def permutation(self, a: int) -> Tuple[int, ...]:
        return self._perms[a]

    def parse_element(self, token: Any) -> int:
        if isinstance(token, str):
            text = token.replace(" ", "")
            if text in ("e", "()", "id"):
                return self.identity
            cycles = _CYCLE_PATTERN.findall(text)
            if not cycles or "".join(f"({c})" for c in cycles) != text:
                raise LatticeException(f"cannot parse permutation '{token}'")
            perm = list(range(self.n))
            # disjoint-cycle input composes like any other product
            element = self.identity
            for cycle in cycles:
                points = [int(ch) - 1 for ch in cycle]
                if any(not 0 <= p < self.n for p in points) or len(set(points)) != len(points):
                    raise LatticeException(f"invalid cycle '({cycle})' for degree {self.n}")
                perm = list(range(self.n))
                for a, b in zip(points, points[1:] + points[:1]):
                    perm[a] = b
                element = self.mul(element, self._perms.index(tuple(perm)))
            return element
        return super().parse_element(token)


class TorusGroup(Group):
    """Z_m1 x ... x Z_mk stored row-major; every modulus must be at least 3."""

    def __init__(self, moduli: Sequence[int]):
        moduli = tuple(int(m) for m in moduli)
        if not moduli:
            raise LatticeException("torus needs at least one modulus")
        small = [m for m in moduli if m < 3]
        if small:
            raise LatticeException(f"torus modulus must be >= 3, got {small[0]}")
        coords = list(itertools.product(*[range(m) for m in moduli]))
        position = {c: i for i, c in enumerate(coords)}
        table = np.empty((len(coords), len(coords)), dtype=int)
        for i, a in enumerate(coords):
            for j, b in enumerate(coords):
                table[i, j] = position[tuple((x + y) % m for x, y, m in zip(a, b, moduli))]
        labels = ["(" + ",".join(str(x) for x in c) + ")" for c in coords]
        super().__init__("torus:[" + ",".join(str(m) for m in moduli) + "]", table, labels)
        self.moduli = moduli
        self._coords = coords
        self._position = position

    @property
    def dimension(self) -> int:
        return len(self.moduli)

    def coordinates(self, a: int) -> Tuple[int, ...]:
        return self._coords[a]

    def element_at(self, coords: Sequence[int]) -> int:
        if len(coords) != self.dimension:
            raise LatticeException(f"expected {self.dimension} coordinates, got {list(coords)}")
        return self._position[tuple(int(x) % m for x, m in zip(coords, self.moduli))]

    def unit(self, mu: int) -> int:
        """The generator (0,..,1,..,0) in direction mu."""
        coords = [0] * self.dimension
        coords[mu] = 1
        return self.element_at(coords)

    def parse_element(self, token: Any) -> int:
        if isinstance(token, (list, tuple)):
            return self.element_at(token)
        if isinstance(token, str) and token.strip().startswith("("):
            try:
                return self.element_at([int(x) for x in token.strip()[1:-1].split(",")])
            except ValueError:
                raise LatticeException(f"cannot parse torus element '{token}'")
        return super().parse_element(token)


class TableGroup(Group):
    """A group given by an explicit Cayley table; associativity is verified."""

    def __init__(self, table: Sequence[Sequence[int]]):
        try:
            array = np.array(table, dtype=int)
        except (ValueError, TypeError):
            raise LatticeException("Cayley table must be a rectangular array of integers")
        super().__init__(f"table:{len(array)}", array, [str(i) for i in range(len(array))],
                         check_associativity=True)

    def parse_element(self, token: Any) -> int:
        if isinstance(token, str) and token.strip().isdigit():
            token = int(token)
        return super().parse_element(token)
