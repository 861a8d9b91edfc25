import json
from enum import Enum
from typing import Any, Dict, Union

from .group import Group, CyclicGroup, SymmetricGroup, TorusGroup, TableGroup
from .lattice_exception import LatticeException


class GroupKind(Enum):
    CYCLIC = "cyclic"
    SYMMETRIC = "symmetric"
    TORUS = "torus"
    TABLE = "table"

    @classmethod
    def parse_str(cls, name: str) -> 'GroupKind':
        try:
            return cls(name.strip().lower())
        except ValueError:
            raise LatticeException(f"unknown group kind '{name}'")


def _parse_positive_int(text: str, what: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise LatticeException(f"invalid {what} '{text}'")
    if value <= 0:
        raise LatticeException(f"{what} must be positive, got {value}")
    return value


def build_group(descriptor: Union[str, Dict[str, Any]]) -> Group:
    """
    Builds a group from a descriptor:
    "cyclic:4", "symmetric:3", "torus:[5,5]" (or "torus:5,5") or {"table": [[...], ...]}.
    """
    if isinstance(descriptor, dict):
        if set(descriptor.keys()) != {"table"}:
            raise LatticeException("group object must have exactly one key 'table'")
        return TableGroup(descriptor["table"])
    if not isinstance(descriptor, str) or ":" not in descriptor:
        raise LatticeException(f"invalid group descriptor {descriptor!r}")

    kind_name, argument = descriptor.split(":", 1)
    kind = GroupKind.parse_str(kind_name)
    argument = argument.strip()
    if kind == GroupKind.CYCLIC:
        return CyclicGroup(_parse_positive_int(argument, "cyclic order"))
    elif kind == GroupKind.SYMMETRIC:
        return SymmetricGroup(_parse_positive_int(argument, "symmetric degree"))
    elif kind == GroupKind.TORUS:
        if not argument.startswith("["):
            argument = f"[{argument}]"
        try:
            moduli = json.loads(argument)
        except json.JSONDecodeError:
            raise LatticeException(f"invalid torus moduli '{argument}'")
        if not isinstance(moduli, list) or not all(isinstance(m, int) for m in moduli):
            raise LatticeException(f"torus moduli must be a list of integers, got {argument}")
        return TorusGroup(moduli)
    else:
        try:
            table = json.loads(argument)
        except json.JSONDecodeError:
            raise LatticeException(f"invalid inline Cayley table '{argument}'")
        return TableGroup(table)
