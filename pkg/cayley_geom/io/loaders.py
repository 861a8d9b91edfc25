import logging
from typing import Any, Dict, List, Mapping

from cayley_geom.connection import Connection, ConnectionException
from cayley_geom.lattice import Group, GroupLattice, LatticeException, build_group
from cayley_geom.metric import MetricException, MetricField, validate_metric
from cayley_geom.numeric import Backend, NumericException
from .documents import read_document
from .io_exception import Diagnostic, IoException

logger = logging.getLogger(__name__)


def parse_element(group: Group, token: Any, path: str = None) -> int:
    try:
        return group.parse_element(token)
    except LatticeException as e:
        raise IoException(str(e), Diagnostic.UNKNOWN_ELEMENT, path)


def load_lattice(path: str) -> GroupLattice:
    """{"group": descriptor, "arrows": [element, ...]}"""
    document = read_document(path, "lattice")
    try:
        group = build_group(document["group"])
    except LatticeException as e:
        raise IoException(str(e), Diagnostic.VALIDATION_FAILED, path)
    arrows = [parse_element(group, token, path) for token in document["arrows"]]
    try:
        lattice = GroupLattice(group, arrows)
    except LatticeException as e:
        raise IoException(str(e), Diagnostic.VALIDATION_FAILED, path)
    logger.info("loaded lattice %s with %d arrows", group.name, lattice.n)
    return lattice


def _check_arrows(document: Mapping[str, Any], lattice: GroupLattice, path: str, what: str):
    if "arrows" not in document:
        return
    arrows = [parse_element(lattice.group, token, path) for token in document["arrows"]]
    if arrows != lattice.arrows:
        raise IoException(f"{what} arrows {[lattice.site_label(a) for a in arrows]} do not match the lattice "
                          f"arrows {[lattice.site_label(a) for a in lattice.arrows]}", Diagnostic.ARROW_MISMATCH, path)


def _per_site(lattice: GroupLattice, entries: Mapping[str, Any], path: str) -> Dict[int, Any]:
    return {parse_element(lattice.group, key, path): value for key, value in entries.items()}


def load_metric(path: str, lattice: GroupLattice, backend: Backend = Backend.EXACT) -> MetricField:
    """{"constant": [[...]]} or {"per_site": {element: [[...]]}}, validated for symmetry and invertibility."""
    document = read_document(path, "metric")
    _check_arrows(document, lattice, path, "metric")
    try:
        if "constant" in document:
            m = MetricField.constant(lattice, document["constant"], backend)
        else:
            m = MetricField.per_site(lattice, _per_site(lattice, document["per_site"], path), backend)
        validate_metric(lattice, m)
    except (MetricException, NumericException, ValueError) as e:
        raise IoException(str(e), Diagnostic.VALIDATION_FAILED, path)
    return m


def load_connection(path: str, lattice: GroupLattice, backend: Backend = Backend.EXACT) -> Connection:
    """{"per_arrow": {arrow: {"constant": [[...]]} | {"per_site": {element: [[...]]}}}}"""
    document = read_document(path, "connection")
    entries = {parse_element(lattice.group, key, path): value for key, value in document["per_arrow"].items()}
    if set(entries) != set(lattice.arrows):
        raise IoException(f"connection arrows {sorted(lattice.site_label(a) for a in entries)} do not match the "
                          f"lattice arrows {[lattice.site_label(a) for a in lattice.arrows]}",
                          Diagnostic.ARROW_MISMATCH, path)
    matrices: List[List[Any]] = []
    for i, h in enumerate(lattice.arrows):
        entry = entries[h]
        if "constant" in entry:
            matrices.append([entry["constant"]] * lattice.sites)
            continue
        sites = _per_site(lattice, entry["per_site"], path)
        missing = [g for g in range(lattice.sites) if g not in sites]
        if missing:
            raise IoException(str(ConnectionException("no transport matrix given", lattice.site_label(missing[0]),
                                                      lattice.arrow_label(i))), Diagnostic.VALIDATION_FAILED, path)
        matrices.append([sites[g] for g in range(lattice.sites)])
    try:
        return Connection.per_site(lattice, matrices, backend)
    except (ConnectionException, NumericException, ValueError) as e:
        raise IoException(str(e), Diagnostic.VALIDATION_FAILED, path)
