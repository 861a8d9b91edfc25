"""JSON documents for every subcommand: rationals as "p/q" strings, per-site data keyed by site label."""
from typing import Any, Dict, List, Optional

import numpy as np

from cayley_geom.connection import (Connection, build_coframe, compatibility_residual, frame_connection,
                                    frame_isometry_residual, isometry_preservation_check, rotation_angles)
from cayley_geom.coordinates import (CoordinateSystem, agrees_with_sector_components, bianchi_hypercubic,
                                     christoffel, commutation_check, coordinate_curvature,
                                     coordinate_curvature_scalar, coordinate_ricci, interior_mask, z4_identities)
from cayley_geom.curvature import SectorComponents, curvature, curvature_scalar, ricci, torsion
from cayley_geom.lattice import GroupLattice, PairKind
from cayley_geom.metric import MetricField, invariance_class, killing_check, validate_metric
from cayley_geom.numeric import Backend, FLOAT_TOLERANCE, format_scalar, max_abs
from cayley_geom.solver import Solution, SolveReport


def _formatted(value: Any) -> Any:
    if isinstance(value, list):
        return [_formatted(v) for v in value]
    return format_scalar(value)


def array_document(array: Any) -> Any:
    """Nested lists of canonical scalars."""
    return _formatted(np.asarray(array).tolist())


def site_map(lattice: GroupLattice, values: np.ndarray) -> Dict[str, Any]:
    return {lattice.site_label(g): array_document(values[g]) for g in range(lattice.sites)}


def arrow_labels(lattice: GroupLattice) -> List[str]:
    return [lattice.arrow_label(i) for i in range(lattice.n)]


def lattice_summary(lattice: GroupLattice) -> Dict[str, Any]:
    return {"group": lattice.group.name, "arrows": arrow_labels(lattice)}


def metric_document(m: MetricField) -> Dict[str, Any]:
    lattice = m.lattice
    if m.is_constant:
        return {"arrows": arrow_labels(lattice), "constant": array_document(m.at(0))}
    return {"arrows": arrow_labels(lattice), "per_site": site_map(lattice, m.values)}


def connection_document(c: Connection) -> Dict[str, Any]:
    """Same shape as the connection input files, so that reported solutions can be fed back."""
    lattice = c.lattice
    constant = c.is_constant
    per_arrow = {}
    for i in range(lattice.n):
        if constant:
            per_arrow[lattice.arrow_label(i)] = {"constant": array_document(c.matrices[i, 0])}
        else:
            per_arrow[lattice.arrow_label(i)] = {"per_site": site_map(lattice, c.matrices[i])}
    return {"per_arrow": per_arrow}


def lattice_report(lattice: GroupLattice) -> Dict[str, Any]:
    label = lattice.arrow_label

    def pair(i: int, j: int) -> List[str]:
        return [label(i), label(j)]

    chains = lattice.chains
    return {"lattice": lattice_summary(lattice),
            "order": lattice.sites,
            "bicovariant": True,
            "maximal": lattice.is_maximal,
            "generates": lattice.generates,
            "hypercubic": lattice.is_hypercubic,
            "biangles": [pair(i, j) for i, j in lattice.biangles()],
            "triangles": [{"pair": pair(i, j), "apex": label(lattice.triangle_apex(i, j))}
                          for i, j in lattice.triangles()],
            "quadrangles": [{"product": lattice.site_label(g), "length": len(chains[g]),
                             "pairs": [pair(i, j) for i, j in chains[g]]} for g in sorted(chains)],
            "counts": {"biangles": len(lattice.biangles()),
                       "triangles": len(lattice.triangles()),
                       "quadrangles": len(lattice.quadrangles()),
                       "chains": len(chains)}}


def metric_report(lattice: GroupLattice, m: MetricField, tolerance: float = FLOAT_TOLERANCE) -> Dict[str, Any]:
    signature = validate_metric(lattice, m, tolerance)
    invariance = invariance_class(lattice, m, tolerance)
    return {"lattice": lattice_summary(lattice),
            "backend": m.backend.value,
            "symmetric": True,
            "constant_signature": signature.is_constant,
            "signature": list(signature.value) if signature.is_constant else None,
            "signature_per_site": {lattice.site_label(g): list(s) for g, s in enumerate(signature.per_site)},
            "riemannian": signature.is_riemannian,
            "left_invariant": invariance.left_invariant,
            "right_invariant": invariance.right_invariant,
            "bi_invariant": invariance.bi_invariant,
            "killing": {lattice.arrow_label(i): killing_check(lattice, m, h, tolerance).holds
                        for i, h in enumerate(lattice.arrows)}}


def compatibility_report(lattice: GroupLattice, m: MetricField, c: Connection,
                         tolerance: float = FLOAT_TOLERANCE) -> Dict[str, Any]:
    residual = compatibility_residual(lattice, m, c)
    return {"lattice": lattice_summary(lattice),
            "compatible": Backend.of(residual).is_zero(residual, tolerance),
            "isometries_preserved": isometry_preservation_check(lattice, m, c, tolerance),
            "max_residual": max_abs(residual),
            "residual": {lattice.arrow_label(i): site_map(lattice, residual[i]) for i in range(lattice.n)}}


def _sectors(lattice: GroupLattice, components: SectorComponents) -> Dict[str, Any]:
    label = lattice.arrow_label
    return {kind.value: [{"cap": [label(a), label(c)], "values": site_map(lattice, values)}
                         for (a, c), values in sorted(components.sector(kind).items())]
            for kind in PairKind}


def _chain_sums(lattice: GroupLattice, components: SectorComponents) -> Dict[str, Any]:
    return {lattice.site_label(g): site_map(lattice, values) for g, values in components.chain_sums().items()}


def torsion_report(lattice: GroupLattice, c: Connection, tolerance: float = FLOAT_TOLERANCE) -> Dict[str, Any]:
    components = torsion(lattice, c)
    return {"lattice": lattice_summary(lattice),
            "backend": components.backend.value,
            "torsion_free": components.is_zero(tolerance=tolerance),
            "sector_free": {kind.value: components.is_zero(kind, tolerance) for kind in PairKind},
            "sectors": _sectors(lattice, components),
            "chain_sums": _chain_sums(lattice, components)}


def curvature_report(lattice: GroupLattice, c: Connection, tolerance: float = FLOAT_TOLERANCE) -> Dict[str, Any]:
    components = curvature(lattice, c)
    return {"lattice": lattice_summary(lattice),
            "backend": components.backend.value,
            "flat": components.is_zero(tolerance=tolerance),
            "sector_flat": {kind.value: components.is_zero(kind, tolerance) for kind in PairKind},
            "sectors": _sectors(lattice, components),
            "chain_sums": _chain_sums(lattice, components)}


def ricci_report(lattice: GroupLattice, m: MetricField, c: Connection) -> Dict[str, Any]:
    contractions = ricci(lattice, curvature(lattice, c))
    scalar = curvature_scalar(lattice, m, contractions.ricci)
    return {"lattice": lattice_summary(lattice),
            "backend": Backend.of(scalar.values).value,
            "ricci": site_map(lattice, contractions.ricci),
            "alternative": site_map(lattice, contractions.alternative),
            "diagnostic": site_map(lattice, contractions.diagnostic),
            "scalar": site_map(lattice, scalar.values)}


def _solution_document(solution: Solution) -> Dict[str, Any]:
    return {"connection": connection_document(solution.connection),
            "residual": solution.residual,
            "exact": solution.exact,
            "flat": solution.flat,
            "biangle_flat": solution.biangle_flat,
            "torsion_free": solution.torsion_free,
            "determinant_signs": list(solution.determinant_signs),
            "folds": solution.folds}


def solve_report(report: SolveReport) -> Dict[str, Any]:
    lattice = report.lattice
    site_solutions = None
    if report.site_solutions is not None:
        site_solutions = {lattice.site_label(g): [{lattice.arrow_label(i): array_document(x[i])
                                                   for i in range(lattice.n)} for x in matrices]
                          for g, matrices in report.site_solutions.items()}
    return {"lattice": lattice_summary(lattice),
            "mask": [kind.value for kind in PairKind if report.mask.masks(kind)],
            "free_parameters": report.free_parameters,
            "method": report.method,
            "count": len(report),
            "truncated": report.truncated,
            "solutions": [_solution_document(s) for s in report.solutions],
            "site_solutions": site_solutions}


def coframe_report(lattice: GroupLattice, m: MetricField, c: Optional[Connection] = None,
                   tolerance: float = FLOAT_TOLERANCE) -> Dict[str, Any]:
    cf = build_coframe(lattice, m, tolerance)
    document = {"lattice": lattice_summary(lattice),
                "backend": cf.backend.value,
                "eta": array_document(cf.eta),
                "e": site_map(lattice, cf.e),
                "e_inverse": site_map(lattice, cf.e_inverse)}
    if c is None:
        return document
    frame = frame_connection(lattice, cf, c)
    document["frame_connection"] = {lattice.arrow_label(i): site_map(lattice, frame[i]) for i in range(lattice.n)}
    document["max_isometry_residual"] = max_abs(frame_isometry_residual(lattice, cf, frame))
    eta_backend = Backend.of(cf.eta)
    if lattice.n == 2 and eta_backend.equal(cf.eta, eta_backend.eye(2)):
        angles, orientation = rotation_angles(lattice, cf, frame)
        document["rotation_angles"] = {lattice.arrow_label(i): site_map(lattice, angles[i]) for i in range(2)}
        document["orientation"] = {lattice.arrow_label(i): site_map(lattice, orientation[i]) for i in range(2)}
    return document


def z4_report(system: CoordinateSystem) -> Dict[str, Any]:
    lattice = system.lattice
    commutation = commutation_check(system)
    return {"lattice": lattice_summary(lattice),
            "kind": system.kind.value,
            "coordinates": {lattice.site_label(g): array_document(list(system.values(g)))
                            for g in range(lattice.sites)},
            "jacobian": site_map(lattice, system.jacobian),
            "identities": z4_identities(system),
            "commutation": {"holds": commutation.holds(),
                            "structure": site_map(lattice, commutation.structure)}}


def hypercubic_report(system: CoordinateSystem, c: Optional[Connection] = None, m: Optional[MetricField] = None,
                      bianchi: bool = False, tolerance: float = FLOAT_TOLERANCE) -> Dict[str, Any]:
    lattice = system.lattice
    kappa = system.kappa
    mask = interior_mask(lattice)
    commutation = commutation_check(system)
    document = {"lattice": lattice_summary(lattice),
                "kind": system.kind.value,
                "kappa": format_scalar(kappa),
                "interior_sites": [lattice.site_label(g) for g in range(lattice.sites) if mask[g]],
                "commutation": {"holds": commutation.holds(tolerance=tolerance),
                                "holds_interior": commutation.holds(mask, tolerance),
                                "deviating_sites": [lattice.site_label(g)
                                                    for g in commutation.deviating_sites(tolerance)]}}
    if c is None:
        return document
    field = christoffel(c, kappa)
    components = coordinate_curvature(c, kappa)
    document["christoffel"] = site_map(lattice, field.symbols)
    document["torsion"] = site_map(lattice, field.torsion())
    document["torsion_free"] = field.backend.is_zero(field.torsion(), tolerance)
    document["curvature"] = site_map(lattice, components)
    document["ricci"] = site_map(lattice, coordinate_ricci(components))
    document["agrees_with_sector_components"] = agrees_with_sector_components(c, kappa, tolerance)
    if m is not None:
        document["scalar"] = site_map(lattice, coordinate_curvature_scalar(lattice, m, components, kappa).values)
    if bianchi:
        report = bianchi_hypercubic(c, kappa, m, tolerance)
        backend = report.backend
        document["bianchi"] = {"first": backend.is_zero(report.first, tolerance),
                               "second": backend.is_zero(report.second, tolerance),
                               "cyclic": backend.is_zero(report.cyclic, tolerance),
                               "torsion_free": report.torsion_free,
                               "isometries_preserve_metric": report.isometries_preserve_metric,
                               "holds": report.holds(tolerance)}
    return document
