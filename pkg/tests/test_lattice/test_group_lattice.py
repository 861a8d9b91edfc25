import pytest
import itertools

from cayley_geom.lattice import (build_group, classify, check_bicovariance, adjoint, GroupLattice, PairKind,
                                 CyclicGroup, SymmetricGroup, TorusGroup, LatticeException)


def lattice_of(descriptor: str, arrows) -> GroupLattice:
    return classify(build_group(descriptor), arrows)


def pairs_as_elements(lattice: GroupLattice, pairs):
    return {(lattice.arrow(i), lattice.arrow(j)) for i, j in pairs}


def test_bicovariance_s3_transpositions():
    group = SymmetricGroup(3)
    arrows = [group.parse_element(s) for s in ("(12)", "(13)", "(23)")]
    assert check_bicovariance(group, arrows) == (True, [])


def test_bicovariance_abelian():
    ok, violations = check_bicovariance(CyclicGroup(4), [1, 2])
    assert ok and not violations


def test_bicovariance_violation():
    group = SymmetricGroup(3)
    s12, s123, s132 = (group.parse_element(s) for s in ("(12)", "(123)", "(132)"))
    ok, violations = check_bicovariance(group, [s12, s123])
    assert not ok
    assert violations[0] == (s12, s123, s132)


def test_bicovariance_identity_rejected():
    with pytest.raises(LatticeException, match="identity"):
        check_bicovariance(CyclicGroup(3), [0, 1])


def test_classify_rejects_violation():
    with pytest.raises(LatticeException, match="not bicovariant"):
        lattice_of("symmetric:3", ["(12)", "(123)"])


def test_classify_z3():
    lattice = lattice_of("cyclic:3", [1, 2])
    assert pairs_as_elements(lattice, lattice.biangles()) == {(1, 2), (2, 1)}
    assert pairs_as_elements(lattice, lattice.triangles()) == {(1, 1), (2, 2)}
    assert lattice.arrow(lattice.triangle_apex(0, 0)) == 2
    assert lattice.arrow(lattice.triangle_apex(1, 1)) == 1
    assert lattice.quadrangles() == []
    assert lattice.is_maximal


def test_classify_z4_12():
    lattice = lattice_of("cyclic:4", [1, 2])
    assert pairs_as_elements(lattice, lattice.biangles()) == {(2, 2)}
    assert pairs_as_elements(lattice, lattice.triangles()) == {(1, 1)}
    assert list(lattice.chains.keys()) == [3]
    assert pairs_as_elements(lattice, lattice.chain(3)) == {(1, 2), (2, 1)}
    assert lattice.chain_length(3) == 2
    assert lattice.classify_pair(0, 1).kind == PairKind.QUADRANGLE
    assert not lattice.is_maximal


def test_classify_torus():
    group = TorusGroup([5, 5])
    lattice = classify(group, [[1, 0], [0, 1]])
    assert lattice.biangles() == [] and lattice.triangles() == []
    g = group.parse_element([1, 1])
    assert list(lattice.chains.keys()) == [g]
    assert lattice.chain_length(g) == 2
    assert lattice.is_hypercubic
    assert lattice.generates


def test_classification_exhaustive():
    lattice = lattice_of("symmetric:3", ["(12)", "(13)", "(23)"])
    group = lattice.group
    for i, j in itertools.product(range(lattice.n), repeat=2):
        kind = lattice.classify_pair(i, j).kind
        product = group.mul(lattice.arrow(i), lattice.arrow(j))
        if product == group.identity:
            assert kind == PairKind.BIANGLE
        elif lattice.is_arrow(product):
            assert kind == PairKind.TRIANGLE
        else:
            assert kind == PairKind.QUADRANGLE
    # each 3-cycle arises from three ordered pairs of distinct transpositions
    for g, chain in lattice.chains.items():
        assert len(chain) == 3
        assert all(group.mul(lattice.arrow(i), lattice.arrow(j)) == g for i, j in chain)


def test_sector_caps():
    lattice = lattice_of("symmetric:3", ["(12)", "(13)", "(23)"])
    group = lattice.group
    for g in lattice.chains:
        for a, c in lattice.sector_caps(g):
            assert group.mul(lattice.arrow(c), lattice.arrow(a)) == g
            assert lattice.cap_class(a, c).product == g


def test_adjoint():
    group = SymmetricGroup(3)
    s12, s13, s23 = (group.parse_element(s) for s in ("(12)", "(13)", "(23)"))
    assert adjoint(group, s12, s13) == s23
    for h in group.elements():
        assert adjoint(group, h, h) == h
    assert adjoint(CyclicGroup(5), 2, 3) == 3


def test_adjoint_is_permutation_of_arrows():
    lattice = lattice_of("symmetric:3", ["(12)", "(13)", "(23)"])
    for i in range(lattice.n):
        assert sorted(lattice.ad_permutation(i)) == list(range(lattice.n))
        for j in range(lattice.n):
            assert lattice.ad_inverse(i, lattice.ad(i, j)) == j


def test_two_arrows_generating_force_abelian():
    # a two-element bicovariant generating set only exists in Abelian groups
    for descriptor in ("symmetric:3", "cyclic:6"):
        group = build_group(descriptor)
        for a, b in itertools.combinations(range(1, group.order), 2):
            if len(group.generated_subgroup([a, b])) != group.order:
                continue
            if check_bicovariance(group, [a, b])[0]:
                assert group.is_abelian


def test_duplicate_arrows():
    with pytest.raises(LatticeException, match="duplicates"):
        lattice_of("cyclic:4", [1, 1])


def test_shift_and_labels():
    lattice = lattice_of("cyclic:4", [1, 2])
    assert list(lattice.shift(0)) == [1, 2, 3, 0]
    assert lattice.site_after(3, 1) == 1
    assert lattice.arrow_label(1) == "2"
    assert lattice.parse_arrow("2") == 1
    with pytest.raises(LatticeException, match="not an arrow"):
        lattice.parse_arrow(3)
