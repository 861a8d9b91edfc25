import pytest

from cayley_geom.lattice import (build_group, CyclicGroup, SymmetricGroup, TorusGroup, TableGroup,
                                 GroupKind, LatticeException)


def test_cyclic():
    group = build_group("cyclic:4")
    assert group.order == 4
    assert group.identity == 0
    assert group.mul(3, 2) == 1
    assert group.inv(1) == 3
    assert group.is_abelian


def test_symmetric_three():
    group = build_group("symmetric:3")
    assert group.order == 6
    assert [group.label(a) for a in group.elements()] == ["e", "(12)", "(13)", "(23)", "(123)", "(132)"]
    s12 = group.parse_element("(12)")
    s13 = group.parse_element("(13)")
    assert group.label(group.mul(s12, s13)) == "(123)"
    assert group.label(group.inv(group.parse_element("(123)"))) == "(132)"
    assert not group.is_abelian


def test_symmetric_parse_rotated_cycle():
    group = SymmetricGroup(3)
    assert group.parse_element("(231)") == group.parse_element("(123)")
    assert group.parse_element("e") == group.identity
    with pytest.raises(LatticeException, match="invalid cycle"):
        group.parse_element("(14)")


def test_symmetric_degree_limit():
    with pytest.raises(LatticeException, match="degree"):
        SymmetricGroup(6)


def test_torus():
    group = build_group("torus:[5,5]")
    assert group.order == 25
    a = group.parse_element([4, 0])
    b = group.parse_element("(1,0)")
    assert group.mul(a, b) == group.identity
    assert group.coordinates(group.unit(1)) == (0, 1)
    assert build_group("torus:5,5").order == 25


def test_torus_small_modulus():
    with pytest.raises(LatticeException, match=">= 3"):
        TorusGroup([5, 2])


def test_table_group():
    table = [[0, 1, 2], [1, 2, 0], [2, 0, 1]]
    group = build_group({"table": table})
    assert isinstance(group, TableGroup)
    assert group.inv(1) == 2


def test_table_not_associative():
    # a Latin square with identity 0 that is not a group
    table = [[0, 1, 2, 3, 4],
             [1, 0, 3, 4, 2],
             [2, 4, 0, 1, 3],
             [3, 2, 4, 0, 1],
             [4, 3, 1, 2, 0]]
    with pytest.raises(LatticeException, match="not associative"):
        build_group({"table": table})


def test_table_without_identity():
    with pytest.raises(LatticeException, match="no identity"):
        TableGroup([[1, 0], [0, 1]])


def test_bad_descriptors():
    with pytest.raises(LatticeException, match="unknown group kind"):
        build_group("dihedral:4")
    with pytest.raises(LatticeException):
        build_group("cyclic:zero")
    with pytest.raises(LatticeException):
        build_group({"rows": []})
    assert GroupKind.parse_str("TORUS") == GroupKind.TORUS


def test_generated_subgroup():
    group = CyclicGroup(6)
    assert group.generated_subgroup([2]) == {0, 2, 4}
