import pytest

from ribbontutte.errors import GroupError
from ribbontutte.groups import GroupSpec, builtin_group, cyclic, dihedral, parse_cayley


def test_builtin_dimensions():
    d3 = dihedral(3)
    assert d3.order == 6 and d3.irrep_dims == (1, 1, 2)
    assert cyclic(4).irrep_dims == (1, 1, 1, 1)
    d4 = builtin_group("dihedral:4")
    assert d4.order == 8 and d4.irrep_dims == (1, 1, 1, 1, 2)


@pytest.mark.parametrize("n", range(1, 8))
def test_dihedral_tables_are_groups(n):
    g = GroupSpec(2 * n, dihedral(n).irrep_dims, dihedral(n).cayley, full_check=True)
    assert g.is_abelian() == (n <= 2)


def test_dimension_check():
    with pytest.raises(GroupError):
        GroupSpec(6, (1, 1, 1))
    with pytest.raises(GroupError):
        GroupSpec(4, (2, 0))


def test_bad_tables():
    with pytest.raises(GroupError):
        GroupSpec(2, (1, 1), ((0, 1), (0, 1)))
    with pytest.raises(GroupError):
        GroupSpec(2, (1, 1), ((1, 0), (0, 1)))
    # a Latin square with identity that is not associative
    t = ((0, 1, 2, 3, 4), (1, 0, 3, 4, 2), (2, 4, 0, 1, 3), (3, 2, 4, 0, 1), (4, 3, 1, 2, 0))
    with pytest.raises(GroupError):
        GroupSpec(5, (1,) * 5, t, full_check=True)


def test_cayley_file(tmp_path):
    s3 = dihedral(3)
    rows = "\n".join(" ".join(map(str, r)) for r in s3.cayley)
    path = tmp_path / "s3.txt"
    path.write_text(f"6\n{rows}\ndims: 1 1 2\n")
    g = builtin_group(f"table:{path}")
    assert g.cayley == s3.cayley and g.irrep_dims == (1, 1, 2)
    path.write_text(f"6\n{rows}\n")
    with pytest.raises(GroupError):
        builtin_group(f"table:{path}")
    z3 = parse_cayley("3\n0 1 2\n1 2 0\n2 0 1\n")
    assert z3.irrep_dims == (1, 1, 1)
    with pytest.raises(GroupError):
        parse_cayley("3\n0 1 2\n1 2 0\n")
    with pytest.raises(GroupError):
        builtin_group("table:/nonexistent/file")
    with pytest.raises(GroupError):
        builtin_group("quaternion:8")
