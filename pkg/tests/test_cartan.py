import pytest

from krfusion.cartan import ConfigurationError, mat_mul, parse_type, root_system

from oracles import minimal_kernel_vector, norm2_positive_roots

TYPES = [("A", 1), ("A", 2), ("A", 3), ("A", 4), ("D", 4), ("D", 5), ("D", 6),
         ("E", 6), ("E", 7), ("E", 8)]
N_POSITIVE = {("A", 1): 1, ("A", 2): 3, ("A", 3): 6, ("A", 4): 10, ("D", 4): 12,
              ("D", 5): 20, ("D", 6): 30, ("E", 6): 36, ("E", 7): 63, ("E", 8): 120}
# dual Coxeter numbers: sum of the marks
H_DUAL = {("A", 1): 2, ("A", 2): 3, ("A", 3): 4, ("A", 4): 5, ("D", 4): 6,
          ("D", 5): 8, ("D", 6): 10, ("E", 6): 12, ("E", 7): 18, ("E", 8): 30}


@pytest.mark.parametrize("family,rank", TYPES)
def test_positive_root_count(family, rank):
    assert len(root_system(family, rank).positive_roots) == N_POSITIVE[(family, rank)]


@pytest.mark.parametrize("family,rank", [t for t in TYPES if t[1] <= 6])
def test_roots_match_norm2_lattice_vectors(family, rank):
    rs = root_system(family, rank)
    assert sorted(rs.positive_roots) == sorted(norm2_positive_roots(rs.cartan, bound=3))


@pytest.mark.parametrize("family,rank", TYPES)
def test_marks_kernel(family, rank):
    rs = root_system(family, rank)
    m = len(rs.affine_cartan)
    for row in rs.affine_cartan:
        assert sum(row[j] * rs.marks[j] for j in range(m)) == 0
    for j in range(m):
        assert sum(rs.comarks[i] * rs.affine_cartan[i][j] for i in range(m)) == 0
    assert rs.marks[0] == rs.comarks[0] == 1
    assert sum(rs.marks) == H_DUAL[(family, rank)]
    assert tuple(rs.marks[1:]) == tuple(rs.highest_root)


@pytest.mark.parametrize("family,rank", [("A", 2), ("A", 3), ("D", 4)])
def test_marks_are_minimal_by_search(family, rank):
    rs = root_system(family, rank)
    assert tuple(rs.marks) == minimal_kernel_vector(rs.affine_cartan, bound=3)


def test_d4_highest_root():
    rs = root_system("D", 4)
    assert rs.highest_root == (1, 2, 1, 1)
    assert rs.highest_root_weight == (0, 1, 0, 0)


def test_e_labeling():
    # branch node attached to 3, 4 and 5 for E6, E7, E8
    for rank, branch in ((6, 3), (7, 4), (8, 5)):
        A = root_system("E", rank).cartan
        assert A[rank - 1][branch - 1] == -1
        assert sum(1 for x in A[branch - 1] if x == -1) == 3


@pytest.mark.parametrize("family,rank", TYPES)
def test_basis_roundtrip_and_theta_norm(family, rank):
    rs = root_system(family, rank)
    ident = mat_mul(rs.root_to_weight, rs.weight_to_root)
    assert all(ident[i][j] == (i == j) for i in range(rank) for j in range(rank))
    assert rs.form(rs.highest_root_weight, rs.highest_root_weight) == 2
    for b in rs.positive_roots:
        assert rs.to_root(rs.to_weight(b)) == tuple(b)
        assert rs.form(rs.to_weight(b), rs.to_weight(b)) == 2


@pytest.mark.parametrize("bad", [("A", 0), ("D", 3), ("E", 5), ("E", 9), ("B", 3)])
def test_invalid_types(bad):
    with pytest.raises(ConfigurationError):
        root_system(*bad)


def test_parse_type():
    assert parse_type("A2") == ("A", 2)
    assert parse_type("D_4") == ("D", 4)
    assert parse_type("e8") == ("E", 8)
