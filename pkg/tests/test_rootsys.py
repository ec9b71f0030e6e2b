import itertools
from fractions import Fraction

import pytest

from coxcone import linalg
from coxcone.field import PHI, sign, to_decimal
from coxcone.rootsys import RootSystemError, RootSystemSpec, root_system

SYSTEMS = [("A", 1, None), ("A", 2, None), ("A", 4, None), ("B", 2, None), ("B", 3, None),
           ("C", 3, None), ("D", 4, None), ("E6", 6, None), ("F4", 4, None), ("G2", 2, None),
           ("H3", 3, None), ("H4", 4, None), ("I2", 2, 5), ("I2", 2, 6)]

# number of positive roots, from the degrees of each group
POSITIVE = {"A1": 1, "A2": 3, "A4": 10, "B2": 4, "B3": 9, "C3": 9, "D4": 12, "E6": 36,
            "F4": 24, "G2": 6, "H3": 15, "H4": 60, "I2(5)": 5, "I2(6)": 6}


def test_cartan_A2():
    assert root_system("A", 2).cartan == [[2, -1], [-1, 2]]


def test_cartan_C2():
    assert root_system("C", 2).cartan == [[2, -2], [-1, 2]]


def test_cartan_B2_is_transpose_of_C2():
    assert root_system("B", 2).cartan == [[2, -1], [-2, 2]]


def test_cartan_H3_has_golden_ratio_entry():
    a = root_system("H3", 3).cartan
    entries = {a[i][j] for i in range(3) for j in range(3) if i != j and a[i][j]}
    assert entries == {-1, -PHI}


@pytest.mark.parametrize("fam, rank, m", SYSTEMS)
def test_positive_root_counts(fam, rank, m):
    rs = root_system(fam, rank, m)
    assert len(rs.pos_roots) == POSITIVE[rs.name]
    assert all(all(sign(x) >= 0 for x in r) for r in rs.pos_roots)


@pytest.mark.parametrize("fam, rank, m", SYSTEMS)
def test_weight_and_coweight_duality(fam, rank, m):
    rs = root_system(fam, rank, m)
    d = rs.d
    for i in range(d):
        # <lambda_i, alpha_j^vee> = delta_ij
        assert rs.coroot_pairings(rs.fund_weights[i]) == [1 if j == i else 0 for j in range(d)]
        for j in range(d):
            # <lambda_i^vee, alpha_j> = delta_ij
            e_j = tuple(1 if k == j else 0 for k in range(d))
            assert rs.inner(rs.fund_coweights[i], e_j) == (1 if i == j else 0)
            assert rs.inner(rs.fund_coweights[i], rs.fund_weights[j]) == rs.cartan_inv[i][j]
            assert rs.inner(rs.simple_coroots[i], e_j) == rs.cartan[i][j] or \
                rs.inner(rs.simple_coroots[i], e_j) == rs.cartan[j][i]
    assert linalg.mat_mul(rs.cartan_inv, rs.cartan) == linalg.identity(d)


@pytest.mark.parametrize("fam, rank, m", SYSTEMS)
def test_gram_is_positive_definite(fam, rank, m):
    g = root_system(fam, rank, m).gram
    # leading principal minors, in floating point
    for k in range(1, len(g) + 1):
        sub = [[to_decimal(g[i][j]) for j in range(k)] for i in range(k)]
        det = sum((1 if _even(p) else -1) * _prod(sub[i][p[i]] for i in range(k))
                  for p in itertools.permutations(range(k)))
        assert det > 1e-9


def _even(p):
    inv = sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])
    return inv % 2 == 0


def _prod(xs):
    out = 1.0
    for x in xs:
        out *= x
    return out


def test_reflection_negates_simple_root():
    rs = root_system("G2", 2)
    assert rs.reflect(0, (1, 0)) == (-1, 0)
    assert rs.reflect(1, (0, 1)) == (0, -1)


@pytest.mark.parametrize("fam, rank, m, labels", [
    ("A", 3, None, {(0, 1): 3, (1, 2): 3}),
    ("B", 3, None, {(0, 1): 3, (1, 2): 4}),
    ("D", 4, None, {(0, 1): 3, (1, 2): 3, (1, 3): 3}),
    ("F4", 4, None, {(0, 1): 3, (1, 2): 4, (2, 3): 3}),
    ("G2", 2, None, {(0, 1): 6}),
    ("H3", 3, None, {(0, 1): 3, (1, 2): 5}),
    ("H4", 4, None, {(0, 1): 3, (1, 2): 3, (2, 3): 5}),
    ("I2", 2, 5, {(0, 1): 5}),
])
def test_dynkin_labels(fam, rank, m, labels):
    assert root_system(fam, rank, m).describe()["dynkin"] == labels


def test_E6_branch_node():
    rs = root_system("E6", 6)
    degrees = sorted(len(rs.neighbors(i)) for i in range(6))
    assert degrees == [1, 1, 1, 2, 2, 3]


def test_ambient_conversions():
    c3 = root_system("C", 3)
    assert c3.ambient_convert(c3.fund_weights[1]) == (1, 1, 0)
    b3 = root_system("B", 3)
    half = Fraction(1, 2)
    assert b3.ambient_convert(b3.fund_weights[2]) == (half, half, half)
    a2 = root_system("A", 2)
    assert a2.ambient_convert(a2.fund_weights[0]) == (1, 0, 0)
    d4 = root_system("D", 4)
    assert d4.ambient_convert(d4.fund_weights[3]) == (half, half, half, half)


@pytest.mark.parametrize("fam, rank", [("A", 3), ("B", 3), ("C", 4), ("D", 4)])
def test_ambient_round_trip(fam, rank):
    rs = root_system(fam, rank)
    for r in rs.pos_roots + rs.fund_weights:
        assert rs.ambient_convert(rs.ambient_convert(r), "to_root_coords") == tuple(r)


def test_ambient_rejects_exceptional_and_bad_input():
    with pytest.raises(RootSystemError):
        root_system("G2", 2).ambient_convert((1, 0))
    with pytest.raises(ValueError):
        root_system("B", 2).ambient_convert((1, 2, 3), "to_root_coords")
    with pytest.raises(ValueError):
        root_system("B", 2).ambient_convert((1, 2), "sideways")


@pytest.mark.parametrize("args", [
    ("E7", 7), ("E8", 8), ("Z", 3), ("A", 0), ("B", 1), ("D", 2), ("H3", 4), ("G2", 3),
])
def test_spec_validation(args):
    with pytest.raises(RootSystemError):
        RootSystemSpec(*args)


@pytest.mark.parametrize("m", [None, 2, 7])
def test_dihedral_m_validation(m):
    with pytest.raises(RootSystemError):
        RootSystemSpec("I2", 2, m)


def test_m_only_for_dihedral():
    with pytest.raises(RootSystemError):
        RootSystemSpec("A", 2, 3)


def test_names_and_crystallographic_flag():
    assert RootSystemSpec("i", 2, 5).name == "I2(5)"
    assert not RootSystemSpec("I2", 2, 5).crystallographic
    assert RootSystemSpec("I2", 2, 6).crystallographic
    assert not RootSystemSpec("H", 4).crystallographic
    assert RootSystemSpec("c", 3).name == "C3"


def test_type_A_root_count():
    for n in range(1, 6):
        assert len(root_system("A", n).pos_roots) == n * (n + 1) // 2
