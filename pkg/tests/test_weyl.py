from math import factorial

import pytest

from coxcone.field import sign
from coxcone.rootsys import root_system
from coxcone.weyl import WeylCapExceeded, enumerate_weyl

ORDERS = [("A", 1, None, 2), ("A", 3, None, 24), ("B", 3, None, 48), ("C", 3, None, 48),
          ("D", 4, None, 192), ("F4", 4, None, 1152), ("G2", 2, None, 12),
          ("H3", 3, None, 120), ("I2", 2, 5, 10), ("E6", 6, None, 51840)]


def group(fam, rank, m=None):
    return enumerate_weyl(root_system(fam, rank, m))


@pytest.mark.parametrize("fam, rank, m, order", ORDERS)
def test_group_orders(fam, rank, m, order):
    assert group(fam, rank, m).order == order


@pytest.mark.parametrize("n", [2, 3, 4])
def test_classical_order_formulas(n):
    assert group("A", n).order == factorial(n + 1)
    assert group("B", n).order == 2 ** n * factorial(n)
    if n >= 3:
        assert group("D", n).order == 2 ** (n - 1) * factorial(n)


@pytest.mark.parametrize("fam, rank, m", [("A", 3, None), ("B", 3, None), ("H3", 3, None),
                                          ("G2", 2, None)])
def test_element_invariants(fam, rank, m):
    W = group(fam, rank, m)
    rs = W.rs
    g = rs.gram
    d = rs.d
    for w in W:
        M = w.matrix
        # M^T G M = G: the action preserves the inner product
        MtGM = [[sum(M[k][i] * g[k][l] * M[l][j] for k in range(d) for l in range(d))
                 for j in range(d)] for i in range(d)]
        assert MtGM == g
        assert W.inversions(w) == w.length
        for i in range(d):
            assert abs(W.lengths[W.cayley[w.index][i]] - w.length) == 1
    assert W.longest.length == len(rs.pos_roots)
    assert W.multiply(W.longest, W.longest) == W.identity


def test_element_from_word_and_inverse():
    W = group("A", 2)
    s1s2 = W.element([0, 1])
    assert s1s2.length == 2
    assert W.multiply(s1s2, W.inverse(s1s2)) == W.identity
    assert W.element([0, 1, 0]) == W.element([1, 0, 1])
    assert W.element([0, 0]) == W.identity


def test_parabolic_orders():
    C3 = group("C", 3)
    assert len(C3.parabolic([0, 2])) == 4
    assert C3.order // 4 == 12
    assert len({C3.coset_canonical(w, [0, 2]) for w in C3}) == 12
    assert len(group("A", 3).parabolic([0, 1])) == 6


def test_coset_representative_example():
    W = group("A", 2)
    rep = W.coset_canonical(W.element([0, 1]), [1])
    assert rep == W.element([0])
    assert W.is_coset_canonical(rep, [1])


@pytest.mark.parametrize("fam, rank, subset", [("B", 3, [1]), ("A", 3, [0, 2]), ("H3", 3, [0, 1])])
def test_coset_canonical_is_unique_minimum(fam, rank, subset):
    W = group(fam, rank)
    sub = W.parabolic(subset)
    for w in W:
        coset = [W.multiply(w, u) for u in sub]
        rep = W.coset_canonical(w, subset)
        assert rep in coset
        assert all(rep.length < x.length for x in coset if x != rep)


def _reflection_closure_bruhat(W):
    # independent Bruhat oracle: transitive closure of u < u t for reflections t
    reflections = set()
    for w in W:
        for i in range(W.rs.d):
            reflections.add(W.multiply(W.multiply(w, W.generators[i]), W.inverse(w)).index)
    above = {w.index: {w.index} for w in W}
    for w in sorted(W, key=lambda x: -x.length):
        for t in reflections:
            x = W.multiply(w, W[t])
            if x.length > w.length:
                above[w.index] |= above[x.index]
    return above


@pytest.mark.parametrize("fam, rank", [("A", 3), ("B", 3)])
def test_bruhat_matches_reflection_closure(fam, rank):
    W = group(fam, rank)
    above = _reflection_closure_bruhat(W)
    for u in W:
        for v in W:
            assert W.bruhat_leq(u, v) == (v.index in above[u.index])


def _weak_closure(W):
    above = {w.index: {w.index} for w in W}
    for w in sorted(W, key=lambda x: -x.length):
        for i in range(W.rs.d):
            x = W.cayley[w.index][i]
            if W.lengths[x] > w.length:
                above[w.index] |= above[x]
    return above


def test_weak_order_matches_cover_closure():
    W = group("A", 3)
    above = _weak_closure(W)
    for u in W:
        for v in W:
            assert W.weak_leq(u, v) == (v.index in above[u.index])


def test_order_examples():
    W = group("A", 2)
    s1, s2 = W.element([0]), W.element([1])
    s2s1 = W.element([1, 0])
    assert W.bruhat_leq(s1, s2s1)
    assert not W.weak_leq(s1, s2)
    assert W.weak_leq(s2, s2s1)
    assert not W.weak_leq(s1, s2s1)
    assert W.bruhat_leq(W.identity, W.longest)


def test_weak_refines_bruhat():
    W = group("B", 3)
    for u in W:
        for v in W:
            if W.weak_leq(u, v):
                assert W.bruhat_leq(u, v)


def test_bruhat_interval():
    W = group("A", 2)
    assert len(W.bruhat_interval(W.identity, W.longest)) == 6
    assert W.bruhat_interval(W.element([0]), W.element([1])) == []
    assert len(W.bruhat_interval(W.element([0]), W.element([0, 1]))) == 2


@pytest.mark.parametrize("point, size", [((1, 0), 3), ((1, 1), 6), ((0, 0), 1)])
def test_orbit_sizes_A2_weights(point, size):
    rs = root_system("A", 2)
    W = enumerate_weyl(rs)
    x = tuple(sum(c * w[k] for c, w in zip(point, rs.fund_weights)) for k in range(2))
    assert len(W.orbit(x)) == size


def test_orbit_B2_generic_point():
    rs = root_system("B", 2)
    W = enumerate_weyl(rs)
    rho = tuple(sum(w[k] for w in rs.fund_weights) for k in range(2))
    orbit = W.orbit(rho)
    assert len(orbit) == 8
    assert set(orbit) == {w.act(rho) for w in W}


def test_descents():
    W = group("A", 2)
    w = W.element([0, 1])
    assert W.is_descent(w, 1) and not W.is_descent(w, 0)
    assert all(W.is_descent(W.longest, i) for i in range(2))


def test_positive_roots_sent_negative_by_longest():
    W = group("H3", 3)
    for r in W.rs.pos_roots:
        assert all(sign(t) <= 0 for t in W.longest.act(r))


def test_cap():
    with pytest.raises(WeylCapExceeded) as err:
        enumerate_weyl(root_system("B", 4), cap=100)
    assert err.value.cap == 100
    assert "100" in str(err.value)
