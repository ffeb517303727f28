import numpy as np
import pytest

from loopsmith import chein, is_associative, is_moufang, isomorphic, preset, validate_group

from conftest import CORPUS, embedding, group


def test_chein_q8(mq8):
    L = mq8.loop
    assert L.order == 16 and mq8.u_index == 8
    assert not is_associative(L) and is_moufang(L)


def test_chein_c2_is_klein_table():
    E = chein(preset("cyclic(2)"))
    # 0=1, 1=a, 2=u, 3=au; computed by hand from the four product rules
    assert E.loop.table.tolist() == [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]]
    as_group = validate_group(E.loop.table)
    assert isomorphic(as_group, preset("klein")) is not None


def test_chein_c4c3():
    E = embedding("c4_semidirect_c3")
    assert E.loop.order == 24 and not is_associative(E.loop)


def test_locate(mq8):
    assert mq8.locate(0) == (False, 0)
    assert mq8.locate(8) == (True, 0)
    assert mq8.locate(10) == (True, 2)
    assert mq8.loop.name(8) == "u"
    with pytest.raises(IndexError):
        mq8.locate(16)


@pytest.mark.parametrize("name", CORPUS)
def test_quadrant_identities(name):
    E = embedding(name)
    G, L, n = E.group, E.loop, E.n
    for g in range(n):
        for h in range(n):
            assert L.mul(g, h) == G.mul(g, h)
            assert L.mul(g, n + h) == n + G.mul(h, g)
            assert L.mul(n + g, h) == n + G.mul(g, G.inv(h))
            assert L.mul(n + g, n + h) == G.mul(G.inv(h), g)


@pytest.mark.parametrize("name", CORPUS)
def test_layout_and_restriction(name):
    E = embedding(name)
    n = E.n
    assert E.loop.order == 2 * n
    assert np.array_equal(E.loop.table[:n, :n], E.group.table)
    assert E.group_index_of == {k: k for k in range(n)}
    assert E.coset_index_of[n + 1 if n > 1 else n] == (1 if n > 1 else 0)


@pytest.mark.parametrize("name", CORPUS)
def test_coset_elements_have_order_two(name):
    E = embedding(name)
    n = E.n
    for g in range(n):
        assert E.loop.mul(n + g, n + g) == 0


@pytest.mark.parametrize("name", CORPUS + ["a4"])
def test_associative_iff_abelian(name):
    E = embedding(name)
    assert bool(is_associative(E.loop)) == E.group.is_abelian
    assert is_moufang(E.loop)
