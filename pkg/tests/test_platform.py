import itertools

import pytest
from hypothesis import given, settings, strategies as st

from conftest import SymmetricGroup, matrix_product
from spdh.platform import (
    Automorphism,
    Gp,
    GroupParams,
    ParamsMismatch,
    PlatformElement,
    PlatformGroup,
    apply_automorphism,
    automorphism_power,
    compose_automorphisms,
    element_from_bytes,
    enumerate_group,
    gp_identity,
    gp_inverse,
    gp_mul,
    gp_power,
)


def E(a, b, p=3):
    return Gp.of(p).element(a, b)


def pair_of(x):
    return (x.a, x.b)


def test_mul_examples():
    assert pair_of(gp_mul(E(4, 2), E(7, 5))) == (1, 4) == matrix_product(3, E(4, 2), E(7, 5))
    assert pair_of(gp_mul(E(4, 2), E(7, 4))) == (1, 0) == matrix_product(3, E(4, 2), E(7, 4))
    for x in Gp.of(3).elements():
        assert gp_mul(gp_identity(x.params), x) == x


def test_inverse_examples(G3):
    assert pair_of(gp_inverse(E(4, 2))) == (7, 4)
    assert gp_inverse(G3.identity()) == G3.identity()
    for x in G3.elements():
        assert gp_inverse(gp_inverse(x)) == x
        assert matrix_product(3, x, gp_inverse(x)) == (1, 0)


def test_mul_matches_matrix_oracle_exhaustive(G3, G5):
    for p, G in ((3, G3), (5, G5)):
        elems = list(G.elements())
        for x, y in itertools.product(elems, elems[:: 1 if p == 3 else 7]):
            assert pair_of(gp_mul(x, y)) == matrix_product(p, x, y)


def test_params_mismatch():
    with pytest.raises(ParamsMismatch):
        gp_mul(E(1, 1, 3), E(1, 1, 5))
    phi = Automorphism(E(4, 1, 3))
    with pytest.raises(ParamsMismatch):
        apply_automorphism(phi, E(1, 1, 5))


def test_element_validation():
    for bad in ((2, 0), (4, 9), (9, 0), (-2, 0)):
        with pytest.raises(ValueError):
            E(*bad)
    with pytest.raises(ValueError):
        GroupParams(9)
    with pytest.raises(ValueError):
        GroupParams(2)


def test_automorphism_examples(G3):
    phi = Automorphism(E(4, 1))
    assert pair_of(phi(E(1, 1))) == (1, 4) == matrix_product(3, E(4, 1), E(1, 1), E(7, 2))
    assert pair_of(phi(E(1, 5))) == (1, 2)
    assert phi(G3.identity()) == G3.identity()

    cube = automorphism_power(phi, 3)
    assert pair_of(cube.conjugator) == (1, 3) and G3.is_central(cube.conjugator)
    assert all(cube(x) == x for x in G3.elements())
    assert cube.is_identity() and cube == Automorphism.identity(G3)

    assert pair_of(automorphism_power(phi, 2).conjugator) == (7, 5)
    assert matrix_product(3, E(4, 1), E(4, 1)) == (7, 5)
    assert automorphism_power(phi, 0).is_identity()


def test_automorphism_homomorphism_and_bijection(G3):
    elems = list(G3.elements())
    for h in elems:
        phi = Automorphism(h)
        image = [phi(x) for x in elems]
        assert len(set(image)) == 27
        for x, y in itertools.product(elems[::4], elems[::3]):
            assert phi(x * y) == phi(x) * phi(y)


def test_closure_invariant(G3, G5):
    for p, G in ((3, G3), (5, G5)):
        elems = list(G.elements())
        for x, y in itertools.product(elems, elems[:: 1 if p == 3 else 5]):
            assert gp_mul(x, y).a % p == 1
            assert apply_automorphism(Automorphism(y), x).a % p == 1
        assert all(gp_inverse(x).a % p == 1 for x in elems)


def test_non_abelian(G3):
    elems = list(G3.elements())
    assert any(x * y != y * x for x, y in itertools.product(elems, repeat=2))


def test_center(G3):
    elems = list(G3.elements())
    central = [z for z in elems if all(z * x == x * z for x in elems)]
    assert set(central) == {z for z in elems if G3.is_central(z)}
    assert len(central) == 3


def test_composition_order(G3):
    # compose(phi, psi) applies psi first
    phi, psi = Automorphism(E(4, 1)), Automorphism(E(1, 2))
    comp = compose_automorphisms(phi, psi)
    for x in G3.elements():
        assert comp(x) == phi(psi(x))


def test_power_matches_iteration():
    G = Gp.of(3)
    for h in list(G.elements())[::5]:
        phi = Automorphism(h)
        x = E(1, 1)
        y = x
        for k in range(101):
            assert automorphism_power(phi, k)(x) == y
            y = phi(y)


def test_closed_form_power_matches_generic():
    generic = PlatformGroup.power
    for p in (3, 5, 7, 2**31 - 1):
        G = Gp.of(p)
        for x in (G.element(1 + p, 3), G.element(1 + 2 * p, p * p - 1), G.element(1, 5)):
            for k in list(range(30)) + [p, p * p, p * p + 1, 12345, -1, -7]:
                assert gp_power(x, k) == generic(G, x, k)


@given(st.integers(min_value=0, max_value=6), st.integers(min_value=0, max_value=48),
       st.integers(min_value=-10**6, max_value=10**6))
def test_power_property(i, b, k):
    G = Gp.of(7)
    x = G.element(1 + 7 * i, b)
    assert gp_power(x, k) == PlatformGroup.power(G, x, k)


def test_enumerate_group():
    assert len(set(enumerate_group(GroupParams(3)))) == 27
    assert len(set(enumerate_group(GroupParams(5)))) == 125
    with pytest.raises(ValueError):
        list(enumerate_group(GroupParams(101)))


def test_encoding_round_trip():
    for p in (3, 5, 251, 2**31 - 1, 18446744073709551557):
        G = Gp.of(p)
        w = G.params.element_width
        assert w == -(-(p * p).bit_length() // 8)
        x = G.element(1 + p * (p - 1), p * p - 1)
        data = x.to_bytes()
        assert len(data) == 2 * w
        assert data[:w] == x.a.to_bytes(w, "big")
        assert element_from_bytes(G.params, data) == x
    with pytest.raises(ValueError):
        element_from_bytes(GroupParams(3), b"\x02\x00")


def test_plugin_group_interface():
    S = SymmetricGroup(4)
    elems = list(S.elements())
    assert len(elems) == S.order() == 24
    h = (1, 2, 3, 0)
    phi = Automorphism(h, S)
    assert all(phi(x) == S.mul(S.mul(h, x), S.inverse(h)) for x in elems)
    assert automorphism_power(phi, 4).is_identity()
    assert not automorphism_power(phi, 2).is_identity()
    assert isinstance(S, PlatformGroup) and not isinstance(elems[0], PlatformElement)
